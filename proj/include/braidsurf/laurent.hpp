// Exact Laurent-polynomial arithmetic over arbitrary-precision integers,
// in one variable (z) and in two variables (a, z), with formal
// differentiation in a and evaluation at a = 1.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace braidsurf {

using BigInt = boost::multiprecision::cpp_int;

namespace detail {

// Pretty-printer shared by both polynomial types. `vars` is the already
// formatted monomial part ("z^4", "a^-2*z^2", "").
inline void append_term(std::string& out, const BigInt& c, const std::string& vars) {
  const bool neg = c < 0;
  const BigInt mag = neg ? BigInt(-c) : c;
  if (out.empty()) {
    if (neg) out += '-';
  } else {
    out += neg ? " - " : " + ";
  }
  if (vars.empty()) {
    out += mag.str();
    return;
  }
  if (mag != 1) {
    out += mag.str();
    out += '*';
  }
  out += vars;
}

inline std::string power(const char* var, int e) {
  if (e == 0) return {};
  std::string s(var);
  if (e != 1) {
    s += '^';
    s += std::to_string(e);
  }
  return s;
}

}  // namespace detail

/// Laurent polynomial in z. Exponents may be negative; zero coefficients
/// are never stored, so operator== is exact structural equality.
class LaurentPoly1 {
 public:
  using TermMap = std::map<int, BigInt>;

  LaurentPoly1() = default;

  static LaurentPoly1 constant(BigInt c) { return term(std::move(c), 0); }

  static LaurentPoly1 term(BigInt c, int z_exp) {
    LaurentPoly1 p;
    if (c != 0) p.terms_.emplace(z_exp, std::move(c));
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  BigInt coeff(int z_exp) const {
    auto it = terms_.find(z_exp);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  int min_exp() const { return terms_.empty() ? 0 : terms_.begin()->first; }
  int max_exp() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

  void add_term(int z_exp, const BigInt& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(z_exp, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  LaurentPoly1& operator+=(const LaurentPoly1& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  LaurentPoly1& operator-=(const LaurentPoly1& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  friend LaurentPoly1 operator+(LaurentPoly1 a, const LaurentPoly1& b) { return a += b; }
  friend LaurentPoly1 operator-(LaurentPoly1 a, const LaurentPoly1& b) { return a -= b; }

  LaurentPoly1 operator-() const {
    LaurentPoly1 r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }

  friend LaurentPoly1 operator*(const LaurentPoly1& a, const LaurentPoly1& b) {
    LaurentPoly1 r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
  }

  LaurentPoly1& operator*=(const LaurentPoly1& o) { return *this = *this * o; }

  LaurentPoly1 scaled(const BigInt& s) const {
    LaurentPoly1 r;
    if (s == 0) return r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c * s);
    return r;
  }

  /// Multiply by z^k (k may be negative).
  LaurentPoly1 shifted(int k) const {
    LaurentPoly1 r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e + k, c);
    return r;
  }

  bool operator==(const LaurentPoly1& o) const { return terms_ == o.terms_; }
  bool operator!=(const LaurentPoly1& o) const { return !(*this == o); }

  /// "6*z^4 - 8*z^2", "z^2 + 1", "0"; terms in descending z order.
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
      detail::append_term(out, it->second, detail::power("z", it->first));
    return out;
  }

 private:
  TermMap terms_;
};

/// Laurent polynomial in a and z, keyed by (a exponent, z exponent).
class LaurentPoly2 {
 public:
  using Key = std::pair<int, int>;
  using TermMap = std::map<Key, BigInt>;

  LaurentPoly2() = default;

  static LaurentPoly2 constant(BigInt c) { return term(std::move(c), 0, 0); }

  static LaurentPoly2 term(BigInt c, int a_exp, int z_exp) {
    LaurentPoly2 p;
    if (c != 0) p.terms_.emplace(Key{a_exp, z_exp}, std::move(c));
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  BigInt coeff(int a_exp, int z_exp) const {
    auto it = terms_.find({a_exp, z_exp});
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  void add_term(int a_exp, int z_exp, const BigInt& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(Key{a_exp, z_exp}, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  LaurentPoly2& operator+=(const LaurentPoly2& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
  }

  LaurentPoly2& operator-=(const LaurentPoly2& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
    return *this;
  }

  friend LaurentPoly2 operator+(LaurentPoly2 a, const LaurentPoly2& b) { return a += b; }
  friend LaurentPoly2 operator-(LaurentPoly2 a, const LaurentPoly2& b) { return a -= b; }

  LaurentPoly2 operator-() const {
    LaurentPoly2 r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
  }

  friend LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b) {
    LaurentPoly2 r;
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_)
        r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return r;
  }

  LaurentPoly2& operator*=(const LaurentPoly2& o) { return *this = *this * o; }

  LaurentPoly2 scaled(const BigInt& s) const {
    LaurentPoly2 r;
    if (s == 0) return r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, c * s);
    return r;
  }

  LaurentPoly2 pow(unsigned n) const {
    LaurentPoly2 r = constant(1);
    for (unsigned i = 0; i < n; ++i) r *= *this;
    return r;
  }

  bool operator==(const LaurentPoly2& o) const { return terms_ == o.terms_; }
  bool operator!=(const LaurentPoly2& o) const { return !(*this == o); }

  /// Terms in descending (a, z) order: "a^-2*z^2 + 2*a^-2 - a^-4".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      std::string vars = detail::power("a", it->first.first);
      std::string zp = detail::power("z", it->first.second);
      if (!vars.empty() && !zp.empty()) vars += '*';
      vars += zp;
      detail::append_term(out, it->second, vars);
    }
    return out;
  }

 private:
  TermMap terms_;
};

/// Formal order-th partial derivative with respect to a; z is untouched.
inline LaurentPoly2 derivative_a(const LaurentPoly2& p, int order) {
  if (order < 0) throw std::invalid_argument("derivative order must be >= 0");
  LaurentPoly2 cur = p;
  for (int i = 0; i < order; ++i) {
    LaurentPoly2 next;
    for (const auto& [k, c] : cur.terms()) {
      if (k.first == 0) continue;
      next.add_term(k.first - 1, k.second, c * k.first);
    }
    cur = std::move(next);
  }
  return cur;
}

/// Substitute a = 1, collecting like powers of z.
inline LaurentPoly1 eval_a1(const LaurentPoly2& p) {
  LaurentPoly1 r;
  for (const auto& [k, c] : p.terms()) r.add_term(k.second, c);
  return r;
}

/// HOMFLY-PT value of the r-component unlink: ((a - a^-1) / z)^(r-1).
inline LaurentPoly2 unlink_homfly(int r) {
  if (r < 1) throw std::invalid_argument("unlink needs at least one component");
  LaurentPoly2 factor = LaurentPoly2::term(1, 1, -1) + LaurentPoly2::term(-1, -1, -1);
  return factor.pow(static_cast<unsigned>(r - 1));
}

}  // namespace braidsurf
