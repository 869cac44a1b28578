// Braid words in Artin generators, closure combinatorics, and the word-level
// moves (conjugation, stabilization, Conway triples) everything downstream
// is built from.
//
// A word is stored verbatim as signed generator indices: letter +i means
// sigma_i, letter -i means sigma_i^-1, 1 <= i <= strands-1. No reduction or
// normalization is ever applied.
#pragma once

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace braidsurf {

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

struct BraidWord {
  int strands = 1;
  std::vector<int> letters;

  bool operator==(const BraidWord&) const = default;
};

/// Closure combinatorics of a braid word. The permutation sends the entry
/// position of a strand to its exit position, letters applied in word order.
struct ClosureInfo {
  std::vector<int> permutation;           // 1-based; permutation[p] = exit of p
  std::vector<std::vector<int>> cycles;   // sorted by minimal element
  int components = 0;
  int writhe = 0;
};

/// Parse whitespace-separated signed generator indices. With no explicit
/// strand count, m = max|letter| + 1 (m = 1 for the empty word).
inline BraidWord parse_braid(const std::string& text, std::optional<int> strands = std::nullopt) {
  if (strands && *strands < 1) throw ParseError("strand count must be positive");
  BraidWord w;
  std::istringstream in(text);
  std::string tok;
  int max_gen = 0;
  while (in >> tok) {
    size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw ParseError("bad braid letter '" + tok + "': not an integer");
    }
    if (used != tok.size()) throw ParseError("bad braid letter '" + tok + "': not an integer");
    if (v == 0) throw ParseError("bad braid letter '0': generator index must be nonzero");
    max_gen = std::max(max_gen, std::abs(v));
    w.letters.push_back(v);
  }
  w.strands = strands ? *strands : max_gen + 1;
  if (max_gen >= w.strands)
    throw ParseError("bad braid letter '" + std::to_string(max_gen) + "': needs at least " +
                     std::to_string(max_gen + 1) + " strands, have " + std::to_string(w.strands));
  return w;
}

inline std::string format_braid(const BraidWord& w) {
  std::string out;
  for (size_t i = 0; i < w.letters.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(w.letters[i]);
  }
  return out;
}

inline ClosureInfo closure_info(const BraidWord& w) {
  ClosureInfo info;
  info.permutation.assign(w.strands + 1, 0);
  std::iota(info.permutation.begin(), info.permutation.end(), 0);
  for (int letter : w.letters) {
    const int q = std::abs(letter);
    // Positions q and q+1 swap; track where each entry position ends up.
    for (int p = 1; p <= w.strands; ++p) {
      if (info.permutation[p] == q)
        info.permutation[p] = q + 1;
      else if (info.permutation[p] == q + 1)
        info.permutation[p] = q;
    }
    info.writhe += letter > 0 ? 1 : -1;
  }
  std::vector<bool> seen(w.strands + 1, false);
  for (int p = 1; p <= w.strands; ++p) {
    if (seen[p]) continue;
    std::vector<int> cycle;
    for (int q = p; !seen[q]; q = info.permutation[q]) {
      seen[q] = true;
      cycle.push_back(q);
    }
    info.cycles.push_back(std::move(cycle));
  }
  info.components = static_cast<int>(info.cycles.size());
  return info;
}

inline BraidWord inverse(const BraidWord& w) {
  BraidWord r{w.strands, {}};
  r.letters.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) r.letters.push_back(-*it);
  return r;
}

/// g * w * g^-1 on a common strand count.
inline BraidWord conjugate(const BraidWord& w, const BraidWord& g) {
  if (w.strands != g.strands) throw std::invalid_argument("conjugation needs equal strand counts");
  BraidWord r{w.strands, g.letters};
  r.letters.insert(r.letters.end(), w.letters.begin(), w.letters.end());
  const BraidWord gi = inverse(g);
  r.letters.insert(r.letters.end(), gi.letters.begin(), gi.letters.end());
  return r;
}

/// Markov stabilization: append sigma_m^(+-1) on m+1 strands.
inline BraidWord stabilize(const BraidWord& w, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("stabilization sign must be +-1");
  BraidWord r{w.strands + 1, w.letters};
  r.letters.push_back(sign * w.strands);
  return r;
}

struct ConwayTriple {
  BraidWord plus;
  BraidWord minus;
  BraidWord zero;
};

/// Word-level Conway triple at one letter: positive sign, negative sign,
/// letter deleted. The member matching the original letter's sign is the
/// input word itself.
inline ConwayTriple conway_triple(const BraidWord& w, size_t index) {
  if (index >= w.letters.size()) throw std::invalid_argument("conway_triple: letter index out of range");
  ConwayTriple t{w, w, w};
  const int gen = std::abs(w.letters[index]);
  t.plus.letters[index] = gen;
  t.minus.letters[index] = -gen;
  t.zero.letters.erase(t.zero.letters.begin() + static_cast<ptrdiff_t>(index));
  return t;
}

}  // namespace braidsurf
