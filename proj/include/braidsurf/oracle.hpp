// Independent HOMFLY-PT evaluator for closed braids.
//
// Recursion: locate the first arrow of the braid Gauss diagram that is met
// tail-first on the canonical circle walk. Switching that letter's sign
// fixes the violation without adding letters, deleting it removes a letter,
// so the pair (letter count, violation position) strictly decreases and the
// recursion bottoms out at totally ascending words, whose closures are
// unlinks:
//   positive violating letter:  P(w) = a^-2 P(switched) + a^-1 z P(smoothed)
//   negative violating letter:  P(w) = a^2 P(switched) - a z P(smoothed)
//   totally ascending:          P(w) = ((a - a^-1)/z)^(r-1)
//
// This is the ground truth the state-counting side is verified against; it
// shares only the braid/diagram plumbing with it, none of the counting.
#pragma once

#include "braidsurf/braid.hpp"
#include "braidsurf/gauss.hpp"
#include "braidsurf/invariant.hpp"
#include "braidsurf/laurent.hpp"

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace braidsurf {

class HomflyOracle {
 public:
  explicit HomflyOracle(int max_letters = 16) : max_letters_(max_letters) {}

  int max_letters() const { return max_letters_; }

  LaurentPoly2 homfly(const BraidWord& w, bool memoize = true) const {
    if (static_cast<int>(w.letters.size()) > max_letters_)
      throw ResourceLimitError("skein recursion limited to " + std::to_string(max_letters_) +
                               " letters, got " + std::to_string(w.letters.size()));
    Memo memo;
    return eval(w, memoize ? &memo : nullptr);
  }

  LaurentPoly1 conway(const BraidWord& w) const { return eval_a1(homfly(w)); }

  /// z^k * (d^k P / da^k) at a = 1. The result never has negative powers
  /// of z; if it does, the crossing conventions are broken somewhere.
  LaurentPoly1 homfly_derivative(const BraidWord& w, int k) const {
    if (k < 0) throw std::invalid_argument("derivative order must be >= 0");
    const LaurentPoly1 p = eval_a1(derivative_a(homfly(w), k)).shifted(k);
    if (!p.is_zero() && p.min_exp() < 0)
      throw std::logic_error("HOMFLY derivative produced a negative power of z");
    return p;
  }

 private:
  using Memo = std::map<std::pair<int, std::vector<int>>, LaurentPoly2>;

  LaurentPoly2 eval(const BraidWord& w, Memo* memo) const {
    if (memo) {
      auto it = memo->find({w.strands, w.letters});
      if (it != memo->end()) return it->second;
    }
    const GaussDiagram g = gauss_from_braid(w);
    const int violation = first_ascending_violation(DiagramIndex::build(g));
    LaurentPoly2 result;
    if (violation < 0) {
      result = unlink_homfly(g.circle_count());
    } else {
      BraidWord switched = w;
      switched.letters[violation] = -switched.letters[violation];
      BraidWord smoothed = w;
      smoothed.letters.erase(smoothed.letters.begin() + violation);
      const LaurentPoly2 ps = eval(switched, memo);
      const LaurentPoly2 p0 = eval(smoothed, memo);
      if (w.letters[violation] > 0)
        result = ps * LaurentPoly2::term(1, -2, 0) + p0 * LaurentPoly2::term(1, -1, 1);
      else
        result = ps * LaurentPoly2::term(1, 2, 0) - p0 * LaurentPoly2::term(1, 1, 1);
    }
    if (memo) memo->emplace(std::make_pair(w.strands, w.letters), result);
    return result;
  }

  int max_letters_;
};

}  // namespace braidsurf
