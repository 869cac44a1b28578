// Assembles the surface-counting invariants of a closed braid.
//
// For a diagram with arrows of total sign w on m strands, the weight
//   weight(j, k) = d^(k-1)/da^(k-1) [ a^(-m-w+1) (a^2-1)^(j-1) ] at a = 1
// multiplies the signed census of accepted j-component states. The census
// of level j is the map |S| -> sum of state signs over all colorings with j
// base points and all accepted states S; it does not depend on k, so it is
// computed once and reused by every k.
//
// descending_polynomial(k) sums weight(j,k) * census_j[s] * z^(s+k-j) over
// j <= min(k, m) and |S| = s; ascending_polynomial is the mirror build over
// star colorings and ascending states.
#pragma once

#include "braidsurf/coloring.hpp"
#include "braidsurf/gauss.hpp"
#include "braidsurf/laurent.hpp"
#include "braidsurf/surface.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

namespace braidsurf {

class ResourceLimitError : public std::runtime_error {
 public:
  explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

/// Arrow id of the first arrow met tail-first when walking the circles in
/// their canonical order, or -1 when every arrow is met head-first.
inline int first_ascending_violation(const DiagramIndex& ix) {
  std::vector<uint8_t> seen(ix.n_arrows, 0);
  for (int s = 0; s < ix.total_slots; ++s) {
    const int a = ix.arrow_of_slot[s];
    if (a < 0 || seen[a]) continue;
    seen[a] = 1;
    if (!ix.head_slot[s]) return a;
  }
  return -1;
}

/// A diagram is totally ascending when every arrow is first met at its head;
/// such a closure is an unlink.
inline bool is_totally_ascending(const GaussDiagram& g) {
  return first_ascending_violation(DiagramIndex::build(g)) < 0;
}

enum class StateFlavor { descending, ascending };

namespace detail {

template <typename ColoringT>
std::vector<BigInt> signed_census(const DiagramIndex& ix, const std::vector<ColoringT>& colorings,
                                  bool want_tail_first, int workers) {
  const int arrows = ix.n_arrows;
  std::vector<BigInt> tally(arrows + 1, 0);
  if (colorings.empty()) return tally;

  const StateSubset total = StateSubset(1) << arrows;
  const int n_workers = std::max(1, std::min<int>(workers, static_cast<int>(total)));

  auto run_chunk = [&](StateSubset lo, StateSubset hi, std::vector<BigInt>& out) {
    std::vector<int> marks(ix.strands + 1, 0);
    for (const ColoringT& col : colorings)
      for (StateSubset s = lo; s < hi; ++s)
        if (accepted_state(ix, s, col, want_tail_first, marks))
          out[std::popcount(s)] += ix.state_sign(s);
  };

  if (n_workers == 1) {
    run_chunk(0, total, tally);
    return tally;
  }
  std::vector<std::vector<BigInt>> partial(n_workers, std::vector<BigInt>(arrows + 1, 0));
  std::vector<std::thread> pool;
  for (int t = 0; t < n_workers; ++t) {
    const StateSubset lo = total * t / n_workers;
    const StateSubset hi = total * (t + 1) / n_workers;
    pool.emplace_back(run_chunk, lo, hi, std::ref(partial[t]));
  }
  for (auto& th : pool) th.join();
  for (const auto& part : partial)
    for (int s = 0; s <= arrows; ++s) tally[s] += part[s];
  return tally;
}

}  // namespace detail

/// One accepted (coloring, state) pair, with its surface data.
struct StateRecord {
  int level = 0;           // number of base points j
  int coloring_index = 0;  // into the level's coloring enumeration
  StateSubset state = 0;
  int sign = 1;
  int boundary_count = 0;
  std::vector<int> genus;  // per connected component, ascending
  std::vector<int> separating;
  std::vector<Passage> passages;
};

struct CensusEntry {
  int level = 0;
  int arrows = 0;
  std::vector<int> genus;
  BigInt count = 0;  // number of accepted (coloring, state) pairs
};

struct InvariantReport {
  int k = 0;
  int strands = 1;
  int components = 0;
  int writhe = 0;
  std::vector<std::pair<int, BigInt>> weights;        // (j, weight(j, k))
  std::map<std::pair<int, int>, BigInt> counts;       // (n, j) -> nonzero count
  LaurentPoly1 polynomial;                            // the invariant itself
  std::vector<CensusEntry> census;
};

class BraidInvariants {
 public:
  explicit BraidInvariants(GaussDiagram g, int workers = 1)
      : diagram_(std::move(g)), index_(DiagramIndex::build(diagram_)), workers_(std::max(1, workers)) {
    for (const Arrow& a : diagram_.arrows) writhe_ += a.sign;
  }

  const GaussDiagram& diagram() const { return diagram_; }
  const DiagramIndex& index() const { return index_; }
  int writhe() const { return writhe_; }
  int strands() const { return diagram_.strands; }
  int components() const { return diagram_.circle_count(); }

  /// The derivative weight attached to level-j states at order k.
  BigInt weight(int j, int k) const {
    if (j < 1 || j > k) throw std::invalid_argument("weight needs 1 <= j <= k");
    LaurentPoly2 p = LaurentPoly2::term(1, -strands() - writhe_ + 1, 0);
    const LaurentPoly2 factor = LaurentPoly2::term(1, 2, 0) + LaurentPoly2::constant(-1);
    for (int i = 1; i < j; ++i) p *= factor;
    return eval_a1(derivative_a(p, k - 1)).coeff(0);
  }

  /// Signed state census at level j: entry s is the sum of signs over all
  /// accepted states with s arrows, across all level-j colorings.
  const std::vector<BigInt>& census(int j, StateFlavor flavor) {
    if (j < 1) throw std::invalid_argument("census level must be positive");
    auto& cache = flavor == StateFlavor::descending ? descending_census_ : ascending_census_;
    auto it = cache.find(j);
    if (it != cache.end()) return it->second;
    std::vector<BigInt> tally;
    if (flavor == StateFlavor::descending)
      tally = detail::signed_census(index_, enumerate_colorings(diagram_, j), true, workers_);
    else
      tally = detail::signed_census(index_, enumerate_star_colorings(diagram_, j), false, workers_);
    return cache.emplace(j, std::move(tally)).first->second;
  }

  /// Signed count of accepted level-j descending states with n + j - k arrows.
  BigInt descending_count(int n, int k, int j) {
    return level_count(n, k, j, StateFlavor::descending);
  }

  BigInt ascending_count(int n, int k, int j) {
    return level_count(n, k, j, StateFlavor::ascending);
  }

  /// Generating series of the level-j census in z (independent of k).
  LaurentPoly1 state_series(int j, StateFlavor flavor) {
    LaurentPoly1 p;
    const auto& tally = census(j, flavor);
    for (int s = 0; s < static_cast<int>(tally.size()); ++s) p.add_term(s, tally[s]);
    return p;
  }

  /// The invariant polynomial of order k >= 1 from descending states.
  LaurentPoly1 descending_polynomial(int k) { return polynomial(k, StateFlavor::descending); }

  /// Same value, assembled from ascending states and star colorings.
  LaurentPoly1 ascending_polynomial(int k) { return polynomial(k, StateFlavor::ascending); }

  bool totally_ascending() const { return first_ascending_violation(index_) < 0; }

  /// Every accepted (coloring, state) pair at level j with surface details,
  /// ordered by (coloring index, state bitmask).
  std::vector<StateRecord> accepted_states(int j, StateFlavor flavor) {
    std::vector<StateRecord> out;
    const bool tail_first = flavor == StateFlavor::descending;
    auto emit = [&](const auto& colorings) {
      std::vector<int> marks(strands() + 1, 0);
      for (size_t ci = 0; ci < colorings.size(); ++ci)
        for (StateSubset s = 0; s < (StateSubset(1) << index_.n_arrows); ++s) {
          if (!accepted_state(index_, s, colorings[ci], tail_first, marks)) continue;
          StateRecord rec;
          rec.level = j;
          rec.coloring_index = static_cast<int>(ci);
          rec.state = s;
          rec.sign = index_.state_sign(s);
          const SurfaceProfile prof = trace_boundary(index_, s);
          rec.boundary_count = prof.boundary_count;
          rec.genus = prof.genus_profile();
          rec.separating = prof.separating;
          detail::based_walk(index_, s, colorings[ci].based, tail_first, nullptr, &rec.passages);
          out.push_back(std::move(rec));
        }
    };
    if (tail_first)
      emit(enumerate_colorings(diagram_, j));
    else
      emit(enumerate_star_colorings(diagram_, j));
    return out;
  }

  InvariantReport report(int k, StateFlavor flavor = StateFlavor::descending) {
    if (k < 1) throw std::invalid_argument("invariant order must be >= 1");
    InvariantReport rep;
    rep.k = k;
    rep.strands = strands();
    rep.components = components();
    rep.writhe = writhe_;
    rep.polynomial = polynomial(k, flavor);
    const int max_level = std::min(k, strands());
    for (int j = 1; j <= max_level; ++j) {
      rep.weights.emplace_back(j, weight(j, k));
      const auto& tally = census(j, flavor);
      for (int s = 0; s < static_cast<int>(tally.size()); ++s)
        if (tally[s] != 0) rep.counts[{s + k - j, j}] = tally[s];
      std::map<std::pair<std::pair<int, int>, std::vector<int>>, BigInt> grouped;
      for (const StateRecord& rec : accepted_states(j, flavor))
        grouped[{{j, std::popcount(rec.state)}, rec.genus}] += 1;
      for (const auto& [key, count] : grouped)
        rep.census.push_back({key.first.first, key.first.second, key.second, count});
    }
    return rep;
  }

 private:
  BigInt level_count(int n, int k, int j, StateFlavor flavor) {
    if (j < 1 || j > k) throw std::invalid_argument("state count needs 1 <= j <= k");
    if (n < 0) return 0;
    const int s = n + j - k;
    if (s < 0 || s > index_.n_arrows) return 0;
    if (j > strands()) return 0;  // no colorings at this level
    return census(j, flavor)[s];
  }

  LaurentPoly1 polynomial(int k, StateFlavor flavor) {
    if (k < 1) throw std::invalid_argument("invariant order must be >= 1");
    LaurentPoly1 acc;
    const int max_level = std::min(k, strands());
    for (int j = 1; j <= max_level; ++j) {
      const BigInt w = weight(j, k);
      if (w == 0) continue;
      const auto& tally = census(j, flavor);
      for (int s = 0; s < static_cast<int>(tally.size()); ++s)
        acc.add_term(s + k - j, w * tally[s]);
    }
    return acc;
  }

  GaussDiagram diagram_;
  DiagramIndex index_;
  int workers_ = 1;
  int writhe_ = 0;
  std::map<int, std::vector<BigInt>> descending_census_;
  std::map<int, std::vector<BigInt>> ascending_census_;
};

}  // namespace braidsurf
