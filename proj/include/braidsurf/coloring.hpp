// Colorings of the labeled arcs a_1..a_m of a braid Gauss diagram: k base
// points plus an admissible color on every remaining arc.
//
// Plain colorings place base points in ascending arc order with *_1 on a_1;
// a non-based arc a_j may take any color in {1..l} where l is the number of
// based arcs below j. Star colorings are the mirror: base points descend
// from *_1 on a_m, and l counts based arcs above j.
#pragma once

#include "braidsurf/gauss.hpp"

#include <stdexcept>
#include <vector>

namespace braidsurf {

struct Coloring {
  int k = 0;
  std::vector<int> based;  // based[i] = arc of *_{i+1}, strictly ascending, based[0] = 1
  std::vector<int> color;  // 1-based by arc; 0 on based arcs

  bool operator==(const Coloring&) const = default;
};

struct StarColoring {
  int k = 0;
  std::vector<int> based;  // strictly descending, based[0] = m
  std::vector<int> color;

  bool operator==(const StarColoring&) const = default;
};

namespace detail {

// Enumerates color maps over the non-based arcs in lexicographic order,
// given per-arc admissible ranges {1..limit}. `count_below` selects which
// side of arc j the admissible base points lie on.
template <typename ColoringT, typename Out>
void emit_colorings(int m, int k, const std::vector<int>& based, bool count_below, Out& out) {
  std::vector<int> limit(m + 1, 0);
  std::vector<int> free_arcs;
  for (int j = 1; j <= m; ++j) {
    bool is_based = false;
    for (int b : based)
      if (b == j) is_based = true;
    if (is_based) continue;
    int l = 0;
    for (int b : based)
      if (count_below ? (b < j) : (b > j)) ++l;
    limit[j] = l;
    free_arcs.push_back(j);
  }

  ColoringT c;
  c.k = k;
  c.based = based;
  c.color.assign(m + 1, 0);
  for (int j : free_arcs) c.color[j] = 1;

  while (true) {
    out.push_back(c);
    int i = static_cast<int>(free_arcs.size()) - 1;
    while (i >= 0 && c.color[free_arcs[i]] == limit[free_arcs[i]]) {
      c.color[free_arcs[i]] = 1;
      --i;
    }
    if (i < 0) break;
    ++c.color[free_arcs[i]];
  }
}

// All strictly increasing (k-1)-subsets of {from..m}, lexicographic.
inline void ascending_choices(int from, int m, int need, std::vector<int>& prefix,
                              std::vector<std::vector<int>>& out) {
  if (need == 0) {
    out.push_back(prefix);
    return;
  }
  for (int j = from; j + need - 1 <= m; ++j) {
    prefix.push_back(j);
    ascending_choices(j + 1, m, need - 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace detail

inline std::vector<Coloring> enumerate_colorings(const GaussDiagram& g, int k) {
  if (k < 1) throw std::invalid_argument("coloring needs at least one base point");
  const int m = g.strands;
  std::vector<Coloring> out;
  if (k > m) return out;
  std::vector<std::vector<int>> tails;
  std::vector<int> prefix;
  detail::ascending_choices(2, m, k - 1, prefix, tails);
  for (const auto& tail : tails) {
    std::vector<int> based{1};
    based.insert(based.end(), tail.begin(), tail.end());
    detail::emit_colorings<Coloring>(m, k, based, /*count_below=*/true, out);
  }
  return out;
}

inline std::vector<StarColoring> enumerate_star_colorings(const GaussDiagram& g, int k) {
  if (k < 1) throw std::invalid_argument("coloring needs at least one base point");
  const int m = g.strands;
  std::vector<StarColoring> out;
  if (k > m) return out;
  std::vector<std::vector<int>> tails;
  std::vector<int> prefix;
  detail::ascending_choices(1, m - 1, k - 1, prefix, tails);
  for (const auto& tail : tails) {
    std::vector<int> based{m};
    // *_2.. *_k descend below a_m.
    for (auto it = tail.rbegin(); it != tail.rend(); ++it) based.push_back(*it);
    detail::emit_colorings<StarColoring>(m, k, based, /*count_below=*/false, out);
  }
  return out;
}

}  // namespace braidsurf
