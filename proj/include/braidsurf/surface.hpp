// Ribbon-surface combinatorics of a state: pick a subset S of a diagram's
// arrows, thicken circles to disks and arrows to untwisted bands, and read
// the resulting surface off the diagram.
//
// Boundary traversal rule: walk forward along a circle; on reaching an
// endpoint of an arrow in S, jump to the arrow's other endpoint and continue
// forward just past it. One closed orbit of this rule is one boundary
// component. Each arrow in S is passed exactly twice, once per direction;
// the passage entered at the tail runs tail -> head.
//
// A state is descending for a coloring with k base points when the surface
// has exactly k boundary components, the base marks sit on k distinct
// components, and - traversing the components in base order, each starting
// at its mark - every arrow's first passage runs tail -> head. Ascending is
// the same with head -> tail first.
#pragma once

#include "braidsurf/coloring.hpp"
#include "braidsurf/gauss.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace braidsurf {

using StateSubset = std::uint64_t;  // bit i = arrow i is in the state

/// Flattened, slot-addressed view of a GaussDiagram; built once, shared by
/// every traversal over the same diagram.
struct DiagramIndex {
  int strands = 1;
  int n_arrows = 0;
  int n_circles = 0;
  int total_slots = 0;
  std::vector<int> circle_of_slot;
  std::vector<int> next_in_circle;
  std::vector<int> partner;        // other endpoint slot; -1 for labels
  std::vector<int> arrow_of_slot;  // -1 for labels
  std::vector<bool> head_slot;
  std::vector<int> strand_of_slot;  // 0 unless label
  std::vector<int> label_slot;      // 1-based strand -> slot
  std::vector<int> arrow_sign;
  StateSubset negative_arrows = 0;

  static DiagramIndex build(const GaussDiagram& g) {
    DiagramIndex ix;
    ix.strands = g.strands;
    ix.n_arrows = g.arrow_count();
    ix.n_circles = g.circle_count();
    if (ix.n_arrows > 63) throw std::invalid_argument("diagrams with more than 63 arrows are unsupported");
    std::vector<int> first(g.circle_count(), 0);
    for (int c = 0; c < g.circle_count(); ++c) {
      first[c] = ix.total_slots;
      ix.total_slots += static_cast<int>(g.circles[c].size());
    }
    ix.circle_of_slot.assign(ix.total_slots, 0);
    ix.next_in_circle.assign(ix.total_slots, 0);
    ix.partner.assign(ix.total_slots, -1);
    ix.arrow_of_slot.assign(ix.total_slots, -1);
    ix.head_slot.assign(ix.total_slots, false);
    ix.strand_of_slot.assign(ix.total_slots, 0);
    ix.label_slot.assign(g.strands + 1, -1);
    for (int c = 0; c < g.circle_count(); ++c) {
      const auto& events = g.circles[c];
      const int n = static_cast<int>(events.size());
      for (int p = 0; p < n; ++p) {
        const int s = first[c] + p;
        ix.circle_of_slot[s] = c;
        ix.next_in_circle[s] = first[c] + (p + 1) % n;
        if (events[p].kind == EventKind::label) {
          ix.strand_of_slot[s] = events[p].index;
          ix.label_slot[events[p].index] = s;
        } else {
          ix.arrow_of_slot[s] = events[p].index;
          ix.head_slot[s] = events[p].kind == EventKind::arrow_head;
        }
      }
    }
    ix.arrow_sign.assign(ix.n_arrows, 0);
    for (int a = 0; a < ix.n_arrows; ++a) {
      const Arrow& arrow = g.arrows[a];
      const int tail = first[arrow.tail_circle] + arrow.tail_pos;
      const int head = first[arrow.head_circle] + arrow.head_pos;
      ix.partner[tail] = head;
      ix.partner[head] = tail;
      ix.arrow_sign[a] = arrow.sign;
      if (arrow.sign < 0) ix.negative_arrows |= StateSubset(1) << a;
    }
    return ix;
  }

  /// Product of signs over the arrows of S.
  int state_sign(StateSubset s) const {
    return std::popcount(s & negative_arrows) % 2 == 0 ? 1 : -1;
  }

  // Successor of "about to read slot s" under the traversal rule.
  int next_gap(StateSubset state, int s) const {
    const int a = arrow_of_slot[s];
    if (a >= 0 && (state >> a) & 1) return next_in_circle[partner[s]];
    return next_in_circle[s];
  }
};

struct Passage {
  int arrow;
  bool tail_to_head;
  int boundary;  // orbit id of the component the passage was read on

  bool operator==(const Passage&) const = default;
};

struct SurfaceComponent {
  std::vector<int> circles;  // ascending
  int arrows = 0;
  int boundaries = 0;
  int genus = 0;
};

struct SurfaceProfile {
  int boundary_count = 0;
  std::vector<int> boundary_of_slot;
  std::vector<Passage> passages;  // in traversal order
  std::vector<int> separating;    // arrow ids, ascending
  std::vector<SurfaceComponent> components;

  int total_genus() const {
    int s = 0;
    for (const auto& c : components) s += c.genus;
    return s;
  }

  std::vector<int> genus_profile() const {
    std::vector<int> g;
    for (const auto& c : components) g.push_back(c.genus);
    std::sort(g.begin(), g.end());
    return g;
  }
};

/// Full boundary/genus census of the surface of (circles of G, arrows in S).
/// Orbits are enumerated from the smallest unvisited slot, so ids and the
/// passage order are deterministic.
inline SurfaceProfile trace_boundary(const DiagramIndex& ix, StateSubset state) {
  SurfaceProfile out;
  out.boundary_of_slot.assign(ix.total_slots, -1);

  std::vector<std::pair<int, int>> arrow_orbits(ix.n_arrows, {-1, -1});
  for (int start = 0; start < ix.total_slots; ++start) {
    if (out.boundary_of_slot[start] >= 0) continue;
    const int orbit = out.boundary_count++;
    int s = start;
    do {
      out.boundary_of_slot[s] = orbit;
      const int a = ix.arrow_of_slot[s];
      if (a >= 0 && (state >> a) & 1) {
        const bool t2h = !ix.head_slot[s];
        out.passages.push_back({a, t2h, orbit});
        auto& rec = arrow_orbits[a];
        (rec.first < 0 ? rec.first : rec.second) = orbit;
      }
      s = ix.next_gap(state, s);
    } while (s != start);
  }

  for (int a = 0; a < ix.n_arrows; ++a)
    if ((state >> a) & 1 && arrow_orbits[a].first != arrow_orbits[a].second)
      out.separating.push_back(a);

  // Connected components of circles joined by state arrows.
  std::vector<int> root(ix.n_circles);
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](int c) {
    while (root[c] != c) c = root[c] = root[root[c]];
    return c;
  };
  for (int s = 0; s < ix.total_slots; ++s) {
    const int a = ix.arrow_of_slot[s];
    if (a >= 0 && (state >> a) & 1) {
      const int ra = find(ix.circle_of_slot[s]);
      const int rb = find(ix.circle_of_slot[ix.partner[s]]);
      root[std::max(ra, rb)] = std::min(ra, rb);
    }
  }
  std::vector<int> comp_of_circle(ix.n_circles, -1);
  for (int c = 0; c < ix.n_circles; ++c) {
    const int r = find(c);
    if (comp_of_circle[r] < 0) {
      comp_of_circle[r] = static_cast<int>(out.components.size());
      out.components.push_back({});
    }
    comp_of_circle[c] = comp_of_circle[r];
    out.components[comp_of_circle[c]].circles.push_back(c);
  }
  for (int s = 0; s < ix.total_slots; ++s) {
    const int a = ix.arrow_of_slot[s];
    if (a >= 0 && !ix.head_slot[s] && (state >> a) & 1)
      ++out.components[comp_of_circle[ix.circle_of_slot[s]]].arrows;
  }
  // Each orbit stays inside one component; attribute it via any of its slots.
  std::vector<int> orbit_component(out.boundary_count, -1);
  for (int s = 0; s < ix.total_slots; ++s) orbit_component[out.boundary_of_slot[s]] = comp_of_circle[ix.circle_of_slot[s]];
  for (int o = 0; o < out.boundary_count; ++o) ++out.components[orbit_component[o]].boundaries;

  for (auto& c : out.components) {
    const int chi = static_cast<int>(c.circles.size()) - c.arrows;
    const int twice_genus = 2 - c.boundaries - chi;
    if (twice_genus < 0 || twice_genus % 2 != 0)
      throw std::logic_error("boundary traversal produced an impossible genus");
    c.genus = twice_genus / 2;
  }
  return out;
}

inline SurfaceProfile trace_boundary(const GaussDiagram& g, StateSubset state) {
  return trace_boundary(DiagramIndex::build(g), state);
}

struct StateCheck {
  bool ok = false;
  std::vector<Passage> passages;  // component-by-component certificate
};

namespace detail {

// Component-ordered walk from the base marks. Succeeds when the k walks are
// pairwise disjoint, cover every slot, and every arrow's first passage runs
// in the expected direction. Optionally reports which walk (1-based) read
// each labeled mark.
inline bool based_walk(const DiagramIndex& ix, StateSubset state, const std::vector<int>& based,
                       bool want_tail_first, std::vector<int>* mark_walk,
                       std::vector<Passage>* passages) {
  std::vector<uint8_t> visited(ix.total_slots, 0);
  std::vector<uint8_t> seen_arrow(ix.n_arrows, 0);
  int covered = 0;
  for (size_t i = 0; i < based.size(); ++i) {
    const int start = ix.label_slot[based[i]];
    if (visited[start]) return false;  // mark shares a component with an earlier mark
    int s = start;
    do {
      visited[s] = 1;
      ++covered;
      const int a = ix.arrow_of_slot[s];
      if (a >= 0 && (state >> a) & 1) {
        const bool t2h = !ix.head_slot[s];
        if (!seen_arrow[a]) {
          seen_arrow[a] = 1;
          if (t2h != want_tail_first) return false;
        }
        if (passages) passages->push_back({a, t2h, static_cast<int>(i + 1)});
      } else if (ix.strand_of_slot[s] > 0 && mark_walk) {
        (*mark_walk)[ix.strand_of_slot[s]] = static_cast<int>(i + 1);
      }
      s = ix.next_gap(state, s);
    } while (s != start);
  }
  return covered == ix.total_slots;  // anything uncovered means extra components
}

}  // namespace detail

/// Descending check: boundary count equals the coloring's k, base marks on
/// k distinct components, and every first passage tail -> head when the
/// components are traversed in base order from their marks.
inline StateCheck is_descending(const DiagramIndex& ix, StateSubset state, const Coloring& col) {
  StateCheck r;
  r.ok = detail::based_walk(ix, state, col.based, true, nullptr, &r.passages);
  return r;
}

/// Mirror of is_descending: first passages must run head -> tail.
inline StateCheck is_ascending(const DiagramIndex& ix, StateSubset state, const StarColoring& col) {
  StateCheck r;
  r.ok = detail::based_walk(ix, state, col.based, false, nullptr, &r.passages);
  return r;
}

/// True when every non-based labeled arc lies on the boundary component of
/// the base point it is colored with. Independent of the descending check:
/// it only compares component ids, not counts.
template <typename ColoringT>
bool color_respected(const DiagramIndex& ix, StateSubset state, const ColoringT& col) {
  const SurfaceProfile prof = trace_boundary(ix, state);
  for (int t = 1; t <= ix.strands; ++t) {
    const int c = col.color[t];
    if (c == 0) continue;  // based arc
    if (prof.boundary_of_slot[ix.label_slot[t]] != prof.boundary_of_slot[ix.label_slot[col.based[c - 1]]])
      return false;
  }
  return true;
}

/// One-pass acceptance test used by the census: descending (or ascending)
/// with the coloring's base points plus the color condition.
template <typename ColoringT>
bool accepted_state(const DiagramIndex& ix, StateSubset state, const ColoringT& col,
                    bool want_tail_first, std::vector<int>& mark_walk_scratch) {
  std::fill(mark_walk_scratch.begin(), mark_walk_scratch.end(), 0);
  if (!detail::based_walk(ix, state, col.based, want_tail_first, &mark_walk_scratch, nullptr))
    return false;
  for (int t = 1; t <= ix.strands; ++t)
    if (col.color[t] != 0 && mark_walk_scratch[t] != col.color[t]) return false;
  return true;
}

}  // namespace braidsurf
