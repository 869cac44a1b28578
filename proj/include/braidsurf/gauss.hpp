// Braid Gauss diagrams: one circle per closure component, carrying signed
// directed arrows (one per braid letter) and one labeled-arc mark per strand.
//
// Conventions, fixed once and used everywhere:
//   - strands enter at the bottom and meet letters in word order;
//   - in a positive letter sigma_q the strand moving q -> q+1 overpasses,
//     in sigma_q^-1 the strand moving q+1 -> q overpasses;
//   - arrows point from the overpassing passage to the underpassing one
//     (tail on the over strand, head on the under strand), sign = letter sign;
//   - the mark for arc a_t sits on the closure arc joining top position t to
//     bottom position t;
//   - circles are ordered by their minimal strand label and each circle's
//     event list starts at that strand's mark.
#pragma once

#include "braidsurf/braid.hpp"

#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace braidsurf {

enum class EventKind { arrow_tail, arrow_head, label };

struct Event {
  EventKind kind;
  int index;  // arrow id for tail/head, strand index for label

  bool operator==(const Event&) const = default;
};

struct Arrow {
  int sign = 0;
  int tail_circle = -1;
  int tail_pos = -1;
  int head_circle = -1;
  int head_pos = -1;

  bool operator==(const Arrow&) const = default;
};

struct GaussDiagram {
  int strands = 1;
  std::vector<std::vector<Event>> circles;
  std::vector<Arrow> arrows;
  std::vector<int> circle_of_strand;  // 1-based: circle_of_strand[t]

  int arrow_count() const { return static_cast<int>(arrows.size()); }
  int circle_count() const { return static_cast<int>(circles.size()); }

  bool operator==(const GaussDiagram&) const = default;
};

namespace detail {

// Every arc (maximal run between arrow endpoints) must carry at most one
// mark; a violation means the strand walk above went wrong.
inline void check_one_label_per_arc(const GaussDiagram& g) {
  for (const auto& circle : g.circles) {
    bool has_arrow_end = false;
    for (const auto& ev : circle)
      if (ev.kind != EventKind::label) has_arrow_end = true;
    if (!has_arrow_end) {
      if (circle.size() != 1) throw std::logic_error("arrowless circle must be a single labeled arc");
      continue;
    }
    const size_t n = circle.size();
    size_t start = 0;
    while (circle[start].kind == EventKind::label) ++start;
    int labels_in_arc = 0;
    for (size_t step = 1; step <= n; ++step) {
      const Event& ev = circle[(start + step) % n];
      if (ev.kind == EventKind::label) {
        if (++labels_in_arc > 1) throw std::logic_error("two labeled arcs collapsed into one");
      } else {
        labels_in_arc = 0;
      }
    }
  }
}

}  // namespace detail

inline GaussDiagram gauss_from_braid(const BraidWord& w) {
  const int m = w.strands;
  const auto info = closure_info(w);

  // Crossings met by the strand entering at bottom position p, in order.
  struct Encounter {
    int letter;
    bool over;
  };
  std::vector<std::vector<Encounter>> path(m + 1);
  for (int p = 1; p <= m; ++p) {
    int cur = p;
    for (size_t i = 0; i < w.letters.size(); ++i) {
      const int q = std::abs(w.letters[i]);
      const bool positive = w.letters[i] > 0;
      if (cur == q) {
        path[p].push_back({static_cast<int>(i), positive});
        cur = q + 1;
      } else if (cur == q + 1) {
        path[p].push_back({static_cast<int>(i), !positive});
        cur = q;
      }
    }
  }

  GaussDiagram g;
  g.strands = m;
  g.arrows.assign(w.letters.size(), Arrow{});
  for (size_t i = 0; i < w.letters.size(); ++i) g.arrows[i].sign = w.letters[i] > 0 ? 1 : -1;
  g.circle_of_strand.assign(m + 1, -1);

  for (const auto& cycle : info.cycles) {
    const int ci = g.circle_count();
    std::vector<Event> events;
    for (int t : cycle) {
      g.circle_of_strand[t] = ci;
      events.push_back({EventKind::label, t});
      for (const Encounter& e : path[t]) {
        Arrow& a = g.arrows[e.letter];
        const int pos = static_cast<int>(events.size());
        if (e.over) {
          a.tail_circle = ci;
          a.tail_pos = pos;
          events.push_back({EventKind::arrow_tail, e.letter});
        } else {
          a.head_circle = ci;
          a.head_pos = pos;
          events.push_back({EventKind::arrow_head, e.letter});
        }
      }
    }
    g.circles.push_back(std::move(events));
  }

  for (const Arrow& a : g.arrows)
    if (a.tail_circle < 0 || a.head_circle < 0)
      throw std::logic_error("braid letter produced a dangling arrow");
  detail::check_one_label_per_arc(g);
  return g;
}

struct ConwayTripleDiagrams {
  GaussDiagram plus;
  GaussDiagram minus;
  GaussDiagram zero;
};

inline ConwayTripleDiagrams conway_triple_diagrams(const BraidWord& w, size_t index) {
  const ConwayTriple t = conway_triple(w, index);
  return {gauss_from_braid(t.plus), gauss_from_braid(t.minus), gauss_from_braid(t.zero)};
}

}  // namespace braidsurf
