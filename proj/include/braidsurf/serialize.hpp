// JSON views of the library's value types. Coefficients are emitted as
// decimal strings so arbitrary-precision values survive round trips through
// tools that only do doubles; term arrays are sorted by exponent so output
// is diffable.
#pragma once

#include "braidsurf/gauss.hpp"
#include "braidsurf/invariant.hpp"
#include "braidsurf/laurent.hpp"

#include "json.hpp"

#include <string>

namespace braidsurf {

using Json = nlohmann::json;

inline Json to_json(const LaurentPoly1& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"z", e}, {"c", c.str()}});
  return terms;
}

inline Json to_json(const LaurentPoly2& p) {
  Json terms = Json::array();
  for (const auto& [k, c] : p.terms())
    terms.push_back({{"a", k.first}, {"z", k.second}, {"c", c.str()}});
  return terms;
}

inline Json to_json(const GaussDiagram& g) {
  Json circles = Json::array();
  for (const auto& circle : g.circles) {
    Json events = Json::array();
    for (const Event& ev : circle) {
      switch (ev.kind) {
        case EventKind::arrow_tail:
          events.push_back({{"type", "tail"}, {"arrow", ev.index}});
          break;
        case EventKind::arrow_head:
          events.push_back({{"type", "head"}, {"arrow", ev.index}});
          break;
        case EventKind::label:
          events.push_back({{"type", "label"}, {"strand", ev.index}});
          break;
      }
    }
    circles.push_back(std::move(events));
  }
  Json arrows = Json::array();
  for (int i = 0; i < g.arrow_count(); ++i) {
    const Arrow& a = g.arrows[i];
    arrows.push_back({{"id", i},
                      {"sign", a.sign},
                      {"tail", {a.tail_circle, a.tail_pos}},
                      {"head", {a.head_circle, a.head_pos}}});
  }
  Json labels = Json::array();
  for (int t = 1; t <= g.strands; ++t) {
    for (int c = 0; c < g.circle_count(); ++c)
      for (int p = 0; p < static_cast<int>(g.circles[c].size()); ++p)
        if (g.circles[c][p].kind == EventKind::label && g.circles[c][p].index == t)
          labels.push_back({{"strand", t}, {"at", {c, p}}});
  }
  return {{"strands", g.strands}, {"circles", circles}, {"arrows", arrows}, {"labels", labels}};
}

template <typename ColoringT>
Json coloring_to_json(const ColoringT& col) {
  Json colors = Json::array();
  for (int t = 1; t < static_cast<int>(col.color.size()); ++t)
    if (col.color[t] != 0) colors.push_back({{"arc", t}, {"color", col.color[t]}});
  return {{"k", col.k}, {"based_arcs", col.based}, {"colors", colors}};
}

inline Json to_json(const StateRecord& rec) {
  Json arrows = Json::array();
  for (int a = 0; a < 64; ++a)
    if ((rec.state >> a) & 1) arrows.push_back(a);
  Json passages = Json::array();
  for (const Passage& p : rec.passages)
    passages.push_back({{"arrow", p.arrow},
                        {"direction", p.tail_to_head ? "tail_to_head" : "head_to_tail"},
                        {"boundary", p.boundary}});
  return {{"level", rec.level},
          {"coloring", rec.coloring_index},
          {"arrows", arrows},
          {"sign", rec.sign},
          {"boundaries", rec.boundary_count},
          {"genus", rec.genus},
          {"separating", rec.separating},
          {"passages", passages}};
}

inline Json to_json(const InvariantReport& rep) {
  Json weights = Json::array();
  for (const auto& [j, w] : rep.weights) weights.push_back({{"j", j}, {"value", w.str()}});
  Json counts = Json::array();
  for (const auto& [key, c] : rep.counts)
    counts.push_back({{"n", key.first}, {"j", key.second}, {"value", c.str()}});
  Json census = Json::array();
  for (const CensusEntry& e : rep.census)
    census.push_back(
        {{"level", e.level}, {"arrows", e.arrows}, {"genus", e.genus}, {"count", e.count.str()}});
  return {{"k", rep.k},
          {"strands", rep.strands},
          {"components", rep.components},
          {"writhe", rep.writhe},
          {"weights", weights},
          {"counts", counts},
          {"polynomial", to_json(rep.polynomial)},
          {"polynomial_str", rep.polynomial.str()},
          {"census", census}};
}

}  // namespace braidsurf
