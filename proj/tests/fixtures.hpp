#pragma once

// Shared graph fixtures.  G1..G4 are small hand-built graphs exercising the
// corner each one was designed for; tests freeze exact expected values
// against them.

#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "tdss/core.hpp"
#include "tdss/errors.hpp"

namespace fx {

// Runs f and reports which ErrorCode it threw, if any.
template <typename F>
std::optional<tdss::ErrorCode> thrown_code(F&& f) {
  try {
    std::forward<F>(f)();
  } catch (const tdss::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

// Strict temporal path p1 -> p2 -> p3 -> p4, labels 1,2,3.  Hop diameter 3,
// no temporal breaks.
inline tdss::TemporalGraph g1() {
  return tdss::build_graph({
      {"p1", "p2", 1},
      {"p2", "p3", 2},
      {"p3", "p4", 3},
  });
}

// Path p1..p5 with a temporal break at p3 (in-label 2, out-label 1): the two
// halves are mutually unreachable across the break.
inline tdss::TemporalGraph g2() {
  return tdss::build_graph({
      {"p1", "p2", 1},
      {"p2", "p3", 2},
      {"p3", "p4", 1},
      {"p4", "p5", 2},
  });
}

// Two-edge path a -> b -> c, labels 1,2.  Expansion fixture: k = 2, K = 5.
inline tdss::TemporalGraph g3() {
  return tdss::build_graph({
      {"a", "b", 1},
      {"b", "c", 2},
  });
}

// Closure counterexample: a reaches c but not d, x reaches a but not c.
// Any shortcut (a,c,t) with t < 7 makes a reach d; any t >= 7 makes x
// reach c.
inline tdss::TemporalGraph g4() {
  return tdss::build_graph({
      {"x", "a", 6},
      {"a", "b", 6},
      {"b", "c", 7},
      {"c", "d", 7},
  });
}

// Diameter-ratio counterexample: temporal diameter k = 1, but the expansion
// diameter is 5 > 2k + 1.
inline tdss::TemporalGraph ratio_counterexample() {
  return tdss::build_graph({
      {"u", "w", 1},
      {"u", "a", 5},
      {"a", "w", 6},
  });
}

// Strict temporal path p1..pn with the given labels (one per edge).
inline tdss::TemporalGraph temporal_path(const std::vector<tdss::TimeLabel>& labels) {
  std::vector<std::tuple<std::string, std::string, tdss::TimeLabel>> triples;
  for (std::size_t i = 0; i < labels.size(); ++i)
    triples.push_back({"p" + std::to_string(i + 1), "p" + std::to_string(i + 2),
                       labels[i]});
  return tdss::build_graph(triples);
}

// Bare static path v1 -> ... -> vn.
inline tdss::StaticGraph static_path(std::size_t n) {
  std::vector<std::string> names;
  std::vector<tdss::StaticEdge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back("v" + std::to_string(i + 1));
    if (i + 1 < n)
      edges.push_back({static_cast<tdss::VertexId>(i),
                       static_cast<tdss::VertexId>(i + 1)});
  }
  return tdss::StaticGraph(std::move(names), std::move(edges));
}

}  // namespace fx
