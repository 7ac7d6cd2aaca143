#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tdss/bitmatrix.hpp"
#include "tdss/core.hpp"

namespace tdss {

struct StaticDistanceMap {
  VertexId source = 0;
  std::vector<std::int32_t> hops;  // -1 where unreachable
};

StaticDistanceMap static_distances(const StaticGraph& g, VertexId source);

// One minimum-hop path source -> target as its vertex sequence; ties broken
// towards the lowest-index predecessor so results are reproducible.
std::optional<std::vector<VertexId>> static_shortest_path(const StaticGraph& g,
                                                          VertexId source,
                                                          VertexId target);

// Max hop distance over ordered reachable pairs u != v; nullopt when none.
// The default implementation runs one bit-parallel BFS per source, sources
// fanned out across OpenMP threads.
std::optional<std::int32_t> static_diameter(const StaticGraph& g);

// All ordered pairs (u, v), u != v, with v reachable from u.  Sorted.
std::vector<StaticEdge> transitive_closure(const StaticGraph& g);

// Reachability as row bitsets (reflexive bits unset).
BitMatrix static_reach(const StaticGraph& g);

// Unique minimal equivalent subgraph of a DAG; throws CyclicInput otherwise.
StaticGraph transitive_reduction(const StaticGraph& g);

// Topological order, or nullopt when g has a cycle.
std::optional<std::vector<VertexId>> topological_order(const StaticGraph& g);

namespace serial {
// Scalar single-queue BFS variants kept as the reference the parallel
// kernels are tested against.
std::optional<std::int32_t> static_diameter(const StaticGraph& g);
std::vector<StaticEdge> transitive_closure(const StaticGraph& g);
BitMatrix static_reach(const StaticGraph& g);
}  // namespace serial

}  // namespace tdss
