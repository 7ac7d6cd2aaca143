#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tdss/errors.hpp"

namespace tdss {

using VertexId = std::uint32_t;
using TimeLabel = std::int64_t;

// One time-stamped arc (u, v, t): traversal departs u at t and arrives at v
// at t + 1.  Labels are non-negative; multiple labels per static arc are fine.
struct TemporalEdge {
  VertexId tail = 0;
  VertexId head = 0;
  TimeLabel label = 0;

  friend bool operator==(const TemporalEdge&, const TemporalEdge&) = default;
  friend auto operator<=>(const TemporalEdge&, const TemporalEdge&) = default;
};

struct StaticEdge {
  VertexId tail = 0;
  VertexId head = 0;

  friend bool operator==(const StaticEdge&, const StaticEdge&) = default;
  friend auto operator<=>(const StaticEdge&, const StaticEdge&) = default;
};

// Plain directed graph. Vertices are dense ids into a name table; adjacency
// lists are sorted and duplicate-free.
class StaticGraph {
 public:
  StaticGraph() = default;
  StaticGraph(std::vector<std::string> names, std::vector<StaticEdge> edges);

  std::size_t vertex_count() const { return names_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(VertexId v) const { return names_[v]; }
  const std::vector<VertexId>& out(VertexId v) const { return adj_[v]; }

  bool has_vertex(const std::string& name) const { return index_.count(name) != 0; }
  VertexId vertex(const std::string& name) const;
  bool has_edge(VertexId u, VertexId v) const;

  std::vector<StaticEdge> edges() const;

  // Copy with extra edges merged in (duplicates collapse).
  StaticGraph with_edges(const std::vector<StaticEdge>& extra) const;

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, VertexId> index_;
  std::vector<std::vector<VertexId>> adj_;
  std::size_t edge_count_ = 0;
};

// Temporal graph with label-sorted per-vertex adjacency. Construction
// canonicalizes: edges sorted by (tail, head, label), duplicates collapsed.
class TemporalGraph {
 public:
  TemporalGraph() = default;

  // Builds from dense-id triples; `names` fixes the vertex set (isolated
  // vertices allowed).  Throws SelfLoop / InvalidLabel / UnknownVertex.
  TemporalGraph(std::vector<std::string> names, std::vector<TemporalEdge> edges);

  std::size_t vertex_count() const { return names_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(VertexId v) const { return names_[v]; }
  bool has_vertex(const std::string& name) const { return index_.count(name) != 0; }
  VertexId vertex(const std::string& name) const;

  const std::vector<TemporalEdge>& edges() const { return edges_; }
  bool has_edge(const TemporalEdge& e) const;

  // Outgoing (label, head) pairs of v, sorted by label then head.
  const std::vector<std::pair<TimeLabel, VertexId>>& out(VertexId v) const {
    return out_[v];
  }

  // Copy of this graph with extra temporal edges merged in. Vertex set is
  // unchanged; edges over unknown ids throw UnknownVertex.
  TemporalGraph with_edges(const std::vector<TemporalEdge>& extra) const;

  // Edges as (tail name, head name, label) triples, canonically sorted.
  std::vector<std::tuple<std::string, std::string, TimeLabel>> edge_triples() const;

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, VertexId> index_;
  std::vector<TemporalEdge> edges_;
  std::vector<std::vector<std::pair<TimeLabel, VertexId>>> out_;
};

struct GraphStats {
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  TimeLabel t_min = 0;
  TimeLabel t_max = 0;
  TimeLabel lifetime = 0;  // t_max - t_min + 1
};

// Named-triple constructor: the vertex name table is built in first-appearance
// order (tails before heads, input order otherwise).  Duplicate triples
// collapse.  Throws InvalidLabel on negative labels, SelfLoop on u == v.
TemporalGraph build_graph(
    const std::vector<std::tuple<std::string, std::string, TimeLabel>>& triples);

// Label-forgetting projection; parallel temporal edges collapse to one arc.
StaticGraph footprint(const TemporalGraph& g);

// Arcs whose label equals t exactly, over the full vertex set.
StaticGraph snapshot(const TemporalGraph& g, TimeLabel t);

// Throws NoEdges on an edgeless graph (lifetime is undefined there).
GraphStats stats(const TemporalGraph& g);

}  // namespace tdss
