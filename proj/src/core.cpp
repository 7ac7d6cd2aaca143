#include "tdss/core.hpp"

#include <algorithm>
#include <limits>

namespace tdss {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidLabel: return "InvalidLabel";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::NoEdges: return "NoEdges";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::VertexSetMismatch: return "VertexSetMismatch";
    case ErrorCode::NotAugmentation: return "NotAugmentation";
    case ErrorCode::CyclicInput: return "CyclicInput";
    case ErrorCode::InvalidTarget: return "InvalidTarget";
    case ErrorCode::TargetTooSmall: return "TargetTooSmall";
    case ErrorCode::NotAPath: return "NotAPath";
    case ErrorCode::NotSimple: return "NotSimple";
    case ErrorCode::NotForward: return "NotForward";
    case ErrorCode::MalformedEdge: return "MalformedEdge";
    case ErrorCode::InvalidShortcut: return "InvalidShortcut";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

StaticGraph::StaticGraph(std::vector<std::string> names,
                         std::vector<StaticEdge> edges)
    : names_(std::move(names)) {
  index_.reserve(names_.size());
  for (VertexId v = 0; v < names_.size(); ++v) index_.emplace(names_[v], v);
  adj_.assign(names_.size(), {});
  for (const auto& e : edges) {
    if (e.tail >= names_.size() || e.head >= names_.size())
      fail(ErrorCode::UnknownVertex, "static edge endpoint out of range");
    if (e.tail == e.head)
      fail(ErrorCode::SelfLoop, "self-loop on vertex " + names_[e.tail]);
    adj_[e.tail].push_back(e.head);
  }
  for (auto& row : adj_) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
    edge_count_ += row.size();
  }
}

VertexId StaticGraph::vertex(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) fail(ErrorCode::UnknownVertex, "unknown vertex " + name);
  return it->second;
}

bool StaticGraph::has_edge(VertexId u, VertexId v) const {
  const auto& row = adj_[u];
  return std::binary_search(row.begin(), row.end(), v);
}

std::vector<StaticEdge> StaticGraph::edges() const {
  std::vector<StaticEdge> out;
  out.reserve(edge_count_);
  for (VertexId u = 0; u < adj_.size(); ++u)
    for (VertexId v : adj_[u]) out.push_back({u, v});
  return out;
}

StaticGraph StaticGraph::with_edges(const std::vector<StaticEdge>& extra) const {
  auto all = edges();
  all.insert(all.end(), extra.begin(), extra.end());
  return StaticGraph(names_, std::move(all));
}

namespace {

void check_temporal_edge(const TemporalEdge& e, std::size_t n,
                         const std::vector<std::string>& names) {
  if (e.tail >= n || e.head >= n)
    fail(ErrorCode::UnknownVertex, "temporal edge endpoint out of range");
  if (e.tail == e.head)
    fail(ErrorCode::SelfLoop, "self-loop on vertex " + names[e.tail]);
  if (e.label < 0)
    fail(ErrorCode::InvalidLabel,
         "negative label " + std::to_string(e.label) + " on edge " +
             names[e.tail] + " -> " + names[e.head]);
}

}  // namespace

TemporalGraph::TemporalGraph(std::vector<std::string> names,
                             std::vector<TemporalEdge> edges)
    : names_(std::move(names)), edges_(std::move(edges)) {
  index_.reserve(names_.size());
  for (VertexId v = 0; v < names_.size(); ++v) index_.emplace(names_[v], v);
  for (const auto& e : edges_) check_temporal_edge(e, names_.size(), names_);
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  out_.assign(names_.size(), {});
  for (const auto& e : edges_) out_[e.tail].emplace_back(e.label, e.head);
  for (auto& row : out_) std::sort(row.begin(), row.end());
}

VertexId TemporalGraph::vertex(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) fail(ErrorCode::UnknownVertex, "unknown vertex " + name);
  return it->second;
}

bool TemporalGraph::has_edge(const TemporalEdge& e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

TemporalGraph TemporalGraph::with_edges(const std::vector<TemporalEdge>& extra) const {
  auto all = edges_;
  all.insert(all.end(), extra.begin(), extra.end());
  return TemporalGraph(names_, std::move(all));
}

std::vector<std::tuple<std::string, std::string, TimeLabel>>
TemporalGraph::edge_triples() const {
  std::vector<std::tuple<std::string, std::string, TimeLabel>> out;
  out.reserve(edges_.size());
  for (const auto& e : edges_)
    out.emplace_back(names_[e.tail], names_[e.head], e.label);
  std::sort(out.begin(), out.end());
  return out;
}

TemporalGraph build_graph(
    const std::vector<std::tuple<std::string, std::string, TimeLabel>>& triples) {
  std::vector<std::string> names;
  std::unordered_map<std::string, VertexId> index;
  auto intern = [&](const std::string& s) -> VertexId {
    auto [it, fresh] = index.emplace(s, static_cast<VertexId>(names.size()));
    if (fresh) names.push_back(s);
    return it->second;
  };
  std::vector<TemporalEdge> edges;
  edges.reserve(triples.size());
  for (const auto& [tail, head, label] : triples) {
    VertexId u = intern(tail);
    VertexId v = intern(head);
    edges.push_back({u, v, label});
  }
  return TemporalGraph(std::move(names), std::move(edges));
}

StaticGraph footprint(const TemporalGraph& g) {
  std::vector<StaticEdge> edges;
  edges.reserve(g.edge_count());
  for (const auto& e : g.edges()) edges.push_back({e.tail, e.head});
  return StaticGraph(g.names(), std::move(edges));
}

StaticGraph snapshot(const TemporalGraph& g, TimeLabel t) {
  std::vector<StaticEdge> edges;
  for (const auto& e : g.edges())
    if (e.label == t) edges.push_back({e.tail, e.head});
  return StaticGraph(g.names(), std::move(edges));
}

GraphStats stats(const TemporalGraph& g) {
  if (g.edge_count() == 0)
    fail(ErrorCode::NoEdges, "lifetime of an edgeless graph is undefined");
  GraphStats s;
  s.vertex_count = g.vertex_count();
  s.edge_count = g.edge_count();
  s.t_min = std::numeric_limits<TimeLabel>::max();
  s.t_max = std::numeric_limits<TimeLabel>::min();
  for (const auto& e : g.edges()) {
    s.t_min = std::min(s.t_min, e.label);
    s.t_max = std::max(s.t_max, e.label);
  }
  s.lifetime = s.t_max - s.t_min + 1;
  return s;
}

}  // namespace tdss
