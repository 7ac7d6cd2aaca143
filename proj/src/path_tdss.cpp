#include "tdss/path_tdss.hpp"

#include <algorithm>

namespace tdss {

std::vector<VertexId> path_order(const TemporalGraph& g) {
  const std::size_t n = g.vertex_count();
  const StaticGraph fp = footprint(g);
  if (n == 0) fail(ErrorCode::NotAPath, "empty graph");
  if (fp.edge_count() != n - 1)
    fail(ErrorCode::NotAPath, "a path on n vertices has n-1 arcs");

  std::vector<std::size_t> indeg(n, 0);
  for (VertexId u = 0; u < n; ++u) {
    if (fp.out(u).size() > 1)
      fail(ErrorCode::NotAPath, "vertex " + g.name(u) + " has out-degree > 1");
    for (VertexId v : fp.out(u)) ++indeg[v];
  }
  VertexId start = n;
  for (VertexId v = 0; v < n; ++v) {
    if (indeg[v] > 1)
      fail(ErrorCode::NotAPath, "vertex " + g.name(v) + " has in-degree > 1");
    if (indeg[v] == 0) {
      if (start != n) fail(ErrorCode::NotAPath, "multiple start vertices");
      start = v;
    }
  }
  if (start == n) fail(ErrorCode::NotAPath, "no start vertex");

  std::vector<VertexId> order{start};
  while (!fp.out(order.back()).empty()) order.push_back(fp.out(order.back())[0]);
  if (order.size() != n)
    fail(ErrorCode::NotAPath, "footprint is not connected");

  if (g.edge_count() != fp.edge_count())
    fail(ErrorCode::NotSimple, "an arc carries more than one label");
  return order;
}

namespace {

TimeLabel arc_label(const TemporalGraph& g, VertexId u, VertexId v) {
  for (const auto& [t, w] : g.out(u))
    if (w == v) return t;
  fail(ErrorCode::UnknownVertex, "missing path arc");
}

}  // namespace

std::vector<TemporalBreak> find_temporal_breaks(const TemporalGraph& g,
                                                PathMode mode) {
  const std::vector<VertexId> order = path_order(g);
  std::vector<TemporalBreak> breaks;
  for (std::size_t x = 1; x + 1 < order.size(); ++x) {
    const TimeLabel in = arc_label(g, order[x - 1], order[x]);
    const TimeLabel out = arc_label(g, order[x], order[x + 1]);
    const bool broken = mode == PathMode::Strict ? out <= in : out < in;
    if (broken) breaks.push_back({order[x], in, out});
  }
  return breaks;
}

std::vector<PathSegment> partition_at_breaks(
    const TemporalGraph& g, const std::vector<TemporalBreak>& breaks) {
  const std::vector<VertexId> order = path_order(g);
  std::vector<std::size_t> position(g.vertex_count());
  for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = i;

  std::vector<std::size_t> cuts;
  for (const auto& b : breaks) {
    if (b.vertex >= g.vertex_count())
      fail(ErrorCode::UnknownVertex, "break vertex outside the graph");
    const std::size_t p = position[b.vertex];
    if (p > 0 && p + 1 < order.size()) cuts.push_back(p);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  cuts.push_back(order.size() - 1);

  std::vector<PathSegment> segments;
  std::size_t from = 0;
  for (const std::size_t to : cuts) {
    PathSegment seg;
    for (std::size_t i = from; i <= to; ++i) seg.vertices.push_back(order[i]);
    for (std::size_t i = from; i < to; ++i)
      seg.edges.push_back(
          {order[i], order[i + 1], arc_label(g, order[i], order[i + 1])});
    segments.push_back(std::move(seg));
    from = to;
  }
  return segments;
}

TemporalGraph segment_graph(const TemporalGraph& g, const PathSegment& seg) {
  std::vector<std::string> names;
  names.reserve(seg.vertices.size());
  for (VertexId v : seg.vertices) names.push_back(g.name(v));
  std::vector<TemporalEdge> edges;
  for (std::size_t i = 0; i < seg.edges.size(); ++i)
    edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>(i + 1),
                     seg.edges[i].label});
  return TemporalGraph(std::move(names), std::move(edges));
}

StaticGraph segment_footprint(const TemporalGraph& g, const PathSegment& seg) {
  std::vector<std::string> names;
  names.reserve(seg.vertices.size());
  for (VertexId v : seg.vertices) names.push_back(g.name(v));
  std::vector<StaticEdge> edges;
  for (std::size_t i = 0; i + 1 < seg.vertices.size(); ++i)
    edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>(i + 1)});
  return StaticGraph(std::move(names), std::move(edges));
}

TemporalShortcutSet assign_labels(const PathSegment& seg,
                                  const ShortcutSet& s) {
  TemporalShortcutSet out;
  out.reserve(s.size());
  for (const auto& e : s) {
    if (e.head <= e.tail || e.head >= seg.vertices.size())
      fail(ErrorCode::NotForward,
           "shortcut does not span forward path positions");
    out.push_back(
        {seg.vertices[e.tail], seg.vertices[e.head], seg.edges[e.tail].label});
  }
  return out;
}

PathShortcutResult shortcut_temporal_path(const TemporalGraph& g,
                                          std::int32_t d, PathMethod method) {
  if (d < 1) fail(ErrorCode::InvalidTarget, "target diameter must be >= 1");
  PathShortcutResult result;
  result.breaks = find_temporal_breaks(g, PathMode::Strict);
  const auto segments = partition_at_breaks(g, result.breaks);
  result.segment_count = segments.size();

  for (std::size_t i = 0; i < segments.size(); ++i) {
    // A segment footprint is a bare path, so its static diameter is its edge
    // count; segments already within target contribute nothing.
    if (segments[i].edges.size() <= static_cast<std::size_t>(d)) continue;
    const StaticGraph fp = segment_footprint(g, segments[i]);
    const ShortcutSet s =
        method.kind == PathMethod::Kind::Greedy
            ? greedy_shortcut_set(fp, d)
            : random_shortcut_set(fp, d, method.seed + i, method.c);
    const TemporalShortcutSet lifted = assign_labels(segments[i], s);
    result.tdss.insert(result.tdss.end(), lifted.begin(), lifted.end());
  }
  std::sort(result.tdss.begin(), result.tdss.end());
  result.report = base_diameter(g, g.with_edges(result.tdss), PathMode::Strict);
  return result;
}

}  // namespace tdss
