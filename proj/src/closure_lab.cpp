#include "tdss/closure_lab.hpp"

#include <algorithm>

namespace tdss {

TemporalGraph temporal_closure(const TemporalGraph& g, ClosureKind kind) {
  const std::size_t n = g.vertex_count();
  std::vector<TemporalEdge> added;

  if (kind == ClosureKind::LatestDeparture) {
    for (VertexId v = 0; v < n; ++v) {
      const auto ld = time_metrics(g, v, TimeMetric::LatestDeparture,
                                   PathMode::Strict);
      for (VertexId u = 0; u < n; ++u)
        if (ld[u].tag == TimeMetricEntry::Tag::At)
          added.push_back({u, v, ld[u].t});
    }
    return g.with_edges(added);
  }

  std::vector<TimeLabel> lifecycle;
  if (kind == ClosureKind::FullLifecycle) {
    const GraphStats st = stats(g);
    for (TimeLabel t = st.t_min; t <= st.t_max; ++t) lifecycle.push_back(t);
  }

  for (VertexId u = 0; u < n; ++u) {
    TemporalSearch search(g, u, PathMode::Strict);
    for (VertexId v = 0; v < n; ++v) {
      if (v == u || !search.reaches(v)) continue;
      if (kind == ClosureKind::EarliestArrival) {
        added.push_back({u, v, search.earliest_arrival(v)});
      } else {
        for (TimeLabel t : lifecycle) added.push_back({u, v, t});
      }
    }
  }
  return g.with_edges(added);
}

ReachabilityDelta reachability_delta(const TemporalGraph& before,
                                     const TemporalGraph& after) {
  const std::size_t n = before.vertex_count();
  if (after.vertex_count() != n)
    fail(ErrorCode::VertexSetMismatch, "vertex counts differ");
  std::vector<VertexId> remap(n);
  for (VertexId v = 0; v < n; ++v) {
    if (!after.has_vertex(before.name(v)))
      fail(ErrorCode::VertexSetMismatch,
           "vertex " + before.name(v) + " missing from the extended graph");
    remap[v] = after.vertex(before.name(v));
  }
  for (const auto& e : before.edges())
    if (!after.has_edge({remap[e.tail], remap[e.head], e.label}))
      fail(ErrorCode::NotAugmentation,
           "extended graph drops edge " + before.name(e.tail) + " -> " +
               before.name(e.head) + " @" + std::to_string(e.label));

  ReachabilityDelta delta;
  for (VertexId u = 0; u < n; ++u) {
    TemporalSearch in_before(before, u, PathMode::Strict);
    TemporalSearch in_after(after, remap[u], PathMode::Strict);
    for (VertexId v = 0; v < n; ++v) {
      if (v == u || in_before.reaches(v) || !in_after.reaches(remap[v]))
        continue;
      delta.added_pairs.push_back({u, v});
      auto path = in_after.path_to(remap[v]);
      // translate the witness back into before's vertex ids
      std::vector<TemporalEdge> witness;
      for (const auto& e : *path) {
        const VertexId t = static_cast<VertexId>(
            before.vertex(after.name(e.tail)));
        const VertexId h = static_cast<VertexId>(
            before.vertex(after.name(e.head)));
        witness.push_back({t, h, e.label});
      }
      delta.witnesses.push_back(std::move(witness));
    }
  }
  return delta;
}

}  // namespace tdss
