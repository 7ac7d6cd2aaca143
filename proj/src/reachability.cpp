#include "tdss/reachability.hpp"

#include <algorithm>
#include <limits>

namespace tdss {

namespace {

constexpr TimeLabel kNoNeed = std::numeric_limits<TimeLabel>::max();
constexpr TimeLabel kInfLabel = std::numeric_limits<TimeLabel>::max() / 2;

template <class F>
void for_sources(std::size_t n, bool parallel, F&& f) {
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t s = 0; s < static_cast<std::int64_t>(n); ++s)
      f(static_cast<VertexId>(s));
  } else {
    for (std::size_t s = 0; s < n; ++s) f(static_cast<VertexId>(s));
  }
}

}  // namespace

TemporalSearch::TemporalSearch(const TemporalGraph& g, VertexId source,
                               PathMode mode)
    : source_(source), mode_(mode) {
  const std::size_t n = g.vertex_count();
  if (source >= n)
    fail(ErrorCode::UnknownVertex,
         "source id " + std::to_string(source) + " out of range");
  hops_.assign(n, kUnreachable);
  best_need_.assign(n, kNoNeed);
  first_state_.assign(n, -1);

  hops_[source] = 0;
  best_need_[source] = 0;
  first_state_[source] = 0;
  states_.push_back({source, 0, -1, 0, {}});

  // FIFO over states keeps depth = hop count; a state is pushed only when it
  // strictly lowers its vertex's best need, so pushes per vertex are bounded
  // by the number of distinct incoming labels.
  std::size_t qhead = 0;
  while (qhead < states_.size()) {
    const std::int32_t si = static_cast<std::int32_t>(qhead++);
    const VertexId u = states_[si].vertex;
    const TimeLabel need = states_[si].need;
    const std::int32_t depth = states_[si].depth;
    const auto& row = g.out(u);
    auto it = std::lower_bound(row.begin(), row.end(),
                               std::make_pair(need, VertexId{0}));
    for (; it != row.end(); ++it) {
      const auto [t, w] = *it;
      const TimeLabel next = mode == PathMode::Strict ? t + 1 : t;
      if (next >= best_need_[w]) continue;
      best_need_[w] = next;
      if (hops_[w] < 0) {
        hops_[w] = depth + 1;
        first_state_[w] = static_cast<std::int32_t>(states_.size());
      }
      states_.push_back({w, next, si, depth + 1, {u, w, t}});
    }
  }
}

TimeLabel TemporalSearch::earliest_arrival(VertexId v) const {
  return mode_ == PathMode::Strict ? best_need_[v] : best_need_[v] + 1;
}

std::optional<std::vector<TemporalEdge>> TemporalSearch::path_to(
    VertexId v) const {
  if (hops_[v] < 0) return std::nullopt;
  std::vector<TemporalEdge> path;
  for (std::int32_t s = first_state_[v]; states_[s].prev >= 0;
       s = states_[s].prev)
    path.push_back(states_[s].via);
  std::reverse(path.begin(), path.end());
  return path;
}

DistanceMap temporal_distances(const TemporalGraph& g, VertexId source,
                               PathMode mode) {
  TemporalSearch search(g, source, mode);
  return {source, search.hops()};
}

namespace {

BitMatrix reach_matrix_impl(const TemporalGraph& g, PathMode mode,
                            bool parallel) {
  const std::size_t n = g.vertex_count();
  BitMatrix m(n, n);
  for_sources(n, parallel, [&](VertexId s) {
    TemporalSearch search(g, s, mode);
    for (VertexId v = 0; v < n; ++v)
      if (search.reaches(v)) m.set(s, v);
  });
  return m;
}

std::optional<std::int32_t> temporal_diameter_impl(const TemporalGraph& g,
                                                   PathMode mode,
                                                   bool parallel) {
  const std::size_t n = g.vertex_count();
  std::vector<std::int32_t> ecc(n, kUnreachable);
  for_sources(n, parallel, [&](VertexId s) {
    TemporalSearch search(g, s, mode);
    std::int32_t best = kUnreachable;
    for (VertexId v = 0; v < n; ++v)
      if (v != s) best = std::max(best, search.hops()[v]);
    ecc[s] = best;
  });
  std::int32_t d = kUnreachable;
  for (auto e : ecc) d = std::max(d, e);
  if (d < 0) return std::nullopt;
  return d;
}

}  // namespace

BitMatrix reach_matrix(const TemporalGraph& g, PathMode mode) {
  return reach_matrix_impl(g, mode, true);
}

std::optional<std::int32_t> temporal_diameter(const TemporalGraph& g,
                                              PathMode mode) {
  return temporal_diameter_impl(g, mode, true);
}

namespace serial {

BitMatrix reach_matrix(const TemporalGraph& g, PathMode mode) {
  return reach_matrix_impl(g, mode, false);
}

std::optional<std::int32_t> temporal_diameter(const TemporalGraph& g,
                                              PathMode mode) {
  return temporal_diameter_impl(g, mode, false);
}

}  // namespace serial

DiameterReport base_diameter(const TemporalGraph& base,
                             const TemporalGraph& augmented, PathMode mode) {
  const std::size_t n = base.vertex_count();
  if (augmented.vertex_count() != n)
    fail(ErrorCode::VertexSetMismatch, "vertex counts differ");
  std::vector<VertexId> remap(n);  // base id -> augmented id
  for (VertexId v = 0; v < n; ++v) {
    if (!augmented.has_vertex(base.name(v)))
      fail(ErrorCode::VertexSetMismatch,
           "vertex " + base.name(v) + " missing from augmented graph");
    remap[v] = augmented.vertex(base.name(v));
  }
  for (const auto& e : base.edges())
    if (!augmented.has_edge({remap[e.tail], remap[e.head], e.label}))
      fail(ErrorCode::NotAugmentation,
           "augmented graph drops edge " + base.name(e.tail) + " -> " +
               base.name(e.head) + " @" + std::to_string(e.label));

  std::vector<VertexId> unmap(n);  // augmented id -> base id
  for (VertexId v = 0; v < n; ++v) unmap[remap[v]] = v;

  struct Row {
    std::int32_t aug_ecc = kUnreachable;
    std::int32_t base_ecc = kUnreachable;
    std::size_t pairs = 0;
    std::vector<StaticEdge> fresh;
  };
  std::vector<Row> rows(n);
  for_sources(n, true, [&](VertexId s) {
    TemporalSearch in_aug(augmented, remap[s], mode);
    TemporalSearch in_base(base, s, mode);
    Row& r = rows[s];
    for (VertexId v = 0; v < n; ++v) {
      if (v == s) continue;
      const std::int32_t d = in_aug.hops()[remap[v]];
      if (d >= 0) {
        ++r.pairs;
        r.aug_ecc = std::max(r.aug_ecc, d);
        if (!in_base.reaches(v)) r.fresh.push_back({s, v});
      }
      if (in_base.reaches(v)) r.base_ecc = std::max(r.base_ecc, d);
    }
  });

  DiameterReport report;
  std::int32_t aug = kUnreachable, over_base = kUnreachable;
  for (const Row& r : rows) {
    aug = std::max(aug, r.aug_ecc);
    over_base = std::max(over_base, r.base_ecc);
    report.reachable_pairs += r.pairs;
    report.new_pairs.insert(report.new_pairs.end(), r.fresh.begin(),
                            r.fresh.end());
  }
  if (aug >= 0) report.diameter = aug;
  if (over_base >= 0) report.base_diameter = over_base;
  std::sort(report.new_pairs.begin(), report.new_pairs.end());
  return report;
}

std::vector<TimeMetricEntry> time_metrics(const TemporalGraph& g, VertexId v,
                                          TimeMetric metric, PathMode mode) {
  const std::size_t n = g.vertex_count();
  if (v >= n)
    fail(ErrorCode::UnknownVertex,
         "vertex id " + std::to_string(v) + " out of range");
  std::vector<TimeMetricEntry> out(n);
  out[v].tag = TimeMetricEntry::Tag::Source;

  if (metric == TimeMetric::EarliestArrival) {
    TemporalSearch search(g, v, mode);
    for (VertexId w = 0; w < n; ++w) {
      if (w == v || !search.reaches(w)) continue;
      out[w] = {TimeMetricEntry::Tag::At, search.earliest_arrival(w)};
    }
    return out;
  }

  // LatestDeparture: label-correcting maximization of the first label of a
  // path into v, over reversed adjacency.
  std::vector<std::vector<std::pair<TimeLabel, VertexId>>> in(n);
  for (const auto& e : g.edges()) in[e.head].emplace_back(e.label, e.tail);

  constexpr TimeLabel kBottom = std::numeric_limits<TimeLabel>::min();
  std::vector<TimeLabel> best(n, kBottom);
  best[v] = kInfLabel;
  std::vector<VertexId> queue{v};
  std::size_t qhead = 0;
  while (qhead < queue.size()) {
    const VertexId w = queue[qhead++];
    const TimeLabel mu = best[w];
    for (const auto& [t, u] : in[w]) {
      const bool usable = mode == PathMode::Strict ? t < mu : t <= mu;
      if (!usable || u == v) continue;
      if (t > best[u]) {
        best[u] = t;
        queue.push_back(u);
      }
    }
  }
  for (VertexId u = 0; u < n; ++u) {
    if (u == v || best[u] == kBottom) continue;
    out[u] = {TimeMetricEntry::Tag::At, best[u]};
  }
  return out;
}

}  // namespace tdss
