#include "tdss/testkit.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>

namespace tdss {

namespace {

void enumerate_rec(const TemporalGraph& g, VertexId target,
                   std::size_t max_hops, PathMode mode,
                   std::vector<char>& visited, TemporalPathWitness& cur,
                   std::vector<TemporalPathWitness>& out) {
  const VertexId here = cur.vertices.back();
  if (here == target && !cur.labels.empty()) {
    out.push_back(cur);
    return;  // simple paths cannot revisit the target
  }
  if (cur.labels.size() >= max_hops) return;
  for (const auto& [t, w] : g.out(here)) {
    if (visited[w]) continue;
    if (!cur.labels.empty()) {
      const TimeLabel last = cur.labels.back();
      if (mode == PathMode::Strict ? t <= last : t < last) continue;
    }
    visited[w] = 1;
    cur.vertices.push_back(w);
    cur.labels.push_back(t);
    enumerate_rec(g, target, max_hops, mode, visited, cur, out);
    cur.labels.pop_back();
    cur.vertices.pop_back();
    visited[w] = 0;
  }
}

}  // namespace

std::vector<TemporalPathWitness> enumerate_temporal_paths(
    const TemporalGraph& g, VertexId u, VertexId v, std::size_t max_hops,
    PathMode mode) {
  if (u == v) return {{{u}, {}}};
  std::vector<TemporalPathWitness> out;
  std::vector<char> visited(g.vertex_count(), 0);
  visited[u] = 1;
  TemporalPathWitness cur{{u}, {}};
  enumerate_rec(g, v, max_hops, mode, visited, cur, out);
  return out;
}

std::vector<TimeLabel> lifecycle_labels(const TemporalGraph& g) {
  const GraphStats s = stats(g);
  std::vector<TimeLabel> labels;
  for (TimeLabel t = s.t_min; t <= s.t_max; ++t) labels.push_back(t);
  return labels;
}

namespace {

constexpr std::size_t kBruteBudget = 10'000'000;

struct BruteSearch {
  BruteSearch(const TemporalGraph& graph, std::int32_t target)
      : g(graph), d(target) {}

  const TemporalGraph& g;
  std::int32_t d;
  std::vector<TemporalEdge> candidates;
  BitMatrix base_reach;           // reflexive bits set
  std::vector<StaticEdge> deficient;  // base-reachable pairs lacking a direct edge
  std::vector<std::int32_t> cover_index;  // candidate -> deficient index or -1
  std::vector<std::int32_t> cover_count;  // per deficient pair, picks in cur
  std::size_t uncovered = 0;
  std::vector<TemporalEdge> cur;
  std::size_t examined = 0;

  bool feasible() {
    ++examined;
    if (examined > kBruteBudget)
      fail(ErrorCode::TooLarge, "exhaustive search budget exhausted");
    const TemporalGraph augmented = g.with_edges(cur);
    const std::size_t n = g.vertex_count();
    for (VertexId s = 0; s < n; ++s) {
      TemporalSearch search(augmented, s, PathMode::Strict);
      for (VertexId v = 0; v < n; ++v) {
        if (v == s || !base_reach.get(s, v)) continue;
        const std::int32_t hops = search.hops()[v];
        if (hops < 0 || hops > d) return false;
      }
    }
    return true;
  }

  // Combinations of `remaining` candidates drawn from [start, end) in index
  // order; first feasible completion wins.  The d == 1 bound is exact: a
  // base-reachable pair is at distance <= 1 only via a direct edge, so
  // every still-uncovered deficient pair needs its own pick.
  bool extend(std::size_t start, std::size_t remaining) {
    ++examined;
    if (examined > kBruteBudget)
      fail(ErrorCode::TooLarge, "exhaustive search budget exhausted");
    if (d == 1 && uncovered > remaining) return false;
    if (remaining == 0) return feasible();
    for (std::size_t i = start; i + remaining <= candidates.size(); ++i) {
      cur.push_back(candidates[i]);
      const std::int32_t ci = cover_index[i];
      if (ci >= 0 && cover_count[ci]++ == 0) --uncovered;
      if (extend(i + 1, remaining - 1)) return true;  // keep cur as witness
      if (ci >= 0 && --cover_count[ci] == 0) ++uncovered;
      cur.pop_back();
    }
    return false;
  }
};

}  // namespace

BruteMinResult brute_min_tdss(const TemporalGraph& g, std::int32_t d,
                              const std::vector<TimeLabel>& label_universe) {
  if (d < 1) fail(ErrorCode::InvalidTarget, "target diameter must be >= 1");
  const std::size_t n = g.vertex_count();
  if (n > 7)
    fail(ErrorCode::TooLarge, "exhaustive search is limited to 7 vertices");
  std::vector<TimeLabel> universe(label_universe);
  std::sort(universe.begin(), universe.end());
  universe.erase(std::unique(universe.begin(), universe.end()),
                 universe.end());
  if (universe.size() > 5)
    fail(ErrorCode::TooLarge, "exhaustive search is limited to 5 labels");
  for (TimeLabel t : universe)
    if (t < 0) fail(ErrorCode::InvalidLabel, "negative label in universe");

  BruteSearch search(g, d);
  search.base_reach = serial::reach_matrix(g, PathMode::Strict);

  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = 0; v < n; ++v) {
      if (u == v || !search.base_reach.get(u, v)) continue;
      bool direct = false;
      for (const auto& [t, w] : g.out(u)) direct |= w == v;
      if (!direct) search.deficient.push_back({u, v});
    }
  search.uncovered = search.deficient.size();
  search.cover_count.assign(search.deficient.size(), 0);

  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = 0; v < n; ++v) {
      if (u == v) continue;
      for (TimeLabel t : universe) {
        const TemporalEdge e{u, v, t};
        if (g.has_edge(e)) continue;
        search.candidates.push_back(e);
        const auto it = std::find(search.deficient.begin(),
                                  search.deficient.end(), StaticEdge{u, v});
        search.cover_index.push_back(
            it == search.deficient.end()
                ? -1
                : static_cast<std::int32_t>(it - search.deficient.begin()));
      }
    }

  for (std::size_t k = 0; k <= search.candidates.size(); ++k) {
    if (search.extend(0, k)) {
      BruteMinResult result;
      result.witness = search.cur;
      result.sets_examined = search.examined;
      return result;
    }
  }
  fail(ErrorCode::Infeasible, "no candidate set reaches the target diameter");
}

TemporalGraph gen(const GeneratorSpec& spec) {
  using Family = GeneratorSpec::Family;
  std::mt19937_64 rng(spec.seed);

  if (spec.family == Family::TemporalPath) {
    if (spec.n == 0) fail(ErrorCode::Infeasible, "path needs a vertex");
    if (spec.labels.size() + 1 != spec.n)
      fail(ErrorCode::Infeasible, "a path on n vertices needs n-1 labels");
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= spec.n; ++i)
      names.push_back("p" + std::to_string(i));
    std::vector<TemporalEdge> edges;
    for (std::size_t i = 0; i + 1 < spec.n; ++i)
      edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>(i + 1),
                       spec.labels[i]});
    return TemporalGraph(std::move(names), std::move(edges));
  }

  if (spec.family == Family::RandomTemporal) {
    if (spec.n < 2 || spec.t_max < 1)
      fail(ErrorCode::Infeasible, "random graph needs n >= 2 and t_max >= 1");
    const std::size_t capacity =
        spec.n * (spec.n - 1) * static_cast<std::size_t>(spec.t_max);
    if (spec.m > capacity)
      fail(ErrorCode::Infeasible, "more edges requested than distinct triples");
    std::set<TemporalEdge> picked;
    while (picked.size() < spec.m) {
      const VertexId u = static_cast<VertexId>(rng() % spec.n);
      const VertexId v = static_cast<VertexId>(rng() % spec.n);
      if (u == v) continue;
      const TimeLabel t = 1 + static_cast<TimeLabel>(rng() % spec.t_max);
      picked.insert({u, v, t});
    }
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= spec.n; ++i)
      names.push_back("v" + std::to_string(i));
    return TemporalGraph(std::move(names),
                         {picked.begin(), picked.end()});
  }

  // LayeredDAG
  const std::size_t layers = static_cast<std::size_t>(spec.t_max) + 1;
  if (spec.t_max < 1 || spec.n < layers)
    fail(ErrorCode::Infeasible, "layered graph needs one vertex per layer");
  std::vector<std::size_t> width(layers, spec.n / layers);
  for (std::size_t i = 0; i < spec.n % layers; ++i) ++width[i];
  std::vector<std::size_t> offset(layers + 1, 0);
  for (std::size_t i = 0; i < layers; ++i) offset[i + 1] = offset[i] + width[i];

  std::size_t capacity = 0;
  for (std::size_t i = 0; i + 1 < layers; ++i) capacity += width[i] * width[i + 1];
  if (spec.m + 1 < layers || spec.m > capacity)
    fail(ErrorCode::Infeasible, "edge count outside the layered capacity");

  std::set<TemporalEdge> picked;
  for (std::size_t i = 0; i + 1 < layers; ++i)
    picked.insert({static_cast<VertexId>(offset[i]),
                   static_cast<VertexId>(offset[i + 1]),
                   static_cast<TimeLabel>(i + 1)});
  while (picked.size() < spec.m) {
    const std::size_t b = rng() % (layers - 1);
    const VertexId u =
        static_cast<VertexId>(offset[b] + rng() % width[b]);
    const VertexId v =
        static_cast<VertexId>(offset[b + 1] + rng() % width[b + 1]);
    picked.insert({u, v, static_cast<TimeLabel>(b + 1)});
  }
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= spec.n; ++i)
    names.push_back("v" + std::to_string(i));
  return TemporalGraph(std::move(names), {picked.begin(), picked.end()});
}

}  // namespace tdss
