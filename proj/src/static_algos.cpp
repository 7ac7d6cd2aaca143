#include "tdss/static_algos.hpp"

#include <algorithm>
#include <bit>

namespace tdss {

namespace {

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

BitMatrix adjacency_bits(const StaticGraph& g) {
  const std::size_t n = g.vertex_count();
  BitMatrix adj(n, n);
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v : g.out(u)) adj.set(u, v);
  return adj;
}

// Level-by-level BFS where each frontier expansion ORs whole adjacency rows.
// Fills `visited` with everything reachable via a non-empty path (so `s`
// itself appears only when it lies on a cycle).  The returned eccentricity
// is the max level holding a vertex other than s, -1 when there is none.
std::int32_t bitset_bfs(const BitMatrix& adj, VertexId s,
                        std::vector<std::uint64_t>& visited,
                        std::vector<std::uint64_t>& frontier,
                        std::vector<std::uint64_t>& next) {
  const std::size_t words = adj.words_per_row();
  std::fill(visited.begin(), visited.end(), 0);
  const std::uint64_t* row = adj.row(s);
  std::copy(row, row + words, frontier.begin());
  const std::size_t sw = s >> 6;
  const std::uint64_t sbit = std::uint64_t{1} << (s & 63);
  std::int32_t ecc = -1;
  for (std::int32_t level = 1;; ++level) {
    bool any = false;
    bool any_other = false;
    for (std::size_t w = 0; w < words; ++w) {
      frontier[w] &= ~visited[w];
      if (frontier[w]) {
        any = true;
        if (w != sw || (frontier[w] & ~sbit)) any_other = true;
      }
    }
    if (!any) break;
    if (any_other) ecc = level;
    std::fill(next.begin(), next.end(), 0);
    for (std::size_t w = 0; w < words; ++w) {
      visited[w] |= frontier[w];
      std::uint64_t bits = frontier[w];
      while (bits) {
        const std::size_t v = (w << 6) + std::countr_zero(bits);
        bits &= bits - 1;
        const std::uint64_t* r = adj.row(v);
        for (std::size_t x = 0; x < words; ++x) next[x] |= r[x];
      }
    }
    frontier.swap(next);
  }
  return ecc;
}

BitMatrix static_reach_impl(const StaticGraph& g, bool parallel) {
  const std::size_t n = g.vertex_count();
  const BitMatrix adj = adjacency_bits(g);
  BitMatrix reach(n, n);
  const std::size_t words = adj.words_per_row();
  for_sources(n, parallel, [&](VertexId s) {
    std::vector<std::uint64_t> visited(words), frontier(words), next(words);
    bitset_bfs(adj, s, visited, frontier, next);
    std::uint64_t* out = reach.mutable_row(s);
    std::copy(visited.begin(), visited.end(), out);
    out[s >> 6] &= ~(std::uint64_t{1} << (s & 63));
  });
  return reach;
}

std::optional<std::int32_t> static_diameter_impl(const StaticGraph& g,
                                                 bool parallel) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return std::nullopt;
  const BitMatrix adj = adjacency_bits(g);
  const std::size_t words = adj.words_per_row();
  std::vector<std::int32_t> ecc(n, -1);
  for_sources(n, parallel, [&](VertexId s) {
    std::vector<std::uint64_t> visited(words), frontier(words), next(words);
    ecc[s] = bitset_bfs(adj, s, visited, frontier, next);
  });
  std::int32_t d = -1;
  for (auto e : ecc) d = std::max(d, e);
  if (d < 0) return std::nullopt;
  return d;
}

std::optional<std::int32_t> serial_static_diameter(const StaticGraph& g) {
  const std::size_t n = g.vertex_count();
  std::int32_t best = -1;
  std::vector<std::int32_t> dist(n);
  std::vector<VertexId> queue;
  for (VertexId s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    queue.assign(1, s);
    std::size_t qhead = 0;
    while (qhead < queue.size()) {
      VertexId u = queue[qhead++];
      for (VertexId v : g.out(u)) {
        if (dist[v] >= 0) continue;
        dist[v] = dist[u] + 1;
        queue.push_back(v);
        if (v != s) best = std::max(best, dist[v]);
      }
    }
  }
  if (best < 0) return std::nullopt;
  return best;
}

std::vector<StaticEdge> pairs_from_reach(const BitMatrix& reach) {
  std::vector<StaticEdge> pairs;
  const std::size_t n = reach.rows();
  for (VertexId u = 0; u < n; ++u) {
    const std::uint64_t* row = reach.row(u);
    for (std::size_t w = 0; w < reach.words_per_row(); ++w) {
      std::uint64_t bits = row[w];
      while (bits) {
        const std::size_t v = (w << 6) + std::countr_zero(bits);
        bits &= bits - 1;
        pairs.push_back({u, static_cast<VertexId>(v)});
      }
    }
  }
  return pairs;
}

}  // namespace

StaticDistanceMap static_distances(const StaticGraph& g, VertexId source) {
  const std::size_t n = g.vertex_count();
  if (source >= n)
    fail(ErrorCode::UnknownVertex,
         "source id " + std::to_string(source) + " out of range");
  StaticDistanceMap map{source, std::vector<std::int32_t>(n, -1)};
  map.hops[source] = 0;
  std::vector<VertexId> queue{source};
  std::size_t qhead = 0;
  while (qhead < queue.size()) {
    VertexId u = queue[qhead++];
    for (VertexId v : g.out(u)) {
      if (map.hops[v] >= 0) continue;
      map.hops[v] = map.hops[u] + 1;
      queue.push_back(v);
    }
  }
  return map;
}

std::optional<std::vector<VertexId>> static_shortest_path(const StaticGraph& g,
                                                          VertexId source,
                                                          VertexId target) {
  const auto dist = static_distances(g, source).hops;
  if (dist[target] < 0) return std::nullopt;
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<VertexId>> in(n);
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v : g.out(u)) in[v].push_back(u);

  std::vector<VertexId> path{target};
  VertexId cur = target;
  while (cur != source) {
    VertexId best = cur;
    for (VertexId p : in[cur])
      if (dist[p] == dist[cur] - 1 && (best == cur || p < best)) best = p;
    path.push_back(best);
    cur = best;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

std::optional<std::int32_t> static_diameter(const StaticGraph& g) {
  return static_diameter_impl(g, true);
}

BitMatrix static_reach(const StaticGraph& g) {
  return static_reach_impl(g, true);
}

std::vector<StaticEdge> transitive_closure(const StaticGraph& g) {
  return pairs_from_reach(static_reach_impl(g, true));
}

std::optional<std::vector<VertexId>> topological_order(const StaticGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> indeg(n, 0);
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v : g.out(u)) ++indeg[v];
  std::vector<VertexId> order;
  order.reserve(n);
  for (VertexId v = 0; v < n; ++v)
    if (indeg[v] == 0) order.push_back(v);
  for (std::size_t i = 0; i < order.size(); ++i)
    for (VertexId v : g.out(order[i]))
      if (--indeg[v] == 0) order.push_back(v);
  if (order.size() != n) return std::nullopt;
  return order;
}

StaticGraph transitive_reduction(const StaticGraph& g) {
  if (!topological_order(g))
    fail(ErrorCode::CyclicInput, "transitive reduction needs a DAG");
  const BitMatrix reach = static_reach(g);
  std::vector<StaticEdge> kept;
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    for (VertexId v : g.out(u)) {
      bool redundant = false;
      const std::uint64_t* row = reach.row(u);
      for (std::size_t w = 0; w < reach.words_per_row() && !redundant; ++w) {
        std::uint64_t bits = row[w];
        while (bits) {
          const std::size_t x = (w << 6) + std::countr_zero(bits);
          bits &= bits - 1;
          if (x != v && reach.get(x, v)) {
            redundant = true;
            break;
          }
        }
      }
      if (!redundant) kept.push_back({u, v});
    }
  }
  return StaticGraph(g.names(), std::move(kept));
}

namespace serial {

std::optional<std::int32_t> static_diameter(const StaticGraph& g) {
  return serial_static_diameter(g);
}

BitMatrix static_reach(const StaticGraph& g) {
  return static_reach_impl(g, false);
}

std::vector<StaticEdge> transitive_closure(const StaticGraph& g) {
  return pairs_from_reach(static_reach_impl(g, false));
}

}  // namespace serial

}  // namespace tdss
