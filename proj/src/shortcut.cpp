#include "tdss/shortcut.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <random>

#include "tdss/static_algos.hpp"

namespace tdss {

ShortcutSet random_shortcut_set(const StaticGraph& g, std::int32_t d,
                                std::uint64_t seed, double c) {
  if (d < 1)
    fail(ErrorCode::InvalidTarget, "target diameter must be at least 1");
  const std::size_t n = g.vertex_count();
  if (n == 0) return {};

  const double raw =
      c * static_cast<double>(n) * std::log(static_cast<double>(std::max<std::size_t>(n, 2))) / d;
  const std::size_t budget =
      std::min(n, static_cast<std::size_t>(std::ceil(raw)));

  // Partial Fisher-Yates over the identity permutation; mt19937_64 keeps the
  // draw reproducible across platforms.
  std::mt19937_64 rng(seed);
  std::vector<VertexId> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  for (std::size_t i = 0; i < budget; ++i) {
    const std::size_t j = i + rng() % (n - i);
    std::swap(pool[i], pool[j]);
  }
  std::vector<VertexId> sampled(pool.begin(), pool.begin() + budget);
  std::sort(sampled.begin(), sampled.end());

  std::vector<char> in_sample(n, 0);
  for (VertexId v : sampled) in_sample[v] = 1;

  // Reachability is only needed from sampled sources; one plain BFS each.
  ShortcutSet out;
#pragma omp parallel
  {
    std::vector<std::int32_t> mark(n, -1);
    std::vector<VertexId> queue;
    ShortcutSet local;
#pragma omp for schedule(dynamic) nowait
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(sampled.size());
         ++i) {
      const VertexId s = sampled[i];
      queue.assign(1, s);
      mark[s] = static_cast<std::int32_t>(i);
      std::size_t qhead = 0;
      while (qhead < queue.size()) {
        const VertexId u = queue[qhead++];
        for (VertexId v : g.out(u)) {
          if (mark[v] == static_cast<std::int32_t>(i)) continue;
          mark[v] = static_cast<std::int32_t>(i);
          queue.push_back(v);
          if (in_sample[v] && v != s && !g.has_edge(s, v))
            local.push_back({s, v});
        }
      }
    }
#pragma omp critical
    out.insert(out.end(), local.begin(), local.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

ShortcutSet greedy_shortcut_set(const StaticGraph& g, std::int32_t d) {
  if (d < 4)
    fail(ErrorCode::TargetTooSmall,
         "greedy construction needs a target of at least 4");
  const StaticGraph reduction = transitive_reduction(g);  // throws CyclicInput
  const std::size_t n = g.vertex_count();

  std::vector<std::vector<VertexId>> out(n), in(n);
  for (const auto& e : reduction.edges()) {
    out[e.tail].push_back(e.head);
    in[e.head].push_back(e.tail);
  }

  const std::int32_t offset = d / 4;  // floor; 1-indexed path positions
  ShortcutSet shortcuts;

  std::vector<std::int32_t> dist(n);
  std::vector<VertexId> queue;
  auto bfs_from = [&](VertexId s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    queue.assign(1, s);
    std::size_t qhead = 0;
    while (qhead < queue.size()) {
      const VertexId u = queue[qhead++];
      for (VertexId v : out[u]) {
        if (dist[v] >= 0) continue;
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  };

  const std::size_t iteration_cap = n * n + 1;
  for (std::size_t iter = 0; iter < iteration_cap; ++iter) {
    // first violating pair in lexicographic (u, v) order
    VertexId su = 0, sv = 0;
    bool found = false;
    for (VertexId u = 0; u < n && !found; ++u) {
      bfs_from(u);
      for (VertexId v = 0; v < n; ++v) {
        if (v != u && dist[v] > d) {
          su = u;
          sv = v;
          found = true;
          break;
        }
      }
    }
    if (!found) return shortcuts;

    // dist still holds the BFS tree of su; extract a minimum-hop path
    // su -> sv, taking the lowest-index predecessor at every step
    std::vector<VertexId> path{sv};
    VertexId cur = sv;
    while (cur != su) {
      VertexId best = cur;
      for (VertexId p : in[cur])
        if (dist[p] == dist[cur] - 1 && (best == cur || p < best)) best = p;
      path.push_back(best);
      cur = best;
    }
    std::reverse(path.begin(), path.end());

    const std::size_t t = path.size();
    const VertexId a = path[offset - 1];
    const VertexId b = path[t - offset - 1];
    shortcuts.push_back({a, b});
    out[a].push_back(b);
    in[b].push_back(a);
    std::sort(out[a].begin(), out[a].end());
    std::sort(in[b].begin(), in[b].end());
  }
  fail(ErrorCode::Infeasible, "greedy construction failed to converge");
}

ShortcutVerdict verify_shortcut_set(const StaticGraph& g, const ShortcutSet& s,
                                    std::int32_t d) {
  ShortcutVerdict verdict;
  const BitMatrix reach = static_reach(g);
  std::vector<StaticEdge> usable;
  usable.reserve(s.size());
  for (const auto& e : s) {
    if (e.tail == e.head || !reach.get(e.tail, e.head))
      verdict.violations.push_back(e);
    if (e.tail != e.head) usable.push_back(e);
  }
  verdict.diameter = static_diameter(g.with_edges(usable));
  verdict.ok = verdict.violations.empty() &&
               (!verdict.diameter || *verdict.diameter <= d);
  return verdict;
}

}  // namespace tdss
