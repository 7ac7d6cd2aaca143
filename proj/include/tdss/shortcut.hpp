#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tdss/core.hpp"

namespace tdss {

// Closure edges added on top of a static host graph.  Invariant: every pair
// (u, v) lies in transitive_closure(host) and is not an existing host edge.
using ShortcutSet = std::vector<StaticEdge>;

// Sampling construction: draws min(n, ceil(c * n * ln(max(n,2)) / d)) distinct
// vertices with a seeded generator and returns every closure pair among them,
// minus existing edges.  Deterministic in (seed, c).  Throws InvalidTarget
// when d < 1.
ShortcutSet random_shortcut_set(const StaticGraph& g, std::int32_t d,
                                std::uint64_t seed, double c = 2.0);

// Distance-violation repair on the transitive reduction: repeatedly take the
// first pair (u, v) in lexicographic vertex-index order with
// dist(u, v) > d, extract the minimum-hop path (lowest-index predecessor
// tie-break) <v_1 .. v_t>, and add the shortcut (v_{floor(d/4)},
// v_{t-floor(d/4)}), 1-indexed.  Requires a DAG (CyclicInput) and d >= 4
// (TargetTooSmall).
ShortcutSet greedy_shortcut_set(const StaticGraph& g, std::int32_t d);

struct ShortcutVerdict {
  bool ok = false;
  // static_diameter(g + s); nullopt when the union has no reachable pair.
  std::optional<std::int32_t> diameter;
  // members of s that are not closure edges of g
  std::vector<StaticEdge> violations;
};

// ok iff every shortcut is a closure edge of g and the achieved diameter is
// at most d (an undefined diameter never violates a target).
ShortcutVerdict verify_shortcut_set(const StaticGraph& g, const ShortcutSet& s,
                                    std::int32_t d);

}  // namespace tdss
