#pragma once

#include <vector>

#include "tdss/core.hpp"
#include "tdss/reachability.hpp"

namespace tdss {

// Temporal analogues of the transitive closure.  None of them preserves
// reachability in general: labels added for one connection can open up
// continuations that did not exist before.
enum class ClosureKind {
  FullLifecycle,     // every lifecycle label on every reachable pair
  EarliestArrival,   // one edge per pair, labeled with the earliest arrival
  LatestDeparture,   // one edge per pair, labeled with the latest departure
};

// Strict-mode closure; existing edges are kept, self pairs never added.
TemporalGraph temporal_closure(const TemporalGraph& g, ClosureKind kind);

struct ReachabilityDelta {
  // Ordered pairs reachable in `after` but not in `before` (before's ids).
  std::vector<StaticEdge> added_pairs;
  // One minimum-hop strict path per added pair, as its edge sequence; each
  // necessarily uses at least one edge absent from `before`.
  std::vector<std::vector<TemporalEdge>> witnesses;
};

// `after` must keep before's vertex set and extend its edge set.
ReachabilityDelta reachability_delta(const TemporalGraph& before,
                                     const TemporalGraph& after);

}  // namespace tdss
