#pragma once

#include <cstdint>
#include <vector>

#include "tdss/core.hpp"
#include "tdss/reachability.hpp"
#include "tdss/shortcut.hpp"

namespace tdss {

// Interior path vertex whose outgoing label does not continue the incoming
// one: out <= in under Strict traversal, out < in under NonStrict.
struct TemporalBreak {
  VertexId vertex = 0;
  TimeLabel in_label = 0;
  TimeLabel out_label = 0;

  friend bool operator==(const TemporalBreak&, const TemporalBreak&) = default;
};

// Maximal break-free stretch of a temporal path; break vertices belong to
// both neighbouring segments.
struct PathSegment {
  std::vector<VertexId> vertices;   // global ids, in path order
  std::vector<TemporalEdge> edges;  // one per consecutive vertex pair
};

// Labeled shortcut edges over the original temporal graph.
using TemporalShortcutSet = std::vector<TemporalEdge>;

// Vertices of g in path order.  Throws NotAPath when footprint(g) is not a
// simple directed path covering every vertex, NotSimple when a footprint arc
// carries more than one label.
std::vector<VertexId> path_order(const TemporalGraph& g);

std::vector<TemporalBreak> find_temporal_breaks(const TemporalGraph& g,
                                                PathMode mode);

// k breaks -> k + 1 segments.  Break vertices must belong to g (membership
// is the only validation, matching how breaks are produced).
std::vector<PathSegment> partition_at_breaks(
    const TemporalGraph& g, const std::vector<TemporalBreak>& breaks);

// Segment as its own temporal graph (names kept, ids are path positions).
TemporalGraph segment_graph(const TemporalGraph& g, const PathSegment& seg);

// Footprint of a segment: the static path on its positions 0..k.
StaticGraph segment_footprint(const TemporalGraph& g, const PathSegment& seg);

// Lifts static shortcuts over segment positions to temporal edges: (i, j)
// receives the label of the segment edge leaving position i, which every
// connection through i can still use.  Backward or self pairs -> NotForward.
TemporalShortcutSet assign_labels(const PathSegment& seg, const ShortcutSet& s);

struct PathMethod {
  enum class Kind { Greedy, Random };
  Kind kind = Kind::Random;
  std::uint64_t seed = 0;
  double c = 2.0;  // Random only
};

struct PathShortcutResult {
  TemporalShortcutSet tdss;
  DiameterReport report;           // against the original graph
  std::vector<TemporalBreak> breaks;
  std::size_t segment_count = 0;
};

// Break-partition pipeline: static construction per segment footprint, label
// lift, then a base-diameter report of g + tdss.  Strict mode throughout.
// Segment seeds derive from method.seed + segment index.
PathShortcutResult shortcut_temporal_path(const TemporalGraph& g,
                                          std::int32_t d, PathMethod method);

}  // namespace tdss
