#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tdss/bitmatrix.hpp"
#include "tdss/core.hpp"

namespace tdss {

// Strict: labels along a path strictly increase. NonStrict: non-decreasing.
enum class PathMode { Strict, NonStrict };

inline constexpr std::int32_t kUnreachable = -1;

struct DistanceMap {
  VertexId source = 0;
  // Minimum hop counts; kUnreachable where no temporal path exists,
  // 0 at the source itself.
  std::vector<std::int32_t> hops;
};

// Single-source search over (vertex, minimal next usable label) states.
// Keeps enough bookkeeping to reconstruct one minimum-hop witness path.
class TemporalSearch {
 public:
  TemporalSearch(const TemporalGraph& g, VertexId source, PathMode mode);

  VertexId source() const { return source_; }
  const std::vector<std::int32_t>& hops() const { return hops_; }
  bool reaches(VertexId v) const { return hops_[v] >= 0; }

  // Minimum over all temporal paths source -> v of (last label + 1), i.e.
  // the earliest arrival time.  Meaningless for v == source / unreachable v.
  TimeLabel earliest_arrival(VertexId v) const;

  // One minimum-hop temporal path source -> v, as its edge sequence.
  std::optional<std::vector<TemporalEdge>> path_to(VertexId v) const;

 private:
  struct State {
    VertexId vertex;
    TimeLabel need;      // minimal label the next edge may carry
    std::int32_t prev;   // index of predecessor state, -1 at the source
    std::int32_t depth;  // edges on the chain from the source
    TemporalEdge via;    // edge taken into this state
  };

  VertexId source_;
  PathMode mode_;
  std::vector<std::int32_t> hops_;
  std::vector<TimeLabel> best_need_;
  std::vector<std::int32_t> first_state_;  // state that set hops_[v]
  std::vector<State> states_;
};

DistanceMap temporal_distances(const TemporalGraph& g, VertexId source,
                               PathMode mode);

// Boolean reachability over all ordered pairs; reflexive bits are set.
BitMatrix reach_matrix(const TemporalGraph& g, PathMode mode);

// Max finite hop distance over ordered pairs u != v; nullopt when no such
// pair is reachable.
std::optional<std::int32_t> temporal_diameter(const TemporalGraph& g,
                                              PathMode mode);

struct DiameterReport {
  // Max hop distance over pairs reachable in the query graph itself.
  std::optional<std::int32_t> diameter;
  std::size_t reachable_pairs = 0;  // ordered pairs u != v in the query graph
  // Max query-graph distance over the pairs reachable in the *base* graph.
  std::optional<std::int32_t> base_diameter;
  // Ordered pairs reachable in the query graph but not in the base graph.
  std::vector<StaticEdge> new_pairs;
};

// `augmented` must share base's vertex set (names) and carry a superset of
// its edges; throws VertexSetMismatch / NotAugmentation otherwise.  Vertex
// ids in the report follow base's indexing.
DiameterReport base_diameter(const TemporalGraph& base,
                             const TemporalGraph& augmented, PathMode mode);

enum class TimeMetric { EarliestArrival, LatestDeparture };

struct TimeMetricEntry {
  enum class Tag { Source, Unreachable, At };
  Tag tag = Tag::Unreachable;
  TimeLabel t = 0;

  friend bool operator==(const TimeMetricEntry&, const TimeMetricEntry&) = default;
};

// EarliestArrival: per target w, min over paths v -> w of (last label + 1).
// LatestDeparture: per source u, max over paths u -> v of the first label.
// Entry for v itself is tagged Source.
std::vector<TimeMetricEntry> time_metrics(const TemporalGraph& g, VertexId v,
                                          TimeMetric metric, PathMode mode);

namespace serial {
BitMatrix reach_matrix(const TemporalGraph& g, PathMode mode);
std::optional<std::int32_t> temporal_diameter(const TemporalGraph& g,
                                              PathMode mode);
}  // namespace serial

}  // namespace tdss
