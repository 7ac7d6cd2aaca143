#pragma once

#include <cstdint>
#include <vector>

#include "tdss/core.hpp"
#include "tdss/reachability.hpp"

namespace tdss {

// A concrete temporal path: k edges over k+1 distinct vertices.
struct TemporalPathWitness {
  std::vector<VertexId> vertices;
  std::vector<TimeLabel> labels;

  friend bool operator==(const TemporalPathWitness&,
                         const TemporalPathWitness&) = default;
};

// Exhaustive enumeration of simple temporal paths u -> v with at most
// max_hops edges, in DFS order over label-sorted adjacency.  Independent of
// the search-based reachability code; used as its ground truth.
std::vector<TemporalPathWitness> enumerate_temporal_paths(
    const TemporalGraph& g, VertexId u, VertexId v, std::size_t max_hops,
    PathMode mode);

struct BruteMinResult {
  // Lexicographically first minimum-cardinality witness, as (tail, head,
  // label) triples ordered by the candidate enumeration.
  std::vector<TemporalEdge> witness;
  std::size_t sets_examined = 0;
};

// Exact minimum temporal shortcut set: smallest set of candidate edges
// (ordered pairs x label_universe, existing edges excluded) whose addition
// brings the base diameter to at most d.  Candidate sets are enumerated in
// cardinality-lexicographic order, so the first hit is a minimum and the
// witness is reproducible.  Guards: n <= 7, at most 5 labels, d >= 1, and
// the enumeration aborts with TooLarge beyond ~1e7 examined sets.
BruteMinResult brute_min_tdss(const TemporalGraph& g, std::int32_t d,
                              const std::vector<TimeLabel>& label_universe);

// Label universe default for brute_min_tdss: the lifecycle [t_min, t_max].
std::vector<TimeLabel> lifecycle_labels(const TemporalGraph& g);

struct GeneratorSpec {
  enum class Family { TemporalPath, RandomTemporal, LayeredDAG };
  Family family = Family::RandomTemporal;
  std::size_t n = 0;
  std::size_t m = 0;          // ignored by TemporalPath
  TimeLabel t_max = 1;        // ignored by TemporalPath
  std::uint64_t seed = 0;
  std::vector<TimeLabel> labels;  // TemporalPath only: exactly n-1 labels
};

// Deterministic in the full spec.  TemporalPath names vertices p1..pn and
// lays labels[i] on (p_i, p_{i+1}).  RandomTemporal draws m distinct
// (u, v, t) triples, t in [1, t_max].  LayeredDAG builds t_max+1 layers with
// a backbone edge per boundary (label = boundary index) plus random extras.
// Throws Infeasible when the request cannot be met.
TemporalGraph gen(const GeneratorSpec& spec);

}  // namespace tdss
