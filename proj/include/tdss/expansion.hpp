#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "tdss/core.hpp"
#include "tdss/path_tdss.hpp"
#include "tdss/reachability.hpp"
#include "tdss/shortcut.hpp"

namespace tdss {

enum class Side { In, Out };

struct TimedVertex {
  VertexId base = 0;
  TimeLabel time = 0;
  Side side = Side::In;

  friend bool operator==(const TimedVertex&, const TimedVertex&) = default;
};

// Static expansion of a temporal graph: per base vertex one gadget with
// in/out copies for every t in [t_min, t_max+1].  Gadget edges connect
// v@t.in to v@t'.out for all t' >= t (waiting), cross edges realize
// (v, w, t) as v@t.out -> w@(t+1).in.  Always a DAG.
class Expansion {
 public:
  Expansion(StaticGraph graph, std::vector<TimedVertex> timed, TimeLabel t_min,
            TimeLabel t_max, std::vector<StaticEdge> gadget,
            std::vector<StaticEdge> cross)
      : graph_(std::move(graph)), timed_(std::move(timed)), t_min_(t_min),
        t_max_(t_max), gadget_edges_(std::move(gadget)),
        cross_edges_(std::move(cross)) {}

  const StaticGraph& graph() const { return graph_; }
  const TimedVertex& timed(VertexId v) const { return timed_[v]; }
  TimeLabel t_min() const { return t_min_; }
  TimeLabel t_max() const { return t_max_; }
  const std::vector<StaticEdge>& gadget_edges() const { return gadget_edges_; }
  const std::vector<StaticEdge>& cross_edges() const { return cross_edges_; }

  std::size_t slots() const {
    return static_cast<std::size_t>(t_max_ - t_min_ + 2);
  }
  VertexId index_of(VertexId base, TimeLabel t, Side side) const {
    const std::size_t slot = static_cast<std::size_t>(t - t_min_);
    return static_cast<VertexId>((base * slots() + slot) * 2 +
                                 (side == Side::Out ? 1 : 0));
  }

 private:
  StaticGraph graph_;
  std::vector<TimedVertex> timed_;
  TimeLabel t_min_;
  TimeLabel t_max_;
  std::vector<StaticEdge> gadget_edges_;
  std::vector<StaticEdge> cross_edges_;
};

// Throws NoEdges for an edgeless graph (no lifecycle to expand).
Expansion build_expansion(const TemporalGraph& g);

struct ExpansionDiameterCheck {
  std::int32_t temporal_diameter = 0;  // k, of the original graph
  std::int32_t static_diameter = 0;    // K, of the expansion
  bool ratio_holds = false;            // K == 2k + 1
};

ExpansionDiameterCheck expansion_diameter_check(const TemporalGraph& g);

// Shortcut edge between timed vertices, pulled back to the original graph.
// Same-gadget edges carry no temporal meaning: valid waiting edges
// (in -> out, non-decreasing time) yield nullopt, any other same-base shape
// throws MalformedEdge.  Cross-gadget (u@tu -> w@tw) becomes
// (base(u), base(w), tu).
std::optional<TemporalEdge> translate_edge(const Expansion& x, StaticEdge e);

struct TranslationLedger {
  std::size_t new_edges = 0;
  std::size_t duplicate_hits = 0;   // same translation seen again
  std::size_t existing_hits = 0;    // translation already an edge of g
  std::size_t skipped_gadget_edges = 0;
};

struct TranslationResult {
  TemporalGraph augmented;   // g plus the new translations
  TemporalShortcutSet added;
  TranslationLedger ledger;
};

// Pulls a whole shortcut set back onto the original graph.  Every member of
// s must be a closure edge of x.graph() (InvalidShortcut otherwise).
// Translations are processed sorted by (tail, head, label) and first-wins;
// every same-base shortcut counts as skipped (a gadget never leaves its
// base vertex).
TranslationResult translate_graph(const TemporalGraph& g, const Expansion& x,
                                  const ShortcutSet& s);

enum class ExpansionMethod { Greedy, Random };

struct ExpansionShortcutResult {
  TemporalShortcutSet tdss;
  DiameterReport report;                    // against the original graph
  TranslationLedger ledger;
  std::size_t static_shortcut_count = 0;    // |S| on the expansion
  std::optional<std::int32_t> expansion_diameter;  // of expansion + S
};

ExpansionShortcutResult shortcut_via_expansion(const TemporalGraph& g,
                                               std::int32_t d,
                                               ExpansionMethod method,
                                               std::uint64_t seed = 0,
                                               double c = 2.0);

// Graphviz rendering: gadget edges dashed, cross edges solid, shortcut
// edges (if any) red and thick.
void write_dot(std::ostream& out, const Expansion& x,
               const ShortcutSet& shortcuts = {});

}  // namespace tdss
