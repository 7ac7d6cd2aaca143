#include "tdss/expansion.hpp"

#include <algorithm>
#include <ostream>
#include <string>

#include "tdss/static_algos.hpp"

namespace tdss {

Expansion build_expansion(const TemporalGraph& g) {
  const GraphStats st = stats(g);  // throws NoEdges
  const std::size_t slots = static_cast<std::size_t>(st.t_max - st.t_min + 2);
  const std::size_t n = g.vertex_count();

  std::vector<TimedVertex> timed;
  std::vector<std::string> names;
  timed.reserve(2 * n * slots);
  names.reserve(2 * n * slots);
  for (VertexId b = 0; b < n; ++b) {
    for (std::size_t s = 0; s < slots; ++s) {
      const TimeLabel t = st.t_min + static_cast<TimeLabel>(s);
      for (Side side : {Side::In, Side::Out}) {
        timed.push_back({b, t, side});
        names.push_back(g.name(b) + "@" + std::to_string(t) +
                        (side == Side::In ? ".in" : ".out"));
      }
    }
  }

  auto index = [&](VertexId base, TimeLabel t, Side side) {
    const std::size_t slot = static_cast<std::size_t>(t - st.t_min);
    return static_cast<VertexId>((base * slots + slot) * 2 +
                                 (side == Side::Out ? 1 : 0));
  };

  std::vector<StaticEdge> gadget;
  for (VertexId b = 0; b < n; ++b)
    for (TimeLabel t = st.t_min; t <= st.t_max + 1; ++t)
      for (TimeLabel u = t; u <= st.t_max + 1; ++u)
        gadget.push_back({index(b, t, Side::In), index(b, u, Side::Out)});

  std::vector<StaticEdge> cross;
  cross.reserve(g.edge_count());
  for (const auto& e : g.edges())
    cross.push_back(
        {index(e.tail, e.label, Side::Out), index(e.head, e.label + 1, Side::In)});

  std::vector<StaticEdge> all = gadget;
  all.insert(all.end(), cross.begin(), cross.end());
  StaticGraph graph(std::move(names), std::move(all));
  return Expansion(std::move(graph), std::move(timed), st.t_min, st.t_max,
                   std::move(gadget), std::move(cross));
}

ExpansionDiameterCheck expansion_diameter_check(const TemporalGraph& g) {
  const Expansion x = build_expansion(g);
  ExpansionDiameterCheck check;
  check.temporal_diameter = *temporal_diameter(g, PathMode::Strict);
  check.static_diameter = *static_diameter(x.graph());
  check.ratio_holds =
      check.static_diameter == 2 * check.temporal_diameter + 1;
  return check;
}

std::optional<TemporalEdge> translate_edge(const Expansion& x, StaticEdge e) {
  const TimedVertex& u = x.timed(e.tail);
  const TimedVertex& w = x.timed(e.head);
  if (u.base == w.base) {
    if (u.side == Side::In && w.side == Side::Out && w.time >= u.time)
      return std::nullopt;  // waiting inside the gadget
    fail(ErrorCode::MalformedEdge,
         "same-base edge is not a waiting edge: " +
             x.graph().name(e.tail) + " -> " + x.graph().name(e.head));
  }
  return TemporalEdge{u.base, w.base, u.time};
}

TranslationResult translate_graph(const TemporalGraph& g, const Expansion& x,
                                  const ShortcutSet& s) {
  if (!s.empty()) {
    const BitMatrix reach = static_reach(x.graph());
    for (const auto& e : s)
      if (!reach.get(e.tail, e.head))
        fail(ErrorCode::InvalidShortcut,
             x.graph().name(e.tail) + " -> " + x.graph().name(e.head) +
                 " is not a closure edge of the expansion");
  }

  TranslationLedger ledger;
  std::vector<TemporalEdge> translated;
  translated.reserve(s.size());
  for (const auto& e : s) {
    const TimedVertex& u = x.timed(e.tail);
    const TimedVertex& w = x.timed(e.head);
    if (u.base == w.base) {
      ++ledger.skipped_gadget_edges;
      continue;
    }
    translated.push_back({u.base, w.base, u.time});
  }
  std::sort(translated.begin(), translated.end());

  TemporalShortcutSet added;
  for (std::size_t i = 0; i < translated.size(); ++i) {
    if (i > 0 && translated[i] == translated[i - 1]) {
      ++ledger.duplicate_hits;
    } else if (g.has_edge(translated[i])) {
      ++ledger.existing_hits;
    } else {
      ++ledger.new_edges;
      added.push_back(translated[i]);
    }
  }
  TemporalGraph augmented = g.with_edges(added);
  return {std::move(augmented), std::move(added), ledger};
}

ExpansionShortcutResult shortcut_via_expansion(const TemporalGraph& g,
                                               std::int32_t d,
                                               ExpansionMethod method,
                                               std::uint64_t seed, double c) {
  const Expansion x = build_expansion(g);
  const auto current = static_diameter(x.graph());

  // The constructor runs only when the expansion actually violates the
  // target; an expansion already at diameter <= d needs no shortcuts.
  ShortcutSet s;
  if (current && *current > d)
    s = method == ExpansionMethod::Greedy
            ? greedy_shortcut_set(x.graph(), d)
            : random_shortcut_set(x.graph(), d, seed, c);

  ExpansionShortcutResult result;
  result.static_shortcut_count = s.size();
  result.expansion_diameter =
      s.empty() ? current : static_diameter(x.graph().with_edges(s));
  auto translation = translate_graph(g, x, s);
  result.tdss = std::move(translation.added);
  result.ledger = translation.ledger;
  result.report = base_diameter(g, translation.augmented, PathMode::Strict);
  return result;
}

void write_dot(std::ostream& out, const Expansion& x,
               const ShortcutSet& shortcuts) {
  const StaticGraph& g = x.graph();
  out << "digraph expansion {\n  rankdir=LR;\n  node [shape=box, fontsize=10];\n";
  for (const auto& e : x.gadget_edges())
    out << "  \"" << g.name(e.tail) << "\" -> \"" << g.name(e.head)
        << "\" [style=dashed];\n";
  for (const auto& e : x.cross_edges())
    out << "  \"" << g.name(e.tail) << "\" -> \"" << g.name(e.head) << "\";\n";
  for (const auto& e : shortcuts)
    out << "  \"" << g.name(e.tail) << "\" -> \"" << g.name(e.head)
        << "\" [color=red, penwidth=2.0];\n";
  out << "}\n";
}

}  // namespace tdss
