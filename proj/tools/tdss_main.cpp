// tdss: analyze temporal graphs and construct/verify temporal diameter
// shortcut sets.  Exit codes: 0 success, 1 generic failure (including a
// missed target), 2 parse, 3 structural precondition, 4 parameter
// precondition.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tdss/closure_lab.hpp"
#include "tdss/expansion.hpp"
#include "tdss/io.hpp"
#include "tdss/path_tdss.hpp"
#include "tdss/reachability.hpp"
#include "tdss/testkit.hpp"

namespace {

using nlohmann::json;
using namespace tdss;

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
      return 2;
    case ErrorCode::InvalidTarget:
    case ErrorCode::TargetTooSmall:
    case ErrorCode::TooLarge:
    case ErrorCode::Infeasible:
      return 4;
    case ErrorCode::InvalidLabel:
    case ErrorCode::SelfLoop:
    case ErrorCode::NoEdges:
    case ErrorCode::UnknownVertex:
    case ErrorCode::VertexSetMismatch:
    case ErrorCode::NotAugmentation:
    case ErrorCode::CyclicInput:
    case ErrorCode::NotAPath:
    case ErrorCode::NotSimple:
    case ErrorCode::NotForward:
    case ErrorCode::MalformedEdge:
    case ErrorCode::InvalidShortcut:
      return 3;
  }
  return 1;
}

TemporalGraph load(const std::string& path) {
  return path == "-" ? read_tg(std::cin) : read_tg_file(path);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::ParseError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string fmt_opt(const std::optional<std::int32_t>& v) {
  return v ? std::to_string(*v) : std::string("undefined");
}

json opt_json(const std::optional<std::int32_t>& v) {
  return v ? json(*v) : json(nullptr);
}

// [p3] / [p3, p7] / []
std::string fmt_breaks(const TemporalGraph& g,
                       const std::vector<TemporalBreak>& breaks) {
  std::string out = "[";
  for (std::size_t i = 0; i < breaks.size(); ++i) {
    if (i) out += ", ";
    out += g.name(breaks[i].vertex);
  }
  return out + "]";
}

// Shortcut edges in tg-v1 (they live on the input graph's vertices).
std::string shortcuts_tg(const TemporalGraph& g, const TemporalShortcutSet& s) {
  std::ostringstream out;
  for (const auto& e : s)
    out << g.name(e.tail) << ' ' << g.name(e.head) << ' ' << e.label << '\n';
  return out.str();
}

json stats_json(const TemporalGraph& g) {
  json j;
  j["vertices"] = g.vertex_count();
  j["edges"] = g.edge_count();
  if (g.edge_count() > 0) {
    const GraphStats s = stats(g);
    j["t_min"] = s.t_min;
    j["t_max"] = s.t_max;
    j["lifetime"] = s.lifetime;
  }
  return j;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::ParseError, "cannot open '" + path + "' for writing");
  out << text;
}

int cmd_analyze(const std::string& input) {
  const TemporalGraph g = load(input);
  std::cout << "vertices: " << g.vertex_count() << '\n'
            << "edges: " << g.edge_count() << '\n';
  if (g.edge_count() > 0) {
    const GraphStats s = stats(g);
    std::cout << "t_min: " << s.t_min << '\n'
              << "t_max: " << s.t_max << '\n'
              << "lifetime: " << s.lifetime << '\n';
  }
  std::cout << "temporal diameter: "
            << fmt_opt(temporal_diameter(g, PathMode::Strict)) << '\n';
  std::size_t pairs = 0;
  if (g.vertex_count() > 0)
    pairs = reach_matrix(g, PathMode::Strict).count() - g.vertex_count();
  std::cout << "reachable pairs: " << pairs << '\n';
  try {
    const auto breaks = find_temporal_breaks(g, PathMode::Strict);
    std::cout << "breaks: " << fmt_breaks(g, breaks) << '\n';
  } catch (const Error& e) {
    // Breaks are only defined on path footprints; stay quiet otherwise.
    if (e.code() != ErrorCode::NotAPath && e.code() != ErrorCode::NotSimple)
      throw;
  }
  return 0;
}

int cmd_shortcut(const std::string& input, const std::string& method,
                 std::int32_t target, std::uint64_t seed, double multiplier,
                 const std::string& out_path) {
  const auto t0 = std::chrono::steady_clock::now();
  const TemporalGraph g = load(input);
  const auto before = temporal_diameter(g, PathMode::Strict);

  json results;
  results["diameter_before"] = opt_json(before);
  results["expansion_diameter"] = nullptr;
  results["breaks"] = nullptr;
  results["segments"] = nullptr;
  results["ledger"] = nullptr;

  TemporalShortcutSet tdss;
  DiameterReport report;
  std::optional<std::int32_t> expansion_diameter;
  bool achieved = false;

  std::cout << "method: " << method << '\n' << "target: " << target << '\n';

  if (method == "path-greedy" || method == "path-random") {
    PathMethod pm;
    pm.kind = method == "path-greedy" ? PathMethod::Kind::Greedy
                                      : PathMethod::Kind::Random;
    pm.seed = seed;
    pm.c = multiplier;
    auto r = shortcut_temporal_path(g, target, pm);
    tdss = std::move(r.tdss);
    report = std::move(r.report);
    achieved = !report.base_diameter || *report.base_diameter <= target;
    json break_names = json::array();
    for (const auto& b : r.breaks) break_names.push_back(g.name(b.vertex));
    results["breaks"] = break_names;
    results["segments"] = r.segment_count;
    results["static_shortcut_count"] = tdss.size();
    std::cout << "breaks: " << fmt_breaks(g, r.breaks) << '\n'
              << "segments: " << r.segment_count << '\n';
  } else {
    const ExpansionMethod em = method == "expansion-greedy"
                                   ? ExpansionMethod::Greedy
                                   : ExpansionMethod::Random;
    auto r = shortcut_via_expansion(g, target, em, seed, multiplier);
    tdss = std::move(r.tdss);
    report = std::move(r.report);
    expansion_diameter = r.expansion_diameter;
    achieved = !expansion_diameter || *expansion_diameter <= target;
    results["expansion_diameter"] = opt_json(expansion_diameter);
    results["static_shortcut_count"] = r.static_shortcut_count;
    results["ledger"] =
        json{{"new_edges", r.ledger.new_edges},
             {"duplicate_hits", r.ledger.duplicate_hits},
             {"existing_hits", r.ledger.existing_hits},
             {"skipped_gadget_edges", r.ledger.skipped_gadget_edges}};
    std::cout << "static shortcuts: " << r.static_shortcut_count << '\n'
              << "expansion diameter: " << fmt_opt(expansion_diameter) << '\n';
  }

  results["base_diameter_after"] = opt_json(report.base_diameter);
  results["new_pairs"] = report.new_pairs.size();
  results["achieved"] = achieved;

  std::cout << "shortcuts: " << tdss.size() << '\n'
            << "base diameter: " << fmt_opt(report.base_diameter) << '\n'
            << "new pairs: " << report.new_pairs.size() << '\n'
            << "achieved: " << (achieved ? "yes" : "no") << '\n';

  if (!out_path.empty()) {
    const auto t1 = std::chrono::steady_clock::now();
    json doc;
    doc["command"] = "shortcut";
    doc["input"] = stats_json(g);
    doc["parameters"] = json{{"method", method},
                             {"target", target},
                             {"seed", seed},
                             {"multiplier", multiplier}};
    doc["results"] = results;
    doc["shortcuts"] = shortcuts_tg(g, tdss);
    doc["wall_time_ms"] =
        std::chrono::duration<double, std::milli>(t1 - t0).count();
    write_text_file(out_path, doc.dump(2) + "\n");
  }
  return achieved ? 0 : 1;
}

int cmd_verify(const std::string& input, const std::string& shortcuts_path,
               std::int32_t target) {
  const TemporalGraph g = load(input);

  // Accept either a bare tg-v1 shortcut list or a report written by
  // `shortcut --out` (its "shortcuts" field is that same tg-v1 text).
  std::string text = slurp(shortcuts_path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    json doc;
    try {
      doc = json::parse(text);
    } catch (const json::exception& e) {
      fail(ErrorCode::ParseError, std::string("bad report: ") + e.what());
    }
    if (!doc.contains("shortcuts") || !doc["shortcuts"].is_string())
      fail(ErrorCode::ParseError, "report has no shortcuts field");
    text = doc["shortcuts"].get<std::string>();
  }

  const TemporalGraph parsed = parse_tg(text);
  TemporalShortcutSet edges;
  std::size_t overlap = 0;
  for (const auto& [tail, head, label] : parsed.edge_triples()) {
    if (!g.has_vertex(tail) || !g.has_vertex(head))
      fail(ErrorCode::UnknownVertex,
           "shortcut endpoint '" + (g.has_vertex(tail) ? head : tail) +
               "' is not a vertex of the input");
    const TemporalEdge e{g.vertex(tail), g.vertex(head), label};
    if (g.has_edge(e)) ++overlap;
    edges.push_back(e);
  }
  if (overlap > 0)
    std::cerr << "warning: " << overlap
              << " shortcut(s) already present in the input\n";

  const DiameterReport rep =
      base_diameter(g, g.with_edges(edges), PathMode::Strict);
  const bool ok = !rep.base_diameter || *rep.base_diameter <= target;
  std::cout << "shortcuts: " << edges.size() << '\n'
            << "achieved diameter: " << fmt_opt(rep.base_diameter) << '\n'
            << "new pairs: " << rep.new_pairs.size() << '\n'
            << "verdict: " << (ok ? "ok" : "fail") << '\n';
  return ok ? 0 : 1;
}

int cmd_expand(const std::string& input, const std::string& dot_path) {
  const TemporalGraph g = load(input);
  const Expansion x = build_expansion(g);
  const ExpansionDiameterCheck check = expansion_diameter_check(g);
  if (!dot_path.empty()) {
    std::ofstream out(dot_path);
    if (!out)
      fail(ErrorCode::ParseError, "cannot open '" + dot_path + "' for writing");
    write_dot(out, x);
  }
  const std::int32_t bound = 2 * check.temporal_diameter + 1;
  std::cout << x.graph().vertex_count() << " vertices, "
            << x.graph().edge_count() << " edges, K=" << check.static_diameter
            << (check.ratio_holds ? ", 2k+1=" : " > 2k+1=") << bound << '\n';
  return 0;
}

int cmd_closure(const std::string& input, const std::string& kind_name) {
  const TemporalGraph g = load(input);
  ClosureKind kind = ClosureKind::FullLifecycle;
  if (kind_name == "eat") kind = ClosureKind::EarliestArrival;
  if (kind_name == "ldt") kind = ClosureKind::LatestDeparture;
  const TemporalGraph closed = temporal_closure(g, kind);
  const ReachabilityDelta delta = reachability_delta(g, closed);
  std::cout << "kind: " << kind_name << '\n'
            << "before edges: " << g.edge_count() << '\n'
            << "closure edges: " << closed.edge_count() << '\n'
            << "added pairs: " << delta.added_pairs.size() << '\n';
  for (std::size_t i = 0; i < delta.added_pairs.size(); ++i)
    std::cout << g.name(delta.added_pairs[i].tail) << " -> "
              << g.name(delta.added_pairs[i].head) << "  (witness hops: "
              << delta.witnesses[i].size() << ")\n";
  return 0;
}

int cmd_gen(const std::string& family, std::size_t n, std::size_t m,
            TimeLabel t_max, std::uint64_t seed,
            const std::vector<TimeLabel>& labels, const std::string& out) {
  GeneratorSpec spec;
  if (family == "path") spec.family = GeneratorSpec::Family::TemporalPath;
  if (family == "random") spec.family = GeneratorSpec::Family::RandomTemporal;
  if (family == "layered") spec.family = GeneratorSpec::Family::LayeredDAG;
  spec.n = n;
  spec.m = m;
  spec.t_max = t_max;
  spec.seed = seed;
  spec.labels = labels;
  const TemporalGraph g = gen(spec);
  if (out.empty() || out == "-") {
    write_tg(std::cout, g);
  } else {
    std::ofstream f(out);
    if (!f) fail(ErrorCode::ParseError, "cannot open '" + out + "' for writing");
    write_tg(f, g);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"temporal diameter shortcut sets"};
  app.require_subcommand(1);

  std::string input;
  std::string method = "path-random";
  std::string out_path;
  std::string shortcuts_path;
  std::string dot_path;
  std::string kind = "full";
  std::string family = "random";
  std::int32_t target = 1;
  std::uint64_t seed = 0;
  double multiplier = 2.0;
  std::size_t gen_n = 0;
  std::size_t gen_m = 0;
  TimeLabel gen_tmax = 1;
  std::vector<TimeLabel> gen_labels;

  auto* analyze = app.add_subcommand("analyze", "graph stats and diameter");
  analyze->add_option("input", input, "tg-v1 file, - for stdin")->required();

  auto* shortcut = app.add_subcommand("shortcut", "construct a shortcut set");
  shortcut->add_option("input", input)->required();
  shortcut->add_option("--method", method)
      ->check(CLI::IsMember({"path-greedy", "path-random", "expansion-greedy",
                             "expansion-random"}))
      ->required();
  shortcut->add_option("--target", target, "target diameter d")->required();
  shortcut->add_option("--seed", seed);
  shortcut->add_option("--multiplier", multiplier, "sampling multiplier c");
  shortcut->add_option("--out", out_path, "write the report here");

  auto* verify = app.add_subcommand("verify", "re-check a shortcut set");
  verify->add_option("input", input)->required();
  verify->add_option("--shortcuts", shortcuts_path,
                     "tg-v1 shortcut list or a shortcut report")
      ->required();
  verify->add_option("--target", target)->required();

  auto* expand = app.add_subcommand("expand", "static expansion summary");
  expand->add_option("input", input)->required();
  expand->add_option("--dot", dot_path, "write Graphviz output here");

  auto* closure = app.add_subcommand("closure", "temporal closure delta");
  closure->add_option("input", input)->required();
  closure->add_option("--kind", kind)
      ->check(CLI::IsMember({"eat", "ldt", "full"}));

  auto* generate = app.add_subcommand("gen", "write a generated tg-v1 graph");
  generate->add_option("--family", family)
      ->check(CLI::IsMember({"path", "random", "layered"}))
      ->required();
  generate->add_option("--n", gen_n)->required();
  generate->add_option("--m", gen_m);
  generate->add_option("--t-max", gen_tmax);
  generate->add_option("--seed", seed);
  generate->add_option("--labels", gen_labels)->delimiter(',');
  generate->add_option("--out", out_path, "output file, - for stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 4;
  }

  try {
    if (*analyze) return cmd_analyze(input);
    if (*shortcut)
      return cmd_shortcut(input, method, target, seed, multiplier, out_path);
    if (*verify) return cmd_verify(input, shortcuts_path, target);
    if (*expand) return cmd_expand(input, dot_path);
    if (*closure) return cmd_closure(input, kind);
    if (*generate)
      return cmd_gen(family, gen_n, gen_m, gen_tmax, seed, gen_labels,
                     out_path);
  } catch (const tdss::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
