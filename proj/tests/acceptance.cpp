// Acceptance suite: one line per criterion, [PASS]/[FAIL]; exit 0 iff all
// pass.  Thresholds (instance counts, runtime limits, the 90% trend quota)
// are pinned here in code.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "tdss/closure_lab.hpp"
#include "tdss/expansion.hpp"
#include "tdss/path_tdss.hpp"
#include "tdss/reachability.hpp"
#include "tdss/static_algos.hpp"
#include "tdss/testkit.hpp"

using namespace tdss;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Line {
  bool pass = false;
  std::string text;
};

TemporalGraph path_fixture(std::vector<TimeLabel> labels) {
  GeneratorSpec spec;
  spec.family = GeneratorSpec::Family::TemporalPath;
  spec.n = labels.size() + 1;
  spec.labels = std::move(labels);
  return gen(spec);
}

bool same_reach(const TemporalGraph& a, const TemporalGraph& b) {
  const BitMatrix ra = reach_matrix(a, PathMode::Strict);
  const BitMatrix rb = reach_matrix(b, PathMode::Strict);
  for (VertexId u = 0; u < a.vertex_count(); ++u)
    for (VertexId v = 0; v < a.vertex_count(); ++v)
      if (ra.get(u, v) != rb.get(u, v)) return false;
  return true;
}

// ---- criteria 1, 5, 6 share one fuzz corpus ----------------------------

struct FuzzTally {
  std::size_t runs = 0;
  std::size_t c1_violations = 0;     // base diameter > shortcutted expansion
  std::size_t c5_bad_edges = 0;      // translation is not a valid temporal edge
  std::size_t c5_over_budget = 0;    // more new edges than static shortcuts
  std::size_t c5_paths = 0;
  std::size_t c5_bad_paths = 0;      // translated path invalid or length off
  std::size_t c6_violations = 0;     // expansion diameter < 2k+1
  double elapsed = 0.0;
};

void check_sampled_paths(const TemporalGraph& g, const Expansion& x,
                         FuzzTally& tally) {
  const GraphStats s = stats(g);
  const std::size_t n = g.vertex_count();
  for (VertexId u = 0; u < n; ++u) {
    const VertexId src = x.index_of(u, s.t_min, Side::In);
    const StaticDistanceMap dist = static_distances(x.graph(), src);
    for (VertexId v = 0; v < n; ++v) {
      if (u == v) continue;
      VertexId dst = 0;
      bool found = false;
      for (TimeLabel t = s.t_min; !found && t <= s.t_max + 1; ++t) {
        dst = x.index_of(v, t, Side::Out);
        found = dist.hops[dst] >= 0;
      }
      if (!found) continue;
      const auto path = static_shortest_path(x.graph(), src, dst);
      if (!path) continue;
      ++tally.c5_paths;

      std::vector<TemporalEdge> translated;
      bool ok = true;
      for (std::size_t i = 0; i + 1 < path->size(); ++i) {
        const auto e = translate_edge(x, {(*path)[i], (*path)[i + 1]});
        if (e) translated.push_back(*e);
      }
      if (translated.empty()) ok = false;
      for (std::size_t i = 0; ok && i < translated.size(); ++i) {
        ok = g.has_edge(translated[i]);
        if (ok && i > 0)
          ok = translated[i - 1].head == translated[i].tail &&
               translated[i - 1].label < translated[i].label;
      }
      if (ok)
        ok = translated.front().tail == u && translated.back().head == v;
      const std::size_t full = path->size() - 1;
      if (ok)
        ok = translated.size() <= full && full <= 2 * translated.size() + 1;
      if (!ok) ++tally.c5_bad_paths;
    }
  }
}

FuzzTally run_fuzz_corpus() {
  FuzzTally tally;
  const auto t0 = Clock::now();
  for (std::uint64_t s = 0; s < 200; ++s) {
    GeneratorSpec spec;
    spec.family = GeneratorSpec::Family::RandomTemporal;
    spec.n = 4 + s % 5;
    spec.m = 5 + s % 10;
    spec.t_max = 2 + static_cast<TimeLabel>(s % 5);
    spec.seed = s;
    const TemporalGraph g = gen(spec);
    const GraphStats gs = stats(g);

    // criterion 6 half: the bare expansion never beats 2k+1.
    const ExpansionDiameterCheck check = expansion_diameter_check(g);
    if (check.static_diameter < 2 * check.temporal_diameter + 1)
      ++tally.c6_violations;

    // criterion 5 half: sampled shortest expansion paths translate cleanly.
    const Expansion x = build_expansion(g);
    check_sampled_paths(g, x, tally);

    for (const ExpansionMethod method :
         {ExpansionMethod::Random, ExpansionMethod::Greedy}) {
      const std::int32_t d =
          method == ExpansionMethod::Greedy ? 4 : 1 + static_cast<std::int32_t>(s % 3);
      const ExpansionShortcutResult r =
          shortcut_via_expansion(g, d, method, s);
      ++tally.runs;

      // criterion 1: achieved base diameter within the shortcutted
      // expansion's static diameter.
      if (!r.expansion_diameter ||
          (r.report.base_diameter &&
           *r.report.base_diameter > *r.expansion_diameter))
        ++tally.c1_violations;

      // criterion 5 (a) and (b).
      for (const TemporalEdge& e : r.tdss) {
        const bool valid = e.tail < g.vertex_count() &&
                           e.head < g.vertex_count() && e.tail != e.head &&
                           e.label >= gs.t_min && e.label <= gs.t_max;
        if (!valid) ++tally.c5_bad_edges;
      }
      if (r.ledger.new_edges > r.static_shortcut_count ||
          r.tdss.size() != r.ledger.new_edges)
        ++tally.c5_over_budget;
    }
  }
  tally.elapsed = seconds_since(t0);
  return tally;
}

// ---- criterion 2 --------------------------------------------------------

Line criterion_2() {
  const auto t0 = Clock::now();
  std::size_t mismatches = 0;
  std::size_t reach_changes = 0;
  const std::size_t instances = 100;
  std::mt19937_64 rng(2024);
  for (std::size_t i = 0; i < instances; ++i) {
    const std::size_t n = 3 + i % 10;  // up to 12 vertices
    const std::size_t edge_count = n - 1;
    // Segment-structured labels: each segment climbs strictly, and every new
    // segment restarts at or below the previous segment's first label.  A
    // shortcut label can then never out-race a break vertex, so per-segment
    // shortcutting leaves reachability untouched; with a later segment
    // starting above an earlier one (say labels 1,5 then 3) any set reaching
    // d = 1 must heal the break, so no construction could pass this check.
    const std::size_t parts = 1 + rng() % std::min<std::size_t>(4, edge_count);
    std::vector<std::size_t> sizes(parts, 1);
    for (std::size_t extra = edge_count - parts; extra > 0; --extra)
      ++sizes[rng() % parts];
    std::vector<TimeLabel> labels;
    TimeLabel start = 1 + static_cast<TimeLabel>(rng() % 5);
    for (std::size_t p = 0; p < parts; ++p) {
      if (p > 0)
        start = static_cast<TimeLabel>(
            1 + rng() % static_cast<std::uint64_t>(start));
      TimeLabel t = start;
      for (std::size_t j = 0; j < sizes[p]; ++j) {
        labels.push_back(t);
        t += 1 + static_cast<TimeLabel>(rng() % 2);
      }
    }
    const TemporalGraph g = path_fixture(labels);

    PathMethod method;
    method.kind = i % 2 ? PathMethod::Kind::Greedy : PathMethod::Kind::Random;
    const std::int32_t d =
        method.kind == PathMethod::Kind::Greedy
            ? 4
            : 1 + static_cast<std::int32_t>(i % 3);
    method.seed = i;
    const PathShortcutResult r = shortcut_temporal_path(g, d, method);

    // Independent expectation: per segment, the shortcutted footprint's
    // static diameter (or the bare length when the segment was left alone).
    const auto breaks = find_temporal_breaks(g, PathMode::Strict);
    if (breaks.size() + 1 != parts) ++mismatches;  // generator sanity
    const auto segments = partition_at_breaks(g, breaks);
    std::int32_t expected = 0;
    for (std::size_t si = 0; si < segments.size(); ++si) {
      const auto& seg = segments[si];
      std::int32_t part = static_cast<std::int32_t>(seg.edges.size());
      if (part > d) {
        const StaticGraph fp = segment_footprint(g, seg);
        const ShortcutSet s =
            method.kind == PathMethod::Kind::Greedy
                ? greedy_shortcut_set(fp, d)
                : random_shortcut_set(fp, d, method.seed + si, method.c);
        part = *static_diameter(fp.with_edges(s));
      }
      expected = std::max(expected, part);
    }

    if (!r.report.base_diameter || *r.report.base_diameter != expected)
      ++mismatches;
    if (!same_reach(g, g.with_edges(r.tdss))) ++reach_changes;
  }
  const double elapsed = seconds_since(t0);

  Line line;
  line.pass = mismatches == 0 && reach_changes == 0 && elapsed < 10.0;
  std::ostringstream out;
  out << "2. path equivalence: " << instances << " paths, " << mismatches
      << " diameter mismatches, " << reach_changes << " reachability changes ("
      << std::fixed;
  out.precision(1);
  out << elapsed << " s, limit 10)";
  line.text = out.str();
  return line;
}

// ---- criterion 3 --------------------------------------------------------

Line criterion_3() {
  const auto t0 = Clock::now();
  std::size_t mismatches = 0;
  std::size_t instances = 0;
  std::mt19937_64 rng(3);
  const std::vector<TimeLabel> universe{1, 2, 3, 4};

  auto pick_increasing = [&rng](std::size_t len) {
    std::vector<TimeLabel> pool{1, 2, 3, 4};
    for (std::size_t i = pool.size(); i > 1; --i)
      std::swap(pool[i - 1], pool[rng() % i]);
    pool.resize(len);
    std::sort(pool.begin(), pool.end());
    return pool;
  };

  for (std::size_t i = 0; i < 30; ++i) {
    const std::size_t n = 4 + i % 4;  // 4..7 vertices
    const std::size_t lo = n >= 6 ? n - 5 : 1;
    const std::size_t hi = std::min<std::size_t>(n - 2, 4);
    const std::size_t p = lo + rng() % (hi - lo + 1);  // break position

    const std::vector<TimeLabel> a = pick_increasing(p);
    std::vector<TimeLabel> b = pick_increasing(n - 1 - p);
    for (int tries = 0; b.front() > a.back() && tries < 50; ++tries)
      b = pick_increasing(n - 1 - p);
    if (b.front() > a.back()) {  // guaranteed break as a fallback
      b.front() = 1;
      std::sort(b.begin(), b.end());
      b.erase(std::unique(b.begin(), b.end()), b.end());
    }

    std::vector<TimeLabel> labels = a;
    labels.insert(labels.end(), b.begin(), b.end());
    const TemporalGraph g = path_fixture(labels);

    const auto breaks = find_temporal_breaks(g, PathMode::Strict);
    if (breaks.size() != 1) {
      ++mismatches;  // instance generator failed its own invariant
      continue;
    }
    const auto segments = partition_at_breaks(g, breaks);

    const std::size_t whole = brute_min_tdss(g, 1, universe).witness.size();
    std::size_t parts = 0;
    for (const auto& seg : segments)
      parts += brute_min_tdss(segment_graph(g, seg), 1, universe)
                   .witness.size();
    if (whole != parts) ++mismatches;
    ++instances;
  }
  const double elapsed = seconds_since(t0);

  Line line;
  line.pass = mismatches == 0 && instances >= 30 && elapsed < 300.0;
  std::ostringstream out;
  out << "3. path independence: " << instances
      << " single-break instances at d=1, " << mismatches << " mismatches ("
      << std::fixed;
  out.precision(1);
  out << elapsed << " s, limit 300)";
  line.text = out.str();
  return line;
}

// ---- criterion 4 --------------------------------------------------------

Line criterion_4() {
  const auto t0 = Clock::now();
  const TemporalGraph g4 = build_graph(
      {{"x", "a", 6}, {"a", "b", 6}, {"b", "c", 7}, {"c", "d", 7}});

  std::size_t empty_deltas = 0;
  for (const ClosureKind kind :
       {ClosureKind::EarliestArrival, ClosureKind::LatestDeparture,
        ClosureKind::FullLifecycle}) {
    const auto delta = reachability_delta(g4, temporal_closure(g4, kind));
    if (delta.added_pairs.empty()) ++empty_deltas;
  }

  std::size_t label_misses = 0;
  const VertexId a = g4.vertex("a"), c = g4.vertex("c");
  const VertexId x = g4.vertex("x"), d = g4.vertex("d");
  for (TimeLabel t = 0; t <= 20; ++t) {
    const auto delta =
        reachability_delta(g4, g4.with_edges({{a, c, t}}));
    const StaticEdge want = t < 7 ? StaticEdge{a, d} : StaticEdge{x, c};
    bool hit = false;
    for (const auto& pair : delta.added_pairs) hit |= pair == want;
    if (!hit || delta.added_pairs.empty()) ++label_misses;
  }
  const double elapsed = seconds_since(t0);

  Line line;
  line.pass = empty_deltas == 0 && label_misses == 0 && elapsed < 1.0;
  std::ostringstream out;
  out << "4. closure counterexample: 3 closure kinds non-empty ("
      << (3 - empty_deltas) << "/3), 21 shortcut labels each add the "
      << "predicted pair (" << (21 - label_misses) << "/21) (" << std::fixed;
  out.precision(2);
  out << elapsed << " s, limit 1)";
  line.text = out.str();
  return line;
}

// ---- criterion 6 (fixture half) -----------------------------------------

bool paths_ratio_exact() {
  const std::vector<std::vector<TimeLabel>> patterns = {
      {1, 2, 3}, {1, 2, 1, 2}, {1, 2}, {2, 2, 2}, {1, 3, 5, 7, 9}, {4},
      {1, 2, 3, 4, 5, 6, 7}};
  for (const auto& labels : patterns) {
    const TemporalGraph g = path_fixture(labels);
    const ExpansionDiameterCheck check = expansion_diameter_check(g);
    if (!check.ratio_holds ||
        check.static_diameter != 2 * check.temporal_diameter + 1)
      return false;
  }
  return true;
}

// ---- criterion 7 --------------------------------------------------------

Line criterion_7() {
  const auto t0 = Clock::now();
  std::ostringstream detail;
  bool pass = true;
  for (const std::size_t x_target : {256u, 1024u, 4096u}) {
    GeneratorSpec spec;
    spec.family = GeneratorSpec::Family::LayeredDAG;
    spec.t_max = 3;                 // 4 layers; expansion has 8n vertices
    spec.n = x_target / 8;
    spec.m = 2 * spec.n;
    spec.seed = 42;
    const TemporalGraph g = gen(spec);
    const Expansion x = build_expansion(g);
    const std::size_t xv = x.graph().vertex_count();

    const std::int32_t d = static_cast<std::int32_t>(
        std::ceil(std::cbrt(static_cast<double>(xv)) - 1e-9));
    const double bound = 4.0 * std::cbrt(static_cast<double>(xv));

    std::size_t hits = 0;
    const std::size_t seeds = 20;
    for (std::uint64_t s = 0; s < seeds; ++s) {
      const ShortcutSet set = random_shortcut_set(x.graph(), d, s, 2.0);
      const auto diameter = static_diameter(x.graph().with_edges(set));
      if (diameter && *diameter <= bound + 1e-9) ++hits;
    }
    if (xv != x_target || hits * 10 < seeds * 9) pass = false;
    detail << " x=" << xv << ": " << hits << "/" << seeds;
  }
  const double elapsed = seconds_since(t0);
  if (elapsed >= 300.0) pass = false;

  Line line;
  line.pass = pass;
  std::ostringstream out;
  out << "7. size trend: diameter <= 4x^(1/3) for" << detail.str()
      << " seeds (need 90%) (" << std::fixed;
  out.precision(1);
  out << elapsed << " s, limit 300)";
  line.text = out.str();
  return line;
}

// ---- criterion 8 --------------------------------------------------------

Line criterion_8() {
  const auto t0 = Clock::now();
  std::size_t mismatches = 0;
  const std::size_t instances = 500;
  for (std::uint64_t s = 0; s < instances; ++s) {
    GeneratorSpec spec;
    spec.family = GeneratorSpec::Family::RandomTemporal;
    spec.n = 3 + s % 4;
    spec.t_max = 1 + static_cast<TimeLabel>(s % 5);
    const std::size_t capacity =
        spec.n * (spec.n - 1) * static_cast<std::size_t>(spec.t_max);
    spec.m = std::min<std::size_t>(capacity, 2 + s % (2 * spec.n));
    spec.seed = s;
    const TemporalGraph g = gen(spec);

    for (const PathMode mode : {PathMode::Strict, PathMode::NonStrict}) {
      for (VertexId u = 0; u < g.vertex_count(); ++u) {
        const DistanceMap dist = temporal_distances(g, u, mode);
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
          if (u == v) continue;
          const auto paths =
              enumerate_temporal_paths(g, u, v, g.vertex_count(), mode);
          std::optional<std::size_t> best;
          for (const auto& p : paths)
            if (!best || p.labels.size() < *best) best = p.labels.size();
          const std::int32_t want =
              best ? static_cast<std::int32_t>(*best) : kUnreachable;
          if (dist.hops[v] != want) ++mismatches;
        }
      }
    }
  }
  const double elapsed = seconds_since(t0);

  Line line;
  line.pass = mismatches == 0 && elapsed < 30.0;
  std::ostringstream out;
  out << "8. oracle equivalence: " << instances
      << " instances, both modes, " << mismatches << " mismatches ("
      << std::fixed;
  out.precision(1);
  out << elapsed << " s, limit 30)";
  line.text = out.str();
  return line;
}

}  // namespace

int main() {
  std::vector<Line> lines(8);

  const FuzzTally fuzz = run_fuzz_corpus();
  {
    Line line;
    line.pass = fuzz.c1_violations == 0 && fuzz.runs >= 400 &&
                fuzz.elapsed < 60.0;
    std::ostringstream out;
    out << "1. diameter bound suite: " << fuzz.runs
        << " runs (200 graphs x 2 methods), " << fuzz.c1_violations
        << " violations of base <= expansion diameter (" << std::fixed;
    out.precision(1);
    out << fuzz.elapsed << " s, limit 60)";
    line.text = out.str();
    lines[0] = line;
  }

  lines[1] = criterion_2();
  lines[2] = criterion_3();
  lines[3] = criterion_4();

  {
    Line line;
    line.pass = fuzz.c5_bad_edges == 0 && fuzz.c5_over_budget == 0 &&
                fuzz.c5_bad_paths == 0 && fuzz.c5_paths > 0;
    std::ostringstream out;
    out << "5. translation soundness: " << fuzz.c5_bad_edges
        << " invalid edges, " << fuzz.c5_over_budget << " budget breaches, "
        << fuzz.c5_bad_paths << " bad translations over " << fuzz.c5_paths
        << " sampled paths";
    line.text = out.str();
    lines[4] = line;
  }

  {
    const TemporalGraph counter =
        build_graph({{"u", "w", 1}, {"u", "a", 5}, {"a", "w", 6}});
    const ExpansionDiameterCheck check = expansion_diameter_check(counter);
    const bool fixtures_ok = paths_ratio_exact();
    const bool counter_ok =
        check.temporal_diameter == 1 && check.static_diameter == 5;
    Line line;
    line.pass = fixtures_ok && counter_ok && fuzz.c6_violations == 0;
    std::ostringstream out;
    out << "6. diameter ratio: paths K=2k+1 "
        << (fixtures_ok ? "exact" : "BROKEN") << ", fuzz K>=2k+1 with "
        << fuzz.c6_violations << " violations, counterexample k="
        << check.temporal_diameter << " K=" << check.static_diameter
        << " (want 1, 5)";
    line.text = out.str();
    lines[5] = line;
  }

  lines[6] = criterion_7();
  lines[7] = criterion_8();

  int failures = 0;
  for (const Line& line : lines) {
    std::printf("[%s] %s\n", line.pass ? "PASS" : "FAIL", line.text.c_str());
    if (!line.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
