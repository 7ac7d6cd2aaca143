// Times the OpenMP kernels against their scalar reference implementations
// and cross-checks the results while at it.  Not part of the test suite;
// run manually: ./bench_kernels [max_n]
//
// Wall times come from std::chrono::steady_clock, one warm-up pass each.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "tdss/reachability.hpp"
#include "tdss/static_algos.hpp"
#include "tdss/testkit.hpp"

using namespace tdss;

namespace {

StaticGraph random_digraph(std::size_t n, std::size_t m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
  std::vector<StaticEdge> edges;
  while (edges.size() < m) {
    const VertexId u = static_cast<VertexId>(rng() % n);
    const VertexId v = static_cast<VertexId>(rng() % n);
    if (u != v) edges.push_back({u, v});
  }
  return StaticGraph(std::move(names), std::move(edges));
}

template <typename F>
double time_ms(F&& f) {
  f();  // warm-up
  const auto t0 = std::chrono::steady_clock::now();
  f();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void row(const char* kernel, std::size_t n, double serial_ms,
         double parallel_ms, bool agree) {
  std::printf("%-22s %8zu %12.2f %12.2f %9.2fx  %s\n", kernel, n, serial_ms,
              parallel_ms, serial_ms / parallel_ms, agree ? "ok" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  const std::size_t max_n = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 1024;

  std::printf("%-22s %8s %12s %12s %10s\n", "kernel", "n", "serial ms",
              "parallel ms", "speedup");

  for (std::size_t n = 256; n <= max_n; n *= 2) {
    const StaticGraph g = random_digraph(n, 8 * n, 42 + n);

    std::optional<std::int32_t> d_serial, d_parallel;
    const double sd = time_ms([&] { d_serial = serial::static_diameter(g); });
    const double pd = time_ms([&] { d_parallel = static_diameter(g); });
    row("static_diameter", n, sd, pd, d_serial == d_parallel);

    std::vector<StaticEdge> c_serial, c_parallel;
    const double sc = time_ms([&] { c_serial = serial::transitive_closure(g); });
    const double pc = time_ms([&] { c_parallel = transitive_closure(g); });
    row("transitive_closure", n, sc, pc, c_serial == c_parallel);
  }

  for (std::size_t n = 128; n <= max_n / 2; n *= 2) {
    GeneratorSpec spec;
    spec.family = GeneratorSpec::Family::RandomTemporal;
    spec.n = n;
    spec.m = 8 * n;
    spec.t_max = 32;
    spec.seed = 7;
    const TemporalGraph g = gen(spec);

    std::optional<std::int32_t> k_serial, k_parallel;
    const double st = time_ms(
        [&] { k_serial = serial::temporal_diameter(g, PathMode::Strict); });
    const double pt =
        time_ms([&] { k_parallel = temporal_diameter(g, PathMode::Strict); });
    row("temporal_diameter", n, st, pt, k_serial == k_parallel);
  }

  return 0;
}
