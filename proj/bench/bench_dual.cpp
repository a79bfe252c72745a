// Serial reference vs OpenMP kernels: the guess-space scan and the
// oracle subset scan. Run manually: ./bench/bench_dual

#include <benchmark/benchmark.h>

#include <random>

#include "hgdual/io.hpp"
#include "hgdual/oracle.hpp"
#include "hgdual/solver.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace hgdual;

namespace {

// Matched pairs <G_i, tr(G_i)>: dual, so the scan walks the whole
// bounded guess space (the worst case for the enumeration kernel).
Instance family_pair(std::size_t i) {
    std::vector<std::vector<std::string>> g_edges, h_pref;
    std::vector<std::string> xs, ys;
    for (std::size_t j = 1; j <= i; ++j) {
        std::string x = "x" + std::to_string(j);
        std::string y = "y" + std::to_string(j);
        g_edges.push_back({x, y});
        xs.push_back(x);
        ys.push_back(y);
    }
    Hypergraph g = io::from_token_edges(g_edges);
    return Instance(g, oracle::brute_force_tr_berge(g));
}

Hypergraph dense_hypergraph(std::size_t vertices, std::size_t edges, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    Hypergraph g(vertices);
    std::uniform_int_distribution<std::size_t> pick_size(2, 5);
    std::uniform_int_distribution<std::size_t> pick_vertex(0, vertices - 1);
    for (std::size_t e = 0; e < edges; ++e) {
        Bitset edge(vertices);
        std::size_t sz = pick_size(rng);
        while (edge.count() < sz) edge.set(pick_vertex(rng));
        g.edges.push_back(std::move(edge));
    }
    return minimize(g);
}

void guess_scan_serial(benchmark::State& state) {
    Instance inst = family_pair(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        ComputeNtResult r = compute_new_transversal_serial(inst);
        benchmark::DoNotOptimize(r.label_sets_tried);
    }
}

void guess_scan_parallel(benchmark::State& state) {
    Instance inst = family_pair(static_cast<std::size_t>(state.range(0)));
#ifdef _OPENMP
    const int jobs = omp_get_max_threads();
#else
    const int jobs = 2;
#endif
    for (auto _ : state) {
        ComputeNtResult r = compute_new_transversal(inst, {}, jobs);
        benchmark::DoNotOptimize(r.label_sets_tried);
    }
}

void oracle_scan_serial(benchmark::State& state) {
    Hypergraph g = dense_hypergraph(static_cast<std::size_t>(state.range(0)), 12, 99);
    for (auto _ : state) {
        Hypergraph tr = oracle::brute_force_tr_subsets(g);
        benchmark::DoNotOptimize(tr.edges.size());
    }
}

void oracle_scan_parallel(benchmark::State& state) {
    Hypergraph g = dense_hypergraph(static_cast<std::size_t>(state.range(0)), 12, 99);
    for (auto _ : state) {
        Hypergraph tr = oracle::brute_force_tr_subsets_parallel(g);
        benchmark::DoNotOptimize(tr.edges.size());
    }
}

} // namespace

BENCHMARK(guess_scan_serial)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(guess_scan_parallel)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(oracle_scan_serial)->Arg(16)->Arg(18)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(oracle_scan_parallel)->Arg(16)->Arg(18)->Arg(20)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
