#include <benchmark/benchmark.h>

#include "bispan/catalog.hpp"
#include "bispan/enumerate.hpp"
#include "bispan/exchange.hpp"
#include "bispan/ordering.hpp"

using namespace bispan;

static void BM_build_tau3(benchmark::State& st, const char* name, bool serial) {
    MultiGraph g = named_graph(name).graph;
    for (auto _ : st) {
        ExchangeGraph x = serial ? build_tau_serial(g, Variant::Tau3, Form::Directed) : build_tau(g, Variant::Tau3, Form::Directed);
        benchmark::DoNotOptimize(x.arcs.size());
    }
}
BENCHMARK_CAPTURE(BM_build_tau3, w6, "W6", false);
BENCHMARK_CAPTURE(BM_build_tau3, b8_1, "B8,1", false);
BENCHMARK_CAPTURE(BM_build_tau3, b8_1_serial, "B8,1", true);
BENCHMARK_CAPTURE(BM_build_tau3, b10_1, "B10,1", false);

static void BM_enumerate(benchmark::State& st, GraphKind kind, bool serial) {
    int n = static_cast<int>(st.range(0));
    for (auto _ : st) {
        auto gs = serial ? enumerate_bispanning_graphs_serial(n, kind) : enumerate_bispanning_graphs(n, kind);
        benchmark::DoNotOptimize(gs.size());
    }
}
BENCHMARK_CAPTURE(BM_enumerate, simple, GraphKind::Simple, false)->Arg(7)->Arg(8);
BENCHMARK_CAPTURE(BM_enumerate, simple_serial, GraphKind::Simple, true)->Arg(8);
BENCHMARK_CAPTURE(BM_enumerate, general, GraphKind::General, false)->Arg(6);

static void BM_nu(benchmark::State& st, const char* name) {
    MultiGraph g = named_graph(name).graph;
    ExchangeGraph x = build_tau(g, Variant::Tau3, Form::Directed);
    for (auto _ : st) benchmark::DoNotOptimize(nu(x).count);
}
BENCHMARK_CAPTURE(BM_nu, b7_1, "B7,1");
BENCHMARK_CAPTURE(BM_nu, b9_1, "B9,1");

static void BM_find_uecbo(benchmark::State& st, const char* name) {
    NamedGraph ng = named_graph(name);
    for (auto _ : st) benchmark::DoNotOptimize(find_uecbo(ng.pair).has_value());
}
BENCHMARK_CAPTURE(BM_find_uecbo, b12_1, "B12,1");

BENCHMARK_MAIN();
