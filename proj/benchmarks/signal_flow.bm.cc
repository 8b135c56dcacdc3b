#include <benchmark/benchmark.h>

#include "mbqc/pattern.h"
#include "mbqc/signal_flow.h"

namespace {

mbqc::Pattern ladder(std::size_t rungs) {
    // Two chains of length `rungs`, bridged at every other column.
    mbqc::Pattern p;
    p.n_qubits = 2 * rungs;
    for (mbqc::QubitId k = 0; k + 1 < rungs; k++) {
        p.edges.emplace_back(k, k + 1);
        p.edges.emplace_back(rungs + k, rungs + k + 1);
    }
    for (mbqc::QubitId k = 1; k + 1 < rungs; k += 2) {
        p.edges.emplace_back(k, rungs + k);
    }
    p.inputs = {0, static_cast<mbqc::QubitId>(rungs)};
    p.outputs = {static_cast<mbqc::QubitId>(rungs - 1), static_cast<mbqc::QubitId>(2 * rungs - 1)};
    for (mbqc::QubitId k = 0; k + 1 < rungs; k++) {
        p.measured.push_back(k);
        p.measured.push_back(rungs + k);
    }
    p.measured = mbqc::find_flow(p).order;
    return p;
}

}  // namespace

static void BM_find_flow_ladder(benchmark::State &state) {
    mbqc::Pattern p = ladder(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(mbqc::find_flow(p));
    }
}
BENCHMARK(BM_find_flow_ladder)->Arg(8)->Arg(32)->Arg(128);

static void BM_eliminate_ladder(benchmark::State &state) {
    mbqc::Pattern p = ladder(static_cast<std::size_t>(state.range(0)));
    mbqc::FlowMap flow = mbqc::find_flow(p);
    for (auto _ : state) {
        benchmark::DoNotOptimize(mbqc::eliminate(p, flow));
    }
}
BENCHMARK(BM_eliminate_ladder)->Arg(8)->Arg(32)->Arg(128);
