#include <benchmark/benchmark.h>

#include "mbqc/simulator.h"

namespace {

mbqc::Pattern chain(std::size_t length) {
    mbqc::Pattern p;
    p.n_qubits = length;
    for (mbqc::QubitId q = 0; q + 1 < length; q++) {
        p.edges.emplace_back(q, q + 1);
        p.measured.push_back(q);
        p.angles[q] = 0.1 * q;
    }
    p.inputs = {0};
    p.outputs = {static_cast<mbqc::QubitId>(length - 1)};
    return p;
}

}  // namespace

static void BM_prepare_chain(benchmark::State &state) {
    mbqc::Pattern p = chain(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(mbqc::prepare(p));
    }
}
BENCHMARK(BM_prepare_chain)->Arg(6)->Arg(10)->Arg(14);

static void BM_verify_chain(benchmark::State &state) {
    mbqc::Pattern p = chain(static_cast<std::size_t>(state.range(0)));
    mbqc::SignalFlow sf = mbqc::compile(p);
    mbqc::AngleValues angles = mbqc::numeric_angles(p);
    for (auto _ : state) {
        benchmark::DoNotOptimize(mbqc::verify_branches(p, sf, angles));
    }
}
BENCHMARK(BM_verify_chain)->Arg(5)->Arg(8)->Arg(10);
