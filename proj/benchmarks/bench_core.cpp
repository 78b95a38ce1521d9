// Microbenchmarks for the hot paths: the local gate kernel, full QFT runs,
// signal encoding, shot sampling, and the classical reference DFT.

#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>
#include <vector>

#include "qftlab/analysis.hpp"
#include "qftlab/circuit.hpp"
#include "qftlab/encoding.hpp"
#include "qftlab/gates.hpp"
#include "qftlab/measurement.hpp"
#include "qftlab/state_vector.hpp"

namespace {

qftlab::StateVector random_state(int n_qubits, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::normal_distribution<double> nd(0.0, 1.0);
    std::vector<qftlab::Complex> v(std::size_t{1} << n_qubits);
    for (qftlab::Complex& a : v) a = qftlab::Complex{nd(gen), nd(gen)};
    return qftlab::StateVector::normalized(std::move(v));
}

void BM_ApplyLocalH(benchmark::State& state) {
    const int n = int(state.range(0));
    const qftlab::StateVector s = random_state(n, 1);
    const qftlab::GateMatrix h = qftlab::hadamard();
    const std::vector<int> target{n / 2};
    for (auto _ : state) {
        qftlab::StateVector out = qftlab::apply_local(h, target, s);
        benchmark::DoNotOptimize(out);
    }
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n));
}
BENCHMARK(BM_ApplyLocalH)->Arg(8)->Arg(10)->Arg(12)->Arg(14);

void BM_ApplyLocalCP(benchmark::State& state) {
    const int n = int(state.range(0));
    const qftlab::StateVector s = random_state(n, 2);
    const qftlab::GateMatrix cp = qftlab::controlled(qftlab::phase(0.37), 0, 1, 2);
    const std::vector<int> targets{n - 1, 0};
    for (auto _ : state) {
        qftlab::StateVector out = qftlab::apply_local(cp, targets, s);
        benchmark::DoNotOptimize(out);
    }
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n));
}
BENCHMARK(BM_ApplyLocalCP)->Arg(8)->Arg(10)->Arg(12)->Arg(14);

void BM_QftRun(benchmark::State& state) {
    const int n = int(state.range(0));
    const qftlab::Circuit qft = qftlab::qft_circuit(n);
    const qftlab::StateVector s = random_state(n, 3);
    for (auto _ : state) {
        qftlab::StateVector out = qftlab::run_circuit(qft, s);
        benchmark::DoNotOptimize(out);
    }
}
BENCHMARK(BM_QftRun)->Arg(8)->Arg(10)->Arg(12);

void BM_EncodeSignal(benchmark::State& state) {
    const int n = int(state.range(0));
    const qftlab::SignalSpec spec = qftlab::parse_signal_spec("3:1,5.5:2,7:4", n);
    for (auto _ : state) {
        qftlab::StateVector out = qftlab::encode_signal(spec);
        benchmark::DoNotOptimize(out);
    }
}
BENCHMARK(BM_EncodeSignal)->Arg(8)->Arg(12);

void BM_Sample(benchmark::State& state) {
    const qftlab::StateVector s = random_state(10, 4);
    for (auto _ : state) {
        qftlab::ShotCounts counts = qftlab::sample(s, 10000, 42);
        benchmark::DoNotOptimize(counts);
    }
}
BENCHMARK(BM_Sample);

void BM_ClassicalDft(benchmark::State& state) {
    const std::size_t N = std::size_t(state.range(0));
    std::mt19937_64 gen(5);
    std::normal_distribution<double> nd(0.0, 1.0);
    std::vector<qftlab::Complex> x(N);
    for (qftlab::Complex& c : x) c = qftlab::Complex{nd(gen), nd(gen)};
    for (auto _ : state) {
        std::vector<qftlab::Complex> X = qftlab::dft(x);
        benchmark::DoNotOptimize(X);
    }
}
BENCHMARK(BM_ClassicalDft)->Arg(256)->Arg(1024);

} // namespace

BENCHMARK_MAIN();
