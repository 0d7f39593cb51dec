// Copyright 2026 The relgme Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <random>

#include "relgme/boost.hpp"
#include "relgme/classcheck.hpp"
#include "relgme/measures.hpp"
#include "relgme/scan.hpp"

namespace {

using namespace relgme;

StateVector random_composite(std::uint64_t seed) {
    Rng rng(seed);
    return haar_state(kCompositeDim, rng);
}

void BM_Kron(benchmark::State& state) {
    Rng rng(1);
    const ComplexMatrix a = haar_unitary(6, rng);
    const ComplexMatrix b = haar_unitary(36, rng);
    for (auto _ : state) benchmark::DoNotOptimize(kron(a, b));
}
BENCHMARK(BM_Kron);

void BM_PartialTraceComposite(benchmark::State& state) {
    const ComplexMatrix rho = random_composite(2).projector();
    for (auto _ : state) benchmark::DoNotOptimize(partial_trace(rho, composite_shape(), {1, 3, 5}));
}
BENCHMARK(BM_PartialTraceComposite);

void BM_HermitianEigen(benchmark::State& state) {
    Rng rng(3);
    const auto n = static_cast<std::size_t>(state.range(0));
    ComplexMatrix h = haar_unitary(n, rng);
    h = h + h.adjoint();
    for (auto _ : state) benchmark::DoNotOptimize(hermitian_eigen(h));
}
BENCHMARK(BM_HermitianEigen)->Arg(8)->Arg(16)->Arg(32);

void BM_BoostFast(benchmark::State& state) {
    const BoostScenario s = BoostScenario::with_delta(0.7);
    for (auto _ : state)
        benchmark::DoNotOptimize(boosted_spin_density_fast(antisymmetric_coefficients(), ghz(), s));
}
BENCHMARK(BM_BoostFast);

void BM_BoostBruteForce(benchmark::State& state) {
    const BoostScenario s = BoostScenario::with_delta(0.7);
    const CompositeState in = compose(permutation_momentum(antisymmetric_coefficients()), ghz());
    for (auto _ : state) {
        const StateVector out = build_boost_unitary(s).apply(in.vector());
        benchmark::DoNotOptimize(partial_trace(out.projector(), composite_shape(), {1, 3, 5}));
    }
}
BENCHMARK(BM_BoostBruteForce);

void BM_MConcurrenceSingletons(benchmark::State& state) {
    const StateVector psi = random_composite(4);
    const Partition p({{0}, {1}, {2}, {3}, {4}, {5}}, 6);
    for (auto _ : state) benchmark::DoNotOptimize(m_concurrence_pure(psi, composite_shape(), p));
}
BENCHMARK(BM_MConcurrenceSingletons);

void BM_WitnessGridPoint(benchmark::State& state) {
    const BoostScenario s = BoostScenario::with_delta(0.9);
    const StateVector spin = ghz_alpha(0.4);
    for (auto _ : state) {
        const ComplexMatrix rho = boosted_spin_density_fast(antisymmetric_coefficients(), spin, s);
        benchmark::DoNotOptimize(witness_hmgh(rho));
    }
}
BENCHMARK(BM_WitnessGridPoint);

}  // namespace

BENCHMARK_MAIN();
