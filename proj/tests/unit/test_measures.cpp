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

#include <numbers>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "relgme/boost.hpp"
#include "relgme/classcheck.hpp"
#include "relgme/errors.hpp"
#include "relgme/measures.hpp"
#include "relgme/pauli.hpp"

using namespace relgme;
using C = std::complex<double>;

namespace {

double expectation(const ComplexMatrix& rho, const ComplexMatrix& a, const ComplexMatrix& b,
                   const ComplexMatrix& c) {
    const ComplexMatrix op = oracle::kron(oracle::kron(a, b), c);
    return oracle::matmul(rho, op).trace().real();
}

// |+> on spin 1, Bell pair on spins 2 and 3.
StateVector plus_bell() { return StateVector{0.5, 0, 0, 0.5, 0.5, 0, 0, 0.5}; }

}  // namespace

TEST_CASE("witness on reference states") {
    CHECK(witness_hmgh(ghz().projector()).value == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(witness_hmgh(w_state().projector()).value) < 1e-12);
    for (double a : {0.1, 0.5, 1.0, 2.0, 3.0})
        CHECK(witness_hmgh(ghz_alpha(a).projector()).value ==
              doctest::Approx(std::abs(std::sin(2 * a))).epsilon(1e-12));
    CHECK(witness_hmgh(ghz().projector()).detects_gme());
    CHECK(gme_lower_bound(0.125 * ComplexMatrix::identity(8)) == 0.0);
}

TEST_CASE("GME bound does not grow with the boost angle") {
    double previous = gme_lower_bound(ghz().projector());
    CHECK(previous == doctest::Approx(1.0));
    for (int k = 1; k <= 12; ++k) {
        const double delta = 1.5707963267948966 * k / 12;
        const double bound = gme_lower_bound(boosted_spin_density_fast(
            antisymmetric_coefficients(), ghz(), BoostScenario::with_delta(delta)));
        CHECK(bound <= 1.0);
        CHECK(bound <= previous + 1e-12);
        previous = bound;
    }
}

TEST_CASE("witness variants on a biseparable product of |+> and a Bell pair") {
    const ComplexMatrix rho = plus_bell().projector();
    CHECK(std::abs(witness_hmgh(rho, WitnessVariant::normalized).value) < 1e-15);
    // The unnormalized forms report a false positive of 1/4 here.
    CHECK(witness_hmgh(rho, WitnessVariant::symmetric).value == doctest::Approx(0.25));
    CHECK(witness_hmgh(rho, WitnessVariant::as_printed).value == doctest::Approx(0.25));
}

TEST_CASE("Pauli-setting identities against explicit expectation values") {
    std::mt19937_64 rng(41);
    const ComplexMatrix x = pauli_x(), y = pauli_y();
    for (int trial = 0; trial < 20; ++trial) {
        const ComplexMatrix rho = oracle::random_density(8, 1 + trial % 8, rng);
        const C z = rho(0, 7);
        const double re = (expectation(rho, x, x, x) - expectation(rho, x, y, y) -
                           expectation(rho, y, x, y) - expectation(rho, y, y, x)) / 4;
        const double im = (expectation(rho, y, y, y) - expectation(rho, x, x, y) -
                           expectation(rho, y, x, x) - expectation(rho, x, y, x)) / 4;
        CHECK(re == doctest::Approx(2 * z.real()).epsilon(1e-12));
        CHECK(std::abs(im - 2 * z.imag()) < 1e-12);
        for (WitnessVariant v :
             {WitnessVariant::normalized, WitnessVariant::symmetric, WitnessVariant::as_printed}) {
            CHECK(std::abs(witness_hmgh(rho, v, WitnessPath::pauli_settings).value -
                           witness_hmgh(rho, v, WitnessPath::matrix_elements).value) < 1e-12);
        }
    }
}

TEST_CASE("witness input validation") {
    CHECK_THROWS_AS(witness_hmgh(ComplexMatrix::identity(8)), ValidationError);
    CHECK_THROWS_AS(witness_hmgh(0.25 * ComplexMatrix::identity(4)), ValidationError);
    CHECK(parse_witness_variant("as-printed") == WitnessVariant::as_printed);
    CHECK_THROWS_AS(parse_witness_variant("loose"), InputError);
}

TEST_CASE("three-tangle") {
    CHECK(three_tangle(ghz()) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(three_tangle(w_state())) < 1e-12);
    CHECK(std::abs(three_tangle(plus_bell())) < 1e-12);
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 50; ++trial) {
        const StateVector psi = oracle::random_state(8, rng);
        CHECK(three_tangle(psi) == doctest::Approx(oracle::tangle(psi)).epsilon(1e-11));
    }
    CHECK_THROWS_AS(three_tangle(StateVector::basis(4, 0)), ShapeError);
}

TEST_CASE("m-concurrence closed forms") {
    const FactorShape q3{2, 2, 2};
    const Partition singles({{0}, {1}, {2}}, 3);
    const Partition cut({{0}, {1, 2}}, 3);
    CHECK(m_concurrence_pure(ghz(), q3, singles) == doctest::Approx(std::sqrt(1.5)).epsilon(1e-12));
    CHECK(m_concurrence_pure(ghz(), q3, cut) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(m_concurrence_pure(w_state(), q3, singles) ==
          doctest::Approx(std::sqrt(4.0 / 3.0)).epsilon(1e-12));
    CHECK(std::abs(m_concurrence_pure(plus_bell(), q3, cut)) < 1e-7);
}

TEST_CASE("m-concurrence against explicit reduced purities") {
    std::mt19937_64 rng(47);
    const std::vector<std::size_t> dims{3, 2, 3, 2, 3, 2};
    const FactorShape shape{3, 2, 3, 2, 3, 2};
    const std::vector<std::vector<std::vector<std::size_t>>> partitions{
        {{1, 3, 5}, {0, 2, 4}}, {{0, 1}, {2, 3}, {4, 5}}, {{0}, {1, 2}, {3}, {4, 5}}};
    const StateVector psi = oracle::random_state(kCompositeDim, rng);
    for (const auto& parts : partitions) {
        CHECK(m_concurrence_pure(psi, shape, Partition(parts, 6)) ==
              doctest::Approx(oracle::m_concurrence(psi, dims, parts)).epsilon(1e-11));
    }
    CHECK_THROWS_AS(m_concurrence_pure(psi, FactorShape{2, 2, 2}, Partition({{0}, {1, 2}}, 3)),
                    ShapeError);
    CHECK_THROWS_AS(m_concurrence_pure(psi, shape, Partition({{0}, {1, 2}}, 3)), InputError);
}
