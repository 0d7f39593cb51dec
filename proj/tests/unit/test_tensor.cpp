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

#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "relgme/errors.hpp"
#include "relgme/pauli.hpp"
#include "relgme/tensor.hpp"

using namespace relgme;
using C = std::complex<double>;

TEST_CASE("kron of sigma_z with itself") {
    const ComplexMatrix zz = kron(pauli_z(), pauli_z());
    const double expected[4] = {1, -1, -1, 1};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) CHECK(zz(i, j) == C(i == j ? expected[i] : 0.0));
}

TEST_CASE("kron matches the index-loop oracle and the mixed-product rule") {
    std::mt19937_64 rng(11);
    for (std::size_t trial = 0; trial < 10; ++trial) {
        const ComplexMatrix a = oracle::random_hermitian(2 + trial % 3, rng);
        const ComplexMatrix b = oracle::random_hermitian(3, rng);
        CHECK(oracle::max_abs_diff(kron(a, b), oracle::kron(a, b)) == 0.0);
        const ComplexMatrix c = oracle::random_hermitian(2 + trial % 3, rng);
        const ComplexMatrix d = oracle::random_hermitian(3, rng);
        CHECK(frobenius_distance(kron(a, b) * kron(c, d), kron(a * c, b * d)) < 1e-11);
    }
}

TEST_CASE("Bell state reduces to the maximally mixed qubit") {
    const double r = 1.0 / std::sqrt(2.0);
    const StateVector phi{r, 0, 0, r};
    const FactorShape shape{2, 2};
    for (std::size_t f = 0; f < 2; ++f) {
        const std::vector<std::size_t> keep{f};
        const ComplexMatrix rho = partial_trace(phi.projector(), shape, keep);
        CHECK(frobenius_distance(rho, 0.5 * ComplexMatrix::identity(2)) < 1e-15);
        CHECK(frobenius_distance(reduced_density(phi, shape, keep), rho) < 1e-15);
    }
    CHECK(reduced_purity(phi, shape, std::vector<std::size_t>{0}) == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("partial trace agrees with the oracle on a mixed composite-shaped state") {
    std::mt19937_64 rng(3);
    const std::vector<std::size_t> dims{3, 2, 2};
    const FactorShape shape{3, 2, 2};
    const ComplexMatrix rho = oracle::random_density(12, 3, rng);
    const std::vector<std::vector<std::size_t>> keeps{{0}, {1}, {2}, {0, 2}, {1, 2}, {0, 1}};
    for (const auto& keep : keeps) {
        const ComplexMatrix got = partial_trace(rho, shape, std::span<const std::size_t>(keep));
        CHECK(oracle::max_abs_diff(got, oracle::partial_trace(rho, dims, keep)) < 1e-14);
    }
    // Keep order does not permute the output.
    const std::vector<std::size_t> reversed{2, 0};
    CHECK(oracle::max_abs_diff(partial_trace(rho, shape, std::span<const std::size_t>(reversed)),
                               oracle::partial_trace(rho, dims, {0, 2})) < 1e-14);
}

TEST_CASE("reduced_density and reduced_purity agree with the projector route") {
    std::mt19937_64 rng(5);
    const std::vector<std::size_t> dims{3, 2, 3, 2};
    const FactorShape shape{3, 2, 3, 2};
    const StateVector psi = oracle::random_state(36, rng);
    for (const std::vector<std::size_t>& keep :
         {std::vector<std::size_t>{0, 3}, {1}, {1, 2, 3}}) {
        const ComplexMatrix expected = oracle::partial_trace(oracle::projector(psi), dims, keep);
        const std::span<const std::size_t> k(keep);
        CHECK(oracle::max_abs_diff(reduced_density(psi, shape, k), expected) < 1e-14);
        CHECK(reduced_purity(psi, shape, k) ==
              doctest::Approx(oracle::trace_of_square(expected)).epsilon(1e-13));
    }
}

TEST_CASE("shape errors") {
    CHECK_THROWS_AS(ComplexMatrix(2, 2, std::vector<C>(3)), ShapeError);
    CHECK_THROWS_AS(ComplexMatrix(2, 3) * ComplexMatrix(2, 3), ShapeError);
    CHECK_THROWS_AS(partial_trace(ComplexMatrix::identity(4), FactorShape{2, 3}, {0}), ShapeError);
    CHECK_THROWS_AS(partial_trace(ComplexMatrix::identity(4), FactorShape{2, 2}, {0, 0}),
                    ShapeError);
    CHECK_THROWS_AS(StateVector(std::vector<C>(3)).normalized(), InputError);
}

TEST_CASE("density matrix validation") {
    CHECK(is_density_matrix(0.5 * ComplexMatrix::identity(2), 1e-9));
    CHECK(purity(0.5 * ComplexMatrix::identity(2)) == doctest::Approx(0.5));

    const DensityCheck non_hermitian = is_density_matrix(ComplexMatrix(2, 2, {1, 0.3, 0, 0}), 1e-9);
    CHECK_FALSE(non_hermitian.valid);
    CHECK(non_hermitian.hermiticity_error == doctest::Approx(0.3));

    const DensityCheck wrong_trace = is_density_matrix(ComplexMatrix::identity(2), 1e-9);
    CHECK_FALSE(wrong_trace.valid);

    const DensityCheck negative = is_density_matrix(ComplexMatrix(2, 2, {1.5, 0, 0, -0.5}), 1e-9);
    CHECK_FALSE(negative.valid);
    CHECK(negative.min_eigenvalue == doctest::Approx(-0.5));
    CHECK_THROWS_AS(purity(ComplexMatrix(2, 2, {1.5, 0, 0, -0.5})), ValidationError);
}

TEST_CASE("linear entropy from minors") {
    std::mt19937_64 rng(8);
    const FactorShape shape{3, 2, 3, 2};
    const StateVector psi = oracle::random_state(36, rng);
    for (const std::vector<std::size_t>& keep : {std::vector<std::size_t>{0}, {1, 3}, {0, 2, 3}}) {
        const std::span<const std::size_t> k(keep);
        CHECK(reduced_linear_entropy(psi, shape, k) ==
              doctest::Approx(1.0 - reduced_purity(psi, shape, k)).epsilon(1e-12));
    }
    // A product state: the minors vanish to rounding squared.
    const StateVector a = oracle::random_state(6, rng), b = oracle::random_state(6, rng);
    const std::vector<std::size_t> keep{0, 1};
    CHECK(reduced_linear_entropy(kron(a, b), shape, keep) < 1e-28);
}

TEST_CASE("purity of an equal mixture of orthogonal states") {
    ComplexMatrix rho = 0.5 * StateVector::basis(3, 0).projector();
    rho += 0.5 * StateVector{0, 1 / std::sqrt(2.0), -1 / std::sqrt(2.0)}.projector();
    CHECK(purity(rho) == doctest::Approx(0.5).epsilon(1e-15));
}
