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
#include "relgme/tensor.hpp"

using namespace relgme;

namespace {

double reconstruction_error(const ComplexMatrix& h, const EigenDecomposition& e) {
    const ComplexMatrix lambda = ComplexMatrix::diagonal(e.values);
    return frobenius_distance(h, e.vectors * lambda * e.vectors.adjoint());
}

}  // namespace

TEST_CASE("Jacobi reconstructs random Hermitian matrices") {
    std::mt19937_64 rng(2024);
    for (std::size_t n = 1; n <= 16; ++n) {
        const ComplexMatrix h = oracle::random_hermitian(n, rng);
        const EigenDecomposition e = hermitian_eigen(h);
        CHECK(reconstruction_error(h, e) < 1e-10);
        CHECK(frobenius_distance(e.vectors.adjoint() * e.vectors, ComplexMatrix::identity(n)) <
              1e-10);
        for (std::size_t k = 1; k < n; ++k) CHECK(e.values[k - 1] >= e.values[k]);
        double trace = 0;
        for (double v : e.values) trace += v;
        CHECK(trace == doctest::Approx(h.trace().real()).epsilon(1e-12));
    }
}

TEST_CASE("Jacobi on closed-form spectra") {
    // Pauli y: eigenvalues ±1.
    const ComplexMatrix y(2, 2, {0, {0, -1}, {0, 1}, 0});
    const EigenDecomposition ey = hermitian_eigen(y);
    CHECK(ey.values[0] == doctest::Approx(1.0));
    CHECK(ey.values[1] == doctest::Approx(-1.0));

    // Degenerate: a rank-one projector onto (1,1,1)/√3 has spectrum {1,0,0}.
    const double r = 1.0 / std::sqrt(3.0);
    const EigenDecomposition ep = hermitian_eigen(StateVector{r, r, r}.projector());
    CHECK(ep.values[0] == doctest::Approx(1.0));
    CHECK(std::abs(ep.values[1]) < 1e-14);
    CHECK(std::abs(ep.values[2]) < 1e-14);

    // Already diagonal: no sweeps needed.
    const std::vector<double> d{3, -1, 2};
    const EigenDecomposition ed = hermitian_eigen(ComplexMatrix::diagonal(d));
    CHECK(ed.sweeps == 0);
    CHECK(ed.values == std::vector<double>{3, 2, -1});
}

TEST_CASE("Jacobi rejects non-Hermitian input") {
    CHECK_THROWS_AS(hermitian_eigen(ComplexMatrix(2, 2, {0, 1, 0, 0})), ValidationError);
    CHECK_THROWS_AS(hermitian_eigen(ComplexMatrix(2, 3)), ShapeError);
}
