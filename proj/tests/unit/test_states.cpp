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

#include "doctest.h"
#include "oracles.hpp"
#include "relgme/errors.hpp"
#include "relgme/pauli.hpp"
#include "relgme/states.hpp"

using namespace relgme;
using C = std::complex<double>;

TEST_CASE("basis index convention") {
    const std::vector<std::size_t> dims{3, 2, 3, 2, 3, 2};
    for (std::size_t i = 0; i < kCompositeDim; ++i) {
        const auto d = oracle::digits(i, dims);
        CHECK(composite_index(d[0], d[1], d[2], d[3], d[4], d[5]) == i);
    }
    CHECK(spin_index(kSpinUp, kSpinUp, kSpinUp) == 0);
    CHECK(spin_index(kSpinDown, kSpinDown, kSpinDown) == 7);
    CHECK(spin_index(1, 0, 1) == 5);
    CHECK(momentum_index(2, 0, 1) == 19);
}

TEST_CASE("GHZ and W amplitudes") {
    const double r2 = 1.0 / std::sqrt(2.0);
    const double r3 = 1.0 / std::sqrt(3.0);
    const StateVector g = ghz();
    CHECK(g[0] == C(r2));
    CHECK(g[7] == C(r2));
    const StateVector w = w_state();
    for (std::size_t i = 0; i < 8; ++i)
        CHECK(std::abs(w[i] - C(i == 3 || i == 5 || i == 6 ? r3 : 0.0)) < 1e-15);
    const StateVector a = ghz_alpha(0.3);
    CHECK(a[7] == C(std::cos(0.3)));
    CHECK(a[0] == C(std::sin(0.3)));
    CHECK(distance(ghz_alpha(std::numbers::pi / 4), g) < 1e-15);
}

TEST_CASE("antisymmetric momentum state changes sign under particle exchange") {
    const StateVector mom = permutation_momentum(antisymmetric_coefficients());
    CHECK(mom.norm_squared() == doctest::Approx(1.0));
    const std::vector<std::size_t> dims{3, 3, 3};
    const std::array<std::array<std::size_t, 2>, 3> swaps{{{0, 1}, {1, 2}, {0, 2}}};
    for (const auto& sw : swaps) {
        for (std::size_t i = 0; i < 27; ++i) {
            auto d = oracle::digits(i, dims);
            std::swap(d[sw[0]], d[sw[1]]);
            CHECK(std::abs(mom[oracle::undigits(d, dims)] + mom[i]) < 1e-15);
        }
    }
    // Support is the six permutations of (A, B, C).
    CHECK(std::abs(mom[momentum_index(0, 1, 2)]) == doctest::Approx(1.0 / std::sqrt(6.0)));
    CHECK(mom[momentum_index(0, 0, 1)] == C(0));
}

TEST_CASE("permutation coefficients must be normalized") {
    PermutationCoefficients c{};
    c[0] = 0.5;
    CHECK_THROWS_AS(permutation_momentum(c), InputError);
    CHECK(permutation_momentum(product_coefficients(3))[momentum_index(1, 0, 2)] == C(1));
}

TEST_CASE("compose interleaves momentum and spin factors") {
    const StateVector mom = StateVector::basis(27, momentum_index(2, 1, 0));
    const StateVector spin = StateVector::basis(8, spin_index(1, 0, 1));
    const CompositeState s = compose(mom, spin);
    CHECK(s.vector()[composite_index(2, 1, 1, 0, 0, 1)] == C(1));
    CHECK(s.spin_density()(5, 5) == C(1));
    CHECK_THROWS_AS(CompositeState(StateVector::basis(8, 0)), ShapeError);
    CHECK_THROWS_AS(CompositeState(2.0 * StateVector::basis(216, 0)), InputError);
}

TEST_CASE("mixed state validation") {
    const CompositeState a = compose(StateVector::basis(27, 5), ghz());
    const CompositeState b = compose(StateVector::basis(27, 7), w_state());
    const MixedState m({{0.25, a}, {0.75, b}});
    CHECK(m.density().trace().real() == doctest::Approx(1.0));
    CHECK(m.spin_density()(7, 7).real() == doctest::Approx(0.125));
    CHECK_THROWS_AS(MixedState({}), InputError);
    CHECK_THROWS_AS(MixedState({{0.5, a}}), InputError);
    CHECK_THROWS_AS(MixedState({{1.5, a}, {-0.5, b}}), InputError);
}

TEST_CASE("partitions") {
    const Partition p({{4, 2, 0}, {1, 3, 5}}, 6);
    CHECK(p.to_string() == "{0,2,4}|{1,3,5}");
    CHECK_THROWS_AS(Partition({{0, 1, 2}}, 3), InputError);
    CHECK_THROWS_AS(Partition({{0, 1}, {1, 2}}, 3), InputError);
    CHECK_THROWS_AS(Partition({{0}, {2}}, 3), InputError);
    CHECK_THROWS_AS(Partition({{0, 1, 2}, {}}, 3), InputError);
}

TEST_CASE("spin reduction of a product composite") {
    std::mt19937_64 rng(14);
    for (int k = 0; k < 10; ++k) {
        const StateVector m = oracle::random_state(27, rng);
        const StateVector s = oracle::random_state(8, rng);
        CHECK(frobenius_distance(compose(m, s).spin_density(), s.projector()) < 1e-12);
    }
}
