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

#include "relgme/states.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "relgme/errors.hpp"
#include "relgme/tolerances.hpp"

namespace relgme {

const FactorShape& spin_shape() {
    static const FactorShape s{2, 2, 2};
    return s;
}

const FactorShape& momentum_shape() {
    static const FactorShape s{3, 3, 3};
    return s;
}

const FactorShape& composite_shape() {
    static const FactorShape s{3, 2, 3, 2, 3, 2};
    return s;
}

std::size_t composite_index(std::size_t m1, std::size_t s1, std::size_t m2, std::size_t s2,
                            std::size_t m3, std::size_t s3) {
    return ((((m1 * 2 + s1) * 3 + m2) * 2 + s2) * 3 + m3) * 2 + s3;
}

std::size_t spin_index(std::size_t s1, std::size_t s2, std::size_t s3) {
    return s1 * 4 + s2 * 2 + s3;
}

std::size_t momentum_index(std::size_t m1, std::size_t m2, std::size_t m3) {
    return m1 * 9 + m2 * 3 + m3;
}

StateVector ghz_alpha(double alpha) {
    std::vector<Complex> amps(kSpinDim);
    amps[spin_index(kSpinDown, kSpinDown, kSpinDown)] = std::cos(alpha);
    amps[spin_index(kSpinUp, kSpinUp, kSpinUp)] = std::sin(alpha);
    return StateVector(std::move(amps));
}

StateVector ghz() {
    const double h = 1.0 / std::sqrt(2.0);
    std::vector<Complex> amps(kSpinDim);
    amps[spin_index(kSpinDown, kSpinDown, kSpinDown)] = h;
    amps[spin_index(kSpinUp, kSpinUp, kSpinUp)] = h;
    return StateVector(std::move(amps));
}

StateVector w_state() {
    const double t = 1.0 / std::sqrt(3.0);
    std::vector<Complex> amps(kSpinDim);
    amps[spin_index(kSpinDown, kSpinDown, kSpinUp)] = t;
    amps[spin_index(kSpinDown, kSpinUp, kSpinDown)] = t;
    amps[spin_index(kSpinUp, kSpinDown, kSpinDown)] = t;
    return StateVector(std::move(amps));
}

PermutationCoefficients antisymmetric_coefficients() {
    const double a = 1.0 / std::sqrt(6.0);
    return {a, -a, a, -a, a, -a};
}

PermutationCoefficients product_coefficients(std::size_t permutation) {
    if (permutation >= kPermutations.size()) throw InputError("permutation index out of range");
    PermutationCoefficients c{};
    c[permutation] = 1.0;
    return c;
}

StateVector permutation_momentum(const PermutationCoefficients& coeffs) {
    double n2 = 0.0;
    for (const Complex& a : coeffs) n2 += std::norm(a);
    if (std::abs(n2 - 1.0) > tol::kPhysics) {
        std::ostringstream msg;
        msg << "momentum coefficients have squared norm " << n2 << ", expected 1";
        throw InputError(msg.str());
    }
    std::vector<Complex> amps(kMomentumDim);
    for (std::size_t i = 0; i < kPermutations.size(); ++i) {
        const auto& p = kPermutations[i];
        amps[momentum_index(p[0], p[1], p[2])] += coeffs[i];
    }
    return StateVector(std::move(amps));
}

CompositeState::CompositeState(StateVector vector) : vector_(std::move(vector)) {
    if (vector_.dim() != kCompositeDim) {
        throw ShapeError("composite state needs " + std::to_string(kCompositeDim) +
                         " amplitudes, got " + std::to_string(vector_.dim()));
    }
    const double n2 = vector_.norm_squared();
    if (std::abs(n2 - 1.0) > tol::kPhysics) {
        std::ostringstream msg;
        msg << "composite state has squared norm " << n2 << ", expected 1";
        throw InputError(msg.str());
    }
}

ComplexMatrix CompositeState::spin_density() const {
    return reduced_density(vector_, composite_shape(), kSpinFactors);
}

CompositeState compose(const StateVector& mom, const StateVector& spin) {
    if (mom.dim() != kMomentumDim || spin.dim() != kSpinDim)
        throw ShapeError("compose expects a 27-dim momentum and an 8-dim spin vector");
    std::vector<Complex> amps(kCompositeDim);
    for (std::size_t m1 = 0; m1 < 3; ++m1)
        for (std::size_t m2 = 0; m2 < 3; ++m2)
            for (std::size_t m3 = 0; m3 < 3; ++m3) {
                const Complex a = mom[momentum_index(m1, m2, m3)];
                if (a == Complex{}) continue;
                for (std::size_t s1 = 0; s1 < 2; ++s1)
                    for (std::size_t s2 = 0; s2 < 2; ++s2)
                        for (std::size_t s3 = 0; s3 < 2; ++s3)
                            amps[composite_index(m1, s1, m2, s2, m3, s3)] =
                                a * spin[spin_index(s1, s2, s3)];
            }
    return CompositeState(StateVector(std::move(amps)));
}

MixedState::MixedState(std::vector<EnsembleMember> members) : members_(std::move(members)) {
    if (members_.empty()) throw InputError("mixed state needs at least one ensemble member");
    double total = 0.0;
    for (std::size_t i = 0; i < members_.size(); ++i) {
        const double w = members_[i].weight;
        if (!(w > 0.0) || !std::isfinite(w)) {
            throw InputError("ensemble member " + std::to_string(i) + " has non-positive weight");
        }
        total += w;
    }
    if (std::abs(total - 1.0) > tol::kPhysics) {
        std::ostringstream msg;
        msg << "ensemble weights sum to " << total << ", expected 1";
        throw InputError(msg.str());
    }
}

ComplexMatrix MixedState::density() const {
    ComplexMatrix rho(kCompositeDim, kCompositeDim);
    for (const auto& m : members_) rho += Complex(m.weight) * m.state.vector().projector();
    return rho;
}

ComplexMatrix MixedState::spin_density() const {
    ComplexMatrix rho(kSpinDim, kSpinDim);
    for (const auto& m : members_) rho += Complex(m.weight) * m.state.spin_density();
    return rho;
}

Partition::Partition(std::vector<std::vector<std::size_t>> parts, std::size_t n_factors)
    : parts_(std::move(parts)), n_factors_(n_factors) {
    if (parts_.size() < 2) throw InputError("a partition needs at least two parts");
    std::vector<bool> seen(n_factors_, false);
    std::size_t covered = 0;
    for (auto& part : parts_) {
        if (part.empty()) throw InputError("partition parts must be nonempty");
        std::sort(part.begin(), part.end());
        for (std::size_t f : part) {
            if (f >= n_factors_) {
                throw InputError("partition factor " + std::to_string(f) + " out of range");
            }
            if (seen[f]) throw InputError("partition factor " + std::to_string(f) + " repeated");
            seen[f] = true;
            ++covered;
        }
    }
    if (covered != n_factors_) throw InputError("partition does not cover every factor");
}

std::string Partition::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out << '|';
        out << '{';
        for (std::size_t j = 0; j < parts_[i].size(); ++j) {
            if (j) out << ',';
            out << parts_[i][j];
        }
        out << '}';
    }
    return out.str();
}

}  // namespace relgme
