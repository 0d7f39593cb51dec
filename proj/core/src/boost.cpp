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

#include "relgme/boost.hpp"

#include <cmath>
#include <sstream>

#include "relgme/errors.hpp"
#include "relgme/tolerances.hpp"

namespace relgme {

ComplexMatrix particle_boost_block(const BoostScenario& scenario) {
    ComplexMatrix block(6, 6);
    for (std::size_t p = 0; p < kMomentumLabels; ++p) {
        const ComplexMatrix& u = scenario.rotation(p);
        for (std::size_t r = 0; r < 2; ++r)
            for (std::size_t c = 0; c < 2; ++c) block(2 * p + r, 2 * p + c) = u(r, c);
    }
    return block;
}

BoostUnitary::BoostUnitary(const BoostScenario& scenario) : delta_(scenario.delta()) {
    const ComplexMatrix block = particle_boost_block(scenario);
    matrix_ = kron(kron(block, block), block);
}

BoostUnitary build_boost_unitary(const BoostScenario& scenario) { return BoostUnitary(scenario); }

CompositeState boost_pure(const CompositeState& state, const BoostScenario& scenario) {
    return CompositeState(build_boost_unitary(scenario).apply(state.vector()));
}

double SpinEnsemble::total_weight() const {
    double w = 0.0;
    for (const auto& t : terms) w += t.weight;
    return w;
}

ComplexMatrix SpinEnsemble::density() const {
    ComplexMatrix rho(kSpinDim, kSpinDim);
    for (const auto& t : terms) rho += Complex(t.weight) * t.rotated();
    return rho;
}

SpinEnsemble boosted_spin_ensemble(const PermutationCoefficients& coeffs, const StateVector& spin,
                                   const BoostScenario& scenario) {
    double n2 = 0.0;
    for (const Complex& a : coeffs) n2 += std::norm(a);
    if (std::abs(n2 - 1.0) > tol::kPhysics) {
        std::ostringstream msg;
        msg << "momentum coefficients have squared norm " << n2 << ", expected 1";
        throw InputError(msg.str());
    }
    if (spin.dim() != kSpinDim) throw ShapeError("spin state must have dimension 8");
    if (std::abs(spin.norm_squared() - 1.0) > tol::kPhysics)
        throw InputError("spin state is not normalized");

    SpinEnsemble ens;
    for (std::size_t i = 0; i < kPermutations.size(); ++i) {
        const double w = std::norm(coeffs[i]);
        if (w == 0.0) continue;
        ens.terms.push_back({w, local_unitary(kPermutations[i], scenario), spin});
    }
    return ens;
}

ComplexMatrix boosted_spin_density_fast(const PermutationCoefficients& coeffs,
                                        const StateVector& spin, const BoostScenario& scenario) {
    return boosted_spin_ensemble(coeffs, spin, scenario).density();
}

MixedBoostResult boost_mixed(const MixedState& state, const BoostScenario& scenario) {
    const BoostUnitary unitary = build_boost_unitary(scenario);

    std::vector<EnsembleMember> boosted;
    ComplexMatrix spin(kSpinDim, kSpinDim);
    SpinEnsemble certificate;

    for (const auto& member : state.members()) {
        CompositeState out(unitary.apply(member.state.vector()));
        spin += Complex(member.weight) * out.spin_density();

        const StateVector& psi = member.state.vector();
        for (std::size_t m1 = 0; m1 < 3; ++m1)
            for (std::size_t m2 = 0; m2 < 3; ++m2)
                for (std::size_t m3 = 0; m3 < 3; ++m3) {
                    std::vector<Complex> phi(kSpinDim);
                    for (std::size_t s1 = 0; s1 < 2; ++s1)
                        for (std::size_t s2 = 0; s2 < 2; ++s2)
                            for (std::size_t s3 = 0; s3 < 2; ++s3)
                                phi[spin_index(s1, s2, s3)] =
                                    psi[composite_index(m1, s1, m2, s2, m3, s3)];
                    const StateVector branch(std::move(phi));
                    const double a2 = branch.norm_squared();
                    if (a2 == 0.0) continue;
                    certificate.terms.push_back({member.weight * a2,
                                                 local_unitary({m1, m2, m3}, scenario),
                                                 branch.normalized()});
                }
        boosted.push_back({member.weight, std::move(out)});
    }
    return {MixedState(std::move(boosted)), std::move(spin), std::move(certificate)};
}

}  // namespace relgme
