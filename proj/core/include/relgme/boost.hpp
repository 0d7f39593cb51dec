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

#pragma once

// Lorentz boost acting on composite spin–momentum states.
//
// A particle with sharp momentum p has its spin rotated by U(p, δ); boosted
// momentum labels are identified with the original ones, so the boost acts on
// the composite space as ⊗_j Σ_p |p⟩⟨p| ⊗ U(p, δ). Three routes are provided:
//
//   * BoostUnitary: the full 216×216 operator (brute force).
//   * boosted_spin_ensemble: the permutation-momentum shortcut
//     Λ[ρ] = Σ_i |α_i|² U_i ρ U_i†, never forming the composite state.
//   * boost_mixed: an arbitrary ensemble, together with the explicit
//     decomposition Σ w·U σ U† of the reduced spin state.

#include <vector>

#include "relgme/kinematics.hpp"
#include "relgme/states.hpp"
#include "relgme/tensor.hpp"

namespace relgme {

/// Σ_p |p⟩⟨p| ⊗ U(p, δ) on one particle's (momentum, spin) pair (6×6).
ComplexMatrix particle_boost_block(const BoostScenario& scenario);

class BoostUnitary {
   public:
    explicit BoostUnitary(const BoostScenario& scenario);

    const ComplexMatrix& matrix() const { return matrix_; }
    double delta() const { return delta_; }
    StateVector apply(const StateVector& v) const { return matrix_ * v; }

   private:
    ComplexMatrix matrix_;
    double delta_;
};

BoostUnitary build_boost_unitary(const BoostScenario& scenario);

/// U·|Ψ⟩ via the full boost unitary.
CompositeState boost_pure(const CompositeState& state, const BoostScenario& scenario);

/// One summand w · U |φ⟩⟨φ| U† of a boosted spin state.
struct SpinTerm {
    double weight;
    ComplexMatrix unitary;  // 8×8, product of three 2×2 rotations
    StateVector spin;       // normalized pre-boost spin state

    ComplexMatrix base() const { return spin.projector(); }
    StateVector rotated_state() const { return unitary * spin; }
    ComplexMatrix rotated() const { return rotated_state().projector(); }
};

struct SpinEnsemble {
    std::vector<SpinTerm> terms;

    double total_weight() const;
    /// Σ_k w_k U_k σ_k U_k†.
    ComplexMatrix density() const;
};

/// Terms (|α_i|², U_local(Π_i), |φ⟩⟨φ|) for the nonzero coefficients.
/// Throws InputError unless Σ|α_i|² = 1 within tol::kPhysics.
SpinEnsemble boosted_spin_ensemble(const PermutationCoefficients& coeffs, const StateVector& spin,
                                   const BoostScenario& scenario);

/// Reduced spin state of a boosted (permutation momentum) ⊗ (pure spin)
/// state, computed from the ensemble shortcut.
ComplexMatrix boosted_spin_density_fast(const PermutationCoefficients& coeffs,
                                        const StateVector& spin, const BoostScenario& scenario);

struct MixedBoostResult {
    MixedState full;
    ComplexMatrix spin;        // Σ_i q_i Tr_mom(boosted member i)
    SpinEnsemble certificate;  // Σ_{i,m} q_i |α^i_m|² U_m σ^i_m U_m†
};

/// Boosts every ensemble member. The certificate expands member i in sharp
/// momentum kets, |Ψ_i⟩ = Σ_m α^i_m |m⟩ ⊗ |φ^i_m⟩, so each term carries the
/// local unitary of momentum assignment m.
MixedBoostResult boost_mixed(const MixedState& state, const BoostScenario& scenario);

}  // namespace relgme
