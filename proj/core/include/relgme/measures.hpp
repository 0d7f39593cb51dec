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

// Entanglement quantifiers for three spins and for partitions of the
// composite spin–momentum space.
//
// The three-qubit GME witness is assembled from one coherence and six
// σ_z-basis populations. With z = ρ_{↑↑↑,↓↓↓} and P± = (1 ± σ_z)/2:
//
//   ¼⟨XXX − XYY − YXY − YYX⟩ = 2 Re z
//   ¼⟨YYY − XXY − YXX − XYX⟩ = 2 Im z
//
// so the nine product settings {X,Y}^{⊗3} ∪ {Z}^{⊗3} suffice to measure it.
//
// Variants:
//   normalized  2|z| − 2 Σ_k √(p_k p̄_k), p̄_k the population of the bit
//               complement of p_k. Nonpositive on every biseparable state;
//               this is the default and the only variant used for detection.
//   symmetric   |2 Re z + 2 Im z| − Σ_k √(p_k p̄_k).
//   as_printed  as symmetric, but the third product is ⟨P⁻P⁺P⁺⟩² instead of
//               ⟨P⁻P⁺P⁺⟩⟨P⁺P⁻P⁻⟩.
// All three give |sin 2α| on cos α|↓↓↓⟩ + sin α|↑↑↑⟩; the last two can be
// positive on biseparable states whose coherence has a complex phase or
// whose populations are unbalanced, e.g. |+⟩ ⊗ (|↑↑⟩+|↓↓⟩)/√2 scores 1/4.

#include <array>
#include <string_view>

#include "relgme/states.hpp"
#include "relgme/tensor.hpp"

namespace relgme {

enum class WitnessPath { pauli_settings, matrix_elements };
enum class WitnessVariant { normalized, symmetric, as_printed };

std::string_view to_string(WitnessPath path);
std::string_view to_string(WitnessVariant variant);
/// Accepts "normalized", "symmetric", "as-printed"/"as_printed".
WitnessVariant parse_witness_variant(std::string_view name);

struct WitnessReport {
    double value = 0.0;                      // offdiag_term − Σ population_terms
    double offdiag_term = 0.0;
    std::array<double, 3> population_terms{};
    double offdiag_modulus = 0.0;            // 2|ρ_{↑↑↑,↓↓↓}|
    WitnessPath path = WitnessPath::matrix_elements;
    WitnessVariant variant = WitnessVariant::normalized;

    /// value > tol::kPhysics
    bool detects_gme() const;
};

/// Throws ValidationError unless `rho` is an 8×8 density matrix within
/// tol::kPhysics; NumericError on a negative radicand beyond rounding noise.
WitnessReport witness_hmgh(const ComplexMatrix& rho,
                           WitnessVariant variant = WitnessVariant::normalized,
                           WitnessPath path = WitnessPath::matrix_elements);

/// max(0, normalized witness): a lower bound on GME concurrence, tight for
/// pure GHZ-type states.
double gme_lower_bound(const ComplexMatrix& rho);

/// Pure-state m-concurrence over an m-part partition of `shape`'s factors:
///
///   C = 2^{1−m/2} · √( (2^m − 2) − Σ_γ Tr ρ_γ² ),
///
/// γ ranging over proper nonempty unions of parts.
double m_concurrence_pure(const StateVector& state, const FactorShape& shape,
                          const Partition& partition);

/// Coffman–Kundu–Wootters residual tangle 4|Det(a)| of a normalized 3-qubit state.
double three_tangle(const StateVector& state);

}  // namespace relgme
