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

// Momentum, spin and composite states of three spin-½ particles with three
// sharp momentum labels each.
//
// Composite factor order is (mom₁, spin₁, mom₂, spin₂, mom₃, spin₃) with
// shape (3,2,3,2,3,2); the basis index of |m₁ s₁ m₂ s₂ m₃ s₃⟩ is
// ((((m₁·2+s₁)·3+m₂)·2+s₂)·3+m₃)·2+s₃. Spin index 0 is |↑⟩, momentum index
// 0, 1, 2 is p_A, p_B, p_C.

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "relgme/kinematics.hpp"
#include "relgme/pauli.hpp"
#include "relgme/tensor.hpp"

namespace relgme {

inline constexpr std::size_t kSpinDim = 8;
inline constexpr std::size_t kMomentumDim = 27;
inline constexpr std::size_t kCompositeDim = 216;

const FactorShape& spin_shape();       // (2,2,2)
const FactorShape& momentum_shape();   // (3,3,3)
const FactorShape& composite_shape();  // (3,2,3,2,3,2)

inline constexpr std::array<std::size_t, 3> kMomentumFactors{0, 2, 4};
inline constexpr std::array<std::size_t, 3> kSpinFactors{1, 3, 5};

std::size_t composite_index(std::size_t m1, std::size_t s1, std::size_t m2, std::size_t s2,
                            std::size_t m3, std::size_t s3);
/// s₁·4 + s₂·2 + s₃
std::size_t spin_index(std::size_t s1, std::size_t s2, std::size_t s3);
/// m₁·9 + m₂·3 + m₃
std::size_t momentum_index(std::size_t m1, std::size_t m2, std::size_t m3);

/// cos α |↓↓↓⟩ + sin α |↑↑↑⟩.
StateVector ghz_alpha(double alpha);
/// (|↓↓↓⟩ + |↑↑↑⟩)/√2.
StateVector ghz();
/// (|↓↓↑⟩ + |↓↑↓⟩ + |↑↓↓⟩)/√3.
StateVector w_state();

/// Permutations of (p_A, p_B, p_C) in the order ABC, ACB, BCA, BAC, CAB, CBA:
/// even index ⇔ even permutation.
inline constexpr std::array<MomentumAssignment, 6> kPermutations{{
    {0, 1, 2},
    {0, 2, 1},
    {1, 2, 0},
    {1, 0, 2},
    {2, 0, 1},
    {2, 1, 0},
}};

using PermutationCoefficients = std::array<Complex, 6>;

/// α_i = (−1)^i / √6.
PermutationCoefficients antisymmetric_coefficients();
/// α = e_k, the product momentum state |Π_k(p_A p_B p_C)⟩.
PermutationCoefficients product_coefficients(std::size_t permutation = 0);

/// Σ_i α_i |Π_i(p_A p_B p_C)⟩ in the 27-dimensional momentum space. Throws
/// InputError unless Σ|α_i|² = 1 within tol::kPhysics.
StateVector permutation_momentum(const PermutationCoefficients& coeffs);

/// Normalized pure state on the composite (3,2,3,2,3,2) space.
class CompositeState {
   public:
    /// Throws ShapeError for a wrong dimension, InputError if not normalized.
    explicit CompositeState(StateVector vector);

    const StateVector& vector() const { return vector_; }
    static const FactorShape& shape() { return composite_shape(); }

    /// Tr_mom |ψ⟩⟨ψ| (8×8).
    ComplexMatrix spin_density() const;

   private:
    StateVector vector_;
};

/// |mom⟩ ⊗ |spin⟩ re-interleaved into composite factor order.
CompositeState compose(const StateVector& mom, const StateVector& spin);

struct EnsembleMember {
    double weight;
    CompositeState state;
};

/// Σ_i q_i |Ψ_i⟩⟨Ψ_i| over composite pure states.
class MixedState {
   public:
    /// Throws InputError on an empty ensemble, non-positive weights, or
    /// weights not summing to 1 within tol::kPhysics.
    explicit MixedState(std::vector<EnsembleMember> members);

    const std::vector<EnsembleMember>& members() const { return members_; }
    ComplexMatrix density() const;
    ComplexMatrix spin_density() const;

   private:
    std::vector<EnsembleMember> members_;
};

/// Disjoint cover of factor indices 0..n-1 by at least two nonempty parts.
class Partition {
   public:
    /// Parts are kept in the given order, each sorted ascending. Throws
    /// InputError if the parts are not a disjoint cover of 0..n_factors-1 or
    /// fewer than two parts are given.
    Partition(std::vector<std::vector<std::size_t>> parts, std::size_t n_factors);

    std::size_t size() const { return parts_.size(); }
    std::size_t factor_count() const { return n_factors_; }
    const std::vector<std::size_t>& operator[](std::size_t i) const { return parts_[i]; }
    const std::vector<std::vector<std::size_t>>& parts() const { return parts_; }

    /// "{1,3,5}|{0,2,4}"
    std::string to_string() const;

    bool operator==(const Partition&) const = default;

   private:
    std::vector<std::vector<std::size_t>> parts_;
    std::size_t n_factors_;
};

}  // namespace relgme
