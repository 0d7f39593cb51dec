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

// Property harness for the two class-invariance conditions:
//
//   1. Entanglement classes must be closed under local unitaries. Checked by
//      applying Haar-random local unitaries and comparing LU invariants
//      (three-tangle, m-concurrence of every partition, reduction spectra).
//   2. Convex mixtures of LU-equivalent pure states stay in their class. A
//      boosted spin state comes with a certificate Σ w·UσU†; it is checked
//      by reconstruction and by LU-equivalence of every term to a base state.
//
// All randomness is seeded; every trial derives its own stream from
// (seed, trial index), so reports are identical however trials are scheduled.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "relgme/boost.hpp"
#include "relgme/kinematics.hpp"
#include "relgme/states.hpp"
#include "relgme/tensor.hpp"

namespace relgme {

using Rng = std::mt19937_64;

/// SplitMix64 of (seed, index): independent per-trial seeds.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// Haar-random unitary. Dimension 2 uses a uniformly random unit quaternion
/// (axis and angle) times a random global phase; other dimensions use
/// Gram–Schmidt on a complex Gaussian matrix.
ComplexMatrix haar_unitary(std::size_t dim, Rng& rng);
/// Haar-random pure state (normalized complex Gaussian vector).
StateVector haar_state(std::size_t dim, Rng& rng);

struct LocalUnitarySample {
    std::vector<ComplexMatrix> factors;  // one per tensor factor

    /// ⊗_k factors[k]
    ComplexMatrix combined() const;
    StateVector apply(const StateVector& state) const;
};

LocalUnitarySample random_local_unitary(const FactorShape& dims, std::uint64_t seed);

/// Every set partition of {0..n-1} into at least two parts, in a fixed order.
std::vector<Partition> all_partitions(std::size_t n_factors);

struct WeightedState {
    double weight;
    StateVector state;
};

/// n_terms random product states across `bipartition` of the three spins,
/// mixed with random (Dirichlet-1) weights.
std::vector<WeightedState> sample_biseparable_ensemble(const Partition& bipartition,
                                                       std::size_t n_terms, std::uint64_t seed);
/// As above with every term drawn across an independently chosen bipartition.
std::vector<WeightedState> sample_biseparable_mixture(std::size_t n_terms, std::uint64_t seed);

ComplexMatrix ensemble_density(const std::vector<WeightedState>& ensemble);
ComplexMatrix sample_biseparable(const Partition& bipartition, std::size_t n_terms,
                                 std::uint64_t seed);

struct LuInvariants {
    double tangle = 0.0;                // three-qubit shapes only, NaN otherwise
    std::vector<double> m_concurrence;  // one per all_partitions(shape.size())
    std::vector<std::vector<double>> factor_spectra;  // eigenvalues of each one-factor reduction

    /// Largest absolute difference over all entries.
    double max_deviation(const LuInvariants& other) const;
};

LuInvariants lu_invariants(const StateVector& state, const FactorShape& shape);

struct Condition1Report {
    std::size_t trials = 0;
    double max_tangle_deviation = 0.0;
    double max_mconc_deviation = 0.0;
    double max_spectrum_deviation = 0.0;
    std::vector<std::uint64_t> failing_seeds;

    double max_deviation() const;
    bool passed() const { return failing_seeds.empty(); }
};

/// Applies `trials` random local unitaries (trial t uses derive_seed(seed, t))
/// and compares LU invariants with the untouched state.
Condition1Report check_condition1(const StateVector& state, const FactorShape& shape,
                                  std::size_t trials, std::uint64_t seed,
                                  double tolerance = 1e-9);

struct ClassCertificate {
    StateVector base;  // 8-dim representative of the class
    SpinEnsemble ensemble;
};

/// Boosts |mom(coeffs)⟩ ⊗ |spin⟩ and returns its certificate with base `spin`.
ClassCertificate certify_boost(const PermutationCoefficients& coeffs, const StateVector& spin,
                               const BoostScenario& scenario);

struct CertificateReport {
    double reconstruction_error = 0.0;  // ‖Σ w UσU† − ρ‖_F
    double weight_error = 0.0;          // |Σ w − 1|
    double max_lu_deviation = 0.0;      // over all terms
    std::size_t worst_term = 0;
    bool reconstruction_ok = false;
    bool lu_equivalent = false;

    bool passed() const { return reconstruction_ok && lu_equivalent; }
};

/// (a) Σ w·UσU† reproduces `rho` within 1e-10 and the weights sum to 1;
/// (b) every rotated term matches the base in three-tangle and one-qubit
/// reduction spectra within 1e-9.
CertificateReport verify_certificate(const ClassCertificate& cert, const ComplexMatrix& rho);

struct SuiteReport {
    std::string name;
    std::size_t cases = 0;
    double max_deviation = 0.0;
    std::vector<std::string> failures;  // one line per failing case, seed included

    bool passed() const { return failures.empty(); }
};

/// LU invariance for GHZ, W, a GHZ(α) grid and 50 Haar-random states, plus
/// invariance of the spin state's LU invariants under separable-momentum boosts.
SuiteReport run_condition1_suite(std::size_t trials, std::uint64_t seed);
/// Certificates of `trials` random boosted (momentum ⊗ pure spin) states,
/// checked against the brute-force reduced spin state.
SuiteReport run_condition2_suite(std::size_t trials, std::uint64_t seed);
/// Normalized witness on `trials` biseparable samples.
SuiteReport run_soundness_suite(std::size_t trials, std::uint64_t seed);

}  // namespace relgme
