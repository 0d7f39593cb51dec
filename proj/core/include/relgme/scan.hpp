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

// Parameter sweeps over the Wigner angle δ.
//
// fig2: GME witness of the boosted spin state of
//       Σ_i α_i|Π_i⟩ ⊗ (cos α|↓↓↓⟩ + sin α|↑↑↑⟩) over an (α, δ) grid,
//       α ∈ [0, π], δ ∈ [0, π/2]; rows ordered outer α, inner δ.
// fig3: m-concurrence of the boosted composite pure state across a fixed
//       catalog of partitions of the six factors; rows ordered outer δ,
//       inner partition.
//
// Grid points are independent and may be evaluated on several threads; the
// output is identical for every thread count.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "relgme/kinematics.hpp"
#include "relgme/measures.hpp"
#include "relgme/states.hpp"

namespace relgme {

enum class SpinChoice { ghz, w, ghz_alpha };
enum class MomentumChoice { product, antisymmetric, custom };

SpinChoice parse_spin_choice(std::string_view name);
MomentumChoice parse_momentum_choice(std::string_view name);

struct ScanConfig {
    /// When set (together with particle_speed) the δ axis is generated by
    /// sweeping the observer speed over [0, observer_speed].
    std::optional<double> observer_speed;
    std::optional<double> particle_speed;
    std::size_t n_alpha = 61;
    std::size_t n_delta = 61;
    SpinChoice spin = SpinChoice::ghz;
    double alpha = 0.7853981633974483;  // π/4, used by SpinChoice::ghz_alpha
    MomentumChoice momentum = MomentumChoice::antisymmetric;
    PermutationCoefficients custom_coefficients{};
    WitnessVariant variant = WitnessVariant::normalized;
    double azimuth_offset = 0.0;
    unsigned threads = 1;

    /// Throws InputError (bad grid sizes, half-specified speeds, thread count
    /// of zero) or DomainError (speeds outside [0, 1)).
    void validate() const;
};

ScanConfig default_fig2_config();
ScanConfig default_fig3_config();  // 121 δ points

std::vector<double> delta_grid(const ScanConfig& config);
std::vector<double> alpha_grid(const ScanConfig& config);
PermutationCoefficients momentum_coefficients(const ScanConfig& config);
StateVector spin_state(const ScanConfig& config);

struct Fig2Row {
    double alpha;
    double delta;
    double witness;    // value of config.variant
    double gme_bound;  // max(0, normalized witness)
};

std::vector<Fig2Row> scan_fig2(const ScanConfig& config);

struct CatalogEntry {
    std::string name;
    Partition partition;
};

/// spins|momenta, particles, all singletons, then spin_j|rest, mom_j|rest
/// and particle_j|rest for j = 1..3.
const std::vector<CatalogEntry>& fig3_partition_catalog();

struct Fig3Row {
    double delta;
    std::size_t partition;  // index into fig3_partition_catalog()
    double m_concurrence;
};

std::vector<Fig3Row> scan_fig3(const ScanConfig& config);

/// Round-trip-shortest decimal, capped at 12 significant digits; -0 prints as 0.
std::string format_number(double x);

void write_fig2_csv(std::ostream& out, const std::vector<Fig2Row>& rows);
void write_fig3_csv(std::ostream& out, const std::vector<Fig3Row>& rows);

}  // namespace relgme
