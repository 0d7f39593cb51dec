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

// Relativistic bookkeeping for three particles of equal speed moving in the
// x–y plane, seen by an observer boosted along the plane normal.
//
// Only the magnitude of the Wigner angle is physical input here:
//
//     tan δ = sinh η · sinh ξ / (cosh η + cosh ξ),   tanh η = u, tanh ξ = v,
//
// with u the observer speed and v the particle speed (units of c). The
// rotation axis for momentum direction p̂ is boost_axis × p̂ and the spin
// rotation is U = exp(-i δ/2 n̂·σ).

#include <array>
#include <cstddef>
#include <optional>

#include "relgme/tensor.hpp"

namespace relgme {

using Vec3 = std::array<double, 3>;

double dot(const Vec3& a, const Vec3& b);
Vec3 cross(const Vec3& a, const Vec3& b);
double norm(const Vec3& a);

struct Rapidity {
    double value = 0.0;
    double speed() const;
};

/// atanh(speed); throws DomainError unless 0 <= speed < 1.
Rapidity rapidity(double speed);

/// Wigner rotation angle for observer rapidity `eta` and particle rapidity `xi`.
double wigner_angle(Rapidity eta, Rapidity xi);

/// Normalized boost_axis × momentum_dir. Throws DomainError when the inputs
/// are (anti)parallel.
Vec3 rotation_axis(const Vec3& boost_axis, const Vec3& momentum_dir);

/// cos(δ/2)·I − i·sin(δ/2)·(n̂·σ).
ComplexMatrix spin_rotation(const Vec3& axis, double delta);

inline constexpr std::size_t kMomentumLabels = 3;  // p_A, p_B, p_C

/// Momentum label carried by particle 1, 2, 3 (values in 0..2).
using MomentumAssignment = std::array<std::size_t, 3>;

/// Directions of the three sharp momenta and the boost axis.
struct MomentumGeometry {
    std::array<Vec3, kMomentumLabels> directions;
    Vec3 boost_axis{0.0, 0.0, 1.0};

    /// Directions at azimuths offset, offset+120°, offset+240° in the x–y
    /// plane, boost along +z.
    static MomentumGeometry planar(double azimuth_offset = 0.0);

    /// Throws DomainError unless directions are unit vectors in the x–y plane
    /// and the boost axis is a unit vector.
    void validate() const;
};

class BoostScenario {
   public:
    /// Physical scenario: δ follows from the two speeds.
    BoostScenario(double observer_speed, double particle_speed,
                  MomentumGeometry geometry = MomentumGeometry::planar());

    /// Direct parameterization by the Wigner angle, as used by the sweeps.
    static BoostScenario with_delta(double delta,
                                    MomentumGeometry geometry = MomentumGeometry::planar());

    double delta() const { return delta_; }
    const MomentumGeometry& geometry() const { return geometry_; }
    const Vec3& axis(std::size_t label) const { return axes_.at(label); }
    /// 2×2 spin rotation for a particle carrying momentum `label`.
    const ComplexMatrix& rotation(std::size_t label) const { return rotations_.at(label); }
    std::optional<double> observer_speed() const { return observer_speed_; }
    std::optional<double> particle_speed() const { return particle_speed_; }

   private:
    BoostScenario(double delta, MomentumGeometry geometry, std::optional<double> u,
                  std::optional<double> v);

    double delta_ = 0.0;
    MomentumGeometry geometry_;
    std::array<Vec3, kMomentumLabels> axes_{};
    std::array<ComplexMatrix, kMomentumLabels> rotations_;
    std::optional<double> observer_speed_;
    std::optional<double> particle_speed_;
};

/// U(p_1) ⊗ U(p_2) ⊗ U(p_3) for the given momentum assignment (8×8).
/// Throws InputError for labels outside 0..2.
ComplexMatrix local_unitary(const MomentumAssignment& assignment, const BoostScenario& scenario);

}  // namespace relgme
