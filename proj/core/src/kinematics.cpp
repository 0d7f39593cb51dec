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

#include "relgme/kinematics.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "relgme/errors.hpp"
#include "relgme/pauli.hpp"
#include "relgme/tolerances.hpp"

namespace relgme {

double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

double Rapidity::speed() const { return std::tanh(value); }

Rapidity rapidity(double speed) {
    if (!std::isfinite(speed) || speed < 0.0 || speed >= 1.0) {
        std::ostringstream msg;
        msg << "speed " << speed << " outside [0, 1)";
        throw DomainError(msg.str());
    }
    return Rapidity{std::atanh(speed)};
}

double wigner_angle(Rapidity eta, Rapidity xi) {
    return std::atan(std::sinh(eta.value) * std::sinh(xi.value) /
                     (std::cosh(eta.value) + std::cosh(xi.value)));
}

Vec3 rotation_axis(const Vec3& boost_axis, const Vec3& momentum_dir) {
    const Vec3 n = cross(boost_axis, momentum_dir);
    const double len = norm(n);
    if (len < tol::kAlgebra) throw DomainError("rotation axis: boost axis parallel to momentum");
    return {n[0] / len, n[1] / len, n[2] / len};
}

ComplexMatrix spin_rotation(const Vec3& axis, double delta) {
    const double c = std::cos(delta / 2.0);
    const double s = std::sin(delta / 2.0);
    const Complex mis(0.0, -s);
    ComplexMatrix u = Complex(c) * identity2();
    u += (mis * axis[0]) * pauli_x();
    u += (mis * axis[1]) * pauli_y();
    u += (mis * axis[2]) * pauli_z();
    return u;
}

MomentumGeometry MomentumGeometry::planar(double azimuth_offset) {
    MomentumGeometry g;
    for (std::size_t k = 0; k < kMomentumLabels; ++k) {
        const double phi = azimuth_offset + 2.0 * std::numbers::pi * static_cast<double>(k) / 3.0;
        g.directions[k] = {std::cos(phi), std::sin(phi), 0.0};
    }
    return g;
}

void MomentumGeometry::validate() const {
    for (const Vec3& d : directions) {
        if (std::abs(norm(d) - 1.0) > tol::kAlgebra || std::abs(d[2]) > tol::kAlgebra)
            throw DomainError("momentum directions must be unit vectors in the x-y plane");
    }
    if (std::abs(norm(boost_axis) - 1.0) > tol::kAlgebra)
        throw DomainError("boost axis must be a unit vector");
}

BoostScenario::BoostScenario(double delta, MomentumGeometry geometry, std::optional<double> u,
                             std::optional<double> v)
    : delta_(delta), geometry_(geometry), observer_speed_(u), particle_speed_(v) {
    if (!std::isfinite(delta_)) throw DomainError("Wigner angle must be finite");
    geometry_.validate();
    for (std::size_t k = 0; k < kMomentumLabels; ++k) {
        axes_[k] = rotation_axis(geometry_.boost_axis, geometry_.directions[k]);
        rotations_[k] = spin_rotation(axes_[k], delta_);
    }
}

BoostScenario::BoostScenario(double observer_speed, double particle_speed,
                             MomentumGeometry geometry)
    : BoostScenario(wigner_angle(rapidity(observer_speed), rapidity(particle_speed)), geometry,
                    observer_speed, particle_speed) {}

BoostScenario BoostScenario::with_delta(double delta, MomentumGeometry geometry) {
    return BoostScenario(delta, geometry, std::nullopt, std::nullopt);
}

ComplexMatrix local_unitary(const MomentumAssignment& assignment, const BoostScenario& scenario) {
    for (std::size_t label : assignment) {
        if (label >= kMomentumLabels) {
            throw InputError("local_unitary: unknown momentum label " + std::to_string(label));
        }
    }
    return kron(kron(scenario.rotation(assignment[0]), scenario.rotation(assignment[1])),
                scenario.rotation(assignment[2]));
}

}  // namespace relgme
