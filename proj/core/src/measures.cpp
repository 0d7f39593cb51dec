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

#include "relgme/measures.hpp"

#include <cmath>
#include <sstream>

#include "relgme/errors.hpp"
#include "relgme/pauli.hpp"
#include "relgme/tolerances.hpp"

namespace relgme {

std::string_view to_string(WitnessPath path) {
    return path == WitnessPath::pauli_settings ? "pauli_settings" : "matrix_elements";
}

std::string_view to_string(WitnessVariant variant) {
    switch (variant) {
        case WitnessVariant::normalized: return "normalized";
        case WitnessVariant::symmetric: return "symmetric";
        case WitnessVariant::as_printed: return "as-printed";
    }
    return "?";
}

WitnessVariant parse_witness_variant(std::string_view name) {
    if (name == "normalized") return WitnessVariant::normalized;
    if (name == "symmetric") return WitnessVariant::symmetric;
    if (name == "as-printed" || name == "as_printed") return WitnessVariant::as_printed;
    throw InputError("unknown witness variant '" + std::string(name) + "'");
}

bool WitnessReport::detects_gme() const { return value > tol::kPhysics; }

namespace {

double clamped_sqrt(double radicand) {
    if (radicand >= 0.0) return std::sqrt(radicand);
    if (radicand > -tol::kRadicandClamp) return 0.0;
    std::ostringstream msg;
    msg << "negative radicand " << radicand;
    throw NumericError(msg.str());
}

// Populations are indexed by spin_index with + ↦ ↑ (index 0). The pairs
// (1,6), (2,5), (4,3) are bit complements; the as_printed variant uses (4,4) last.
constexpr std::array<std::array<std::size_t, 2>, 3> kComplementPairs{{{1, 6}, {2, 5}, {4, 3}}};
constexpr std::array<std::size_t, 2> kPrintedThirdPair{4, 4};

const ComplexMatrix& spin_projector(std::size_t bit) {
    return bit == kSpinUp ? projector_up() : projector_down();
}

double expectation(const ComplexMatrix& rho, const ComplexMatrix& a, const ComplexMatrix& b,
                   const ComplexMatrix& c) {
    return (rho * kron(kron(a, b), c)).trace().real();
}

struct WitnessInputs {
    double line_real = 0.0;  // 2 Re z
    double line_imag = 0.0;  // 2 Im z
    std::array<double, 8> populations{};
};

WitnessInputs from_pauli_settings(const ComplexMatrix& rho) {
    const ComplexMatrix& x = pauli_x();
    const ComplexMatrix& y = pauli_y();
    WitnessInputs in;
    in.line_real = 0.25 * (expectation(rho, x, x, x) - expectation(rho, x, y, y) -
                           expectation(rho, y, x, y) - expectation(rho, y, y, x));
    in.line_imag = 0.25 * (expectation(rho, y, y, y) - expectation(rho, x, x, y) -
                           expectation(rho, y, x, x) - expectation(rho, x, y, x));
    for (std::size_t s1 = 0; s1 < 2; ++s1)
        for (std::size_t s2 = 0; s2 < 2; ++s2)
            for (std::size_t s3 = 0; s3 < 2; ++s3)
                in.populations[spin_index(s1, s2, s3)] =
                    expectation(rho, spin_projector(s1), spin_projector(s2), spin_projector(s3));
    return in;
}

WitnessInputs from_matrix_elements(const ComplexMatrix& rho) {
    const Complex z = rho(spin_index(kSpinUp, kSpinUp, kSpinUp),
                          spin_index(kSpinDown, kSpinDown, kSpinDown));
    WitnessInputs in;
    in.line_real = 2.0 * z.real();
    in.line_imag = 2.0 * z.imag();
    for (std::size_t i = 0; i < 8; ++i) in.populations[i] = rho(i, i).real();
    return in;
}

}  // namespace

WitnessReport witness_hmgh(const ComplexMatrix& rho, WitnessVariant variant, WitnessPath path) {
    if (rho.rows() != kSpinDim || rho.cols() != kSpinDim)
        throw ValidationError("witness: expected an 8x8 density matrix");
    const DensityCheck check = is_density_matrix(rho, tol::kPhysics);
    if (!check) throw ValidationError("witness: invalid density matrix: " + check.reason);

    const WitnessInputs in =
        path == WitnessPath::pauli_settings ? from_pauli_settings(rho) : from_matrix_elements(rho);

    WitnessReport r;
    r.path = path;
    r.variant = variant;
    r.offdiag_modulus = std::hypot(in.line_real, in.line_imag);
    r.offdiag_term = variant == WitnessVariant::normalized ? r.offdiag_modulus
                                                           : std::abs(in.line_real + in.line_imag);
    const double scale = variant == WitnessVariant::normalized ? 2.0 : 1.0;
    for (std::size_t k = 0; k < 3; ++k) {
        const auto& pair = (k == 2 && variant == WitnessVariant::as_printed) ? kPrintedThirdPair
                                                                             : kComplementPairs[k];
        r.population_terms[k] =
            scale * clamped_sqrt(in.populations[pair[0]] * in.populations[pair[1]]);
    }
    r.value = r.offdiag_term - r.population_terms[0] - r.population_terms[1] - r.population_terms[2];
    return r;
}

double gme_lower_bound(const ComplexMatrix& rho) {
    return std::max(0.0, witness_hmgh(rho, WitnessVariant::normalized).value);
}

double m_concurrence_pure(const StateVector& state, const FactorShape& shape,
                          const Partition& partition) {
    if (state.dim() != shape.total()) throw ShapeError("m-concurrence: state does not match shape");
    if (partition.factor_count() != shape.size())
        throw InputError("m-concurrence: partition is over " +
                         std::to_string(partition.factor_count()) + " factors, shape has " +
                         std::to_string(shape.size()));
    if (std::abs(state.norm_squared() - 1.0) > tol::kPhysics)
        throw InputError("m-concurrence: state is not normalized");

    const std::size_t m = partition.size();
    // The radicand is Σ_γ (1 − Tr ρ_γ²). Each γ pairs with its complement,
    // so sum over subsets not containing the last part and double.
    double radicand = 0.0;
    const std::size_t last = std::size_t{1} << (m - 1);
    std::vector<std::size_t> keep;
    for (std::size_t mask = 1; mask < last; ++mask) {
        keep.clear();
        for (std::size_t p = 0; p < m; ++p)
            if (mask & (std::size_t{1} << p))
                keep.insert(keep.end(), partition[p].begin(), partition[p].end());
        radicand += 2.0 * reduced_linear_entropy(state, shape, keep);
    }
    return std::pow(2.0, 1.0 - static_cast<double>(m) / 2.0) * std::sqrt(radicand);
}

double three_tangle(const StateVector& state) {
    if (state.dim() != kSpinDim) throw ShapeError("three_tangle: expected an 8-dim state");
    if (std::abs(state.norm_squared() - 1.0) > tol::kPhysics)
        throw InputError("three_tangle: state is not normalized");
    auto a = [&](std::size_t i, std::size_t j, std::size_t k) { return state[i * 4 + j * 2 + k]; };
    auto sq = [](Complex z) { return z * z; };

    const Complex d1 = sq(a(0, 0, 0)) * sq(a(1, 1, 1)) + sq(a(0, 0, 1)) * sq(a(1, 1, 0)) +
                       sq(a(0, 1, 0)) * sq(a(1, 0, 1)) + sq(a(1, 0, 0)) * sq(a(0, 1, 1));
    const Complex d2 = a(0, 0, 0) * a(1, 1, 1) * a(0, 1, 1) * a(1, 0, 0) +
                       a(0, 0, 0) * a(1, 1, 1) * a(1, 0, 1) * a(0, 1, 0) +
                       a(0, 0, 0) * a(1, 1, 1) * a(1, 1, 0) * a(0, 0, 1) +
                       a(0, 1, 1) * a(1, 0, 0) * a(1, 0, 1) * a(0, 1, 0) +
                       a(0, 1, 1) * a(1, 0, 0) * a(1, 1, 0) * a(0, 0, 1) +
                       a(1, 0, 1) * a(0, 1, 0) * a(1, 1, 0) * a(0, 0, 1);
    const Complex d3 = a(0, 0, 0) * a(1, 1, 0) * a(1, 0, 1) * a(0, 1, 1) +
                       a(1, 1, 1) * a(0, 0, 1) * a(0, 1, 0) * a(1, 0, 0);
    return 4.0 * std::abs(d1 - 2.0 * d2 + 4.0 * d3);
}

}  // namespace relgme
