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

#include "relgme/classcheck.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "relgme/errors.hpp"
#include "relgme/measures.hpp"
#include "relgme/tolerances.hpp"

namespace relgme {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

namespace {

Complex gaussian_complex(Rng& rng) {
    std::normal_distribution<double> n(0.0, 1.0);
    const double re = n(rng);
    const double im = n(rng);
    return {re, im};
}

double uniform(Rng& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

ComplexMatrix haar_su2_times_phase(Rng& rng) {
    std::normal_distribution<double> n(0.0, 1.0);
    double q[4];
    double len = 0.0;
    do {
        len = 0.0;
        for (double& x : q) {
            x = n(rng);
            len += x * x;
        }
    } while (len == 0.0);
    len = std::sqrt(len);
    for (double& x : q) x /= len;
    const Complex phase = std::polar(1.0, uniform(rng, 0.0, 2.0 * std::numbers::pi));
    return phase * ComplexMatrix(2, 2,
                                 {Complex(q[0], q[1]), Complex(q[2], q[3]), Complex(-q[2], q[3]),
                                  Complex(q[0], -q[1])});
}

ComplexMatrix haar_gram_schmidt(std::size_t dim, Rng& rng) {
    std::vector<std::vector<Complex>> cols(dim, std::vector<Complex>(dim));
    for (auto& col : cols)
        for (auto& z : col) z = gaussian_complex(rng);
    for (std::size_t k = 0; k < dim; ++k) {
        for (std::size_t j = 0; j < k; ++j) {
            Complex proj = 0.0;
            for (std::size_t i = 0; i < dim; ++i) proj += std::conj(cols[j][i]) * cols[k][i];
            for (std::size_t i = 0; i < dim; ++i) cols[k][i] -= proj * cols[j][i];
        }
        double n2 = 0.0;
        for (const auto& z : cols[k]) n2 += std::norm(z);
        const double inv = 1.0 / std::sqrt(n2);
        for (auto& z : cols[k]) z *= inv;
    }
    ComplexMatrix u(dim, dim);
    for (std::size_t c = 0; c < dim; ++c)
        for (std::size_t r = 0; r < dim; ++r) u(r, c) = cols[c][r];
    return u;
}

// Product of a state on part A and a state on part B of the three spins.
StateVector embed_product(const Partition& bipartition, const StateVector& a,
                          const StateVector& b) {
    std::vector<Complex> amps(kSpinDim);
    for (std::size_t idx = 0; idx < kSpinDim; ++idx) {
        const std::size_t bits[3] = {(idx >> 2) & 1, (idx >> 1) & 1, idx & 1};
        std::size_t ia = 0, ib = 0;
        for (std::size_t f : bipartition[0]) ia = ia * 2 + bits[f];
        for (std::size_t f : bipartition[1]) ib = ib * 2 + bits[f];
        amps[idx] = a[ia] * b[ib];
    }
    return StateVector(std::move(amps));
}

std::vector<double> dirichlet_weights(std::size_t n, Rng& rng) {
    std::exponential_distribution<double> e(1.0);
    std::vector<double> w(n);
    double total = 0.0;
    for (double& x : w) {
        x = e(rng) + std::numeric_limits<double>::min();
        total += x;
    }
    for (double& x : w) x /= total;
    return w;
}

const std::vector<Partition>& spin_bipartitions() {
    static const std::vector<Partition> parts{
        Partition({{0}, {1, 2}}, 3),
        Partition({{1}, {0, 2}}, 3),
        Partition({{2}, {0, 1}}, 3),
    };
    return parts;
}

std::vector<double> one_qubit_spectra(const StateVector& state) {
    std::vector<double> out;
    for (std::size_t f = 0; f < 3; ++f) {
        const auto eig = hermitian_eigen(reduced_density(state, spin_shape(), {f}));
        out.insert(out.end(), eig.values.begin(), eig.values.end());
    }
    return out;
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i)
        worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

// Leading eigenvector of a (numerically) rank-one density matrix.
StateVector dominant_state(const ComplexMatrix& rho) {
    const auto eig = hermitian_eigen(rho);
    std::vector<Complex> v(rho.rows());
    for (std::size_t r = 0; r < rho.rows(); ++r) v[r] = eig.vectors(r, 0);
    return StateVector(std::move(v)).normalized();
}

}  // namespace

ComplexMatrix haar_unitary(std::size_t dim, Rng& rng) {
    if (dim == 0) throw ShapeError("haar_unitary: dimension must be positive");
    if (dim == 2) return haar_su2_times_phase(rng);
    return haar_gram_schmidt(dim, rng);
}

StateVector haar_state(std::size_t dim, Rng& rng) {
    std::vector<Complex> amps(dim);
    for (auto& z : amps) z = gaussian_complex(rng);
    return StateVector(std::move(amps)).normalized();
}

ComplexMatrix LocalUnitarySample::combined() const {
    ComplexMatrix out = ComplexMatrix::identity(1);
    for (const auto& f : factors) out = kron(out, f);
    return out;
}

StateVector LocalUnitarySample::apply(const StateVector& state) const {
    return combined() * state;
}

LocalUnitarySample random_local_unitary(const FactorShape& dims, std::uint64_t seed) {
    Rng rng(seed);
    LocalUnitarySample sample;
    for (std::size_t d : dims.dims()) sample.factors.push_back(haar_unitary(d, rng));
    return sample;
}

std::vector<Partition> all_partitions(std::size_t n_factors) {
    std::vector<Partition> out;
    if (n_factors < 2) return out;
    // Restricted growth strings: label[0] = 0, label[i] <= 1 + max(label[0..i-1]).
    std::vector<std::size_t> label(n_factors, 0);
    while (true) {
        const std::size_t blocks = *std::max_element(label.begin(), label.end()) + 1;
        if (blocks >= 2) {
            std::vector<std::vector<std::size_t>> parts(blocks);
            for (std::size_t i = 0; i < n_factors; ++i) parts[label[i]].push_back(i);
            out.emplace_back(std::move(parts), n_factors);
        }
        std::size_t i = n_factors;
        while (i-- > 1) {
            const std::size_t prefix_max = *std::max_element(label.begin(), label.begin() + i);
            if (label[i] <= prefix_max) {
                ++label[i];
                std::fill(label.begin() + i + 1, label.end(), 0);
                break;
            }
        }
        if (i == 0) break;
    }
    return out;
}

std::vector<WeightedState> sample_biseparable_ensemble(const Partition& bipartition,
                                                       std::size_t n_terms, std::uint64_t seed) {
    if (bipartition.size() != 2 || bipartition.factor_count() != 3)
        throw InputError("biseparable sampler needs a bipartition of the three spins");
    if (n_terms == 0) throw InputError("biseparable sampler needs at least one term");
    Rng rng(seed);
    const std::vector<double> w = dirichlet_weights(n_terms, rng);
    std::vector<WeightedState> out;
    for (std::size_t t = 0; t < n_terms; ++t) {
        const StateVector a = haar_state(std::size_t{1} << bipartition[0].size(), rng);
        const StateVector b = haar_state(std::size_t{1} << bipartition[1].size(), rng);
        out.push_back({w[t], embed_product(bipartition, a, b)});
    }
    return out;
}

std::vector<WeightedState> sample_biseparable_mixture(std::size_t n_terms, std::uint64_t seed) {
    if (n_terms == 0) throw InputError("biseparable sampler needs at least one term");
    Rng rng(seed);
    const std::vector<double> w = dirichlet_weights(n_terms, rng);
    std::vector<WeightedState> out;
    for (std::size_t t = 0; t < n_terms; ++t) {
        const Partition& bp = spin_bipartitions()[rng() % 3];
        const StateVector a = haar_state(std::size_t{1} << bp[0].size(), rng);
        const StateVector b = haar_state(std::size_t{1} << bp[1].size(), rng);
        out.push_back({w[t], embed_product(bp, a, b)});
    }
    return out;
}

ComplexMatrix ensemble_density(const std::vector<WeightedState>& ensemble) {
    if (ensemble.empty()) throw InputError("empty ensemble");
    const std::size_t dim = ensemble.front().state.dim();
    ComplexMatrix rho(dim, dim);
    for (const auto& m : ensemble) rho += Complex(m.weight) * m.state.projector();
    return rho;
}

ComplexMatrix sample_biseparable(const Partition& bipartition, std::size_t n_terms,
                                 std::uint64_t seed) {
    return ensemble_density(sample_biseparable_ensemble(bipartition, n_terms, seed));
}

double LuInvariants::max_deviation(const LuInvariants& other) const {
    double worst = 0.0;
    if (std::isfinite(tangle) && std::isfinite(other.tangle))
        worst = std::abs(tangle - other.tangle);
    worst = std::max(worst, max_abs_diff(m_concurrence, other.m_concurrence));
    for (std::size_t f = 0; f < std::min(factor_spectra.size(), other.factor_spectra.size()); ++f)
        worst = std::max(worst, max_abs_diff(factor_spectra[f], other.factor_spectra[f]));
    return worst;
}

LuInvariants lu_invariants(const StateVector& state, const FactorShape& shape) {
    LuInvariants inv;
    inv.tangle = shape == spin_shape() ? three_tangle(state)
                                       : std::numeric_limits<double>::quiet_NaN();
    for (const Partition& p : all_partitions(shape.size()))
        inv.m_concurrence.push_back(m_concurrence_pure(state, shape, p));
    for (std::size_t f = 0; f < shape.size(); ++f)
        inv.factor_spectra.push_back(hermitian_eigen(reduced_density(state, shape, {f})).values);
    return inv;
}

double Condition1Report::max_deviation() const {
    return std::max({max_tangle_deviation, max_mconc_deviation, max_spectrum_deviation});
}

Condition1Report check_condition1(const StateVector& state, const FactorShape& shape,
                                  std::size_t trials, std::uint64_t seed, double tolerance) {
    if (std::abs(state.norm_squared() - 1.0) > tol::kPhysics)
        throw InputError("check_condition1: state is not normalized");
    const LuInvariants before = lu_invariants(state, shape);

    Condition1Report report;
    report.trials = trials;
    for (std::size_t t = 0; t < trials; ++t) {
        const std::uint64_t s = derive_seed(seed, t);
        const StateVector moved = random_local_unitary(shape, s).apply(state);
        const LuInvariants after = lu_invariants(moved, shape);

        double dt = 0.0;
        if (std::isfinite(before.tangle)) dt = std::abs(before.tangle - after.tangle);
        const double dm = max_abs_diff(before.m_concurrence, after.m_concurrence);
        double ds = 0.0;
        for (std::size_t f = 0; f < shape.size(); ++f)
            ds = std::max(ds, max_abs_diff(before.factor_spectra[f], after.factor_spectra[f]));

        report.max_tangle_deviation = std::max(report.max_tangle_deviation, dt);
        report.max_mconc_deviation = std::max(report.max_mconc_deviation, dm);
        report.max_spectrum_deviation = std::max(report.max_spectrum_deviation, ds);
        if (dt > tolerance || dm > tolerance || ds > tolerance) report.failing_seeds.push_back(s);
    }
    return report;
}

ClassCertificate certify_boost(const PermutationCoefficients& coeffs, const StateVector& spin,
                               const BoostScenario& scenario) {
    return {spin, boosted_spin_ensemble(coeffs, spin, scenario)};
}

CertificateReport verify_certificate(const ClassCertificate& cert, const ComplexMatrix& rho) {
    CertificateReport r;
    if (cert.ensemble.terms.empty()) return r;

    r.reconstruction_error = frobenius_distance(cert.ensemble.density(), rho);
    r.weight_error = std::abs(cert.ensemble.total_weight() - 1.0);
    r.reconstruction_ok = r.reconstruction_error <= tol::kOperator && r.weight_error <= tol::kPhysics;

    const double base_tangle = three_tangle(cert.base);
    const std::vector<double> base_spectra = one_qubit_spectra(cert.base);
    for (std::size_t k = 0; k < cert.ensemble.terms.size(); ++k) {
        const StateVector term = cert.ensemble.terms[k].rotated_state();
        const double dev = std::max(std::abs(three_tangle(term) - base_tangle),
                                    max_abs_diff(one_qubit_spectra(term), base_spectra));
        if (k == 0 || dev > r.max_lu_deviation) {
            r.max_lu_deviation = dev;
            r.worst_term = k;
        }
    }
    r.lu_equivalent = r.max_lu_deviation <= tol::kPhysics;
    return r;
}

SuiteReport run_condition1_suite(std::size_t trials, std::uint64_t seed) {
    SuiteReport report;
    report.name = "condition1";

    std::vector<std::pair<std::string, StateVector>> states{{"ghz", ghz()}, {"w", w_state()}};
    constexpr int kAlphaPoints = 13;
    for (int k = 0; k < kAlphaPoints; ++k) {
        const double alpha = std::numbers::pi * k / (kAlphaPoints - 1);
        std::ostringstream name;
        name << "ghz_alpha(" << alpha << ")";
        states.emplace_back(name.str(), ghz_alpha(alpha));
    }
    constexpr int kHaarStates = 50;
    for (int k = 0; k < kHaarStates; ++k) {
        Rng rng(derive_seed(seed, 100000 + k));
        states.emplace_back("haar#" + std::to_string(k), haar_state(kSpinDim, rng));
    }

    for (std::size_t i = 0; i < states.size(); ++i) {
        const auto& [name, state] = states[i];
        const Condition1Report r =
            check_condition1(state, spin_shape(), trials, derive_seed(seed, i), tol::kPhysics);
        report.cases += r.trials;
        report.max_deviation = std::max(report.max_deviation, r.max_deviation());
        for (std::uint64_t s : r.failing_seeds)
            report.failures.push_back("local unitary on " + name + ": seed " + std::to_string(s));
    }

    // A boost of a sharp product momentum acts on the spins as one local unitary.
    const double deltas[] = {0.3, 0.9, 1.4};
    for (std::size_t i = 0; i < states.size(); i += 4) {
        const auto& [name, spin] = states[i];
        const LuInvariants before = lu_invariants(spin, spin_shape());
        for (std::size_t k = 0; k < kPermutations.size(); ++k) {
            for (double delta : deltas) {
                const auto scenario =
                    BoostScenario::with_delta(delta, MomentumGeometry::planar(0.1 * k));
                const CompositeState boosted = boost_pure(
                    compose(permutation_momentum(product_coefficients(k)), spin), scenario);
                const ComplexMatrix rho = boosted.spin_density();
                const double pure_dev = std::abs(purity(rho) - 1.0);
                const double dev =
                    std::max(pure_dev, before.max_deviation(lu_invariants(dominant_state(rho),
                                                                          spin_shape())));
                ++report.cases;
                report.max_deviation = std::max(report.max_deviation, dev);
                if (dev > tol::kPhysics) {
                    std::ostringstream line;
                    line << "separable-momentum boost of " << name << ", permutation " << k
                         << ", delta " << delta << ": deviation " << dev;
                    report.failures.push_back(line.str());
                }
            }
        }
    }
    return report;
}

SuiteReport run_condition2_suite(std::size_t trials, std::uint64_t seed) {
    SuiteReport report;
    report.name = "condition2";
    for (std::size_t t = 0; t < trials; ++t) {
        const std::uint64_t s = derive_seed(seed, t);
        Rng rng(s);
        const double delta = uniform(rng, 0.0, std::numbers::pi / 2.0);
        const double offset = uniform(rng, 0.0, 2.0 * std::numbers::pi);
        const StateVector c = haar_state(6, rng);
        PermutationCoefficients coeffs{};
        for (std::size_t i = 0; i < 6; ++i) coeffs[i] = c[i];
        const StateVector spin = t % 3 == 0 ? ghz() : t % 3 == 1 ? w_state() : haar_state(8, rng);

        const auto scenario = BoostScenario::with_delta(delta, MomentumGeometry::planar(offset));
        const ClassCertificate cert = certify_boost(coeffs, spin, scenario);
        const ComplexMatrix rho =
            boost_pure(compose(permutation_momentum(coeffs), spin), scenario).spin_density();
        const CertificateReport r = verify_certificate(cert, rho);

        ++report.cases;
        report.max_deviation =
            std::max({report.max_deviation, r.reconstruction_error, r.max_lu_deviation});
        if (!r.passed()) {
            std::ostringstream line;
            line << "seed " << s << ": reconstruction " << r.reconstruction_error << ", LU deviation "
                 << r.max_lu_deviation << " (term " << r.worst_term << ")";
            report.failures.push_back(line.str());
        }
    }
    return report;
}

SuiteReport run_soundness_suite(std::size_t trials, std::uint64_t seed) {
    SuiteReport report;
    report.name = "soundness";
    report.max_deviation = -std::numeric_limits<double>::infinity();
    for (std::size_t t = 0; t < trials; ++t) {
        const std::uint64_t s = derive_seed(seed, t);
        const std::size_t n_terms = 1 + s % 6;
        const std::size_t kind = t % 4;
        const auto ensemble = kind < 3
                                  ? sample_biseparable_ensemble(spin_bipartitions()[kind], n_terms, s)
                                  : sample_biseparable_mixture(n_terms, s);
        const double value = witness_hmgh(ensemble_density(ensemble)).value;
        ++report.cases;
        report.max_deviation = std::max(report.max_deviation, value);
        if (value > tol::kPhysics) {
            std::ostringstream line;
            line << "seed " << s << ": witness " << value << " on a biseparable state";
            report.failures.push_back(line.str());
        }
    }
    return report;
}

}  // namespace relgme
