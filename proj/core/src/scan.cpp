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

#include "relgme/scan.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <exception>
#include <mutex>
#include <numbers>
#include <ostream>
#include <thread>

#include "relgme/boost.hpp"
#include "relgme/errors.hpp"
#include "relgme/tolerances.hpp"

namespace relgme {

SpinChoice parse_spin_choice(std::string_view name) {
    if (name == "ghz") return SpinChoice::ghz;
    if (name == "w") return SpinChoice::w;
    if (name == "ghz_alpha" || name == "ghz-alpha") return SpinChoice::ghz_alpha;
    throw InputError("unknown spin state '" + std::string(name) + "'");
}

MomentumChoice parse_momentum_choice(std::string_view name) {
    if (name == "product") return MomentumChoice::product;
    if (name == "antisymmetric") return MomentumChoice::antisymmetric;
    if (name == "custom") return MomentumChoice::custom;
    throw InputError("unknown momentum state '" + std::string(name) + "'");
}

void ScanConfig::validate() const {
    if (n_alpha < 2 || n_delta < 2) throw InputError("grid sizes must be at least 2");
    if (observer_speed.has_value() != particle_speed.has_value())
        throw InputError("observer and particle speed must be given together");
    if (observer_speed) {
        rapidity(*observer_speed);
        rapidity(*particle_speed);
    }
    if (threads == 0) throw InputError("thread count must be positive");
    if (!std::isfinite(alpha)) throw InputError("alpha must be finite");
    if (momentum == MomentumChoice::custom) permutation_momentum(custom_coefficients);
}

ScanConfig default_fig2_config() { return ScanConfig{}; }

ScanConfig default_fig3_config() {
    ScanConfig c;
    c.n_delta = 121;
    return c;
}

namespace {

std::vector<double> linspace(double lo, double hi, std::size_t n) {
    std::vector<double> out(n);
    for (std::size_t k = 0; k < n; ++k)
        out[k] = k + 1 == n ? hi : lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(n - 1);
    return out;
}

// Runs fn(i) for i in [0, n) on `threads` workers with a static interleaved
// split. The first exception thrown by any worker is rethrown.
template <class Fn>
void parallel_for(std::size_t n, unsigned threads, Fn fn) {
    const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n)));
    if (workers == 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    for (std::size_t i = w; i < n; i += workers) fn(i);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                }
            });
        }
    }
    if (failure) std::rethrow_exception(failure);
}

std::vector<BoostScenario> scenarios_for(const ScanConfig& config) {
    std::vector<BoostScenario> out;
    const auto geometry = MomentumGeometry::planar(config.azimuth_offset);
    for (double delta : delta_grid(config)) out.push_back(BoostScenario::with_delta(delta, geometry));
    return out;
}

}  // namespace

std::vector<double> delta_grid(const ScanConfig& config) {
    if (!config.observer_speed) return linspace(0.0, std::numbers::pi / 2.0, config.n_delta);
    const Rapidity xi = rapidity(*config.particle_speed);
    std::vector<double> out;
    for (double u : linspace(0.0, *config.observer_speed, config.n_delta))
        out.push_back(wigner_angle(rapidity(u), xi));
    return out;
}

std::vector<double> alpha_grid(const ScanConfig& config) {
    return linspace(0.0, std::numbers::pi, config.n_alpha);
}

PermutationCoefficients momentum_coefficients(const ScanConfig& config) {
    switch (config.momentum) {
        case MomentumChoice::product: return product_coefficients(0);
        case MomentumChoice::antisymmetric: return antisymmetric_coefficients();
        case MomentumChoice::custom: return config.custom_coefficients;
    }
    return antisymmetric_coefficients();
}

StateVector spin_state(const ScanConfig& config) {
    switch (config.spin) {
        case SpinChoice::ghz: return ghz();
        case SpinChoice::w: return w_state();
        case SpinChoice::ghz_alpha: return ghz_alpha(config.alpha);
    }
    return ghz();
}

std::vector<Fig2Row> scan_fig2(const ScanConfig& config) {
    config.validate();
    const std::vector<double> alphas = alpha_grid(config);
    const std::vector<BoostScenario> scenarios = scenarios_for(config);
    const PermutationCoefficients coeffs = momentum_coefficients(config);

    std::vector<Fig2Row> rows(alphas.size() * scenarios.size());
    parallel_for(rows.size(), config.threads, [&](std::size_t i) {
        const std::size_t ia = i / scenarios.size();
        const std::size_t id = i % scenarios.size();
        const ComplexMatrix rho =
            boosted_spin_density_fast(coeffs, ghz_alpha(alphas[ia]), scenarios[id]);
        const WitnessReport chosen = witness_hmgh(rho, config.variant);
        const double normalized = config.variant == WitnessVariant::normalized
                                      ? chosen.value
                                      : witness_hmgh(rho, WitnessVariant::normalized).value;
        rows[i] = {alphas[ia], scenarios[id].delta(), chosen.value, std::max(0.0, normalized)};
    });
    return rows;
}

const std::vector<CatalogEntry>& fig3_partition_catalog() {
    static const std::vector<CatalogEntry> catalog = [] {
        std::vector<CatalogEntry> c;
        auto add = [&](std::string name, std::vector<std::vector<std::size_t>> parts) {
            c.push_back({std::move(name), Partition(std::move(parts), 6)});
        };
        add("spins|momenta", {{1, 3, 5}, {0, 2, 4}});
        add("particles", {{0, 1}, {2, 3}, {4, 5}});
        add("singletons", {{0}, {1}, {2}, {3}, {4}, {5}});
        auto rest = [](std::vector<std::size_t> part) {
            std::vector<std::size_t> r;
            for (std::size_t f = 0; f < 6; ++f)
                if (std::find(part.begin(), part.end(), f) == part.end()) r.push_back(f);
            return std::vector<std::vector<std::size_t>>{std::move(part), std::move(r)};
        };
        for (std::size_t j = 0; j < 3; ++j) add("spin" + std::to_string(j + 1) + "|rest", rest({2 * j + 1}));
        for (std::size_t j = 0; j < 3; ++j) add("mom" + std::to_string(j + 1) + "|rest", rest({2 * j}));
        for (std::size_t j = 0; j < 3; ++j)
            add("particle" + std::to_string(j + 1) + "|rest", rest({2 * j, 2 * j + 1}));
        return c;
    }();
    return catalog;
}

std::vector<Fig3Row> scan_fig3(const ScanConfig& config) {
    config.validate();
    const std::vector<BoostScenario> scenarios = scenarios_for(config);
    const CompositeState input =
        compose(permutation_momentum(momentum_coefficients(config)), spin_state(config));
    const auto& catalog = fig3_partition_catalog();

    std::vector<Fig3Row> rows(scenarios.size() * catalog.size());
    parallel_for(scenarios.size(), config.threads, [&](std::size_t id) {
        const CompositeState boosted = boost_pure(input, scenarios[id]);
        for (std::size_t p = 0; p < catalog.size(); ++p) {
            rows[id * catalog.size() + p] = {
                scenarios[id].delta(), p,
                m_concurrence_pure(boosted.vector(), composite_shape(), catalog[p].partition)};
        }
    });
    return rows;
}

std::string format_number(double x) {
    if (x == 0.0) return "0";
    // %.12g-style: the shortest round-trip form whenever it has <= 12 digits.
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 12);
    return std::string(buf, res.ptr);
}

void write_fig2_csv(std::ostream& out, const std::vector<Fig2Row>& rows) {
    out << "alpha,delta,witness,gme_bound\n";
    for (const auto& r : rows) {
        out << format_number(r.alpha) << ',' << format_number(r.delta) << ','
            << format_number(r.witness) << ',' << format_number(r.gme_bound) << '\n';
    }
}

void write_fig3_csv(std::ostream& out, const std::vector<Fig3Row>& rows) {
    const auto& catalog = fig3_partition_catalog();
    out << "# partitions:";
    for (std::size_t p = 0; p < catalog.size(); ++p)
        out << (p ? "; " : " ") << p << '=' << catalog[p].partition.to_string();
    out << '\n';
    out << "delta,partition,m_concurrence\n";
    for (const auto& r : rows) {
        out << format_number(r.delta) << ',' << r.partition << ',' << format_number(r.m_concurrence)
            << '\n';
    }
}

}  // namespace relgme
