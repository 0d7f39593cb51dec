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

#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "relgme/boost.hpp"
#include "relgme/classcheck.hpp"
#include "relgme/errors.hpp"
#include "relgme/kinematics.hpp"
#include "relgme/measures.hpp"
#include "relgme/scan.hpp"
#include "relgme/state_io.hpp"
#include "relgme/states.hpp"

namespace relgme::cli {

namespace {

struct Options {
    std::optional<double> observer_speed;
    std::optional<double> particle_speed;
    std::optional<double> delta;
    std::string grid;
    std::string spin = "ghz";
    std::string momentum = "antisymmetric";
    std::vector<double> coefficients;
    double alpha = std::numbers::pi / 4.0;
    std::string variant = "normalized";
    std::uint64_t seed = 7;
    std::size_t trials = 100;
    std::string out;
    std::string spin_out;
    std::string input;
    std::string suite;
    unsigned threads = 1;
    std::size_t biseparable_terms = 0;
};

std::string fmt12(double x) {
    std::ostringstream s;
    s << std::setprecision(12) << x;
    return s.str();
}

// "61x61", "61" (both axes) for fig2; "121" for fig3.
std::pair<std::size_t, std::size_t> parse_grid(const std::string& text, std::size_t def_a,
                                               std::size_t def_d) {
    if (text.empty()) return {def_a, def_d};
    auto to_size = [&](const std::string& s) -> std::size_t {
        std::size_t pos = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(s, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos == 0 || pos != s.size()) throw InputError("invalid --grid value '" + text + "'");
        return v;
    };
    const auto x = text.find('x');
    if (x == std::string::npos) {
        const std::size_t n = to_size(text);
        return {n, n};
    }
    return {to_size(text.substr(0, x)), to_size(text.substr(x + 1))};
}

ScanConfig make_config(const Options& o, ScanConfig config) {
    config.observer_speed = o.observer_speed;
    config.particle_speed = o.particle_speed;
    config.spin = parse_spin_choice(o.spin);
    config.alpha = o.alpha;
    config.momentum = parse_momentum_choice(o.momentum);
    if (config.momentum == MomentumChoice::custom) {
        if (o.coefficients.size() != 12)
            throw InputError("--coefficients needs 12 numbers (re, im for each permutation)");
        for (std::size_t i = 0; i < 6; ++i)
            config.custom_coefficients[i] = Complex(o.coefficients[2 * i], o.coefficients[2 * i + 1]);
    }
    config.variant = parse_witness_variant(o.variant);
    config.threads = o.threads;
    if (o.delta) throw InputError("--delta selects a single angle; sweeps take --grid or speeds");
    return config;
}

// Writes to --out when given, otherwise to `out`.
template <class Fn>
void emit(const std::string& path, std::ostream& out, Fn write) {
    if (path.empty()) {
        write(out);
        return;
    }
    std::ofstream file(path);
    if (!file) throw InputError("cannot write " + path);
    write(file);
    if (!file) throw InputError("failed writing " + path);
}

BoostScenario scenario_from(const Options& o) {
    if (o.delta) {
        if (o.observer_speed || o.particle_speed)
            throw InputError("give either --delta or --observer-speed/--particle-speed");
        return BoostScenario::with_delta(*o.delta);
    }
    if (!o.observer_speed || !o.particle_speed)
        throw InputError("need --delta or both --observer-speed and --particle-speed");
    return BoostScenario(*o.observer_speed, *o.particle_speed);
}

int cmd_wigner(const Options& o, std::ostream& out) {
    if (!o.observer_speed || !o.particle_speed)
        throw InputError("wigner needs --observer-speed and --particle-speed");
    const double delta = wigner_angle(rapidity(*o.observer_speed), rapidity(*o.particle_speed));
    out << "delta_rad " << fmt12(delta) << "\n";
    out << "delta_deg " << fmt12(delta * 180.0 / std::numbers::pi) << "\n";
    return kExitOk;
}

int cmd_scan_fig2(const Options& o, std::ostream& out) {
    ScanConfig config = make_config(o, default_fig2_config());
    std::tie(config.n_alpha, config.n_delta) = parse_grid(o.grid, config.n_alpha, config.n_delta);
    const auto rows = scan_fig2(config);
    emit(o.out, out, [&](std::ostream& s) { write_fig2_csv(s, rows); });
    return kExitOk;
}

int cmd_scan_fig3(const Options& o, std::ostream& out) {
    ScanConfig config = make_config(o, default_fig3_config());
    if (!o.grid.empty()) config.n_delta = parse_grid(o.grid, 0, 0).second;
    const auto rows = scan_fig3(config);
    emit(o.out, out, [&](std::ostream& s) { write_fig3_csv(s, rows); });
    return kExitOk;
}

void print_report(std::ostream& out, const WitnessReport& r) {
    out << "witness variant=" << to_string(r.variant) << " path=" << to_string(r.path)
        << " value=" << fmt12(r.value) << " offdiag=" << fmt12(r.offdiag_term)
        << " populations=" << fmt12(r.population_terms[0]) << ',' << fmt12(r.population_terms[1])
        << ',' << fmt12(r.population_terms[2]) << " modulus=" << fmt12(r.offdiag_modulus) << "\n";
}

int cmd_witness(const Options& o, std::ostream& out) {
    const StateFile file = read_state(o.input);
    const ComplexMatrix rho = file.spin_density();
    const WitnessVariant selected = parse_witness_variant(o.variant);

    out << "state " << o.input << (file.is_composite() ? " (spins reduced over momenta)" : "")
        << "\n";
    for (WitnessVariant v :
         {WitnessVariant::normalized, WitnessVariant::symmetric, WitnessVariant::as_printed})
        for (WitnessPath p : {WitnessPath::matrix_elements, WitnessPath::pauli_settings})
            print_report(out, witness_hmgh(rho, v, p));

    const WitnessReport chosen = witness_hmgh(rho, selected);
    const WitnessReport normalized = witness_hmgh(rho, WitnessVariant::normalized);
    out << "value " << fmt12(chosen.value) << " (" << to_string(selected) << ")\n";
    out << "gme_bound " << fmt12(std::max(0.0, normalized.value)) << "\n";
    out << "verdict "
        << (normalized.detects_gme() ? "genuinely multipartite entangled"
                                     : "not detected by this witness")
        << "\n";
    return kExitOk;
}

int cmd_boost(const Options& o, std::ostream& out) {
    if (o.out.empty()) throw InputError("boost needs --out for the boosted state");
    const StateFile file = read_state(o.input);
    const BoostScenario scenario = scenario_from(o);

    ComplexMatrix spin;
    if (file.is_mixed()) {
        const MixedBoostResult result = boost_mixed(file.as_mixed(), scenario);
        write_state(StateFile::from(result.full), o.out);
        spin = result.spin;
        out << "certificate_terms " << result.certificate.terms.size() << "\n";
        out << "certificate_reconstruction_error "
            << fmt12(frobenius_distance(result.certificate.density(), spin)) << "\n";
    } else {
        const CompositeState boosted = boost_pure(file.as_composite(), scenario);
        write_state(StateFile::from(boosted), o.out);
        spin = boosted.spin_density();
    }
    out << "delta_rad " << fmt12(scenario.delta()) << "\n";
    out << "spin_purity " << fmt12(purity(spin)) << "\n";
    if (o.spin_out.empty()) {
        out << format_matrix(spin);
    } else {
        emit(o.spin_out, out, [&](std::ostream& s) { s << format_matrix(spin); });
    }
    return kExitOk;
}

int cmd_check(const Options& o, std::ostream& out, std::ostream& err) {
    SuiteReport report;
    if (o.suite == "condition1") {
        report = run_condition1_suite(o.trials, o.seed);
    } else if (o.suite == "condition2") {
        report = run_condition2_suite(o.trials, o.seed);
    } else if (o.suite == "soundness") {
        report = run_soundness_suite(o.trials, o.seed);
    } else {
        throw InputError("unknown suite '" + o.suite + "'");
    }
    out << report.name << ": " << report.cases << " cases, max deviation "
        << fmt12(report.max_deviation) << ", " << (report.passed() ? "PASS" : "FAIL") << "\n";
    for (const auto& line : report.failures) err << "  " << line << "\n";
    return report.passed() ? kExitOk : kExitCheckFailed;
}

int cmd_prepare(const Options& o, std::ostream& out) {
    if (o.out.empty()) throw InputError("prepare needs --out");
    if (o.biseparable_terms > 0) {
        std::vector<StateMember> members;
        for (const auto& m : sample_biseparable_mixture(o.biseparable_terms, o.seed))
            members.push_back({m.weight, m.state});
        write_state(StateFile(spin_shape(), std::move(members), true), o.out);
        out << "wrote biseparable spin mixture (" << o.biseparable_terms << " terms) to " << o.out
            << "\n";
        return kExitOk;
    }
    ScanConfig config;
    config.spin = parse_spin_choice(o.spin);
    config.alpha = o.alpha;
    const StateVector spin = spin_state(config);
    if (o.momentum == "none") {
        write_state(StateFile::pure(spin_shape(), spin), o.out);
        out << "wrote spin state to " << o.out << "\n";
        return kExitOk;
    }
    const ScanConfig full = make_config(o, ScanConfig{});
    write_state(StateFile::from(compose(permutation_momentum(momentum_coefficients(full)), spin)),
                o.out);
    out << "wrote composite state to " << o.out << "\n";
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Lorentz-boosted three-particle spin-momentum states: Wigner rotations, "
                 "GME witnesses and partition measures"};
    app.name("relgme");
    app.require_subcommand(1);

    auto add_speeds = [&](CLI::App* sub) {
        sub->add_option("--observer-speed", o.observer_speed, "Observer speed u in units of c");
        sub->add_option("--particle-speed", o.particle_speed, "Particle speed v in units of c");
    };
    auto add_states = [&](CLI::App* sub) {
        sub->add_option("--spin", o.spin, "Spin state: ghz, w, ghz_alpha")->capture_default_str();
        sub->add_option("--alpha", o.alpha, "Angle of ghz_alpha")->capture_default_str();
        sub->add_option("--momentum", o.momentum, "Momentum state: product, antisymmetric, custom")
            ->capture_default_str();
        sub->add_option("--coefficients", o.coefficients,
                        "Custom permutation coefficients: re im for ABC ACB BCA BAC CAB CBA");
    };

    CLI::App* wigner = app.add_subcommand("wigner", "Print the Wigner rotation angle");
    add_speeds(wigner);

    CLI::App* scan = app.add_subcommand("scan", "Parameter sweeps written as CSV");
    scan->require_subcommand(1);
    CLI::App* fig2 = scan->add_subcommand("fig2", "Witness over the (alpha, delta) grid");
    CLI::App* fig3 = scan->add_subcommand("fig3", "Partition m-concurrence over delta");
    for (CLI::App* sub : {fig2, fig3}) {
        add_speeds(sub);
        add_states(sub);
        sub->add_option("--delta", o.delta, "Not valid for sweeps");
        sub->add_option("--grid", o.grid, "Grid size: NxM (fig2) or N (fig3)");
        sub->add_option("--variant", o.variant, "normalized, symmetric, as-printed")
            ->capture_default_str();
        sub->add_option("--threads", o.threads, "Worker threads")->capture_default_str();
        sub->add_option("--out", o.out, "Output CSV (default stdout)");
    }

    CLI::App* witness = app.add_subcommand("witness", "Evaluate the GME witness on a state file");
    witness->add_option("state", o.input, "State file (JSON)")->required();
    witness->add_option("--variant", o.variant, "normalized, symmetric, as-printed")
        ->capture_default_str();

    CLI::App* boost = app.add_subcommand("boost", "Apply a boost to a composite state file");
    boost->add_option("state", o.input, "State file (JSON)")->required();
    add_speeds(boost);
    boost->add_option("--delta", o.delta, "Wigner angle in radians");
    boost->add_option("--out", o.out, "Boosted state file")->required();
    boost->add_option("--spin-out", o.spin_out, "Reduced spin density matrix (JSON)");

    CLI::App* check = app.add_subcommand("check", "Run a property-check suite");
    check->add_option("suite", o.suite, "condition1, condition2, soundness")->required();
    check->add_option("--trials", o.trials, "Trials")->capture_default_str();
    check->add_option("--seed", o.seed, "Seed")->capture_default_str();

    CLI::App* prepare = app.add_subcommand("prepare", "Write a state file");
    add_states(prepare);
    prepare->add_option("--biseparable", o.biseparable_terms,
                        "Write a random biseparable spin mixture with this many terms");
    prepare->add_option("--seed", o.seed, "Seed")->capture_default_str();
    prepare->add_option("--out", o.out, "State file")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitInvalidInput;
    }

    try {
        if (*wigner) return cmd_wigner(o, out);
        if (*fig2) return cmd_scan_fig2(o, out);
        if (*fig3) return cmd_scan_fig3(o, out);
        if (*witness) return cmd_witness(o, out);
        if (*boost) return cmd_boost(o, out);
        if (*check) return cmd_check(o, out, err);
        if (*prepare) return cmd_prepare(o, out);
    } catch (const NumericError& e) {
        err << "numeric failure: " << e.what() << "\n";
        return kExitNumericFailure;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    }
    return kExitInvalidInput;
}

}  // namespace relgme::cli
