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

#include "relgme/state_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "relgme/errors.hpp"
#include "relgme/tolerances.hpp"

namespace relgme {

using nlohmann::json;

StateFile::StateFile(FactorShape shape, std::vector<StateMember> members, bool mixed)
    : shape_(std::move(shape)), members_(std::move(members)), mixed_(mixed) {
    if (shape_.size() == 0) throw InputError("state file: empty dims");
    if (members_.empty()) throw InputError("state file: no amplitudes");
    if (!mixed_ && members_.size() != 1) throw InputError("state file: pure state with an ensemble");
    const std::size_t dim = shape_.total();
    double total = 0.0;
    for (std::size_t i = 0; i < members_.size(); ++i) {
        const std::string where = mixed_ ? "ensemble[" + std::to_string(i) + "]" : "state";
        const StateMember& m = members_[i];
        if (m.amps.dim() != dim) {
            throw InputError(where + ": expected " + std::to_string(dim) + " amplitudes, got " +
                             std::to_string(m.amps.dim()));
        }
        const double n2 = m.amps.norm_squared();
        if (std::abs(n2 - 1.0) > tol::kPhysics) {
            std::ostringstream msg;
            msg << where << ": squared norm " << n2 << " is not 1";
            throw InputError(msg.str());
        }
        if (!(m.weight > 0.0) || !std::isfinite(m.weight))
            throw InputError(where + ": weight must be positive");
        total += m.weight;
    }
    if (std::abs(total - 1.0) > tol::kPhysics) {
        std::ostringstream msg;
        msg << "ensemble weights sum to " << total << ", expected 1";
        throw InputError(msg.str());
    }
}

StateFile StateFile::pure(FactorShape shape, StateVector amps) {
    return StateFile(std::move(shape), {StateMember{1.0, std::move(amps)}}, false);
}

StateFile StateFile::from(const CompositeState& state) {
    return pure(composite_shape(), state.vector());
}

StateFile StateFile::from(const MixedState& state) {
    std::vector<StateMember> members;
    for (const auto& m : state.members()) members.push_back({m.weight, m.state.vector()});
    return StateFile(composite_shape(), std::move(members), true);
}

CompositeState StateFile::as_composite() const {
    if (!is_composite()) throw InputError("state file does not hold a composite (3,2,3,2,3,2) state");
    if (mixed_) throw InputError("state file holds a mixed state, expected a pure state");
    return CompositeState(members_.front().amps);
}

MixedState StateFile::as_mixed() const {
    if (!is_composite()) throw InputError("state file does not hold a composite (3,2,3,2,3,2) state");
    std::vector<EnsembleMember> members;
    for (const auto& m : members_) members.push_back({m.weight, CompositeState(m.amps)});
    return MixedState(std::move(members));
}

ComplexMatrix StateFile::density() const {
    const std::size_t dim = shape_.total();
    ComplexMatrix rho(dim, dim);
    for (const auto& m : members_) rho += Complex(m.weight) * m.amps.projector();
    return rho;
}

ComplexMatrix StateFile::spin_density() const {
    if (is_spin()) return density();
    if (is_composite()) {
        ComplexMatrix rho(kSpinDim, kSpinDim);
        for (const auto& m : members_)
            rho += Complex(m.weight) * reduced_density(m.amps, shape_, kSpinFactors);
        return rho;
    }
    throw InputError("state file dims are neither [2,2,2] nor [3,2,3,2,3,2]");
}

// ---- parsing ---------------------------------------------------------------

namespace {

std::string line_column(std::string_view text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

double number_at(const json& j, const std::string& path) {
    if (!j.is_number()) throw InputError(path + ": expected a number");
    const double x = j.get<double>();
    if (!std::isfinite(x)) throw InputError(path + ": non-finite number");
    return x;
}

StateVector parse_amps(const json& j, const std::string& path) {
    if (!j.is_array()) throw InputError(path + ": expected an array of [re, im] pairs");
    std::vector<Complex> amps;
    amps.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string at = path + "[" + std::to_string(i) + "]";
        const json& pair = j[i];
        if (!pair.is_array() || pair.size() != 2) throw InputError(at + ": expected [re, im]");
        amps.emplace_back(number_at(pair[0], at + "[0]"), number_at(pair[1], at + "[1]"));
    }
    return StateVector(std::move(amps));
}

json amps_to_json(const StateVector& v) {
    json arr = json::array();
    for (const Complex& z : v.amps()) arr.push_back(json::array({z.real(), z.imag()}));
    return arr;
}

json parse_document(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw InputError("malformed JSON at " + line_column(text, e.byte > 0 ? e.byte - 1 : 0) +
                         ": " + e.what());
    }
}

}  // namespace

StateFile parse_state(std::string_view text) {
    const json doc = parse_document(text);
    if (!doc.is_object()) throw InputError("state file: top level must be an object");

    FactorShape shape = composite_shape();
    if (doc.contains("dims")) {
        const json& d = doc["dims"];
        if (!d.is_array() || d.empty()) throw InputError("dims: expected a nonempty array");
        std::vector<std::size_t> dims;
        for (std::size_t i = 0; i < d.size(); ++i) {
            if (!d[i].is_number_unsigned() || d[i].get<std::size_t>() == 0)
                throw InputError("dims[" + std::to_string(i) + "]: expected a positive integer");
            dims.push_back(d[i].get<std::size_t>());
        }
        shape = FactorShape(std::move(dims));
    }

    const bool has_amps = doc.contains("amps");
    const bool has_ensemble = doc.contains("ensemble");
    if (has_amps == has_ensemble)
        throw InputError("state file: exactly one of \"amps\" or \"ensemble\" is required");

    if (has_amps) return StateFile::pure(shape, parse_amps(doc["amps"], "amps"));

    const json& ens = doc["ensemble"];
    if (!ens.is_array() || ens.empty()) throw InputError("ensemble: expected a nonempty array");
    std::vector<StateMember> members;
    for (std::size_t i = 0; i < ens.size(); ++i) {
        const std::string at = "ensemble[" + std::to_string(i) + "]";
        const json& e = ens[i];
        if (!e.is_object() || !e.contains("weight") || !e.contains("amps"))
            throw InputError(at + ": expected {\"weight\": w, \"amps\": [...]}");
        members.push_back({number_at(e["weight"], at + ".weight"), parse_amps(e["amps"], at + ".amps")});
    }
    return StateFile(shape, std::move(members), true);
}

std::string format_state(const StateFile& state) {
    json doc;
    doc["dims"] = state.shape().dims();
    if (state.is_mixed()) {
        json ens = json::array();
        for (const auto& m : state.members())
            ens.push_back({{"weight", m.weight}, {"amps", amps_to_json(m.amps)}});
        doc["ensemble"] = std::move(ens);
    } else {
        doc["amps"] = amps_to_json(state.members().front().amps);
    }
    return doc.dump() + "\n";
}

StateFile read_state(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open state file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_state(buf.str());
    } catch (const InputError& e) {
        throw InputError(path.string() + ": " + e.what());
    }
}

void write_state(const StateFile& state, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write state file " + path.string());
    out << format_state(state);
    if (!out) throw InputError("failed writing state file " + path.string());
}

std::string format_matrix(const ComplexMatrix& m) {
    json entries = json::array();
    for (const Complex& z : m.entries()) entries.push_back(json::array({z.real(), z.imag()}));
    json doc{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
    return doc.dump() + "\n";
}

ComplexMatrix parse_matrix(std::string_view text) {
    const json doc = parse_document(text);
    if (!doc.is_object() || !doc.contains("rows") || !doc.contains("cols") ||
        !doc.contains("entries"))
        throw InputError("matrix file: expected {\"rows\", \"cols\", \"entries\"}");
    if (!doc["rows"].is_number_unsigned() || !doc["cols"].is_number_unsigned())
        throw InputError("matrix file: rows and cols must be non-negative integers");
    const auto rows = doc["rows"].get<std::size_t>();
    const auto cols = doc["cols"].get<std::size_t>();
    const StateVector flat = parse_amps(doc["entries"], "entries");
    if (flat.dim() != rows * cols) throw InputError("matrix file: entry count does not match shape");
    return ComplexMatrix(rows, cols, std::vector<Complex>(flat.amps().begin(), flat.amps().end()));
}

}  // namespace relgme
