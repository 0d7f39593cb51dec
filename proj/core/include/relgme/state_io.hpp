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

// JSON state files.
//
//   pure:  {"dims":[3,2,3,2,3,2], "amps":[[re,im], ...]}
//   mixed: {"dims":[...], "ensemble":[{"weight":w, "amps":[[re,im], ...]}, ...]}
//
// "dims" defaults to the composite shape (3,2,3,2,3,2) when absent. Spin-only
// files use dims [2,2,2]. Numbers are written with round-trip precision.

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "relgme/states.hpp"
#include "relgme/tensor.hpp"

namespace relgme {

struct StateMember {
    double weight = 1.0;
    StateVector amps;
};

class StateFile {
   public:
    /// Throws InputError if any member has the wrong dimension or norm, or
    /// if the weights are not a probability distribution.
    StateFile(FactorShape shape, std::vector<StateMember> members, bool mixed);

    static StateFile pure(FactorShape shape, StateVector amps);
    static StateFile from(const CompositeState& state);
    static StateFile from(const MixedState& state);

    const FactorShape& shape() const { return shape_; }
    const std::vector<StateMember>& members() const { return members_; }
    bool is_mixed() const { return mixed_; }
    bool is_composite() const { return shape_ == composite_shape(); }
    bool is_spin() const { return shape_ == spin_shape(); }

    /// Pure composite state; InputError otherwise.
    CompositeState as_composite() const;
    /// Composite ensemble (a pure file becomes a one-member ensemble).
    MixedState as_mixed() const;
    /// Σ_i q_i |ψ_i⟩⟨ψ_i| over the full space.
    ComplexMatrix density() const;
    /// Three-spin density matrix: the state itself for spin files, the
    /// momentum-traced reduction for composite files.
    ComplexMatrix spin_density() const;

   private:
    FactorShape shape_;
    std::vector<StateMember> members_;
    bool mixed_;
};

/// Throws InputError with line/column or field-path diagnostics.
StateFile parse_state(std::string_view text);
std::string format_state(const StateFile& state);

StateFile read_state(const std::filesystem::path& path);
void write_state(const StateFile& state, const std::filesystem::path& path);

/// {"rows":r, "cols":c, "entries":[[re,im], ...]} row-major.
std::string format_matrix(const ComplexMatrix& m);
ComplexMatrix parse_matrix(std::string_view text);

}  // namespace relgme
