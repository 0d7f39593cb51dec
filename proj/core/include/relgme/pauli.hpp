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

#include "relgme/tensor.hpp"

namespace relgme {

// Spin basis: index 0 = |↑⟩ (σ_z = +1), index 1 = |↓⟩.
inline constexpr std::size_t kSpinUp = 0;
inline constexpr std::size_t kSpinDown = 1;

const ComplexMatrix& pauli_x();
const ComplexMatrix& pauli_y();
const ComplexMatrix& pauli_z();
const ComplexMatrix& identity2();

/// P± = (1 ± σ_z)/2.
const ComplexMatrix& projector_up();
const ComplexMatrix& projector_down();

}  // namespace relgme
