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

namespace relgme::tol {

/// Physics-level checks: normalization, density-matrix validity, LU invariance.
inline constexpr double kPhysics = 1e-9;
/// Exact algebraic identities (kron associativity, partial-trace composition).
inline constexpr double kAlgebra = 1e-12;
/// Unitarity and oracle agreement of composed operators.
inline constexpr double kOperator = 1e-10;
/// Hermiticity required on entry to the eigensolver.
inline constexpr double kHermitian = 1e-10;

/// Jacobi stops once the off-diagonal Frobenius norm drops below this
/// fraction of the input's Frobenius norm.
inline constexpr double kJacobiOffDiagonal = 1e-14;
inline constexpr int kJacobiMaxSweeps = 100;

/// Negative radicands smaller than this in magnitude are rounding noise.
inline constexpr double kRadicandClamp = 1e-12;

}  // namespace relgme::tol
