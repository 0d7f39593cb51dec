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

// Dense complex linear algebra for the small operators used throughout the
// library (dimensions up to a few hundred). Storage is row-major and every
// object carries its dimensions explicitly; nothing broadcasts.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace relgme {

using Complex = std::complex<double>;

/// Ordered subsystem dimensions of a tensor-product space. Factor 0 is the
/// most significant digit of the mixed-radix basis index.
class FactorShape {
   public:
    FactorShape() = default;
    FactorShape(std::initializer_list<std::size_t> dims);
    explicit FactorShape(std::vector<std::size_t> dims);

    std::size_t size() const { return dims_.size(); }
    std::size_t operator[](std::size_t i) const { return dims_[i]; }
    const std::vector<std::size_t>& dims() const { return dims_; }
    /// Product of all subsystem dimensions.
    std::size_t total() const;
    /// Product of the dimensions of the listed factors.
    std::size_t total(std::span<const std::size_t> factors) const;

    bool operator==(const FactorShape&) const = default;

   private:
    std::vector<std::size_t> dims_;
};

class ComplexMatrix {
   public:
    ComplexMatrix() = default;
    /// Zero matrix.
    ComplexMatrix(std::size_t rows, std::size_t cols);
    /// Row-major entries; throws ShapeError if the count is not rows*cols.
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
    ComplexMatrix(std::size_t rows, std::size_t cols, std::initializer_list<Complex> entries);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix diagonal(std::span<const double> values);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    std::span<const Complex> entries() const { return data_; }

    ComplexMatrix adjoint() const;
    Complex trace() const;
    double frobenius_norm() const;
    /// Largest |h_ij - conj(h_ji)|.
    double hermiticity_error() const;

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(Complex scale);

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex scale, ComplexMatrix a);

/// Frobenius norm of a - b.
double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b);

/// Kronecker product; (a⊗b)(c⊗d) = (ac)⊗(bd).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

class StateVector {
   public:
    StateVector() = default;
    explicit StateVector(std::vector<Complex> amps);
    StateVector(std::initializer_list<Complex> amps);

    /// Computational basis ket |index⟩ of the given dimension.
    static StateVector basis(std::size_t dim, std::size_t index);

    std::size_t dim() const { return amps_.size(); }
    const Complex& operator[](std::size_t i) const { return amps_[i]; }
    std::span<const Complex> amps() const { return amps_; }

    double norm_squared() const;
    /// Throws InputError for the zero vector.
    StateVector normalized() const;
    /// |ψ⟩⟨ψ|
    ComplexMatrix projector() const;
    /// ⟨this|other⟩
    Complex inner(const StateVector& other) const;

    StateVector& operator+=(const StateVector& other);
    StateVector& operator*=(Complex scale);

   private:
    std::vector<Complex> amps_;
};

StateVector operator*(const ComplexMatrix& m, const StateVector& v);
StateVector operator*(Complex scale, StateVector v);
StateVector operator+(StateVector a, const StateVector& b);
StateVector kron(const StateVector& a, const StateVector& b);
/// Euclidean distance between two vectors of equal dimension.
double distance(const StateVector& a, const StateVector& b);

/// Reduced density matrix on the kept factors, in their original relative
/// order. `keep` may be given in any order; duplicates are an error.
ComplexMatrix partial_trace(const ComplexMatrix& rho, const FactorShape& shape,
                            std::span<const std::size_t> keep);
ComplexMatrix partial_trace(const ComplexMatrix& rho, const FactorShape& shape,
                            std::initializer_list<std::size_t> keep);

/// Same reduction taken directly from a pure state, without forming |ψ⟩⟨ψ|.
ComplexMatrix reduced_density(const StateVector& psi, const FactorShape& shape,
                              std::span<const std::size_t> keep);
ComplexMatrix reduced_density(const StateVector& psi, const FactorShape& shape,
                              std::initializer_list<std::size_t> keep);

/// Tr(ρ_keep²) of a pure state; equals the purity of the complementary reduction.
double reduced_purity(const StateVector& psi, const FactorShape& shape,
                      std::span<const std::size_t> keep);

/// (Tr ρ_keep)² − Tr ρ_keep², i.e. 1 − purity for a normalized state, as the
/// sum 2·Σ |M_ik M_jl − M_il M_jk|² over 2×2 minors of the kept × traced
/// amplitude matrix. Every term is non-negative, so product states give
/// O(ε²) rather than O(ε).
double reduced_linear_entropy(const StateVector& psi, const FactorShape& shape,
                              std::span<const std::size_t> keep);

struct EigenDecomposition {
    std::vector<double> values;  // descending
    ComplexMatrix vectors;       // column k pairs with values[k]
    int sweeps = 0;
};

/// Cyclic complex Jacobi on a Hermitian matrix.
///
/// Each rotation removes the phase of h_pq with a diagonal unitary and then
/// annihilates the now-real off-diagonal pair with a real Givens rotation.
/// Throws ValidationError if `h` is not Hermitian within tol::kHermitian and
/// NumericError if the off-diagonal mass does not converge within
/// tol::kJacobiMaxSweeps sweeps.
EigenDecomposition hermitian_eigen(const ComplexMatrix& h);

struct DensityCheck {
    bool valid = false;
    double hermiticity_error = 0.0;
    Complex trace{0.0, 0.0};
    double min_eigenvalue = 0.0;
    std::string reason;  // empty when valid

    explicit operator bool() const { return valid; }
};

/// Hermitian, unit trace and no eigenvalue below -tol.
DensityCheck is_density_matrix(const ComplexMatrix& rho, double tol);

/// Tr(ρ²). Throws ValidationError unless `rho` is a density matrix within
/// tol::kPhysics.
double purity(const ComplexMatrix& rho);

}  // namespace relgme
