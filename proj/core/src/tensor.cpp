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

#include "relgme/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "relgme/errors.hpp"
#include "relgme/pauli.hpp"
#include "relgme/tolerances.hpp"

namespace relgme {

// ---- FactorShape -----------------------------------------------------------

FactorShape::FactorShape(std::initializer_list<std::size_t> dims)
    : FactorShape(std::vector<std::size_t>(dims)) {}

FactorShape::FactorShape(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
    for (std::size_t d : dims_) {
        if (d == 0) throw ShapeError("factor dimensions must be positive");
    }
}

std::size_t FactorShape::total() const {
    return std::accumulate(dims_.begin(), dims_.end(), std::size_t{1}, std::multiplies<>());
}

std::size_t FactorShape::total(std::span<const std::size_t> factors) const {
    std::size_t n = 1;
    for (std::size_t f : factors) {
        if (f >= dims_.size()) throw ShapeError("factor index out of range");
        n *= dims_[f];
    }
    return n;
}

// ---- ComplexMatrix ---------------------------------------------------------

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_) {
        std::ostringstream msg;
        msg << "matrix " << rows_ << "x" << cols_ << " given " << data_.size() << " entries";
        throw ShapeError(msg.str());
    }
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols,
                             std::initializer_list<Complex> entries)
    : ComplexMatrix(rows, cols, std::vector<Complex>(entries)) {}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
    ComplexMatrix m(values.size(), values.size());
    for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
    return out;
}

Complex ComplexMatrix::trace() const {
    if (!is_square()) throw ShapeError("trace of a non-square matrix");
    Complex t = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const Complex& z : data_) s += std::norm(z);
    return std::sqrt(s);
}

double ComplexMatrix::hermiticity_error() const {
    if (!is_square()) throw ShapeError("hermiticity of a non-square matrix");
    double worst = 0.0;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = r; c < cols_; ++c)
            worst = std::max(worst, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
    return worst;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw ShapeError("matrix sum shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw ShapeError("matrix difference shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
    for (Complex& z : data_) z *= scale;
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) throw ShapeError("matrix product shape mismatch");
    ComplexMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{}) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
        }
    }
    return out;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(Complex scale, ComplexMatrix a) { return a *= scale; }

double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
    return (a - b).frobenius_norm();
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ar = 0; ar < a.rows(); ++ar)
        for (std::size_t ac = 0; ac < a.cols(); ++ac) {
            const Complex s = a(ar, ac);
            if (s == Complex{}) continue;
            for (std::size_t br = 0; br < b.rows(); ++br)
                for (std::size_t bc = 0; bc < b.cols(); ++bc)
                    out(ar * b.rows() + br, ac * b.cols() + bc) = s * b(br, bc);
        }
    return out;
}

// ---- StateVector -----------------------------------------------------------

StateVector::StateVector(std::vector<Complex> amps) : amps_(std::move(amps)) {}
StateVector::StateVector(std::initializer_list<Complex> amps) : amps_(amps) {}

StateVector StateVector::basis(std::size_t dim, std::size_t index) {
    if (index >= dim) throw ShapeError("basis index out of range");
    std::vector<Complex> amps(dim);
    amps[index] = 1.0;
    return StateVector(std::move(amps));
}

double StateVector::norm_squared() const {
    double s = 0.0;
    for (const Complex& z : amps_) s += std::norm(z);
    return s;
}

StateVector StateVector::normalized() const {
    const double n = std::sqrt(norm_squared());
    if (n == 0.0) throw InputError("cannot normalize the zero vector");
    return Complex(1.0 / n) * StateVector(*this);
}

ComplexMatrix StateVector::projector() const {
    ComplexMatrix p(dim(), dim());
    for (std::size_t r = 0; r < dim(); ++r)
        for (std::size_t c = 0; c < dim(); ++c) p(r, c) = amps_[r] * std::conj(amps_[c]);
    return p;
}

Complex StateVector::inner(const StateVector& other) const {
    if (dim() != other.dim()) throw ShapeError("inner product dimension mismatch");
    Complex s = 0.0;
    for (std::size_t i = 0; i < dim(); ++i) s += std::conj(amps_[i]) * other.amps_[i];
    return s;
}

StateVector& StateVector::operator+=(const StateVector& other) {
    if (dim() != other.dim()) throw ShapeError("vector sum dimension mismatch");
    for (std::size_t i = 0; i < dim(); ++i) amps_[i] += other.amps_[i];
    return *this;
}

StateVector& StateVector::operator*=(Complex scale) {
    for (Complex& z : amps_) z *= scale;
    return *this;
}

StateVector operator*(const ComplexMatrix& m, const StateVector& v) {
    if (m.cols() != v.dim()) throw ShapeError("matrix-vector shape mismatch");
    std::vector<Complex> out(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Complex s = 0.0;
        for (std::size_t c = 0; c < m.cols(); ++c) s += m(r, c) * v[c];
        out[r] = s;
    }
    return StateVector(std::move(out));
}

StateVector operator*(Complex scale, StateVector v) { return v *= scale; }
StateVector operator+(StateVector a, const StateVector& b) { return a += b; }

StateVector kron(const StateVector& a, const StateVector& b) {
    std::vector<Complex> out(a.dim() * b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j) out[i * b.dim() + j] = a[i] * b[j];
    return StateVector(std::move(out));
}

double distance(const StateVector& a, const StateVector& b) {
    if (a.dim() != b.dim()) throw ShapeError("distance dimension mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) s += std::norm(a[i] - b[i]);
    return std::sqrt(s);
}

// ---- Partial trace ---------------------------------------------------------

namespace {

// Splits every basis index of `shape` into (kept index, traced index), each a
// big-endian mixed-radix number over its own factors.
struct TraceLayout {
    std::size_t kept_dim = 1;
    std::size_t traced_dim = 1;
    std::vector<std::size_t> kept;
    std::vector<std::size_t> traced;
};

TraceLayout make_layout(const FactorShape& shape, std::span<const std::size_t> keep) {
    std::vector<bool> is_kept(shape.size(), false);
    for (std::size_t f : keep) {
        if (f >= shape.size()) throw ShapeError("partial trace: factor index out of range");
        if (is_kept[f]) throw ShapeError("partial trace: duplicate factor index");
        is_kept[f] = true;
    }

    TraceLayout layout;
    const std::size_t total = shape.total();
    layout.kept.assign(total, 0);
    layout.traced.assign(total, 0);
    for (std::size_t i = 0; i < total; ++i) {
        std::size_t rem = i;
        std::size_t kstride = 1;
        std::size_t tstride = 1;
        for (std::size_t f = shape.size(); f-- > 0;) {
            const std::size_t d = shape[f];
            const std::size_t digit = rem % d;
            rem /= d;
            if (is_kept[f]) {
                layout.kept[i] += digit * kstride;
                kstride *= d;
            } else {
                layout.traced[i] += digit * tstride;
                tstride *= d;
            }
        }
        if (i == 0) {
            layout.kept_dim = kstride;
            layout.traced_dim = tstride;
        }
    }
    return layout;
}

// Pure-state amplitudes arranged as a kept_dim x traced_dim matrix.
ComplexMatrix split_amplitudes(const StateVector& psi, const TraceLayout& layout) {
    ComplexMatrix m(layout.kept_dim, layout.traced_dim);
    for (std::size_t i = 0; i < psi.dim(); ++i) m(layout.kept[i], layout.traced[i]) = psi[i];
    return m;
}

}  // namespace

ComplexMatrix partial_trace(const ComplexMatrix& rho, const FactorShape& shape,
                            std::span<const std::size_t> keep) {
    if (!rho.is_square() || rho.rows() != shape.total()) {
        std::ostringstream msg;
        msg << "partial trace: matrix " << rho.rows() << "x" << rho.cols()
            << " does not match factor shape of total dimension " << shape.total();
        throw ShapeError(msg.str());
    }
    const TraceLayout layout = make_layout(shape, keep);

    std::vector<std::vector<std::size_t>> groups(layout.traced_dim);
    for (std::size_t i = 0; i < rho.rows(); ++i) groups[layout.traced[i]].push_back(i);

    ComplexMatrix out(layout.kept_dim, layout.kept_dim);
    for (const auto& group : groups)
        for (std::size_t a : group)
            for (std::size_t b : group) out(layout.kept[a], layout.kept[b]) += rho(a, b);
    return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, const FactorShape& shape,
                            std::initializer_list<std::size_t> keep) {
    return partial_trace(rho, shape, std::span<const std::size_t>(keep.begin(), keep.size()));
}

ComplexMatrix reduced_density(const StateVector& psi, const FactorShape& shape,
                              std::span<const std::size_t> keep) {
    if (psi.dim() != shape.total()) throw ShapeError("reduced density: vector does not match shape");
    const TraceLayout layout = make_layout(shape, keep);
    const ComplexMatrix m = split_amplitudes(psi, layout);
    return m * m.adjoint();
}

ComplexMatrix reduced_density(const StateVector& psi, const FactorShape& shape,
                              std::initializer_list<std::size_t> keep) {
    return reduced_density(psi, shape, std::span<const std::size_t>(keep.begin(), keep.size()));
}

double reduced_purity(const StateVector& psi, const FactorShape& shape,
                      std::span<const std::size_t> keep) {
    if (psi.dim() != shape.total()) throw ShapeError("reduced purity: vector does not match shape");
    const TraceLayout layout = make_layout(shape, keep);
    const ComplexMatrix m = split_amplitudes(psi, layout);
    // M M† and M† M share their nonzero spectrum; use the smaller Gram matrix.
    const ComplexMatrix gram =
        layout.kept_dim <= layout.traced_dim ? m * m.adjoint() : m.adjoint() * m;
    const double f = gram.frobenius_norm();
    return f * f;
}

double reduced_linear_entropy(const StateVector& psi, const FactorShape& shape,
                              std::span<const std::size_t> keep) {
    if (psi.dim() != shape.total())
        throw ShapeError("reduced linear entropy: vector does not match shape");
    const TraceLayout layout = make_layout(shape, keep);
    const ComplexMatrix m = split_amplitudes(psi, layout);
    double sum = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = i + 1; j < m.rows(); ++j)
            for (std::size_t k = 0; k < m.cols(); ++k)
                for (std::size_t l = k + 1; l < m.cols(); ++l)
                    sum += std::norm(m(i, k) * m(j, l) - m(i, l) * m(j, k));
    return 2.0 * sum;
}

// ---- Density-matrix checks -------------------------------------------------

DensityCheck is_density_matrix(const ComplexMatrix& rho, double tol) {
    DensityCheck check;
    if (!rho.is_square() || rho.rows() == 0) {
        check.reason = "not a non-empty square matrix";
        return check;
    }
    check.hermiticity_error = rho.hermiticity_error();
    check.trace = rho.trace();
    if (check.hermiticity_error > tol) {
        check.reason = "not Hermitian (max |h_ij - conj h_ji| = " +
                       std::to_string(check.hermiticity_error) + ")";
        return check;
    }
    if (std::abs(check.trace - Complex(1.0)) > tol) {
        check.reason = "trace " + std::to_string(check.trace.real()) + " differs from 1";
        return check;
    }
    // Symmetrize away sub-tolerance anti-Hermitian noise before diagonalizing.
    ComplexMatrix herm = rho + rho.adjoint();
    herm *= 0.5;
    const EigenDecomposition eig = hermitian_eigen(herm);
    check.min_eigenvalue = eig.values.back();
    if (check.min_eigenvalue < -tol) {
        check.reason = "negative eigenvalue " + std::to_string(check.min_eigenvalue);
        return check;
    }
    check.valid = true;
    return check;
}

double purity(const ComplexMatrix& rho) {
    const DensityCheck check = is_density_matrix(rho, tol::kPhysics);
    if (!check) throw ValidationError("purity: invalid density matrix: " + check.reason);
    // Tr(ρ²) = Σ|ρ_ij|² for Hermitian ρ.
    const double f = rho.frobenius_norm();
    return f * f;
}

// ---- Pauli matrices --------------------------------------------------------

const ComplexMatrix& pauli_x() {
    static const ComplexMatrix m(2, 2, {0.0, 1.0, 1.0, 0.0});
    return m;
}

const ComplexMatrix& pauli_y() {
    static const ComplexMatrix m(2, 2, {0.0, Complex(0, -1), Complex(0, 1), 0.0});
    return m;
}

const ComplexMatrix& pauli_z() {
    static const ComplexMatrix m(2, 2, {1.0, 0.0, 0.0, -1.0});
    return m;
}

const ComplexMatrix& identity2() {
    static const ComplexMatrix m = ComplexMatrix::identity(2);
    return m;
}

const ComplexMatrix& projector_up() {
    static const ComplexMatrix m(2, 2, {1.0, 0.0, 0.0, 0.0});
    return m;
}

const ComplexMatrix& projector_down() {
    static const ComplexMatrix m(2, 2, {0.0, 0.0, 0.0, 1.0});
    return m;
}

}  // namespace relgme
