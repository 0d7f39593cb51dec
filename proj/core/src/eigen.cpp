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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "relgme/errors.hpp"
#include "relgme/tensor.hpp"
#include "relgme/tolerances.hpp"

namespace relgme {

namespace {

double off_diagonal_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (r != c) s += std::norm(a(r, c));
    return std::sqrt(s);
}

// Applies G = [[c, s], [-s·e^{-iφ}, c·e^{-iφ}]] on the (p, q) plane:
// a ← G† a G and v ← v G. G† a G has a zero (p, q) entry when
// a_pq = |a_pq| e^{iφ} and (c, s) is the symmetric Schur pair of the
// real matrix [[a_pp, |a_pq|], [|a_pq|, a_qq]].
void rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
    const Complex apq = a(p, q);
    const double mag = std::abs(apq);
    if (mag == 0.0) return;
    const Complex phase = apq / mag;  // e^{iφ}
    const Complex phase_conj = std::conj(phase);

    const double app = a(p, p).real();
    const double aqq = a(q, q).real();
    const double tau = (aqq - app) / (2.0 * mag);
    const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    const std::size_t n = a.rows();
    // Columns: a ← a G.
    for (std::size_t k = 0; k < n; ++k) {
        const Complex akp = a(k, p);
        const Complex akq = a(k, q);
        a(k, p) = c * akp - s * phase_conj * akq;
        a(k, q) = s * akp + c * phase_conj * akq;
    }
    // Rows: a ← G† a.
    for (std::size_t k = 0; k < n; ++k) {
        const Complex apk = a(p, k);
        const Complex aqk = a(q, k);
        a(p, k) = c * apk - s * phase * aqk;
        a(q, k) = s * apk + c * phase * aqk;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = a(p, p).real();
    a(q, q) = a(q, q).real();

    for (std::size_t k = 0; k < n; ++k) {
        const Complex vkp = v(k, p);
        const Complex vkq = v(k, q);
        v(k, p) = c * vkp - s * phase_conj * vkq;
        v(k, q) = s * vkp + c * phase_conj * vkq;
    }
}

}  // namespace

EigenDecomposition hermitian_eigen(const ComplexMatrix& h) {
    if (!h.is_square()) throw ShapeError("hermitian_eigen: matrix is not square");
    const double herr = h.hermiticity_error();
    if (herr > tol::kHermitian) {
        std::ostringstream msg;
        msg << "hermitian_eigen: matrix is not Hermitian (max deviation " << herr << ")";
        throw ValidationError(msg.str());
    }

    const std::size_t n = h.rows();
    ComplexMatrix a = h;
    ComplexMatrix v = ComplexMatrix::identity(n);
    const double threshold = tol::kJacobiOffDiagonal * std::max(h.frobenius_norm(), 1e-300);

    int sweep = 0;
    while (off_diagonal_norm(a) > threshold) {
        if (sweep == tol::kJacobiMaxSweeps) {
            std::ostringstream msg;
            msg << "hermitian_eigen: no convergence after " << sweep
                << " sweeps (off-diagonal norm " << off_diagonal_norm(a) << ")";
            throw NumericError(msg.str());
        }
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) rotate(a, v, p, q);
        ++sweep;
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return a(i, i).real() > a(j, j).real();
    });

    EigenDecomposition out;
    out.sweeps = sweep;
    out.values.reserve(n);
    out.vectors = ComplexMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        out.values.push_back(a(order[k], order[k]).real());
        for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
    }
    return out;
}

}  // namespace relgme
