/*
   Copyright 2026 pronylab authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstddef>
#include <stdexcept>

#include <Eigen/Dense>

#include "pronylab/errors.hpp"
#include "pronylab/polynomial.hpp"

namespace pronylab {

// Sizes in this library are tiny (tens of rows at most), so everything runs
// through dense factorizations: QR with column pivoting for solving and rank
// decisions, full-pivot LU for inverses.

using DenseMatrix = Eigen::MatrixXcd;
using DenseVector = Eigen::VectorXcd;

inline double inf_norm(const DenseMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0.0;
    return m.cwiseAbs().rowwise().sum().maxCoeff();
}

/// Inverse of a square matrix; throws SingularMatrix when numerically rank
/// deficient.
inline DenseMatrix invert(const DenseMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("invert: square matrix required");
    Eigen::FullPivLU<DenseMatrix> lu(m);
    if (!lu.isInvertible())
        throw SingularMatrix("matrix of size " + std::to_string(m.rows()) +
                             " is numerically singular");
    return lu.inverse();
}

/// Maximum absolute row sum of the computed inverse.
inline double inf_norm_inverse(const DenseMatrix& m) { return inf_norm(invert(m)); }

/// Least-squares solution of a (possibly overdetermined) dense system by QR
/// with column pivoting. `rank_tol` is relative to the largest pivot; a rank
/// short of the column count raises SingularHankel-style failures in callers,
/// so the detected rank is reported through `rank_out` when requested.
inline DenseVector solve_least_squares(const DenseMatrix& a, const DenseVector& b,
                                       double rank_tol = 1e-10,
                                       std::size_t* rank_out = nullptr) {
    if (a.rows() != b.size())
        throw std::invalid_argument("solve_least_squares: dimension mismatch");
    Eigen::ColPivHouseholderQR<DenseMatrix> qr(a);
    qr.setThreshold(rank_tol);
    if (rank_out != nullptr) *rank_out = static_cast<std::size_t>(qr.rank());
    return qr.solve(b);
}

}  // namespace pronylab
