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
#include <vector>

#include "pronylab/errors.hpp"
#include "pronylab/linalg.hpp"
#include "pronylab/moments.hpp"
#include "pronylab/polynomial.hpp"

namespace pronylab {

struct PadeResult {
    Polynomial numerator;    // P, degree <= N-1
    Polynomial denominator;  // Q, degree <= N, constant term exactly 1
};

/// Rational fit P/Q of the series I(z) = sum m_k z^k with deg P <= N-1 and
/// deg Q <= N, contact of order 2N at z = 0. Normalizing Q(0) = 1 turns the
/// order conditions k = N..2N-1 into the square Hankel system
///     sum_{j=1..N} m_{N+r-j} B_j = -m_{N+r},   r = 0..N-1,
/// and the first N conditions then define P by convolution. A rank short of
/// N means the data admits strictly fewer nodes than requested (or is
/// inconsistent); the caller learns the detected rank from the exception.
inline PadeResult pade_from_moments(const MomentSequence& moments, std::size_t n,
                                    double rank_tol = 1e-10) {
    if (n == 0) throw std::invalid_argument("pade_from_moments: order must be positive");
    require_moments(moments, 2 * n, "pade_from_moments");

    DenseMatrix hankel(n, n);
    DenseVector rhs(n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t j = 1; j <= n; ++j)
            hankel(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(j - 1)) =
                moments[n + r - j];
        rhs(static_cast<Eigen::Index>(r)) = -moments[n + r];
    }

    std::size_t rank = 0;
    const DenseVector b = solve_least_squares(hankel, rhs, rank_tol, &rank);
    if (rank < n) throw SingularHankel(rank, n);

    std::vector<Complex> q(n + 1);
    q[0] = Complex{1.0, 0.0};
    for (std::size_t j = 1; j <= n; ++j) q[j] = b(static_cast<Eigen::Index>(j - 1));

    std::vector<Complex> p(n);
    for (std::size_t k = 0; k < n; ++k) {
        Complex acc{};
        for (std::size_t i = 0; i <= k; ++i) acc += moments[i] * q[k - i];
        p[k] = acc;
    }

    return PadeResult{Polynomial(std::move(p)), Polynomial(std::move(q))};
}

}  // namespace pronylab
