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

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "pronylab/errors.hpp"
#include "pronylab/linalg.hpp"
#include "pronylab/polynomial.hpp"

namespace pronylab {

namespace detail {

inline void require_distinct_nodes(const std::vector<Complex>& nodes, double tol) {
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t j = i + 1; j < nodes.size(); ++j) {
            const double gap = std::abs(nodes[i] - nodes[j]);
            if (gap <= tol * std::max({1.0, std::abs(nodes[i]), std::abs(nodes[j])}))
                throw DuplicateNodes("nodes " + std::to_string(i) + " and " + std::to_string(j) +
                                     " are closer than the clustering tolerance");
        }
}

/// Row k of the derivative-order-i column at node x: the i-th derivative of
/// x^k, i.e. k(k-1)...(k-i+1) x^(k-i). Zero whenever k < i, so no negative
/// powers are ever formed; at x = 0 only the k == i entry (= i!) survives.
inline Complex confluent_entry(std::size_t k, std::size_t i, Complex x) {
    const double ff = falling_factorial(k, i);
    if (ff == 0.0) return Complex{};
    return ff * ipow(x, k - i);
}

}  // namespace detail

/// Confluent Vandermonde matrix: node j contributes one value column x^k
/// followed by derivative_counts[j] derivative columns. With all counts equal
/// to one this is the Jacobian-side matrix with column pairs (x^k, k x^(k-1)).
inline DenseMatrix confluent_vandermonde(const std::vector<Complex>& nodes,
                                         const std::vector<std::size_t>& derivative_counts,
                                         std::size_t rows, double node_tol = 1e-8) {
    if (nodes.size() != derivative_counts.size())
        throw std::invalid_argument("confluent_vandermonde: one derivative count per node");
    detail::require_distinct_nodes(nodes, node_tol);

    std::size_t cols = 0;
    for (std::size_t c : derivative_counts) cols += c + 1;
    if (rows < cols)
        throw std::invalid_argument("confluent_vandermonde: too few rows for the column layout");

    DenseMatrix v(rows, cols);
    std::size_t col = 0;
    for (std::size_t j = 0; j < nodes.size(); ++j) {
        for (std::size_t i = 0; i <= derivative_counts[j]; ++i, ++col)
            for (std::size_t k = 0; k < rows; ++k)
                v(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(col)) =
                    detail::confluent_entry(k, i, nodes[j]);
    }
    return v;
}

/// A-priori estimate of ||V^-1||_inf for the confluent Vandermonde of
/// pairwise-distinct nodes with one derivative column each:
///   max_i b_i * prod_{j != i} ((1+|x_j|)/|x_i-x_j|)^2,
///   b_i = max(1+|x_i|, 1+2(1+|x_i|) sum_{j != i} 1/|x_j-x_i|).
/// Diverges as any two nodes approach each other.
inline double gautschi_bound(const std::vector<Complex>& nodes, double node_tol = 1e-8) {
    if (nodes.empty()) throw std::invalid_argument("gautschi_bound: at least one node");
    detail::require_distinct_nodes(nodes, node_tol);

    double bound = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const double xi = std::abs(nodes[i]);
        double inv_gap_sum = 0.0;
        double product = 1.0;
        for (std::size_t j = 0; j < nodes.size(); ++j) {
            if (j == i) continue;
            const double gap = std::abs(nodes[j] - nodes[i]);
            inv_gap_sum += 1.0 / gap;
            const double factor = (1.0 + std::abs(nodes[j])) / gap;
            product *= factor * factor;
        }
        const double b = std::max(1.0 + xi, 1.0 + 2.0 * (1.0 + xi) * inv_gap_sum);
        bound = std::max(bound, b * product);
    }
    return bound;
}

}  // namespace pronylab
