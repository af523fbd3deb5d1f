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

// Test-only oracles. Each one recomputes an expected value along a path
// independent of the library code it is used to check: plain summation
// loops, naive series division, Gauss-Jordan elimination, and composite
// Simpson quadrature.

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

#include "pronylab/polynomial.hpp"
#include "pronylab/prony.hpp"
#include "pronylab/rng.hpp"

namespace testutil {

using pronylab::Complex;

/// Plain-loop forward sum m_k = sum_j a_j x_j^k using std::pow.
inline std::vector<Complex> oracle_prony_moments(const std::vector<Complex>& nodes,
                                                 const std::vector<Complex>& amps,
                                                 std::size_t count) {
    std::vector<Complex> m(count, Complex{});
    for (std::size_t k = 0; k < count; ++k)
        for (std::size_t j = 0; j < nodes.size(); ++j) {
            Complex p{1.0, 0.0};
            for (std::size_t t = 0; t < k; ++t) p *= nodes[j];
            m[k] += amps[j] * p;
        }
    return m;
}

/// Term-by-term evaluation of the confluent sum with its own falling
/// factorial.
inline std::vector<Complex> oracle_confluent_moments(
    const std::vector<Complex>& nodes, const std::vector<std::vector<Complex>>& amps,
    std::size_t count) {
    std::vector<Complex> m(count, Complex{});
    for (std::size_t k = 0; k < count; ++k)
        for (std::size_t j = 0; j < nodes.size(); ++j)
            for (std::size_t i = 0; i < amps[j].size(); ++i) {
                if (i > k) continue;
                double ff = 1.0;
                for (std::size_t t = 0; t < i; ++t) ff *= static_cast<double>(k - t);
                Complex p{1.0, 0.0};
                for (std::size_t t = 0; t < k - i; ++t) p *= nodes[j];
                m[k] += amps[j][i] * ff * p;
            }
    return m;
}

/// Multi-index forward sum for the separated multi-dimensional system.
inline Complex oracle_md_moment(const std::vector<std::vector<Complex>>& points,
                                const std::vector<Complex>& amps,
                                const std::vector<std::size_t>& index) {
    Complex acc{};
    for (std::size_t j = 0; j < points.size(); ++j) {
        Complex p = amps[j];
        for (std::size_t l = 0; l < index.size(); ++l)
            for (std::size_t t = 0; t < index[l]; ++t) p *= points[j][l];
        acc += p;
    }
    return acc;
}

/// First `count` Taylor coefficients of P/Q at 0 by naive series division
/// (requires Q(0) != 0).
inline std::vector<Complex> taylor_of_ratio(const pronylab::Polynomial& p,
                                            const pronylab::Polynomial& q, std::size_t count) {
    std::vector<Complex> c(count, Complex{});
    const Complex q0 = q[0];
    for (std::size_t k = 0; k < count; ++k) {
        Complex acc = p[k];
        for (std::size_t i = 1; i <= k; ++i) acc -= q[i] * c[k - i];
        c[k] = acc / q0;
    }
    return c;
}

/// Naive Gauss-Jordan inverse with partial pivoting, independent of Eigen.
inline std::vector<std::vector<Complex>> gauss_jordan_inverse(
    std::vector<std::vector<Complex>> a) {
    const std::size_t n = a.size();
    std::vector<std::vector<Complex>> inv(n, std::vector<Complex>(n, Complex{}));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = Complex{1.0, 0.0};
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
        std::swap(a[col], a[pivot]);
        std::swap(inv[col], inv[pivot]);
        const Complex d = a[col][col];
        for (std::size_t c = 0; c < n; ++c) {
            a[col][c] /= d;
            inv[col][c] /= d;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            const Complex f = a[r][col];
            if (f == Complex{}) continue;
            for (std::size_t c = 0; c < n; ++c) {
                a[r][c] -= f * a[col][c];
                inv[r][c] -= f * inv[col][c];
            }
        }
    }
    return inv;
}

inline double inf_norm_of(const std::vector<std::vector<Complex>>& m) {
    double best = 0.0;
    for (const auto& row : m) {
        double s = 0.0;
        for (const Complex& v : row) s += std::abs(v);
        best = std::max(best, s);
    }
    return best;
}

/// Composite Simpson rule with a fixed (even) panel count.
inline double simpson(const std::function<double(double)>& f, double a, double b,
                      std::size_t panels = 512) {
    if (panels % 2 != 0) ++panels;
    const double h = (b - a) / static_cast<double>(panels);
    double acc = f(a) + f(b);
    for (std::size_t i = 1; i < panels; ++i)
        acc += f(a + h * static_cast<double>(i)) * ((i % 2 != 0) ? 4.0 : 2.0);
    return acc * h / 3.0;
}

inline std::complex<double> simpson_complex(const std::function<Complex(double)>& f, double a,
                                            double b, std::size_t panels = 1024) {
    if (panels % 2 != 0) ++panels;
    const double h = (b - a) / static_cast<double>(panels);
    Complex acc = f(a) + f(b);
    for (std::size_t i = 1; i < panels; ++i)
        acc += f(a + h * static_cast<double>(i)) * ((i % 2 != 0) ? 4.0 : 2.0);
    return acc * (h / 3.0);
}

/// Random classical solution with real nodes in [-1,1], pairwise gaps >= 0.1,
/// and real amplitudes with 0.5 <= |a| <= 2.
inline pronylab::PronySolution random_prony_solution(std::uint64_t seed, std::size_t n,
                                                     double node_gap = 0.1,
                                                     double amp_gap = 0.0) {
    pronylab::PronySolution sol;
    std::uint64_t attempt = 0;
    while (sol.nodes.size() < n) {
        const double x = pronylab::uniform_signed(seed, 11, attempt++);
        bool ok = true;
        for (const Complex& y : sol.nodes)
            if (std::abs(x - y.real()) < node_gap) ok = false;
        if (ok) sol.nodes.emplace_back(x, 0.0);
    }
    attempt = 0;
    while (sol.amplitudes.size() < n) {
        const double mag = 0.5 + 1.5 * pronylab::uniform01(seed, 13, attempt);
        const double sign = pronylab::uniform01(seed, 17, attempt) < 0.5 ? -1.0 : 1.0;
        ++attempt;
        const double a = sign * mag;
        bool ok = true;
        if (amp_gap > 0.0)
            for (const Complex& b : sol.amplitudes)
                if (std::abs(a - b.real()) < amp_gap) ok = false;
        if (ok) sol.amplitudes.emplace_back(a, 0.0);
    }
    pronylab::canonicalize(sol);
    return sol;
}

/// Random confluent solution: node count <= 3, multiplicities <= 3, L <= 6.
inline pronylab::ConfluentPronySolution random_confluent_solution(std::uint64_t seed,
                                                                  std::size_t node_count,
                                                                  std::size_t max_mult = 3) {
    pronylab::ConfluentPronySolution sol;
    std::uint64_t attempt = 0;
    std::vector<double> nodes;
    while (nodes.size() < node_count) {
        const double x = pronylab::uniform_signed(seed, 23, attempt++);
        bool ok = true;
        for (double y : nodes)
            if (std::abs(x - y) < 0.15) ok = false;
        if (ok) nodes.push_back(x);
    }
    for (std::size_t j = 0; j < node_count; ++j) {
        pronylab::ConfluentTerm term;
        term.node = Complex{nodes[j], 0.0};
        const std::size_t mult =
            1 + static_cast<std::size_t>(pronylab::uniform01(seed, 29, j) * static_cast<double>(max_mult)) %
                    max_mult;
        for (std::size_t i = 0; i < mult; ++i) {
            const double mag = 0.5 + 1.5 * pronylab::uniform01(seed, 31, j * 7 + i);
            const double sign = pronylab::uniform01(seed, 37, j * 7 + i) < 0.5 ? -1.0 : 1.0;
            term.amplitudes.emplace_back(sign * mag, 0.0);
        }
        sol.terms.push_back(std::move(term));
    }
    pronylab::canonicalize(sol);
    return sol;
}

}  // namespace testutil
