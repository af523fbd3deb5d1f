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
#include "pronylab/polynomial.hpp"
#include "pronylab/rng.hpp"

namespace pronylab {

/// All complex roots of a polynomial, with multiplicity, plus the worst
/// backward-error residual max_i |p(z_i)| / sum_k |c_k||z_i|^k.
struct RootSet {
    std::vector<Complex> roots;
    double residual = 0.0;
};

struct RootFindOptions {
    std::size_t max_iterations = 500;
    double residual_tol = 1e-12;  // relative to coefficient magnitude at the root
};

namespace detail {

inline double backward_residual(const Polynomial& p, Complex z) {
    const auto& c = p.coefficients();
    double scale = 0.0;
    double zk = 1.0;
    const double az = std::abs(z);
    for (std::size_t k = 0; k < c.size(); ++k) {
        scale += std::abs(c[k]) * zk;
        zk *= az;
    }
    if (scale == 0.0) return 0.0;
    return std::abs(p(z)) / scale;
}

inline std::vector<Complex> quadratic_roots(Complex a0, Complex a1, Complex a2) {
    // a2 z^2 + a1 z + a0, a2 != 0; Citardauq form for the small root.
    const Complex disc = std::sqrt(a1 * a1 - 4.0 * a2 * a0);
    const Complex q = (std::real(std::conj(a1) * disc) >= 0.0) ? -0.5 * (a1 + disc)
                                                               : -0.5 * (a1 - disc);
    Complex r0, r1;
    if (q == Complex{}) {
        r0 = r1 = Complex{};
    } else {
        r0 = q / a2;
        r1 = a0 / q;
    }
    return {r0, r1};
}

}  // namespace detail

/// Simultaneous (Ehrlich-Aberth) iteration from a jittered ring of starting
/// points. Deterministic: the jitter comes from a fixed-key counter draw.
inline RootSet find_roots(const Polynomial& p, const RootFindOptions& options = {}) {
    if (p.degree() < 1 || p.leading() == Complex{})
        throw std::invalid_argument("find_roots: degree >= 1 with nonzero leading coefficient required");

    std::vector<Complex> coef = p.coefficients();

    // Exact zero constant terms are roots at the origin; peel them off.
    std::vector<Complex> roots;
    while (coef.size() > 1 && coef.front() == Complex{}) {
        roots.push_back(Complex{});
        coef.erase(coef.begin());
    }

    const std::size_t n = coef.size() - 1;
    if (n == 1) {
        roots.push_back(-coef[0] / coef[1]);
    } else if (n == 2) {
        auto qr = detail::quadratic_roots(coef[0], coef[1], coef[2]);
        roots.insert(roots.end(), qr.begin(), qr.end());
    } else if (n > 2) {
        const Polynomial q{std::vector<Complex>(coef)};
        const Polynomial dq = q.derivative();

        // Ring radius: geometric mean of root moduli, clamped by the Cauchy bound.
        double cauchy = 0.0;
        for (std::size_t k = 0; k < n; ++k)
            cauchy = std::max(cauchy, std::abs(coef[k] / coef[n]));
        cauchy += 1.0;
        double radius = std::pow(std::abs(coef[0] / coef[n]), 1.0 / static_cast<double>(n));
        radius = std::clamp(radius, 1e-3, cauchy);

        std::vector<Complex> z(n);
        for (std::size_t i = 0; i < n; ++i) {
            const double jitter = 0.2 * uniform_signed(0x70726f6e79ULL, i, n);
            const double angle =
                6.283185307179586 * (static_cast<double>(i) + 0.37 + jitter) / static_cast<double>(n);
            z[i] = radius * Complex{std::cos(angle), std::sin(angle)};
        }

        bool done = false;
        for (std::size_t it = 0; it < options.max_iterations && !done; ++it) {
            done = true;
            for (std::size_t i = 0; i < n; ++i) {
                const Complex pv = q(z[i]);
                if (detail::backward_residual(q, z[i]) <= 0.1 * options.residual_tol) continue;
                const Complex dv = dq(z[i]);
                Complex ratio;
                if (dv == Complex{}) {
                    // Derivative vanished (midpoint of a root pair); nudge.
                    z[i] += 1e-6 * (1.0 + std::abs(z[i]));
                    done = false;
                    continue;
                }
                ratio = pv / dv;
                Complex rejection{};
                for (std::size_t j = 0; j < n; ++j) {
                    if (j == i) continue;
                    const Complex d = z[i] - z[j];
                    if (d == Complex{}) continue;
                    rejection += 1.0 / d;
                }
                const Complex denom = 1.0 - ratio * rejection;
                const Complex step = (denom == Complex{}) ? ratio : ratio / denom;
                z[i] -= step;
                if (std::abs(step) > 1e-14 * (1.0 + std::abs(z[i]))) done = false;
            }
        }
        roots.insert(roots.end(), z.begin(), z.end());
    }

    RootSet result;
    result.roots = std::move(roots);
    std::sort(result.roots.begin(), result.roots.end(), [](Complex a, Complex b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    for (const Complex& r : result.roots)
        result.residual = std::max(result.residual, detail::backward_residual(p, r));
    if (!(result.residual <= options.residual_tol))
        throw NoConvergence("root residual " + std::to_string(result.residual) +
                            " above tolerance after iteration budget");
    return result;
}

/// Groups roots whose pairwise relative distance is below `rel_tol`.
/// Returns (representative, multiplicity) pairs; the representative is the
/// cluster mean. Used for multiplicity detection by the confluent solvers.
inline std::vector<std::pair<Complex, std::size_t>> cluster_roots(
    const std::vector<Complex>& roots, double rel_tol = 1e-6) {
    std::vector<Complex> sorted = roots;
    std::sort(sorted.begin(), sorted.end(), [](Complex a, Complex b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });

    std::vector<std::pair<Complex, std::size_t>> clusters;
    std::vector<char> used(sorted.size(), 0);
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (used[i]) continue;
        Complex sum = sorted[i];
        std::size_t count = 1;
        used[i] = 1;
        for (std::size_t j = i + 1; j < sorted.size(); ++j) {
            if (used[j]) continue;
            const Complex mean = sum / static_cast<double>(count);
            const double gap = std::abs(sorted[j] - mean);
            if (gap <= rel_tol * std::max({1.0, std::abs(mean), std::abs(sorted[j])})) {
                sum += sorted[j];
                ++count;
                used[j] = 1;
            }
        }
        clusters.emplace_back(sum / static_cast<double>(count), count);
    }
    return clusters;
}

}  // namespace pronylab
