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
#include <limits>
#include <numeric>
#include <vector>

#include "pronylab/errors.hpp"
#include "pronylab/moments.hpp"
#include "pronylab/pade.hpp"
#include "pronylab/polynomial.hpp"
#include "pronylab/roots.hpp"
#include "pronylab/vandermonde.hpp"

namespace pronylab {

struct SolveOptions {
    double amplitude_floor = 1e-10;  // |a| below this flags an overestimated order
    double node_gap_tol = 1e-8;      // pairwise distinctness of returned nodes
    double cluster_tol = 1e-6;       // relative root-clustering distance
    double rank_tol = 1e-10;         // Hankel rank threshold, relative to largest pivot
    double trim_tol = 1e-9;          // relative tolerance deciding the effective deg Q
    bool symmetrize_real = true;     // snap conjugate pairs when the input is real
    double jump_sum_tol = 0.1;       // piecewise-constant closure residual, relative
};

/// Nodes x_j with amplitudes a_j, the unknowns of sum_j a_j x_j^k = m_k.
/// Solver outputs are canonical: sorted by node (real part, then imaginary),
/// pairwise-distinct nodes, amplitudes above the floor.
struct PronySolution {
    std::vector<Complex> nodes;
    std::vector<Complex> amplitudes;

    std::size_t size() const noexcept { return nodes.size(); }
};

/// One node of a confluent solution: amplitudes[i] multiplies the i-th
/// derivative term k(k-1)...(k-i+1) x^(k-i); multiplicity l = amplitudes.size().
struct ConfluentTerm {
    Complex node;
    std::vector<Complex> amplitudes;

    std::size_t multiplicity() const noexcept { return amplitudes.size(); }
};

struct ConfluentPronySolution {
    std::vector<ConfluentTerm> terms;

    std::size_t order_sum() const noexcept {
        std::size_t l = 0;
        for (const ConfluentTerm& t : terms) l += t.multiplicity();
        return l;
    }
};

namespace detail {

inline bool complex_less(Complex a, Complex b) noexcept {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
}

}  // namespace detail

inline void canonicalize(PronySolution& sol) {
    std::vector<std::size_t> order(sol.nodes.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return detail::complex_less(sol.nodes[a], sol.nodes[b]);
    });
    PronySolution sorted;
    for (std::size_t i : order) {
        sorted.nodes.push_back(sol.nodes[i]);
        sorted.amplitudes.push_back(sol.amplitudes[i]);
    }
    sol = std::move(sorted);
}

inline void canonicalize(ConfluentPronySolution& sol) {
    std::sort(sol.terms.begin(), sol.terms.end(), [](const ConfluentTerm& a, const ConfluentTerm& b) {
        return detail::complex_less(a.node, b.node);
    });
}

/// Forward map: values[k] = sum_j a_j x_j^k for k = 0..K-1, with 0^0 = 1.
inline MomentSequence prony_moments(const PronySolution& sol, std::size_t count) {
    if (sol.nodes.size() != sol.amplitudes.size())
        throw std::invalid_argument("prony_moments: node/amplitude length mismatch");
    MomentSequence m(count);
    for (std::size_t k = 0; k < count; ++k) {
        Complex acc{};
        for (std::size_t j = 0; j < sol.nodes.size(); ++j)
            acc += sol.amplitudes[j] * ipow(sol.nodes[j], k);
        m[k] = acc;
    }
    return m;
}

/// Forward map of the confluent system:
/// values[k] = sum_j sum_i a_{i,j} k(k-1)...(k-i+1) x_j^(k-i).
inline MomentSequence confluent_moments(const ConfluentPronySolution& sol, std::size_t count) {
    MomentSequence m(count);
    for (std::size_t k = 0; k < count; ++k) {
        Complex acc{};
        for (const ConfluentTerm& t : sol.terms)
            for (std::size_t i = 0; i < t.multiplicity(); ++i)
                acc += t.amplitudes[i] * detail::confluent_entry(k, i, t.node);
        m[k] = acc;
    }
    return m;
}

namespace detail {

/// For real input data the denominator is real, so its roots must be real or
/// come in conjugate pairs; Aberth iterates in complex arithmetic, so we snap
/// near-real values and near-conjugate pairs exactly. Returns the partner
/// index per node (-1 for real/unpaired) so amplitudes can be snapped too.
inline std::vector<int> symmetrize_conjugates(std::vector<Complex>& nodes, double rel_tol) {
    std::vector<int> partner(nodes.size(), -1);
    for (Complex& x : nodes)
        if (std::abs(x.imag()) <= rel_tol * (1.0 + std::abs(x))) x = Complex{x.real(), 0.0};
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (nodes[i].imag() == 0.0 || partner[i] != -1) continue;
        std::size_t best = i;
        double best_gap = std::numeric_limits<double>::infinity();
        for (std::size_t j = i + 1; j < nodes.size(); ++j) {
            if (nodes[j].imag() == 0.0 || partner[j] != -1) continue;
            const double gap = std::abs(nodes[i] - std::conj(nodes[j]));
            if (gap < best_gap) {
                best_gap = gap;
                best = j;
            }
        }
        if (best != i && best_gap <= rel_tol * (1.0 + std::abs(nodes[i]))) {
            const Complex w = 0.5 * (nodes[i] + std::conj(nodes[best]));
            nodes[i] = w;
            nodes[best] = std::conj(w);
            partner[i] = static_cast<int>(best);
            partner[best] = static_cast<int>(i);
        }
    }
    return partner;
}

inline void require_pairwise_distinct(const std::vector<Complex>& nodes, double gap_tol,
                                      const char* who) {
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t j = i + 1; j < nodes.size(); ++j)
            if (std::abs(nodes[i] - nodes[j]) <= gap_tol)
                throw NodeCollision(std::string(who) + ": recovered nodes " + std::to_string(i) +
                                    " and " + std::to_string(j) +
                                    " coincide; a confluent model may fit");
}

/// Shared first half of both inverse solvers: fit P/Q to the first 2*order
/// moments, decide the effective denominator degree, and return the roots of
/// Q. A degree deficit of exactly d means d poles sit at infinity, i.e. the
/// solution carries a node at the origin absorbing the deficit.
struct DenominatorRoots {
    std::vector<Complex> roots;
    std::size_t deficit = 0;
};

inline DenominatorRoots denominator_roots(const MomentSequence& m, std::size_t order,
                                          const SolveOptions& opt) {
    const PadeResult pade = pade_from_moments(m, order, opt.rank_tol);
    const Polynomial q = pade.denominator.trimmed(opt.trim_tol);
    const std::size_t deg = q.degree();

    DenominatorRoots out;
    out.deficit = order - deg;
    if (deg > 0) out.roots = find_roots(q).roots;
    return out;
}

}  // namespace detail

/// Two-step inversion of the classical system: Hankel/rational fit of the
/// moment generating function, then nodes as reciprocal denominator roots and
/// amplitudes by least squares over all 2N rows of the node Vandermonde.
/// A missing denominator degree corresponds to a node at the origin (its
/// geometric series is constant and contributes no pole).
inline PronySolution solve_prony_1d(const MomentSequence& m, std::size_t n,
                                    const SolveOptions& opt = {}) {
    if (n == 0) throw std::invalid_argument("solve_prony_1d: order must be positive");
    require_moments(m, 2 * n, "solve_prony_1d");
    const MomentSequence data(m.begin(), m.begin() + 2 * n);

    const auto den = detail::denominator_roots(data, n, opt);
    if (den.deficit > 1) throw SingularHankel(n - den.deficit, n);

    for (const auto& [center, count] : cluster_roots(den.roots, opt.cluster_tol))
        if (count > 1)
            throw NodeCollision("solve_prony_1d: " + std::to_string(count) +
                                " denominator roots cluster near (" +
                                std::to_string(center.real()) + ", " +
                                std::to_string(center.imag()) + ")");

    std::vector<Complex> nodes;
    nodes.reserve(n);
    for (const Complex& r : den.roots) nodes.push_back(1.0 / r);
    if (den.deficit == 1) nodes.push_back(Complex{});

    std::sort(nodes.begin(), nodes.end(), detail::complex_less);
    std::vector<int> partner(nodes.size(), -1);
    const bool real_input = opt.symmetrize_real && all_real(data);
    if (real_input) partner = detail::symmetrize_conjugates(nodes, opt.cluster_tol);
    detail::require_pairwise_distinct(nodes, opt.node_gap_tol, "solve_prony_1d");

    DenseMatrix v(2 * n, n);
    for (std::size_t k = 0; k < 2 * n; ++k)
        for (std::size_t j = 0; j < n; ++j)
            v(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(j)) = ipow(nodes[j], k);
    DenseVector rhs(2 * n);
    for (std::size_t k = 0; k < 2 * n; ++k) rhs(static_cast<Eigen::Index>(k)) = data[k];
    DenseVector a = solve_least_squares(v, rhs, opt.rank_tol);

    std::vector<Complex> amplitudes(n);
    for (std::size_t j = 0; j < n; ++j) amplitudes[j] = a(static_cast<Eigen::Index>(j));

    if (real_input) {
        for (std::size_t j = 0; j < n; ++j) {
            if (partner[j] == -1) {
                amplitudes[j] = Complex{amplitudes[j].real(), 0.0};
            } else if (static_cast<std::size_t>(partner[j]) > j) {
                const std::size_t p = static_cast<std::size_t>(partner[j]);
                const Complex mean = 0.5 * (amplitudes[j] + std::conj(amplitudes[p]));
                amplitudes[j] = mean;
                amplitudes[p] = std::conj(mean);
            }
        }
    }

    for (std::size_t j = 0; j < n; ++j)
        if (std::abs(amplitudes[j]) < opt.amplitude_floor)
            throw AmplitudeBelowFloor("solve_prony_1d: amplitude " + std::to_string(j) +
                                      " below floor; the order overestimates the data");

    PronySolution sol{std::move(nodes), std::move(amplitudes)};
    canonicalize(sol);
    return sol;
}

/// Confluent inversion with a prescribed multiplicity pattern. The moment
/// generating function of the confluent forward map is rational with a pole
/// of order l_j at the reciprocal of each node, so the same Hankel/rational
/// fit applies with denominator degree L = sum l_j; nodes come from clustered
/// denominator roots (a degree deficit of d is a node at the origin with
/// multiplicity d), and all amplitude orders follow from one least-squares
/// solve against the confluent Vandermonde columns on the first 2L rows.
inline ConfluentPronySolution solve_confluent_prony(const MomentSequence& m,
                                                    const std::vector<std::size_t>& multiplicities,
                                                    const SolveOptions& opt = {}) {
    if (multiplicities.empty())
        throw std::invalid_argument("solve_confluent_prony: empty multiplicity pattern");
    for (std::size_t l : multiplicities)
        if (l == 0) throw std::invalid_argument("solve_confluent_prony: multiplicities must be >= 1");
    const std::size_t total = std::accumulate(multiplicities.begin(), multiplicities.end(),
                                              std::size_t{0});
    require_moments(m, 2 * total, "solve_confluent_prony");
    const MomentSequence data(m.begin(), m.begin() + 2 * total);

    const auto den = detail::denominator_roots(data, total, opt);

    std::vector<Complex> nodes;
    std::vector<std::size_t> detected;
    for (const auto& [center, count] : cluster_roots(den.roots, opt.cluster_tol)) {
        nodes.push_back(1.0 / center);
        detected.push_back(count);
    }
    if (den.deficit > 0) {
        nodes.push_back(Complex{});
        detected.push_back(den.deficit);
    }

    std::vector<std::size_t> want = multiplicities;
    std::vector<std::size_t> got = detected;
    std::sort(want.begin(), want.end());
    std::sort(got.begin(), got.end());
    if (want != got) {
        std::string msg = "solve_confluent_prony: detected multiplicities (";
        for (std::size_t i = 0; i < got.size(); ++i)
            msg += (i ? "," : "") + std::to_string(got[i]);
        msg += ") do not match the requested pattern";
        throw MultiplicityMismatch(msg);
    }

    if (opt.symmetrize_real && all_real(data))
        for (Complex& x : nodes)
            if (std::abs(x.imag()) <= opt.cluster_tol * (1.0 + std::abs(x)))
                x = Complex{x.real(), 0.0};

    std::vector<std::size_t> order(nodes.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return detail::complex_less(nodes[a], nodes[b]);
    });

    std::vector<Complex> sorted_nodes;
    std::vector<std::size_t> sorted_mult;
    for (std::size_t i : order) {
        sorted_nodes.push_back(nodes[i]);
        sorted_mult.push_back(detected[i]);
    }
    detail::require_pairwise_distinct(sorted_nodes, opt.node_gap_tol, "solve_confluent_prony");

    const std::size_t rows = 2 * total;
    DenseMatrix v(rows, total);
    std::size_t col = 0;
    for (std::size_t j = 0; j < sorted_nodes.size(); ++j)
        for (std::size_t i = 0; i < sorted_mult[j]; ++i, ++col)
            for (std::size_t k = 0; k < rows; ++k)
                v(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(col)) =
                    detail::confluent_entry(k, i, sorted_nodes[j]);
    DenseVector rhs(rows);
    for (std::size_t k = 0; k < rows; ++k) rhs(static_cast<Eigen::Index>(k)) = data[k];
    const DenseVector a = solve_least_squares(v, rhs, opt.rank_tol);

    ConfluentPronySolution sol;
    col = 0;
    for (std::size_t j = 0; j < sorted_nodes.size(); ++j) {
        ConfluentTerm term;
        term.node = sorted_nodes[j];
        for (std::size_t i = 0; i < sorted_mult[j]; ++i, ++col)
            term.amplitudes.push_back(a(static_cast<Eigen::Index>(col)));
        if (std::abs(term.amplitudes.back()) < opt.amplitude_floor)
            throw AmplitudeBelowFloor("solve_confluent_prony: highest coefficient at node " +
                                      std::to_string(j) + " below floor");
        sol.terms.push_back(std::move(term));
    }
    return sol;
}

}  // namespace pronylab
