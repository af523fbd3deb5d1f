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
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace pronylab {

using Complex = std::complex<double>;

/// Integer power by binary exponentiation. ipow(x, 0) == 1 exactly, also for
/// x == 0 (the 0^0 = 1 convention used throughout the moment systems).
inline Complex ipow(Complex x, std::size_t n) noexcept {
    Complex r{1.0, 0.0};
    while (n != 0) {
        if (n & 1) r *= x;
        x *= x;
        n >>= 1;
    }
    return r;
}

inline double ipow(double x, std::size_t n) noexcept {
    double r = 1.0;
    while (n != 0) {
        if (n & 1) r *= x;
        x *= x;
        n >>= 1;
    }
    return r;
}

/// k(k-1)...(k-i+1); equals 1 for i == 0 and 0 whenever i > k.
inline double falling_factorial(std::size_t k, std::size_t i) noexcept {
    if (i > k) return 0.0;
    double r = 1.0;
    for (std::size_t t = 0; t < i; ++t) r *= static_cast<double>(k - t);
    return r;
}

/// Dense univariate polynomial over the complex doubles, coefficients in
/// ascending degree order. Exact trailing zeros are trimmed on construction;
/// the zero polynomial keeps one zero coefficient.
class Polynomial {
public:
    Polynomial() : coef_{Complex{0.0, 0.0}} {}

    explicit Polynomial(std::vector<Complex> coefficients) : coef_(std::move(coefficients)) {
        if (coef_.empty()) coef_.push_back(Complex{0.0, 0.0});
        trim_exact_zeros();
    }

    Polynomial(std::initializer_list<Complex> coefficients)
        : Polynomial(std::vector<Complex>(coefficients)) {}

    static Polynomial from_real(const std::vector<double>& coefficients) {
        std::vector<Complex> c(coefficients.size());
        std::transform(coefficients.begin(), coefficients.end(), c.begin(),
                       [](double v) { return Complex{v, 0.0}; });
        return Polynomial(std::move(c));
    }

    /// Monic product of (z - r) over the given roots.
    static Polynomial from_roots(const std::vector<Complex>& roots) {
        Polynomial p{Complex{1.0, 0.0}};
        for (const Complex& r : roots) p = p * Polynomial{-r, Complex{1.0, 0.0}};
        return p;
    }

    const std::vector<Complex>& coefficients() const noexcept { return coef_; }
    std::size_t degree() const noexcept { return coef_.size() - 1; }
    bool is_zero() const noexcept { return coef_.size() == 1 && coef_[0] == Complex{}; }
    Complex leading() const noexcept { return coef_.back(); }

    Complex operator[](std::size_t k) const noexcept {
        return k < coef_.size() ? coef_[k] : Complex{};
    }

    /// Horner evaluation.
    Complex operator()(Complex z) const noexcept {
        Complex y = coef_.back();
        for (std::size_t i = coef_.size() - 1; i-- > 0;) y = coef_[i] + z * y;
        return y;
    }

    Polynomial derivative() const {
        if (degree() == 0) return Polynomial{};
        std::vector<Complex> d(coef_.size() - 1);
        for (std::size_t i = 1; i < coef_.size(); ++i)
            d[i - 1] = coef_[i] * static_cast<double>(i);
        return Polynomial(std::move(d));
    }

    /// Copy with trailing coefficients below `rel_tol` * max|coef| dropped.
    /// This is how callers decide the effective degree of a numerically
    /// computed polynomial.
    Polynomial trimmed(double rel_tol) const {
        double scale = 0.0;
        for (const Complex& c : coef_) scale = std::max(scale, std::abs(c));
        if (scale == 0.0) return Polynomial{};
        std::size_t n = coef_.size();
        while (n > 1 && std::abs(coef_[n - 1]) <= rel_tol * scale) --n;
        return Polynomial(std::vector<Complex>(coef_.begin(), coef_.begin() + n));
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<Complex> c(std::max(a.coef_.size(), b.coef_.size()), Complex{});
        for (std::size_t i = 0; i < a.coef_.size(); ++i) c[i] += a.coef_[i];
        for (std::size_t i = 0; i < b.coef_.size(); ++i) c[i] += b.coef_[i];
        return Polynomial(std::move(c));
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        std::vector<Complex> c(std::max(a.coef_.size(), b.coef_.size()), Complex{});
        for (std::size_t i = 0; i < a.coef_.size(); ++i) c[i] += a.coef_[i];
        for (std::size_t i = 0; i < b.coef_.size(); ++i) c[i] -= b.coef_[i];
        return Polynomial(std::move(c));
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial{};
        std::vector<Complex> c(a.coef_.size() + b.coef_.size() - 1, Complex{});
        for (std::size_t i = 0; i < a.coef_.size(); ++i)
            for (std::size_t j = 0; j < b.coef_.size(); ++j) c[i + j] += a.coef_[i] * b.coef_[j];
        return Polynomial(std::move(c));
    }

    friend Polynomial operator*(Complex s, const Polynomial& p) {
        std::vector<Complex> c(p.coef_);
        for (Complex& v : c) v *= s;
        return Polynomial(std::move(c));
    }

private:
    void trim_exact_zeros() {
        while (coef_.size() > 1 && coef_.back() == Complex{}) coef_.pop_back();
    }

    std::vector<Complex> coef_;
};

}  // namespace pronylab
