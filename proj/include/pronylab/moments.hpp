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

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "pronylab/polynomial.hpp"

namespace pronylab {

/// Ordered measurements m_0..m_{K-1}, the left-hand data of every inverse
/// problem in this library.
using MomentSequence = std::vector<Complex>;

inline bool all_finite(const MomentSequence& m) {
    for (const Complex& v : m)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
}

inline bool all_real(const MomentSequence& m) {
    for (const Complex& v : m)
        if (v.imag() != 0.0) return false;
    return true;
}

inline void require_moments(const MomentSequence& m, std::size_t count, const char* who) {
    if (m.size() < count)
        throw std::invalid_argument(std::string(who) + ": needs at least " +
                                    std::to_string(count) + " moments, got " +
                                    std::to_string(m.size()));
    if (!all_finite(m)) throw std::invalid_argument(std::string(who) + ": non-finite moment");
}

inline MomentSequence real_moments(const std::vector<double>& values) {
    MomentSequence m(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) m[i] = Complex{values[i], 0.0};
    return m;
}

}  // namespace pronylab
