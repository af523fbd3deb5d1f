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
#include <cstdint>

namespace pronylab {

// Counter-based randomness. Every draw is a pure function of its key, so
// experiment outputs do not depend on execution order or thread count.

/// splitmix64 finalizer.
inline std::uint64_t mix64(std::uint64_t z) noexcept {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t key_hash(std::uint64_t seed, std::uint64_t a, std::uint64_t b,
                              std::uint64_t c = 0) noexcept {
    std::uint64_t h = mix64(seed);
    h = mix64(h ^ a);
    h = mix64(h ^ b);
    h = mix64(h ^ c);
    return h;
}

/// Uniform draw in [0, 1) keyed by (seed, a, b, c).
inline double uniform01(std::uint64_t seed, std::uint64_t a, std::uint64_t b,
                        std::uint64_t c = 0) noexcept {
    return static_cast<double>(key_hash(seed, a, b, c) >> 11) * 0x1.0p-53;
}

/// Uniform draw in [-1, 1).
inline double uniform_signed(std::uint64_t seed, std::uint64_t a, std::uint64_t b,
                             std::uint64_t c = 0) noexcept {
    return 2.0 * uniform01(seed, a, b, c) - 1.0;
}

/// Standard normal draw (Box-Muller on two keyed uniforms).
inline double gaussian(std::uint64_t seed, std::uint64_t a, std::uint64_t b,
                       std::uint64_t c = 0) noexcept {
    const double u1 = uniform01(seed, a, b, 2 * c + 1);
    const double u2 = uniform01(seed, a, b, 2 * c + 2);
    const double r = std::sqrt(-2.0 * std::log(1.0 - u1));
    return r * std::cos(6.283185307179586476925286766559 * u2);
}

}  // namespace pronylab
