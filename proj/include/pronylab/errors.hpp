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
#include <string>

namespace pronylab {

/// Base class of every recoverable failure thrown by the library.
/// Precondition violations (caller bugs) throw std::invalid_argument instead.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}

    /// Stable machine-readable tag, used when serializing errors.
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

/// The Hankel system backing a rational fit is rank deficient beyond the
/// scaling freedom. Usually means the requested order overestimates the
/// number of nodes; `effective_rank` tells the caller how far to back off.
class SingularHankel : public Error {
public:
    SingularHankel(std::size_t effective_rank, std::size_t requested)
        : Error("SingularHankel",
                "effective rank " + std::to_string(effective_rank) + " of " +
                    std::to_string(requested)),
          effective_rank(effective_rank),
          requested(requested) {}

    std::size_t effective_rank;
    std::size_t requested;
};

class NoConvergence : public Error {
public:
    explicit NoConvergence(const std::string& what) : Error("NoConvergence", what) {}
};

class DuplicateNodes : public Error {
public:
    explicit DuplicateNodes(const std::string& what) : Error("DuplicateNodes", what) {}
};

class SingularMatrix : public Error {
public:
    explicit SingularMatrix(const std::string& what) : Error("SingularMatrix", what) {}
};

class AmplitudeBelowFloor : public Error {
public:
    explicit AmplitudeBelowFloor(const std::string& what)
        : Error("AmplitudeBelowFloor", what) {}
};

class NodeCollision : public Error {
public:
    explicit NodeCollision(const std::string& what) : Error("NodeCollision", what) {}
};

class MultiplicityMismatch : public Error {
public:
    explicit MultiplicityMismatch(const std::string& what)
        : Error("MultiplicityMismatch", what) {}
};

class AmbiguousAmplitudes : public Error {
public:
    explicit AmbiguousAmplitudes(const std::string& what)
        : Error("AmbiguousAmplitudes", what) {}
};

class InconsistentAxes : public Error {
public:
    explicit InconsistentAxes(const std::string& what) : Error("InconsistentAxes", what) {}
};

class ZeroMeanKernel : public Error {
public:
    explicit ZeroMeanKernel(const std::string& what) : Error("ZeroMeanKernel", what) {}
};

class ZeroFourierCoefficient : public Error {
public:
    explicit ZeroFourierCoefficient(const std::string& what)
        : Error("ZeroFourierCoefficient", what) {}
};

class InsufficientMoments : public Error {
public:
    explicit InsufficientMoments(const std::string& what)
        : Error("InsufficientMoments", what) {}
};

class InconsistentJumps : public Error {
public:
    explicit InconsistentJumps(const std::string& what) : Error("InconsistentJumps", what) {}
};

class QuadratureNotConverged : public Error {
public:
    explicit QuadratureNotConverged(const std::string& what)
        : Error("QuadratureNotConverged", what) {}
};

class ConfigInvalid : public Error {
public:
    explicit ConfigInvalid(const std::string& what) : Error("ConfigInvalid", what) {}
};

}  // namespace pronylab
