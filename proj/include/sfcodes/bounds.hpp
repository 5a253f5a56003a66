// Copyright 2026 The sfcodes Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <string>

#include "sfcodes/errors.hpp"

namespace sfcodes {

/// Three-valued answer for questions the Griesmer bound can only certify in
/// one direction.
enum class TriState { True, False, Unknown };

std::string to_string(TriState t);

/// g(k, d) = sum_{i=0}^{k-1} ceil(d / q^i), exact integer arithmetic.
std::uint64_t griesmer_sum(std::uint32_t k, std::uint64_t d, std::uint64_t q);

/// Classification of an [n, k, d] code over GF(q) against the Griesmer bound.
///
/// griesmer            n == g(k, d)
/// near_griesmer       n == g(k, d) + 1
/// distance_optimal    True when g(k, d+1) > n, or when the code is a near
///                     Griesmer code with k > 1 and q | d; Unknown otherwise
///                     (the bound cannot certify non-optimality).
/// almost_distance_optimal
///                     True when the code is a near Griesmer code with k > 1
///                     and q does not divide d; Unknown otherwise.
struct OptimalityVerdict {
    bool griesmer = false;
    bool near_griesmer = false;
    TriState distance_optimal = TriState::Unknown;
    TriState almost_distance_optimal = TriState::Unknown;
    // certificates
    std::uint64_t n = 0;
    std::uint64_t g_k_d = 0;
    std::uint64_t g_k_d_plus_1 = 0;
};

/// Throws PreconditionError when n < g(k, d) (parameters violate the bound)
/// or when q is not a prime power.
OptimalityVerdict classify(std::uint64_t n, std::uint32_t k, std::uint64_t d, std::uint64_t q);

}  // namespace sfcodes
