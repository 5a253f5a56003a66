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

#include "sfcodes/bounds.hpp"

#include "sfcodes/field.hpp"

namespace sfcodes {

std::string to_string(TriState t) {
    switch (t) {
        case TriState::True: return "true";
        case TriState::False: return "false";
        default: return "unknown";
    }
}

std::uint64_t griesmer_sum(std::uint32_t k, std::uint64_t d, std::uint64_t q) {
    if (k < 1 || d < 1 || q < 2)
        throw PreconditionError("positive-parameters", "griesmer_sum needs k >= 1, d >= 1, q >= 2");
    std::uint64_t sum = 0;
    std::uint64_t qi = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
        sum += (d + qi - 1) / qi;
        if (qi > d) {
            // every remaining term is 1
            sum += k - i - 1;
            break;
        }
        qi *= q;
    }
    return sum;
}

OptimalityVerdict classify(std::uint64_t n, std::uint32_t k, std::uint64_t d, std::uint64_t q) {
    prime_power_split(q);  // validates q
    OptimalityVerdict v;
    v.n = n;
    v.g_k_d = griesmer_sum(k, d, q);
    v.g_k_d_plus_1 = griesmer_sum(k, d + 1, q);
    if (n < v.g_k_d)
        throw PreconditionError("griesmer-bound",
                                "n = " + std::to_string(n) + " is below g(k,d) = " +
                                    std::to_string(v.g_k_d));
    v.griesmer = (n == v.g_k_d);
    v.near_griesmer = (n == v.g_k_d + 1);

    if (v.g_k_d_plus_1 > n) {
        v.distance_optimal = TriState::True;
    } else if (v.near_griesmer && k > 1 && d % q == 0) {
        v.distance_optimal = TriState::True;
    } else {
        v.distance_optimal = TriState::Unknown;
    }

    if (v.near_griesmer && k > 1 && d % q != 0) {
        v.almost_distance_optimal = TriState::True;
    } else {
        v.almost_distance_optimal = TriState::Unknown;
    }
    return v;
}

}  // namespace sfcodes
