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
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sfcodes/code_engine.hpp"

namespace sfcodes {

enum class Minimality {
    Minimal,                     // exact cover test passed
    NotMinimal,                  // exact cover test found a witness
    MinimalBySufficientCondition,  // w_min/w_max > (q-1)/q, exact test skipped
    SkippedTooLarge,             // outside the size gate and the ratio test failed
};

std::string to_string(Minimality m);

struct StructuralReport {
    bool self_orthogonal = false;
    // basis rows with nonzero inner product, when not self-orthogonal
    std::optional<std::pair<std::uint32_t, std::uint32_t>> self_orth_witness;
    Minimality minimal = Minimality::SkippedTooLarge;
    std::pair<std::uint64_t, std::uint64_t> wmin_wmax{0, 0};
    bool ratio_condition = false;  // w_min/w_max > (q-1)/q
};

/// Exact self-orthogonality: all pairwise inner products of basis rows vanish
/// in GF(q). Returns nullopt when self-orthogonal, else the first failing row
/// pair. Sufficient and necessary by bilinearity.
std::optional<std::pair<std::uint32_t, std::uint32_t>> self_orthogonality_witness(
    const GeneratorMatrix& gen);

bool is_self_orthogonal(const GeneratorMatrix& gen);

/// Minimality of the code spanned by `gen`. The exact pairwise support-cover
/// test over scalar classes runs only when q^dim <= gates.max_codewords and
/// n <= gates.max_length; otherwise only the w_min/w_max ratio condition is
/// evaluated. When both run, a passing ratio with a failing exact test is an
/// internal error (the ratio condition is sufficient).
StructuralReport structural_report(const GeneratorMatrix& gen, const CodeSummary& summary,
                                   const StructuralGates& gates = {});

/// Lemma-style propagation of self-orthogonality through defining-set
/// algebra; used as a test oracle against the exact check.
///
/// Union: D = D_1 u ... u D_t with pairwise intersections empty or {0}
/// (univariate) / {(0,0)} (bivariate). The code of D is self-orthogonal if
/// every part's code is. Throws when the intersection condition fails.
bool set_algebra_self_orth_union(const std::vector<std::pair<const DefiningSet*, bool>>& parts);

/// Difference: D = whole \ part with part a subset of whole. The code of D is
/// self-orthogonal if both input codes are. Throws when part is not nested in
/// whole.
bool set_algebra_self_orth_difference(const DefiningSet& whole, bool whole_self_orth,
                                      const DefiningSet& part, bool part_self_orth);

/// Removing the zero point (or keeping it) never changes self-orthogonality:
/// returns the defining set with 0 / (0,0) stripped.
DefiningSet strip_zero_point(const DefiningSet& d);

}  // namespace sfcodes
