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
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sfcodes/field.hpp"

namespace sfcodes {

enum class SetKind { Univariate, Bivariate };

struct Provenance {
    int family = 0;  // 0 for ad-hoc sets
    std::string label;
    bool theta_repaired = false;
    std::string note;
};

/// An explicit, duplicate-free, canonically ordered list of evaluation
/// points. Univariate sets live in one ambient field interpreted as GF(q^m)
/// with q = p^e; bivariate sets are pairs over two ambient fields GF(q^m) x
/// GF(q^k) sharing the same q.
struct DefiningSet {
    SetKind kind = SetKind::Univariate;
    std::shared_ptr<const FieldCtx> ctx_x;
    std::uint32_t e = 1;
    std::uint32_t m = 0;
    std::vector<std::uint32_t> points;  // univariate, ascending index

    std::shared_ptr<const FieldCtx> ctx_y;  // bivariate only
    std::uint32_t k = 0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;  // ascending lexicographic

    Provenance provenance;

    std::uint64_t q() const { return ipow(ctx_x->characteristic(), e); }
    std::uint64_t length() const {
        return kind == SetKind::Univariate ? points.size() : pairs.size();
    }
    std::uint64_t message_space_size() const {
        return kind == SetKind::Univariate ? ctx_x->size() : ctx_x->size() * ctx_y->size();
    }
    std::uint32_t message_dim() const { return kind == SetKind::Univariate ? m : m + k; }
};

/// Canonicalizing constructors for ad-hoc sets (sort + duplicate check).
DefiningSet make_univariate_set(std::shared_ptr<const FieldCtx> ctx, std::uint32_t e,
                                std::uint32_t m, std::vector<std::uint32_t> points,
                                Provenance provenance = {});
DefiningSet make_bivariate_set(std::shared_ptr<const FieldCtx> ctx_x, std::uint32_t m,
                               std::shared_ptr<const FieldCtx> ctx_y, std::uint32_t k,
                               std::uint32_t e,
                               std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs,
                               Provenance provenance = {});

/// The statement payload attached to a family build: claimed parameters,
/// weight distribution (either a complete table or a set of admissible
/// weight values), and the structural/optimality claims whose hypotheses the
/// parameters satisfy.
struct Prediction {
    std::string label;
    std::uint32_t q = 0;
    std::uint64_t n = 0;
    std::uint32_t dim = 0;
    std::uint64_t d = 0;

    bool has_full_wd = false;
    std::map<std::uint64_t, std::uint64_t> wd;  // weight -> multiplicity, zero rows dropped
    std::vector<std::uint64_t> weight_values;   // admissible nonzero weights, when claimed

    bool claim_griesmer = false;
    bool claim_near_griesmer = false;
    bool claim_distance_optimal = false;
    bool claim_self_orthogonal = false;
    bool claim_minimal = false;

    std::vector<std::string> notes;
};

struct FamilyBuild {
    DefiningSet set;
    Prediction prediction;
};

/// Family 1: D = GF(q^m) \ (union of GF(q^{r_i})).
/// Preconditions: m > 1; 1 <= r_1 < ... < r_h < m; every r_i | m; r_i does
/// not divide r_j for i < j; the witness set for the minimum distance is
/// nonempty.
FamilyBuild family1_build(std::uint64_t q, std::uint32_t m, std::vector<std::uint32_t> rs);

/// Family 1 special case: D = GF(q^m) \ {0, 1} for q >= 3.
FamilyBuild family1_special_build(std::uint64_t q, std::uint32_t m);

/// Family 2: D = GF(q^m) \ (union of theta_i + GF(q^r)), theta_0 = 0.
/// When `thetas` is empty the builder picks theta_i deterministically from
/// consecutive powers of the generator, skipping powers that would violate
/// coset disjointness (the skip is recorded in provenance).
FamilyBuild family2_build(std::uint64_t q, std::uint32_t m, std::uint32_t r, std::uint32_t h,
                          const std::vector<std::uint32_t>& thetas = {});

/// Family 3: D = GF(q^m) \ (union of theta_i * GF(q^r)).
/// Default thetas are 1, alpha, alpha^2, ... with the same repair rule.
FamilyBuild family3_build(std::uint64_t q, std::uint32_t m, std::uint32_t r, std::uint32_t h,
                          const std::vector<std::uint32_t>& thetas = {});

/// Family 4: D = {(x, y) : x in GF(q^m) \ GF(q^r), y in GF(q^k) \ GF(q^s)}.
/// r = s = 0 means the removed sets are {0} on both sides.
FamilyBuild family4_build(std::uint64_t q, std::uint32_t m, std::uint32_t k, std::uint32_t r,
                          std::uint32_t s);

/// Exhaustive witness scans for the minimum-distance conditions of families
/// 1-3. Return the first witness in canonical order, or nullopt.
std::optional<std::uint32_t> theta1_witness(const FieldCtx& ctx, std::uint32_t e, std::uint32_t m,
                                            const std::vector<std::uint32_t>& rs);
std::optional<std::uint32_t> theta2_witness(const FieldCtx& ctx, std::uint32_t e, std::uint32_t m,
                                            std::uint32_t r,
                                            const std::vector<std::uint32_t>& thetas);
std::optional<std::uint32_t> theta3_witness(const FieldCtx& ctx, std::uint32_t e, std::uint32_t m,
                                            std::uint32_t r,
                                            const std::vector<std::uint32_t>& thetas);

/// |{(u, v) in GF(q)^2 : u*theta1 + v*theta2 in GF(q^r)}|, counted
/// exhaustively. Parametrizes the family-2 h = 2 weight table.
std::uint32_t compute_tau(const FieldCtx& ctx, std::uint32_t e, std::uint32_t m, std::uint32_t r,
                          std::uint32_t theta1, std::uint32_t theta2);

/// Membership test selecting between the two family-3 h = 3 weight tables:
/// whether (t3 - t3^(q^r)) / (t2 - t2^(q^r)) lies in GF(q^r), where
/// t_i = theta_i / theta_1. Symmetric under swapping theta2 and theta3.
bool delta_in_subfield(const FieldCtx& ctx, std::uint32_t e, std::uint32_t m, std::uint32_t r,
                       std::uint32_t theta1, std::uint32_t theta2, std::uint32_t theta3);

/// |union of GF(q^{r_i})| by inclusion-exclusion over gcd subfields. Used as
/// an independent cross-check of the directly built union.
std::uint64_t subfield_union_size_ie(std::uint64_t q, const std::vector<std::uint32_t>& rs);

}  // namespace sfcodes
