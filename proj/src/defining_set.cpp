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

#include "sfcodes/defining_set.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace sfcodes {

namespace {

std::uint32_t gcd_u32(std::uint32_t a, std::uint32_t b) {
    while (b != 0) {
        std::uint32_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool excluded_pair(std::uint64_t q, std::uint32_t deg) {
    return (q == 2 && deg == 1) || (q == 2 && deg == 2) || (q == 3 && deg == 1);
}

void add_row(std::map<std::uint64_t, std::uint64_t>& wd, std::int64_t w, std::int64_t mult) {
    if (mult < 0 || w < 0) throw InternalError("negative entry in a predicted weight table");
    if (mult == 0) return;
    wd[static_cast<std::uint64_t>(w)] += static_cast<std::uint64_t>(mult);
}

void finalize_full_wd(Prediction& pred) {
    pred.has_full_wd = true;
    std::uint64_t total = 0;
    for (const auto& [w, mult] : pred.wd) total += mult;
    if (total != ipow(pred.q, pred.dim) - 1)
        throw InternalError("predicted weight distribution does not sum to q^k - 1");
    if (pred.wd.empty() || pred.wd.begin()->first != pred.d)
        throw InternalError("predicted weight distribution does not start at d");
    pred.weight_values.clear();
    for (const auto& [w, mult] : pred.wd) pred.weight_values.push_back(w);
}

std::string theta_list_string(const std::vector<std::uint32_t>& thetas) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < thetas.size(); ++i) {
        if (i) os << ",";
        os << "#" << thetas[i];
    }
    os << "}";
    return os.str();
}

std::vector<std::uint8_t> zero_trace_flags(const FieldCtx& ctx, std::uint32_t e, std::uint32_t m,
                                           std::uint32_t r) {
    std::vector<std::uint32_t> tt = trace_table(ctx, e, m, r);
    std::vector<std::uint8_t> out(tt.size());
    for (std::size_t i = 0; i < tt.size(); ++i) out[i] = tt[i] == 0 ? 1 : 0;
    return out;
}

void validate_coset_family_core(std::uint64_t q, std::uint32_t m, std::uint32_t r,
                                std::uint32_t h) {
    prime_power_split(q);
    if (m <= 1) throw PreconditionError("degree", "m must exceed 1");
    if (r < 1 || r >= m) throw PreconditionError("subfield-degree", "need 1 <= r < m");
    if (m % r != 0)
        throw PreconditionError("divisibility",
                                "r = " + std::to_string(r) + " does not divide m = " +
                                    std::to_string(m));
    if (h < 1) throw PreconditionError("h-range", "h must be at least 1");
}

struct CosetSetup {
    std::shared_ptr<const FieldCtx> ctx;
    std::uint32_t e = 0;
    SubfieldHandle fqr;
    std::vector<std::uint32_t> thetas;
    bool repaired = false;
};

// Theta selection and validation shared by families 2 and 3. `additive`
// selects the coset geometry: translates theta + GF(q^r) with the implicit
// theta_0 = 0 (family 2) versus dilates theta * GF(q^r) (family 3). Explicit
// theta lists are validated; an empty list requests the deterministic
// defaults: consecutive generator powers (starting at alpha^1 for family 2,
// at alpha^0 = 1 for family 3), skipping any power that would break coset
// disjointness. A skip is recorded as a repair.
CosetSetup setup_cosets(std::uint64_t q, std::uint32_t m, std::uint32_t r, std::uint32_t h,
                        std::vector<std::uint32_t> thetas, bool additive) {
    const auto [p, e] = prime_power_split(q);
    CosetSetup s;
    s.ctx = get_field(p, e * m);
    s.e = e;
    s.fqr = subfield(*s.ctx, e, r);
    const FieldCtx& F = *s.ctx;

    auto coset_conflict = [&](std::uint32_t cand, std::uint32_t prev) {
        if (additive) return s.fqr.contains(F.add_raw(cand, F.neg_raw(prev)));
        return s.fqr.contains(F.mul_raw(cand, F.inv_raw(prev)));
    };
    auto candidate_ok = [&](std::uint32_t cand, const std::vector<std::uint32_t>& chosen) {
        if (cand == 0) return false;
        if (additive && s.fqr.contains(cand)) return false;  // conflict with theta_0 = 0
        for (std::uint32_t prev : chosen)
            if (coset_conflict(cand, prev)) return false;
        return true;
    };

    if (thetas.empty()) {
        const std::uint64_t group = F.size() - 1;
        std::uint64_t j = additive ? 1 : 0;
        std::uint64_t next_default = j;
        while (s.thetas.size() < h && j < group) {
            const std::uint32_t cand = F.antilog_raw(j);
            if (candidate_ok(cand, s.thetas)) {
                if (j != next_default) s.repaired = true;
                s.thetas.push_back(cand);
                next_default = j + 1;
            }
            ++j;
        }
        if (s.thetas.size() < h)
            throw PreconditionError("theta-defaults",
                                    "no generator powers complete a disjoint coset list");
    } else {
        if (thetas.size() != h)
            throw PreconditionError("theta-count", "expected exactly h thetas");
        std::vector<std::uint32_t> accepted;
        for (std::uint32_t th : thetas) {
            if (th == 0 || th >= F.size())
                throw PreconditionError("theta-nonzero", "thetas must be nonzero field elements");
            if (!candidate_ok(th, accepted))
                throw PreconditionError("coset-overlap",
                                        "theta #" + std::to_string(th) +
                                            " does not give a coset disjoint from the others");
            accepted.push_back(th);
        }
        s.thetas = std::move(accepted);
    }
    return s;
}

}  // namespace

DefiningSet make_univariate_set(std::shared_ptr<const FieldCtx> ctx, std::uint32_t e,
                                std::uint32_t m, std::vector<std::uint32_t> points,
                                Provenance provenance) {
    if (!ctx) throw PreconditionError("context", "null field context");
    if (e == 0 || static_cast<std::uint64_t>(e) * m != ctx->degree())
        throw PreconditionError("interpretation", "e*m must equal the ambient degree");
    std::sort(points.begin(), points.end());
    if (std::adjacent_find(points.begin(), points.end()) != points.end())
        throw PreconditionError("duplicate-point", "defining set points must be distinct");
    if (!points.empty() && points.back() >= ctx->size())
        throw PreconditionError("element-range", "point index out of range");
    DefiningSet ds;
    ds.kind = SetKind::Univariate;
    ds.ctx_x = std::move(ctx);
    ds.e = e;
    ds.m = m;
    ds.points = std::move(points);
    ds.provenance = std::move(provenance);
    return ds;
}

DefiningSet make_bivariate_set(std::shared_ptr<const FieldCtx> ctx_x, std::uint32_t m,
                               std::shared_ptr<const FieldCtx> ctx_y, std::uint32_t k,
                               std::uint32_t e,
                               std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs,
                               Provenance provenance) {
    if (!ctx_x || !ctx_y) throw PreconditionError("context", "null field context");
    if (ctx_x->characteristic() != ctx_y->characteristic())
        throw PreconditionError("characteristic", "mismatched characteristics");
    if (e == 0 || static_cast<std::uint64_t>(e) * m != ctx_x->degree() ||
        static_cast<std::uint64_t>(e) * k != ctx_y->degree())
        throw PreconditionError("interpretation", "e*m and e*k must equal the ambient degrees");
    std::sort(pairs.begin(), pairs.end());
    if (std::adjacent_find(pairs.begin(), pairs.end()) != pairs.end())
        throw PreconditionError("duplicate-point", "defining set points must be distinct");
    DefiningSet ds;
    ds.kind = SetKind::Bivariate;
    ds.ctx_x = std::move(ctx_x);
    ds.e = e;
    ds.m = m;
    ds.ctx_y = std::move(ctx_y);
    ds.k = k;
    ds.pairs = std::move(pairs);
    ds.provenance = std::move(provenance);
    return ds;
}

std::uint64_t subfield_union_size_ie(std::uint64_t q, const std::vector<std::uint32_t>& rs) {
    const std::size_t h = rs.size();
    std::int64_t total = 0;
    for (std::uint32_t mask = 1; mask < (1u << h); ++mask) {
        std::uint32_t g = 0;
        for (std::size_t i = 0; i < h; ++i)
            if (mask & (1u << i)) g = gcd_u32(g, rs[i]);
        const std::int64_t term = static_cast<std::int64_t>(ipow(q, g));
        total += (__builtin_popcount(mask) % 2 == 1) ? term : -term;
    }
    return static_cast<std::uint64_t>(total);
}

std::optional<std::uint32_t> theta1_witness(const FieldCtx& ctx, std::uint32_t e, std::uint32_t m,
                                            const std::vector<std::uint32_t>& rs) {
    std::vector<std::vector<std::uint8_t>> tr_r;
    tr_r.reserve(rs.size());
    for (std::uint32_t r : rs) tr_r.push_back(zero_trace_flags(ctx, e, m, r));
    std::vector<std::uint32_t> gcds;
    for (std::size_t i = 0; i < rs.size(); ++i)
        for (std::size_t j = i + 1; j < rs.size(); ++j) gcds.push_back(gcd_u32(rs[i], rs[j]));
    std::sort(gcds.begin(), gcds.end());
    gcds.erase(std::unique(gcds.begin(), gcds.end()), gcds.end());
    std::vector<std::vector<std::uint8_t>> tr_g;
    for (std::uint32_t g : gcds) tr_g.push_back(zero_trace_flags(ctx, e, m, g));

    for (std::uint32_t a = 0; a < ctx.size(); ++a) {
        bool ok = true;
        for (const auto& t : tr_r)
            if (t[a]) {
                ok = false;
                break;
            }
        if (!ok) continue;
        for (const auto& t : tr_g)
            if (!t[a]) {
                ok = false;
                break;
            }
        if (ok) return a;
    }
    return std::nullopt;
}

std::optional<std::uint32_t> theta2_witness(const FieldCtx& ctx, std::uint32_t e, std::uint32_t m,
                                            std::uint32_t r,
                                            const std::vector<std::uint32_t>& thetas) {
    const auto tr_r = zero_trace_flags(ctx, e, m, r);
    const auto tr_base = zero_trace_flags(ctx, e, m, 1);
    for (std::uint32_t a = 1; a < ctx.size(); ++a) {
        if (!tr_r[a]) continue;
        bool ok = true;
        for (std::uint32_t th : thetas)
            if (tr_base[ctx.mul_raw(a, th)]) {
                ok = false;
                break;
            }
        if (ok) return a;
    }
    return std::nullopt;
}

std::optional<std::uint32_t> theta3_witness(const FieldCtx& ctx, std::uint32_t e, std::uint32_t m,
                                            std::uint32_t r,
                                            const std::vector<std::uint32_t>& thetas) {
    const auto tr_r = zero_trace_flags(ctx, e, m, r);
    for (std::uint32_t a = 1; a < ctx.size(); ++a) {
        bool ok = true;
        for (std::uint32_t th : thetas)
            if (tr_r[ctx.mul_raw(a, th)]) {
                ok = false;
                break;
            }
        if (ok) return a;
    }
    return std::nullopt;
}

std::uint32_t compute_tau(const FieldCtx& ctx, std::uint32_t e, std::uint32_t m, std::uint32_t r,
                          std::uint32_t theta1, std::uint32_t theta2) {
    (void)m;
    SubfieldHandle base = subfield(ctx, e, 1);
    SubfieldHandle fqr = subfield(ctx, e, r);
    std::uint32_t count = 0;
    for (std::uint32_t u : base.element_indices)
        for (std::uint32_t v : base.element_indices) {
            const std::uint32_t val = ctx.add_raw(ctx.mul_raw(u, theta1), ctx.mul_raw(v, theta2));
            if (fqr.contains(val)) ++count;
        }
    return count;
}

bool delta_in_subfield(const FieldCtx& ctx, std::uint32_t e, std::uint32_t m, std::uint32_t r,
                       std::uint32_t theta1, std::uint32_t theta2, std::uint32_t theta3) {
    if (theta1 == 0 || theta2 == 0 || theta3 == 0)
        throw PreconditionError("theta-nonzero", "thetas must be nonzero");
    (void)m;
    const std::uint64_t qr = ipow(ctx.characteristic(), e * r);
    const std::uint32_t inv1 = ctx.inv_raw(theta1);
    const std::uint32_t u = ctx.mul_raw(theta2, inv1);
    const std::uint32_t v = ctx.mul_raw(theta3, inv1);
    const std::uint32_t den = ctx.add_raw(u, ctx.neg_raw(ctx.pow_raw(u, qr)));
    if (den == 0)
        throw PreconditionError("zero-denominator",
                                "theta2/theta1 lies in GF(q^r); coset preconditions violated");
    const std::uint32_t num = ctx.add_raw(v, ctx.neg_raw(ctx.pow_raw(v, qr)));
    const std::uint32_t delta = ctx.mul_raw(num, ctx.inv_raw(den));
    return ctx.pow_raw(delta, qr) == delta;
}

FamilyBuild family1_build(std::uint64_t q, std::uint32_t m, std::vector<std::uint32_t> rs) {
    const auto [p, e] = prime_power_split(q);
    if (m <= 1) throw PreconditionError("degree", "m must exceed 1");
    if (rs.empty()) throw PreconditionError("r-list", "at least one subfield degree required");
    for (std::size_t i = 0; i + 1 < rs.size(); ++i)
        if (rs[i] >= rs[i + 1])
            throw PreconditionError("r-list", "subfield degrees must be strictly increasing");
    if (rs.front() < 1 || rs.back() >= m)
        throw PreconditionError("r-list", "subfield degrees must satisfy 1 <= r_1 < ... < r_h < m");
    for (std::uint32_t r : rs)
        if (m % r != 0)
            throw PreconditionError("divisibility",
                                    "r = " + std::to_string(r) + " does not divide m = " +
                                        std::to_string(m));
    for (std::size_t i = 0; i < rs.size(); ++i)
        for (std::size_t j = i + 1; j < rs.size(); ++j)
            if (rs[j] % rs[i] == 0)
                throw PreconditionError("chain-divisibility",
                                        "r_i must not divide r_j (got " + std::to_string(rs[i]) +
                                            " | " + std::to_string(rs[j]) + ")");

    auto ctx = get_field(p, e * m);
    const std::uint32_t h = static_cast<std::uint32_t>(rs.size());
    const std::uint32_t t = std::accumulate(rs.begin(), rs.end(), 0u, gcd_u32);

    if (!theta1_witness(*ctx, e, m, rs))
        throw PreconditionError("theta1-empty", "the minimum-distance witness set is empty");

    std::vector<std::uint8_t> removed(ctx->size(), 0);
    for (std::uint32_t r : rs)
        for (std::uint32_t idx : subfield(*ctx, e, r).element_indices) removed[idx] = 1;
    std::vector<std::uint32_t> points;
    for (std::uint32_t i = 0; i < ctx->size(); ++i)
        if (!removed[i]) points.push_back(i);

    std::ostringstream label;
    label << "family1 q=" << q << " m=" << m << " r={";
    for (std::size_t i = 0; i < rs.size(); ++i) label << (i ? "," : "") << rs[i];
    label << "}";

    Provenance prov;
    prov.family = 1;
    prov.label = label.str();

    Prediction pred;
    pred.label = prov.label;
    pred.q = static_cast<std::uint32_t>(q);
    pred.dim = m;
    pred.n = points.size();
    std::uint64_t sum_qr = 0, sum_qr1 = 0;
    for (std::uint32_t r : rs) {
        sum_qr += ipow(q, r);
        sum_qr1 += ipow(q, r - 1);
    }
    pred.d = (q - 1) * (ipow(q, m - 1) - sum_qr1);

    if (h == 1) {
        const std::uint32_t r = rs[0];
        add_row(pred.wd, static_cast<std::int64_t>(pred.d),
                static_cast<std::int64_t>(ipow(q, m) - ipow(q, m - r)));
        add_row(pred.wd, static_cast<std::int64_t>((q - 1) * ipow(q, m - 1)),
                static_cast<std::int64_t>(ipow(q, m - r) - 1));
        finalize_full_wd(pred);
    } else if (h == 2) {
        const std::uint32_t r1 = rs[0], r2 = rs[1];
        const std::int64_t qm1 = static_cast<std::int64_t>(ipow(q, m - 1));
        const std::int64_t qq = static_cast<std::int64_t>(q);
        const std::int64_t A1 = static_cast<std::int64_t>(ipow(q, m - r2 - r1 + t));
        add_row(pred.wd, (qq - 1) * qm1, A1 - 1);
        add_row(pred.wd, (qq - 1) * (qm1 - static_cast<std::int64_t>(ipow(q, r1 - 1))),
                static_cast<std::int64_t>(ipow(q, m - r2)) - A1);
        add_row(pred.wd, (qq - 1) * (qm1 - static_cast<std::int64_t>(ipow(q, r2 - 1))),
                static_cast<std::int64_t>(ipow(q, m - r1)) - A1);
        add_row(pred.wd,
                (qq - 1) * (qm1 - static_cast<std::int64_t>(ipow(q, r2 - 1)) -
                            static_cast<std::int64_t>(ipow(q, r1 - 1)) +
                            static_cast<std::int64_t>(ipow(q, t - 1))),
                static_cast<std::int64_t>(ipow(q, m)) - static_cast<std::int64_t>(ipow(q, m - t)));
        add_row(pred.wd,
                (qq - 1) * (qm1 - static_cast<std::int64_t>(ipow(q, r2 - 1)) -
                            static_cast<std::int64_t>(ipow(q, r1 - 1))),
                static_cast<std::int64_t>(ipow(q, m - t)) + A1 -
                    static_cast<std::int64_t>(ipow(q, m - r2)) -
                    static_cast<std::int64_t>(ipow(q, m - r1)));
        finalize_full_wd(pred);
    }

    const std::uint64_t omega = ipow(q, m) - pred.n;
    pred.claim_griesmer = (h == 1);
    pred.claim_near_griesmer = (h == 2 && q == 2 && t == 1);
    pred.claim_distance_optimal =
        static_cast<std::int64_t>(sum_qr - omega) < static_cast<std::int64_t>(rs[0]) + h - 1;
    pred.claim_self_orthogonal = !excluded_pair(q, t);
    pred.claim_minimal = ipow(q, m - 1) > sum_qr;

    return FamilyBuild{make_univariate_set(ctx, e, m, std::move(points), prov), std::move(pred)};
}

FamilyBuild family1_special_build(std::uint64_t q, std::uint32_t m) {
    const auto [p, e] = prime_power_split(q);
    if (q == 2)
        throw PreconditionError("q-range",
                                "q = 2 is the whole-prime-subfield case; use family 1 with r = 1");
    if (m <= 1) throw PreconditionError("degree", "m must exceed 1");
    auto ctx = get_field(p, e * m);

    std::vector<std::uint32_t> points;
    points.reserve(ctx->size() - 2);
    for (std::uint32_t i = 2; i < ctx->size(); ++i) points.push_back(i);

    Provenance prov;
    prov.family = 1;
    prov.label = "family1-special q=" + std::to_string(q) + " m=" + std::to_string(m);

    Prediction pred;
    pred.label = prov.label;
    pred.q = static_cast<std::uint32_t>(q);
    pred.dim = m;
    pred.n = ipow(q, m) - 2;
    pred.d = (q - 1) * ipow(q, m - 1) - 1;
    add_row(pred.wd, static_cast<std::int64_t>(pred.d),
            static_cast<std::int64_t>(ipow(q, m) - ipow(q, m - 1)));
    add_row(pred.wd, static_cast<std::int64_t>((q - 1) * ipow(q, m - 1)),
            static_cast<std::int64_t>(ipow(q, m - 1) - 1));
    finalize_full_wd(pred);
    pred.claim_griesmer = true;
    pred.claim_distance_optimal = true;
    pred.claim_minimal = true;

    return FamilyBuild{make_univariate_set(ctx, e, m, std::move(points), prov), std::move(pred)};
}

FamilyBuild family2_build(std::uint64_t q, std::uint32_t m, std::uint32_t r, std::uint32_t h,
                          const std::vector<std::uint32_t>& thetas) {
    validate_coset_family_core(q, m, r, h);
    const std::uint64_t qmr = ipow(q, m - r);
    if (h + 1 <= q) {
        if (!(h + 1 < qmr))
            throw PreconditionError("h-range", "h + 1 must be smaller than q^(m-r)");
    } else {
        if (!(h < (q - 1) * ipow(q, m - r - 1)))
            throw PreconditionError("h-range", "h must be smaller than (q-1)q^(m-r-1)");
    }

    CosetSetup s = setup_cosets(q, m, r, h, thetas, /*additive=*/true);
    const FieldCtx& F = *s.ctx;
    const std::uint32_t e = s.e;

    if (!theta2_witness(F, e, m, r, s.thetas))
        throw PreconditionError("theta2-empty", "the minimum-distance witness set is empty");

    std::vector<std::uint8_t> removed(F.size(), 0);
    for (std::uint32_t base : s.fqr.element_indices) removed[base] = 1;
    for (std::uint32_t th : s.thetas)
        for (std::uint32_t base : s.fqr.element_indices) removed[F.add_raw(th, base)] = 1;
    std::vector<std::uint32_t> points;
    for (std::uint32_t i = 0; i < F.size(); ++i)
        if (!removed[i]) points.push_back(i);
    const std::uint64_t qr = ipow(q, r);
    if (points.size() != ipow(q, m) - (h + 1) * qr)
        throw InternalError("family 2 cosets are not disjoint after validation");

    Provenance prov;
    prov.family = 2;
    prov.label = "family2 q=" + std::to_string(q) + " m=" + std::to_string(m) +
                 " r=" + std::to_string(r) + " thetas=" + theta_list_string(s.thetas);
    prov.theta_repaired = s.repaired;
    if (s.repaired) prov.note = "default theta powers skipped to keep cosets disjoint";

    Prediction pred;
    pred.label = prov.label;
    pred.q = static_cast<std::uint32_t>(q);
    pred.dim = m;
    pred.n = points.size();
    const std::uint64_t qm1 = ipow(q, m - 1);
    const std::uint64_t w_low = (q - 1) * (qm1 - (h + 1) * ipow(q, r - 1));
    pred.d = (h + 1 <= q) ? w_low : (q - 1) * qm1 - h * qr;

    pred.weight_values.push_back(w_low);
    for (std::uint32_t i = 0; i <= h; ++i) pred.weight_values.push_back((q - 1) * qm1 - i * qr);
    std::sort(pred.weight_values.begin(), pred.weight_values.end());
    pred.weight_values.erase(std::unique(pred.weight_values.begin(), pred.weight_values.end()),
                             pred.weight_values.end());

    if (h == 1) {
        add_row(pred.wd, static_cast<std::int64_t>(w_low),
                static_cast<std::int64_t>(qmr * (qr - 1)));
        add_row(pred.wd, static_cast<std::int64_t>((q - 1) * qm1 - qr),
                static_cast<std::int64_t>((q - 1) * ipow(q, m - r - 1)));
        add_row(pred.wd, static_cast<std::int64_t>((q - 1) * qm1),
                static_cast<std::int64_t>(ipow(q, m - r - 1) - 1));
        finalize_full_wd(pred);
    } else if (h == 2 && m >= r + 2) {
        const std::uint64_t tau = compute_tau(F, e, m, r, s.thetas[0], s.thetas[1]);
        const std::uint64_t qmr2 = ipow(q, m - r - 2);
        add_row(pred.wd, static_cast<std::int64_t>(w_low),
                static_cast<std::int64_t>(qmr * (qr - 1)));
        add_row(pred.wd, static_cast<std::int64_t>((q - 1) * qm1),
                static_cast<std::int64_t>(tau * qmr2) - 1);
        add_row(pred.wd, static_cast<std::int64_t>((q - 1) * qm1 - 2 * qr),
                static_cast<std::int64_t>((q * q - 2 * q + tau) * qmr2));
        add_row(pred.wd, static_cast<std::int64_t>((q - 1) * qm1 - qr),
                static_cast<std::int64_t>(2 * (q - tau) * qmr2));
        finalize_full_wd(pred);
    } else if (h == 2) {
        pred.notes.push_back("full weight table needs m >= r + 2; weight values only");
    }

    pred.claim_griesmer = (h + 1 <= q);
    if (pred.claim_griesmer) {
        pred.claim_distance_optimal = true;
    } else {
        std::uint64_t floor_sum = 0;
        for (std::uint32_t i = r; i < m; ++i) floor_sum += (h * qr - 1) / ipow(q, i);
        pred.claim_distance_optimal =
            (h + 1) * qr + r > 1 + h * q * (qr - 1) / (q - 1) + floor_sum;
    }
    pred.claim_self_orthogonal = !excluded_pair(q, r);
    pred.claim_minimal = (h + 1 <= q) ? (h + 1 < ipow(q, m - r - 1))
                                      : (m >= r + 2 && h < (q - 1) * ipow(q, m - r - 2));

    return FamilyBuild{make_univariate_set(s.ctx, e, m, std::move(points), prov), std::move(pred)};
}

FamilyBuild family3_build(std::uint64_t q, std::uint32_t m, std::uint32_t r, std::uint32_t h,
                          const std::vector<std::uint32_t>& thetas) {
    validate_coset_family_core(q, m, r, h);
    const std::uint64_t qmr = ipow(q, m - r);
    if (!(h < qmr)) throw PreconditionError("h-range", "h must be smaller than q^(m-r)");

    CosetSetup s = setup_cosets(q, m, r, h, thetas, /*additive=*/false);
    const FieldCtx& F = *s.ctx;
    const std::uint32_t e = s.e;

    if (!theta3_witness(F, e, m, r, s.thetas))
        throw PreconditionError("theta3-empty", "the minimum-distance witness set is empty");

    std::vector<std::uint8_t> removed(F.size(), 0);
    for (std::uint32_t th : s.thetas)
        for (std::uint32_t base : s.fqr.element_indices) removed[F.mul_raw(th, base)] = 1;
    std::vector<std::uint32_t> points;
    for (std::uint32_t i = 0; i < F.size(); ++i)
        if (!removed[i]) points.push_back(i);
    const std::uint64_t qr = ipow(q, r);
    if (points.size() != ipow(q, m) - h * qr + h - 1)
        throw InternalError("family 3 cosets do not intersect exactly in zero");

    Provenance prov;
    prov.family = 3;
    prov.label = "family3 q=" + std::to_string(q) + " m=" + std::to_string(m) +
                 " r=" + std::to_string(r) + " thetas=" + theta_list_string(s.thetas);
    prov.theta_repaired = s.repaired;
    if (s.repaired) prov.note = "default theta powers skipped to keep cosets disjoint";

    Prediction pred;
    pred.label = prov.label;
    pred.q = static_cast<std::uint32_t>(q);
    pred.dim = m;
    pred.n = points.size();
    const std::uint64_t qm1 = ipow(q, m - 1);
    const std::uint64_t qr1 = ipow(q, r - 1);
    pred.d = (q - 1) * (qm1 - h * qr1);

    for (std::uint32_t i = 0; i <= h; ++i) pred.weight_values.push_back((q - 1) * (qm1 - i * qr1));
    std::sort(pred.weight_values.begin(), pred.weight_values.end());

    if (h == 2) {
        const std::uint64_t qm2r = ipow(q, m - 2 * r);
        add_row(pred.wd, static_cast<std::int64_t>((q - 1) * qm1),
                static_cast<std::int64_t>(qm2r) - 1);
        add_row(pred.wd, static_cast<std::int64_t>((q - 1) * (qm1 - 2 * qr1)),
                static_cast<std::int64_t>(ipow(q, m) - 2 * qmr + qm2r));
        add_row(pred.wd, static_cast<std::int64_t>((q - 1) * (qm1 - qr1)),
                static_cast<std::int64_t>(2 * (qmr - qm2r)));
        finalize_full_wd(pred);
    } else if (h == 3) {
        const std::uint64_t qm2r = ipow(q, m - 2 * r);
        if (delta_in_subfield(F, e, m, r, s.thetas[0], s.thetas[1], s.thetas[2])) {
            add_row(pred.wd, static_cast<std::int64_t>((q - 1) * qm1),
                    static_cast<std::int64_t>(qm2r) - 1);
            add_row(pred.wd, static_cast<std::int64_t>((q - 1) * (qm1 - 2 * qr1)),
                    static_cast<std::int64_t>(3 * qm2r * (qr - 1)));
            add_row(pred.wd, static_cast<std::int64_t>((q - 1) * (qm1 - 3 * qr1)),
                    static_cast<std::int64_t>(ipow(q, m) - 3 * qmr + 2 * qm2r));
        } else {
            if (m < 3 * r) throw InternalError("ratio outside GF(q^r) requires m >= 3r");
            const std::uint64_t qm3r = ipow(q, m - 3 * r);
            add_row(pred.wd, static_cast<std::int64_t>((q - 1) * qm1),
                    static_cast<std::int64_t>(qm3r) - 1);
            add_row(pred.wd, static_cast<std::int64_t>((q - 1) * (qm1 - qr1)),
                    static_cast<std::int64_t>(3 * (qr - 1) * qm3r));
            add_row(pred.wd, static_cast<std::int64_t>((q - 1) * (qm1 - 2 * qr1)),
                    static_cast<std::int64_t>(3 * qmr) - static_cast<std::int64_t>(6 * qm2r) +
                        static_cast<std::int64_t>(3 * qm3r));
            add_row(pred.wd, static_cast<std::int64_t>((q - 1) * (qm1 - 3 * qr1)),
                    static_cast<std::int64_t>(ipow(q, m)) - static_cast<std::int64_t>(3 * qmr) +
                        static_cast<std::int64_t>(3 * qm2r) - static_cast<std::int64_t>(qm3r));
        }
        finalize_full_wd(pred);
    }

    pred.claim_griesmer = (h == 1);
    pred.claim_near_griesmer = (h == 2 || (q == 2 && h == 3));
    if (h == 1) {
        pred.claim_distance_optimal = true;
    } else {
        std::uint64_t floor_sum = 0;
        for (std::uint32_t i = r; i < m; ++i) floor_sum += (h * (q - 1) * qr1 - 1) / ipow(q, i);
        pred.claim_distance_optimal = r > floor_sum;
    }
    pred.claim_self_orthogonal = !excluded_pair(q, r);
    pred.claim_minimal = ipow(q, m - r - 1) > h;

    return FamilyBuild{make_univariate_set(s.ctx, e, m, std::move(points), prov), std::move(pred)};
}

FamilyBuild family4_build(std::uint64_t q, std::uint32_t m, std::uint32_t k, std::uint32_t r,
                          std::uint32_t s) {
    const auto [p, e] = prime_power_split(q);
    if (m < 1 || k < 1) throw PreconditionError("degree", "m and k must be positive");
    if ((r == 0) != (s == 0))
        throw PreconditionError("zero-degrees", "r and s must both be zero or both be positive");

    const bool punctured_zero = (r == 0);
    if (!punctured_zero) {
        if (r >= m || s >= k)
            throw PreconditionError("subfield-degree", "need r < m and s < k");
        if (m % r != 0 || k % s != 0)
            throw PreconditionError("divisibility", "need r | m and s | k");
        if (m + s < k + r)
            throw PreconditionError("parameter-order", "need m + s >= k + r (swap the two sides)");
        if (!(ipow(q, m - r) > ipow(q, m - r + s - k) + 1))
            throw PreconditionError("size", "need q^(m-r) > q^(m-r+s-k) + 1");
    } else {
        if (k > m) throw PreconditionError("parameter-order", "need k <= m (swap the two sides)");
        if (!(ipow(q, m) > ipow(q, m - k) + 1))
            throw PreconditionError("size", "need q^m > q^(m-k) + 1");
    }

    auto ctx_x = get_field(p, e * m);
    auto ctx_y = get_field(p, e * k);

    auto survivors = [&](const FieldCtx& F, std::uint32_t deg_removed) {
        std::vector<std::uint8_t> removed(F.size(), 0);
        if (deg_removed == 0) {
            removed[0] = 1;
        } else {
            for (std::uint32_t idx : subfield(F, e, deg_removed).element_indices) removed[idx] = 1;
        }
        std::vector<std::uint32_t> out;
        for (std::uint32_t i = 0; i < F.size(); ++i)
            if (!removed[i]) out.push_back(i);
        return out;
    };
    const std::vector<std::uint32_t> xs = survivors(*ctx_x, r);
    const std::vector<std::uint32_t> ys = survivors(*ctx_y, s);

    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    pairs.reserve(xs.size() * ys.size());
    for (std::uint32_t x : xs)
        for (std::uint32_t y : ys) pairs.emplace_back(x, y);

    Provenance prov;
    prov.family = 4;
    prov.label = "family4 q=" + std::to_string(q) + " m=" + std::to_string(m) +
                 " k=" + std::to_string(k) + " r=" + std::to_string(r) + " s=" + std::to_string(s);

    Prediction pred;
    pred.label = prov.label;
    pred.q = static_cast<std::uint32_t>(q);
    pred.dim = m + k;
    pred.n = static_cast<std::uint64_t>(xs.size()) * ys.size();
    const std::uint64_t qmk1 = ipow(q, m + k - 1);
    const std::uint64_t w_xside = ipow(q, k + r - 1);
    const std::uint64_t w_yside = ipow(q, m + s - 1);
    pred.d = (q - 1) * (qmk1 - w_yside - w_xside);

    add_row(pred.wd, static_cast<std::int64_t>((q - 1) * (qmk1 - w_xside)),
            static_cast<std::int64_t>(ipow(q, k - s) - 1));
    add_row(pred.wd, static_cast<std::int64_t>((q - 1) * (qmk1 - w_yside)),
            static_cast<std::int64_t>(ipow(q, m - r) - 1));
    add_row(pred.wd, static_cast<std::int64_t>(pred.d),
            static_cast<std::int64_t>((ipow(q, k - s) - 1) * (ipow(q, m - r) - 1)));
    const std::int64_t a4 = static_cast<std::int64_t>(ipow(q, m + k)) -
                            static_cast<std::int64_t>(ipow(q, m + k - r - s));
    if (a4 > 0)
        add_row(pred.wd, static_cast<std::int64_t>(pred.d + (q - 1) * ipow(q, r + s - 1)), a4);
    finalize_full_wd(pred);

    if (!punctured_zero) {
        if (m + s == k + r && q != 2) {
            pred.claim_distance_optimal = k + r > ipow(q, r + s);
        } else {
            pred.claim_distance_optimal = 1 + k + r > ipow(q, r + s);
        }
        pred.claim_self_orthogonal = !excluded_pair(q, r + s);
        pred.claim_minimal = ipow(q, m + k) > ipow(q, m + s + 1) + ipow(q, k + r);
    } else {
        pred.claim_griesmer = (m != k);
        pred.claim_near_griesmer = (m == k);
        pred.claim_distance_optimal = (m != k) || (m + (q == 2 ? 1 : 0) > 1);
        pred.claim_self_orthogonal = !excluded_pair(q, k);
        pred.claim_minimal = ipow(q, m + k) > ipow(q, m + 1) + ipow(q, k);
    }

    return FamilyBuild{
        make_bivariate_set(ctx_x, m, ctx_y, k, e, std::move(pairs), prov), std::move(pred)};
}

}  // namespace sfcodes
