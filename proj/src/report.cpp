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

#include "sfcodes/report.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace sfcodes {

std::vector<std::uint32_t> resolve_theta_exprs(const FieldCtx& ctx,
                                               const std::vector<std::string>& exprs) {
    std::vector<std::uint32_t> out;
    out.reserve(exprs.size());
    const std::uint64_t group = ctx.size() - 1;
    for (const std::string& expr : exprs) {
        if (expr == "1") {
            out.push_back(1);
        } else if (expr == "a") {
            out.push_back(ctx.generator_index());
        } else if (expr == "1+a") {
            out.push_back(ctx.add_raw(1, ctx.generator_index()));
        } else if (expr.rfind("a^", 0) == 0) {
            const std::uint64_t j = std::stoull(expr.substr(2));
            out.push_back(ctx.antilog_raw(j % group));
        } else if (expr.rfind("#", 0) == 0) {
            const std::uint64_t idx = std::stoull(expr.substr(1));
            if (idx >= ctx.size())
                throw PreconditionError("element-range", "theta index " + expr + " out of range");
            out.push_back(static_cast<std::uint32_t>(idx));
        } else {
            throw PreconditionError("theta-syntax",
                                    "cannot parse theta '" + expr +
                                        "' (expected 1, a, a^J, 1+a or #index)");
        }
    }
    return out;
}

FamilyBuild build_family(const FamilySpec& spec) {
    const auto [p, e] = prime_power_split(spec.q);
    switch (spec.family) {
        case 1:
            if (spec.special) return family1_special_build(spec.q, spec.m);
            return family1_build(spec.q, spec.m, spec.rs);
        case 2:
        case 3: {
            auto ctx = get_field(p, e * spec.m);
            std::vector<std::uint32_t> thetas = resolve_theta_exprs(*ctx, spec.theta_exprs);
            const std::uint32_t h =
                spec.theta_exprs.empty() ? spec.h : static_cast<std::uint32_t>(thetas.size());
            return spec.family == 2 ? family2_build(spec.q, spec.m, spec.r, h, thetas)
                                    : family3_build(spec.q, spec.m, spec.r, h, thetas);
        }
        case 4:
            return family4_build(spec.q, spec.m, spec.k, spec.r, spec.s);
        default:
            throw PreconditionError("family", "family must be 1, 2, 3 or 4");
    }
}

ConstructResult run_family(const FamilySpec& spec, std::uint32_t parallelism,
                           const RunLimits& limits) {
    ConstructResult res{build_family(spec), {}, {}, {}, {}};
    res.summary = enumerate_code(res.build.set, limits.engine, parallelism);
    res.matrix = generator_matrix(res.build.set, limits.engine);
    res.verdict = classify(res.summary.n, res.summary.dim, res.summary.d, res.summary.q);
    res.structural = structural_report(res.matrix, res.summary, limits.gates);
    return res;
}

namespace {

FamilySpec f1(std::uint64_t q, std::uint32_t m, std::vector<std::uint32_t> rs) {
    FamilySpec s;
    s.family = 1;
    s.q = q;
    s.m = m;
    s.rs = std::move(rs);
    return s;
}

FamilySpec f1s(std::uint64_t q, std::uint32_t m) {
    FamilySpec s;
    s.family = 1;
    s.special = true;
    s.q = q;
    s.m = m;
    return s;
}

FamilySpec f23(int family, std::uint64_t q, std::uint32_t m, std::uint32_t r,
               std::vector<std::string> thetas) {
    FamilySpec s;
    s.family = family;
    s.q = q;
    s.m = m;
    s.r = r;
    s.h = static_cast<std::uint32_t>(thetas.size());
    s.theta_exprs = std::move(thetas);
    return s;
}

FamilySpec f4(std::uint64_t q, std::uint32_t m, std::uint32_t k, std::uint32_t r, std::uint32_t s) {
    FamilySpec spec;
    spec.family = 4;
    spec.q = q;
    spec.m = m;
    spec.k = k;
    spec.r = r;
    spec.s = s;
    return spec;
}

Fixture fixture(std::string label, FamilySpec spec, std::uint64_t n, std::uint32_t dim,
                std::uint64_t d, std::map<std::uint64_t, std::uint64_t> wd, bool griesmer,
                bool near_griesmer, bool distance_optimal, bool self_orthogonal, bool minimal,
                bool cites_external_table) {
    Fixture fx;
    fx.label = std::move(label);
    fx.spec = std::move(spec);
    fx.n = n;
    fx.dim = dim;
    fx.d = d;
    fx.wd = std::move(wd);
    fx.griesmer = griesmer;
    fx.near_griesmer = near_griesmer;
    fx.distance_optimal = distance_optimal;
    fx.self_orthogonal = self_orthogonal;
    fx.minimal = minimal;
    fx.cites_external_table = cites_external_table;
    return fx;
}

}  // namespace

const std::vector<Fixture>& reference_fixtures() {
    static const std::vector<Fixture> fixtures = [] {
        std::vector<Fixture> fs;
        fs.push_back(fixture("family1 q=3 m=6 r=2 [720,6,480]", f1(3, 6, {2}), 720, 6, 480,
                             {{480, 648}, {486, 80}}, true, false, true, true, true, false));
        fs.push_back(fixture("family1-special q=3 m=5 [241,5,161]", f1s(3, 5), 241, 5, 161,
                             {{161, 162}, {162, 80}}, true, false, true, false, true, false));
        fs.push_back(fixture("family1 q=2 m=6 r=2,3 [54,6,26]", f1(2, 6, {2, 3}), 54, 6, 26,
                             {{26, 12}, {27, 32}, {28, 12}, {30, 4}, {32, 3}}, false, true, true,
                             false, true, true));
        // thetas are beta, beta^2, beta^3 for beta = #7, the smallest-index
        // primitive element whose power triple keeps the three trace
        // functionals independent (the canonical generator's does not, which
        // changes the multiplicities).
        fs.push_back(fixture("family2 h=3 q=4 m=6 r=2 [4032,6,3024]",
                             f23(2, 4, 6, 2, {"#7", "#21", "#107"}), 4032, 6, 3024,
                             {{3024, 3948}, {3040, 108}, {3056, 36}, {3072, 3}}, true, false, true,
                             true, true, false));
        fs.push_back(fixture("family2 h=1 q=2 m=6 r=2 [56,6,28]", f23(2, 2, 6, 2, {"a"}), 56, 6,
                             28, {{28, 56}, {32, 7}}, true, false, true, false, true, true));
        fs.push_back(fixture("family2 h=1 q=3 m=4 r=2 [63,4,42]", f23(2, 3, 4, 2, {"a"}), 63, 4,
                             42, {{42, 72}, {45, 6}, {54, 2}}, true, false, true, true, true,
                             true));
        fs.push_back(fixture("family2 h=2 q=2 m=6 r=1 [58,6,28]", f23(2, 2, 6, 1, {"a", "a^2"}),
                             58, 6, 28, {{28, 8}, {29, 32}, {30, 16}, {32, 7}}, false, false, true,
                             false, true, true));
        fs.push_back(fixture("family2 h=2 q=3 m=4 r=1 [72,4,48]", f23(2, 3, 4, 1, {"a", "a^2"}),
                             72, 4, 48, {{48, 66}, {51, 12}, {54, 2}}, true, false, true, false,
                             true, true));
        fs.push_back(fixture("family3 h=4 q=2 m=12 r=3 [4067,12,2032]",
                             f23(3, 2, 12, 3, {"1", "a", "a^2", "a^3"}), 4067, 12, 2032,
                             {{2032, 2401}, {2036, 1372}, {2040, 294}, {2044, 28}}, false, false,
                             true, true, true, false));
        fs.push_back(fixture("family3 h=2 q=2 m=6 r=2 [57,6,28]", f23(3, 2, 6, 2, {"1", "a"}), 57,
                             6, 28, {{28, 36}, {30, 24}, {32, 3}}, false, true, true, false, true,
                             true));
        fs.push_back(fixture("family3 h=2 q=3 m=4 r=2 [64,4,42]", f23(3, 3, 4, 2, {"1", "a"}), 64,
                             4, 42, {{42, 64}, {48, 16}}, false, true, true, true, true, true));
        fs.push_back(fixture("family3 h=3 q=2 m=6 r=2 [54,6,26]",
                             f23(3, 2, 6, 2, {"1", "a", "1+a"}), 54, 6, 26,
                             {{26, 24}, {28, 36}, {32, 3}}, false, true, true, false, true, true));
        fs.push_back(fixture("family3 h=3 q=3 m=8 r=2 [6536,8,4356]",
                             f23(3, 3, 8, 2, {"1", "a", "a^2"}), 6536, 8, 4356,
                             {{4356, 4608}, {4362, 1728}, {4368, 216}, {4374, 8}}, false, false,
                             true, true, true, false));
        fs.push_back(fixture("family4 q=2 m=4 k=3 r=1 s=1 [84,7,40]", f4(2, 4, 3, 1, 1), 84, 7, 40,
                             {{40, 21}, {42, 96}, {48, 7}, {56, 3}}, false, false, true, false,
                             true, true));
        fs.push_back(fixture("family4 q=2 m=4 k=4 r=1 s=1 [196,8,96]", f4(2, 4, 4, 1, 1), 196, 8,
                             96, {{96, 49}, {98, 192}, {112, 14}}, false, false, true, false, true,
                             true));
        fs.push_back(fixture("family4 q=2 m=5 k=4 r=0 s=0 [465,9,232]", f4(2, 5, 4, 0, 0), 465, 9,
                             232, {{232, 465}, {240, 31}, {248, 15}}, true, false, true, true,
                             true, false));
        fs.push_back(fixture("family4 q=2 m=4 k=4 r=0 s=0 [225,8,112]", f4(2, 4, 4, 0, 0), 225, 8,
                             112, {{112, 225}, {120, 30}}, false, true, true, true, true, true));
        return fs;
    }();
    return fixtures;
}

FixtureResult run_fixture(const Fixture& fx, std::uint32_t parallelism, const RunLimits& limits) {
    FixtureResult res;
    res.label = fx.label;
    res.expected_n = fx.n;
    res.expected_dim = fx.dim;
    res.expected_d = fx.d;
    res.expected_we = weight_enumerator_string(fx.wd);
    res.cites_external_table = fx.cites_external_table;

    FamilyBuild build = build_family(fx.spec);
    const Prediction& pred = build.prediction;
    res.params = build.set.provenance.label;

    res.summary = enumerate_code(build.set, limits.engine, parallelism);
    GeneratorMatrix gen = generator_matrix(build.set, limits.engine);
    res.verification = verify_prediction(res.summary, gen, pred, limits.gates);
    res.observed_we = weight_enumerator_string(res.summary.wd);

    auto add = [&](std::string claim, std::string expected, std::string observed) {
        const bool ok = expected == observed;
        res.pass = res.pass && ok;
        res.expectation_checks.push_back({std::move(claim), std::move(expected),
                                          std::move(observed), ok});
    };
    auto flag = [](bool b) { return std::string(b ? "true" : "false"); };

    add("predicted n", std::to_string(fx.n), std::to_string(pred.n));
    add("predicted dimension", std::to_string(fx.dim), std::to_string(pred.dim));
    add("predicted minimum distance", std::to_string(fx.d), std::to_string(pred.d));
    if (pred.has_full_wd)
        add("predicted weight enumerator", res.expected_we, weight_enumerator_string(pred.wd));
    add("observed weight enumerator", res.expected_we, res.observed_we);
    add("claim griesmer", flag(fx.griesmer), flag(pred.claim_griesmer));
    add("claim near-griesmer", flag(fx.near_griesmer), flag(pred.claim_near_griesmer));
    add("claim distance-optimal", flag(fx.distance_optimal), flag(pred.claim_distance_optimal));
    add("claim self-orthogonal", flag(fx.self_orthogonal), flag(pred.claim_self_orthogonal));
    add("claim minimal", flag(fx.minimal), flag(pred.claim_minimal));

    res.pass = res.pass && res.verification.pass;
    return res;
}

ReproManifest reproduce_references(const std::string& only, std::uint32_t parallelism,
                                   const RunLimits& limits) {
    ReproManifest manifest;
    for (const Fixture& fx : reference_fixtures()) {
        if (!only.empty() && fx.label.find(only) == std::string::npos) continue;
        manifest.results.push_back(run_fixture(fx, parallelism, limits));
        manifest.all_pass = manifest.all_pass && manifest.results.back().pass;
    }
    return manifest;
}

namespace {

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        out += c;
    }
    out += "\"";
    return out;
}

const char* kSweepHeader =
    "family,q,m,k,r,s,h,params,n,dim,d,griesmer,near_griesmer,distance_optimal,"
    "almost_distance_optimal\n";

void sweep_one(const FamilySpec& spec, std::uint32_t parallelism, const RunLimits& limits,
               std::ostringstream& rows, std::vector<std::string>& rejected) {
    std::ostringstream params;
    params << "family" << spec.family << " q=" << spec.q << " m=" << spec.m;
    if (spec.family == 4) params << " k=" << spec.k;
    if (spec.family == 1) {
        params << " r={";
        for (std::size_t i = 0; i < spec.rs.size(); ++i) params << (i ? "," : "") << spec.rs[i];
        params << "}";
    } else {
        params << " r=" << spec.r;
    }
    if (spec.family == 4) params << " s=" << spec.s;
    if (spec.family == 2 || spec.family == 3) params << " h=" << spec.h;

    try {
        ConstructResult res = run_family(spec, parallelism, limits);
        rows << spec.family << "," << spec.q << "," << spec.m << ","
             << (spec.family == 4 ? std::to_string(spec.k) : "") << ","
             << (spec.family == 1 ? "" : std::to_string(spec.r)) << ","
             << (spec.family == 4 ? std::to_string(spec.s) : "") << ","
             << (spec.family == 2 || spec.family == 3 ? std::to_string(spec.h) : "") << ","
             << csv_quote(res.build.set.provenance.label) << "," << res.summary.n << ","
             << res.summary.dim << "," << res.summary.d << ","
             << (res.verdict.griesmer ? "true" : "false") << ","
             << (res.verdict.near_griesmer ? "true" : "false") << ","
             << to_string(res.verdict.distance_optimal) << ","
             << to_string(res.verdict.almost_distance_optimal) << "\n";
    } catch (const PreconditionError& err) {
        rejected.push_back(params.str() + ": " + err.what());
    }
}

}  // namespace

SweepResult run_sweep(const SweepSpec& sw, std::uint32_t parallelism, const RunLimits& limits) {
    SweepResult result;
    std::ostringstream rows;
    std::vector<std::string> rejected;

    for (std::uint32_t m = sw.m_min; m <= sw.m_max && sw.m_min > 0; ++m) {
        if (sw.family == 1) {
            for (std::uint32_t h = sw.h_min; h <= sw.h_max; ++h) {
                // ascending h-subsets of [r_min, r_max]
                std::vector<std::uint32_t> combo(h);
                std::function<void(std::uint32_t, std::uint32_t)> rec =
                    [&](std::uint32_t pos, std::uint32_t next) {
                        if (pos == h) {
                            FamilySpec spec = f1(sw.q, m, combo);
                            sweep_one(spec, parallelism, limits, rows, rejected);
                            return;
                        }
                        for (std::uint32_t r = next; r <= sw.r_max; ++r) {
                            combo[pos] = r;
                            rec(pos + 1, r + 1);
                        }
                    };
                rec(0, std::max<std::uint32_t>(1, sw.r_min));
            }
        } else if (sw.family == 2 || sw.family == 3) {
            for (std::uint32_t r = std::max<std::uint32_t>(1, sw.r_min); r <= sw.r_max; ++r)
                for (std::uint32_t h = sw.h_min; h <= sw.h_max; ++h) {
                    FamilySpec spec;
                    spec.family = sw.family;
                    spec.q = sw.q;
                    spec.m = m;
                    spec.r = r;
                    spec.h = h;
                    sweep_one(spec, parallelism, limits, rows, rejected);
                }
        } else if (sw.family == 4) {
            for (std::uint32_t k = sw.k_min; k <= sw.k_max; ++k)
                for (std::uint32_t r = sw.r_min; r <= sw.r_max; ++r)
                    for (std::uint32_t s = sw.s_min; s <= sw.s_max; ++s)
                        sweep_one(f4(sw.q, m, k, r, s), parallelism, limits, rows, rejected);
        } else {
            throw PreconditionError("family", "sweep family must be 1, 2, 3 or 4");
        }
    }

    result.csv = std::string(kSweepHeader) + rows.str();
    result.rejected = std::move(rejected);
    return result;
}

Json field_json(const FieldCtx& ctx) {
    Json j;
    j["p"] = ctx.characteristic();
    j["n"] = ctx.degree();
    j["modulus"] = ctx.modulus();
    j["generator"] = ctx.generator_index();
    return j;
}

Json defining_set_json(const DefiningSet& ds) {
    Json j;
    j["schema"] = "sfcodes.defining_set.v1";
    j["kind"] = ds.kind == SetKind::Univariate ? "univariate" : "bivariate";
    j["q"] = ds.q();
    j["e"] = ds.e;
    j["m"] = ds.m;
    j["field_x"] = field_json(*ds.ctx_x);
    if (ds.kind == SetKind::Bivariate) {
        j["k"] = ds.k;
        j["field_y"] = field_json(*ds.ctx_y);
        Json pairs = Json::array();
        for (const auto& [x, y] : ds.pairs) pairs.push_back(Json::array({x, y}));
        j["points"] = std::move(pairs);
    } else {
        j["points"] = ds.points;
    }
    Json prov;
    prov["family"] = ds.provenance.family;
    prov["label"] = ds.provenance.label;
    prov["theta_repaired"] = ds.provenance.theta_repaired;
    prov["note"] = ds.provenance.note;
    j["provenance"] = std::move(prov);
    return j;
}

Json summary_json(const CodeSummary& s) {
    Json j;
    j["schema"] = "sfcodes.code_summary.v1";
    j["label"] = s.label;
    j["q"] = s.q;
    j["n"] = s.n;
    j["dim"] = s.dim;
    j["d"] = s.d;
    j["message_space_size"] = s.message_space_size;
    j["message_dim"] = s.message_dim;
    Json wd = Json::array();
    for (const auto& [w, mult] : s.wd) wd.push_back(Json::array({w, mult}));
    j["weight_distribution"] = std::move(wd);
    j["weight_enumerator"] = weight_enumerator_string(s.wd);
    return j;
}

Json matrix_json(const GeneratorMatrix& g) {
    Json j;
    j["schema"] = "sfcodes.generator_matrix.v1";
    j["label"] = g.label;
    j["q"] = g.q;
    j["rows"] = g.rows;
    j["cols"] = g.cols;
    j["entries"] = g.entries;
    return j;
}

std::string matrix_text(const GeneratorMatrix& g) {
    std::ostringstream os;
    for (const auto& row : g.entries) {
        for (std::size_t c = 0; c < row.size(); ++c) os << (c ? " " : "") << row[c];
        os << "\n";
    }
    return os.str();
}

Json verdict_json(const OptimalityVerdict& v) {
    Json j;
    j["griesmer"] = v.griesmer;
    j["near_griesmer"] = v.near_griesmer;
    j["distance_optimal"] = to_string(v.distance_optimal);
    j["almost_distance_optimal"] = to_string(v.almost_distance_optimal);
    Json cert;
    cert["n"] = v.n;
    cert["g_k_d"] = v.g_k_d;
    cert["g_k_d_plus_1"] = v.g_k_d_plus_1;
    j["certificates"] = std::move(cert);
    return j;
}

Json structural_json(const StructuralReport& r) {
    Json j;
    j["self_orthogonal"] = r.self_orthogonal;
    if (r.self_orth_witness)
        j["self_orthogonality_witness"] =
            Json::array({r.self_orth_witness->first, r.self_orth_witness->second});
    else
        j["self_orthogonality_witness"] = nullptr;
    j["minimal"] = to_string(r.minimal);
    j["w_min"] = r.wmin_wmax.first;
    j["w_max"] = r.wmin_wmax.second;
    j["ratio_condition"] = r.ratio_condition;
    return j;
}

Json verification_json(const VerificationReport& r) {
    Json j;
    j["label"] = r.label;
    j["pass"] = r.pass;
    Json checks = Json::array();
    for (const ClaimCheck& c : r.checks) {
        Json cj;
        cj["claim"] = c.claim;
        cj["expected"] = c.expected;
        cj["observed"] = c.observed;
        cj["pass"] = c.pass;
        checks.push_back(std::move(cj));
    }
    j["checks"] = std::move(checks);
    j["optimality"] = verdict_json(r.verdict);
    return j;
}

Json construct_json(const ConstructResult& res, bool include_defining_set) {
    Json j;
    j["schema"] = "sfcodes.construct.v1";
    j["params"] = res.build.set.provenance.label;
    j["code_summary"] = summary_json(res.summary);
    j["generator_matrix"] = matrix_json(res.matrix);
    j["optimality"] = verdict_json(res.verdict);
    j["structural"] = structural_json(res.structural);
    if (include_defining_set) j["defining_set"] = defining_set_json(res.build.set);
    return j;
}

Json manifest_json(const ReproManifest& manifest) {
    Json j;
    j["schema"] = "sfcodes.reproduction.v1";
    Json fixtures = Json::array();
    std::uint32_t passed = 0;
    for (const FixtureResult& r : manifest.results) {
        Json fj;
        fj["label"] = r.label;
        fj["params"] = r.params;
        fj["pass"] = r.pass;
        Json expected;
        expected["n"] = r.expected_n;
        expected["dim"] = r.expected_dim;
        expected["d"] = r.expected_d;
        expected["weight_enumerator"] = r.expected_we;
        fj["expected"] = std::move(expected);
        Json observed;
        observed["n"] = r.summary.n;
        observed["dim"] = r.summary.dim;
        observed["d"] = r.summary.d;
        observed["weight_enumerator"] = r.observed_we;
        fj["observed"] = std::move(observed);
        fj["cites_external_table"] = r.cites_external_table;
        Json checks = Json::array();
        for (const ClaimCheck& c : r.expectation_checks) {
            Json cj;
            cj["claim"] = c.claim;
            cj["expected"] = c.expected;
            cj["observed"] = c.observed;
            cj["pass"] = c.pass;
            checks.push_back(std::move(cj));
        }
        fj["reference_checks"] = std::move(checks);
        fj["verification"] = verification_json(r.verification);
        if (r.pass) ++passed;
        fixtures.push_back(std::move(fj));
    }
    j["fixtures"] = std::move(fixtures);
    j["total"] = manifest.results.size();
    j["passed"] = passed;
    j["all_pass"] = manifest.all_pass;
    return j;
}

std::string manifest_text(const ReproManifest& manifest) {
    std::ostringstream os;
    std::uint32_t passed = 0;
    for (const FixtureResult& r : manifest.results) {
        os << (r.pass ? "[ok]   " : "[FAIL] ") << r.label << "\n";
        os << "       expected [" << r.expected_n << "," << r.expected_dim << "," << r.expected_d
           << "] " << r.expected_we << "\n";
        os << "       observed [" << r.summary.n << "," << r.summary.dim << "," << r.summary.d
           << "] " << r.observed_we << "\n";
        if (!r.pass) {
            for (const ClaimCheck& c : r.expectation_checks)
                if (!c.pass)
                    os << "       mismatch " << c.claim << ": expected " << c.expected
                       << ", observed " << c.observed << "\n";
            for (const ClaimCheck& c : r.verification.checks)
                if (!c.pass)
                    os << "       verification " << c.claim << ": expected " << c.expected
                       << ", observed " << c.observed << "\n";
        }
        if (r.pass) ++passed;
    }
    os << passed << "/" << manifest.results.size() << " reference constructions reproduced\n";
    return os.str();
}

std::string construct_text(const ConstructResult& res) {
    std::ostringstream os;
    const CodeSummary& s = res.summary;
    os << "params: " << res.build.set.provenance.label << "\n";
    os << "code: [" << s.n << "," << s.dim << "," << s.d << "] over GF(" << s.q << ")\n";
    os << "weight enumerator: " << weight_enumerator_string(s.wd) << "\n";
    os << "griesmer: " << (res.verdict.griesmer ? "true" : "false") << " (g(k,d) = "
       << res.verdict.g_k_d << ", g(k,d+1) = " << res.verdict.g_k_d_plus_1 << ")\n";
    os << "near_griesmer: " << (res.verdict.near_griesmer ? "true" : "false") << "\n";
    os << "distance_optimal: " << to_string(res.verdict.distance_optimal) << "\n";
    os << "almost_distance_optimal: " << to_string(res.verdict.almost_distance_optimal) << "\n";
    os << "self_orthogonal: " << (res.structural.self_orthogonal ? "true" : "false") << "\n";
    os << "minimal: " << to_string(res.structural.minimal) << "\n";
    return os.str();
}

std::string construct_csv(const ConstructResult& res) {
    std::ostringstream os;
    os << kSweepHeader;
    const DefiningSet& ds = res.build.set;
    os << ds.provenance.family << "," << ds.q() << "," << ds.m << ","
       << (ds.kind == SetKind::Bivariate ? std::to_string(ds.k) : "") << ",,,,"
       << csv_quote(ds.provenance.label) << "," << res.summary.n << "," << res.summary.dim << ","
       << res.summary.d << "," << (res.verdict.griesmer ? "true" : "false") << ","
       << (res.verdict.near_griesmer ? "true" : "false") << ","
       << to_string(res.verdict.distance_optimal) << ","
       << to_string(res.verdict.almost_distance_optimal) << "\n";
    return os.str();
}

}  // namespace sfcodes
