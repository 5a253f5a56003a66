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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "sfcodes/code_engine.hpp"
#include "sfcodes/report.hpp"

using namespace sfcodes;

namespace {

// Reference enumeration: per-point power-sum traces through the element API,
// no trace tables, no histogram sharing with the engine.
std::map<std::uint64_t, std::uint64_t> oracle_wd(const DefiningSet& D, std::uint64_t* kernel_out) {
    const std::uint64_t q = D.q();
    std::map<std::uint64_t, std::uint64_t> hist;
    std::uint64_t kernel = 0;

    auto trace_to_base = [&](const FieldCtx& F, std::uint32_t m, std::uint32_t idx) {
        FieldElement acc = F.element(idx);
        FieldElement cur = acc;
        for (std::uint32_t i = 1; i < m; ++i) {
            cur = F.pow(cur, static_cast<std::int64_t>(q));
            acc = F.add(acc, cur);
        }
        return acc.index;
    };

    if (D.kind == SetKind::Univariate) {
        const FieldCtx& F = *D.ctx_x;
        for (std::uint64_t a = 0; a < F.size(); ++a) {
            std::uint64_t weight = 0;
            for (std::uint32_t x : D.points)
                if (trace_to_base(F, D.m, F.mul_raw(static_cast<std::uint32_t>(a), x)) != 0)
                    ++weight;
            if (weight == 0)
                ++kernel;
            else
                hist[weight]++;
        }
    } else {
        const FieldCtx& FX = *D.ctx_x;
        const FieldCtx& FY = *D.ctx_y;
        auto ctx_q = get_field(FX.characteristic(), D.e);
        const auto ix = base_field_iso(FX, D.e, *ctx_q);
        const auto iy = base_field_iso(FY, D.e, *ctx_q);
        for (std::uint64_t a = 0; a < FX.size(); ++a) {
            for (std::uint64_t b = 0; b < FY.size(); ++b) {
                std::uint64_t weight = 0;
                for (const auto& [x, y] : D.pairs) {
                    const std::uint32_t tx =
                        ix[trace_to_base(FX, D.m, FX.mul_raw(static_cast<std::uint32_t>(a), x))];
                    const std::uint32_t ty =
                        iy[trace_to_base(FY, D.k, FY.mul_raw(static_cast<std::uint32_t>(b), y))];
                    if (ctx_q->add_raw(tx, ty) != 0) ++weight;
                }
                if (weight == 0)
                    ++kernel;
                else
                    hist[weight]++;
            }
        }
    }
    // collapse message multiplicities to codeword multiplicities
    for (auto& [w, count] : hist) {
        REQUIRE(count % kernel == 0);
        count /= kernel;
    }
    if (kernel_out) *kernel_out = kernel;
    return hist;
}

}  // namespace

TEST_CASE("small family builds match the brute-force oracle") {
    {
        auto [set, pred] = family1_build(2, 4, {2});
        CodeSummary s = enumerate_code(set);
        CHECK(s.n == 12);
        CHECK(s.dim == 4);
        CHECK(s.d == 6);
        std::uint64_t kernel = 0;
        CHECK(s.wd == oracle_wd(set, &kernel));
        CHECK(kernel == 1);
    }
    {
        auto [set, pred] = family1_special_build(3, 2);
        CodeSummary s = enumerate_code(set);
        CHECK(s.n == 7);
        CHECK(s.d == 5);
        CHECK(s.wd == oracle_wd(set, nullptr));
    }
    {
        auto [set, pred] = family2_build(3, 4, 2, 1);
        CodeSummary s = enumerate_code(set);
        CHECK(s.wd == oracle_wd(set, nullptr));
        CHECK(s.wd == pred.wd);
    }
    {
        auto [set, pred] = family4_build(2, 3, 2, 1, 1);
        CodeSummary s = enumerate_code(set);
        CHECK(s.wd == oracle_wd(set, nullptr));
        CHECK(s.wd == pred.wd);
    }
    {
        // base field GF(4): exercises the cross-context symbol embedding
        auto [set, pred] = family4_build(4, 2, 2, 1, 1);
        CodeSummary s = enumerate_code(set);
        CHECK(s.n == 144);
        CHECK(s.dim == 4);
        CHECK(s.d == 96);
        CHECK(s.wd == oracle_wd(set, nullptr));
        CHECK(s.wd == pred.wd);
    }
}

TEST_CASE("full punctured field gives one balanced weight") {
    auto f27 = get_field(3, 3);
    std::vector<std::uint32_t> points;
    for (std::uint32_t i = 1; i < f27->size(); ++i) points.push_back(i);
    DefiningSet ds = make_univariate_set(f27, 1, 3, points);
    CodeSummary s = enumerate_code(ds);
    CHECK(s.dim == 3);
    CHECK(s.wd == std::map<std::uint64_t, std::uint64_t>{{18, 26}});  // (q-1)q^(m-1)
}

TEST_CASE("kernel detection reports dim below the message dimension") {
    // D inside GF(4): coordinates only see the relative trace of the message,
    // so the map has a kernel of size 4
    auto f16 = get_field(2, 4);
    SubfieldHandle f4 = subfield(*f16, 1, 2);
    std::vector<std::uint32_t> points;
    for (std::uint32_t x : f4.element_indices)
        if (x != 0) points.push_back(x);
    DefiningSet ds = make_univariate_set(f16, 1, 4, points);
    CodeSummary s = enumerate_code(ds);
    CHECK(s.message_dim == 4);
    CHECK(s.dim == 2);
    std::uint64_t total = 0;
    for (const auto& [w, mult] : s.wd) total += mult;
    CHECK(total == 3);  // q^dim - 1 distinct nonzero codewords
}

TEST_CASE("moment identities hold whenever 0 is not an evaluation point") {
    for (auto build : {family1_build(3, 4, {2}), family1_build(2, 6, {2, 3}),
                       family2_build(2, 6, 2, 2), family3_build(3, 4, 2, 2)}) {
        CodeSummary s = enumerate_code(build.set);
        std::uint64_t count = 0, first_moment = 0;
        for (const auto& [w, mult] : s.wd) {
            count += mult;
            first_moment += w * mult;
        }
        CHECK(count == ipow(s.q, s.dim) - 1);
        CHECK(first_moment == s.n * (s.q - 1) * ipow(s.q, s.dim - 1));
    }
}

TEST_CASE("codeword set is closed under scalar multiplication") {
    auto [set, pred] = family2_build(3, 4, 1, 2);
    GeneratorMatrix gen = generator_matrix(set);
    const SymbolField& sf = gen.sym;
    // collect all codewords from the row span and scale them
    std::set<std::vector<std::uint16_t>> words;
    const std::uint64_t total = ipow(gen.q, gen.rows);
    for (std::uint64_t msg = 0; msg < total; ++msg) {
        std::vector<std::uint16_t> word(gen.cols, 0);
        std::uint64_t v = msg;
        for (std::uint32_t row = 0; row < gen.rows; ++row, v /= gen.q) {
            const std::uint16_t c = static_cast<std::uint16_t>(v % gen.q);
            if (c == 0) continue;
            for (std::uint64_t col = 0; col < gen.cols; ++col)
                word[col] = sf.add(word[col], sf.mul(c, gen.entries[row][col]));
        }
        words.insert(std::move(word));
    }
    for (const auto& word : words) {
        for (std::uint16_t scale = 1; scale < gen.q; ++scale) {
            std::vector<std::uint16_t> scaled(word.size());
            for (std::size_t i = 0; i < word.size(); ++i) scaled[i] = sf.mul(scale, word[i]);
            CHECK(words.count(scaled) == 1);
        }
    }
}

TEST_CASE("puncturing consistency on random subsets") {
    std::mt19937 rng(7);
    auto f64 = get_field(2, 6);
    for (int round = 0; round < 5; ++round) {
        // enumerate the union, restrict codewords to the base coordinates,
        // and compare with direct enumeration of the base set
        std::vector<std::uint32_t> base, extra;
        for (std::uint32_t i = 1; i < f64->size(); ++i) {
            const auto roll = rng() % 3;
            if (roll == 0) base.push_back(i);
            if (roll == 1) extra.push_back(i);
        }
        if (base.empty()) base.push_back(1);
        std::vector<std::uint32_t> all = base;
        all.insert(all.end(), extra.begin(), extra.end());
        DefiningSet d_base = make_univariate_set(f64, 1, 6, base);
        DefiningSet d_all = make_univariate_set(f64, 1, 6, all);
        CodeSummary direct = enumerate_code(d_base);
        CHECK(enumerate_code(d_all).n == all.size());

        const auto traces = trace_table(*f64, 1, 6, 1);
        std::map<std::uint64_t, std::uint64_t> restricted;
        for (std::uint64_t a = 1; a < f64->size(); ++a) {
            std::uint64_t w = 0;
            for (std::uint32_t x : d_all.points)
                if (std::binary_search(base.begin(), base.end(), x) &&
                    traces[f64->mul_raw(static_cast<std::uint32_t>(a), x)] != 0)
                    ++w;
            if (w > 0) restricted[w]++;
        }
        std::uint64_t kernel = f64->size();
        for (const auto& [w, mult] : restricted) kernel -= mult;
        for (auto& [w, mult] : restricted) mult /= kernel;
        CHECK(direct.wd == restricted);
    }
}

TEST_CASE("generator matrix spans exactly the enumerated code") {
    auto [set, pred] = family1_build(2, 4, {2});
    GeneratorMatrix gen = generator_matrix(set);
    CHECK(gen.rows == 4);
    CHECK(gen.cols == 12);

    CodeSummary s = enumerate_code(set);
    // span the rows and compare weight multiset against the summary
    const SymbolField& sf = gen.sym;
    std::map<std::uint64_t, std::uint64_t> span_wd;
    const std::uint64_t total = ipow(gen.q, gen.rows);
    std::set<std::vector<std::uint16_t>> distinct;
    for (std::uint64_t msg = 1; msg < total; ++msg) {
        std::vector<std::uint16_t> word(gen.cols, 0);
        std::uint64_t v = msg;
        for (std::uint32_t row = 0; row < gen.rows; ++row, v /= gen.q) {
            const std::uint16_t c = static_cast<std::uint16_t>(v % gen.q);
            if (c == 0) continue;
            for (std::uint64_t col = 0; col < gen.cols; ++col)
                word[col] = sf.add(word[col], sf.mul(c, gen.entries[row][col]));
        }
        const std::uint64_t w =
            static_cast<std::uint64_t>(std::count_if(word.begin(), word.end(),
                                                     [](std::uint16_t x) { return x != 0; }));
        span_wd[w]++;
        distinct.insert(std::move(word));
    }
    CHECK(span_wd == s.wd);
    CHECK(distinct.size() == total - 1);  // rows are independent

    // bivariate case
    auto [set4, pred4] = family4_build(2, 3, 2, 1, 1);
    GeneratorMatrix gen4 = generator_matrix(set4);
    CHECK(gen4.rows == 5);
    CHECK(gen4.cols == set4.pairs.size());
}

TEST_CASE("partition invariance: any parallelism degree gives identical results") {
    auto [set, pred] = family3_build(2, 6, 2, 2);
    CodeSummary serial = enumerate_code(set, {}, 1);
    for (std::uint32_t par : {2, 3, 5, 8}) {
        CodeSummary parallel = enumerate_code(set, {}, par);
        CHECK(parallel.wd == serial.wd);
        CHECK(parallel.dim == serial.dim);
        CHECK(parallel.d == serial.d);
    }
}

TEST_CASE("engine caps and empty sets are rejected by name") {
    auto [set, pred] = family1_build(2, 4, {2});
    EngineLimits tight;
    tight.max_messages = 8;
    CHECK_THROWS_WITH_AS(enumerate_code(set, tight), doctest::Contains("message-cap"),
                         PreconditionError);
    tight.max_messages = 1 << 20;
    tight.max_work = 10;
    CHECK_THROWS_WITH_AS(enumerate_code(set, tight), doctest::Contains("work-cap"),
                         PreconditionError);

    auto f16 = get_field(2, 4);
    DefiningSet empty = make_univariate_set(f16, 1, 4, {});
    CHECK_THROWS_WITH_AS(enumerate_code(empty), doctest::Contains("empty-set"),
                         PreconditionError);
}

TEST_CASE("verification passes on the reference example and flags corruption") {
    auto [set, pred] = family2_build(2, 6, 2, 1);
    CodeSummary s = enumerate_code(set);
    GeneratorMatrix gen = generator_matrix(set);
    VerificationReport ok = verify_prediction(s, gen, pred);
    CHECK(ok.pass);

    Prediction corrupted = pred;
    corrupted.wd[28] -= 1;
    corrupted.wd[32] += 1;
    VerificationReport bad = verify_prediction(s, gen, corrupted);
    CHECK_FALSE(bad.pass);
    bool pinpointed = false;
    for (const ClaimCheck& c : bad.checks)
        if (!c.pass && c.claim == "weight distribution" &&
            c.observed.find("weight 28") != std::string::npos)
            pinpointed = true;
    CHECK(pinpointed);

    Prediction relabeled = pred;
    relabeled.label = "something else";
    CHECK_THROWS_WITH_AS(verify_prediction(s, gen, relabeled), doctest::Contains("provenance"),
                         PreconditionError);
}

TEST_CASE("weight enumerator string format") {
    std::map<std::uint64_t, std::uint64_t> wd{{480, 648}, {486, 80}};
    CHECK(weight_enumerator_string(wd) == "1 + 648z^480 + 80z^486");
    CHECK(weight_enumerator_string({}) == "1");
}
