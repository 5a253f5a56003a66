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
#include <set>
#include <vector>

#include "sfcodes/field.hpp"

using namespace sfcodes;

namespace {

// Independent reference arithmetic: dense polynomial vectors, schoolbook
// multiplication, no tables. Used as the oracle for everything the log/antilog
// machinery produces.
struct NaivePoly {
    std::uint32_t p;
    std::vector<std::uint32_t> mod;  // low-to-high, monic

    std::vector<std::uint32_t> from_index(std::uint64_t idx) const {
        std::vector<std::uint32_t> d(mod.size() - 1, 0);
        for (std::size_t i = 0; i < d.size() && idx; ++i) {
            d[i] = idx % p;
            idx /= p;
        }
        return d;
    }
    std::uint64_t to_index(const std::vector<std::uint32_t>& d) const {
        std::uint64_t idx = 0;
        for (std::size_t i = d.size(); i-- > 0;) idx = idx * p + d[i];
        return idx;
    }
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        auto da = from_index(a), db = from_index(b);
        for (std::size_t i = 0; i < da.size(); ++i) da[i] = (da[i] + db[i]) % p;
        return to_index(da);
    }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        const std::size_t n = mod.size() - 1;
        auto da = from_index(a), db = from_index(b);
        std::vector<std::uint32_t> prod(2 * n, 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
        for (std::size_t k = 2 * n - 1; k >= n; --k) {
            const std::uint32_t c = prod[k];
            if (c == 0) continue;
            prod[k] = 0;
            for (std::size_t i = 0; i < n; ++i)
                prod[k - n + i] = (prod[k - n + i] + (p - c % p) * mod[i]) % p;
            if (k == n) break;
        }
        prod.resize(n);
        return to_index(prod);
    }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
        std::uint64_t r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
};

NaivePoly naive_for(const FieldCtx& f) {
    NaivePoly np;
    np.p = f.characteristic();
    np.mod.assign(f.modulus().begin(), f.modulus().end());
    return np;
}

// Brute-force polynomial divisibility over GF(p), for the modulus oracle.
bool divides(const std::vector<std::uint32_t>& div, std::vector<std::uint32_t> f,
             std::uint32_t p) {
    auto deg = [](const std::vector<std::uint32_t>& v) {
        std::size_t d = v.size();
        while (d > 0 && v[d - 1] == 0) --d;
        return d;  // degree + 1, 0 for zero polynomial
    };
    const std::size_t dd = deg(div);
    while (deg(f) >= dd && deg(f) > 0) {
        const std::size_t shift = deg(f) - dd;
        // make leading coefficients cancel (divisor is monic)
        const std::uint32_t c = f[deg(f) - 1];
        for (std::size_t i = 0; i < dd; ++i)
            f[shift + i] = (f[shift + i] + (p - (c * div[i]) % p)) % p;
    }
    return deg(f) == 0;
}

}  // namespace

TEST_CASE("prime fields build with the documented generators") {
    auto f2 = FieldCtx::build(2, 1);
    CHECK(f2->size() == 2);
    CHECK(f2->generator_index() == 1);

    auto f3 = FieldCtx::build(3, 1);
    CHECK(f3->size() == 3);
    CHECK(f3->generator_index() == 2);
    // modulus is x
    CHECK(f3->modulus() == std::vector<std::uint8_t>{0, 1});
}

TEST_CASE("GF(16) golden values from the exhaustive oracle") {
    // Oracle: smallest monic irreducible quartic over GF(2) by trial division.
    std::vector<std::uint32_t> best;
    for (std::uint32_t low = 0; low < 16 && best.empty(); ++low) {
        std::vector<std::uint32_t> f{low & 1u, (low >> 1) & 1u, (low >> 2) & 1u, (low >> 3) & 1u, 1u};
        bool irreducible = true;
        for (std::uint32_t dlow = 0; dlow < 4 && irreducible; ++dlow) {
            std::vector<std::uint32_t> d1{dlow & 1u, 1u};            // degree 1
            std::vector<std::uint32_t> d2{dlow & 1u, (dlow >> 1) & 1u, 1u};  // degree 2
            if (divides(d1, f, 2)) irreducible = false;
            if (irreducible && divides(d2, f, 2)) irreducible = false;
        }
        if (irreducible) best = f;
    }
    REQUIRE(best.size() == 5);
    // x^4 + x + 1
    CHECK(best == std::vector<std::uint32_t>{1, 1, 0, 0, 1});

    auto f16 = FieldCtx::build(2, 4);
    CHECK(f16->modulus() == std::vector<std::uint8_t>{1, 1, 0, 0, 1});

    // generator: smallest index of multiplicative order 15, via naive powers
    NaivePoly np = naive_for(*f16);
    std::uint32_t expected_gen = 0;
    for (std::uint32_t cand = 1; cand < 16; ++cand) {
        std::set<std::uint64_t> powers;
        std::uint64_t acc = 1;
        for (int i = 0; i < 15; ++i) {
            acc = np.mul(acc, cand);
            powers.insert(acc);
        }
        if (powers.size() == 15) {
            expected_gen = cand;
            break;
        }
    }
    CHECK(expected_gen == 2);
    CHECK(f16->generator_index() == expected_gen);
}

TEST_CASE("table arithmetic agrees with naive polynomial arithmetic") {
    for (auto [p, n] : {std::pair<std::uint32_t, std::uint32_t>{2, 4}, {3, 2}, {2, 6}, {5, 2}}) {
        auto f = FieldCtx::build(p, n);
        NaivePoly np = naive_for(*f);
        for (std::uint64_t a = 0; a < f->size(); ++a) {
            for (std::uint64_t b = 0; b < f->size(); ++b) {
                CHECK(f->add_raw(a, b) == np.add(a, b));
                CHECK(f->mul_raw(a, b) == np.mul(a, b));
            }
            if (a != 0) {
                CHECK(f->mul_raw(static_cast<std::uint32_t>(a),
                                 f->inv_raw(static_cast<std::uint32_t>(a))) == 1);
            }
            CHECK(f->add_raw(static_cast<std::uint32_t>(a),
                             f->neg_raw(static_cast<std::uint32_t>(a))) == 0);
        }
    }
}

TEST_CASE("field element API enforces context separation") {
    auto f16 = get_field(2, 4);
    auto f64 = get_field(2, 6);
    FieldElement a = f16->element(5);
    FieldElement b = f64->element(5);
    CHECK_THROWS_AS(f16->add(a, b), FieldMismatchError);
    CHECK_THROWS_AS((void)f16->inv(f16->zero()), PreconditionError);
    CHECK(f16->mul(a, f16->one()) == a);
    CHECK(f16->pow(f16->zero(), 0).index == 1);
    CHECK(f16->pow(a, -1) == f16->inv(a));
}

TEST_CASE("build rejects bad parameters") {
    CHECK_THROWS_AS(FieldCtx::build(4, 2), PreconditionError);   // composite p
    CHECK_THROWS_AS(FieldCtx::build(2, 30), PreconditionError);  // over the cap
    CHECK_THROWS_AS(prime_power_split(12), PreconditionError);
    CHECK(prime_power_split(8) == std::make_pair(2u, 3u));
    CHECK(prime_power_split(9) == std::make_pair(3u, 2u));
}

TEST_CASE("rebuilds are deterministic") {
    auto a = FieldCtx::build(3, 4);
    auto b = FieldCtx::build(3, 4);
    CHECK(a->modulus() == b->modulus());
    CHECK(a->generator_index() == b->generator_index());
    CHECK(a->antilog_table() == b->antilog_table());
    CHECK(a->log_table() == b->log_table());
}

TEST_CASE("trace over GF(4) matches the hand table") {
    auto f4 = get_field(2, 2);
    // canonical order 0, 1, x, x+1
    std::vector<std::uint32_t> expected{0, 0, 1, 1};
    for (std::uint32_t i = 0; i < 4; ++i)
        CHECK(relative_trace(*f4, f4->element(i), 1, 2, 1).index == expected[i]);
}

TEST_CASE("trace lands in the target subfield with uniform fibers") {
    struct Case {
        std::uint32_t p, e, m, r;
    };
    for (const Case c : std::initializer_list<Case>{
             {2, 1, 6, 2}, {2, 1, 6, 3}, {3, 1, 4, 2}, {2, 2, 4, 2}, {2, 2, 6, 3}, {3, 1, 6, 2}}) {
        auto f = get_field(c.p, c.e * c.m);
        const std::uint64_t q = ipow(c.p, c.e);
        SubfieldHandle target = subfield(*f, c.e, c.r);
        std::map<std::uint32_t, std::uint64_t> fiber;
        for (std::uint64_t i = 0; i < f->size(); ++i) {
            FieldElement t = relative_trace(*f, f->element(i), c.e, c.m, c.r);
            CHECK(f->pow_raw(t.index, ipow(q, c.r)) == t.index);  // in GF(q^r)
            fiber[t.index]++;
        }
        CHECK(fiber.size() == target.subfield_size);
        for (const auto& [value, count] : fiber) {
            CHECK(target.contains(value));
            CHECK(count == ipow(q, c.m - c.r));
        }
    }
}

TEST_CASE("trace is transitive through intermediate subfields") {
    struct Case {
        std::uint32_t p, e, m, r;
    };
    for (const Case c : std::initializer_list<Case>{{2, 1, 6, 2}, {2, 1, 6, 3}, {3, 1, 6, 3},
                                                    {2, 2, 6, 2}, {2, 2, 6, 3}}) {
        auto f = get_field(c.p, c.e * c.m);
        for (std::uint64_t i = 0; i < f->size(); ++i) {
            FieldElement full = relative_trace(*f, f->element(i), c.e, c.m, 1);
            FieldElement step = relative_trace(*f, f->element(i), c.e, c.m, c.r);
            // Tr_{GF(q^r) -> GF(q)} evaluated inside the big field: the
            // element lies in GF(q^r), so the power sum uses exponents q^i.
            std::uint32_t acc = step.index;
            std::uint32_t cur = step.index;
            for (std::uint32_t j = 1; j < c.r; ++j) {
                cur = f->pow_raw(cur, ipow(c.p, c.e));
                acc = f->add_raw(acc, cur);
            }
            CHECK(acc == full.index);
        }
    }
}

TEST_CASE("zero-trace elements are exactly the q-power differences") {
    // over GF(q^m): { a : Tr(a) = 0 } equals { b^q - b }
    for (auto [p, e, m] : std::initializer_list<std::array<std::uint32_t, 3>>{
             {2, 1, 4}, {3, 1, 3}, {2, 2, 3}}) {
        auto f = get_field(p, e * m);
        const std::uint64_t q = ipow(p, e);
        std::set<std::uint32_t> kernel, differences;
        for (std::uint64_t i = 0; i < f->size(); ++i) {
            if (relative_trace(*f, f->element(i), e, m, 1).index == 0)
                kernel.insert(static_cast<std::uint32_t>(i));
            const std::uint32_t bq = f->pow_raw(static_cast<std::uint32_t>(i), q);
            differences.insert(f->add_raw(bq, f->neg_raw(static_cast<std::uint32_t>(i))));
        }
        CHECK(kernel == differences);
    }
}

TEST_CASE("subfield lattice") {
    auto f64 = get_field(2, 6);
    SubfieldHandle prime = subfield(*f64, 1, 1);
    CHECK(prime.element_indices == std::vector<std::uint32_t>{0, 1});
    SubfieldHandle whole = subfield(*f64, 1, 6);
    CHECK(whole.element_indices.size() == 64);

    SubfieldHandle f4 = subfield(*f64, 1, 2);
    SubfieldHandle f8 = subfield(*f64, 1, 3);
    std::vector<std::uint32_t> inter;
    std::set_intersection(f4.element_indices.begin(), f4.element_indices.end(),
                          f8.element_indices.begin(), f8.element_indices.end(),
                          std::back_inserter(inter));
    CHECK(inter.size() == 2);  // GF(2^gcd(2,3))

    // closure: every listed element satisfies x^(q^r) = x and counts match
    CHECK(f4.element_indices.size() == 4);
    for (std::uint32_t x : f4.element_indices) CHECK(f64->pow_raw(x, 4) == x);
    CHECK_THROWS_AS(subfield(*f64, 1, 4), PreconditionError);
}

TEST_CASE("base symbols are a stable bijection") {
    auto f16 = get_field(2, 4);  // ambient for GF(4) with e = 2
    std::set<std::uint32_t> symbols;
    SubfieldHandle f4 = subfield(*f16, 2, 1);
    for (std::uint32_t x : f4.element_indices) {
        const std::uint32_t s = base_symbol(*f16, 2, f16->element(x));
        CHECK(s < 4);
        symbols.insert(s);
        CHECK(symbol_element(*f16, 2, s).index == x);
    }
    CHECK(symbols.size() == 4);
    CHECK(base_symbol(*f16, 2, f16->zero()) == 0);
    CHECK(base_symbol(*f16, 2, f16->one()) == 1);
    // q = 2: identity map
    auto f8 = get_field(2, 3);
    CHECK(base_symbol(*f8, 1, f8->zero()) == 0);
    CHECK(base_symbol(*f8, 1, f8->one()) == 1);
    // elements outside the base subfield are rejected
    CHECK_THROWS_AS((void)base_symbol(*f16, 2, f16->element(2)), PreconditionError);
}

TEST_CASE("symbol field tables mirror ambient arithmetic") {
    auto f16 = get_field(2, 4);
    SymbolField sf = SymbolField::build(*f16, 2);
    REQUIRE(sf.q() == 4);
    for (std::uint16_t a = 0; a < 4; ++a) {
        for (std::uint16_t b = 0; b < 4; ++b) {
            FieldElement ea = symbol_element(*f16, 2, a);
            FieldElement eb = symbol_element(*f16, 2, b);
            CHECK(sf.add(a, b) == base_symbol(*f16, 2, f16->add(ea, eb)));
            CHECK(sf.mul(a, b) == base_symbol(*f16, 2, f16->mul(ea, eb)));
        }
        if (a != 0) CHECK(sf.mul(a, sf.inv(a)) == 1);
        CHECK(sf.add(a, sf.neg(a)) == 0);
    }
}

TEST_CASE("canonical GF(q) embedding between contexts is a field isomorphism") {
    struct Case {
        std::uint32_t p, e, n_src, n_dst;
    };
    for (const Case c : std::initializer_list<Case>{{2, 2, 4, 6}, {2, 2, 6, 4}, {2, 1, 5, 4},
                                                    {3, 1, 4, 2}, {2, 2, 4, 2}}) {
        auto src = get_field(c.p, c.n_src);
        auto dst = get_field(c.p, c.n_dst);
        const auto table = base_field_iso(*src, c.e, *dst);
        SubfieldHandle src_q = subfield(*src, c.e, 1);
        CHECK(table[0] == 0);
        CHECK(table[1] == 1);
        std::set<std::uint32_t> image;
        for (std::uint32_t a : src_q.element_indices) {
            REQUIRE(table[a] != UINT32_MAX);
            image.insert(table[a]);
            for (std::uint32_t b : src_q.element_indices) {
                CHECK(table[src->add_raw(a, b)] == dst->add_raw(table[a], table[b]));
                CHECK(table[src->mul_raw(a, b)] == dst->mul_raw(table[a], table[b]));
            }
        }
        CHECK(image.size() == src_q.element_indices.size());
    }
}

TEST_CASE("relative trace rejects bad interpretations") {
    auto f64 = get_field(2, 6);
    CHECK_THROWS_AS(relative_trace(*f64, f64->element(1), 1, 6, 4), PreconditionError);
    CHECK_THROWS_AS(relative_trace(*f64, f64->element(1), 1, 5, 1), PreconditionError);
    auto f16 = get_field(2, 4);
    CHECK_THROWS_AS(relative_trace(*f64, f16->element(1), 1, 6, 2), FieldMismatchError);
}
