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

#include "sfcodes/field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <string>

namespace sfcodes {

namespace {

bool is_prime(std::uint64_t v) {
    if (v < 2) return false;
    for (std::uint64_t d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

// Dense polynomials over GF(p), coefficients low to high, no trailing zeros.
using Poly = std::vector<std::uint8_t>;

void poly_trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a mod b (b nonzero, monic not required).
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
    poly_trim(a);
    const std::size_t db = b.size() - 1;
    const std::uint32_t lead = b[db];
    // lead_inv via Fermat
    std::uint32_t lead_inv = 1;
    for (std::uint32_t k = 0; k < p - 2; ++k) lead_inv = (lead_inv * lead) % p;
    while (a.size() > db) {
        const std::size_t shift = a.size() - 1 - db;
        const std::uint32_t c = (a.back() * lead_inv) % p;
        for (std::size_t i = 0; i <= db; ++i) {
            std::uint32_t v = a[shift + i] + p - static_cast<std::uint32_t>(c * b[i] % p);
            a[shift + i] = static_cast<std::uint8_t>(v % p);
        }
        poly_trim(a);
        if (a.empty()) break;
    }
    return a;
}

Poly poly_from_value(std::uint64_t value, std::uint32_t p) {
    Poly out;
    while (value != 0) {
        out.push_back(static_cast<std::uint8_t>(value % p));
        value /= p;
    }
    return out;
}

// Irreducibility by trial division: no monic divisor of degree 1..deg/2.
bool poly_irreducible(const Poly& f, std::uint32_t p) {
    const std::size_t deg = f.size() - 1;
    if (deg == 1) return true;
    for (std::size_t t = 1; t <= deg / 2; ++t) {
        const std::uint64_t count = ipow(p, static_cast<std::uint32_t>(t));
        for (std::uint64_t low = 0; low < count; ++low) {
            Poly div = poly_from_value(low, p);
            div.resize(t + 1, 0);
            div[t] = 1;
            if (poly_mod(f, div, p).empty()) return false;
        }
    }
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= v; ++d) {
        if (v % d == 0) {
            out.push_back(d);
            while (v % d == 0) v /= d;
        }
    }
    if (v > 1) out.push_back(v);
    return out;
}

}  // namespace

std::uint64_t ipow(std::uint64_t base, std::uint32_t e) {
    std::uint64_t r = 1;
    while (e--) r *= base;
    return r;
}

std::pair<std::uint32_t, std::uint32_t> prime_power_split(std::uint64_t q) {
    if (q < 2) throw PreconditionError("prime-power", "q must be at least 2, got " + std::to_string(q));
    std::uint64_t p = q;
    for (std::uint64_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    std::uint32_t e = 0;
    std::uint64_t v = q;
    while (v % p == 0) {
        v /= p;
        ++e;
    }
    if (v != 1)
        throw PreconditionError("prime-power", "q = " + std::to_string(q) + " is not a prime power");
    return {static_cast<std::uint32_t>(p), e};
}

std::shared_ptr<const FieldCtx> FieldCtx::build(std::uint32_t p, std::uint32_t n,
                                                std::uint64_t size_cap) {
    if (!is_prime(p))
        throw PreconditionError("prime-characteristic", "p = " + std::to_string(p) + " is not prime");
    if (n < 1) throw PreconditionError("positive-degree", "n must be >= 1");
    std::uint64_t size = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
        size *= p;
        if (size > size_cap)
            throw PreconditionError("size-cap", "p^n exceeds the size cap of " + std::to_string(size_cap));
    }

    auto ctx = std::shared_ptr<FieldCtx>(new FieldCtx());
    ctx->p_ = p;
    ctx->n_ = n;
    ctx->size_ = size;

    // Smallest monic irreducible of degree n, ordered by the low-to-high
    // coefficient string read as a base-p integer.
    for (std::uint64_t low = 0; low < size; ++low) {
        Poly f = poly_from_value(low, p);
        f.resize(n + 1, 0);
        f[n] = 1;
        if (poly_irreducible(f, p)) {
            ctx->modulus_ = f;
            break;
        }
    }
    if (ctx->modulus_.empty())
        throw InternalError("no irreducible polynomial found");  // cannot happen

    // Bootstrap index-level multiplication by schoolbook polynomial product
    // modulo the modulus; the log tables do not exist yet.
    const Poly& mod = ctx->modulus_;
    auto digits_of = [&](std::uint64_t idx) {
        std::vector<std::uint32_t> d(n, 0);
        for (std::uint32_t i = 0; i < n && idx != 0; ++i) {
            d[i] = static_cast<std::uint32_t>(idx % p);
            idx /= p;
        }
        return d;
    };
    auto index_of = [&](const std::vector<std::uint32_t>& d) {
        std::uint64_t idx = 0;
        for (std::uint32_t i = n; i-- > 0;) idx = idx * p + d[i];
        return idx;
    };
    auto slow_mul = [&](std::uint64_t a, std::uint64_t b) -> std::uint64_t {
        if (a == 0 || b == 0) return 0;
        auto da = digits_of(a);
        auto db = digits_of(b);
        std::vector<std::uint32_t> prod(2 * n - 1, 0);
        for (std::uint32_t i = 0; i < n; ++i) {
            if (da[i] == 0) continue;
            for (std::uint32_t j = 0; j < n; ++j)
                prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
        }
        // reduce: x^n = -(mod minus leading term)
        for (std::uint32_t k = 2 * n - 2; k + 1 > n; --k) {
            const std::uint32_t c = prod[k];
            if (c == 0) continue;
            prod[k] = 0;
            for (std::uint32_t i = 0; i < n; ++i) {
                const std::uint32_t sub = (c * mod[i]) % p;
                prod[k - n + i] = (prod[k - n + i] + p - sub) % p;
            }
        }
        prod.resize(n);
        return index_of(prod);
    };
    auto slow_pow = [&](std::uint64_t a, std::uint64_t e) -> std::uint64_t {
        std::uint64_t r = 1, base = a;
        while (e != 0) {
            if (e & 1) r = slow_mul(r, base);
            base = slow_mul(base, base);
            e >>= 1;
        }
        return r;
    };

    // Generator: smallest index of full multiplicative order.
    const std::uint64_t group = size - 1;
    const auto primes = prime_factors(group);
    std::uint64_t gen = 0;
    for (std::uint64_t cand = 1; cand < size; ++cand) {
        bool full = true;
        for (std::uint64_t ell : primes) {
            if (slow_pow(cand, group / ell) == 1) {
                full = false;
                break;
            }
        }
        if (full) {
            gen = cand;
            break;
        }
    }
    if (gen == 0) throw InternalError("no primitive element found");
    ctx->generator_ = static_cast<std::uint32_t>(gen);

    ctx->antilog_.assign(2 * group, 1);
    ctx->log_.assign(size, 0);
    std::uint64_t acc = 1;
    for (std::uint64_t j = 0; j < group; ++j) {
        ctx->antilog_[j] = static_cast<std::uint32_t>(acc);
        ctx->antilog_[j + group] = static_cast<std::uint32_t>(acc);
        ctx->log_[acc] = static_cast<std::uint32_t>(j);
        acc = slow_mul(acc, gen);
    }
    if (acc != 1) throw InternalError("generator order check failed after table fill");

    return ctx;
}

FieldElement FieldCtx::element(std::uint64_t index) const {
    if (index >= size_)
        throw PreconditionError("element-range", "index " + std::to_string(index) + " out of range");
    return FieldElement{static_cast<std::uint32_t>(index), this};
}

void FieldCtx::check(FieldElement a) const {
    if (a.ctx != this)
        throw FieldMismatchError("element belongs to a different field context");
}

std::uint32_t FieldCtx::add_raw(std::uint32_t a, std::uint32_t b) const {
    if (p_ == 2) return a ^ b;
    std::uint32_t out = 0, mult = 1;
    while (a != 0 || b != 0) {
        out += mult * ((a % p_ + b % p_) % p_);
        a /= p_;
        b /= p_;
        mult *= p_;
    }
    return out;
}

std::uint32_t FieldCtx::neg_raw(std::uint32_t a) const {
    if (p_ == 2) return a;
    std::uint32_t out = 0, mult = 1;
    while (a != 0) {
        const std::uint32_t d = a % p_;
        out += mult * (d == 0 ? 0 : p_ - d);
        a /= p_;
        mult *= p_;
    }
    return out;
}

std::uint32_t FieldCtx::inv_raw(std::uint32_t a) const {
    if (a == 0) throw PreconditionError("inverse-of-zero", "0 has no multiplicative inverse");
    const std::uint64_t group = size_ - 1;
    return antilog_[(group - log_[a]) % group];
}

std::uint32_t FieldCtx::pow_raw(std::uint32_t a, std::uint64_t e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    const std::uint64_t group = size_ - 1;
    if (group == 0) return 1;
    return antilog_[(static_cast<std::uint64_t>(log_[a]) * (e % group)) % group];
}

FieldElement FieldCtx::add(FieldElement a, FieldElement b) const {
    check(a);
    check(b);
    return FieldElement{add_raw(a.index, b.index), this};
}

FieldElement FieldCtx::sub(FieldElement a, FieldElement b) const {
    check(a);
    check(b);
    return FieldElement{add_raw(a.index, neg_raw(b.index)), this};
}

FieldElement FieldCtx::neg(FieldElement a) const {
    check(a);
    return FieldElement{neg_raw(a.index), this};
}

FieldElement FieldCtx::mul(FieldElement a, FieldElement b) const {
    check(a);
    check(b);
    return FieldElement{mul_raw(a.index, b.index), this};
}

FieldElement FieldCtx::inv(FieldElement a) const {
    check(a);
    return FieldElement{inv_raw(a.index), this};
}

FieldElement FieldCtx::pow(FieldElement a, std::int64_t e) const {
    check(a);
    if (e >= 0) return FieldElement{pow_raw(a.index, static_cast<std::uint64_t>(e)), this};
    return FieldElement{pow_raw(inv_raw(a.index), static_cast<std::uint64_t>(-e)), this};
}

std::shared_ptr<const FieldCtx> get_field(std::uint32_t p, std::uint32_t n,
                                          std::uint64_t size_cap) {
    static std::mutex mu;
    static std::map<std::pair<std::uint32_t, std::uint32_t>, std::shared_ptr<const FieldCtx>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(p, n);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto ctx = FieldCtx::build(p, n, size_cap);
    cache[key] = ctx;
    return ctx;
}

SubfieldHandle subfield(const FieldCtx& ctx, std::uint32_t e, std::uint32_t r) {
    if (e == 0 || r == 0)
        throw PreconditionError("positive-degree", "subfield parameters must be positive");
    if (static_cast<std::uint64_t>(e) * r > ctx.degree() || ctx.degree() % (e * r) != 0)
        throw PreconditionError("divisibility",
                                "e*r = " + std::to_string(e * r) + " must divide the ambient degree " +
                                    std::to_string(ctx.degree()));
    SubfieldHandle h;
    h.ctx = &ctx;
    h.e = e;
    h.r = r;
    h.subfield_size = ipow(ctx.characteristic(), e * r);
    const std::uint64_t group = ctx.size() - 1;
    h.log_step = group / (h.subfield_size - 1);
    h.element_indices.reserve(h.subfield_size);
    h.element_indices.push_back(0);
    for (std::uint64_t j = 0; j + 1 < h.subfield_size; ++j)
        h.element_indices.push_back(ctx.antilog_raw(j * h.log_step));
    std::sort(h.element_indices.begin(), h.element_indices.end());
    return h;
}

bool SubfieldHandle::contains(std::uint32_t index) const {
    if (index == 0) return true;
    return ctx->log_raw(index) % log_step == 0;
}

FieldElement relative_trace(const FieldCtx& ctx, FieldElement x, std::uint32_t e, std::uint32_t m,
                            std::uint32_t r) {
    if (x.ctx != &ctx) throw FieldMismatchError("trace argument from a different field context");
    if (e == 0 || m == 0 || r == 0 || static_cast<std::uint64_t>(e) * m != ctx.degree())
        throw PreconditionError("interpretation",
                                "ambient degree over GF(q) must be m (e*m = field degree)");
    if (m % r != 0)
        throw PreconditionError("divisibility",
                                "r = " + std::to_string(r) + " must divide m = " + std::to_string(m));
    const std::uint64_t qr = ipow(ctx.characteristic(), e * r);
    std::uint32_t acc = x.index;
    std::uint32_t cur = x.index;
    for (std::uint32_t i = 1; i < m / r; ++i) {
        cur = ctx.pow_raw(cur, qr);
        acc = ctx.add_raw(acc, cur);
    }
    return FieldElement{acc, &ctx};
}

std::vector<std::uint32_t> trace_table(const FieldCtx& ctx, std::uint32_t e, std::uint32_t m,
                                       std::uint32_t r) {
    std::vector<std::uint32_t> out(ctx.size());
    for (std::uint64_t i = 0; i < ctx.size(); ++i)
        out[i] = relative_trace(ctx, ctx.element(i), e, m, r).index;
    return out;
}

std::uint32_t base_symbol(const FieldCtx& ctx, std::uint32_t e, FieldElement x) {
    if (x.ctx != &ctx) throw FieldMismatchError("symbol argument from a different field context");
    if (e == 0 || ctx.degree() % e != 0)
        throw PreconditionError("interpretation", "e must divide the ambient degree");
    if (x.index == 0) return 0;
    const std::uint64_t q = ipow(ctx.characteristic(), e);
    const std::uint64_t step = (ctx.size() - 1) / (q - 1);
    const std::uint64_t lg = ctx.log_raw(x.index);
    if (lg % step != 0)
        throw PreconditionError("base-subfield-membership",
                                "element " + std::to_string(x.index) + " is not in GF(" +
                                    std::to_string(q) + ")");
    return static_cast<std::uint32_t>(1 + lg / step);
}

FieldElement symbol_element(const FieldCtx& ctx, std::uint32_t e, std::uint32_t symbol) {
    const std::uint64_t q = ipow(ctx.characteristic(), e);
    if (symbol >= q) throw PreconditionError("symbol-range", "symbol out of [0, q)");
    if (symbol == 0) return ctx.zero();
    const std::uint64_t step = (ctx.size() - 1) / (q - 1);
    return ctx.element(ctx.antilog_raw((symbol - 1) * step));
}

SymbolField SymbolField::build(const FieldCtx& ctx, std::uint32_t e) {
    SymbolField sf;
    const std::uint64_t q = ipow(ctx.characteristic(), e);
    if (q > 0xFFFF) throw PreconditionError("size-cap", "symbol field too large");
    sf.q_ = static_cast<std::uint32_t>(q);
    std::vector<FieldElement> elems(q);
    for (std::uint32_t s = 0; s < q; ++s) elems[s] = symbol_element(ctx, e, s);
    sf.add_.resize(q * q);
    sf.mul_.resize(q * q);
    sf.neg_.resize(q);
    sf.inv_.resize(q);
    for (std::uint32_t a = 0; a < q; ++a) {
        sf.neg_[a] = static_cast<std::uint16_t>(base_symbol(ctx, e, ctx.neg(elems[a])));
        sf.inv_[a] = a == 0 ? 0
                            : static_cast<std::uint16_t>(base_symbol(ctx, e, ctx.inv(elems[a])));
        for (std::uint32_t b = 0; b < q; ++b) {
            sf.add_[a * q + b] =
                static_cast<std::uint16_t>(base_symbol(ctx, e, ctx.add(elems[a], elems[b])));
            sf.mul_[a * q + b] =
                static_cast<std::uint16_t>(base_symbol(ctx, e, ctx.mul(elems[a], elems[b])));
        }
    }
    return sf;
}

std::uint16_t SymbolField::inv(std::uint16_t a) const {
    if (a == 0) throw PreconditionError("inverse-of-zero", "0 has no multiplicative inverse");
    return inv_[a];
}

std::vector<std::uint32_t> base_field_iso(const FieldCtx& src, std::uint32_t e,
                                          const FieldCtx& dst) {
    if (src.characteristic() != dst.characteristic())
        throw PreconditionError("characteristic", "contexts have different characteristics");
    if (e == 0 || src.degree() % e != 0 || dst.degree() % e != 0)
        throw PreconditionError("divisibility", "e must divide both ambient degrees");
    const std::uint32_t p = src.characteristic();
    const std::uint64_t q = ipow(p, e);

    // Canonical generator of GF(q)* inside src.
    const std::uint64_t src_step = (src.size() - 1) / (q - 1);
    const std::uint32_t gamma = src.antilog_raw(src_step);

    // Minimal polynomial of gamma over GF(p): product over the Frobenius
    // orbit. Coefficients land in GF(p), whose elements are the constant
    // indices 0..p-1 in any context.
    std::vector<std::uint32_t> orbit;
    std::uint32_t c = gamma;
    do {
        orbit.push_back(c);
        c = src.pow_raw(c, p);
    } while (c != gamma);
    if (orbit.size() != e)
        throw InternalError("canonical GF(q) generator has wrong minimal polynomial degree");
    std::vector<std::uint32_t> poly{1};  // constant 1, indices in src
    for (std::uint32_t root : orbit) {
        std::vector<std::uint32_t> next(poly.size() + 1, 0);
        const std::uint32_t neg_root = src.neg_raw(root);
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] = src.add_raw(next[i + 1], poly[i]);
            next[i] = src.add_raw(next[i], src.mul_raw(poly[i], neg_root));
        }
        poly = std::move(next);
    }
    for (std::uint32_t coeff : poly)
        if (coeff >= p) throw InternalError("minimal polynomial has a coefficient outside GF(p)");

    // Smallest-index root inside dst's GF(q) subfield.
    SubfieldHandle dst_sub = subfield(dst, e, 1);
    std::uint32_t rho = 0;
    bool found = false;
    for (std::uint32_t cand : dst_sub.element_indices) {
        std::uint32_t acc = 0;  // Horner, high to low
        for (std::size_t i = poly.size(); i-- > 0;)
            acc = dst.add_raw(dst.mul_raw(acc, cand), poly[i]);
        if (acc == 0) {
            rho = cand;
            found = true;
            break;
        }
    }
    if (!found) throw InternalError("minimal polynomial has no root in the destination subfield");

    std::vector<std::uint32_t> table(src.size(), UINT32_MAX);
    table[0] = 0;
    for (std::uint64_t j = 0; j + 1 < q; ++j)
        table[src.antilog_raw(j * src_step)] = dst.pow_raw(rho, j);

    // The multiplicative extension of a root-preserving map is the subfield
    // isomorphism; verify additivity exhaustively as a guard.
    SubfieldHandle src_sub = subfield(src, e, 1);
    for (std::uint32_t a : src_sub.element_indices)
        for (std::uint32_t b : src_sub.element_indices)
            if (table[src.add_raw(a, b)] != dst.add_raw(table[a], table[b]))
                throw InternalError("base field embedding is not additive");
    return table;
}

}  // namespace sfcodes
