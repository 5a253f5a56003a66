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
#include <memory>
#include <vector>

#include "sfcodes/errors.hpp"

namespace sfcodes {

class FieldCtx;

/// Element of a concrete finite field realization. The index encodes the
/// polynomial representative: its base-p digits, low to high, are the
/// coefficients. Index 0 is the additive identity, index 1 the
/// multiplicative identity. Elements are only meaningful together with the
/// context that produced them; mixing contexts throws FieldMismatchError.
struct FieldElement {
    std::uint32_t index = 0;
    const FieldCtx* ctx = nullptr;

    bool is_zero() const { return index == 0; }
    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.index == b.index && a.ctx == b.ctx;
    }
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }
};

/// A concrete realization of GF(p^n): irreducible modulus, fixed primitive
/// element, and full discrete log / antilog tables. Construction is
/// deterministic: the modulus is the monic irreducible polynomial of degree n
/// over GF(p) whose coefficient string (read low-to-high as a base-p integer)
/// is smallest, and the generator is the element of smallest index whose
/// multiplicative order is p^n - 1.
///
/// Immutable after construction; all member functions are const and safe for
/// unsynchronized concurrent use.
class FieldCtx {
public:
    static constexpr std::uint64_t kDefaultSizeCap = std::uint64_t{1} << 24;

    /// Builds GF(p^n). Throws PreconditionError for composite p or when
    /// p^n exceeds `size_cap`.
    static std::shared_ptr<const FieldCtx> build(std::uint32_t p, std::uint32_t n,
                                                 std::uint64_t size_cap = kDefaultSizeCap);

    std::uint32_t characteristic() const { return p_; }
    std::uint32_t degree() const { return n_; }
    std::uint64_t size() const { return size_; }

    /// Modulus coefficients, low to high; length degree()+1, leading 1.
    const std::vector<std::uint8_t>& modulus() const { return modulus_; }

    FieldElement generator() const { return element(generator_); }
    std::uint32_t generator_index() const { return generator_; }

    FieldElement element(std::uint64_t index) const;
    FieldElement zero() const { return element(0); }
    FieldElement one() const { return element(1); }

    FieldElement add(FieldElement a, FieldElement b) const;
    FieldElement sub(FieldElement a, FieldElement b) const;
    FieldElement neg(FieldElement a) const;
    FieldElement mul(FieldElement a, FieldElement b) const;
    FieldElement inv(FieldElement a) const;  // throws on zero
    FieldElement pow(FieldElement a, std::int64_t e) const;

    // Index-level kernels for enumeration loops. No context checks.
    std::uint32_t add_raw(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t neg_raw(std::uint32_t a) const;
    std::uint32_t mul_raw(std::uint32_t a, std::uint32_t b) const {
        if (a == 0 || b == 0) return 0;
        return antilog_[log_[a] + log_[b]];
    }
    std::uint32_t inv_raw(std::uint32_t a) const;
    std::uint32_t pow_raw(std::uint32_t a, std::uint64_t e) const;
    std::uint32_t log_raw(std::uint32_t a) const { return log_[a]; }
    std::uint32_t antilog_raw(std::uint64_t e) const { return antilog_[e]; }

    /// Antilog table of length 2*(size-1); antilog[j] = g^j for j < size-1 and
    /// the second half repeats the first, so two logs can be added without a
    /// reduction step.
    const std::vector<std::uint32_t>& antilog_table() const { return antilog_; }
    const std::vector<std::uint32_t>& log_table() const { return log_; }

private:
    FieldCtx() = default;
    void check(FieldElement a) const;

    std::uint32_t p_ = 0;
    std::uint32_t n_ = 0;
    std::uint64_t size_ = 0;
    std::vector<std::uint8_t> modulus_;
    std::uint32_t generator_ = 0;
    std::vector<std::uint32_t> log_;      // log_[0] is unused
    std::vector<std::uint32_t> antilog_;  // length 2*(size-1)
};

/// Process-wide cache of built fields keyed by (p, n). Construction is
/// serialized; the returned contexts are immutable and shared.
std::shared_ptr<const FieldCtx> get_field(std::uint32_t p, std::uint32_t n,
                                          std::uint64_t size_cap = FieldCtx::kDefaultSizeCap);

/// Splits a prime power q into (p, e) with q = p^e. Throws PreconditionError
/// if q is not a prime power >= 2.
std::pair<std::uint32_t, std::uint32_t> prime_power_split(std::uint64_t q);

std::uint64_t ipow(std::uint64_t base, std::uint32_t e);

/// All q^r elements x of the ambient field with x^(q^r) = x, i.e. the
/// subfield GF(q^r) of an ambient field interpreted as GF(q^m) with q = p^e.
/// element_indices are sorted ascending.
struct SubfieldHandle {
    const FieldCtx* ctx = nullptr;
    std::uint32_t e = 0;
    std::uint32_t r = 0;
    std::uint64_t subfield_size = 0;    // q^r
    std::uint64_t log_step = 0;         // (p^n - 1) / (q^r - 1)
    std::vector<std::uint32_t> element_indices;

    bool contains(std::uint32_t index) const;
};

/// Requires e*r to divide the ambient degree over GF(p).
SubfieldHandle subfield(const FieldCtx& ctx, std::uint32_t e, std::uint32_t r);

/// Relative trace from GF(q^m) down to GF(q^r), with q = p^e and e*m equal to
/// the ambient degree over GF(p):
///
///   x |-> sum_{i=0}^{m/r - 1} x^(q^(r*i))
///
/// The result lies in GF(q^r) and the map is GF(q^r)-linear. Throws when
/// r does not divide m or the interpretation does not match the context.
FieldElement relative_trace(const FieldCtx& ctx, FieldElement x, std::uint32_t e, std::uint32_t m,
                            std::uint32_t r);

/// Table of relative traces for every element of the ambient field:
/// entry[i] = relative_trace(ctx, element(i), e, m, r).index
std::vector<std::uint32_t> trace_table(const FieldCtx& ctx, std::uint32_t e, std::uint32_t m,
                                       std::uint32_t r);

/// Portable encoding of base-subfield elements as integers in [0, q).
/// 0 maps to 0 and the nonzero x = g^(j*(p^n-1)/(q-1)) maps to 1 + j with
/// 0 <= j < q-1, g the ambient generator. Bijective and deterministic; used
/// for serialization only.
std::uint32_t base_symbol(const FieldCtx& ctx, std::uint32_t e, FieldElement x);

/// Inverse of base_symbol.
FieldElement symbol_element(const FieldCtx& ctx, std::uint32_t e, std::uint32_t symbol);

/// Arithmetic of the base subfield GF(q) expressed directly on base symbols,
/// backed by small lookup tables computed once in the ambient field.
class SymbolField {
public:
    static SymbolField build(const FieldCtx& ctx, std::uint32_t e);

    std::uint32_t q() const { return q_; }
    std::uint16_t add(std::uint16_t a, std::uint16_t b) const { return add_[a * q_ + b]; }
    std::uint16_t mul(std::uint16_t a, std::uint16_t b) const { return mul_[a * q_ + b]; }
    std::uint16_t neg(std::uint16_t a) const { return neg_[a]; }
    std::uint16_t inv(std::uint16_t a) const;  // throws on zero

private:
    std::uint32_t q_ = 0;
    std::vector<std::uint16_t> add_, mul_, neg_, inv_;
};

/// Canonical field isomorphism between the GF(q) copies inside two contexts
/// (q = p^e, same characteristic). Returns a table over src indices: entries
/// are dst indices for elements of src's GF(q) subfield and UINT32_MAX
/// elsewhere. The map fixes 0 and 1, is additive and multiplicative, and is
/// deterministic: the canonical GF(q)-generator of src is sent to the
/// smallest-index root of its minimal polynomial inside dst.
std::vector<std::uint32_t> base_field_iso(const FieldCtx& src, std::uint32_t e,
                                          const FieldCtx& dst);

}  // namespace sfcodes
