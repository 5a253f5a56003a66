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

#include "sfcodes/structural.hpp"

#include <algorithm>
#include <set>

namespace sfcodes {

std::string to_string(Minimality m) {
    switch (m) {
        case Minimality::Minimal: return "true";
        case Minimality::NotMinimal: return "false";
        case Minimality::MinimalBySufficientCondition: return "true-by-sufficient-condition";
        default: return "skipped-too-large";
    }
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> self_orthogonality_witness(
    const GeneratorMatrix& gen) {
    const SymbolField& sf = gen.sym;
    for (std::uint32_t i = 0; i < gen.rows; ++i) {
        for (std::uint32_t j = i; j < gen.rows; ++j) {
            std::uint16_t acc = 0;
            const auto& ri = gen.entries[i];
            const auto& rj = gen.entries[j];
            for (std::uint64_t c = 0; c < gen.cols; ++c) acc = sf.add(acc, sf.mul(ri[c], rj[c]));
            if (acc != 0) return std::make_pair(i, j);
        }
    }
    return std::nullopt;
}

bool is_self_orthogonal(const GeneratorMatrix& gen) {
    return !self_orthogonality_witness(gen).has_value();
}

namespace {

// Support bitsets for the cover test; the gate keeps n <= 256.
struct Support {
    std::uint64_t words[4] = {0, 0, 0, 0};

    void set(std::uint64_t i) { words[i >> 6] |= std::uint64_t{1} << (i & 63); }
    bool subset_of(const Support& other) const {
        for (int w = 0; w < 4; ++w)
            if (words[w] & ~other.words[w]) return false;
        return true;
    }
    bool operator<(const Support& other) const {
        for (int w = 0; w < 4; ++w)
            if (words[w] != other.words[w]) return words[w] < other.words[w];
        return false;
    }
    bool operator==(const Support& other) const {
        for (int w = 0; w < 4; ++w)
            if (words[w] != other.words[w]) return false;
        return true;
    }
};

// Enumerates the supports of one representative per scalar class of nonzero
// codewords in the row space of gen. Scaling never changes the support, so
// each class contributes one bitset. Equal supports of non-proportional
// codewords violate minimality, so duplicates are kept: the quadratic loop
// sees them as mutual inclusion.
std::vector<Support> scalar_class_supports(const GeneratorMatrix& gen) {
    const SymbolField& sf = gen.sym;
    const std::uint32_t q = gen.q;
    const std::uint32_t rows = gen.rows;
    std::vector<Support> out;
    std::vector<std::uint16_t> coeff(rows, 0);
    std::vector<std::uint16_t> word(gen.cols, 0);

    // Scalar classes: enumerate coefficient vectors whose first nonzero
    // coordinate equals 1.
    std::uint64_t total = 1;
    for (std::uint32_t i = 0; i < rows; ++i) total *= q;
    for (std::uint64_t code = 1; code < total; ++code) {
        std::uint64_t v = code;
        bool canonical = false, decided = false;
        for (std::uint32_t i = 0; i < rows; ++i) {
            coeff[i] = static_cast<std::uint16_t>(v % q);
            v /= q;
            if (!decided && coeff[i] != 0) {
                canonical = coeff[i] == 1;
                decided = true;
            }
        }
        if (!canonical) continue;
        std::fill(word.begin(), word.end(), 0);
        for (std::uint32_t i = 0; i < rows; ++i) {
            if (coeff[i] == 0) continue;
            const auto& row = gen.entries[i];
            for (std::uint64_t c = 0; c < gen.cols; ++c)
                word[c] = sf.add(word[c], sf.mul(coeff[i], row[c]));
        }
        Support s;
        for (std::uint64_t c = 0; c < gen.cols; ++c)
            if (word[c] != 0) s.set(c);
        out.push_back(s);
    }
    return out;
}

}  // namespace

StructuralReport structural_report(const GeneratorMatrix& gen, const CodeSummary& summary,
                                   const StructuralGates& gates) {
    if (gen.label != summary.label)
        throw PreconditionError("provenance", "matrix and summary come from different constructions");
    StructuralReport report;
    auto witness = self_orthogonality_witness(gen);
    report.self_orthogonal = !witness.has_value();
    report.self_orth_witness = witness;

    if (!summary.wd.empty()) {
        report.wmin_wmax = {summary.wd.begin()->first, summary.wd.rbegin()->first};
        // w_min / w_max > (q-1)/q without rationals
        report.ratio_condition =
            report.wmin_wmax.first * gen.q > report.wmin_wmax.second * (gen.q - 1);
    }

    const std::uint64_t codewords = ipow(gen.q, gen.rows);
    if (codewords <= gates.max_codewords && gen.cols <= gates.max_length) {
        const auto supports = scalar_class_supports(gen);
        bool minimal = true;
        for (std::size_t i = 0; i < supports.size() && minimal; ++i)
            for (std::size_t j = 0; j < supports.size(); ++j) {
                if (i == j) continue;
                if (supports[j].subset_of(supports[i])) {
                    minimal = false;
                    break;
                }
            }
        if (!minimal && report.ratio_condition)
            throw InternalError("exact cover test contradicts the weight-ratio condition");
        report.minimal = minimal ? Minimality::Minimal : Minimality::NotMinimal;
    } else {
        report.minimal = report.ratio_condition ? Minimality::MinimalBySufficientCondition
                                                : Minimality::SkippedTooLarge;
    }
    return report;
}

namespace {

bool trivial_point(const DefiningSet& d, std::uint64_t flat) {
    (void)d;
    return flat == 0;  // index 0 is the zero element; pair (0,0) flattens to 0
}

std::vector<std::uint64_t> flat_points(const DefiningSet& d) {
    std::vector<std::uint64_t> out;
    if (d.kind == SetKind::Univariate) {
        out.assign(d.points.begin(), d.points.end());
    } else {
        const std::uint64_t ysize = d.ctx_y->size();
        out.reserve(d.pairs.size());
        for (const auto& [x, y] : d.pairs) out.push_back(static_cast<std::uint64_t>(x) * ysize + y);
    }
    return out;
}

void require_compatible(const DefiningSet& a, const DefiningSet& b) {
    const bool same = a.kind == b.kind && a.ctx_x == b.ctx_x && a.e == b.e && a.m == b.m &&
                      a.ctx_y == b.ctx_y && a.k == b.k;
    if (!same)
        throw PreconditionError("decomposition",
                                "defining sets live in different ambient interpretations");
}

}  // namespace

bool set_algebra_self_orth_union(const std::vector<std::pair<const DefiningSet*, bool>>& parts) {
    if (parts.empty()) throw PreconditionError("decomposition", "empty union");
    for (std::size_t i = 1; i < parts.size(); ++i) require_compatible(*parts[0].first, *parts[i].first);
    std::vector<std::vector<std::uint64_t>> flats;
    for (const auto& [set, flag] : parts) flats.push_back(flat_points(*set));
    for (auto& f : flats) std::sort(f.begin(), f.end());
    for (std::size_t i = 0; i < flats.size(); ++i) {
        for (std::size_t j = i + 1; j < flats.size(); ++j) {
            std::vector<std::uint64_t> inter;
            std::set_intersection(flats[i].begin(), flats[i].end(), flats[j].begin(),
                                  flats[j].end(), std::back_inserter(inter));
            for (std::uint64_t v : inter)
                if (!trivial_point(*parts[0].first, v))
                    throw PreconditionError("decomposition",
                                            "union parts intersect outside the zero point");
        }
    }
    bool all = true;
    for (const auto& [set, flag] : parts) all = all && flag;
    return all;
}

bool set_algebra_self_orth_difference(const DefiningSet& whole, bool whole_self_orth,
                                      const DefiningSet& part, bool part_self_orth) {
    require_compatible(whole, part);
    auto fw = flat_points(whole);
    auto fp = flat_points(part);
    std::sort(fw.begin(), fw.end());
    std::sort(fp.begin(), fp.end());
    if (!std::includes(fw.begin(), fw.end(), fp.begin(), fp.end()))
        throw PreconditionError("decomposition", "subtracted set is not contained in the whole");
    return whole_self_orth && part_self_orth;
}

DefiningSet strip_zero_point(const DefiningSet& d) {
    DefiningSet out = d;
    if (d.kind == SetKind::Univariate) {
        out.points.clear();
        for (std::uint32_t p : d.points)
            if (p != 0) out.points.push_back(p);
    } else {
        out.pairs.clear();
        for (const auto& pr : d.pairs)
            if (!(pr.first == 0 && pr.second == 0)) out.pairs.push_back(pr);
    }
    return out;
}

}  // namespace sfcodes
