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

#include "sfcodes/code_engine.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <thread>

#include "sfcodes/structural.hpp"

namespace sfcodes {

namespace {

// Dense histogram per worker; weights are bounded by the code length.
using Histogram = std::vector<std::uint64_t>;

void run_chunked(std::uint64_t total, std::uint32_t parallelism,
                 const std::function<void(std::uint64_t, std::uint64_t, Histogram&)>& work,
                 Histogram& merged) {
    if (parallelism <= 1) {
        work(0, total, merged);
        return;
    }
    const std::uint64_t chunks = std::min<std::uint64_t>(parallelism, total ? total : 1);
    std::vector<Histogram> partial(chunks, Histogram(merged.size(), 0));
    std::vector<std::thread> threads;
    threads.reserve(chunks);
    for (std::uint64_t c = 0; c < chunks; ++c) {
        const std::uint64_t lo = total * c / chunks;
        const std::uint64_t hi = total * (c + 1) / chunks;
        threads.emplace_back([&, lo, hi, c] { work(lo, hi, partial[c]); });
    }
    for (auto& th : threads) th.join();
    for (std::uint64_t c = 0; c < chunks; ++c)
        for (std::size_t w = 0; w < merged.size(); ++w) merged[w] += partial[c][w];
}

std::uint32_t int_log(std::uint64_t value, std::uint64_t base) {
    std::uint32_t e = 0;
    std::uint64_t acc = 1;
    while (acc < value) {
        acc *= base;
        ++e;
    }
    if (acc != value) throw InternalError("zero-codeword count is not a power of q");
    return e;
}

}  // namespace

std::string weight_enumerator_string(const std::map<std::uint64_t, std::uint64_t>& wd) {
    std::ostringstream os;
    os << "1";
    for (const auto& [w, mult] : wd) os << " + " << mult << "z^" << w;
    return os.str();
}

CodeSummary enumerate_code(const DefiningSet& D, const EngineLimits& limits,
                           std::uint32_t parallelism) {
    if (D.length() == 0) throw PreconditionError("empty-set", "defining set has no points");
    const std::uint64_t messages = D.message_space_size();
    if (messages > limits.max_messages)
        throw PreconditionError("message-cap",
                                "message space " + std::to_string(messages) + " exceeds cap " +
                                    std::to_string(limits.max_messages));
    if (messages * D.length() > limits.max_work)
        throw PreconditionError("work-cap", "messages * length exceeds the work cap");

    const std::uint64_t n = D.length();
    const std::uint64_t q = D.q();
    Histogram hist(n + 1, 0);

    if (D.kind == SetKind::Univariate) {
        const FieldCtx& F = *D.ctx_x;
        const auto traces = trace_table(F, D.e, D.m, 1);
        std::vector<std::uint8_t> trace_zero(F.size());
        for (std::size_t i = 0; i < traces.size(); ++i) trace_zero[i] = traces[i] == 0 ? 1 : 0;

        std::uint64_t zero_points = 0;
        std::vector<std::uint32_t> point_logs;
        point_logs.reserve(D.points.size());
        for (std::uint32_t x : D.points) {
            if (x == 0)
                ++zero_points;
            else
                point_logs.push_back(F.log_raw(x));
        }
        const std::uint32_t* antilog = F.antilog_table().data();
        const std::uint8_t* tz = trace_zero.data();

        auto work = [&](std::uint64_t lo, std::uint64_t hi, Histogram& h) {
            for (std::uint64_t a = lo; a < hi; ++a) {
                if (a == 0) {
                    h[0]++;
                    continue;
                }
                const std::uint64_t la = F.log_raw(static_cast<std::uint32_t>(a));
                std::uint64_t zeros = zero_points;
                for (std::uint32_t lx : point_logs) zeros += tz[antilog[la + lx]];
                h[n - zeros]++;
            }
        };
        run_chunked(messages, parallelism, work, hist);
    } else {
        const FieldCtx& FX = *D.ctx_x;
        const FieldCtx& FY = *D.ctx_y;
        // Trace values of both sides are mapped into one standalone GF(q)
        // context so they can be added across the two ambient fields.
        auto ctx_q = get_field(FX.characteristic(), D.e);
        const auto iso_x = base_field_iso(FX, D.e, *ctx_q);
        const auto iso_y = base_field_iso(FY, D.e, *ctx_q);
        const auto tx_raw = trace_table(FX, D.e, D.m, 1);
        const auto ty_raw = trace_table(FY, D.e, D.k, 1);
        std::vector<std::uint32_t> tx(FX.size()), ty(FY.size());
        for (std::size_t i = 0; i < tx.size(); ++i) tx[i] = iso_x[tx_raw[i]];
        for (std::size_t i = 0; i < ty.size(); ++i) ty[i] = iso_y[ty_raw[i]];
        std::vector<std::uint32_t> neg_q(ctx_q->size());
        for (std::uint32_t v = 0; v < ctx_q->size(); ++v) neg_q[v] = ctx_q->neg_raw(v);

        const std::uint64_t ysize = FY.size();
        auto work = [&](std::uint64_t lo, std::uint64_t hi, Histogram& h) {
            for (std::uint64_t msg = lo; msg < hi; ++msg) {
                const std::uint32_t a = static_cast<std::uint32_t>(msg / ysize);
                const std::uint32_t b = static_cast<std::uint32_t>(msg % ysize);
                std::uint64_t zeros = 0;
                for (const auto& [x, y] : D.pairs) {
                    const std::uint32_t u = tx[FX.mul_raw(a, x)];
                    const std::uint32_t v = ty[FY.mul_raw(b, y)];
                    zeros += (u == neg_q[v]) ? 1 : 0;
                }
                h[n - zeros]++;
            }
        };
        run_chunked(messages, parallelism, work, hist);
    }

    CodeSummary summary;
    summary.label = D.provenance.label;
    summary.q = static_cast<std::uint32_t>(q);
    summary.n = n;
    summary.message_space_size = messages;
    summary.message_dim = D.message_dim();

    // Messages with the zero codeword form the kernel of the trace map; each
    // distinct codeword is hit exactly |kernel| times.
    const std::uint64_t kernel = hist[0];
    if (kernel == 0) throw InternalError("the zero message produced a nonzero weight");
    summary.dim = summary.message_dim - int_log(kernel, q);
    for (std::uint64_t w = 1; w <= n; ++w) {
        if (hist[w] == 0) continue;
        if (hist[w] % kernel != 0)
            throw InternalError("weight multiplicity not divisible by the kernel size");
        summary.wd[w] = hist[w] / kernel;
    }
    summary.d = summary.wd.empty() ? 0 : summary.wd.begin()->first;
    return summary;
}

GeneratorMatrix generator_matrix(const DefiningSet& D, const EngineLimits& limits) {
    if (D.length() == 0) throw PreconditionError("empty-set", "defining set has no points");
    const std::uint64_t n = D.length();
    if (static_cast<std::uint64_t>(D.message_dim()) * n > limits.max_work)
        throw PreconditionError("work-cap", "basis rows * length exceeds the work cap");

    GeneratorMatrix gen;
    gen.label = D.provenance.label;
    gen.q = static_cast<std::uint32_t>(D.q());
    gen.cols = n;

    std::vector<std::vector<std::uint16_t>> candidates;
    if (D.kind == SetKind::Univariate) {
        const FieldCtx& F = *D.ctx_x;
        gen.sym = SymbolField::build(F, D.e);
        const auto traces = trace_table(F, D.e, D.m, 1);
        std::vector<std::uint16_t> trace_sym(F.size());
        for (std::size_t i = 0; i < traces.size(); ++i)
            trace_sym[i] =
                static_cast<std::uint16_t>(base_symbol(F, D.e, F.element(traces[i])));
        for (std::uint32_t i = 0; i < D.m; ++i) {
            const std::uint32_t basis = F.antilog_raw(i);
            std::vector<std::uint16_t> row(n);
            for (std::size_t c = 0; c < D.points.size(); ++c)
                row[c] = trace_sym[F.mul_raw(basis, D.points[c])];
            candidates.push_back(std::move(row));
        }
    } else {
        const FieldCtx& FX = *D.ctx_x;
        const FieldCtx& FY = *D.ctx_y;
        auto ctx_q = get_field(FX.characteristic(), D.e);
        gen.sym = SymbolField::build(*ctx_q, D.e);
        const auto iso_x = base_field_iso(FX, D.e, *ctx_q);
        const auto iso_y = base_field_iso(FY, D.e, *ctx_q);
        const auto tx_raw = trace_table(FX, D.e, D.m, 1);
        const auto ty_raw = trace_table(FY, D.e, D.k, 1);
        auto entry_sym = [&](std::uint32_t xv, std::uint32_t yv) {
            const std::uint32_t sum = ctx_q->add_raw(iso_x[tx_raw[xv]], iso_y[ty_raw[yv]]);
            return static_cast<std::uint16_t>(base_symbol(*ctx_q, D.e, ctx_q->element(sum)));
        };
        for (std::uint32_t i = 0; i < D.m; ++i) {
            const std::uint32_t basis = FX.antilog_raw(i);
            std::vector<std::uint16_t> row(n);
            for (std::size_t c = 0; c < D.pairs.size(); ++c)
                row[c] = entry_sym(FX.mul_raw(basis, D.pairs[c].first), 0);
            candidates.push_back(std::move(row));
        }
        for (std::uint32_t j = 0; j < D.k; ++j) {
            const std::uint32_t basis = FY.antilog_raw(j);
            std::vector<std::uint16_t> row(n);
            for (std::size_t c = 0; c < D.pairs.size(); ++c)
                row[c] = entry_sym(0, FY.mul_raw(basis, D.pairs[c].second));
            candidates.push_back(std::move(row));
        }
    }

    // Keep candidate rows that are independent over GF(q): Gaussian
    // elimination on working copies, original rows preserved.
    const SymbolField& sf = gen.sym;
    std::vector<std::vector<std::uint16_t>> reduced;
    std::vector<std::size_t> pivot_col;
    for (auto& cand : candidates) {
        std::vector<std::uint16_t> work = cand;
        for (std::size_t rix = 0; rix < reduced.size(); ++rix) {
            const std::uint16_t f = work[pivot_col[rix]];
            if (f == 0) continue;
            for (std::size_t c = 0; c < work.size(); ++c)
                work[c] = sf.add(work[c], sf.neg(sf.mul(f, reduced[rix][c])));
        }
        auto nz = std::find_if(work.begin(), work.end(), [](std::uint16_t v) { return v != 0; });
        if (nz == work.end()) continue;
        const std::size_t col = static_cast<std::size_t>(nz - work.begin());
        const std::uint16_t inv = sf.inv(work[col]);
        for (auto& v : work) v = sf.mul(v, inv);
        reduced.push_back(std::move(work));
        pivot_col.push_back(col);
        gen.entries.push_back(cand);
    }
    gen.rows = static_cast<std::uint32_t>(gen.entries.size());
    return gen;
}

namespace {

std::string values_string(const std::vector<std::uint64_t>& vs) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < vs.size(); ++i) os << (i ? "," : "") << vs[i];
    os << "}";
    return os.str();
}

}  // namespace

VerificationReport verify_prediction(const CodeSummary& summary, const GeneratorMatrix& gen,
                                     const Prediction& pred, const StructuralGates& gates) {
    if (summary.label != pred.label || gen.label != pred.label)
        throw PreconditionError("provenance",
                                "summary, matrix and prediction come from different constructions");
    VerificationReport report;
    report.label = pred.label;

    report.add("length", std::to_string(pred.n), std::to_string(summary.n), summary.n == pred.n);
    report.add("dimension", std::to_string(pred.dim), std::to_string(summary.dim),
               summary.dim == pred.dim);
    report.add("minimum distance", std::to_string(pred.d), std::to_string(summary.d),
               summary.d == pred.d);

    if (pred.has_full_wd) {
        const bool equal = summary.wd == pred.wd;
        std::string detail;
        if (!equal) {
            for (const auto& [w, mult] : pred.wd) {
                auto it = summary.wd.find(w);
                const std::uint64_t seen = it == summary.wd.end() ? 0 : it->second;
                if (seen != mult) {
                    detail = " (first mismatch at weight " + std::to_string(w) + ": expected " +
                             std::to_string(mult) + ", observed " + std::to_string(seen) + ")";
                    break;
                }
            }
            if (detail.empty())
                for (const auto& [w, mult] : summary.wd)
                    if (!pred.wd.count(w)) {
                        detail = " (unpredicted weight " + std::to_string(w) + " with multiplicity " +
                                 std::to_string(mult) + ")";
                        break;
                    }
        }
        report.add("weight distribution", weight_enumerator_string(pred.wd),
                   weight_enumerator_string(summary.wd) + detail, equal);
    } else if (!pred.weight_values.empty()) {
        bool contained = true;
        std::uint64_t offender = 0;
        for (const auto& [w, mult] : summary.wd) {
            if (!std::binary_search(pred.weight_values.begin(), pred.weight_values.end(), w)) {
                contained = false;
                offender = w;
                break;
            }
        }
        std::string obs = "observed weights";
        if (!contained) obs += " include stray " + std::to_string(offender);
        report.add("weight values", values_string(pred.weight_values), obs, contained);
    }

    report.verdict = classify(summary.n, summary.dim, summary.d, summary.q);
    if (pred.claim_griesmer)
        report.add("griesmer", "true", report.verdict.griesmer ? "true" : "false",
                   report.verdict.griesmer);
    if (pred.claim_near_griesmer)
        report.add("near-griesmer", "true", report.verdict.near_griesmer ? "true" : "false",
                   report.verdict.near_griesmer);
    if (pred.claim_distance_optimal)
        report.add("distance-optimal", "true", to_string(report.verdict.distance_optimal),
                   report.verdict.distance_optimal == TriState::True);

    if (pred.claim_self_orthogonal || pred.claim_minimal) {
        const StructuralReport sr = structural_report(gen, summary, gates);
        if (pred.claim_self_orthogonal)
            report.add("self-orthogonal", "true", sr.self_orthogonal ? "true" : "false",
                       sr.self_orthogonal);
        if (pred.claim_minimal) {
            const bool ok = sr.minimal == Minimality::Minimal ||
                            sr.minimal == Minimality::MinimalBySufficientCondition;
            report.add("minimal", "true", to_string(sr.minimal), ok);
        }
    }
    return report;
}

}  // namespace sfcodes
