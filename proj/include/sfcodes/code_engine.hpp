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
#include <string>
#include <vector>

#include "sfcodes/bounds.hpp"
#include "sfcodes/defining_set.hpp"
#include "sfcodes/field.hpp"

namespace sfcodes {

/// Desk-scale guards for exhaustive enumeration.
struct EngineLimits {
    std::uint64_t max_messages = std::uint64_t{1} << 20;
    std::uint64_t max_work = std::uint64_t{1} << 36;  // messages * length
};

/// Exact parameters of an enumerated code. wd counts nonzero codewords
/// (multiplicities of distinct codewords, not messages), so the counts sum to
/// q^dim - 1 even when the message map has a kernel.
struct CodeSummary {
    std::string label;
    std::uint32_t q = 0;
    std::uint64_t n = 0;
    std::uint32_t dim = 0;
    std::uint64_t d = 0;
    std::map<std::uint64_t, std::uint64_t> wd;
    std::uint64_t message_space_size = 0;
    std::uint32_t message_dim = 0;  // dim < message_dim means the trace map had a kernel
};

/// Enumerates every codeword of the code defined by D: one trace evaluation
/// per (message, point) pair, aggregated into an exact weight histogram.
/// The message range is split into `parallelism` contiguous chunks whose
/// partial histograms are merged in chunk order, so results are identical for
/// every parallelism degree.
CodeSummary enumerate_code(const DefiningSet& D, const EngineLimits& limits = {},
                           std::uint32_t parallelism = 1);

/// Generator matrix over base symbols. Rows are the codewords of the fixed
/// message basis (ascending generator powers alpha^0..alpha^(m-1), and for
/// bivariate codes the x-side basis followed by the y-side basis), keeping
/// only rows that are linearly independent over GF(q). Entries are base
/// symbols in [0, q); `sym` carries the matching GF(q) symbol arithmetic.
struct GeneratorMatrix {
    std::string label;
    std::uint32_t q = 0;
    std::uint32_t rows = 0;
    std::uint64_t cols = 0;
    std::vector<std::vector<std::uint16_t>> entries;
    SymbolField sym;
};

GeneratorMatrix generator_matrix(const DefiningSet& D, const EngineLimits& limits = {});

/// One verified claim of a Prediction.
struct ClaimCheck {
    std::string claim;
    std::string expected;
    std::string observed;
    bool pass = false;
};

struct VerificationReport {
    std::string label;
    bool pass = true;
    std::vector<ClaimCheck> checks;
    OptimalityVerdict verdict;

    void add(std::string claim, std::string expected, std::string observed, bool ok) {
        pass = pass && ok;
        checks.push_back({std::move(claim), std::move(expected), std::move(observed), ok});
    }
};

/// Size gates for the exact minimality check (see structural.hpp).
struct StructuralGates {
    std::uint64_t max_codewords = std::uint64_t{1} << 12;
    std::uint64_t max_length = 256;
};

/// Confronts a theorem Prediction with enumerated ground truth: parameters,
/// weight distribution (exact equality for full tables, containment for
/// value-set claims), optimality claims via the Griesmer classifier, and
/// structural claims via the exact checkers. Throws PreconditionError when
/// the summary and prediction come from different constructions.
VerificationReport verify_prediction(const CodeSummary& summary, const GeneratorMatrix& gen,
                                     const Prediction& pred, const StructuralGates& gates = {});

/// Ascending weight-enumerator rendering "1 + A1z^w1 + A2z^w2 + ...".
std::string weight_enumerator_string(const std::map<std::uint64_t, std::uint64_t>& wd);

}  // namespace sfcodes
