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

#include <json.hpp>

#include "sfcodes/code_engine.hpp"
#include "sfcodes/defining_set.hpp"
#include "sfcodes/structural.hpp"

namespace sfcodes {

using Json = nlohmann::ordered_json;

struct RunLimits {
    EngineLimits engine;
    StructuralGates gates;
};

/// Structured family parameters as accepted by the CLI.
struct FamilySpec {
    int family = 0;
    bool special = false;  // family 1 variant removing only {0, 1}
    std::uint64_t q = 0;
    std::uint32_t m = 0;
    std::uint32_t k = 0;
    std::uint32_t r = 0;
    std::uint32_t s = 0;
    std::vector<std::uint32_t> rs;          // family 1 subfield degrees
    std::uint32_t h = 0;                    // families 2 and 3
    std::vector<std::string> theta_exprs;   // "1", "a", "a^3", "#19"; empty = defaults
};

/// Resolves a theta expression list against the canonical field of the spec.
std::vector<std::uint32_t> resolve_theta_exprs(const FieldCtx& ctx,
                                               const std::vector<std::string>& exprs);

FamilyBuild build_family(const FamilySpec& spec);

/// Everything cmd_construct emits for one build.
struct ConstructResult {
    FamilyBuild build;
    CodeSummary summary;
    GeneratorMatrix matrix;
    OptimalityVerdict verdict;
    StructuralReport structural;
};

ConstructResult run_family(const FamilySpec& spec, std::uint32_t parallelism = 1,
                           const RunLimits& limits = {});

/// One published reference construction: family parameters plus the reported
/// parameters, weight enumerator and claim set it must reproduce exactly.
struct Fixture {
    std::string label;
    FamilySpec spec;
    std::uint64_t n = 0;
    std::uint32_t dim = 0;
    std::uint64_t d = 0;
    std::map<std::uint64_t, std::uint64_t> wd;
    bool griesmer = false;
    bool near_griesmer = false;
    bool distance_optimal = false;
    bool self_orthogonal = false;
    bool minimal = false;
    // The reference tables cite an external code-table lookup for
    // distance-optimality; recorded as advisory metadata, never computed.
    bool cites_external_table = false;
};

/// The built-in table of all 17 reference constructions.
const std::vector<Fixture>& reference_fixtures();

struct FixtureResult {
    std::string label;
    std::string params;
    bool pass = true;
    std::uint64_t expected_n = 0;
    std::uint32_t expected_dim = 0;
    std::uint64_t expected_d = 0;
    std::string expected_we;
    std::string observed_we;
    bool cites_external_table = false;
    std::vector<ClaimCheck> expectation_checks;  // frozen reference vs build/enumeration
    VerificationReport verification;             // theorem prediction vs ground truth
    CodeSummary summary;
};

struct ReproManifest {
    std::vector<FixtureResult> results;
    bool all_pass = true;
};

FixtureResult run_fixture(const Fixture& fixture, std::uint32_t parallelism = 1,
                          const RunLimits& limits = {});

/// Runs every fixture whose label contains `only` (all of them when empty).
ReproManifest reproduce_references(const std::string& only = "", std::uint32_t parallelism = 1,
                                   const RunLimits& limits = {});

struct SweepSpec {
    int family = 0;
    std::uint64_t q = 0;
    std::uint32_t m_min = 0, m_max = 0;
    std::uint32_t r_min = 1, r_max = 1;
    std::uint32_t h_min = 1, h_max = 1;
    std::uint32_t k_min = 0, k_max = 0;
    std::uint32_t s_min = 0, s_max = 0;
};

struct SweepResult {
    std::string csv;                     // header + one row per valid tuple
    std::vector<std::string> rejected;   // "params: precondition: detail" side channel
};

SweepResult run_sweep(const SweepSpec& spec, std::uint32_t parallelism = 1,
                      const RunLimits& limits = {});

// JSON shapes (schema documented in the README; key order is fixed).
Json field_json(const FieldCtx& ctx);
Json defining_set_json(const DefiningSet& ds);
Json summary_json(const CodeSummary& summary);
Json matrix_json(const GeneratorMatrix& gen);
std::string matrix_text(const GeneratorMatrix& gen);
Json verdict_json(const OptimalityVerdict& verdict);
Json structural_json(const StructuralReport& report);
Json verification_json(const VerificationReport& report);
Json construct_json(const ConstructResult& result, bool include_defining_set = false);
Json manifest_json(const ReproManifest& manifest);

std::string manifest_text(const ReproManifest& manifest);
std::string construct_text(const ConstructResult& result);
std::string construct_csv(const ConstructResult& result);

}  // namespace sfcodes
