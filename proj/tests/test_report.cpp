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
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "sfcodes/cli.hpp"
#include "sfcodes/report.hpp"

using namespace sfcodes;

TEST_CASE("the reference table lists all seventeen constructions") {
    CHECK(reference_fixtures().size() == 17);
}

TEST_CASE("a quick fixture passes end to end") {
    const Fixture* fx = nullptr;
    for (const Fixture& f : reference_fixtures())
        if (f.label.find("[56,6,28]") != std::string::npos) fx = &f;
    REQUIRE(fx != nullptr);
    FixtureResult res = run_fixture(*fx);
    CHECK(res.pass);
    CHECK(res.observed_we == "1 + 56z^28 + 7z^32");
    CHECK(res.verification.pass);
}

TEST_CASE("tampered expectations are detected and fail the manifest") {
    Fixture fx;
    for (const Fixture& f : reference_fixtures())
        if (f.label.find("[63,4,42]") != std::string::npos) fx = f;
    REQUIRE(fx.n == 63);
    fx.d = 43;  // tamper
    FixtureResult res = run_fixture(fx);
    CHECK_FALSE(res.pass);
    bool found = false;
    for (const ClaimCheck& c : res.expectation_checks)
        if (!c.pass && c.claim == "predicted minimum distance") found = true;
    CHECK(found);
}

TEST_CASE("--only filter selects exactly the matching fixtures") {
    ReproManifest manifest = reproduce_references("family3 h=3");
    CHECK(manifest.results.size() == 2);
    for (const FixtureResult& r : manifest.results)
        CHECK(r.label.find("family3 h=3") != std::string::npos);
}

TEST_CASE("theta expressions resolve against the canonical field") {
    auto f64 = get_field(2, 6);
    auto ids = resolve_theta_exprs(*f64, {"1", "a", "a^2", "1+a", "#9"});
    CHECK(ids[0] == 1);
    CHECK(ids[1] == f64->generator_index());
    CHECK(ids[2] == f64->mul_raw(f64->generator_index(), f64->generator_index()));
    CHECK(ids[3] == f64->add_raw(1, f64->generator_index()));
    CHECK(ids[4] == 9);
    CHECK_THROWS_WITH_AS(resolve_theta_exprs(*f64, {"b^2"}), doctest::Contains("theta-syntax"),
                         PreconditionError);
    CHECK_THROWS_WITH_AS(resolve_theta_exprs(*f64, {"#64"}), doctest::Contains("element-range"),
                         PreconditionError);
}

TEST_CASE("construct JSON carries the documented schema") {
    FamilySpec spec;
    spec.family = 1;
    spec.q = 2;
    spec.m = 4;
    spec.rs = {2};
    ConstructResult res = run_family(spec);
    Json j = construct_json(res, true);
    CHECK(j["schema"] == "sfcodes.construct.v1");
    CHECK(j["code_summary"]["schema"] == "sfcodes.code_summary.v1");
    CHECK(j["code_summary"]["n"] == 12);
    CHECK(j["code_summary"]["d"] == 6);
    CHECK(j["generator_matrix"]["rows"] == 4);
    CHECK(j["optimality"].contains("griesmer"));
    CHECK(j["optimality"]["certificates"].contains("g_k_d"));
    CHECK(j["structural"].contains("minimal"));
    CHECK(j["defining_set"]["points"].size() == 12);
    CHECK(j["defining_set"]["field_x"]["modulus"] == Json::array({1, 1, 0, 0, 1}));

    // byte-identical across repeated runs and parallelism degrees
    ConstructResult res2 = run_family(spec, 3);
    CHECK(construct_json(res, true).dump(2) == construct_json(res2, true).dump(2));
}

TEST_CASE("sweep emits verified rows and routes invalid tuples aside") {
    SweepSpec sw;
    sw.family = 2;
    sw.q = 2;
    sw.m_min = 4;
    sw.m_max = 8;
    sw.r_min = 1;
    sw.r_max = 1;
    sw.h_min = 2;
    sw.h_max = 2;
    SweepResult res = run_sweep(sw);
    std::istringstream lines(res.csv);
    std::string header;
    std::getline(lines, header);
    CHECK(header ==
          "family,q,m,k,r,s,h,params,n,dim,d,griesmer,near_griesmer,distance_optimal,"
          "almost_distance_optimal");
    std::size_t rows = 0;
    std::string line;
    while (std::getline(lines, line)) {
        if (line.empty()) continue;
        ++rows;
        // distance_optimal is the 14th column; r = 1 makes every row true.
        // The params field is quoted and may contain commas.
        std::size_t commas = 0, start = 0;
        bool quoted = false;
        for (std::size_t i = 0; i < line.size(); ++i) {
            if (line[i] == '"') quoted = !quoted;
            if (quoted || line[i] != ',') continue;
            ++commas;
            if (commas == 13) start = i + 1;
            if (commas == 14) {
                CHECK(line.substr(start, i - start) == "true");
                break;
            }
        }
    }
    CHECK(rows == 5);  // m = 4..8

    // empty range: header only
    SweepSpec empty = sw;
    empty.m_min = 1;
    empty.m_max = 0;
    SweepResult none = run_sweep(empty);
    CHECK(none.csv == std::string(header) + "\n");
    CHECK(none.rejected.empty());

    // invalid tuples land in the side channel with the precondition name
    SweepSpec bad = sw;
    bad.m_min = 7;
    bad.m_max = 7;
    bad.r_min = 2;
    bad.r_max = 2;
    SweepResult rej = run_sweep(bad);
    REQUIRE(rej.rejected.size() == 1);
    CHECK(rej.rejected[0].find("divisibility") != std::string::npos);
}

TEST_CASE("family 1 sweep enumerates subset combinations") {
    SweepSpec sw;
    sw.family = 1;
    sw.q = 2;
    sw.m_min = 4;
    sw.m_max = 6;
    sw.r_min = 1;
    sw.r_max = 3;
    sw.h_min = 1;
    sw.h_max = 2;
    SweepResult res = run_sweep(sw);
    // valid tuples: h=1 gives (4,{1}), (4,{2}), (5,{1}), (6,{1}), (6,{2}),
    // (6,{3}); h=2 only (6,{2,3}) survives the chain-divisibility rule
    std::size_t rows = 0;
    std::istringstream lines(res.csv);
    std::string line;
    std::getline(lines, line);  // header
    while (std::getline(lines, line))
        if (!line.empty()) ++rows;
    CHECK(rows == 7);
    CHECK(res.csv.find("family1 q=2 m=6 r={2,3}") != std::string::npos);
    bool chain_rejected = false;
    for (const std::string& r : res.rejected)
        if (r.find("chain-divisibility") != std::string::npos) chain_rejected = true;
    CHECK(chain_rejected);
}

TEST_CASE("family 4 sweep covers both zero and positive removed degrees") {
    SweepSpec sw;
    sw.family = 4;
    sw.q = 2;
    sw.m_min = 3;
    sw.m_max = 4;
    sw.k_min = 2;
    sw.k_max = 3;
    sw.r_min = 0;
    sw.r_max = 1;
    sw.s_min = 0;
    sw.s_max = 1;
    SweepResult res = run_sweep(sw);
    std::size_t rows = 0;
    std::istringstream lines(res.csv);
    std::string line;
    std::getline(lines, line);
    while (std::getline(lines, line))
        if (!line.empty()) ++rows;
    CHECK(rows == 8);  // 4 punctured-zero tuples + 4 with r = s = 1
    CHECK(res.csv.find("family4 q=2 m=3 k=2 r=0 s=0") != std::string::npos);
    CHECK(res.csv.find("family4 q=2 m=4 k=3 r=1 s=1") != std::string::npos);
    bool mixed_rejected = false;
    for (const std::string& r : res.rejected)
        if (r.find("zero-degrees") != std::string::npos) mixed_rejected = true;
    CHECK(mixed_rejected);
}

TEST_CASE("family 3 sweep covers the documented big row") {
    SweepSpec sw;
    sw.family = 3;
    sw.q = 2;
    sw.m_min = 6;
    sw.m_max = 12;
    sw.r_min = 1;
    sw.r_max = 3;
    sw.h_min = 1;
    sw.h_max = 3;
    SweepResult res = run_sweep(sw, 4);
    CHECK(res.csv.find("family3 q=2 m=12 r=3") != std::string::npos);
    // spot-check one row against a direct construction
    auto [set, pred] = family3_build(2, 12, 3, 2);
    CodeSummary s = enumerate_code(set, {}, 4);
    CHECK(res.csv.find("," + std::to_string(s.n) + ",12," + std::to_string(s.d)) !=
          std::string::npos);
}

TEST_CASE("cli construct, verify, reproduce and error paths") {
    {
        std::ostringstream out, err;
        int rc = run_cli({"construct", "--family", "1", "--q", "3", "--m", "6", "--r", "2",
                          "--format", "text"},
                         out, err);
        CHECK(rc == 0);
        CHECK(out.str().find("[720,6,480]") != std::string::npos);
        CHECK(out.str().find("1 + 648z^480 + 80z^486") != std::string::npos);
    }
    {
        std::ostringstream out, err;
        int rc = run_cli({"construct", "--family", "3", "--q", "2", "--m", "6", "--r", "2",
                          "--thetas", "1,a", "--format", "json"},
                         out, err);
        CHECK(rc == 0);
        Json j = Json::parse(out.str());
        CHECK(j["code_summary"]["n"] == 57);
        CHECK(j["code_summary"]["d"] == 28);
    }
    {
        std::ostringstream out, err;
        int rc = run_cli({"construct", "--family", "1", "--q", "3", "--m", "6", "--r", "2"},
                         out, err);
        CHECK(rc == 0);
        Json j = Json::parse(out.str());
        CHECK(j["code_summary"]["n"] == 720);
        CHECK(j["code_summary"]["d"] == 480);
    }
    {
        std::ostringstream out, err;
        int rc = run_cli({"construct", "--family", "2", "--q", "2", "--m", "6", "--r", "2",
                          "--h", "1", "--format", "csv"},
                         out, err);
        CHECK(rc == 0);
        CHECK(out.str().find("family,q,m,") == 0);
        CHECK(out.str().find(",56,6,28,true,") != std::string::npos);
    }
    {
        std::ostringstream out, err;
        int rc = run_cli({"construct", "--family", "1", "--q", "2", "--m", "4", "--r", "3"},
                         out, err);
        CHECK(rc == 2);
        CHECK(err.str().find("divisibility") != std::string::npos);
    }
    {
        std::ostringstream out, err;
        int rc = run_cli({"verify", "--family", "2", "--q", "3", "--m", "4", "--r", "2", "--h",
                          "1", "--format", "text"},
                         out, err);
        CHECK(rc == 0);
        CHECK(out.str().find("pass") != std::string::npos);
    }
    {
        std::ostringstream out, err;
        int rc = run_cli({"reproduce-paper", "--only", "[64,4,42]", "--format", "json"}, out, err);
        CHECK(rc == 0);
        Json j = Json::parse(out.str());
        CHECK(j["total"] == 1);
        CHECK(j["all_pass"] == true);
    }
    {
        std::ostringstream out, err;
        int rc = run_cli({"sweep", "--family", "2", "--q", "2", "--m-min", "4", "--m-max", "6",
                          "--r-min", "1", "--r-max", "2", "--h-min", "1", "--h-max", "1"},
                         out, err);
        CHECK(rc == 0);
        CHECK(out.str().find("family,q,m,") == 0);
    }
    {
        std::ostringstream out, err;
        int rc = run_cli({"bogus"}, out, err);
        CHECK(rc == 2);
    }
}

TEST_CASE("matrix text export and the output directory variable") {
    {
        FamilySpec spec;
        spec.family = 1;
        spec.q = 2;
        spec.m = 4;
        spec.rs = {2};
        ConstructResult res = run_family(spec);
        const std::string text = matrix_text(res.matrix);
        std::istringstream lines(text);
        std::string line;
        std::size_t rows = 0;
        while (std::getline(lines, line)) {
            ++rows;
            CHECK(std::count(line.begin(), line.end(), ' ') == 11);  // 12 columns
        }
        CHECK(rows == 4);
    }
    {
        setenv("SFCODES_OUTPUT_DIR", "/tmp/sfcodes_test_out", 1);
        REQUIRE(std::system("rm -rf /tmp/sfcodes_test_out && mkdir -p /tmp/sfcodes_test_out") == 0);
        std::ostringstream out, err;
        int rc = run_cli({"construct", "--family", "1", "--q", "2", "--m", "4", "--r", "2",
                          "--out", "summary.json", "--matrix-out", "matrix.txt"},
                         out, err);
        CHECK(rc == 0);
        std::ifstream summary("/tmp/sfcodes_test_out/summary.json");
        CHECK(summary.good());
        std::ifstream matrix("/tmp/sfcodes_test_out/matrix.txt");
        CHECK(matrix.good());
        unsetenv("SFCODES_OUTPUT_DIR");
    }
}

TEST_CASE("manifest JSON is deterministic across parallelism degrees") {
    ReproManifest a = reproduce_references("family2 h=1", 1);
    ReproManifest b = reproduce_references("family2 h=1", 4);
    CHECK(manifest_json(a).dump(2) == manifest_json(b).dump(2));
}
