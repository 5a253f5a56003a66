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

#include "sfcodes/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "sfcodes/report.hpp"

namespace sfcodes {

namespace {

std::string resolve_output_path(const std::string& path) {
    if (path.empty() || path.front() == '/') return path;
    const char* dir = std::getenv("SFCODES_OUTPUT_DIR");
    if (dir == nullptr || *dir == '\0') return path;
    std::string prefix(dir);
    if (prefix.back() != '/') prefix += '/';
    return prefix + path;
}

// Writes to --out when given (relative paths land under $SFCODES_OUTPUT_DIR),
// otherwise to the CLI stdout stream.
void emit(const std::string& payload, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << payload;
        return;
    }
    const std::string resolved = resolve_output_path(out_path);
    std::ofstream file(resolved, std::ios::binary);
    if (!file) throw PreconditionError("output-path", "cannot open " + resolved + " for writing");
    file << payload;
}

struct CommonOptions {
    std::string format = "json";
    std::string out_path;
    std::uint32_t parallelism = 1;
    RunLimits limits;
};

void attach_common(CLI::App* cmd, CommonOptions& opt, const std::string& default_format) {
    opt.format = default_format;
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_option("--out", opt.out_path, "output file (default: stdout)");
    cmd->add_option("--parallel", opt.parallelism, "worker threads for enumeration")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--max-messages", opt.limits.engine.max_messages,
                    "cap on the message space size")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--max-work", opt.limits.engine.max_work,
                    "cap on messages * length trace evaluations")
        ->check(CLI::PositiveNumber);
}

std::vector<std::string> split_csv_list(const std::string& csv) {
    std::vector<std::string> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"construction and verification of subfield-complement linear codes"};
    app.require_subcommand(1);

    // ---- construct / verify -------------------------------------------
    CommonOptions construct_opt, verify_opt;
    FamilySpec spec;
    std::string rs_csv, theta_csv;
    bool emit_defining_set = false;

    auto add_family_options = [&](CLI::App* cmd) {
        cmd->set_help_flag("--help", "print help");  // frees -h / --h
        cmd->add_option("--family", spec.family, "family id (1-4)")->required();
        cmd->add_flag("--special", spec.special, "family 1 variant removing only {0,1}");
        cmd->add_option("--q", spec.q, "base field size (prime power)")->required();
        cmd->add_option("--m", spec.m, "extension degree over GF(q)")->required();
        cmd->add_option("--k", spec.k, "second extension degree (family 4)");
        cmd->add_option("--r", rs_csv,
                        "subfield degree; family 1 accepts a comma list, e.g. 2,3");
        cmd->add_option("--s", spec.s, "second removed subfield degree (family 4)");
        cmd->add_option("--h", spec.h, "coset count for default thetas (families 2-3)");
        cmd->add_option("--thetas", theta_csv,
                        "coset representatives: 1, a, a^J or #index, comma separated");
    };
    auto finish_spec = [&]() {
        if (!rs_csv.empty()) {
            for (const std::string& token : split_csv_list(rs_csv))
                spec.rs.push_back(static_cast<std::uint32_t>(std::stoul(token)));
            if (spec.family == 2 || spec.family == 3 || spec.family == 4) {
                if (spec.rs.size() != 1)
                    throw PreconditionError("r-list", "families 2-4 take a single r");
                spec.r = spec.rs[0];
            }
        }
        spec.theta_exprs = split_csv_list(theta_csv);
        if ((spec.family == 2 || spec.family == 3) && spec.theta_exprs.empty() && spec.h == 0)
            throw PreconditionError("h-range", "give --h or an explicit --thetas list");
    };

    CLI::App* construct = app.add_subcommand("construct", "build one code and report everything");
    add_family_options(construct);
    construct->add_flag("--emit-defining-set", emit_defining_set,
                        "include the point list in JSON output");
    std::string matrix_out;
    construct->add_option("--matrix-out", matrix_out,
                          "also write the generator matrix as plain text rows");
    attach_common(construct, construct_opt, "json");

    CLI::App* verify = app.add_subcommand(
        "verify", "build one code and check the attached closed-form prediction");
    add_family_options(verify);
    attach_common(verify, verify_opt, "json");

    // ---- reproduce-paper ----------------------------------------------
    CommonOptions repro_opt;
    std::string only;
    CLI::App* repro = app.add_subcommand(
        "reproduce-paper", "re-run the built-in table of published reference constructions");
    repro->add_option("--only", only, "run only fixtures whose label contains this substring");
    attach_common(repro, repro_opt, "text");

    // ---- sweep ----------------------------------------------------------
    CommonOptions sweep_opt;
    SweepSpec sweep_spec;
    std::string rejects_path;
    CLI::App* sweep = app.add_subcommand("sweep", "tabulate a family over parameter ranges");
    sweep->add_option("--family", sweep_spec.family, "family id (1-4)")->required();
    sweep->add_option("--q", sweep_spec.q, "base field size")->required();
    sweep->add_option("--m-min", sweep_spec.m_min)->required();
    sweep->add_option("--m-max", sweep_spec.m_max)->required();
    sweep->add_option("--r-min", sweep_spec.r_min);
    sweep->add_option("--r-max", sweep_spec.r_max);
    sweep->add_option("--h-min", sweep_spec.h_min);
    sweep->add_option("--h-max", sweep_spec.h_max);
    sweep->add_option("--k-min", sweep_spec.k_min);
    sweep->add_option("--k-max", sweep_spec.k_max);
    sweep->add_option("--s-min", sweep_spec.s_min);
    sweep->add_option("--s-max", sweep_spec.s_max);
    sweep->add_option("--rejects", rejects_path,
                      "write rejected tuples here instead of stderr");
    attach_common(sweep, sweep_opt, "csv");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& perr) {
        if (perr.get_exit_code() == 0) {
            // --help and friends
            out << app.help();
            return 0;
        }
        err << "error: " << perr.what() << "\n";
        return 2;
    }

    try {
        if (construct->parsed() || verify->parsed()) {
            const CommonOptions& opt = construct->parsed() ? construct_opt : verify_opt;
            finish_spec();
            ConstructResult res = run_family(spec, opt.parallelism, opt.limits);
            if (verify->parsed()) {
                VerificationReport report = verify_prediction(res.summary, res.matrix,
                                                              res.build.prediction,
                                                              opt.limits.gates);
                if (opt.format == "json") {
                    emit(verification_json(report).dump(2) + "\n", opt.out_path, out);
                } else {
                    std::ostringstream os;
                    os << (report.pass ? "pass " : "FAIL ") << report.label << "\n";
                    for (const ClaimCheck& c : report.checks)
                        os << (c.pass ? "  [ok]   " : "  [FAIL] ") << c.claim << ": expected "
                           << c.expected << ", observed " << c.observed << "\n";
                    emit(os.str(), opt.out_path, out);
                }
                return report.pass ? 0 : 1;
            }
            if (!matrix_out.empty()) emit(matrix_text(res.matrix), matrix_out, out);
            if (opt.format == "json")
                emit(construct_json(res, emit_defining_set).dump(2) + "\n", opt.out_path, out);
            else if (opt.format == "csv")
                emit(construct_csv(res), opt.out_path, out);
            else
                emit(construct_text(res), opt.out_path, out);
            return 0;
        }

        if (repro->parsed()) {
            ReproManifest manifest =
                reproduce_references(only, repro_opt.parallelism, repro_opt.limits);
            if (repro_opt.format == "json")
                emit(manifest_json(manifest).dump(2) + "\n", repro_opt.out_path, out);
            else
                emit(manifest_text(manifest), repro_opt.out_path, out);
            return manifest.all_pass ? 0 : 1;
        }

        if (sweep->parsed()) {
            SweepResult res = run_sweep(sweep_spec, sweep_opt.parallelism, sweep_opt.limits);
            emit(res.csv, sweep_opt.out_path, out);
            if (rejects_path.empty()) {
                for (const std::string& line : res.rejected) err << "rejected: " << line << "\n";
            } else {
                std::ostringstream os;
                for (const std::string& line : res.rejected) os << line << "\n";
                emit(os.str(), rejects_path, out);
            }
            return 0;
        }
    } catch (const PreconditionError& perr) {
        err << "invalid configuration: " << perr.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace sfcodes
