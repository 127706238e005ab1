// Copyright 2026 The qcptp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// qcptp command-line tool; talks to the library only through qcptp.h.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qcptp/qcptp.h"

namespace {

constexpr int kExitUsage = 2;

struct Globals {
    std::string config;
    double tol = 1e-10;
    std::string convention = "appendix-b";
    int jobs = 1;
    std::string out;
    bool no_meta = false;
};

int report_error(const std::string& context) {
    std::cerr << "qcptp " << context << ": " << qcptp_last_error() << '\n';
    return kExitUsage;
}

// Writes the buffer to --out or stdout and frees it.
int write_out(qcptp_buffer* buf, const Globals& g) {
    const std::string data(qcptp_buffer_data(buf), qcptp_buffer_size(buf));
    qcptp_buffer_free(buf);
    if (g.out.empty() || g.out == "-") {
        std::cout << data;
        return std::cout.good() ? 0 : kExitUsage;
    }
    std::ofstream f(g.out, std::ios::binary);
    if (!f || !(f << data) || !f.flush()) {
        std::cerr << "qcptp: cannot write '" << g.out << "'\n";
        return kExitUsage;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Complete-positivity analysis of quadratic quantum master equations"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--config", g.config, "SystemSpec JSON file")->check(CLI::ExistingFile);
    app.add_option("--tol", g.tol, "relative PSD tolerance")->check(CLI::PositiveNumber);
    app.add_option("--convention", g.convention, "sign of the Wick exponent")
        ->check(CLI::IsMember({"appendix-b", "main-text"}));
    app.add_option("--jobs", g.jobs, "worker threads for scans")->check(CLI::Range(1, 1024));
    app.add_option("--out", g.out, "output file (default stdout)");
    app.add_flag("--no-meta", g.no_meta, "omit the generation timestamp");

    auto* check = app.add_subcommand("check", "CPTP verdict; exit 0 CPTP, 1 not CPTP, 3 marginal");
    auto* scan = app.add_subcommand("scan", "eigenvalues of Xi_H over a (beta1, beta2) grid");
    std::string grid;
    scan->add_option("--grid", grid, "b1min:b1max:count[,b2min:b2max:count|,locked]")->required();
    auto* evolve = app.add_subcommand("evolve", "Gaussian moment trajectory as CSV");
    double t_end = 20.0;
    int steps = 200, substeps = 10;
    evolve->add_option("--t-end", t_end, "final time")->check(CLI::PositiveNumber);
    evolve->add_option("--steps", steps, "output intervals")->check(CLI::PositiveNumber);
    evolve->add_option("--substeps", substeps, "RK4 steps per interval")->check(CLI::PositiveNumber);
    auto* oracle = app.add_subcommand("oracle", "truncated Fock-space density-matrix run");
    std::string source = "qtcl";
    int truncation = 24, osteps = 50;
    double scale = 1.0, ot_end = 5.0;
    oracle->add_option("--source", source, "generator build")->check(CLI::IsMember({"direct", "qtcl", "high-temp"}));
    oracle->add_option("--truncation", truncation, "Fock levels per mode")->check(CLI::Range(2, 64));
    oracle->add_option("--scale", scale, "basis scale s")->check(CLI::PositiveNumber);
    oracle->add_option("--t-end", ot_end, "final time")->check(CLI::PositiveNumber);
    oracle->add_option("--steps", osteps, "output intervals")->check(CLI::PositiveNumber);
    auto* lindblad = app.add_subcommand("lindblad", "Lindblad vectors and effective Hamiltonian");
    auto* balance = app.add_subcommand("balance", "detailed-balance residuals");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }
    if (g.config.empty()) {
        std::cerr << "qcptp: --config is required\n";
        return kExitUsage;
    }

    qcptp_system* sys = nullptr;
    if (qcptp_system_from_file(g.config.c_str(), &sys) != QCPTP_OK) return report_error("config");

    qcptp_options opt;
    qcptp_default_options(&opt);
    opt.tol = g.tol;
    opt.convention = g.convention == "main-text" ? QCPTP_MAIN_TEXT : QCPTP_APPENDIX_B;
    opt.timestamp = g.no_meta ? 0 : 1;

    qcptp_buffer* buf = nullptr;
    qcptp_status st = QCPTP_OK;
    int rc = 0;
    std::string name;
    if (*check) {
        name = "check";
        opt.command = "check";
        int verdict = 0;
        st = qcptp_check_json(sys, &opt, &verdict, &buf);
        if (st == QCPTP_OK) {
            rc = write_out(buf, g);
            if (rc == 0) rc = verdict;
        }
    } else if (*scan) {
        name = "scan";
        opt.command = "scan";
        st = qcptp_scan_csv(sys, grid.c_str(), g.jobs, &opt, &buf);
        if (st == QCPTP_OK) rc = write_out(buf, g);
    } else if (*evolve) {
        name = "evolve";
        opt.command = "evolve";
        st = qcptp_evolve_csv(sys, t_end, steps, substeps, &opt, &buf);
        if (st == QCPTP_OK) rc = write_out(buf, g);
    } else if (*oracle) {
        name = "oracle";
        opt.command = "oracle";
        qcptp_oracle_options oo{source.c_str(), truncation, scale, ot_end, osteps};
        st = qcptp_oracle_json(sys, &oo, &opt, &buf);
        if (st == QCPTP_OK) rc = write_out(buf, g);
    } else if (*lindblad) {
        name = "lindblad";
        opt.command = "lindblad";
        st = qcptp_lindblad_json(sys, &opt, &buf);
        if (st == QCPTP_OK) rc = write_out(buf, g);
    } else if (*balance) {
        name = "balance";
        opt.command = "balance";
        st = qcptp_balance_json(sys, &opt, &buf);
        if (st == QCPTP_OK) rc = write_out(buf, g);
    }
    qcptp_system_free(sys);
    if (st != QCPTP_OK) return report_error(name);
    return rc;
}
