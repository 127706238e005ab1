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

// report.hpp: CSV/JSON renderings behind the command-line subcommands,
// and the parallel (beta1, beta2) region scan.

#pragma once

#include <string>
#include <vector>

#include "qcptp/config.hpp"
#include "qcptp/cptp.hpp"

namespace qcptp {

struct RunOptions {
    double tol = 1e-10;
    Convention convention = Convention::AppendixB;
    bool timestamp = true;  // off with --no-meta
    std::string command;
};

struct Axis {
    double min = 0.0, max = 0.0;
    int count = 0;
    double at(int k) const;
};

struct ScanGrid {
    Axis beta1;
    Axis beta2;
    bool locked = false;  // beta2 = beta1
};

// "b1min:b1max:count[,b2min:b2max:count|,locked]"
ScanGrid parse_grid(const std::string& s);

struct ScanRow {
    double beta1 = 0.0, beta2 = 0.0;
    RVec eigenvalues;
    Verdict verdict = Verdict::Marginal;
};

// Row-major (beta1 outer) regardless of jobs.
std::vector<ScanRow> scan(const SystemSpec& spec, const ScanGrid& grid, double tol, Convention conv, int jobs);

std::string format_double(double v);

std::string render_check(const Config& c, const RunOptions& o, Verdict& verdict);
std::string render_scan(const Config& c, const ScanGrid& g, const RunOptions& o, int jobs);

struct EvolveRequest {
    double t_end = 20.0;
    int steps = 200;
    int substeps = 10;
};
std::string render_evolve(const Config& c, const EvolveRequest& r, const RunOptions& o);

struct OracleRequest {
    std::string source = "qtcl";  // direct | qtcl | high-temp
    int truncation = 24;
    double scale = 1.0;
    double t_end = 5.0;
    int steps = 50;
};
std::string render_oracle(const Config& c, const OracleRequest& r, const RunOptions& o);

std::string render_lindblad(const Config& c, const RunOptions& o);
std::string render_balance(const Config& c, const RunOptions& o);

} // namespace qcptp
