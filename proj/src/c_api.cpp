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

#include "qcptp/qcptp.h"

#include <string>

#include "qcptp/report.hpp"

struct qcptp_system {
    qcptp::Config config;
};

struct qcptp_buffer {
    std::string data;
};

namespace {

thread_local std::string g_last_error;

qcptp_status fail(qcptp_status s, const std::string& msg) {
    g_last_error = msg;
    return s;
}

template <class F>
qcptp_status guarded(F&& f) {
    try {
        g_last_error.clear();
        f();
        return QCPTP_OK;
    } catch (const qcptp::Error& e) {
        return fail(static_cast<qcptp_status>(static_cast<int>(e.code())), e.what());
    } catch (const std::exception& e) {
        return fail(QCPTP_E_INTERNAL, e.what());
    } catch (...) {
        return fail(QCPTP_E_INTERNAL, "unknown failure");
    }
}

qcptp::RunOptions run_options(const qcptp_options* opt) {
    qcptp::RunOptions o;
    if (!opt) return o;
    o.tol = opt->tol;
    o.convention = opt->convention == QCPTP_MAIN_TEXT ? qcptp::Convention::MainText : qcptp::Convention::AppendixB;
    o.timestamp = opt->timestamp != 0;
    if (opt->command) o.command = opt->command;
    if (!(o.tol > 0.0)) throw qcptp::Error(qcptp::ErrorCode::InvalidInput, "tol must be positive");
    return o;
}

int verdict_code(qcptp::Verdict v) {
    switch (v) {
    case qcptp::Verdict::CPTP: return QCPTP_CPTP;
    case qcptp::Verdict::NotCPTP: return QCPTP_NOT_CPTP;
    case qcptp::Verdict::Marginal: break;
    }
    return QCPTP_MARGINAL;
}

qcptp_status emit(std::string s, qcptp_buffer** out) {
    *out = new qcptp_buffer{std::move(s)};
    return QCPTP_OK;
}

} // namespace

extern "C" {

const char* qcptp_version(void) { return "0.1.0"; }

const char* qcptp_last_error(void) { return g_last_error.c_str(); }

void qcptp_default_options(qcptp_options* opt) {
    if (!opt) return;
    opt->tol = 1e-10;
    opt->convention = QCPTP_APPENDIX_B;
    opt->timestamp = 1;
    opt->command = nullptr;
}

qcptp_status qcptp_system_from_json(const char* text, size_t len, qcptp_system** out) {
    if (!text || !out) return fail(QCPTP_E_NULL_ARGUMENT, "null argument");
    return guarded([&] { *out = new qcptp_system{qcptp::parse_config(std::string(text, len))}; });
}

qcptp_status qcptp_system_from_file(const char* path, qcptp_system** out) {
    if (!path || !out) return fail(QCPTP_E_NULL_ARGUMENT, "null argument");
    return guarded([&] { *out = new qcptp_system{qcptp::load_config(path)}; });
}

void qcptp_system_free(qcptp_system* sys) { delete sys; }

int qcptp_system_dof(const qcptp_system* sys) { return sys ? sys->config.spec.n() : 0; }

qcptp_status qcptp_check(const qcptp_system* sys, const qcptp_options* opt, int* verdict, double* eigenvalues,
                         double* xi_a_norm) {
    if (!sys) return fail(QCPTP_E_NULL_ARGUMENT, "null system");
    return guarded([&] {
        const auto o = run_options(opt);
        const auto d = qcptp::decompose(qcptp::xi_matrix(sys->config.spec, o.convention), o.tol);
        if (verdict) *verdict = verdict_code(d.verdict);
        if (eigenvalues)
            for (Eigen::Index k = 0; k < d.eigenvalues.size(); ++k) eigenvalues[k] = d.eigenvalues(k);
        if (xi_a_norm) *xi_a_norm = d.xi_a.norm();
    });
}

qcptp_status qcptp_check_json(const qcptp_system* sys, const qcptp_options* opt, int* verdict, qcptp_buffer** out) {
    if (!sys || !out) return fail(QCPTP_E_NULL_ARGUMENT, "null argument");
    return guarded([&] {
        qcptp::Verdict v{};
        emit(qcptp::render_check(sys->config, run_options(opt), v), out);
        if (verdict) *verdict = verdict_code(v);
    });
}

qcptp_status qcptp_scan_csv(const qcptp_system* sys, const char* grid, int jobs, const qcptp_options* opt,
                            qcptp_buffer** out) {
    if (!sys || !grid || !out) return fail(QCPTP_E_NULL_ARGUMENT, "null argument");
    return guarded([&] {
        emit(qcptp::render_scan(sys->config, qcptp::parse_grid(grid), run_options(opt), jobs), out);
    });
}

qcptp_status qcptp_evolve_csv(const qcptp_system* sys, double t_end, int steps, int substeps, const qcptp_options* opt,
                              qcptp_buffer** out) {
    if (!sys || !out) return fail(QCPTP_E_NULL_ARGUMENT, "null argument");
    return guarded([&] {
        qcptp::EvolveRequest r{t_end, steps, substeps};
        emit(qcptp::render_evolve(sys->config, r, run_options(opt)), out);
    });
}

qcptp_status qcptp_oracle_json(const qcptp_system* sys, const qcptp_oracle_options* oracle, const qcptp_options* opt,
                               qcptp_buffer** out) {
    if (!sys || !oracle || !out) return fail(QCPTP_E_NULL_ARGUMENT, "null argument");
    return guarded([&] {
        qcptp::OracleRequest r;
        if (oracle->source) r.source = oracle->source;
        r.truncation = oracle->truncation;
        r.scale = oracle->scale;
        r.t_end = oracle->t_end;
        r.steps = oracle->steps;
        emit(qcptp::render_oracle(sys->config, r, run_options(opt)), out);
    });
}

qcptp_status qcptp_lindblad_json(const qcptp_system* sys, const qcptp_options* opt, qcptp_buffer** out) {
    if (!sys || !out) return fail(QCPTP_E_NULL_ARGUMENT, "null argument");
    return guarded([&] { emit(qcptp::render_lindblad(sys->config, run_options(opt)), out); });
}

qcptp_status qcptp_balance_json(const qcptp_system* sys, const qcptp_options* opt, qcptp_buffer** out) {
    if (!sys || !out) return fail(QCPTP_E_NULL_ARGUMENT, "null argument");
    return guarded([&] { emit(qcptp::render_balance(sys->config, run_options(opt)), out); });
}

const char* qcptp_buffer_data(const qcptp_buffer* buf) { return buf ? buf->data.c_str() : ""; }

size_t qcptp_buffer_size(const qcptp_buffer* buf) { return buf ? buf->data.size() : 0; }

void qcptp_buffer_free(qcptp_buffer* buf) { delete buf; }

} // extern "C"
