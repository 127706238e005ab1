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

#include "qcptp/report.hpp"

#include <atomic>
#include <mutex>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "qcptp/detailed_balance.hpp"
#include "qcptp/dynamics.hpp"
#include "qcptp/fock_oracle.hpp"

namespace qcptp {

using nlohmann::json;

namespace {

constexpr const char* kVersion = "0.1.0";

std::string utc_now() {
    const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string csv_header(const Config& c, const RunOptions& o) {
    std::ostringstream s;
    s << "# qcptp " << kVersion << ' ' << o.command << '\n';
    s << "# convention=" << to_string(o.convention) << " tol=" << format_double(o.tol) << '\n';
    s << "# config=" << c.canonical << '\n';
    if (o.timestamp) s << "# generated=" << utc_now() << '\n';
    return s.str();
}

json meta(const Config& c, const RunOptions& o) {
    json m;
    m["command"] = o.command;
    m["version"] = kVersion;
    m["convention"] = std::string(to_string(o.convention));
    m["tol"] = o.tol;
    m["config"] = json::parse(c.canonical);
    if (o.timestamp) m["generated"] = utc_now();
    return m;
}

json real_vec(const RVec& v) { return std::vector<double>(v.data(), v.data() + v.size()); }

json real_mat(const RMat& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) rows.push_back(real_vec(m.row(i).transpose()));
    return rows;
}

json complex_mat(const CMat& m) { return {{"re", real_mat(m.real())}, {"im", real_mat(m.imag())}}; }
json complex_vec(const CVec& v) { return {{"re", real_vec(v.real())}, {"im", real_vec(v.imag())}}; }

std::string dump(const json& j) { return j.dump(2) + "\n"; }

} // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double Axis::at(int k) const { return count == 1 ? min : min + (max - min) * k / (count - 1); }

ScanGrid parse_grid(const std::string& s) {
    auto axis = [&](const std::string& a) {
        Axis ax;
        char c1 = 0, c2 = 0;
        std::istringstream in(a);
        if (!(in >> ax.min >> c1 >> ax.max >> c2 >> ax.count) || c1 != ':' || c2 != ':' || !(in >> std::ws).eof()) {
            throw Error(ErrorCode::InvalidInput, "grid axis '" + a + "' is not min:max:count");
        }
        if (ax.count < 2 || !(ax.min > 0.0) || !(ax.max >= ax.min) || !std::isfinite(ax.max)) {
            throw Error(ErrorCode::InvalidInput, "grid axis '" + a + "' needs count >= 2 and 0 < min <= max");
        }
        return ax;
    };
    ScanGrid g;
    const auto comma = s.find(',');
    g.beta1 = axis(s.substr(0, comma));
    if (comma == std::string::npos || s.substr(comma + 1) == "locked") {
        g.locked = true;
        g.beta2 = g.beta1;
    } else {
        g.beta2 = axis(s.substr(comma + 1));
    }
    return g;
}

std::vector<ScanRow> scan(const SystemSpec& spec, const ScanGrid& grid, double tol, Convention conv, int jobs) {
    const bool locked = grid.locked || spec.n() == 1;
    const int n1 = grid.beta1.count;
    const int n2 = locked ? 1 : grid.beta2.count;
    const size_t total = static_cast<size_t>(n1) * static_cast<size_t>(n2);
    std::vector<ScanRow> rows(total);
    std::atomic<size_t> next{0};
    std::atomic<bool> failed{false};
    std::string failure;
    std::mutex fail_mu;
    auto worker = [&] {
        for (size_t k = next++; k < total && !failed; k = next++) {
            try {
                ScanRow& r = rows[k];
                r.beta1 = grid.beta1.at(static_cast<int>(k) / n2);
                r.beta2 = locked ? r.beta1 : grid.beta2.at(static_cast<int>(k) % n2);
                std::vector<double> b(static_cast<size_t>(spec.n()), r.beta2);
                b[0] = r.beta1;
                const XiDecomposition d = decompose(xi_matrix(spec.with_betas(b), conv), tol);
                r.eigenvalues = d.eigenvalues;
                r.verdict = d.verdict;
            } catch (const std::exception& e) {
                std::lock_guard lock(fail_mu);
                if (!failed.exchange(true)) failure = e.what();
            }
        }
    };
    jobs = std::max(1, std::min<int>(jobs, static_cast<int>(total)));
    std::vector<std::thread> pool;
    for (int i = 1; i < jobs; ++i) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    if (failed) throw Error(ErrorCode::InvalidInput, "scan point failed: " + failure);
    return rows;
}

std::string render_check(const Config& c, const RunOptions& o, Verdict& verdict) {
    const XiDecomposition d = decompose(xi_matrix(c.spec, o.convention), o.tol);
    verdict = d.verdict;
    json j;
    j["verdict"] = std::string(to_string(d.verdict));
    j["eigenvalues"] = real_vec(d.eigenvalues);
    j["xi_h"] = complex_mat(d.xi_h);
    j["xi_a_norm"] = d.xi_a.norm();
    j["threshold"] = d.threshold;
    j["meta"] = meta(c, o);
    return dump(j);
}

std::string render_scan(const Config& c, const ScanGrid& g, const RunOptions& o, int jobs) {
    const auto rows = scan(c.spec, g, o.tol, o.convention, jobs);
    std::string out = csv_header(c, o);
    out += "beta1,beta2";
    for (int k = 1; k <= c.spec.dim(); ++k) out += ",eig_" + std::to_string(k);
    out += ",verdict\n";
    for (const auto& r : rows) {
        out += format_double(r.beta1) + ',' + format_double(r.beta2);
        for (Eigen::Index k = 0; k < r.eigenvalues.size(); ++k) out += ',' + format_double(r.eigenvalues(k));
        out += ',';
        out += to_string(r.verdict);
        out += '\n';
    }
    return out;
}

std::string render_evolve(const Config& c, const EvolveRequest& r, const RunOptions& o) {
    if (r.steps < 1 || !(r.t_end > 0.0)) throw Error(ErrorCode::InvalidInput, "evolve needs steps >= 1 and t_end > 0");
    const SystemSpec& spec = c.spec;
    const int dim = spec.dim();
    const XiDecomposition d = decompose(xi_matrix(spec, o.convention), o.tol);
    const MomentGenerator g = moment_generator(spec, d);
    MomentState init;
    init.mean = c.initial ? c.initial->mean : RVec(RVec::Zero(dim));
    init.cov = c.initial ? c.initial->cov : RMat(0.5 * spec.hbar() * RMat::Identity(dim, dim));
    std::vector<double> t(static_cast<size_t>(r.steps) + 1);
    for (int k = 0; k <= r.steps; ++k) t[static_cast<size_t>(k)] = r.t_end * k / r.steps;
    EvolveOptions opt;
    opt.substeps = r.substeps;
    const Trajectory tr = evolve_moments(g, init, t, opt);

    std::string out = csv_header(c, o);
    out += "# verdict=" + std::string(to_string(d.verdict)) + " rk4_error_estimate=" + format_double(tr.error_estimate) + '\n';
    out += "t";
    for (int i = 1; i <= dim; ++i) out += ",mean_" + std::to_string(i);
    for (int i = 1; i <= dim; ++i)
        for (int j = i; j <= dim; ++j) out += ",cov_" + std::to_string(i) + '_' + std::to_string(j);
    out += ",physical\n";
    for (const auto& s : tr.states) {
        out += format_double(s.time);
        for (int i = 0; i < dim; ++i) out += ',' + format_double(s.mean(i));
        for (int i = 0; i < dim; ++i)
            for (int j = i; j < dim; ++j) out += ',' + format_double(s.cov(i, j));
        out += s.physical ? ",1\n" : ",0\n";
    }
    return out;
}

std::string render_oracle(const Config& c, const OracleRequest& r, const RunOptions& o) {
    if (r.steps < 1 || !(r.t_end > 0.0)) throw Error(ErrorCode::InvalidInput, "oracle needs steps >= 1 and t_end > 0");
    const SystemSpec& spec = c.spec;
    const FockRep f = build_fock(spec, r.truncation, std::vector<double>(static_cast<size_t>(spec.n()), r.scale));
    Superoperator g;
    if (r.source == "direct") {
        g = generator_direct(f, spec);
    } else if (r.source == "qtcl") {
        g = generator_qtcl(f, xi_matrix(spec, o.convention), spec.xi());
    } else if (r.source == "high-temp") {
        g = generator_high_temp(f, spec);
    } else {
        throw Error(ErrorCode::InvalidInput, "unknown oracle source '" + r.source + "'");
    }
    std::vector<cplx> alphas;
    for (int m = 0; m < spec.n(); ++m) {
        const double q = c.initial ? c.initial->mean(m) : 0.0;
        const double p = c.initial ? c.initial->mean(m + spec.n()) : 0.0;
        alphas.push_back(coherent_amplitude(f, m, q, p));
    }
    std::vector<double> t(static_cast<size_t>(r.steps) + 1);
    for (int k = 0; k <= r.steps; ++k) t[static_cast<size_t>(k)] = r.t_end * k / r.steps;
    DensityOptions opt;
    opt.keep_rho = false;
    const auto samples = evolve_density(f, g, coherent_state(f, alphas), t, opt);

    json j;
    j["source"] = r.source;
    j["N"] = r.truncation;
    j["scale"] = r.scale;
    double drift = 0.0, lo = std::numeric_limits<double>::infinity();
    json series = json::array();
    for (const auto& s : samples) {
        drift = std::max(drift, std::abs(s.trace - 1.0));
        lo = std::min(lo, s.min_eigenvalue);
        series.push_back({{"t", s.t}, {"trace", s.trace}, {"min_eigenvalue", s.min_eigenvalue},
                          {"mean", real_vec(s.mean)}, {"cov", real_mat(s.cov)}});
    }
    j["trace_drift"] = drift;
    j["min_rho_eigenvalue"] = lo;
    j["moment_series"] = series;
    j["meta"] = meta(c, o);
    return dump(j);
}

std::string render_lindblad(const Config& c, const RunOptions& o) {
    const XiDecomposition d = decompose(xi_matrix(c.spec, o.convention), o.tol);
    const LindbladSet ls = lindblad_decomposition(d, c.spec.xi());
    const EffectiveHamiltonian he = effective_hamiltonian(c.spec, d);
    json j;
    j["verdict"] = std::string(to_string(d.verdict));
    json lam = json::array();
    for (size_t mu = 0; mu < ls.lambdas.size(); ++mu) {
        json e = complex_vec(ls.lambdas[mu]);
        e["sign"] = ls.signs[mu];
        e["norm"] = ls.lambdas[mu].norm();
        lam.push_back(e);
    }
    j["lambdas"] = lam;
    j["eta"] = real_vec(ls.eta);
    j["h_eff"] = {{"kernel", complex_mat(he.kernel)}, {"real_kernel", real_mat(he.real_kernel)}, {"constant", he.constant}};
    j["reconstruction_error"] = (xi_h_from_lindblad(ls) - d.xi_h).norm();
    j["meta"] = meta(c, o);
    return dump(j);
}

std::string render_balance(const Config& c, const RunOptions& o) {
    const XiDecomposition d = decompose(xi_matrix(c.spec, o.convention), o.tol);
    const LindbladSet ls = lindblad_decomposition(d, c.spec.xi());
    const BalanceReport b = balance_check(c.spec, d, ls, o.convention);
    json j;
    j["commutes"] = b.commutes;
    j["invariance"] = {{"xi_h", b.inv_xi_h}, {"xi_a", b.inv_xi_a}, {"xi", b.inv_xi}};
    j["xi_a_norm"] = b.xi_a_norm;
    j["necessary_xi_h"] = b.necessary_xi_h;
    j["elliptic"] = b.elliptic;
    j["bohr_frequencies"] = b.bohr_frequencies;
    j["eigen_residual"] = b.eigen_residual;
    j["pairing_residual"] = std::isfinite(b.pairing_residual) ? json(b.pairing_residual) : json(nullptr);
    j["pairing_weights"] = b.pairing_weights;
    j["meta"] = meta(c, o);
    return dump(j);
}

} // namespace qcptp
