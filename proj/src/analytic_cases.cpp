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

#include "qcptp/analytic_cases.hpp"

#include <cmath>
#include <numbers>

namespace qcptp {

namespace {

void check_2x2(const RMat& h) {
    if (h.rows() != 2 || h.cols() != 2) throw Error(ErrorCode::InvalidInput, "n=1 needs a 2x2 Hessian");
}

double det2(const RMat& h) { return h(0, 0) * h(1, 1) - h(0, 1) * h(1, 0); }

// sinh(t)/t, sin(t)/t or 1, and cosh/cos/1, according to the det H class
struct Trig {
    double c = 1.0;
    double s_over = 1.0;
};

Trig trig_for(N1Case kind, double theta) {
    switch (kind) {
    case N1Case::Elliptic:
        return {std::cosh(theta), theta == 0.0 ? 1.0 : std::sinh(theta) / theta};
    case N1Case::Hyperbolic:
        return {std::cos(theta), theta == 0.0 ? 1.0 : std::sin(theta) / theta};
    case N1Case::Parabolic:
        break;
    }
    return {};
}

double theta_of(const RMat& h, double beta, double hbar, N1Case kind) {
    if (kind == N1Case::Parabolic) return 0.0;
    return 0.5 * hbar * beta * std::sqrt(std::abs(det2(h)));
}

} // namespace

bool in_hyperbolic_window(double theta, int max_windows) {
    constexpr double pi = std::numbers::pi;
    if (theta >= 0.0 && theta <= pi / 2) return true;
    for (int n = 0; n < max_windows; ++n) {
        const double lo = pi / 2 + (2 * n + 1) * pi;
        const double hi = pi / 2 + 2 * (n + 1) * pi;
        if (theta >= lo && theta <= hi) return true;
        if (theta < lo) break;
    }
    return false;
}

N1Report n1_analysis(double gamma_q, double gamma_p, const RMat& h, double beta, double hbar,
                     int max_windows) {
    check_2x2(h);
    if (!(beta > 0.0) || !(hbar > 0.0) || gamma_q < 0.0 || gamma_p < 0.0) {
        throw Error(ErrorCode::InvalidInput, "n1_analysis needs beta, hbar > 0 and gamma >= 0");
    }
    N1Report r;
    r.kind = classify_n1(h);
    r.theta = theta_of(h, beta, hbar, r.kind);
    const Trig t = trig_for(r.kind, r.theta);
    const double tr_c = gamma_q + gamma_p;
    const double det_c = gamma_q * gamma_p;
    const double tr_ch = gamma_q * h(0, 0) + gamma_p * h(1, 1);
    const double det_ch = det_c * det2(h);
    const double hb = hbar * beta;

    r.trace_xih = 2.0 * t.c * tr_c / hb;
    const double off = 0.5 * t.s_over * tr_ch;
    r.det_xih = 4.0 * t.c * t.c * det_c / (hb * hb) - off * off;
    const double disc = std::sqrt(std::max(0.0, r.trace_xih * r.trace_xih - 4.0 * r.det_xih));
    r.psi_plus = 0.5 * (r.trace_xih + disc);
    r.psi_minus = 0.5 * (r.trace_xih - disc);

    const double scale = std::max(1e-300, std::abs(det_c) * h.squaredNorm());
    r.degenerate = std::abs(det_ch) <= 1e-14 * scale;
    r.condition_lhs = r.degenerate ? std::numeric_limits<double>::quiet_NaN()
                                   : 0.25 * tr_ch * tr_ch / det_ch;
    const double tr_tol = 1e-12 * std::max(1.0, std::abs(gamma_q * h(0, 0)) + std::abs(gamma_p * h(1, 1)));
    const bool tr_ch_zero = std::abs(tr_ch) <= tr_tol;

    switch (r.kind) {
    case N1Case::Elliptic:
        r.cptp_all_beta = r.degenerate ? tr_ch_zero : r.condition_lhs <= 1.0 + 1e-12;
        r.cptp_at_beta = r.det_xih >= 0.0 && r.trace_xih >= 0.0;
        break;
    case N1Case::Hyperbolic: {
        r.cptp_all_beta = tr_c == 0.0;
        const double tn = std::tan(r.theta);
        const bool tan_ok = det_c > 0.0 &&
                            tn * tn * tr_ch * tr_ch / (4.0 * det_c * std::abs(det2(h))) <= 1.0;
        r.cptp_at_beta = tr_c == 0.0 || (in_hyperbolic_window(r.theta, max_windows) &&
                                         (tan_ok || (det_c == 0.0 && tr_ch_zero)));
        break;
    }
    case N1Case::Parabolic:
        r.cptp_all_beta = tr_ch_zero;
        // (hbar beta Tr CH)^2 / (16 det C) <= 1
        r.cptp_at_beta = tr_ch_zero || (det_c > 0.0 && hb * hb * tr_ch * tr_ch <= 16.0 * det_c);
        break;
    }
    return r;
}

double harmonic_tuning(double m, double omega) {
    if (!(m > 0.0) || !(omega > 0.0)) throw Error(ErrorCode::InvalidInput, "m, omega must be positive");
    return (m * omega) * (m * omega);
}

OpticalParameters optical_parameters(double m, double omega, double beta, double hbar,
                                     double gamma_tilde, bool as_printed) {
    if (!(m > 0.0) || !(omega > 0.0) || !(beta > 0.0) || !(hbar > 0.0) || gamma_tilde < 0.0) {
        throw Error(ErrorCode::InvalidInput, "optical parameters must be positive");
    }
    const double x = beta * hbar * omega;
    OpticalParameters o;
    o.gamma_p = m * x * gamma_tilde / ((as_printed ? 2.0 : 4.0) * std::sinh(0.5 * x));
    o.gamma_q = o.gamma_p / harmonic_tuning(m, omega);
    o.nbar = 1.0 / std::expm1(x);
    return o;
}

CaldeiraLeggettReport caldeira_leggett(double zeta, double gamma_o, double beta, double hbar,
                                       const std::optional<RMat>& hessian) {
    if (zeta < 0.0 || !(beta > 0.0) || !(hbar > 0.0) || !std::isfinite(gamma_o)) {
        throw Error(ErrorCode::InvalidInput, "caldeira_leggett needs zeta >= 0, beta, hbar > 0");
    }
    const double hb = hbar * beta;
    CaldeiraLeggettReport r;
    r.xi_h = CMat::Zero(2, 2);
    r.xi_h(0, 0) = 2.0 * zeta / hb;
    r.xi_h -= I_unit * gamma_o * symplectic_form(1).cast<cplx>();
    r.xi_a = CMat::Zero(2, 2);
    r.xi_a(0, 1) = r.xi_a(1, 0) = -I_unit * gamma_o;
    const double z = zeta / hb;
    r.psi_plus = z + std::sqrt(z * z + gamma_o * gamma_o);
    // z - sqrt(z^2 + g^2) without cancellation
    r.psi_minus = -gamma_o * gamma_o / (z + std::sqrt(z * z + gamma_o * gamma_o));
    if (z == 0.0 && gamma_o == 0.0) r.psi_minus = 0.0;

    if (hessian) {
        const RMat& h = *hessian;
        check_2x2(h);
        if (std::abs(h(0, 1)) > 1e-12 * std::max(1.0, h.norm())) {
            throw Error(ErrorCode::Unembeddable, "embedding requires H12 = 0");
        }
        const N1Case kind = classify_n1(h);
        CaldeiraLeggettEmbedding e;
        e.theta = theta_of(h, beta, hbar, kind);
        const Trig t = trig_for(kind, e.theta);
        if (t.c <= 0.0) throw Error(ErrorCode::Unembeddable, "cos(theta) <= 0 gives gamma_p <= 0");
        e.gamma_p = zeta / t.c;
        e.gamma_o = 0.5 * e.gamma_p * h(1, 1) * t.s_over;
        r.embedding = e;
    }
    return r;
}

double kramers_obstruction(const RMat& h, double gamma_p, double beta, double hbar) {
    check_2x2(h);
    const N1Case kind = classify_n1(h);
    const Trig t = trig_for(kind, theta_of(h, beta, hbar, kind));
    const double v = 0.5 * gamma_p * h(1, 1) * t.s_over;
    return -v * v;
}

} // namespace qcptp
