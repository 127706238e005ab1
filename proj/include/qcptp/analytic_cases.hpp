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

// analytic_cases.hpp: closed-form n=1 analysis, harmonic tuning, the
// quantum-optics parametrization, Caldeira-Leggett and ordinary Kramers.

#pragma once

#include <optional>

#include "qcptp/propagators.hpp"

namespace qcptp {

struct N1Report {
    double theta = 0.0;
    N1Case kind = N1Case::Elliptic;
    double trace_xih = 0.0;
    double det_xih = 0.0;
    double condition_lhs = 0.0;  // 1/4 (Tr CH)^2 / det(CH)
    bool degenerate = false;     // det(CH) = 0, condition ratio undefined
    bool cptp_all_beta = false;
    bool cptp_at_beta = false;   // closed-form verdict at this beta
    double psi_plus = 0.0;
    double psi_minus = 0.0;
};

N1Report n1_analysis(double gamma_q, double gamma_p, const RMat& hessian, double beta, double hbar,
                     int max_windows = 64);

// Hyperbolic admissibility window: 0 <= theta <= pi/2 or
// pi/2 + (2N+1) pi <= theta <= pi/2 + 2(N+1) pi for N < max_windows.
bool in_hyperbolic_window(double theta, int max_windows = 64);

// gamma_p / gamma_q = (m omega)^2.
double harmonic_tuning(double m, double omega);

struct OpticalParameters {
    double gamma_p = 0.0;
    double gamma_q = 0.0;
    double nbar = 0.0;
};

// gamma_p = m beta hbar omega gamma~ / (4 sinh(beta hbar omega / 2)), the
// normalization that turns the tuned generator into the optics master
// equation; with as_printed the leading factor is 1/2 instead of 1/4.
OpticalParameters optical_parameters(double m, double omega, double beta, double hbar,
                                     double gamma_tilde, bool as_printed = false);

struct CaldeiraLeggettEmbedding {
    double gamma_p = 0.0;
    double gamma_o = 0.0;
    double theta = 0.0;
};

struct CaldeiraLeggettReport {
    CMat xi_h;
    CMat xi_a;
    double psi_plus = 0.0;
    double psi_minus = 0.0;
    std::optional<CaldeiraLeggettEmbedding> embedding;
};

// Xi_H = (2 zeta / hbar beta) Diag(1, 0) - i gamma_o J, Xi_A = -i gamma_o sigma_x.
// With a Hessian the embedding gamma_q = 0, gamma_p = zeta sech(theta),
// gamma_o = zeta H22 tanh(theta) / (2 theta) is returned; H12 != 0 raises Unembeddable.
CaldeiraLeggettReport caldeira_leggett(double zeta, double gamma_o, double beta, double hbar,
                                       const std::optional<RMat>& hessian = std::nullopt);

// det Xi_H for gamma_q = 0: -[gamma_p H22 f(theta) / 2]^2 with f = sinh(theta)/theta,
// sin(theta)/theta or 1 for the elliptic, hyperbolic and parabolic cases.
double kramers_obstruction(const RMat& hessian, double gamma_p, double beta, double hbar);

} // namespace qcptp
