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

// propagators.hpp: real symplectic flow exp(JHt) and the Wick-rotated
// complex symplectic matrix S_beta, with n=1 and network closed forms.

#pragma once

#include "qcptp/core_model.hpp"

namespace qcptp {

struct WickPropagator {
    CMat matrix;
    double beta = 0.0;
    Convention sign = Convention::AppendixB;
};

RMat expm(const RMat& a);
CMat expm(const CMat& a);

// exp(J H t).
RMat real_propagator(const RMat& hessian, double t);

// exp(-/+ i hbar beta J H / 2). Raises Overflow when the exponent norm leaves
// the double range.
WickPropagator wick_propagator(const RMat& hessian, double beta, double hbar,
                               Convention sign = Convention::AppendixB);

enum class N1Case { Elliptic, Hyperbolic, Parabolic };
N1Case classify_n1(const RMat& hessian, double rel_tol = 1e-12);

// Closed-form S_beta for n=1 (any 2x2 Hessian) or the two-oscillator network
// Hq = [[w+k, -k], [-k, w+k]], Hp = w I. Needs uniform temperature.
CMat closed_form_sbeta(const SystemSpec& spec, Convention sign = Convention::AppendixB);

// Network parameters (w, k) when the Hessian has the network shape.
bool match_network(const RMat& hessian, double& omega, double& kappa, double rel_tol = 1e-12);

} // namespace qcptp
