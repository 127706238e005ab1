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

// cptp.hpp: Xi = K S_beta, its Hermitian/anti-Hermitian split, the
// Xi_H >= 0 verdict, Lindblad extraction, gauge freedom and H_eff.

#pragma once

#include <vector>

#include "qcptp/propagators.hpp"

namespace qcptp {

struct XiDecomposition {
    CMat xi_matrix;
    CMat xi_h;          // Xi + Xi^dagger
    CMat xi_a;          // Xi - Xi^dagger
    RVec eigenvalues;   // of Xi_H, ascending
    CMat eigenvectors;  // columns match eigenvalues
    Verdict verdict = Verdict::Marginal;
    double threshold = 0.0;  // tol * max(1, |Xi_H|_F)
};

struct LindbladSet {
    std::vector<CVec> lambdas;
    std::vector<int> signs;
    std::vector<cplx> offsets;  // constant parts varsigma of L_mu (zero unless gauged)
    RVec eta;
    RMat h;                     // Hamiltonian kernel H
    CMat h_shift;               // -i Xi_A^*, so H_eff = H + 1/2 z.h_shift z
    RVec linear_shift;          // gauge-induced term: H_eff gains linear_shift . (x - eta)
};

// Row i of Xi is K_ii times row i of S_{beta_i}.
CMat xi_matrix(const SystemSpec& spec, Convention sign = Convention::AppendixB);

XiDecomposition decompose(const CMat& xi, double tol = 1e-10);

// rank_tol < 0 selects 1e-12 * max |eigenvalue|.
LindbladSet lindblad_decomposition(const XiDecomposition& d, const RVec& eta, double rank_tol = -1.0);

// Sum_mu g_mu lambda_mu lambda_mu^dagger.
CMat xi_h_from_lindblad(const LindbladSet& ls);

// L'_mu = sum_nu U_{mu nu} L_nu + sigma_mu, plus the compensating Hamiltonian shift.
LindbladSet gauge_transform(const LindbladSet& ls, const CMat& u, const CVec& sigma, double tol = 1e-12);

struct EffectiveHamiltonian {
    CMat kernel;         // H - i Xi_A^*, Hermitian (x-space form 1/2 z.kernel z, H part about xi)
    RMat real_kernel;    // H - Im Xi_A: symmetric-ordered operator kernel
    double constant = 0; // (hbar/4) sum_jk Re(Xi_A)_jk J_jk from reordering
};

EffectiveHamiltonian effective_hamiltonian(const SystemSpec& spec, const XiDecomposition& d);

// Dissipator coefficients of the direct (bath-exponential) master equation,
// obtained by expanding it with y_i = S_{beta_i} x, without going through Xi.
GeneratorCoefficients expand_kramers_dissipator(const SystemSpec& spec,
                                                Convention sign = Convention::AppendixB);

} // namespace qcptp
