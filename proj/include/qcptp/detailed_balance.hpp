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

// detailed_balance.hpp: quantum detailed-balance residuals for quadratic
// generators and the ellipticity test of J H.

#pragma once

#include <vector>

#include "qcptp/cptp.hpp"

namespace qcptp {

struct EllipticReport {
    bool elliptic = false;
    CVec spectrum;        // eigenvalues of J H
    RVec frequencies;     // positive imaginary parts, ascending (elliptic only)
};

EllipticReport elliptic_classify(const RMat& hessian, double tol = 1e-10);

struct BalanceReport {
    double commutes = 0.0;       // max_t |S_t^T Xi_A S_t - Xi_A| over 16 points of one period
    double inv_xi_h = 0.0;       // |S_b^T Xi_H S_b - Xi_H|
    double inv_xi_a = 0.0;
    double inv_xi = 0.0;
    double xi_a_norm = 0.0;
    double necessary_xi_h = 0.0; // |Xi_H - 2 K S_b|
    bool elliptic = false;
    std::vector<double> bohr_frequencies;  // one per Lindblad vector solving (ii)
    double eigen_residual = 0.0;           // worst (ii) residual, relative
    double pairing_residual = 0.0;         // worst (iii) residual, relative
    std::vector<double> pairing_weights;   // |lambda_partner|^2 / |lambda|^2 per pair
    std::vector<CVec> rotated_lambdas;     // Lindblad vectors aligned with (ii)
};

BalanceReport balance_check(const SystemSpec& spec, const XiDecomposition& d, const LindbladSet& ls,
                            Convention sign = Convention::AppendixB);

} // namespace qcptp
