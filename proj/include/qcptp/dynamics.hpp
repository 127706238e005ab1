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

// dynamics.hpp: Gaussian moment dynamics of the quadratic generator.

#pragma once

#include <vector>

#include "qcptp/cptp.hpp"

namespace qcptp {

struct MomentState {
    RVec mean;
    RMat cov;  // 1/2 <{dx_i, dx_j}>
    double time = 0.0;
    bool physical = true;
};

// d<x>/dt = A <x> + b,  d sigma/dt = A sigma + sigma A^T + D.
struct MomentGenerator {
    RMat drift;
    RMat diffusion;
    RVec offset;
    RVec fixed_point_shift;  // xi of the Hamiltonian; equals the fixed point when eta = xi
    double hbar = 1.0;
};

// A = J H - 2 J Im(Xi), D = hbar J (Re Xi + Re Xi^T) J^T, b = -J H xi + 2 J Im(Xi) eta.
MomentGenerator moment_generator(const SystemSpec& spec, const XiDecomposition& d);
MomentGenerator moment_generator(const SystemSpec& spec, const XiDecomposition& d, const RVec& eta);

struct EvolveOptions {
    int substeps = 10;        // RK4 steps per output interval (at least)
    double max_step = 0.0;    // optional cap on the step, 0 = none
    bool richardson = true;   // estimate the error by step halving
};

struct Trajectory {
    std::vector<MomentState> states;
    double error_estimate = 0.0;  // Richardson sup-norm estimate
};

Trajectory evolve_moments(const MomentGenerator& g, const MomentState& init,
                          const std::vector<double>& t_grid, const EvolveOptions& opt = {});

// min eig(sigma + i hbar/2 J) >= -1e-10 |sigma|.
bool is_physical(const RMat& cov, double hbar, double rel_tol = 1e-10);
double physicality_margin(const RMat& cov, double hbar);

RMat stationary_covariance(const MomentGenerator& g);

struct Williamson {
    RVec nu;    // symplectic eigenvalues, ascending
    RMat s;     // symplectic, H = S^T Diag(nu, nu) S
    RMat s_inv;
};

Williamson williamson(const RMat& hessian);

RMat gibbs_covariance(const RMat& hessian, double beta, double hbar);

struct ClassicalLimit {
    RMat drift;      // (I + C J) J H
    RMat diffusion;  // 2 D
};

ClassicalLimit classical_limit_matrices(const SystemSpec& spec);

} // namespace qcptp
