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

// fock_oracle.hpp: truncated Fock-space oracle for the master equations.
//
// Operators are built on a padded space of N + pad levels per mode and
// compressed to the first N levels only after every product and exponential,
// so quadratic products are exact on the kept space.

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qcptp/cptp.hpp"

namespace qcptp {

struct FockRep {
    int n_modes = 0;
    int truncation = 0;  // N levels kept per mode
    int pad = 0;         // extra levels per mode in the working space
    double hbar = 1.0;
    std::vector<double> scales;
    int dim = 0;      // N^n_modes
    int big_dim = 0;  // (N + pad)^n_modes
    std::vector<int> keep;  // kept indices inside the padded space

    std::vector<CMat> x_big;  // q_1..q_n, p_1..p_n on the padded space
    std::vector<CMat> x;      // compressed
    CMat h_big;
    CMat h;
    CMat identity;

    CMat compress(const CMat& big) const;
    // compressed x_j x_k
    CMat product(int j, int k) const;
    // annihilation operator of mode i (compressed), a = (sqrt(s) q + i p / sqrt(s)) / sqrt(2 hbar)
    CMat annihilation(int mode) const;
};

// pad < 0 picks max(48, 2N) for one mode and N for two.
FockRep build_fock(const SystemSpec& spec, int truncation, const std::vector<double>& scales = {},
                   int pad = -1);

enum class SuperSource { DirectEq2, QTCL, HighTempEq8, OpticsEq22, GTCL };
std::string_view to_string(SuperSource s);

// rho -> left rho + rho right + sum_k A_k rho B_k
struct Superoperator {
    SuperSource source = SuperSource::QTCL;
    int dim = 0;
    CMat left;
    CMat right;
    std::vector<std::pair<CMat, CMat>> sandwiches;

    CMat apply(const CMat& rho) const;
    // spectral-norm bound of the map
    double norm_bound() const;
    // column-major vec: vec(A rho B) = (B^T kron A) vec(rho); guarded to dim <= 40
    CMat to_dense() const;
    // dense matrix of the map restricted to the given index set (inputs and outputs)
    CMat restricted(const std::vector<int>& idx) const;
};

// Indices whose every mode level is below limit.
std::vector<int> low_block(const FockRep& f, int limit);

// Relative Frobenius distance |a - b| / |b| on the restricted block.
double block_distance(const Superoperator& a, const Superoperator& b, const std::vector<int>& idx);

Superoperator generator_direct(const FockRep& f, const SystemSpec& spec);
Superoperator generator_qtcl(const FockRep& f, const CMat& xi, const RVec& eta);
// Commutator + D0 + D1 of the first-order high-temperature expansion.
Superoperator generator_high_temp(const FockRep& f, const SystemSpec& spec);
// Damped-oscillator optics form for one mode.
Superoperator generator_optics(const FockRep& f, double m, double omega, double beta, double gamma_tilde);

struct LindbladOperator {
    CMat op;
    int sign = 1;
};
// (i/hbar)[rho, H] - sum_mu g_mu/(2 hbar) ({rho, L^dagger L} - 2 L rho L^dagger), products
// formed on the padded space by the caller.
Superoperator generator_lindblad(const FockRep& f, const CMat& h_eff, const std::vector<LindbladOperator>& ls);
// Same from a LindbladSet: L_mu = lambda_mu.(x - eta) + offset, H_eff = H + 1/2 z.h_shift z + linear_shift.z
Superoperator generator_gtcl(const FockRep& f, const LindbladSet& ls);

struct DensitySample {
    double t = 0.0;
    CMat rho;
    double trace = 1.0;
    double min_eigenvalue = 0.0;
    RVec mean;
    RMat cov;
};

struct DensityOptions {
    double max_norm_step = 1.0;     // |G| dt per Taylor step
    double breach_level = 1e-6;     // top-two-level occupation bound
    bool check_truncation = true;
    bool keep_rho = true;
};

std::vector<DensitySample> evolve_density(const FockRep& f, const Superoperator& g, const CMat& rho0,
                                          const std::vector<double>& t_grid, const DensityOptions& opt = {});

void moments_of(const FockRep& f, const CMat& rho, RVec& mean, RMat& cov);
double top_level_occupation(const FockRep& f, const CMat& rho);

CMat thermal_state(const FockRep& f, double beta);
// Product of coherent states |alpha_i> in the basis of scale s_i.
CMat coherent_state(const FockRep& f, const std::vector<cplx>& alphas);
// Coherent amplitude reproducing the given mean for mode i.
cplx coherent_amplitude(const FockRep& f, int mode, double q, double p);
CMat number_state(const FockRep& f, const std::vector<int>& levels);
double trace_distance(const CMat& a, const CMat& b);

} // namespace qcptp
