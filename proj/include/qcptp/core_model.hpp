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

// core_model.hpp: system description, phase-space conventions and the
// canonical (Xi, eta) parametrization of a quadratic dissipator.
//
// Phase-space ordering is x = (q_1..q_n, p_1..p_n) everywhere in the library.

#pragma once

#include <vector>

#include "qcptp/types.hpp"

namespace qcptp {

struct BathSpec {
    double gamma_q = 0.0;  // position-coupling rate
    double gamma_p = 0.0;  // momentum-coupling rate
    double beta = 1.0;     // inverse temperature
};

// Validated, immutable description of a quadratic system coupled to n baths.
// H = 1/2 (x - xi) . Hessian (x - xi) + phi.
class SystemSpec {
public:
    static SystemSpec create(int n, RMat hessian, RVec xi, double phi, double hbar,
                             std::vector<BathSpec> baths);

    int n() const { return n_; }
    int dim() const { return 2 * n_; }
    const RMat& hessian() const { return hessian_; }
    const RVec& xi() const { return xi_; }
    double phi() const { return phi_; }
    double hbar() const { return hbar_; }
    const std::vector<BathSpec>& baths() const { return baths_; }

    // Inverse temperature attached to phase-space row i; momentum rows share
    // their position's bath (beta_{i+n} = beta_i).
    double row_beta(int i) const { return baths_[static_cast<size_t>(i % n_)].beta; }
    bool uniform_temperature(double rel_tol = 1e-12) const;

    SystemSpec with_betas(const std::vector<double>& betas) const;
    SystemSpec with_hbar(double hbar) const;
    SystemSpec with_baths(std::vector<BathSpec> baths) const;

    // Permute degrees of freedom: new dof k is old dof perm[k].
    SystemSpec permuted(const std::vector<int>& perm) const;

private:
    SystemSpec() = default;
    int n_ = 0;
    RMat hessian_;
    RVec xi_;
    double phi_ = 0.0;
    double hbar_ = 1.0;
    std::vector<BathSpec> baths_;
};

// J = [[0, I_n], [-I_n, 0]].
RMat symplectic_form(int n);

struct CouplingMatrices {
    RMat C;  // Diag(gamma_q..., gamma_p...)
    RMat D;  // Diag(gamma_q/beta..., gamma_p/beta...)
    RMat K;  // (1/hbar) J D J^T = Diag(gamma_p/(hbar beta)..., gamma_q/(hbar beta)...)
};

CouplingMatrices coupling_matrices(const SystemSpec& spec);

// Coefficients of the most general quadratic dissipator
//   D[rho] = -(1/hbar) sum_ij (L_ij rho x_i x_j + M_ij x_i rho x_j + N_ij x_i x_j rho)
//            -(1/hbar) sum_i (alpha_i x_i rho + beta_i rho x_i) + c rho.
struct GeneratorCoefficients {
    CMat L, M, N;
    CVec alpha, beta;
    cplx c{0.0, 0.0};
};

struct CanonicalGenerator {
    CMat xi;                  // Xi
    RVec eta;                 // real displacement
    double eta_residual = 0;  // residual of the eta solve
};

// Checks trace preservation (L + M^T + N = 0, alpha + beta = 0, c = 0) and
// Hermiticity (L = N^dagger, M = M^dagger, alpha = beta^*), then recovers
// Xi = L^T and the minimum-norm real eta with alpha = 2i Im(Xi) eta.
CanonicalGenerator canonicalize_generator(const GeneratorCoefficients& g, double tol = 1e-12);

// Inverse of canonicalize_generator: expands the QTCL dissipator of (Xi, eta).
GeneratorCoefficients expand_qtcl(const CMat& xi, const RVec& eta);

} // namespace qcptp
