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

#include "qcptp/core_model.hpp"

#include <algorithm>
#include <cmath>

namespace qcptp {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw Error(ErrorCode::InvalidInput, what);
}

double scale_of(double a) { return std::max(1.0, a); }

} // namespace

SystemSpec SystemSpec::create(int n, RMat hessian, RVec xi, double phi, double hbar,
                              std::vector<BathSpec> baths) {
    require(n >= 1, "n must be >= 1");
    require(hessian.rows() == 2 * n && hessian.cols() == 2 * n, "hessian must be 2n x 2n");
    require(xi.size() == 2 * n, "xi must have length 2n");
    require(static_cast<int>(baths.size()) == n, "baths must have length n");
    require(hessian.allFinite() && xi.allFinite() && std::isfinite(phi), "nonfinite Hamiltonian data");
    require(std::isfinite(hbar) && hbar > 0.0, "hbar must be positive");
    const double asym = (hessian - hessian.transpose()).norm();
    require(asym <= 1e-12 * scale_of(hessian.norm()), "hessian is not symmetric");
    for (const auto& b : baths) {
        require(std::isfinite(b.gamma_q) && std::isfinite(b.gamma_p) && std::isfinite(b.beta),
                "nonfinite bath parameter");
        require(b.beta > 0.0, "bath beta must be positive");
        require(b.gamma_q >= 0.0 && b.gamma_p >= 0.0, "bath rates must be nonnegative");
    }
    SystemSpec s;
    s.n_ = n;
    s.hessian_ = 0.5 * (hessian + hessian.transpose());
    s.xi_ = std::move(xi);
    s.phi_ = phi;
    s.hbar_ = hbar;
    s.baths_ = std::move(baths);
    return s;
}

bool SystemSpec::uniform_temperature(double rel_tol) const {
    const double b0 = baths_.front().beta;
    return std::all_of(baths_.begin(), baths_.end(), [&](const BathSpec& b) {
        return std::abs(b.beta - b0) <= rel_tol * b0;
    });
}

SystemSpec SystemSpec::with_betas(const std::vector<double>& betas) const {
    require(static_cast<int>(betas.size()) == n_, "need one beta per bath");
    auto baths = baths_;
    for (size_t i = 0; i < baths.size(); ++i) baths[i].beta = betas[i];
    return create(n_, hessian_, xi_, phi_, hbar_, std::move(baths));
}

SystemSpec SystemSpec::with_hbar(double hbar) const {
    return create(n_, hessian_, xi_, phi_, hbar, baths_);
}

SystemSpec SystemSpec::with_baths(std::vector<BathSpec> baths) const {
    return create(n_, hessian_, xi_, phi_, hbar_, std::move(baths));
}

SystemSpec SystemSpec::permuted(const std::vector<int>& perm) const {
    require(static_cast<int>(perm.size()) == n_, "permutation length must be n");
    Eigen::VectorXi idx(2 * n_);
    for (int k = 0; k < n_; ++k) {
        idx(k) = perm[static_cast<size_t>(k)];
        idx(k + n_) = perm[static_cast<size_t>(k)] + n_;
    }
    RMat h(2 * n_, 2 * n_);
    RVec x(2 * n_);
    for (int a = 0; a < 2 * n_; ++a) {
        x(a) = xi_(idx(a));
        for (int b = 0; b < 2 * n_; ++b) h(a, b) = hessian_(idx(a), idx(b));
    }
    std::vector<BathSpec> baths(baths_.size());
    for (int k = 0; k < n_; ++k) baths[static_cast<size_t>(k)] = baths_[static_cast<size_t>(perm[static_cast<size_t>(k)])];
    return create(n_, h, x, phi_, hbar_, std::move(baths));
}

RMat symplectic_form(int n) {
    if (n < 1) throw Error(ErrorCode::InvalidInput, "symplectic_form needs n >= 1");
    RMat j = RMat::Zero(2 * n, 2 * n);
    j.topRightCorner(n, n).setIdentity();
    j.bottomLeftCorner(n, n) = -RMat::Identity(n, n);
    return j;
}

CouplingMatrices coupling_matrices(const SystemSpec& spec) {
    const int n = spec.n();
    RVec c(2 * n), d(2 * n);
    for (int i = 0; i < n; ++i) {
        const auto& b = spec.baths()[static_cast<size_t>(i)];
        c(i) = b.gamma_q;
        c(i + n) = b.gamma_p;
        d(i) = b.gamma_q / b.beta;
        d(i + n) = b.gamma_p / b.beta;
    }
    if (!c.allFinite() || !d.allFinite()) throw Error(ErrorCode::InvalidInput, "nonfinite coupling");
    const RMat j = symplectic_form(n);
    CouplingMatrices m;
    m.C = c.asDiagonal();
    m.D = d.asDiagonal();
    m.K = (j * m.D * j.transpose()) / spec.hbar();
    return m;
}

CanonicalGenerator canonicalize_generator(const GeneratorCoefficients& g, double tol) {
    const auto dim = g.L.rows();
    if (g.L.cols() != dim || g.M.rows() != dim || g.M.cols() != dim || g.N.rows() != dim ||
        g.N.cols() != dim || g.alpha.size() != dim || g.beta.size() != dim) {
        throw Error(ErrorCode::InvalidInput, "generator coefficient shapes disagree");
    }
    const double mscale = scale_of(g.L.norm() + g.M.norm() + g.N.norm());
    const double vscale = scale_of(g.alpha.norm() + g.beta.norm());

    const double trace_defect = (g.L + g.M.transpose() + g.N).norm();
    if (trace_defect > tol * mscale || (g.alpha + g.beta).norm() > tol * vscale ||
        std::abs(g.c) > tol * vscale) {
        throw Error(ErrorCode::ConstraintViolation,
                    "trace: L + M^T + N defect " + std::to_string(trace_defect));
    }
    const double herm_defect = (g.L - g.N.adjoint()).norm() + (g.M - g.M.adjoint()).norm();
    if (herm_defect > tol * mscale || (g.alpha - g.beta.conjugate()).norm() > tol * vscale) {
        throw Error(ErrorCode::ConstraintViolation,
                    "hermiticity: defect " + std::to_string(herm_defect));
    }

    CanonicalGenerator out;
    out.xi = g.L.transpose();
    // alpha = 2i Im(Xi) eta with eta real  <=>  Im(Xi) eta = Im(alpha)/2 and Re(alpha) = 0.
    const RMat im_xi = out.xi.imag();
    const RVec rhs = 0.5 * g.alpha.imag();
    out.eta = im_xi.completeOrthogonalDecomposition().solve(rhs);
    out.eta_residual = (im_xi * out.eta - rhs).norm() + 0.5 * g.alpha.real().norm();
    const double alpha_norm = g.alpha.norm();
    if (out.eta_residual > 1e-8 * alpha_norm && out.eta_residual > tol) {
        throw Error(ErrorCode::NoRealShift,
                    "eta solve residual " + std::to_string(out.eta_residual));
    }
    return out;
}

GeneratorCoefficients expand_qtcl(const CMat& xi, const RVec& eta) {
    GeneratorCoefficients g;
    g.L = xi.transpose();
    g.M = -(xi + xi.adjoint());
    g.N = xi.conjugate();
    g.alpha = 2.0 * I_unit * (xi.imag() * eta).cast<cplx>();
    g.beta = -g.alpha;
    g.c = 0.0;
    return g;
}

} // namespace qcptp
