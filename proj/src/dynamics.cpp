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

#include "qcptp/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <unsupported/Eigen/KroneckerProduct>

namespace qcptp {

MomentGenerator moment_generator(const SystemSpec& spec, const XiDecomposition& d) {
    return moment_generator(spec, d, spec.xi());
}

MomentGenerator moment_generator(const SystemSpec& spec, const XiDecomposition& d, const RVec& eta) {
    const int dim = spec.dim();
    if (d.xi_matrix.rows() != dim || eta.size() != dim) {
        throw Error(ErrorCode::InvalidInput, "moment_generator dimension mismatch");
    }
    const RMat j = symplectic_form(spec.n());
    const RMat re = d.xi_matrix.real();
    const RMat im = d.xi_matrix.imag();
    MomentGenerator g;
    g.drift = j * spec.hessian() - 2.0 * j * im;
    g.diffusion = spec.hbar() * j * (re + re.transpose()) * j.transpose();
    g.diffusion = 0.5 * (g.diffusion + g.diffusion.transpose()).eval();
    g.offset = -j * spec.hessian() * spec.xi() + 2.0 * j * im * eta;
    g.fixed_point_shift = spec.xi();
    g.hbar = spec.hbar();
    return g;
}

double physicality_margin(const RMat& cov, double hbar) {
    const int n = static_cast<int>(cov.rows() / 2);
    const CMat m = cov.cast<cplx>() + I_unit * (0.5 * hbar) * symplectic_form(n).cast<cplx>();
    Eigen::SelfAdjointEigenSolver<CMat> es(hermitian_part(m), Eigen::EigenvaluesOnly);
    return es.eigenvalues()(0);
}

bool is_physical(const RMat& cov, double hbar, double rel_tol) {
    return physicality_margin(cov, hbar) >= -rel_tol * cov.norm();
}

namespace {

struct Moments {
    RVec m;
    RMat s;
};

Moments rk4_step(const MomentGenerator& g, const Moments& y, double h) {
    auto f = [&](const Moments& u) {
        return Moments{g.drift * u.m + g.offset,
                       g.drift * u.s + u.s * g.drift.transpose() + g.diffusion};
    };
    auto axpy = [](const Moments& a, double c, const Moments& b) {
        return Moments{a.m + c * b.m, a.s + c * b.s};
    };
    const Moments k1 = f(y);
    const Moments k2 = f(axpy(y, h / 2, k1));
    const Moments k3 = f(axpy(y, h / 2, k2));
    const Moments k4 = f(axpy(y, h, k3));
    Moments out{y.m + (h / 6) * (k1.m + 2 * k2.m + 2 * k3.m + k4.m),
                y.s + (h / 6) * (k1.s + 2 * k2.s + 2 * k3.s + k4.s)};
    out.s = 0.5 * (out.s + out.s.transpose()).eval();
    return out;
}

std::vector<Moments> integrate(const MomentGenerator& g, const Moments& y0, const std::vector<double>& t,
                               int steps_per_unit, double max_step) {
    std::vector<Moments> out{y0};
    Moments y = y0;
    for (size_t k = 1; k < t.size(); ++k) {
        const double span = t[k] - t[k - 1];
        int steps = steps_per_unit;
        if (max_step > 0.0) steps = std::max(steps, static_cast<int>(std::ceil(span / max_step)));
        const double h = span / steps;
        if (span > 0.0 && h <= std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(t[k]))) {
            throw Error(ErrorCode::StepUnderflow, "RK4 step below representable spacing");
        }
        for (int s = 0; s < steps; ++s) y = rk4_step(g, y, h);
        out.push_back(y);
    }
    return out;
}

} // namespace

Trajectory evolve_moments(const MomentGenerator& g, const MomentState& init, const std::vector<double>& t,
                          const EvolveOptions& opt) {
    if (t.empty() || t.front() != init.time) throw Error(ErrorCode::InvalidInput, "t_grid must start at init.time");
    if (!std::is_sorted(t.begin(), t.end())) throw Error(ErrorCode::InvalidInput, "t_grid must be ascending");
    if (opt.substeps < 1) throw Error(ErrorCode::InvalidInput, "substeps must be >= 1");
    const Moments y0{init.mean, 0.5 * (init.cov + init.cov.transpose())};
    const auto coarse = integrate(g, y0, t, opt.substeps, opt.max_step);
    Trajectory tr;
    if (opt.richardson) {
        const auto fine = integrate(g, y0, t, 2 * opt.substeps, opt.max_step > 0 ? opt.max_step / 2 : 0.0);
        for (size_t k = 0; k < t.size(); ++k) {
            const double e = std::max((coarse[k].m - fine[k].m).cwiseAbs().maxCoeff(),
                                      (coarse[k].s - fine[k].s).cwiseAbs().maxCoeff());
            tr.error_estimate = std::max(tr.error_estimate, e / 15.0);
        }
    }
    for (size_t k = 0; k < t.size(); ++k) {
        MomentState s{coarse[k].m, coarse[k].s, t[k], true};
        s.physical = is_physical(s.cov, g.hbar);
        tr.states.push_back(std::move(s));
    }
    return tr;
}

RMat stationary_covariance(const MomentGenerator& g) {
    const auto dim = g.drift.rows();
    Eigen::EigenSolver<RMat> es(g.drift, false);
    const double growth = es.eigenvalues().real().maxCoeff();
    if (!(growth < 0.0)) throw Error(ErrorCode::NotHurwitz, "drift has eigenvalue with Re >= 0");
    const RMat id = RMat::Identity(dim, dim);
    const RMat op = Eigen::kroneckerProduct(id, g.drift) + Eigen::kroneckerProduct(g.drift, id);
    const RVec rhs = -Eigen::Map<const RVec>(g.diffusion.data(), dim * dim);
    const RVec v = op.partialPivLu().solve(rhs);
    RMat s = Eigen::Map<const RMat>(v.data(), dim, dim);
    s = 0.5 * (s + s.transpose()).eval();
    const double res = (g.drift * s + s * g.drift.transpose() + g.diffusion).norm();
    if (res > 1e-10 * std::max(1.0, g.diffusion.norm())) {
        throw Error(ErrorCode::NotHurwitz, "Lyapunov residual " + std::to_string(res));
    }
    return s;
}

Williamson williamson(const RMat& h) {
    const auto dim = h.rows();
    const int n = static_cast<int>(dim / 2);
    if (dim != 2 * n || h.cols() != dim || n < 1) throw Error(ErrorCode::InvalidInput, "hessian must be 2n x 2n");
    Eigen::SelfAdjointEigenSolver<RMat> hs(0.5 * (h + h.transpose()));
    if (hs.eigenvalues()(0) <= 0.0) throw Error(ErrorCode::NotPositiveDefinite, "H is not positive definite");
    const RMat r = hs.operatorSqrt();
    const RMat r_inv = hs.operatorInverseSqrt();
    // i R J R is Hermitian with eigenvalues +/- nu_k
    const CMat m = I_unit * (r * symplectic_form(n) * r).cast<cplx>();
    Eigen::SelfAdjointEigenSolver<CMat> es(hermitian_part(m));
    Williamson w;
    w.nu = es.eigenvalues().tail(n);
    RMat o(dim, dim);
    for (int k = 0; k < n; ++k) {
        const CVec u = es.eigenvectors().col(n + k);
        o.col(k) = std::sqrt(2.0) * u.imag();
        o.col(n + k) = std::sqrt(2.0) * u.real();
    }
    RVec wsqrt(dim);
    wsqrt << w.nu.cwiseSqrt(), w.nu.cwiseSqrt();
    w.s_inv = r_inv * o * wsqrt.asDiagonal();
    // fix the orientation so that S_inv^T J S_inv = +J
    const RMat j = symplectic_form(n);
    for (int k = 0; k < n; ++k) {
        if (w.s_inv.col(k).dot(j * w.s_inv.col(n + k)) < 0.0) {
            // pair k is anti-symplectic; flip its momentum column
            w.s_inv.col(n + k) *= -1.0;
        }
    }
    w.s = w.s_inv.inverse();
    return w;
}

RMat gibbs_covariance(const RMat& h, double beta, double hbar) {
    if (!(beta > 0.0) || !(hbar > 0.0)) throw Error(ErrorCode::InvalidInput, "beta, hbar must be positive");
    const Williamson w = williamson(h);
    const auto n = w.nu.size();
    RVec d(2 * n);
    for (Eigen::Index k = 0; k < n; ++k) {
        const double x = 0.5 * hbar * beta * w.nu(k);
        d(k) = d(k + n) = 0.5 * hbar / std::tanh(x);
    }
    RMat s = w.s_inv * d.asDiagonal() * w.s_inv.transpose();
    return 0.5 * (s + s.transpose());
}

ClassicalLimit classical_limit_matrices(const SystemSpec& spec) {
    const auto cm = coupling_matrices(spec);
    const RMat j = symplectic_form(spec.n());
    const RMat id = RMat::Identity(spec.dim(), spec.dim());
    return {(id + cm.C * j) * j * spec.hessian(), 2.0 * cm.D};
}

} // namespace qcptp
