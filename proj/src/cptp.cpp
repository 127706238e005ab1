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

#include "qcptp/cptp.hpp"

#include <cmath>
#include <map>

namespace qcptp {

CMat xi_matrix(const SystemSpec& spec, Convention sign) {
    const int dim = spec.dim();
    const RMat k = coupling_matrices(spec).K;
    CMat xi = CMat::Zero(dim, dim);
    std::map<double, CMat> cache;
    for (int i = 0; i < dim; ++i) {
        if (k(i, i) == 0.0) continue;
        const double b = spec.row_beta(i);
        auto it = cache.find(b);
        if (it == cache.end()) {
            it = cache.emplace(b, wick_propagator(spec.hessian(), b, spec.hbar(), sign).matrix).first;
        }
        xi.row(i) = k(i, i) * it->second.row(i);
    }
    return xi;
}

XiDecomposition decompose(const CMat& xi, double tol) {
    if (xi.rows() != xi.cols()) throw Error(ErrorCode::InvalidInput, "Xi must be square");
    XiDecomposition d;
    d.xi_matrix = xi;
    d.xi_h = xi + xi.adjoint();
    d.xi_a = xi - xi.adjoint();
    Eigen::SelfAdjointEigenSolver<CMat> es(hermitian_part(d.xi_h));
    d.eigenvalues = es.eigenvalues();
    d.eigenvectors = es.eigenvectors();
    d.threshold = tol * std::max(1.0, d.xi_h.norm());
    const double lo = d.eigenvalues.size() ? d.eigenvalues(0) : 0.0;
    if (std::abs(lo) < d.threshold) {
        d.verdict = Verdict::Marginal;
    } else {
        d.verdict = lo >= d.threshold ? Verdict::CPTP : Verdict::NotCPTP;
    }
    return d;
}

LindbladSet lindblad_decomposition(const XiDecomposition& d, const RVec& eta, double rank_tol) {
    const auto dim = d.xi_h.rows();
    if (eta.size() != dim) throw Error(ErrorCode::InvalidInput, "eta length mismatch");
    const double amax = d.eigenvalues.size() ? d.eigenvalues.cwiseAbs().maxCoeff() : 0.0;
    if (rank_tol < 0.0) rank_tol = 1e-12 * amax;
    LindbladSet ls;
    ls.eta = eta;
    for (Eigen::Index mu = 0; mu < d.eigenvalues.size(); ++mu) {
        const double a = d.eigenvalues(mu);
        if (std::abs(a) <= rank_tol || a == 0.0) continue;
        ls.lambdas.push_back(std::sqrt(std::abs(a)) * d.eigenvectors.col(mu));
        ls.signs.push_back(a > 0 ? 1 : -1);
        ls.offsets.emplace_back(0.0, 0.0);
    }
    ls.h_shift = -I_unit * d.xi_a.conjugate();
    ls.linear_shift = RVec::Zero(dim);
    return ls;
}

CMat xi_h_from_lindblad(const LindbladSet& ls) {
    const auto dim = ls.eta.size();
    CMat out = CMat::Zero(dim, dim);
    for (size_t mu = 0; mu < ls.lambdas.size(); ++mu) {
        out += static_cast<double>(ls.signs[mu]) * ls.lambdas[mu] * ls.lambdas[mu].adjoint();
    }
    return out;
}

LindbladSet gauge_transform(const LindbladSet& ls, const CMat& u, const CVec& sigma, double tol) {
    const auto m = static_cast<Eigen::Index>(ls.lambdas.size());
    if (u.rows() != m || u.cols() != m || sigma.size() != m) {
        throw Error(ErrorCode::InvalidInput, "U and sigma must match the number of Lindblad operators");
    }
    const CMat id = CMat::Identity(m, m);
    if (m > 0 && (u * u.adjoint() - id).cwiseAbs().maxCoeff() > tol) {
        throw Error(ErrorCode::NotUnitary, "U U^dagger != I");
    }
    CMat g = CMat::Zero(m, m);
    for (Eigen::Index mu = 0; mu < m; ++mu) g(mu, mu) = static_cast<double>(ls.signs[static_cast<size_t>(mu)]);
    if (m > 0 && (u * g * u.adjoint() - g).cwiseAbs().maxCoeff() > tol) {
        throw Error(ErrorCode::NotGCommuting, "U g U^dagger != g");
    }
    LindbladSet out = ls;
    const auto dim = ls.eta.size();
    for (Eigen::Index mu = 0; mu < m; ++mu) {
        CVec lam = CVec::Zero(dim);
        cplx off = sigma(mu);
        for (Eigen::Index nu = 0; nu < m; ++nu) {
            lam += u(mu, nu) * ls.lambdas[static_cast<size_t>(nu)];
            off += u(mu, nu) * ls.offsets[static_cast<size_t>(nu)];
        }
        out.lambdas[static_cast<size_t>(mu)] = lam;
        out.offsets[static_cast<size_t>(mu)] = off;
        // H_eff += g/(2i) (sigma^* L - sigma L^dagger) = g Im(sigma^* lambda') . (x - eta)
        out.linear_shift += static_cast<double>(ls.signs[static_cast<size_t>(mu)]) *
                            (std::conj(sigma(mu)) * lam).imag();
    }
    return out;
}

EffectiveHamiltonian effective_hamiltonian(const SystemSpec& spec, const XiDecomposition& d) {
    const int dim = spec.dim();
    if (d.xi_a.rows() != dim) throw Error(ErrorCode::InvalidInput, "dimension mismatch");
    EffectiveHamiltonian e;
    const CMat shift = -I_unit * d.xi_a.conjugate();
    e.kernel = spec.hessian().cast<cplx>() + hermitian_part(shift);
    const RMat im = d.xi_a.imag();
    e.real_kernel = spec.hessian() - 0.5 * (im + im.transpose());
    const RMat re = d.xi_a.real();
    e.constant = 0.25 * spec.hbar() * re.cwiseProduct(symplectic_form(spec.n())).sum();
    return e;
}

namespace {

// Accumulates f * (a.x + a0) rho (b.x + b0)-type products into the
// -(1/hbar)-normalized coefficient bins of GeneratorCoefficients.
struct Accumulator {
    GeneratorCoefficients g;
    double hbar;

    // f * rho A B
    void rr(cplx f, const CVec& a, cplx a0, const CVec& b, cplx b0) {
        const cplx s = -hbar * f;
        g.L += s * a * b.transpose();
        g.beta += s * (a0 * b + b0 * a);
        g.c += f * a0 * b0;
    }
    // f * A B rho
    void ll(cplx f, const CVec& a, cplx a0, const CVec& b, cplx b0) {
        const cplx s = -hbar * f;
        g.N += s * a * b.transpose();
        g.alpha += s * (a0 * b + b0 * a);
        g.c += f * a0 * b0;
    }
    // f * A rho B
    void lr(cplx f, const CVec& a, cplx a0, const CVec& b, cplx b0) {
        const cplx s = -hbar * f;
        g.M += s * a * b.transpose();
        g.beta += s * a0 * b;
        g.alpha += s * b0 * a;
        g.c += f * a0 * b0;
    }
};

} // namespace

GeneratorCoefficients expand_kramers_dissipator(const SystemSpec& spec, Convention sign) {
    const int dim = spec.dim();
    const RMat k = coupling_matrices(spec).K;
    Accumulator acc{{CMat::Zero(dim, dim), CMat::Zero(dim, dim), CMat::Zero(dim, dim),
                     CVec::Zero(dim), CVec::Zero(dim), cplx(0.0, 0.0)},
                    spec.hbar()};
    const CVec xi = spec.xi().cast<cplx>();
    for (int i = 0; i < dim; ++i) {
        if (k(i, i) == 0.0) continue;
        const CMat s = wick_propagator(spec.hessian(), spec.row_beta(i), spec.hbar(), sign).matrix;
        // y_i = e^{bH/2} x_i e^{-bH/2} = xi_i + S_i.(x - xi); y_i^dagger has conjugated coefficients
        const CVec ya = s.row(i).transpose();
        const cplx y0 = xi(i) - (s.row(i) * xi)(0);
        const CVec yda = ya.conjugate();
        const cplx yd0 = std::conj(y0);
        CVec e = CVec::Zero(dim);
        e(i) = 1.0;
        const cplx f = -k(i, i) / spec.hbar();
        // -(K/hbar)[rho y - y^dagger rho, x_i] expanded
        acc.rr(f, ya, y0, e, 0.0);
        acc.ll(f, e, 0.0, yda, yd0);
        acc.lr(-f, e, 0.0, ya, y0);
        acc.lr(-f, yda, yd0, e, 0.0);
    }
    return acc.g;
}

} // namespace qcptp
