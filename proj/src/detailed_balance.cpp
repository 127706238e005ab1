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

#include "qcptp/detailed_balance.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace qcptp {

EllipticReport elliptic_classify(const RMat& h, double tol) {
    const int n = static_cast<int>(h.rows() / 2);
    if (h.rows() != 2 * n || h.cols() != h.rows() || n < 1) throw Error(ErrorCode::InvalidInput, "hessian must be 2n x 2n");
    const RMat jh = symplectic_form(n) * h;
    Eigen::EigenSolver<RMat> es(jh, false);
    EllipticReport r;
    r.spectrum = es.eigenvalues();
    const double scale = std::max(1.0, jh.norm());
    r.elliptic = (r.spectrum.real().cwiseAbs().maxCoeff() <= tol * scale) &&
                 (r.spectrum.imag().cwiseAbs().minCoeff() > tol * scale);
    if (r.elliptic) {
        std::vector<double> w;
        for (Eigen::Index k = 0; k < r.spectrum.size(); ++k)
            if (r.spectrum(k).imag() > 0) w.push_back(r.spectrum(k).imag());
        std::sort(w.begin(), w.end());
        r.frequencies = Eigen::Map<RVec>(w.data(), static_cast<Eigen::Index>(w.size()));
    }
    return r;
}

namespace {

double invariance(const CMat& s, const CMat& x) { return (s.transpose() * x * s - x).norm(); }

struct Aligned {
    CVec lambda;
    cplx kappa;
    double residual;
};

// Factor X = sum_k w_k e_k e_k^dagger over eigenvectors e_k of (J H)^T, mixing
// only inside degenerate eigenvalue clusters. The residual is the part of
// E^-1 X E^-dagger that couples different clusters.
std::vector<Aligned> align(const CMat& x, const RMat& jht) {
    const auto dim = jht.rows();
    const double scale = std::max(1.0, jht.norm());
    Eigen::EigenSolver<RMat> es(jht);
    CVec kap = es.eigenvalues();
    CMat e = es.eigenvectors();
    // conjugate partners get conjugate eigenvectors, so emission and absorption vectors match
    std::vector<Eigen::Index> up;
    for (Eigen::Index k = 0; k < dim; ++k)
        if (kap(k).imag() > 1e-10 * scale) up.push_back(k);
    if (2 * static_cast<Eigen::Index>(up.size()) == dim) {
        CMat e2(dim, dim);
        CVec k2(dim);
        const auto half = static_cast<Eigen::Index>(up.size());
        for (Eigen::Index k = 0; k < half; ++k) {
            e2.col(k) = e.col(up[static_cast<size_t>(k)]).normalized();
            e2.col(k + half) = e2.col(k).conjugate();
            k2(k) = kap(up[static_cast<size_t>(k)]);
            k2(k + half) = std::conj(k2(k));
        }
        e = e2;
        kap = k2;
    }
    std::vector<Aligned> out;
    Eigen::FullPivLU<CMat> lu(e);
    if (!lu.isInvertible() || lu.rcond() < 1e-12) {
        out.push_back({CVec::Zero(dim), cplx(0.0, 0.0), std::numeric_limits<double>::infinity()});
        return out;
    }
    const CMat ei = lu.inverse();
    const CMat m = ei * x * ei.adjoint();
    std::vector<int> cluster(static_cast<size_t>(dim), -1);
    int nc = 0;
    for (Eigen::Index i = 0; i < dim; ++i) {
        if (cluster[static_cast<size_t>(i)] >= 0) continue;
        for (Eigen::Index j = i; j < dim; ++j)
            if (cluster[static_cast<size_t>(j)] < 0 && std::abs(kap(j) - kap(i)) <= 1e-9 * scale)
                cluster[static_cast<size_t>(j)] = nc;
        ++nc;
    }
    double off = 0.0;
    for (Eigen::Index i = 0; i < dim; ++i)
        for (Eigen::Index j = 0; j < dim; ++j)
            if (cluster[static_cast<size_t>(i)] != cluster[static_cast<size_t>(j)]) off += std::norm(m(i, j));
    const double res = std::sqrt(off) / std::max(m.norm(), 1e-300);
    const double wmax = std::max(m.cwiseAbs().maxCoeff(), 1e-300);
    for (int c = 0; c < nc; ++c) {
        std::vector<Eigen::Index> idx;
        for (Eigen::Index i = 0; i < dim; ++i)
            if (cluster[static_cast<size_t>(i)] == c) idx.push_back(i);
        const auto sz = static_cast<Eigen::Index>(idx.size());
        CMat blk(sz, sz), ec(dim, sz);
        for (Eigen::Index a = 0; a < sz; ++a) {
            ec.col(a) = e.col(idx[static_cast<size_t>(a)]);
            for (Eigen::Index b = 0; b < sz; ++b) blk(a, b) = m(idx[static_cast<size_t>(a)], idx[static_cast<size_t>(b)]);
        }
        Eigen::SelfAdjointEigenSolver<CMat> bs(hermitian_part(blk));
        for (Eigen::Index k = 0; k < sz; ++k) {
            const double w = bs.eigenvalues()(k);
            if (std::abs(w) <= 1e-12 * wmax) continue;
            out.push_back({std::sqrt(std::abs(w)) * (ec * bs.eigenvectors().col(k)), kap(idx.front()), res});
        }
    }
    return out;
}

} // namespace

BalanceReport balance_check(const SystemSpec& spec, const XiDecomposition& d, const LindbladSet& ls,
                            Convention sign) {
    if (!spec.uniform_temperature()) throw Error(ErrorCode::NonUniformTemperature, "balance_check needs one temperature");
    const double beta = spec.baths().front().beta;
    const RMat& h = spec.hessian();
    BalanceReport r;
    const EllipticReport el = elliptic_classify(h);
    r.elliptic = el.elliptic;
    r.xi_a_norm = d.xi_a.norm();

    const double period = el.elliptic ? 2.0 * std::numbers::pi / el.frequencies(0) : 1.0;
    for (int k = 1; k <= 16; ++k) {
        const CMat st = real_propagator(h, period * k / 16.0).cast<cplx>();
        r.commutes = std::max(r.commutes, invariance(st, d.xi_a));
    }
    const CMat sb = wick_propagator(h, beta, spec.hbar(), sign).matrix;
    r.inv_xi_h = invariance(sb, d.xi_h);
    r.inv_xi_a = invariance(sb, d.xi_a);
    r.inv_xi = invariance(sb, d.xi_matrix);
    r.necessary_xi_h = (d.xi_h - 2.0 * coupling_matrices(spec).K * sb).norm();

    const RMat jht = (symplectic_form(spec.n()) * h).transpose();
    const auto al = align(xi_h_from_lindblad(ls), jht);
    std::vector<double> omega;
    double lam_scale = 0.0;
    for (const auto& x : al) {
        r.eigen_residual = std::max(r.eigen_residual, x.residual);
        // S_t^T lambda = e^{kappa t} lambda = e^{-i omega t} lambda
        omega.push_back((I_unit * x.kappa).real());
        r.bohr_frequencies.push_back(omega.back());
        r.rotated_lambdas.push_back(x.lambda);
        lam_scale = std::max(lam_scale, x.lambda.norm());
    }

    // pair each omega > 0 with an omega < 0 partner by minimum total weight
    std::vector<size_t> pos, neg;
    const double wtol = 1e-8 * std::max(1.0, el.elliptic ? el.frequencies.maxCoeff() : 1.0);
    for (size_t k = 0; k < omega.size(); ++k) {
        if (omega[k] > wtol) pos.push_back(k);
        else if (omega[k] < -wtol) neg.push_back(k);
    }
    auto vec_res = [&](size_t p, size_t q) {
        const double c = std::exp(-0.5 * beta * spec.hbar() * omega[p]);
        const CVec& lp = al[p].lambda;
        const CVec& lq = al[q].lambda;
        const double ov = std::abs(lp.conjugate().dot(lq));
        const double v = lq.squaredNorm() + c * c * lp.squaredNorm() - 2.0 * c * ov;
        return std::sqrt(std::max(0.0, v));
    };
    auto cost = [&](size_t p, size_t q) {
        return vec_res(p, q) / std::max(lam_scale, 1e-300) + std::abs(omega[p] + omega[q]) / std::max(wtol, 1e-300);
    };
    if (!pos.empty() && pos.size() == neg.size()) {
        std::vector<size_t> perm(neg.size());
        std::iota(perm.begin(), perm.end(), 0);
        double best = std::numeric_limits<double>::infinity();
        std::vector<size_t> best_perm = perm;
        do {
            double tot = 0.0;
            for (size_t k = 0; k < pos.size(); ++k) tot += cost(pos[k], neg[perm[k]]);
            if (tot < best) {
                best = tot;
                best_perm = perm;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        for (size_t k = 0; k < pos.size(); ++k) {
            const size_t p = pos[k], q = neg[best_perm[k]];
            r.pairing_residual = std::max(r.pairing_residual, vec_res(p, q) / std::max(lam_scale, 1e-300));
            r.pairing_weights.push_back(al[q].lambda.squaredNorm() / al[p].lambda.squaredNorm());
        }
    } else if (pos.size() != neg.size()) {
        r.pairing_residual = std::numeric_limits<double>::infinity();
    }
    return r;
}

} // namespace qcptp
