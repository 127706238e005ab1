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

#include "qcptp/fock_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include <unsupported/Eigen/KroneckerProduct>

namespace qcptp {

namespace {

constexpr int kMaxBigDim = 4096;
constexpr int kMaxDenseDim = 40;

CMat ladder(int levels) {
    CMat a = CMat::Zero(levels, levels);
    for (int k = 1; k < levels; ++k) a(k - 1, k) = std::sqrt(static_cast<double>(k));
    return a;
}

// single-mode operator embedded at position mode of n_modes
CMat embed(const CMat& op, int mode, int n_modes) {
    const auto lv = op.rows();
    CMat out = CMat::Identity(1, 1);
    for (int m = 0; m < n_modes; ++m) {
        const CMat f = m == mode ? op : CMat(CMat::Identity(lv, lv));
        out = Eigen::kroneckerProduct(out, f).eval();
    }
    return out;
}

double spectral_norm(const CMat& a) {
    if (a.size() == 0) return 0.0;
    return Eigen::JacobiSVD<CMat>(a).singularValues()(0);
}

} // namespace

std::string_view to_string(SuperSource s) {
    switch (s) {
    case SuperSource::DirectEq2: return "direct";
    case SuperSource::QTCL: return "qtcl";
    case SuperSource::HighTempEq8: return "high-temp";
    case SuperSource::OpticsEq22: return "optics";
    case SuperSource::GTCL: return "gtcl";
    }
    return "?";
}

CMat FockRep::compress(const CMat& big) const {
    CMat out(dim, dim);
    for (int j = 0; j < dim; ++j)
        for (int i = 0; i < dim; ++i) out(i, j) = big(keep[static_cast<size_t>(i)], keep[static_cast<size_t>(j)]);
    return out;
}

CMat FockRep::product(int j, int k) const {
    return compress(x_big[static_cast<size_t>(j)] * x_big[static_cast<size_t>(k)]);
}

CMat FockRep::annihilation(int mode) const {
    const double s = scales[static_cast<size_t>(mode)];
    const CMat a = (std::sqrt(s) * x_big[static_cast<size_t>(mode)] +
                    I_unit * x_big[static_cast<size_t>(mode + n_modes)] / std::sqrt(s)) /
                   std::sqrt(2.0 * hbar);
    return compress(a);
}

FockRep build_fock(const SystemSpec& spec, int truncation, const std::vector<double>& scales, int pad) {
    const int n = spec.n();
    if (n > 2) throw Error(ErrorCode::BudgetExceeded, "Fock oracle supports at most two modes");
    if (truncation < 2) throw Error(ErrorCode::InvalidInput, "truncation must be >= 2");
    if (pad < 0) pad = n == 1 ? std::max(48, 2 * truncation) : truncation;
    const int nb = truncation + pad;
    const double big = std::pow(static_cast<double>(nb), n);
    if (big > kMaxBigDim) throw Error(ErrorCode::BudgetExceeded, "padded Fock space too large");

    FockRep f;
    f.n_modes = n;
    f.truncation = truncation;
    f.pad = pad;
    f.hbar = spec.hbar();
    f.scales = scales.empty() ? std::vector<double>(static_cast<size_t>(n), 1.0) : scales;
    if (static_cast<int>(f.scales.size()) != n) throw Error(ErrorCode::InvalidInput, "one scale per mode");
    for (double s : f.scales)
        if (!(s > 0.0)) throw Error(ErrorCode::InvalidInput, "scales must be positive");
    f.big_dim = static_cast<int>(big);
    f.dim = static_cast<int>(std::pow(static_cast<double>(truncation), n));

    for (int i = 0; i < f.big_dim; ++i) {
        int r = i;
        bool ok = true;
        for (int m = 0; m < n; ++m) {
            ok = ok && (r % nb) < truncation;
            r /= nb;
        }
        if (ok) f.keep.push_back(i);
    }

    const CMat a = ladder(nb);
    const CMat ad = a.adjoint();
    f.x_big.resize(static_cast<size_t>(2 * n));
    for (int m = 0; m < n; ++m) {
        const double s = f.scales[static_cast<size_t>(m)];
        f.x_big[static_cast<size_t>(m)] = embed(std::sqrt(f.hbar / (2 * s)) * (a + ad), m, n);
        f.x_big[static_cast<size_t>(m + n)] = embed(I_unit * std::sqrt(f.hbar * s / 2) * (ad - a), m, n);
    }
    const CMat id_big = CMat::Identity(f.big_dim, f.big_dim);
    std::vector<CMat> y(static_cast<size_t>(2 * n));
    for (int j = 0; j < 2 * n; ++j) y[static_cast<size_t>(j)] = f.x_big[static_cast<size_t>(j)] - spec.xi()(j) * id_big;
    f.h_big = spec.phi() * id_big;
    for (int j = 0; j < 2 * n; ++j)
        for (int k = 0; k < 2 * n; ++k)
            if (spec.hessian()(j, k) != 0.0)
                f.h_big += 0.5 * spec.hessian()(j, k) * y[static_cast<size_t>(j)] * y[static_cast<size_t>(k)];
    f.h_big = hermitian_part(f.h_big);
    for (const auto& xb : f.x_big) f.x.push_back(f.compress(xb));
    f.h = f.compress(f.h_big);
    f.identity = CMat::Identity(f.dim, f.dim);
    return f;
}

CMat Superoperator::apply(const CMat& rho) const {
    CMat out = left * rho + rho * right;
    for (const auto& [a, b] : sandwiches) out.noalias() += a * rho * b;
    return out;
}

double Superoperator::norm_bound() const {
    double s = spectral_norm(left) + spectral_norm(right);
    for (const auto& [a, b] : sandwiches) s += spectral_norm(a) * spectral_norm(b);
    return s;
}

CMat Superoperator::to_dense() const {
    if (dim > kMaxDenseDim) throw Error(ErrorCode::BudgetExceeded, "dense superoperator too large");
    const CMat id = CMat::Identity(dim, dim);
    CMat g = Eigen::kroneckerProduct(id, left);
    g += Eigen::kroneckerProduct(right.transpose(), id);
    for (const auto& [a, b] : sandwiches) g += Eigen::kroneckerProduct(b.transpose(), a);
    return g;
}

CMat Superoperator::restricted(const std::vector<int>& idx) const {
    const auto m = static_cast<Eigen::Index>(idx.size());
    CMat out(m * m, m * m);
    CMat e = CMat::Zero(dim, dim);
    for (Eigen::Index b = 0; b < m; ++b) {
        for (Eigen::Index a = 0; a < m; ++a) {
            e(idx[static_cast<size_t>(a)], idx[static_cast<size_t>(b)]) = 1.0;
            const CMat r = apply(e);
            e(idx[static_cast<size_t>(a)], idx[static_cast<size_t>(b)]) = 0.0;
            for (Eigen::Index d = 0; d < m; ++d)
                for (Eigen::Index c = 0; c < m; ++c)
                    out(c + m * d, a + m * b) = r(idx[static_cast<size_t>(c)], idx[static_cast<size_t>(d)]);
        }
    }
    return out;
}

std::vector<int> low_block(const FockRep& f, int limit) {
    std::vector<int> idx;
    for (int i = 0; i < f.dim; ++i) {
        int r = i;
        bool ok = true;
        for (int m = 0; m < f.n_modes; ++m) {
            ok = ok && (r % f.truncation) < limit;
            r /= f.truncation;
        }
        if (ok) idx.push_back(i);
    }
    return idx;
}

double block_distance(const Superoperator& a, const Superoperator& b, const std::vector<int>& idx) {
    const CMat rb = b.restricted(idx);
    const double nb = rb.norm();
    const double d = (a.restricted(idx) - rb).norm();
    return nb > 0.0 ? d / nb : d;
}

namespace {

Superoperator commutator_part(const FockRep& f, SuperSource src) {
    Superoperator g;
    g.source = src;
    g.dim = f.dim;
    // (i/hbar)[rho, H]
    g.left = (-I_unit / f.hbar) * f.h;
    g.right = (I_unit / f.hbar) * f.h;
    return g;
}

struct HalfExponentials {
    CMat plus;   // e^{beta H/2}
    CMat minus;  // e^{-beta H/2}
};

HalfExponentials half_exponentials(const FockRep& f, double beta) {
    Eigen::SelfAdjointEigenSolver<CMat> es(f.h_big);
    const RVec w = es.eigenvalues();
    const CMat& v = es.eigenvectors();
    // common shift cancels between the two factors of every product
    const double shift = 0.5 * (w.maxCoeff() + w.minCoeff());
    RVec ep = (0.5 * beta * (w.array() - shift)).exp();
    RVec em = (-0.5 * beta * (w.array() - shift)).exp();
    return {v * ep.cast<cplx>().asDiagonal() * v.adjoint(), v * em.cast<cplx>().asDiagonal() * v.adjoint()};
}

} // namespace

Superoperator generator_direct(const FockRep& f, const SystemSpec& spec) {
    if (spec.n() != f.n_modes) throw Error(ErrorCode::InvalidInput, "mode count mismatch");
    Superoperator g = commutator_part(f, SuperSource::DirectEq2);
    const RMat k = coupling_matrices(spec).K;
    std::map<double, HalfExponentials> cache;
    for (int i = 0; i < spec.dim(); ++i) {
        if (k(i, i) == 0.0) continue;
        const double b = spec.row_beta(i);
        auto it = cache.find(b);
        if (it == cache.end()) it = cache.emplace(b, half_exponentials(f, b)).first;
        const CMat& xb = f.x_big[static_cast<size_t>(i)];
        // y = e^{bH/2} x e^{-bH/2}; its adjoint is e^{-bH/2} x e^{bH/2}
        const CMat yb = it->second.plus * xb * it->second.minus;
        const CMat ydb = it->second.minus * xb * it->second.plus;
        const double c = k(i, i) / spec.hbar();
        g.right -= c * f.compress(yb * xb);
        g.left -= c * f.compress(xb * ydb);
        const CMat& x = f.x[static_cast<size_t>(i)];
        g.sandwiches.emplace_back(c * x, f.compress(yb));
        g.sandwiches.emplace_back(c * f.compress(ydb), x);
    }
    return g;
}

Superoperator generator_qtcl(const FockRep& f, const CMat& xi, const RVec& eta) {
    const int dim = 2 * f.n_modes;
    if (xi.rows() != dim || xi.cols() != dim || eta.size() != dim) {
        throw Error(ErrorCode::InvalidInput, "Xi/eta dimension mismatch");
    }
    Superoperator g = commutator_part(f, SuperSource::QTCL);
    const CMat id_big = CMat::Identity(f.big_dim, f.big_dim);
    std::vector<CMat> z;
    for (int j = 0; j < dim; ++j) z.push_back(f.x_big[static_cast<size_t>(j)] - eta(j) * id_big);
    const double ih = 1.0 / f.hbar;
    for (int j = 0; j < dim; ++j) {
        for (int k = 0; k < dim; ++k) {
            const cplx lt = xi(k, j);             // Xi^T_jk
            const cplx nt = std::conj(xi(j, k));  // Xi^*_jk
            if (lt == 0.0 && nt == 0.0) continue;
            const CMat zz = f.compress(z[static_cast<size_t>(j)] * z[static_cast<size_t>(k)]);
            g.right -= ih * lt * zz;
            g.left -= ih * nt * zz;
        }
    }
    const CMat xh = xi + xi.adjoint();
    Eigen::SelfAdjointEigenSolver<CMat> es(hermitian_part(xh));
    for (int mu = 0; mu < dim; ++mu) {
        const double a = es.eigenvalues()(mu);
        if (a == 0.0) continue;
        const CVec v = es.eigenvectors().col(mu);
        CMat zl = CMat::Zero(f.big_dim, f.big_dim);
        for (int j = 0; j < dim; ++j) zl += v(j) * z[static_cast<size_t>(j)];
        const CMat zs = f.compress(zl);
        g.sandwiches.emplace_back(ih * a * zs, zs.adjoint());
    }
    return g;
}

Superoperator generator_high_temp(const FockRep& f, const SystemSpec& spec) {
    if (spec.n() != f.n_modes) throw Error(ErrorCode::InvalidInput, "mode count mismatch");
    Superoperator g = commutator_part(f, SuperSource::HighTempEq8);
    const RMat k = coupling_matrices(spec).K;
    for (int i = 0; i < spec.dim(); ++i) {
        if (k(i, i) == 0.0) continue;
        const CMat& xb = f.x_big[static_cast<size_t>(i)];
        const CMat& x = f.x[static_cast<size_t>(i)];
        const CMat xx = f.compress(xb * xb);
        // D0 = -(K/hbar)({rho, x^2} - 2 x rho x)
        const double c0 = k(i, i) / f.hbar;
        g.left -= c0 * xx;
        g.right -= c0 * xx;
        g.sandwiches.emplace_back(2.0 * c0 * x, x);
        // D1 = (beta K / 2 hbar)[{rho, C}, x] with C = [x, H]
        const double c1 = spec.row_beta(i) * k(i, i) / (2.0 * f.hbar);
        const CMat cb = xb * f.h_big - f.h_big * xb;
        const CMat c = f.compress(cb);
        g.right += c1 * f.compress(cb * xb);
        g.left -= c1 * f.compress(xb * cb);
        g.sandwiches.emplace_back(c1 * c, x);
        g.sandwiches.emplace_back(-c1 * x, c);
    }
    return g;
}

Superoperator generator_optics(const FockRep& f, double m, double omega, double beta, double gamma_tilde) {
    if (f.n_modes != 1) throw Error(ErrorCode::InvalidInput, "optics form is single-mode");
    Superoperator g = commutator_part(f, SuperSource::OpticsEq22);
    const CMat& qb = f.x_big[0];
    const CMat& pb = f.x_big[1];
    const CMat& q = f.x[0];
    const CMat& p = f.x[1];
    const CMat comm = f.compress(qb * pb - pb * qb);
    // -i g/(4 hbar) ([q, {p, rho}] - [p, {q, rho}])
    const cplx c1 = -I_unit * gamma_tilde / (4.0 * f.hbar);
    g.left += c1 * comm;
    g.right += c1 * comm;
    g.sandwiches.emplace_back(2.0 * c1 * q, p);
    g.sandwiches.emplace_back(-2.0 * c1 * p, q);
    // -(g/(4 hbar)) coth(b hbar w/2) (m w [q,[q,rho]] + [p,[p,rho]]/(m w))
    const double c2 = -gamma_tilde / (4.0 * f.hbar) / std::tanh(0.5 * beta * f.hbar * omega);
    const double mw = m * omega;
    const CMat quad = mw * f.compress(qb * qb) + f.compress(pb * pb) / mw;
    g.left += c2 * quad;
    g.right += c2 * quad;
    g.sandwiches.emplace_back(-2.0 * c2 * mw * q, q);
    g.sandwiches.emplace_back(-2.0 * c2 / mw * p, p);
    return g;
}

Superoperator generator_lindblad(const FockRep& f, const CMat& h_eff, const std::vector<LindbladOperator>& ls) {
    Superoperator g;
    g.source = SuperSource::GTCL;
    g.dim = f.dim;
    g.left = (-I_unit / f.hbar) * h_eff;
    g.right = (I_unit / f.hbar) * h_eff;
    for (const auto& l : ls) {
        const double c = static_cast<double>(l.sign) / f.hbar;
        const CMat ll = l.op.adjoint() * l.op;
        g.left -= 0.5 * c * ll;
        g.right -= 0.5 * c * ll;
        g.sandwiches.emplace_back(c * l.op, l.op.adjoint());
    }
    return g;
}

Superoperator generator_gtcl(const FockRep& f, const LindbladSet& ls) {
    const int dim = 2 * f.n_modes;
    if (ls.eta.size() != dim) throw Error(ErrorCode::InvalidInput, "LindbladSet dimension mismatch");
    const CMat id_big = CMat::Identity(f.big_dim, f.big_dim);
    std::vector<CMat> z;
    for (int j = 0; j < dim; ++j) z.push_back(f.x_big[static_cast<size_t>(j)] - ls.eta(j) * id_big);
    CMat h = f.h_big;
    for (int j = 0; j < dim; ++j) {
        h += ls.linear_shift(j) * z[static_cast<size_t>(j)];
        for (int k = 0; k < dim; ++k)
            if (ls.h_shift(j, k) != 0.0)
                h += 0.5 * ls.h_shift(j, k) * z[static_cast<size_t>(j)] * z[static_cast<size_t>(k)];
    }
    Superoperator g;
    g.source = SuperSource::GTCL;
    g.dim = f.dim;
    const CMat hs = f.compress(hermitian_part(h));
    g.left = (-I_unit / f.hbar) * hs;
    g.right = (I_unit / f.hbar) * hs;
    for (size_t mu = 0; mu < ls.lambdas.size(); ++mu) {
        CMat lb = ls.offsets[mu] * id_big;
        for (int j = 0; j < dim; ++j) lb += ls.lambdas[mu](j) * z[static_cast<size_t>(j)];
        const double c = static_cast<double>(ls.signs[mu]) / f.hbar;
        const CMat ll = f.compress(lb.adjoint() * lb);
        const CMat l = f.compress(lb);
        g.left -= 0.5 * c * ll;
        g.right -= 0.5 * c * ll;
        g.sandwiches.emplace_back(c * l, l.adjoint());
    }
    return g;
}

void moments_of(const FockRep& f, const CMat& rho, RVec& mean, RMat& cov) {
    const int dim = 2 * f.n_modes;
    mean.resize(dim);
    cov.resize(dim, dim);
    for (int j = 0; j < dim; ++j) mean(j) = (rho * f.x[static_cast<size_t>(j)]).trace().real();
    for (int j = 0; j < dim; ++j) {
        for (int k = j; k < dim; ++k) {
            const CMat s = f.product(j, k) + f.product(k, j);
            cov(j, k) = cov(k, j) = 0.5 * (rho * s).trace().real() - mean(j) * mean(k);
        }
    }
}

double top_level_occupation(const FockRep& f, const CMat& rho) {
    double occ = 0.0;
    for (int i = 0; i < f.dim; ++i) {
        int r = i;
        bool top = false;
        for (int m = 0; m < f.n_modes; ++m) {
            top = top || (r % f.truncation) >= f.truncation - 2;
            r /= f.truncation;
        }
        if (top) occ += std::abs(rho(i, i).real());
    }
    return occ;
}

std::vector<DensitySample> evolve_density(const FockRep& f, const Superoperator& g, const CMat& rho0,
                                          const std::vector<double>& t, const DensityOptions& opt) {
    if (rho0.rows() != f.dim || rho0.cols() != f.dim || g.dim != f.dim) {
        throw Error(ErrorCode::InvalidInput, "density matrix dimension mismatch");
    }
    if (t.empty() || !std::is_sorted(t.begin(), t.end())) throw Error(ErrorCode::InvalidInput, "t_grid must be ascending");
    const double gn = std::max(g.norm_bound(), 1e-300);
    std::vector<DensitySample> out;
    CMat rho = hermitian_part(rho0);
    auto record = [&](double time) {
        DensitySample s;
        s.t = time;
        s.trace = rho.trace().real();
        Eigen::SelfAdjointEigenSolver<CMat> es(rho, Eigen::EigenvaluesOnly);
        s.min_eigenvalue = es.eigenvalues()(0);
        moments_of(f, rho, s.mean, s.cov);
        if (opt.keep_rho) s.rho = rho;
        if (opt.check_truncation) {
            const double occ = top_level_occupation(f, rho);
            if (occ > opt.breach_level) {
                throw Error(ErrorCode::TruncationBreach,
                            "top-level occupation " + std::to_string(occ) + " at t=" + std::to_string(time));
            }
        }
        out.push_back(std::move(s));
    };
    record(t.front());
    for (size_t k = 1; k < t.size(); ++k) {
        const double span = t[k] - t[k - 1];
        const int steps = std::max(1, static_cast<int>(std::ceil(span * gn / opt.max_norm_step)));
        const double h = span / steps;
        for (int s = 0; s < steps; ++s) {
            CMat term = rho;
            CMat acc = rho;
            for (int j = 1; j < 80; ++j) {
                term = g.apply(term) * (h / j);
                acc += term;
                if (term.norm() <= 1e-17 * acc.norm()) break;
            }
            rho = hermitian_part(acc);
        }
        record(t[k]);
    }
    return out;
}

CMat thermal_state(const FockRep& f, double beta) {
    if (!(beta >= 0.0)) throw Error(ErrorCode::InvalidInput, "beta must be >= 0");
    Eigen::SelfAdjointEigenSolver<CMat> es(f.h_big);
    const RVec w = es.eigenvalues();
    const RVec p = (-beta * (w.array() - w.minCoeff())).exp();
    const CMat rb = es.eigenvectors() * p.cast<cplx>().asDiagonal() * es.eigenvectors().adjoint();
    CMat r = hermitian_part(f.compress(rb));
    if (beta == 0.0) r = f.identity;
    return r / r.trace().real();
}

CMat coherent_state(const FockRep& f, const std::vector<cplx>& alphas) {
    if (static_cast<int>(alphas.size()) != f.n_modes) throw Error(ErrorCode::InvalidInput, "one amplitude per mode");
    CVec psi = CVec::Ones(1);
    for (const cplx al : alphas) {
        CVec c(f.truncation);
        cplx term = std::exp(-0.5 * std::norm(al));
        for (int k = 0; k < f.truncation; ++k) {
            c(k) = term;
            term *= al / std::sqrt(static_cast<double>(k + 1));
        }
        psi = Eigen::kroneckerProduct(psi, c).eval();
    }
    psi.normalize();
    return psi * psi.adjoint();
}

cplx coherent_amplitude(const FockRep& f, int mode, double q, double p) {
    const double s = f.scales[static_cast<size_t>(mode)];
    return {q / std::sqrt(2.0 * f.hbar / s), p / std::sqrt(2.0 * f.hbar * s)};
}

CMat number_state(const FockRep& f, const std::vector<int>& levels) {
    if (static_cast<int>(levels.size()) != f.n_modes) throw Error(ErrorCode::InvalidInput, "one level per mode");
    int idx = 0;
    for (int l : levels) {
        if (l < 0 || l >= f.truncation) throw Error(ErrorCode::InvalidInput, "level outside truncation");
        idx = idx * f.truncation + l;
    }
    CMat r = CMat::Zero(f.dim, f.dim);
    r(idx, idx) = 1.0;
    return r;
}

double trace_distance(const CMat& a, const CMat& b) {
    Eigen::SelfAdjointEigenSolver<CMat> es(hermitian_part(a - b), Eigen::EigenvaluesOnly);
    return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

} // namespace qcptp
