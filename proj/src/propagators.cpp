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

#include "qcptp/propagators.hpp"

#include <cmath>

#include <unsupported/Eigen/MatrixFunctions>

namespace qcptp {

namespace {

// log(DBL_MAX) with headroom for the scaling-and-squaring intermediate products
constexpr double kMaxExponent = 700.0;

double one_norm(const CMat& a) { return a.cwiseAbs().colwise().sum().maxCoeff(); }

} // namespace

RMat expm(const RMat& a) {
    if (!a.allFinite()) throw Error(ErrorCode::InvalidInput, "expm of nonfinite matrix");
    return a.exp();
}

CMat expm(const CMat& a) {
    if (!a.allFinite()) throw Error(ErrorCode::InvalidInput, "expm of nonfinite matrix");
    return a.exp();
}

RMat real_propagator(const RMat& hessian, double t) {
    const int n = static_cast<int>(hessian.rows() / 2);
    if (hessian.rows() != 2 * n || hessian.cols() != hessian.rows() || n < 1) {
        throw Error(ErrorCode::InvalidInput, "hessian must be 2n x 2n");
    }
    return expm(RMat(symplectic_form(n) * hessian * t));
}

WickPropagator wick_propagator(const RMat& hessian, double beta, double hbar, Convention sign) {
    const int n = static_cast<int>(hessian.rows() / 2);
    if (hessian.rows() != 2 * n || hessian.cols() != hessian.rows() || n < 1) {
        throw Error(ErrorCode::InvalidInput, "hessian must be 2n x 2n");
    }
    if (!(beta >= 0.0) || !(hbar > 0.0) || !std::isfinite(beta)) {
        throw Error(ErrorCode::InvalidInput, "beta >= 0 and hbar > 0 required");
    }
    const double s = sign == Convention::AppendixB ? -1.0 : 1.0;
    const CMat gen = (cplx(0.0, s * hbar * beta / 2.0) * (symplectic_form(n) * hessian).cast<cplx>()).eval();
    if (one_norm(gen) > kMaxExponent) {
        throw Error(ErrorCode::Overflow, "|hbar beta J H / 2| too large for exp");
    }
    WickPropagator w;
    w.matrix = expm(gen);
    w.beta = beta;
    w.sign = sign;
    if (!w.matrix.allFinite()) throw Error(ErrorCode::Overflow, "S_beta overflowed");
    return w;
}

N1Case classify_n1(const RMat& h, double rel_tol) {
    const double det = h(0, 0) * h(1, 1) - h(0, 1) * h(1, 0);
    const double scale = std::max(h.squaredNorm(), 1e-300);
    if (std::abs(det) <= rel_tol * scale) return N1Case::Parabolic;
    return det > 0 ? N1Case::Elliptic : N1Case::Hyperbolic;
}

bool match_network(const RMat& h, double& omega, double& kappa, double rel_tol) {
    if (h.rows() != 4 || h.cols() != 4) return false;
    const double w = h(2, 2);
    const double k = -h(0, 1);
    RMat ref = RMat::Zero(4, 4);
    ref(0, 0) = ref(1, 1) = w + k;
    ref(0, 1) = ref(1, 0) = -k;
    ref(2, 2) = ref(3, 3) = w;
    if ((h - ref).norm() > rel_tol * std::max(1.0, h.norm())) return false;
    if (!(w > 0.0) || w + 2.0 * k <= 0.0) return false;
    omega = w;
    kappa = k;
    return true;
}

CMat closed_form_sbeta(const SystemSpec& spec, Convention sign) {
    if (!spec.uniform_temperature()) {
        throw Error(ErrorCode::Unsupported, "closed forms need a single temperature");
    }
    const double beta = spec.baths().front().beta;
    const double a = spec.hbar() * beta / 2.0;
    const RMat& h = spec.hessian();
    CMat s;
    if (spec.n() == 1) {
        const double det = h(0, 0) * h(1, 1) - h(0, 1) * h(1, 0);
        const CMat jh = (symplectic_form(1) * h).cast<cplx>();
        const CMat id = CMat::Identity(2, 2);
        switch (classify_n1(h)) {
        case N1Case::Elliptic: {
            const double th = a * std::sqrt(det);
            s = std::cosh(th) * id - I_unit * (a * std::sinh(th) / th) * jh;
            break;
        }
        case N1Case::Hyperbolic: {
            const double th = a * std::sqrt(-det);
            s = std::cos(th) * id - I_unit * (a * std::sin(th) / th) * jh;
            break;
        }
        case N1Case::Parabolic:
            s = id - I_unit * a * jh;
            break;
        }
    } else {
        double w = 0, k = 0;
        if (spec.n() != 2 || !match_network(h, w, k)) {
            throw Error(ErrorCode::Unsupported, "no closed form for this Hamiltonian");
        }
        const double th = std::sqrt(w * (w + 2.0 * k));
        const double c1 = std::cosh(a * w), c2 = std::cosh(a * th);
        const double s1 = std::sinh(a * w), s2 = std::sinh(a * th);
        s = CMat::Zero(4, 4);
        for (int i = 0; i < 4; ++i) s(i, i) = 0.5 * c1 + 0.5 * c2;
        s(0, 1) = s(1, 0) = s(2, 3) = s(3, 2) = 0.5 * c1 - 0.5 * c2;
        s(0, 2) = s(1, 3) = -0.5 * I_unit * (s1 + w / th * s2);
        s(0, 3) = s(1, 2) = -0.5 * I_unit * (s1 - w / th * s2);
        s(2, 0) = s(3, 1) = 0.5 * I_unit * (s1 + th / w * s2);
        s(2, 1) = s(3, 0) = 0.5 * I_unit * (s1 - th / w * s2);
    }
    if (sign == Convention::MainText) s = s.conjugate().eval();
    return s;
}

} // namespace qcptp
