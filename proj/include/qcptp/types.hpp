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

// types.hpp: shared matrix aliases, enums, tolerances and the error type

#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>

#include <Eigen/Dense>

namespace qcptp {

using cplx = std::complex<double>;
using RMat = Eigen::MatrixXd;
using CMat = Eigen::MatrixXcd;
using RVec = Eigen::VectorXd;
using CVec = Eigen::VectorXcd;

inline constexpr cplx I_unit{0.0, 1.0};

// Sign of the exponent in the Wick-rotated propagator S_beta = exp(-/+ i hbar beta J H / 2).
// AppendixB (-i) implements x -> e^{beta H/2} x e^{-beta H/2}; MainText (+i) is its conjugate.
enum class Convention { AppendixB, MainText };

enum class Verdict { CPTP, NotCPTP, Marginal };

std::string_view to_string(Convention c);
std::string_view to_string(Verdict v);
Convention convention_from_string(std::string_view s);

struct Tolerances {
    double identity_rel = 1e-12;  // exact-identity checks (symmetry, constraints)
    double psd = 1e-10;           // PSD verdict band, relative to max(1, ||Xi_H||_F)
};

enum class ErrorCode {
    InvalidInput = 1,
    ConstraintViolation,
    NoRealShift,
    Unsupported,
    Overflow,
    NotHurwitz,
    NotPositiveDefinite,
    BudgetExceeded,
    TruncationBreach,
    NonUniformTemperature,
    NotUnitary,
    NotGCommuting,
    StepUnderflow,
    Degenerate,
    Unembeddable,
};

std::string_view to_string(ErrorCode c);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

// Hermitian part (A + A^dagger)/2.
inline CMat hermitian_part(const CMat& a) { return 0.5 * (a + a.adjoint()); }

inline bool all_finite(const RMat& m) { return m.allFinite(); }

} // namespace qcptp
