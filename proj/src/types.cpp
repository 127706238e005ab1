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

#include "qcptp/types.hpp"

namespace qcptp {

std::string_view to_string(Convention c) {
    return c == Convention::AppendixB ? "appendix-b" : "main-text";
}

std::string_view to_string(Verdict v) {
    switch (v) {
    case Verdict::CPTP: return "CPTP";
    case Verdict::NotCPTP: return "NotCPTP";
    case Verdict::Marginal: return "Marginal";
    }
    return "?";
}

Convention convention_from_string(std::string_view s) {
    if (s == "appendix-b") return Convention::AppendixB;
    if (s == "main-text") return Convention::MainText;
    throw Error(ErrorCode::InvalidInput, "unknown convention '" + std::string(s) +
                                             "' (expected appendix-b or main-text)");
}

std::string_view to_string(ErrorCode c) {
    switch (c) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::ConstraintViolation: return "ConstraintViolation";
    case ErrorCode::NoRealShift: return "NoRealShift";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::NotHurwitz: return "NotHurwitz";
    case ErrorCode::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::TruncationBreach: return "TruncationBreach";
    case ErrorCode::NonUniformTemperature: return "NonUniformTemperature";
    case ErrorCode::NotUnitary: return "NotUnitary";
    case ErrorCode::NotGCommuting: return "NotGCommuting";
    case ErrorCode::StepUnderflow: return "StepUnderflow";
    case ErrorCode::Degenerate: return "Degenerate";
    case ErrorCode::Unembeddable: return "Unembeddable";
    }
    return "Unknown";
}

} // namespace qcptp
