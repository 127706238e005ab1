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

#include "qcptp/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace qcptp {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& field, const std::string& what) {
    throw Error(ErrorCode::InvalidInput, "field '" + field + "': " + what);
}

double number(const json& j, const std::string& field) {
    if (!j.is_number()) fail(field, "expected a number");
    return j.get<double>();
}

RVec vector_of(const json& j, const std::string& field, int len) {
    if (!j.is_array() || static_cast<int>(j.size()) != len) fail(field, "expected an array of length " + std::to_string(len));
    RVec v(len);
    for (int i = 0; i < len; ++i) v(i) = number(j[static_cast<size_t>(i)], field + "[" + std::to_string(i) + "]");
    return v;
}

RMat matrix_of(const json& j, const std::string& field, int len) {
    if (!j.is_array() || static_cast<int>(j.size()) != len) fail(field, "expected " + std::to_string(len) + " rows");
    RMat m(len, len);
    for (int i = 0; i < len; ++i) {
        const std::string f = field + "[" + std::to_string(i) + "]";
        m.row(i) = vector_of(j[static_cast<size_t>(i)], f, len).transpose();
    }
    return m;
}

const json& member(const json& j, const std::string& key) {
    auto it = j.find(key);
    if (it == j.end()) fail(key, "missing");
    return *it;
}

std::string line_of(const std::string& text, size_t byte) {
    size_t line = 1, col = 1;
    for (size_t i = 0; i < std::min(byte, text.size()); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

} // namespace

Config parse_config(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::InvalidInput, "malformed JSON at " + line_of(text, e.byte > 0 ? e.byte - 1 : 0));
    }
    if (!j.is_object()) throw Error(ErrorCode::InvalidInput, "config must be a JSON object");
    const json& jn = member(j, "n");
    if (!jn.is_number_integer() || jn.get<long long>() < 1 || jn.get<long long>() > 64) fail("n", "expected a positive integer");
    const int n = jn.get<int>();
    const double hbar = j.contains("hbar") ? number(j["hbar"], "hbar") : 1.0;
    const double phi = j.contains("phi") ? number(j["phi"], "phi") : 0.0;
    const RMat h = matrix_of(member(j, "hessian"), "hessian", 2 * n);
    const RVec xi = j.contains("xi") ? vector_of(j["xi"], "xi", 2 * n) : RVec(RVec::Zero(2 * n));
    const json& jb = member(j, "baths");
    if (!jb.is_array() || static_cast<int>(jb.size()) != n) fail("baths", "expected " + std::to_string(n) + " entries");
    std::vector<BathSpec> baths;
    for (int i = 0; i < n; ++i) {
        const std::string f = "baths[" + std::to_string(i) + "]";
        const json& b = jb[static_cast<size_t>(i)];
        if (!b.is_object()) fail(f, "expected an object");
        baths.push_back({number(member(b, "gamma_q"), f + ".gamma_q"), number(member(b, "gamma_p"), f + ".gamma_p"),
                         number(member(b, "beta"), f + ".beta")});
    }
    Config c{SystemSpec::create(n, h, xi, phi, hbar, std::move(baths)), std::nullopt, ""};
    if (j.contains("initial")) {
        const json& ji = j["initial"];
        InitialMoments im;
        im.mean = ji.contains("mean") ? vector_of(ji["mean"], "initial.mean", 2 * n) : RVec(RVec::Zero(2 * n));
        im.cov = ji.contains("cov") ? matrix_of(ji["cov"], "initial.cov", 2 * n)
                                    : RMat(0.5 * hbar * RMat::Identity(2 * n, 2 * n));
        if ((im.cov - im.cov.transpose()).norm() > 1e-12 * std::max(1.0, im.cov.norm())) fail("initial.cov", "not symmetric");
        c.initial = im;
    }
    c.canonical = j.dump();
    return c;
}

Config load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::InvalidInput, "cannot read config '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

} // namespace qcptp
