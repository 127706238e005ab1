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

#include "doctest.h"
#include "oracles.hpp"

#include "qcptp/propagators.hpp"

using namespace qcptp;

TEST_SUITE("propagators") {

TEST_CASE("expm agrees with the Taylor oracle") {
    auto g = oracle::rng(2);
    for (int dim : {2, 4, 6}) {
        CMat a(dim, dim);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) a(i, j) = cplx(oracle::uniform(g, -2, 2), oracle::uniform(g, -2, 2));
        const CMat e = expm(a), o = oracle::taylor_expm(a);
        CHECK((e - o).norm() <= 1e-12 * o.norm());
    }
}

TEST_CASE("real flow is symplectic") {
    auto g = oracle::rng(3);
    const RMat h = oracle::random_spd(g, 4);
    const RMat s = real_propagator(h, 0.7);
    const RMat j = symplectic_form(2);
    CHECK((s * j * s.transpose() - j).norm() < 1e-12);
}

TEST_CASE("Wick propagator is complex symplectic and conjugates between conventions") {
    auto g = oracle::rng(4);
    const RMat h = oracle::random_spd(g, 4);
    const auto a = wick_propagator(h, 0.9, 0.7, Convention::AppendixB);
    const auto b = wick_propagator(h, 0.9, 0.7, Convention::MainText);
    const CMat j = symplectic_form(2).cast<cplx>();
    CHECK((a.matrix * j * a.matrix.transpose() - j).norm() < 1e-12);
    CHECK((a.matrix.conjugate() - b.matrix).norm() < 1e-14);
    // S_beta^T H S_beta = H for the Wick rotation of a quadratic flow
    CHECK((a.matrix.transpose() * h.cast<cplx>() * a.matrix - h.cast<cplx>()).norm() < 1e-11);
}

TEST_CASE("Wick propagator overflow") {
    const RMat h = -RMat::Identity(2, 2) * 1e3;
    RMat hh = h;
    hh(1, 1) = 1e3;
    CHECK_THROWS_AS(wick_propagator(hh, 10.0, 1.0), Error);
}

TEST_CASE("n=1 classification and closed forms") {
    auto g = oracle::rng(6);
    for (auto kind : {N1Case::Elliptic, N1Case::Hyperbolic, N1Case::Parabolic}) {
        for (int t = 0; t < 10; ++t) {
            const RMat h = oracle::random_n1_hessian(g, kind);
            CHECK(classify_n1(h) == kind);
            const auto s = oracle::n1_spec(h, 0.1, 0.1, oracle::uniform(g, 0.1, 3.0), oracle::uniform(g, 0.5, 2.0));
            for (auto c : {Convention::AppendixB, Convention::MainText}) {
                const CMat num = wick_propagator(h, s.baths()[0].beta, s.hbar(), c).matrix;
                CHECK((closed_form_sbeta(s, c) - num).norm() <= 1e-12 * num.norm());
            }
        }
    }
}

TEST_CASE("network closed form") {
    auto g = oracle::rng(7);
    for (int t = 0; t < 10; ++t) {
        const double w = oracle::uniform(g, 0.2, 2.0), k = oracle::uniform(g, 0.0, 2.0);
        const double b = oracle::uniform(g, 0.1, 3.0);
        const auto s = oracle::network_spec(w, k, 0.1, 0.1, b, b);
        double w2 = 0, k2 = 0;
        REQUIRE(match_network(s.hessian(), w2, k2));
        CHECK(w2 == doctest::Approx(w));
        CHECK(k2 == doctest::Approx(k));
        const CMat num = wick_propagator(s.hessian(), b, 1.0).matrix;
        CHECK((closed_form_sbeta(s) - num).cwiseAbs().maxCoeff() <= 1e-12 * std::max(1.0, num.cwiseAbs().maxCoeff()));
    }
    const auto nonuniform = oracle::network_spec(1.0, 0.5, 0.1, 0.1, 1.0, 2.0);
    CHECK_THROWS_AS(closed_form_sbeta(nonuniform), Error);
    RMat h = RMat::Identity(6, 6);
    const auto three = SystemSpec::create(3, h, RVec::Zero(6), 0, 1, {{0, 0, 1}, {0, 0, 1}, {0, 0, 1}});
    CHECK_THROWS_AS(closed_form_sbeta(three), Error);
}

}
