// Copyright 2026 The acqc Authors
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

#include <catch_amalgamated.hpp>

#include "eigen_oracle.hpp"
#include "support.hpp"

using namespace acqc;
using acqc::test::rng_for;
using acqc::test::uniform;

TEST_CASE("generators are Hermitian and reject bad rates") {
  CHECK(is_hermitian(h_xy(1.0).matrix()));
  CHECK(is_hermitian(h_xxz(2.5).matrix()));
  CHECK_THROWS_AS(h_xy(0.0), InvalidInput);
  CHECK_THROWS_AS(h_xxz(-1.0), InvalidInput);
  CHECK_THROWS_AS(h_general({0.1, 0.2, 0.3}, 0.0), InvalidInput);
  CHECK_THROWS_AS(u1(1.0, -2.0), InvalidInput);
  CHECK_THROWS_AS(u2(1.0, 0.0), InvalidInput);
}

TEST_CASE("general generator at t = 1/(2 chi) gives canonical_M") {
  auto rng = rng_for(41);
  CHECK(equal_up_to_global_phase(h_general({kPi / 2, kPi / 2, 0.0}, 1.0).evolve(0.5), u1c(), 1e-10)
            .equal);
  CHECK(max_abs_diff(h_general({0.0, 0.0, 0.0}, 1.0).evolve(0.5), Mat4::identity()) < 1e-12);
  const Mat4 g = h_general({kPi / 2, kPi / 2, kPi / 4}, 2.0).evolve(0.25);
  const LocalInvariants inv = local_invariants(g);
  CHECK(std::abs(inv.g1 + 0.5) < 1e-9);
  CHECK(std::abs(inv.g2 + 2.0) < 1e-9);
  for (int i = 0; i < 100; ++i) {
    const CanonicalAngles a{uniform(rng, -kPi, kPi), uniform(rng, -kPi, kPi), uniform(rng, -kPi, kPi)};
    const double chi = uniform(rng, 0.1, 5.0);
    REQUIRE(equal_up_to_global_phase(h_general(a, chi).evolve(1.0 / (2.0 * chi)), canonical_M(a),
                                     1e-10)
                .equal);
  }
}

TEST_CASE("XY closed form") {
  CHECK(max_abs_diff(u1(0.0, 1.0), Mat4::identity()) < 1e-15);
  const Mat2 s = gates::S();
  CHECK(max_abs_diff(u1c(), kron(s, s) * sc_p(gates::Z())) < 1e-10);
  const double chi = 1.7;
  const Mat4 q = u1(kPi / (8 * chi), chi);
  CHECK(std::abs(q(1, 1) - std::cos(kPi / 4)) < 1e-12);
  CHECK(std::abs(q(1, 2) - 1i * std::sin(kPi / 4)) < 1e-12);
  CHECK(max_abs_diff(u1(kPi / (4 * chi), chi), u1c()) < 1e-10);
}

TEST_CASE("XXZ closed form") {
  CHECK(max_abs_diff(u2(0.0, 1.0), Mat4::identity()) < 1e-15);
  const Complex corner = std::polar(1.0, kPi / 8);
  const Complex centre = 1i * std::polar(1.0, -kPi / 8);
  const Mat4 closed_form{{corner, 0.0, 0.0, 0.0},
                     {0.0, 0.0, centre, 0.0},
                     {0.0, centre, 0.0, 0.0},
                     {0.0, 0.0, 0.0, corner}};
  CHECK(max_abs_diff(u2c(), closed_form) < 1e-10);
  CHECK(max_abs_diff(u2(kPi / 12, 3.0), u2c()) < 1e-10);
  const Complex e = std::polar(1.0, kPi / 4);
  const Complex m = -std::polar(1.0, -kPi / 4);
  CHECK(max_abs_diff(u2c() * u2c(), Mat4::diagonal({e, m, m, e})) < 1e-10);
}

TEST_CASE("closed forms match the exponential path") {
  auto rng = rng_for(42);
  for (int i = 0; i < 100; ++i) {
    const double t = uniform(rng, 0.0, kPi);
    const double chi = uniform(rng, 0.2, 3.0);
    REQUIRE(max_abs_diff(u1(t, chi), test::oracle_expm(h_xy(chi).matrix(), t)) < 1e-10);
    REQUIRE(max_abs_diff(u2(t, chi), test::oracle_expm(h_xxz(chi).matrix(), t)) < 1e-10);
    REQUIRE(max_abs_diff(u1(t, chi), h_xy(chi).evolve(t)) < 1e-10);
    REQUIRE(max_abs_diff(u2(t, chi), h_xxz(chi).evolve(t)) < 1e-10);
    REQUIRE(unitarity_error(u1(t, chi)) < 1e-10);
    REQUIRE(unitarity_error(u2(t, chi)) < 1e-10);
  }
}

TEST_CASE("squared XXZ gate is a dressed CZ") {
  const Mat2 r = Mat2::diagonal({std::polar(1.0, -kPi / 8), -std::polar(1.0, 3 * kPi / 8)});
  CHECK(equal_up_to_global_phase(kron(r, r) * u2c() * u2c(), gates::CZ(), 1e-9).equal);
  CHECK(locally_equivalent(u2c() * u2c(), gates::CZ()));
}

TEST_CASE("both critical-time gates certify with psi0 = |0>") {
  for (const Mat4& k : {u1c(), u2c()}) {
    const Validation v = validate(k);
    REQUIRE(std::holds_alternative<AcqcCertificate>(v));
    CHECK(state_equal_up_to_phase(std::get<AcqcCertificate>(v).psi0, gates::states::zero(), 1e-8));
  }
}
