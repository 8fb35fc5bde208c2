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

namespace {

bool in_chamber(const CanonicalAngles& a) {
  const double eps = 1e-12;
  if (!(a.alpha1 <= kPi / 2 + eps && a.alpha1 >= a.alpha2 - eps &&
        a.alpha2 >= std::abs(a.alpha3) - eps))
    return false;
  if (std::abs(a.alpha1 - kPi / 2) < 1e-10 && a.alpha3 < -eps) return false;
  return true;
}

Hermitian4 generator(const CanonicalAngles& a) {
  return (kron(gates::X(), gates::X()) * a.alpha1 + kron(gates::Y(), gates::Y()) * a.alpha2 +
          kron(gates::Z(), gates::Z()) * a.alpha3) *
         Complex{-0.5, 0.0};
}

/** Point with pi/2 > a1 > a2 > a3 > 0, kept off the chamber walls. */
CanonicalAngles interior_point(std::mt19937_64& rng) {
  std::array<double, 3> v{uniform(rng, 0.02, kPi / 2 - 0.02), uniform(rng, 0.02, kPi / 2 - 0.02),
                          uniform(rng, 0.02, kPi / 2 - 0.02)};
  std::sort(v.begin(), v.end(), std::greater<>());
  if (v[0] - v[1] < 0.01 || v[1] - v[2] < 0.01) v = {1.3, 0.8, 0.3};
  return {v[0], v[1], v[2]};
}

void check_angles(const CanonicalAngles& got, double a1, double a2, double a3, double tol = 1e-8) {
  CHECK(std::abs(got.alpha1 - a1) < tol);
  CHECK(std::abs(got.alpha2 - a2) < tol);
  CHECK(std::abs(got.alpha3 - a3) < tol);
}

}  // namespace

TEST_CASE("canonical_M reference points") {
  CHECK(max_abs_diff(canonical_M({0.0, 0.0, 0.0}), Mat4::identity()) < 1e-15);
  CHECK(max_abs_diff(canonical_M({kPi / 2, kPi / 2, 0.0}), u1c()) < 1e-12);
  const Mat4 m = canonical_M({kPi / 2, kPi / 2, kPi / 2});
  CHECK(max_abs_diff(m, gates::SWAP() * std::polar(1.0, kPi / 4)) < 1e-12);
  const LocalInvariants g = local_invariants(m);
  CHECK(std::abs(g.g1 + 1.0) < 1e-9);
  CHECK(std::abs(g.g2 + 3.0) < 1e-9);
}

TEST_CASE("canonical_M closed form against the exponential") {
  auto rng = rng_for(31);
  for (int i = 0; i < 200; ++i) {
    const CanonicalAngles a{uniform(rng, -kPi, kPi), uniform(rng, -kPi, kPi), uniform(rng, -kPi, kPi)};
    REQUIRE(max_abs_diff(canonical_M(a), test::oracle_expm(generator(a), 1.0)) < 1e-10);
  }
}

TEST_CASE("invariants_from_alpha") {
  auto close = [](const LocalInvariants& g, Complex g1, Complex g2) {
    return std::abs(g.g1 - g1) < 1e-9 && std::abs(g.g2 - g2) < 1e-9;
  };
  CHECK(close(invariants_from_alpha({0.0, 0.0, 0.0}), 1.0, 3.0));
  CHECK(close(invariants_from_alpha({kPi / 2, kPi / 2, 0.0}), 0.0, -1.0));
  CHECK(close(invariants_from_alpha({kPi / 2, kPi / 2, kPi / 4}), -0.5, -2.0));
  auto rng = rng_for(32);
  for (int i = 0; i < 200; ++i) {
    const CanonicalAngles a{uniform(rng, -kPi, kPi), uniform(rng, -kPi, kPi), uniform(rng, -kPi, kPi)};
    REQUIRE(close(invariants_from_alpha(a), local_invariants(canonical_M(a)).g1,
                  local_invariants(canonical_M(a)).g2));
  }
}

TEST_CASE("kak of named gates") {
  check_angles(kak_decompose(gates::CNOT()).angles, kPi / 2, 0.0, 0.0);
  check_angles(kak_decompose(gates::CZ()).angles, kPi / 2, 0.0, 0.0);
  check_angles(kak_decompose(u2c()).angles, kPi / 2, kPi / 2, kPi / 4);
  check_angles(kak_decompose(u1c()).angles, kPi / 2, kPi / 2, 0.0);
  check_angles(kak_decompose(gates::SWAP()).angles, kPi / 2, kPi / 2, kPi / 2);
  check_angles(kak_decompose(Mat4::identity()).angles, 0.0, 0.0, 0.0);
  for (const Mat4& g : {gates::CNOT(), gates::SWAP(), u1c(), u2c(), Mat4::identity()})
    CHECK(max_abs_diff(kak_decompose(g).reconstruct(), g) < 1e-9);
}

TEST_CASE("kak rejects non-unitary input") {
  Mat4 bad = Mat4::identity();
  bad(1, 2) = 0.5;
  CHECK_THROWS_AS(kak_decompose(bad), InvalidInput);
}

TEST_CASE("kak on Haar samples") {
  auto rng = rng_for(33);
  for (int i = 0; i < 500; ++i) {
    const Mat4 v = random_unitary<4>(rng);
    const CanonicalDecomposition d = kak_decompose(v);
    REQUIRE(max_abs_diff(d.reconstruct(), v) < 1e-8);
    REQUIRE(in_chamber(d.angles));
    const LocalInvariants a = local_invariants(v);
    const LocalInvariants b = invariants_from_alpha(d.angles);
    REQUIRE(std::abs(a.g1 - b.g1) < 1e-8);
    REQUIRE(std::abs(a.g2 - b.g2) < 1e-8);
    for (const Mat2& k : {d.ka1, d.kr1, d.ka2, d.kr2}) REQUIRE(unitarity_error(k) < 1e-10);
  }
}

TEST_CASE("kak recovers angles of dressed canonical gates") {
  auto rng = rng_for(34);
  for (int i = 0; i < 200; ++i) {
    const CanonicalAngles a = interior_point(rng);
    const Mat4 v = test::dress(canonical_M(a), rng) * std::polar(1.0, uniform(rng, -kPi, kPi));
    const CanonicalDecomposition d = kak_decompose(v);
    REQUIRE(std::abs(d.angles.alpha1 - a.alpha1) < 1e-8);
    REQUIRE(std::abs(d.angles.alpha2 - a.alpha2) < 1e-8);
    REQUIRE(std::abs(d.angles.alpha3 - a.alpha3) < 1e-8);
    REQUIRE(max_abs_diff(d.reconstruct(), v) < 1e-8);
  }
}

TEST_CASE("mirror classes stay distinct") {
  // Flipping the sign of a3 conjugates G1, so the mirror point is a
  // different class and keeps its negative coordinate.
  auto rng = rng_for(35);
  const CanonicalAngles a{1.2, 0.7, -0.4};
  const Mat4 v = test::dress(canonical_M(a), rng);
  CHECK_FALSE(locally_equivalent(v, canonical_M({1.2, 0.7, 0.4})));
  check_angles(kak_decompose(v).angles, 1.2, 0.7, -0.4);
}

TEST_CASE("kak on chamber faces reconstructs") {
  auto rng = rng_for(36);
  const std::vector<CanonicalAngles> faces{{kPi / 2, 0.3, 0.3},   {kPi / 2, 0.9, 0.0},
                                           {0.8, 0.8, 0.2},       {0.8, 0.4, 0.4},
                                           {kPi / 2, kPi / 2, 0.6}, {0.5, 0.0, 0.0},
                                           {kPi / 4, kPi / 4, kPi / 4}};
  for (const auto& a : faces)
    for (int i = 0; i < 20; ++i) {
      const Mat4 v = test::dress(canonical_M(a), rng);
      const CanonicalDecomposition d = kak_decompose(v);
      REQUIRE(max_abs_diff(d.reconstruct(), v) < 1e-8);
      REQUIRE(in_chamber(d.angles));
      REQUIRE(locally_equivalent(canonical_M(d.angles), v));
    }
}

TEST_CASE("acqc angle solutions") {
  const auto sz = acqc_alpha_solutions({0.0, 0.0, 0.0, 0.0});
  REQUIRE(sz.size() == 1);
  check_angles(sz[0], kPi / 2, kPi / 2, 0.0);
  CHECK_THROWS_AS(acqc_alpha_solutions({0.0, kPi / 2, 0.0, 0.0}), SwapClassExcluded);
  const auto ss = acqc_alpha_solutions({0.0, kPi / 4, 0.0, 0.0});
  check_angles(ss[0], kPi / 2, kPi / 2, kPi / 4);

  auto rng = rng_for(37);
  for (int i = 0; i < 200; ++i) {
    const ControlledGateParams p{uniform(rng, -kPi, kPi), uniform(rng, -kPi, kPi),
                                 uniform(rng, -kPi, kPi), uniform(rng, -kPi, kPi)};
    const double x = std::pow(std::cos(p.theta) * std::sin(p.phi), 2);
    if (1.0 - x < 1e-6) continue;
    for (const auto& a : acqc_alpha_solutions(p)) {
      const LocalInvariants g = invariants_from_alpha(a);
      REQUIRE(std::abs(g.g1 + x) < 1e-9);
      REQUIRE(std::abs(g.g2 - (-1.0 - 2.0 * x)) < 1e-9);
      REQUIRE(locally_equivalent(canonical_M(a), sc_p(p.matrix())));
    }
  }
}
