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

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <utility>
#include <vector>

#include "acqc/gates.hpp"
#include "acqc/invariants.hpp"
#include "acqc/qmat.hpp"

namespace acqc {

/**
 * Coordinates of M = exp((i/2)(a1 XX + a2 YY + a3 ZZ)). Decompositions report
 * the chamber representative pi/2 >= a1 >= a2 >= |a3|, with a3 >= 0 on the
 * face a1 = pi/2.
 */
struct CanonicalAngles {
  double alpha1 = 0.0;
  double alpha2 = 0.0;
  double alpha3 = 0.0;

  double alpha_plus() const { return (alpha1 + alpha2) / 2.0; }
  double alpha_minus() const { return (alpha1 - alpha2) / 2.0; }
};

/** v = e^{i phase} (ka1 x kr1) M(angles) (ka2 x kr2). */
struct CanonicalDecomposition {
  Unitary2 ka1;
  Unitary2 kr1;
  Unitary2 ka2;
  Unitary2 kr2;
  CanonicalAngles angles;
  double phase = 0.0;

  Unitary4 reconstruct() const;
};

/**
 * Parameters of p = e^{i eta} [[e^{i phi} cos th, e^{-i psi} sin th],
 *                              [e^{i psi} sin th, -e^{-i phi} cos th]].
 */
struct ControlledGateParams {
  double eta = 0.0;
  double phi = 0.0;
  double psi_angle = 0.0;
  double theta = 0.0;

  Unitary2 matrix() const {
    const Complex g = std::polar(1.0, eta);
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    return Mat2{{g * std::polar(c, phi), g * std::polar(s, -psi_angle)},
                {g * std::polar(s, psi_angle), -g * std::polar(c, -phi)}};
  }
};

/** Closed form of M(angles) in the computational basis. */
inline Unitary4 canonical_M(const CanonicalAngles& a) {
  const Complex ep = std::polar(1.0, a.alpha3 / 2.0);
  const Complex em = std::polar(1.0, -a.alpha3 / 2.0);
  const Complex m1 = ep * std::cos(a.alpha_minus());
  const Complex m2 = ep * 1i * std::sin(a.alpha_minus());
  const Complex m3 = em * std::cos(a.alpha_plus());
  const Complex m4 = em * 1i * std::sin(a.alpha_plus());
  return Mat4{{m1, 0.0, 0.0, m2},
              {0.0, m3, m4, 0.0},
              {0.0, m4, m3, 0.0},
              {m2, 0.0, 0.0, m1}};
}

inline Unitary4 CanonicalDecomposition::reconstruct() const {
  return kron(ka1, kr1) * canonical_M(angles) * kron(ka2, kr2) *
         std::polar(1.0, phase);
}

/** G1, G2 as closed-form functions of the canonical angles. */
inline LocalInvariants invariants_from_alpha(const CanonicalAngles& a) {
  const std::array<double, 3> al{a.alpha1, a.alpha2, a.alpha3};
  double c2 = 1.0, s2 = 1.0, sin2 = 1.0, cos2 = 1.0;
  for (double x : al) {
    c2 *= std::cos(x) * std::cos(x);
    s2 *= std::sin(x) * std::sin(x);
    sin2 *= std::sin(2.0 * x);
    cos2 *= std::cos(2.0 * x);
  }
  return {Complex{c2 - s2, sin2 / 4.0}, Complex{4.0 * c2 - 4.0 * s2 - cos2, 0.0}};
}

namespace detail {

/**
 * Splits a 4x4 matrix that is (numerically) a tensor product into unitary
 * factors a x b. Returns nullopt if the rank-one residual exceeds tol.
 */
inline std::optional<std::pair<Mat2, Mat2>> split_local(const Mat4& k,
                                                        double tol = 1e-8) {
  // Realignment R[(i1 j1), (i2 j2)] = a(i1, j1) b(i2, j2).
  auto r = [&](std::size_t i1, std::size_t j1, std::size_t i2, std::size_t j2) {
    return k(2 * i1 + i2, 2 * j1 + j2);
  };
  std::size_t bi = 0, bj = 0;
  double best = -1.0;
  for (std::size_t i1 = 0; i1 < 2; ++i1)
    for (std::size_t j1 = 0; j1 < 2; ++j1) {
      double n = 0.0;
      for (std::size_t i2 = 0; i2 < 2; ++i2)
        for (std::size_t j2 = 0; j2 < 2; ++j2) n += std::norm(r(i1, j1, i2, j2));
      if (n > best) {
        best = n;
        bi = i1;
        bj = j1;
      }
    }
  Mat2 b;
  for (std::size_t i2 = 0; i2 < 2; ++i2)
    for (std::size_t j2 = 0; j2 < 2; ++j2) b(i2, j2) = r(bi, bj, i2, j2);
  const double scale = std::sqrt(std::abs(det(b)));
  if (scale == 0.0) return std::nullopt;
  b = b * Complex{1.0 / scale, 0.0};
  Mat2 a;
  for (std::size_t i1 = 0; i1 < 2; ++i1)
    for (std::size_t j1 = 0; j1 < 2; ++j1) {
      Complex acc{0.0, 0.0};
      for (std::size_t i2 = 0; i2 < 2; ++i2)
        for (std::size_t j2 = 0; j2 < 2; ++j2)
          acc += std::conj(b(i2, j2)) * r(i1, j1, i2, j2);
      a(i1, j1) = acc / 2.0;
    }
  if (max_abs_diff(kron(a, b), k) > tol) return std::nullopt;
  if (!is_unitary(a, tol) || !is_unitary(b, tol)) return std::nullopt;
  return std::make_pair(a, b);
}

inline Mat2 pauli(int axis) {
  switch (axis) {
    case 0:
      return gates::X();
    case 1:
      return gates::Y();
    default:
      return gates::Z();
  }
}

/** Local c with c P_i c^dag = +-P_j, c P_j c^dag = +-P_i, c P_k c^dag = +-P_k. */
inline Mat2 axis_exchanger(int i, int j) {
  const int lo = std::min(i, j);
  const int hi = std::max(i, j);
  if (lo == 0 && hi == 1) return gates::S();
  if (lo == 0 && hi == 2) return gates::H();
  const double r = 1.0 / std::sqrt(2.0);
  return Mat2{{r, -1i * r}, {-1i * r, r}};  // exp(-i pi/4 X)
}

/**
 * Chamber folding of (ka1 x kr1) M(alpha) (ka2 x kr2). Every move rewrites M
 * as locals * M(alpha') * locals and pushes the locals outward, so the
 * product is preserved up to global phase.
 */
class ChamberFolder {
 public:
  ChamberFolder(CanonicalDecomposition& d) : d_(d) {}

  double& angle(int j) {
    return j == 0 ? d_.angles.alpha1 : (j == 1 ? d_.angles.alpha2 : d_.angles.alpha3);
  }

  // alpha_j -> alpha_j - k pi; M(alpha) = M(alpha') (i^k)(P_j P_j)^k.
  void shift(int j, long k) {
    angle(j) -= static_cast<double>(k) * kPi;
    if (k % 2 != 0) {
      const Mat2 p = pauli(j);
      d_.ka2 = p * d_.ka2;
      d_.kr2 = p * d_.kr2;
    }
  }

  // Exchange alpha_i and alpha_j: M(alpha) = (c x c)^dag M(alpha') (c x c).
  void exchange(int i, int j) {
    const Mat2 c = axis_exchanger(i, j);
    std::swap(angle(i), angle(j));
    d_.ka1 = d_.ka1 * c.adjoint();
    d_.kr1 = d_.kr1 * c.adjoint();
    d_.ka2 = c * d_.ka2;
    d_.kr2 = c * d_.kr2;
  }

  // Negate alpha_i and alpha_j via conjugation by P_k on the first qubit.
  void negate_pair(int i, int j) {
    const int k = 3 - i - j;
    const Mat2 p = pauli(k);
    angle(i) = -angle(i);
    angle(j) = -angle(j);
    d_.ka1 = d_.ka1 * p;
    d_.ka2 = p * d_.ka2;
  }

  void fold() {
    constexpr double kFaceTol = 1e-10;
    for (int j = 0; j < 3; ++j) {
      const long k = static_cast<long>(std::ceil((angle(j) - kPi / 2) / kPi));
      if (k != 0) shift(j, k);
    }
    // Sort by magnitude, descending.
    for (int pass = 0; pass < 3; ++pass)
      for (int j = 0; j + 1 < 3; ++j)
        if (std::abs(angle(j)) < std::abs(angle(j + 1))) exchange(j, j + 1);
    if (angle(0) < 0.0) negate_pair(0, 2);
    if (angle(1) < 0.0) negate_pair(1, 2);
    if (kPi / 2 - angle(0) < kFaceTol && angle(2) < 0.0) {
      // (a1, a2, a3) ~ (pi - a1, a2, -a3)
      negate_pair(0, 2);
      shift(0, -1);
    }
    if (std::abs(angle(0) - kPi / 2) < kFaceTol) angle(0) = kPi / 2;
  }

 private:
  CanonicalDecomposition& d_;
};

}  // namespace detail

/**
 * Canonical decomposition through the magic basis: m(v) is diagonalized by a
 * real orthogonal matrix (simultaneous diagonalization of its commuting real
 * and imaginary parts), the eigenphases give the angles, and the orthogonal
 * factors map back to local gates.
 */
inline CanonicalDecomposition kak_decompose(const Unitary4& v) {
  require_unitary(v, "kak_decompose");
  const Mat4 q = magic_basis();
  const Complex dv = det(v);
  const Mat4 vs = v * std::polar(1.0, -std::arg(dv) / 4.0);
  const Mat4 up = q.adjoint() * vs * q;
  const Mat4 m = up.transpose() * up;

  // Mixing coefficients for Re(m) + r Im(m); a bad r shows up as a
  // non-diagonal P^T m P and the next one is tried.
  constexpr std::array<double, 4> kMix{0.6180339887498949, 1.3247179572447460,
                                       -2.2360679774997898, 0.4142135623730950};
  Mat4 p;
  std::array<Complex, 4> d2{};
  bool ok = false;
  for (double mix : kMix) {
    Mat4 a;
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c) {
        const double x = m(r, c).real() + mix * m(r, c).imag();
        a(r, c) = (r == c) ? x : 0.5 * (x + m(c, r).real() + mix * m(c, r).imag());
      }
    p = eigh(a).vectors;
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c) p(r, c) = p(r, c).real();
    const Mat4 diag = p.transpose() * m * p;
    double off = 0.0;
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c)
        if (r != c) off = std::max(off, std::abs(diag(r, c)));
    if (off < 1e-10) {
      for (std::size_t k = 0; k < 4; ++k) d2[k] = diag(k, k);
      ok = true;
      break;
    }
  }
  if (!ok) throw Error("kak_decompose: simultaneous diagonalization failed");

  // Deterministic order: eigenphase ascending.
  std::array<std::size_t, 4> order{0, 1, 2, 3};
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return std::arg(d2[i]) < std::arg(d2[j]) - 1e-12;
  });
  Mat4 ps;
  std::array<double, 4> theta{};
  for (std::size_t k = 0; k < 4; ++k) {
    ps.set_column(k, p.column(order[k]));
    theta[k] = std::arg(d2[order[k]]) / 2.0;
  }
  if (det(ps).real() < 0.0) ps.set_column(0, ps.column(0) * Complex{-1.0, 0.0});

  // det(D) must be +1 so both orthogonal factors land in SO(4).
  Complex prod{1.0, 0.0};
  for (double t : theta) prod *= std::polar(1.0, t);
  if (prod.real() < 0.0) theta[0] += kPi;
  double sum = theta[0] + theta[1] + theta[2] + theta[3];
  theta[2] -= 2.0 * kPi * std::round(sum / (2.0 * kPi));

  std::array<Complex, 4> dinv{};
  for (std::size_t k = 0; k < 4; ++k) dinv[k] = std::polar(1.0, -theta[k]);
  const Mat4 o2 = ps.transpose();
  Mat4 o1 = up * ps * Mat4::diagonal(dinv);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) o1(r, c) = o1(r, c).real();

  const auto left = detail::split_local(q * o1 * q.adjoint(), 1e-7);
  const auto right = detail::split_local(q * o2 * q.adjoint(), 1e-7);
  if (!left || !right) throw Error("kak_decompose: local factor extraction failed");

  CanonicalDecomposition out;
  out.ka1 = left->first;
  out.kr1 = left->second;
  out.ka2 = right->first;
  out.kr2 = right->second;
  out.angles = {theta[0] + theta[1], theta[1] + theta[3], theta[0] + theta[3]};
  detail::ChamberFolder(out).fold();

  out.phase = 0.0;
  out.phase = equal_up_to_global_phase(v, out.reconstruct(), 1.0).phase;
  return out;
}

/**
 * Chamber representative of the SC(p) class for the given parameters:
 * (pi/2, pi/2, a3) with sin^2 a3 = cos^2 theta sin^2 phi. The full solution
 * family a1 = (2n+1)pi/2, a2 = (2m+1)pi/2 folds onto this one point.
 */
inline std::vector<CanonicalAngles> acqc_alpha_solutions(
    const ControlledGateParams& params, double tol = kEquivalenceTol) {
  const double c = std::cos(params.theta);
  const double s = std::sin(params.phi);
  const double x = c * c * s * s;
  if (std::abs(1.0 - x) < tol)
    throw SwapClassExcluded("cos^2(theta) sin^2(phi) = 1 gives the SWAP class");
  const double a3 = std::asin(std::sqrt(std::clamp(x, 0.0, 1.0)));
  return {CanonicalAngles{kPi / 2, kPi / 2, a3}};
}

}  // namespace acqc
