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

#include <array>
#include <cmath>
#include <utility>

#include "acqc/qmat.hpp"

namespace acqc {

inline constexpr double kSeparabilityTol = 1e-8;

/** s = sum_i coeffs[i] |basis_a[i]> |basis_b[i]>, coeffs descending. */
struct SchmidtForm {
  std::array<double, 2> coeffs;
  std::array<State2, 2> basis_a;
  std::array<State2, 2> basis_b;

  State4 reconstruct() const {
    return kron(basis_a[0], basis_b[0]) * Complex{coeffs[0], 0.0} +
           kron(basis_a[1], basis_b[1]) * Complex{coeffs[1], 0.0};
  }
};

/** C = 2|s00 s11 - s01 s10| in the computational basis. */
inline double concurrence(const State4& s) {
  require_normalized(s, "concurrence", 1e-9);
  const double c = 2.0 * std::abs(s[0] * s[3] - s[1] * s[2]);
  return std::min(c, 1.0);
}

/**
 * Schmidt decomposition from the left singular vectors of the 2x2 amplitude
 * matrix A (A_jk = <jk|s>). The second right vector is taken as the
 * orthogonal complement of the first and phase-fixed against s, which keeps
 * the small coefficient accurate when the state is nearly a product.
 */
inline SchmidtForm schmidt(const State4& s) {
  require_normalized(s, "schmidt", 1e-9);
  const Mat2 a{{s[0], s[1]}, {s[2], s[3]}};
  const auto eig = eigh(a * a.adjoint());
  SchmidtForm out;
  // eigh sorts ascending; the dominant pair comes last.
  const State2 u1 = eig.vectors.column(1).normalized();
  const State2 u2 = orthogonal_complement(u1);
  // v_i = A^T conj(u_i) / lambda_i
  auto project = [&](const State2& u) {
    return a.transpose() * u.conj();
  };
  const State2 w1 = project(u1);
  const double l1 = w1.norm();
  const State2 v1 = w1 * Complex{1.0 / l1, 0.0};
  State2 v2 = orthogonal_complement(v1);
  const Complex c2 = inner(kron(u2, v2), s);
  const double l2 = std::abs(c2);
  if (l2 > 0.0) v2 = v2 * (c2 / l2);
  out.coeffs = {l1, l2};
  out.basis_a = {u1, u2};
  out.basis_b = {v1, v2};
  return out;
}

inline bool is_separable(const State4& s, double tol = kSeparabilityTol) {
  return concurrence(s) < tol;
}

/** Unit-norm factors of a product state; their tensor matches s up to phase. */
inline std::pair<State2, State2> factorize(const State4& s,
                                           double tol = kSeparabilityTol) {
  if (!is_separable(s, tol))
    throw NotSeparable("factorize: state is entangled");
  const SchmidtForm f = schmidt(s);
  return {f.basis_a[0], f.basis_b[0]};
}

}  // namespace acqc
