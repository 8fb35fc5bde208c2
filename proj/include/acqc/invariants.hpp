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
#include <cmath>

#include "acqc/gates.hpp"
#include "acqc/qmat.hpp"

namespace acqc {

/** Makhlin's local invariants. g2 keeps its imaginary part for general U(4). */
struct LocalInvariants {
  Complex g1;
  Complex g2;
};

/** The fixed magic-basis change Q. */
inline Unitary4 magic_basis() {
  const double r = 1.0 / std::sqrt(2.0);
  const Complex i = 1i;
  return Mat4{{r, 0.0, 0.0, i * r},
              {0.0, i * r, r, 0.0},
              {0.0, i * r, -r, 0.0},
              {r, 0.0, 0.0, -i * r}};
}

/** m(V) = (Q^dagger V Q)^T (Q^dagger V Q). Symmetric for any V. */
inline Mat4 makhlin_m(const Unitary4& v) {
  require_unitary(v, "makhlin_m");
  const Mat4 q = magic_basis();
  const Mat4 vb = q.adjoint() * v * q;
  return vb.transpose() * vb;
}

inline LocalInvariants local_invariants(const Unitary4& v) {
  const Mat4 m = makhlin_m(v);
  const Complex d = det(v);
  const Complex tr = m.trace();
  const Complex tr_sq = (m * m).trace();
  return {tr * tr / (16.0 * d), (tr * tr - tr_sq) / (4.0 * d)};
}

inline bool invariants_close(const LocalInvariants& a, const LocalInvariants& b,
                             double tol = kEquivalenceTol) {
  return std::abs(a.g1 - b.g1) < tol && std::abs(a.g2 - b.g2) < tol;
}

inline bool locally_equivalent(const Unitary4& a, const Unitary4& b,
                               double tol = kEquivalenceTol) {
  return invariants_close(local_invariants(a), local_invariants(b), tol);
}

/** e_p = (2/9)(1 - |G1|), in [0, 2/9]. */
inline double entangling_power(const Unitary4& v) {
  const double e = (2.0 / 9.0) * (1.0 - std::abs(local_invariants(v).g1));
  return std::clamp(e, 0.0, 2.0 / 9.0);
}

/**
 * False exactly when v sits in the identity class or the SWAP class, the two
 * classes of non-entangling two-qubit gates.
 */
inline bool is_entangling(const Unitary4& v, double tol = kEquivalenceTol) {
  const LocalInvariants g = local_invariants(v);
  const LocalInvariants identity_class{1.0, 3.0};
  const LocalInvariants swap_class{-1.0, -3.0};
  return !invariants_close(g, identity_class, tol) &&
         !invariants_close(g, swap_class, tol);
}

}  // namespace acqc
