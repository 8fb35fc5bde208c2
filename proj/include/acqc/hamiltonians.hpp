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

#include <cmath>

#include "acqc/gates.hpp"
#include "acqc/kak.hpp"
#include "acqc/qmat.hpp"

// Two-body generators H = -chi (a1 XX + a2 YY + a3 ZZ) with hbar = 1 and
// their evolutions exp(-i H t).
namespace acqc {

struct IsingGenerator {
  double a1 = 0.0;
  double a2 = 0.0;
  double a3 = 0.0;
  double chi = 1.0;

  Hermitian4 matrix() const {
    using namespace gates;
    return (kron(X(), X()) * a1 + kron(Y(), Y()) * a2 + kron(Z(), Z()) * a3) *
           Complex{-chi, 0.0};
  }

  Unitary4 evolve(double t) const { return expm_hermitian(matrix(), t); }
};

namespace detail {
inline void require_rate(double chi) {
  if (!(chi > 0.0) || !std::isfinite(chi))
    throw InvalidInput("coupling rate chi must be positive");
}
}  // namespace detail

/** Generator whose evolution at t = 1/(2 chi) is canonical_M(angles). */
inline IsingGenerator h_general(const CanonicalAngles& angles, double chi) {
  detail::require_rate(chi);
  return {angles.alpha1, angles.alpha2, angles.alpha3, chi};
}

/** XY exchange: -chi (XX + YY). */
inline IsingGenerator h_xy(double chi) {
  detail::require_rate(chi);
  return {1.0, 1.0, 0.0, chi};
}

/** XXZ case: -(chi/2)(2 XX + 2 YY + ZZ). */
inline IsingGenerator h_xxz(double chi) {
  detail::require_rate(chi);
  return {1.0, 1.0, 0.5, chi};
}

inline Unitary4 u1(double t, double chi) {
  detail::require_rate(chi);
  const double c = std::cos(2.0 * chi * t);
  const Complex is = 1i * std::sin(2.0 * chi * t);
  return Mat4{{1.0, 0.0, 0.0, 0.0},
              {0.0, c, is, 0.0},
              {0.0, is, c, 0.0},
              {0.0, 0.0, 0.0, 1.0}};
}

inline Unitary4 u2(double t, double chi) {
  detail::require_rate(chi);
  const Complex pre = std::polar(1.0, chi * t / 2.0);
  const Complex rot = std::polar(1.0, -chi * t);
  const Complex c = rot * std::cos(2.0 * chi * t);
  const Complex is = rot * 1i * std::sin(2.0 * chi * t);
  return Mat4{{1.0, 0.0, 0.0, 0.0},
              {0.0, c, is, 0.0},
              {0.0, is, c, 0.0},
              {0.0, 0.0, 0.0, 1.0}} *
         pre;
}

/** XY interaction at t = pi/(4 chi). */
inline Unitary4 u1c() { return u1(kPi / 4.0, 1.0); }

/** XXZ interaction at t = pi/(4 chi). */
inline Unitary4 u2c() { return u2(kPi / 4.0, 1.0); }

}  // namespace acqc
