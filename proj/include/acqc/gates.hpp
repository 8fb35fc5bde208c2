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

#include "acqc/qmat.hpp"

// Standard gates in the computational basis. Two-qubit gates use the
// (first qubit) x (second qubit) ordering of kron.
namespace acqc::gates {

inline Mat2 I() { return Mat2::identity(); }
inline Mat2 X() { return Mat2{{0.0, 1.0}, {1.0, 0.0}}; }
inline Mat2 Y() { return Mat2{{0.0, -1i}, {1i, 0.0}}; }
inline Mat2 Z() { return Mat2{{1.0, 0.0}, {0.0, -1.0}}; }
inline Mat2 H() {
  const double r = 1.0 / std::sqrt(2.0);
  return Mat2{{r, r}, {r, -r}};
}
/** s = |0><0| + i|1><1|. */
inline Mat2 S() { return Mat2{{1.0, 0.0}, {0.0, 1i}}; }
inline Mat2 Sdg() { return Mat2{{1.0, 0.0}, {0.0, -1i}}; }
inline Mat2 T() { return Mat2{{1.0, 0.0}, {0.0, std::polar(1.0, kPi / 4)}}; }
inline Mat2 Tdg() { return Mat2{{1.0, 0.0}, {0.0, std::polar(1.0, -kPi / 4)}}; }
/** R(phi) = |0><0| + e^{i phi}|1><1|. */
inline Mat2 R(double phi) { return Mat2{{1.0, 0.0}, {0.0, std::polar(1.0, phi)}}; }

inline Mat4 SWAP() {
  return Mat4{{1.0, 0.0, 0.0, 0.0},
              {0.0, 0.0, 1.0, 0.0},
              {0.0, 1.0, 0.0, 0.0},
              {0.0, 0.0, 0.0, 1.0}};
}
inline Mat4 CZ() { return Mat4::diagonal({1.0, 1.0, 1.0, -1.0}); }
/** Control on the first qubit. */
inline Mat4 CNOT() {
  return Mat4{{1.0, 0.0, 0.0, 0.0},
              {0.0, 1.0, 0.0, 0.0},
              {0.0, 0.0, 0.0, 1.0},
              {0.0, 0.0, 1.0, 0.0}};
}

/** C(p): p on the second qubit when the first is |1>. */
inline Mat4 controlled(const Mat2& p) {
  Mat4 m;
  m(0, 0) = 1.0;
  m(1, 1) = 1.0;
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) m(2 + r, 2 + c) = p(r, c);
  return m;
}

namespace states {
inline State2 zero() { return State2{1.0, 0.0}; }
inline State2 one() { return State2{0.0, 1.0}; }
inline State2 plus() {
  const double r = 1.0 / std::sqrt(2.0);
  return State2{r, r};
}
inline State2 minus() {
  const double r = 1.0 / std::sqrt(2.0);
  return State2{r, -r};
}
inline State2 plus_i() {
  const double r = 1.0 / std::sqrt(2.0);
  return State2{r, Complex{0.0, r}};
}
}  // namespace states

}  // namespace acqc::gates
