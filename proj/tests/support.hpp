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

#include <random>

#include "acqc/acqc.hpp"

namespace acqc::test {

inline std::mt19937_64 rng_for(std::uint64_t seed) { return std::mt19937_64(seed); }

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

/** (a x b) v (c x d) with Haar locals. */
inline Unitary4 dress(const Unitary4& v, std::mt19937_64& rng) {
  return kron(random_unitary<2>(rng), random_unitary<2>(rng)) * v *
         kron(random_unitary<2>(rng), random_unitary<2>(rng));
}

inline Mat2 frame(const State2& x) {
  Mat2 m;
  m.set_column(0, x);
  m.set_column(1, orthogonal_complement(x));
  return m;
}

/**
 * (ka1 x kr1) SWAP C_{psi_perp}(p) (ka2 x kr2) with random pieces. When
 * satisfy_eigen is set, kr2 rotates kr1 psi onto an eigenvector of p;
 * otherwise onto a vector with equal weight on both eigenvectors.
 */
struct Constructed {
  Unitary4 k;
  State2 psi0;
};

inline Constructed constructed_interaction(std::mt19937_64& rng, bool satisfy_eigen) {
  const Mat2 ka1 = random_unitary<2>(rng);
  const Mat2 kr1 = random_unitary<2>(rng);
  const Mat2 ka2 = random_unitary<2>(rng);
  const State2 psi0 = random_state<2>(rng);
  const State2 psi = ka2 * psi0;
  const Mat2 v = random_unitary<2>(rng);
  // Eigenphases kept apart so p is never close to a multiple of the identity.
  const double a = uniform(rng, 0.0, 2 * kPi);
  const double gap = uniform(rng, 0.5, 2 * kPi - 0.5);
  const Mat2 p = v * Mat2::diagonal({std::polar(1.0, a), std::polar(1.0, a + gap)}) * v.adjoint();
  State2 target = v.column(0);
  if (!satisfy_eigen) target = ((v.column(0) + v.column(1)) * Complex{1.0 / std::sqrt(2.0), 0.0});
  const Mat2 kr2 = frame(target) * frame(kr1 * psi).adjoint();
  const Unitary4 k = kron(ka1, kr1) * gates::SWAP() * c_basis(p, psi) * kron(ka2, kr2) *
                     std::polar(1.0, uniform(rng, -kPi, kPi));
  return {k, psi0};
}

}  // namespace acqc::test
