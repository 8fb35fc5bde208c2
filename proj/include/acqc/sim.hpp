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

/**
 * Statevector machine: one ancilla plus n register qubits.
 *
 * Amplitude index bit n (most significant) is the ancilla; register qubit j
 * sits at bit n-1-j, so register qubit 0 is the next most significant.
 * The register is only ever touched through the fixed interaction.
 */

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "acqc/certificate.hpp"
#include "acqc/entanglement.hpp"
#include "acqc/error.hpp"
#include "acqc/qmat.hpp"

namespace acqc {

inline constexpr int kMaxRegisterQubits = 20;
inline constexpr double kNormTol = 1e-9;
inline constexpr double kResetPurityTol = 1e-6;

struct Interact {
  int q = 0;
};
struct AncillaGate {
  Unitary2 u;
};
struct ResetAncilla {};
struct Readout {
  int q = 0;
};

using Primitive = std::variant<Interact, AncillaGate, ResetAncilla, Readout>;

/**
 * Fixed interaction together with the initial ancilla state and the ancilla
 * correction applied before a readout measurement.
 */
struct Interaction {
  Unitary4 k;
  State2 psi0;
  Unitary2 readout_correction;  // f^dag, where K(psi0 x phi) = f phi x (...)

  /**
   * Derives f from the action of K on psi0 x |0>, psi0 x |1>; the register
   * factor of the first output fixes the relative phase of the two columns.
   */
  static Interaction from(const Unitary4& k, const State2& psi0) {
    require_unitary(k, "interaction");
    require_normalized(psi0, "interaction psi0");
    const State4 s0 = k * kron(psi0, State2::basis(0));
    const State4 s1 = k * kron(psi0, State2::basis(1));
    if (!is_separable(s0, kProtocolSeparabilityTol) ||
        !is_separable(s1, kProtocolSeparabilityTol))
      throw InvalidInput("interaction entangles psi0 with a basis register state");
    const State2 reg = factorize(s0, kProtocolSeparabilityTol).second;
    Mat2 f;
    for (std::size_t j = 0; j < 2; ++j) {
      const State4& s = j == 0 ? s0 : s1;
      for (std::size_t a = 0; a < 2; ++a)
        f(a, j) = std::conj(reg[0]) * s[2 * a] + std::conj(reg[1]) * s[2 * a + 1];
    }
    if (!is_unitary(f, 1e-8))
      throw InvalidInput("interaction does not transfer the register state to the ancilla");
    return Interaction{k, psi0, f.adjoint()};
  }

  static Interaction from(const AcqcCertificate& cert) {
    return from(cert.k, cert.psi0);
  }
};

struct MeasurementRecord {
  std::size_t step = 0;
  int qubit = 0;
  int outcome = 0;
  double probability = 0.0;
};

struct MachineState {
  int n_register = 0;
  std::vector<Complex> amplitudes;
  std::uint64_t rng_seed = 0;
  std::mt19937_64 rng;
  std::vector<MeasurementRecord> measurement_log;
  std::size_t step = 0;

  std::size_t dim() const { return amplitudes.size(); }
  std::size_t ancilla_bit() const { return std::size_t{1} << n_register; }
  std::size_t register_bit(int q) const {
    return std::size_t{1} << (n_register - 1 - q);
  }

  double norm() const {
    double s = 0.0;
    for (const Complex& a : amplitudes) s += std::norm(a);
    return std::sqrt(s);
  }

  /** Reduced density matrix of the ancilla. */
  Mat2 ancilla_density() const {
    const std::size_t half = ancilla_bit();
    Mat2 rho;
    for (std::size_t i = 0; i < half; ++i) {
      const Complex a0 = amplitudes[i];
      const Complex a1 = amplitudes[half + i];
      rho(0, 0) += a0 * std::conj(a0);
      rho(0, 1) += a0 * std::conj(a1);
      rho(1, 0) += a1 * std::conj(a0);
      rho(1, 1) += a1 * std::conj(a1);
    }
    return rho;
  }

  double ancilla_purity() const {
    const Mat2 rho = ancilla_density();
    return (rho * rho).trace().real();
  }

  /** <a| x I applied to the full state (unnormalized). */
  std::vector<Complex> project_ancilla(const State2& a) const {
    const std::size_t half = ancilla_bit();
    std::vector<Complex> out(half);
    for (std::size_t i = 0; i < half; ++i)
      out[i] = std::conj(a[0]) * amplitudes[i] + std::conj(a[1]) * amplitudes[half + i];
    return out;
  }

  /** Dominant ancilla state and the register factor it leaves behind. */
  std::pair<State2, std::vector<Complex>> split_ancilla() const {
    const State2 a = eigh(ancilla_density()).vectors.column(1).normalized();
    std::vector<Complex> reg = project_ancilla(a);
    double n = 0.0;
    for (const Complex& c : reg) n += std::norm(c);
    n = std::sqrt(n);
    for (Complex& c : reg) c /= n;
    return {a, reg};
  }
};

namespace detail {

inline void set_product(MachineState& st, const State2& anc,
                        const std::vector<Complex>& reg) {
  const std::size_t half = st.ancilla_bit();
  for (std::size_t i = 0; i < half; ++i) {
    st.amplitudes[i] = anc[0] * reg[i];
    st.amplitudes[half + i] = anc[1] * reg[i];
  }
}

inline void apply_ancilla(MachineState& st, const Mat2& u) {
  const std::size_t half = st.ancilla_bit();
  for (std::size_t i = 0; i < half; ++i) {
    const Complex a0 = st.amplitudes[i];
    const Complex a1 = st.amplitudes[half + i];
    st.amplitudes[i] = u(0, 0) * a0 + u(0, 1) * a1;
    st.amplitudes[half + i] = u(1, 0) * a0 + u(1, 1) * a1;
  }
}

inline void check_qubit(const MachineState& st, int q) {
  if (q < 0 || q >= st.n_register)
    throw InvalidInput("register index " + std::to_string(q) + " out of range");
}

}  // namespace detail

inline MachineState init(int n_register, const State2& psi0,
                         const std::vector<Complex>& register_state,
                         std::uint64_t seed) {
  if (n_register < 1 || n_register > kMaxRegisterQubits)
    throw InvalidInput("register size must be in [1, 20]");
  const std::size_t reg_dim = std::size_t{1} << n_register;
  if (register_state.size() != reg_dim)
    throw InvalidInput("register state has " + std::to_string(register_state.size()) +
                       " amplitudes, expected " + std::to_string(reg_dim));
  require_normalized(psi0, "init psi0");
  double n = 0.0;
  for (const Complex& c : register_state) n += std::norm(c);
  if (std::abs(std::sqrt(n) - 1.0) > kNormTol)
    throw InvalidInput("register state is not normalized");
  MachineState st;
  st.n_register = n_register;
  st.amplitudes.assign(2 * reg_dim, Complex{0.0, 0.0});
  st.rng_seed = seed;
  st.rng.seed(seed);
  detail::set_product(st, psi0, register_state);
  return st;
}

/** Register state |0...0>. */
inline std::vector<Complex> zero_register(int n_register) {
  std::vector<Complex> r(std::size_t{1} << n_register, Complex{0.0, 0.0});
  r[0] = 1.0;
  return r;
}

/** Per-shot generator: independent streams from (seed, shot). */
inline std::mt19937_64 shot_rng(std::uint64_t seed, std::uint64_t shot) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(shot), static_cast<std::uint32_t>(shot >> 32)};
  return std::mt19937_64(seq);
}

inline void apply_primitive(MachineState& st, const Primitive& prim,
                            const Interaction& ia) {
  std::visit(
      [&](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, Interact>) {
          detail::check_qubit(st, p.q);
          const std::size_t abit = st.ancilla_bit();
          const std::size_t rbit = st.register_bit(p.q);
          const Unitary4& k = ia.k;
          for (std::size_t i = 0; i < abit; ++i) {
            if (i & rbit) continue;
            const std::size_t idx[4] = {i, i | rbit, abit | i, abit | i | rbit};
            Complex v[4];
            for (int r = 0; r < 4; ++r) v[r] = st.amplitudes[idx[r]];
            for (std::size_t r = 0; r < 4; ++r) {
              Complex acc{0.0, 0.0};
              for (std::size_t c = 0; c < 4; ++c) acc += k(r, c) * v[c];
              st.amplitudes[idx[r]] = acc;
            }
          }
        } else if constexpr (std::is_same_v<T, AncillaGate>) {
          require_unitary(p.u, "ancilla gate");
          detail::apply_ancilla(st, p.u);
        } else if constexpr (std::is_same_v<T, ResetAncilla>) {
          const double purity = st.ancilla_purity();
          if (purity < 1.0 - kResetPurityTol)
            throw ResetOnEntangledAncilla("reset requested while the ancilla is entangled (purity " +
                                          std::to_string(purity) + ")");
          detail::set_product(st, ia.psi0, st.split_ancilla().second);
        } else {
          detail::check_qubit(st, p.q);
          apply_primitive(st, Interact{p.q}, ia);
          detail::apply_ancilla(st, ia.readout_correction);
          const std::size_t half = st.ancilla_bit();
          double p1 = 0.0;
          for (std::size_t i = 0; i < half; ++i) p1 += std::norm(st.amplitudes[half + i]);
          p1 = std::clamp(p1, 0.0, 1.0);
          std::uniform_real_distribution<double> uni(0.0, 1.0);
          const int outcome = uni(st.rng) < p1 ? 1 : 0;
          std::vector<Complex> reg = st.project_ancilla(State2::basis(static_cast<std::size_t>(outcome)));
          const double prob = outcome == 1 ? p1 : 1.0 - p1;
          const double scale = 1.0 / std::sqrt(prob);
          for (Complex& c : reg) c *= scale;
          detail::set_product(st, ia.psi0, reg);
          st.measurement_log.push_back({st.step, p.q, outcome, prob});
        }
      },
      prim);
  ++st.step;
  if (std::abs(st.norm() - 1.0) > kNormTol) throw Error("state norm drifted");
}

inline void run_schedule(MachineState& st, const std::vector<Primitive>& schedule,
                         const Interaction& ia) {
  for (const Primitive& p : schedule) apply_primitive(st, p, ia);
}

}  // namespace acqc
