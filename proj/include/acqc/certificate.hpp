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
 * Validity of a fixed ancilla-register interaction K for ancilla-controlled
 * computation, and the single- and two-qubit protocols that run on it.
 *
 * All interaction matrices use the (ancilla x register) qubit order.
 *
 * A valid K factors as (ka1 x kr1) SWAP C_{psi_perp}(p) (ka2 x kr2) where
 * psi = ka2 psi0 and kr2 kr1 psi is an eigenvector of p with eigenvalue
 * e^{i theta}. For such K, applying
 *
 *   u~ = ka2^dag R_{psi_perp}(-theta) kr1^dag u kr2^dag ka1^dag
 *
 * to the ancilla between two interactions performs u on the register and
 * leaves the ancilla in psi_f = ka1 kr2 kr1 ka2 psi0.
 */

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "acqc/entanglement.hpp"
#include "acqc/gates.hpp"
#include "acqc/invariants.hpp"
#include "acqc/kak.hpp"
#include "acqc/qmat.hpp"

namespace acqc {

/** Separability threshold used inside the protocols. */
inline constexpr double kProtocolSeparabilityTol = 1e-6;

/** SWAP . C(p), ancilla as control. */
inline Unitary4 sc_p(const Unitary2& p) {
  require_unitary(p, "sc_p");
  return gates::SWAP() * gates::controlled(p);
}

/** p on the register when the ancilla is psi_perp, identity when it is psi. */
inline Unitary4 c_basis(const Unitary2& p, const State2& psi) {
  require_unitary(p, "c_basis");
  require_normalized(psi, "c_basis");
  const State2 perp = orthogonal_complement(psi);
  Mat2 proj, proj_perp;
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) {
      proj(r, c) = psi[r] * std::conj(psi[c]);
      proj_perp(r, c) = perp[r] * std::conj(perp[c]);
    }
  return kron(proj, Mat2::identity()) + kron(proj_perp, p);
}

/** |psi><psi| + e^{i theta}|psi_perp><psi_perp|. */
inline Unitary2 r_psi_perp(const State2& psi, double theta) {
  require_normalized(psi, "r_psi_perp");
  const State2 perp = orthogonal_complement(psi);
  const Complex e = std::polar(1.0, theta);
  Mat2 r;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      r(i, j) = psi[i] * std::conj(psi[j]) + e * perp[i] * std::conj(perp[j]);
  return r;
}

struct AcqcCertificate {
  Unitary4 k;
  State2 psi0;
  State2 psi;
  State2 psi_perp;
  Unitary2 p_core;
  double eigenphase_theta = 0.0;
  // Structural locals: k = (ka1 x kr1) SWAP C_{psi_perp}(p_core) (ka2 x kr2).
  Unitary2 ka1;
  Unitary2 kr1;
  Unitary2 ka2;
  Unitary2 kr2;
  Unitary2 pre_map;
  Unitary2 post_map;
  State2 psi_f;
  /** Other initial ancilla states that pass every check. */
  std::vector<State2> alternative_psi0;
  CanonicalAngles angles;

  /** Structural form rebuilt from the stored pieces. */
  Unitary4 structural_form() const {
    return kron(ka1, kr1) * gates::SWAP() * c_basis(p_core, psi) * kron(ka2, kr2);
  }

  /** f with K(psi0 x phi) = f phi x g psi0. */
  Unitary2 transfer_map() const { return ka1 * kr2; }
};

enum class InvalidityKind {
  NotEntangling,
  WrongNonlocalClass,
  NoSeparatingAncillaState,
  EigenstateConditionFails,
};

inline const char* to_string(InvalidityKind k) {
  switch (k) {
    case InvalidityKind::NotEntangling:
      return "NotEntangling";
    case InvalidityKind::WrongNonlocalClass:
      return "WrongNonlocalClass";
    case InvalidityKind::NoSeparatingAncillaState:
      return "NoSeparatingAncillaState";
    case InvalidityKind::EigenstateConditionFails:
      return "EigenstateConditionFails";
  }
  return "Unknown";
}

struct InvalidityReason {
  InvalidityKind kind;
  std::string detail;
};

using Validation = std::variant<AcqcCertificate, InvalidityReason>;

struct ValidateOptions {
  double tol = kEquivalenceTol;
  int cross_check_samples = 200;
  std::uint64_t seed = 0x5eedacc0ULL;
  /** Restrict the choice of initial ancilla state to this one. */
  std::optional<State2> required_psi0;
};

inline Unitary2 u_tilde(const AcqcCertificate& cert, const Unitary2& u) {
  require_unitary(u, "u_tilde");
  return cert.pre_map * u * cert.post_map;
}

/** K (u~ x I) K (psi0 x phi), checked for separability at both stages. */
inline std::pair<State2, State2> single_qubit_protocol(
    const AcqcCertificate& cert, const Unitary2& u, const State2& phi) {
  require_normalized(phi, "single_qubit_protocol");
  const State4 first = cert.k * kron(cert.psi0, phi);
  if (concurrence(first) > kProtocolSeparabilityTol)
    throw SeparabilityViolation("ancilla entangled after first interaction");
  const State4 last =
      cert.k * (kron(u_tilde(cert, u), Mat2::identity()) * first);
  if (concurrence(last) > kProtocolSeparabilityTol)
    throw SeparabilityViolation("ancilla entangled after second interaction");
  return factorize(last, kProtocolSeparabilityTol);
}

namespace detail {

using State8 = Vector<8>;

// Index layout a*4 + r1*2 + r2.
inline State8 apply_ancilla_register(const Mat4& k, const State8& s, int reg) {
  State8 out = s;
  for (std::size_t other = 0; other < 2; ++other) {
    std::array<std::size_t, 4> idx{};
    for (std::size_t a = 0; a < 2; ++a)
      for (std::size_t r = 0; r < 2; ++r)
        idx[2 * a + r] = reg == 0 ? 4 * a + 2 * r + other : 4 * a + 2 * other + r;
    for (std::size_t i = 0; i < 4; ++i) {
      Complex acc{0.0, 0.0};
      for (std::size_t j = 0; j < 4; ++j) acc += k(i, j) * s[idx[j]];
      out[idx[i]] = acc;
    }
  }
  return out;
}

inline State8 sandwich(const AcqcCertificate& cert, int middle_reps,
                       const State4& reg) {
  State8 s;
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t r = 0; r < 4; ++r) s[4 * a + r] = cert.psi0[a] * reg[r];
  s = apply_ancilla_register(cert.k, s, 0);
  for (int i = 0; i < middle_reps; ++i) s = apply_ancilla_register(cert.k, s, 1);
  return apply_ancilla_register(cert.k, s, 0);
}

/** Dominant ancilla factor and the purity of the reduced ancilla state. */
inline std::pair<State2, double> ancilla_factor(const State8& s) {
  Mat2 rho;
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t r = 0; r < 4; ++r)
        rho(a, b) += s[4 * a + r] * std::conj(s[4 * b + r]);
  const double purity = (rho * rho).trace().real();
  return {eigh(rho).vectors.column(1).normalized(), purity};
}

inline State4 project_ancilla(const State8& s, const State2& a) {
  State4 r;
  for (std::size_t i = 0; i < 4; ++i)
    r[i] = std::conj(a[0]) * s[i] + std::conj(a[1]) * s[4 + i];
  return r;
}

}  // namespace detail

/**
 * Sandwich K_{A R1} (K_{A R2})^reps K_{A R1} on psi0 x phi12.
 * Returns the ancilla and register factors.
 */
inline std::pair<State2, State4> two_qubit_protocol(
    const AcqcCertificate& cert, int middle_reps, const State4& phi12) {
  if (middle_reps < 1) throw InvalidInput("middle_reps must be >= 1");
  require_normalized(phi12, "two_qubit_protocol");
  const detail::State8 out = detail::sandwich(cert, middle_reps, phi12);
  const auto [anc, purity] = detail::ancilla_factor(out);
  // Pure-state concurrence of the ancilla | register cut.
  const double c = std::sqrt(std::max(0.0, 2.0 * (1.0 - purity)));
  if (c > kProtocolSeparabilityTol)
    throw SeparabilityViolation("ancilla entangled with register after sandwich");
  return {anc, detail::project_ancilla(out, anc).normalized()};
}

/** Register unitary induced by the sandwich, column by column. */
inline Unitary4 effective_two_qubit_gate(const AcqcCertificate& cert,
                                         int middle_reps) {
  if (middle_reps < 1) throw InvalidInput("middle_reps must be >= 1");
  Mat4 g;
  State2 anc;
  for (std::size_t j = 0; j < 4; ++j) {
    const detail::State8 out =
        detail::sandwich(cert, middle_reps, State4::basis(j));
    if (j == 0) anc = detail::ancilla_factor(out).first;
    const State4 col = detail::project_ancilla(out, anc);
    detail::State8 rebuilt;
    for (std::size_t a = 0; a < 2; ++a)
      for (std::size_t r = 0; r < 4; ++r) rebuilt[4 * a + r] = anc[a] * col[r];
    if ((out - rebuilt).norm() > kProtocolSeparabilityTol)
      throw SeparabilityViolation(
          "sandwich leaves the ancilla in an input-dependent state");
    g.set_column(j, col);
  }
  if (!is_unitary(g, 1e-8))
    throw SeparabilityViolation("effective gate is not unitary");
  return g;
}

namespace detail {

inline bool cross_check(const AcqcCertificate& cert, int samples,
                        std::uint64_t seed, double tol, std::string& why) {
  std::mt19937_64 rng(seed);
  for (int i = 0; i < samples; ++i) {
    const Mat2 u = random_unitary<2>(rng);
    const State2 phi = random_state<2>(rng);
    try {
      const auto [anc, reg] = single_qubit_protocol(cert, u, phi);
      if (!state_equal_up_to_phase(reg, u * phi, tol)) {
        why = "register output differs from u|phi>";
        return false;
      }
      if (!state_equal_up_to_phase(anc, cert.psi_f, tol)) {
        why = "ancilla does not return to psi_f";
        return false;
      }
    } catch (const SeparabilityViolation& e) {
      why = e.what();
      return false;
    }
  }
  return true;
}

inline std::string describe(const CanonicalAngles& a) {
  std::ostringstream os;
  os.precision(12);
  os << "(" << a.alpha1 << ", " << a.alpha2 << ", " << a.alpha3 << ")";
  return os.str();
}

}  // namespace detail

/**
 * Structural validation of an interaction. The nonlocal class must be
 * (pi/2, pi/2, a3) with a3 short of the SWAP point; the initial ancilla
 * candidates are the preimages ka2^dag|0>, ka2^dag|1> of the canonical
 * factor; each surviving candidate is checked against the eigenvector
 * condition and, finally, operationally on random (u, phi).
 */
inline Validation validate(const Unitary4& k, const ValidateOptions& opts = {}) {
  require_unitary(k, "validate");
  const double tol = opts.tol;
  if (!is_entangling(k, tol))
    return InvalidityReason{InvalidityKind::NotEntangling,
                            "locally equivalent to the identity or SWAP"};

  const CanonicalDecomposition kak = kak_decompose(k);
  const CanonicalAngles& a = kak.angles;
  if (std::abs(a.alpha1 - kPi / 2) > tol || std::abs(a.alpha2 - kPi / 2) > tol ||
      std::abs(a.alpha3) >= kPi / 2 - tol)
    return InvalidityReason{InvalidityKind::WrongNonlocalClass,
                            "canonical angles " + detail::describe(a) +
                                " are not of the form (pi/2, pi/2, a3)"};

  // M(pi/2, pi/2, a3) = e^{i a3/2} SWAP diag(1, w, w, 1), w = i e^{-i a3}.
  const double a3 = a.alpha3;
  const Complex w = 1i * std::polar(1.0, -a3);
  const Complex w_inv2 = 1.0 / (w * w);
  const Complex global = std::polar(1.0, kak.phase + a3 / 2.0);

  const std::array<State2, 4> probes{gates::states::zero(), gates::states::one(),
                                     gates::states::plus(), gates::states::plus_i()};

  std::vector<std::pair<AcqcCertificate, int>> passing;
  bool any_separating = false;
  std::string eigen_detail;
  for (int b = 0; b < 2; ++b) {
    const State2 psi0 =
        canonical_phase(kak.ka2.adjoint() * State2::basis(static_cast<std::size_t>(b)));
    bool separating = true;
    for (const State2& phi : probes)
      if (!is_separable(k * kron(psi0, phi), tol)) separating = false;
    if (!separating) continue;
    any_separating = true;

    AcqcCertificate cert;
    cert.k = k;
    cert.angles = CanonicalAngles{kPi / 2, kPi / 2, a3};
    const Mat2 l = b == 0 ? Mat2::diagonal({1.0, w}) : Mat2::diagonal({w, 1.0});
    cert.p_core = b == 0 ? Mat2::diagonal({1.0, w_inv2}) : Mat2::diagonal({w_inv2, 1.0});
    cert.ka1 = kak.ka1 * l * global;
    cert.kr1 = kak.kr1 * l;
    cert.ka2 = kak.ka2;
    cert.kr2 = kak.kr2;
    cert.psi0 = psi0;
    cert.psi = cert.ka2 * psi0;
    cert.psi_perp = orthogonal_complement(cert.psi);
    if (max_abs_diff(cert.structural_form(), k) > tol) {
      eigen_detail = "structural form does not reproduce K";
      continue;
    }
    const State2 tau = cert.kr2 * cert.kr1 * cert.psi;
    const Complex lambda = inner(tau, cert.p_core * tau);
    if ((cert.p_core * tau - tau * lambda).norm() > tol) {
      eigen_detail = "kr2 kr1 psi is not an eigenvector of p";
      continue;
    }
    cert.eigenphase_theta = std::arg(lambda);
    const auto [pre, rot] = canonical_phase(
        cert.ka2.adjoint() * r_psi_perp(cert.psi, -cert.eigenphase_theta) *
        cert.kr1.adjoint());
    cert.pre_map = pre;
    cert.post_map = cert.kr2.adjoint() * cert.ka1.adjoint() * (1.0 / rot);
    cert.psi_f = cert.ka1 * cert.kr2 * cert.kr1 * cert.ka2 * psi0;
    passing.emplace_back(std::move(cert), b);
  }

  if (passing.empty()) {
    if (!any_separating)
      return InvalidityReason{
          InvalidityKind::NoSeparatingAncillaState,
          "K(psi0 x phi) is entangled for both candidate ancilla states"};
    return InvalidityReason{InvalidityKind::EigenstateConditionFails, eigen_detail};
  }

  // Prefer the candidate closest to |0>; ties go to the |0> preimage.
  std::size_t chosen = 0;
  for (std::size_t i = 1; i < passing.size(); ++i)
    if (std::abs(passing[i].first.psi0[0]) >
        std::abs(passing[chosen].first.psi0[0]) + 1e-9)
      chosen = i;
  if (opts.required_psi0) {
    bool found = false;
    for (std::size_t i = 0; i < passing.size() && !found; ++i)
      if (state_equal_up_to_phase(passing[i].first.psi0, *opts.required_psi0, tol)) {
        chosen = i;
        found = true;
      }
    if (!found)
      return InvalidityReason{InvalidityKind::NoSeparatingAncillaState,
                              "requested initial ancilla state does not pass"};
  }
  AcqcCertificate cert = passing[chosen].first;
  for (std::size_t i = 0; i < passing.size(); ++i)
    if (i != chosen) cert.alternative_psi0.push_back(passing[i].first.psi0);

  std::string why;
  if (!detail::cross_check(cert, opts.cross_check_samples, opts.seed, tol, why))
    return InvalidityReason{InvalidityKind::EigenstateConditionFails,
                            "operational cross-check failed: " + why};
  return cert;
}

/** Certificate for K with the given initial ancilla state, if one passes. */
inline std::optional<AcqcCertificate> certificate_for(
    const Unitary4& k, const State2& psi0, ValidateOptions opts = {}) {
  opts.required_psi0 = psi0;
  auto result = validate(k, opts);
  if (auto* cert = std::get_if<AcqcCertificate>(&result)) return *cert;
  return std::nullopt;
}

/**
 * Random search for an ancilla gate u~ whose two-interaction protocol leaves
 * the ancilla entangled with the register, for some probe register input.
 */
inline std::optional<Unitary2> find_entangling_witness(const Unitary4& k,
                                                       const State2& psi0,
                                                       int trials,
                                                       std::uint64_t seed) {
  require_unitary(k, "find_entangling_witness");
  require_normalized(psi0, "find_entangling_witness");
  std::mt19937_64 rng(seed);
  std::vector<State2> probes{gates::states::zero(), gates::states::one(),
                             gates::states::plus(), gates::states::plus_i()};
  for (int t = 0; t < trials; ++t) {
    const Mat2 ut = random_unitary<2>(rng);
    probes.resize(4);
    probes.push_back(random_state<2>(rng));
    for (const State2& phi : probes) {
      const State4 out = k * (kron(ut, Mat2::identity()) * (k * kron(psi0, phi)));
      if (concurrence(out.normalized()) > 1e-3) return ut;
    }
  }
  return std::nullopt;
}

}  // namespace acqc
