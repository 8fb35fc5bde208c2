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
 * Circuit front end and lowering to ancilla-only schedules.
 *
 * Circuit text format, one statement per line:
 *
 *   qubits 2        # header, exactly once, before any gate
 *   h 0
 *   cnot 0 1        # control, target
 *   measure 0 1     # final; no arguments means every qubit
 *
 * Gates: h t tdg x z s (one qubit), cnot cz (two qubits). Circuit time runs
 * top to bottom.
 */

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "acqc/certificate.hpp"
#include "acqc/error.hpp"
#include "acqc/gates.hpp"
#include "acqc/hamiltonians.hpp"
#include "acqc/kak.hpp"
#include "acqc/qmat.hpp"
#include "acqc/sim.hpp"

namespace acqc {

struct CircuitGate {
  std::string name;
  std::vector<int> qubits;
};

struct Circuit {
  int n_qubits = 0;
  std::vector<CircuitGate> gates;
  std::vector<int> measured;
};

inline bool is_single_qubit_gate(std::string_view name) {
  return name == "h" || name == "t" || name == "tdg" || name == "x" ||
         name == "z" || name == "s";
}

inline bool is_two_qubit_gate(std::string_view name) {
  return name == "cnot" || name == "cz";
}

inline Unitary2 single_gate_matrix(std::string_view name) {
  if (name == "h") return gates::H();
  if (name == "t") return gates::T();
  if (name == "tdg") return gates::Tdg();
  if (name == "x") return gates::X();
  if (name == "z") return gates::Z();
  if (name == "s") return gates::S();
  throw UnsupportedGate("unsupported single-qubit gate '" + std::string(name) + "'");
}

namespace detail {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

inline std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

inline int parse_int(const Token& tok, std::size_t line) {
  int v = 0;
  const char* first = tok.text.data();
  const char* last = first + tok.text.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last)
    throw ParseError(line, tok.column, "expected an integer, got '" + std::string(tok.text) + "'");
  return v;
}

}  // namespace detail

inline Circuit parse_circuit(std::string_view text) {
  Circuit c;
  bool have_header = false;
  bool measured_any = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto toks = detail::tokenize(line);
    if (toks.empty()) {
      if (eol == text.size()) break;
      continue;
    }
    const std::string name(toks[0].text);
    if (name == "qubits") {
      if (have_header) throw ParseError(line_no, toks[0].column, "duplicate 'qubits' header");
      if (toks.size() != 2)
        throw ParseError(line_no, toks[0].column, "'qubits' takes exactly one argument");
      const int n = detail::parse_int(toks[1], line_no);
      if (n < 1 || n > kMaxRegisterQubits)
        throw ParseError(line_no, toks[1].column, "qubit count must be in [1, 20]");
      c.n_qubits = n;
      have_header = true;
      continue;
    }
    if (!have_header)
      throw ParseError(line_no, toks[0].column, "missing 'qubits N' header");

    std::vector<int> qs;
    for (std::size_t i = 1; i < toks.size(); ++i) {
      const int q = detail::parse_int(toks[i], line_no);
      if (q < 0 || q >= c.n_qubits)
        throw ParseError(line_no, toks[i].column,
                         "qubit index " + std::to_string(q) + " out of range");
      qs.push_back(q);
    }

    if (name == "measure") {
      if (qs.empty())
        for (int q = 0; q < c.n_qubits; ++q) qs.push_back(q);
      for (std::size_t i = 0; i < qs.size(); ++i) {
        for (int m : c.measured)
          if (m == qs[i])
            throw ParseError(line_no, toks[std::min(i + 1, toks.size() - 1)].column,
                             "qubit " + std::to_string(qs[i]) + " measured twice");
        c.measured.push_back(qs[i]);
      }
      measured_any = true;
      continue;
    }
    if (measured_any)
      throw ParseError(line_no, toks[0].column, "gate after measurement");

    std::size_t arity = 0;
    if (is_single_qubit_gate(name)) arity = 1;
    else if (is_two_qubit_gate(name)) arity = 2;
    else throw ParseError(line_no, toks[0].column, "unknown gate '" + name + "'");
    if (qs.size() != arity)
      throw ParseError(line_no, toks[0].column,
                       "'" + name + "' takes " + std::to_string(arity) + " qubit(s)");
    if (arity == 2 && qs[0] == qs[1])
      throw ParseError(line_no, toks[2].column, "control and target coincide");
    c.gates.push_back({name, qs});
  }
  if (!have_header) throw ParseError(line_no, 1, "missing 'qubits N' header");
  return c;
}

inline std::string to_text(const Circuit& c) {
  std::ostringstream os;
  os << "qubits " << c.n_qubits << "\n";
  for (const auto& g : c.gates) {
    os << g.name;
    for (int q : g.qubits) os << " " << q;
    os << "\n";
  }
  if (!c.measured.empty()) {
    os << "measure";
    for (int q : c.measured) os << " " << q;
    os << "\n";
  }
  return os.str();
}

/** Uniform random circuit over the given gate names. */
inline Circuit random_circuit(int n_qubits, int n_gates, std::mt19937_64& rng,
                              const std::vector<std::string>& names = {"h", "t", "cnot"}) {
  Circuit c;
  c.n_qubits = n_qubits;
  std::uniform_int_distribution<std::size_t> pick(0, names.size() - 1);
  std::uniform_int_distribution<int> qd(0, n_qubits - 1);
  for (int i = 0; i < n_gates; ++i) {
    std::string name = names[pick(rng)];
    if (is_two_qubit_gate(name) && n_qubits < 2) name = "h";
    if (is_two_qubit_gate(name)) {
      const int a = qd(rng);
      int b = qd(rng);
      while (b == a) b = qd(rng);
      c.gates.push_back({name, {a, b}});
    } else {
      c.gates.push_back({name, {qd(rng)}});
    }
  }
  return c;
}

// Plain statevector reference, qubit 0 most significant.

inline void apply_reference_gate(std::vector<Complex>& psi, int n, const CircuitGate& g) {
  if (is_single_qubit_gate(g.name)) {
    const Mat2 u = single_gate_matrix(g.name);
    const std::size_t bit = std::size_t{1} << (n - 1 - g.qubits[0]);
    for (std::size_t i = 0; i < psi.size(); ++i) {
      if (i & bit) continue;
      const Complex a0 = psi[i];
      const Complex a1 = psi[i | bit];
      psi[i] = u(0, 0) * a0 + u(0, 1) * a1;
      psi[i | bit] = u(1, 0) * a0 + u(1, 1) * a1;
    }
    return;
  }
  const std::size_t c = std::size_t{1} << (n - 1 - g.qubits[0]);
  const std::size_t t = std::size_t{1} << (n - 1 - g.qubits[1]);
  if (g.name == "cnot") {
    for (std::size_t i = 0; i < psi.size(); ++i)
      if ((i & c) && !(i & t)) std::swap(psi[i], psi[i | t]);
  } else if (g.name == "cz") {
    for (std::size_t i = 0; i < psi.size(); ++i)
      if ((i & c) && (i & t)) psi[i] = -psi[i];
  } else {
    throw UnsupportedGate("unsupported gate '" + g.name + "'");
  }
}

inline std::vector<Complex> reference_run(const Circuit& c, std::vector<Complex> psi) {
  for (const auto& g : c.gates) apply_reference_gate(psi, c.n_qubits, g);
  return psi;
}

/** An intermediate op: a single-qubit block or an entangling core block. */
struct LogicalOp {
  enum class Kind { Single, Core } kind = Kind::Single;
  int q0 = 0;
  int q1 = 0;
  Unitary2 u;
  int origin = -1;  // index of the circuit gate it came from
};

/**
 * A validated interaction together with the rule that turns its effective
 * register gate into CZ. The CZ template works on abstract qubits 0, 1.
 */
struct Backend {
  std::string name;
  AcqcCertificate cert;
  Interaction interaction;
  int core_reps = 1;
  std::string core_class;  // "cz" or "sc_z"
  Unitary4 core_gate;
  std::vector<LogicalOp> cz_template;

  Unitary2 ancilla_gate(const Unitary2& u) const { return u_tilde(cert, u); }
};

namespace detail {

inline bool angles_match(const CanonicalAngles& a, double a1, double a2, double a3,
                         double tol = 1e-8) {
  return std::abs(a.alpha1 - a1) < tol && std::abs(a.alpha2 - a2) < tol &&
         std::abs(a.alpha3 - a3) < tol;
}

struct Dressing {
  Mat2 a, b, c, d;  // g = phase (a x b) target (c x d)
};

inline std::optional<Dressing> dressing_against(const Unitary4& g, const Unitary4& target) {
  const CanonicalDecomposition dg = kak_decompose(g);
  const CanonicalDecomposition dt = kak_decompose(target);
  Dressing out{dg.ka1 * dt.ka1.adjoint(), dg.kr1 * dt.kr1.adjoint(),
               dt.ka2.adjoint() * dg.ka2, dt.kr2.adjoint() * dg.kr2};
  const Mat4 rebuilt = kron(out.a, out.b) * target * kron(out.c, out.d);
  if (!equal_up_to_global_phase(rebuilt, g, 1e-9).equal) return std::nullopt;
  return out;
}

inline bool is_identity_up_to_phase(const Mat2& u, double tol = 1e-12) {
  return equal_up_to_global_phase(u, Mat2::identity(), tol).equal;
}

/** Merge single-qubit blocks that meet on a wire; drop identities. */
inline std::vector<LogicalOp> merge_singles(const std::vector<LogicalOp>& ops, int n) {
  std::vector<LogicalOp> out;
  std::vector<std::optional<std::size_t>> pending(static_cast<std::size_t>(n));
  for (const LogicalOp& op : ops) {
    if (op.kind == LogicalOp::Kind::Single) {
      auto& p = pending[static_cast<std::size_t>(op.q0)];
      if (p) {
        out[*p].u = op.u * out[*p].u;
      } else {
        p = out.size();
        out.push_back(op);
      }
    } else {
      pending[static_cast<std::size_t>(op.q0)].reset();
      pending[static_cast<std::size_t>(op.q1)].reset();
      out.push_back(op);
    }
  }
  std::vector<LogicalOp> kept;
  for (const LogicalOp& op : out)
    if (op.kind == LogicalOp::Kind::Core || !is_identity_up_to_phase(op.u))
      kept.push_back(op);
  return kept;
}

inline LogicalOp single(int q, const Mat2& u, int origin = -1) {
  return LogicalOp{LogicalOp::Kind::Single, q, q, u, origin};
}

inline LogicalOp core(int q0, int q1, int origin = -1) {
  return LogicalOp{LogicalOp::Kind::Core, q0, q1, Mat2::identity(), origin};
}

inline Unitary4 template_unitary(const std::vector<LogicalOp>& ops, const Unitary4& core_gate) {
  Mat4 u = Mat4::identity();
  for (const LogicalOp& op : ops) {
    if (op.kind == LogicalOp::Kind::Core) u = core_gate * u;
    else if (op.q0 == 0) u = kron(op.u, Mat2::identity()) * u;
    else u = kron(Mat2::identity(), op.u) * u;
  }
  return u;
}

}  // namespace detail

inline std::vector<Primitive> lower_single(const Backend& b, std::string_view u_name,
                                           int qubit);
inline std::vector<Primitive> lower_entangling(const Backend& b, std::string_view gate_name,
                                        int q1, int q2);

struct Schedule {
  Interaction interaction;
  int n_register = 1;
  std::vector<Primitive> ops;
};

enum class VerifyMode { State, Unitary };

inline double verify(const Circuit& c, const Schedule& s, VerifyMode mode,
                     std::uint64_t seed = 7, int state_samples = 8);

/**
 * Builds a backend from an interaction. The effective register gate of the
 * sandwich with 1..3 middle interactions is matched first against the CZ
 * class and then against the SC(Z) class; CZ then follows from
 *
 *   CNOT ~ (Xs x Xs) S (HYs x Zs) S (Xs x H s^dag H),   S = SC(Z).
 */
inline Backend make_backend(const Unitary4& k, const std::string& name,
                            const ValidateOptions& opts = {}) {
  Validation v = validate(k, opts);
  if (auto* bad = std::get_if<InvalidityReason>(&v))
    throw BackendError("interaction is not usable: " + std::string(to_string(bad->kind)) +
                       ": " + bad->detail);
  Backend b;
  b.name = name;
  b.cert = std::get<AcqcCertificate>(v);
  b.interaction = Interaction::from(b.cert);

  using gates::H;
  using gates::S;
  using gates::X;
  using gates::Y;
  using gates::Z;
  const Unitary4 cz = gates::CZ();
  const Unitary4 scz = sc_p(Z());

  std::vector<std::pair<int, Unitary4>> effective;
  for (int reps = 1; reps <= 3; ++reps) {
    try {
      effective.emplace_back(reps, effective_two_qubit_gate(b.cert, reps));
    } catch (const SeparabilityViolation&) {
    }
  }

  bool found = false;
  for (const auto& [reps, g] : effective) {
    if (!detail::angles_match(kak_decompose(g).angles, kPi / 2, 0.0, 0.0)) continue;
    auto dr = detail::dressing_against(g, cz);
    if (!dr) continue;
    b.core_reps = reps;
    b.core_class = "cz";
    b.core_gate = g;
    b.cz_template = {detail::single(0, dr->c.adjoint()), detail::single(1, dr->d.adjoint()),
                     detail::core(0, 1), detail::single(0, dr->a.adjoint()),
                     detail::single(1, dr->b.adjoint())};
    found = true;
    break;
  }
  if (!found) {
    for (const auto& [reps, g] : effective) {
      if (!detail::angles_match(kak_decompose(g).angles, kPi / 2, kPi / 2, 0.0)) continue;
      auto dr = detail::dressing_against(g, scz);
      if (!dr) continue;
      b.core_reps = reps;
      b.core_class = "sc_z";
      b.core_gate = g;
      const Mat2 s = S();
      const Mat2 sdg = s.adjoint();
      auto s_block = [&](std::vector<LogicalOp>& ops) {
        ops.push_back(detail::single(0, dr->c.adjoint()));
        ops.push_back(detail::single(1, dr->d.adjoint()));
        ops.push_back(detail::core(0, 1));
        ops.push_back(detail::single(0, dr->a.adjoint()));
        ops.push_back(detail::single(1, dr->b.adjoint()));
      };
      std::vector<LogicalOp> ops;
      ops.push_back(detail::single(1, H()));
      ops.push_back(detail::single(0, X() * s));
      ops.push_back(detail::single(1, H() * sdg * H()));
      s_block(ops);
      ops.push_back(detail::single(0, H() * Y() * s));
      ops.push_back(detail::single(1, Z() * s));
      s_block(ops);
      ops.push_back(detail::single(0, X() * s));
      ops.push_back(detail::single(1, X() * s));
      ops.push_back(detail::single(1, H()));
      b.cz_template = detail::merge_singles(ops, 2);
      found = true;
      break;
    }
  }
  if (!found)
    throw BackendError("no supported entangling strategy: the effective register gate "
                       "is neither CZ- nor SC(Z)-equivalent for 1 to 3 middle interactions");
  if (!equal_up_to_global_phase(detail::template_unitary(b.cz_template, b.core_gate), cz, 1e-9)
           .equal)
    throw BackendError("CZ template does not reproduce CZ");

  // Dual-simulation check of every lowering rule.
  for (const char* gname : {"h", "t", "tdg", "x", "z", "s"}) {
    Circuit c{1, {{gname, {0}}}, {}};
    Schedule sch{b.interaction, 1, lower_single(b, gname, 0)};
    if (verify(c, sch, VerifyMode::Unitary) < 1.0 - 1e-9)
      throw BackendError(std::string("lowering of '") + gname + "' fails verification");
  }
  for (const char* gname : {"cz", "cnot"})
    for (const auto& [q1, q2] : {std::pair{0, 1}, std::pair{1, 0}}) {
      Circuit c{2, {{gname, {q1, q2}}}, {}};
      Schedule sch{b.interaction, 2, lower_entangling(b, gname, q1, q2)};
      if (verify(c, sch, VerifyMode::Unitary) < 1.0 - 1e-9)
        throw BackendError(std::string("lowering of '") + gname + "' fails verification");
    }
  return b;
}

/** XY interaction at t = pi/(4 chi). */
inline Backend backend_u1c() { return make_backend(u1c(), "u1c"); }

/** XXZ interaction at t = pi/(4 chi). */
inline Backend backend_u2c() { return make_backend(u2c(), "u2c"); }

namespace detail {

inline void emit(const Backend& b, const LogicalOp& op, std::vector<Primitive>& out) {
  if (op.kind == LogicalOp::Kind::Single) {
    out.emplace_back(Interact{op.q0});
    out.emplace_back(AncillaGate{b.ancilla_gate(op.u)});
    out.emplace_back(Interact{op.q0});
  } else {
    out.emplace_back(Interact{op.q0});
    for (int i = 0; i < b.core_reps; ++i) out.emplace_back(Interact{op.q1});
    out.emplace_back(Interact{op.q0});
  }
  out.emplace_back(ResetAncilla{});
}

inline std::vector<LogicalOp> logical_ops(const Backend& b, const CircuitGate& g, int origin) {
  if (is_single_qubit_gate(g.name))
    return {single(g.qubits.at(0), single_gate_matrix(g.name), origin)};
  if (!is_two_qubit_gate(g.name)) throw UnsupportedGate("unsupported gate '" + g.name + "'");
  const int q1 = g.qubits.at(0);
  const int q2 = g.qubits.at(1);
  if (q1 == q2) throw InvalidInput("entangling gate needs two distinct qubits");
  std::vector<LogicalOp> ops;
  if (g.name == "cnot") ops.push_back(single(q2, gates::H(), origin));
  for (LogicalOp op : b.cz_template) {
    op.q0 = op.q0 == 0 ? q1 : q2;
    op.q1 = op.q1 == 0 ? q1 : q2;
    op.origin = origin;
    ops.push_back(op);
  }
  if (g.name == "cnot") ops.push_back(single(q2, gates::H(), origin));
  return ops;
}

inline int max_qubit(const std::vector<LogicalOp>& ops) {
  int m = 0;
  for (const auto& op : ops) m = std::max({m, op.q0, op.q1});
  return m + 1;
}

}  // namespace detail

/** [Interact(q), AncillaGate(u~), Interact(q), ResetAncilla]. */
inline std::vector<Primitive> lower_single(const Backend& b, std::string_view u_name,
                                           int qubit) {
  std::vector<Primitive> out;
  detail::emit(b, detail::single(qubit, single_gate_matrix(u_name)), out);
  return out;
}

inline std::vector<Primitive> lower_entangling(const Backend& b, std::string_view gate_name,
                                               int q1, int q2) {
  if (q1 == q2) throw InvalidInput("entangling gate needs two distinct qubits");
  const auto ops =
      detail::logical_ops(b, CircuitGate{std::string(gate_name), {q1, q2}}, 0);
  std::vector<Primitive> out;
  for (const auto& op : detail::merge_singles(ops, detail::max_qubit(ops))) detail::emit(b, op, out);
  return out;
}

struct GateCost {
  std::string name;
  int count = 0;
  int interactions = 0;
  int ancilla_gates = 0;
};

struct GateCostReport {
  int interactions = 0;
  int ancilla_gates = 0;
  int resets = 0;
  int readouts = 0;
  std::vector<GateCost> per_gate;
};

struct CompileOptions {
  bool fold_corrections = false;
};

struct CompileResult {
  Schedule schedule;
  GateCostReport report;
};

/** Interaction and ancilla-gate counts straight from a schedule. */
inline GateCostReport count_schedule(const std::vector<Primitive>& ops) {
  GateCostReport r;
  for (const auto& p : ops) {
    if (std::holds_alternative<Interact>(p)) ++r.interactions;
    else if (std::holds_alternative<AncillaGate>(p)) ++r.ancilla_gates;
    else if (std::holds_alternative<ResetAncilla>(p)) ++r.resets;
    else {
      ++r.readouts;
      ++r.interactions;
    }
  }
  return r;
}

/**
 * Lowers every gate, explicit correction blocks by default. With
 * fold_corrections the single-qubit blocks that meet on a wire are merged
 * across gate boundaries.
 */
inline CompileResult compile(const Circuit& c, const Backend& b,
                             const CompileOptions& opts = {}) {
  std::vector<LogicalOp> ops;
  if (opts.fold_corrections) {
    for (std::size_t i = 0; i < c.gates.size(); ++i) {
      auto g = detail::logical_ops(b, c.gates[i], static_cast<int>(i));
      ops.insert(ops.end(), g.begin(), g.end());
    }
    ops = detail::merge_singles(ops, c.n_qubits);
  } else {
    for (std::size_t i = 0; i < c.gates.size(); ++i) {
      auto g = detail::merge_singles(detail::logical_ops(b, c.gates[i], static_cast<int>(i)),
                                     c.n_qubits);
      ops.insert(ops.end(), g.begin(), g.end());
    }
  }

  CompileResult res;
  res.schedule.interaction = b.interaction;
  res.schedule.n_register = c.n_qubits;
  std::map<std::string, GateCost> by_name;
  for (const auto& g : c.gates) {
    auto& e = by_name[g.name];
    e.name = g.name;
    ++e.count;
  }
  for (const LogicalOp& op : ops) {
    std::vector<Primitive> block;
    detail::emit(b, op, block);
    const GateCostReport bc = count_schedule(block);
    auto& e = by_name[c.gates.at(static_cast<std::size_t>(op.origin)).name];
    e.interactions += bc.interactions;
    e.ancilla_gates += bc.ancilla_gates;
    res.schedule.ops.insert(res.schedule.ops.end(), block.begin(), block.end());
  }
  for (int q : c.measured) res.schedule.ops.emplace_back(Readout{q});
  if (!c.measured.empty()) {
    auto& e = by_name["measure"];
    e.name = "measure";
    e.count = static_cast<int>(c.measured.size());
    e.interactions = e.count;
  }
  res.report = count_schedule(res.schedule.ops);
  for (auto& [_, e] : by_name) res.report.per_gate.push_back(e);
  return res;
}

namespace detail {

inline std::vector<Complex> random_register(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> nd;
  std::vector<Complex> v(std::size_t{1} << n);
  double norm = 0.0;
  for (auto& x : v) {
    x = {nd(rng), nd(rng)};
    norm += std::norm(x);
  }
  for (auto& x : v) x /= std::sqrt(norm);
  return v;
}

inline MachineState run_without_readout(const Schedule& s, const std::vector<Complex>& input) {
  MachineState st = init(s.n_register, s.interaction.psi0, input, 0);
  for (const auto& p : s.ops)
    if (!std::holds_alternative<Readout>(p)) apply_primitive(st, p, s.interaction);
  return st;
}

}  // namespace detail

/**
 * State mode: minimum over |0...0> and random register inputs of
 * <ref| rho_register |ref>. Unitary mode (up to 3 qubits): |tr(U^dag W)|^2/d^2
 * with W read off the basis columns against one common ancilla state.
 * Readout primitives are skipped; the comparison is on the state before
 * measurement. A schedule that resets an entangled ancilla scores 0.
 */
inline double verify(const Circuit& c, const Schedule& s, VerifyMode mode,
                     std::uint64_t seed, int state_samples) {
  if (c.n_qubits != s.n_register)
    throw InvalidInput("circuit and schedule disagree on the register size");
  const std::size_t dim = std::size_t{1} << c.n_qubits;
  try {
    if (mode == VerifyMode::State) {
      std::mt19937_64 rng(seed);
      double worst = 1.0;
      for (int i = 0; i < std::max(1, state_samples); ++i) {
        const std::vector<Complex> in =
            i == 0 ? zero_register(c.n_qubits) : detail::random_register(c.n_qubits, rng);
        const std::vector<Complex> ref = reference_run(c, in);
        const MachineState st = detail::run_without_readout(s, in);
        double f = 0.0;
        for (std::size_t a = 0; a < 2; ++a) {
          Complex overlap{0.0, 0.0};
          for (std::size_t r = 0; r < dim; ++r)
            overlap += std::conj(ref[r]) * st.amplitudes[a * dim + r];
          f += std::norm(overlap);
        }
        worst = std::min(worst, f);
      }
      return worst;
    }
    if (c.n_qubits > 3) throw InvalidInput("unitary verification is limited to 3 qubits");
    Complex tr{0.0, 0.0};
    State2 anc;
    for (std::size_t j = 0; j < dim; ++j) {
      std::vector<Complex> in(dim, Complex{0.0, 0.0});
      in[j] = 1.0;
      const std::vector<Complex> ref = reference_run(c, in);
      const MachineState st = detail::run_without_readout(s, in);
      if (j == 0) anc = st.split_ancilla().first;
      const std::vector<Complex> col = st.project_ancilla(anc);
      for (std::size_t r = 0; r < dim; ++r) tr += std::conj(ref[r]) * col[r];
    }
    const double d = static_cast<double>(dim);
    return std::norm(tr) / (d * d);
  } catch (const ResetOnEntangledAncilla&) {
    return 0.0;
  }
}

}  // namespace acqc
