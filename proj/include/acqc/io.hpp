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

// JSON forms.
//   complex:  [re, im]
//   vector:   [[re, im], ...]
//   matrix:   {"dim": N, "entries": [[[re, im], ...], ...]}   (row major)
//   schedule: {"qubits": n, "interaction": matrix, "psi0": vector,
//              "ops": [{"op": "interact", "q": 0}, {"op": "ancilla", "u": matrix},
//                      {"op": "reset"}, {"op": "readout", "q": 1}]}

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "acqc/certificate.hpp"
#include "acqc/compile.hpp"
#include "acqc/error.hpp"
#include "acqc/invariants.hpp"
#include "acqc/kak.hpp"
#include "acqc/qmat.hpp"
#include "acqc/sim.hpp"

namespace acqc::io {

using nlohmann::json;

inline json to_json(const Complex& c) { return json::array({c.real(), c.imag()}); }

inline Complex complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw InvalidInput("complex number must be [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

template <std::size_t N>
json to_json(const Vector<N>& v) {
  json out = json::array();
  for (std::size_t i = 0; i < N; ++i) out.push_back(to_json(v[i]));
  return out;
}

inline json to_json(const std::vector<Complex>& v) {
  json out = json::array();
  for (const Complex& c : v) out.push_back(to_json(c));
  return out;
}

template <std::size_t N>
json to_json(const Matrix<N>& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < N; ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < N; ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(row);
  }
  return {{"dim", N}, {"entries", rows}};
}

template <std::size_t N>
Vector<N> vector_from_json(const json& j) {
  if (!j.is_array() || j.size() != N)
    throw InvalidInput("expected a vector of length " + std::to_string(N));
  Vector<N> v;
  for (std::size_t i = 0; i < N; ++i) v[i] = complex_from_json(j[i]);
  return v;
}

template <std::size_t N>
Matrix<N> matrix_from_json(const json& j) {
  const json& rows = j.is_object() ? j.at("entries") : j;
  if (j.is_object() && j.contains("dim") && j.at("dim").get<std::size_t>() != N)
    throw InvalidInput("expected a " + std::to_string(N) + "x" + std::to_string(N) + " matrix");
  if (!rows.is_array() || rows.size() != N)
    throw InvalidInput("expected " + std::to_string(N) + " matrix rows");
  Matrix<N> m;
  for (std::size_t r = 0; r < N; ++r) {
    if (!rows[r].is_array() || rows[r].size() != N)
      throw InvalidInput("matrix row " + std::to_string(r) + " has the wrong length");
    for (std::size_t c = 0; c < N; ++c) m(r, c) = complex_from_json(rows[r][c]);
  }
  if (!m.all_finite()) throw InvalidInput("matrix has non-finite entries");
  return m;
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InvalidInput("'" + path + "' is not valid JSON: " + e.what());
  }
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline json to_json(const LocalInvariants& g) {
  return {{"g1", to_json(g.g1)}, {"g2", to_json(g.g2)}};
}

inline json to_json(const CanonicalAngles& a) {
  return json::array({a.alpha1, a.alpha2, a.alpha3});
}

inline json to_json(const Primitive& p) {
  return std::visit(
      [](const auto& x) -> json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Interact>) return {{"op", "interact"}, {"q", x.q}};
        else if constexpr (std::is_same_v<T, AncillaGate>) return {{"op", "ancilla"}, {"u", to_json(x.u)}};
        else if constexpr (std::is_same_v<T, ResetAncilla>) return {{"op", "reset"}};
        else return {{"op", "readout"}, {"q", x.q}};
      },
      p);
}

inline Primitive primitive_from_json(const json& j) {
  const std::string op = j.at("op").get<std::string>();
  if (op == "interact") return Interact{j.at("q").get<int>()};
  if (op == "ancilla") return AncillaGate{matrix_from_json<2>(j.at("u"))};
  if (op == "reset") return ResetAncilla{};
  if (op == "readout") return Readout{j.at("q").get<int>()};
  throw InvalidInput("unknown schedule op '" + op + "'");
}

inline json to_json(const Schedule& s) {
  json ops = json::array();
  for (const auto& p : s.ops) ops.push_back(to_json(p));
  return {{"qubits", s.n_register},
          {"interaction", to_json(s.interaction.k)},
          {"psi0", to_json(s.interaction.psi0)},
          {"ops", ops}};
}

/** Register size comes from "qubits" when present, else the largest index used. */
inline Schedule schedule_from_json(const json& j) {
  try {
    Schedule s;
    s.interaction = Interaction::from(matrix_from_json<4>(j.at("interaction")),
                                      vector_from_json<2>(j.at("psi0")));
    int max_q = -1;
    for (const json& op : j.at("ops")) {
      s.ops.push_back(primitive_from_json(op));
      if (op.contains("q")) max_q = std::max(max_q, op.at("q").get<int>());
    }
    s.n_register = j.contains("qubits") ? j.at("qubits").get<int>() : std::max(1, max_q + 1);
    return s;
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed schedule: ") + e.what());
  }
}

inline json to_json(const GateCostReport& r) {
  json per = json::array();
  for (const auto& g : r.per_gate)
    per.push_back({{"gate", g.name},
                   {"count", g.count},
                   {"interactions", g.interactions},
                   {"ancilla_gates", g.ancilla_gates}});
  return {{"interactions", r.interactions},
          {"ancilla_gates", r.ancilla_gates},
          {"resets", r.resets},
          {"readouts", r.readouts},
          {"per_gate", per}};
}

/** Validation report; the effective gate uses one middle interaction. */
inline json validation_report(const Validation& v) {
  if (const auto* bad = std::get_if<InvalidityReason>(&v))
    return {{"valid", false}, {"reason", to_string(bad->kind)}, {"detail", bad->detail}};
  const auto& c = std::get<AcqcCertificate>(v);
  json alts = json::array();
  for (const auto& a : c.alternative_psi0) alts.push_back(to_json(a));
  json out{{"valid", true},
           {"psi0", to_json(c.psi0)},
           {"alternative_psi0", alts},
           {"p_core", to_json(c.p_core)},
           {"eigenphase", c.eigenphase_theta},
           {"pre_map", to_json(c.pre_map)},
           {"post_map", to_json(c.post_map)},
           {"psi_f", to_json(c.psi_f)}};
  try {
    out["effective_gate"] = to_json(effective_two_qubit_gate(c, 1));
  } catch (const SeparabilityViolation&) {
    out["effective_gate"] = nullptr;
  }
  return out;
}

inline json analysis_report(const Unitary4& k, const ValidateOptions& opts = {}) {
  const LocalInvariants g = local_invariants(k);
  const CanonicalDecomposition d = kak_decompose(k);
  return {{"g1", to_json(g.g1)},
          {"g2", to_json(g.g2)},
          {"entangling_power", entangling_power(k)},
          {"is_entangling", is_entangling(k)},
          {"kak",
           {{"alpha", to_json(d.angles)},
            {"locals",
             {{"ka1", to_json(d.ka1)},
              {"kr1", to_json(d.kr1)},
              {"ka2", to_json(d.ka2)},
              {"kr2", to_json(d.kr2)}}},
            {"phase", d.phase},
            {"reconstruction_error", max_abs_diff(d.reconstruct(), k)}}},
          {"acqc", validation_report(validate(k, opts))}};
}

}  // namespace acqc::io
