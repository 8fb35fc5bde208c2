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

// acqc: analyze interactions, compile circuits to ancilla schedules, run and
// verify them. Reports go to stdout as JSON. Exit codes: 0 ok, 1 error,
// 2 verification below threshold.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "acqc/acqc.hpp"
#include "acqc/io.hpp"

namespace {

using acqc::Complex;
using acqc::Mat2;
using acqc::Mat4;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitBelowThreshold = 2;

acqc::Backend backend_from_spec(const std::string& spec) {
  if (spec == "u1c") return acqc::backend_u1c();
  if (spec == "u2c") return acqc::backend_u2c();
  const std::string prefix = "generic:";
  if (spec.rfind(prefix, 0) == 0) {
    const std::string path = spec.substr(prefix.size());
    return acqc::make_backend(acqc::io::matrix_from_json<4>(acqc::io::read_json_file(path)),
                              "generic");
  }
  throw acqc::InvalidInput("unknown backend '" + spec + "' (u1c, u2c, generic:<matrix.json>)");
}

acqc::IsingGenerator generator_from_spec(const std::string& spec, double chi) {
  if (spec == "xy") return acqc::h_xy(chi);
  if (spec == "xxz") return acqc::h_xxz(chi);
  const std::string prefix = "general:";
  if (spec.rfind(prefix, 0) == 0) {
    std::vector<double> a;
    std::stringstream ss(spec.substr(prefix.size()));
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        a.push_back(std::stod(item));
      } catch (const std::exception&) {
        throw acqc::InvalidInput("bad coefficient '" + item + "'");
      }
    }
    if (a.size() != 3) throw acqc::InvalidInput("general: needs three coefficients a1,a2,a3");
    return acqc::h_general(acqc::CanonicalAngles{a[0], a[1], a[2]}, chi);
  }
  throw acqc::InvalidInput("unknown hamiltonian '" + spec + "' (xy, xxz, general:a1,a2,a3)");
}

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

struct DemoCheck {
  std::string name;
  double residual;
  double tol;
};

json demo_report(bool& all_pass) {
  using namespace acqc;
  using gates::H;
  using gates::X;
  using gates::Y;
  using gates::Z;
  const Mat2 s = gates::S();
  const Mat2 sdg = gates::Sdg();
  const Mat4 scz = sc_p(Z());
  const Mat4 U1 = u1c();
  const Mat4 U2 = u2c();
  std::vector<DemoCheck> checks;

  auto phase_residual = [](const Mat4& a, const Mat4& b) {
    const PhaseMatch m = equal_up_to_global_phase(a, b, 1.0);
    return max_abs_diff(a, b * std::polar(1.0, m.phase));
  };
  auto inv_residual = [](const Mat4& u, Complex g1, Complex g2) {
    const LocalInvariants g = local_invariants(u);
    return std::max(std::abs(g.g1 - g1), std::abs(g.g2 - g2));
  };

  checks.push_back({"SC(Z) matrix", max_abs_diff(scz, Mat4{{1.0, 0.0, 0.0, 0.0},
                                                         {0.0, 0.0, 1.0, 0.0},
                                                         {0.0, 1.0, 0.0, 0.0},
                                                         {0.0, 0.0, 0.0, -1.0}}),
                    1e-12});
  checks.push_back({"G(CNOT) = (0, 1)", inv_residual(gates::CNOT(), 0.0, 1.0), 1e-9});
  checks.push_back({"G(SWAP) = (-1, -3)", inv_residual(gates::SWAP(), -1.0, -3.0), 1e-9});
  checks.push_back({"G(SC(Z)) = (0, -1)", inv_residual(scz, 0.0, -1.0), 1e-9});
  checks.push_back({"G(U2c) = (-1/2, -2)", inv_residual(U2, -0.5, -2.0), 1e-9});
  checks.push_back({"U1c = (s x s) SC(Z)", max_abs_diff(U1, kron(s, s) * scz), 1e-10});
  const Complex e8 = std::polar(1.0, kPi / 8);
  const Complex c8 = 1i * std::polar(1.0, -kPi / 8);
  checks.push_back({"U2c matrix", max_abs_diff(U2, Mat4{{e8, 0.0, 0.0, 0.0},
                                                        {0.0, 0.0, c8, 0.0},
                                                        {0.0, c8, 0.0, 0.0},
                                                        {0.0, 0.0, 0.0, e8}}),
                    1e-10});
  const Complex e4 = std::polar(1.0, kPi / 4);
  const Complex m4 = -std::polar(1.0, -kPi / 4);
  checks.push_back({"U2c^2 diagonal", max_abs_diff(U2 * U2, Mat4::diagonal({e4, m4, m4, e4})),
                    1e-10});
  const Mat2 r = Mat2::diagonal({std::polar(1.0, -kPi / 8), -std::polar(1.0, 3 * kPi / 8)});
  checks.push_back({"(R x R) U2c^2 = CZ", phase_residual(kron(r, r) * U2 * U2, gates::CZ()),
                    1e-9});
  checks.push_back({"CNOT from two U1c",
                    phase_residual(kron(X(), X()) * U1 * kron(H() * Y(), Z()) * U1 *
                                       kron(X() * s, H() * sdg * H()),
                                   gates::CNOT()),
                    1e-9});
  checks.push_back({"s = T^2", max_abs_diff(gates::T() * gates::T(), s), 1e-12});
  checks.push_back({"Z = T^4", max_abs_diff(gates::T() * gates::T() * gates::T() * gates::T(), Z()),
                    1e-12});
  checks.push_back({"XY evolution at t = pi/4 is U1c",
                    max_abs_diff(h_xy(1.0).evolve(kPi / 4), U1), 1e-10});

  auto cert_of = [](const Mat4& k) -> std::optional<AcqcCertificate> {
    Validation v = validate(k);
    if (auto* c = std::get_if<AcqcCertificate>(&v)) return *c;
    return std::nullopt;
  };
  const auto c_scz = cert_of(scz);
  const auto c_u1 = cert_of(U1);
  const auto c_u2 = cert_of(U2);
  const double fail = 1.0;
  auto psi0_residual = [&](const std::optional<AcqcCertificate>& c) {
    if (!c) return fail;
    return state_equal_up_to_phase(c->psi0, gates::states::zero(), 1e-8) ? 0.0 : fail;
  };
  checks.push_back({"SC(Z) valid with psi0 = |0>", psi0_residual(c_scz), 1e-8});
  checks.push_back({"U1c valid with psi0 = |0>", psi0_residual(c_u1), 1e-8});
  checks.push_back({"U2c valid with psi0 = |0>", psi0_residual(c_u2), 1e-8});
  if (c_scz) {
    const Mat2 u = H() * gates::T();
    checks.push_back({"SC(Z): ancilla gate is u itself",
                      1.0 - (equal_up_to_global_phase(u_tilde(*c_scz, u), u, 1e-10).equal ? 1.0 : 0.0),
                      1e-8});
    checks.push_back({"SC(Z) sandwich = SC(Z)",
                      phase_residual(effective_two_qubit_gate(*c_scz, 1), scz), 1e-8});
  }
  if (c_u1) {
    checks.push_back({"U1c: ancilla gate for H is s^dag H s^dag",
                      phase_residual(kron(u_tilde(*c_u1, H()), Mat2::identity()),
                                     kron(sdg * H() * sdg, Mat2::identity())),
                      1e-8});
    const Mat4 g = effective_two_qubit_gate(*c_u1, 1);
    checks.push_back({"U1c sandwich = SC(Z) as stated", phase_residual(g, scz), 1e-8});
    checks.push_back({"U1c sandwich = (Z x Z) SC(Z)", phase_residual(g, kron(Z(), Z()) * scz),
                      1e-8});
  }
  if (c_u2) {
    checks.push_back({"U2c doubled middle = (Z x s) CZ",
                      phase_residual(effective_two_qubit_gate(*c_u2, 2), kron(Z(), s) * gates::CZ()),
                      1e-8});
  }
  checks.push_back({"SWAP rejected as not entangling",
                    std::holds_alternative<InvalidityReason>(validate(gates::SWAP())) &&
                            std::get<InvalidityReason>(validate(gates::SWAP())).kind ==
                                InvalidityKind::NotEntangling
                        ? 0.0
                        : fail,
                    1e-8});

  json rows = json::array();
  all_pass = true;
  for (const auto& c : checks) {
    const bool pass = c.residual <= c.tol;
    all_pass = all_pass && pass;
    rows.push_back({{"check", c.name}, {"residual", c.residual}, {"tol", c.tol}, {"pass", pass}});
  }
  return {{"checks", rows}, {"all_pass", all_pass}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ancilla-controlled quantum computation toolkit"};
  app.require_subcommand(1);

  std::string matrix_path;
  std::uint64_t seed = 0x5eedacc0ULL;
  auto* analyze = app.add_subcommand("analyze", "Invariants, KAK and validity report for a 4x4 interaction");
  analyze->add_option("matrix", matrix_path, "Matrix JSON file")->required();
  analyze->add_option("--seed", seed, "Seed for the randomized cross-check");

  std::string circuit_path;
  std::string backend_spec = "u2c";
  std::string out_path;
  bool fold = false;
  auto* comp = app.add_subcommand("compile", "Lower a circuit to an ancilla schedule");
  comp->add_option("circuit", circuit_path, "Circuit text file")->required();
  comp->add_option("--backend", backend_spec, "u1c, u2c or generic:<matrix.json>");
  comp->add_option("-o,--output", out_path, "Write the schedule here instead of stdout");
  comp->add_flag("--fold-corrections", fold, "Merge single-qubit blocks across gate boundaries");

  std::string schedule_path;
  int shots = 1024;
  bool final_state = false;
  auto* run = app.add_subcommand("run", "Sample a schedule");
  run->add_option("schedule", schedule_path, "Schedule JSON file")->required();
  run->add_option("--shots", shots, "Number of shots")->check(CLI::PositiveNumber);
  run->add_option("--seed", seed, "Base seed; shot i uses the stream (seed, i)");
  run->add_flag("--final-state", final_state, "Include the last shot's final statevector");

  std::string mode = "state";
  double threshold = 1e-8;
  auto* ver = app.add_subcommand("verify", "Compare a schedule against direct circuit simulation");
  ver->add_option("circuit", circuit_path, "Circuit text file")->required();
  ver->add_option("schedule", schedule_path, "Schedule JSON file")->required();
  ver->add_option("--mode", mode, "state or unitary")->check(CLI::IsMember({"state", "unitary"}));
  ver->add_option("--threshold", threshold, "Pass when fidelity >= 1 - threshold");
  ver->add_option("--seed", seed, "Seed for random input states");

  auto* demo = app.add_subcommand("demo", "Check the worked identities");

  std::string ham = "xy";
  double chi = 1.0;
  double time = acqc::kPi / 4;
  auto* evolve = app.add_subcommand("evolve", "Evolve a two-body Hamiltonian");
  evolve->add_option("--hamiltonian", ham, "xy, xxz or general:a1,a2,a3");
  evolve->add_option("--chi", chi, "Coupling rate");
  evolve->add_option("--time", time, "Evolution time");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) {
      acqc::ValidateOptions opts;
      opts.seed = seed;
      const Mat4 k = acqc::io::matrix_from_json<4>(acqc::io::read_json_file(matrix_path));
      acqc::require_unitary(k, "interaction");
      print(acqc::io::analysis_report(k, opts));
      return kExitOk;
    }
    if (*comp) {
      const acqc::Circuit c = acqc::parse_circuit(acqc::io::read_text_file(circuit_path));
      const acqc::Backend b = backend_from_spec(backend_spec);
      const auto res = acqc::compile(c, b, {fold});
      json report{{"backend", b.name},
                  {"core", {{"class", b.core_class}, {"middle_interactions", b.core_reps}}},
                  {"cost", acqc::io::to_json(res.report)}};
      if (out_path.empty()) {
        report["schedule"] = acqc::io::to_json(res.schedule);
      } else {
        std::ofstream out(out_path);
        if (!out) throw acqc::InvalidInput("cannot write '" + out_path + "'");
        out << acqc::io::to_json(res.schedule).dump(1) << "\n";
        report["output"] = out_path;
      }
      print(report);
      return kExitOk;
    }
    if (*run) {
      const acqc::Schedule s = acqc::io::schedule_from_json(acqc::io::read_json_file(schedule_path));
      std::map<std::string, int> counts;
      std::vector<Complex> last;
      for (int shot = 0; shot < shots; ++shot) {
        acqc::MachineState st = acqc::init(s.n_register, s.interaction.psi0,
                                           acqc::zero_register(s.n_register), seed);
        st.rng = acqc::shot_rng(seed, static_cast<std::uint64_t>(shot));
        acqc::run_schedule(st, s.ops, s.interaction);
        std::string key;
        for (const auto& m : st.measurement_log) key += m.outcome ? '1' : '0';
        ++counts[key];
        if (shot == shots - 1) last = st.amplitudes;
      }
      json out{{"shots", shots}, {"seed", seed}, {"counts", counts}};
      if (final_state) out["final_state"] = acqc::io::to_json(last);
      print(out);
      return kExitOk;
    }
    if (*ver) {
      const acqc::Circuit c = acqc::parse_circuit(acqc::io::read_text_file(circuit_path));
      const acqc::Schedule s = acqc::io::schedule_from_json(acqc::io::read_json_file(schedule_path));
      const double f = acqc::verify(
          c, s, mode == "unitary" ? acqc::VerifyMode::Unitary : acqc::VerifyMode::State, seed);
      const bool pass = f >= 1.0 - threshold;
      print({{"mode", mode}, {"fidelity", f}, {"threshold", threshold}, {"pass", pass}});
      return pass ? kExitOk : kExitBelowThreshold;
    }
    if (*demo) {
      bool all_pass = false;
      print(demo_report(all_pass));
      return all_pass ? kExitOk : kExitBelowThreshold;
    }
    if (*evolve) {
      const acqc::IsingGenerator g = generator_from_spec(ham, chi);
      print({{"hamiltonian", ham},
             {"chi", chi},
             {"time", time},
             {"generator", acqc::io::to_json(g.matrix())},
             {"unitary", acqc::io::to_json(g.evolve(time))}});
      return kExitOk;
    }
  } catch (const acqc::ParseError& e) {
    print({{"error", "parse"}, {"line", e.line()}, {"column", e.column()}, {"message", e.what()}});
    return kExitError;
  } catch (const std::exception& e) {
    print({{"error", e.what()}});
    return kExitError;
  }
  return kExitError;
}
