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

#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace acqc;
using acqc::test::rng_for;

namespace {

const Backend& u1c_backend() {
  static const Backend b = backend_u1c();
  return b;
}

const Backend& u2c_backend() {
  static const Backend b = backend_u2c();
  return b;
}

const Backend& scz_backend() {
  static const Backend b = make_backend(sc_p(gates::Z()), "sc_z");
  return b;
}

template <class T>
int count_of(const std::vector<Primitive>& ops) {
  int n = 0;
  for (const auto& p : ops) n += std::holds_alternative<T>(p) ? 1 : 0;
  return n;
}

void expect_parse_error(const std::string& text, std::size_t line, std::size_t col) {
  try {
    parse_circuit(text);
    FAIL("no ParseError for: " << text);
  } catch (const ParseError& e) {
    CHECK(e.line() == line);
    CHECK(e.column() == col);
  }
}

}  // namespace

TEST_CASE("parse_circuit") {
  const Circuit c = parse_circuit("# bell\nqubits 2\n\nh 0\ncnot 0 1  # entangle\nmeasure\n");
  CHECK(c.n_qubits == 2);
  REQUIRE(c.gates.size() == 2);
  CHECK(c.gates[0].name == "h");
  CHECK(c.gates[1].qubits == std::vector<int>{0, 1});
  CHECK(c.measured == std::vector<int>{0, 1});

  const Circuit d = parse_circuit("qubits 3\nt 2\ntdg 1\ncz 2 0\nmeasure 1\n");
  CHECK(d.gates.size() == 3);
  CHECK(d.measured == std::vector<int>{1});

  const Circuit e = parse_circuit("qubits 1\n");
  CHECK(e.gates.empty());
  CHECK(e.measured.empty());
}

TEST_CASE("parse errors carry line and column") {
  expect_parse_error("h 0\n", 1, 1);
  expect_parse_error("qubits 2\nh 5\n", 2, 3);
  expect_parse_error("qubits 2\nfoo 0\n", 2, 1);
  expect_parse_error("qubits 2\ncnot 0\n", 2, 1);
  expect_parse_error("qubits 2\ncnot 1 1\n", 2, 8);
  expect_parse_error("qubits 2\nqubits 3\n", 2, 1);
  expect_parse_error("qubits 2\nmeasure 0\nh 1\n", 3, 1);
  expect_parse_error("qubits 2\nmeasure 0\nmeasure 0\n", 3, 9);
  expect_parse_error("qubits 0\n", 1, 8);
  expect_parse_error("qubits 2\nh x\n", 2, 3);
  expect_parse_error("", 1, 1);
}

TEST_CASE("to_text round trip") {
  auto rng = rng_for(81);
  for (int i = 0; i < 20; ++i) {
    Circuit c = random_circuit(3, 12, rng, {"h", "t", "tdg", "x", "z", "s", "cz", "cnot"});
    c.measured = {2, 0};
    const Circuit d = parse_circuit(to_text(c));
    REQUIRE(d.n_qubits == c.n_qubits);
    REQUIRE(d.gates.size() == c.gates.size());
    for (std::size_t g = 0; g < c.gates.size(); ++g) {
      REQUIRE(d.gates[g].name == c.gates[g].name);
      REQUIRE(d.gates[g].qubits == c.gates[g].qubits);
    }
    REQUIRE(d.measured == c.measured);
  }
}

TEST_CASE("backends") {
  CHECK(u1c_backend().core_class == "sc_z");
  CHECK(u2c_backend().core_class == "cz");
  CHECK(scz_backend().core_class == "sc_z");
  CHECK_THROWS_AS(make_backend(gates::CNOT(), "cnot"), BackendError);
  CHECK_THROWS_AS(make_backend(gates::SWAP(), "swap"), BackendError);
  CHECK_THROWS_AS(make_backend(Mat4::identity(), "id"), BackendError);
}

TEST_CASE("lower_single") {
  SECTION("XY interaction, Hadamard") {
    const auto ops = lower_single(u1c_backend(), "h", 0);
    REQUIRE(ops.size() == 4);
    CHECK(count_of<Interact>(ops) == 2);
    CHECK(count_of<ResetAncilla>(ops) == 1);
    const Mat2 sd = gates::S().adjoint();
    const Mat2 want = sd * gates::H() * sd;
    CHECK(equal_up_to_global_phase(std::get<AncillaGate>(ops[1]).u, want, 1e-10).equal);
  }
  SECTION("SC(Z), T gate passes through unchanged") {
    const auto ops = lower_single(scz_backend(), "t", 1);
    REQUIRE(ops.size() == 4);
    CHECK(std::get<Interact>(ops[0]).q == 1);
    CHECK(equal_up_to_global_phase(std::get<AncillaGate>(ops[1]).u, gates::T(), 1e-10).equal);
  }
  SECTION("identity-like gates still cost one block") {
    const auto ops = lower_single(u2c_backend(), "z", 0);
    CHECK(count_of<Interact>(ops) == 2);
  }
}

TEST_CASE("lower_entangling") {
  CHECK_THROWS_AS(lower_entangling(u1c_backend(), "cnot", 1, 1), InvalidInput);
  for (const Backend* b : {&u1c_backend(), &u2c_backend(), &scz_backend()}) {
    for (const char* name : {"cz", "cnot"}) {
      const auto ops = lower_entangling(*b, name, 0, 1);
      Circuit c;
      c.n_qubits = 2;
      c.gates.push_back({name, {0, 1}});
      const Schedule s{b->interaction, 2, ops};
      CHECK(verify(c, s, VerifyMode::Unitary) > 1.0 - 1e-9);
    }
    const auto rev = lower_entangling(*b, "cnot", 1, 0);
    Circuit c;
    c.n_qubits = 2;
    c.gates.push_back({"cnot", {1, 0}});
    CHECK(verify(c, Schedule{b->interaction, 2, rev}, VerifyMode::Unitary) > 1.0 - 1e-9);
  }
}

TEST_CASE("compile small circuits") {
  SECTION("empty circuit") {
    const CompileResult r = compile(parse_circuit("qubits 2\n"), u1c_backend());
    CHECK(r.schedule.ops.empty());
    CHECK(r.report.interactions == 0);
  }
  SECTION("single Hadamard") {
    const CompileResult r = compile(parse_circuit("qubits 1\nh 0\n"), u1c_backend());
    CHECK(r.report.interactions == 2);
    CHECK(r.report.ancilla_gates == 1);
    CHECK(r.report.resets == 1);
  }
  SECTION("pinned Bell costs") {
    const Circuit bell = parse_circuit("qubits 2\nh 0\ncnot 0 1\nmeasure 0 1\n");
    const CompileResult a = compile(bell, u1c_backend());
    CHECK(a.report.interactions == 22);
    CHECK(a.report.ancilla_gates == 7);
    CHECK(a.report.readouts == 2);
    const CompileResult b = compile(bell, u2c_backend());
    CHECK(b.report.interactions == 16);
    CHECK(b.report.ancilla_gates == 5);
  }
}

TEST_CASE("cost report agrees with the schedule") {
  auto rng = rng_for(82);
  for (const Backend* b : {&u1c_backend(), &u2c_backend()}) {
    for (int i = 0; i < 20; ++i) {
      Circuit c = random_circuit(3, 15, rng);
      c.measured = {0, 1, 2};
      const CompileResult r = compile(c, *b);
      CHECK(r.report.interactions ==
            count_of<Interact>(r.schedule.ops) + count_of<Readout>(r.schedule.ops));
      CHECK(r.report.ancilla_gates == count_of<AncillaGate>(r.schedule.ops));
      CHECK(r.report.readouts == 3);
      int per_interactions = 0;
      int per_ancilla = 0;
      for (const auto& g : r.report.per_gate) {
        per_interactions += g.interactions;
        per_ancilla += g.ancilla_gates;
      }
      CHECK(per_interactions == r.report.interactions);
      CHECK(per_ancilla == r.report.ancilla_gates);
    }
  }
}

TEST_CASE("compiled circuits reproduce the reference") {
  auto rng = rng_for(83);
  for (const Backend* b : {&u1c_backend(), &u2c_backend(), &scz_backend()}) {
    for (int i = 0; i < 100; ++i) {
      std::uniform_int_distribution<int> nq(1, 4);
      std::uniform_int_distribution<int> ng(0, 20);
      const Circuit c = random_circuit(nq(rng), ng(rng), rng,
                                       {"h", "t", "tdg", "x", "z", "s", "cz", "cnot"});
      const CompileResult plain = compile(c, *b);
      REQUIRE(verify(c, plain.schedule, VerifyMode::State) > 1.0 - 1e-8);
      const CompileResult folded = compile(c, *b, {true});
      REQUIRE(verify(c, folded.schedule, VerifyMode::State) > 1.0 - 1e-8);
      REQUIRE(folded.report.interactions <= plain.report.interactions);
    }
  }
}

TEST_CASE("three-qubit circuits in unitary mode") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    std::mt19937_64 rng(seed);
    const Circuit c = random_circuit(3, 10, rng);
    const CompileResult r = compile(c, u2c_backend());
    REQUIRE(verify(c, r.schedule, VerifyMode::Unitary) > 1.0 - 1e-8);
  }
}

TEST_CASE("T powers") {
  for (const Backend* b : {&u1c_backend(), &u2c_backend()}) {
    const Circuit t8 = parse_circuit("qubits 1\nh 0\nt 0\nt 0\nt 0\nt 0\nt 0\nt 0\nt 0\nt 0\nh 0\n");
    const Circuit id = parse_circuit("qubits 1\n");
    const CompileResult r = compile(t8, *b);
    CHECK(verify(id, r.schedule, VerifyMode::Unitary) > 1.0 - 1e-9);
    const Circuit t4 = parse_circuit("qubits 1\nt 0\nt 0\nt 0\nt 0\n");
    const Circuit z = parse_circuit("qubits 1\nz 0\n");
    CHECK(verify(z, compile(t4, *b).schedule, VerifyMode::Unitary) > 1.0 - 1e-9);
    const Circuit t2 = parse_circuit("qubits 1\nt 0\nt 0\n");
    const Circuit s = parse_circuit("qubits 1\ns 0\n");
    CHECK(verify(s, compile(t2, *b).schedule, VerifyMode::Unitary) > 1.0 - 1e-9);
  }
}

TEST_CASE("backends agree on the register output") {
  auto rng = rng_for(84);
  for (int i = 0; i < 20; ++i) {
    const Circuit c = random_circuit(3, 12, rng);
    const auto in = detail::random_register(3, rng);
    const MachineState a = detail::run_without_readout(compile(c, u1c_backend()).schedule, in);
    const MachineState b = detail::run_without_readout(compile(c, u2c_backend()).schedule, in);
    const auto ra = a.split_ancilla().second;
    const auto rb = b.split_ancilla().second;
    Complex ov{0.0, 0.0};
    for (std::size_t k = 0; k < ra.size(); ++k) ov += std::conj(ra[k]) * rb[k];
    REQUIRE(std::abs(ov) > 1.0 - 1e-8);
  }
}

TEST_CASE("verify detects a dropped ancilla gate") {
  auto rng = rng_for(85);
  int checked = 0;
  for (int i = 0; i < 20; ++i) {
    const Circuit c = random_circuit(2, 8, rng);
    const CompileResult r = compile(c, u2c_backend());
    for (std::size_t k = 0; k < r.schedule.ops.size(); ++k) {
      if (!std::holds_alternative<AncillaGate>(r.schedule.ops[k])) continue;
      const Mat2& u = std::get<AncillaGate>(r.schedule.ops[k]).u;
      if (std::abs(std::abs(u.trace()) - 2.0) < 1e-6) continue;
      Schedule broken = r.schedule;
      broken.ops.erase(broken.ops.begin() + static_cast<std::ptrdiff_t>(k));
      CHECK(verify(c, broken, VerifyMode::Unitary) < 0.999);
      ++checked;
      break;
    }
  }
  CHECK(checked > 10);
}

TEST_CASE("verify scores a reset on an entangled ancilla as zero") {
  Circuit c;
  c.n_qubits = 1;
  const Interaction cnot_ia{gates::CNOT(), gates::states::plus(), gates::I()};
  const Schedule s{cnot_ia, 1, {Interact{0}, ResetAncilla{}}};
  CHECK(verify(c, s, VerifyMode::State) == 0.0);
  CHECK_THROWS_AS(verify(parse_circuit("qubits 2\n"), s, VerifyMode::State), InvalidInput);
}

TEST_CASE("Bell sampling") {
  const CompileResult r =
      compile(parse_circuit("qubits 2\nh 0\ncnot 0 1\nmeasure 0 1\n"), u1c_backend());
  int same = 0;
  int ones = 0;
  const int shots = 2000;
  for (int shot = 0; shot < shots; ++shot) {
    MachineState st = init(2, r.schedule.interaction.psi0, zero_register(2), 0);
    st.rng = shot_rng(11, static_cast<std::uint64_t>(shot));
    run_schedule(st, r.schedule.ops, r.schedule.interaction);
    REQUIRE(st.measurement_log.size() == 2);
    same += st.measurement_log[0].outcome == st.measurement_log[1].outcome ? 1 : 0;
    ones += st.measurement_log[0].outcome;
  }
  CHECK(same == shots);
  CHECK(std::abs(static_cast<double>(ones) / shots - 0.5) < 3 * 0.5 / std::sqrt(shots));
}
