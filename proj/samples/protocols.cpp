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

// Walk-through: certify the XY interaction, drive a register qubit through
// the ancilla, then compile and sample a Bell circuit.

#include <iostream>
#include <map>
#include <random>
#include <string>

#include "acqc/acqc.hpp"

int main() {
  using namespace acqc;

  const Unitary4 k = u1c();
  const Validation v = validate(k);
  if (const auto* bad = std::get_if<InvalidityReason>(&v)) {
    std::cout << "not usable: " << to_string(bad->kind) << "\n";
    return 1;
  }
  const AcqcCertificate& cert = std::get<AcqcCertificate>(v);
  std::cout << "psi0 = (" << cert.psi0[0] << ", " << cert.psi0[1] << ")\n";

  // Hadamard on the register, applied through the ancilla.
  const Unitary2 ut = u_tilde(cert, gates::H());
  std::cout << "ancilla gate for H:\n"
            << "  " << ut(0, 0) << " " << ut(0, 1) << "\n"
            << "  " << ut(1, 0) << " " << ut(1, 1) << "\n";
  const auto [anc, reg] = single_qubit_protocol(cert, gates::H(), gates::states::zero());
  std::cout << "register after protocol: (" << reg[0] << ", " << reg[1] << ")\n";

  const Circuit bell = parse_circuit("qubits 2\nh 0\ncnot 0 1\nmeasure 0 1\n");
  const Backend backend = backend_u1c();
  const CompileResult res = compile(bell, backend);
  std::cout << "bell on u1c: " << res.report.interactions << " interactions, "
            << res.report.ancilla_gates << " ancilla gates, fidelity "
            << verify(bell, res.schedule, VerifyMode::Unitary) << "\n";

  std::map<std::string, int> counts;
  for (int shot = 0; shot < 1000; ++shot) {
    MachineState st = init(2, res.schedule.interaction.psi0, zero_register(2), 0);
    st.rng = shot_rng(42, static_cast<std::uint64_t>(shot));
    run_schedule(st, res.schedule.ops, res.schedule.interaction);
    std::string key;
    for (const auto& m : st.measurement_log) key += m.outcome ? '1' : '0';
    ++counts[key];
  }
  for (const auto& [key, n] : counts) std::cout << "  " << key << ": " << n << "\n";
  return 0;
}
