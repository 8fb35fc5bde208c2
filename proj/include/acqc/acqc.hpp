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

// Everything except the JSON layer (acqc/io.hpp), which needs nlohmann_json.

#include "acqc/certificate.hpp"
#include "acqc/compile.hpp"
#include "acqc/entanglement.hpp"
#include "acqc/error.hpp"
#include "acqc/gates.hpp"
#include "acqc/hamiltonians.hpp"
#include "acqc/invariants.hpp"
#include "acqc/kak.hpp"
#include "acqc/qmat.hpp"
#include "acqc/sim.hpp"
