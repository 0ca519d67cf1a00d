/* Copyright 2026 The EcoRoute Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#pragma once

#include <istream>
#include <ostream>

#include "ecoroute/types.h"

namespace ecoroute {

// Reads a fleet document. The format is a small TOML subset:
//
//   # comment
//   [[model]]
//   name = "Llama-2 (7B)"
//   accuracy_const = 50.97
//   alpha = [0.12, 0.85, 0.0004]   # energy, J/token
//   beta = [2e-4, 0.03, 1e-6]      # runtime, s/token
//   gamma = 0.05                   # optional capacity fraction
//
// Every block needs name, accuracy_const, alpha and beta. The resulting fleet
// passes validate_fleet.
Fleet parse_profiles(std::istream& in);

void write_profiles(std::ostream& out, const Fleet& fleet);

}  // namespace ecoroute
