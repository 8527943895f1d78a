// Copyright 2026 The vqhe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "vqhe/hamiltonian.hpp"

namespace vqhe::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
/// Usage errors, unreadable or malformed input files.
inline constexpr int kExitInput = 2;

/// Runs the `vqhe` command line. `args` excludes the program name. The JSON
/// (or CSV) document goes to `out` only after the command has fully
/// succeeded; diagnostics and progress go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// `ising-neighbor:N` or `ising-all:N`.
Hamiltonian build_hamiltonian(const std::string& spec);

}  // namespace vqhe::cli
