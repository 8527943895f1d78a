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

#include <cstddef>
#include <cstdint>
#include <vector>

#include "vqhe/ansatz.hpp"
#include "vqhe/cost.hpp"
#include "vqhe/hamiltonian.hpp"

namespace vqhe {

enum class OptimizerMethod {
  /// Adam steps, then a monotone line-search polish from the best iterate.
  Adam,
  /// Plain gradient steps with backtracking; the cost never gets worse.
  Gradient,
};

struct OptimizerConfig {
  CostKind cost = CostKind::L1Minimize;
  OptimizerMethod method = OptimizerMethod::Adam;
  std::size_t max_iterations = 300;
  std::size_t restarts = 10;
  double learning_rate = 0.05;
  GradientMode gradient_mode = GradientMode::Analytic;
  double fd_step = 1e-5;
  /// Stop once |delta cost| < tolerance for `patience` consecutive steps.
  double tolerance = 1e-10;
  std::size_t patience = 20;
  /// Line-search iterations run after Adam; 0 disables the polish.
  std::size_t polish_iterations = 200;
  std::uint64_t seed = 0;
  /// Restarts run on up to this many threads; results do not depend on it.
  std::size_t threads = 1;

  // Adam moments, fixed at the usual defaults.
  double beta1 = 0.9;
  double beta2 = 0.999;
  double adam_epsilon = 1e-8;

  /// Throws ValidationError on non-positive counts or steps.
  void validate() const;
};

struct EngineeredResult {
  AnsatzLayout layout;
  ParameterVector theta_star;
  Hamiltonian original;
  Hamiltonian engineered;
  double original_norm = 0.0;
  double engineered_norm = 0.0;
  double lambda = 0.0;
  CostKind cost = CostKind::L1Minimize;
  /// Cost per iteration of the winning restart.
  std::vector<double> cost_trace;
  std::size_t restart_index = 0;
  /// True when no restart beat the original norm and theta = 0 was returned.
  bool identity_fallback = false;
};

/// Runs `restarts` independent optimizations from theta ~ U[0, 2pi)^m and
/// returns the one with the lowest engineered Pauli norm. Never returns a
/// norm above the original: theta = 0 (gates reduce to the Clifford CZ
/// skeleton) is the fallback.
EngineeredResult optimize(const Hamiltonian& h, const AnsatzLayout& layout,
                          const OptimizerConfig& config);

/// A single restart from a given starting point; exposed for tests.
EngineeredResult optimize_from(const Hamiltonian& h, const AnsatzLayout& layout,
                               const ParameterVector& theta0,
                               const OptimizerConfig& config);

std::vector<double> cost_gradient(const Hamiltonian& h,
                                  const AnsatzLayout& layout,
                                  const ParameterVector& theta,
                                  const OptimizerConfig& config);

}  // namespace vqhe
