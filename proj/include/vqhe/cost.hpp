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

#include <span>
#include <string>
#include <vector>

#include "vqhe/adjoint.hpp"
#include "vqhe/ansatz.hpp"
#include "vqhe/hamiltonian.hpp"

namespace vqhe {

/// QMaximize: Q = sum (h_i / lambda)^4, to be maximized.
/// L1Minimize: sum |h_i| / lambda, the l1 norm of the coefficient state.
enum class CostKind { QMaximize, L1Minimize };
enum class GradientMode { Analytic, CentralDifference };

std::string to_string(CostKind kind);
CostKind cost_kind_from_string(const std::string& name);

double cost_q(const CoefficientVector& v);
double cost_l1(const CoefficientVector& v);

/// Cost of unnormalized coefficients and its derivative with respect to each
/// coefficient. The L1 derivative uses sign(0) = 0.
struct CostEvaluation {
  double value = 0.0;
  std::vector<double> cotangent;
};
CostEvaluation evaluate_cost(CostKind kind, std::span<const double> coefficients,
                             double lambda);

/// Gradient of the selected cost of U(theta) H U(theta)^dagger with respect to
/// theta. Throws NumericError when the cost is not finite.
std::vector<double> cost_gradient(const Hamiltonian& h,
                                  const AnsatzLayout& layout,
                                  const ParameterVector& theta, CostKind kind,
                                  GradientMode mode = GradientMode::Analytic,
                                  double step = 1e-5);

/// Same on an already compiled ansatz.
std::vector<double> cost_gradient(const CompiledAnsatz& compiled, double lambda,
                                  const ParameterVector& theta, CostKind kind,
                                  GradientMode mode = GradientMode::Analytic,
                                  double step = 1e-5);

}  // namespace vqhe
