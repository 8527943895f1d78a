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

#include "vqhe/cost.hpp"

#include <cmath>

#include "vqhe/errors.hpp"

namespace vqhe {

std::string to_string(CostKind kind) {
  return kind == CostKind::QMaximize ? "q" : "l1";
}

CostKind cost_kind_from_string(const std::string& name) {
  if (name == "q" || name == "Q" || name == "q_maximize") return CostKind::QMaximize;
  if (name == "l1" || name == "L1" || name == "l1_minimize") return CostKind::L1Minimize;
  throw ValidationError("unknown cost kind '" + name + "' (expected q or l1)");
}

double cost_q(const CoefficientVector& v) {
  double q = 0.0;
  for (const auto& [idx, a] : v.entries) q += a * a * a * a;
  return q;
}

double cost_l1(const CoefficientVector& v) { return state_l1_norm(v); }

CostEvaluation evaluate_cost(CostKind kind, std::span<const double> coefficients,
                             double lambda) {
  if (!(lambda > 0.0)) throw DegenerateInputError("lambda must be positive");
  CostEvaluation out;
  out.cotangent.resize(coefficients.size());
  if (kind == CostKind::QMaximize) {
    const double l4 = lambda * lambda * lambda * lambda;
    for (std::size_t i = 0; i < coefficients.size(); ++i) {
      const double h = coefficients[i];
      const double h3 = h * h * h;
      out.value += h3 * h;
      out.cotangent[i] = 4.0 * h3 / l4;
    }
    out.value /= l4;
  } else {
    for (std::size_t i = 0; i < coefficients.size(); ++i) {
      const double h = coefficients[i];
      out.value += std::abs(h);
      out.cotangent[i] = h > 0.0 ? 1.0 / lambda : (h < 0.0 ? -1.0 / lambda : 0.0);
    }
    out.value /= lambda;
  }
  if (!std::isfinite(out.value)) throw NumericError("cost is not finite");
  return out;
}

std::vector<double> cost_gradient(const CompiledAnsatz& compiled, double lambda,
                                  const ParameterVector& theta, CostKind kind,
                                  GradientMode mode, double step) {
  if (mode == GradientMode::Analytic) {
    auto coeffs = compiled.forward(theta);
    auto eval = evaluate_cost(kind, coeffs, lambda);
    return compiled.backward(theta, std::move(coeffs), std::move(eval.cotangent));
  }
  if (!(step > 0.0)) throw ValidationError("finite-difference step must be > 0");
  std::vector<double> grad(theta.size());
  ParameterVector probe = theta;
  for (std::size_t k = 0; k < theta.size(); ++k) {
    probe[k] = theta[k] + step;
    const double up = evaluate_cost(kind, compiled.forward(probe), lambda).value;
    probe[k] = theta[k] - step;
    const double down = evaluate_cost(kind, compiled.forward(probe), lambda).value;
    probe[k] = theta[k];
    grad[k] = (up - down) / (2.0 * step);
  }
  return grad;
}

std::vector<double> cost_gradient(const Hamiltonian& h,
                                  const AnsatzLayout& layout,
                                  const ParameterVector& theta, CostKind kind,
                                  GradientMode mode, double step) {
  if (h.empty()) throw DegenerateInputError("zero Hamiltonian has no cost");
  check_parameters(layout, theta);
  const CompiledAnsatz compiled(h, layout);
  return cost_gradient(compiled, l2_norm(h), theta, kind, mode, step);
}

}  // namespace vqhe
