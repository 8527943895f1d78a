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

#include "vqhe/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>
#include <random>
#include <thread>

#include "vqhe/adjoint.hpp"
#include "vqhe/errors.hpp"

namespace vqhe {

void OptimizerConfig::validate() const {
  if (max_iterations == 0) throw ValidationError("max_iterations must be positive");
  if (restarts == 0) throw ValidationError("restarts must be positive");
  if (!(learning_rate > 0.0)) throw ValidationError("learning rate must be > 0");
  if (!(fd_step > 0.0)) throw ValidationError("finite-difference step must be > 0");
  if (!(tolerance >= 0.0)) throw ValidationError("tolerance must be >= 0");
  if (patience == 0) throw ValidationError("patience must be positive");
  if (threads == 0) throw ValidationError("threads must be positive");
}

namespace {

struct Evaluation {
  double cost = 0.0;       // selected cost, in its natural direction
  double objective = 0.0;  // quantity being minimized
  double norm = 0.0;       // Pauli norm of the current engineered coefficients
  std::vector<double> grad_objective;
};

class Problem {
 public:
  Problem(const Hamiltonian& h, const AnsatzLayout& layout,
          const OptimizerConfig& config)
      : compiled_(h, layout), lambda_(l2_norm(h)), config_(config) {}

  const CompiledAnsatz& compiled() const { return compiled_; }

  Evaluation evaluate(const ParameterVector& theta, bool with_gradient) const {
    auto coeffs = compiled_.forward(theta);
    Evaluation e;
    for (double c : coeffs) e.norm += std::abs(c);
    auto cost = evaluate_cost(config_.cost, coeffs, lambda_);
    e.cost = cost.value;
    const double direction = config_.cost == CostKind::QMaximize ? -1.0 : 1.0;
    e.objective = direction * cost.value;
    if (with_gradient) {
      if (config_.gradient_mode == GradientMode::Analytic) {
        e.grad_objective = compiled_.backward(theta, std::move(coeffs),
                                              std::move(cost.cotangent));
      } else {
        e.grad_objective = cost_gradient(compiled_, lambda_, theta, config_.cost,
                                         GradientMode::CentralDifference,
                                         config_.fd_step);
      }
      for (auto& g : e.grad_objective) {
        g *= direction;
        if (!std::isfinite(g)) throw NumericError("gradient is not finite");
      }
    }
    return e;
  }

 private:
  CompiledAnsatz compiled_;
  double lambda_;
  const OptimizerConfig& config_;
};

struct RunOutcome {
  ParameterVector best_theta;
  double best_norm = 0.0;
  std::vector<double> trace;
};

class Run {
 public:
  Run(const Problem& problem, const OptimizerConfig& config)
      : problem_(problem), config_(config) {}

  RunOutcome operator()(ParameterVector theta) {
    if (config_.method == OptimizerMethod::Adam) {
      adam(theta);
      theta = out_.best_theta;
      line_search(theta, config_.polish_iterations);
    } else {
      line_search(theta, config_.max_iterations);
    }
    return std::move(out_);
  }

 private:
  void record(const ParameterVector& theta, const Evaluation& e) {
    out_.trace.push_back(e.cost);
    if (out_.best_theta.empty() || e.norm < out_.best_norm) {
      out_.best_norm = e.norm;
      out_.best_theta = theta;
    }
  }

  void adam(ParameterVector& theta) {
    const std::size_t m = theta.size();
    std::vector<double> first(m, 0.0), second(m, 0.0);
    double b1t = 1.0, b2t = 1.0;
    double previous = 0.0;
    std::size_t quiet = 0;
    for (std::size_t it = 0; it < config_.max_iterations; ++it) {
      const Evaluation e = problem_.evaluate(theta, true);
      record(theta, e);
      if (it > 0 && std::abs(e.cost - previous) < config_.tolerance) {
        if (++quiet >= config_.patience) return;
      } else {
        quiet = 0;
      }
      previous = e.cost;
      b1t *= config_.beta1;
      b2t *= config_.beta2;
      for (std::size_t k = 0; k < m; ++k) {
        const double g = e.grad_objective[k];
        first[k] = config_.beta1 * first[k] + (1.0 - config_.beta1) * g;
        second[k] = config_.beta2 * second[k] + (1.0 - config_.beta2) * g * g;
        const double mhat = first[k] / (1.0 - b1t);
        const double vhat = second[k] / (1.0 - b2t);
        theta[k] -= config_.learning_rate * mhat / (std::sqrt(vhat) + config_.adam_epsilon);
      }
    }
    // score the final step too
    record(theta, problem_.evaluate(theta, false));
  }

  // Steepest descent on the objective with backtracking: a step is taken only
  // if it strictly lowers the objective, so the recorded costs are monotone.
  void line_search(ParameterVector& theta, std::size_t iterations) {
    if (iterations == 0) return;
    Evaluation e = problem_.evaluate(theta, true);
    record(theta, e);
    double step = config_.learning_rate;
    double previous = e.cost;
    std::size_t quiet = 0;
    ParameterVector trial(theta.size());
    for (std::size_t it = 0; it < iterations; ++it) {
      double gnorm2 = 0.0;
      for (double g : e.grad_objective) gnorm2 += g * g;
      if (gnorm2 == 0.0) return;
      bool accepted = false;
      for (int halvings = 0; halvings < 60; ++halvings, step *= 0.5) {
        for (std::size_t k = 0; k < theta.size(); ++k) {
          trial[k] = theta[k] - step * e.grad_objective[k];
        }
        Evaluation next = problem_.evaluate(trial, false);
        if (next.objective < e.objective) {
          theta = trial;
          e = problem_.evaluate(theta, true);
          record(theta, e);
          accepted = true;
          break;
        }
      }
      if (!accepted) return;
      step *= 2.0;
      if (std::abs(e.cost - previous) < config_.tolerance) {
        if (++quiet >= config_.patience) return;
      } else {
        quiet = 0;
      }
      previous = e.cost;
    }
  }

  const Problem& problem_;
  const OptimizerConfig& config_;
  RunOutcome out_;
};

ParameterVector random_start(std::size_t m, std::uint64_t seed,
                             std::size_t restart) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(restart),
                    static_cast<std::uint32_t>(static_cast<std::uint64_t>(restart) >> 32)};
  std::mt19937_64 rng(seq);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  ParameterVector theta(m);
  for (auto& t : theta) t = angle(rng);
  return theta;
}

void require_problem(const Hamiltonian& h, const AnsatzLayout& layout,
                     const OptimizerConfig& config) {
  config.validate();
  if (h.empty()) throw DegenerateInputError("cannot engineer the zero Hamiltonian");
  if (layout.num_qubits() != h.num_qubits()) {
    throw DimensionError("layout width differs from Hamiltonian width");
  }
}

EngineeredResult finish(const Hamiltonian& h, const AnsatzLayout& layout,
                        const Problem& problem, const OptimizerConfig& config,
                        RunOutcome winner, std::size_t restart_index) {
  const double original_norm = pauli_norm(h);
  EngineeredResult r{layout, winner.best_theta, h,
                     problem.compiled().to_hamiltonian(
                         problem.compiled().forward(winner.best_theta)),
                     original_norm, 0.0, l2_norm(h), config.cost,
                     std::move(winner.trace), restart_index, false};
  r.engineered_norm = pauli_norm(r.engineered);
  if (r.engineered_norm > original_norm) {
    r.identity_fallback = true;
    r.theta_star.assign(layout.parameter_count(), 0.0);
    r.engineered = problem.compiled().to_hamiltonian(
        problem.compiled().forward(r.theta_star));
    // The CZ skeleton only permutes and signs terms; summation order can
    // still move the last ulp.
    r.engineered_norm = std::min(pauli_norm(r.engineered), original_norm);
  }
  return r;
}

}  // namespace

EngineeredResult optimize_from(const Hamiltonian& h, const AnsatzLayout& layout,
                               const ParameterVector& theta0,
                               const OptimizerConfig& config) {
  require_problem(h, layout, config);
  check_parameters(layout, theta0);
  const Problem problem(h, layout, config);
  return finish(h, layout, problem, config, Run(problem, config)(theta0), 0);
}

EngineeredResult optimize(const Hamiltonian& h, const AnsatzLayout& layout,
                          const OptimizerConfig& config) {
  require_problem(h, layout, config);
  const Problem problem(h, layout, config);
  const std::size_t m = layout.parameter_count();

  std::vector<RunOutcome> outcomes(config.restarts);
  std::vector<std::exception_ptr> failures(config.restarts);
  auto work = [&](std::size_t r) {
    try {
      outcomes[r] = Run(problem, config)(random_start(m, config.seed, r));
    } catch (...) {
      failures[r] = std::current_exception();
    }
  };
  const std::size_t workers = std::min(config.threads, config.restarts);
  if (workers <= 1) {
    for (std::size_t r = 0; r < config.restarts; ++r) work(r);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t r = w; r < config.restarts; r += workers) work(r);
      });
    }
  }

  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }
  std::size_t best = 0;
  for (std::size_t r = 1; r < outcomes.size(); ++r) {
    if (outcomes[r].best_norm < outcomes[best].best_norm) best = r;
  }
  return finish(h, layout, problem, config, std::move(outcomes[best]), best);
}

std::vector<double> cost_gradient(const Hamiltonian& h,
                                  const AnsatzLayout& layout,
                                  const ParameterVector& theta,
                                  const OptimizerConfig& config) {
  return cost_gradient(h, layout, theta, config.cost, config.gradient_mode,
                       config.fd_step);
}

}  // namespace vqhe
