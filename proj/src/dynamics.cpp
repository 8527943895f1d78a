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

#include "vqhe/dynamics.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>

#include <Eigen/Eigenvalues>

#include "vqhe/adjoint.hpp"
#include "vqhe/errors.hpp"

namespace vqhe {

DenseOperator exact_evolution(const Hamiltonian& h, double t) {
  require_dense_capacity(h.num_qubits());
  const Eigen::SelfAdjointEigenSolver<DenseOperator> eig(to_dense(h));
  if (eig.info() != Eigen::Success) throw NumericError("eigensolver failed");
  const Eigen::VectorXcd phases =
      (eig.eigenvalues().cast<Complex>() * Complex(0.0, -t)).array().exp();
  return eig.eigenvectors() * phases.asDiagonal() * eig.eigenvectors().adjoint();
}

DenseOperator pauli_exponential(const PauliString& p, double a) {
  require_dense_capacity(p.num_qubits());
  const auto dim = Eigen::Index{1} << p.num_qubits();
  return std::cos(a) * DenseOperator::Identity(dim, dim) -
         Complex(0.0, std::sin(a)) * to_dense(p);
}

std::vector<Hamiltonian::Term> product_formula_order(const Hamiltonian& h) {
  std::vector<Hamiltonian::Term> order(h.terms().begin(), h.terms().end());
  std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
    return std::abs(a.second) > std::abs(b.second);
  });
  return order;
}

DenseOperator trotter_first_order(const Hamiltonian& h, double t, std::size_t r) {
  require_dense_capacity(h.num_qubits());
  if (r == 0) throw ValidationError("Trotter step count must be >= 1");
  const auto dim = Eigen::Index{1} << h.num_qubits();
  DenseOperator step = DenseOperator::Identity(dim, dim);
  for (const auto& [p, c] : product_formula_order(h)) {
    step = pauli_exponential(p, t * c / static_cast<double>(r)) * step;
  }
  DenseOperator out = DenseOperator::Identity(dim, dim);
  for (std::size_t k = r; k > 0; k >>= 1) {
    if (k & 1) out = step * out;
    if (k > 1) step = step * step;
  }
  return out;
}

double QDriftPlan::angle(std::size_t g) const {
  const double c = terms.at(indices.at(g)).second;
  return c < 0.0 ? -tau : tau;
}

std::vector<double> qdrift_probabilities(const Hamiltonian& h) {
  if (h.empty()) throw DegenerateInputError("qDrift needs a nonzero Hamiltonian");
  const double gamma = pauli_norm(h);
  std::vector<double> p;
  for (const auto& [s, c] : h.terms()) p.push_back(std::abs(c) / gamma);
  return p;
}

QDriftPlan qdrift_sample(const Hamiltonian& h, double t, std::size_t gate_count,
                         std::uint64_t seed) {
  if (gate_count == 0) throw ValidationError("gate count must be >= 1");
  const auto probs = qdrift_probabilities(h);
  QDriftPlan plan;
  plan.gamma = pauli_norm(h);
  plan.tau = t * plan.gamma / static_cast<double>(gate_count);
  plan.gate_count = gate_count;
  plan.terms.assign(h.terms().begin(), h.terms().end());
  plan.seed = seed;
  std::mt19937_64 rng(seed);
  std::discrete_distribution<std::size_t> pick(probs.begin(), probs.end());
  plan.indices.resize(gate_count);
  for (auto& j : plan.indices) j = pick(rng);
  return plan;
}

DenseOperator qdrift_unitary(const QDriftPlan& plan) {
  const std::size_t n = plan.terms.front().first.num_qubits();
  require_dense_capacity(n);
  const auto dim = Eigen::Index{1} << n;
  DenseOperator u = DenseOperator::Identity(dim, dim);
  for (std::size_t g = 0; g < plan.gate_count; ++g) {
    u = pauli_exponential(plan.terms[plan.indices[g]].first, plan.angle(g)) * u;
  }
  return u;
}

namespace {

// Applies e^{-i a P} to every column of `states` in place.
void rotate_columns(Eigen::MatrixXcd& states, const PauliString& p, double a) {
  const std::uint64_t x = p.x_bits(), z = p.z_bits();
  const std::size_t n = p.num_qubits();
  // basis bit for qubit q sits at position n-1-q
  std::uint64_t xm = 0, zm = 0;
  for (std::size_t q = 0; q < n; ++q) {
    if ((x >> q) & 1) xm |= std::uint64_t{1} << (n - 1 - q);
    if ((z >> q) & 1) zm |= std::uint64_t{1} << (n - 1 - q);
  }
  static constexpr Complex kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const Complex ypow = kIPow[p.y_count() % 4];
  const double c = std::cos(a);
  const Complex minus_is(0.0, -std::sin(a));
  const Eigen::MatrixXcd old = states;
  for (Eigen::Index b = 0; b < old.rows(); ++b) {
    const auto ub = static_cast<std::uint64_t>(b);
    const double sign = (std::popcount(ub & zm) & 1) ? -1.0 : 1.0;
    const auto target = static_cast<Eigen::Index>(ub ^ xm);
    // P|b> = i^{#Y} (-1)^{|b & z|} |b ^ x>
    states.row(target) = c * old.row(target) + minus_is * ypow * sign * old.row(b);
  }
}

}  // namespace

QDriftError qdrift_error(const Hamiltonian& h, double t, std::size_t gate_count,
                         std::size_t trials, std::uint64_t seed) {
  const std::size_t n = h.num_qubits();
  require_dense_capacity(n, kMaxQDriftQubits);
  if (trials < 2) throw ValidationError("need at least two qDrift trials");
  if (gate_count == 0) throw ValidationError("gate count must be >= 1");

  const auto dim = Eigen::Index{1} << n;
  const auto k = static_cast<Eigen::Index>(kQDriftTestStates);
  Eigen::MatrixXcd panel(dim, k);
  std::mt19937_64 state_rng(seed);
  for (Eigen::Index s = 0; s < k; ++s) panel.col(s) = haar_state(n, state_rng);
  const Eigen::MatrixXcd target = exact_evolution(h, t) * panel;

  std::vector<Eigen::MatrixXcd> average(static_cast<std::size_t>(k),
                                        Eigen::MatrixXcd::Zero(dim, dim));
  double sum = 0.0, sum_sq = 0.0;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed),
                      static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(trial), 0x71d7u};
    std::mt19937_64 plan_rng(seq);
    const QDriftPlan plan = qdrift_sample(h, t, gate_count, plan_rng());
    Eigen::MatrixXcd states = panel;
    for (std::size_t g = 0; g < gate_count; ++g) {
      rotate_columns(states, plan.terms[plan.indices[g]].first, plan.angle(g));
    }
    const double err = (states - target).colwise().norm().mean();
    sum += err;
    sum_sq += err * err;
    for (Eigen::Index s = 0; s < k; ++s) {
      average[static_cast<std::size_t>(s)] += states.col(s) * states.col(s).adjoint();
    }
  }

  QDriftError out;
  out.gate_count = gate_count;
  out.trials = trials;
  const double m = static_cast<double>(trials);
  out.state_error = sum / m;
  out.state_stderr =
      std::sqrt(std::max(0.0, (sum_sq - m * out.state_error * out.state_error) /
                                  (m - 1.0)) / m);

  double csum = 0.0, csum_sq = 0.0;
  for (Eigen::Index s = 0; s < k; ++s) {
    const Eigen::MatrixXcd diff = average[static_cast<std::size_t>(s)] / m -
                                  target.col(s) * target.col(s).adjoint();
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(diff, Eigen::EigenvaluesOnly);
    const double trace_distance = 0.5 * eig.eigenvalues().cwiseAbs().sum();
    csum += trace_distance;
    csum_sq += trace_distance * trace_distance;
  }
  const double kd = static_cast<double>(k);
  out.channel_error = csum / kd;
  out.channel_stderr = std::sqrt(
      std::max(0.0, (csum_sq - kd * out.channel_error * out.channel_error) / (kd - 1.0)) /
      kd);
  return out;
}

double sandwich_check(const Hamiltonian& h, const AnsatzLayout& layout,
                      const ParameterVector& theta, double t) {
  require_dense_capacity(h.num_qubits(), 6);
  const Hamiltonian engineered = apply_ansatz(h, layout, theta);
  const DenseOperator u = ansatz_unitary(layout, theta);
  const DenseOperator lhs = u.adjoint() * exact_evolution(engineered, t) * u;
  return spectral_norm(lhs - exact_evolution(h, t));
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw DimensionError("slope needs two or more matching points");
  }
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0)) throw DegenerateInputError("log of non-positive value");
    mx += std::log(x[i]);
    my += std::log(y[i]);
  }
  mx /= static_cast<double>(x.size());
  my /= static_cast<double>(x.size());
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = std::log(x[i]) - mx;
    sxy += dx * (std::log(y[i]) - my);
    sxx += dx * dx;
  }
  if (sxx == 0.0) throw DegenerateInputError("slope needs distinct x values");
  return sxy / sxx;
}

QDriftCostModel qdrift_cost_model(double gamma_original,
                                  double gamma_engineered, double t,
                                  double epsilon,
                                  std::size_t ansatz_gate_count) {
  if (!(epsilon > 0.0)) throw DegenerateInputError("epsilon must be positive");
  const auto gates = [&](double gamma) { return gamma * t * gamma * t / epsilon; };
  return {gates(gamma_original), gates(gamma_engineered), ansatz_gate_count};
}

QDriftCostModel engineered_qdrift_cost(const Hamiltonian& h,
                                       const AnsatzLayout& layout,
                                       const ParameterVector& theta, double t,
                                       double epsilon) {
  const Hamiltonian engineered = apply_ansatz(h, layout, theta);
  return qdrift_cost_model(pauli_norm(h), pauli_norm(engineered), t, epsilon,
                           layout.gates().size());
}

}  // namespace vqhe
