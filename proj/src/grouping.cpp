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

#include "vqhe/grouping.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "vqhe/errors.hpp"

namespace vqhe {

std::string to_string(Commutation c) {
  return c == Commutation::General ? "general" : "qubit_wise";
}

double Collection::root_sum_square() const {
  double s = 0.0;
  for (const auto& [c, p] : terms) s += c * c;
  return std::sqrt(s);
}

GroupingResult sorted_insertion(const Hamiltonian& h, Commutation commutation) {
  if (h.empty()) throw DegenerateInputError("cannot group the zero Hamiltonian");
  std::vector<std::pair<double, PauliString>> order;
  order.reserve(h.size());
  for (const auto& [p, c] : h.terms()) order.emplace_back(c, p);
  // h.terms() is already in label order, so a stable sort keeps label ties.
  std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
    return std::abs(a.first) > std::abs(b.first);
  });

  const auto compatible = commutation == Commutation::General ? commutes
                                                               : qubit_wise_commutes;
  GroupingResult g;
  g.strategy = commutation == Commutation::General ? "sorted_insertion_gc"
                                                   : "sorted_insertion_qwc";
  g.commutation = commutation;
  for (const auto& term : order) {
    auto it = std::find_if(g.collections.begin(), g.collections.end(),
                           [&](const Collection& col) {
                             return std::all_of(col.terms.begin(), col.terms.end(),
                                                [&](const auto& member) {
                                                  return compatible(member.second, term.second);
                                                });
                           });
    if (it == g.collections.end()) {
      g.collections.push_back({g.collections.size(), {term}});
    } else {
      it->terms.push_back(term);
    }
  }
  g.grouped_norm = grouped_pauli_norm(g);
  return g;
}

double grouped_pauli_norm(const GroupingResult& g) {
  double s = 0.0;
  for (const auto& col : g.collections) s += col.root_sum_square();
  return s;
}

GroupingResult singleton_grouping(const Hamiltonian& h) {
  GroupingResult g;
  g.strategy = "singleton";
  for (const auto& [p, c] : h.terms()) {
    g.collections.push_back({g.collections.size(), {{c, p}}});
  }
  g.grouped_norm = grouped_pauli_norm(g);
  return g;
}

double measurement_cost(const Hamiltonian& h, double epsilon, CostMode mode) {
  if (!(epsilon > 0.0)) throw DegenerateInputError("epsilon must be positive");
  const double e2 = epsilon * epsilon;
  switch (mode) {
    case CostMode::UniformShots: {
      double hmax = 0.0;
      for (const auto& [p, c] : h.terms()) hmax = std::max(hmax, std::abs(c));
      const double l = static_cast<double>(h.size());
      return l * l * hmax * hmax / e2;
    }
    case CostMode::WeightedShots: {
      const double norm = pauli_norm(h);
      return norm * norm / e2;
    }
    case CostMode::Grouped: {
      if (h.empty()) return 0.0;
      const double gp = sorted_insertion(h).grouped_norm;
      return gp * gp / e2;
    }
  }
  return 0.0;
}

namespace {

std::vector<std::size_t> allocate(const std::vector<double>& weights,
                                  AllocationRule rule, std::size_t total) {
  const std::size_t units = weights.size();
  if (total < units) {
    throw ValidationError("need at least one shot per measured unit");
  }
  std::vector<std::size_t> shots(units, 0);
  if (rule == AllocationRule::Uniform) {
    for (std::size_t u = 0; u < units; ++u) {
      shots[u] = total / units + (u < total % units ? 1 : 0);
    }
    return shots;
  }
  double wsum = 0.0;
  for (double w : weights) wsum += w;
  std::size_t assigned = 0;
  for (std::size_t u = 0; u < units; ++u) {
    shots[u] = std::max<std::size_t>(
        1, static_cast<std::size_t>(std::floor(static_cast<double>(total) * weights[u] / wsum)));
    assigned += shots[u];
  }
  // leftover shots go to the heaviest units first
  std::vector<std::size_t> order(units);
  for (std::size_t u = 0; u < units; ++u) order[u] = u;
  std::stable_sort(order.begin(), order.end(),
                   [&](auto a, auto b) { return weights[a] > weights[b]; });
  for (std::size_t k = 0; assigned < total; ++k, ++assigned) {
    ++shots[order[k % units]];
  }
  return shots;
}

struct SampleStats {
  double mean = 0.0;
  double variance = 0.0;
};

SampleStats stats_from_sums(double sum, double sum_sq, std::size_t count) {
  SampleStats s;
  const double n = static_cast<double>(count);
  s.mean = sum / n;
  s.variance = count > 1 ? std::max(0.0, (sum_sq - n * s.mean * s.mean) / (n - 1.0)) : 0.0;
  return s;
}

}  // namespace

ShotEstimate shot_simulator(const Hamiltonian& h, const StateVector& psi,
                            AllocationRule rule, std::size_t total_shots,
                            std::uint64_t seed, const GroupingResult* grouping) {
  const std::size_t n = h.num_qubits();
  require_dense_capacity(n);
  if (static_cast<std::size_t>(psi.size()) != (std::size_t{1} << n)) {
    throw DimensionError("state dimension does not match Hamiltonian");
  }
  if (h.empty()) throw DegenerateInputError("nothing to measure");
  std::mt19937_64 rng(seed);
  ShotEstimate out;
  out.exact = expectation(h, psi);

  if (!grouping) {
    std::vector<double> weights;
    for (const auto& [p, c] : h.terms()) weights.push_back(std::abs(c));
    out.shots_per_unit = allocate(weights, rule, total_shots);
    std::size_t u = 0;
    for (const auto& [p, c] : h.terms()) {
      const double mean = pauli_expectation(p, psi);
      const double prob_plus = std::clamp(0.5 * (1.0 + mean), 0.0, 1.0);
      const std::size_t s = out.shots_per_unit[u++];
      std::binomial_distribution<std::size_t> draw(s, prob_plus);
      const std::size_t plus = draw(rng);
      const double sum = 2.0 * static_cast<double>(plus) - static_cast<double>(s);
      // outcomes are +-1, so sum of squares is the shot count
      const auto st = stats_from_sums(sum, static_cast<double>(s), s);
      out.estimate += c * st.mean;
      out.sample_variances.push_back(st.variance);
      out.predicted_variance += c * c * (1.0 - mean * mean) / static_cast<double>(s);
    }
    return out;
  }

  // Validate the grouping against h.
  Hamiltonian regrouped(n);
  for (const auto& col : grouping->collections) {
    std::vector<Hamiltonian::Term> terms;
    for (const auto& [c, p] : col.terms) terms.emplace_back(p, c);
    regrouped = regrouped + Hamiltonian(n, terms);
    for (std::size_t i = 0; i < col.terms.size(); ++i) {
      for (std::size_t j = i + 1; j < col.terms.size(); ++j) {
        if (!commutes(col.terms[i].second, col.terms[j].second)) {
          throw ValidationError("collection members do not commute");
        }
      }
    }
  }
  if (max_coefficient_difference(regrouped, h) != 0.0) {
    throw ValidationError("grouping does not reproduce the Hamiltonian");
  }

  std::vector<double> weights;
  for (const auto& col : grouping->collections) weights.push_back(col.root_sum_square());
  out.shots_per_unit = allocate(weights, rule, total_shots);

  std::normal_distribution<double> gauss(0.0, 1.0);
  const auto dim = static_cast<Eigen::Index>(psi.size());
  for (std::size_t u = 0; u < grouping->collections.size(); ++u) {
    const auto& col = grouping->collections[u];
    // A generic combination of commuting members has the joint eigenbasis as
    // its eigenbasis.
    DenseOperator mix = DenseOperator::Zero(dim, dim);
    std::vector<DenseOperator> members;
    for (const auto& [c, p] : col.terms) {
      members.push_back(to_dense(p));
      mix += gauss(rng) * members.back();
    }
    Eigen::SelfAdjointEigenSolver<DenseOperator> eig(mix);
    const DenseOperator& basis = eig.eigenvectors();
    std::vector<double> values(static_cast<std::size_t>(dim), 0.0);
    std::vector<double> probs(static_cast<std::size_t>(dim), 0.0);
    for (Eigen::Index k = 0; k < dim; ++k) {
      const auto v = basis.col(k);
      for (std::size_t j = 0; j < members.size(); ++j) {
        values[static_cast<std::size_t>(k)] +=
            col.terms[j].first * v.dot(members[j] * v).real();
      }
      probs[static_cast<std::size_t>(k)] = std::norm(v.dot(psi));
    }
    double mean = 0.0, second = 0.0;
    for (std::size_t k = 0; k < values.size(); ++k) {
      mean += probs[k] * values[k];
      second += probs[k] * values[k] * values[k];
    }
    std::discrete_distribution<std::size_t> outcome(probs.begin(), probs.end());
    const std::size_t s = out.shots_per_unit[u];
    double sum = 0.0, sum_sq = 0.0;
    for (std::size_t shot = 0; shot < s; ++shot) {
      const double x = values[outcome(rng)];
      sum += x;
      sum_sq += x * x;
    }
    const auto st = stats_from_sums(sum, sum_sq, s);
    out.estimate += st.mean;
    out.sample_variances.push_back(st.variance);
    out.predicted_variance += std::max(0.0, second - mean * mean) / static_cast<double>(s);
  }
  return out;
}

CovarianceStatistic covariance_zero_check(const PauliString& p1,
                                          const PauliString& p2,
                                          std::size_t samples,
                                          std::uint64_t seed) {
  if (p1 == p2) throw DegenerateInputError("Pauli strings must differ");
  if (!commutes(p1, p2)) throw DegenerateInputError("Pauli strings must commute");
  if (samples < 2) throw ValidationError("need at least two samples");
  require_dense_capacity(p1.num_qubits());
  const SignedPauli prod = pauli_product(p1, p2);
  const double sign = prod.sign();
  std::mt19937_64 rng(seed);
  double sum = 0.0, sum_sq = 0.0;
  for (std::size_t i = 0; i < samples; ++i) {
    const StateVector psi = haar_state(p1.num_qubits(), rng);
    const double cov = sign * pauli_expectation(prod.string, psi) -
                       pauli_expectation(p1, psi) * pauli_expectation(p2, psi);
    sum += cov;
    sum_sq += cov * cov;
  }
  const auto st = stats_from_sums(sum, sum_sq, samples);
  return {st.mean, std::sqrt(st.variance / static_cast<double>(samples)), samples};
}

}  // namespace vqhe
