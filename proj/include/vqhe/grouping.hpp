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
#include <optional>
#include <string>
#include <vector>

#include "vqhe/dense.hpp"
#include "vqhe/hamiltonian.hpp"

namespace vqhe {

enum class Commutation { General, QubitWise };

std::string to_string(Commutation c);

struct Collection {
  std::size_t creation_index = 0;
  std::vector<std::pair<double, PauliString>> terms;

  /// sqrt(sum h^2) over the members.
  double root_sum_square() const;
};

struct GroupingResult {
  std::string strategy;
  Commutation commutation = Commutation::General;
  std::vector<Collection> collections;
  double grouped_norm = 0.0;

  std::size_t collection_count() const noexcept { return collections.size(); }
};

/// Terms in descending |h| (ties: label order) join the first collection, in
/// creation order, whose every member they commute with; otherwise they open
/// a new collection.
GroupingResult sorted_insertion(const Hamiltonian& h,
                                Commutation commutation = Commutation::General);

/// sum over collections of sqrt(sum of squared member coefficients).
double grouped_pauli_norm(const GroupingResult& g);

/// Every term in its own collection.
GroupingResult singleton_grouping(const Hamiltonian& h);

enum class CostMode { UniformShots, WeightedShots, Grouped };

/// Shot-count models at precision epsilon:
///   uniform  L^2 h_max^2 / eps^2
///   weighted (sum |h_i|)^2 / eps^2
///   grouped  (||H||_gp / eps)^2, sorted insertion with general commutation
double measurement_cost(const Hamiltonian& h, double epsilon, CostMode mode);

enum class AllocationRule { Uniform, Weighted };

struct ShotEstimate {
  double estimate = 0.0;
  double exact = 0.0;
  /// sum_u Var[H_u] / S_u with the true variances of the sampled units
  /// (terms, or collections when grouped).
  double predicted_variance = 0.0;
  std::vector<std::size_t> shots_per_unit;
  /// Unbiased sample variance of each unit's single-shot value.
  std::vector<double> sample_variances;
};

/// Simulates measuring `psi` with `total_shots` split across the terms of h,
/// or across the collections of `grouping` when one is given. Collections are
/// measured in a joint eigenbasis of their members, found numerically.
ShotEstimate shot_simulator(const Hamiltonian& h, const StateVector& psi,
                            AllocationRule rule, std::size_t total_shots,
                            std::uint64_t seed,
                            const GroupingResult* grouping = nullptr);

struct CovarianceStatistic {
  double mean = 0.0;
  double standard_error = 0.0;
  std::size_t samples = 0;
};

/// Monte-Carlo mean over Haar-random states of
/// Cov[P1, P2] = <P1 P2> - <P1><P2>. Requires commuting, distinct strings.
CovarianceStatistic covariance_zero_check(const PauliString& p1,
                                          const PauliString& p2,
                                          std::size_t samples,
                                          std::uint64_t seed);

}  // namespace vqhe
