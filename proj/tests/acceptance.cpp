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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Tolerances are fixed below.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "oracles.hpp"
#include "vqhe/adjoint.hpp"
#include "vqhe/cli.hpp"
#include "vqhe/cost.hpp"
#include "vqhe/dense.hpp"
#include "vqhe/dynamics.hpp"
#include "vqhe/grouping.hpp"
#include "vqhe/model_io.hpp"
#include "vqhe/optimizer.hpp"
#include "vqhe/q_estimator.hpp"

namespace {

using namespace vqhe;
using Clock = std::chrono::steady_clock;

constexpr double kGroupedNormTol = 1e-9;
constexpr double kGroupingRuntimeMs = 1.0;
constexpr double kVectorizeTol = 1e-12;
constexpr double kEncodedVTol = 1e-10;
constexpr double kEncodedVRuntimeS = 5.0;
constexpr double kConjugationTol = 1e-10;
constexpr double kSpectrumTol = 1e-8;
constexpr double kPropertyTol = 1e-10;
constexpr double kEstimatorTol = 1e-12;
constexpr double kSigmas = 5.0;
constexpr double kGradientRelTol = 1e-5;
constexpr double kStrictReduction = 0.01;
constexpr double kOptimizationRuntimeS = 120.0;
constexpr double kAnchorTol = 1e-6;
constexpr double kQDriftSlope = -1.0;
constexpr double kQDriftSlopeTol = 0.3;
constexpr double kQDriftRuntimeS = 60.0;
constexpr double kSandwichTol = 1e-10;
constexpr double kCovarianceSigmas = 3.0;
constexpr double kShotModelFactor = 1.5;

PauliString P(const char* label) { return PauliString::from_label(label); }

Hamiltonian three_term_example() {
  return Hamiltonian(2, {{P("XI"), 3.0}, {P("YY"), -1.0}, {P("ZZ"), 2.0}});
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Verdict {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0, double d = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, pattern, a, b, c, d);
  return buf;
}

Eigen::VectorXd dense_vector(const CoefficientVector& v) {
  Eigen::VectorXd out = Eigen::VectorXd::Zero(Eigen::Index{1} << (2 * v.num_qubits));
  for (const auto& [i, a] : v.entries) out[static_cast<Eigen::Index>(i)] = a;
  return out;
}

Verdict criterion1() {
  const Hamiltonian h = three_term_example();
  const auto start = Clock::now();
  const GroupingResult g = sorted_insertion(h);
  const double ms = seconds_since(start) * 1e3;
  const bool shape = g.collection_count() == 2 && g.collections[0].terms.size() == 1 &&
                     g.collections[0].terms[0].second == P("XI") &&
                     g.collections[1].terms.size() == 2 &&
                     g.collections[1].terms[0].second == P("ZZ") &&
                     g.collections[1].terms[1].second == P("YY");
  const double err = std::abs(g.grouped_norm - (3.0 + std::sqrt(5.0)));
  const bool ok = shape && err <= kGroupedNormTol && pauli_norm(h) == 6.0 && ms < kGroupingRuntimeMs;
  return {ok, fmt("grouped_norm=%.9f |err|=%.1e pauli_norm=%g runtime=%.3fms", g.grouped_norm, err,
                  pauli_norm(h), ms) + (shape ? " collections={3XI},{2ZZ,-YY}" : " collections WRONG")};
}

Verdict criterion2() {
  const Hamiltonian h(1, {{P("I"), 1.0}, {P("X"), 2.0}, {P("Y"), 3.0}, {P("Z"), -4.0}});
  const CoefficientVector v = vectorize(h);
  const double e1 = std::abs(v.lambda - std::sqrt(30.0));
  const double e2 = std::abs(state_l1_norm(v) - 10.0 / std::sqrt(30.0));
  return {e1 <= kVectorizeTol && e2 <= kVectorizeTol,
          fmt("lambda=%.15f l1=%.15f errs=(%.1e, %.1e)", v.lambda, state_l1_norm(v), e1, e2)};
}

Verdict criterion3() {
  std::mt19937_64 rng(3003);
  const auto start = Clock::now();
  double worst_map = 0.0, worst_orth = 0.0;
  for (std::size_t n = 1; n <= 2; ++n) {
    for (int draw = 0; draw < 5; ++draw) {
      const AnsatzLayout layout = oracle::random_layout(n, rng);
      const auto theta = oracle::random_angles(layout.parameter_count(), rng);
      const Hamiltonian h = oracle::random_hamiltonian(n, 2 + 2 * n, rng);
      const Eigen::MatrixXd v = build_encoded_v(layout, theta);
      const Eigen::VectorXd lhs = v * dense_vector(vectorize(h));
      const Eigen::VectorXd rhs = dense_vector(vectorize(apply_ansatz(h, layout, theta)));
      worst_map = std::max(worst_map, (lhs - rhs).cwiseAbs().maxCoeff());
      const auto dim = v.rows();
      worst_orth = std::max(
          worst_orth, (v.transpose() * v - Eigen::MatrixXd::Identity(dim, dim)).cwiseAbs().maxCoeff());
    }
  }
  const double s = seconds_since(start);
  return {worst_map <= kEncodedVTol && worst_orth <= kEncodedVTol && s < kEncodedVRuntimeS,
          fmt("max|V|H>-|UHU+>|=%.1e max|VtV-I|=%.1e runtime=%.3fs", worst_map, worst_orth, s)};
}

Verdict criterion4() {
  std::mt19937_64 rng(4004);
  double worst = 0.0, worst_spec = 0.0, worst_lambda = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 1 + trial % 4;
    const AnsatzLayout layout = oracle::random_layout(n, rng);
    const auto theta = oracle::random_angles(layout.parameter_count(), rng);
    const Hamiltonian h = oracle::random_hamiltonian(n, 3 * n, rng);
    const Hamiltonian g = apply_ansatz(h, layout, theta);
    const oracle::Mat u = oracle::unitary(layout, theta);
    const oracle::Mat expected = u * oracle::hamiltonian(h) * u.adjoint();
    worst = std::max(worst, (oracle::hamiltonian(g) - expected).cwiseAbs().maxCoeff());
    const Eigen::VectorXd eh = Eigen::SelfAdjointEigenSolver<oracle::Mat>(oracle::hamiltonian(h)).eigenvalues();
    const Eigen::VectorXd eg = Eigen::SelfAdjointEigenSolver<oracle::Mat>(oracle::hamiltonian(g)).eigenvalues();
    worst_spec = std::max(worst_spec, (eh - eg).cwiseAbs().maxCoeff());
    worst_lambda = std::max(worst_lambda, std::abs(l2_norm(g) - l2_norm(h)));
  }
  return {worst <= kConjugationTol && worst_spec <= kSpectrumTol && worst_lambda <= kConjugationTol,
          fmt("max|dense(H')-UHU+|=%.1e max|eig diff|=%.1e max|dlambda|=%.1e", worst, worst_spec,
              worst_lambda)};
}

Verdict criterion5() {
  std::mt19937_64 rng(5005);
  double comp = 0.0, lin = 0.0, tens = 0.0;
  for (int trial = 0; trial < 10; ++trial) {
    const AnsatzLayout a = oracle::random_layout(2, rng);
    const AnsatzLayout b = oracle::random_layout(2, rng);
    const auto ta = oracle::random_angles(a.parameter_count(), rng);
    const auto tb = oracle::random_angles(b.parameter_count(), rng);
    auto tab = ta;
    tab.insert(tab.end(), tb.begin(), tb.end());
    const Hamiltonian h1 = oracle::random_hamiltonian(2, 5, rng);
    const Hamiltonian h2 = oracle::random_hamiltonian(2, 5, rng);
    comp = std::max(comp, max_coefficient_difference(apply_ansatz(apply_ansatz(h1, a, ta), b, tb),
                                                     apply_ansatz(h1, a.concatenated(b), tab)));
    const double alpha = 0.7, beta = -1.3;
    lin = std::max(lin, max_coefficient_difference(
                            apply_ansatz(h1.scaled(alpha) + h2.scaled(beta), a, ta),
                            apply_ansatz(h1, a, ta).scaled(alpha) + apply_ansatz(h2, a, ta).scaled(beta)));
    const AnsatzLayout la = oracle::random_layout(1, rng);
    const AnsatzLayout lb = oracle::random_layout(1, rng);
    const auto tla = oracle::random_angles(la.parameter_count(), rng);
    const auto tlb = oracle::random_angles(lb.parameter_count(), rng);
    auto tboth = tla;
    tboth.insert(tboth.end(), tlb.begin(), tlb.end());
    const Hamiltonian ha = oracle::random_hamiltonian(1, 3, rng);
    const Hamiltonian hb = oracle::random_hamiltonian(1, 3, rng);
    const AnsatzLayout both = la.embedded({0}, 2).concatenated(lb.embedded({1}, 2));
    tens = std::max(tens, max_coefficient_difference(
                              apply_ansatz(tensor(ha, hb), both, tboth),
                              tensor(apply_ansatz(ha, la, tla), apply_ansatz(hb, lb, tlb))));
  }
  return {comp <= kPropertyTol && lin <= kPropertyTol && tens <= kPropertyTol,
          fmt("composition=%.1e linearity=%.1e tensor=%.1e", comp, lin, tens)};
}

Verdict criterion6() {
  std::mt19937_64 rng(6006);
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const Hamiltonian h = oracle::random_hamiltonian(2, 3 + trial % 10, rng);
    worst = std::max(worst, std::abs(q_analytic(hamiltonian_state(h)).q_value - cost_q(vectorize(h))));
  }
  double worst_circuit = 0.0;
  for (std::size_t n = 1; n <= 2; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      const StateVector psi = haar_state(n, rng);
      worst_circuit = std::max(worst_circuit, std::abs(q_circuit_marginal(psi) - q_analytic(psi).p_plus));
    }
    if (n == 2) {
      const StateVector psi = hamiltonian_state(oracle::random_hamiltonian(1, 3, rng));
      worst_circuit = std::max(worst_circuit, std::abs(q_circuit_marginal(psi) - q_analytic(psi).p_plus));
    }
  }
  const StateVector plus = StateVector::Constant(2, 1.0 / std::sqrt(2.0));
  const std::size_t shots = 100000;
  const QEstimate sampled = q_full_circuit(plus, shots, 6006);
  const double p = q_analytic(plus).p_plus;
  const double sigma_q = 2.0 * std::sqrt(p * (1 - p) / static_cast<double>(shots));
  const double dev = std::abs(sampled.q_value - 0.5);
  return {worst <= kEstimatorTol && worst_circuit <= kEstimatorTol && dev <= kSigmas * sigma_q,
          fmt("max|q_analytic-cost_q|=%.1e max|marginal-analytic|=%.1e sampled q=%.5f (%.2f sigma)",
              worst, worst_circuit, sampled.q_value, dev / sigma_q)};
}

Verdict criterion7() {
  std::mt19937_64 rng(7007);
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 1 + trial % 3;
    const AnsatzLayout layout = oracle::random_layout(n, rng);
    const Hamiltonian h = oracle::random_hamiltonian(n, 6, rng);
    const auto theta = oracle::random_angles(layout.parameter_count(), rng);
    const CostKind kind = trial % 2 == 0 ? CostKind::L1Minimize : CostKind::QMaximize;
    const auto a = cost_gradient(h, layout, theta, kind, GradientMode::Analytic);
    const auto fd = cost_gradient(h, layout, theta, kind, GradientMode::CentralDifference);
    double diff = 0.0, norm = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
      diff += (a[k] - fd[k]) * (a[k] - fd[k]);
      norm += fd[k] * fd[k];
    }
    const double rel = norm > 0.0 ? std::sqrt(diff / norm) : std::sqrt(diff);
    worst = std::max(worst, rel);
  }
  return {worst <= kGradientRelTol, fmt("max relative ||g_analytic - g_fd|| = %.2e", worst)};
}

Verdict criterion8() {
  const auto start = Clock::now();
  OptimizerConfig config;
  config.restarts = 10;
  config.seed = 42;
  bool never_worse = true;
  double best_reduction = 0.0;
  std::string rows;
  for (std::size_t n = 2; n <= 6; ++n) {
    const Hamiltonian h = ising_neighbor(n);
    const EngineeredResult r = optimize(h, AnsatzLayout::hardware_efficient(n, 2), config);
    never_worse = never_worse && r.engineered_norm <= r.original_norm;
    const double reduction = (r.original_norm - r.engineered_norm) / r.original_norm;
    best_reduction = std::max(best_reduction, reduction);
    rows += fmt(" n=%g:%.4f->%.4f", static_cast<double>(n), r.original_norm, r.engineered_norm);
  }
  const double s = seconds_since(start);

  const Hamiltonian xz(1, {{P("X"), 1.0}, {P("Z"), 1.0}});
  const AnsatzLayout ry(1, 1, {Gate::rotation(GateKind::RY, 0, 0)});
  OptimizerConfig anchor_config;
  anchor_config.seed = 42;
  const double anchor = optimize(xz, ry, anchor_config).engineered_norm;
  const double anchor_err = std::abs(anchor - std::sqrt(2.0));
  return {never_worse && best_reduction > kStrictReduction && s < kOptimizationRuntimeS &&
              anchor_err <= kAnchorTol,
          rows.substr(1) + fmt(" | best reduction=%.1f%% runtime=%.1fs anchor=%.9f (err %.1e)",
                               100 * best_reduction, s, anchor, anchor_err)};
}

Verdict criterion9() {
  const auto start = Clock::now();
  const Hamiltonian h = three_term_example();
  std::vector<double> gates, channel, state;
  bool decreasing = true;
  std::string rows;
  for (std::size_t g : {10u, 40u, 160u, 640u}) {
    const QDriftError e = qdrift_error(h, 0.5, g, 200, 9009);
    if (!channel.empty() && !(e.channel_error < channel.back())) decreasing = false;
    gates.push_back(static_cast<double>(g));
    channel.push_back(e.channel_error);
    state.push_back(e.state_error);
    rows += fmt(" G=%g:%.4g", static_cast<double>(g), e.channel_error);
  }
  const double s = seconds_since(start);
  const double slope = loglog_slope(gates, channel);
  const double state_slope = loglog_slope(gates, state);
  const bool ok = decreasing && std::abs(slope - kQDriftSlope) <= kQDriftSlopeTol && s < kQDriftRuntimeS;
  return {ok, "channel error" + rows +
                  fmt(" | slope=%.3f runtime=%.2fs (per-realization state error slope %.3f, informational)",
                      slope, s, state_slope)};
}

Verdict criterion10() {
  std::mt19937_64 rng(1010);
  std::uniform_real_distribution<double> time(0.0, 2.0);
  double worst = 0.0;
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 1 + trial % 3;
    const AnsatzLayout layout = AnsatzLayout::hardware_efficient(n, 2, {GateKind::RX, GateKind::RY, GateKind::RZ});
    const Hamiltonian h = oracle::random_hamiltonian(n, 2 * n + 1, rng);
    worst = std::max(worst, sandwich_check(h, layout, oracle::random_angles(layout.parameter_count(), rng),
                                           time(rng)));
  }
  return {worst <= kSandwichTol, fmt("max ||U+ e^{-iH't} U - e^{-iHt}||_2 = %.1e", worst)};
}

Verdict criterion11() {
  const std::vector<std::pair<const char*, const char*>> pairs = {
      {"ZI", "IZ"}, {"XX", "YY"}, {"XZ", "ZX"}, {"XYZ", "ZYX"}, {"XII", "IYZ"}};
  bool ok = true;
  std::string rows;
  std::uint64_t seed = 1111;
  for (const auto& [a, b] : pairs) {
    const auto s = covariance_zero_check(P(a), P(b), 10000, seed++);
    ok = ok && std::abs(s.mean) <= kCovarianceSigmas * s.standard_error;
    rows += std::string(" ") + a + "/" + b + fmt(":%.2f", std::abs(s.mean) / s.standard_error);
  }
  return {ok, "|mean|/stderr" + rows};
}

Verdict criterion12() {
  std::mt19937_64 rng(1212);
  const Hamiltonian h = oracle::random_hamiltonian(3, 10, rng);
  const StateVector psi = haar_state(3, rng);
  double sq = 0.0, predicted = 0.0;
  const int reps = 100;
  for (int r = 0; r < reps; ++r) {
    const ShotEstimate e = shot_simulator(h, psi, AllocationRule::Weighted, 5000, 120000 + r);
    sq += (e.estimate - e.exact) * (e.estimate - e.exact);
    predicted = e.predicted_variance;
  }
  const double empirical = sq / reps;
  const double ratio = empirical / predicted;
  return {ratio <= kShotModelFactor && ratio >= 1.0 / kShotModelFactor,
          fmt("empirical MSE=%.3e predicted=%.3e ratio=%.3f", empirical, predicted, ratio)};
}

struct CliRun {
  int code;
  std::string out;
};

CliRun cli_run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str()};
}

std::string strip_timings(const std::string& doc) {
  auto j = nlohmann::json::parse(doc);
  j.erase("timings");
  return j.dump();
}

Verdict criterion13(const std::filesystem::path& dir) {
  const std::string three_term = (dir / "three_term.txt").string();
  const std::string eng = (dir / "eng13.txt").string();
  const std::vector<std::vector<std::string>> commands = {
      {"engineer", "--ham", "ising-neighbor:4", "--depth", "2", "--restarts", "10", "--seed", "42",
       "--engineered-out", eng},
      {"engineer", "--input", three_term, "--cost", "q", "--restarts", "4", "--seed", "3", "--threads",
       "4", "--engineered-out", eng},
      {"group", "--input", three_term, "--strategy", "sorted"},
      {"group", "--ham", "ising-all:4", "--strategy", "qwc"},
      {"qdrift", "--ham", "ising-neighbor:3", "--time", "0.5", "--gates", "100", "--trials", "200",
       "--seed", "7"},
      {"estimate-q", "--input", three_term, "--shots", "5000", "--seed", "11"},
  };
  int identical = 0;
  for (const auto& args : commands) {
    const CliRun a = cli_run(args);
    const CliRun b = cli_run(args);
    if (a.code == 0 && b.code == 0 && strip_timings(a.out) == strip_timings(b.out)) ++identical;
  }
  const std::vector<std::string> compare = {"compare", "--sizes", "2..4", "--restarts", "3", "--seed", "9"};
  const CliRun c1 = cli_run(compare);
  const CliRun c2 = cli_run(compare);
  const bool csv_same = c1.code == 0 && c1.out == c2.out;
  const int total = static_cast<int>(commands.size()) + 1;
  const int matched = identical + (csv_same ? 1 : 0);
  return {matched == total, fmt("%g/%g commands byte-identical on repeat", matched, total)};
}

Verdict criterion14(const std::filesystem::path& dir) {
  std::mt19937_64 rng(1414);
  std::vector<std::string> files = {(dir / "three_term.txt").string()};
  for (std::size_t n : {3u, 4u}) {
    const std::string path = (dir / ("random" + std::to_string(n) + ".txt")).string();
    write_pauli_sum_file(path, oracle::random_hamiltonian(n, 4 * n, rng));
    files.push_back(path);
  }
  bool ok = true;
  std::string rows;
  for (const auto& file : files) {
    const std::string eng = file + ".engineered";
    const CliRun e = cli_run({"engineer", "--input", file, "--restarts", "4", "--seed", "14",
                              "--engineered-out", eng});
    const CliRun g0 = cli_run({"group", "--input", file});
    const CliRun g1 = cli_run({"group", "--input", eng});
    if (e.code != 0 || g0.code != 0 || g1.code != 0) {
      ok = false;
      rows += " " + std::filesystem::path(file).filename().string() + ":cli-failure";
      continue;
    }
    const auto er = nlohmann::json::parse(e.out).at("results");
    const double hp = er.at("original_norm").get<double>();
    const double hp_eng = er.at("engineered_norm").get<double>();
    const double gp = nlohmann::json::parse(g0.out).at("results").at("grouped_norm").get<double>();
    const double gp_eng = nlohmann::json::parse(g1.out).at("results").at("grouped_norm").get<double>();
    const double file_norm = pauli_norm(read_pauli_sum_file(eng));
    ok = ok && gp_eng <= hp_eng + 1e-12 && hp_eng <= hp && gp_eng <= hp &&
         std::abs(file_norm - hp_eng) <= 1e-9 * hp;
    rows += " " + std::filesystem::path(file).filename().string() +
            fmt(":Hp=%.4f H'p=%.4f Hgp=%.4f H'gp=%.4f", hp, hp_eng, gp, gp_eng);
  }
  return {ok, rows.substr(1)};
}

}  // namespace

int main() {
  const auto dir = std::filesystem::temp_directory_path() / "vqhe_acceptance";
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "three_term.txt") << "3.0 XI\n-1.0 YY\n2.0 ZZ\n";

  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria = {
      {"1 grouped norm golden", criterion1},
      {"2 vectorization golden", criterion2},
      {"3 encoded unitary equivalence", criterion3},
      {"4 conjugation correctness", criterion4},
      {"5 composition, linearity, tensor factor", criterion5},
      {"6 cost/estimator agreement", criterion6},
      {"7 gradient check", criterion7},
      {"8 optimization effectiveness", criterion8},
      {"9 qDrift scaling", criterion9},
      {"10 sandwich identity", criterion10},
      {"11 commuting covariance", criterion11},
      {"12 shot model", criterion12},
      {"13 reproducibility", [&] { return criterion13(dir); }},
      {"14 pipeline norm ordering", [&] { return criterion14(dir); }},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Verdict v;
    try {
      v = check();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    if (!v.pass) ++failures;
    std::cout << (v.pass ? "PASS" : "FAIL") << "  criterion " << name << "  " << v.detail << std::endl;
  }
  std::filesystem::remove_all(dir);
  std::cout << (failures == 0 ? "ALL CRITERIA PASS" : std::to_string(failures) + " CRITERIA FAILED")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
