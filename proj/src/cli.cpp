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

#include "vqhe/cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <fstream>
#include <functional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "vqhe/adjoint.hpp"
#include "vqhe/dynamics.hpp"
#include "vqhe/errors.hpp"
#include "vqhe/grouping.hpp"
#include "vqhe/model_io.hpp"
#include "vqhe/optimizer.hpp"
#include "vqhe/q_estimator.hpp"

namespace vqhe::cli {

namespace {

using Json = nlohmann::json;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::size_t parse_count(std::string_view text, const std::string& what) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw UsageError("bad " + what + " '" + std::string(text) + "'");
  }
  return v;
}

struct InputOptions {
  std::string ham;
  std::string input;
};

void add_input_options(CLI::App* sub, InputOptions& in) {
  auto* ham = sub->add_option("--ham", in.ham, "Built-in model: ising-neighbor:N or ising-all:N");
  auto* file = sub->add_option("--input", in.input, "Pauli-sum text file");
  ham->excludes(file);
}

Hamiltonian load_hamiltonian(const InputOptions& in) {
  if (!in.ham.empty()) return build_hamiltonian(in.ham);
  if (!in.input.empty()) return read_pauli_sum_file(in.input);
  throw UsageError("one of --ham or --input is required");
}

struct EngineerOptions {
  std::size_t depth = 2;
  std::size_t restarts = 10;
  std::size_t iterations = 300;
  std::string cost = "l1";
  std::string rotations = "rx,rz";
  std::string entangler = "linear";
  std::size_t threads = 1;
};

void add_engineer_options(CLI::App* sub, EngineerOptions& o) {
  sub->add_option("--depth", o.depth, "Ansatz layers")->capture_default_str();
  sub->add_option("--restarts", o.restarts, "Random restarts")->capture_default_str();
  sub->add_option("--iterations", o.iterations, "Adam iterations per restart")
      ->capture_default_str();
  sub->add_option("--cost", o.cost, "Cost function")
      ->check(CLI::IsMember({"l1", "q"}))
      ->capture_default_str();
  sub->add_option("--rotations", o.rotations, "Comma-separated rotation kinds per layer")
      ->capture_default_str();
  sub->add_option("--entangler", o.entangler, "CZ pattern")
      ->check(CLI::IsMember({"linear", "all"}))
      ->capture_default_str();
  sub->add_option("--threads", o.threads, "Worker threads for restarts")
      ->capture_default_str();
}

AnsatzLayout make_layout(std::size_t n, const EngineerOptions& o) {
  std::vector<GateKind> kinds;
  std::stringstream ss(o.rotations);
  for (std::string item; std::getline(ss, item, ',');) {
    std::transform(item.begin(), item.end(), item.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    const GateKind k = gate_kind_from_string(item);
    if (k == GateKind::CZ) throw UsageError("--rotations takes rx, ry, rz");
    kinds.push_back(k);
  }
  if (kinds.empty()) throw UsageError("--rotations is empty");
  return AnsatzLayout::hardware_efficient(
      n, o.depth, kinds, o.entangler == "all" ? Entangler::AllToAll : Entangler::Linear);
}

EngineeredResult engineer(const Hamiltonian& h, const EngineerOptions& o,
                          std::uint64_t seed) {
  OptimizerConfig config;
  config.cost = cost_kind_from_string(o.cost);
  config.restarts = o.restarts;
  config.max_iterations = o.iterations;
  config.seed = seed;
  config.threads = o.threads;
  return optimize(h, make_layout(h.num_qubits(), o), config);
}

GroupingResult group_by(const Hamiltonian& h, const std::string& strategy) {
  GroupingResult g = sorted_insertion(
      h, strategy == "qwc" ? Commutation::QubitWise : Commutation::General);
  g.strategy = strategy;
  return g;
}

Json hamiltonian_summary(const Hamiltonian& h) {
  return {{"num_qubits", h.num_qubits()},
          {"terms", h.size()},
          {"pauli_norm", pauli_norm(h)},
          {"lambda", l2_norm(h)}};
}

std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> sizes;
  if (const auto dots = text.find(".."); dots != std::string::npos) {
    const std::size_t lo = parse_count(std::string_view(text).substr(0, dots), "size range");
    const std::size_t hi = parse_count(std::string_view(text).substr(dots + 2), "size range");
    if (lo > hi) throw UsageError("empty size range " + text);
    for (std::size_t n = lo; n <= hi; ++n) sizes.push_back(n);
  } else {
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) {
      sizes.push_back(parse_count(item, "size"));
    }
  }
  if (sizes.empty()) throw UsageError("no sizes given");
  return sizes;
}

std::string csv_number(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

Hamiltonian build_hamiltonian(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) {
    throw UsageError("model spec must look like family:N, got '" + spec + "'");
  }
  const std::string family = spec.substr(0, colon);
  const std::size_t n = parse_count(std::string_view(spec).substr(colon + 1), "model size");
  if (family == "ising-neighbor") return ising_neighbor(n);
  if (family == "ising-all" || family == "ising-all-to-all") return ising_all_to_all(n);
  throw UsageError("unknown model family '" + family + "'");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Variational Hamiltonian engineering toolkit"};
  app.require_subcommand(1);
  std::uint64_t seed = 0;
  std::string output;
  app.add_option("--seed", seed, "Seed for every stochastic step")->capture_default_str();
  app.add_option("--output", output, "Write the document here instead of stdout");

  InputOptions input;
  EngineerOptions eng;
  std::string engineered_out = "engineered.txt";
  std::string strategy = "sorted";
  double time = 1.0;
  std::vector<std::size_t> gates{10, 40, 160, 640};
  std::size_t trials = 200;
  double epsilon = 0.01;
  std::size_t shots = 0;
  std::string state_file;
  std::string family = "ising-neighbor";
  std::string sizes = "2..6";
  std::vector<std::string> compare_inputs;

  // --seed is accepted before or after the subcommand
  const auto add_seed = [&](CLI::App* sub) {
    sub->add_option("--seed", seed, "Seed for every stochastic step");
    sub->add_option("--output", output, "Write the document here instead of stdout");
  };

  auto* cmd_engineer = app.add_subcommand("engineer", "Minimize the Pauli norm of a Hamiltonian");
  add_input_options(cmd_engineer, input);
  add_engineer_options(cmd_engineer, eng);
  add_seed(cmd_engineer);
  cmd_engineer->add_option("--engineered-out", engineered_out,
                           "Pauli-sum file for the engineered Hamiltonian")
      ->capture_default_str();

  auto* cmd_group = app.add_subcommand("group", "Sorted-insertion measurement grouping");
  add_input_options(cmd_group, input);
  add_seed(cmd_group);
  cmd_group->add_option("--strategy", strategy, "sorted | gc-sorted | qwc")
      ->check(CLI::IsMember({"sorted", "gc-sorted", "qwc"}))
      ->capture_default_str();

  auto* cmd_qdrift = app.add_subcommand("qdrift", "qDrift error sweep against exact evolution");
  add_input_options(cmd_qdrift, input);
  add_seed(cmd_qdrift);
  cmd_qdrift->add_option("--time", time, "Evolution time")->capture_default_str();
  cmd_qdrift->add_option("--gates", gates, "Gate counts G")->delimiter(',')->capture_default_str();
  cmd_qdrift->add_option("--trials", trials, "Random plans per G")->capture_default_str();
  cmd_qdrift->add_option("--epsilon", epsilon, "Precision for the gate-count model")
      ->capture_default_str();

  auto* cmd_q = app.add_subcommand("estimate-q", "Estimate Q of a vectorized Hamiltonian or state");
  add_input_options(cmd_q, input);
  add_seed(cmd_q);
  cmd_q->add_option("--state", state_file, "Raw amplitude file instead of a Hamiltonian");
  cmd_q->add_option("--shots", shots, "0 for the analytic value")->capture_default_str();

  auto* cmd_compare = app.add_subcommand("compare", "Norm and cost sweep as CSV");
  add_engineer_options(cmd_compare, eng);
  add_seed(cmd_compare);
  cmd_compare->add_option("--family", family, "ising-neighbor | ising-all")
      ->check(CLI::IsMember({"ising-neighbor", "ising-all"}))
      ->capture_default_str();
  cmd_compare->add_option("--sizes", sizes, "lo..hi or a comma list")->capture_default_str();
  cmd_compare->add_option("--input", compare_inputs, "Pauli-sum files instead of a family");
  cmd_compare->add_option("--time", time, "Evolution time for the gate model")
      ->capture_default_str();
  cmd_compare->add_option("--epsilon", epsilon, "Precision for the gate model")
      ->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  const auto start = std::chrono::steady_clock::now();
  std::string document;
  try {
    Json results;
    std::string command;
    std::string digest;
    bool csv = false;
    if (cmd_engineer->parsed()) {
      command = "engineer";
      const Hamiltonian h = load_hamiltonian(input);
      digest = input_digest(h);
      const EngineeredResult r = engineer(h, eng, seed);
      write_pauli_sum_file(engineered_out, r.engineered);
      results = to_json(r);
      results["engineered_file"] = engineered_out;
      err << "original norm " << r.original_norm << ", engineered norm "
          << r.engineered_norm << "\n";
    } else if (cmd_group->parsed()) {
      command = "group";
      const Hamiltonian h = load_hamiltonian(input);
      digest = input_digest(h);
      results = to_json(group_by(h, strategy));
      results["hamiltonian"] = hamiltonian_summary(h);
    } else if (cmd_qdrift->parsed()) {
      command = "qdrift";
      const Hamiltonian h = load_hamiltonian(input);
      digest = input_digest(h);
      if (gates.empty()) throw UsageError("--gates is empty");
      Json rows = Json::array();
      std::vector<double> g, state_err, channel_err;
      for (std::size_t count : gates) {
        const QDriftError e = qdrift_error(h, time, count, trials, seed);
        Json row = to_json(e);
        row["tau"] = time * pauli_norm(h) / static_cast<double>(count);
        rows.push_back(std::move(row));
        g.push_back(static_cast<double>(count));
        state_err.push_back(e.state_error);
        channel_err.push_back(e.channel_error);
      }
      results = {{"hamiltonian", hamiltonian_summary(h)},
                 {"time", time},
                 {"gamma", pauli_norm(h)},
                 {"model_gate_count", qdrift_cost_model(pauli_norm(h), pauli_norm(h), time,
                                                        epsilon, 0)
                                          .gates_original},
                 {"epsilon", epsilon},
                 {"rows", std::move(rows)}};
      const auto positive = [](const std::vector<double>& v) {
        return std::all_of(v.begin(), v.end(), [](double x) { return x > 0.0; });
      };
      if (g.size() >= 2 && positive(channel_err) && positive(state_err)) {
        results["channel_slope"] = loglog_slope(g, channel_err);
        results["state_slope"] = loglog_slope(g, state_err);
      }
    } else if (cmd_q->parsed()) {
      command = "estimate-q";
      StateVector psi;
      if (!state_file.empty()) {
        if (!input.ham.empty() || !input.input.empty()) {
          throw UsageError("--state cannot be combined with --ham or --input");
        }
        psi = read_state_file(state_file);
        digest = input_digest(psi);
      } else {
        const Hamiltonian h = load_hamiltonian(input);
        digest = input_digest(h);
        psi = hamiltonian_state(h);
        results["cost_q"] = cost_q(vectorize(h));
      }
      const QEstimate q = shots == 0 ? q_analytic(psi) : q_full_circuit(psi, shots, seed);
      results.update(to_json(q));
      results["mode"] = shots == 0 ? "analytic" : "circuit";
    } else if (cmd_compare->parsed()) {
      command = "compare";
      csv = true;
      std::vector<std::pair<std::string, Hamiltonian>> cases;
      if (!compare_inputs.empty()) {
        for (const auto& path : compare_inputs) cases.emplace_back(path, read_pauli_sum_file(path));
      } else {
        for (std::size_t n : parse_sizes(sizes)) {
          cases.emplace_back(std::to_string(n), build_hamiltonian(family + ":" + std::to_string(n)));
        }
      }
      document =
          "size,num_qubits,pauli_norm,engineered_pauli_norm,grouped_norm,"
          "engineered_grouped_norm,gates_original,gates_engineered,ansatz_gate_count\n";
      for (const auto& [label, h] : cases) {
        const EngineeredResult r = engineer(h, eng, seed);
        const double gp = sorted_insertion(h).grouped_norm;
        const double gp_eng = sorted_insertion(r.engineered).grouped_norm;
        const QDriftCostModel model = qdrift_cost_model(
            r.original_norm, r.engineered_norm, time, epsilon, r.layout.gates().size());
        document += label + "," + std::to_string(h.num_qubits()) + "," +
                    csv_number(r.original_norm) + "," + csv_number(r.engineered_norm) + "," +
                    csv_number(gp) + "," + csv_number(gp_eng) + "," +
                    csv_number(model.gates_original) + "," +
                    csv_number(model.gates_engineered) + "," +
                    std::to_string(model.ansatz_gate_count) + "\n";
      }
    }
    if (!csv) {
      const double seconds =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      const Json doc = {{"command", command},
                        {"input_digest", digest},
                        {"seed", seed},
                        {"results", std::move(results)},
                        {"timings", {{"total_seconds", seconds}}}};
      document = doc.dump(2) + "\n";
    }
  } catch (const FileError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }

  if (output.empty()) {
    out << document;
    out.flush();
    return out ? kExitOk : kExitFailure;
  }
  std::ofstream file(output, std::ios::binary | std::ios::trunc);
  file << document;
  if (!file) {
    err << "error: cannot write file: " << output << "\n";
    return kExitInput;
  }
  return kExitOk;
}

}  // namespace vqhe::cli
