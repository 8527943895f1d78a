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

#include "vqhe/model_io.hpp"

#include <bit>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "vqhe/errors.hpp"

namespace vqhe {

namespace {

PauliString zz(std::size_t n, std::size_t i, std::size_t j) {
  return PauliString(n).with(i, Pauli::Z).with(j, Pauli::Z);
}

void require_ising_size(std::size_t n) {
  if (n < 2) throw DegenerateInputError("Ising models need n >= 2");
  if (n > PauliString::kMaxQubits) throw CapacityError("Ising model too wide");
}

std::vector<Hamiltonian::Term> transverse_field(std::size_t n) {
  std::vector<Hamiltonian::Term> terms;
  for (std::size_t k = 0; k < n; ++k) terms.emplace_back(PauliString(n).with(k, Pauli::X), 1.0);
  return terms;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError(path, "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw FileError(path, "cannot read file");
  return buf.str();
}

// Splits into lines with comments stripped; calls f(line_number, fields).
template <typename F>
void for_each_record(std::string_view text, F&& f) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    std::vector<std::string_view> fields;
    std::size_t pos = 0;
    while (pos < line.size()) {
      const auto start = line.find_first_not_of(" \t\r", pos);
      if (start == std::string_view::npos) break;
      const auto end = std::min(line.find_first_of(" \t\r", start), line.size());
      fields.push_back(line.substr(start, end - start));
      pos = end;
    }
    if (!fields.empty()) f(line_no, fields);
  }
}

double parse_number(std::string_view field, std::size_t line_no) {
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw ParseError(line_no, "bad number '" + std::string(field) + "'");
  }
  if (!std::isfinite(value)) throw ParseError(line_no, "number is not finite");
  return value;
}

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

std::string fnv1a(std::string_view bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

nlohmann::json terms_json(const Hamiltonian& h) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [p, c] : h.terms()) {
    terms.push_back({{"label", p.label()}, {"coefficient", c}});
  }
  return terms;
}

}  // namespace

Hamiltonian ising_neighbor(std::size_t n) {
  require_ising_size(n);
  auto terms = transverse_field(n);
  for (std::size_t i = 0; i + 1 < n; ++i) terms.emplace_back(zz(n, i, i + 1), -1.0);
  return Hamiltonian(n, terms);
}

Hamiltonian ising_all_to_all(std::size_t n) {
  require_ising_size(n);
  auto terms = transverse_field(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) terms.emplace_back(zz(n, i, j), -1.0);
  }
  return Hamiltonian(n, terms);
}

Hamiltonian parse_pauli_sum(std::string_view text) {
  std::vector<Hamiltonian::Term> terms;
  std::size_t width = 0;
  for_each_record(text, [&](std::size_t line_no, const std::vector<std::string_view>& f) {
    if (f.size() != 2) {
      throw ParseError(line_no, "expected '<coefficient> <label>'");
    }
    const double c = parse_number(f[0], line_no);
    PauliString p(1);
    try {
      p = PauliString::from_label(f[1]);
    } catch (const ParseError& e) {
      throw ParseError(line_no, e.what());
    } catch (const std::exception& e) {
      throw ParseError(line_no, e.what());
    }
    if (width == 0) width = p.num_qubits();
    if (p.num_qubits() != width) {
      throw ParseError(line_no, "label length " + std::to_string(p.num_qubits()) +
                                    " differs from " + std::to_string(width));
    }
    terms.emplace_back(p, c);
  });
  if (terms.empty()) throw ParseError(0, "no terms found");
  return Hamiltonian(width, terms);
}

Hamiltonian read_pauli_sum_file(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return parse_pauli_sum(text);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), path + ": " + e.what());
  }
}

std::string serialize_pauli_sum(const Hamiltonian& h) {
  std::string out;
  for (const auto& [p, c] : h.terms()) {
    out += format_double(c);
    out += ' ';
    out += p.label();
    out += '\n';
  }
  return out;
}

void write_pauli_sum_file(const std::string& path, const Hamiltonian& h) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw FileError(path, "cannot write file");
  out << serialize_pauli_sum(h);
  if (!out) throw FileError(path, "cannot write file");
}

StateVector parse_state(std::string_view text) {
  std::vector<Complex> amps;
  for_each_record(text, [&](std::size_t line_no, const std::vector<std::string_view>& f) {
    if (f.size() > 2) throw ParseError(line_no, "expected '<re>' or '<re> <im>'");
    const double re = parse_number(f[0], line_no);
    const double im = f.size() == 2 ? parse_number(f[1], line_no) : 0.0;
    amps.emplace_back(re, im);
  });
  if (amps.size() < 2 || !std::has_single_bit(amps.size())) {
    throw ParseError(0, "state length " + std::to_string(amps.size()) +
                            " is not a power of two >= 2");
  }
  return Eigen::Map<const StateVector>(amps.data(), static_cast<Eigen::Index>(amps.size()));
}

StateVector read_state_file(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return parse_state(text);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), path + ": " + e.what());
  }
}

std::string input_digest(const Hamiltonian& h) {
  return fnv1a(std::to_string(h.num_qubits()) + "\n" + serialize_pauli_sum(h));
}

std::string input_digest(const StateVector& psi) {
  std::string text;
  for (Eigen::Index i = 0; i < psi.size(); ++i) {
    text += format_double(psi[i].real()) + ' ' + format_double(psi[i].imag()) + '\n';
  }
  return fnv1a(text);
}

nlohmann::json to_json(const Hamiltonian& h) {
  return {{"num_qubits", h.num_qubits()},
          {"pauli_norm", pauli_norm(h)},
          {"terms", terms_json(h)}};
}

nlohmann::json to_json(const AnsatzLayout& layout) {
  nlohmann::json gates = nlohmann::json::array();
  for (const auto& g : layout.gates()) {
    nlohmann::json j = {{"kind", to_string(g.kind)}};
    if (g.is_rotation()) {
      j["qubits"] = {g.qubits[0]};
      j["slot"] = *g.slot;
    } else {
      j["qubits"] = {g.qubits[0], g.qubits[1]};
    }
    gates.push_back(std::move(j));
  }
  return {{"num_qubits", layout.num_qubits()},
          {"depth", layout.depth()},
          {"parameter_count", layout.parameter_count()},
          {"gates", std::move(gates)}};
}

nlohmann::json to_json(const EngineeredResult& r) {
  return {{"cost", to_string(r.cost)},
          {"lambda", r.lambda},
          {"original_norm", r.original_norm},
          {"engineered_norm", r.engineered_norm},
          {"identity_fallback", r.identity_fallback},
          {"restart_index", r.restart_index},
          {"iterations", r.cost_trace.size()},
          {"final_cost", r.cost_trace.empty() ? 0.0 : r.cost_trace.back()},
          {"theta_star", r.theta_star},
          {"layout", to_json(r.layout)},
          {"original", to_json(r.original)},
          {"engineered", to_json(r.engineered)}};
}

nlohmann::json to_json(const GroupingResult& g) {
  nlohmann::json cols = nlohmann::json::array();
  for (const auto& col : g.collections) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [c, p] : col.terms) {
      terms.push_back({{"label", p.label()}, {"coefficient", c}});
    }
    cols.push_back({{"index", col.creation_index},
                    {"root_sum_square", col.root_sum_square()},
                    {"terms", std::move(terms)}});
  }
  return {{"strategy", g.strategy},
          {"commutation", to_string(g.commutation)},
          {"collection_count", g.collection_count()},
          {"grouped_norm", g.grouped_norm},
          {"collections", std::move(cols)}};
}

nlohmann::json to_json(const QEstimate& q) {
  return {{"p_plus", q.p_plus},
          {"q_value", q.q_value},
          {"shots", q.shots},
          {"standard_error", q.standard_error}};
}

nlohmann::json to_json(const QDriftError& e) {
  return {{"gate_count", e.gate_count},
          {"trials", e.trials},
          {"state_error", e.state_error},
          {"state_stderr", e.state_stderr},
          {"channel_error", e.channel_error},
          {"channel_stderr", e.channel_stderr}};
}

nlohmann::json to_json(const QDriftCostModel& m) {
  return {{"gates_original", m.gates_original},
          {"gates_engineered", m.gates_engineered},
          {"ansatz_gate_count", m.ansatz_gate_count}};
}

AnsatzLayout layout_from_json(const nlohmann::json& j) {
  try {
    std::vector<Gate> gates;
    for (const auto& g : j.at("gates")) {
      const GateKind kind = gate_kind_from_string(g.at("kind").get<std::string>());
      const auto& q = g.at("qubits");
      if (kind == GateKind::CZ) {
        gates.push_back(Gate::cz(q.at(0).get<std::size_t>(), q.at(1).get<std::size_t>()));
      } else {
        gates.push_back(Gate::rotation(kind, q.at(0).get<std::size_t>(),
                                       g.at("slot").get<std::size_t>()));
      }
    }
    return AnsatzLayout(j.at("num_qubits").get<std::size_t>(),
                        j.at("depth").get<std::size_t>(), std::move(gates));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("bad layout JSON: ") + e.what());
  }
}

ParameterVector parameters_from_json(const nlohmann::json& j) {
  try {
    return j.get<ParameterVector>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("bad parameter JSON: ") + e.what());
  }
}

}  // namespace vqhe
