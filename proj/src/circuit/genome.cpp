// Copyright 2026 The qcsearch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qcs/circuit/genome.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "qcs/circuit/device.hpp"
#include "qcs/common.hpp"

namespace qcs {

std::set<int> CircuitGenome::feature_indices() const {
  std::set<int> out;
  for (const auto& g : gates) {
    if (const auto* f = std::get_if<FeatureIndex>(&g.angle_source())) out.insert(f->index);
  }
  return out;
}

int CircuitGenome::feature_span() const {
  const auto idx = feature_indices();
  return idx.empty() ? 0 : *idx.rbegin() + 1;
}

int CircuitGenome::count_two_qubit() const {
  return static_cast<int>(
      std::count_if(gates.begin(), gates.end(), [](const auto& g) { return g.arity() == 2; }));
}

int CircuitGenome::count_trainable() const {
  return static_cast<int>(
      std::count_if(gates.begin(), gates.end(), [](const auto& g) { return g.is_trainable(); }));
}

namespace {

std::string pair_name(int a, int b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

void check_register(const CircuitGenome& genome, std::vector<std::string>& out) {
  if (genome.n_params < 0) out.push_back("negative n_params");
  std::vector<int> slot_uses(static_cast<std::size_t>(std::max(genome.n_params, 0)), 0);
  for (std::size_t i = 0; i < genome.gates.size(); ++i) {
    const auto& g = genome.gates[i];
    const std::string where = "gate " + std::to_string(i) + " " + std::string(to_string(g.kind()));
    for (int k = 0; k < g.arity(); ++k) {
      if (g.qubit(k) >= genome.n_qubits) {
        out.push_back(where + ": qubit " + std::to_string(g.qubit(k)) + " out of range");
      }
    }
    if (const auto* s = std::get_if<TrainableSlot>(&g.angle_source())) {
      if (s->slot >= genome.n_params) {
        out.push_back(where + ": parameter slot " + std::to_string(s->slot) +
                      " exceeds n_params " + std::to_string(genome.n_params));
      } else {
        ++slot_uses[static_cast<std::size_t>(s->slot)];
      }
    }
  }
  for (std::size_t s = 0; s < slot_uses.size(); ++s) {
    if (slot_uses[s] == 0) out.push_back("parameter slot " + std::to_string(s) + " is unused (gap)");
  }
}

}  // namespace

std::vector<std::string> validate_genome(const CircuitGenome& genome) {
  std::vector<std::string> out;
  check_register(genome, out);
  return out;
}

std::vector<std::string> validate_genome(const CircuitGenome& genome, const DeviceModel& device) {
  std::vector<std::string> out;
  if (genome.n_qubits != device.n_qubits) {
    out.push_back("genome has " + std::to_string(genome.n_qubits) + " qubits, device has " +
                  std::to_string(device.n_qubits));
  }
  check_register(genome, out);
  for (std::size_t i = 0; i < genome.gates.size(); ++i) {
    const auto& g = genome.gates[i];
    if (g.arity() == 2 && !device.has_edge(g.qubit(0), g.qubit(1))) {
      out.push_back("gate " + std::to_string(i) + " " + std::string(to_string(g.kind())) +
                    " on non-edge " + pair_name(g.qubit(0), g.qubit(1)));
    }
  }
  return out;
}

namespace {

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

template <typename T>
T parse_number(std::string_view token, std::size_t line, const char* field) {
  T value{};
  const auto* end = token.data() + token.size();
  const auto res = std::from_chars(token.data(), end, value);
  if (res.ec != std::errc{} || res.ptr != end) {
    throw ParseError("expected a number, got '" + std::string(token) + "'", line, field);
  }
  return value;
}

int parse_qubit(std::string_view token, std::size_t line) {
  if (token.size() < 2 || token[0] != 'q') {
    throw ParseError("expected qubit like q3, got '" + std::string(token) + "'", line, "qubit");
  }
  const int q = parse_number<int>(token.substr(1), line, "qubit");
  if (q < 0) throw ParseError("negative qubit index", line, "qubit");
  return q;
}

}  // namespace

std::string save_genome(const CircuitGenome& genome, const std::vector<std::string>& comments) {
  std::ostringstream os;
  os << "qcs-genome " << kGenomeFormatVersion << "\n";
  os << "n_qubits " << genome.n_qubits << "\n";
  os << "n_params " << genome.n_params << "\n";
  for (const auto& c : comments) os << "# " << c << "\n";
  for (const auto& g : genome.gates) {
    os << to_string(g.kind());
    for (int k = 0; k < g.arity(); ++k) os << " q" << g.qubit(k);
    std::visit(
        [&](const auto& src) {
          using T = std::decay_t<decltype(src)>;
          if constexpr (std::is_same_v<T, FixedAngle>) {
            os << " fixed " << format_double(src.radians);
          } else if constexpr (std::is_same_v<T, TrainableSlot>) {
            os << " param " << src.slot;
          } else if constexpr (std::is_same_v<T, FeatureIndex>) {
            os << " feat " << src.index;
          }
        },
        g.angle_source());
    os << "\n";
  }
  os << "end\n";
  return os.str();
}

CircuitGenome load_genome(std::string_view text) {
  CircuitGenome genome;
  std::size_t line_no = 0;
  int header_fields = 0;
  bool ended = false;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    const std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    const auto tok = split_ws(line);
    if (tok.empty() || tok[0].front() == '#') continue;
    if (ended) throw ParseError("content after 'end'", line_no);

    if (header_fields == 0) {
      if (tok.size() != 2 || tok[0] != "qcs-genome") {
        throw ParseError("missing 'qcs-genome <version>' header", line_no, "header");
      }
      const int version = parse_number<int>(tok[1], line_no, "version");
      if (version != kGenomeFormatVersion) {
        throw ParseError("unsupported genome format version " + std::to_string(version), line_no,
                         "version");
      }
      ++header_fields;
      continue;
    }
    if (header_fields == 1 || header_fields == 2) {
      const char* key = header_fields == 1 ? "n_qubits" : "n_params";
      if (tok.size() != 2 || tok[0] != key) {
        throw ParseError(std::string("expected '") + key + " <count>'", line_no, key);
      }
      const int v = parse_number<int>(tok[1], line_no, key);
      if (v < 0) throw ParseError("negative count", line_no, key);
      (header_fields == 1 ? genome.n_qubits : genome.n_params) = v;
      ++header_fields;
      continue;
    }
    if (tok.size() == 1 && tok[0] == "end") {
      ended = true;
      continue;
    }

    const auto kind = gate_kind_from_string(tok[0]);
    if (!kind) throw ParseError("unknown gate kind '" + std::string(tok[0]) + "'", line_no, "kind");
    try {
      if (is_two_qubit(*kind)) {
        if (tok.size() != 3) throw ParseError("two-qubit gate takes two qubits", line_no);
        genome.gates.push_back(
            GateSpec::two_qubit(*kind, parse_qubit(tok[1], line_no), parse_qubit(tok[2], line_no)));
      } else if (is_rotation(*kind)) {
        if (tok.size() != 4) {
          throw ParseError("rotation takes a qubit, a source and a value", line_no);
        }
        const int q = parse_qubit(tok[1], line_no);
        AngleSource src;
        if (tok[2] == "param") {
          src = TrainableSlot{parse_number<int>(tok[3], line_no, "param")};
        } else if (tok[2] == "feat") {
          src = FeatureIndex{parse_number<int>(tok[3], line_no, "feat")};
        } else if (tok[2] == "fixed") {
          src = FixedAngle{parse_number<double>(tok[3], line_no, "fixed")};
        } else {
          throw ParseError("unknown angle source '" + std::string(tok[2]) + "'", line_no, "source");
        }
        genome.gates.push_back(GateSpec::rotation(*kind, q, src));
      } else {
        if (tok.size() != 2) throw ParseError("single-qubit gate takes one qubit", line_no);
        genome.gates.push_back(GateSpec::single(*kind, parse_qubit(tok[1], line_no)));
      }
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), line_no);
    }
  }
  if (header_fields < 3) throw ParseError("truncated record: incomplete header", line_no);
  if (!ended) throw ParseError("truncated record: missing 'end'", line_no);
  const auto problems = validate_genome(genome);
  if (!problems.empty()) throw ParseError("invalid genome: " + problems.front());
  return genome;
}

}  // namespace qcs
