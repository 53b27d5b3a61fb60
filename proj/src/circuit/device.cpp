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

#include "qcs/circuit/device.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qcs/common.hpp"

namespace qcs {

bool DeviceModel::has_edge(int a, int b) const {
  const auto key = std::minmax(a, b);
  return std::find(edges.begin(), edges.end(), std::pair<int, int>{key.first, key.second}) !=
         edges.end();
}

std::vector<std::string> DeviceModel::violations() const {
  std::vector<std::string> out;
  if (n_qubits < 1) out.push_back("n_qubits must be at least 1");
  auto check_prob = [&](const char* name, double p) {
    if (!(p >= 0.0 && p <= 1.0)) out.push_back(std::string(name) + " must lie in [0, 1]");
  };
  check_prob("p1", p1);
  check_prob("p2", p2);
  check_prob("readout_flip", readout_flip);
  if (!is_two_qubit(native_two_qubit)) out.push_back("native_two_qubit must be CX or CZ");
  for (const auto& [a, b] : edges) {
    if (a == b) {
      out.push_back("self-loop on qubit " + std::to_string(a));
    } else if (a < 0 || b < 0 || a >= n_qubits || b >= n_qubits) {
      out.push_back("edge (" + std::to_string(a) + "," + std::to_string(b) +
                    ") references a qubit outside the device");
    }
  }
  return out;
}

void DeviceModel::validate() const {
  const auto v = violations();
  if (v.empty()) return;
  std::string msg = "invalid device:";
  for (const auto& s : v) msg += " " + s + ";";
  throw Error(msg);
}

DeviceModel DeviceModel::scaled_noise(double factor) const {
  DeviceModel d = *this;
  d.p1 = std::min(1.0, p1 * factor);
  d.p2 = std::min(1.0, p2 * factor);
  d.readout_flip = std::min(1.0, readout_flip * factor);
  return d;
}

DeviceModel parse_device_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("device: ") + e.what());
  }
  DeviceModel d;
  try {
    d.n_qubits = j.at("n_qubits").get<int>();
    for (const auto& e : j.at("edges")) {
      const int a = e.at(0).get<int>();
      const int b = e.at(1).get<int>();
      d.edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    const auto native = j.value("native_two_qubit", std::string("CX"));
    const auto kind = gate_kind_from_string(native);
    if (!kind || !is_two_qubit(*kind)) {
      throw ParseError("device: unknown native_two_qubit '" + native + "'", 0, "native_two_qubit");
    }
    d.native_two_qubit = *kind;
    d.p1 = j.value("p1", 0.0);
    d.p2 = j.value("p2", 0.0);
    d.readout_flip = j.value("readout_flip", 0.0);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("device: ") + e.what());
  }
  std::sort(d.edges.begin(), d.edges.end());
  d.edges.erase(std::unique(d.edges.begin(), d.edges.end()), d.edges.end());
  d.validate();
  return d;
}

DeviceModel load_device(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open device file: " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_device_json(ss.str());
}

std::string device_to_json(const DeviceModel& device) {
  nlohmann::json j;
  j["n_qubits"] = device.n_qubits;
  j["edges"] = nlohmann::json::array();
  for (const auto& [a, b] : device.edges) j["edges"].push_back({a, b});
  j["native_two_qubit"] = std::string(to_string(device.native_two_qubit));
  j["p1"] = device.p1;
  j["p2"] = device.p2;
  j["readout_flip"] = device.readout_flip;
  return j.dump(2);
}

DeviceModel line_device(int n_qubits, double p1, double p2, double readout_flip) {
  DeviceModel d;
  d.n_qubits = n_qubits;
  for (int q = 0; q + 1 < n_qubits; ++q) d.edges.emplace_back(q, q + 1);
  d.p1 = p1;
  d.p2 = p2;
  d.readout_flip = readout_flip;
  d.validate();
  return d;
}

}  // namespace qcs
