// Copyright 2026 The qcpart developers
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

#include "qcpart/circuit_json.hpp"

#include <string>
#include <vector>

#include <json.hpp>

#include "qcpart/errors.hpp"

namespace qcpart {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& message, const std::string& path) {
  throw ParseError(message, path);
}

int require_int(const json& node, const char* key, const std::string& path) {
  if (!node.contains(key)) fail(std::string("missing \"") + key + "\"", path);
  const json& value = node.at(key);
  if (!value.is_number_integer()) {
    fail(std::string("\"") + key + "\" must be an integer", path + "/" + key);
  }
  return value.get<int>();
}

Gate parse_gate(const json& node, const std::string& path) {
  if (!node.is_object()) fail("gate must be an object", path);
  if (!node.contains("kind") || !node.at("kind").is_string()) {
    fail("gate needs a string \"kind\"", path);
  }
  const std::string kind_str = node.at("kind").get<std::string>();
  const auto kind = kind_from_name(kind_str);
  if (!kind) fail("unknown gate kind '" + kind_str + "'", path + "/kind");

  if (!node.contains("operands") || !node.at("operands").is_array()) {
    fail("gate needs an \"operands\" array", path);
  }
  std::vector<int> operands;
  for (size_t i = 0; i < node.at("operands").size(); ++i) {
    const json& q = node.at("operands")[i];
    if (!q.is_number_integer()) {
      fail("operand must be an integer", path + "/operands/" + std::to_string(i));
    }
    operands.push_back(q.get<int>());
  }

  std::optional<double> angle;
  if (node.contains("angle")) {
    if (!node.at("angle").is_number()) {
      fail("\"angle\" must be a number", path + "/angle");
    }
    angle = node.at("angle").get<double>();
  }

  for (const auto& [key, value] : node.items()) {
    (void)value;
    if (key != "kind" && key != "operands" && key != "angle") {
      fail("unexpected key \"" + key + "\"", path + "/" + key);
    }
  }
  return Gate{*kind, std::move(operands), angle};
}

}  // namespace

Circuit parse_json(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) fail("invalid JSON", "");
  if (!doc.is_object()) fail("circuit must be a JSON object", "");

  const int num_qubits = require_int(doc, "qubits", "");
  std::string name;
  if (doc.contains("name")) {
    if (!doc.at("name").is_string()) fail("\"name\" must be a string", "/name");
    name = doc.at("name").get<std::string>();
  }
  if (!doc.contains("gates") || !doc.at("gates").is_array()) {
    fail("circuit needs a \"gates\" array", "");
  }

  std::vector<Gate> gates;
  gates.reserve(doc.at("gates").size());
  for (size_t i = 0; i < doc.at("gates").size(); ++i) {
    const std::string path = "/gates/" + std::to_string(i);
    Gate gate = parse_gate(doc.at("gates")[i], path);
    try {
      validate_gate(gate, num_qubits);
    } catch (const std::invalid_argument& e) {
      fail(e.what(), path);
    }
    gates.push_back(std::move(gate));
  }
  try {
    return Circuit(num_qubits, std::move(gates), std::move(name));
  } catch (const std::invalid_argument& e) {
    fail(e.what(), "/qubits");
  }
}

std::string write_json(const Circuit& circuit) {
  json gates = json::array();
  for (const Gate& gate : circuit.gates()) {
    json node{{"kind", std::string(kind_name(gate.kind))},
              {"operands", gate.operands}};
    if (gate.angle) node["angle"] = *gate.angle;
    gates.push_back(std::move(node));
  }
  json doc{{"qubits", circuit.num_qubits()}, {"gates", std::move(gates)}};
  if (!circuit.name().empty()) doc["name"] = circuit.name();
  return doc.dump(2) + "\n";
}

}  // namespace qcpart
