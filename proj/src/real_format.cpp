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

#include "qcpart/real_format.hpp"

#include <charconv>
#include <sstream>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "qcpart/errors.hpp"

namespace qcpart {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> split(std::string_view s) {
  std::vector<std::string_view> out;
  size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

struct Parser {
  const std::string& name;
  RealHeader header;
  std::vector<Gate> gates;
  std::unordered_map<std::string_view, int> var_index;
  bool saw_numvars = false;
  bool in_body = false;
  bool saw_end = false;

  explicit Parser(const std::string& circuit_name) : name(circuit_name) {}

  [[noreturn]] static void fail(const std::string& message, int line) {
    throw ParseError(message, line);
  }

  int lookup(std::string_view token, int line) const {
    // A leading '-' marks a negative control; the wire is the same.
    if (!token.empty() && token.front() == '-') token.remove_prefix(1);
    auto it = var_index.find(token);
    if (it == var_index.end()) {
      fail("unknown variable '" + std::string(token) + "'", line);
    }
    return it->second;
  }

  void directive(std::string_view line_text, int line) {
    const auto tokens = split(line_text);
    const std::string_view key = tokens[0];
    if (key == ".version") {
      header.version = std::string(trim(line_text.substr(key.size())));
    } else if (key == ".numvars") {
      if (tokens.size() != 2) fail(".numvars expects one integer", line);
      int value = 0;
      const auto* last = tokens[1].data() + tokens[1].size();
      auto [ptr, ec] = std::from_chars(tokens[1].data(), last, value);
      if (ec != std::errc() || ptr != last || value < 1) {
        fail(".numvars expects a positive integer", line);
      }
      header.numvars = value;
      saw_numvars = true;
    } else if (key == ".variables") {
      if (!saw_numvars) fail(".variables must follow .numvars", line);
      if (static_cast<int>(tokens.size()) - 1 != header.numvars) {
        std::ostringstream msg;
        msg << ".variables lists " << tokens.size() - 1 << " names, expected "
            << header.numvars;
        fail(msg.str(), line);
      }
      for (size_t i = 1; i < tokens.size(); ++i) {
        if (!var_index.emplace(tokens[i], static_cast<int>(i) - 1).second) {
          fail("duplicate variable '" + std::string(tokens[i]) + "'", line);
        }
        header.variables.emplace_back(tokens[i]);
      }
    } else if (key == ".begin") {
      if (header.variables.empty()) fail(".begin before .variables", line);
      in_body = true;
    } else if (key == ".end") {
      if (!in_body) fail(".end without .begin", line);
      in_body = false;
      saw_end = true;
    } else {
      header.extras.emplace_back(trim(line_text));
    }
  }

  void gate_line(std::string_view line_text, int line) {
    const auto tokens = split(line_text);
    const std::string_view code = tokens[0];
    std::vector<int> qubits;
    qubits.reserve(tokens.size() - 1);
    for (size_t i = 1; i < tokens.size(); ++i) {
      qubits.push_back(lookup(tokens[i], line));
    }
    const int lines_touched = static_cast<int>(qubits.size());

    Gate gate = Gate::x(0);
    if (code == "v" || code == "v+") {
      if (lines_touched != 2) {
        fail(std::string(code) + " expects 2 lines", line);
      }
      gate = Gate::generic2(qubits[0], qubits[1]);
    } else if (code.size() >= 2 && (code[0] == 't' || code[0] == 'f')) {
      int declared = 0;
      const auto* last = code.data() + code.size();
      auto [ptr, ec] = std::from_chars(code.data() + 1, last, declared);
      if (ec != std::errc() || ptr != last || declared < 1) {
        fail("unknown gate token '" + std::string(code) + "'", line);
      }
      if (declared != lines_touched) {
        std::ostringstream msg;
        msg << code << " expects " << declared << " lines, got " << lines_touched;
        fail(msg.str(), line);
      }
      if (declared > 3) {
        throw UnsupportedGateError(
            "gate '" + std::string(code) +
                "' touches more than 3 qubits; rewrite it over 3-qubit gates "
                "first (--decompose lowers only the built-in families)",
            line);
      }
      if (code[0] == 't') {
        if (declared == 1) {
          gate = Gate::x(qubits[0]);
        } else if (declared == 2) {
          gate = Gate::cnot(qubits[0], qubits[1]);
        } else {
          gate = Gate::toffoli(qubits[0], qubits[1], qubits[2]);
        }
      } else {
        if (declared == 2) {
          gate = Gate::swap(qubits[0], qubits[1]);
        } else if (declared == 3) {
          gate = Gate::fredkin(qubits[0], qubits[1], qubits[2]);
        } else {
          fail("f1 is not a gate", line);
        }
      }
    } else {
      fail("unknown gate token '" + std::string(code) + "'", line);
    }

    try {
      validate_gate(gate, header.numvars);
    } catch (const std::invalid_argument& e) {
      fail(e.what(), line);
    }
    gates.push_back(std::move(gate));
  }

  RealDocument finish(int last_line) {
    if (in_body) fail("missing .end", last_line);
    if (!saw_end) fail("no .begin/.end gate section", last_line);
    Circuit circuit(header.numvars, std::move(gates), name);
    return RealDocument{std::move(header), std::move(circuit)};
  }
};

}  // namespace

RealDocument parse_real_document(const std::string& text, const std::string& name) {
  Parser parser(name);
  int line = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    const size_t eol = text.find('\n', pos);
    const size_t len = (eol == std::string::npos ? text.size() : eol) - pos;
    std::string_view raw(text.data() + pos, len);
    ++line;
    pos += len + 1;

    if (const size_t hash = raw.find('#'); hash != std::string_view::npos) {
      raw = raw.substr(0, hash);
    }
    raw = trim(raw);
    if (raw.empty()) {
      if (eol == std::string::npos) break;
      continue;
    }
    if (parser.saw_end) {
      Parser::fail("content after .end", line);
    }
    if (raw.front() == '.') {
      parser.directive(raw, line);
    } else if (parser.in_body) {
      parser.gate_line(raw, line);
    } else {
      Parser::fail("gate outside .begin/.end section", line);
    }
    if (eol == std::string::npos) break;
  }
  return parser.finish(line);
}

Circuit parse_real(const std::string& text, const std::string& name) {
  return parse_real_document(text, name).circuit;
}

}  // namespace qcpart
