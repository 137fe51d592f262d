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

#pragma once

#include <stdexcept>
#include <string>

namespace qcpart {

/// Input-document error. Carries a 1-based line number for line-oriented
/// formats or a JSON pointer for JSON documents (whichever applies).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line)
      : std::runtime_error(message + " (line " + std::to_string(line) + ")"),
        line_(line) {}

  ParseError(const std::string& message, std::string json_path)
      : std::runtime_error(json_path.empty() ? message
                                             : message + " (at " + json_path + ")"),
        json_path_(std::move(json_path)) {}

  int line() const { return line_; }
  const std::string& json_path() const { return json_path_; }

 private:
  int line_ = 0;  // 0 when not line-oriented
  std::string json_path_;
};

/// A syntactically valid gate token that this toolkit does not model
/// (anything touching more than 3 distinct qubits).
class UnsupportedGateError : public ParseError {
 public:
  using ParseError::ParseError;
};

}  // namespace qcpart
