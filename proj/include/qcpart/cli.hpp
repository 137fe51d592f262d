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

#include <ostream>
#include <string>
#include <vector>

namespace qcpart {

// Entry point shared by the qcpart binary and the tests. `args` excludes the
// program name. Returns 0 on success, 1 for usage errors, 2 for input errors
// (unreadable or malformed files, invalid circuits). The QCPART_SEED
// environment variable overrides the default seed of any subcommand that
// takes one; an explicit --seed wins over the environment.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace qcpart
