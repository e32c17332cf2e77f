// Copyright 2026 The lightcone Authors
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

#include <string>

#include "json.hpp"

namespace lightcone {

/// Runs one CLI-equivalent command. `args` uses the long flag names with
/// dashes replaced by underscores (e.g. "n_list", "tree_value").
nlohmann::json run_command(const std::string &command, const nlohmann::json &args);

/// {"tasks": [{"command": "...", ...args}, ...]} -> {"schema_version", "results"}.
nlohmann::json run_config(const nlohmann::json &config);

}  // namespace lightcone
