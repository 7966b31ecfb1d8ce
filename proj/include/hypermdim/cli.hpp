// Copyright 2026 The hypermdim Authors
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

#include <string>
#include <string_view>
#include <vector>

#include "hypermdim/error.hpp"
#include "hypermdim/serialize.hpp"

namespace hypermdim::cli {

inline constexpr int kSchemaVersion = 1;

const std::vector<std::string>& subcommands();

// Frozen defaults for a subcommand. Every field a run reads appears here.
json default_config(std::string_view subcommand);

// Defaults overlaid with the user document. Objects merge key by key, except
// "system", which the user value replaces wholesale.
json resolve_config(std::string_view subcommand, const json& user);

// One message per violated field, prefixed by its JSON pointer.
std::vector<std::string> validate(std::string_view subcommand, const json& resolved);

class ConfigError : public Error {
 public:
  explicit ConfigError(std::vector<std::string> violations);
  const std::vector<std::string>& violations() const { return violations_; }

 private:
  std::vector<std::string> violations_;
};

// "a.b.c=value". The value is parsed as JSON when possible, else kept as a string.
void apply_override(json& config, std::string_view assignment);

struct RunOutput {
  json record;      // ResultRecord
  std::string csv;  // empty for subcommands without tabular output
};

// Resolves, validates (throwing ConfigError) and executes one experiment.
RunOutput run(std::string_view subcommand, const json& user_config);

json error_record(std::string_view subcommand, const std::exception& error);

// CSV header for curve-like subcommands, empty otherwise.
std::string csv_header(std::string_view subcommand);

}  // namespace hypermdim::cli
