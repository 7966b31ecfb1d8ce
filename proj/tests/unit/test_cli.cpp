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

#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>

#include "hypermdim/cli.hpp"

namespace cli = hypermdim::cli;
using hypermdim::json;

namespace {

// Replaces every leaf by its type name; arrays keep the skeleton of their first entry.
json skeleton(const json& j) {
  if (j.is_object()) {
    json out = json::object();
    for (auto& [k, v] : j.items()) out[k] = skeleton(v);
    return out;
  }
  if (j.is_array()) return j.empty() ? json::array() : json::array({skeleton(j.front())});
  if (j.is_number()) return "number";
  if (j.is_boolean()) return "boolean";
  if (j.is_null()) return "null";
  return "string";
}

json without_wall_time(json record) {
  record.erase("wall_time_s");
  return record;
}

const cli::RunOutput& default_run(const std::string& sub) {
  static std::map<std::string, cli::RunOutput> cache;
  auto it = cache.find(sub);
  if (it == cache.end()) it = cache.emplace(sub, cli::run(sub, json::object())).first;
  return it->second;
}

std::string golden_path(const std::string& name) {
  return std::string(HYPERMDIM_GOLDEN_DIR) + "/" + name;
}

json load_or_freeze(const std::string& name, const json& current) {
  const std::string path = golden_path(name);
  if (std::getenv("HYPERMDIM_UPDATE_GOLDEN")) {
    std::ofstream(path) << current.dump(2) << "\n";
    return current;
  }
  std::ifstream in(path);
  if (!in) return json();
  return json::parse(in);
}

}  // namespace

TEST(Cli, SubcommandList) {
  std::vector<std::string> expected{"certify-lemma",  "check-conjugacy", "classify-circle",
                                    "embed-shift",    "embedded-growth", "estimate-entropy",
                                    "estimate-mmdim", "find-wandering",  "hyper-net-info",
                                    "sep",            "span"};
  EXPECT_EQ(cli::subcommands(), expected);
}

TEST(Cli, GoldenSchemas) {
  for (const auto& sub : cli::subcommands()) {
    json shape = skeleton(default_run(sub).record);
    json golden = load_or_freeze(sub + ".schema.json", shape);
    EXPECT_EQ(shape, golden) << sub << "\n" << shape.dump(2);
    EXPECT_EQ(default_run(sub).record["schema_version"], cli::kSchemaVersion);
  }
}

TEST(Cli, GoldenCsvHeaders) {
  json headers = json::object();
  for (const auto& sub : cli::subcommands()) {
    const std::string& csv = default_run(sub).csv;
    std::string header = csv.substr(0, csv.find('\n') + (csv.empty() ? 0 : 1));
    EXPECT_EQ(header, cli::csv_header(sub)) << sub;
    if (!header.empty()) headers[sub] = header;
  }
  EXPECT_EQ(headers, load_or_freeze("csv_headers.json", headers));
}

TEST(Cli, DeterministicModuloWallTime) {
  for (const auto& sub : cli::subcommands()) {
    auto again = cli::run(sub, json::object());
    EXPECT_EQ(without_wall_time(again.record).dump(), without_wall_time(default_run(sub).record).dump())
        << sub;
    EXPECT_EQ(again.csv, default_run(sub).csv) << sub;
  }
}

TEST(Cli, ConfigEchoReproducesTheRun) {
  for (const auto& sub : cli::subcommands()) {
    const json& first = default_run(sub).record;
    auto replay = cli::run(sub, first["config"]);
    EXPECT_EQ(replay.record["result"], first["result"]) << sub;
    EXPECT_EQ(replay.record["config"], first["config"]) << sub;
  }
}

TEST(Cli, KnownAnswers) {
  EXPECT_EQ(default_run("classify-circle").record["result"]["classification"]["verdict"], "zero");
  const json& cert = default_run("certify-lemma").record["result"]["certificate"];
  std::uint64_t n = cert["n"].get<std::uint64_t>();
  EXPECT_EQ(cert["implied_bounds"]["sep_hyper_lower"].get<std::uint64_t>(), (1ull << n) - 1);
  EXPECT_EQ(cert["implied_bounds"]["span_hyper_half_eps_lower"].get<std::uint64_t>(), (1ull << n) - 1);
  EXPECT_TRUE(cert["verification"]["passed"].get<bool>());
  auto identity = cli::run("estimate-entropy", {{"system", {{"kind", "identity"}}},
                                                {"pool", {{"size", 300}}}});
  EXPECT_EQ(identity.record["result"]["estimate"]["value"], 0.0);
}

TEST(Cli, ValidationListsEveryViolation) {
  json bad{{"k", 0}, {"eps", "wide"}, {"pool", {{"kind", "disk"}, {"size", 1}}},
           {"colour", "red"}, {"system", {{"kind", "rotation"}}}};
  try {
    cli::run("sep", bad);
    FAIL();
  } catch (const cli::ConfigError& e) {
    std::vector<std::string> fields;
    for (const auto& v : e.violations()) fields.push_back(v.substr(0, v.find(':')));
    for (const char* f : {"/colour", "/system", "/k", "/eps", "/pool/kind", "/pool/size"})
      EXPECT_NE(std::find(fields.begin(), fields.end(), f), fields.end()) << f;
    EXPECT_EQ(fields.size(), 6u);
    json err = cli::error_record("sep", e);
    EXPECT_EQ(err["error"]["kind"], "invalid_config");
    EXPECT_EQ(err["error"]["violations"].size(), 6u);
  }
  EXPECT_THROW(cli::run("warp-drive", json::object()), cli::ConfigError);
  EXPECT_THROW(cli::run("estimate-mmdim", {{"eps_grid", {0.1, 0.2, 0.05, 0.01}}}), cli::ConfigError);
}

TEST(Cli, RuntimeErrorsCarryTheirKind) {
  try {
    cli::run("certify-lemma", {{"selection", "prefix"}});
    FAIL();
  } catch (const std::exception& e) {
    EXPECT_EQ(cli::error_record("certify-lemma", e)["error"]["kind"], "verification_failed");
  }
}

TEST(Cli, Overrides) {
  json cfg = json::object();
  cli::apply_override(cfg, "pool.size=400");
  cli::apply_override(cfg, "method=greedy");
  cli::apply_override(cfg, "system={\"kind\":\"rotation\",\"params\":{\"theta\":0.1}}");
  EXPECT_EQ(cfg["pool"]["size"], 400);
  EXPECT_EQ(cfg["method"], "greedy");
  EXPECT_EQ(cfg["system"]["params"]["theta"], 0.1);
  EXPECT_THROW(cli::apply_override(cfg, "novalue"), cli::ConfigError);
  auto r = cli::run("sep", cfg);
  EXPECT_EQ(r.record["config"]["pool"]["size"], 400);
  EXPECT_EQ(r.record["config"]["pool"]["kind"], "grid");
}

TEST(Cli, SystemIsReplacedNotMerged) {
  auto r = cli::run("embedded-growth", {{"system", {{"kind", "north_south"}, {"params", {{"lambda", 0.05}}}}},
                                        {"channels", {1, 2}}});
  EXPECT_EQ(r.record["config"]["system"]["params"].size(), 1u);
  EXPECT_EQ(r.record["result"]["reports"].size(), 2u);
}
