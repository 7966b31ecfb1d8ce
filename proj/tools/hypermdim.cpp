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

// Command-line front end: one experiment per invocation.
//
//   hypermdim <subcommand> [--config file.json] [--set key=value]... [--out result.json]
//             [--csv curve.csv] [--workers n]
//
// Exit status: 0 on success, 2 for an invalid config, 1 for any other failure.
// Failures print an error record on stdout (or to --out).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hypermdim/cli.hpp"
#include "hypermdim/parallel.hpp"

namespace {

using hypermdim::json;

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

json read_config(const std::string& path) {
  if (path.empty()) return json::object();
  std::ifstream in(path);
  if (!in) throw hypermdim::cli::ConfigError({"--config: cannot open " + path});
  json doc = json::parse(in, nullptr, false);
  if (doc.is_discarded()) throw hypermdim::cli::ConfigError({"--config: " + path + " is not valid JSON"});
  return doc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Separated/spanning sets, entropy and hyperspace explosion experiments"};
  app.set_version_flag("--version", std::string(HYPERMDIM_VERSION));
  app.require_subcommand(1, 1);

  std::string config_path, out_path, csv_path;
  std::vector<std::string> overrides;
  int workers = 0;
  bool print_defaults = false;
  app.add_option("--workers", workers, "worker threads (default: $HYPERMDIM_WORKERS or all cores)")
      ->check(CLI::PositiveNumber);

  const std::map<std::string, std::string> about{
      {"certify-lemma", "verify that all subsets of a separated family stay separated"},
      {"check-conjugacy", "residual of the shift embedding against the inverse shift"},
      {"classify-circle", "zero or infinite mean dimension for a circle homeomorphism"},
      {"embed-shift", "closed set built from a symbol block and wandering arc images"},
      {"embedded-growth", "separated counts of embedded symbol families per channel count"},
      {"estimate-entropy", "slope of log Sep against k at fixed eps"},
      {"estimate-mmdim", "entropy estimates over an eps grid and their mmdim ratios"},
      {"find-wandering", "wandering interval or square-identity verdict for an interval map"},
      {"hyper-net-info", "size and members of a finite-subset net"},
      {"sep", "largest (k, eps)-separated family from a pool"},
      {"span", "smallest (k, eps)-spanning family from a pool"},
  };
  for (const auto& name : hypermdim::cli::subcommands()) {
    CLI::App* sub = app.add_subcommand(name, about.at(name));
    sub->add_option("-c,--config", config_path, "JSON experiment config");
    sub->add_option("-s,--set", overrides, "override a config field, e.g. pool.size=400");
    sub->add_option("-o,--out", out_path, "result record path (default stdout)");
    sub->add_option("--csv", csv_path, "CSV path for tabular output");
    sub->add_flag("--defaults", print_defaults, "print the default config and exit");
  }

  CLI11_PARSE(app, argc, argv);
  const std::string name = app.get_subcommands().front()->get_name();
  if (workers > 0) hypermdim::set_worker_count(workers);

  if (print_defaults) {
    std::cout << hypermdim::cli::default_config(name).dump(2) << "\n";
    return 0;
  }

  try {
    json config = read_config(config_path);
    for (const auto& o : overrides) {
      // A dotted path into "system" edits the default system instead of replacing it.
      if (o.rfind("system.", 0) == 0 && !config.contains("system"))
        config["system"] = hypermdim::cli::default_config(name)["system"];
      hypermdim::cli::apply_override(config, o);
    }
    hypermdim::cli::RunOutput out = hypermdim::cli::run(name, config);
    write_text(out_path, out.record.dump(2) + "\n");
    if (!csv_path.empty()) {
      if (out.csv.empty())
        std::cerr << "hypermdim: " << name << " has no tabular output; --csv ignored\n";
      else
        write_text(csv_path, out.csv);
    }
    return 0;
  } catch (const std::exception& e) {
    json err = hypermdim::cli::error_record(name, e);
    try {
      write_text(out_path, err.dump(2) + "\n");
    } catch (const std::exception&) {
      std::cout << err.dump(2) << "\n";
    }
    std::cerr << "hypermdim: " << e.what() << "\n";
    return dynamic_cast<const hypermdim::cli::ConfigError*>(&e) ? 2 : 1;
  }
}
