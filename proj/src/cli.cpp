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

#include "hypermdim/cli.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>

#include "hypermdim/hyperspace.hpp"

namespace hypermdim::cli {

namespace {

using Pointer = json::json_pointer;

json system_default(const std::string& kind, json params = json::object()) {
  return json{{"kind", kind}, {"params", std::move(params)}};
}

json pool_default(std::size_t size) {
  return json{{"kind", "grid"}, {"size", size}, {"window", nullptr}, {"max_card", 2}};
}

json grid_pool_default(std::size_t size) {
  return json{{"kind", "grid"},      {"size", size},        {"window", nullptr},
              {"max_card", 2},       {"auto_zoom", true},   {"saturation", 0.25},
              {"max_zoom", 40},      {"method", "greedy"}};
}

json padding_default() { return json{{"burn", 1000}, {"window", 64}, {"tol", 1e-9}}; }

json embed_default() {
  return json{{"system", system_default("north_south", {{"lambda", 0.5}})},
              {"gamma", {0.16, 0.25}},
              {"channels", 1},
              {"padding", padding_default()},
              {"seed", 0}};
}

const std::map<std::string, std::function<json()>, std::less<>>& defaults_table() {
  static const std::map<std::string, std::function<json()>, std::less<>> table = {
      {"estimate-entropy",
       [] {
         return json{{"system", system_default("doubling")}, {"eps", 0.02},
                     {"k_min", 4}, {"k_max", 10}, {"pool", grid_pool_default(2000)},
                     {"seed", 0}};
       }},
      {"estimate-mmdim",
       [] {
         return json{{"system", system_default("doubling")},
                     {"eps_grid", {0.2, 0.1, 0.05, 0.025}},
                     {"k_min", 3},
                     {"k_max", 7},
                     {"pool", grid_pool_default(1000)},
                     {"seed", 0}};
       }},
      {"sep",
       [] {
         return json{{"system", system_default("doubling")}, {"k", 3}, {"eps", 0.25},
                     {"method", "exact"}, {"pool", pool_default(512)}, {"exact_cap", nullptr},
                     {"node_budget", kDefaultNodeBudget}, {"seed", 0}};
       }},
      {"span",
       [] {
         return json{{"system", system_default("doubling")}, {"k", 3}, {"eps", 0.25},
                     {"method", "exact"}, {"pool", pool_default(64)}, {"targets", nullptr},
                     {"exact_cap", nullptr}, {"node_budget", kDefaultNodeBudget},
                     {"seed", 0}};
       }},
      {"certify-lemma",
       [] {
         return json{{"system", system_default("doubling")}, {"k", 5}, {"eps", 0.2},
                     {"pool", pool_default(200)}, {"cap", 12}, {"selection", "isolated"},
                     {"base_method", "exact"}, {"exhaustive_limit", 4096},
                     {"samples", 100000}, {"seed", 0}};
       }},
      {"find-wandering",
       [] {
         return json{{"system", system_default("interval_square")}, {"horizon", 20},
                     {"grid", 1000}, {"tol", 1e-9}, {"seed", 0}};
       }},
      {"embed-shift",
       [] {
         json j = embed_default();
         j["horizon"] = 8;
         j["block"] = nullptr;
         return j;
       }},
      {"check-conjugacy",
       [] {
         json j = embed_default();
         j["horizons"] = {4, 8, 16};
         return j;
       }},
      {"embedded-growth",
       [] {
         json j = embed_default();
         j["system"] = system_default("north_south", {{"lambda", 0.1}});
         j["gamma"] = {0.1, 0.4};
         j.erase("channels");
         j["channels"] = {1, 2, 3};
         j["horizon"] = 2;
         j["n_window"] = 2;
         j["eps"] = 0.05;
         j["symbols"] = 3;
         j["positions"] = nullptr;
         j["cap"] = 4096;
         j["method"] = "greedy";
         return j;
       }},
      {"classify-circle",
       [] {
         json j = ClassifyOptions{};
         j["system"] = system_default("rotation", {{"theta", 1.0 / 3.0}});
         j["seed"] = 0;
         return j;
       }},
      {"hyper-net-info",
       [] {
         return json{{"space", "circle"}, {"grid", 12}, {"max_card", 3},
                     {"cap", kDefaultHyperNetCap}, {"emit", false}, {"seed", 0}};
       }},
  };
  return table;
}

const std::function<json()>& defaults_for(std::string_view subcommand) {
  const auto& table = defaults_table();
  auto it = table.find(subcommand);
  if (it == table.end())
    throw ConfigError({"/subcommand: unknown subcommand '" + std::string(subcommand) + "'"});
  return it->second;
}

void merge_into(json& base, const json& patch, bool top) {
  for (auto& [key, value] : patch.items()) {
    bool replace = !base.contains(key) || !base[key].is_object() || !value.is_object() ||
                   (top && key == "system");
    if (replace)
      base[key] = value;
    else
      merge_into(base[key], value, false);
  }
}

class Checker {
 public:
  explicit Checker(const json& cfg) : cfg_(cfg) {}

  const json* find(const std::string& ptr) const {
    Pointer p(ptr);
    return cfg_.contains(p) ? &cfg_.at(p) : nullptr;
  }

  void add(const std::string& ptr, const std::string& msg) { errors.push_back(ptr + ": " + msg); }

  bool number(const std::string& ptr, double lo, double hi, bool open_lo = false,
              bool open_hi = false) {
    const json* v = find(ptr);
    if (!v || !v->is_number()) {
      add(ptr, "expected a number");
      return false;
    }
    double x = v->get<double>();
    bool ok = std::isfinite(x) && (open_lo ? x > lo : x >= lo) && (open_hi ? x < hi : x <= hi);
    if (!ok) {
      std::ostringstream os;
      os << "value " << x << " outside " << (open_lo ? "(" : "[") << lo << ", " << hi
         << (open_hi ? ")" : "]");
      add(ptr, os.str());
    }
    return ok;
  }

  bool integer(const std::string& ptr, long long lo, long long hi, bool nullable = false) {
    const json* v = find(ptr);
    if (nullable && v && v->is_null()) return true;
    if (!v || !v->is_number_integer()) {
      add(ptr, "expected an integer");
      return false;
    }
    long long x = v->get<long long>();
    if (x < lo || x > hi) {
      add(ptr, "value " + std::to_string(x) + " outside [" + std::to_string(lo) + ", " +
                   std::to_string(hi) + "]");
      return false;
    }
    return true;
  }

  void boolean(const std::string& ptr) {
    const json* v = find(ptr);
    if (!v || !v->is_boolean()) add(ptr, "expected true or false");
  }

  bool choice(const std::string& ptr, const std::vector<std::string>& options) {
    const json* v = find(ptr);
    if (v && v->is_string()) {
      for (const auto& o : options)
        if (v->get<std::string>() == o) return true;
    }
    std::string list;
    for (const auto& o : options) list += (list.empty() ? "" : ", ") + o;
    add(ptr, "expected one of " + list);
    return false;
  }

  // Numeric array with at least min_size entries inside [lo, hi].
  bool numbers(const std::string& ptr, std::size_t min_size, double lo, double hi,
               bool integers = false) {
    const json* v = find(ptr);
    if (!v || !v->is_array() || v->size() < min_size) {
      add(ptr, "expected an array of at least " + std::to_string(min_size) +
                   (integers ? " integers" : " numbers"));
      return false;
    }
    bool ok = true;
    for (std::size_t i = 0; i < v->size(); ++i) {
      const json& e = (*v)[i];
      bool typed = integers ? e.is_number_integer() : e.is_number();
      if (!typed || !(e.get<double>() >= lo && e.get<double>() <= hi)) {
        std::ostringstream os;
        os << "entry must be " << (integers ? "an integer" : "a number") << " in [" << lo << ", "
           << hi << "]";
        add(ptr + "/" + std::to_string(i), os.str());
        ok = false;
      }
    }
    return ok;
  }

  void unknown_fields(const json& defaults, const json& actual, const std::string& ptr) {
    if (!actual.is_object()) return;
    for (auto& [key, value] : actual.items()) {
      std::string child = ptr + "/" + key;
      if (!defaults.contains(key)) {
        add(child, "unknown field");
        continue;
      }
      if (ptr.empty() && key == "system") continue;
      if (defaults[key].is_object()) {
        if (!value.is_object())
          add(child, "expected an object");
        else
          unknown_fields(defaults[key], value, child);
      }
    }
  }

  std::vector<std::string> errors;

 private:
  const json& cfg_;
};

std::optional<DynSystem> check_system(Checker& c, const json& cfg) {
  if (!cfg.contains("system")) {
    c.add("/system", "missing");
    return std::nullopt;
  }
  try {
    return make_system(cfg["system"].get<SystemSpec>());
  } catch (const std::exception& e) {
    c.add("/system", e.what());
  }
  return std::nullopt;
}

void check_window(Checker& c, const std::string& ptr) {
  const json* w = c.find(ptr);
  if (!w || w->is_null()) return;
  if (c.numbers(ptr, 2, 0.0, 1.0) && w->size() == 2 && (*w)[0].get<double>() >= (*w)[1].get<double>())
    c.add(ptr, "window needs lo < hi");
  else if (w->size() != 2)
    c.add(ptr, "window must be [lo, hi]");
}

void check_pool(Checker& c, const std::string& ptr, bool grid_options) {
  const json* p = c.find(ptr);
  if (!p || !p->is_object()) {
    c.add(ptr, "expected a pool object");
    return;
  }
  c.choice(ptr + "/kind", {"grid", "hyper-net", "arc-grid"});
  c.integer(ptr + "/size", 2, 1'000'000);
  check_window(c, ptr + "/window");
  c.integer(ptr + "/max_card", 1, 64);
  if (grid_options) {
    c.boolean(ptr + "/auto_zoom");
    c.number(ptr + "/saturation", 0.0, 1.0, true, true);
    c.integer(ptr + "/max_zoom", 0, 1000);
    c.choice(ptr + "/method", {"exact", "greedy"});
  }
}

void check_embed(Checker& c, const json& cfg, bool single_channel) {
  c.numbers("/gamma", 2, 0.0, 1.0);
  if (cfg["gamma"].is_array() && cfg["gamma"].size() != 2) c.add("/gamma", "expected [a, b]");
  if (single_channel) c.integer("/channels", 1, 16);
  c.integer("/padding/burn", 0, 100'000'000);
  c.integer("/padding/window", 1, 4096);
  c.number("/padding/tol", 0.0, 1.0, true);
}

std::vector<std::string> validate_fields(std::string_view sub, const json& cfg) {
  Checker c(cfg);
  c.unknown_fields(defaults_for(sub)(), cfg, "");
  std::optional<DynSystem> sys;
  if (sub != "hyper-net-info") sys = check_system(c, cfg);
  const long long kMaxK = 64;
  if (cfg.contains("seed")) c.integer("/seed", 0, std::numeric_limits<long long>::max());

  if (sub == "estimate-entropy" || sub == "estimate-mmdim") {
    if (sub == "estimate-entropy") {
      c.number("/eps", 0.0, 1.0, true, true);
    } else if (c.numbers("/eps_grid", 4, 0.0, 1.0)) {
      const json& g = cfg["eps_grid"];
      for (std::size_t i = 0; i < g.size(); ++i) {
        double e = g[i].get<double>();
        if (e <= 0.0 || e >= 1.0) c.add("/eps_grid/" + std::to_string(i), "must lie in (0, 1)");
        if (i > 0 && e >= g[i - 1].get<double>())
          c.add("/eps_grid/" + std::to_string(i), "grid must be strictly decreasing");
      }
    }
    bool lo = c.integer("/k_min", 1, kMaxK);
    bool hi = c.integer("/k_max", 1, kMaxK);
    if (lo && hi && cfg["k_max"].get<int>() - cfg["k_min"].get<int>() < 1)
      c.add("/k_max", "need k_max > k_min for a slope");
    check_pool(c, "/pool", true);
  } else if (sub == "sep" || sub == "span") {
    c.integer("/k", 1, kMaxK);
    c.number("/eps", 0.0, 1.0, true);
    c.choice("/method", {"exact", "greedy"});
    check_pool(c, "/pool", false);
    if (sub == "span" && !cfg["targets"].is_null()) check_pool(c, "/targets", false);
    c.integer("/exact_cap", 1, 1'000'000, true);
    c.integer("/node_budget", 1, std::numeric_limits<long long>::max());
  } else if (sub == "certify-lemma") {
    c.integer("/k", 1, kMaxK);
    c.number("/eps", 0.0, 1.0, true);
    check_pool(c, "/pool", false);
    if (cfg["pool"].is_object() && cfg["pool"].value("kind", "") != "grid")
      c.add("/pool/kind", "certificates need a grid pool of base points");
    c.integer("/cap", 1, 20);
    c.choice("/selection", {"prefix", "isolated"});
    c.choice("/base_method", {"exact", "greedy"});
    c.integer("/exhaustive_limit", 0, std::numeric_limits<long long>::max());
    c.integer("/samples", 1, std::numeric_limits<long long>::max());
  } else if (sub == "find-wandering") {
    c.integer("/horizon", 1, 10'000);
    c.integer("/grid", 2, 10'000'000);
    c.number("/tol", 0.0, 1.0, true);
  } else if (sub == "embed-shift") {
    check_embed(c, cfg, true);
    c.integer("/horizon", 0, 1000);
    const json& b = cfg["block"];
    if (!b.is_null()) {
      bool shape = b.is_array() && cfg["horizon"].is_number_integer() &&
                   cfg["channels"].is_number_integer() &&
                   b.size() == static_cast<std::size_t>(2 * cfg["horizon"].get<int>() + 1);
      if (!shape) {
        c.add("/block", "expected 2*horizon+1 rows of channel symbols");
      } else {
        for (std::size_t r = 0; r < b.size(); ++r)
          if (c.numbers("/block/" + std::to_string(r), 1, 0.0, 1.0) &&
              b[r].size() != cfg["channels"].get<std::size_t>())
            c.add("/block/" + std::to_string(r), "row length must equal channels");
      }
    }
  } else if (sub == "check-conjugacy") {
    check_embed(c, cfg, true);
    c.numbers("/horizons", 1, 1, 1000, true);
  } else if (sub == "embedded-growth") {
    check_embed(c, cfg, false);
    c.numbers("/channels", 1, 1, 16, true);
    c.integer("/horizon", 0, 1000);
    c.integer("/n_window", 1, 64);
    c.number("/eps", 0.0, 1.0, true, true);
    c.integer("/symbols", 1, 1000);
    if (!cfg["positions"].is_null()) c.numbers("/positions", 1, -1000, 1000, true);
    c.integer("/cap", 1, 1'000'000);
    c.choice("/method", {"exact", "greedy"});
  } else if (sub == "classify-circle") {
    c.integer("/rotation/iterates", 1000, 100'000'000);
    c.number("/rotation/tol", 0.0, 1.0, true);
    c.integer("/rotation/max_denominator", 1, 1'000'000);
    c.integer("/rotation/grid", 2, 100'000'000);
    c.number("/rotation/cauchy_limit", 0.0, 1.0, true);
    c.number("/identity_tol", 0.0, 1.0, true);
    c.integer("/identity_grid", 2, 100'000'000);
    c.integer("/wandering/horizon", 1, 10'000);
    c.integer("/wandering/grid", 2, 10'000'000);
    c.number("/wandering/tol", 0.0, 1.0, true);
    c.number("/tol_density", 0.0, 1.0, true);
    c.integer("/minimality_iterates", 2, 100'000'000);
  } else if (sub == "hyper-net-info") {
    c.choice("/space", {"circle", "interval"});
    c.integer("/grid", 2, 1'000'000);
    c.integer("/max_card", 1, 64);
    c.integer("/cap", 1, std::numeric_limits<long long>::max());
    c.boolean("/emit");
  }
  return c.errors;
}

struct BuiltPool {
  Pool pool;
  std::string spec;
};

std::string window_suffix(const json& p) {
  if (p["window"].is_null()) return "";
  return ", [" + format_double(p["window"][0].get<double>()) + ", " +
         format_double(p["window"][1].get<double>()) + "]";
}

BuiltPool build_pool(const json& p, Space space) {
  const std::string kind = p["kind"].get<std::string>();
  const std::size_t n = p["size"].get<std::size_t>();
  std::vector<double> grid = p["window"].is_null()
                                 ? uniform_grid(space, n)
                                 : window_grid(space, p["window"][0].get<double>(),
                                               p["window"][1].get<double>(), n);
  if (kind == "grid")
    return {grid, "grid(" + std::to_string(n) + window_suffix(p) + ")"};
  if (kind == "hyper-net") {
    detail::require(p["window"].is_null(), "hyper-net pools use the whole space");
    std::size_t m = p["max_card"].get<std::size_t>();
    return {hyper_net(space, n, m),
            "hyper-net(grid=" + std::to_string(n) + ", max_card=" + std::to_string(m) + ")"};
  }
  std::vector<ArcPoint> arcs;
  for (std::size_t i = 0; i < grid.size(); ++i)
    for (std::size_t j = 0; j < grid.size(); ++j)
      if (space == Space::circle ? i != j : i < j) arcs.emplace_back(space, grid[i], grid[j]);
  return {arcs, "arc-grid(" + std::to_string(n) + window_suffix(p) + ")"};
}

GridPool grid_pool_options(const json& p) {
  GridPool g;
  g.size = p["size"].get<std::size_t>();
  if (!p["window"].is_null())
    g.window = std::make_pair(p["window"][0].get<double>(), p["window"][1].get<double>());
  g.auto_zoom = p["auto_zoom"].get<bool>();
  g.saturation = p["saturation"].get<double>();
  g.max_zoom = p["max_zoom"].get<int>();
  g.method = method_from_string(p["method"].get<std::string>());
  return g;
}

EmbedConfig embed_config(const DynSystem& sys, const json& cfg, int channels, int horizon) {
  PaddingOptions pad;
  pad.burn = cfg["padding"]["burn"].get<long>();
  pad.window = cfg["padding"]["window"].get<long>();
  pad.tol = cfg["padding"]["tol"].get<double>();
  ArcPoint gamma(sys.space(), cfg["gamma"][0].get<double>(), cfg["gamma"][1].get<double>());
  return make_embed_config(sys, gamma, channels, horizon, pad);
}

std::string csv_row(std::initializer_list<std::string> cells) {
  std::string out;
  for (const auto& c : cells) out += (out.empty() ? "" : ",") + c;
  return out + "\n";
}

std::string num(double v) { return format_double(v); }

struct Outcome {
  json result;
  std::string csv;
};

Outcome execute(std::string_view sub, const json& cfg) {
  if (sub == "hyper-net-info") {
    Space space = space_from_string(cfg["space"].get<std::string>());
    std::size_t grid = cfg["grid"].get<std::size_t>();
    std::size_t m = cfg["max_card"].get<std::size_t>();
    std::uint64_t cap = cfg["cap"].get<std::uint64_t>();
    std::uint64_t size = hyper_net_size(grid, m);
    json r{{"space", space}, {"grid", grid}, {"max_card", m}, {"size", size},
           {"within_cap", size <= cap}};
    if (cfg["emit"].get<bool>()) r["elements"] = hyper_net(space, grid, m, cap);
    return {r, ""};
  }

  DynSystem sys = make_system(cfg["system"].get<SystemSpec>());
  json head{{"system_name", sys.name()}};

  if (sub == "estimate-entropy") {
    const json& p = cfg["pool"];
    double eps = cfg["eps"].get<double>();
    int lo = cfg["k_min"].get<int>(), hi = cfg["k_max"].get<int>();
    EntropyEstimate e;
    std::string spec;
    if (p["kind"] == "grid") {
      e = entropy_estimate(sys, eps, lo, hi, grid_pool_options(p));
      spec = "grid(" + std::to_string(p["size"].get<std::size_t>()) + window_suffix(p) + ")";
    } else {
      BuiltPool b = build_pool(p, sys.space());
      e = entropy_estimate(sys, b.pool, eps, lo, hi,
                           method_from_string(p["method"].get<std::string>()));
      spec = b.spec;
    }
    head["estimate"] = e;
    head["pool_spec"] = spec;
    std::string csv = csv_row({"k", "sep"});
    for (std::size_t i = 0; i < e.ks.size(); ++i)
      csv += csv_row({std::to_string(e.ks[i]), std::to_string(e.seps[i])});
    return {head, csv};
  }

  if (sub == "estimate-mmdim") {
    const json& p = cfg["pool"];
    auto eps = cfg["eps_grid"].get<std::vector<double>>();
    int lo = cfg["k_min"].get<int>(), hi = cfg["k_max"].get<int>();
    EntropyCurve curve;
    if (p["kind"] == "grid") {
      curve = mmdim_estimate(sys, eps, lo, hi, grid_pool_options(p));
      head["pool_spec"] = "grid(" + std::to_string(p["size"].get<std::size_t>()) +
                          window_suffix(p) + ")";
    } else {
      BuiltPool b = build_pool(p, sys.space());
      curve = mmdim_estimate(sys, b.pool, eps, lo, hi,
                             method_from_string(p["method"].get<std::string>()));
      head["pool_spec"] = b.spec;
    }
    head["curve"] = curve;
    std::ostringstream csv;
    write_curve_csv(csv, curve);
    return {head, csv.str()};
  }

  if (sub == "sep" || sub == "span") {
    BuiltPool b = build_pool(cfg["pool"], sys.space());
    SearchOptions opt;
    if (!cfg["exact_cap"].is_null()) opt.exact_cap = cfg["exact_cap"].get<std::size_t>();
    opt.node_budget = cfg["node_budget"].get<std::uint64_t>();
    opt.pool_spec = b.spec;
    Method method = method_from_string(cfg["method"].get<std::string>());
    int k = cfg["k"].get<int>();
    double eps = cfg["eps"].get<double>();
    if (sub == "sep") {
      head["result"] = max_separated(sys, b.pool, k, eps, method, opt);
      return {head, ""};
    }
    json tp = cfg["targets"];
    if (tp.is_null()) {
      tp = cfg["pool"];
      if (tp["kind"] == "grid") tp["size"] = 4 * tp["size"].get<std::size_t>();
    }
    BuiltPool t = build_pool(tp, sys.space());
    head["targets_spec"] = t.spec;
    head["result"] = min_spanning(sys, b.pool, t.pool, k, eps, method, opt);
    return {head, ""};
  }

  if (sub == "certify-lemma") {
    BuiltPool b = build_pool(cfg["pool"], sys.space());
    CertificateOptions opt;
    opt.cap = cfg["cap"].get<std::size_t>();
    opt.selection = selection_from_string(cfg["selection"].get<std::string>());
    opt.base_method = method_from_string(cfg["base_method"].get<std::string>());
    opt.exhaustive_limit = cfg["exhaustive_limit"].get<std::uint64_t>();
    opt.samples = cfg["samples"].get<std::uint64_t>();
    opt.seed = cfg["seed"].get<std::uint64_t>();
    head["pool_spec"] = b.spec;
    head["certificate"] = build_subset_certificate(sys, cfg["k"].get<int>(),
                                                   cfg["eps"].get<double>(),
                                                   std::get<std::vector<double>>(b.pool), opt);
    return {head, ""};
  }

  if (sub == "find-wandering") {
    WanderingOptions opt;
    opt.horizon = cfg["horizon"].get<int>();
    opt.grid = cfg["grid"].get<std::size_t>();
    opt.tol = cfg["tol"].get<double>();
    head["wandering"] = find_wandering_interval(sys, opt);
    return {head, ""};
  }

  const std::uint64_t seed = cfg["seed"].get<std::uint64_t>();

  if (sub == "embed-shift") {
    int horizon = cfg["horizon"].get<int>();
    int channels = cfg["channels"].get<int>();
    EmbedConfig ec = embed_config(sys, cfg, channels, horizon);
    SymbolBlock block(horizon, channels);
    if (cfg["block"].is_null()) {
      block = random_block(horizon, channels, seed);
    } else {
      for (int n = -horizon; n <= horizon; ++n)
        for (int i = 0; i < channels; ++i)
          block.at(n, i) = cfg["block"][n + horizon][i].get<double>();
    }
    EmbedState state = build_embedding(ec, block);
    head["embedding"] = ec;
    head["block"] = block;
    head["image"] = state.image;
    head["conjugacy"] = check_conjugacy(ec, block);
    return {head, ""};
  }

  if (sub == "check-conjugacy") {
    int channels = cfg["channels"].get<int>();
    json reports = json::array();
    std::string csv = csv_header(sub);
    for (const auto& h : cfg["horizons"]) {
      int horizon = h.get<int>();
      EmbedConfig ec = embed_config(sys, cfg, channels, horizon);
      ConjugacyReport r = check_conjugacy(ec, random_block(horizon, channels, seed));
      reports.push_back(r);
      csv += csv_row({std::to_string(horizon), num(r.residual), num(r.bound),
                      num(r.boundary_term), num(r.padding_error), num(r.boundary_diameter)});
    }
    head["reports"] = reports;
    return {head, csv};
  }

  if (sub == "embedded-growth") {
    GrowthOptions opt;
    opt.n_window = cfg["n_window"].get<int>();
    opt.eps = cfg["eps"].get<double>();
    opt.symbols = cfg["symbols"].get<int>();
    if (!cfg["positions"].is_null()) opt.positions = cfg["positions"].get<std::vector<int>>();
    opt.cap = cfg["cap"].get<std::size_t>();
    opt.seed = seed;
    opt.method = method_from_string(cfg["method"].get<std::string>());
    int horizon = cfg["horizon"].get<int>();
    json reports = json::array();
    std::string csv = csv_header(sub);
    bool increasing = true;
    double prev = -1.0;
    for (const auto& k : cfg["channels"]) {
      EmbedConfig ec = embed_config(sys, cfg, k.get<int>(), horizon);
      GrowthReport r = embedded_growth(ec, opt);
      increasing = increasing && r.rate > prev;
      prev = r.rate;
      reports.push_back(r);
      csv += csv_row({std::to_string(r.channels), std::to_string(r.family_size),
                      std::to_string(r.sep), num(r.rate), num(r.min_image_distance)});
    }
    head["reports"] = reports;
    head["rate_increasing"] = increasing;
    return {head, csv};
  }

  ClassifyOptions opt;
  opt.rotation.iterates = cfg["rotation"]["iterates"].get<std::size_t>();
  opt.rotation.tol = cfg["rotation"]["tol"].get<double>();
  opt.rotation.max_denominator = cfg["rotation"]["max_denominator"].get<int>();
  opt.rotation.grid = cfg["rotation"]["grid"].get<std::size_t>();
  opt.rotation.cauchy_limit = cfg["rotation"]["cauchy_limit"].get<double>();
  opt.identity_tol = cfg["identity_tol"].get<double>();
  opt.identity_grid = cfg["identity_grid"].get<std::size_t>();
  opt.wandering.horizon = cfg["wandering"]["horizon"].get<int>();
  opt.wandering.grid = cfg["wandering"]["grid"].get<std::size_t>();
  opt.wandering.tol = cfg["wandering"]["tol"].get<double>();
  opt.tol_density = cfg["tol_density"].get<double>();
  opt.minimality_iterates = cfg["minimality_iterates"].get<std::size_t>();
  head["classification"] = classify_mdim(sys, opt);
  return {head, ""};
}

}  // namespace

ConfigError::ConfigError(std::vector<std::string> violations)
    : Error(ErrorKind::invalid_argument,
            [&] {
              std::string msg = "invalid config";
              for (const auto& v : violations) msg += "\n  " + v;
              return msg;
            }()),
      violations_(std::move(violations)) {}

const std::vector<std::string>& subcommands() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, _] : defaults_table()) out.push_back(name);
    return out;
  }();
  return names;
}

json default_config(std::string_view subcommand) { return defaults_for(subcommand)(); }

json resolve_config(std::string_view subcommand, const json& user) {
  json cfg = default_config(subcommand);
  if (user.is_null()) return cfg;
  if (!user.is_object()) throw ConfigError({": config must be a JSON object"});
  merge_into(cfg, user, true);
  if (cfg.contains("targets") && cfg["targets"].is_object()) {
    json t = pool_default(cfg["pool"].value("size", 64));
    merge_into(t, cfg["targets"], false);
    cfg["targets"] = t;
  }
  return cfg;
}

std::vector<std::string> validate(std::string_view subcommand, const json& resolved) {
  return validate_fields(subcommand, resolved);
}

void apply_override(json& config, std::string_view assignment) {
  auto eq = assignment.find('=');
  if (eq == std::string_view::npos || eq == 0)
    throw ConfigError({"--set " + std::string(assignment) + ": expected key=value"});
  std::string key(assignment.substr(0, eq));
  std::string text(assignment.substr(eq + 1));
  json value = json::parse(text, nullptr, false);
  if (value.is_discarded()) value = text;
  std::string ptr;
  std::size_t start = 0;
  while (true) {
    auto dot = key.find('.', start);
    ptr += "/" + key.substr(start, dot - start);
    if (dot == std::string::npos) break;
    start = dot + 1;
  }
  if (!config.is_object()) config = json::object();
  config[Pointer(ptr)] = value;
}

std::string csv_header(std::string_view subcommand) {
  if (subcommand == "estimate-entropy") return "k,sep\n";
  if (subcommand == "estimate-mmdim") return "eps,h_est,slope_window,residual,ratio\n";
  if (subcommand == "check-conjugacy")
    return "horizon,residual,bound,boundary_term,padding_error,boundary_diameter\n";
  if (subcommand == "embedded-growth") return "channels,family_size,sep,rate,min_image_distance\n";
  return "";
}

RunOutput run(std::string_view subcommand, const json& user_config) {
  const auto start = std::chrono::steady_clock::now();
  json cfg = resolve_config(subcommand, user_config);
  std::vector<std::string> violations = validate(subcommand, cfg);
  if (!violations.empty()) throw ConfigError(std::move(violations));
  Outcome out = execute(subcommand, cfg);
  double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  json record{{"schema_version", kSchemaVersion},
              {"library_version", HYPERMDIM_VERSION},
              {"subcommand", std::string(subcommand)},
              {"config", cfg},
              {"seed", cfg["seed"]},
              {"result", std::move(out.result)},
              {"wall_time_s", wall}};
  return {std::move(record), std::move(out.csv)};
}

json error_record(std::string_view subcommand, const std::exception& error) {
  json err{{"message", error.what()}};
  if (const auto* ce = dynamic_cast<const ConfigError*>(&error)) {
    err["kind"] = "invalid_config";
    err["violations"] = ce->violations();
    err["message"] = "invalid config";
  } else if (const auto* e = dynamic_cast<const Error*>(&error)) {
    err["kind"] = std::string(to_string(e->kind()));
  } else {
    err["kind"] = "internal";
  }
  return json{{"schema_version", kSchemaVersion},
              {"library_version", HYPERMDIM_VERSION},
              {"subcommand", std::string(subcommand)},
              {"error", err}};
}

}  // namespace hypermdim::cli
