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

#include "hypermdim/serialize.hpp"

#include <cmath>
#include <string>

#include "hypermdim/error.hpp"

namespace hypermdim {

namespace {

std::string str(std::string_view s) { return std::string(s); }

json numbers(const std::vector<double>& xs) {
  json out = json::array();
  for (double x : xs) out.push_back(number(x));
  return out;
}

}  // namespace

json number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

void to_json(json& j, Space space) { j = str(to_string(space)); }

void to_json(json& j, const FinitePoint& set) { j = numbers(set.values()); }

void to_json(json& j, const ArcPoint& arc) {
  j = json{{"a", arc.a()}, {"b", arc.b()}, {"space", arc.space()}};
}

void to_json(json& j, const SystemSpec& spec) {
  j = json{{"kind", spec.kind}, {"params", spec.params}};
  if (!spec.breakpoints.empty()) {
    json bp = json::array();
    for (auto [x, y] : spec.breakpoints) bp.push_back({x, y});
    j["breakpoints"] = bp;
  }
  if (spec.space) j["space"] = *spec.space;
}

void from_json(const json& j, SystemSpec& spec) {
  detail::require(j.is_object(), "system must be an object");
  detail::require(j.contains("kind") && j["kind"].is_string(), "system.kind must be a string");
  spec = SystemSpec{};
  spec.kind = j["kind"].get<std::string>();
  if (j.contains("params") && !j["params"].is_null()) {
    detail::require(j["params"].is_object(), "system.params must be an object");
    for (auto& [key, value] : j["params"].items()) {
      detail::require(value.is_number(), "system.params." + key + " must be a number");
      spec.params[key] = value.get<double>();
    }
  }
  if (j.contains("breakpoints") && !j["breakpoints"].is_null()) {
    for (const auto& bp : j["breakpoints"]) {
      detail::require(bp.is_array() && bp.size() == 2 && bp[0].is_number() && bp[1].is_number(),
                      "system.breakpoints entries must be [x, y] pairs");
      spec.breakpoints.emplace_back(bp[0].get<double>(), bp[1].get<double>());
    }
  }
  if (j.contains("space") && !j["space"].is_null())
    spec.space = space_from_string(j["space"].get<std::string>());
}

json pool_to_json(const Pool& pool) {
  return std::visit([](const auto& items) { return json(items); }, pool);
}

void to_json(json& j, const SepSpanResult& r) {
  j = json{{"mode", str(to_string(r.mode))},
           {"scope", str(to_string(r.scope))},
           {"k", r.k},
           {"eps", r.eps},
           {"method", str(to_string(r.method))},
           {"cardinality", r.cardinality},
           {"certified", r.certified},
           {"family", pool_to_json(r.family)},
           {"indices", r.indices},
           {"pool_spec", r.pool_spec},
           {"pool_size", r.pool_size},
           {"target_count", r.target_count},
           {"search_nodes", r.search_nodes}};
}

void to_json(json& j, const EntropyEstimate& e) {
  j = json{{"eps", e.eps},
           {"value", number(e.value)},
           {"slope", number(e.slope)},
           {"intercept", number(e.intercept)},
           {"residual", number(e.residual)},
           {"ks", e.ks},
           {"seps", e.seps},
           {"method", str(to_string(e.method))},
           {"pool_size", e.pool_size},
           {"window", {e.window_lo, e.window_hi}},
           {"zoom_steps", e.zoom_steps}};
}

void to_json(json& j, const EntropyRow& row) {
  j = json{{"eps", row.eps},
           {"h_est", number(row.h_est)},
           {"slope_window", {row.k_lo, row.k_hi}},
           {"slope", number(row.slope)},
           {"residual", number(row.residual)},
           {"ratio", number(row.ratio)}};
}

void to_json(json& j, const EntropyCurve& curve) {
  j = json{{"scope", str(to_string(curve.scope))},
           {"rows", curve.rows},
           {"estimates", curve.estimates},
           {"slope", number(curve.slope)},
           {"intercept", number(curve.intercept)}};
}

void to_json(json& j, const SubsetVerification& v) {
  j = json{{"mode", v.mode},
           {"pairs_checked", v.pairs_checked},
           {"violations", v.violations},
           {"min_distance", number(v.min_distance)},
           {"witness_masks", {v.witness_a, v.witness_b}},
           {"passed", v.passed()}};
  if (v.mode == "sampled") j["seed"] = v.seed;
}

void to_json(json& j, const SubsetCertificate& c) {
  j = json{{"base_family", numbers(c.base_family)},
           {"pool_indices", c.pool_indices},
           {"k", c.k},
           {"eps", c.eps},
           {"n", c.n},
           {"found", c.found},
           {"truncated", c.truncated},
           {"selection", str(to_string(c.selection))},
           {"base_method", str(to_string(c.base_method))},
           {"isolating_times", c.isolating_times},
           {"verification", c.verification},
           {"implied_bounds",
            {{"sep_hyper_lower", c.subset_count}, {"span_hyper_half_eps_lower", c.subset_count}}}};
}

void to_json(json& j, const WanderingCheck& c) {
  j = json{{"disjoint", c.disjoint},
           {"power", c.power},
           {"horizon", c.horizon},
           {"images", c.images},
           {"min_gap", number(c.min_gap)},
           {"min_log10_gap", number(c.min_log10_gap)}};
  if (!c.failure.empty()) j["failure"] = c.failure;
}

void to_json(json& j, const WanderingResult& r) {
  j = json{{"verdict", str(to_string(r.verdict))},
           {"interval", r.interval ? json(*r.interval) : json(nullptr)},
           {"anchor", r.anchor},
           {"anchor_image", r.anchor_image},
           {"max_square_displacement", r.max_square_displacement}};
  if (r.interval) j["check"] = r.check;
}

void to_json(json& j, const EmbedConfig& cfg) {
  json sub = json::array();
  for (auto [a, b] : cfg.subintervals) sub.push_back({a, b});
  j = json{{"system", cfg.system.spec()},
           {"gamma", cfg.gamma},
           {"channels", cfg.channels},
           {"subintervals", sub},
           {"horizon", cfg.horizon},
           {"padding", numbers(cfg.padding)},
           {"padding_error", number(cfg.padding_error)},
           {"arc_check", cfg.arc_check}};
}

void to_json(json& j, const SymbolBlock& block) {
  j = json::array();
  for (int n = -block.horizon(); n <= block.horizon(); ++n) {
    json row = json::array();
    for (int i = 0; i < block.channels(); ++i) row.push_back(block.at(n, i));
    j.push_back(row);
  }
}

void to_json(json& j, const ConjugacyReport& r) {
  j = json{{"horizon", r.horizon},
           {"residual", number(r.residual)},
           {"bound", number(r.bound)},
           {"boundary_term", number(r.boundary_term)},
           {"padding_error", number(r.padding_error)},
           {"boundary_diameter", number(r.boundary_diameter)},
           {"within_bound", r.residual <= r.bound}};
}

void to_json(json& j, const GrowthReport& r) {
  j = json{{"channels", r.channels},
           {"n_window", r.n_window},
           {"eps", r.eps},
           {"symbols", r.symbols},
           {"positions", r.positions},
           {"full_family_size", r.full_family_size},
           {"family_size", r.family_size},
           {"sampled", r.sampled},
           {"sep", r.sep},
           {"rate", number(r.rate)},
           {"min_image_distance", number(r.min_image_distance)}};
  if (r.sampled) j["seed"] = r.seed;
}

void to_json(json& j, const RotationNumber& r) {
  j = json{{"value", r.value},
           {"verdict", str(to_string(r.verdict))},
           {"iterates", r.iterates},
           {"cauchy_gap", r.cauchy_gap}};
  if (r.verdict == Rationality::rational) {
    j["p"] = r.p;
    j["q"] = r.q;
    j["periodic_point"] = r.periodic_point;
    j["periodic_residual"] = r.periodic_residual;
  }
}

void to_json(json& j, const IdentityPowerReport& r) {
  j = json{{"passed", r.passed},
           {"power", 2 * r.q},
           {"max_displacement", r.max_displacement},
           {"grid", r.grid},
           {"tol", r.tol}};
}

void to_json(json& j, const MinimalityEvidence& e) {
  j = json{{"minimal", e.minimal},
           {"largest_gap", e.largest_gap},
           {"gap", e.gap},
           {"iterates", e.iterates},
           {"seeds", e.seeds},
           {"tol_density", e.tol_density}};
}

void to_json(json& j, const WanderingWitness& w) {
  j = json{{"arc", w.arc}, {"power", w.power}, {"check", w.check}};
  if (w.cut_interval) j["cut_interval"] = *w.cut_interval;
}

void to_json(json& j, const ClassifyOptions& o) {
  j = json{{"rotation",
            {{"iterates", o.rotation.iterates},
             {"tol", o.rotation.tol},
             {"max_denominator", o.rotation.max_denominator},
             {"grid", o.rotation.grid},
             {"cauchy_limit", o.rotation.cauchy_limit}}},
           {"identity_tol", o.identity_tol},
           {"identity_grid", o.identity_grid},
           {"wandering",
            {{"horizon", o.wandering.horizon},
             {"grid", o.wandering.grid},
             {"tol", o.wandering.tol}}},
           {"tol_density", o.tol_density},
           {"minimality_iterates", o.minimality_iterates}};
}

void to_json(json& j, const MdimVerdict& v) {
  j = json{{"verdict", str(to_string(v.verdict))},
           {"reason", str(to_string(v.reason))},
           {"orientation", v.orientation_reversing ? "reversing" : "preserving"},
           {"budgets", v.budgets}};
  if (v.rotation) j["rotation_number"] = *v.rotation;
  if (v.q > 0) {
    j["period"] = v.q;
    j["periodic_point"] = v.periodic_point;
  }
  json witness = json::object();
  if (v.identity) witness["identity_power"] = *v.identity;
  if (v.wandering) witness["wandering"] = *v.wandering;
  if (v.minimality) witness["minimality"] = *v.minimality;
  j["witness"] = witness;
}

}  // namespace hypermdim
