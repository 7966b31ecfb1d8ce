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

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hypermdim/graph_search.hpp"
#include "hypermdim/sets.hpp"
#include "hypermdim/system.hpp"

namespace hypermdim {

enum class Scope { base, hyper_finite, hyper_arc };
enum class Method { exact, greedy };
enum class Mode { separated, spanning };

std::string_view to_string(Scope scope);
std::string_view to_string(Method method);
std::string_view to_string(Mode mode);
Scope scope_from_string(std::string_view name);
Method method_from_string(std::string_view name);

using Pool = std::variant<std::vector<double>, std::vector<FinitePoint>, std::vector<ArcPoint>>;

Scope scope_of(const Pool& pool);
std::size_t pool_size(const Pool& pool);
Pool select(const Pool& pool, const std::vector<std::size_t>& indices);

inline constexpr std::size_t kExactSeparatedCap = 2000;
inline constexpr std::size_t kExactSpanningCap = 500;

struct SearchOptions {
  std::optional<std::size_t> exact_cap;  // defaults per operation
  std::uint64_t node_budget = kDefaultNodeBudget;
  std::string pool_spec;                 // free-form description carried into results
};

struct SepSpanResult {
  Mode mode = Mode::separated;
  Scope scope = Scope::base;
  int k = 1;
  double eps = 0.0;
  Method method = Method::greedy;
  Pool family;
  std::vector<std::size_t> indices;  // positions in the pool, ascending
  std::size_t cardinality = 0;
  bool certified = false;
  std::string pool_spec;
  std::size_t pool_size = 0;
  std::size_t target_count = 0;
  std::uint64_t search_nodes = 0;
};

// Largest (exact) or maximal first-fit (greedy) (k, eps)-separated subfamily
// of the pool. The returned family is re-verified with an independent
// distance evaluation before it is marked certified.
SepSpanResult max_separated(const DynSystem& sys, const Pool& pool, int k, double eps,
                            Method method, const SearchOptions& options = {});

// Smallest (exact) or greedy subfamily of the pool whose open (k, eps)
// dynamical balls cover every target.
SepSpanResult min_spanning(const DynSystem& sys, const Pool& pool, const Pool& targets, int k,
                           double eps, Method method, const SearchOptions& options = {});

// Independent re-checks by direct d_k / D_k evaluation.
bool is_separated(const DynSystem& sys, const Pool& family, int k, double eps);
bool is_spanning(const DynSystem& sys, const Pool& family, const Pool& targets, int k, double eps);

struct GridPool {
  std::size_t size = 2000;
  std::optional<std::pair<double, double>> window;  // default: the whole space
  bool auto_zoom = true;
  double saturation = 0.25;
  int max_zoom = 40;
  Method method = Method::greedy;
};

std::vector<double> grid_pool_points(Space space, const GridPool& spec);

struct EntropyEstimate {
  double eps = 0.0;
  double value = 0.0;  // max(slope, 0)
  double slope = 0.0;
  double intercept = 0.0;
  double residual = 0.0;  // RMS residual of the fit
  std::vector<int> ks;
  std::vector<std::size_t> seps;
  Method method = Method::greedy;
  std::size_t pool_size = 0;
  double window_lo = 0.0;
  double window_hi = 1.0;
  int zoom_steps = 0;
};

// Slope of log Sep(T, k, eps) against k for k_min <= k <= k_max (at least
// three values). With auto_zoom the grid window is halved, anchored at its
// left end, while Sep(k_max) exceeds saturation * size.
EntropyEstimate entropy_estimate(const DynSystem& sys, double eps, int k_min, int k_max,
                                 const GridPool& pool = {});
EntropyEstimate entropy_estimate(const DynSystem& sys, const Pool& pool, double eps, int k_min,
                                 int k_max, Method method = Method::greedy);

struct EntropyRow {
  double eps = 0.0;
  double h_est = 0.0;
  int k_lo = 0;
  int k_hi = 0;
  double slope = 0.0;
  double residual = 0.0;
  double ratio = 0.0;  // h_est / (-log eps)
};

struct EntropyCurve {
  Scope scope = Scope::base;
  std::vector<EntropyRow> rows;
  std::vector<EntropyEstimate> estimates;
  double slope = 0.0;  // regression of h_est against -log eps
  double intercept = 0.0;
};

EntropyCurve mmdim_estimate(const DynSystem& sys, const std::vector<double>& eps_grid, int k_min,
                            int k_max, const GridPool& pool = {});
EntropyCurve mmdim_estimate(const DynSystem& sys, const Pool& pool,
                            const std::vector<double>& eps_grid, int k_min, int k_max,
                            Method method = Method::greedy);

// Columns: eps,h_est,slope_window,residual,ratio (slope_window is "k_lo-k_hi").
void write_curve_csv(std::ostream& out, const EntropyCurve& curve);

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double residual = 0.0;
};
LinearFit least_squares(const std::vector<double>& x, const std::vector<double>& y);

std::string format_double(double v);

}  // namespace hypermdim
