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

#include "hypermdim/sepspan.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <ostream>
#include <string>

#include "hypermdim/error.hpp"
#include "hypermdim/hyperspace.hpp"
#include "hypermdim/parallel.hpp"

namespace hypermdim {

std::string_view to_string(Scope scope) {
  switch (scope) {
    case Scope::base: return "base";
    case Scope::hyper_finite: return "hyper-finite";
    case Scope::hyper_arc: return "hyper-arc";
  }
  return "base";
}

std::string_view to_string(Method method) { return method == Method::exact ? "exact" : "greedy"; }

std::string_view to_string(Mode mode) {
  return mode == Mode::separated ? "separated" : "spanning";
}

Scope scope_from_string(std::string_view name) {
  if (name == "base") return Scope::base;
  if (name == "hyper-finite") return Scope::hyper_finite;
  if (name == "hyper-arc") return Scope::hyper_arc;
  detail::fail(ErrorKind::invalid_argument, "unknown scope '" + std::string(name) +
                                                "' (expected base, hyper-finite or hyper-arc)");
}

Method method_from_string(std::string_view name) {
  if (name == "exact") return Method::exact;
  if (name == "greedy") return Method::greedy;
  detail::fail(ErrorKind::invalid_argument,
               "unknown method '" + std::string(name) + "' (expected exact or greedy)");
}

Scope scope_of(const Pool& pool) { return static_cast<Scope>(pool.index()); }

std::size_t pool_size(const Pool& pool) {
  return std::visit([](const auto& v) { return v.size(); }, pool);
}

Pool select(const Pool& pool, const std::vector<std::size_t>& indices) {
  return std::visit(
      [&](const auto& v) -> Pool {
        std::remove_cvref_t<decltype(v)> out;
        out.reserve(indices.size());
        for (std::size_t i : indices) out.push_back(v.at(i));
        return out;
      },
      pool);
}

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

namespace {

template <class E>
struct Ops;

template <>
struct Ops<double> {
  static double step(const DynSystem& sys, double x) { return sys.forward(x); }
  static double dist(Space space, double a, double b) { return metric(space, a, b); }
  static double direct(const DynSystem& sys, double a, double b, int k) {
    return dyn_distance(sys, a, b, k);
  }
  static void check(const DynSystem& sys, const std::vector<double>& v) {
    for (double x : v) normalize(sys.space(), x);
  }
};

template <>
struct Ops<FinitePoint> {
  static FinitePoint step(const DynSystem& sys, const FinitePoint& a) {
    return induced_apply(sys, a);
  }
  static double dist(Space, const FinitePoint& a, const FinitePoint& b) { return hausdorff(a, b); }
  static double direct(const DynSystem& sys, const FinitePoint& a, const FinitePoint& b, int k) {
    return induced_dyn_distance(sys, a, b, k);
  }
  static void check(const DynSystem& sys, const std::vector<FinitePoint>& v) {
    for (const auto& a : v)
      if (a.space() != sys.space())
        detail::fail(ErrorKind::space_mismatch, "pool member lives in a different space");
  }
};

template <>
struct Ops<ArcPoint> {
  static ArcPoint step(const DynSystem& sys, const ArcPoint& a) {
    return induced_apply_arc(sys, a);
  }
  static double dist(Space, const ArcPoint& a, const ArcPoint& b) { return hausdorff_arcs(a, b); }
  static double direct(const DynSystem& sys, const ArcPoint& a, const ArcPoint& b, int k) {
    return induced_dyn_distance(sys, a, b, k);
  }
  static void check(const DynSystem& sys, const std::vector<ArcPoint>& v) {
    if (!sys.is_homeomorphism())
      detail::fail(ErrorKind::not_invertible, "hyper-arc scope needs a homeomorphism");
    for (const auto& a : v)
      if (a.space() != sys.space())
        detail::fail(ErrorKind::space_mismatch, "pool member lives in a different space");
  }
};

template <class E>
using Trajectory = std::vector<E>;

template <class E>
std::vector<Trajectory<E>> trajectories(const DynSystem& sys, const std::vector<E>& members,
                                        int k) {
  std::vector<Trajectory<E>> out(members.size());
  parallel_for(members.size(), [&](std::size_t m) {
    Trajectory<E>& t = out[m];
    t.reserve(static_cast<std::size_t>(k));
    t.push_back(members[m]);
    for (int i = 1; i < k; ++i) t.push_back(Ops<E>::step(sys, t.back()));
  });
  return out;
}

// max_i d(a_i, b_i), stopping early once the value reaches stop_at.
template <class E>
double trajectory_distance(Space space, const Trajectory<E>& a, const Trajectory<E>& b,
                           double stop_at) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size() && d < stop_at; ++i)
    d = std::max(d, Ops<E>::dist(space, a[i], b[i]));
  return d;
}

void check_params(int k, double eps) {
  detail::require(k >= 1, "k must be >= 1");
  detail::require(eps > 0.0 && std::isfinite(eps), "eps must be positive and finite");
}

template <class E>
bool separated_direct(const DynSystem& sys, const std::vector<E>& family, int k, double eps) {
  std::vector<char> ok(family.size(), 1);
  parallel_for(family.size(), [&](std::size_t i) {
    for (std::size_t j = i + 1; j < family.size() && ok[i]; ++j)
      ok[i] = Ops<E>::direct(sys, family[i], family[j], k) >= eps;
  });
  return std::all_of(ok.begin(), ok.end(), [](char c) { return c != 0; });
}

template <class E>
bool spanning_direct(const DynSystem& sys, const std::vector<E>& family,
                     const std::vector<E>& targets, int k, double eps) {
  std::vector<char> ok(targets.size(), 0);
  parallel_for(targets.size(), [&](std::size_t t) {
    for (std::size_t m = 0; m < family.size() && !ok[t]; ++m)
      ok[t] = Ops<E>::direct(sys, family[m], targets[t], k) < eps;
  });
  return std::all_of(ok.begin(), ok.end(), [](char c) { return c != 0; });
}

template <class E>
SepSpanResult separated_impl(const DynSystem& sys, const std::vector<E>& pool, int k, double eps,
                             Method method, const SearchOptions& options) {
  detail::require(!pool.empty(), "candidate pool is empty");
  Ops<E>::check(sys, pool);
  std::size_t cap = options.exact_cap.value_or(kExactSeparatedCap);
  if (method == Method::exact && pool.size() > cap)
    detail::fail(ErrorKind::cap_exceeded, "exact separated search is capped at " +
                                              std::to_string(cap) + " candidates but the pool has " +
                                              std::to_string(pool.size()) +
                                              "; use the greedy method");
  const Space space = sys.space();
  const auto traj = trajectories(sys, pool, k);
  SepSpanResult r;
  r.mode = Mode::separated;
  r.method = method;
  if (method == Method::greedy) {
    for (std::size_t i = 0; i < pool.size(); ++i) {
      bool free = true;
      for (std::size_t j : r.indices) {
        if (trajectory_distance(space, traj[i], traj[j], eps) < eps) {
          free = false;
          break;
        }
      }
      if (free) r.indices.push_back(i);
    }
  } else {
    ConflictGraph graph(pool.size());
    parallel_for(pool.size(), [&](std::size_t i) {
      for (std::size_t j = i + 1; j < pool.size(); ++j)
        if (trajectory_distance(space, traj[i], traj[j], eps) < eps) graph.row(i).set(j);
    });
    graph.symmetrize();
    SearchResult found = maximum_independent_set(graph, options.node_budget);
    r.indices = std::move(found.members);
    r.search_nodes = found.nodes;
  }
  std::vector<E> family;
  for (std::size_t i : r.indices) family.push_back(pool[i]);
  if (!separated_direct(sys, family, k, eps))
    detail::fail(ErrorKind::verification_failed, "separated family failed re-verification");
  r.certified = true;
  r.cardinality = family.size();
  r.family = std::move(family);
  return r;
}

std::string describe_point(double x) { return format_double(x); }

std::string describe_point(const FinitePoint& a) {
  std::string out = "{";
  for (std::size_t i = 0; i < a.size(); ++i) out += (i ? ", " : "") + format_double(a[i]);
  return out + "}";
}

std::string describe_point(const ArcPoint& a) {
  return "[" + format_double(a.a()) + ", " + format_double(a.b()) + "]";
}

template <class E>
SepSpanResult spanning_impl(const DynSystem& sys, const std::vector<E>& pool,
                            const std::vector<E>& targets, int k, double eps, Method method,
                            const SearchOptions& options) {
  detail::require(!pool.empty(), "candidate pool is empty");
  detail::require(!targets.empty(), "target pool is empty");
  Ops<E>::check(sys, pool);
  Ops<E>::check(sys, targets);
  std::size_t cap = options.exact_cap.value_or(kExactSpanningCap);
  if (method == Method::exact && pool.size() > cap)
    detail::fail(ErrorKind::cap_exceeded, "exact spanning search is capped at " +
                                              std::to_string(cap) + " candidates but the pool has " +
                                              std::to_string(pool.size()) +
                                              "; use the greedy method");
  const Space space = sys.space();
  const auto traj = trajectories(sys, pool, k);
  const auto ttraj = trajectories(sys, targets, k);
  std::vector<Bitset> covers(pool.size(), Bitset(targets.size()));
  parallel_for(pool.size(), [&](std::size_t c) {
    for (std::size_t t = 0; t < targets.size(); ++t)
      if (trajectory_distance(space, traj[c], ttraj[t], eps) < eps) covers[c].set(t);
  });
  Bitset reach(targets.size());
  for (const auto& c : covers) reach |= c;
  if (!reach.all()) {
    std::size_t t = (~reach).find_first();
    detail::fail(ErrorKind::infeasible, "target " + std::to_string(t) + " = " +
                                            describe_point(targets[t]) +
                                            " is not covered by any pool member at eps " +
                                            format_double(eps));
  }
  SepSpanResult r;
  r.mode = Mode::spanning;
  r.method = method;
  if (method == Method::greedy) {
    r.indices = greedy_set_cover(covers, targets.size());
    std::sort(r.indices.begin(), r.indices.end());
  } else {
    SearchResult found = minimum_set_cover(covers, targets.size(), options.node_budget);
    r.indices = std::move(found.members);
    r.search_nodes = found.nodes;
  }
  std::vector<E> family;
  for (std::size_t i : r.indices) family.push_back(pool[i]);
  if (!spanning_direct(sys, family, targets, k, eps))
    detail::fail(ErrorKind::verification_failed, "spanning family failed re-verification");
  r.certified = true;
  r.cardinality = family.size();
  r.family = std::move(family);
  return r;
}

}  // namespace

SepSpanResult max_separated(const DynSystem& sys, const Pool& pool, int k, double eps,
                            Method method, const SearchOptions& options) {
  check_params(k, eps);
  SepSpanResult r = std::visit(
      [&](const auto& v) { return separated_impl(sys, v, k, eps, method, options); }, pool);
  r.scope = scope_of(pool);
  r.k = k;
  r.eps = eps;
  r.pool_spec = options.pool_spec;
  r.pool_size = pool_size(pool);
  return r;
}

SepSpanResult min_spanning(const DynSystem& sys, const Pool& pool, const Pool& targets, int k,
                           double eps, Method method, const SearchOptions& options) {
  check_params(k, eps);
  if (pool.index() != targets.index())
    detail::fail(ErrorKind::invalid_argument, "pool and targets must have the same scope");
  SepSpanResult r = std::visit(
      [&](const auto& v) {
        using V = std::remove_cvref_t<decltype(v)>;
        return spanning_impl(sys, v, std::get<V>(targets), k, eps, method, options);
      },
      pool);
  r.scope = scope_of(pool);
  r.k = k;
  r.eps = eps;
  r.pool_spec = options.pool_spec;
  r.pool_size = pool_size(pool);
  r.target_count = pool_size(targets);
  return r;
}

bool is_separated(const DynSystem& sys, const Pool& family, int k, double eps) {
  check_params(k, eps);
  return std::visit([&](const auto& v) { return separated_direct(sys, v, k, eps); }, family);
}

bool is_spanning(const DynSystem& sys, const Pool& family, const Pool& targets, int k,
                 double eps) {
  check_params(k, eps);
  if (family.index() != targets.index())
    detail::fail(ErrorKind::invalid_argument, "family and targets must have the same scope");
  return std::visit(
      [&](const auto& v) {
        using V = std::remove_cvref_t<decltype(v)>;
        return spanning_direct(sys, v, std::get<V>(targets), k, eps);
      },
      family);
}

LinearFit least_squares(const std::vector<double>& x, const std::vector<double>& y) {
  detail::require(x.size() == y.size() && x.size() >= 2, "regression needs at least two points");
  const auto n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  detail::require(sxx > 0.0, "regression abscissae are all equal");
  LinearFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ss = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    double e = y[i] - (fit.intercept + fit.slope * x[i]);
    ss += e * e;
  }
  fit.residual = std::sqrt(ss / n);
  return fit;
}

namespace {

void check_k_range(int k_min, int k_max) {
  detail::require(k_min >= 1, "k range must start at >= 1");
  detail::require(k_max - k_min + 1 >= 3, "k range needs at least three values");
}

void fit_entropy(EntropyEstimate& e) {
  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < e.ks.size(); ++i) {
    xs.push_back(e.ks[i]);
    ys.push_back(std::log(static_cast<double>(e.seps[i])));
  }
  LinearFit fit = least_squares(xs, ys);
  e.slope = fit.slope;
  e.intercept = fit.intercept;
  e.residual = fit.residual;
  e.value = std::max(0.0, fit.slope);
}

}  // namespace

std::vector<double> grid_pool_points(Space space, const GridPool& spec) {
  if (!spec.window) return uniform_grid(space, spec.size);
  return window_grid(space, spec.window->first, spec.window->second, spec.size);
}

EntropyEstimate entropy_estimate(const DynSystem& sys, double eps, int k_min, int k_max,
                                 const GridPool& pool) {
  check_k_range(k_min, k_max);
  check_params(k_max, eps);
  detail::require(pool.size >= 2, "grid pool needs at least two points");
  detail::require(pool.saturation > 0.0 && pool.saturation <= 1.0,
                  "saturation must lie in (0, 1]");
  GridPool spec = pool;
  int zoom = 0;
  std::vector<double> pts = grid_pool_points(sys.space(), spec);
  std::size_t top = max_separated(sys, pts, k_max, eps, spec.method).cardinality;
  while (spec.auto_zoom && zoom < spec.max_zoom &&
         static_cast<double>(top) > spec.saturation * static_cast<double>(spec.size)) {
    auto [lo, hi] = spec.window.value_or(std::pair<double, double>{0.0, 1.0});
    spec.window = std::pair<double, double>{lo, lo + 0.5 * (hi - lo)};
    ++zoom;
    pts = grid_pool_points(sys.space(), spec);
    top = max_separated(sys, pts, k_max, eps, spec.method).cardinality;
  }
  EntropyEstimate e;
  e.eps = eps;
  e.method = spec.method;
  e.pool_size = pts.size();
  e.zoom_steps = zoom;
  if (spec.window) {
    e.window_lo = spec.window->first;
    e.window_hi = spec.window->second;
  }
  for (int k = k_min; k <= k_max; ++k) {
    e.ks.push_back(k);
    e.seps.push_back(k == k_max ? top : max_separated(sys, pts, k, eps, spec.method).cardinality);
  }
  fit_entropy(e);
  return e;
}

EntropyEstimate entropy_estimate(const DynSystem& sys, const Pool& pool, double eps, int k_min,
                                 int k_max, Method method) {
  check_k_range(k_min, k_max);
  check_params(k_max, eps);
  EntropyEstimate e;
  e.eps = eps;
  e.method = method;
  e.pool_size = pool_size(pool);
  for (int k = k_min; k <= k_max; ++k) {
    e.ks.push_back(k);
    e.seps.push_back(max_separated(sys, pool, k, eps, method).cardinality);
  }
  fit_entropy(e);
  return e;
}

namespace {

void check_eps_grid(const std::vector<double>& eps_grid) {
  detail::require(eps_grid.size() >= 4, "eps grid needs at least four values");
  for (std::size_t i = 0; i < eps_grid.size(); ++i) {
    detail::require(eps_grid[i] > 0.0 && eps_grid[i] < 1.0, "eps values must lie in (0, 1)");
    if (i > 0) detail::require(eps_grid[i] < eps_grid[i - 1], "eps grid must be strictly decreasing");
  }
}

EntropyCurve assemble_curve(Scope scope, std::vector<EntropyEstimate> estimates) {
  EntropyCurve curve;
  curve.scope = scope;
  std::vector<double> xs, ys;
  for (const EntropyEstimate& e : estimates) {
    EntropyRow row;
    row.eps = e.eps;
    row.h_est = e.value;
    row.k_lo = e.ks.front();
    row.k_hi = e.ks.back();
    row.slope = e.slope;
    row.residual = e.residual;
    row.ratio = e.value / -std::log(e.eps);
    curve.rows.push_back(row);
    xs.push_back(-std::log(e.eps));
    ys.push_back(e.value);
  }
  LinearFit fit = least_squares(xs, ys);
  curve.slope = fit.slope;
  curve.intercept = fit.intercept;
  curve.estimates = std::move(estimates);
  return curve;
}

}  // namespace

EntropyCurve mmdim_estimate(const DynSystem& sys, const std::vector<double>& eps_grid, int k_min,
                            int k_max, const GridPool& pool) {
  check_eps_grid(eps_grid);
  std::vector<EntropyEstimate> estimates;
  for (double eps : eps_grid) estimates.push_back(entropy_estimate(sys, eps, k_min, k_max, pool));
  return assemble_curve(Scope::base, std::move(estimates));
}

EntropyCurve mmdim_estimate(const DynSystem& sys, const Pool& pool,
                            const std::vector<double>& eps_grid, int k_min, int k_max,
                            Method method) {
  check_eps_grid(eps_grid);
  std::vector<EntropyEstimate> estimates;
  for (double eps : eps_grid)
    estimates.push_back(entropy_estimate(sys, pool, eps, k_min, k_max, method));
  return assemble_curve(scope_of(pool), std::move(estimates));
}

void write_curve_csv(std::ostream& out, const EntropyCurve& curve) {
  out << "eps,h_est,slope_window,residual,ratio\n";
  for (const EntropyRow& row : curve.rows) {
    out << format_double(row.eps) << ',' << format_double(row.h_est) << ',' << row.k_lo << '-'
        << row.k_hi << ',' << format_double(row.residual) << ',' << format_double(row.ratio)
        << '\n';
  }
}

}  // namespace hypermdim
