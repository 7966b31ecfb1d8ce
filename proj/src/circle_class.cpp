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

#include "hypermdim/circle_class.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <sstream>
#include <vector>

#include "hypermdim/error.hpp"
#include "hypermdim/sepspan.hpp"

namespace hypermdim {

std::string_view to_string(Rationality r) {
  switch (r) {
    case Rationality::rational: return "rational";
    case Rationality::irrational: return "irrational-at-tolerance";
    case Rationality::undetermined: return "undetermined";
  }
  return "undetermined";
}

std::string_view to_string(MdimClass c) { return c == MdimClass::zero ? "zero" : "infinite"; }

std::string_view to_string(MdimReason r) {
  switch (r) {
    case MdimReason::conjugate_to_rotation: return "conjugate-to-rotation";
    case MdimReason::identity_power: return "H^{2q}-identity";
    case MdimReason::wandering_interval_found: return "wandering-interval-found";
    case MdimReason::cantor_nonwandering: return "cantor-nonwandering";
  }
  return "";
}

namespace {

void require_circle_homeo(const DynSystem& sys) {
  detail::require(sys.space() == Space::circle && sys.is_homeomorphism() && sys.has_lift(),
                  sys.name() + " is not a circle homeomorphism");
}

// Convergents p/q of x in [0,1) with q <= max_q.
std::vector<std::pair<long, long>> convergents(double x, int max_q) {
  std::vector<std::pair<long, long>> out;
  long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double r = x;
  for (int step = 0; step < 64; ++step) {
    double a = std::floor(r);
    long ai = static_cast<long>(a);
    long p2 = ai * p1 + p0, q2 = ai * q1 + q0;
    if (q2 > max_q) break;
    out.emplace_back(p2, q2);
    double frac = r - a;
    if (frac < 1e-15) break;
    r = 1.0 / frac;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
  }
  return out;
}

template <class F>
double bisect_root(F g, double lo, double hi) {
  double glo = g(lo);
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    double gm = g(mid);
    if ((gm < 0) == (glo < 0)) {
      lo = mid;
      glo = gm;
    } else {
      hi = mid;
    }
  }
  return std::fabs(g(lo)) <= std::fabs(g(hi)) ? lo : hi;
}

// A zero of g on the grid or by bisection between sign changes, if any
// attains |g| < tol.
std::optional<double> scan_root(const std::function<double(double)>& g, std::size_t grid,
                                double tol) {
  double prev_x = 0.0, prev = g(0.0);
  if (std::fabs(prev) < tol) return 0.0;
  for (std::size_t j = 1; j <= grid; ++j) {
    double x = static_cast<double>(j) / static_cast<double>(grid);
    double v = g(x);
    if (std::fabs(v) < tol) return x >= 1.0 ? 0.0 : x;
    if ((v < 0) != (prev < 0)) {
      double root = bisect_root(g, prev_x, x);
      if (std::fabs(g(root)) < tol) return settle(Space::circle, root);
    }
    prev_x = x;
    prev = v;
  }
  return std::nullopt;
}

}  // namespace

RotationNumber rotation_number(const DynSystem& sys, const RotationOptions& options) {
  require_circle_homeo(sys);
  detail::require(sys.orientation() == Orientation::preserving,
                  "rotation numbers need an orientation-preserving map; classify " + sys.name() +
                      " directly");
  detail::require(options.iterates >= 1000, "rotation number needs at least 1000 iterates");
  detail::require(options.max_denominator >= 1, "max denominator must be >= 1");
  RotationNumber rho;
  rho.iterates = options.iterates;
  const std::size_t half = options.iterates / 2;
  // Plain average for the guaranteed 1/n window, smoothly weighted average of
  // L(x) - x along the orbit for the reported value.
  double y = 0.0, y_half = 0.0, weighted = 0.0, weights = 0.0;
  const double n_total = static_cast<double>(options.iterates);
  for (std::size_t n = 1; n <= options.iterates; ++n) {
    double frac = y - std::floor(y);
    double next = sys.lift(y);
    double t = (static_cast<double>(n) - 0.5) / n_total;
    double w = std::exp(-1.0 / (t * (1.0 - t)));
    weighted += w * (sys.lift(frac) - frac);
    weights += w;
    y = next;
    if (n == half) y_half = y;
  }
  const double est = y / n_total;
  rho.cauchy_gap = std::fabs(est - y_half / static_cast<double>(half));
  rho.value = settle(Space::circle, weighted / weights);
  const double plain = settle(Space::circle, est);

  const double window = 1.0 / static_cast<double>(options.iterates) + 1e-12;
  for (auto [p, q] : convergents(plain, options.max_denominator)) {
    double target = static_cast<double>(p) / static_cast<double>(q);
    if (std::fabs(plain - target) > window) continue;
    const double lift_shift = std::round(static_cast<double>(q) * est);
    auto g = [&](double x) { return iterate_lift(sys, x, q) - x - lift_shift; };
    std::optional<double> x = scan_root(g, options.grid, options.tol);
    if (!x) continue;
    bool exact_period = true;
    double z = *x;
    for (long j = 1; j < q && exact_period; ++j) {
      z = sys.forward(z);
      exact_period = metric(Space::circle, z, *x) >= options.tol;
    }
    if (!exact_period) continue;
    long lp = static_cast<long>(lift_shift);
    rho.verdict = Rationality::rational;
    rho.q = q;
    rho.p = ((lp % q) + q) % q;
    rho.value = static_cast<double>(rho.p) / static_cast<double>(q);
    rho.periodic_point = *x;
    rho.periodic_residual = std::fabs(g(*x));
    return rho;
  }
  rho.verdict = rho.cauchy_gap > options.cauchy_limit ? Rationality::undetermined
                                                       : Rationality::irrational;
  return rho;
}

IdentityPowerReport identity_power_test(const DynSystem& sys, int q, double tol,
                                        std::size_t grid) {
  detail::require(q >= 1, "q must be >= 1");
  detail::require(grid >= 1, "grid must be >= 1");
  detail::require(sys.is_homeomorphism(), sys.name() + " is not a homeomorphism");
  IdentityPowerReport r;
  r.q = q;
  r.grid = grid;
  r.tol = tol;
  for (double x : uniform_grid(sys.space(), std::max<std::size_t>(grid, 2))) {
    double y = iterate(sys, x, 2L * q);
    r.max_displacement = std::max(r.max_displacement, metric(sys.space(), x, y));
  }
  r.passed = r.max_displacement < tol;
  return r;
}

MinimalityEvidence minimality_test(const DynSystem& sys, double tol_density,
                                   std::size_t iterates, const RotationOptions& rotation) {
  require_circle_homeo(sys);
  detail::require(tol_density > 0.0, "density tolerance must be positive");
  detail::require(iterates >= 2, "minimality test needs at least two iterates");
  RotationNumber rho = rotation_number(sys, rotation);
  if (rho.verdict != Rationality::irrational)
    detail::fail(ErrorKind::invalid_argument,
                 "minimality test applies to irrational rotation numbers; " + sys.name() +
                     " has a " + std::string(to_string(rho.verdict)) + " rotation number");
  MinimalityEvidence ev;
  ev.iterates = iterates;
  ev.tol_density = tol_density;
  ev.largest_gap = -1.0;
  for (int s = 0; s < ev.seeds; ++s) {
    std::vector<double> orbit(iterates);
    double x = s / static_cast<double>(ev.seeds);
    for (double& v : orbit) {
      v = x;
      x = sys.forward(x);
    }
    std::sort(orbit.begin(), orbit.end());
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      double a = orbit[i];
      double b = i + 1 < orbit.size() ? orbit[i + 1] : orbit[0] + 1.0;
      if (b - a > ev.largest_gap) {
        ev.largest_gap = b - a;
        ev.gap = ArcPoint(Space::circle, a, b);
      }
    }
  }
  ev.minimal = ev.largest_gap < tol_density;
  return ev;
}

MdimVerdict classify_mdim(const DynSystem& sys, const ClassifyOptions& options) {
  require_circle_homeo(sys);
  MdimVerdict out;
  out.budgets = options;
  out.orientation_reversing = sys.orientation() == Orientation::reversing;

  double x_star = 0.0;
  int q = 0;
  if (out.orientation_reversing) {
    // L(x) - x drops by 2 over one period, so it meets floor(L(0)) once.
    const double d0 = sys.lift(0.0);
    const double level = std::floor(d0);
    auto g = [&](double x) { return sys.lift(x) - x - level; };
    x_star = d0 == level ? 0.0 : settle(Space::circle, bisect_root(g, 0.0, 1.0));
    q = 1;
  } else {
    RotationNumber rho = rotation_number(sys, options.rotation);
    out.rotation = rho;
    if (rho.verdict == Rationality::undetermined)
      detail::fail(ErrorKind::undetermined,
                   "rotation number of " + sys.name() + " did not converge (Cauchy gap " +
                       format_double(rho.cauchy_gap) + ")");
    if (rho.verdict == Rationality::rational) {
      x_star = rho.periodic_point;
      q = static_cast<int>(rho.q);
    }
  }

  if (q > 0) {
    out.q = q;
    out.periodic_point = x_star;
    DynSystem cut = cut_at_periodic_point(sys, x_star, q);
    WanderingResult w = find_wandering_interval(cut, options.wandering);
    if (w.verdict == WanderingVerdict::square_identity) {
      IdentityPowerReport id =
          identity_power_test(sys, q, options.identity_tol, options.identity_grid);
      out.identity = id;
      if (!id.passed)
        detail::fail(ErrorKind::undetermined,
                     "the cut map squares to the identity on its grid but H^" +
                         std::to_string(2 * q) + " moves a grid point by " +
                         format_double(id.max_displacement));
      out.verdict = MdimClass::zero;
      out.reason = MdimReason::identity_power;
      return out;
    }
    ArcPoint arc(Space::circle, x_star + w.interval->a(), x_star + w.interval->b());
    WanderingCheck check = verify_wandering(sys, arc, 2 * q, options.wandering.horizon);
    if (!check.disjoint)
      detail::fail(ErrorKind::verification_failed,
                   "pulled-back wandering interval failed on the circle: " + check.failure);
    out.wandering = WanderingWitness{arc, 2 * q, check, w.interval};
    out.verdict = MdimClass::infinite;
    out.reason = MdimReason::wandering_interval_found;
    return out;
  }

  MinimalityEvidence ev =
      minimality_test(sys, options.tol_density, options.minimality_iterates, options.rotation);
  out.minimality = ev;
  if (ev.minimal) {
    out.verdict = MdimClass::zero;
    out.reason = MdimReason::conjugate_to_rotation;
    return out;
  }
  ArcPoint candidate(Space::circle, ev.gap.at(0.25), ev.gap.at(0.75));
  WanderingCheck check = verify_wandering(sys, candidate, 1, options.wandering.horizon);
  if (!check.disjoint) {
    std::ostringstream why;
    why << "no verified witness for " << sys.name() << ": orbits leave a gap of "
        << ev.largest_gap << " after " << ev.iterates
        << " iterates, but its middle half is not wandering (" << check.failure << ")";
    detail::fail(ErrorKind::undetermined, why.str());
  }
  out.wandering = WanderingWitness{candidate, 1, check, std::nullopt};
  out.verdict = MdimClass::infinite;
  out.reason = MdimReason::cantor_nonwandering;
  return out;
}

}  // namespace hypermdim
