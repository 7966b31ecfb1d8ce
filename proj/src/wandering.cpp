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

#include "hypermdim/wandering.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <vector>

#include "hypermdim/error.hpp"

namespace hypermdim {
namespace {

struct PreciseArc {
  long n;
  Precise start;   // interval: left end; circle: counterclockwise start in [0,1)
  Precise length;  // nonnegative
};

Precise margin() {
  static const Precise m = boost::multiprecision::pow(Precise(10), -(kPreciseDigits - 20));
  return m;
}

double log10_of(const Precise& x) {
  if (x <= 0) return -std::numeric_limits<double>::infinity();
  return static_cast<double>(boost::multiprecision::log10(x));
}

Precise larger(const Precise& a, const Precise& b) { return a < b ? b : a; }

}  // namespace

std::string_view to_string(WanderingVerdict verdict) {
  return verdict == WanderingVerdict::wandering_interval ? "wandering-interval" : "T^2-identity";
}

WanderingCheck verify_wandering(const DynSystem& sys, const ArcPoint& arc, int power,
                                int horizon) {
  detail::require(sys.is_homeomorphism(), "wandering verification needs a homeomorphism");
  detail::require(power >= 1, "power must be >= 1");
  detail::require(horizon >= 0, "horizon must be >= 0");
  detail::require(arc.space() == sys.space(), "arc and system live in different spaces");
  const bool circle = sys.space() == Space::circle;
  const bool flips = sys.orientation() == Orientation::reversing && power % 2 == 1;

  WanderingCheck check;
  check.power = power;
  check.horizon = horizon;
  std::vector<PreciseArc> images;
  auto record = [&](long n, const Precise& ea, const Precise& eb) {
    Precise u = ea, v = eb;
    if (flips && (n % 2 != 0)) std::swap(u, v);
    if (circle) {
      images.push_back({n, u, detail::unit_frac(Precise(v - u))});
    } else {
      if (v < u) std::swap(u, v);
      images.push_back({n, u, v - u});
    }
  };
  Precise a(arc.a()), b(arc.b());
  record(0, a, b);
  Precise fa = a, fb = b, ba = a, bb = b;
  for (long n = 1; n <= horizon; ++n) {
    for (int i = 0; i < power; ++i) {
      fa = sys.forward(fa);
      fb = sys.forward(fb);
      ba = sys.inverse(ba);
      bb = sys.inverse(bb);
    }
    record(n, fa, fb);
    record(-n, ba, bb);
  }
  check.images = images.size();

  Precise min_gap = 2;
  std::ostringstream why;
  for (const PreciseArc& im : images) {
    Precise scale = larger(boost::multiprecision::abs(im.start),
                           boost::multiprecision::abs(im.start + im.length));
    if (im.length <= margin() * scale) {
      why << "image n=" << im.n << " collapsed below working precision";
      break;
    }
  }
  if (why.str().empty() && !circle) {
    std::sort(images.begin(), images.end(),
              [](const PreciseArc& x, const PreciseArc& y) { return x.start < y.start; });
    for (std::size_t i = 0; i + 1 < images.size(); ++i) {
      Precise end = images[i].start + images[i].length;
      Precise gap = images[i + 1].start - end;
      Precise scale = larger(boost::multiprecision::abs(end),
                             boost::multiprecision::abs(images[i + 1].start));
      if (gap <= margin() * scale) {
        why << "images n=" << images[i].n << " and n=" << images[i + 1].n << " overlap";
        break;
      }
      min_gap = std::min(min_gap, gap);
    }
  } else if (why.str().empty()) {
    for (std::size_t i = 0; i < images.size() && why.str().empty(); ++i) {
      for (std::size_t j = i + 1; j < images.size(); ++j) {
        const PreciseArc& p = images[i];
        const PreciseArc& q = images[j];
        Precise off = detail::unit_frac(Precise(q.start - p.start));
        Precise gap1 = off - p.length;            // from the end of p to the start of q
        Precise gap2 = (1 - off) - q.length;      // from the end of q to the start of p
        Precise scale = larger(larger(p.start, q.start), margin());
        if (gap1 <= margin() * scale || gap2 <= margin() * scale) {
          why << "images n=" << p.n << " and n=" << q.n << " overlap";
          break;
        }
        min_gap = std::min({min_gap, gap1, gap2});
      }
    }
  }
  check.failure = why.str();
  check.disjoint = check.failure.empty();
  if (check.disjoint) {
    check.min_gap = static_cast<double>(min_gap);
    check.min_log10_gap = log10_of(min_gap);
  }
  return check;
}

WanderingResult find_wandering_interval(const DynSystem& sys, const WanderingOptions& options) {
  detail::require(sys.space() == Space::interval && sys.is_homeomorphism(),
                  "find_wandering_interval needs an interval homeomorphism");
  detail::require(options.grid >= 2, "grid must have at least two points");
  detail::require(options.tol > 0.0, "tolerance must be positive");
  const std::vector<double> grid = uniform_grid(Space::interval, options.grid);
  std::vector<double> moved(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j)
    moved[j] = sys.forward(sys.forward(grid[j])) - grid[j];

  WanderingResult result;
  std::vector<std::size_t> order(grid.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return std::fabs(moved[i]) > std::fabs(moved[j]);
  });
  result.max_square_displacement = std::fabs(moved[order.front()]);
  if (result.max_square_displacement < options.tol) {
    result.verdict = WanderingVerdict::square_identity;
    return result;
  }
  std::string last_failure;
  for (std::size_t attempt = 0; attempt < std::min<std::size_t>(10, order.size()); ++attempt) {
    std::size_t j = order[attempt];
    if (std::fabs(moved[j]) < options.tol) break;
    double x = grid[j];
    double s = x + moved[j];
    double lo = std::min(x, s), hi = std::max(x, s);
    double quarter = 0.25 * (hi - lo);
    ArcPoint candidate(Space::interval, lo + quarter, hi - quarter);
    WanderingCheck check = verify_wandering(sys, candidate, 2, options.horizon);
    if (check.disjoint) {
      result.verdict = WanderingVerdict::wandering_interval;
      result.interval = candidate;
      result.anchor = x;
      result.anchor_image = s;
      result.check = check;
      return result;
    }
    last_failure = check.failure;
  }
  detail::fail(ErrorKind::verification_failed,
               "T^2 moves points but no candidate interval verified wandering: " + last_failure);
}

}  // namespace hypermdim
