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

#include "hypermdim/hyperspace.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "hypermdim/error.hpp"

namespace hypermdim {
namespace {

void same_space(Space a, Space b) {
  if (a != b) detail::fail(ErrorKind::space_mismatch, "sets live in different spaces");
}

}  // namespace

double distance_to_set(double x, const FinitePoint& set) {
  const auto& v = set.values();
  Space space = set.space();
  auto it = std::lower_bound(v.begin(), v.end(), x);
  double best = std::numeric_limits<double>::infinity();
  if (it != v.end()) best = metric(space, x, *it);
  if (it != v.begin()) best = std::min(best, metric(space, x, *(it - 1)));
  if (space == Space::circle) {
    best = std::min(best, metric(space, x, v.front()));
    best = std::min(best, metric(space, x, v.back()));
  }
  return best;
}

double directed_hausdorff(const FinitePoint& a, const FinitePoint& b) {
  same_space(a.space(), b.space());
  double h = 0.0;
  for (double x : a.values()) h = std::max(h, distance_to_set(x, b));
  return h;
}

double hausdorff(const FinitePoint& a, const FinitePoint& b) {
  return std::max(directed_hausdorff(a, b), directed_hausdorff(b, a));
}

double distance_to_arc(double x, const ArcPoint& arc) {
  if (arc.space() == Space::interval) return std::max({0.0, arc.a() - x, x - arc.b()});
  if (arc.contains(x)) return 0.0;
  return std::min(metric(Space::circle, x, arc.a()), metric(Space::circle, x, arc.b()));
}

double directed_hausdorff_arcs(const ArcPoint& a, const ArcPoint& b) {
  same_space(a.space(), b.space());
  // The distance to b is convex along the interval and a tent over the gap of
  // b on the circle, so its maximum over a sits at an endpoint of a or at the
  // middle of b's gap.
  double h = std::max(distance_to_arc(a.a(), b), distance_to_arc(a.b(), b));
  if (a.space() == Space::circle) {
    double mid = settle(Space::circle, b.b() + 0.5 * (1.0 - b.length()));
    if (a.contains(mid)) h = std::max(h, distance_to_arc(mid, b));
  }
  return h;
}

double hausdorff_arcs(const ArcPoint& a, const ArcPoint& b) {
  return std::max(directed_hausdorff_arcs(a, b), directed_hausdorff_arcs(b, a));
}

FinitePoint induced_apply(const DynSystem& sys, const FinitePoint& set) {
  same_space(sys.space(), set.space());
  std::vector<double> image;
  image.reserve(set.size());
  for (double x : set.values()) image.push_back(sys.forward(x));
  return FinitePoint(set.space(), std::move(image));
}

ArcPoint induced_apply_arc(const DynSystem& sys, const ArcPoint& arc) {
  same_space(sys.space(), arc.space());
  if (!sys.is_homeomorphism())
    detail::fail(ErrorKind::not_invertible,
                 "arc images need a homeomorphism; " + sys.name() + " is not one");
  double fa = sys.forward(arc.a());
  double fb = sys.forward(arc.b());
  if (sys.orientation() == Orientation::reversing) std::swap(fa, fb);
  return ArcPoint(arc.space(), fa, fb);
}

double induced_dyn_distance(const DynSystem& sys, const FinitePoint& a, const FinitePoint& b,
                            int k) {
  detail::require(k >= 1, "dynamical distance needs k >= 1");
  same_space(a.space(), b.space());
  FinitePoint x = a, y = b;
  double d = hausdorff(x, y);
  for (int i = 1; i < k; ++i) {
    x = induced_apply(sys, x);
    y = induced_apply(sys, y);
    d = std::max(d, hausdorff(x, y));
  }
  return d;
}

double induced_dyn_distance(const DynSystem& sys, const ArcPoint& a, const ArcPoint& b, int k) {
  detail::require(k >= 1, "dynamical distance needs k >= 1");
  ArcPoint x = a, y = b;
  double d = hausdorff_arcs(x, y);
  for (int i = 1; i < k; ++i) {
    x = induced_apply_arc(sys, x);
    y = induced_apply_arc(sys, y);
    d = std::max(d, hausdorff_arcs(x, y));
  }
  return d;
}

DynBallTest in_dyn_ball(const DynSystem& sys, const FinitePoint& center, const FinitePoint& c,
                        int k, double eps) {
  detail::require(k >= 1, "dynamical ball needs k >= 1");
  detail::require(eps > 0.0, "dynamical ball needs eps > 0");
  DynBallTest t;
  t.distance = induced_dyn_distance(sys, center, c, k);
  t.inside = t.distance < eps;
  const auto& marks = center.values();
  const auto& pts = c.values();
  std::vector<std::vector<double>> d(pts.size(), std::vector<double>(marks.size()));
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = 0; j < marks.size(); ++j) d[i][j] = dyn_distance(sys, pts[i], marks[j], k);
  t.coverage = std::all_of(d.begin(), d.end(), [&](const std::vector<double>& row) {
    return *std::min_element(row.begin(), row.end()) < eps;
  });
  t.meeting = true;
  for (std::size_t j = 0; j < marks.size() && t.meeting; ++j) {
    bool met = false;
    for (std::size_t i = 0; i < pts.size() && !met; ++i) met = d[i][j] < eps;
    t.meeting = met;
  }
  return t;
}

std::uint64_t hyper_net_size(std::size_t grid, std::size_t max_card) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 0;
  std::uint64_t binom = 1;  // (grid choose c), built incrementally
  for (std::size_t c = 1; c <= std::min(max_card, grid); ++c) {
    // binom * (grid - c + 1) / c is exact at every step.
    unsigned __int128 next = static_cast<unsigned __int128>(binom) * (grid - c + 1) / c;
    if (next > kMax) return kMax;
    binom = static_cast<std::uint64_t>(next);
    if (total > kMax - binom) return kMax;
    total += binom;
  }
  return total;
}

std::vector<FinitePoint> hyper_net(Space space, std::size_t grid, std::size_t max_card,
                                   std::uint64_t cap) {
  detail::require(grid >= 2, "hyper_net needs grid >= 2");
  detail::require(max_card >= 1, "hyper_net needs max_card >= 1");
  std::uint64_t size = hyper_net_size(grid, max_card);
  if (size > cap)
    detail::fail(ErrorKind::cap_exceeded, "hyper_net would enumerate " + std::to_string(size) +
                                              " sets, above the cap of " + std::to_string(cap));
  const std::vector<double> pts = uniform_grid(space, grid);
  std::vector<FinitePoint> out;
  out.reserve(static_cast<std::size_t>(size));
  for (std::size_t card = 1; card <= std::min(max_card, grid); ++card) {
    std::vector<std::size_t> idx(card);
    for (std::size_t j = 0; j < card; ++j) idx[j] = j;
    while (true) {
      std::vector<double> members(card);
      for (std::size_t j = 0; j < card; ++j) members[j] = pts[idx[j]];
      out.emplace_back(space, std::move(members));
      std::size_t pos = card;
      while (pos > 0 && idx[pos - 1] == grid - card + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t j = pos; j < card; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return out;
}

}  // namespace hypermdim
