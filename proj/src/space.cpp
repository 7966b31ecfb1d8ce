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

#include "hypermdim/space.hpp"

#include <cmath>
#include <string>

#include "hypermdim/error.hpp"

namespace hypermdim {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_argument: return "invalid_argument";
    case ErrorKind::not_invertible: return "not_invertible";
    case ErrorKind::space_mismatch: return "space_mismatch";
    case ErrorKind::cap_exceeded: return "cap_exceeded";
    case ErrorKind::budget_exhausted: return "budget_exhausted";
    case ErrorKind::infeasible: return "infeasible";
    case ErrorKind::verification_failed: return "verification_failed";
    case ErrorKind::undetermined: return "undetermined";
  }
  return "unknown";
}

std::string_view to_string(Space space) {
  return space == Space::circle ? "circle" : "interval";
}

Space space_from_string(std::string_view name) {
  if (name == "circle") return Space::circle;
  if (name == "interval") return Space::interval;
  detail::fail(ErrorKind::invalid_argument,
               "unknown space '" + std::string(name) + "' (expected circle or interval)");
}

double normalize(Space space, double x) {
  detail::require(std::isfinite(x), "phase point must be finite");
  if (space == Space::circle) {
    double f = x - std::floor(x);
    return f >= 1.0 ? 0.0 : f;
  }
  detail::require(x >= -kSetTol && x <= 1.0 + kSetTol,
                  "interval point " + std::to_string(x) + " outside [0,1]");
  return std::min(1.0, std::max(0.0, x));
}

double settle(Space space, double x) {
  if (space == Space::circle) {
    double f = x - std::floor(x);
    return f >= 1.0 ? 0.0 : f;
  }
  return std::min(1.0, std::max(0.0, x));
}

double metric(Space space, double x, double y) {
  double d = std::fabs(x - y);
  if (space == Space::circle) return std::min(d, 1.0 - d);
  return d;
}

std::vector<double> uniform_grid(Space space, std::size_t n) {
  detail::require(n >= 1, "grid needs at least one point");
  std::vector<double> out(n);
  if (space == Space::circle) {
    for (std::size_t j = 0; j < n; ++j) out[j] = static_cast<double>(j) / static_cast<double>(n);
  } else {
    detail::require(n >= 2, "interval grid needs at least two points");
    for (std::size_t j = 0; j < n; ++j)
      out[j] = static_cast<double>(j) / static_cast<double>(n - 1);
  }
  return out;
}

std::vector<double> window_grid(Space space, double lo, double hi, std::size_t n) {
  detail::require(n >= 2, "window grid needs at least two points");
  detail::require(hi > lo, "window must have hi > lo");
  std::vector<double> out(n);
  double step = (hi - lo) / static_cast<double>(n - 1);
  for (std::size_t j = 0; j < n; ++j) out[j] = settle(space, lo + step * static_cast<double>(j));
  return out;
}

double distance(const PhasePoint& x, const PhasePoint& y) {
  if (x.space != y.space)
    detail::fail(ErrorKind::space_mismatch, "points live in different spaces");
  return metric(x.space, x.value, y.value);
}

}  // namespace hypermdim
