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
#include <string_view>
#include <vector>

namespace hypermdim {

enum class Space { circle, interval };

std::string_view to_string(Space space);
Space space_from_string(std::string_view name);

// Tolerance used for set membership, equality and de-duplication.
inline constexpr double kSetTol = 1e-12;

// Brings x into the canonical range: [0,1) on the circle, [0,1] on the
// interval. Interval values further than kSetTol outside [0,1] are rejected.
double normalize(Space space, double x);

// As normalize, but clamps interval values instead of rejecting them. Used on
// map outputs where rounding can leave the range by an ulp.
double settle(Space space, double x);

double metric(Space space, double x, double y);

// Circle: j/n for j < n. Interval: j/(n-1) for j < n.
std::vector<double> uniform_grid(Space space, std::size_t n);

// n points spaced uniformly on [lo, hi], endpoints included (n >= 2).
std::vector<double> window_grid(Space space, double lo, double hi, std::size_t n);

struct PhasePoint {
  Space space = Space::circle;
  double value = 0.0;

  static PhasePoint on(Space space, double value) { return {space, normalize(space, value)}; }
};

double distance(const PhasePoint& x, const PhasePoint& y);

}  // namespace hypermdim
