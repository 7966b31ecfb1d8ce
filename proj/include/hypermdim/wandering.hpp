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
#include <optional>
#include <string>

#include "hypermdim/sets.hpp"
#include "hypermdim/system.hpp"

namespace hypermdim {

struct WanderingCheck {
  bool disjoint = false;
  int power = 1;
  int horizon = 0;
  std::size_t images = 0;
  double min_gap = 0.0;        // may underflow to 0 for strongly contracting maps
  double min_log10_gap = 0.0;  // exact exponent of the smallest gap
  std::string failure;         // empty when disjoint
};

// Checks that the images G^n(arc), |n| <= horizon, with G = sys^power are
// pairwise disjoint. Endpoints are propagated in Precise arithmetic and every
// gap must exceed the working precision relative to the endpoints it
// separates.
WanderingCheck verify_wandering(const DynSystem& sys, const ArcPoint& arc, int power,
                                int horizon);

enum class WanderingVerdict { wandering_interval, square_identity };

std::string_view to_string(WanderingVerdict verdict);

struct WanderingOptions {
  int horizon = 20;
  std::size_t grid = 1000;
  double tol = 1e-9;
};

struct WanderingResult {
  WanderingVerdict verdict = WanderingVerdict::square_identity;
  std::optional<ArcPoint> interval;
  double anchor = 0.0;        // x with T^2(x) != x
  double anchor_image = 0.0;  // T^2(x)
  double max_square_displacement = 0.0;
  WanderingCheck check;
};

// For an interval homeomorphism T: either T^2 moves no grid point by tol or
// more (verdict square_identity), or a closed interval J inside the gap
// between some x and T^2(x), verified wandering for T^2.
WanderingResult find_wandering_interval(const DynSystem& sys, const WanderingOptions& options = {});

}  // namespace hypermdim
