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
#include <vector>

#include "hypermdim/sets.hpp"
#include "hypermdim/system.hpp"

namespace hypermdim {

double distance_to_set(double x, const FinitePoint& set);

// max over a in A of the distance from a to B.
double directed_hausdorff(const FinitePoint& a, const FinitePoint& b);
double hausdorff(const FinitePoint& a, const FinitePoint& b);

double distance_to_arc(double x, const ArcPoint& arc);
double directed_hausdorff_arcs(const ArcPoint& a, const ArcPoint& b);
double hausdorff_arcs(const ArcPoint& a, const ArcPoint& b);

FinitePoint induced_apply(const DynSystem& sys, const FinitePoint& set);
ArcPoint induced_apply_arc(const DynSystem& sys, const ArcPoint& arc);

double induced_dyn_distance(const DynSystem& sys, const FinitePoint& a, const FinitePoint& b,
                            int k);
double induced_dyn_distance(const DynSystem& sys, const ArcPoint& a, const ArcPoint& b, int k);

struct DynBallTest {
  bool inside = false;    // D_k(center, C) < eps
  double distance = 0.0;  // D_k(center, C)
  bool coverage = false;  // every c in C is d_k-close to some marked point
  bool meeting = false;   // every marked point is d_k-close to some c in C
  bool decomposed() const { return coverage && meeting; }
};

// Membership of C in the D_k ball of radius eps about center. The points of
// center are its marked points for the decomposed test. decomposed() implies
// inside; the converse holds for singleton centers.
DynBallTest in_dyn_ball(const DynSystem& sys, const FinitePoint& center, const FinitePoint& c,
                        int k, double eps);

inline constexpr std::uint64_t kDefaultHyperNetCap = 1'000'000;

// Sum over c <= max_card of (grid choose c), saturating at UINT64_MAX.
std::uint64_t hyper_net_size(std::size_t grid, std::size_t max_card);

// All subsets of uniform_grid(space, grid) with 1..max_card elements, ordered
// by cardinality and then lexicographically by grid index.
std::vector<FinitePoint> hyper_net(Space space, std::size_t grid, std::size_t max_card,
                                   std::uint64_t cap = kDefaultHyperNetCap);

}  // namespace hypermdim
