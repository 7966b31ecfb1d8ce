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
#include <string_view>

#include "hypermdim/sets.hpp"
#include "hypermdim/system.hpp"
#include "hypermdim/wandering.hpp"

namespace hypermdim {

enum class Rationality { rational, irrational, undetermined };

std::string_view to_string(Rationality r);

struct RotationOptions {
  std::size_t iterates = 10000;
  double tol = 1e-9;
  int max_denominator = 64;
  std::size_t grid = 1000;       // scan for periodic points
  double cauchy_limit = 1e-3;    // larger Cauchy gaps give an undetermined verdict
};

struct RotationNumber {
  double value = 0.0;  // in [0,1)
  Rationality verdict = Rationality::undetermined;
  long p = 0;
  long q = 0;
  double periodic_point = 0.0;     // x with d(H^q(x), x) < tol when rational
  double periodic_residual = 0.0;  // |L^q(x) - x - P| at that point
  std::size_t iterates = 0;
  double cauchy_gap = 0.0;  // |rho_n - rho_{n/2}|
};

// Birkhoff estimate (L^n(0))/n. A rational verdict p/q is issued only after a
// point with d(H^q(x), x) < tol and exact period q has been located for a
// continued-fraction convergent p/q of the estimate (q <= max_denominator).
RotationNumber rotation_number(const DynSystem& sys, const RotationOptions& options = {});

struct IdentityPowerReport {
  bool passed = false;
  int q = 1;
  double max_displacement = 0.0;  // max over the grid of d(H^(2q)(x), x)
  std::size_t grid = 0;
  double tol = 0.0;
};

IdentityPowerReport identity_power_test(const DynSystem& sys, int q, double tol = 1e-9,
                                        std::size_t grid = 10000);

struct MinimalityEvidence {
  bool minimal = false;
  double largest_gap = 0.0;
  ArcPoint gap{Space::circle, 0.0, 0.0};  // the largest empty arc found
  std::size_t iterates = 0;
  int seeds = 8;
  double tol_density = 0.0;
};

// Orbits of the 8 seeds j/8 must each leave no empty arc of length
// tol_density or more. Rejects maps whose rotation number is not irrational.
MinimalityEvidence minimality_test(const DynSystem& sys, double tol_density,
                                   std::size_t iterates = 10000,
                                   const RotationOptions& rotation = {});

enum class MdimClass { zero, infinite };
enum class MdimReason {
  conjugate_to_rotation,
  identity_power,
  wandering_interval_found,
  cantor_nonwandering,
};

std::string_view to_string(MdimClass c);
std::string_view to_string(MdimReason r);

struct ClassifyOptions {
  RotationOptions rotation;
  double identity_tol = 1e-9;
  std::size_t identity_grid = 10000;
  WanderingOptions wandering;
  double tol_density = 0.01;
  std::size_t minimality_iterates = 10000;
};

struct WanderingWitness {
  ArcPoint arc;  // on the circle
  int power = 1;
  WanderingCheck check;
  std::optional<ArcPoint> cut_interval;  // the interval found for the cut map
};

struct MdimVerdict {
  MdimClass verdict = MdimClass::zero;
  MdimReason reason = MdimReason::identity_power;
  bool orientation_reversing = false;
  std::optional<RotationNumber> rotation;
  int q = 0;  // period of the cut point, 0 without one
  double periodic_point = 0.0;
  std::optional<IdentityPowerReport> identity;
  std::optional<WanderingWitness> wandering;
  std::optional<MinimalityEvidence> minimality;
  ClassifyOptions budgets;
};

// zero or infinite for circle homeomorphisms of either orientation. Throws
// ErrorKind::undetermined when no branch produces a verified witness.
MdimVerdict classify_mdim(const DynSystem& sys, const ClassifyOptions& options = {});

}  // namespace hypermdim
