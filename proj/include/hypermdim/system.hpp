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

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hypermdim/precise.hpp"
#include "hypermdim/sets.hpp"
#include "hypermdim/space.hpp"

namespace hypermdim {

enum class Orientation { preserving, reversing, none };

std::string_view to_string(Orientation orientation);

// Catalog entry plus parameters. Recognized kinds and their parameters:
//   rotation        theta
//   doubling        -
//   tent            slope in (0, 2]
//   north_south     lambda in (0, 1)
//   morse_smale     lambda in (0, 1), period q in [1, 64]
//   reflection      space (optional, default circle)
//   identity        space (optional, default circle)
//   pl_circle       breakpoints of one lift period
//   pl_interval     breakpoints on [0,1]
//   interval_square -
struct SystemSpec {
  std::string kind;
  std::map<std::string, double> params;
  std::vector<std::pair<double, double>> breakpoints;
  std::optional<Space> space;

  bool operator==(const SystemSpec&) const = default;
};

namespace detail {
class MapKernel;
}

struct SystemTraits {
  Space space = Space::circle;
  bool invertible = false;
  Orientation orientation = Orientation::none;
  bool has_lift = false;
};

// Immutable handle to a continuous self-map of the circle or the interval.
// Every map evaluates in double and in Precise; circle homeomorphisms also
// expose their lift and its inverse.
class DynSystem {
 public:
  DynSystem(std::shared_ptr<const detail::MapKernel> kernel, SystemTraits traits,
            std::string name, SystemSpec spec);

  Space space() const { return traits_.space; }
  bool invertible() const { return traits_.invertible; }
  Orientation orientation() const { return traits_.orientation; }
  bool has_lift() const { return traits_.has_lift; }
  bool is_homeomorphism() const { return traits_.invertible; }
  const std::string& name() const { return name_; }
  const SystemSpec& spec() const { return spec_; }

  double forward(double x) const;
  Precise forward(const Precise& x) const;
  double inverse(double x) const;
  Precise inverse(const Precise& x) const;
  double lift(double x) const;
  Precise lift(const Precise& x) const;
  double lift_inverse(double y) const;
  Precise lift_inverse(const Precise& y) const;

 private:
  void need_inverse() const;
  void need_lift() const;

  std::shared_ptr<const detail::MapKernel> kernel_;
  SystemTraits traits_;
  std::string name_;
  SystemSpec spec_;
};

DynSystem make_system(const SystemSpec& spec);
DynSystem make_system(const std::string& kind, std::map<std::string, double> params = {});

// p-fold composite, p >= 1. Negative p composes the inverse.
DynSystem power(const DynSystem& sys, int p);

// psi . h . psi^-1 for circle homeomorphisms h and psi.
DynSystem conjugate(const DynSystem& h, const DynSystem& psi);

// Interval homeomorphism t -> H^q(x + t) - H^q(x) read through the cut of the
// circle at a q-periodic point x of the circle homeomorphism h.
DynSystem cut_at_periodic_point(const DynSystem& h, double x, int q);

double iterate(const DynSystem& sys, double x, long n);
Precise iterate(const DynSystem& sys, Precise x, long n);
PhasePoint iterate(const DynSystem& sys, const PhasePoint& x, long n);

// Lift of the n-fold composite, n >= 0, for systems with a lift.
double iterate_lift(const DynSystem& sys, double x, long n);

double dyn_distance(const DynSystem& sys, double x, double y, int k);
double dyn_distance(const DynSystem& sys, const PhasePoint& x, const PhasePoint& y, int k);

struct OrbitSegment {
  double base = 0.0;
  std::vector<double> points;

  std::size_t length() const { return points.size(); }
};

OrbitSegment orbit_segment(const DynSystem& sys, double x, int k);

enum class Direction { forward, backward };

// Iterates T^n(x) (or T^-n(x)) for burn <= n < burn + window, grouped by
// single linkage at distance tol. A cluster whose extent is at most tol is
// reported by its midpoint; a wider cluster by a tol-spaced net of its hull,
// so the result stays within tol of the iterates in Hausdorff distance.
FinitePoint omega_limit_estimate(const DynSystem& sys, double x, long burn, long window,
                                 double tol, Direction direction = Direction::forward);

}  // namespace hypermdim
