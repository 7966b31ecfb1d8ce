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
#include <initializer_list>
#include <span>
#include <vector>

#include "hypermdim/space.hpp"

namespace hypermdim {

// A nonempty finite subset of the phase space. Points are normalized, sorted
// ascending and de-duplicated at kSetTol (on the circle, 0 and 1-1e-13 merge).
class FinitePoint {
 public:
  FinitePoint(Space space, std::vector<double> values);
  FinitePoint(Space space, std::initializer_list<double> values)
      : FinitePoint(space, std::vector<double>(values)) {}

  static FinitePoint singleton(Space space, double x) { return FinitePoint(space, {x}); }

  Space space() const { return space_; }
  std::span<const double> points() const { return values_; }
  const std::vector<double>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }

  // Set equality at kSetTol: every point of each set lies within kSetTol of the other.
  bool operator==(const FinitePoint& other) const;

 private:
  Space space_;
  std::vector<double> values_;
};

// Closed arc from a counterclockwise to b on the circle, or [a, b] on the
// interval. a == b is a singleton; the full circle is not representable.
class ArcPoint {
 public:
  ArcPoint(Space space, double a, double b);

  Space space() const { return space_; }
  double a() const { return a_; }
  double b() const { return b_; }
  double length() const;

  // Point at parameter t in [0,1]; t = 0 gives a and t = 1 gives b.
  double at(double t) const;
  bool contains(double x) const;

  // n >= 2 evenly spaced points including both endpoints.
  FinitePoint sample(std::size_t n) const;

  // Endpoints equal at kSetTol.
  bool operator==(const ArcPoint& other) const;

 private:
  Space space_;
  double a_;
  double b_;
};

}  // namespace hypermdim
