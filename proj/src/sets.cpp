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

#include "hypermdim/sets.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>

#include "hypermdim/error.hpp"

namespace hypermdim {

FinitePoint::FinitePoint(Space space, std::vector<double> values) : space_(space) {
  detail::require(!values.empty(), "a FinitePoint must be nonempty");
  for (double& v : values) v = normalize(space, v);
  std::sort(values.begin(), values.end());
  values_.reserve(values.size());
  for (double v : values) {
    if (values_.empty() || v - values_.back() > kSetTol) values_.push_back(v);
  }
  if (space == Space::circle && values_.size() > 1 &&
      values_.front() + 1.0 - values_.back() <= kSetTol) {
    values_.pop_back();
  }
}

ArcPoint::ArcPoint(Space space, double a, double b)
    : space_(space), a_(normalize(space, a)), b_(normalize(space, b)) {
  if (space == Space::interval) {
    detail::require(a_ <= b_, "interval arc needs a <= b");
  }
}

double ArcPoint::length() const {
  if (space_ == Space::interval) return b_ - a_;
  double len = b_ - a_;
  return len < 0.0 ? len + 1.0 : len;
}

double ArcPoint::at(double t) const {
  return settle(space_, a_ + t * length());
}

bool ArcPoint::contains(double x) const {
  if (space_ == Space::interval) return x >= a_ - kSetTol && x <= b_ + kSetTol;
  double off = x - a_;
  if (off < 0.0) off += 1.0;
  return off <= length() + kSetTol || off >= 1.0 - kSetTol;
}

FinitePoint ArcPoint::sample(std::size_t n) const {
  detail::require(n >= 2, "arc sampling needs at least two points");
  std::vector<double> pts(n);
  for (std::size_t j = 0; j < n; ++j)
    pts[j] = at(static_cast<double>(j) / static_cast<double>(n - 1));
  return FinitePoint(space_, std::move(pts));
}

namespace {

bool near_some(Space space, double x, const std::vector<double>& sorted) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), x);
  auto close = [&](double y) { return metric(space, x, y) <= kSetTol; };
  if (it != sorted.end() && close(*it)) return true;
  if (it != sorted.begin() && close(*std::prev(it))) return true;
  return space == Space::circle && (close(sorted.front()) || close(sorted.back()));
}

}  // namespace

bool FinitePoint::operator==(const FinitePoint& other) const {
  if (space_ != other.space_) return false;
  for (double x : values_)
    if (!near_some(space_, x, other.values_)) return false;
  for (double y : other.values_)
    if (!near_some(space_, y, values_)) return false;
  return true;
}

bool ArcPoint::operator==(const ArcPoint& other) const {
  return space_ == other.space_ && metric(space_, a_, other.a_) <= kSetTol &&
         metric(space_, b_, other.b_) <= kSetTol;
}

}  // namespace hypermdim
