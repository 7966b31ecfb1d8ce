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

#include <cstdint>
#include <type_traits>

#include <boost/math/constants/constants.hpp>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace hypermdim {

// 80 significant decimal digits with a 64-bit binary exponent. The wide
// exponent keeps orbits of strongly contracting maps (x -> x^2 has images
// like 2^-(2^40)) representable where double underflows to zero.
using Precise = boost::multiprecision::number<
    boost::multiprecision::cpp_bin_float<80, boost::multiprecision::digit_base_10,
                                         void, std::int64_t>,
    boost::multiprecision::et_off>;

inline constexpr int kPreciseDigits = 80;

namespace detail {

template <class R>
R pi_as() {
  if constexpr (std::is_same_v<R, double>) {
    return 3.14159265358979323846;
  } else {
    return boost::math::constants::pi<R>();
  }
}

template <class R>
R unit_frac(const R& x) {
  using std::floor;
  R f = x - floor(x);
  if (f >= R(1)) f -= R(1);
  if (f < R(0)) f = R(0);
  return f;
}

}  // namespace detail
}  // namespace hypermdim
