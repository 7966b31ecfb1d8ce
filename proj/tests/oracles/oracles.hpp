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

// Brute-force reference implementations. Nothing here calls into the library.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

namespace oracle {

using Map = std::function<double(double)>;

inline double circle_dist(double x, double y) {
  double d = std::fmod(std::fabs(x - y), 1.0);
  return std::min(d, 1.0 - d);
}

inline double line_dist(double x, double y) { return std::fabs(x - y); }

inline double dist(bool circle, double x, double y) {
  return circle ? circle_dist(x, y) : line_dist(x, y);
}

inline double wrap(double x) {
  double r = std::fmod(x, 1.0);
  if (r < 0) r += 1.0;
  return r >= 1.0 ? 0.0 : r;
}

inline Map doubling() {
  return [](double x) { return wrap(2.0 * x); };
}
inline Map rotation(double theta) {
  return [theta](double x) { return wrap(x + theta); };
}
inline Map tent(double s) {
  return [s](double x) { return x <= 0.5 ? s * x : s * (1.0 - x); };
}
inline Map square() {
  return [](double x) { return x * x; };
}

// d_k by direct iteration.
inline double dk(const Map& f, bool circle, double x, double y, int k) {
  double best = 0.0;
  for (int i = 0; i < k; ++i) {
    best = std::max(best, dist(circle, x, y));
    x = f(x);
    y = f(y);
  }
  return best;
}

inline double hausdorff(bool circle, const std::vector<double>& a, const std::vector<double>& b) {
  auto directed = [&](const std::vector<double>& p, const std::vector<double>& q) {
    double worst = 0.0;
    for (double x : p) {
      double best = std::numeric_limits<double>::infinity();
      for (double y : q) best = std::min(best, dist(circle, x, y));
      worst = std::max(worst, best);
    }
    return worst;
  };
  return std::max(directed(a, b), directed(b, a));
}

inline std::vector<double> image(const Map& f, const std::vector<double>& a) {
  std::vector<double> out;
  for (double x : a) out.push_back(f(x));
  return out;
}

// D_k on finite sets by iterating every element.
inline double hyper_dk(const Map& f, bool circle, std::vector<double> a, std::vector<double> b,
                       int k) {
  double best = 0.0;
  for (int i = 0; i < k; ++i) {
    best = std::max(best, hausdorff(circle, a, b));
    a = image(f, a);
    b = image(f, b);
  }
  return best;
}

// n+1 evenly spaced samples of the arc from a running forward by length len.
inline std::vector<double> sample_arc(bool circle, double a, double len, int n) {
  std::vector<double> out;
  for (int i = 0; i <= n; ++i) {
    double x = a + len * i / n;
    out.push_back(circle ? wrap(x) : x);
  }
  return out;
}

// Solves lift(x) = y for an increasing lift by bisection on [lo, hi].
inline double bisect_inverse(const Map& lift, double y, double lo, double hi) {
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    if (lift(mid) < y)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

// Largest independent set size by subset enumeration (n <= 22).
inline int brute_mis(const std::vector<std::vector<bool>>& adj) {
  const int n = static_cast<int>(adj.size());
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    int size = __builtin_popcount(mask);
    if (size <= best) continue;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      if (mask >> i & 1u)
        for (int j = i + 1; j < n && ok; ++j)
          if ((mask >> j & 1u) && adj[i][j]) ok = false;
    if (ok) best = size;
  }
  return best;
}

// Fewest sets whose union is all targets, -1 if impossible (sets <= 22).
inline int brute_cover(const std::vector<std::vector<int>>& sets, int targets) {
  const int n = static_cast<int>(sets.size());
  int best = -1;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    int size = __builtin_popcount(mask);
    if (best != -1 && size >= best) continue;
    std::vector<bool> hit(targets, false);
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1u)
        for (int t : sets[i]) hit[t] = true;
    if (std::all_of(hit.begin(), hit.end(), [](bool h) { return h; })) best = size;
  }
  return best;
}

// Maximum (k, eps)-separated subfamily of a base pool.
inline int brute_sep(const Map& f, bool circle, const std::vector<double>& pool, int k,
                     double eps) {
  std::vector<std::vector<bool>> adj(pool.size(), std::vector<bool>(pool.size(), false));
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = 0; j < pool.size(); ++j)
      adj[i][j] = i != j && dk(f, circle, pool[i], pool[j], k) < eps;
  return brute_mis(adj);
}

// Fewest pool points whose open (k, eps)-balls cover the targets.
inline int brute_span(const Map& f, bool circle, const std::vector<double>& pool,
                      const std::vector<double>& targets, int k, double eps) {
  std::vector<std::vector<int>> sets(pool.size());
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t t = 0; t < targets.size(); ++t)
      if (dk(f, circle, pool[i], targets[t], k) < eps) sets[i].push_back(static_cast<int>(t));
  return brute_cover(sets, static_cast<int>(targets.size()));
}

}  // namespace oracle
