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

#include "hypermdim/explosion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <set>
#include <sstream>

#include "hypermdim/error.hpp"
#include "hypermdim/graph_search.hpp"
#include "hypermdim/hyperspace.hpp"
#include "hypermdim/parallel.hpp"

namespace hypermdim {

std::string_view to_string(Selection selection) {
  return selection == Selection::prefix ? "prefix" : "isolated";
}

Selection selection_from_string(std::string_view name) {
  if (name == "prefix") return Selection::prefix;
  if (name == "isolated") return Selection::isolated;
  detail::fail(ErrorKind::invalid_argument,
               "unknown selection '" + std::string(name) + "' (expected prefix or isolated)");
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// orbit[p][t] = T^t(family[p]) for t < k.
std::vector<std::vector<double>> orbits(const DynSystem& sys, const std::vector<double>& pts,
                                        int k) {
  std::vector<std::vector<double>> out(pts.size());
  for (std::size_t p = 0; p < pts.size(); ++p) out[p] = orbit_segment(sys, pts[p], k).points;
  return out;
}

// Pairs of subsets compared through per-time tables of
// nearest[t][i][mask] = min over j in mask of d(T^t p_i, T^t p_j).
SubsetVerification exhaustive_pairs(const DynSystem& sys, const std::vector<double>& family,
                                    int k, double eps) {
  const std::size_t n = family.size();
  const std::uint64_t masks = std::uint64_t{1} << n;
  const auto orb = orbits(sys, family, k);
  std::vector<double> nearest(static_cast<std::size_t>(k) * n * masks, kInf);
  auto slot = [&](int t, std::size_t i, std::uint64_t m) -> double& {
    return nearest[(static_cast<std::size_t>(t) * n + i) * masks + m];
  };
  for (int t = 0; t < k; ++t) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::uint64_t m = 1; m < masks; ++m) {
        auto low = static_cast<std::size_t>(__builtin_ctzll(m));
        double d = metric(sys.space(), orb[i][t], orb[low][t]);
        slot(t, i, m) = std::min(slot(t, i, m & (m - 1)), d);
      }
    }
  }
  struct Partial {
    std::uint64_t pairs = 0, violations = 0;
    double min = kInf;
    std::uint64_t a = 0, b = 0;
  };
  std::vector<Partial> partial(masks);
  parallel_for(masks - 1, [&](std::size_t idx) {
    const std::uint64_t a = idx + 1;
    Partial& acc = partial[a];
    for (std::uint64_t b = a + 1; b < masks; ++b) {
      double d = 0.0;
      for (int t = 0; t < k; ++t) {
        for (std::uint64_t m = a; m; m &= m - 1)
          d = std::max(d, slot(t, static_cast<std::size_t>(__builtin_ctzll(m)), b));
        for (std::uint64_t m = b; m; m &= m - 1)
          d = std::max(d, slot(t, static_cast<std::size_t>(__builtin_ctzll(m)), a));
      }
      ++acc.pairs;
      if (d < eps) ++acc.violations;
      if (d < acc.min) {
        acc.min = d;
        acc.a = a;
        acc.b = b;
      }
    }
  });
  SubsetVerification v;
  v.mode = "exhaustive";
  v.min_distance = kInf;
  for (const Partial& p : partial) {
    v.pairs_checked += p.pairs;
    v.violations += p.violations;
    if (p.min < v.min_distance) {
      v.min_distance = p.min;
      v.witness_a = p.a;
      v.witness_b = p.b;
    }
  }
  return v;
}

SubsetVerification sampled_pairs(const DynSystem& sys, const std::vector<double>& family, int k,
                                 double eps, std::uint64_t samples, std::uint64_t seed) {
  const std::uint64_t top = (std::uint64_t{1} << family.size()) - 1;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> pick(1, top);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs(samples);
  for (auto& pr : pairs) {
    pr.first = pick(rng);
    do pr.second = pick(rng); while (pr.second == pr.first);
  }
  std::vector<double> dist(samples);
  parallel_for(samples, [&](std::size_t s) {
    dist[s] = induced_dyn_distance(sys, subset_of(sys.space(), family, pairs[s].first),
                                   subset_of(sys.space(), family, pairs[s].second), k);
  });
  SubsetVerification v;
  v.mode = "sampled";
  v.seed = seed;
  v.pairs_checked = samples;
  v.min_distance = kInf;
  for (std::size_t s = 0; s < samples; ++s) {
    if (dist[s] < eps) ++v.violations;
    if (dist[s] < v.min_distance) {
      v.min_distance = dist[s];
      v.witness_a = pairs[s].first;
      v.witness_b = pairs[s].second;
    }
  }
  return v;
}

std::string describe(const SubsetVerification& v, const std::vector<double>& family,
                     Space space) {
  std::ostringstream os;
  os << v.violations << " of " << v.pairs_checked << " " << v.mode
     << " subset pairs are closer than eps; min D_k = " << v.min_distance;
  if (v.witness_a != 0) {
    auto list = [&](std::uint64_t m) {
      std::ostringstream s;
      s << '{';
      FinitePoint subset = subset_of(space, family, m);
      const auto& pts = subset.values();
      for (std::size_t i = 0; i < pts.size(); ++i) s << (i ? ", " : "") << pts[i];
      s << '}';
      return s.str();
    };
    os << " between " << list(v.witness_a) << " and " << list(v.witness_b);
  }
  return os.str();
}

std::vector<std::size_t> isolated_selection(const DynSystem& sys,
                                            const std::vector<double>& pool, int k, double eps,
                                            Method method) {
  const std::size_t n = pool.size();
  const auto orb = orbits(sys, pool, k);
  const std::size_t vertices = n * static_cast<std::size_t>(k);
  if (method == Method::exact && vertices > kExactSeparatedCap)
    detail::fail(ErrorKind::cap_exceeded,
                 "isolated selection over " + std::to_string(vertices) +
                     " (point, time) pairs exceeds the exact cap; use the greedy method");
  ConflictGraph graph(vertices);
  parallel_for(vertices, [&](std::size_t u) {
    std::size_t p = u / k, t = u % k;
    for (std::size_t v = u + 1; v < vertices; ++v) {
      std::size_t q = v / k, s = v % k;
      bool clash = p == q || metric(sys.space(), orb[p][t], orb[q][t]) < eps ||
                   metric(sys.space(), orb[p][s], orb[q][s]) < eps;
      if (clash) graph.row(u).set(v);
    }
  });
  graph.symmetrize();
  std::vector<std::size_t> chosen = method == Method::exact
                                        ? maximum_independent_set(graph).members
                                        : greedy_independent_set(graph);
  std::vector<std::size_t> points;
  for (std::size_t v : chosen) points.push_back(v / k);
  std::sort(points.begin(), points.end());
  return points;
}

}  // namespace

FinitePoint subset_of(Space space, const std::vector<double>& family, std::uint64_t mask) {
  detail::require(mask != 0, "subset mask must be nonzero");
  std::vector<double> pts;
  for (std::size_t i = 0; i < family.size(); ++i)
    if (mask >> i & 1U) pts.push_back(family[i]);
  return FinitePoint(space, std::move(pts));
}

std::vector<int> isolating_times(const DynSystem& sys, const std::vector<double>& family, int k,
                                 double eps) {
  const auto orb = orbits(sys, family, k);
  std::vector<int> out(family.size(), -1);
  for (std::size_t p = 0; p < family.size(); ++p) {
    for (int t = 0; t < k && out[p] < 0; ++t) {
      bool alone = true;
      for (std::size_t q = 0; q < family.size() && alone; ++q)
        alone = q == p || metric(sys.space(), orb[p][t], orb[q][t]) >= eps;
      if (alone) out[p] = t;
    }
  }
  return out;
}

SubsetVerification verify_subset_family(const DynSystem& sys, const std::vector<double>& family,
                                        int k, double eps, const CertificateOptions& options) {
  detail::require(k >= 1, "k must be >= 1");
  detail::require(eps > 0.0, "eps must be positive");
  detail::require(!family.empty(), "subset family needs at least one base point");
  detail::require(options.cap >= 1 && options.cap <= 62, "certificate cap must lie in [1, 62]");
  if (family.size() > options.cap)
    detail::fail(ErrorKind::cap_exceeded, "base family of " + std::to_string(family.size()) +
                                              " points exceeds the cap of " +
                                              std::to_string(options.cap));
  const std::uint64_t subsets = (std::uint64_t{1} << family.size()) - 1;
  if (subsets <= options.exhaustive_limit && family.size() <= 16)
    return exhaustive_pairs(sys, family, k, eps);
  detail::require(options.samples >= 100000, "sampled verification needs at least 1e5 samples");
  return sampled_pairs(sys, family, k, eps, options.samples, options.seed);
}

SubsetCertificate build_subset_certificate(const DynSystem& sys, int k, double eps,
                                           const std::vector<double>& pool,
                                           const CertificateOptions& options) {
  detail::require(k >= 1, "k must be >= 1");
  detail::require(eps > 0.0, "eps must be positive");
  detail::require(!pool.empty(), "candidate pool is empty");
  detail::require(options.cap >= 1 && options.cap <= 62, "certificate cap must lie in [1, 62]");
  SubsetCertificate cert;
  cert.k = k;
  cert.eps = eps;
  cert.selection = options.selection;
  cert.base_method = options.base_method;
  if (options.selection == Selection::prefix) {
    SepSpanResult sep = max_separated(sys, pool, k, eps, options.base_method);
    cert.pool_indices = sep.indices;
  } else {
    cert.pool_indices = isolated_selection(sys, pool, k, eps, options.base_method);
  }
  cert.found = cert.pool_indices.size();
  if (cert.pool_indices.size() > options.cap) {
    cert.pool_indices.resize(options.cap);
    cert.truncated = true;
  }
  for (std::size_t i : cert.pool_indices) cert.base_family.push_back(normalize(sys.space(), pool[i]));
  cert.n = cert.base_family.size();
  cert.subset_count = (std::uint64_t{1} << cert.n) - 1;
  cert.isolating_times = isolating_times(sys, cert.base_family, k, eps);
  cert.verification = verify_subset_family(sys, cert.base_family, k, eps, options);
  if (!cert.verification.passed())
    detail::fail(ErrorKind::verification_failed,
                 "subset certificate rejected: " +
                     describe(cert.verification, cert.base_family, sys.space()));
  return cert;
}

// ---- shift embedding --------------------------------------------------------

double directed_arc_to_set(const ArcPoint& arc, const FinitePoint& set) {
  double h = std::max(distance_to_set(arc.a(), set), distance_to_set(arc.b(), set));
  const auto& v = set.values();
  for (std::size_t i = 0; i < v.size(); ++i) {
    double mid;
    if (i + 1 < v.size()) mid = 0.5 * (v[i] + v[i + 1]);
    else if (set.space() == Space::circle) mid = settle(Space::circle, 0.5 * (v[i] + v[0] + 1.0));
    else break;
    if (arc.contains(mid)) h = std::max(h, distance_to_set(mid, set));
  }
  return h;
}

EmbedConfig make_embed_config(const DynSystem& sys, const ArcPoint& gamma, int channels,
                              int horizon, const PaddingOptions& padding) {
  detail::require(sys.is_homeomorphism(), "the embedding needs a homeomorphism");
  detail::require(gamma.space() == sys.space(), "arc and system live in different spaces");
  detail::require(gamma.length() > 0.0, "the wandering arc must be nondegenerate");
  detail::require(channels >= 1 && channels <= 64, "channel count must lie in [1, 64]");
  detail::require(horizon >= 0, "horizon must be >= 0");
  EmbedConfig cfg{sys, gamma, channels, {}, horizon, {}, 0.0, {}};
  const double width = 2.0 * channels - 1.0;
  for (int i = 0; i < channels; ++i) cfg.subintervals.emplace_back(2 * i / width, (2 * i + 1) / width);

  cfg.arc_check = verify_wandering(sys, gamma, 1, horizon + 1);
  if (!cfg.arc_check.disjoint)
    detail::fail(ErrorKind::verification_failed,
                 "images of the arc are not pairwise disjoint: " + cfg.arc_check.failure);

  std::vector<double> limit;
  for (double e : {gamma.a(), gamma.b()}) {
    for (Direction dir : {Direction::forward, Direction::backward}) {
      FinitePoint l = omega_limit_estimate(sys, e, padding.burn, padding.window, padding.tol, dir);
      limit.insert(limit.end(), l.values().begin(), l.values().end());
    }
  }
  FinitePoint pad(sys.space(), limit);
  for (double p : pad.values()) {
    bool periodic = false;
    double y = p;
    for (int m = 1; m <= 64 && !periodic; ++m) {
      y = sys.forward(y);
      periodic = metric(sys.space(), y, p) < padding.tol;
    }
    if (!periodic)
      detail::fail(ErrorKind::invalid_argument,
                   "limit point " + format_double(p) +
                       " of the arc is not periodic within tolerance; the limit set is not finite");
  }
  cfg.padding = pad.values();
  cfg.padding_error = directed_hausdorff(induced_apply(sys, pad), pad);
  return cfg;
}

SymbolBlock::SymbolBlock(int horizon, int channels, double fill)
    : horizon_(horizon), channels_(channels) {
  detail::require(horizon >= 0, "block horizon must be >= 0");
  detail::require(channels >= 1, "block needs at least one channel");
  values_.assign(static_cast<std::size_t>(2 * horizon + 1) * channels, fill);
}

std::size_t SymbolBlock::index(int n, int i) const {
  detail::require(n >= -horizon_ && n <= horizon_ && i >= 0 && i < channels_,
                  "symbol index out of range");
  return static_cast<std::size_t>(n + horizon_) * channels_ + i;
}

SymbolBlock SymbolBlock::inverse_shift() const {
  detail::require(horizon_ >= 1, "the shifted block needs horizon >= 1");
  SymbolBlock out(horizon_ - 1, channels_);
  for (int m = -(horizon_ - 1); m <= horizon_ - 1; ++m)
    for (int i = 0; i < channels_; ++i) out.at(m, i) = at(m - 1, i);
  return out;
}

SymbolBlock random_block(int horizon, int channels, std::uint64_t seed) {
  SymbolBlock block(horizon, channels);
  std::mt19937_64 rng(seed);
  for (int n = -horizon; n <= horizon; ++n)
    for (int i = 0; i < channels; ++i)
      block.at(n, i) = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return block;
}

EmbedState build_embedding(const EmbedConfig& cfg, const SymbolBlock& xi) {
  detail::require(xi.channels() == cfg.channels, "block and configuration disagree on channels");
  detail::require(xi.horizon() <= cfg.horizon, "block horizon exceeds the verified horizon");
  std::vector<double> pts = cfg.padding;
  for (int n = -xi.horizon(); n <= xi.horizon(); ++n) {
    for (int i = 0; i < cfg.channels; ++i) {
      double s = xi.at(n, i);
      detail::require(s >= 0.0 && s <= 1.0, "symbols must lie in [0,1]");
      auto [lo, hi] = cfg.subintervals[static_cast<std::size_t>(i)];
      double x = cfg.gamma.at(lo + s * (hi - lo));
      pts.push_back(iterate(cfg.system, x, n));
    }
  }
  return {xi, FinitePoint(cfg.system.space(), std::move(pts))};
}

namespace {

double arc_diameter(const ArcPoint& arc) {
  return arc.space() == Space::circle ? std::min(arc.length(), 0.5) : arc.length();
}

ArcPoint arc_image(const DynSystem& sys, ArcPoint arc, long n) {
  for (long i = 0; i < n; ++i) arc = induced_apply_arc(sys, arc);
  for (long i = 0; i > n; --i) {
    double fa = sys.inverse(arc.a()), fb = sys.inverse(arc.b());
    if (sys.orientation() == Orientation::reversing) std::swap(fa, fb);
    arc = ArcPoint(arc.space(), fa, fb);
  }
  return arc;
}

}  // namespace

ConjugacyReport check_conjugacy(const EmbedConfig& cfg, const SymbolBlock& xi) {
  detail::require(xi.horizon() >= 1, "conjugacy check needs N >= 1");
  const int n = xi.horizon();
  FinitePoint left = induced_apply(cfg.system, build_embedding(cfg, xi).image);
  FinitePoint right = build_embedding(cfg, xi.inverse_shift()).image;
  ConjugacyReport r;
  r.horizon = n;
  r.residual = hausdorff(left, right);
  FinitePoint pad(cfg.system.space(), cfg.padding);
  ArcPoint outer = arc_image(cfg.system, cfg.gamma, n);
  r.boundary_term = std::max(directed_arc_to_set(outer, pad),
                             directed_arc_to_set(induced_apply_arc(cfg.system, outer), pad));
  r.padding_error = cfg.padding_error;
  r.bound = std::max(r.boundary_term, r.padding_error);
  r.boundary_diameter =
      std::max(arc_diameter(outer), arc_diameter(arc_image(cfg.system, cfg.gamma, -n)));
  return r;
}

GrowthReport embedded_growth(const EmbedConfig& cfg, const GrowthOptions& options) {
  detail::require(options.n_window >= 1, "window must be >= 1");
  detail::require(options.eps > 0.0 && options.eps < 1.0, "eps must lie in (0, 1)");
  detail::require(options.symbols >= 1, "symbol grid needs at least one value");
  detail::require(options.cap >= 1, "family cap must be >= 1");
  GrowthReport r;
  r.channels = cfg.channels;
  r.n_window = options.n_window;
  r.eps = options.eps;
  r.symbols = options.symbols;
  r.seed = options.seed;
  if (options.positions) {
    r.positions = *options.positions;
  } else {
    for (int p = 0; p > -options.n_window && -p <= cfg.horizon; --p) r.positions.push_back(p);
  }
  std::set<int> distinct(r.positions.begin(), r.positions.end());
  detail::require(!r.positions.empty() && distinct.size() == r.positions.size(),
                  "varied positions must be nonempty and distinct");
  for (int p : r.positions)
    detail::require(p >= -cfg.horizon && p <= cfg.horizon, "varied position outside the horizon");

  std::vector<double> grid(static_cast<std::size_t>(options.symbols), 0.0);
  for (int j = 1; j < options.symbols; ++j) grid[j] = static_cast<double>(j) / (options.symbols - 1);

  const std::size_t coords = r.positions.size() * static_cast<std::size_t>(cfg.channels);
  const auto m = static_cast<std::uint64_t>(options.symbols);
  std::uint64_t full = 1;
  for (std::size_t c = 0; c < coords; ++c)
    full = full > std::numeric_limits<std::uint64_t>::max() / m ? std::numeric_limits<std::uint64_t>::max()
                                                                : full * m;
  r.full_family_size = full;

  std::vector<std::vector<int>> codes;
  if (full <= options.cap) {
    std::vector<int> digits(coords, 0);
    for (std::uint64_t c = 0; c < full; ++c) {
      codes.push_back(digits);
      for (std::size_t d = coords; d-- > 0;) {
        if (++digits[d] < options.symbols) break;
        digits[d] = 0;
      }
    }
  } else {
    r.sampled = true;
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<int> pick(0, options.symbols - 1);
    std::set<std::vector<int>> seen;
    for (std::size_t s = 0; s < options.cap; ++s) {
      std::vector<int> digits(coords);
      for (int& d : digits) d = pick(rng);
      seen.insert(std::move(digits));
    }
    codes.assign(seen.begin(), seen.end());
  }
  r.family_size = codes.size();

  std::vector<FinitePoint> images;
  images.reserve(codes.size());
  for (const auto& digits : codes) {
    SymbolBlock block(cfg.horizon, cfg.channels, grid[0]);
    std::size_t d = 0;
    for (int p : r.positions)
      for (int i = 0; i < cfg.channels; ++i) block.at(p, i) = grid[digits[d++]];
    images.push_back(build_embedding(cfg, block).image);
  }

  std::vector<double> nearest(images.size(), kInf);
  parallel_for(images.size(), [&](std::size_t i) {
    for (std::size_t j = i + 1; j < images.size(); ++j)
      nearest[i] = std::min(nearest[i], hausdorff(images[i], images[j]));
  });
  r.min_image_distance = *std::min_element(nearest.begin(), nearest.end());

  r.sep = max_separated(cfg.system, Pool(images), options.n_window, options.eps, options.method)
              .cardinality;
  r.rate = std::log(static_cast<double>(r.sep)) / (options.n_window * -std::log(options.eps));
  return r;
}

}  // namespace hypermdim
