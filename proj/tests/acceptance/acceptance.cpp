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

// One pass/fail line per acceptance criterion. Usage: acceptance [--criterion N]

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "hypermdim/circle_class.hpp"
#include "hypermdim/cli.hpp"
#include "hypermdim/explosion.hpp"
#include "hypermdim/hyperspace.hpp"
#include "hypermdim/sepspan.hpp"
#include "hypermdim/wandering.hpp"

using namespace hypermdim;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<double> random_points(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> v(n);
  for (auto& x : v) x = u(rng);
  return v;
}

FinitePoint random_set(std::mt19937_64& rng, Space space, std::size_t max_size) {
  std::uniform_int_distribution<std::size_t> n(1, max_size);
  return FinitePoint(space, random_points(rng, n(rng)));
}

DynSystem random_system(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  switch (rng() % 4) {
    case 0: return make_system("doubling");
    case 1: return make_system("rotation", {{"theta", u(rng)}});
    case 2: return make_system("tent", {{"slope", 1.5 + 0.5 * u(rng)}});
    default: return make_system("north_south", {{"lambda", 0.1 + 0.8 * u(rng)}});
  }
}

// ---- 1 ----------------------------------------------------------------------

Outcome metric_axioms() {
  constexpr int kInstances = 10000;
  constexpr double kTol = 1e-12;
  auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> kd(1, 8);
  long failures[4] = {0, 0, 0, 0};

  auto axioms = [&](long& fail, auto d, const auto& x, const auto& y, const auto& z, bool same_xy) {
    double xy = d(x, y), yx = d(y, x), xz = d(x, z), yz = d(y, z), xx = d(x, x);
    if (xx != 0.0) ++fail;
    if (std::fabs(xy - yx) > kTol) ++fail;
    if (xz > xy + yz + kTol) ++fail;
    if (xy < 0.0 || (!same_xy && xy == 0.0)) ++fail;
  };

  for (int i = 0; i < kInstances; ++i) {
    Space space = (i % 2) ? Space::circle : Space::interval;
    auto p = random_points(rng, 3);
    axioms(failures[0], [&](double a, double b) { return metric(space, a, b); }, p[0], p[1], p[2],
           p[0] == p[1]);
  }
  for (int i = 0; i < kInstances; ++i) {
    DynSystem sys = random_system(rng);
    int k = kd(rng);
    auto p = random_points(rng, 3);
    axioms(failures[1], [&](double a, double b) { return dyn_distance(sys, a, b, k); }, p[0], p[1],
           p[2], p[0] == p[1]);
  }
  for (int i = 0; i < kInstances; ++i) {
    Space space = (i % 2) ? Space::circle : Space::interval;
    auto a = random_set(rng, space, 6), b = random_set(rng, space, 6), c = random_set(rng, space, 6);
    axioms(failures[2], [](const FinitePoint& x, const FinitePoint& y) { return hausdorff(x, y); },
           a, b, c, a == b);
  }
  for (int i = 0; i < kInstances; ++i) {
    DynSystem sys = random_system(rng);
    int k = kd(rng);
    auto a = random_set(rng, sys.space(), 5), b = random_set(rng, sys.space(), 5),
         c = random_set(rng, sys.space(), 5);
    axioms(failures[3],
           [&](const FinitePoint& x, const FinitePoint& y) { return induced_dyn_distance(sys, x, y, k); },
           a, b, c, a == b);
  }
  double t = seconds_since(t0);
  long total = failures[0] + failures[1] + failures[2] + failures[3];
  return {total == 0 && t < 30.0,
          fmt("failures d=%ld d_k=%ld hausdorff=%ld D_k=%ld over %d instances each, %.2fs (limit 30s)",
              failures[0], failures[1], failures[2], failures[3], kInstances, t)};
}

// ---- 2 ----------------------------------------------------------------------

Outcome induced_isometry() {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_int_distribution<int> kd(1, 10), id(0, 10);
  double worst = 0.0;
  for (int t = 0; t < 1000; ++t) {
    DynSystem sys = make_system("rotation", {{"theta", u(rng)}});
    FinitePoint a = random_set(rng, Space::circle, 6), b = random_set(rng, Space::circle, 6);
    double base = hausdorff(a, b);
    int k = kd(rng), i = id(rng);
    FinitePoint ai = a, bi = b;
    for (int s = 0; s < i; ++s) {
      ai = induced_apply(sys, ai);
      bi = induced_apply(sys, bi);
    }
    worst = std::max(worst, std::fabs(induced_dyn_distance(sys, ai, bi, k) - base));
  }
  return {worst <= 1e-12, fmt("max |D_k(T^i A, T^i B) - D(A,B)| = %.3e over 1000 pairs (tol 1e-12)", worst)};
}

// ---- 3 ----------------------------------------------------------------------

Outcome doubling_entropy() {
  auto t0 = std::chrono::steady_clock::now();
  GridPool pool;
  pool.size = 2000;
  EntropyEstimate e = entropy_estimate(make_system("doubling"), 0.02, 4, 10, pool);
  double t = seconds_since(t0);
  double rel = std::fabs(e.value - std::log(2.0)) / std::log(2.0);
  return {rel <= 0.10 && t < 60.0,
          fmt("h = %.4f vs log 2 = %.4f, relative error %.2f%% (limit 10%%), window [%g, %g], %.2fs (limit 60s)",
              e.value, std::log(2.0), 100.0 * rel, e.window_lo, e.window_hi, t)};
}

// ---- 4 ----------------------------------------------------------------------

Outcome subset_certificate() {
  auto t0 = std::chrono::steady_clock::now();
  DynSystem sys = make_system("doubling");
  std::vector<double> pool = uniform_grid(Space::circle, 200);
  CertificateOptions opt;
  opt.cap = 12;
  opt.selection = Selection::prefix;
  opt.base_method = Method::exact;

  CertificateOptions iso = opt;
  iso.selection = Selection::isolated;
  try {
    SubsetCertificate c = build_subset_certificate(sys, 5, 0.2, pool, iso);
    std::printf("[INFO] C4 isolated selection: N=%zu, %s, %llu pairs, min D_k = %.6f, violations %llu\n",
                c.n, c.verification.mode.c_str(),
                static_cast<unsigned long long>(c.verification.pairs_checked),
                c.verification.min_distance,
                static_cast<unsigned long long>(c.verification.violations));
  } catch (const Error& e) {
    std::printf("[INFO] C4 isolated selection failed: %s\n", e.what());
  }

  try {
    SubsetCertificate c = build_subset_certificate(sys, 5, 0.2, pool, opt);
    double t = seconds_since(t0);
    return {c.verification.passed() && c.verification.min_distance >= 0.2 && t < 300.0,
            fmt("N=%zu of exact Sep=%zu, %s verification of %llu pairs, min D_k = %.6f (need >= 0.2), %.2fs",
                c.n, c.found, c.verification.mode.c_str(),
                static_cast<unsigned long long>(c.verification.pairs_checked),
                c.verification.min_distance, t)};
  } catch (const Error& e) {
    return {false, fmt("prefix family rejected: %s", e.what())};
  }
}

// ---- 5 ----------------------------------------------------------------------

Outcome subset_separation_suite() {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_int_distribution<int> kd(1, 5);
  std::uniform_int_distribution<std::size_t> nd(2, 8);
  long violations = 0, pairs = 0;
  std::string first;
  for (int f = 0; f < 10000; ++f) {
    DynSystem sys = random_system(rng);
    int k = kd(rng);
    double eps = 0.05 + 0.25 * u(rng);
    std::size_t want = nd(rng);
    std::vector<double> family;
    for (int tries = 0; tries < 400 && family.size() < want; ++tries) {
      double x = u(rng);
      bool ok = true;
      for (double y : family) ok = ok && dyn_distance(sys, x, y, k) >= eps;
      if (ok) family.push_back(x);
    }
    if (family.size() < 2) continue;
    std::uint64_t full = (std::uint64_t{1} << family.size()) - 1;
    std::uniform_int_distribution<std::uint64_t> md(1, full);
    for (int p = 0; p < 4; ++p) {
      std::uint64_t a = md(rng), b = md(rng);
      if (a == b) continue;
      ++pairs;
      double d = induced_dyn_distance(sys, subset_of(sys.space(), family, a),
                                      subset_of(sys.space(), family, b), k);
      if (d < eps - 1e-12) {
        if (violations++ == 0)
          first = fmt("%s k=%d eps=%.4f |family|=%zu masks %llu/%llu D_k=%.6f", sys.name().c_str(), k,
                      eps, family.size(), static_cast<unsigned long long>(a),
                      static_cast<unsigned long long>(b), d);
      }
    }
  }
  return {violations == 0,
          fmt("%ld violations over %ld subset pairs from 10000 families%s%s", violations, pairs,
              first.empty() ? "" : "; first: ", first.c_str())};
}

// ---- 6 ----------------------------------------------------------------------

Outcome sandwich() {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_int_distribution<int> kd(1, 4);
  std::uniform_int_distribution<std::size_t> nd(20, 40);
  int failures = 0;
  std::string first;
  for (int t = 0; t < 100; ++t) {
    DynSystem sys = random_system(rng);
    int k = kd(rng);
    double eps = 0.05 + 0.25 * u(rng);
    Pool pool = random_points(rng, nd(rng));
    auto sep = max_separated(sys, pool, k, eps, Method::exact).cardinality;
    auto span = min_spanning(sys, pool, pool, k, eps, Method::exact).cardinality;
    auto span_half = min_spanning(sys, pool, pool, k, eps / 2, Method::exact).cardinality;
    if (!(span <= sep && sep <= span_half)) {
      if (failures++ == 0)
        first = fmt("%s k=%d eps=%.4f: Span=%zu Sep=%zu Span(eps/2)=%zu", sys.name().c_str(), k, eps,
                    span, sep, span_half);
    }
  }
  return {failures == 0, fmt("%d of 100 instances violate Span(eps) <= Sep(eps) <= Span(eps/2)%s%s",
                             failures, first.empty() ? "" : "; first: ", first.c_str())};
}

// ---- 7 ----------------------------------------------------------------------

Outcome classifier_suite() {
  struct Case {
    const char* label;
    DynSystem sys;
    MdimClass expected;
  };
  auto t0 = std::chrono::steady_clock::now();
  std::vector<Case> cases{
      {"rotation(1/3)", make_system("rotation", {{"theta", 1.0 / 3.0}}), MdimClass::zero},
      {"rotation(sqrt2-1)", make_system("rotation", {{"theta", std::sqrt(2.0) - 1.0}}), MdimClass::zero},
      {"identity", make_system("identity"), MdimClass::zero},
      {"reflection", make_system("reflection"), MdimClass::zero},
      {"north_south(0.5)", make_system("north_south", {{"lambda", 0.5}}), MdimClass::infinite},
      {"morse_smale(0.5,4)", make_system("morse_smale", {{"lambda", 0.5}, {"period", 4}}),
       MdimClass::infinite},
  };
  int wrong = 0;
  std::string summary;
  for (const auto& c : cases) {
    std::string got;
    bool ok = false;
    try {
      MdimVerdict v = classify_mdim(c.sys);
      bool witnessed = (v.identity && v.identity->passed) ||
                       (v.wandering && v.wandering->check.disjoint) ||
                       (v.minimality && v.minimality->minimal);
      ok = v.verdict == c.expected && witnessed;
      got = fmt("%s/%s", std::string(to_string(v.verdict)).c_str(), std::string(to_string(v.reason)).c_str());
    } catch (const Error& e) {
      got = fmt("error(%s)", std::string(to_string(e.kind())).c_str());
    }
    if (!ok) ++wrong;
    summary += fmt("%s%s->%s", summary.empty() ? "" : ", ", c.label, got.c_str());
  }
  double t = seconds_since(t0);
  return {wrong == 0 && t < 60.0, fmt("%d mismatches; %s; %.2fs (limit 60s)", wrong, summary.c_str(), t)};
}

// ---- 8 ----------------------------------------------------------------------

Outcome wandering_square() {
  DynSystem sys = make_system("interval_square");
  WanderingResult r = find_wandering_interval(sys);
  if (!r.interval) return {false, "no interval returned"};
  double a = r.interval->a(), b = r.interval->b();
  // Independent check: T^2 acts as x -> x^4, so log T^(2n)(x) = 4^n log x and
  // consecutive images separate exactly when 4 log b < log a.
  bool log_disjoint = a > 0.0 && b < 1.0 && 4.0 * std::log(b) < std::log(a);
  bool ok = r.verdict == WanderingVerdict::wandering_interval && r.check.disjoint &&
            r.check.images == 41 && r.check.power == 2 && log_disjoint;
  return {ok, fmt("J = [%.9f, %.9f] under T^%d: %zu images, disjoint=%s, log-space check %s, min log10 gap %.1f",
                  a, b, r.check.power, r.check.images, r.check.disjoint ? "yes" : "no",
                  log_disjoint ? "passes" : "fails", r.check.min_log10_gap)};
}

// ---- 9 ----------------------------------------------------------------------

Outcome conjugacy_residual() {
  DynSystem sys = make_system("north_south", {{"lambda", 0.5}});
  ArcPoint gamma(Space::circle, 0.16, 0.25);
  auto residual = [&](int n) {
    EmbedConfig cfg = make_embed_config(sys, gamma, 1, n);
    return check_conjugacy(cfg, random_block(n, 1, 0)).residual;
  };
  double r4 = residual(4), r16 = residual(16);
  return {r16 < r4 && r16 < 0.01,
          fmt("residual(N=4) = %.3e, residual(N=16) = %.3e (need r16 < r4 and r16 < 0.01)", r4, r16)};
}

// ---- 10 ---------------------------------------------------------------------

Outcome growth_monotone() {
  DynSystem sys = make_system("north_south", {{"lambda", 0.1}});
  ArcPoint gamma(Space::circle, 0.1, 0.4);
  GrowthOptions opt;
  opt.n_window = 2;
  opt.eps = 0.05;
  opt.symbols = 3;
  double r[4] = {0, 0, 0, 0};
  for (int k = 1; k <= 3; ++k) r[k] = embedded_growth(make_embed_config(sys, gamma, k, 2), opt).rate;
  return {r[2] > r[1] && r[3] > r[2], fmt("r(1) = %.4f, r(2) = %.4f, r(3) = %.4f", r[1], r[2], r[3])};
}

// ---- 11 ---------------------------------------------------------------------

Outcome cli_determinism() {
  int differing = 0;
  std::string which;
  for (const auto& sub : cli::subcommands()) {
    auto a = cli::run(sub, json::object()), b = cli::run(sub, json::object());
    a.record.erase("wall_time_s");
    b.record.erase("wall_time_s");
    if (a.record.dump() != b.record.dump() || a.csv != b.csv) {
      ++differing;
      which += " " + sub;
    }
  }
  return {differing == 0, fmt("%d of %zu subcommands differ across reruns%s", differing,
                              cli::subcommands().size(), which.c_str())};
}

struct Criterion {
  const char* name;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  std::vector<Criterion> criteria{
      {"metric-axioms", metric_axioms},
      {"induced-isometry", induced_isometry},
      {"doubling-entropy", doubling_entropy},
      {"subset-certificate", subset_certificate},
      {"subset-separation-suite", subset_separation_suite},
      {"sandwich", sandwich},
      {"circle-classifier", classifier_suite},
      {"wandering-interval", wandering_square},
      {"conjugacy-residual", conjugacy_residual},
      {"growth-monotone", growth_monotone},
      {"cli-determinism", cli_determinism},
  };
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) only = std::atoi(argv[++i]);
  }
  if (only < 0 || only > static_cast<int>(criteria.size())) {
    std::fprintf(stderr, "criterion must be 1..%zu\n", criteria.size());
    return 2;
  }
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only && static_cast<int>(i + 1) != only) continue;
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("[%s] C%zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].name, o.detail.c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  return failed ? 1 : 0;
}
