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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "hypermdim/error.hpp"
#include "hypermdim/explosion.hpp"
#include "hypermdim/hyperspace.hpp"
#include "oracles.hpp"

namespace hm = hypermdim;
using hm::Space;

namespace {

hm::CertificateOptions isolated() {
  hm::CertificateOptions o;
  o.selection = hm::Selection::isolated;
  return o;
}

std::vector<double> subset_values(const std::vector<double>& family, std::uint64_t mask) {
  std::vector<double> out;
  for (std::size_t i = 0; i < family.size(); ++i)
    if (mask >> i & 1u) out.push_back(family[i]);
  return out;
}

hm::EmbedConfig north_south_config(int channels, int horizon) {
  return hm::make_embed_config(hm::make_system("north_south", {{"lambda", 0.5}}),
                               hm::ArcPoint(Space::circle, 0.16, 0.25), channels, horizon);
}

}  // namespace

TEST(Certificate, SingleSubset) {
  auto c = hm::build_subset_certificate(hm::make_system("doubling"), 3, 0.6,
                                        hm::uniform_grid(Space::circle, 50));
  EXPECT_EQ(c.n, 1u);
  EXPECT_EQ(c.subset_count, 1u);
  EXPECT_TRUE(c.verification.passed());
  EXPECT_EQ(c.verification.pairs_checked, 0u);
}

TEST(Certificate, SeparatedPairDistanceForm) {
  std::mt19937_64 rng(51);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  auto dbl = hm::make_system("doubling");
  for (int trial = 0; trial < 5000; ++trial) {
    double p1 = u(rng), p2 = u(rng);
    int k = 1 + static_cast<int>(rng() % 5);
    double eps = hm::dyn_distance(dbl, p1, p2, k);
    if (eps == 0.0) continue;
    double d = hm::induced_dyn_distance(dbl, hm::FinitePoint(Space::circle, {p1}),
                                        hm::FinitePoint(Space::circle, {p1, p2}), k);
    ASSERT_GE(d, eps);
  }
}

TEST(Certificate, IsolatedFamilyOnDoubling) {
  auto c = hm::build_subset_certificate(hm::make_system("doubling"), 5, 0.2,
                                        hm::uniform_grid(Space::circle, 200), isolated());
  EXPECT_EQ(c.n, 7u);
  EXPECT_EQ(c.subset_count, 127u);
  EXPECT_EQ(c.verification.mode, "exhaustive");
  EXPECT_EQ(c.verification.pairs_checked, 127u * 126u / 2u);
  EXPECT_EQ(c.verification.violations, 0u);
  EXPECT_GE(c.verification.min_distance, 0.2);
  EXPECT_EQ(c.isolating_times.size(), 7u);
}

// A maximum separated family is not enough: D_k between subsets can drop
// below eps when a dropped point sits d-close to a kept one at every time.
TEST(Certificate, PrefixSelectionIsRejected) {
  try {
    hm::build_subset_certificate(hm::make_system("doubling"), 5, 0.2,
                                 hm::uniform_grid(Space::circle, 200));
    FAIL();
  } catch (const hm::Error& e) {
    EXPECT_EQ(e.kind(), hm::ErrorKind::verification_failed);
  }
  std::vector<double> family{0.0, 0.15, 0.5};
  auto dbl = hm::make_system("doubling");
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j)
      ASSERT_GE(hm::dyn_distance(dbl, family[i], family[j], 2), 0.2);
  auto v = hm::verify_subset_family(dbl, family, 2, 0.2);
  EXPECT_FALSE(v.passed());
  EXPECT_NEAR(v.min_distance, 0.15, 1e-12);
}

TEST(Certificate, VerificationMatchesOracle) {
  std::mt19937_64 rng(52);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  auto dbl = hm::make_system("doubling");
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<double> family(2 + rng() % 4);
    for (double& x : family) x = u(rng);
    int k = 1 + static_cast<int>(rng() % 4);
    double eps = 0.05 + 0.2 * u(rng);
    auto v = hm::verify_subset_family(dbl, family, k, eps);
    std::uint64_t masks = (1u << family.size()) - 1, violations = 0;
    double best = 1.0;
    for (std::uint64_t a = 1; a <= masks; ++a)
      for (std::uint64_t b = a + 1; b <= masks; ++b) {
        double d = oracle::hyper_dk(oracle::doubling(), true, subset_values(family, a),
                                    subset_values(family, b), k);
        best = std::min(best, d);
        violations += d < eps;
      }
    ASSERT_EQ(v.pairs_checked, masks * (masks - 1) / 2);
    ASSERT_EQ(v.violations, violations);
    ASSERT_NEAR(v.min_distance, best, 1e-12);
  }
}

TEST(Certificate, IsolatedFamiliesAlwaysVerify) {
  std::mt19937_64 rng(53);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<hm::DynSystem> systems{hm::make_system("doubling"),
                                     hm::make_system("tent", {{"slope", 1.8}}),
                                     hm::make_system("north_south", {{"lambda", 0.3}})};
  for (int trial = 0; trial < 60; ++trial) {
    const auto& sys = systems[trial % systems.size()];
    std::vector<double> pool(40);
    for (double& x : pool) x = u(rng);
    auto opt = isolated();
    opt.cap = 8;
    auto c = hm::build_subset_certificate(sys, 1 + static_cast<int>(rng() % 4),
                                          0.05 + 0.2 * u(rng), pool, opt);
    ASSERT_TRUE(c.verification.passed()) << sys.name();
  }
}

TEST(Certificate, SampledModeIsSeeded) {
  auto opt = isolated();
  opt.exhaustive_limit = 10;
  opt.samples = 100000;
  opt.seed = 9;
  auto dbl = hm::make_system("doubling");
  auto grid = hm::uniform_grid(Space::circle, 200);
  auto a = hm::build_subset_certificate(dbl, 5, 0.2, grid, opt);
  auto b = hm::build_subset_certificate(dbl, 5, 0.2, grid, opt);
  EXPECT_EQ(a.verification.mode, "sampled");
  EXPECT_EQ(a.verification.seed, 9u);
  EXPECT_EQ(a.verification.pairs_checked, 100000u);
  EXPECT_EQ(a.verification.min_distance, b.verification.min_distance);
  EXPECT_EQ(a.verification.witness_a, b.verification.witness_a);
}

TEST(Certificate, CapIsEnforced) {
  std::vector<double> family;
  for (int i = 0; i < 13; ++i) family.push_back(i / 13.0);
  EXPECT_THROW(hm::verify_subset_family(hm::make_system("rotation", {{"theta", 0.1}}), family, 1,
                                        0.05),
               hm::Error);
}

TEST(Embedding, SingleSymbol) {
  auto cfg = north_south_config(1, 0);
  hm::SymbolBlock xi(0, 1, 0.0);
  auto state = hm::build_embedding(cfg, xi);
  EXPECT_EQ(state.image.size(), 1 + cfg.padding.size());
}

TEST(Embedding, PaddingAndSize) {
  auto cfg = north_south_config(1, 2);
  ASSERT_EQ(cfg.padding.size(), 2u);
  EXPECT_NEAR(cfg.padding[0], 0.0, 1e-9);
  EXPECT_NEAR(cfg.padding[1], 0.5, 1e-9);
  hm::FinitePoint pad(Space::circle, cfg.padding);
  EXPECT_LT(hm::hausdorff(hm::induced_apply(cfg.system, pad), pad), 1e-9);
  auto state = hm::build_embedding(cfg, hm::random_block(2, 1, 1));
  EXPECT_EQ(state.image.size(), 5u + 2u);
}

TEST(Embedding, Injective) {
  auto cfg = north_south_config(2, 3);
  std::mt19937_64 rng(54);
  for (int trial = 0; trial < 200; ++trial) {
    auto xi = hm::random_block(3, 2, trial);
    auto eta = xi;
    int n = static_cast<int>(rng() % 7) - 3, i = static_cast<int>(rng() % 2);
    eta.at(n, i) = xi.at(n, i) > 0.5 ? xi.at(n, i) - 0.25 : xi.at(n, i) + 0.25;
    EXPECT_GT(hm::hausdorff(hm::build_embedding(cfg, xi).image, hm::build_embedding(cfg, eta).image),
              0.0);
  }
}

TEST(Embedding, RejectsNonWanderingArc) {
  auto ns = hm::make_system("north_south", {{"lambda", 0.5}});
  EXPECT_THROW(hm::make_embed_config(ns, hm::ArcPoint(Space::circle, 0.4, 0.6), 1, 3), hm::Error);
}

TEST(Conjugacy, ResidualShrinksWithHorizon) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    double prev = INFINITY;
    for (int n : {4, 8, 16}) {
      auto cfg = north_south_config(1, n);
      auto r = hm::check_conjugacy(cfg, hm::random_block(n, 1, seed));
      EXPECT_LE(r.residual, r.bound + 1e-12);
      EXPECT_LE(r.residual, prev + 1e-9);
      prev = r.residual;
    }
    EXPECT_LT(prev, 0.01);
  }
}

TEST(Conjugacy, ConstantBlock) {
  auto cfg = north_south_config(1, 6);
  auto r = hm::check_conjugacy(cfg, hm::SymbolBlock(6, 1, 0.4));
  EXPECT_LE(r.residual, r.bound + 1e-12);
  EXPECT_THROW(hm::check_conjugacy(north_south_config(1, 0), hm::SymbolBlock(0, 1)), hm::Error);
}

TEST(Growth, RateIncreasesWithChannels) {
  auto ns = hm::make_system("north_south", {{"lambda", 0.1}});
  hm::GrowthOptions opt;
  opt.symbols = 3;
  double prev = -1.0;
  for (int k = 1; k <= 3; ++k) {
    auto cfg = hm::make_embed_config(ns, hm::ArcPoint(Space::circle, 0.1, 0.4), k, 2);
    auto r = hm::embedded_growth(cfg, opt);
    EXPECT_GT(r.rate, prev);
    EXPECT_GT(r.min_image_distance, 0.0);
    prev = r.rate;
  }
}

TEST(Growth, DegenerateCases) {
  auto cfg = north_south_config(2, 2);
  hm::GrowthOptions opt;
  opt.eps = 0.5;
  auto wide = hm::embedded_growth(cfg, opt);
  EXPECT_EQ(wide.sep, 1u);
  EXPECT_EQ(wide.rate, 0.0);
  opt.eps = 0.01;
  opt.symbols = 1;
  auto single = hm::embedded_growth(cfg, opt);
  EXPECT_EQ(single.family_size, 1u);
  EXPECT_EQ(single.sep, 1u);
}

TEST(Growth, SamplesAboveCap) {
  auto cfg = north_south_config(3, 2);
  hm::GrowthOptions opt;
  opt.symbols = 4;
  opt.cap = 100;
  opt.seed = 3;
  auto a = hm::embedded_growth(cfg, opt);
  auto b = hm::embedded_growth(cfg, opt);
  EXPECT_TRUE(a.sampled);
  EXPECT_EQ(a.family_size, 100u);
  EXPECT_EQ(a.full_family_size, 4096u);
  EXPECT_EQ(a.sep, b.sep);
}

TEST(SymbolBlock, InverseShift) {
  auto xi = hm::random_block(3, 2, 7);
  auto s = xi.inverse_shift();
  EXPECT_EQ(s.horizon(), 2);
  for (int m = -2; m <= 2; ++m)
    for (int i = 0; i < 2; ++i) EXPECT_EQ(s.at(m, i), xi.at(m - 1, i));
  EXPECT_EQ(hm::random_block(3, 2, 7).values(), xi.values());
}
