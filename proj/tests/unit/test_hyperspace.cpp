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

#include <random>

#include "hypermdim/error.hpp"
#include "hypermdim/hyperspace.hpp"
#include "oracles.hpp"

namespace hm = hypermdim;
using hm::FinitePoint;
using hm::Space;

namespace {

std::vector<double> random_values(std::mt19937_64& rng, std::size_t max_size) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> v(1 + rng() % max_size);
  for (double& x : v) x = u(rng);
  return v;
}

}  // namespace

TEST(Hausdorff, Examples) {
  FinitePoint a(Space::circle, {0.0, 0.25});
  EXPECT_EQ(hm::hausdorff(a, a), 0.0);
  EXPECT_DOUBLE_EQ(hm::hausdorff(FinitePoint(Space::circle, {0.0}), FinitePoint(Space::circle, {0.5})), 0.5);
  EXPECT_NEAR(hm::hausdorff(a, FinitePoint(Space::circle, {0.1})), 0.15, 1e-15);
  EXPECT_THROW(hm::hausdorff(a, FinitePoint(Space::interval, {0.1})), hm::Error);
}

TEST(Hausdorff, MatchesBruteForce) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 5000; ++trial) {
    bool circle = trial % 2 == 0;
    Space s = circle ? Space::circle : Space::interval;
    auto a = random_values(rng, 12), b = random_values(rng, 12);
    ASSERT_NEAR(hm::hausdorff(FinitePoint(s, a), FinitePoint(s, b)),
                oracle::hausdorff(circle, a, b), 1e-15);
  }
}

TEST(Hausdorff, MetricAxioms) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 10000; ++trial) {
    Space s = trial % 2 ? Space::circle : Space::interval;
    FinitePoint a(s, random_values(rng, 6)), b(s, random_values(rng, 6)), c(s, random_values(rng, 6));
    double ab = hm::hausdorff(a, b);
    ASSERT_EQ(ab, hm::hausdorff(b, a));
    ASSERT_EQ(hm::hausdorff(a, a), 0.0);
    ASSERT_LE(ab, hm::hausdorff(a, c) + hm::hausdorff(c, b) + 1e-15);
    ASSERT_EQ(ab == 0.0, a == b);
  }
}

TEST(Hausdorff, ZeroIffEqualAtTolerance) {
  FinitePoint a(Space::interval, {0.2, 0.4});
  FinitePoint b(Space::interval, {0.2 + 1e-13, 0.4});
  EXPECT_EQ(a, b);
  EXPECT_GT(hm::hausdorff(a, FinitePoint(Space::interval, {0.2, 0.4, 0.41})), 0.0);
}

TEST(Arcs, Examples) {
  hm::ArcPoint a(Space::interval, 0.0, 0.5), b(Space::interval, 0.25, 0.75);
  EXPECT_EQ(hm::hausdorff_arcs(a, a), 0.0);
  EXPECT_NEAR(hm::hausdorff_arcs(a, b), 0.25, 1e-15);
  // The singleton {0} is 0.5 from the far end 0.5 of [0.4, 0.6], not 0.4.
  EXPECT_NEAR(hm::hausdorff_arcs(hm::ArcPoint(Space::circle, 0.0, 0.0),
                                 hm::ArcPoint(Space::circle, 0.4, 0.6)),
              0.5, 1e-15);
  auto oracle_value =
      oracle::hausdorff(true, {0.0}, oracle::sample_arc(true, 0.4, 0.2, 1000));
  EXPECT_NEAR(oracle_value, 0.5, 1e-12);
}

TEST(Arcs, AgreeWithSampledFiniteSets) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 2000; ++trial) {
    bool circle = trial % 2 == 0;
    Space s = circle ? Space::circle : Space::interval;
    double a0 = u(rng), a1 = u(rng), b0 = u(rng), b1 = u(rng);
    if (!circle) {
      if (a0 > a1) std::swap(a0, a1);
      if (b0 > b1) std::swap(b0, b1);
    }
    hm::ArcPoint a(s, a0, a1), b(s, b0, b1);
    auto sa = oracle::sample_arc(circle, a.a(), a.length(), 200);
    auto sb = oracle::sample_arc(circle, b.a(), b.length(), 200);
    double exact = hm::hausdorff_arcs(a, b);
    ASSERT_NEAR(exact, hm::hausdorff(FinitePoint(s, sa), FinitePoint(s, sb)), 2.0 / 200)
        << a0 << " " << a1 << " " << b0 << " " << b1;
    ASSERT_NEAR(exact, oracle::hausdorff(circle, sa, sb), 2.0 / 200);
  }
}

TEST(Induced, ApplyExamples) {
  FinitePoint a(Space::circle, {0.1, 0.6});
  EXPECT_EQ(hm::induced_apply(hm::make_system("identity"), a), a);
  auto img = hm::induced_apply(hm::make_system("doubling"), a);
  ASSERT_EQ(img.size(), 1u);
  EXPECT_NEAR(img[0], 0.2, 1e-15);
  EXPECT_EQ(hm::induced_apply(hm::make_system("rotation", {{"theta", 0.25}}),
                              FinitePoint(Space::circle, {0.0, 0.5})),
            FinitePoint(Space::circle, {0.25, 0.75}));
}

TEST(Induced, ArcExamples) {
  hm::ArcPoint half(Space::circle, 0.0, 0.5);
  EXPECT_EQ(hm::induced_apply_arc(hm::make_system("identity"), half), half);
  auto rot = hm::induced_apply_arc(hm::make_system("rotation", {{"theta", 0.25}}), half);
  EXPECT_NEAR(rot.a(), 0.25, 1e-15);
  EXPECT_NEAR(rot.b(), 0.75, 1e-15);
  auto refl = hm::induced_apply_arc(hm::make_system("reflection"),
                                    hm::ArcPoint(Space::circle, 0.1, 0.2));
  EXPECT_NEAR(refl.a(), 0.8, 1e-15);
  EXPECT_NEAR(refl.b(), 0.9, 1e-15);
  EXPECT_THROW(hm::induced_apply_arc(hm::make_system("doubling"), half), hm::Error);
}

TEST(Induced, DynDistanceExamples) {
  auto dbl = hm::make_system("doubling");
  FinitePoint zero(Space::circle, {0.0}), tenth(Space::circle, {0.1});
  EXPECT_NEAR(hm::induced_dyn_distance(dbl, zero, tenth, 3), 0.4, 1e-15);
  EXPECT_EQ(hm::induced_dyn_distance(dbl, tenth, tenth, 5), 0.0);
  EXPECT_THROW(hm::induced_dyn_distance(dbl, zero, tenth, 0), hm::Error);
}

TEST(Induced, MatchesOracleAndIsMonotone) {
  std::mt19937_64 rng(21);
  auto dbl = hm::make_system("doubling");
  for (int trial = 0; trial < 2000; ++trial) {
    auto a = random_values(rng, 5), b = random_values(rng, 5);
    int k = 1 + static_cast<int>(rng() % 5);
    FinitePoint fa(Space::circle, a), fb(Space::circle, b);
    double dk = hm::induced_dyn_distance(dbl, fa, fb, k);
    ASSERT_NEAR(dk, oracle::hyper_dk(oracle::doubling(), true, a, b, k), 1e-12);
    ASSERT_LE(hm::hausdorff(fa, fb), dk);
    ASSERT_LE(dk, hm::induced_dyn_distance(dbl, fa, fb, k + 1));
  }
}

TEST(Induced, RotationIsAnIsometry) {
  std::mt19937_64 rng(22);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 1000; ++trial) {
    auto rot = hm::make_system("rotation", {{"theta", u(rng)}});
    FinitePoint a(Space::circle, random_values(rng, 6)), b(Space::circle, random_values(rng, 6));
    ASSERT_NEAR(hm::hausdorff(hm::induced_apply(rot, a), hm::induced_apply(rot, b)),
                hm::hausdorff(a, b), 1e-12);
  }
}

TEST(DynBall, SingletonCharacterization) {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  auto dbl = hm::make_system("doubling");
  for (int trial = 0; trial < 3000; ++trial) {
    double x = u(rng);
    auto cs = random_values(rng, 5);
    int k = 1 + static_cast<int>(rng() % 4);
    double eps = 0.05 + 0.45 * u(rng);
    double worst = 0.0;
    for (double c : cs) worst = std::max(worst, hm::dyn_distance(dbl, x, c, k));
    auto t = hm::in_dyn_ball(dbl, FinitePoint(Space::circle, {x}), FinitePoint(Space::circle, cs),
                             k, eps);
    ASSERT_EQ(t.inside, worst < eps);
  }
}

TEST(DynBall, Examples) {
  auto dbl = hm::make_system("doubling");
  FinitePoint c(Space::circle, {0.1, 0.7});
  EXPECT_TRUE(hm::in_dyn_ball(dbl, c, c, 4, 1e-6).inside);
  EXPECT_FALSE(hm::in_dyn_ball(dbl, FinitePoint(Space::circle, {0.0}),
                               FinitePoint(Space::circle, {0.3}), 3, 0.39)
                   .inside);
}

// The two-condition test is implied by the distance test only for singleton
// centers; this instance separates them.
TEST(DynBall, DecomposedTestCanDisagree) {
  auto dbl = hm::make_system("doubling");
  auto t = hm::in_dyn_ball(dbl, FinitePoint(Space::circle, {0.08, 0.5}),
                           FinitePoint(Space::circle, {0.0, 0.08, 0.5}), 3, 0.1);
  EXPECT_TRUE(t.inside);
  EXPECT_FALSE(t.decomposed());
}

TEST(HyperNet, Examples) {
  auto two = hm::hyper_net(Space::circle, 2, 2);
  ASSERT_EQ(two.size(), 3u);
  EXPECT_EQ(two[0], FinitePoint(Space::circle, {0.0}));
  EXPECT_EQ(two[1], FinitePoint(Space::circle, {0.5}));
  EXPECT_EQ(two[2], FinitePoint(Space::circle, {0.0, 0.5}));
  EXPECT_EQ(hm::hyper_net(Space::circle, 4, 1).size(), 4u);
  EXPECT_EQ(hm::hyper_net(Space::circle, 10, 3).size(), 175u);
  EXPECT_EQ(hm::hyper_net_size(10, 3), 175u);
}

TEST(HyperNet, CapExceeded) {
  try {
    hm::hyper_net(Space::circle, 100, 5, 1000);
    FAIL();
  } catch (const hm::Error& e) {
    EXPECT_EQ(e.kind(), hm::ErrorKind::cap_exceeded);
    EXPECT_NE(std::string(e.what()).find("79375495"), std::string::npos) << e.what();
  }
}

TEST(HyperNet, DenseAmongSmallSets) {
  std::mt19937_64 rng(24);
  auto net = hm::hyper_net(Space::circle, 8, 2);
  for (int trial = 0; trial < 500; ++trial) {
    FinitePoint a(Space::circle, random_values(rng, 2));
    double best = 1.0;
    for (const auto& b : net) best = std::min(best, hm::hausdorff(a, b));
    ASSERT_LE(best, 1.0 / 16 + 1e-12);
  }
}
