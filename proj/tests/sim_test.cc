// Copyright 2026 The structeval Authors.
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


#include <random>
#include <string>

#include <gtest/gtest.h>

#include "structeval/errors.h"
#include "structeval/sim.h"

namespace structeval {
namespace {

constexpr double kTol = 1e-9;

TEST(DiscreteSim, EqualStringsScoreOne) {
  EXPECT_EQ(DiscreteSim(Atom("bombing"), Atom("bombing")).value, 1.0);
  EXPECT_TRUE(DiscreteSim(Atom("bombing"), Atom("bombing")).normalized);
}

TEST(DiscreteSim, DifferentStringsScoreZero) {
  EXPECT_EQ(DiscreteSim(Atom("bombing"), Atom("attack")).value, 0.0);
}

TEST(DiscreteSim, TuplesCompareComponentwise) {
  Atom a(Atom::Tuple{Atom(std::int64_t{3}), Atom(std::int64_t{7})});
  Atom b(Atom::Tuple{Atom(std::int64_t{3}), Atom(std::int64_t{8})});
  EXPECT_EQ(DiscreteSim(a, b).value, 0.0);
  EXPECT_EQ(DiscreteSim(a, a).value, 1.0);
}

TEST(DiscreteSim, KindMismatchThrows) {
  EXPECT_THROW(DiscreteSim(Atom("3"), Atom(std::int64_t{3})), InvalidComparison);
}

TEST(DiscreteSim, ExactByteEquality) {
  EXPECT_EQ(DiscreteSim(Atom("Bomb"), Atom("bomb")).value, 0.0);
  EXPECT_EQ(DiscreteSim(Atom("bomb "), Atom("bomb")).value, 0.0);
}

struct Pair2 {
  double a = 0.0;
  double b = 0.0;
};

Similarity<Pair2> Constant(double v) {
  return Similarity<Pair2>([v](const Pair2&, const Pair2&, EvalContext) { return v; },
                           v <= 1.0);
}

TEST(ProductSim, MultipliesComponents) {
  Pair2 x;
  EXPECT_EQ(Product<Pair2>({Constant(1.0), Constant(1.0)})(x, x).value, 1.0);
  EXPECT_EQ(Product<Pair2>({Constant(1.0), Constant(0.0)})(x, x).value, 0.0);
  EXPECT_NEAR(Product<Pair2>({Constant(0.5), Constant(0.8)})(x, x).value, 0.4, kTol);
}

TEST(ProductSim, NormalizedOnlyWhenAllComponentsAre) {
  EXPECT_TRUE(Product<Pair2>({Constant(0.5), Constant(1.0)}).normalized());
  EXPECT_FALSE(Product<Pair2>({Constant(0.5), Constant(3.0)}).normalized());
}

TEST(ProductSim, SymmetricWhenComponentsAre) {
  auto sim = Product<Pair2>(
      {Field(&Pair2::a, Discrete<double>()), Field(&Pair2::b, Discrete<double>())});
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> d(0, 2);
  for (int i = 0; i < 200; ++i) {
    Pair2 x{double(d(rng)), double(d(rng))}, y{double(d(rng)), double(d(rng))};
    EXPECT_EQ(sim(x, y).value, sim(y, x).value);
    EXPECT_EQ(sim(x, x).value, 1.0);
    EXPECT_LE(sim(x, y).value, sim(x, x).value);
  }
}

TEST(Normalize, DirectFormulas) {
  OverlapTriple t{2, 4, 2};
  EXPECT_NEAR(Normalize(Normalizer::kPrecision, t).value, 0.5, kTol);
  EXPECT_NEAR(Normalize(Normalizer::kRecall, t).value, 1.0, kTol);
  EXPECT_NEAR(Normalize(Normalizer::kF, t).value, 2.0 / 3.0, kTol);
  EXPECT_NEAR(Normalize(Normalizer::kJaccard, t).value, 0.5, kTol);
}

TEST(Normalize, BothEmptyIsPerfect) {
  OverlapTriple t{0, 0, 0};
  for (Normalizer n : {Normalizer::kPrecision, Normalizer::kRecall, Normalizer::kF,
                       Normalizer::kJaccard}) {
    EXPECT_EQ(Normalize(n, t).value, 1.0) << NormalizerName(n);
  }
}

TEST(Normalize, OneEmptySideScoresZero) {
  OverlapTriple pred_empty{0, 0, 3};
  EXPECT_EQ(Normalize(Normalizer::kPrecision, pred_empty).value, 0.0);
  EXPECT_EQ(Normalize(Normalizer::kRecall, pred_empty).value, 0.0);
  EXPECT_EQ(Normalize(Normalizer::kF, pred_empty).value, 0.0);
  EXPECT_EQ(Normalize(Normalizer::kJaccard, pred_empty).value, 0.0);
  OverlapTriple gold_empty{0, 2, 0};
  EXPECT_EQ(Normalize(Normalizer::kRecall, gold_empty).value, 0.0);
  EXPECT_EQ(Normalize(Normalizer::kF, gold_empty).value, 0.0);
}

TEST(Normalize, ParsesNames) {
  EXPECT_EQ(ParseNormalizer("P"), Normalizer::kPrecision);
  EXPECT_EQ(ParseNormalizer("j"), Normalizer::kJaccard);
  EXPECT_THROW(ParseNormalizer("Q"), ConfigError);
}

TEST(NormalizeProperty, OrderingAndDuality) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> d(0.0, 10.0);
  for (int i = 0; i < 2000; ++i) {
    double a = d(rng), b = d(rng);
    double s = std::uniform_real_distribution<double>(0.0, std::min(a, b))(rng);
    OverlapTriple t{s, a, b};
    double p = Normalize(Normalizer::kPrecision, t).value;
    double r = Normalize(Normalizer::kRecall, t).value;
    double f = Normalize(Normalizer::kF, t).value;
    double j = Normalize(Normalizer::kJaccard, t).value;
    EXPECT_LE(j, f + kTol);
    EXPECT_LE(f, std::max(p, r) + kTol);
    EXPECT_LE(std::min(p, r), f + kTol);
    EXPECT_NEAR(p, Normalize(Normalizer::kRecall, OverlapTriple{s, b, a}).value, kTol);
  }
}

TEST(ThresholdSim, Boundaries) {
  EXPECT_EQ(ThresholdSim({0.6, true}, 0.5, true).value, 1.0);
  EXPECT_EQ(ThresholdSim({0.5, true}, 0.5, true).value, 0.0);
  EXPECT_EQ(ThresholdSim({1.0, true}, 1.0, false).value, 1.0);
  EXPECT_EQ(ThresholdSim({0.99, true}, 1.0, false).value, 0.0);
}

TEST(ThresholdSim, RejectsBadCutoff) {
  EXPECT_THROW(ThresholdSim({0.5, true}, 1.5, true), ConfigError);
  EXPECT_THROW(ThresholdSim({0.5, true}, -0.1, true), ConfigError);
}

TEST(ThresholdSim, RejectsUnnormalizedInner) {
  EXPECT_THROW(Threshold(Constant(2.0), 0.5, true), ConfigError);
}

}  // namespace
}  // namespace structeval
