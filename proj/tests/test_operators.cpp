#include <gtest/gtest.h>

#include <map>

#include "moead/operators.hpp"

using namespace moead;

namespace {

const Vec kLo(10, 0.0), kHi(10, 1.0);

}  // namespace

TEST(SelectParents, OnlyChoice) {
  Rng r(1);
  const std::vector<std::size_t> nb{0, 1};
  for (int k = 0; k < 20; ++k) {
    const auto [a, b] = select_parents(nb, r);
    EXPECT_NE(a, b);
    EXPECT_TRUE((a == 0 && b == 1) || (a == 1 && b == 0));
  }
}

TEST(SelectParents, MembershipAndUniformity) {
  Rng r(2);
  const std::vector<std::size_t> nb{3, 9, 14, 20, 21, 40, 41, 55, 60, 99};
  std::map<std::size_t, int> count;
  const int draws = 10000;
  for (int k = 0; k < draws; ++k) {
    const auto [a, b] = select_parents(nb, r);
    ASSERT_NE(a, b);
    ++count[a];
    ++count[b];
  }
  ASSERT_EQ(count.size(), nb.size());
  for (const auto& [idx, c] : count) {
    EXPECT_NE(std::find(nb.begin(), nb.end(), idx), nb.end());
    EXPECT_NEAR(static_cast<double>(c) / draws, 0.2, 0.02);
  }
}

TEST(SelectParents, TooSmall) {
  Rng r(3);
  EXPECT_THROW(select_parents(std::vector<std::size_t>{4}, r), std::invalid_argument);
  EXPECT_THROW(select_parents(std::vector<std::size_t>{}, r), std::invalid_argument);
}

TEST(Sbx, NoCrossoverReturnsFirstParent) {
  Rng r(4);
  OperatorParams p;
  p.crossover_prob = 0.0;
  const Vec x1(10, 0.2), x2(10, 0.9);
  EXPECT_EQ(sbx_crossover(x1, x2, kLo, kHi, p, r), x1);
}

TEST(Sbx, MidpointDrawGivesUnitSpread) {
  EXPECT_DOUBLE_EQ(sbx_beta(0.5, 20.0), 1.0);
  EXPECT_DOUBLE_EQ(sbx_beta(0.5, 2.0), 1.0);
  // beta = 1 maps the child onto the first parent.
  const double x1 = 0.3, x2 = 0.8, beta = sbx_beta(0.5, 20.0);
  EXPECT_DOUBLE_EQ(0.5 * (x1 + x2) + 0.5 * beta * (x1 - x2), x1);
}

TEST(Sbx, SpreadDistributionShape) {
  EXPECT_LT(sbx_beta(0.1, 20.0), 1.0);
  EXPECT_GT(sbx_beta(0.9, 20.0), 1.0);
  EXPECT_NEAR(sbx_beta(0.25, 1.0), std::sqrt(0.5), 1e-15);
}

TEST(Sbx, ChildWithinBounds) {
  Rng r(5);
  OperatorParams p;
  p.crossover_eta = 0.5;  // wide spread, exercises the clamp
  for (int k = 0; k < 5000; ++k) {
    Vec x1(10), x2(10);
    for (int i = 0; i < 10; ++i) {
      x1[i] = r.uniform();
      x2[i] = r.uniform();
    }
    const Vec c = sbx_crossover(x1, x2, kLo, kHi, p, r);
    for (double v : c) {
      ASSERT_GE(v, 0.0);
      ASSERT_LE(v, 1.0);
    }
  }
}

TEST(Mutation, ZeroProbabilityIsIdentity) {
  Rng r(6);
  OperatorParams p;
  p.mutation_prob = 0.0;
  Vec x(10, 0.37);
  polynomial_mutation(x, kLo, kHi, p, r);
  EXPECT_EQ(x, Vec(10, 0.37));
}

TEST(Mutation, NeverLeavesBounds) {
  Rng r(7);
  OperatorParams p;
  p.mutation_prob = 1.0;
  p.mutation_eta = 0.1;
  for (int k = 0; k < 5000; ++k) {
    Vec x(10, 0.0);
    x[5] = 1.0;
    polynomial_mutation(x, kLo, kHi, p, r);
    for (double v : x) {
      ASSERT_GE(v, 0.0);
      ASSERT_LE(v, 1.0);
    }
  }
}

TEST(Mutation, FrequencyIsOneOverD) {
  Rng r(8);
  OperatorParams p;  // default 1/D
  const int trials = 100000;
  std::vector<int> changed(10, 0);
  for (int k = 0; k < trials; ++k) {
    Vec x(10, 0.5);
    polynomial_mutation(x, kLo, kHi, p, r);
    for (int i = 0; i < 10; ++i) changed[i] += x[i] != 0.5;
  }
  for (int c : changed) EXPECT_NEAR(static_cast<double>(c) / trials, 0.1, 0.01);
}

TEST(Offspring, DegenerateOperatorsCopyFirstParent) {
  Rng r(9);
  OperatorParams p;
  p.crossover_prob = 0.0;
  p.mutation_prob = 0.0;
  const Vec x1{0.1, 0.2, 0.3}, x2{0.9, 0.8, 0.7}, lo(3, 0.0), hi(3, 1.0);
  EXPECT_EQ(make_offspring(x1, x2, lo, hi, p, r), x1);
}

TEST(Offspring, WithinNonUnitBox) {
  Rng r(10);
  OperatorParams p;
  const Vec lo{0, 0, 0, 0}, hi{2, 4, 6, 8};
  for (int k = 0; k < 2000; ++k) {
    Vec a(4), b(4);
    for (int i = 0; i < 4; ++i) {
      a[i] = r.uniform(lo[i], hi[i]);
      b[i] = r.uniform(lo[i], hi[i]);
    }
    const Vec c = make_offspring(a, b, lo, hi, p, r);
    for (int i = 0; i < 4; ++i) {
      ASSERT_GE(c[i], lo[i]);
      ASSERT_LE(c[i], hi[i]);
    }
  }
}

TEST(OperatorParams, Validation) {
  OperatorParams p;
  EXPECT_NO_THROW(validate(p));
  p.crossover_prob = 1.5;
  EXPECT_THROW(validate(p), InvalidConfig);
  p = {};
  p.crossover_eta = 0.0;
  EXPECT_THROW(validate(p), InvalidConfig);
  p = {};
  p.mutation_prob = 2.0;
  EXPECT_THROW(validate(p), InvalidConfig);
  p = {};
  p.mutation_eta = -1.0;
  EXPECT_THROW(validate(p), InvalidConfig);
}
