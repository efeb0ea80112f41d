#include <gtest/gtest.h>

#include <cmath>

#include "moead/refpoint.hpp"
#include "oracles.hpp"

using namespace moead;

namespace {

RefPointState state_for(RefStrategy s, std::size_t max_fe = 20000, Vec ideal = {}) {
  const std::vector<Vec> init{{0.2, 0.5}, {0.4, 0.9}};
  return init_state(s, init, max_fe, ideal);
}

}  // namespace

TEST(InitState, ComponentwiseMinimum) {
  const std::vector<Vec> init{{1, 2}, {2, 1}};
  const RefPointState s = init_state(RefStrategy::Min, init, 100, {});
  EXPECT_EQ(s.z_min, (Vec{1, 1}));
  EXPECT_EQ(s.z_origin, (Vec{0, 0}));
}

TEST(InitState, GaussianSchedule) {
  const RefPointState s = state_for(RefStrategy::NormW, 20000);
  EXPECT_DOUBLE_EQ(s.mu, 10000.0);
  EXPECT_DOUBLE_EQ(s.sigma, 2000.0);
  EXPECT_DOUBLE_EQ(s.sigma, s.mu / 5.0);
}

TEST(InitState, Errors) {
  EXPECT_THROW(init_state(RefStrategy::Min, std::vector<Vec>{}, 10, {}), std::invalid_argument);
  EXPECT_THROW(init_state(RefStrategy::TrueIdeal, std::vector<Vec>{{1, 1}}, 10, Vec{0, 0, 0}),
               std::invalid_argument);
  EXPECT_THROW(init_state(RefStrategy::Min, std::vector<Vec>{{1, NAN}}, 10, {}), NumericError);
}

TEST(TrueIdeal, FixedRegardlessOfObservations) {
  RefPointState s = state_for(RefStrategy::TrueIdeal, 20000, Vec{0, 0});
  Rng r(1);
  for (std::size_t fe = 1; fe <= 20000; fe += 997) {
    observe(s, Vec{r.uniform(-1, 1), r.uniform(-1, 1)});
    const ZChoice z = select_z(s, fe, Vec{0.5, 0.5}, r);
    EXPECT_EQ(z.z, (Vec{0, 0}));
    EXPECT_EQ(z.source, ZSource::TrueIdeal);
  }
}

TEST(Observe, Examples) {
  RefPointState s = state_for(RefStrategy::Min);
  observe(s, Vec{0.3, 0.1});
  EXPECT_EQ(s.z_min, (Vec{0.2, 0.1}));
  observe(s, Vec{0.9, 0.9});
  EXPECT_EQ(s.z_min, (Vec{0.2, 0.1}));
  EXPECT_THROW(observe(s, Vec{INFINITY, 0}), NumericError);
  EXPECT_THROW(observe(s, Vec{0, 0, 0}), std::invalid_argument);
}

TEST(Observe, MonotoneNonincreasing) {
  RefPointState s = state_for(RefStrategy::Min);
  Rng r(2);
  Vec prev = s.z_min;
  for (int k = 0; k < 1000; ++k) {
    observe(s, Vec{r.uniform(-1, 2), r.uniform(-1, 2)});
    for (std::size_t i = 0; i < 2; ++i) EXPECT_LE(s.z_min[i], prev[i]);
    prev = s.z_min;
  }
}

TEST(GaussCdf, Values) {
  EXPECT_DOUBLE_EQ(gauss_cdf(10000, 10000, 2000), 0.5);
  EXPECT_GE(gauss_cdf(10000 + 5 * 2000, 10000, 2000), 0.9999997);
  EXPECT_NEAR(gauss_cdf(8000, 10000, 2000), oracle::kPhiMinusOne, 1e-12);
  EXPECT_NEAR(gauss_cdf(8000, 10000, 2000), 0.158655, 1e-6);
  EXPECT_NEAR(gauss_cdf(-1e9, 0, 1), 0.0, 1e-300);
  EXPECT_DOUBLE_EQ(gauss_cdf(1e9, 0, 1), 1.0);
}

TEST(ZW, Examples) {
  const Vec a = z_w(Vec{3, 4}, Vec{0.6, 0.8});
  EXPECT_NEAR(a[0], 3.0, 1e-12);
  EXPECT_NEAR(a[1], 4.0, 1e-12);
  const Vec scaled = z_w(Vec{3, 4}, Vec{6.0 / 14.0, 8.0 / 14.0});
  EXPECT_NEAR(scaled[0], 3.0, 1e-12);
  EXPECT_NEAR(scaled[1], 4.0, 1e-12);
  EXPECT_EQ(z_w(Vec{3, 4}, Vec{1, 0}), (Vec{5, 0}));
  EXPECT_EQ(z_w(Vec{0, 0}, Vec{0.3, 0.7}), (Vec{0, 0}));
  EXPECT_THROW(z_w(Vec{1, 1}, Vec{0, 0}), std::invalid_argument);
  EXPECT_THROW(z_w(Vec{1, 1}, Vec{1, 0, 0}), std::invalid_argument);
}

TEST(ZW, OnSphereAndRay) {
  Rng r(3);
  for (int k = 0; k < 1000; ++k) {
    const Vec zm{r.uniform(-1, 2), r.uniform(-1, 2), r.uniform(-1, 2)};
    Vec w{r.uniform(), r.uniform(), r.uniform()};
    const double s = w[0] + w[1] + w[2];
    for (double& v : w) v /= s;
    const Vec z = z_w(zm, w);
    const double rz = std::sqrt(zm[0] * zm[0] + zm[1] * zm[1] + zm[2] * zm[2]);
    EXPECT_NEAR(std::sqrt(z[0] * z[0] + z[1] * z[1] + z[2] * z[2]), rz, 1e-10);
    // Parallel to w: cross product vanishes.
    EXPECT_NEAR(z[0] * w[1] - z[1] * w[0], 0.0, 1e-10);
    EXPECT_NEAR(z[1] * w[2] - z[2] * w[1], 0.0, 1e-10);
    EXPECT_GE(z[0] * w[0] + z[1] * w[1] + z[2] * w[2], 0.0);
  }
}

TEST(Drp, Endpoints) {
  RefPointState s = state_for(RefStrategy::DRP, 20000);
  Rng r(4);
  const ZChoice last = select_z(s, 20000, Vec{0.5, 0.5}, r);
  EXPECT_NEAR(last.z[0], 0.2 - 0.001, 1e-15);
  EXPECT_NEAR(last.z[1], 0.5 - 0.001, 1e-15);
  const ZChoice first = select_z(s, 1, Vec{0.5, 0.5}, r);
  EXPECT_NEAR(first.z[0], 0.2 - 1.0, 1e-15);
  EXPECT_NEAR(first.z[1], 0.5 - 1.0, 1e-15);
  EXPECT_EQ(first.source, ZSource::Drp);
}

TEST(Drp, StrictlyBelowMinimumAndDecaying) {
  RefPointState s = state_for(RefStrategy::DRP, 20000);
  double prev = INFINITY;
  for (std::size_t fe = 0; fe <= 21000; fe += 50) {
    const double e = drp_epsilon(s, fe);
    EXPECT_GT(e, 0.0);
    EXPECT_LE(e, prev);
    prev = e;
  }
  EXPECT_DOUBLE_EQ(drp_epsilon(s, 0), 1.0);
  EXPECT_DOUBLE_EQ(drp_epsilon(s, 25000), 0.001);
  EXPECT_NEAR(drp_epsilon(s, 10000), (1.0 - 0.001) * 10000.0 / 19999.0 + 0.001, 1e-15);
}

TEST(NormW, Branches) {
  EXPECT_EQ(normw_branch(0.3, 0.2), ZSource::Origin);
  EXPECT_EQ(normw_branch(0.3, 0.4), ZSource::WeightGuided);
  EXPECT_EQ(normw_branch(0.7, 0.2), ZSource::MinPoint);
  EXPECT_EQ(normw_branch(0.5, 0.5), ZSource::MinPoint);
}

TEST(NormW, ScheduleEndpoints) {
  RefPointState s = state_for(RefStrategy::NormW, 20000);
  Rng r(5);
  int weight_guided = 0;
  for (int k = 0; k < 1000; ++k) weight_guided += select_z(s, 1, Vec{0.5, 0.5}, r).source == ZSource::WeightGuided;
  EXPECT_EQ(weight_guided, 1000);
  int min_point = 0;
  for (int k = 0; k < 1000; ++k) min_point += select_z(s, 20000, Vec{0.5, 0.5}, r).source == ZSource::MinPoint;
  EXPECT_EQ(min_point, 1000);
}

TEST(NormW, WeightGuidedValueUsesCurrentWeight) {
  RefPointState s = state_for(RefStrategy::NormW, 20000);
  Rng r(6);
  const ZChoice z = select_z(s, 1, Vec{1.0, 0.0}, r);
  ASSERT_EQ(z.source, ZSource::WeightGuided);
  EXPECT_NEAR(z.z[0], std::sqrt(0.2 * 0.2 + 0.5 * 0.5), 1e-15);
  EXPECT_EQ(z.z[1], 0.0);
}

TEST(NormW, SelectionFrequencies) {
  RefPointState s = state_for(RefStrategy::NormW, 20000);
  for (std::size_t fe : {7000u, 9500u, 10000u, 12000u, 14000u}) {
    Rng r(fe);
    const double pro = gauss_cdf(static_cast<double>(fe), s.mu, s.sigma);
    int wg = 0, origin = 0, minp = 0;
    const int draws = 100000;
    for (int k = 0; k < draws; ++k) {
      switch (select_z(s, fe, Vec{0.5, 0.5}, r).source) {
        case ZSource::WeightGuided: ++wg; break;
        case ZSource::Origin: ++origin; break;
        case ZSource::MinPoint: ++minp; break;
        default: FAIL();
      }
    }
    EXPECT_NEAR(wg / double(draws), 1.0 - pro, 0.01);
    EXPECT_NEAR(origin / double(draws), pro < 0.5 ? pro : 0.0, 0.01);
    EXPECT_NEAR(minp / double(draws), pro >= 0.5 ? pro : 0.0, 0.01);
  }
}

TEST(Min, ReturnsRunningMinimum) {
  RefPointState s = state_for(RefStrategy::Min);
  Rng r(7);
  observe(s, Vec{0.1, 0.7});
  const ZChoice z = select_z(s, 500, Vec{0.5, 0.5}, r);
  EXPECT_EQ(z.z, (Vec{0.1, 0.5}));
  EXPECT_EQ(z.source, ZSource::MinPoint);
}
