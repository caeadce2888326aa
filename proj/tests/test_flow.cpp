#include <doctest.h>

#include <cmath>

#include "texlab/errors.hpp"
#include "texlab/flow.hpp"

using namespace texlab;

TEST_CASE("equilibrium vortex number") {
  CHECK(equilibrium_vortex_number(0.0, 3e-3) == 0);
  CHECK(equilibrium_vortex_number(1.0, 3e-3, 6.62e-8) == 854);
  CHECK(equilibrium_vortex_number(0.1, 3e-3, 6.62e-8) == 85);
}

TEST_CASE("counterflow profile shape") {
  const FlowState vf = FlowState::make(0.9, 0.0);  // vortex free
  CHECK(counterflow(vf.radius, vf) == doctest::Approx(2.7e-3).epsilon(1e-12));
  CHECK(vf.cluster_radius() == 0.0);

  const FlowState fl = FlowState::make(0.9, 0.1);
  const double rcl = fl.cluster_radius();
  CHECK(rcl == doctest::Approx(3e-3 * std::sqrt(0.1 / 0.9)).epsilon(1e-12));
  // continuity at the cluster edge from both branches
  CHECK(counterflow(rcl * (1.0 - 1e-9), fl) == 0.0);
  CHECK(counterflow(rcl * (1.0 + 1e-9), fl) == doctest::Approx(0.0).epsilon(1e-6));

  const FlowState eq = FlowState::make(0.7, 0.7);  // equilibrium vortex state
  for (double r : {0.0, 1e-3, 2e-3, 3e-3}) CHECK(counterflow(r, eq) == 0.0);

  CHECK_THROWS_AS(counterflow(4e-3, fl), NumericsError);
  CHECK_THROWS_AS(FlowState::make(0.0, 0.1), ConfigError);
}

TEST_CASE("profile vectorization and endpoint values") {
  const FlowState fl = FlowState::make(0.9, 0.1);
  const double rcl = fl.cluster_radius();
  const auto v = counterflow_profile(fl, {0.0, rcl, fl.radius});
  CHECK(v[0] == 0.0);
  CHECK(v[1] == 0.0);
  CHECK(v[2] == doctest::Approx((0.9 - 0.1) * 3e-3).epsilon(1e-12));

  // vortex-free profile is strictly increasing and maximal at the wall
  const FlowState vf = FlowState::make(0.9, 0.0);
  std::vector<double> grid;
  for (int i = 0; i <= 50; ++i) grid.push_back(3e-3 * i / 50.0);
  const auto prof = counterflow_profile(vf, grid);
  for (size_t i = 1; i < prof.size(); ++i) CHECK(prof[i] > prof[i - 1]);
  CHECK(prof.back() == *std::max_element(prof.begin(), prof.end()));
}

TEST_CASE("monotone response and exact scaling") {
  std::vector<double> grid;
  for (int i = 0; i <= 20; ++i) grid.push_back(3e-3 * i / 20.0);

  const auto base = counterflow_profile(FlowState::make(0.8, 0.2), grid);
  const auto more_omega = counterflow_profile(FlowState::make(1.0, 0.2), grid);
  const auto more_vortices = counterflow_profile(FlowState::make(0.8, 0.3), grid);
  for (size_t i = 0; i < grid.size(); ++i) {
    CHECK(more_omega[i] >= base[i] - 1e-15);
    CHECK(more_vortices[i] <= base[i] + 1e-15);
  }

  const double c = 1.7;
  const auto scaled = counterflow_profile(FlowState::make(c * 0.8, c * 0.2), grid);
  for (size_t i = 0; i < grid.size(); ++i)
    CHECK(scaled[i] == doctest::Approx(c * base[i]).epsilon(1e-12));
}
