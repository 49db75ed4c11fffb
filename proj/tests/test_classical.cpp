#include <cmath>
#include <numbers>

#include "doctest.h"
#include "xygap/classical.hpp"

using namespace xygap::classical;

TEST_CASE("energy landscape and minimizer") {
  const FieldPoint p{0.3, 0.0};
  const auto a = minimize_energy(p);
  CHECK(std::cos(a.theta0) == doctest::Approx(0.3).epsilon(1e-12));
  CHECK(energy_slope(a.theta0, a.phi0, p) == doctest::Approx(0.0).epsilon(1e-12));
  // Above gamma = 1 the spin is fully polarized along z.
  CHECK(minimize_energy({1.5, 0.0}).theta0 == doctest::Approx(0.0));
  CHECK(minimize_energy({0.2, -0.4}).phi0 == doctest::Approx(std::numbers::pi));
  CHECK(classical_energy({std::numbers::pi / 2, 0.0}, {0.0, 0.0}) == doctest::Approx(-0.25));
}

TEST_CASE("thermodynamic gap closed forms") {
  for (double h : {0.1, 0.5, 1.0, 2.0}) CHECK(thermo_gap({0.0, h}) == doctest::Approx(std::sqrt(h + h * h)).epsilon(1e-14));
  for (double g : {0.0, 0.3, 0.9, 0.99}) CHECK(thermo_gap({g, 0.0}) == 0.0);
  for (double g : {1.2, 1.5, 2.0}) CHECK(thermo_gap({g, 0.0}) == doctest::Approx(g - 1.0).epsilon(1e-12));
}

TEST_CASE("gap is even in h") {
  for (double g : {0.0, 0.4, 0.8, 1.3})
    for (double h : {0.05, 0.3, 0.9}) CHECK(thermo_gap({g, h}) == doctest::Approx(thermo_gap({g, -h})).epsilon(1e-12));
}

TEST_CASE("first-order line: m_x jumps by 2 sqrt(1 - gamma^2)") {
  for (int i = 0; i < 20; ++i) {
    const double g = 0.99 * i / 19.0;
    const double jump = magnetization_x({g, 1e-8}) - magnetization_x({g, -1e-8});
    CHECK(jump == doctest::Approx(2.0 * std::sqrt(1.0 - g * g)).epsilon(1e-6));
    if (g < std::sqrt(3.0) / 2) CHECK(jump > 1.0);
  }
  CHECK(std::abs(magnetization_x({1.5, 1e-8}) - magnetization_x({1.5, -1e-8})) < 1e-6);
}

TEST_CASE("property: h -> 0 continuity of the gap off the first-order line") {
  for (double g : {1.1, 1.5, 2.0}) {
    double prev = thermo_gap({g, 1e-1});
    for (double h = 1e-2; h > 1e-9; h /= 10) {
      const double cur = thermo_gap({g, h});
      CHECK(std::abs(cur - (g - 1)) <= std::abs(prev - (g - 1)) + 1e-15);
      prev = cur;
    }
    CHECK(prev == doctest::Approx(g - 1).epsilon(1e-6));
  }
}

TEST_CASE("thermo_gap_at rejects non-minimizers") {
  // sin^2 theta = 2/3 at gamma = h = 0 makes the first quadratic coefficient vanish.
  CHECK_THROWS_AS(thermo_gap_at(std::asin(std::sqrt(2.0 / 3.0)), {0.0, 0.0}), WrongBranch);
  const FieldPoint p{0.4, 0.3};
  CHECK(thermo_gap_at(minimize_energy(p).theta0, p) == doctest::Approx(thermo_gap(p)).epsilon(1e-7));
}

TEST_CASE("scan is gamma-major and independent of the thread count") {
  const std::vector<double> gs = {0.0, 0.5, 1.0, 1.5}, hs = {-0.5, 0.0, 0.5};
  const auto one = phase_diagram_scan(gs, hs, 1);
  const auto many = phase_diagram_scan(gs, hs, 5);
  REQUIRE(one.size() == 12);
  REQUIRE(many.size() == 12);
  for (std::size_t i = 0; i < one.size(); ++i) {
    CHECK(one[i].gamma == gs[i / 3]);
    CHECK(one[i].h == hs[i % 3]);
    CHECK(one[i].gap == many[i].gap);
    CHECK(one[i].m_x == many[i].m_x);
  }
}
