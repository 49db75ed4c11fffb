#include <Eigen/Dense>
#include <random>

#include "doctest.h"
#include "xygap/sector.hpp"

using namespace xygap::sector;
using xygap::classical::FieldPoint;

namespace {

Eigen::MatrixXd dense(const SymmetricTridiagonal<double>& T) {
  const auto n = T.size();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  m.diagonal() = T.diag;
  for (Eigen::Index i = 0; i + 1 < n; ++i) m(i, i + 1) = m(i + 1, i) = T.offdiag(i);
  return m;
}

}  // namespace

TEST_CASE("matrix elements") {
  const auto H = build_sector_hamiltonian(2, FieldPoint{0.5, 1.0});
  REQUIRE(H.dimension() == 3);
  // S = 1: diag = -(2 - M^2)/2 - 0.5 M for M = -1, 0, 1.
  CHECK(H.matrix.diag(0) == doctest::Approx(0.0));
  CHECK(H.matrix.diag(1) == doctest::Approx(-1.0));
  CHECK(H.matrix.diag(2) == doctest::Approx(-1.0));
  CHECK(H.matrix.offdiag(0) == doctest::Approx(-std::sqrt(2.0) / 2));
  CHECK(H.magnetization(0) == -1.0);
  CHECK_THROWS(build_sector_hamiltonian(0, FieldPoint{}));
}

TEST_CASE("property: Sturm bisection matches a dense solver for N <= 12") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int trial = 0; trial < 100; ++trial) {
    const std::int64_t N = 1 + trial % 12;
    const auto H = build_sector_hamiltonian(N, FieldPoint{std::abs(u(rng)), u(rng)});
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(dense(H.matrix), Eigen::EigenvaluesOnly);
    const auto mine = lowest_eigenvalues(H, H.dimension()).eigenvalues;
    CHECK((mine - es.eigenvalues()).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("Sturm count and Gershgorin bounds bracket the spectrum") {
  const auto H = build_sector_hamiltonian(20, FieldPoint{0.7, 0.3});
  const auto [lo, hi] = gershgorin_bounds(H.matrix);
  CHECK(sturm_count(H.matrix, lo - 1) == 0);
  CHECK(sturm_count(H.matrix, hi + 1) == 21);
}

TEST_CASE("ground state vector") {
  const auto H = build_sector_hamiltonian(30, FieldPoint{0.4, 0.2});
  const auto s = ground_state_vector(H);
  REQUIRE(s.ground_state);
  const auto& v = *s.ground_state;
  CHECK(v.norm() == doctest::Approx(1.0));
  CHECK((multiply(H.matrix, v) - s.eigenvalues(0) * v).norm() < 1e-10 * H.matrix.norm());
  CHECK(v.maxCoeff() > 0);
  // Exactly degenerate at delta = 1/2: gamma N / 2 = 5/2 with N = 10 at h = 0.
  CHECK_THROWS_AS(ground_state_vector(build_sector_hamiltonian(10, FieldPoint{0.5, 0.0})), DegenerateGroundState);
  CHECK(ground_state_vector(build_sector_hamiltonian(1, FieldPoint{0.5, 0.0})).ground_state->size() == 2);
}

TEST_CASE("property: flipping off-diagonal signs is a gauge transformation") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 30; ++trial) {
    auto H = build_sector_hamiltonian(5 + trial, FieldPoint{std::abs(u(rng)), u(rng)});
    const auto a = lowest_eigenvalues(H, 3).eigenvalues;
    H.matrix.offdiag = -H.matrix.offdiag;
    const auto b = lowest_eigenvalues(H, 3).eigenvalues;
    CHECK((a - b).cwiseAbs().maxCoeff() < 1e-13);
  }
}

TEST_CASE("property: finite gap is symmetric in h") {
  for (std::int64_t N : {4, 9, 32})
    for (double h : {0.1, 0.6})
      CHECK(finite_gap_numeric(N, {0.3, h}) == doctest::Approx(finite_gap_numeric(N, {0.3, -h})).epsilon(1e-12));
}

TEST_CASE("finite gap approaches the thermodynamic value") {
  double prev = 0.0;
  for (std::int64_t N : {16, 64, 256, 1024}) {
    const double g = finite_gap_numeric(N, {0.0, 0.5});
    CHECK(g > prev);
    CHECK(g < std::sqrt(0.75));
    prev = g;
  }
}

TEST_CASE("long double instantiation") {
  const auto H = build_sector_hamiltonian<long double>(8, 0.25L, 0.5L);
  const auto d = build_sector_hamiltonian(8, FieldPoint{0.25, 0.5});
  CHECK(static_cast<double>(lowest_eigenvalues(H, 2).eigenvalues(1)) ==
        doctest::Approx(lowest_eigenvalues(d, 2).eigenvalues(1)).epsilon(1e-13));
}
