#include "xygap/classical.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <thread>

namespace xygap::classical {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kGridCells = 512;

// Slope along theta with phi = 0 and a non-negative longitudinal field.
double slope(double theta, double gamma, double hp) {
  const double s = std::sin(theta);
  const double c = std::cos(theta);
  return -0.5 * s * c - 0.5 * hp * c + 0.5 * gamma * s;
}

double energy(double theta, double gamma, double hp) {
  const double s = std::sin(theta);
  return -0.25 * s * s - 0.5 * hp * s - 0.5 * gamma * std::cos(theta);
}

// Grid clustered quadratically towards theta = 0, where the stationary
// points merge as gamma -> 1 at h = 0.
double grid_point(int i) {
  const double t = static_cast<double>(i) / kGridCells;
  return kPi * t * t;
}

double bisect_root(double lo, double hi, double gamma, double hp) {
  double glo = slope(lo, gamma, hp);
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double gmid = slope(mid, gamma, hp);
    if (gmid == 0.0) return mid;
    if ((gmid < 0.0) == (glo < 0.0)) {
      lo = mid;
      glo = gmid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double golden_section(double lo, double hi, double gamma, double hp) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = energy(x1, gamma, hp);
  double f2 = energy(x2, gamma, hp);
  for (int it = 0; it < 200 && (b - a) > 1e-15 * (1.0 + std::abs(a)); ++it) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = energy(x1, gamma, hp);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = energy(x2, gamma, hp);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

double classical_energy(const ClassicalAngles& angles, const FieldPoint& point) {
  const double s = std::sin(angles.theta0);
  return -0.25 * s * s - 0.5 * point.h * s * std::cos(angles.phi0) - 0.5 * point.gamma * std::cos(angles.theta0);
}

double energy_slope(double theta, double phi, const FieldPoint& point) {
  const double s = std::sin(theta);
  const double c = std::cos(theta);
  return -0.5 * s * c - 0.5 * point.h * std::cos(phi) * c + 0.5 * point.gamma * s;
}

ClassicalAngles minimize_energy(const FieldPoint& point) {
  if (!(point.gamma >= 0.0)) throw std::invalid_argument("minimize_energy requires gamma >= 0");
  const double gamma = point.gamma;
  const double hp = std::abs(point.h);

  std::vector<double> candidates{0.0, kPi};
  double best_grid_energy = energy(0.0, gamma, hp);
  int best_index = 0;

  double t0 = grid_point(0);
  double g0 = slope(t0, gamma, hp);
  for (int i = 1; i <= kGridCells; ++i) {
    const double t1 = i == kGridCells ? kPi : grid_point(i);
    const double g1 = slope(t1, gamma, hp);
    if (g0 == 0.0) {
      candidates.push_back(t0);
    } else if ((g0 < 0.0) != (g1 < 0.0) && g1 != 0.0) {
      candidates.push_back(bisect_root(t0, t1, gamma, hp));
    }
    if (const double e = energy(t1, gamma, hp); e < best_grid_energy) {
      best_grid_energy = e;
      best_index = i;
    }
    t0 = t1;
    g0 = g1;
  }

  // Fallback for a minimum sitting inside a cell without a detected sign
  // change (roots closer together than the grid spacing).
  const double lo = grid_point(std::max(0, best_index - 1));
  const double hi = best_index + 1 >= kGridCells ? kPi : grid_point(best_index + 1);
  candidates.push_back(golden_section(lo, hi, gamma, hp));

  double best = energy(candidates.front(), gamma, hp);
  for (double c : candidates) best = std::min(best, energy(c, gamma, hp));
  // Energies of nearby candidates agree to rounding; the flat minimum only
  // pins theta to sqrt(eps), so break ties by the smaller slope.
  const double tie = 4e-16 * (1.0 + std::abs(best));
  double theta = candidates.front();
  double theta_slope = INFINITY;
  for (double c : candidates) {
    if (energy(c, gamma, hp) > best + tie) continue;
    const double g = std::abs(slope(c, gamma, hp));
    if (g < theta_slope) {
      theta_slope = g;
      theta = c;
    }
  }
  return {theta, point.h < 0.0 ? kPi : 0.0};
}

namespace {

double finish_radicand(double radicand) {
  if (radicand < -kRadicandError) throw WrongBranch("negative gap radicand; theta0 is not the minimizer");
  return radicand < 0.0 ? 0.0 : std::sqrt(radicand);
}

}  // namespace

double thermo_gap(const FieldPoint& point) {
  const double theta0 = minimize_energy(point).theta0;
  const double hp = std::abs(point.h);
  const double s = std::sin(theta0);
  const double c = std::cos(theta0);
  const double a = 1.5 * s * s - 1.0 + hp * s + point.gamma * c;
  const double b = 0.5 * s * s;
  // At an interior stationary point a - b reduces to |h| / sin(theta0);
  // that keeps the radicand exactly zero on the first-order line.
  const bool interior = theta0 > 0.0 && theta0 < kPi;
  const double diff = interior ? hp / s : a - b;
  return finish_radicand(diff * (a + b));
}

double thermo_gap_at(double theta0, const FieldPoint& point) {
  const double hp = std::abs(point.h);
  const double s = std::sin(theta0);
  const double c = std::cos(theta0);
  const double a = 1.5 * s * s - 1.0 + hp * s + point.gamma * c;
  return finish_radicand(a * a - 0.25 * s * s * s * s);
}

double magnetization_x(const FieldPoint& point) {
  const ClassicalAngles angles = minimize_energy(point);
  return std::sin(angles.theta0) * std::cos(angles.phi0);
}

PhaseRecord phase_record(const FieldPoint& point) {
  const ClassicalAngles angles = minimize_energy(point);
  PhaseRecord r;
  r.gamma = point.gamma;
  r.h = point.h;
  r.theta0 = angles.theta0;
  r.m_x = std::sin(angles.theta0) * std::cos(angles.phi0);
  r.gap = thermo_gap(point);
  return r;
}

std::vector<PhaseRecord> phase_diagram_scan(std::span<const double> gammas, std::span<const double> hs,
                                            unsigned jobs) {
  const std::size_t total = gammas.size() * hs.size();
  std::vector<PhaseRecord> out(total);
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t idx = begin; idx < end; ++idx)
      out[idx] = phase_record({gammas[idx / hs.size()], hs[idx % hs.size()]});
  };
  jobs = std::max(1u, jobs);
  if (jobs == 1 || total < 2) {
    work(0, total);
    return out;
  }
  {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (total + jobs - 1) / jobs;
    for (std::size_t begin = 0; begin < total; begin += chunk)
      pool.emplace_back(work, begin, std::min(total, begin + chunk));
  }
  return out;
}

}  // namespace xygap::classical
