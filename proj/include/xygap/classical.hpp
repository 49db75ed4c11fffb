#ifndef XYGAP_CLASSICAL_HPP
#define XYGAP_CLASSICAL_HPP

#include <span>
#include <stdexcept>
#include <vector>

namespace xygap::classical {

/// Dimensionless transverse (gamma) and longitudinal (h) fields.
struct FieldPoint {
  double gamma = 0.0;
  double h = 0.0;
};

/// Direction of the classical total spin: polar angle theta0 in [0, pi] and
/// azimuth phi0, which is 0 for h >= 0 and pi for h < 0.
struct ClassicalAngles {
  double theta0 = 0.0;
  double phi0 = 0.0;
};

/// Thrown by thermo_gap when the radicand is clearly negative, which only
/// happens if the angle passed in is not the minimizer.
class WrongBranch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr double kRadicandClamp = 1e-12;
inline constexpr double kRadicandError = 1e-9;

/// Energy per spin of the classical vector:
///   -1/4 sin^2(theta) - 1/2 h sin(theta) cos(phi) - 1/2 gamma cos(theta).
double classical_energy(const ClassicalAngles& angles, const FieldPoint& point);

/// d(energy)/d(theta) at fixed phi.
double energy_slope(double theta, double phi, const FieldPoint& point);

/// Global minimizer over theta in [0, pi]. All stationary points are
/// bracketed on a uniform grid and bisected; the endpoints are included and
/// the candidate of lowest energy wins.
ClassicalAngles minimize_energy(const FieldPoint& point);

/// Thermodynamic-limit gap from the quadratic boson expansion around the
/// minimizer:
///   sqrt((3/2 s^2 - 1 + |h| s + gamma c)^2 - 1/4 s^4),  s = sin(theta0), c = cos(theta0).
double thermo_gap(const FieldPoint& point);

/// Same expression evaluated at a caller-supplied angle, without the
/// stationarity reduction. Used to cross-check thermo_gap.
double thermo_gap_at(double theta0, const FieldPoint& point);

/// sin(theta0) cos(phi0) of the minimizer.
double magnetization_x(const FieldPoint& point);

struct PhaseRecord {
  double gamma = 0.0;
  double h = 0.0;
  double theta0 = 0.0;
  double m_x = 0.0;
  double gap = 0.0;
};

PhaseRecord phase_record(const FieldPoint& point);

/// One record per (gamma, h) pair, gamma-major. `jobs` > 1 fans the grid out
/// over worker threads; results come back in grid order regardless.
std::vector<PhaseRecord> phase_diagram_scan(std::span<const double> gammas, std::span<const double> hs,
                                            unsigned jobs = 1);

}  // namespace xygap::classical

#endif  // XYGAP_CLASSICAL_HPP
