#ifndef XYGAP_GAPLAW_HPP
#define XYGAP_GAPLAW_HPP

#include <cstdint>
#include <set>
#include <span>
#include <stdexcept>
#include <string_view>

#include "xygap/rational.hpp"

namespace xygap::gaplaw {

using exact::ExactRational;

enum class Parity { Even, Odd };

inline Parity parity_of(std::int64_t N) { return N % 2 == 0 ? Parity::Even : Parity::Odd; }

/// S_z eigenvalue M of the maximal-spin sector together with its h = 0
/// energy  -(N/2 + 1)/2 + M^2/N - gamma M.
struct MagnetizationLevel {
  std::int64_t N = 0;
  ExactRational M;
  ExactRational energy;
};

/// Distance of gamma N / 2 above the admissible grid: integers for even N,
/// half-odd integers for odd N. Always in [0, 1).
struct DeltaValue {
  ExactRational delta;
  Parity parity = Parity::Even;
  bool degenerate = false;  ///< delta == 1/2: two ground levels
};

enum class Branch { BelowHalf, AboveHalf, Degenerate };

std::string_view to_string(Branch branch);

class DegenerateDelta : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

ExactRational energy_level(std::int64_t N, const ExactRational& M, const ExactRational& gamma);

/// Half-integer floor: the largest half-odd integer not above x.
ExactRational floor_half(const ExactRational& x);

DeltaValue delta_frac(std::int64_t N, const ExactRational& gamma);

/// Level closest to gamma N / 2. Throws DegenerateDelta at delta == 1/2.
MagnetizationLevel ground_M(std::int64_t N, const ExactRational& gamma);

/// Nearest admissible level on the other side of gamma N / 2. At delta == 0
/// both neighbours tie; M0 + 1 is returned.
MagnetizationLevel excited_M(std::int64_t N, const ExactRational& gamma);

/// E(M1) - E(M0) = |1 - 2 delta| / N. Throws DegenerateDelta at delta == 1/2.
ExactRational exact_gap(std::int64_t N, const ExactRational& gamma);

/// One result row; never throws on degeneracy (branch says so instead).
struct GapRecord {
  std::int64_t N = 0;
  ExactRational gamma;
  DeltaValue delta;
  Branch branch = Branch::BelowHalf;
  ExactRational gap;               ///< zero for degenerate rows
  bool excited_degenerate = false;  ///< delta == 0: M0 +- 1 tie
};

GapRecord gap_record(std::int64_t N, const ExactRational& gamma);

/// { N * exact_gap(N, gamma) } over the non-degenerate sizes.
std::set<ExactRational> gap_times_N_value_set(const ExactRational& gamma, std::span<const std::int64_t> sizes);

}  // namespace xygap::gaplaw

#endif  // XYGAP_GAPLAW_HPP
