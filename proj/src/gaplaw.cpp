#include "xygap/gaplaw.hpp"

namespace xygap::gaplaw {

using exact::BigInt;

std::string_view to_string(Branch branch) {
  switch (branch) {
    case Branch::BelowHalf:
      return "below_half";
    case Branch::AboveHalf:
      return "above_half";
    case Branch::Degenerate:
      return "degenerate";
  }
  return "?";
}

namespace {

void check_size(std::int64_t N) {
  if (N < 1) throw std::invalid_argument("system size N must be >= 1");
}

void check_gamma(const ExactRational& gamma) {
  if (gamma.sign() < 0 || gamma >= ExactRational(1))
    throw std::invalid_argument("the h = 0 gap law needs 0 <= gamma < 1");
}

const ExactRational kHalf(1, 2);

}  // namespace

ExactRational energy_level(std::int64_t N, const ExactRational& M, const ExactRational& gamma) {
  check_size(N);
  const ExactRational twice = M * ExactRational(2);
  if (!twice.is_integer()) throw std::invalid_argument("M must be an integer or half-odd integer");
  const bool odd_twice = twice.numerator() % 2 != 0;
  if (odd_twice != (N % 2 != 0)) throw std::invalid_argument("parity of 2M must match N");
  if (M.abs() > exact::half(N)) throw std::invalid_argument("|M| must not exceed N/2");
  return -(exact::half(N) + ExactRational(1)) / ExactRational(2) + M * M / ExactRational(N) - gamma * M;
}

ExactRational floor_half(const ExactRational& x) { return ExactRational((x - kHalf).floor()) + kHalf; }

DeltaValue delta_frac(std::int64_t N, const ExactRational& gamma) {
  check_size(N);
  check_gamma(gamma);
  const ExactRational x = gamma * exact::half(N);
  DeltaValue out;
  out.parity = parity_of(N);
  out.delta = out.parity == Parity::Even ? x.frac() : x - floor_half(x);
  out.degenerate = out.delta == kHalf;
  return out;
}

namespace {

// Lower grid neighbour of gamma N / 2.
ExactRational grid_floor(std::int64_t N, const ExactRational& gamma) {
  const ExactRational x = gamma * exact::half(N);
  return N % 2 == 0 ? ExactRational(x.floor()) : floor_half(x);
}

MagnetizationLevel level(std::int64_t N, ExactRational M, const ExactRational& gamma) {
  MagnetizationLevel out;
  out.N = N;
  out.energy = energy_level(N, M, gamma);
  out.M = std::move(M);
  return out;
}

}  // namespace

MagnetizationLevel ground_M(std::int64_t N, const ExactRational& gamma) {
  const DeltaValue d = delta_frac(N, gamma);
  if (d.degenerate) throw DegenerateDelta("delta = 1/2: two degenerate ground levels");
  ExactRational M = grid_floor(N, gamma);
  if (d.delta > kHalf) M += ExactRational(1);
  return level(N, std::move(M), gamma);
}

MagnetizationLevel excited_M(std::int64_t N, const ExactRational& gamma) {
  const DeltaValue d = delta_frac(N, gamma);
  if (d.degenerate) throw DegenerateDelta("delta = 1/2: two degenerate ground levels");
  ExactRational M = grid_floor(N, gamma);
  M += d.delta < kHalf ? ExactRational(1) : ExactRational(0);
  return level(N, std::move(M), gamma);
}

ExactRational exact_gap(std::int64_t N, const ExactRational& gamma) {
  const MagnetizationLevel ground = ground_M(N, gamma);
  const MagnetizationLevel excited = excited_M(N, gamma);
  return excited.energy - ground.energy;
}

GapRecord gap_record(std::int64_t N, const ExactRational& gamma) {
  GapRecord r;
  r.N = N;
  r.gamma = gamma;
  r.delta = delta_frac(N, gamma);
  if (r.delta.degenerate) {
    r.branch = Branch::Degenerate;
    return r;
  }
  r.branch = r.delta.delta < kHalf ? Branch::BelowHalf : Branch::AboveHalf;
  r.gap = exact_gap(N, gamma);
  r.excited_degenerate = r.delta.delta.is_zero();
  return r;
}

std::set<ExactRational> gap_times_N_value_set(const ExactRational& gamma, std::span<const std::int64_t> sizes) {
  std::set<ExactRational> out;
  for (const std::int64_t N : sizes) {
    const GapRecord r = gap_record(N, gamma);
    if (r.branch != Branch::Degenerate) out.insert(r.gap * ExactRational(N));
  }
  return out;
}

}  // namespace xygap::gaplaw
