#ifndef XYGAP_SECTOR_HPP
#define XYGAP_SECTOR_HPP

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>

#include "xygap/classical.hpp"
#include "xygap/tridiagonal.hpp"

namespace xygap::sector {

/// H restricted to total spin S = N/2, in the S_z basis M = -S, ..., S.
///   diag(M)          = -(S(S+1) - M^2)/N - gamma M
///   <M+1|H|M>        = -(h/2) sqrt((S - M)(S + M + 1))
template <typename Scalar = double>
struct SectorHamiltonian {
  std::int64_t N = 0;
  Scalar gamma{0};
  Scalar h{0};
  SymmetricTridiagonal<Scalar> matrix;

  Eigen::Index dimension() const { return matrix.size(); }
  /// Quantum number M of basis index i.
  Scalar magnetization(Eigen::Index i) const { return Scalar(i) - Scalar(N) / 2; }
};

template <typename Scalar = double>
SectorHamiltonian<Scalar> build_sector_hamiltonian(std::int64_t N, Scalar gamma, Scalar h) {
  using std::sqrt;
  if (N < 1) throw std::invalid_argument("sector Hamiltonian needs N >= 1");
  SectorHamiltonian<Scalar> H;
  H.N = N;
  H.gamma = gamma;
  H.h = h;
  const Scalar n(N);
  const Scalar spin = n / 2;
  H.matrix.diag.resize(N + 1);
  H.matrix.offdiag.resize(N);
  for (Eigen::Index i = 0; i <= N; ++i) {
    const Scalar m = Scalar(i) - spin;
    H.matrix.diag(i) = -(spin * (spin + 1) - m * m) / n - gamma * m;
    if (i < N) H.matrix.offdiag(i) = -(h / 2) * sqrt((spin - m) * (spin + m + 1));
  }
  return H;
}

inline SectorHamiltonian<double> build_sector_hamiltonian(std::int64_t N, const classical::FieldPoint& point) {
  return build_sector_hamiltonian<double>(N, point.gamma, point.h);
}

template <typename Scalar = double>
struct SpectrumSlice {
  Vector<Scalar> eigenvalues;
  std::optional<Vector<Scalar>> ground_state;
};

class DegenerateGroundState : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Relative (to ||H||) separation below which two levels count as degenerate.
inline constexpr double kDegeneracyTolerance = 1e-13;

/// k smallest eigenvalues in ascending order (with multiplicity).
template <typename Scalar>
SpectrumSlice<Scalar> lowest_eigenvalues(const SectorHamiltonian<Scalar>& H, Eigen::Index k) {
  if (k < 1 || k > H.dimension()) throw std::out_of_range("lowest_eigenvalues: need 1 <= k <= N+1");
  SpectrumSlice<Scalar> out;
  out.eigenvalues.resize(k);
  for (Eigen::Index j = 0; j < k; ++j) out.eigenvalues(j) = kth_eigenvalue(H.matrix, j);
  return out;
}

/// Ground-state eigenvalue and unit eigenvector. Throws DegenerateGroundState
/// when the two lowest levels are closer than kDegeneracyTolerance * ||H||.
template <typename Scalar>
SpectrumSlice<Scalar> ground_state_vector(const SectorHamiltonian<Scalar>& H) {
  using std::abs;
  const Scalar scale = H.matrix.norm();
  SpectrumSlice<Scalar> out;
  if (H.dimension() == 1) {
    out.eigenvalues = H.matrix.diag;
    out.ground_state = Vector<Scalar>::Ones(1);
    return out;
  }
  out = lowest_eigenvalues(H, 2);
  if (out.eigenvalues(1) - out.eigenvalues(0) <= Scalar(kDegeneracyTolerance) * scale)
    throw DegenerateGroundState("ground state is degenerate within tolerance");
  Vector<Scalar> v = inverse_iteration(H.matrix, out.eigenvalues(0));
  const Scalar residual = (multiply(H.matrix, v) - out.eigenvalues(0) * v).norm();
  if (residual > Scalar(1e-10) * scale)
    throw std::runtime_error("inverse iteration failed to converge");
  out.ground_state = std::move(v);
  return out;
}

/// E1 - E0 in the maximal-spin sector, clamped at 0.
inline double finite_gap_numeric(std::int64_t N, const classical::FieldPoint& point) {
  const auto H = build_sector_hamiltonian(N, point);
  const auto slice = lowest_eigenvalues(H, 2);
  return std::max(0.0, slice.eigenvalues(1) - slice.eigenvalues(0));
}

}  // namespace xygap::sector

#endif  // XYGAP_SECTOR_HPP
