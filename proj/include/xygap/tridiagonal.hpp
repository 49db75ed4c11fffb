#ifndef XYGAP_TRIDIAGONAL_HPP
#define XYGAP_TRIDIAGONAL_HPP

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <utility>

namespace xygap::sector {

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Real symmetric tridiagonal matrix: `diag` has n entries, `offdiag` n - 1.
template <typename Scalar>
struct SymmetricTridiagonal {
  Vector<Scalar> diag;
  Vector<Scalar> offdiag;

  Eigen::Index size() const { return diag.size(); }

  /// Max absolute row sum.
  Scalar norm() const {
    using std::abs;
    Scalar best(0);
    const Eigen::Index n = size();
    for (Eigen::Index i = 0; i < n; ++i) {
      Scalar row = abs(diag(i));
      if (i > 0) row += abs(offdiag(i - 1));
      if (i + 1 < n) row += abs(offdiag(i));
      best = std::max(best, row);
    }
    return best;
  }
};

/// y = T x
template <typename Scalar, typename Derived>
Vector<Scalar> multiply(const SymmetricTridiagonal<Scalar>& t, const Eigen::MatrixBase<Derived>& x) {
  const Eigen::Index n = t.size();
  Vector<Scalar> y = t.diag.cwiseProduct(x);
  if (n > 1) {
    y.head(n - 1) += t.offdiag.cwiseProduct(x.tail(n - 1));
    y.tail(n - 1) += t.offdiag.cwiseProduct(x.head(n - 1));
  }
  return y;
}

/// Gershgorin interval containing the whole spectrum.
template <typename Scalar>
std::pair<Scalar, Scalar> gershgorin_bounds(const SymmetricTridiagonal<Scalar>& t) {
  using std::abs;
  const Eigen::Index n = t.size();
  Scalar lo = std::numeric_limits<Scalar>::max();
  Scalar hi = std::numeric_limits<Scalar>::lowest();
  for (Eigen::Index i = 0; i < n; ++i) {
    Scalar radius(0);
    if (i > 0) radius += abs(t.offdiag(i - 1));
    if (i + 1 < n) radius += abs(t.offdiag(i));
    lo = std::min(lo, t.diag(i) - radius);
    hi = std::max(hi, t.diag(i) + radius);
  }
  return {lo, hi};
}

/// Number of eigenvalues strictly below x, from the signs of the LDL^T
/// pivots of T - xI (Sturm sequence).
template <typename Scalar>
Eigen::Index sturm_count(const SymmetricTridiagonal<Scalar>& t, Scalar x) {
  using std::abs;
  const Eigen::Index n = t.size();
  Scalar max_e2 = Scalar(1);
  for (Eigen::Index i = 0; i + 1 < n; ++i) max_e2 = std::max(max_e2, t.offdiag(i) * t.offdiag(i));
  const Scalar pivmin = std::numeric_limits<Scalar>::min() * max_e2;

  Eigen::Index count = 0;
  Scalar q = t.diag(0) - x;
  if (abs(q) <= pivmin) q = -pivmin;
  if (q < 0) ++count;
  for (Eigen::Index i = 1; i < n; ++i) {
    const Scalar e = t.offdiag(i - 1);
    q = t.diag(i) - x - e * e / q;
    if (abs(q) <= pivmin) q = -pivmin;
    if (q < 0) ++count;
  }
  return count;
}

/// The (k+1)-th smallest eigenvalue (k is 0-based) by bisection on the
/// Sturm count, refined until the bracket is at machine resolution.
template <typename Scalar>
Scalar kth_eigenvalue(const SymmetricTridiagonal<Scalar>& t, Eigen::Index k) {
  using std::abs;
  if (k < 0 || k >= t.size()) throw std::out_of_range("eigenvalue index outside the matrix");
  const Scalar eps = std::numeric_limits<Scalar>::epsilon();
  auto [lo, hi] = gershgorin_bounds(t);
  const Scalar scale = std::max(t.norm(), std::numeric_limits<Scalar>::min());
  lo -= eps * scale * 4;
  hi += eps * scale * 4;
  const Scalar abs_tol = eps * scale;
  for (int it = 0; it < 4096; ++it) {
    const Scalar mid = lo + (hi - lo) / 2;
    if (mid <= lo || mid >= hi) break;
    if (hi - lo <= std::max(2 * eps * std::max(abs(lo), abs(hi)), abs_tol)) break;
    if (sturm_count(t, mid) >= k + 1)
      hi = mid;
    else
      lo = mid;
  }
  return lo + (hi - lo) / 2;
}

/// Solves (T - shift I) x = b by Gaussian elimination with partial pivoting
/// on the tridiagonal band. Exactly singular pivots are replaced by `tiny`,
/// which is what inverse iteration wants.
template <typename Scalar>
Vector<Scalar> shifted_solve(const SymmetricTridiagonal<Scalar>& t, Scalar shift, Vector<Scalar> b, Scalar tiny) {
  using std::abs;
  const Eigen::Index n = t.size();
  Vector<Scalar> d = t.diag.array() - shift;
  if (n == 1) {
    if (abs(d(0)) < tiny) d(0) = tiny;
    b(0) /= d(0);
    return b;
  }
  Vector<Scalar> dl = t.offdiag;
  Vector<Scalar> du = t.offdiag;
  Vector<Scalar> du2 = Vector<Scalar>::Zero(n);
  Eigen::Matrix<bool, Eigen::Dynamic, 1> swapped = Eigen::Matrix<bool, Eigen::Dynamic, 1>::Constant(n, false);

  for (Eigen::Index i = 0; i + 1 < n; ++i) {
    if (abs(d(i)) >= abs(dl(i))) {
      if (d(i) == Scalar(0)) d(i) = tiny;
      const Scalar fact = dl(i) / d(i);
      dl(i) = fact;
      d(i + 1) -= fact * du(i);
    } else {
      const Scalar fact = d(i) / dl(i);
      d(i) = dl(i);
      dl(i) = fact;
      const Scalar temp = du(i);
      du(i) = d(i + 1);
      d(i + 1) = temp - fact * d(i + 1);
      if (i + 2 < n) {
        du2(i) = du(i + 1);
        du(i + 1) = -fact * du(i + 1);
      }
      swapped(i) = true;
    }
  }
  for (Eigen::Index i = 0; i < n; ++i)
    if (abs(d(i)) < tiny) d(i) = d(i) < 0 ? -tiny : tiny;

  for (Eigen::Index i = 0; i + 1 < n; ++i) {
    if (!swapped(i)) {
      b(i + 1) -= dl(i) * b(i);
    } else {
      const Scalar temp = b(i);
      b(i) = b(i + 1);
      b(i + 1) = temp - dl(i) * b(i);
    }
  }
  b(n - 1) /= d(n - 1);
  b(n - 2) = (b(n - 2) - du(n - 2) * b(n - 1)) / d(n - 2);
  for (Eigen::Index i = n - 3; i >= 0; --i) b(i) = (b(i) - du(i) * b(i + 1) - du2(i) * b(i + 2)) / d(i);
  return b;
}

/// Unit eigenvector for an (isolated) eigenvalue by inverse iteration from a
/// fixed pseudo-random start. The largest-magnitude component is positive.
template <typename Scalar>
Vector<Scalar> inverse_iteration(const SymmetricTridiagonal<Scalar>& t, Scalar eigenvalue, int iterations = 4) {
  const Eigen::Index n = t.size();
  const Scalar scale = std::max(t.norm(), std::numeric_limits<Scalar>::min());
  const Scalar tiny = std::numeric_limits<Scalar>::epsilon() * scale;

  Vector<Scalar> v(n);
  std::uint64_t state = 0x9E3779B97F4A7C15ull;
  for (Eigen::Index i = 0; i < n; ++i) {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    v(i) = Scalar(0.5) + Scalar((state >> 11) & 0xFFFFF) / Scalar(0x100000);
  }
  v.normalize();
  for (int it = 0; it < iterations; ++it) {
    v = shifted_solve(t, eigenvalue, std::move(v), tiny);
    v.normalize();
  }
  Eigen::Index arg = 0;
  v.cwiseAbs().maxCoeff(&arg);
  if (v(arg) < 0) v = -v;
  return v;
}

}  // namespace xygap::sector

#endif  // XYGAP_TRIDIAGONAL_HPP
