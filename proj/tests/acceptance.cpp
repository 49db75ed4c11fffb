// Acceptance criteria, one PASS/FAIL line each. Oracles here are written
// independently of the library code paths they check wherever practical.

#include <gmpxx.h>

#include <Eigen/Dense>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "xygap/classical.hpp"
#include "xygap/gamma.hpp"
#include "xygap/gaplaw.hpp"
#include "xygap/scaling.hpp"
#include "xygap/sector.hpp"

namespace {

using namespace xygap;
using exact::ExactRational;

constexpr double kExactVsNumericTol = 1e-12;
constexpr double kClosedFormTol = 1e-14;
constexpr double kFiniteNTol = 1e-2;
constexpr double kFirstOrderGapTol = 1e-14;
constexpr double kJumpEps = 1e-8;
constexpr double kJumpThreshold = 1.0;

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, double limit_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool in_time = limit_s <= 0 || secs < limit_s;
  const bool ok = o.pass && in_time;
  if (!ok) ++failures;
  std::printf("[%s] %d. %s (%.2fs%s) -- %s\n", ok ? "PASS" : "FAIL", id, title, secs,
              in_time ? "" : ", over time limit", o.detail.c_str());
}

// h = 0 levels straight from the diagonal: -(S(S+1) - M^2)/N - gamma M.
mpq_class level_mpq(long N, long twice_M, const mpq_class& g) {
  const mpq_class S(N, 2), M(twice_M, 2);
  mpq_class e = -(S * (S + 1) - M * M) / N - g * M;
  e.canonicalize();
  return e;
}

double dense_gap(long N, double g, double h) {
  const long d = N + 1;
  Eigen::MatrixXd H = Eigen::MatrixXd::Zero(d, d);
  const double S = N / 2.0;
  for (long i = 0; i < d; ++i) {
    const double M = i - S;
    H(i, i) = -(S * (S + 1) - M * M) / N - g * M;
    if (i + 1 < d) H(i, i + 1) = H(i + 1, i) = -(h / 2) * std::sqrt((S - M) * (S + M + 1));
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(H, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(1) - es.eigenvalues()(0);
}

mpz_class two_pow(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

mpz_class factorial(unsigned long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Outcome c1() {
  const ExactRational gammas[] = {0, {1, 5}, {1, 3}, {7, 10}, {99, 100}};
  double worst = 0, worst_dense = 0;
  int rows = 0;
  for (const auto& g : gammas)
    for (long N = 2; N <= 64; N += 2) {
      const auto r = gaplaw::gap_record(N, g);
      if (r.branch == gaplaw::Branch::Degenerate) continue;
      const double numeric = sector::finite_gap_numeric(N, {g.to_double(), 0.0});
      worst = std::max(worst, std::abs(r.gap.to_double() - numeric));
      worst_dense = std::max(worst_dense, std::abs(dense_gap(N, g.to_double(), 0.0) - numeric));
      ++rows;
    }
  std::ostringstream os;
  os << rows << " rows, max |exact - numeric| = " << worst << ", dense cross-check " << worst_dense;
  return {worst < kExactVsNumericTol && worst_dense < kExactVsNumericTol, os.str()};
}

Outcome c2() {
  std::mt19937_64 rng(424242);
  int rows = 0;
  for (int t = 0; t < 50; ++t) {
    const long q = 1 + static_cast<long>(rng() % 1000);
    const long p = static_cast<long>(rng() % q);
    const ExactRational g(p, q);
    const mpq_class gq(p, q);
    for (long N = 1; N <= 200; ++N) {
      std::vector<mpq_class> levels;
      for (long tm = -N; tm <= N; tm += 2) levels.push_back(level_mpq(N, tm, gq));
      std::sort(levels.begin(), levels.end());
      const mpq_class e0 = levels[0], e1 = levels[1];
      const auto r = gaplaw::gap_record(N, g);
      if (r.branch == gaplaw::Branch::Degenerate) {
        if (e1 != e0) return {false, "degenerate flag without a level tie at N=" + std::to_string(N)};
        continue;
      }
      if (r.gap.mpq() != e1 - e0) return {false, "mismatch at N=" + std::to_string(N) + ", gamma=" + g.str()};
      ++rows;
    }
  }
  return {true, std::to_string(rows) + " exact equalities over 50 random gammas, N <= 200"};
}

Outcome c3() {
  double worst = 0;
  for (int i = 0; i < 100; ++i) {
    const double h = 0.01 + 1.99 * i / 99.0;
    worst = std::max(worst, std::abs(classical::thermo_gap({0.0, h}) - std::sqrt(h + h * h)));
  }
  const double g4096 = sector::finite_gap_numeric(4096, {0.0, 0.5});
  const double off = std::abs(g4096 - std::sqrt(0.75));
  std::ostringstream os;
  os << "closed-form max err " << worst << ", N=4096 gap " << g4096 << " (off by " << off << ")";
  return {worst < kClosedFormTol && off < kFiniteNTol, os.str()};
}

Outcome c4() {
  double worst_gap = 0;
  int jumps_ok = 0;
  double min_jump = 1e300, min_jump_gamma = 0;
  for (int i = 0; i < 20; ++i) {
    const double g = 0.99 * i / 19.0;
    worst_gap = std::max(worst_gap, std::abs(classical::thermo_gap({g, 0.0})));
    const double jump = classical::magnetization_x({g, kJumpEps}) - classical::magnetization_x({g, -kJumpEps});
    if (jump > kJumpThreshold) ++jumps_ok;
    if (jump < min_jump) min_jump = jump, min_jump_gamma = g;
  }
  std::ostringstream os;
  os << "max |gap| on h=0 " << worst_gap << "; m_x jump > 1 for " << jumps_ok << "/20 gammas (min jump "
     << min_jump << " at gamma=" << min_jump_gamma << "; classical jump is 2 sqrt(1-gamma^2))";
  return {worst_gap <= kFirstOrderGapTol && jumps_ok == 20, os.str()};
}

Outcome c5() {
  using scaling::SizeRule;
  using exact::SequenceKind;
  const mpq_class half(1, 2);
  std::ostringstream os;
  bool ok = true;

  // (a) N = 16
  const auto ca = scaling::delta_closed_form({SequenceKind::DoubleExp, SizeRule::Term, 4}, 3, 5);
  const mpq_class ga = mpq_class(1, two_pow(16)) + mpq_class(1, two_pow(65536));
  const auto ra = scaling::scaling_row({SequenceKind::DoubleExp, SizeRule::Term, 4}, 3, 5);
  const bool a = ca.N == 16 && ca.direct == ca.closed_form && ra.gap.mpq() == ga;
  os << "(a) " << (a ? "ok" : "FAIL");

  // (b) N = 32 under 2a_n
  const auto cb = scaling::delta_closed_form({SequenceKind::DoubleExp, SizeRule::Double, 4}, 3, 5);
  mpq_class gb = (1 - mpq_class(1, two_pow(11)) - mpq_class(1, two_pow(65531))) / 32;
  gb.canonicalize();
  const auto rb = scaling::scaling_row({SequenceKind::DoubleExp, SizeRule::Double, 4}, 3, 5);
  const bool b = cb.N == 32 && cb.direct == cb.closed_form && rb.gap.mpq() == gb;
  os << ", (b) " << (b ? "ok" : "FAIL");

  // (c) N = 6 with factorial gamma at K = 4
  const auto cc = scaling::delta_closed_form({SequenceKind::Factorial, SizeRule::Term, 3}, 2, 4);
  mpq_class gc = mpq_class(1, 720) + mpq_class(1, factorial(720));
  gc.canonicalize();
  const auto rc = scaling::scaling_row({SequenceKind::Factorial, SizeRule::Term, 3}, 2, 4);
  const bool c = cc.N == 6 && cc.direct == cc.closed_form && rc.gap.mpq() == gc;
  os << ", (c) " << (c ? "ok" : "FAIL");

  // Independent check of the truncated gammas themselves.
  mpq_class gamma_de = half + mpq_class(1, 4) + mpq_class(1, 16) + mpq_class(1, 65536) + mpq_class(1, two_pow(65536));
  gamma_de.canonicalize();
  const mpq_class gamma_f = mpq_class(1, 3) + mpq_class(1, 6) + mpq_class(1, 720) + mpq_class(1, factorial(720));
  const bool g = exact::gamma_value(exact::TruncatedSeries{SequenceKind::DoubleExp, 5}).mpq() == gamma_de &&
                 exact::gamma_value(exact::TruncatedSeries{SequenceKind::Factorial, 4}).mpq() == gamma_f;
  os << ", gammas " << (g ? "ok" : "FAIL");

  const auto e = scaling::scaling_report(SequenceKind::DoubleExp, SizeRule::Term, 5);
  const auto p = scaling::scaling_report(SequenceKind::DoubleExp, SizeRule::Double, 5);
  const auto f = scaling::scaling_report(SequenceKind::Factorial, SizeRule::Term, 4);
  const bool labels = e.classification == scaling::Classification::Exponential &&
                      p.classification == scaling::Classification::Polynomial &&
                      f.classification == scaling::Classification::Factorial;
  os << ", labels " << scaling::to_string(e.classification) << "/" << scaling::to_string(p.classification) << "/"
     << scaling::to_string(f.classification);
  ok = a && b && c && g && labels;
  return {ok, os.str()};
}

Outcome c6() {
  std::vector<std::int64_t> even;
  for (std::int64_t N = 2; N <= 1000; N += 2) even.push_back(N);
  std::size_t worst_excess = 0;
  int checked = 0;
  for (long q = 1; q <= 20; ++q)
    for (long p = 0; p < q; ++p) {
      const auto values = gaplaw::gap_times_N_value_set(ExactRational(p, q), even);
      if (values.size() > static_cast<std::size_t>(q)) worst_excess = std::max(worst_excess, values.size() - q);
      ++checked;
    }
  return {worst_excess == 0, std::to_string(checked) + " gammas p/q, q <= 20"};
}

Outcome c7() {
  using exact::SequenceKind;
  std::ostringstream os;
  // (a)
  bool a = true;
  for (int K = 2; K <= 5; ++K) {
    mpq_class s(0);
    for (int n = 1; n <= K; ++n) {
      s += mpq_class(1, n == 5 ? two_pow(65536) : mpz_class(std::vector<long>{0, 2, 4, 16, 65536}[n]));
      s.canonicalize();
    }
    const auto rem = exact::remainder_bound(SequenceKind::DoubleExp, K);
    a = a && s > mpq_class(1, 2) && s + rem.bound.mpq() < 1 &&
        exact::gamma_bounds_check(exact::TruncatedSeries{SequenceKind::DoubleExp, K});
  }
  os << "(a) " << (a ? "ok" : "FAIL");
  // (b) partial sums over all in-budget terms
  bool b = true;
  for (auto kind : {SequenceKind::DoubleExp, SequenceKind::Factorial}) {
    const int top = exact::max_index_in_budget(kind);
    for (int n = 1; n <= top; ++n) {
      mpq_class partial(0);
      for (int j = n; j <= top; ++j) partial += mpq_class(mpz_class(1), exact::sequence_term(kind, j));
      b = b && partial < exact::tail_bound(kind, n).mpq();
    }
  }
  os << ", (b) " << (b ? "ok" : "FAIL");
  // (c)
  std::mt19937_64 rng(777);
  std::uniform_int_distribution<long> u(1, 99'999'999);
  int intervals = 0;
  bool c = true;
  while (intervals < 100) {
    long x = u(rng), y = u(rng);
    if (x > y) std::swap(x, y);
    if (y - x < 10'000) continue;  // width >= 1e-4 on a 1e-8 lattice
    const ExactRational lo(x, 100'000'000), hi(y, 100'000'000);
    const auto g = scaling::dense_gamma_in_interval(lo, hi);
    // The untruncated value is anchor +- (a tail below 2/a_n); check that whole window.
    const mpq_class reach = 2 * g.anchor.tail_term.mpq();
    const mpq_class anchor = g.anchor.anchor.mpq();
    const bool window = g.anchor.sign > 0 ? lo.mpq() < anchor && anchor + reach < hi.mpq()
                                          : lo.mpq() < anchor - reach && anchor < hi.mpq();
    c = c && lo <= g.enclosure_lower && g.enclosure_upper <= hi && lo < g.value && g.value < hi && window &&
        reach < mpq_class(1) / two_pow(g.anchor.k + 1);
    ++intervals;
  }
  os << ", (c) " << (c ? "ok" : "FAIL") << " on " << intervals;
  // (d)
  std::set<ExactRational> seen;
  for (int i = 0; i < 10; ++i)
    for (int j = 0; j < 10; ++j)
      for (int k = 0; k < 10; ++k) {
        const int digits[] = {i, j, k};
        seen.insert(scaling::injection_gamma(digits).value);
      }
  const bool d = seen.size() == 1000;
  os << ", (d) " << (d ? "ok" : "FAIL") << ": " << seen.size() << "/1000 distinct values";
  return {a && b && c && d, os.str()};
}

}  // namespace

int main() {
  criterion(1, "exact gap law vs eigensolver, even N <= 64", 5, c1);
  criterion(2, "exact gap vs brute-force level enumeration", 10, c2);
  criterion(3, "thermodynamic gap at gamma = 0 and finite-N convergence", 30, c3);
  criterion(4, "first-order line: zero gap and m_x jump", 0, c4);
  criterion(5, "scaling trichotomy certificates at fixed gamma", 10, c5);
  criterion(6, "rational gamma: gap N takes at most q values", 0, c6);
  criterion(7, "series bounds, dense intervals, injectivity", 10, c7);
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
