#include "xygap/verify.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "xygap/gaplaw.hpp"
#include "xygap/scaling.hpp"
#include "xygap/sector.hpp"

namespace xygap::verify {

using exact::ExactRational;

namespace {

SuiteResult timed(std::string name, const std::function<std::string(bool&)>& body) {
  SuiteResult r;
  r.name = std::move(name);
  const auto start = std::chrono::steady_clock::now();
  bool ok = true;
  try {
    r.detail = body(ok);
  } catch (const std::exception& e) {
    ok = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.passed = ok;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

double numeric_gap(std::int64_t N, double gamma, double h, bool flip) {
  auto H = sector::build_sector_hamiltonian(N, classical::FieldPoint{gamma, h});
  if (flip) H.matrix.offdiag = -H.matrix.offdiag;
  const auto slice = sector::lowest_eigenvalues(H, 2);
  return std::max(0.0, slice.eigenvalues(1) - slice.eigenvalues(0));
}

ExactRational random_gamma(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> den_dist(1, 997);
  const long q = den_dist(rng);
  std::uniform_int_distribution<long> num_dist(0, q - 1);
  return ExactRational(num_dist(rng), q);
}

}  // namespace

SuiteResult check_exact_vs_numeric(const VerifyConfig& config) {
  return timed("exact gap law vs sector eigensolver (h = 0)", [&](bool& ok) {
    const ExactRational gammas[] = {ExactRational(0), ExactRational(1, 5), ExactRational(1, 3), ExactRational(7, 10),
                                    ExactRational(99, 100)};
    double worst = 0.0;
    int checked = 0;
    for (const auto& g : gammas) {
      for (std::int64_t N = 1; N <= config.max_N; ++N) {
        const auto record = gaplaw::gap_record(N, g);
        if (record.branch == gaplaw::Branch::Degenerate) continue;
        const double diff = std::abs(record.gap.to_double() - numeric_gap(N, g.to_double(), 0.0, config.flip_offdiag_sign));
        worst = std::max(worst, diff);
        ++checked;
      }
    }
    ok = worst < 1e-12;
    std::ostringstream os;
    os << checked << " points, max |exact - numeric| = " << worst;
    return os.str();
  });
}

SuiteResult check_level_enumeration(const VerifyConfig& config) {
  return timed("exact gap vs full level enumeration", [&](bool& ok) {
    std::mt19937_64 rng(config.seed);
    int checked = 0;
    for (int trial = 0; trial < 50; ++trial) {
      const ExactRational g = random_gamma(rng);
      for (std::int64_t N = 1; N <= 200; ++N) {
        const auto record = gaplaw::gap_record(N, g);
        if (record.branch == gaplaw::Branch::Degenerate) continue;
        std::vector<ExactRational> energies;
        for (std::int64_t twice = -N; twice <= N; twice += 2)
          energies.push_back(gaplaw::energy_level(N, ExactRational(twice, 2), g));
        std::sort(energies.begin(), energies.end());
        if (energies[1] - energies[0] != record.gap) {
          ok = false;
          return "mismatch at N=" + std::to_string(N) + ", gamma=" + g.str();
        }
        ++checked;
      }
    }
    return std::to_string(checked) + " exact equalities";
  });
}

SuiteResult check_delta_closed_form(const VerifyConfig& config) {
  return timed("closed-form delta vs direct fractional part", [&](bool& ok) {
    int checked = 0;
    const std::pair<exact::SequenceKind, int> runs[] = {{exact::SequenceKind::DoubleExp, 5},
                                                        {exact::SequenceKind::Factorial, 4}};
    for (const auto& [kind, K] : runs)
      for (auto rule : {scaling::SizeRule::Term, scaling::SizeRule::Double})
        for (int n = 1; n < K; ++n) {
          const auto cert = scaling::delta_closed_form({kind, rule, K - 1}, n, K, config.budget);
          if (cert.closed_form != cert.direct) ok = false;
          ++checked;
        }
    return std::to_string(checked) + " (sequence, rule, n) cases agree exactly";
  });
}

SuiteResult check_series_bounds(const VerifyConfig& config) {
  return timed("gamma in (1/2, 1) and tail bound 2/a_n", [&](bool& ok) {
    std::ostringstream os;
    for (int K = 2; K <= 5; ++K) {
      const bool inside = exact::gamma_bounds_check(exact::TruncatedSeries{exact::SequenceKind::DoubleExp, K}, config.budget);
      ok = ok && inside;
      os << "K=" << K << (inside ? " ok; " : " FAIL; ");
    }
    for (auto kind : {exact::SequenceKind::DoubleExp, exact::SequenceKind::Factorial}) {
      const int top = exact::max_index_in_budget(kind, config.budget);
      for (int n = 1; n < top; ++n) {
        ExactRational partial;
        for (int j = n; j <= top; ++j) partial += ExactRational(exact::BigInt(1), exact::sequence_term(kind, j, config.budget));
        if (!(partial < exact::tail_bound(kind, n, config.budget))) {
          ok = false;
          os << "tail bound violated at n=" << n << "; ";
        }
      }
    }
    return os.str();
  });
}

SuiteResult check_dense_intervals(const VerifyConfig& config) {
  return timed("dense-interval construction", [&](bool& ok) {
    std::mt19937_64 rng(config.seed + 1);
    std::uniform_int_distribution<long> dist(1, 999'999);
    int checked = 0;
    while (checked < 100) {
      long x = dist(rng), y = dist(rng);
      if (x > y) std::swap(x, y);
      if (y - x < 100) continue;
      const ExactRational a(x, 1'000'000), b(y, 1'000'000);
      const auto g = scaling::dense_gamma_in_interval(a, b, config.budget);
      if (!(a < g.enclosure_lower && g.enclosure_upper < b) && !(a <= g.enclosure_lower && g.enclosure_upper <= b)) {
        ok = false;
        return "membership failed for (" + a.str() + ", " + b.str() + ")";
      }
      ++checked;
    }
    return std::to_string(checked) + " intervals certified";
  });
}

SuiteResult check_gauge_invariance(const VerifyConfig& config) {
  return timed("off-diagonal sign flip leaves the spectrum unchanged", [&](bool& ok) {
    std::mt19937_64 rng(config.seed + 2);
    std::uniform_real_distribution<double> field(-1.5, 1.5);
    double worst = 0.0;
    for (int trial = 0; trial < 40; ++trial) {
      const std::int64_t N = 1 + trial % std::max(1, std::min(config.max_N, 48));
      const double gamma = std::abs(field(rng)), h = field(rng);
      auto H = sector::build_sector_hamiltonian(N, classical::FieldPoint{gamma, h});
      auto flipped = H;
      flipped.matrix.offdiag = -flipped.matrix.offdiag;
      const auto k = std::min<Eigen::Index>(3, H.dimension());
      const auto a = sector::lowest_eigenvalues(H, k).eigenvalues;
      const auto b = sector::lowest_eigenvalues(flipped, k).eigenvalues;
      worst = std::max(worst, (a - b).cwiseAbs().maxCoeff());
    }
    ok = worst < 1e-12;
    std::ostringstream os;
    os << "max eigenvalue shift " << worst;
    return os.str();
  });
}

SuiteResult check_scaling_trichotomy(const VerifyConfig& config) {
  return timed("scaling trichotomy at fixed gamma", [&](bool& ok) {
    using scaling::Classification;
    const auto expo = scaling::scaling_report(exact::SequenceKind::DoubleExp, scaling::SizeRule::Term, 5, config.budget);
    const auto poly = scaling::scaling_report(exact::SequenceKind::DoubleExp, scaling::SizeRule::Double, 5, config.budget);
    const auto fact = scaling::scaling_report(exact::SequenceKind::Factorial, scaling::SizeRule::Term, 4, config.budget);
    ok = expo.classification == Classification::Exponential && poly.classification == Classification::Polynomial &&
         fact.classification == Classification::Factorial;
    return std::string(scaling::to_string(expo.classification)) + " / " + std::string(scaling::to_string(poly.classification)) +
           " / " + std::string(scaling::to_string(fact.classification));
  });
}

std::vector<SuiteResult> run_all(const VerifyConfig& config) {
  return {check_exact_vs_numeric(config),  check_level_enumeration(config), check_delta_closed_form(config),
          check_series_bounds(config),   check_dense_intervals(config),   check_gauge_invariance(config),
          check_scaling_trichotomy(config)};
}

}  // namespace xygap::verify
