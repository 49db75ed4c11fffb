#include "xygap/scaling.hpp"

#include <gmp.h>

#include <cmath>
#include <functional>
#include <sstream>

#include "xygap/gaplaw.hpp"

namespace xygap::scaling {

using exact::BudgetExceeded;

std::string_view to_string(SizeRule rule) { return rule == SizeRule::Term ? "a_n" : "2a_n"; }

SizeRule parse_size_rule(std::string_view text) {
  if (text == "a_n" || text == "an") return SizeRule::Term;
  if (text == "2a_n" || text == "2an") return SizeRule::Double;
  throw std::invalid_argument("unknown size rule '" + std::string(text) + "' (expected a_n or 2a_n)");
}

std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::Polynomial:
      return "Polynomial";
    case Classification::Exponential:
      return "Exponential";
    case Classification::Factorial:
      return "Factorial";
    case Classification::Indeterminate:
      return "Indeterminate";
  }
  return "?";
}

namespace {

BigInt apply_rule(SizeRule rule, const BigInt& term) { return rule == SizeRule::Term ? term : BigInt(2 * term); }

std::vector<BigInt> terms_up_to(SequenceKind kind, int K, BitBudget budget) {
  std::vector<BigInt> terms;
  terms.reserve(static_cast<std::size_t>(K));
  for (int j = 1; j <= K; ++j) terms.push_back(exact::sequence_term(kind, j, budget));
  return terms;
}

std::int64_t to_size(const BigInt& N) {
  if (!N.fits_slong_p()) throw BudgetExceeded("system size " + N.get_str() + " does not fit a 64-bit integer");
  return N.get_si();
}

const ExactRational kHalf(1, 2);

}  // namespace

SequenceTerms sequence_terms(const SizeSequence& seq, BitBudget budget) {
  if (seq.n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  SequenceTerms out;
  out.first = 1;
  out.terms = terms_up_to(seq.kind, seq.n_max, budget);
  for (const auto& a : out.terms) out.sizes.push_back(apply_rule(seq.rule, a));
  return out;
}

BigInt system_size(const SizeSequence& seq, int n, BitBudget budget) {
  return apply_rule(seq.rule, exact::sequence_term(seq.kind, n, budget));
}

DeltaCertificate delta_closed_form(const SizeSequence& seq, int n, int K, BitBudget budget) {
  if (n < 1 || n >= K) throw std::invalid_argument("delta_closed_form needs 1 <= n < K");
  const std::vector<BigInt> a = terms_up_to(seq.kind, K, budget);
  auto term = [&](int j) -> const BigInt& { return a[static_cast<std::size_t>(j - 1)]; };

  DeltaCertificate out;
  out.n = n;
  out.N = apply_rule(seq.rule, term(n));
  const std::int64_t size = to_size(out.N);

  ExactRational gamma;
  for (const auto& t : a) gamma += ExactRational(BigInt(1), t);
  out.direct = gaplaw::delta_frac(size, gamma).delta;

  // The head Sum_{k<n} a_n / a_k must be an integer (even, for N = a_n) so
  // that it drops out of the fractional part.
  for (int k = 1; k < n; ++k) {
    if (!mpz_divisible_p(term(n).get_mpz_t(), term(k).get_mpz_t()))
      throw std::logic_error("closed form needs a_k | a_n for k < n");
    const BigInt quotient = term(n) / term(k);
    if (seq.rule == SizeRule::Term && quotient % 2 != 0)
      throw std::logic_error("closed form needs a_n / a_k even for k < n");
  }

  for (int k = n + 1; k <= K; ++k) out.tail_sum += ExactRational(term(n + 1), term(k));

  if (seq.rule == SizeRule::Term) {
    const ExactRational t = ExactRational(term(n), BigInt(2 * term(n + 1))) * out.tail_sum;
    out.closed_form = size % 2 == 0 ? kHalf + t : t;
  } else {
    out.closed_form = ExactRational(term(n), term(n + 1)) * out.tail_sum;
  }
  if (out.closed_form != out.direct)
    throw std::logic_error("closed-form delta disagrees with the direct fractional part");

  const exact::TailCertificate rest = exact::remainder_bound(seq.kind, K, budget);
  out.coarse_tail = rest.coarse;
  out.delta_slack = ExactRational(out.N) / ExactRational(2) * rest.bound;

  if (out.direct >= kHalf) {
    if (out.direct + out.delta_slack > ExactRational(1))
      throw TruncationInsufficient("remainder could push delta past 1 at n = " + std::to_string(n));
    out.side = HalfSide::Above;
  } else {
    if (out.direct + out.delta_slack > kHalf)
      throw TruncationInsufficient("remainder straddles delta = 1/2 at n = " + std::to_string(n));
    out.side = HalfSide::Below;
  }
  return out;
}

ScalingRow scaling_row(const SizeSequence& seq, int n, int K, BitBudget budget) {
  const DeltaCertificate cert = delta_closed_form(seq, n, K, budget);
  const std::int64_t size = to_size(cert.N);
  const ExactRational N(cert.N);

  ScalingRow row;
  row.n = n;
  row.N = cert.N;
  row.delta = cert.direct;
  row.delta_minus_half = cert.direct - kHalf;
  row.tail_sum = cert.tail_sum;
  row.coarse_tail = cert.coarse_tail;

  const ExactRational gamma = exact::gamma_value(exact::TruncatedSeries{seq.kind, K}, budget);
  row.gap = gaplaw::exact_gap(size, gamma);
  if (row.gap != (ExactRational(1) - ExactRational(2) * cert.closed_form).abs() / N)
    throw std::logic_error("gap from the level energies disagrees with |1 - 2 delta| / N");

  const ExactRational spread = ExactRational(2) * cert.delta_slack / N;
  if (cert.side == HalfSide::Above) {
    row.gap_lower = row.gap;
    row.gap_upper = row.gap + spread;
  } else {
    row.gap_lower = row.gap - spread;
    row.gap_upper = row.gap;
  }
  return row;
}

ExactRational scaling_gap(const SizeSequence& seq, int n, int K, BitBudget budget) {
  return scaling_row(seq, n, K, budget).gap;
}

namespace {

struct RateTest {
  Classification label;
  ExactRational band_lo;
  ExactRational band_hi;
  std::function<std::optional<BigInt>(const BigInt& N, BitBudget)> factor;
  const char* formula;
};

std::vector<RateTest> rate_tests() {
  std::vector<RateTest> tests;
  tests.push_back({Classification::Polynomial, ExactRational(1, 2), ExactRational(1),
                   [](const BigInt& N, BitBudget) -> std::optional<BigInt> { return N; }, "gap*N"});
  tests.push_back({Classification::Exponential, ExactRational(1, 2), ExactRational(2),
                   [](const BigInt& N, BitBudget budget) -> std::optional<BigInt> {
                     if (!N.fits_ulong_p() || N.get_ui() >= budget.bits) return std::nullopt;
                     BigInt p;
                     mpz_ui_pow_ui(p.get_mpz_t(), 2, N.get_ui());
                     return p;
                   },
                   "gap*2^N"});
  tests.push_back({Classification::Factorial, ExactRational(1, 2), ExactRational(2),
                   [](const BigInt& N, BitBudget budget) -> std::optional<BigInt> {
                     if (!N.fits_ulong_p()) return std::nullopt;
                     const double bits = std::lgamma(N.get_d() + 1.0) / std::log(2.0) + 1.0;
                     if (bits > static_cast<double>(budget.bits)) return std::nullopt;
                     BigInt f;
                     mpz_fac_ui(f.get_mpz_t(), N.get_ui());
                     return f;
                   },
                   "gap*N!"});
  return tests;
}

// Scaled enclosures per row if the test holds on all of them.
std::optional<std::vector<std::pair<ExactRational, ExactRational>>> run_test(const RateTest& test,
                                                                             std::span<const ScalingRow> rows,
                                                                             BitBudget budget) {
  std::vector<std::pair<ExactRational, ExactRational>> scaled;
  for (const auto& row : rows) {
    const auto factor = test.factor(row.N, budget);
    if (!factor) return std::nullopt;
    const ExactRational f(*factor);
    ExactRational lo = row.gap_lower * f;
    ExactRational hi = row.gap_upper * f;
    if (lo < test.band_lo || hi > test.band_hi) return std::nullopt;
    scaled.emplace_back(std::move(lo), std::move(hi));
  }
  return scaled;
}

}  // namespace

Classification classify_scaling(std::span<const ScalingRow> rows, BitBudget budget) {
  if (rows.size() < 2) return Classification::Indeterminate;
  Classification found = Classification::Indeterminate;
  int passing = 0;
  for (const auto& test : rate_tests()) {
    if (run_test(test, rows, budget)) {
      found = test.label;
      ++passing;
    }
  }
  return passing == 1 ? found : Classification::Indeterminate;
}

ScalingReport scaling_report(SequenceKind kind, SizeRule rule, int K, BitBudget budget) {
  if (K < 2) throw std::invalid_argument("scaling report needs K >= 2");
  ScalingReport report;
  report.sequence = {kind, rule, K - 1};
  report.gamma = {kind, K};
  report.gamma_value = exact::gamma_value(report.gamma, budget);

  for (int n = 1; n < K; ++n) {
    try {
      report.rows.push_back(scaling_row(report.sequence, n, K, budget));
    } catch (const TruncationInsufficient& e) {
      report.failures.push_back({n, e.what()});
    } catch (const BudgetExceeded& e) {
      report.failures.push_back({n, e.what()});
    }
  }

  std::ostringstream cert;
  if (report.rows.size() < 2) {
    cert << "fewer than two certified rows";
    report.certificate = cert.str();
    return report;
  }
  const std::span<const ScalingRow> window(report.rows.data() + report.rows.size() - 2, 2);
  for (const auto& row : window) report.classified_rows.push_back(row.n);
  report.classification = classify_scaling(window, budget);

  cert << "rows n=" << window[0].n << "," << window[1].n << ": ";
  bool any = false;
  for (const auto& test : rate_tests()) {
    const auto scaled = run_test(test, window, budget);
    if (!scaled) continue;
    any = true;
    cert << test.formula << " in [" << test.band_lo.str() << "," << test.band_hi.str() << "]";
    for (std::size_t i = 0; i < scaled->size(); ++i)
      cert << "; n=" << window[i].n << " encloses (" << (*scaled)[i].first.decimal(8) << ", "
           << (*scaled)[i].second.decimal(8) << ")";
    cert << ". ";
  }
  if (!any) cert << "no rate band holds on every row. ";
  cert << "Untruncated remainder bounded by "
       << (window[1].coarse_tail ? "1/a_K (a_{K+1} beyond budget)" : "2/a_{K+1}") << ".";
  report.certificate = cert.str();
  return report;
}

InjectionGamma injection_gamma(std::span<const int> digits, BitBudget budget) {
  InjectionGamma out;
  out.spec.digits.assign(digits.begin(), digits.end());
  out.value = exact::gamma_value(out.spec, budget);
  const int K = static_cast<int>(digits.size()) - 1;
  // further digits contribute at most 19 / a_j for j >= K + 2
  out.continuation_bound = ExactRational(19) * exact::remainder_bound(SequenceKind::DoubleExp, K + 1, budget).bound;
  out.in_unit_interval = out.value.sign() > 0 && out.value < ExactRational(1);
  return out;
}

IntervalGamma dense_gamma_in_interval(const ExactRational& lower, const ExactRational& upper, BitBudget budget) {
  IntervalGamma out;
  out.spec = {lower, upper};
  out.anchor = exact::interval_anchor(lower, upper, budget);
  const auto& a = out.anchor;
  out.series_bound = ExactRational(2) * a.tail_term;
  if (!(out.series_bound < exact::pow2(-(static_cast<std::int64_t>(a.k) + 1))))
    throw std::logic_error("tail bound 2/a_n is not below 2^-(k+1)");

  // Sum_{j>=n} 1/a_j lies strictly between 1/a_n and 2/a_n.
  if (a.sign > 0) {
    out.value = a.anchor + a.tail_term;
    out.enclosure_lower = out.value;
    out.enclosure_upper = a.anchor + out.series_bound;
  } else {
    out.value = a.anchor - a.tail_term;
    out.enclosure_lower = a.anchor - out.series_bound;
    out.enclosure_upper = out.value;
  }
  if (out.enclosure_lower < lower || out.enclosure_upper > upper)
    throw std::logic_error("interval construction certificate failed");
  return out;
}

}  // namespace xygap::scaling
