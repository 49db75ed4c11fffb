#ifndef XYGAP_SCALING_HPP
#define XYGAP_SCALING_HPP

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "xygap/gamma.hpp"
#include "xygap/rational.hpp"

namespace xygap::scaling {

using exact::BigInt;
using exact::BitBudget;
using exact::ExactRational;
using exact::SequenceKind;

enum class SizeRule {
  Term,    ///< N_n = a_n
  Double,  ///< N_n = 2 a_n
};

std::string_view to_string(SizeRule rule);
SizeRule parse_size_rule(std::string_view text);

struct SizeSequence {
  SequenceKind kind = SequenceKind::DoubleExp;
  SizeRule rule = SizeRule::Term;
  int n_max = 4;
};

struct SequenceTerms {
  int first = 1;              ///< index of terms[0]
  std::vector<BigInt> terms;  ///< a_first .. a_{n_max}
  std::vector<BigInt> sizes;  ///< N_first .. N_{n_max}
};

/// Exact terms a_1..a_{n_max} and sizes per the rule. Throws
/// exact::BudgetExceeded if a_{n_max} does not fit.
SequenceTerms sequence_terms(const SizeSequence& seq, BitBudget budget = {});

BigInt system_size(const SizeSequence& seq, int n, BitBudget budget = {});

class TruncationInsufficient : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class HalfSide { Below, Above };

/// delta(N_n, Gamma_K) computed two ways and compared exactly, plus a bound
/// on how far the untruncated delta can sit above the truncated one.
struct DeltaCertificate {
  int n = 0;
  BigInt N;
  ExactRational direct;       ///< frac(Gamma_K N_n / 2) with the parity-aware grid
  ExactRational closed_form;  ///< from the tail sum over a_{n+1}/a_k
  ExactRational tail_sum;     ///< Sum_{k=n+1}^{K} a_{n+1} / a_k
  ExactRational delta_slack;  ///< untruncated delta lies in (delta, delta + slack)
  bool coarse_tail = false;
  HalfSide side = HalfSide::Above;
  ExactRational delta() const { return direct; }
};

/// Requires 1 <= n < K. Throws TruncationInsufficient if the slack makes the
/// side of 1/2 undecidable, std::logic_error if the two routes disagree.
DeltaCertificate delta_closed_form(const SizeSequence& seq, int n, int K, BitBudget budget = {});

/// Exact gap at (N_n, Gamma_K), i.e. |1 - 2 delta| / N_n.
ExactRational scaling_gap(const SizeSequence& seq, int n, int K, BitBudget budget = {});

enum class Classification { Polynomial, Exponential, Factorial, Indeterminate };

std::string_view to_string(Classification c);

struct ScalingRow {
  int n = 0;
  BigInt N;
  ExactRational delta;
  ExactRational delta_minus_half;
  ExactRational gap;        ///< at the truncated Gamma
  ExactRational gap_lower;  ///< certified enclosure of the untruncated gap
  ExactRational gap_upper;
  ExactRational tail_sum;
  bool coarse_tail = false;
};

ScalingRow scaling_row(const SizeSequence& seq, int n, int K, BitBudget budget = {});

/// Polynomial:  gap N      in [1/2, 1]
/// Exponential: gap 2^N    in [1/2, 2]
/// Factorial:   gap N!     in [1/2, 2]
/// A label is returned only if exactly one test holds on the certified
/// enclosure of every row. Quantities that do not fit the budget count as a
/// failed test.
Classification classify_scaling(std::span<const ScalingRow> rows, BitBudget budget = {});

struct ScalingReport {
  SizeSequence sequence;
  exact::TruncatedSeries gamma;
  ExactRational gamma_value;
  std::vector<ScalingRow> rows;
  struct RowFailure {
    int n = 0;
    std::string reason;
  };
  std::vector<RowFailure> failures;  ///< rows that could not be certified
  std::vector<int> classified_rows;  ///< indices n used for the label
  Classification classification = Classification::Indeterminate;
  std::string certificate;
};

/// Rows n = 1 .. K-1 (capped by budget); classification uses the two largest
/// row indices.
ScalingReport scaling_report(SequenceKind kind, SizeRule rule, int K, BitBudget budget = {});

struct InjectionGamma {
  exact::DigitInjection spec;
  ExactRational value;
  /// Strict bound on what any further digits b_{K+1}, ... could add.
  ExactRational continuation_bound;
  bool in_unit_interval = false;
};

InjectionGamma injection_gamma(std::span<const int> digits, BitBudget budget = {});

struct IntervalGamma {
  exact::IntervalConstruction spec;
  exact::DyadicAnchor anchor;
  ExactRational value;  ///< anchor +- 1/a_n
  ExactRational enclosure_lower;  ///< untruncated Gamma lies strictly inside
  ExactRational enclosure_upper;
  ExactRational series_bound;  ///< 2 / a_n, asserted < 2^-(k+1)
};

/// Gamma certified in (lower, upper). Throws std::logic_error if the
/// certificate fails (it cannot for valid input).
IntervalGamma dense_gamma_in_interval(const ExactRational& lower, const ExactRational& upper, BitBudget budget = {});

}  // namespace xygap::scaling

#endif  // XYGAP_SCALING_HPP
