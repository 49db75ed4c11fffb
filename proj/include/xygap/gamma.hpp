#ifndef XYGAP_GAMMA_HPP
#define XYGAP_GAMMA_HPP

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "xygap/rational.hpp"

namespace xygap::exact {

/// Limit on the bit length of any sequence term we are willing to build.
struct BitBudget {
  static constexpr std::size_t kDefaultBits = 1'000'000;
  static constexpr std::size_t kHardCapBits = 100'000'000;
  std::size_t bits = kDefaultBits;
};

/// Thrown when a requested term would exceed the bit budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when an operation is called on a recipe it does not apply to.
class NotApplicable : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class SequenceKind {
  DoubleExp,  ///< a_0 = 1, a_{n+1} = 2^{a_n}: 1, 2, 4, 16, 65536, 2^65536, ...
  Factorial,  ///< a_1 = 3, a_{n+1} = a_n!: 3, 6, 720, 720!, ...
};

std::string_view to_string(SequenceKind kind);
SequenceKind parse_sequence_kind(std::string_view text);

/// Smallest valid index for the kind (0 for DoubleExp, 1 for Factorial).
int first_index(SequenceKind kind);

/// Largest index whose term fits in the budget.
int max_index_in_budget(SequenceKind kind, BitBudget budget = {});

/// Exact term a_n. Throws BudgetExceeded when a_n would not fit.
BigInt sequence_term(SequenceKind kind, int n, BitBudget budget = {});

struct ExplicitRational {
  ExactRational value;
};

/// Sum_{n=1}^{K} 1 / a_n.
struct TruncatedSeries {
  SequenceKind kind = SequenceKind::DoubleExp;
  int K = 1;
};

/// Sum_{n=0}^{K} (2 b_n + 1) / a_{n+1} over the double-exponential sequence,
/// with K + 1 = digits.size().
struct DigitInjection {
  std::vector<int> digits;
};

/// A value certified to lie strictly inside (lower, upper), built from a
/// dyadic anchor plus or minus a double-exponential tail.
struct IntervalConstruction {
  ExactRational lower;
  ExactRational upper;
};

using GammaSpec = std::variant<ExplicitRational, TruncatedSeries, DigitInjection, IntervalConstruction>;

/// Resolved parameters of the interval construction.
struct DyadicAnchor {
  int k = 0;                ///< smallest k with upper - lower > 2^-k
  BigInt numerator;         ///< smallest N with lower < N / 2^k < upper
  int n = 0;                ///< smallest n with a_n > 2^(k+2)
  int sign = +1;            ///< +1 adds the tail, -1 subtracts it
  ExactRational anchor;     ///< N / 2^k
  ExactRational tail_term;  ///< 1 / a_n, the single retained tail term
};

DyadicAnchor interval_anchor(const ExactRational& lower, const ExactRational& upper, BitBudget budget = {});

ExactRational gamma_value(const GammaSpec& spec, BitBudget budget = {});

/// Certified strict upper bound on Sum_{j>=n} 1/a_j, namely 2/a_n.
/// Requires a_{j+1} >= 2 a_j from n on, which both built-in kinds satisfy.
ExactRational tail_bound(SequenceKind kind, int n, BitBudget budget = {});

/// Same bound for an explicit increasing prefix `terms` (terms[0] is a_1).
/// Throws std::invalid_argument if the doubling property fails from n on.
ExactRational tail_bound(std::span<const BigInt> terms, int n);

/// Strict upper bound on the remainder Sum_{j>K} 1/a_j of a series truncated
/// at K. Uses 2/a_{K+1} when that term fits the budget, otherwise
/// 1/a_K (valid because a_{K+1} >= 2 a_K).
struct TailCertificate {
  ExactRational bound;
  bool coarse = false;  ///< true when the 1/a_K fallback was used
};
TailCertificate remainder_bound(SequenceKind kind, int K, BitBudget budget = {});

/// True iff 1/2 < Gamma_K and Gamma_K + remainder < 1, i.e. the untruncated
/// series value is certified to lie in (1/2, 1). Throws NotApplicable for
/// anything but a TruncatedSeries.
bool gamma_bounds_check(const GammaSpec& spec, BitBudget budget = {});

/// Short textual recipe, e.g. "series:double-exp:5" or "rational:1/3".
std::string describe(const GammaSpec& spec);

/// Inverse of describe(); also accepts a bare rational or decimal literal.
GammaSpec parse_gamma_spec(std::string_view text);

/// Reads the XYGAP_BIT_BUDGET environment variable if set.
BitBudget budget_from_environment();

}  // namespace xygap::exact

#endif  // XYGAP_GAMMA_HPP
