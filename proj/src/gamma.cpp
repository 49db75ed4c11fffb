#include "xygap/gamma.hpp"

#include <gmp.h>

#include <cmath>
#include <cstdlib>
#include <limits>
#include <sstream>

namespace xygap::exact {

std::string_view to_string(SequenceKind kind) {
  switch (kind) {
    case SequenceKind::DoubleExp:
      return "double-exp";
    case SequenceKind::Factorial:
      return "factorial";
  }
  return "?";
}

SequenceKind parse_sequence_kind(std::string_view text) {
  if (text == "double-exp" || text == "doubleexp") return SequenceKind::DoubleExp;
  if (text == "factorial") return SequenceKind::Factorial;
  throw std::invalid_argument("unknown sequence kind '" + std::string(text) + "'");
}

int first_index(SequenceKind kind) { return kind == SequenceKind::DoubleExp ? 0 : 1; }

namespace {

std::string budget_message(SequenceKind kind, int n, BitBudget budget) {
  std::ostringstream os;
  os << "term a_" << n << " of the " << to_string(kind) << " sequence exceeds the bit budget of " << budget.bits
     << " bits";
  return os.str();
}

// Next term from the previous one, refusing anything over budget before
// allocating it.
BigInt next_term(SequenceKind kind, const BigInt& prev, int n, BitBudget budget) {
  if (kind == SequenceKind::DoubleExp) {
    // 2^prev has prev + 1 bits.
    if (prev >= BigInt(static_cast<unsigned long>(budget.bits))) throw BudgetExceeded(budget_message(kind, n, budget));
    BigInt out;
    mpz_ui_pow_ui(out.get_mpz_t(), 2, prev.get_ui());
    return out;
  }
  // m! >= 2^m for m >= 4, so m itself is a lower bound on the bit length.
  if (!prev.fits_ulong_p() || prev > BigInt(static_cast<unsigned long>(budget.bits)))
    throw BudgetExceeded(budget_message(kind, n, budget));
  const unsigned long m = prev.get_ui();
  const double bits = std::lgamma(static_cast<double>(m) + 1.0) / std::log(2.0) + 1.0;
  if (bits > static_cast<double>(budget.bits)) throw BudgetExceeded(budget_message(kind, n, budget));
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), m);
  return out;
}

}  // namespace

BigInt sequence_term(SequenceKind kind, int n, BitBudget budget) {
  const int first = first_index(kind);
  if (n < first) throw std::invalid_argument("sequence index below the first term");
  BigInt term = kind == SequenceKind::DoubleExp ? BigInt(1) : BigInt(3);
  for (int i = first + 1; i <= n; ++i) term = next_term(kind, term, i, budget);
  return term;
}

int max_index_in_budget(SequenceKind kind, BitBudget budget) {
  int n = first_index(kind);
  BigInt term = kind == SequenceKind::DoubleExp ? BigInt(1) : BigInt(3);
  for (;;) {
    try {
      term = next_term(kind, term, n + 1, budget);
    } catch (const BudgetExceeded&) {
      return n;
    }
    ++n;
  }
}

DyadicAnchor interval_anchor(const ExactRational& lower, const ExactRational& upper, BitBudget budget) {
  if (!(ExactRational(0) < lower && lower < upper && upper < ExactRational(1)))
    throw std::invalid_argument("interval construction requires 0 < a < b < 1");

  DyadicAnchor out;
  const ExactRational width = upper - lower;
  const BigInt num = width.numerator();
  const BigInt den = width.denominator();
  // width > 2^-k  <=>  num * 2^k > den
  const auto nb = static_cast<long>(bit_length(num));
  const auto db = static_cast<long>(bit_length(den));
  long k = std::max(0L, db - nb - 1);
  for (;; ++k) {
    BigInt lhs;
    mpz_mul_2exp(lhs.get_mpz_t(), num.get_mpz_t(), static_cast<mp_bitcnt_t>(k));
    if (lhs > den) break;
  }
  if (k > std::numeric_limits<int>::max() - 3) throw BudgetExceeded("interval too narrow");
  out.k = static_cast<int>(k);

  const ExactRational scale = pow2(k);
  out.numerator = (lower * scale).floor() + 1;
  out.anchor = ExactRational(out.numerator) / scale;

  // a_n > 2^(k+2)  <=>  a_{n-1} > k + 2 for the double-exponential sequence.
  const BigInt threshold = BigInt(static_cast<unsigned long>(k + 2));
  int n = 1;
  BigInt prev(1);
  while (prev <= threshold) {
    prev = next_term(SequenceKind::DoubleExp, prev, n, budget);
    ++n;
  }
  out.n = n;
  out.tail_term = ExactRational(BigInt(1), sequence_term(SequenceKind::DoubleExp, n, budget));

  const ExactRational room_above = upper - out.anchor;
  const ExactRational room_below = out.anchor - lower;
  out.sign = room_above >= room_below ? +1 : -1;
  return out;
}

namespace {

ExactRational series_value(SequenceKind kind, int K, BitBudget budget) {
  if (K < 1) throw std::invalid_argument("truncation index K must be >= 1");
  ExactRational sum;
  for (int n = 1; n <= K; ++n) sum += ExactRational(BigInt(1), sequence_term(kind, n, budget));
  return sum;
}

ExactRational injection_value(const std::vector<int>& digits, BitBudget budget) {
  if (digits.empty()) throw std::invalid_argument("digit injection needs at least one digit");
  ExactRational sum;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    const int b = digits[i];
    if (b < 0 || b > 9) throw std::invalid_argument("digits must lie in 0..9");
    sum += ExactRational(BigInt(2 * b + 1), sequence_term(SequenceKind::DoubleExp, static_cast<int>(i) + 1, budget));
  }
  return sum;
}

}  // namespace

ExactRational gamma_value(const GammaSpec& spec, BitBudget budget) {
  struct Visitor {
    BitBudget budget;
    ExactRational operator()(const ExplicitRational& r) const { return r.value; }
    ExactRational operator()(const TruncatedSeries& s) const { return series_value(s.kind, s.K, budget); }
    ExactRational operator()(const DigitInjection& d) const { return injection_value(d.digits, budget); }
    ExactRational operator()(const IntervalConstruction& c) const {
      const DyadicAnchor a = interval_anchor(c.lower, c.upper, budget);
      return a.sign > 0 ? a.anchor + a.tail_term : a.anchor - a.tail_term;
    }
  };
  return std::visit(Visitor{budget}, spec);
}

ExactRational tail_bound(SequenceKind kind, int n, BitBudget budget) {
  if (n < 1) throw std::invalid_argument("tail_bound requires n >= 1");
  return ExactRational(BigInt(2), sequence_term(kind, n, budget));
}

ExactRational tail_bound(std::span<const BigInt> terms, int n) {
  if (n < 1 || static_cast<std::size_t>(n) > terms.size())
    throw std::invalid_argument("tail_bound index outside the given terms");
  const auto start = static_cast<std::size_t>(n - 1);
  if (terms[start] <= 0) throw std::invalid_argument("sequence terms must be positive");
  for (std::size_t j = start + 1; j < terms.size(); ++j)
    if (terms[j] < 2 * terms[j - 1])
      throw std::invalid_argument("doubling property a_{j+1} >= 2 a_j fails; 2/a_n is not a valid tail bound");
  return ExactRational(BigInt(2), terms[start]);
}

TailCertificate remainder_bound(SequenceKind kind, int K, BitBudget budget) {
  if (K < 1) throw std::invalid_argument("remainder_bound requires K >= 1");
  try {
    return {tail_bound(kind, K + 1, budget), false};
  } catch (const BudgetExceeded&) {
    return {ExactRational(BigInt(1), sequence_term(kind, K, budget)), true};
  }
}

bool gamma_bounds_check(const GammaSpec& spec, BitBudget budget) {
  const auto* series = std::get_if<TruncatedSeries>(&spec);
  if (series == nullptr) throw NotApplicable("gamma_bounds_check applies to truncated series only");
  const ExactRational value = gamma_value(spec, budget);
  const TailCertificate rest = remainder_bound(series->kind, series->K, budget);
  return ExactRational(1, 2) < value && value + rest.bound < ExactRational(1);
}

std::string describe(const GammaSpec& spec) {
  struct Visitor {
    std::string operator()(const ExplicitRational& r) const { return "rational:" + r.value.str(); }
    std::string operator()(const TruncatedSeries& s) const {
      return "series:" + std::string(to_string(s.kind)) + ":" + std::to_string(s.K);
    }
    std::string operator()(const DigitInjection& d) const {
      std::string out = "digits:";
      for (std::size_t i = 0; i < d.digits.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(d.digits[i]);
      }
      return out;
    }
    std::string operator()(const IntervalConstruction& c) const {
      return "interval:" + c.lower.str() + ":" + c.upper.str();
    }
  };
  return std::visit(Visitor{}, spec);
}

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

int parse_int(std::string_view s) {
  const std::string str(s);
  std::size_t used = 0;
  const int v = std::stoi(str, &used);
  if (used != str.size()) throw std::invalid_argument("bad integer '" + str + "'");
  return v;
}

}  // namespace

GammaSpec parse_gamma_spec(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) return ExplicitRational{ExactRational::parse(text)};

  const std::string_view head = text.substr(0, colon);
  const std::string_view rest = text.substr(colon + 1);
  if (head == "rational") return ExplicitRational{ExactRational::parse(rest)};
  if (head == "series") {
    const auto parts = split(rest, ':');
    if (parts.size() != 2) throw std::invalid_argument("expected series:<kind>:<K>");
    return TruncatedSeries{parse_sequence_kind(parts[0]), parse_int(parts[1])};
  }
  if (head == "digits") {
    DigitInjection d;
    for (auto part : split(rest, ',')) d.digits.push_back(parse_int(part));
    return d;
  }
  if (head == "interval") {
    const auto parts = split(rest, ':');
    if (parts.size() != 2) throw std::invalid_argument("expected interval:<a>:<b>");
    return IntervalConstruction{ExactRational::parse(parts[0]), ExactRational::parse(parts[1])};
  }
  throw std::invalid_argument("unknown gamma recipe '" + std::string(head) + "'");
}

BitBudget budget_from_environment() {
  BitBudget budget;
  if (const char* env = std::getenv("XYGAP_BIT_BUDGET"); env != nullptr && *env != '\0') {
    const std::string s(env);
    std::size_t used = 0;
    const unsigned long long v = std::stoull(s, &used);
    if (used != s.size() || v == 0) throw std::invalid_argument("XYGAP_BIT_BUDGET must be a positive integer");
    if (v > BitBudget::kHardCapBits) throw std::invalid_argument("XYGAP_BIT_BUDGET exceeds the hard cap");
    budget.bits = static_cast<std::size_t>(v);
  }
  return budget;
}

}  // namespace xygap::exact
