#include "xygap/rational.hpp"

#include <gmp.h>

#include <cctype>

namespace xygap::exact {

ExactRational::ExactRational(std::int64_t value) : value_(static_cast<long>(value)) {}

ExactRational::ExactRational(std::int64_t num, std::int64_t den)
    : ExactRational(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den))) {}

ExactRational::ExactRational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("ExactRational: zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

ExactRational::ExactRational(mpq_class value) : value_(std::move(value)) {
  if (value_.get_den() == 0) throw std::domain_error("ExactRational: zero denominator");
  value_.canonicalize();
}

namespace {

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

BigInt parse_integer(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!is_digits(s)) throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  BigInt v(std::string(s), 10);
  return negative ? BigInt(-v) : v;
}

}  // namespace

ExactRational ExactRational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty rational");

  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const BigInt num = parse_integer(text.substr(0, slash));
    const std::string_view den_text = text.substr(slash + 1);
    if (!is_digits(den_text)) throw std::invalid_argument("bad denominator in '" + std::string(text) + "'");
    return ExactRational(num, BigInt(std::string(den_text), 10));
  }

  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    const std::string_view frac_part = text.substr(dot + 1);
    bool negative = false;
    if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) {
      negative = int_part.front() == '-';
      int_part.remove_prefix(1);
    }
    if ((int_part.empty() && frac_part.empty()) || (!int_part.empty() && !is_digits(int_part)) ||
        (!frac_part.empty() && !is_digits(frac_part)))
      throw std::invalid_argument("bad decimal '" + std::string(text) + "'");
    const std::string digits = std::string(int_part) + std::string(frac_part);
    BigInt num(digits.empty() ? std::string("0") : digits, 10);
    BigInt den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_part.size());
    if (negative) num = -num;
    return ExactRational(num, den);
  }

  return ExactRational(parse_integer(text));
}

BigInt ExactRational::floor() const {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

ExactRational ExactRational::abs() const { return sign() < 0 ? -*this : *this; }

std::string ExactRational::str() const {
  return value_.get_num().get_str(10) + "/" + value_.get_den().get_str(10);
}

std::string ExactRational::decimal(int digits) const {
  if (digits < 1) digits = 1;
  if (is_zero()) return "0";

  const auto prec = static_cast<mp_bitcnt_t>(digits * 4 + 64);
  mpf_t f;
  mpf_init2(f, prec);
  mpf_set_q(f, value_.get_mpq_t());
  mp_exp_t exp10 = 0;
  std::string buffer(static_cast<std::size_t>(digits) + 2, '\0');
  mpf_get_str(buffer.data(), &exp10, 10, static_cast<size_t>(digits), f);
  mpf_clear(f);

  std::string mantissa(buffer.c_str());
  std::string out;
  if (!mantissa.empty() && mantissa.front() == '-') {
    out.push_back('-');
    mantissa.erase(0, 1);
  }
  mantissa.resize(static_cast<std::size_t>(digits), '0');
  out.push_back(mantissa.front());
  if (digits > 1) {
    out.push_back('.');
    out.append(mantissa, 1, std::string::npos);
  }
  // mpf_get_str reports 0.d1d2... x 10^exp10; shift to d1.d2... x 10^(exp10-1).
  out += "e" + std::to_string(static_cast<long long>(exp10) - 1);
  return out;
}

std::size_t ExactRational::numerator_bits() const { return bit_length(value_.get_num()); }
std::size_t ExactRational::denominator_bits() const { return bit_length(value_.get_den()); }

ExactRational& ExactRational::operator+=(const ExactRational& rhs) {
  value_ += rhs.value_;
  return *this;
}
ExactRational& ExactRational::operator-=(const ExactRational& rhs) {
  value_ -= rhs.value_;
  return *this;
}
ExactRational& ExactRational::operator*=(const ExactRational& rhs) {
  value_ *= rhs.value_;
  return *this;
}
ExactRational& ExactRational::operator/=(const ExactRational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("ExactRational: division by zero");
  value_ /= rhs.value_;
  return *this;
}

ExactRational ExactRational::operator-() const {
  ExactRational r;
  r.value_ = -value_;
  return r;
}

ExactRational pow2(std::int64_t exponent) {
  BigInt p;
  const auto e = static_cast<mp_bitcnt_t>(exponent < 0 ? -exponent : exponent);
  mpz_ui_pow_ui(p.get_mpz_t(), 2, e);
  return exponent < 0 ? ExactRational(BigInt(1), p) : ExactRational(p);
}

std::size_t bit_length(const BigInt& x) {
  if (x == 0) return 0;
  return mpz_sizeinbase(x.get_mpz_t(), 2);
}

}  // namespace xygap::exact
