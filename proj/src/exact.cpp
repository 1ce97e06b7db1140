#include "catmom/exact.hpp"

#include <cctype>
#include <stdexcept>

namespace catmom {

namespace {

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// Optional sign followed by at least one digit.
bool is_signed_digits(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return is_digits(s);
}

BigInt to_bigint(std::string_view s) {
  std::string owned(s);
  if (!owned.empty() && owned.front() == '+') owned.erase(0, 1);
  return BigInt(owned, 10);
}

}  // namespace

ExactScalar parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_signed_digits(text)) {
      throw std::invalid_argument("not a rational literal: '" + std::string(text) + "'");
    }
    return ExactScalar(to_bigint(text));
  }
  const auto num = text.substr(0, slash);
  const auto den = text.substr(slash + 1);
  if (!is_signed_digits(num) || !is_digits(den)) {
    throw std::invalid_argument("not a rational literal: '" + std::string(text) + "'");
  }
  BigInt d = to_bigint(den);
  if (d == 0) {
    throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  }
  ExactScalar q(to_bigint(num), d);
  q.canonicalize();
  return q;
}

ExactScalar parse_decimal(std::string_view text) {
  const auto dot = text.find('.');
  if (dot == std::string_view::npos) return parse_rational(text);
  auto int_part = text.substr(0, dot);
  const auto frac_part = text.substr(dot + 1);
  bool negative = false;
  if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) {
    negative = int_part.front() == '-';
    int_part.remove_prefix(1);
  }
  if ((int_part.empty() && frac_part.empty()) ||
      (!int_part.empty() && !is_digits(int_part)) ||
      (!frac_part.empty() && !is_digits(frac_part))) {
    throw std::invalid_argument("not a decimal literal: '" + std::string(text) + "'");
  }
  BigInt whole = int_part.empty() ? BigInt(0) : to_bigint(int_part);
  BigInt frac = frac_part.empty() ? BigInt(0) : to_bigint(frac_part);
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac_part.size());
  ExactScalar q(whole * scale + frac, scale);
  q.canonicalize();
  return negative ? ExactScalar(-q) : q;
}

std::string to_string(const ExactScalar& x) { return x.get_str(10); }

bool is_integer(const ExactScalar& x) { return x.get_den() == 1; }

ExactScalar pow(const ExactScalar& base, unsigned exponent) {
  ExactScalar result;
  mpz_pow_ui(result.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(result.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  // Powers of coprime integers stay coprime; only the sign needs fixing,
  // and den^e is already positive.
  return result;
}

ExactScalar binom(const ExactScalar& upper, unsigned lower) {
  ExactScalar num = 1;
  for (unsigned i = 0; i < lower; ++i) num *= upper - i;
  ExactScalar result = num / ExactScalar(factorial(lower));
  return result;
}

BigInt binom(unsigned upper, unsigned lower) {
  BigInt r;
  if (lower > upper) return r;
  mpz_bin_uiui(r.get_mpz_t(), upper, lower);
  return r;
}

BigInt factorial(unsigned n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

}  // namespace catmom
