#include "vlab/rational.hpp"

#include <stdexcept>

#include "vlab/errors.hpp"

namespace vlab {

Rational::Rational(const Integer& num, const Integer& den) {
  if (sgn(den) == 0) throw std::domain_error("Rational: zero denominator");
  v_ = mpq_class(num) / mpq_class(den);
  v_.canonicalize();
}

Rational Rational::from_string(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  const std::string_view t = trim(text);
  if (t.empty()) throw ParseError("empty rational literal");

  auto parse_int = [&](std::string_view s) -> Integer {
    s = trim(s);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    try {
      return Integer(std::string(s));
    } catch (const std::invalid_argument&) {
      throw ParseError("invalid integer literal '" + std::string(s) + "'");
    }
  };

  const auto slash = t.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_int(t));
  }
  const Integer num = parse_int(t.substr(0, slash));
  const Integer den = parse_int(t.substr(slash + 1));
  if (sgn(den) == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

Rational Rational::abs() const {
  return sign() < 0 ? -*this : *this;
}

Rational Rational::pow(unsigned long e) const {
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), numerator().get_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), denominator().get_mpz_t(), e);
  return Rational(num, den);
}

std::string Rational::to_string() const {
  return v_.get_str();
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("Rational: division by zero");
  return Rational(mpq_class(a.v_ / b.v_));
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

Integer integer_pow(const Integer& base, unsigned long e) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

} // namespace vlab
