#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vlab/rational.hpp"

namespace vlab {

// Dense univariate polynomial over Rational, coefficient i belongs to x^i.
// Always normalized: the stored sequence is empty (the zero polynomial) or
// ends in a nonzero coefficient. The zero polynomial has no degree; callers
// must handle the empty optional instead of relying on a -1 sentinel.
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(Rational constant);
  explicit Polynomial(std::vector<Rational> coeffs);

  static Polynomial zero() { return Polynomial(); }
  static Polynomial one() { return Polynomial(Rational(1)); }
  static Polynomial monomial(int degree, Rational coeff = Rational(1));

  bool is_zero() const { return coeffs_.empty(); }
  std::optional<int> degree() const;
  const Rational& coeff(int i) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational leading_coeff() const;
  const Rational& constant_term() const { return coeff(0); }
  bool has_nonnegative_coeffs() const;

  Rational evaluate(const Rational& t) const;
  Polynomial derivative() const;

  Polynomial times_x_power(int k) const;
  // Divides by x^k; throws std::domain_error unless the low coefficients vanish.
  Polynomial div_x_power(int k) const;
  // p(x) -> p(x^r).
  Polynomial substitute_x_power(int r) const;

  static Polynomial power(const Polynomial& base, unsigned long e);

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, const Polynomial& p);
  friend Polynomial operator-(const Polynomial& p);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  Polynomial& operator+=(const Polynomial& o) { *this = *this + o; return *this; }
  Polynomial& operator-=(const Polynomial& o) { *this = *this - o; return *this; }
  Polynomial& operator*=(const Polynomial& o) { *this = *this * o; return *this; }

  std::string to_string(std::string_view var = "x") const;

private:
  void normalize();
  std::vector<Rational> coeffs_;
};

// (1 + x + ... + x^{r-1})^n, exactly. Rejects r < 1.
Polynomial geometric_kernel(int r, int n);

} // namespace vlab
