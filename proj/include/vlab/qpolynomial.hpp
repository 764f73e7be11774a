#pragma once

#include <map>
#include <string>
#include <utility>

#include "vlab/polynomial.hpp"
#include "vlab/rational.hpp"

namespace vlab {

// Exact bivariate polynomial in x and q, stored sparsely as
// (x-degree, q-degree) -> coefficient with no zero entries. The q-degrees
// grow with the flag major index, so a dense grid would waste space.
class QPolynomial {
public:
  using Key = std::pair<int, int>;

  QPolynomial() = default;

  static QPolynomial monomial(int x_deg, int q_deg, Rational coeff = Rational(1));
  static QPolynomial constant(Rational c) { return monomial(0, 0, std::move(c)); }
  static QPolynomial from_x_polynomial(const Polynomial& p);
  static QPolynomial from_q_polynomial(const Polynomial& p);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Key, Rational>& terms() const { return terms_; }
  Rational coeff(int x_deg, int q_deg) const;
  std::optional<int> x_degree() const;

  // Slice: the coefficient of x^i, as a polynomial in q.
  Polynomial coefficient_of_x(int i) const;
  // Specialize q := 1; yields a polynomial in x.
  Polynomial at_q_one() const;

  void add_term(int x_deg, int q_deg, const Rational& c);

  friend QPolynomial operator+(const QPolynomial& a, const QPolynomial& b);
  friend QPolynomial operator-(const QPolynomial& a, const QPolynomial& b);
  friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);
  friend bool operator==(const QPolynomial& a, const QPolynomial& b) { return a.terms_ == b.terms_; }

  QPolynomial& operator+=(const QPolynomial& o) { *this = *this + o; return *this; }

  std::string to_string() const;

private:
  std::map<Key, Rational> terms_;
};

} // namespace vlab
