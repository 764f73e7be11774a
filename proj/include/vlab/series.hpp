#pragma once

#include <stdexcept>
#include <vector>

#include "vlab/polynomial.hpp"
#include "vlab/qpolynomial.hpp"
#include "vlab/rational.hpp"

namespace vlab {

template <class C>
struct RingTraits;

template <>
struct RingTraits<Rational> {
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static bool is_zero(const Rational& c) { return c.is_zero(); }
};

template <>
struct RingTraits<Polynomial> {
  static Polynomial zero() { return Polynomial(); }
  static Polynomial one() { return Polynomial::one(); }
  static bool is_zero(const Polynomial& c) { return c.is_zero(); }
};

// Formal power series truncated at a fixed order M: coefficients 0..M are
// stored, everything above is cut off. All arithmetic stays closed modulo
// x^{M+1}. The coefficient ring C is Rational, or Polynomial (in q) for
// q-series.
template <class C>
class Series {
public:
  explicit Series(int order) : coeffs_(static_cast<size_t>(order) + 1, RingTraits<C>::zero()) {
    if (order < 0) throw std::invalid_argument("Series: negative order");
  }

  static Series constant(int order, C c0) {
    Series s(order);
    s.coeffs_[0] = std::move(c0);
    return s;
  }

  static Series one(int order) { return constant(order, RingTraits<C>::one()); }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }

  const C& at(int i) const { return coeffs_.at(static_cast<size_t>(i)); }
  C& at(int i) { return coeffs_.at(static_cast<size_t>(i)); }
  const std::vector<C>& coeffs() const { return coeffs_; }

  Series truncated(int new_order) const {
    if (new_order > order()) throw std::invalid_argument("Series::truncated: order can only shrink");
    Series out(new_order);
    for (int i = 0; i <= new_order; ++i) out.coeffs_[static_cast<size_t>(i)] = coeffs_[static_cast<size_t>(i)];
    return out;
  }

  friend Series operator+(const Series& a, const Series& b) {
    Series out(std::min(a.order(), b.order()));
    for (int i = 0; i <= out.order(); ++i) out.at(i) = a.at(i) + b.at(i);
    return out;
  }

  friend Series operator*(const Series& a, const Series& b) {
    Series out(std::min(a.order(), b.order()));
    for (int i = 0; i <= out.order(); ++i) {
      for (int j = 0; j <= i; ++j) {
        if (RingTraits<C>::is_zero(a.at(j))) continue;
        out.at(i) = out.at(i) + a.at(j) * b.at(i - j);
      }
    }
    return out;
  }

  friend bool operator==(const Series& a, const Series& b) { return a.coeffs_ == b.coeffs_; }

private:
  std::vector<C> coeffs_;
};

using RationalSeries = Series<Rational>;
using QSeries = Series<Polynomial>;

// Expansion of h(x)/(1-x)^n to order M: a_i = sum_j h_j * C(n-1+i-j, n-1).
// n = 0 returns h itself, truncated.
RationalSeries series_of_rational(const Polynomial& h, int n, int M);

RationalSeries series_of_polynomial(const Polynomial& p, int M);
QSeries qseries_of(const QPolynomial& p, int M);
RationalSeries specialize_q1(const QSeries& s);

// 1 + q + ... + q^{i-1} as a polynomial in q; i = 0 gives 0.
Polynomial q_bracket_poly(int i);
// Same bracket embedded as a bivariate polynomial (x-degree 0).
QPolynomial q_bracket(int i);

// Reciprocal q-Pochhammer series: the expansion in x, to order M, of
//   1 / prod_{i=0}^{n-1} (1 - x * q^{x_power_shift + r*i}).
// Shift r recovers 1/(xq^r;q^r)_n, shift 0 recovers 1/(x;q^r)_n. With n = 0
// the product is empty and the result is the constant series 1.
QSeries q_factorial_pochhammer(int x_power_shift, int r, int n, int M);

} // namespace vlab
