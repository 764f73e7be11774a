#include "vlab/series.hpp"

namespace vlab {

RationalSeries series_of_rational(const Polynomial& h, int n, int M) {
  if (n < 0) throw std::invalid_argument("series_of_rational: n must be >= 0");
  if (n == 0) return series_of_polynomial(h, M);
  RationalSeries out(M);
  for (int i = 0; i <= M; ++i) {
    Rational a;
    const int jmax = h.degree() ? std::min(*h.degree(), i) : -1;
    for (int j = 0; j <= jmax; ++j)
      a += h.coeff(j) * Rational(binomial(static_cast<unsigned long>(n - 1 + i - j),
                                          static_cast<unsigned long>(n - 1)));
    out.at(i) = a;
  }
  return out;
}

RationalSeries series_of_polynomial(const Polynomial& p, int M) {
  RationalSeries out(M);
  for (int i = 0; i <= M; ++i) out.at(i) = p.coeff(i);
  return out;
}

QSeries qseries_of(const QPolynomial& p, int M) {
  QSeries out(M);
  for (int i = 0; i <= M; ++i) out.at(i) = p.coefficient_of_x(i);
  return out;
}

RationalSeries specialize_q1(const QSeries& s) {
  RationalSeries out(s.order());
  for (int i = 0; i <= s.order(); ++i) out.at(i) = s.at(i).evaluate(Rational(1));
  return out;
}

Polynomial q_bracket_poly(int i) {
  if (i < 0) throw std::invalid_argument("q_bracket: i must be >= 0");
  return Polynomial(std::vector<Rational>(static_cast<size_t>(i), Rational(1)));
}

QPolynomial q_bracket(int i) {
  return QPolynomial::from_q_polynomial(q_bracket_poly(i));
}

QSeries q_factorial_pochhammer(int x_power_shift, int r, int n, int M) {
  if (r < 1) throw std::invalid_argument("q_factorial_pochhammer: r must be >= 1");
  if (n < 0) throw std::invalid_argument("q_factorial_pochhammer: n must be >= 0");
  if (x_power_shift < 0) throw std::invalid_argument("q_factorial_pochhammer: negative shift");
  QSeries acc = QSeries::one(M);
  for (int i = 0; i < n; ++i) {
    // 1/(1 - x q^e) = sum_j q^{e j} x^j
    const int e = x_power_shift + r * i;
    QSeries factor(M);
    for (int j = 0; j <= M; ++j) factor.at(j) = Polynomial::monomial(e * j);
    acc = acc * factor;
  }
  return acc;
}

} // namespace vlab
