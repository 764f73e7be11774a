#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "test_util.hpp"
#include "vlab/errors.hpp"
#include "vlab/series.hpp"

using namespace vlab;
using testutil::poly;
using testutil::rat;

TEST_CASE("rationals stay canonical and exact") {
  CHECK(rat("6/4") == rat("3/2"));
  CHECK(rat("6/4").numerator() == 3);
  CHECK(rat("6/4").denominator() == 2);
  CHECK(rat("-6/4").to_string() == "-3/2");
  CHECK(Rational(Integer(4), Integer(-6)).to_string() == "-2/3");
  CHECK((rat("1/3") + rat("1/6")) == rat("1/2"));
  CHECK((rat("2/3") * rat("9/4")) == rat("3/2"));
  CHECK((rat("1/3") - rat("1/3")).is_zero());
  CHECK(rat("-2/3").pow(3) == rat("-8/27"));
  CHECK(rat("5").is_integer());
  CHECK_THROWS_AS(rat("1/0"), ParseError);
  CHECK_THROWS_AS(rat("abc"), ParseError);
  CHECK_THROWS_AS(rat("1/2") / Rational(0), std::domain_error);
}

TEST_CASE("binomials are exact") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(40, 20) == Integer("137846528820"));
  CHECK(binomial(3, 7) == 0);
}

TEST_CASE("polynomial addition") {
  CHECK(poly({1, 1}) + Polynomial::zero() == poly({1, 1}));
  CHECK((poly({1, 1}) + poly({-1, -1})).is_zero());
  CHECK(poly({1, 2}) + poly({3, 0, 4}) == poly({4, 2, 4}));
}

TEST_CASE("polynomial multiplication") {
  CHECK(poly({1, 1}) * poly({1, 1}) == poly({1, 2, 1}));
  CHECK((poly({3, 1, 4}) * Polynomial::zero()).is_zero());
  CHECK(poly({1, 1, 1}) * poly({1, -1}) == poly({1, 0, 0, -1}));
}

TEST_CASE("degree of the zero polynomial is absent, not -1") {
  CHECK_FALSE(Polynomial::zero().degree().has_value());
  CHECK(Polynomial::one().degree() == 0);
  CHECK(poly({0, 0, 5}).degree() == 2);
  CHECK(poly({1, 1, 0, 0}).degree() == 1); // normalization strips zeros
}

TEST_CASE("polynomial helpers") {
  CHECK(poly({1, 2, 3}).evaluate(Rational(2)) == Rational(17));
  CHECK(poly({1, 2, 3}).derivative() == poly({2, 6}));
  CHECK(poly({1, 2}).times_x_power(2) == poly({0, 0, 1, 2}));
  CHECK(poly({0, 0, 1, 2}).div_x_power(2) == poly({1, 2}));
  CHECK_THROWS_AS(poly({1, 2}).div_x_power(1), std::domain_error);
  CHECK(poly({1, 2}).substitute_x_power(3) == poly({1, 0, 0, 2}));
  CHECK(Polynomial::power(poly({1, 1}), 3) == poly({1, 3, 3, 1}));
  CHECK(poly({1, -1, 0, 2}).to_string() == "1 - x + 2*x^3");
}

TEST_CASE("geometric kernel") {
  CHECK(geometric_kernel(3, 1) == poly({1, 1, 1}));
  CHECK(geometric_kernel(2, 2) == poly({1, 2, 1}));
  CHECK(geometric_kernel(1, 7) == Polynomial::one());
  CHECK_THROWS_AS(geometric_kernel(0, 1), std::invalid_argument);
}

TEST_CASE("series of h/(1-x)^n") {
  SUBCASE("1/(1-x)^2 counts up") {
    const RationalSeries s = series_of_rational(Polynomial::one(), 2, 3);
    for (int i = 0; i <= 3; ++i) CHECK(s.at(i) == Rational(i + 1));
  }
  SUBCASE("n = 0 returns the polynomial") {
    const RationalSeries s = series_of_rational(poly({1, 1}), 0, 3);
    CHECK(s.at(0) == 1);
    CHECK(s.at(1) == 1);
    CHECK(s.at(2) == 0);
    CHECK(s.at(3) == 0);
  }
  SUBCASE("(1+x)/(1-x)^3 gives the squares") {
    const RationalSeries s = series_of_rational(poly({1, 1}), 3, 3);
    for (int i = 0; i <= 3; ++i) CHECK(s.at(i) == Rational((i + 1) * (i + 1)));
  }
}

TEST_CASE("series recurrence and denominator clearing") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Rational> cs(1 + rng() % 5);
    for (auto& c : cs) c = Rational(static_cast<long>(rng() % 7));
    const Polynomial h(std::move(cs));
    const int n = 1 + static_cast<int>(rng() % 4);
    const int M = h.degree().value_or(0) + n + 4;
    const RationalSeries sn = series_of_rational(h, n, M);
    const RationalSeries sn1 = series_of_rational(h, n - 1, M);
    for (int i = 1; i <= M; ++i) CHECK(sn.at(i) - sn.at(i - 1) == sn1.at(i));

    // (1-x)^n * series == h up to the truncation order
    const Polynomial onemx = Polynomial::power(poly({1, -1}), static_cast<unsigned long>(n));
    RationalSeries cleared = series_of_polynomial(onemx, M) * sn;
    for (int i = 0; i <= M; ++i) CHECK(cleared.at(i) == h.coeff(i));
  }
}

TEST_CASE("bivariate arithmetic") {
  const QPolynomial xq = QPolynomial::monomial(1, 1);
  CHECK(xq * xq == QPolynomial::monomial(2, 2));
  const QPolynomial two_q = q_bracket(2);
  QPolynomial sq = two_q * two_q;
  CHECK(sq.coeff(0, 0) == 1);
  CHECK(sq.coeff(0, 1) == 2);
  CHECK(sq.coeff(0, 2) == 1);
  CHECK(sq.at_q_one() == Polynomial(Rational(4)));
  CHECK(xq.at_q_one() == poly({0, 1}));
}

TEST_CASE("q-bracket") {
  CHECK(q_bracket_poly(0).is_zero());
  CHECK(q_bracket_poly(1) == Polynomial::one());
  CHECK(q_bracket_poly(3) == poly({1, 1, 1}));
}

TEST_CASE("reciprocal q-Pochhammer series") {
  SUBCASE("empty product") {
    const QSeries s = q_factorial_pochhammer(2, 2, 0, 4);
    CHECK(s == QSeries::one(4));
  }
  SUBCASE("single factor geometric expansion") {
    const QSeries s = q_factorial_pochhammer(2, 2, 1, 2);
    CHECK(s.at(0) == Polynomial::one());
    CHECK(s.at(1) == Polynomial::monomial(2));
    CHECK(s.at(2) == Polynomial::monomial(4));
  }
  SUBCASE("telescoping against the defining factor") {
    const int M = 6;
    QPolynomial factor = QPolynomial::constant(Rational(1)) - QPolynomial::monomial(1, 2);
    const QSeries product = qseries_of(factor, M) * q_factorial_pochhammer(2, 2, 1, M);
    CHECK(product == QSeries::one(M));
  }
  SUBCASE("q := 1 collapses to 1/(1-x)^n") {
    for (int n = 0; n <= 3; ++n) {
      const RationalSeries expect = series_of_rational(Polynomial::one(), n, 5);
      CHECK(specialize_q1(q_factorial_pochhammer(0, 2, n, 5)) == expect);
      CHECK(specialize_q1(q_factorial_pochhammer(2, 2, n, 5)) ==
            specialize_q1(q_factorial_pochhammer(1, 1, n, 5)));
    }
  }
}

TEST_CASE("ring axioms, randomized") {
  std::mt19937_64 rng(7);
  auto random_poly = [&] {
    std::vector<Rational> cs(rng() % 5);
    for (auto& c : cs) c = Rational(static_cast<long>(rng() % 11) - 5, static_cast<long>(1 + rng() % 3));
    return Polynomial(std::move(cs));
  };
  for (int trial = 0; trial < 50; ++trial) {
    const Polynomial a = random_poly(), b = random_poly(), c = random_poly();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    if (!a.is_zero() && !b.is_zero()) CHECK(*(a * b).degree() == *a.degree() + *b.degree());
  }
}

TEST_CASE("q = 1 specialization commutes with arithmetic") {
  std::mt19937_64 rng(11);
  auto random_qpoly = [&] {
    QPolynomial p;
    const int terms = static_cast<int>(rng() % 6);
    for (int t = 0; t < terms; ++t)
      p.add_term(static_cast<int>(rng() % 4), static_cast<int>(rng() % 5),
                 Rational(static_cast<long>(rng() % 9) - 4));
    return p;
  };
  for (int trial = 0; trial < 50; ++trial) {
    const QPolynomial a = random_qpoly(), b = random_qpoly();
    CHECK((a * b).at_q_one() == a.at_q_one() * b.at_q_one());
    CHECK((a + b).at_q_one() == a.at_q_one() + b.at_q_one());
  }
}
