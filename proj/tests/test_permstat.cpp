#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "test_util.hpp"
#include "vlab/errors.hpp"
#include "vlab/permstat.hpp"

using namespace vlab;
using testutil::poly;

TEST_CASE("plain descent statistics") {
  const std::vector<int> id{1, 2, 3};
  CHECK(descent_stats_plain(id).des == 0);
  CHECK(descent_stats_plain(id).maj == 0);
  const std::vector<int> rev{3, 2, 1};
  CHECK(descent_stats_plain(rev).des == 2);
  CHECK(descent_stats_plain(rev).maj == 3);
  const std::vector<int> swap{2, 1, 3};
  CHECK(descent_stats_plain(swap).des == 1);
  CHECK(descent_stats_plain(swap).maj == 1);
  const std::vector<int> bogus{1, 1, 3};
  CHECK_THROWS_AS(descent_stats_plain(bogus), std::invalid_argument);
  const std::vector<int> out_of_range{0, 1, 2};
  CHECK_THROWS_AS(descent_stats_plain(out_of_range), std::invalid_argument);
}

TEST_CASE("colored descent statistics with the boundary letter") {
  SUBCASE("single letter, color 0") {
    const StatRecord rec = descent_stats_colored({{1}, {0}, 2});
    CHECK(rec.des == 0);
    CHECK(rec.maj == 0);
    CHECK(rec.fmaj == 0);
  }
  SUBCASE("single letter, color 1 forces a boundary descent") {
    const StatRecord rec = descent_stats_colored({{1}, {1}, 2});
    CHECK(rec.des == 1);
    CHECK(rec.maj == 1);
    CHECK(rec.fmaj == 1); // 2*1 - 1
  }
  SUBCASE("two letters, both color 0") {
    const StatRecord rec = descent_stats_colored({{2, 1}, {0, 0}, 2});
    CHECK(rec.des == 1);
    CHECK(rec.maj == 1);
    CHECK(rec.fmaj == 2);
  }
  SUBCASE("validation") {
    CHECK_THROWS_AS(descent_stats_colored({{1, 2}, {0, 2}, 2}), std::invalid_argument);
    CHECK_THROWS_AS(descent_stats_colored({{1, 2}, {0}, 2}), std::invalid_argument);
    CHECK_THROWS_AS(descent_stats_colored({{1, 1}, {0, 0}, 2}), std::invalid_argument);
  }
  SUBCASE("fmaj is nonnegative across a full enumeration") {
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 200; ++trial) {
      const int n = 1 + static_cast<int>(rng() % 4);
      const int r = 1 + static_cast<int>(rng() % 3);
      std::vector<int> values(static_cast<size_t>(n));
      std::iota(values.begin(), values.end(), 1);
      std::shuffle(values.begin(), values.end(), rng);
      std::vector<int> colors(static_cast<size_t>(n));
      for (auto& c : colors) c = static_cast<int>(rng() % static_cast<unsigned long>(r));
      const StatRecord rec = descent_stats_colored({values, colors, r});
      CHECK(*rec.fmaj >= 0);
      CHECK(rec.maj >= rec.des);
    }
  }
}

TEST_CASE("Eulerian polynomials by enumeration") {
  CHECK(eulerian_poly(1) == Polynomial::one());
  CHECK(eulerian_poly(2) == poly({1, 1}));
  CHECK(eulerian_poly(3) == poly({1, 4, 1}));
  CHECK(eulerian_poly(4) == poly({1, 11, 11, 1}));
  CHECK(eulerian_poly(5) == poly({1, 26, 66, 26, 1}));
  SUBCASE("the configured cap guards the factorial blowup") {
    CHECK_THROWS_AS(eulerian_poly(10), ResourceLimitError);
    EnumLimits tiny;
    tiny.max_plain_n = 3;
    CHECK_THROWS_AS(eulerian_poly(4, tiny), ResourceLimitError);
  }
}

TEST_CASE("first-letter refinement") {
  CHECK(eulerian_refined(2, 1) == Polynomial::one());
  CHECK(eulerian_refined(2, 2) == poly({0, 1}));
  CHECK_THROWS_AS(eulerian_refined(2, 3), std::invalid_argument);
  SUBCASE("refinements partition the symmetric group") {
    for (int n = 1; n <= 6; ++n) {
      Polynomial sum;
      for (int ell = 1; ell <= n; ++ell) sum += eulerian_refined(n, ell);
      CHECK(sum == eulerian_poly(n));
    }
  }
}

TEST_CASE("colored descent polynomials") {
  CHECK(colored_eulerian(1, 2) == poly({1, 1}));
  SUBCASE("one color reduces to the symmetric group") {
    for (int n = 1; n <= 4; ++n) CHECK(colored_eulerian(n, 1) == eulerian_poly(n));
  }
  SUBCASE("first-color slices with positive color have no constant term") {
    for (int n = 1; n <= 3; ++n)
      for (int r = 2; r <= 3; ++r)
        for (int c = 1; c < r; ++c)
          CHECK(colored_refined(n, r, std::nullopt, c).constant_term().is_zero());
  }
  SUBCASE("total mass is r^n * n!") {
    for (int n = 1; n <= 4; ++n) {
      for (int r = 1; r <= 3; ++r) {
        Integer expected = integer_pow(Integer(r), static_cast<unsigned long>(n));
        for (int i = 2; i <= n; ++i) expected *= i;
        CHECK(colored_eulerian(n, r).evaluate(Rational(1)) == Rational(expected));
      }
    }
  }
  SUBCASE("partition identities across refinements") {
    for (int n = 1; n <= 4; ++n) {
      for (int r = 1; r <= 3; ++r) {
        const Polynomial whole = colored_eulerian(n, r);
        Polynomial by_color;
        for (int c = 0; c < r; ++c) by_color += colored_refined(n, r, std::nullopt, c);
        CHECK(by_color == whole);
        Polynomial by_letter;
        for (int ell = 1; ell <= n; ++ell) by_letter += colored_refined(n, r, ell, std::nullopt);
        CHECK(by_letter == whole);
        for (int ell = 1; ell <= n; ++ell) {
          Polynomial slice;
          for (int c = 0; c < r; ++c) slice += colored_refined(n, r, ell, c);
          CHECK(slice == colored_refined(n, r, ell, std::nullopt));
        }
        for (int c = 0; c < r; ++c) {
          Polynomial slice;
          for (int ell = 1; ell <= n; ++ell) slice += colored_refined(n, r, ell, c);
          CHECK(slice == colored_refined(n, r, std::nullopt, c));
        }
      }
    }
  }
  SUBCASE("the state cap rejects oversized wreath products") {
    CHECK_THROWS_AS(colored_eulerian(10, 3), ResourceLimitError);
    EnumLimits tiny;
    tiny.max_states = 10;
    CHECK_THROWS_AS(colored_eulerian(3, 2, tiny), ResourceLimitError);
  }
}

TEST_CASE("joint distribution with the flag major index") {
  CHECK(colored_refined_q(1, 2, 1, 0) == QPolynomial::constant(Rational(1)));
  CHECK(colored_refined_q(1, 2, 1, 1) == QPolynomial::monomial(1, 1));
  SUBCASE("q = 1 recovers the descent polynomial") {
    for (int n = 1; n <= 4; ++n)
      for (int r = 1; r <= 3; ++r)
        for (int ell = 1; ell <= n; ++ell)
          for (int c = 0; c < r; ++c)
            CHECK(colored_refined_q(n, r, ell, c).at_q_one() == colored_refined(n, r, ell, c));
  }
  SUBCASE("plain maj distribution at n = 3") {
    // S_3: maj values 0,1,2,1,2,3 with des 0,1,1,1,1,2
    const QPolynomial g = eulerian_poly_q(3);
    CHECK(g.coeff(0, 0) == 1);
    CHECK(g.coeff(1, 1) == 2);
    CHECK(g.coeff(1, 2) == 2);
    CHECK(g.coeff(2, 3) == 1);
    CHECK(g.at_q_one() == eulerian_poly(3));
  }
}
