#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "test_util.hpp"
#include "vlab/errors.hpp"
#include "vlab/veronese.hpp"

using namespace vlab;
using testutil::poly;

namespace {

Polynomial random_poly(std::mt19937_64& rng, int degmax, int coeffmax) {
  std::vector<Rational> cs(1 + rng() % static_cast<unsigned long>(degmax + 1));
  for (auto& c : cs) c = Rational(static_cast<long>(rng() % static_cast<unsigned long>(coeffmax + 1)));
  return Polynomial(std::move(cs));
}

} // namespace

TEST_CASE("sections split coefficients by residue class") {
  SUBCASE("parity split") {
    const SectionDecomposition d = sections(poly({1, 2, 3, 4}), 2);
    REQUIRE(d.parts.size() == 2);
    CHECK(d.parts[0] == poly({1, 3}));
    CHECK(d.parts[1] == poly({2, 4}));
  }
  SUBCASE("constants land in part zero") {
    const SectionDecomposition d = sections(Polynomial::one(), 3);
    CHECK(d.parts[0] == Polynomial::one());
    CHECK(d.parts[1].is_zero());
    CHECK(d.parts[2].is_zero());
  }
  SUBCASE("x^5 with r=3 sits at k=2, reindexed") {
    const SectionDecomposition d = sections(Polynomial::monomial(5), 3);
    CHECK(d.parts[0].is_zero());
    CHECK(d.parts[1].is_zero());
    CHECK(d.parts[2] == Polynomial::monomial(1));
  }
  SUBCASE("section degrees respect the floor bound") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
      const Polynomial f = random_poly(rng, 9, 5);
      const int r = 1 + static_cast<int>(rng() % 4);
      const SectionDecomposition d = sections(f, r);
      for (int k = 0; k < r; ++k) {
        const auto deg = d.parts[static_cast<size_t>(k)].degree();
        if (deg && f.degree())
          CHECK(*deg <= (*f.degree() - k) / r);
      }
    }
  }
  CHECK_THROWS_AS(sections(Polynomial::one(), 0), std::invalid_argument);
}

TEST_CASE("recompose inverts sections") {
  CHECK(recompose({2, {poly({1, 3}), poly({2, 4})}}) == poly({1, 2, 3, 4}));
  CHECK(recompose({3, {Polynomial::zero(), Polynomial::zero(), Polynomial::zero()}}).is_zero());
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const Polynomial f = random_poly(rng, 10, 9);
    const int r = 1 + static_cast<int>(rng() % 5);
    CHECK(recompose(sections(f, r)) == f);
  }
}

TEST_CASE("section operator, directly") {
  SUBCASE("constant input, r = 2, n = 2") {
    CHECK(veronese(Polynomial::one(), 2, 2, 0).numerator == poly({1, 1}));
    CHECK(veronese(Polynomial::one(), 2, 2, 1).numerator == poly({2}));
  }
  SUBCASE("n = 0 degenerates to plain sections") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 20; ++trial) {
      const Polynomial h = random_poly(rng, 7, 9);
      const int r = 1 + static_cast<int>(rng() % 4);
      for (int k = 0; k < r; ++k)
        CHECK(veronese(h, 0, r, k).numerator == sections(h, r).parts[static_cast<size_t>(k)]);
    }
  }
  SUBCASE("r = 3, n = 1 on the constant gives all ones") {
    for (int k = 0; k < 3; ++k) CHECK(veronese(Polynomial::one(), 1, 3, k).numerator == Polynomial::one());
  }
  SUBCASE("r = 1 is the identity for every n") {
    std::mt19937_64 rng(29);
    for (int n = 0; n <= 4; ++n) {
      const Polynomial h = random_poly(rng, 6, 9);
      CHECK(veronese(h, n, 1, 0).numerator == h);
    }
  }
  SUBCASE("k out of range is rejected") {
    CHECK_THROWS_AS(veronese(Polynomial::one(), 1, 3, 3), std::invalid_argument);
    CHECK_THROWS_AS(veronese(Polynomial::one(), 1, 3, -1), std::invalid_argument);
    CHECK_THROWS_AS(veronese(Polynomial::one(), 1, 3, 5), std::invalid_argument);
  }
  SUBCASE("degree bound holds on random inputs") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
      const Polynomial h = random_poly(rng, 6, 9);
      if (h.is_zero()) continue;
      const int n = static_cast<int>(rng() % 4);
      const int r = 1 + static_cast<int>(rng() % 4);
      const int k = static_cast<int>(rng() % static_cast<unsigned long>(r));
      const Polynomial u = veronese(h, n, r, k).numerator;
      if (!u.is_zero()) CHECK(*u.degree() * r <= n * (r - 1) + *h.degree() - k);
    }
  }
}

TEST_CASE("series oracle") {
  SUBCASE("identity operator at r = 1") {
    CHECK(veronese_oracle(Polynomial::one(), 1, 1, 0, 3) == Polynomial::one());
    CHECK(veronese_oracle(poly({1, 1}), 3, 1, 0, veronese_oracle_min_order(poly({1, 1}), 3, 1, 0)) ==
          poly({1, 1}));
  }
  SUBCASE("agreement with the direct computation") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 60; ++trial) {
      const Polynomial h = random_poly(rng, 6, 9);
      const int n = static_cast<int>(rng() % 5);
      const int r = 1 + static_cast<int>(rng() % 4);
      const int k = static_cast<int>(rng() % static_cast<unsigned long>(r));
      const int M = veronese_oracle_min_order(h, n, r, k) + static_cast<int>(rng() % 3);
      CHECK(veronese_oracle(h, n, r, k, M) == veronese(h, n, r, k).numerator);
    }
  }
  SUBCASE("h with h(1) = 0 is still well-defined") {
    const Polynomial h = poly({1, -1}); // 1 - x vanishes at 1
    for (int k = 0; k < 2; ++k)
      CHECK(veronese_oracle(h, 2, 2, k, veronese_oracle_min_order(h, 2, 2, k)) ==
            veronese(h, 2, 2, k).numerator);
  }
  SUBCASE("insufficient truncation order is rejected up front") {
    CHECK_THROWS_AS(veronese_oracle(poly({1, 1, 1, 1, 1, 1, 1}), 4, 2, 0, 3), std::invalid_argument);
  }
}

TEST_CASE("proof decomposition route") {
  SUBCASE("worked example") {
    CHECK(veronese_via_uri(poly({1, 1}), 1, 2, 0) == poly({1, 1}));
    CHECK(veronese_via_uri(poly({1, 1}), 1, 2, 1) == poly({2}));
  }
  SUBCASE("constant h collapses to the kernel sections") {
    for (int n = 1; n <= 3; ++n)
      for (int r = 1; r <= 4; ++r)
        for (int k = 0; k < r; ++k)
          CHECK(veronese_via_uri(Polynomial::one(), n, r, k) == veronese(Polynomial::one(), n, r, k).numerator);
  }
  SUBCASE("agreement on random inputs") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 60; ++trial) {
      const Polynomial h = random_poly(rng, 6, 9);
      const int n = 1 + static_cast<int>(rng() % 3);
      const int r = 1 + static_cast<int>(rng() % 4);
      const int k = static_cast<int>(rng() % static_cast<unsigned long>(r));
      CHECK(veronese_via_uri(h, n, r, k) == veronese(h, n, r, k).numerator);
    }
  }
}

TEST_CASE("staggered recomposition steps the kernel power") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 30; ++trial) {
    const Polynomial h = random_poly(rng, 5, 9);
    const int n = static_cast<int>(rng() % 3);
    const int r = 1 + static_cast<int>(rng() % 4);
    SectionDecomposition staggered{r, {}};
    for (int k = 0; k < r; ++k) staggered.parts.push_back(veronese(h, n, r, k).numerator);
    const SectionDecomposition stepped = sections(geometric_kernel(r, 1) * recompose(staggered), r);
    for (int k = 0; k < r; ++k)
      CHECK(stepped.parts[static_cast<size_t>(k)] == veronese(h, n + 1, r, k).numerator);
  }
}

TEST_CASE("zero input maps to zero") {
  CHECK(veronese(Polynomial::zero(), 3, 3, 1).numerator.is_zero());
  CHECK(veronese_oracle(Polynomial::zero(), 3, 3, 1, 10).is_zero());
  CHECK(veronese_via_uri(Polynomial::zero(), 2, 3, 1).is_zero());
}
