#pragma once

#include <initializer_list>
#include <string_view>
#include <vector>

#include "vlab/polynomial.hpp"
#include "vlab/rational.hpp"

namespace vlab::testutil {

inline Polynomial poly(std::initializer_list<long> coeffs) {
  std::vector<Rational> cs;
  cs.reserve(coeffs.size());
  for (const long c : coeffs) cs.emplace_back(c);
  return Polynomial(std::move(cs));
}

inline Rational rat(std::string_view text) { return Rational::from_string(text); }

// prod (x + a) over the given a's.
inline Polynomial from_negated_roots(std::initializer_list<long> as) {
  Polynomial p = Polynomial::one();
  for (const long a : as) p *= poly({a, 1});
  return p;
}

} // namespace vlab::testutil
