#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "vlab/polynomial.hpp"
#include "vlab/rational.hpp"

namespace vlab {

struct DivModResult {
  Polynomial quotient;
  Polynomial remainder;
};

// Exact division with remainder; b must be nonzero.
DivModResult divmod(const Polynomial& a, const Polynomial& b);

// Monic gcd; poly_gcd(a, 0) is the monic multiple of a. Both zero is rejected.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

// Yun decomposition: pairwise-coprime monic square-free factors with their
// multiplicities; the product of factor^multiplicity is p up to a rational
// constant. Constants decompose into the empty list.
std::vector<std::pair<Polynomial, int>> square_free_decompose(const Polynomial& p);

// Monic product of the distinct irreducible factors of p.
Polynomial square_free_part(const Polynomial& p);

// Canonical Sturm chain: p, p', then negated remainders down to a constant
// (or to the gcd when p has repeated roots). Sign-variation differences count
// distinct real roots; evaluation points that are roots of p are handled
// correctly when p is square-free.
class SturmChain {
public:
  explicit SturmChain(const Polynomial& p);
  const std::vector<Polynomial>& elements() const { return chain_; }
  int variations_at(const Rational& t) const;
  int variations_at_negative_infinity() const;
  int variations_at_positive_infinity() const;

private:
  std::vector<Polynomial> chain_;
};

// Number of distinct real roots of p in the half-open interval (lo, hi];
// an absent bound means the interval is unbounded on that side. p must be
// nonzero.
int count_real_roots(const Polynomial& p, std::optional<Rational> lo = std::nullopt,
                     std::optional<Rational> hi = std::nullopt);

// True iff every complex zero of p is real (multiplicity included). The zero
// polynomial and constants count as real-rooted by convention.
bool is_real_rooted(const Polynomial& p);

bool has_only_nonpositive_roots(const Polynomial& p);
bool has_only_negative_roots(const Polynomial& p);

// Root lies in (lo, hi].
struct IsolatingInterval {
  Rational lo;
  Rational hi;
  int multiplicity = 1;
};

struct RootIsolation {
  std::vector<IsolatingInterval> intervals; // ascending, pairwise disjoint
  Polynomial square_free;                   // carrier used for refinement
};

// Disjoint rational intervals, each certified by Sturm counting to contain
// exactly one distinct real root, with multiplicities. Requires p nonzero and
// real-rooted.
RootIsolation isolate_roots(const Polynomial& p);

// Bisect every interval until its width is at most max_width.
void refine_isolation(RootIsolation& iso, const Rational& max_width);

// 1 + max_i |c_i| / |lead|; every real root lies in (-bound, bound].
Rational cauchy_root_bound(const Polynomial& p);

struct InterlacingVerdict {
  bool holds = false;
  std::string witness; // empty when holds
};

// Decides g interlaces f with the usual conventions: the zero polynomial
// interlaces and is interlaced by every real-rooted polynomial; nonnegative
// constants interlace nonnegative polynomials of degree at most one; negative
// leading coefficients are outside the definition. Otherwise both must be
// real-rooted, deg f in {deg g, deg g + 1}, and the zeros (with multiplicity)
// must weakly alternate with the largest zero of f on top.
InterlacingVerdict interlaces(const Polynomial& g, const Polynomial& f);

// Pairwise check: seq[i] interlaces seq[j] for all i < j; reports the first
// failing pair.
InterlacingVerdict is_interlacing_sequence(std::span<const Polynomial> seq);

} // namespace vlab
