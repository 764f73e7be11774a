#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "vlab/polynomial.hpp"
#include "vlab/qpolynomial.hpp"

namespace vlab {

// Caps for exhaustive enumeration. max_states bounds r^n * n! for colored
// runs and can be raised through VERONESE_LAB_MAX_STATES; max_plain_n bounds
// the symmetric-group size for the uncolored generating polynomials.
struct EnumLimits {
  int max_plain_n = 9;
  std::uint64_t max_states = 10'000'000;
};

// Defaults, with VERONESE_LAB_MAX_STATES applied when set.
const EnumLimits& default_limits();

struct StatRecord {
  int des = 0;
  int maj = 0;
  std::optional<int> fmaj; // colored case only
};

// An element of the wreath product Z_r wr S_n: a permutation of [n] with a
// color in {0, ..., r-1} attached to every letter.
struct ColoredPermutation {
  std::vector<int> values;
  std::vector<int> colors;
  int r = 1;
};

// des and maj for a plain permutation of [n] (1-based values).
StatRecord descent_stats_plain(std::span<const int> perm);

// Colored descents compare colors first and values on color ties, against the
// virtual boundary letter (n+1) with color 0; fmaj = r*maj - sum of colors.
StatRecord descent_stats_colored(const ColoredPermutation& cp);

// Descent generating polynomial of S_n.
Polynomial eulerian_poly(int n, const EnumLimits& limits = default_limits());

// Restriction to permutations with first letter ell.
Polynomial eulerian_refined(int n, int ell, const EnumLimits& limits = default_limits());

// Joint distribution of (des, maj) over S_n: sum of x^des q^maj.
QPolynomial eulerian_poly_q(int n, const EnumLimits& limits = default_limits());

// Descent generating polynomial of Z_r wr S_n.
Polynomial colored_eulerian(int n, int r, const EnumLimits& limits = default_limits());

// Refinements by first letter and/or first color; an absent constraint sums
// out. (ell, c) both absent recovers colored_eulerian.
Polynomial colored_refined(int n, int r, std::optional<int> ell, std::optional<int> c,
                           const EnumLimits& limits = default_limits());

// Same refinement with the q-statistic: sum of x^des q^fmaj.
QPolynomial colored_refined_q(int n, int r, std::optional<int> ell, std::optional<int> c,
                              const EnumLimits& limits = default_limits());

} // namespace vlab
