#include "vlab/permstat.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>

#include "vlab/errors.hpp"

namespace vlab {

const EnumLimits& default_limits() {
  static const EnumLimits limits = [] {
    EnumLimits l;
    if (const char* env = std::getenv("VERONESE_LAB_MAX_STATES")) {
      const long long parsed = std::atoll(env);
      if (parsed > 0) l.max_states = static_cast<std::uint64_t>(parsed);
    }
    return l;
  }();
  return limits;
}

namespace {

void check_permutation(std::span<const int> values) {
  const int n = static_cast<int>(values.size());
  std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
  for (const int v : values) {
    if (v < 1 || v > n || seen[static_cast<size_t>(v)])
      throw std::invalid_argument("not a permutation of [n]");
    seen[static_cast<size_t>(v)] = true;
  }
}

void check_colored(const ColoredPermutation& cp) {
  if (cp.r < 1) throw std::invalid_argument("colored permutation: r must be >= 1");
  if (cp.colors.size() != cp.values.size())
    throw std::invalid_argument("colored permutation: value/color length mismatch");
  check_permutation(cp.values);
  for (const int xi : cp.colors)
    if (xi < 0 || xi >= cp.r) throw std::invalid_argument("colored permutation: color out of range");
}

StatRecord colored_stats_unchecked(std::span<const int> values, std::span<const int> colors, int r) {
  const int n = static_cast<int>(values.size());
  StatRecord rec;
  int color_sum = 0;
  for (int i = 1; i <= n; ++i) {
    // boundary letter: value n+1 with color 0
    const int v = values[static_cast<size_t>(i - 1)];
    const int xi = colors[static_cast<size_t>(i - 1)];
    const int v_next = (i == n) ? n + 1 : values[static_cast<size_t>(i)];
    const int xi_next = (i == n) ? 0 : colors[static_cast<size_t>(i)];
    color_sum += xi;
    if (xi > xi_next || (xi == xi_next && v > v_next)) {
      rec.des += 1;
      rec.maj += i;
    }
  }
  rec.fmaj = r * rec.maj - color_sum;
  if (*rec.fmaj < 0) throw std::logic_error("flag major index went negative");
  return rec;
}

void check_colored_budget(int n, int r, const EnumLimits& limits) {
  if (n < 1) throw std::invalid_argument("enumeration: n must be >= 1");
  if (r < 1) throw std::invalid_argument("enumeration: r must be >= 1");
  if (n > 20) throw ResourceLimitError("enumeration: n too large");
  Integer states = integer_pow(Integer(r), static_cast<unsigned long>(n));
  for (int i = 2; i <= n; ++i) states *= i;
  if (states > Integer(static_cast<unsigned long>(limits.max_states)))
    throw ResourceLimitError("enumeration: r^n * n! = " + states.get_str() + " exceeds the cap of " +
                             std::to_string(limits.max_states) +
                             " states (raise VERONESE_LAB_MAX_STATES to override)");
}

// Runs fn over every (values, colors) pair consistent with the optional
// constraints pi(1) = ell, xi_1 = c.
template <class Fn>
void for_each_colored(int n, int r, std::optional<int> ell, std::optional<int> c, const EnumLimits& limits,
                      Fn&& fn) {
  check_colored_budget(n, r, limits);
  if (ell && (*ell < 1 || *ell > n)) throw std::invalid_argument("enumeration: ell out of range");
  if (c && (*c < 0 || *c >= r)) throw std::invalid_argument("enumeration: color out of range");

  std::vector<int> values(static_cast<size_t>(n));
  std::iota(values.begin(), values.end(), 1);
  if (ell) {
    values.erase(values.begin() + (*ell - 1));
    values.insert(values.begin(), *ell);
  }
  const auto perm_begin = values.begin() + (ell ? 1 : 0);

  std::vector<int> colors(static_cast<size_t>(n), 0);
  if (c) colors[0] = *c;
  const size_t color_begin = c ? 1 : 0;

  do {
    // odometer over the free color slots
    std::fill(colors.begin() + static_cast<long>(color_begin), colors.end(), 0);
    while (true) {
      fn(std::span<const int>(values), std::span<const int>(colors));
      size_t pos = colors.size();
      bool wrapped = true;
      while (pos > color_begin) {
        --pos;
        if (++colors[pos] < r) {
          wrapped = false;
          break;
        }
        colors[pos] = 0;
      }
      if (wrapped) break;
    }
  } while (std::next_permutation(perm_begin, values.end()));
}

} // namespace

StatRecord descent_stats_plain(std::span<const int> perm) {
  check_permutation(perm);
  StatRecord rec;
  for (size_t i = 0; i + 1 < perm.size(); ++i) {
    if (perm[i] > perm[i + 1]) {
      rec.des += 1;
      rec.maj += static_cast<int>(i) + 1;
    }
  }
  return rec;
}

StatRecord descent_stats_colored(const ColoredPermutation& cp) {
  check_colored(cp);
  return colored_stats_unchecked(cp.values, cp.colors, cp.r);
}

namespace {

void check_plain_budget(int n, const EnumLimits& limits) {
  if (n < 1) throw std::invalid_argument("enumeration: n must be >= 1");
  if (n > limits.max_plain_n)
    throw ResourceLimitError("enumeration: n = " + std::to_string(n) + " exceeds the plain cap of " +
                             std::to_string(limits.max_plain_n));
}

template <class Fn>
void for_each_plain(int n, std::optional<int> ell, const EnumLimits& limits, Fn&& fn) {
  check_plain_budget(n, limits);
  if (ell && (*ell < 1 || *ell > n)) throw std::invalid_argument("enumeration: ell out of range");
  std::vector<int> values(static_cast<size_t>(n));
  std::iota(values.begin(), values.end(), 1);
  if (ell) {
    values.erase(values.begin() + (*ell - 1));
    values.insert(values.begin(), *ell);
  }
  const auto perm_begin = values.begin() + (ell ? 1 : 0);
  do {
    fn(std::span<const int>(values));
  } while (std::next_permutation(perm_begin, values.end()));
}

StatRecord plain_stats_unchecked(std::span<const int> perm) {
  StatRecord rec;
  for (size_t i = 0; i + 1 < perm.size(); ++i) {
    if (perm[i] > perm[i + 1]) {
      rec.des += 1;
      rec.maj += static_cast<int>(i) + 1;
    }
  }
  return rec;
}

} // namespace

Polynomial eulerian_poly(int n, const EnumLimits& limits) {
  std::vector<Rational> coeffs(static_cast<size_t>(n), Rational(0));
  for_each_plain(n, std::nullopt, limits, [&](std::span<const int> perm) {
    coeffs[static_cast<size_t>(plain_stats_unchecked(perm).des)] += 1;
  });
  return Polynomial(std::move(coeffs));
}

Polynomial eulerian_refined(int n, int ell, const EnumLimits& limits) {
  std::vector<Rational> coeffs(static_cast<size_t>(n), Rational(0));
  for_each_plain(n, ell, limits, [&](std::span<const int> perm) {
    coeffs[static_cast<size_t>(plain_stats_unchecked(perm).des)] += 1;
  });
  return Polynomial(std::move(coeffs));
}

QPolynomial eulerian_poly_q(int n, const EnumLimits& limits) {
  QPolynomial out;
  for_each_plain(n, std::nullopt, limits, [&](std::span<const int> perm) {
    const StatRecord rec = plain_stats_unchecked(perm);
    out.add_term(rec.des, rec.maj, Rational(1));
  });
  return out;
}

Polynomial colored_eulerian(int n, int r, const EnumLimits& limits) {
  return colored_refined(n, r, std::nullopt, std::nullopt, limits);
}

Polynomial colored_refined(int n, int r, std::optional<int> ell, std::optional<int> c, const EnumLimits& limits) {
  std::vector<Rational> coeffs(static_cast<size_t>(n) + 1, Rational(0));
  for_each_colored(n, r, ell, c, limits, [&](std::span<const int> values, std::span<const int> colors) {
    coeffs[static_cast<size_t>(colored_stats_unchecked(values, colors, r).des)] += 1;
  });
  return Polynomial(std::move(coeffs));
}

QPolynomial colored_refined_q(int n, int r, std::optional<int> ell, std::optional<int> c, const EnumLimits& limits) {
  QPolynomial out;
  for_each_colored(n, r, ell, c, limits, [&](std::span<const int> values, std::span<const int> colors) {
    const StatRecord rec = colored_stats_unchecked(values, colors, r);
    out.add_term(rec.des, *rec.fmaj, Rational(1));
  });
  return out;
}

} // namespace vlab
