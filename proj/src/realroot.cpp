#include "vlab/realroot.hpp"

#include <algorithm>
#include <stdexcept>

namespace vlab {

namespace {

// Scale by a positive rational so coefficients become coprime integers.
// Signs are preserved, which is all Sturm counting cares about.
Polynomial normalize_primitive(const Polynomial& p) {
  if (p.is_zero()) return p;
  Integer lcm_den = 1;
  for (const auto& c : p.coeffs()) {
    Integer den = c.denominator();
    Integer g = gcd(lcm_den, den);
    lcm_den = lcm_den / g * den;
  }
  Integer content = 0;
  for (const auto& c : p.coeffs()) content = gcd(content, Integer(c.numerator() * (lcm_den / c.denominator())));
  const Rational scale(lcm_den, content);
  return scale * p;
}

Polynomial monic(const Polynomial& p) {
  if (p.is_zero()) return p;
  return (Rational(1) / p.leading_coeff()) * p;
}

int sign_at_infinity(const Polynomial& p, bool positive) {
  if (p.is_zero()) return 0;
  const int lead = p.leading_coeff().sign();
  if (positive) return lead;
  return (*p.degree() % 2 == 0) ? lead : -lead;
}

int count_variations(const std::vector<int>& signs) {
  int count = 0;
  int prev = 0;
  for (const int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

} // namespace

DivModResult divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("divmod: division by the zero polynomial");
  Polynomial rem = a;
  Polynomial quot;
  const int db = *b.degree();
  const Rational lead = b.leading_coeff();
  while (!rem.is_zero() && *rem.degree() >= db) {
    const int shift = *rem.degree() - db;
    const Rational factor = rem.leading_coeff() / lead;
    const Polynomial term = Polynomial::monomial(shift, factor);
    quot += term;
    rem -= term * b;
  }
  return {quot, rem};
}

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() && b.is_zero()) throw std::domain_error("poly_gcd: gcd(0, 0) is undefined");
  // gcd is only defined up to constants, so remainders can be rescaled to
  // keep coefficients small.
  Polynomial u = a, v = b;
  while (!v.is_zero()) {
    Polynomial r = normalize_primitive(divmod(u, v).remainder);
    u = std::move(v);
    v = std::move(r);
  }
  return monic(u);
}

std::vector<std::pair<Polynomial, int>> square_free_decompose(const Polynomial& p) {
  if (p.is_zero()) throw std::domain_error("square_free_decompose: zero polynomial");
  std::vector<std::pair<Polynomial, int>> out;
  if (*p.degree() == 0) return out;

  const Polynomial pm = monic(p);
  const Polynomial dp = pm.derivative();
  const Polynomial g = poly_gcd(pm, dp);
  if (*g.degree() == 0) {
    out.emplace_back(pm, 1);
    return out;
  }
  // Yun's algorithm.
  Polynomial v = divmod(pm, g).quotient;
  Polynomial w = divmod(dp, g).quotient;
  int k = 1;
  while (!v.is_zero() && *v.degree() > 0) {
    const Polynomial c = w - v.derivative();
    const Polynomial d = c.is_zero() ? monic(v) : poly_gcd(v, c);
    if (*d.degree() > 0) out.emplace_back(d, k);
    v = divmod(v, d).quotient;
    w = c.is_zero() ? Polynomial::one() : divmod(c, d).quotient;
    ++k;
  }
  return out;
}

Polynomial square_free_part(const Polynomial& p) {
  Polynomial out = Polynomial::one();
  for (const auto& [factor, mult] : square_free_decompose(p)) out *= factor;
  return out;
}

SturmChain::SturmChain(const Polynomial& p) {
  // The literal recurrence s_{i+1} = -rem(s_{i-1}, s_i), no rescaling.
  // Callers that care about coefficient growth normalize p beforehand.
  chain_.push_back(p);
  if (p.is_zero() || *p.degree() == 0) return;
  chain_.push_back(p.derivative());
  while (true) {
    const Polynomial& a = chain_[chain_.size() - 2];
    const Polynomial& b = chain_.back();
    Polynomial r = divmod(a, b).remainder;
    if (r.is_zero()) break;
    chain_.push_back(-r);
    if (*chain_.back().degree() == 0) break;
  }
}

int SturmChain::variations_at(const Rational& t) const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const auto& q : chain_) signs.push_back(q.evaluate(t).sign());
  return count_variations(signs);
}

int SturmChain::variations_at_negative_infinity() const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const auto& q : chain_) signs.push_back(sign_at_infinity(q, false));
  return count_variations(signs);
}

int SturmChain::variations_at_positive_infinity() const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const auto& q : chain_) signs.push_back(sign_at_infinity(q, true));
  return count_variations(signs);
}

namespace {

int variations_at_bound(const SturmChain& chain, const std::optional<Rational>& t, bool lower) {
  if (t) return chain.variations_at(*t);
  return lower ? chain.variations_at_negative_infinity() : chain.variations_at_positive_infinity();
}

// (lo, hi] isolation by repeated bisection; `chain` belongs to the square-free
// polynomial whose roots are being isolated.
void isolate_recursive(const SturmChain& chain, const Rational& lo, int vlo, const Rational& hi, int vhi,
                       std::vector<IsolatingInterval>& out) {
  const int count = vlo - vhi;
  if (count <= 0) return;
  if (count == 1) {
    out.push_back({lo, hi, 1});
    return;
  }
  const Rational mid = (lo + hi) / Rational(2);
  const int vmid = chain.variations_at(mid);
  isolate_recursive(chain, lo, vlo, mid, vmid, out);
  isolate_recursive(chain, mid, vmid, hi, vhi, out);
}

std::vector<IsolatingInterval> isolate_square_free(const Polynomial& s) {
  std::vector<IsolatingInterval> out;
  if (s.is_zero() || *s.degree() == 0) return out;
  const SturmChain chain(s);
  const Rational bound = cauchy_root_bound(s);
  isolate_recursive(chain, -bound, chain.variations_at(-bound), bound, chain.variations_at(bound), out);
  return out;
}

} // namespace

int count_real_roots(const Polynomial& p, std::optional<Rational> lo, std::optional<Rational> hi) {
  if (p.is_zero()) throw std::domain_error("count_real_roots: zero polynomial");
  if (*p.degree() == 0) return 0;
  if (lo && hi && *lo >= *hi) return 0;
  const SturmChain chain(square_free_part(p));
  return variations_at_bound(chain, lo, true) - variations_at_bound(chain, hi, false);
}

bool is_real_rooted(const Polynomial& p) {
  if (p.is_zero()) return true;
  if (*p.degree() == 0) return true;
  const Polynomial s = square_free_part(p);
  return count_real_roots(s) == *s.degree();
}

bool has_only_nonpositive_roots(const Polynomial& p) {
  if (p.is_zero()) return true;
  if (*p.degree() == 0) return true;
  return is_real_rooted(p) && count_real_roots(p, Rational(0), std::nullopt) == 0;
}

bool has_only_negative_roots(const Polynomial& p) {
  if (p.is_zero()) return false; // 0 vanishes everywhere, including at 0
  if (*p.degree() == 0) return true;
  return has_only_nonpositive_roots(p) && !p.evaluate(Rational(0)).is_zero();
}

Rational cauchy_root_bound(const Polynomial& p) {
  if (p.is_zero() || *p.degree() == 0) throw std::domain_error("cauchy_root_bound: needs degree >= 1");
  const Rational lead = p.leading_coeff().abs();
  Rational best;
  for (int i = 0; i < *p.degree(); ++i) best = std::max(best, p.coeff(i).abs());
  return Rational(1) + best / lead;
}

RootIsolation isolate_roots(const Polynomial& p) {
  if (p.is_zero()) throw std::domain_error("isolate_roots: zero polynomial");
  if (!is_real_rooted(p)) throw std::domain_error("isolate_roots: polynomial is not real-rooted");
  RootIsolation iso;
  if (*p.degree() == 0) {
    iso.square_free = Polynomial::one();
    return iso;
  }
  const auto decomposition = square_free_decompose(p);
  iso.square_free = square_free_part(p);
  iso.intervals = isolate_square_free(iso.square_free);
  for (auto& interval : iso.intervals) {
    for (const auto& [factor, mult] : decomposition) {
      if (count_real_roots(factor, interval.lo, interval.hi) == 1) {
        interval.multiplicity = mult;
        break;
      }
    }
  }
  return iso;
}

void refine_isolation(RootIsolation& iso, const Rational& max_width) {
  if (iso.intervals.empty()) return;
  if (max_width.sign() <= 0) throw std::invalid_argument("refine_isolation: width must be positive");
  const SturmChain chain(iso.square_free);
  for (auto& interval : iso.intervals) {
    while (interval.hi - interval.lo > max_width) {
      const Rational mid = (interval.lo + interval.hi) / Rational(2);
      if (chain.variations_at(interval.lo) - chain.variations_at(mid) == 1)
        interval.hi = mid;
      else
        interval.lo = mid;
    }
  }
}

namespace {

struct MergedRoots {
  std::vector<IsolatingInterval> points; // ascending distinct roots of f*g
  std::vector<int> mult_f;
  std::vector<int> mult_g;
};

int multiplicity_in(const std::vector<std::pair<Polynomial, int>>& decomposition, const IsolatingInterval& at) {
  for (const auto& [factor, mult] : decomposition)
    if (count_real_roots(factor, at.lo, at.hi) == 1) return mult;
  return 0;
}

// Isolate the distinct roots of f*g once, then attribute multiplicities.
// Shared roots land in the same isolated point, so equality of algebraic
// numbers is decided structurally instead of by racing interval refinement.
MergedRoots merge_roots(const Polynomial& f, const Polynomial& g) {
  MergedRoots out;
  out.points = isolate_square_free(square_free_part(f * g));
  const auto df = square_free_decompose(f);
  const auto dg = square_free_decompose(g);
  out.mult_f.reserve(out.points.size());
  out.mult_g.reserve(out.points.size());
  for (const auto& point : out.points) {
    out.mult_f.push_back(multiplicity_in(df, point));
    out.mult_g.push_back(multiplicity_in(dg, point));
  }
  return out;
}

std::string interval_text(const IsolatingInterval& iv) {
  return "(" + iv.lo.to_string() + ", " + iv.hi.to_string() + "]";
}

// Roots repeated by multiplicity, largest first, as indices into points.
std::vector<int> descending_root_ids(const std::vector<int>& mult, size_t npoints) {
  std::vector<int> ids;
  for (size_t t = npoints; t-- > 0;)
    for (int c = 0; c < mult[t]; ++c) ids.push_back(static_cast<int>(t));
  return ids;
}

} // namespace

InterlacingVerdict interlaces(const Polynomial& g, const Polynomial& f) {
  // Zero interlaces and is interlaced by every real-rooted polynomial.
  if (g.is_zero() || f.is_zero()) {
    const Polynomial& other = g.is_zero() ? f : g;
    if (is_real_rooted(other)) return {true, ""};
    return {false, "companion of the zero polynomial is not real-rooted"};
  }
  if (g.leading_coeff().sign() < 0 || f.leading_coeff().sign() < 0)
    return {false, "leading coefficient not positive"};
  if (!is_real_rooted(g)) return {false, "left polynomial is not real-rooted"};
  if (!is_real_rooted(f)) return {false, "right polynomial is not real-rooted"};

  const int dg = *g.degree();
  const int df = *f.degree();
  if (dg == 0) {
    // Convention: a nonnegative constant interlaces b*x + c with b, c >= 0.
    if (df == 0) return {true, ""};
    if (df == 1) {
      if (f.has_nonnegative_coeffs()) return {true, ""};
      return {false, "constant vs degree-1 convention needs nonnegative coefficients"};
    }
    return {false, "degree mismatch: deg f = " + std::to_string(df) + " vs constant g"};
  }
  if (df != dg && df != dg + 1)
    return {false, "degree mismatch: deg f = " + std::to_string(df) + ", deg g = " + std::to_string(dg) +
                       " (must be equal or one more)"};

  const MergedRoots merged = merge_roots(f, g);
  const std::vector<int> u = descending_root_ids(merged.mult_f, merged.points.size());
  const std::vector<int> v = descending_root_ids(merged.mult_g, merged.points.size());

  // u_1 >= v_1 >= u_2 >= v_2 >= ... with indices 1-based from the top.
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] > u[i]) {
      return {false, "zero #" + std::to_string(i + 1) + " of g in " + interval_text(merged.points[static_cast<size_t>(v[i])]) +
                         " exceeds zero #" + std::to_string(i + 1) + " of f in " +
                         interval_text(merged.points[static_cast<size_t>(u[i])])};
    }
  }
  const size_t pairs = std::min(v.size(), u.size() - 1);
  for (size_t i = 0; i < pairs; ++i) {
    if (u[i + 1] > v[i]) {
      return {false, "zero #" + std::to_string(i + 2) + " of f in " + interval_text(merged.points[static_cast<size_t>(u[i + 1])]) +
                         " exceeds zero #" + std::to_string(i + 1) + " of g in " +
                         interval_text(merged.points[static_cast<size_t>(v[i])])};
    }
  }
  return {true, ""};
}

InterlacingVerdict is_interlacing_sequence(std::span<const Polynomial> seq) {
  for (size_t i = 0; i < seq.size(); ++i) {
    for (size_t j = i + 1; j < seq.size(); ++j) {
      const InterlacingVerdict v = interlaces(seq[i], seq[j]);
      if (!v.holds)
        return {false, "pair (" + std::to_string(i + 1) + ", " + std::to_string(j + 1) + "): " + v.witness};
    }
  }
  return {true, ""};
}

} // namespace vlab
