#include "vlab/veronese.hpp"

#include <stdexcept>

#include "vlab/errors.hpp"

namespace vlab {

SectionDecomposition sections(const Polynomial& f, int r) {
  if (r < 1) throw std::invalid_argument("sections: r must be >= 1");
  SectionDecomposition d;
  d.r = r;
  d.parts.resize(static_cast<size_t>(r));
  std::vector<std::vector<Rational>> buckets(static_cast<size_t>(r));
  for (size_t i = 0; i < f.coeffs().size(); ++i) {
    const size_t k = i % static_cast<size_t>(r);
    const size_t j = i / static_cast<size_t>(r);
    auto& b = buckets[k];
    if (b.size() <= j) b.resize(j + 1);
    b[j] = f.coeffs()[i];
  }
  for (int k = 0; k < r; ++k) d.parts[static_cast<size_t>(k)] = Polynomial(std::move(buckets[static_cast<size_t>(k)]));
  return d;
}

Polynomial recompose(const SectionDecomposition& d) {
  Polynomial out;
  for (size_t k = 0; k < d.parts.size(); ++k)
    out += d.parts[k].substitute_x_power(d.r).times_x_power(static_cast<int>(k));
  return out;
}

namespace {

// deg(U_{r,k}^n h) <= (n(r-1) + deg h - k)/r; nullopt when the result must be 0.
std::optional<int> veronese_degree_bound(const Polynomial& h, int n, int r, int k) {
  if (h.is_zero()) return std::nullopt;
  const int total = n * (r - 1) + *h.degree();
  if (total < k) return std::nullopt;
  return (total - k) / r;
}

void check_veronese_args(int n, int r, int k) {
  if (r < 1) throw std::invalid_argument("veronese: r must be >= 1");
  if (n < 0) throw std::invalid_argument("veronese: n must be >= 0");
  if (k < 0 || k >= r) throw std::invalid_argument("veronese: k must satisfy 0 <= k <= r-1");
}

} // namespace

VeroneseResult veronese(const Polynomial& h, int n, int r, int k) {
  check_veronese_args(n, r, k);
  const Polynomial product = geometric_kernel(r, n) * h;
  VeroneseResult out{r, n, k, sections(product, r).parts[static_cast<size_t>(k)]};
  const auto bound = veronese_degree_bound(h, n, r, k);
  if (out.numerator.degree().value_or(-1) > bound.value_or(-1))
    throw InternalInconsistencyError("veronese: degree bound violated");
  return out;
}

int veronese_oracle_min_order(const Polynomial& h, int n, int r, int k) {
  check_veronese_args(n, r, k);
  if (h.is_zero()) return n;
  const int total = n * (r - 1) + *h.degree();
  const int quot = total <= k ? 0 : (total - k + r - 1) / r;
  return quot + n;
}

Polynomial veronese_oracle(const Polynomial& h, int n, int r, int k, int M) {
  check_veronese_args(n, r, k);
  if (M < veronese_oracle_min_order(h, n, r, k))
    throw std::invalid_argument("veronese_oracle: truncation order M too small to certify");
  if (h.is_zero()) return Polynomial();

  const RationalSeries full = series_of_rational(h, n, r * M + k);
  Polynomial subseq;
  {
    std::vector<Rational> cs(static_cast<size_t>(M) + 1);
    for (int i = 0; i <= M; ++i) cs[static_cast<size_t>(i)] = full.at(r * i + k);
    subseq = Polynomial(std::move(cs));
  }
  // (1-x)^n * subsequence series == numerator; the tail above the degree
  // bound must cancel to zero exactly.
  const Polynomial cleared = Polynomial::power(Polynomial(std::vector<Rational>{Rational(1), Rational(-1)}),
                                               static_cast<unsigned long>(n)) *
                             subseq;
  const auto bound = veronese_degree_bound(h, n, r, k);
  const int keep = bound.value_or(-1);
  std::vector<Rational> cs(static_cast<size_t>(std::max(keep, 0)) + 1);
  for (int i = 0; i <= M; ++i) {
    const Rational& c = cleared.coeff(i);
    if (i <= keep) {
      cs[static_cast<size_t>(i)] = c;
    } else if (!c.is_zero()) {
      throw InternalInconsistencyError("veronese_oracle: nonzero coefficient of x^" + std::to_string(i) +
                                       " above the degree bound " + std::to_string(keep));
    }
  }
  return Polynomial(std::move(cs));
}

Polynomial veronese_via_uri(const Polynomial& h, int n, int r, int i) {
  check_veronese_args(n, r, i);
  const SectionDecomposition hs = sections(h, r);
  std::vector<Polynomial> unit(static_cast<size_t>(r));
  for (int j = 0; j < r; ++j) unit[static_cast<size_t>(j)] = veronese(Polynomial::one(), n, r, j).numerator;

  Polynomial low;
  for (int j = 0; j <= i; ++j) low += hs.parts[static_cast<size_t>(i - j)] * unit[static_cast<size_t>(j)];
  Polynomial high;
  for (int j = i + 1; j < r; ++j) high += hs.parts[static_cast<size_t>(r - (j - i))] * unit[static_cast<size_t>(j)];
  return low + high.times_x_power(1);
}

std::vector<Polynomial> veronese_sequence(const Polynomial& h, int n, int r) {
  std::vector<Polynomial> seq;
  seq.reserve(static_cast<size_t>(r));
  for (int k = r - 1; k >= 0; --k) seq.push_back(veronese(h, n, r, k).numerator);
  return seq;
}

} // namespace vlab
