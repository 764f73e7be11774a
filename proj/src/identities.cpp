#include "vlab/identities.hpp"

#include <algorithm>
#include <stdexcept>

#include "vlab/realroot.hpp"
#include "vlab/series.hpp"
#include "vlab/veronese.hpp"

namespace vlab {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::HypothesisNotMet: return "hypothesis-not-met";
  }
  return "unknown";
}

int default_truncation_order(int n, int degree_bound) {
  return std::max(8, degree_bound + n + 1);
}

namespace {

using Params = std::vector<std::pair<std::string, std::string>>;

Params base_params(const Polynomial& h, int n, int r) {
  return {{"h", h.to_string()}, {"n", std::to_string(n)}, {"r", std::to_string(r)}};
}

VerificationReport report(std::string claim, Params params, Verdict verdict, std::string detail = "") {
  return {std::move(claim), std::move(params), verdict, std::move(detail)};
}

std::string nonnegativity_witness(const Polynomial& h) {
  for (size_t i = 0; i < h.coeffs().size(); ++i)
    if (h.coeffs()[i].sign() < 0)
      return "coefficient of x^" + std::to_string(i) + " is negative (" + h.coeffs()[i].to_string() + ")";
  return "";
}

// Shared conclusion: the operator sequence (k = r-1 down to 0) interlaces.
VerificationReport conclude_u_sequence(std::string claim, Params params, const Polynomial& h, int n, int r) {
  const std::vector<Polynomial> seq = veronese_sequence(h, n, r);
  const InterlacingVerdict v = is_interlacing_sequence(seq);
  if (!v.holds) return report(std::move(claim), std::move(params), Verdict::Fail, "operator sequence: " + v.witness);
  return report(std::move(claim), std::move(params), Verdict::Pass);
}

} // namespace

std::string coeff_inequalities_witness(const Polynomial& h, int r) {
  for (int i = 0; i < r; ++i) {
    for (int j = i + 1; j < r; ++j) {
      if (h.coeff(i) * h.coeff(r + j) > h.coeff(j) * h.coeff(r + i))
        return "h_" + std::to_string(i) + "*h_" + std::to_string(r + j) + " > h_" + std::to_string(j) + "*h_" +
               std::to_string(r + i) + " at (i,j) = (" + std::to_string(i) + "," + std::to_string(j) + ")";
    }
  }
  return "";
}

std::string log_concavity_witness(const Polynomial& h) {
  const auto& c = h.coeffs();
  int first = -1, last = -1;
  for (size_t i = 0; i < c.size(); ++i) {
    if (!c[i].is_zero()) {
      if (first < 0) first = static_cast<int>(i);
      last = static_cast<int>(i);
    }
  }
  for (int i = first + 1; i < last; ++i)
    if (h.coeff(i).is_zero()) return "internal zero at index " + std::to_string(i);
  for (size_t i = 1; i + 1 < c.size(); ++i) {
    if (c[i] * c[i] < c[i - 1] * c[i + 1])
      return "log-concavity fails at i = " + std::to_string(i) + " (" + (c[i] * c[i]).to_string() + " < " +
             (c[i - 1] * c[i + 1]).to_string() + ")";
  }
  return "";
}

VerificationReport verify_main_theorem(const Polynomial& h, int n, int r) {
  Params params = base_params(h, n, r);
  if (std::string w = nonnegativity_witness(h); !w.empty())
    return report("thm:main-hnb", std::move(params), Verdict::HypothesisNotMet, w);
  std::vector<Polynomial> section_seq;
  {
    const SectionDecomposition d = sections(h, r);
    for (int k = r - 1; k >= 0; --k) section_seq.push_back(d.parts[static_cast<size_t>(k)]);
  }
  if (const InterlacingVerdict v = is_interlacing_sequence(section_seq); !v.holds)
    return report("thm:main-hnb", std::move(params), Verdict::HypothesisNotMet, "sections of h: " + v.witness);
  return conclude_u_sequence("thm:main-hnb", std::move(params), h, n, r);
}

VerificationReport verify_cor_deg_le_r(const Polynomial& h, int n, int r) {
  Params params = base_params(h, n, r);
  if (std::string w = nonnegativity_witness(h); !w.empty())
    return report("cor:3.1", std::move(params), Verdict::HypothesisNotMet, w);
  if (h.degree().value_or(0) > r)
    return report("cor:3.1", std::move(params), Verdict::HypothesisNotMet,
                  "deg h = " + std::to_string(*h.degree()) + " exceeds r = " + std::to_string(r));
  return conclude_u_sequence("cor:3.1", std::move(params), h, n, r);
}

VerificationReport verify_cor_coeff_ineq(const Polynomial& h, int n, int r) {
  Params params = base_params(h, n, r);
  if (std::string w = nonnegativity_witness(h); !w.empty())
    return report("cor:3.2", std::move(params), Verdict::HypothesisNotMet, w);
  if (h.degree().value_or(0) >= 2 * r)
    return report("cor:3.2", std::move(params), Verdict::HypothesisNotMet,
                  "deg h = " + std::to_string(*h.degree()) + " is not below 2r = " + std::to_string(2 * r));
  if (std::string w = coeff_inequalities_witness(h, r); !w.empty())
    return report("cor:3.2", std::move(params), Verdict::HypothesisNotMet, w);
  return conclude_u_sequence("cor:3.2", std::move(params), h, n, r);
}

VerificationReport verify_cor_log_concave(const Polynomial& h, int n, int r) {
  Params params = base_params(h, n, r);
  if (std::string w = nonnegativity_witness(h); !w.empty())
    return report("cor:3.3", std::move(params), Verdict::HypothesisNotMet, w);
  if (h.degree().value_or(0) >= 2 * r)
    return report("cor:3.3", std::move(params), Verdict::HypothesisNotMet,
                  "deg h = " + std::to_string(*h.degree()) + " is not below 2r = " + std::to_string(2 * r));
  if (std::string w = log_concavity_witness(h); !w.empty())
    return report("cor:3.3", std::move(params), Verdict::HypothesisNotMet, w);
  return conclude_u_sequence("cor:3.3", std::move(params), h, n, r);
}

VerificationReport verify_cor_real_rooted(const Polynomial& h, int n, int r) {
  Params params = base_params(h, n, r);
  if (std::string w = nonnegativity_witness(h); !w.empty())
    return report("cor:3.4", std::move(params), Verdict::HypothesisNotMet, w);
  if (h.is_zero() || !has_only_negative_roots(h))
    return report("cor:3.4", std::move(params), Verdict::HypothesisNotMet,
                  "h does not have only negative real zeros");
  // The sections of a polynomial with only negative real zeros interlace;
  // assert that fact alongside the operator conclusion.
  std::vector<Polynomial> section_seq;
  {
    const SectionDecomposition d = sections(h, r);
    for (int k = r - 1; k >= 0; --k) section_seq.push_back(d.parts[static_cast<size_t>(k)]);
  }
  if (const InterlacingVerdict v = is_interlacing_sequence(section_seq); !v.holds)
    return report("cor:3.4", std::move(params), Verdict::Fail, "sections of h: " + v.witness);
  return conclude_u_sequence("cor:3.4", std::move(params), h, n, r);
}

namespace {

VerificationReport check_section_identity(std::string claim, Params params, const Polynomial& lhs_factor,
                                          const std::vector<Polynomial>& g_by_color, int n, int r) {
  for (int c = 1; c < r; ++c) {
    if (!g_by_color[static_cast<size_t>(c)].constant_term().is_zero())
      return report(std::move(claim), std::move(params), Verdict::Fail,
                    "divisibility: constant term of the color-" + std::to_string(c) + " polynomial is " +
                        g_by_color[static_cast<size_t>(c)].constant_term().to_string() + ", expected 0");
  }
  const Polynomial lhs = geometric_kernel(r, n) * lhs_factor;
  const SectionDecomposition d = sections(lhs, r);
  for (int k = 0; k < r; ++k) {
    const Polynomial expected = (k == 0) ? g_by_color[0] : g_by_color[static_cast<size_t>(r - k)].div_x_power(1);
    const Polynomial& got = d.parts[static_cast<size_t>(k)];
    if (!(got == expected)) {
      int i = 0;
      while (got.coeff(i) == expected.coeff(i)) ++i;
      return report(std::move(claim), std::move(params), Verdict::Fail,
                    "section k = " + std::to_string(k) + " differs at coefficient " + std::to_string(i) + ": " +
                        got.coeff(i).to_string() + " vs " + expected.coeff(i).to_string());
    }
  }
  return report(std::move(claim), std::move(params), Verdict::Pass);
}

} // namespace

VerificationReport check_thm_c_with(const Polynomial& eulerian, const std::vector<Polynomial>& g_by_color,
                                    int n, int r) {
  Params params{{"n", std::to_string(n)}, {"r", std::to_string(r)}};
  return check_section_identity("thm:c/eq:c", std::move(params), eulerian, g_by_color, n, r);
}

VerificationReport check_thm_lc_with(const Polynomial& refined_eulerian, const std::vector<Polynomial>& g_by_color,
                                     int n, int r, int ell) {
  Params params{{"n", std::to_string(n)}, {"r", std::to_string(r)}, {"ell", std::to_string(ell)}};
  return check_section_identity("thm:c/eq:lc", std::move(params), refined_eulerian, g_by_color, n, r);
}

VerificationReport verify_thm_c(int n, int r, const EnumLimits& limits) {
  std::vector<Polynomial> gs;
  for (int c = 0; c < r; ++c) gs.push_back(colored_refined(n, r, std::nullopt, c, limits));
  return check_thm_c_with(eulerian_poly(n, limits), gs, n, r);
}

VerificationReport verify_thm_lc(int n, int r, int ell, const EnumLimits& limits) {
  std::vector<Polynomial> gs;
  for (int c = 0; c < r; ++c) gs.push_back(colored_refined(n, r, ell, c, limits));
  return check_thm_lc_with(eulerian_refined(n, ell, limits), gs, n, r, ell);
}

namespace {

VerificationReport compare_rational_series(std::string claim, Params params, const RationalSeries& lhs,
                                           const RationalSeries& rhs) {
  for (int i = 0; i <= std::min(lhs.order(), rhs.order()); ++i) {
    if (!(lhs.at(i) == rhs.at(i)))
      return report(std::move(claim), std::move(params), Verdict::Fail,
                    "coefficient of x^" + std::to_string(i) + ": " + lhs.at(i).to_string() + " vs " +
                        rhs.at(i).to_string());
  }
  return report(std::move(claim), std::move(params), Verdict::Pass);
}

VerificationReport compare_q_series(std::string claim, Params params, const QSeries& lhs, const QSeries& rhs) {
  for (int i = 0; i <= std::min(lhs.order(), rhs.order()); ++i) {
    if (!(lhs.at(i) == rhs.at(i))) {
      int j = 0;
      while (lhs.at(i).coeff(j) == rhs.at(i).coeff(j)) ++j;
      return report(std::move(claim), std::move(params), Verdict::Fail,
                    "coefficient of x^" + std::to_string(i) + " q^" + std::to_string(j) + ": " +
                        lhs.at(i).coeff(j).to_string() + " vs " + rhs.at(i).coeff(j).to_string());
    }
  }
  return report(std::move(claim), std::move(params), Verdict::Pass);
}

} // namespace

VerificationReport check_euler_with(const Polynomial& eulerian, int n, int M) {
  Params params{{"n", std::to_string(n)}, {"M", std::to_string(M)}};
  if (M < n + eulerian.degree().value_or(0))
    throw std::invalid_argument("verify_euler_identity: M below the certification order");
  RationalSeries lhs(M);
  for (int i = 0; i <= M; ++i) lhs.at(i) = Rational(integer_pow(Integer(i + 1), static_cast<unsigned long>(n)));
  return compare_rational_series("eq:A", std::move(params), lhs, series_of_rational(eulerian, n + 1, M));
}

VerificationReport verify_euler_identity(int n, int M, const EnumLimits& limits) {
  return check_euler_with(eulerian_poly(n, limits), n, M);
}

VerificationReport check_carlitz_with(const QPolynomial& numerator, int n, int M) {
  Params params{{"n", std::to_string(n)}, {"M", std::to_string(M)}};
  QSeries lhs(M);
  for (int i = 0; i <= M; ++i) lhs.at(i) = Polynomial::power(q_bracket_poly(i + 1), static_cast<unsigned long>(n));
  const QSeries rhs = qseries_of(numerator, M) * q_factorial_pochhammer(0, 1, n + 1, M);
  return compare_q_series("eq:A-q", std::move(params), lhs, rhs);
}

VerificationReport verify_carlitz(int n, int M, const EnumLimits& limits) {
  QPolynomial numerator = eulerian_poly_q(n, limits);
  return check_carlitz_with(numerator, n, M);
}

VerificationReport check_chow_mansour_with(const QPolynomial& numerator, int n, int r, int M) {
  Params params{{"n", std::to_string(n)}, {"r", std::to_string(r)}, {"M", std::to_string(M)}};
  QSeries lhs(M);
  for (int i = 0; i <= M; ++i)
    lhs.at(i) = Polynomial::power(q_bracket_poly(r * i + 1), static_cast<unsigned long>(n));
  const QSeries rhs = qseries_of(numerator, M) * q_factorial_pochhammer(0, r, n + 1, M);
  return compare_q_series("eq:CM", std::move(params), lhs, rhs);
}

VerificationReport verify_chow_mansour(int n, int r, int M, const EnumLimits& limits) {
  return check_chow_mansour_with(colored_refined_q(n, r, std::nullopt, std::nullopt, limits), n, r, M);
}

namespace {

Params refined_params(int n, int r, int ell, int c, int M) {
  return {{"n", std::to_string(n)},
          {"r", std::to_string(r)},
          {"ell", std::to_string(ell)},
          {"c", std::to_string(c)},
          {"M", std::to_string(M)}};
}

void check_refined_args(int n, int r, int ell, int c) {
  if (n < 1 || r < 1) throw std::invalid_argument("refined identity: n, r must be >= 1");
  if (ell < 1 || ell > n) throw std::invalid_argument("refined identity: ell out of range");
  if (c < 0 || c >= r) throw std::invalid_argument("refined identity: color out of range");
}

} // namespace

VerificationReport check_refined_carlitz_with(const QPolynomial& numerator, int n, int r, int ell, int c, int M) {
  check_refined_args(n, r, ell, c);
  const QSeries lhs = qseries_of(numerator, M) * q_factorial_pochhammer(r, r, n, M);
  QSeries rhs(M);
  rhs.at(0) = (ell == 1 && c == 0) ? Polynomial::one() : Polynomial();
  for (int i = 1; i <= M; ++i) {
    Polynomial term = Polynomial::power(q_bracket_poly(r * i - c), static_cast<unsigned long>(ell - 1));
    term *= Polynomial::power(q_bracket_poly(r * i - c + 1), static_cast<unsigned long>(n - ell));
    term *= Polynomial::monomial(r * i - c);
    rhs.at(i) = term;
  }
  return compare_q_series("eq:refCarlitz", refined_params(n, r, ell, c, M), lhs, rhs);
}

VerificationReport verify_refined_carlitz(int n, int r, int ell, int c, int M, const EnumLimits& limits) {
  check_refined_args(n, r, ell, c);
  return check_refined_carlitz_with(colored_refined_q(n, r, ell, c, limits), n, r, ell, c, M);
}

VerificationReport check_lc_key_with(const Polynomial& numerator, int n, int r, int ell, int c, int M) {
  check_refined_args(n, r, ell, c);
  const RationalSeries lhs = series_of_rational(numerator, n, M);
  RationalSeries rhs(M);
  rhs.at(0) = (ell == 1 && c == 0) ? Rational(1) : Rational(0);
  for (int i = 1; i <= M; ++i) {
    const Integer a = integer_pow(Integer(r * i - c), static_cast<unsigned long>(ell - 1));
    const Integer b = integer_pow(Integer(r * i - c + 1), static_cast<unsigned long>(n - ell));
    rhs.at(i) = Rational(Integer(a * b));
  }
  return compare_rational_series("eq:lc-key", refined_params(n, r, ell, c, M), lhs, rhs);
}

VerificationReport verify_lc_key(int n, int r, int ell, int c, int M, const EnumLimits& limits) {
  check_refined_args(n, r, ell, c);
  return check_lc_key_with(colored_refined(n, r, ell, c, limits), n, r, ell, c, M);
}

VerificationReport verify_jochemko_instance(const Polynomial& h, int n, int r, int k) {
  Params params = base_params(h, n, r);
  params.emplace_back("k", std::to_string(k));
  if (std::string w = nonnegativity_witness(h); !w.empty())
    return report("ext:jochemko", std::move(params), Verdict::HypothesisNotMet, w);
  if (h.degree().value_or(0) > r + k)
    return report("ext:jochemko", std::move(params), Verdict::HypothesisNotMet,
                  "deg h exceeds r + k = " + std::to_string(r + k));
  const Polynomial u = veronese(h, n, r, k).numerator;
  if (!is_real_rooted(u))
    return report("ext:jochemko", std::move(params), Verdict::Fail, "operator image is not real-rooted");
  return report("ext:jochemko", std::move(params), Verdict::Pass);
}

} // namespace vlab
