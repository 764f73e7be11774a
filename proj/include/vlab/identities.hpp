#pragma once

#include <string>
#include <utility>
#include <vector>

#include "vlab/permstat.hpp"
#include "vlab/polynomial.hpp"
#include "vlab/qpolynomial.hpp"

namespace vlab {

// A conclusion failure signals a bug (these are theorems); an unmet
// hypothesis only says the instance is outside the statement.
enum class Verdict { Pass, Fail, HypothesisNotMet };

std::string to_string(Verdict v);

struct VerificationReport {
  std::string claim;
  std::vector<std::pair<std::string, std::string>> params;
  Verdict verdict = Verdict::Pass;
  std::string detail;
};

// Certified truncation order: high enough that a polynomial identity hiding
// behind the series comparison is pinned down completely, not sampled.
int default_truncation_order(int n, int degree_bound);

// Interlacing of the section-operator sequence, assuming the sections of h
// interlace. h must have nonnegative coefficients; a failed assumption is
// reported as HypothesisNotMet.
VerificationReport verify_main_theorem(const Polynomial& h, int n, int r);

// deg h <= r criterion.
VerificationReport verify_cor_deg_le_r(const Polynomial& h, int n, int r);

// Coefficient-inequality criterion: h_i h_{r+j} <= h_j h_{r+i} for i < j,
// deg h < 2r.
VerificationReport verify_cor_coeff_ineq(const Polynomial& h, int n, int r);

// Log-concavity criterion (no internal zeros, deg h < 2r).
VerificationReport verify_cor_log_concave(const Polynomial& h, int n, int r);

// Negative-real-rootedness criterion; also asserts that the sections of such
// an h interlace.
VerificationReport verify_cor_real_rooted(const Polynomial& h, int n, int r);

// The r-section identity linking the kernel-multiplied Eulerian polynomial to
// the colored descent polynomials split by first color.
VerificationReport verify_thm_c(int n, int r, const EnumLimits& limits = default_limits());
// Same identity refined by the first letter.
VerificationReport verify_thm_lc(int n, int r, int ell, const EnumLimits& limits = default_limits());

// sum (i+1)^n x^i == A_n(x)/(1-x)^{n+1}, to order M >= n + deg A_n.
VerificationReport verify_euler_identity(int n, int M, const EnumLimits& limits = default_limits());

// sum [i+1]_q^n x^i == (sum x^des q^maj)/(x;q)_{n+1}, truncated at M.
VerificationReport verify_carlitz(int n, int M, const EnumLimits& limits = default_limits());

// sum [ri+1]_q^n x^i == (sum x^des q^fmaj)/(x;q^r)_{n+1}.
VerificationReport verify_chow_mansour(int n, int r, int M, const EnumLimits& limits = default_limits());

// Refined colored Carlitz identity for fixed first letter and first color.
VerificationReport verify_refined_carlitz(int n, int r, int ell, int c, int M,
                                          const EnumLimits& limits = default_limits());

// Its q = 1 specialization with plain powers.
VerificationReport verify_lc_key(int n, int r, int ell, int c, int M,
                                 const EnumLimits& limits = default_limits());

// Instance check of the external degree <= r+k real-rootedness theorem.
VerificationReport verify_jochemko_instance(const Polynomial& h, int n, int r, int k);

// Identity cores with the enumerated ingredient injected. The verify_*
// wrappers enumerate honestly; tests feed mutated ingredients through these
// to prove the checkers can fail.
VerificationReport check_thm_c_with(const Polynomial& eulerian, const std::vector<Polynomial>& g_by_color,
                                    int n, int r);
VerificationReport check_thm_lc_with(const Polynomial& refined_eulerian,
                                     const std::vector<Polynomial>& g_by_color, int n, int r, int ell);
VerificationReport check_euler_with(const Polynomial& eulerian, int n, int M);
VerificationReport check_carlitz_with(const QPolynomial& numerator, int n, int M);
VerificationReport check_chow_mansour_with(const QPolynomial& numerator, int n, int r, int M);
VerificationReport check_refined_carlitz_with(const QPolynomial& numerator, int n, int r, int ell, int c, int M);
VerificationReport check_lc_key_with(const Polynomial& numerator, int n, int r, int ell, int c, int M);

// Hypothesis checkers, separated from the conclusion checks so a vacuous pass
// is impossible. Each returns an empty string when satisfied and a witness
// otherwise.
std::string coeff_inequalities_witness(const Polynomial& h, int r);
std::string log_concavity_witness(const Polynomial& h);

} // namespace vlab
