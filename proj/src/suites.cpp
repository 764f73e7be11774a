#include "vlab/suites.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "vlab/realroot.hpp"
#include "vlab/series.hpp"
#include "vlab/veronese.hpp"

namespace vlab {

namespace {

using Rng = std::mt19937_64;
using Params = std::vector<std::pair<std::string, std::string>>;

// Plain modulo draw keeps corpus generation bit-stable across standard
// library implementations.
int rand_int(Rng& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

Rational rand_rational(Rng& rng, int num_lo, int num_hi, int den_hi) {
  return Rational(Integer(rand_int(rng, num_lo, num_hi)), Integer(rand_int(rng, 1, den_hi)));
}

Polynomial random_poly(Rng& rng, int degmax, int coeffmax) {
  const int deg = rand_int(rng, 0, degmax);
  std::vector<Rational> cs(static_cast<size_t>(deg) + 1);
  for (auto& c : cs) c = Rational(rand_int(rng, 0, coeffmax));
  return Polynomial(std::move(cs));
}

// prod (x + a) with a drawn from 1..amax.
Polynomial random_negative_rooted(Rng& rng, int min_factors, int max_factors, int amax) {
  const int m = rand_int(rng, min_factors, max_factors);
  Polynomial p = Polynomial::one();
  for (int i = 0; i < m; ++i)
    p *= Polynomial(std::vector<Rational>{Rational(rand_int(rng, 1, amax)), Rational(1)});
  return p;
}

Polynomial poly_from_roots(const std::vector<Rational>& roots, const Rational& lead) {
  Polynomial p(lead);
  for (const auto& root : roots) p *= Polynomial(std::vector<Rational>{-root, Rational(1)});
  return p;
}

VerificationReport simple_report(std::string claim, Params params, bool pass, std::string detail = "") {
  return {std::move(claim), std::move(params), pass ? Verdict::Pass : Verdict::Fail, std::move(detail)};
}

// ---- oracle equivalence -------------------------------------------------

SuiteOutcome suite_oracle(const SuiteOptions& o) {
  SuiteOutcome out{"oracle", {}, false};
  Rng rng(o.seed);
  const int count = o.count.value_or(200);
  const int nmax = o.nmax.value_or(4);
  const int rmax = o.rmax.value_or(4);
  for (int t = 0; t < count; ++t) {
    const Polynomial h = random_poly(rng, o.degmax, o.coeffmax);
    bool pass = true;
    std::string detail;
    for (int n = 0; n <= nmax && pass; ++n) {
      for (int r = 1; r <= rmax && pass; ++r) {
        for (int k = 0; k < r && pass; ++k) {
          const Polynomial direct = veronese(h, n, r, k).numerator;
          const Polynomial by_series = veronese_oracle(h, n, r, k, veronese_oracle_min_order(h, n, r, k) + 2);
          const Polynomial by_decomposition = veronese_via_uri(h, n, r, k);
          if (!(direct == by_series)) {
            pass = false;
            detail = "series route disagrees at n=" + std::to_string(n) + " r=" + std::to_string(r) +
                     " k=" + std::to_string(k);
          } else if (!(direct == by_decomposition)) {
            pass = false;
            detail = "decomposition route disagrees at n=" + std::to_string(n) + " r=" + std::to_string(r) +
                     " k=" + std::to_string(k);
          }
        }
      }
    }
    out.reports.push_back(simple_report("oracle:veronese", {{"h", h.to_string()}}, pass, detail));
  }
  return out;
}

// ---- interlacing of the kernel sections (constant h) ---------------------

SuiteOutcome suite_lemma_a(const SuiteOptions& o) {
  SuiteOutcome out{"lemma-a", {}, false};
  const int nmax = o.nmax.value_or(5);
  const int rmax = o.rmax.value_or(5);
  for (int n = o.n.value_or(1); n <= o.n.value_or(nmax); ++n) {
    for (int r = o.r.value_or(1); r <= o.r.value_or(rmax); ++r) {
      const std::vector<Polynomial> seq = veronese_sequence(Polynomial::one(), n, r);
      const InterlacingVerdict v = is_interlacing_sequence(seq);
      out.reports.push_back(simple_report(
          "lem:a", {{"n", std::to_string(n)}, {"r", std::to_string(r)}}, v.holds, v.witness));
    }
  }
  return out;
}

// ---- main interlacing theorem over a random corpus ----------------------

SuiteOutcome suite_main_theorem(const SuiteOptions& o) {
  SuiteOutcome out{"main-theorem", {}, false};
  Rng rng(o.seed);
  const int count = o.count.value_or(100);
  const int nmax = o.nmax.value_or(3);
  const int rmax = o.rmax.value_or(4);
  for (int t = 0; t < count; ++t) {
    const Polynomial h = random_negative_rooted(rng, 1, 6, 5);
    VerificationReport worst{"thm:main-hnb", {{"h", h.to_string()}}, Verdict::Pass, ""};
    for (int n = 1; n <= nmax && worst.verdict == Verdict::Pass; ++n) {
      for (int r = 1; r <= rmax && worst.verdict == Verdict::Pass; ++r) {
        VerificationReport rep = verify_main_theorem(h, n, r);
        if (rep.verdict != Verdict::Pass) worst = std::move(rep);
      }
    }
    out.reports.push_back(std::move(worst));
  }
  return out;
}

// ---- the four coefficient/root criteria ----------------------------------

SuiteOutcome suite_cor_deg(const SuiteOptions& o) {
  SuiteOutcome out{"cor-deg", {}, false};
  Rng rng(o.seed);
  const int count = o.count.value_or(50);
  for (int t = 0; t < count; ++t) {
    const int r = rand_int(rng, 1, o.rmax.value_or(4));
    const int n = rand_int(rng, 1, o.nmax.value_or(3));
    const Polynomial h = random_poly(rng, r, o.coeffmax);
    out.reports.push_back(verify_cor_deg_le_r(h, n, r));
  }
  for (int r = 1; r <= 4; ++r) {
    VerificationReport rep = verify_cor_deg_le_r(Polynomial::monomial(r + 1) + Polynomial::one(), 2, r);
    rep.claim += "/probe";
    out.reports.push_back(std::move(rep));
  }
  return out;
}

Polynomial random_ratio_poly(Rng& rng, int r, bool valid) {
  // h_{r+i} = h_i * t_i with the ratio sequence t_i nonincreasing exactly
  // when the pairwise inequalities hold.
  std::vector<Rational> low(static_cast<size_t>(r));
  for (auto& c : low) c = Rational(rand_int(rng, 1, 9));
  std::vector<Rational> ratios(static_cast<size_t>(r));
  Rational t(rand_int(rng, 3, 9), 1);
  for (auto& ratio : ratios) {
    ratio = t;
    if (t.sign() > 0) t = t - rand_rational(rng, 0, 2, 2);
    if (t.sign() < 0) t = Rational(0);
  }
  if (!valid && r >= 2) std::swap(ratios.front(), ratios.back());
  std::vector<Rational> cs(static_cast<size_t>(2 * r));
  for (int i = 0; i < r; ++i) {
    cs[static_cast<size_t>(i)] = low[static_cast<size_t>(i)];
    cs[static_cast<size_t>(r + i)] = low[static_cast<size_t>(i)] * ratios[static_cast<size_t>(i)];
  }
  return Polynomial(std::move(cs));
}

SuiteOutcome suite_cor_ineq(const SuiteOptions& o) {
  SuiteOutcome out{"cor-ineq", {}, false};
  Rng rng(o.seed);
  const int count = o.count.value_or(50);
  for (int t = 0; t < count; ++t) {
    const int r = rand_int(rng, 2, o.rmax.value_or(4));
    const int n = rand_int(rng, 1, o.nmax.value_or(3));
    out.reports.push_back(verify_cor_coeff_ineq(random_ratio_poly(rng, r, true), n, r));
  }
  for (int r = 2; r <= 4; ++r) {
    // 1 + x^{2r-1} violates the pair (0, r-1)
    VerificationReport rep = verify_cor_coeff_ineq(Polynomial::monomial(2 * r - 1) + Polynomial::one(), 2, r);
    rep.claim += "/probe";
    out.reports.push_back(std::move(rep));
  }
  for (int t = 0; t < 6; ++t) {
    const int r = rand_int(rng, 2, 4);
    Polynomial h = random_ratio_poly(rng, r, false);
    VerificationReport rep = verify_cor_coeff_ineq(h, 2, r);
    if (rep.verdict == Verdict::HypothesisNotMet) rep.claim += "/probe";
    // the shuffled ratios occasionally still satisfy the inequalities; those
    // instances must then pass as ordinary members of the corpus
    out.reports.push_back(std::move(rep));
  }
  return out;
}

SuiteOutcome suite_cor_log_concave(const SuiteOptions& o) {
  SuiteOutcome out{"cor-log-concave", {}, false};
  Rng rng(o.seed);
  const int count = o.count.value_or(50);
  for (int t = 0; t < count; ++t) {
    const int r = rand_int(rng, 1, o.rmax.value_or(4));
    const int n = rand_int(rng, 1, o.nmax.value_or(3));
    Polynomial h;
    switch (rand_int(rng, 0, 2)) {
      case 0: { // scaled binomial row: log-concave, no internal zeros
        const int m = rand_int(rng, 0, 2 * r - 1);
        const Rational s(rand_int(rng, 1, 4));
        std::vector<Rational> cs(static_cast<size_t>(m) + 1);
        for (int i = 0; i <= m; ++i)
          cs[static_cast<size_t>(i)] =
              s * Rational(binomial(static_cast<unsigned long>(m), static_cast<unsigned long>(i)));
        h = Polynomial(std::move(cs));
        break;
      }
      case 1: // real-rooted, hence log-concave
        h = random_negative_rooted(rng, 1, 2 * r - 1, 5);
        break;
      default: { // geometric: equality case of log-concavity
        const Rational q(rand_int(rng, 1, 3), rand_int(rng, 1, 2));
        std::vector<Rational> cs(static_cast<size_t>(rand_int(rng, 1, 2 * r)));
        Rational acc(rand_int(rng, 1, 5));
        for (auto& c : cs) {
          c = acc;
          acc *= q;
        }
        h = Polynomial(std::move(cs));
        break;
      }
    }
    out.reports.push_back(verify_cor_log_concave(h, n, r));
  }
  const std::vector<Polynomial> probes = {
      Polynomial(std::vector<Rational>{Rational(1), Rational(1), Rational(2)}), // 1 < 2 at i = 1
      Polynomial(std::vector<Rational>{Rational(1), Rational(0), Rational(1)}), // internal zero
  };
  for (const auto& h : probes) {
    VerificationReport rep = verify_cor_log_concave(h, 2, 2);
    rep.claim += "/probe";
    out.reports.push_back(std::move(rep));
  }
  return out;
}

SuiteOutcome suite_cor_real_rooted(const SuiteOptions& o) {
  SuiteOutcome out{"cor-real-rooted", {}, false};
  Rng rng(o.seed);
  const int count = o.count.value_or(50);
  for (int t = 0; t < count; ++t) {
    const int r = rand_int(rng, 1, o.rmax.value_or(4));
    const int n = rand_int(rng, 1, o.nmax.value_or(3));
    out.reports.push_back(verify_cor_real_rooted(random_negative_rooted(rng, 1, 6, 5), n, r));
  }
  const std::vector<Polynomial> probes = {
      Polynomial(std::vector<Rational>{Rational(1), Rational(1), Rational(1)}),  // complex zeros
      Polynomial(std::vector<Rational>{Rational(-1), Rational(0), Rational(1)}), // zero at +1
      Polynomial(std::vector<Rational>{Rational(0), Rational(1), Rational(1)}),  // zero at 0
  };
  for (const auto& h : probes) {
    VerificationReport rep = verify_cor_real_rooted(h, 2, 2);
    rep.claim += "/probe";
    out.reports.push_back(std::move(rep));
  }
  return out;
}

// ---- colored refinements -------------------------------------------------

SuiteOutcome suite_refined_color(const SuiteOptions& o) {
  SuiteOutcome out{"refined-color", {}, false};
  const int nmax = o.nmax.value_or(4);
  const int rmax = o.rmax.value_or(3);
  for (int n = o.n.value_or(1); n <= o.n.value_or(nmax); ++n) {
    for (int r = o.r.value_or(1); r <= o.r.value_or(rmax); ++r) {
      Params params{{"n", std::to_string(n)}, {"r", std::to_string(r)}};
      std::vector<Polynomial> by_color;
      for (int c = 0; c < r; ++c) by_color.push_back(colored_refined(n, r, std::nullopt, c));
      const InterlacingVerdict vi = is_interlacing_sequence(by_color);
      out.reports.push_back(simple_report("cor:3.5/i", params, vi.holds, vi.witness));

      const Polynomial g = colored_eulerian(n, r);
      out.reports.push_back(
          simple_report("cor:3.5/ii", params, is_real_rooted(g), "full polynomial not real-rooted"));

      for (int ell = 1; ell <= n; ++ell) {
        Params lparams = params;
        lparams.emplace_back("ell", std::to_string(ell));
        std::vector<Polynomial> refined;
        for (int c = 0; c < r; ++c) refined.push_back(colored_refined(n, r, ell, c));
        const InterlacingVerdict vl = is_interlacing_sequence(refined);
        out.reports.push_back(simple_report("cor:3.5/iii", lparams, vl.holds, vl.witness));
        const Polynomial gl = colored_refined(n, r, ell, std::nullopt);
        out.reports.push_back(
            simple_report("cor:3.5/iv", lparams, is_real_rooted(gl), "first-letter slice not real-rooted"));
      }
    }
  }
  return out;
}

// ---- exact identity grids --------------------------------------------------

SuiteOutcome suite_thm_c(const SuiteOptions& o) {
  SuiteOutcome out{"thm-c", {}, false};
  for (int n = o.n.value_or(1); n <= o.n.value_or(o.nmax.value_or(4)); ++n)
    for (int r = o.r.value_or(1); r <= o.r.value_or(o.rmax.value_or(3)); ++r)
      out.reports.push_back(verify_thm_c(n, r));
  return out;
}

SuiteOutcome suite_thm_lc(const SuiteOptions& o) {
  SuiteOutcome out{"thm-lc", {}, false};
  for (int n = o.n.value_or(1); n <= o.n.value_or(o.nmax.value_or(4)); ++n)
    for (int r = o.r.value_or(1); r <= o.r.value_or(o.rmax.value_or(3)); ++r)
      for (int ell = o.ell.value_or(1); ell <= o.ell.value_or(n); ++ell)
        out.reports.push_back(verify_thm_lc(n, r, ell));
  return out;
}

SuiteOutcome suite_euler(const SuiteOptions& o) {
  SuiteOutcome out{"euler", {}, false};
  const int M = o.M.value_or(12);
  for (int n = o.n.value_or(1); n <= o.n.value_or(o.nmax.value_or(6)); ++n)
    out.reports.push_back(verify_euler_identity(n, M));
  return out;
}

SuiteOutcome suite_carlitz(const SuiteOptions& o) {
  SuiteOutcome out{"carlitz", {}, false};
  const int M = o.M.value_or(8);
  for (int n = o.n.value_or(1); n <= o.n.value_or(o.nmax.value_or(4)); ++n)
    out.reports.push_back(verify_carlitz(n, M));
  return out;
}

SuiteOutcome suite_chow_mansour(const SuiteOptions& o) {
  SuiteOutcome out{"chow-mansour", {}, false};
  const int M = o.M.value_or(6);
  for (int n = o.n.value_or(1); n <= o.n.value_or(o.nmax.value_or(3)); ++n)
    for (int r = o.r.value_or(1); r <= o.r.value_or(o.rmax.value_or(3)); ++r)
      out.reports.push_back(verify_chow_mansour(n, r, M));
  return out;
}

SuiteOutcome suite_refined_carlitz(const SuiteOptions& o) {
  SuiteOutcome out{"refined-carlitz", {}, false};
  const int M = o.M.value_or(6);
  for (int n = o.n.value_or(1); n <= o.n.value_or(o.nmax.value_or(3)); ++n)
    for (int r = o.r.value_or(1); r <= o.r.value_or(o.rmax.value_or(3)); ++r)
      for (int ell = o.ell.value_or(1); ell <= o.ell.value_or(n); ++ell)
        for (int c = o.color.value_or(0); c <= o.color.value_or(r - 1); ++c)
          out.reports.push_back(verify_refined_carlitz(n, r, ell, c, M));
  return out;
}

SuiteOutcome suite_lc_key(const SuiteOptions& o) {
  SuiteOutcome out{"lc-key", {}, false};
  const int M = o.M.value_or(6);
  for (int n = o.n.value_or(1); n <= o.n.value_or(o.nmax.value_or(3)); ++n)
    for (int r = o.r.value_or(1); r <= o.r.value_or(o.rmax.value_or(3)); ++r)
      for (int ell = o.ell.value_or(1); ell <= o.ell.value_or(n); ++ell)
        for (int c = o.color.value_or(0); c <= o.color.value_or(r - 1); ++c)
          out.reports.push_back(verify_lc_key(n, r, ell, c, M));
  return out;
}

// ---- soundness probes ------------------------------------------------------

Polynomial mutate_poly(Rng& rng, const Polynomial& p) {
  const int idx = p.is_zero() ? 0 : rand_int(rng, 0, *p.degree());
  return p + Polynomial::monomial(idx);
}

QPolynomial mutate_qpoly(Rng& rng, const QPolynomial& p) {
  if (p.is_zero()) {
    QPolynomial out = p;
    out.add_term(0, 0, Rational(1));
    return out;
  }
  const int pick = rand_int(rng, 0, static_cast<int>(p.terms().size()) - 1);
  auto it = p.terms().begin();
  std::advance(it, pick);
  QPolynomial out = p;
  out.add_term(it->first.first, it->first.second, Rational(1));
  return out;
}

SuiteOutcome suite_soundness(const SuiteOptions& o) {
  SuiteOutcome out{"soundness", {}, false};
  Rng rng(o.seed);
  auto push = [&](const char* base, VerificationReport rep) {
    rep.claim = std::string("probe:soundness/") + base;
    out.reports.push_back(std::move(rep));
  };

  for (int n = 2; n <= 4; ++n)
    push("eq:A", check_euler_with(mutate_poly(rng, eulerian_poly(n)), n, 10));
  for (int n = 1; n <= 3; ++n)
    push("eq:A-q", check_carlitz_with(mutate_qpoly(rng, eulerian_poly_q(n)), n, 6));
  for (int r = 2; r <= 3; ++r)
    push("eq:CM", check_chow_mansour_with(
                      mutate_qpoly(rng, colored_refined_q(2, r, std::nullopt, std::nullopt)), 2, r, 6));
  for (int ell = 1; ell <= 2; ++ell)
    for (int c = 0; c <= 1; ++c)
      push("eq:refCarlitz",
           check_refined_carlitz_with(mutate_qpoly(rng, colored_refined_q(2, 2, ell, c)), 2, 2, ell, c, 6));
  for (int ell = 1; ell <= 2; ++ell)
    for (int c = 0; c <= 1; ++c)
      push("eq:lc-key", check_lc_key_with(mutate_poly(rng, colored_refined(2, 2, ell, c)), 2, 2, ell, c, 6));
  for (int r = 2; r <= 3; ++r) {
    std::vector<Polynomial> gs;
    for (int c = 0; c < r; ++c) gs.push_back(colored_refined(2, r, std::nullopt, c));
    const size_t slot = static_cast<size_t>(rand_int(rng, 0, r - 1));
    gs[slot] = mutate_poly(rng, gs[slot]);
    push("thm:c/eq:c", check_thm_c_with(eulerian_poly(2), gs, 2, r));
  }
  for (int ell = 1; ell <= 2; ++ell) {
    std::vector<Polynomial> gs;
    for (int c = 0; c < 2; ++c) gs.push_back(colored_refined(2, 2, ell, c));
    push("thm:c/eq:lc", check_thm_lc_with(mutate_poly(rng, eulerian_refined(2, ell)), gs, 2, 2, ell));
  }
  for (int n = 2; n <= 3; ++n)
    push("eq:A/lhs", check_euler_with(eulerian_poly(n) + Polynomial::monomial(1), n, 10));
  return out;
}

// ---- realroot unit corpora -------------------------------------------------

SuiteOutcome suite_sturm(const SuiteOptions& o) {
  SuiteOutcome out{"sturm", {}, false};
  Rng rng(o.seed);
  const int count = o.count.value_or(100);
  for (int t = 0; t < count; ++t) {
    // distinct integer roots with multiplicities <= 3
    const int distinct = rand_int(rng, 1, 4);
    std::vector<int> pool{-5, -4, -3, -2, -1, 0, 1, 2, 3, 4, 5};
    std::vector<std::pair<int, int>> roots; // (root, multiplicity)
    for (int i = 0; i < distinct; ++i) {
      const int pick = rand_int(rng, 0, static_cast<int>(pool.size()) - 1);
      roots.emplace_back(pool[static_cast<size_t>(pick)], rand_int(rng, 1, 3));
      pool.erase(pool.begin() + pick);
    }
    Polynomial p(Rational(rand_int(rng, 1, 3)) * Rational(rand_int(rng, 0, 1) == 0 ? 1 : -1));
    for (const auto& [root, mult] : roots)
      p *= Polynomial::power(Polynomial(std::vector<Rational>{Rational(-root), Rational(1)}),
                             static_cast<unsigned long>(mult));

    bool pass = true;
    std::string detail;
    if (count_real_roots(p) != distinct) {
      pass = false;
      detail = "global distinct-root count mismatch";
    }
    for (int w = 0; w < 3 && pass; ++w) {
      const Rational lo = rand_rational(rng, -14, 12, 2);
      const Rational hi = lo + rand_rational(rng, 1, 12, 2);
      int expected = 0;
      for (const auto& [root, mult] : roots)
        if (Rational(root) > lo && Rational(root) <= hi) ++expected;
      if (count_real_roots(p, lo, hi) != expected) {
        pass = false;
        detail = "window count mismatch on (" + lo.to_string() + ", " + hi.to_string() + "]";
      }
    }
    if (pass) {
      RootIsolation iso = isolate_roots(p);
      if (static_cast<int>(iso.intervals.size()) != distinct) {
        pass = false;
        detail = "isolation found a wrong number of intervals";
      } else {
        std::sort(roots.begin(), roots.end());
        for (size_t i = 0; i < roots.size() && pass; ++i) {
          const Rational root(roots[i].first);
          const auto& iv = iso.intervals[i];
          if (!(iv.lo < root && root <= iv.hi) || iv.multiplicity != roots[i].second) {
            pass = false;
            detail = "interval " + std::to_string(i) + " does not certify root " + root.to_string();
          }
        }
      }
    }
    out.reports.push_back(simple_report("unit:sturm", {{"p", p.to_string()}}, pass, detail));
  }
  return out;
}

// Direct alternation check on the known constructed roots; shares no code
// with the Sturm-based decision path.
bool known_roots_interlace(std::vector<Rational> g_roots, std::vector<Rational> f_roots) {
  const size_t dg = g_roots.size();
  const size_t df = f_roots.size();
  if (df != dg && df != dg + 1) return false;
  std::sort(g_roots.rbegin(), g_roots.rend());
  std::sort(f_roots.rbegin(), f_roots.rend());
  for (size_t i = 0; i < dg; ++i)
    if (g_roots[i] > f_roots[i]) return false;
  for (size_t i = 0; i + 1 < df && i < dg; ++i)
    if (f_roots[i + 1] > g_roots[i]) return false;
  return true;
}

SuiteOutcome suite_interlace(const SuiteOptions& o) {
  SuiteOutcome out{"interlace", {}, false};
  Rng rng(o.seed);
  const int count = o.count.value_or(100);
  for (int t = 0; t < count; ++t) {
    const int df = rand_int(rng, 1, 5);
    std::vector<Rational> f_roots;
    Rational a = rand_rational(rng, -4, 8, 3);
    for (int i = 0; i < df; ++i) {
      f_roots.push_back(a);
      a -= rand_rational(rng, 1, 5, 3);
    }
    const int dg = std::max(1, df - rand_int(rng, 0, 1));
    std::vector<Rational> g_roots;
    if (rand_int(rng, 0, 1) == 0) {
      // sandwich every g-root between consecutive f-roots (ties allowed)
      for (int i = 0; i < dg; ++i) {
        const Rational top = f_roots[static_cast<size_t>(i)];
        const Rational bottom = (i + 1 < df) ? f_roots[static_cast<size_t>(i) + 1] : top - Rational(1);
        switch (rand_int(rng, 0, 2)) {
          case 0: g_roots.push_back(top); break;
          case 1: g_roots.push_back(bottom); break;
          default: g_roots.push_back((top + bottom) / Rational(2)); break;
        }
      }
    } else {
      for (int i = 0; i < dg; ++i) g_roots.push_back(rand_rational(rng, -20, 16, 3));
    }
    const Polynomial f = poly_from_roots(f_roots, Rational(rand_int(rng, 1, 3)));
    const Polynomial g = poly_from_roots(g_roots, Rational(rand_int(rng, 1, 5), rand_int(rng, 1, 2)));

    const bool expected = known_roots_interlace(g_roots, f_roots);
    const InterlacingVerdict got = interlaces(g, f);
    const bool pass = got.holds == expected;
    out.reports.push_back(simple_report(
        "unit:interlace", {{"g", g.to_string()}, {"f", f.to_string()}}, pass,
        pass ? "" : "decision " + std::string(got.holds ? "holds" : "fails") + " but the known roots say otherwise"));
  }
  return out;
}

// ---- external real-rootedness theorem, instance-checked --------------------

SuiteOutcome suite_jochemko(const SuiteOptions& o) {
  SuiteOutcome out{"jochemko", {}, false};
  Rng rng(o.seed);
  for (int n = 1; n <= o.nmax.value_or(3); ++n)
    for (int r = 1; r <= o.rmax.value_or(3); ++r)
      for (int k = 0; k < r; ++k)
        for (int t = 0; t < 3; ++t)
          out.reports.push_back(verify_jochemko_instance(random_poly(rng, r + k, o.coeffmax), n, r, k));
  return out;
}

using SuiteFn = SuiteOutcome (*)(const SuiteOptions&);

struct SuiteEntry {
  const char* name;
  SuiteFn fn;
};

constexpr SuiteEntry kSuites[] = {
    {"oracle", suite_oracle},
    {"lemma-a", suite_lemma_a},
    {"main-theorem", suite_main_theorem},
    {"cor-deg", suite_cor_deg},
    {"cor-ineq", suite_cor_ineq},
    {"cor-log-concave", suite_cor_log_concave},
    {"cor-real-rooted", suite_cor_real_rooted},
    {"refined-color", suite_refined_color},
    {"thm-c", suite_thm_c},
    {"thm-lc", suite_thm_lc},
    {"euler", suite_euler},
    {"carlitz", suite_carlitz},
    {"chow-mansour", suite_chow_mansour},
    {"refined-carlitz", suite_refined_carlitz},
    {"lc-key", suite_lc_key},
    {"soundness", suite_soundness},
    {"sturm", suite_sturm},
    {"interlace", suite_interlace},
    {"jochemko", suite_jochemko},
};

} // namespace

Verdict expected_verdict(const std::string& claim) {
  if (claim.rfind("probe:soundness", 0) == 0) return Verdict::Fail;
  if (claim.find("/probe") != std::string::npos) return Verdict::HypothesisNotMet;
  return Verdict::Pass;
}

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& entry : kSuites) names.emplace_back(entry.name);
  return names;
}

bool is_suite_name(const std::string& name) {
  for (const auto& entry : kSuites)
    if (name == entry.name) return true;
  return false;
}

SuiteOutcome run_suite(const std::string& name, const SuiteOptions& options) {
  for (const auto& entry : kSuites) {
    if (name != entry.name) continue;
    SuiteOutcome out = entry.fn(options);
    out.ok = !out.reports.empty();
    for (const auto& rep : out.reports)
      if (rep.verdict != expected_verdict(rep.claim)) out.ok = false;
    return out;
  }
  throw std::invalid_argument("unknown suite '" + name + "'");
}

std::vector<SuiteOutcome> run_all_suites(const SuiteOptions& options) {
  std::vector<SuiteOutcome> out;
  for (const auto& entry : kSuites) out.push_back(run_suite(entry.name, options));
  return out;
}

} // namespace vlab
