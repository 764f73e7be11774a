#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "vlab/errors.hpp"
#include "vlab/identities.hpp"
#include "vlab/permstat.hpp"
#include "vlab/polyspec.hpp"
#include "vlab/realroot.hpp"
#include "vlab/suites.hpp"
#include "vlab/veronese.hpp"

namespace py = pybind11;

namespace {

using Coeffs = std::vector<std::string>;

vlab::Polynomial poly_of(const Coeffs& coeffs) {
  std::vector<vlab::Rational> cs;
  cs.reserve(coeffs.size());
  for (const auto& c : coeffs) cs.push_back(vlab::Rational::from_string(c));
  return vlab::Polynomial(std::move(cs));
}

std::vector<vlab::Polynomial> polys_of(const std::vector<Coeffs>& list) {
  std::vector<vlab::Polynomial> out;
  out.reserve(list.size());
  for (const auto& coeffs : list) out.push_back(poly_of(coeffs));
  return out;
}

py::dict report_dict(const vlab::VerificationReport& rep) {
  py::dict params;
  for (const auto& [key, value] : rep.params) params[py::str(key)] = value;
  py::dict out;
  out["claim"] = rep.claim;
  out["params"] = params;
  out["verdict"] = to_string(rep.verdict);
  out["detail"] = rep.detail;
  return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact section-operator computations, real-rootedness and interlacing certificates, "
            "and colored descent statistics. Coefficients travel as exact rational strings, "
            "constant term first.";

  py::register_exception<vlab::ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<vlab::ResourceLimitError>(m, "ResourceLimitError", PyExc_RuntimeError);
  py::register_exception<vlab::InternalInconsistencyError>(m, "InternalInconsistencyError", PyExc_RuntimeError);

  m.attr("__version__") = "0.1.0";

  m.def("parse_polynomial",
        [](const std::string& text) { return vlab::coeff_strings(vlab::parse_polynomial(text)); },
        py::arg("text"), "Parse '1,2,3/4' or '1 + 2*x + 3/4*x^2' into a coefficient list.");

  m.def("sections",
        [](const Coeffs& h, int r) {
          std::vector<Coeffs> parts;
          for (const auto& p : vlab::sections(poly_of(h), r).parts) parts.push_back(vlab::coeff_strings(p));
          return parts;
        },
        py::arg("coeffs"), py::arg("r"));

  m.def("recompose",
        [](const std::vector<Coeffs>& parts, int r) {
          vlab::SectionDecomposition d{r, polys_of(parts)};
          return vlab::coeff_strings(vlab::recompose(d));
        },
        py::arg("parts"), py::arg("r"));

  m.def("veronese",
        [](const Coeffs& h, int n, int r, int k, bool check_oracle) {
          const vlab::Polynomial hp = poly_of(h);
          const vlab::VeroneseResult result = vlab::veronese(hp, n, r, k);
          if (check_oracle) {
            const int M = vlab::veronese_oracle_min_order(hp, n, r, k) + 2;
            if (!(vlab::veronese_oracle(hp, n, r, k, M) == result.numerator))
              throw vlab::InternalInconsistencyError("direct computation and series oracle disagree");
          }
          return vlab::coeff_strings(result.numerator);
        },
        py::arg("coeffs"), py::arg("n"), py::arg("r"), py::arg("k"), py::arg("check_oracle") = false);

  m.def("is_real_rooted", [](const Coeffs& p) { return vlab::is_real_rooted(poly_of(p)); }, py::arg("coeffs"));
  m.def("has_only_nonpositive_roots",
        [](const Coeffs& p) { return vlab::has_only_nonpositive_roots(poly_of(p)); }, py::arg("coeffs"));

  m.def("isolate_roots",
        [](const Coeffs& p) {
          std::vector<std::tuple<std::string, std::string, int>> out;
          for (const auto& iv : vlab::isolate_roots(poly_of(p)).intervals)
            out.emplace_back(iv.lo.to_string(), iv.hi.to_string(), iv.multiplicity);
          return out;
        },
        py::arg("coeffs"), "Disjoint rational intervals (lo, hi] with multiplicities.");

  m.def("interlaces",
        [](const Coeffs& g, const Coeffs& f) {
          const vlab::InterlacingVerdict v = vlab::interlaces(poly_of(g), poly_of(f));
          return std::make_pair(v.holds, v.witness);
        },
        py::arg("g"), py::arg("f"));

  m.def("is_interlacing_sequence",
        [](const std::vector<Coeffs>& seq) {
          const std::vector<vlab::Polynomial> polys = polys_of(seq);
          const vlab::InterlacingVerdict v = vlab::is_interlacing_sequence(polys);
          return std::make_pair(v.holds, v.witness);
        },
        py::arg("seq"));

  m.def("descent_stats",
        [](const std::vector<int>& values, std::optional<std::vector<int>> colors, int r) {
          py::dict out;
          if (colors) {
            const vlab::StatRecord rec = vlab::descent_stats_colored({values, *colors, r});
            out["des"] = rec.des;
            out["maj"] = rec.maj;
            out["fmaj"] = *rec.fmaj;
          } else {
            const vlab::StatRecord rec = vlab::descent_stats_plain(values);
            out["des"] = rec.des;
            out["maj"] = rec.maj;
          }
          return out;
        },
        py::arg("values"), py::arg("colors") = std::nullopt, py::arg("r") = 1);

  m.def("eulerian", [](int n) { return vlab::coeff_strings(vlab::eulerian_poly(n)); }, py::arg("n"));
  m.def("eulerian_refined",
        [](int n, int ell) { return vlab::coeff_strings(vlab::eulerian_refined(n, ell)); }, py::arg("n"),
        py::arg("ell"));

  m.def("colored_eulerian",
        [](int n, int r, std::optional<int> ell, std::optional<int> color) {
          return vlab::coeff_strings(vlab::colored_refined(n, r, ell, color));
        },
        py::arg("n"), py::arg("r"), py::arg("ell") = std::nullopt, py::arg("color") = std::nullopt);

  m.def("colored_eulerian_q",
        [](int n, int r, std::optional<int> ell, std::optional<int> color) {
          const vlab::QPolynomial g = vlab::colored_refined_q(n, r, ell, color);
          py::dict out;
          for (const auto& [key, c] : g.terms()) out[py::make_tuple(key.first, key.second)] = c.to_string();
          return out;
        },
        py::arg("n"), py::arg("r"), py::arg("ell") = std::nullopt, py::arg("color") = std::nullopt,
        "Mapping (x_degree, q_degree) -> coefficient string.");

  m.def("geometric_kernel",
        [](int r, int n) { return vlab::coeff_strings(vlab::geometric_kernel(r, n)); }, py::arg("r"),
        py::arg("n"));

  m.def("suite_names", [] {
    std::vector<std::string> names = vlab::suite_names();
    names.emplace_back("all");
    return names;
  });

  m.def("verify",
        [](const std::string& suite, std::optional<int> n, std::optional<int> r, std::optional<int> ell,
           std::optional<int> color, std::optional<int> M, std::optional<int> nmax, std::optional<int> rmax,
           std::optional<int> count, std::uint64_t seed) {
          vlab::SuiteOptions options;
          options.n = n;
          options.r = r;
          options.ell = ell;
          options.color = color;
          options.M = M;
          options.nmax = nmax;
          options.rmax = rmax;
          options.count = count;
          options.seed = seed;
          std::vector<vlab::SuiteOutcome> outcomes;
          if (suite == "all")
            outcomes = vlab::run_all_suites(options);
          else
            outcomes.push_back(vlab::run_suite(suite, options));
          bool ok = true;
          py::list reports;
          for (const auto& outcome : outcomes) {
            ok = ok && outcome.ok;
            for (const auto& rep : outcome.reports) reports.append(report_dict(rep));
          }
          return std::make_pair(ok, reports);
        },
        py::arg("suite"), py::arg("n") = std::nullopt, py::arg("r") = std::nullopt,
        py::arg("ell") = std::nullopt, py::arg("color") = std::nullopt, py::arg("M") = std::nullopt,
        py::arg("nmax") = std::nullopt, py::arg("rmax") = std::nullopt, py::arg("count") = std::nullopt,
        py::arg("seed") = 987654321ULL,
        "Run a verification suite; returns (ok, reports).");
}
