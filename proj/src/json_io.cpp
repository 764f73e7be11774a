#include "vlab/json_io.hpp"

#include "vlab/polyspec.hpp"

namespace vlab {

using nlohmann::ordered_json;

ordered_json json_of(const Polynomial& p) {
  return ordered_json(coeff_strings(p));
}

ordered_json json_of(const QPolynomial& p) {
  ordered_json terms = ordered_json::array();
  for (const auto& [key, c] : p.terms()) {
    ordered_json t;
    t["x"] = key.first;
    t["q"] = key.second;
    t["coeff"] = c.to_string();
    terms.push_back(std::move(t));
  }
  return terms;
}

ordered_json json_of(const SectionDecomposition& d) {
  ordered_json out;
  out["r"] = d.r;
  ordered_json parts = ordered_json::array();
  for (const auto& p : d.parts) parts.push_back(json_of(p));
  out["parts"] = std::move(parts);
  return out;
}

ordered_json json_of(const VeroneseResult& v) {
  ordered_json out;
  out["r"] = v.r;
  out["n"] = v.n;
  out["k"] = v.k;
  out["numerator"] = json_of(v.numerator);
  return out;
}

ordered_json json_of(const RootIsolation& iso) {
  ordered_json intervals = ordered_json::array();
  for (const auto& iv : iso.intervals) {
    ordered_json one;
    one["lo"] = iv.lo.to_string();
    one["hi"] = iv.hi.to_string();
    one["multiplicity"] = iv.multiplicity;
    intervals.push_back(std::move(one));
  }
  ordered_json out;
  out["intervals"] = std::move(intervals);
  return out;
}

ordered_json json_of(const InterlacingVerdict& v) {
  ordered_json out;
  out["holds"] = v.holds;
  out["witness"] = v.witness;
  return out;
}

ordered_json json_of(const VerificationReport& r) {
  ordered_json params;
  for (const auto& [key, value] : r.params) params[key] = value;
  ordered_json out;
  out["claim"] = r.claim;
  out["params"] = std::move(params);
  out["verdict"] = to_string(r.verdict);
  out["detail"] = r.detail;
  return out;
}

} // namespace vlab
