#pragma once

#include <json.hpp>

#include "vlab/identities.hpp"
#include "vlab/qpolynomial.hpp"
#include "vlab/realroot.hpp"
#include "vlab/veronese.hpp"

namespace vlab {

// All numeric payloads are strings of exact rationals in lowest terms; key
// order is fixed so identical invocations serialize byte-identically.
nlohmann::ordered_json json_of(const Polynomial& p);
nlohmann::ordered_json json_of(const QPolynomial& p);
nlohmann::ordered_json json_of(const SectionDecomposition& d);
nlohmann::ordered_json json_of(const VeroneseResult& v);
nlohmann::ordered_json json_of(const RootIsolation& iso);
nlohmann::ordered_json json_of(const InterlacingVerdict& v);
nlohmann::ordered_json json_of(const VerificationReport& r);

} // namespace vlab
