#include "vlab/polyspec.hpp"

#include <cctype>
#include <map>

#include "vlab/errors.hpp"

namespace vlab {

namespace {

Polynomial parse_coeff_list(std::string_view text) {
  std::vector<Rational> coeffs;
  size_t start = 0;
  while (true) {
    const size_t comma = text.find(',', start);
    const std::string_view item =
        comma == std::string_view::npos ? text.substr(start) : text.substr(start, comma - start);
    coeffs.push_back(Rational::from_string(item));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Polynomial(std::move(coeffs));
}

struct Scanner {
  std::string s;
  size_t i = 0;

  explicit Scanner(std::string_view text) {
    for (const char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  bool done() const { return i >= s.size(); }
  char peek() const { return done() ? '\0' : s[i]; }
  bool consume(char c) {
    if (peek() != c) return false;
    ++i;
    return true;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(i) + " in '" + s + "'");
  }

  std::string digits() {
    std::string out;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) out.push_back(s[i++]);
    if (out.empty()) fail("expected digits");
    return out;
  }

  Rational rational() {
    const std::string num = digits();
    if (consume('/')) {
      const std::string den = digits();
      if (Integer(den) == 0) fail("zero denominator");
      return Rational(Integer(num), Integer(den));
    }
    return Rational(Integer(num));
  }

  int exponent() {
    const std::string d = digits();
    if (d.size() > 4) fail("exponent too large");
    return std::stoi(d);
  }
};

Polynomial parse_expression(std::string_view text) {
  Scanner sc(text);
  if (sc.done()) throw ParseError("empty polynomial expression");
  std::map<int, Rational> terms;
  bool first = true;
  while (!sc.done()) {
    int sign = 1;
    if (sc.consume('+')) {
      sign = 1;
    } else if (sc.consume('-')) {
      sign = -1;
    } else if (!first) {
      sc.fail("expected '+' or '-'");
    }
    first = false;

    Rational coeff(1);
    bool saw_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(sc.peek()))) {
      coeff = sc.rational();
      saw_coeff = true;
    }
    int exp = 0;
    if (saw_coeff && sc.consume('*')) {
      if (sc.peek() != 'x') sc.fail("expected 'x' after '*'");
    }
    if (sc.consume('x')) {
      exp = 1;
      if (sc.consume('^')) exp = sc.exponent();
    } else if (!saw_coeff) {
      sc.fail("expected a coefficient or 'x'");
    }
    terms[exp] += Rational(sign) * coeff;
  }
  std::vector<Rational> coeffs;
  for (const auto& [exp, c] : terms) {
    if (coeffs.size() <= static_cast<size_t>(exp)) coeffs.resize(static_cast<size_t>(exp) + 1);
    coeffs[static_cast<size_t>(exp)] += c;
  }
  return Polynomial(std::move(coeffs));
}

} // namespace

Polynomial parse_polynomial(std::string_view text) {
  if (text.find('x') != std::string_view::npos) return parse_expression(text);
  return parse_coeff_list(text);
}

std::vector<std::string> coeff_strings(const Polynomial& p) {
  std::vector<std::string> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(c.to_string());
  return out;
}

} // namespace vlab
