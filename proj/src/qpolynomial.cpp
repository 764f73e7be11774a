#include "vlab/qpolynomial.hpp"

#include <stdexcept>

namespace vlab {

QPolynomial QPolynomial::monomial(int x_deg, int q_deg, Rational coeff) {
  if (x_deg < 0 || q_deg < 0) throw std::invalid_argument("QPolynomial::monomial: negative degree");
  QPolynomial out;
  out.add_term(x_deg, q_deg, coeff);
  return out;
}

QPolynomial QPolynomial::from_x_polynomial(const Polynomial& p) {
  QPolynomial out;
  for (size_t i = 0; i < p.coeffs().size(); ++i) out.add_term(static_cast<int>(i), 0, p.coeffs()[i]);
  return out;
}

QPolynomial QPolynomial::from_q_polynomial(const Polynomial& p) {
  QPolynomial out;
  for (size_t i = 0; i < p.coeffs().size(); ++i) out.add_term(0, static_cast<int>(i), p.coeffs()[i]);
  return out;
}

Rational QPolynomial::coeff(int x_deg, int q_deg) const {
  const auto it = terms_.find({x_deg, q_deg});
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<int> QPolynomial::x_degree() const {
  if (terms_.empty()) return std::nullopt;
  int deg = 0;
  for (const auto& [key, c] : terms_) deg = std::max(deg, key.first);
  return deg;
}

Polynomial QPolynomial::coefficient_of_x(int i) const {
  std::vector<Rational> cs;
  for (const auto& [key, c] : terms_) {
    if (key.first != i) continue;
    if (cs.size() <= static_cast<size_t>(key.second)) cs.resize(static_cast<size_t>(key.second) + 1);
    cs[static_cast<size_t>(key.second)] = c;
  }
  return Polynomial(std::move(cs));
}

Polynomial QPolynomial::at_q_one() const {
  std::vector<Rational> cs;
  for (const auto& [key, c] : terms_) {
    if (cs.size() <= static_cast<size_t>(key.first)) cs.resize(static_cast<size_t>(key.first) + 1);
    cs[static_cast<size_t>(key.first)] += c;
  }
  return Polynomial(std::move(cs));
}

void QPolynomial::add_term(int x_deg, int q_deg, const Rational& c) {
  if (c.is_zero()) return;
  const Key key{x_deg, q_deg};
  const auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

QPolynomial operator+(const QPolynomial& a, const QPolynomial& b) {
  QPolynomial out = a;
  for (const auto& [key, c] : b.terms_) out.add_term(key.first, key.second, c);
  return out;
}

QPolynomial operator-(const QPolynomial& a, const QPolynomial& b) {
  QPolynomial out = a;
  for (const auto& [key, c] : b.terms_) out.add_term(key.first, key.second, -c);
  return out;
}

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
  QPolynomial out;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_)
      out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
  return out;
}

std::string QPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [key, c] : terms_) {
    const bool first = out.empty();
    const Rational a = c.abs();
    if (!first) out += (c.sign() < 0) ? " - " : " + ";
    else if (c.sign() < 0) out += "-";
    std::string mono;
    if (key.first > 0) {
      mono += "x";
      if (key.first > 1) mono += "^" + std::to_string(key.first);
    }
    if (key.second > 0) {
      if (!mono.empty()) mono += "*";
      mono += "q";
      if (key.second > 1) mono += "^" + std::to_string(key.second);
    }
    if (mono.empty()) {
      out += a.to_string();
    } else if (a == Rational(1)) {
      out += mono;
    } else {
      out += a.to_string() + "*" + mono;
    }
  }
  return out;
}

} // namespace vlab
