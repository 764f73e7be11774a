#include "vlab/polynomial.hpp"

#include <stdexcept>

namespace vlab {

namespace {
const Rational kZero{};
} // namespace

Polynomial::Polynomial(Rational constant) {
  if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

Polynomial Polynomial::monomial(int degree, Rational coeff) {
  if (degree < 0) throw std::invalid_argument("monomial: negative degree");
  if (coeff.is_zero()) return Polynomial();
  std::vector<Rational> cs(static_cast<size_t>(degree) + 1);
  cs.back() = std::move(coeff);
  return Polynomial(std::move(cs));
}

void Polynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::optional<int> Polynomial::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return static_cast<int>(coeffs_.size()) - 1;
}

const Rational& Polynomial::coeff(int i) const {
  if (i < 0 || static_cast<size_t>(i) >= coeffs_.size()) return kZero;
  return coeffs_[static_cast<size_t>(i)];
}

Rational Polynomial::leading_coeff() const {
  return coeffs_.empty() ? Rational(0) : coeffs_.back();
}

bool Polynomial::has_nonnegative_coeffs() const {
  for (const auto& c : coeffs_)
    if (c.sign() < 0) return false;
  return true;
}

Rational Polynomial::evaluate(const Rational& t) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return Polynomial();
  std::vector<Rational> out(coeffs_.size() - 1);
  for (size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = Rational(static_cast<long>(i)) * coeffs_[i];
  return Polynomial(std::move(out));
}

Polynomial Polynomial::times_x_power(int k) const {
  if (k < 0) throw std::invalid_argument("times_x_power: negative power");
  if (is_zero() || k == 0) return k == 0 ? *this : Polynomial();
  std::vector<Rational> out(coeffs_.size() + static_cast<size_t>(k));
  for (size_t i = 0; i < coeffs_.size(); ++i) out[i + static_cast<size_t>(k)] = coeffs_[i];
  return Polynomial(std::move(out));
}

Polynomial Polynomial::div_x_power(int k) const {
  if (k < 0) throw std::invalid_argument("div_x_power: negative power");
  if (k == 0 || is_zero()) return *this;
  if (coeffs_.size() < static_cast<size_t>(k))
    throw std::domain_error("div_x_power: not divisible by x^" + std::to_string(k));
  for (int i = 0; i < k; ++i)
    if (!coeffs_[static_cast<size_t>(i)].is_zero())
      throw std::domain_error("div_x_power: not divisible by x^" + std::to_string(k));
  return Polynomial(std::vector<Rational>(coeffs_.begin() + k, coeffs_.end()));
}

Polynomial Polynomial::substitute_x_power(int r) const {
  if (r < 1) throw std::invalid_argument("substitute_x_power: r must be >= 1");
  if (is_zero() || r == 1) return *this;
  std::vector<Rational> out((coeffs_.size() - 1) * static_cast<size_t>(r) + 1);
  for (size_t i = 0; i < coeffs_.size(); ++i) out[i * static_cast<size_t>(r)] = coeffs_[i];
  return Polynomial(std::move(out));
}

Polynomial Polynomial::power(const Polynomial& base, unsigned long e) {
  Polynomial acc = Polynomial::one();
  Polynomial sq = base;
  while (e > 0) {
    if (e & 1UL) acc = acc * sq;
    e >>= 1UL;
    if (e > 0) sq = sq * sq;
  }
  return acc;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
  return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
  return Polynomial(std::move(out));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
  if (c.is_zero()) return Polynomial();
  std::vector<Rational> out(p.coeffs_.size());
  for (size_t i = 0; i < out.size(); ++i) out[i] = c * p.coeffs_[i];
  return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& p) {
  return Rational(-1) * p;
}

std::string Polynomial::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::string out;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c.is_zero()) continue;
    const bool first = out.empty();
    const Rational a = c.abs();
    if (!first) out += (c.sign() < 0) ? " - " : " + ";
    else if (c.sign() < 0) out += "-";
    if (i == 0) {
      out += a.to_string();
    } else {
      if (a == Rational(1)) {
        out += var;
      } else {
        out += a.to_string();
        out += "*";
        out += var;
      }
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

Polynomial geometric_kernel(int r, int n) {
  if (r < 1) throw std::invalid_argument("geometric_kernel: r must be >= 1");
  if (n < 0) throw std::invalid_argument("geometric_kernel: n must be >= 0");
  std::vector<Rational> ones(static_cast<size_t>(r), Rational(1));
  return Polynomial::power(Polynomial(std::move(ones)), static_cast<unsigned long>(n));
}

} // namespace vlab
