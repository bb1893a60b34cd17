#include "flagweak/poly.hpp"

#include <stdexcept>

namespace flagweak {

namespace checked {

std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("polynomial coefficient overflow");
  return out;
}

std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("polynomial coefficient overflow");
  return out;
}

}  // namespace checked

namespace {

// "c", "x", "c*x", "x^k", "c*x^k" with the sign handled by the caller.
std::string term(std::int64_t magnitude, const std::string& monomial) {
  if (monomial.empty()) return std::to_string(magnitude);
  if (magnitude == 1) return monomial;
  return std::to_string(magnitude) + "*" + monomial;
}

std::string power(char var, int k) {
  if (k == 0) return {};
  if (k == 1) return std::string(1, var);
  return std::string(1, var) + "^" + std::to_string(k);
}

void append(std::string& out, std::int64_t c, const std::string& monomial) {
  const std::int64_t magnitude = c < 0 ? -c : c;
  if (out.empty()) {
    out = (c < 0 ? "-" : "") + term(magnitude, monomial);
  } else {
    out += (c < 0 ? " - " : " + ") + term(magnitude, monomial);
  }
}

}  // namespace

UniPoly::UniPoly(std::vector<std::int64_t> coefficients, char variable)
    : coeffs_(std::move(coefficients)), variable_(variable) {
  normalize();
}

UniPoly UniPoly::constant(std::int64_t c, char variable) { return UniPoly({c}, variable); }

UniPoly UniPoly::monomial(std::int64_t c, int degree, char variable) {
  if (degree < 0) throw std::invalid_argument("negative degree");
  std::vector<std::int64_t> v(static_cast<std::size_t>(degree) + 1, 0);
  v.back() = c;
  return UniPoly(std::move(v), variable);
}

std::int64_t UniPoly::operator[](int k) const noexcept {
  return k >= 0 && k < static_cast<int>(coeffs_.size()) ? coeffs_[k] : 0;
}

std::int64_t UniPoly::evaluate(std::int64_t x) const {
  std::int64_t acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = checked::add(checked::mul(acc, x), *it);
  return acc;
}

void UniPoly::add_term(int k, std::int64_t c) {
  if (k < 0) throw std::invalid_argument("negative degree");
  if (static_cast<int>(coeffs_.size()) <= k) coeffs_.resize(static_cast<std::size_t>(k) + 1, 0);
  coeffs_[k] = checked::add(coeffs_[k], c);
  normalize();
}

UniPoly& UniPoly::operator+=(const UniPoly& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] = checked::add(coeffs_[k], other.coeffs_[k]);
  normalize();
  return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& other) {
  if (is_zero() || other.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<std::int64_t> out(coeffs_.size() + other.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
      out[i + j] = checked::add(out[i + j], checked::mul(coeffs_[i], other.coeffs_[j]));
  }
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

UniPoly UniPoly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative exponent");
  UniPoly acc = constant(1, variable_);
  for (int i = 0; i < e; ++i) acc *= *this;
  return acc;
}

void UniPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::string UniPoly::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    if (coeffs_[k] != 0) append(out, coeffs_[k], power(variable_, static_cast<int>(k)));
  return out.empty() ? "0" : out;
}

BiPoly BiPoly::constant(std::int64_t c) { return monomial(c, 0, 0); }

BiPoly BiPoly::monomial(std::int64_t c, int deg_q, int deg_t) {
  BiPoly p;
  p.add_term(deg_q, deg_t, c);
  return p;
}

BiPoly BiPoly::from_q(const UniPoly& p) {
  BiPoly out;
  for (int k = 0; k <= p.degree(); ++k) out.add_term(k, 0, p[k]);
  return out;
}

BiPoly BiPoly::from_t(const UniPoly& p) {
  BiPoly out;
  for (int k = 0; k <= p.degree(); ++k) out.add_term(0, k, p[k]);
  return out;
}

std::int64_t BiPoly::coefficient(int deg_q, int deg_t) const {
  const auto it = terms_.find({deg_q, deg_t});
  return it == terms_.end() ? 0 : it->second;
}

void BiPoly::add_term(int deg_q, int deg_t, std::int64_t c) {
  if (deg_q < 0 || deg_t < 0) throw std::invalid_argument("negative degree");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace({deg_q, deg_t}, 0);
  it->second = checked::add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

BiPoly& BiPoly::operator+=(const BiPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e.first, e.second, c);
  return *this;
}

BiPoly& BiPoly::operator*=(const BiPoly& other) {
  BiPoly out;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : other.terms_)
      out.add_term(e1.first + e2.first, e1.second + e2.second, checked::mul(c1, c2));
  *this = std::move(out);
  return *this;
}

BiPoly BiPoly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative exponent");
  BiPoly acc = constant(1);
  for (int i = 0; i < e; ++i) acc *= *this;
  return acc;
}

UniPoly BiPoly::at_q_equals_one() const {
  UniPoly out({}, 't');
  for (const auto& [e, c] : terms_) out.add_term(e.second, c);
  return out;
}

UniPoly BiPoly::at_t_equals_one() const {
  UniPoly out({}, 'q');
  for (const auto& [e, c] : terms_) out.add_term(e.first, c);
  return out;
}

std::string BiPoly::to_string() const {
  std::string out;
  for (const auto& [e, c] : terms_) {
    std::string mono = power('q', e.first);
    const std::string tpart = power('t', e.second);
    if (!mono.empty() && !tpart.empty()) mono += "*";
    mono += tpart;
    append(out, c, mono);
  }
  return out.empty() ? "0" : out;
}

}  // namespace flagweak
