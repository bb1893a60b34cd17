#pragma once

// Exact integer polynomials in one variable (UniPoly) and in q, t (BiPoly).
// All coefficient arithmetic is checked; overflow throws std::overflow_error.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace flagweak {

namespace checked {
std::int64_t add(std::int64_t a, std::int64_t b);
std::int64_t mul(std::int64_t a, std::int64_t b);
}  // namespace checked

class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<std::int64_t> coefficients, char variable = 'q');

  static UniPoly constant(std::int64_t c, char variable = 'q');
  /// c * x^k
  static UniPoly monomial(std::int64_t c, int degree, char variable = 'q');

  char variable() const noexcept { return variable_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  std::int64_t operator[](int k) const noexcept;
  const std::vector<std::int64_t>& coefficients() const noexcept { return coeffs_; }

  std::int64_t evaluate(std::int64_t x) const;

  UniPoly& operator+=(const UniPoly& other);
  UniPoly& operator*=(const UniPoly& other);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
  UniPoly pow(int e) const;

  /// Add c * x^k in place.
  void add_term(int k, std::int64_t c);

  /// Equality ignores the variable tag.
  friend bool operator==(const UniPoly& a, const UniPoly& b) noexcept { return a.coeffs_ == b.coeffs_; }

  /// Ascending degree: "1 + 4*t + 3*t^2".
  std::string to_string() const;

 private:
  void normalize();

  std::vector<std::int64_t> coeffs_;
  char variable_ = 'q';
};

class BiPoly {
 public:
  using Exponents = std::pair<int, int>;  // (deg_q, deg_t)

  BiPoly() = default;

  static BiPoly constant(std::int64_t c);
  static BiPoly monomial(std::int64_t c, int deg_q, int deg_t);
  /// Lift a UniPoly in q (or in t) into two variables.
  static BiPoly from_q(const UniPoly& p);
  static BiPoly from_t(const UniPoly& p);

  const std::map<Exponents, std::int64_t>& terms() const noexcept { return terms_; }
  std::int64_t coefficient(int deg_q, int deg_t) const;
  bool is_zero() const noexcept { return terms_.empty(); }

  void add_term(int deg_q, int deg_t, std::int64_t c);

  BiPoly& operator+=(const BiPoly& other);
  BiPoly& operator*=(const BiPoly& other);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator*(BiPoly a, const BiPoly& b) { return a *= b; }
  BiPoly pow(int e) const;

  /// q := 1, leaving a polynomial in t.
  UniPoly at_q_equals_one() const;
  /// t := 1, leaving a polynomial in q.
  UniPoly at_t_equals_one() const;

  friend bool operator==(const BiPoly&, const BiPoly&) = default;

  /// Terms sorted by (deg_q, deg_t): "1 + q*t + 2*q^2*t".
  std::string to_string() const;

 private:
  std::map<Exponents, std::int64_t> terms_;
};

}  // namespace flagweak
