#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace orikami {

/// Single-variable Laurent polynomial with integer coefficients, kept in
/// canonical form (no zero leading or trailing coefficients; zero polynomial
/// has no terms).
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  /// Constant polynomial.
  LaurentPolynomial(std::int64_t constant);  // NOLINT(google-explicit-constructor)
  /// Coefficients for exponents low, low+1, ...
  LaurentPolynomial(int low_exponent, std::vector<std::int64_t> coefficients);

  static LaurentPolynomial monomial(std::int64_t coefficient, int exponent);
  static LaurentPolynomial from_terms(const std::map<int, std::int64_t>& terms);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  int low_exponent() const noexcept { return low_; }
  int high_exponent() const noexcept { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  std::int64_t coefficient(int exponent) const noexcept;
  std::int64_t leading_coefficient() const noexcept;
  const std::vector<std::int64_t>& coefficients() const noexcept { return coeffs_; }
  std::map<int, std::int64_t> terms() const;

  LaurentPolynomial operator+(const LaurentPolynomial& o) const;
  LaurentPolynomial operator-(const LaurentPolynomial& o) const;
  LaurentPolynomial operator*(const LaurentPolynomial& o) const;
  LaurentPolynomial operator-() const;
  LaurentPolynomial& operator+=(const LaurentPolynomial& o) { return *this = *this + o; }
  LaurentPolynomial& operator*=(const LaurentPolynomial& o) { return *this = *this * o; }
  bool operator==(const LaurentPolynomial& o) const = default;

  /// Multiply by x^k.
  LaurentPolynomial shifted(int k) const;
  /// x -> x^-1.
  LaurentPolynomial mirrored() const;
  /// x^k -> x^(k/d); every exponent must be divisible by d (d may be negative).
  LaurentPolynomial exponents_divided(int d) const;
  /// Exact division; throws NumericError when the divisor does not divide.
  LaurentPolynomial exact_divide(const LaurentPolynomial& divisor) const;

  std::int64_t evaluate(std::int64_t x) const;  // x must be +-1 for negative exponents
  LaurentPolynomial pow(unsigned k) const;

  /// Human-readable form in the given variable, e.g. "t^2 - t + 1".
  std::string to_string(const std::string& var = "t") const;

 private:
  void canonicalize();

  int low_ = 0;
  std::vector<std::int64_t> coeffs_;
};

}  // namespace orikami
