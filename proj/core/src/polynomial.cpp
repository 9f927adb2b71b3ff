#include "orikami/polynomial.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "orikami/error.hpp"

namespace orikami {

LaurentPolynomial::LaurentPolynomial(std::int64_t constant) {
  if (constant != 0) coeffs_ = {constant};
}

LaurentPolynomial::LaurentPolynomial(int low_exponent, std::vector<std::int64_t> coefficients)
    : low_(low_exponent), coeffs_(std::move(coefficients)) {
  canonicalize();
}

LaurentPolynomial LaurentPolynomial::monomial(std::int64_t coefficient, int exponent) {
  return LaurentPolynomial(exponent, {coefficient});
}

LaurentPolynomial LaurentPolynomial::from_terms(const std::map<int, std::int64_t>& terms) {
  if (terms.empty()) return {};
  const int lo = terms.begin()->first;
  const int hi = terms.rbegin()->first;
  std::vector<std::int64_t> c(static_cast<std::size_t>(hi - lo + 1), 0);
  for (const auto& [e, v] : terms) c[static_cast<std::size_t>(e - lo)] += v;
  return LaurentPolynomial(lo, std::move(c));
}

void LaurentPolynomial::canonicalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  const auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](auto c) { return c != 0; });
  low_ += static_cast<int>(first - coeffs_.begin());
  coeffs_.erase(coeffs_.begin(), first);
  if (coeffs_.empty()) low_ = 0;
}

std::int64_t LaurentPolynomial::coefficient(int e) const noexcept {
  if (coeffs_.empty() || e < low_ || e > high_exponent()) return 0;
  return coeffs_[static_cast<std::size_t>(e - low_)];
}

std::int64_t LaurentPolynomial::leading_coefficient() const noexcept {
  return coeffs_.empty() ? 0 : coeffs_.back();
}

std::map<int, std::int64_t> LaurentPolynomial::terms() const {
  std::map<int, std::int64_t> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) out[low_ + static_cast<int>(i)] = coeffs_[i];
  }
  return out;
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  const int lo = std::min(low_, o.low_);
  const int hi = std::max(high_exponent(), o.high_exponent());
  std::vector<std::int64_t> c(static_cast<std::size_t>(hi - lo + 1), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[low_ - lo + i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[o.low_ - lo + i] += o.coeffs_[i];
  return LaurentPolynomial(lo, std::move(c));
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

LaurentPolynomial LaurentPolynomial::operator-(const LaurentPolynomial& o) const {
  return *this + (-o);
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<std::int64_t> c(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return LaurentPolynomial(low_ + o.low_, std::move(c));
}

LaurentPolynomial LaurentPolynomial::shifted(int k) const {
  LaurentPolynomial r = *this;
  if (!r.is_zero()) r.low_ += k;
  return r;
}

LaurentPolynomial LaurentPolynomial::mirrored() const {
  if (is_zero()) return {};
  std::vector<std::int64_t> c(coeffs_.rbegin(), coeffs_.rend());
  return LaurentPolynomial(-high_exponent(), std::move(c));
}

LaurentPolynomial LaurentPolynomial::exponents_divided(int d) const {
  if (d == 0) throw NumericError("exponents_divided: zero divisor");
  std::map<int, std::int64_t> out;
  for (const auto& [e, v] : terms()) {
    if (e % d != 0) throw NumericError("exponents_divided: exponent not divisible");
    out[e / d] = v;
  }
  return from_terms(out);
}

LaurentPolynomial LaurentPolynomial::exact_divide(const LaurentPolynomial& divisor) const {
  if (divisor.is_zero()) throw NumericError("exact_divide: division by zero polynomial");
  if (is_zero()) return {};
  // Long division on the coefficient vectors, from the top.
  std::vector<std::int64_t> rem = coeffs_;
  const auto& d = divisor.coeffs_;
  if (rem.size() < d.size()) throw NumericError("exact_divide: divisor does not divide");
  std::vector<std::int64_t> q(rem.size() - d.size() + 1, 0);
  const std::int64_t lead = d.back();
  for (std::size_t k = q.size(); k-- > 0;) {
    const std::int64_t top = rem[k + d.size() - 1];
    if (top % lead != 0) throw NumericError("exact_divide: divisor does not divide");
    const std::int64_t f = top / lead;
    q[k] = f;
    if (f == 0) continue;
    for (std::size_t j = 0; j < d.size(); ++j) rem[k + j] -= f * d[j];
  }
  if (std::any_of(rem.begin(), rem.end(), [](auto c) { return c != 0; })) {
    throw NumericError("exact_divide: divisor does not divide");
  }
  return LaurentPolynomial(low_ - divisor.low_, std::move(q));
}

std::int64_t LaurentPolynomial::evaluate(std::int64_t x) const {
  if (is_zero()) return 0;
  if (low_ < 0 && x != 1 && x != -1) {
    throw NumericError("evaluate: negative exponents need x = +-1");
  }
  std::int64_t acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    acc = acc * x + coeffs_[i];
  }
  // acc is the value of x^-low * p(x); fix up the power of x.
  const int e = low_;
  if (e >= 0) {
    for (int i = 0; i < e; ++i) acc *= x;
  } else if ((-e) % 2 == 1 && x == -1) {
    acc = -acc;
  }
  return acc;
}

LaurentPolynomial LaurentPolynomial::pow(unsigned k) const {
  LaurentPolynomial r(1);
  for (unsigned i = 0; i < k; ++i) r *= *this;
  return r;
}

std::string LaurentPolynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const std::int64_t c = coeffs_[i];
    if (c == 0) continue;
    const int e = low_ + static_cast<int>(i);
    const std::int64_t mag = std::llabs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1 || e == 0) os << mag;
    if (e != 0) {
      os << var;
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

}  // namespace orikami
