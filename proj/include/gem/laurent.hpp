#pragma once

#include <map>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "json.hpp"

namespace gem {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Sparse polynomial in N and 1/N with integer coefficients.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  static LaurentPolynomial monomial(int exponent, BigInt coefficient = 1);

  const std::map<int, BigInt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BigInt coefficient(int exponent) const;

  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial operator+(const LaurentPolynomial& o) const;
  LaurentPolynomial operator*(const LaurentPolynomial& o) const;
  bool operator==(const LaurentPolynomial&) const = default;

  Rational evaluate(const Rational& n) const;

  /// Descending exponents, e.g. "N^1 + N^-1" or "2*N^3 - N^0"; "0" when empty.
  std::string str() const;
  /// {"exponent": coefficient} with exponents in ascending numeric order.
  nlohmann::ordered_json to_json() const;

 private:
  void add_term(int exponent, const BigInt& coefficient);
  std::map<int, BigInt> terms_;
};

/// JSON number when the value fits in 64 bits, decimal string otherwise.
nlohmann::ordered_json bigint_json(const BigInt& v);
std::string rational_str(const Rational& r);

}  // namespace gem
