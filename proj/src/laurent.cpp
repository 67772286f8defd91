#include "gem/laurent.hpp"

#include <limits>

namespace gem {

LaurentPolynomial LaurentPolynomial::monomial(int exponent, BigInt coefficient) {
  LaurentPolynomial p;
  p.add_term(exponent, coefficient);
  return p;
}

void LaurentPolynomial::add_term(int exponent, const BigInt& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.emplace(exponent, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

BigInt LaurentPolynomial::coefficient(int exponent) const {
  const auto it = terms_.find(exponent);
  return it == terms_.end() ? BigInt(0) : it->second;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& o) const {
  LaurentPolynomial r = *this;
  r += o;
  return r;
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& o) const {
  LaurentPolynomial r;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
  return r;
}

Rational LaurentPolynomial::evaluate(const Rational& n) const {
  if (n == 0 && !terms_.empty() && terms_.begin()->first < 0) throw std::domain_error("evaluate: N = 0 with negative powers");
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational power = 1;
    const Rational base = e >= 0 ? n : Rational(1) / n;
    for (int k = 0; k < (e >= 0 ? e : -e); ++k) power *= base;
    total += Rational(c) * power;
  }
  return total;
}

std::string LaurentPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    BigInt c = it->second;
    if (first) {
      if (c < 0) {
        out += "-";
        c = -c;
      }
    } else {
      out += c < 0 ? " - " : " + ";
      if (c < 0) c = -c;
    }
    if (c != 1) out += c.str() + "*";
    out += "N^" + std::to_string(it->first);
    first = false;
  }
  return out;
}

nlohmann::ordered_json LaurentPolynomial::to_json() const {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [e, c] : terms_) j[std::to_string(e)] = bigint_json(c);
  return j;
}

nlohmann::ordered_json bigint_json(const BigInt& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return v.convert_to<long long>();
  return v.str();
}

std::string rational_str(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace gem
