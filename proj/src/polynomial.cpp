#include "resdet/polynomial.hpp"

#include <algorithm>

#include "resdet/modular.hpp"

namespace resdet {

Polynomial::Polynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

Polynomial Polynomial::constant(const BigInt& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const BigInt& c, std::size_t degree) {
  std::vector<BigInt> v(degree + 1);
  v[degree] = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

BigInt Polynomial::eval(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::uint64_t Polynomial::eval_mod(std::uint64_t x, std::uint64_t m) const {
  std::uint64_t acc = 0;
  x %= m;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = mul_mod(acc, x, m) + mod_u64(*it, m);
    if (acc >= m) acc -= m;
  }
  return acc;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  std::vector<BigInt> v(std::max(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) + o.coeff(i);
  return Polynomial(std::move(v));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  std::vector<BigInt> v(std::max(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) - o.coeff(i);
  return Polynomial(std::move(v));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (coeffs_.empty() || o.coeffs_.empty()) return {};
  std::vector<BigInt> v(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
  return Polynomial(std::move(v));
}

std::string Polynomial::to_string(const char* var) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const BigInt& c = coeffs_[i];
    if (sgn(c) == 0) continue;
    BigInt mag = abs(c);
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    const bool unit = (mag == 1);
    if (!unit || i == 0) out += mag.get_str();
    if (i >= 1) out += var;
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

Polynomial pow(const Polynomial& base, unsigned exp) {
  Polynomial result = Polynomial::constant(1);
  for (unsigned i = 0; i < exp; ++i) result = result * base;
  return result;
}

}  // namespace resdet
