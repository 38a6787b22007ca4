#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "resdet/bigint.hpp"

namespace resdet {

/// Dense univariate polynomial with integer coefficients, lowest degree
/// first. The zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<BigInt> coeffs);

  static Polynomial constant(const BigInt& c);
  static Polynomial monomial(const BigInt& c, std::size_t degree);

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  BigInt coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

  BigInt eval(const BigInt& x) const;
  /// Horner evaluation mod m after reducing the coefficients.
  std::uint64_t eval_mod(std::uint64_t x, std::uint64_t m) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  bool operator==(const Polynomial& o) const { return coeffs_ == o.coeffs_; }

  std::string to_string(const char* var = "t") const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

Polynomial pow(const Polynomial& base, unsigned exp);

}  // namespace resdet
