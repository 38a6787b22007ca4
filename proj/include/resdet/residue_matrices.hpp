#pragma once

// Builders for the Legendre-symbol and inverse matrices attached to a prime:
//
//   W_p(k) = [ ((a_i + a_j)/p) ]           a_i the sorted k-th power residues
//   I_p(k) = [ 1/(a_i + a_j) mod p ]
//   S(d,p) = [ ((i^2 + d j^2)/p) ]          1 <= i, j <= (p-1)/2
//   A_p    = [ 1/(i^2 + j^2) mod p ]        1 <= i, j <= (p-1)/2
//   B_p    = [ 1/(i^2 - ij + j^2) mod p ]   1 <= i, j <= p-1
//   Carlitz: [ mu + ((i-j)/p) ]             1 <= i, j <= p-1

#include <cstdint>
#include <vector>

#include "resdet/bigint.hpp"
#include "resdet/matrix.hpp"
#include "resdet/modular.hpp"

namespace resdet {

/// Square matrix with entries in {-1, 0, +1}.
class SignMatrix {
 public:
  explicit SignMatrix(std::size_t n) : n_(n), data_(n * n, 0) {}

  std::size_t size() const { return n_; }
  int operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, int v);

  BigMatrix to_big() const;
  ModMatrix to_mod(std::uint64_t p) const;
  bool is_symmetric() const;

 private:
  std::size_t n_;
  std::vector<std::int8_t> data_;
};

SignMatrix build_W(const ResidueSystem& rs);

/// Throws ZeroDenominator when -1 is a k-th power residue.
ModMatrix build_I(const ResidueSystem& rs);

/// Throws InvalidArgument when p | d.
SignMatrix build_S(std::int64_t d, const PrimeModulus& p);

/// Throw ZeroDenominator when some denominator vanishes mod p.
ModMatrix build_A(const PrimeModulus& p);
ModMatrix build_B(const PrimeModulus& p);

BigMatrix build_carlitz(const PrimeModulus& p, std::int64_t mu);

/// e_i = ((1 + g^{k i})/p), 0 <= i < m: the circulant tuple whose
/// determinant equals det W_p(k) for even k.
std::vector<BigInt> w_circulant_tuple(const ResidueSystem& rs);

/// s_i = ((g^{2i} + d)/p), 0 <= i < (p-1)/2: the circulant tuple whose
/// determinant equals det S(d,p).
std::vector<BigInt> s_circulant_tuple(std::int64_t d, const PrimeModulus& p);

}  // namespace resdet
