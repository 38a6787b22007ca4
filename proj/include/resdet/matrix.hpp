#pragma once

// Exact determinants over Z and F_p, and integer characteristic polynomials.
//
// det_exact dispatches on dimension: fraction-free (Bareiss) elimination up
// to DetOptions::crt_threshold, multi-modular elimination with CRT
// reconstruction above it. The modulus set is sized from the Hadamard bound
// so that the balanced residue recovers the sign.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "resdet/bigint.hpp"
#include "resdet/modular.hpp"
#include "resdet/polynomial.hpp"

namespace resdet {

class BigMatrix {
 public:
  BigMatrix() = default;
  explicit BigMatrix(std::size_t n) : n_(n), data_(n * n) {}
  BigMatrix(std::size_t n, std::vector<BigInt> row_major);

  static BigMatrix identity(std::size_t n);
  /// Row-major list of small integers, e.g. {{1, -1}, {0, 2}}.
  static BigMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);

  std::size_t size() const { return n_; }
  BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  BigMatrix operator*(const BigMatrix& o) const;
  BigMatrix transpose() const;
  bool operator==(const BigMatrix& o) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<BigInt> data_;
};

/// Square matrix over F_p with entries kept in [0, p).
class ModMatrix {
 public:
  ModMatrix(std::size_t n, std::uint64_t p) : n_(n), p_(p), data_(n * n, 0) {}

  std::size_t size() const { return n_; }
  std::uint64_t modulus() const { return p_; }

  std::uint64_t operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  /// Stores v mod p.
  void set(std::size_t i, std::size_t j, std::uint64_t v) { data_[i * n_ + j] = v % p_; }
  void set_signed(std::size_t i, std::size_t j, std::int64_t v);

  const std::vector<std::uint64_t>& data() const { return data_; }

 private:
  std::size_t n_;
  std::uint64_t p_;
  std::vector<std::uint64_t> data_;
};

ModMatrix reduce_mod(const BigMatrix& m, std::uint64_t p);

struct DetOptions {
  std::size_t crt_threshold = 200;  // Bareiss for n <= threshold
  unsigned jobs = 1;                // worker threads for the CRT residues
};

BigInt det_exact(const BigMatrix& m, const DetOptions& opts = {});
BigInt det_bareiss(const BigMatrix& m);
BigInt det_multimodular(const BigMatrix& m, unsigned jobs = 1);

/// ceil(prod_i ||row_i||_2), an upper bound on |det m|.
BigInt hadamard_bound(const BigMatrix& m);

/// det m mod p by elimination over F_p. The modulus must be prime.
std::uint64_t det_mod(const ModMatrix& m);

/// The first `count` primes below 2^62, descending. Used as CRT moduli.
std::vector<std::uint64_t> crt_moduli(std::size_t count);

/// det(t*I - m) with exact integer coefficients (Faddeev-LeVerrier with
/// exact integer divisions).
Polynomial char_poly(const BigMatrix& m);

}  // namespace resdet
