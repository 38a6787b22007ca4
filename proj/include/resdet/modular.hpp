#pragma once

// Modular arithmetic primitives over prime fields: symbols, powers,
// inverses, primitive roots, k-th power residue systems, perfect squares and
// representations p = x^2 + D y^2.

#include <cstdint>
#include <optional>
#include <vector>

#include "resdet/bigint.hpp"

namespace resdet {

enum class Validation { kCheck, kSkip };

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n);

/// An odd prime modulus. Construction certifies primality unless the caller
/// opts out with Validation::kSkip (the value must still be odd and >= 3).
class PrimeModulus {
 public:
  explicit PrimeModulus(std::uint64_t p, Validation v = Validation::kCheck);

  std::uint64_t value() const { return p_; }
  operator std::uint64_t() const { return p_; }

 private:
  std::uint64_t p_;
};

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);

/// a^e mod m in [0, m); m >= 2. Negative a is reduced first.
std::uint64_t pow_mod(std::int64_t a, std::uint64_t e, std::uint64_t m);
std::uint64_t pow_mod(const BigInt& a, std::uint64_t e, std::uint64_t m);

/// Jacobi symbol (a/n) for odd n >= 1 by the reciprocity chain.
int jacobi(std::uint64_t a, std::uint64_t n);

/// Legendre symbol (a/p) in {-1, 0, +1}.
int legendre(std::int64_t a, const PrimeModulus& p);
int legendre(const BigInt& a, const PrimeModulus& p);

/// Inverse of a mod p in (0, p). Throws ZeroDenominator when p | a.
std::uint64_t inv_mod(std::int64_t a, const PrimeModulus& p);
std::uint64_t inv_mod_u64(std::uint64_t a, std::uint64_t m);

/// Distinct prime factors of n in increasing order (trial division).
std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n);

/// Smallest positive primitive root mod p.
std::uint64_t primitive_root(const PrimeModulus& p);

/// A square root of a mod p (Tonelli-Shanks), or empty if a is a non-residue.
std::optional<std::uint64_t> sqrt_mod(std::uint64_t a, const PrimeModulus& p);

/// The k-th power residues of p together with the canonical primitive root.
struct ResidueSystem {
  PrimeModulus p;
  std::uint64_t k;
  std::uint64_t m;                   // (p - 1) / k
  std::uint64_t g;                   // smallest primitive root
  std::vector<std::uint64_t> alphas; // sorted, size m

  /// True iff -1 (that is, p - 1) is a k-th power residue.
  bool minus_one_is_residue() const;
};

/// Throws InvalidArgument unless k >= 2 and k | p - 1.
ResidueSystem kth_power_residues(const PrimeModulus& p, std::uint64_t k);

/// r >= 0 with r*r == n, or empty (negative n is never a square).
std::optional<BigInt> is_perfect_square(const BigInt& n);

/// Nonnegative solution of x^2 + D*y^2 = p.
struct TwoSquare {
  std::uint64_t x;
  std::uint64_t y;

  /// +x or -x, whichever is 1 mod 4. Only meaningful for odd x.
  std::int64_t normalized_odd() const;
};

/// Cornacchia's algorithm. Empty when p has no representation.
std::optional<TwoSquare> two_square_decompose(const PrimeModulus& p,
                                              std::uint64_t D);

}  // namespace resdet
