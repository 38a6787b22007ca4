#pragma once

// Circulant matrices C(b_0, ..., b_{n-1}) with (i, j)-entry b_{(i-j) mod n},
// and the square-class factorization of their determinant for palindromic
// tuples (a_i = a_{n-i}):
//
//   n even:  det C = (sum a_i) * (sum (-1)^i a_i) * u^2
//   n odd:   det C = (sum a_i) * v^2
//
// factor_symmetric certifies the integer witness u or v by exact division
// followed by a perfect-square test.

#include <optional>
#include <span>
#include <vector>

#include "resdet/bigint.hpp"
#include "resdet/matrix.hpp"

namespace resdet {

BigMatrix circulant(std::span<const BigInt> tuple);

bool is_palindromic(std::span<const BigInt> tuple);

enum class FactorCheck {
  kCertified,          // witness present and reproduces det
  kInexactQuotient,    // det is not divisible by the factor product
  kNonSquareQuotient,  // quotient is not a perfect square
  kNonzeroDegenerate,  // factor product is zero but det is not
};

struct SymmetricFactorization {
  BigInt s_plus;
  std::optional<BigInt> s_minus;  // present iff n is even
  std::optional<BigInt> witness;  // nonnegative; present iff certified
  BigInt det;
  FactorCheck check = FactorCheck::kCertified;

  /// The product s_plus (* s_minus) the witness square multiplies.
  BigInt factor_product() const { return s_minus ? BigInt(s_plus * *s_minus) : s_plus; }
};

/// Throws InvalidArgument if the tuple is empty or not palindromic.
SymmetricFactorization factor_symmetric(std::span<const BigInt> tuple,
                                        const DetOptions& opts = {});

/// Shared tail of every "det = factor * w^2" check: divides exactly and
/// certifies the quotient as a square. A zero factor requires det == 0 and
/// yields witness 0.
struct SquareQuotient {
  FactorCheck check;
  std::optional<BigInt> root;
  std::optional<BigInt> quotient;
};
SquareQuotient square_quotient(const BigInt& value, const BigInt& factor);

}  // namespace resdet
