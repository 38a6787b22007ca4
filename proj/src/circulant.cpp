#include "resdet/circulant.hpp"

#include "resdet/error.hpp"
#include "resdet/modular.hpp"

namespace resdet {

BigMatrix circulant(std::span<const BigInt> tuple) {
  const std::size_t n = tuple.size();
  BigMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = tuple[(i + n - j) % n];
  return m;
}

bool is_palindromic(std::span<const BigInt> tuple) {
  const std::size_t n = tuple.size();
  for (std::size_t i = 1; i < n; ++i)
    if (tuple[i] != tuple[n - i]) return false;
  return true;
}

SquareQuotient square_quotient(const BigInt& value, const BigInt& factor) {
  if (sgn(factor) == 0) {
    if (sgn(value) != 0) return {FactorCheck::kNonzeroDegenerate, std::nullopt, std::nullopt};
    return {FactorCheck::kCertified, BigInt(0), std::nullopt};
  }
  if (!mpz_divisible_p(value.get_mpz_t(), factor.get_mpz_t())) {
    return {FactorCheck::kInexactQuotient, std::nullopt, std::nullopt};
  }
  BigInt q;
  mpz_divexact(q.get_mpz_t(), value.get_mpz_t(), factor.get_mpz_t());
  auto root = is_perfect_square(q);
  if (!root) return {FactorCheck::kNonSquareQuotient, std::nullopt, q};
  return {FactorCheck::kCertified, std::move(root), q};
}

SymmetricFactorization factor_symmetric(std::span<const BigInt> tuple,
                                        const DetOptions& opts) {
  if (tuple.empty()) throw InvalidArgument("circulant tuple must be non-empty");
  if (!is_palindromic(tuple)) {
    throw InvalidArgument("tuple is not palindromic (a_i != a_{n-i} for some i)");
  }
  SymmetricFactorization out;
  out.det = det_exact(circulant(tuple), opts);
  out.s_plus = 0;
  for (const auto& a : tuple) out.s_plus += a;
  if (tuple.size() % 2 == 0) {
    BigInt alt = 0;
    for (std::size_t i = 0; i < tuple.size(); ++i) {
      if (i % 2 == 0) alt += tuple[i];
      else alt -= tuple[i];
    }
    out.s_minus = alt;
  }
  SquareQuotient sq = square_quotient(out.det, out.factor_product());
  out.check = sq.check;
  out.witness = sq.root;
  return out;
}

}  // namespace resdet
