#include "resdet/modular.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "resdet/error.hpp"

namespace resdet {

std::int64_t to_i64(const BigInt& v) {
  if (!mpz_fits_slong_p(v.get_mpz_t())) {
    throw std::out_of_range("integer does not fit in 64 bits: " + to_string(v));
  }
  return static_cast<std::int64_t>(mpz_get_si(v.get_mpz_t()));
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

namespace {

std::uint64_t pow_mod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1) result = mul_mod(result, a, m);
    a = mul_mod(a, a, m);
    e >>= 1;
  }
  return result;
}

std::uint64_t reduce_signed(std::int64_t a, std::uint64_t m) {
  if (a >= 0) return static_cast<std::uint64_t>(a) % m;
  // -(a+1) is representable for every negative a.
  std::uint64_t r = static_cast<std::uint64_t>(-(a + 1)) % m;
  return r == m - 1 ? 0 : m - 1 - r;
}

bool miller_rabin_round(std::uint64_t n, std::uint64_t d, int s,
                        std::uint64_t base) {
  std::uint64_t x = pow_mod_u64(base % n, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int r = 1; r < s; ++r) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::uint64_t kSmall[] = {2,  3,  5,  7,  11, 13,
                                             17, 19, 23, 29, 31, 37};
  for (std::uint64_t q : kSmall) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These twelve bases are deterministic below 3.3e24, which covers uint64.
  for (std::uint64_t base : kSmall) {
    if (!miller_rabin_round(n, d, s, base)) return false;
  }
  return true;
}

PrimeModulus::PrimeModulus(std::uint64_t p, Validation v) : p_(p) {
  if (p == 2) throw InvalidArgument("2 is not an odd prime");
  if (p < 3 || p % 2 == 0) throw InvalidArgument(std::to_string(p) + " is not prime");
  if (v == Validation::kCheck && !is_prime(p)) {
    throw InvalidArgument(std::to_string(p) + " is not prime");
  }
}

std::uint64_t pow_mod(std::int64_t a, std::uint64_t e, std::uint64_t m) {
  if (m < 2) throw InvalidArgument("pow_mod: modulus must be >= 2");
  return pow_mod_u64(reduce_signed(a, m), e, m);
}

std::uint64_t pow_mod(const BigInt& a, std::uint64_t e, std::uint64_t m) {
  if (m < 2) throw InvalidArgument("pow_mod: modulus must be >= 2");
  return pow_mod_u64(mod_u64(a, m), e, m);
}

int jacobi(std::uint64_t a, std::uint64_t n) {
  if (n == 0 || n % 2 == 0) throw InvalidArgument("jacobi: n must be odd");
  a %= n;
  int t = 1;
  while (a != 0) {
    while ((a & 1) == 0) {
      a >>= 1;
      std::uint64_t r = n & 7;
      if (r == 3 || r == 5) t = -t;
    }
    std::swap(a, n);
    if ((a & 3) == 3 && (n & 3) == 3) t = -t;
    a %= n;
  }
  return n == 1 ? t : 0;
}

int legendre(std::int64_t a, const PrimeModulus& p) {
  return jacobi(reduce_signed(a, p.value()), p.value());
}

int legendre(const BigInt& a, const PrimeModulus& p) {
  return jacobi(mod_u64(a, p.value()), p.value());
}

std::uint64_t inv_mod_u64(std::uint64_t a, std::uint64_t m) {
  a %= m;
  if (a == 0) throw ZeroDenominator("no inverse of 0 mod " + std::to_string(m));
  // Extended Euclid on signed 128-bit to stay clear of overflow.
  __int128 r0 = m, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    __int128 q = r0 / r1;
    __int128 t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  if (r0 != 1) {
    throw ZeroDenominator(std::to_string(a) + " is not invertible mod " +
                          std::to_string(m));
  }
  if (s0 < 0) s0 += m;
  return static_cast<std::uint64_t>(s0);
}

std::uint64_t inv_mod(std::int64_t a, const PrimeModulus& p) {
  std::uint64_t r = reduce_signed(a, p.value());
  if (r == 0) {
    throw ZeroDenominator("zero denominator: " + std::to_string(a) +
                          " = 0 mod " + std::to_string(p.value()));
  }
  return inv_mod_u64(r, p.value());
}

std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q * q <= n; q += (q == 2 ? 1 : 2)) {
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t primitive_root(const PrimeModulus& p) {
  const std::uint64_t order = p.value() - 1;
  const auto factors = distinct_prime_factors(order);
  for (std::uint64_t g = 2; g < p.value(); ++g) {
    bool generates = std::all_of(factors.begin(), factors.end(), [&](auto q) {
      return pow_mod_u64(g, order / q, p.value()) != 1;
    });
    if (generates) return g;
  }
  // p = 3 is covered by g = 2; every prime has a primitive root.
  throw std::logic_error("no primitive root found");
}

std::optional<std::uint64_t> sqrt_mod(std::uint64_t a, const PrimeModulus& pm) {
  const std::uint64_t p = pm.value();
  a %= p;
  if (a == 0) return 0;
  if (jacobi(a, p) != 1) return std::nullopt;
  if (p % 4 == 3) return pow_mod_u64(a, (p + 1) / 4, p);

  std::uint64_t q = p - 1;
  int s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  std::uint64_t z = 2;
  while (jacobi(z, p) != -1) ++z;

  std::uint64_t c = pow_mod_u64(z, q, p);
  std::uint64_t x = pow_mod_u64(a, (q + 1) / 2, p);
  std::uint64_t t = pow_mod_u64(a, q, p);
  int m = s;
  while (t != 1) {
    int i = 0;
    std::uint64_t t2 = t;
    while (t2 != 1) {
      t2 = mul_mod(t2, t2, p);
      ++i;
    }
    std::uint64_t b = c;
    for (int j = 0; j < m - i - 1; ++j) b = mul_mod(b, b, p);
    x = mul_mod(x, b, p);
    c = mul_mod(b, b, p);
    t = mul_mod(t, c, p);
    m = i;
  }
  return x;
}

bool ResidueSystem::minus_one_is_residue() const {
  return std::binary_search(alphas.begin(), alphas.end(), p.value() - 1);
}

ResidueSystem kth_power_residues(const PrimeModulus& p, std::uint64_t k) {
  const std::uint64_t pv = p.value();
  if (k < 2 || (pv - 1) % k != 0) {
    throw InvalidArgument("k = " + std::to_string(k) + " must be >= 2 and divide p - 1 = " +
                          std::to_string(pv - 1));
  }
  const std::uint64_t m = (pv - 1) / k;
  const std::uint64_t g = primitive_root(p);
  // The k-th powers form the subgroup generated by g^k.
  const std::uint64_t step = pow_mod_u64(g, k, pv);
  std::vector<std::uint64_t> alphas;
  alphas.reserve(m);
  std::uint64_t x = 1;
  for (std::uint64_t i = 0; i < m; ++i) {
    alphas.push_back(x);
    x = mul_mod(x, step, pv);
  }
  std::sort(alphas.begin(), alphas.end());
  return ResidueSystem{p, k, m, g, std::move(alphas)};
}

std::optional<BigInt> is_perfect_square(const BigInt& n) {
  if (sgn(n) < 0) return std::nullopt;
  BigInt root, rem;
  mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
  if (sgn(rem) != 0) return std::nullopt;
  return root;
}

std::int64_t TwoSquare::normalized_odd() const {
  const auto v = static_cast<std::int64_t>(x);
  return (v % 4 == 1) ? v : -v;
}

std::optional<TwoSquare> two_square_decompose(const PrimeModulus& pm,
                                              std::uint64_t D) {
  const std::uint64_t p = pm.value();
  if (D == 0) throw InvalidArgument("two_square_decompose: D must be positive");
  if (D == p) return TwoSquare{0, 1};
  if (D > p) {
    // Only y = 0 could work, and p is not a square.
    return std::nullopt;
  }
  const std::uint64_t minus_d = p - D;
  auto r0 = sqrt_mod(minus_d, pm);
  if (!r0) return std::nullopt;

  std::uint64_t a = p;
  std::uint64_t b = *r0;
  if (2 * b < p) b = p - b;
  std::uint64_t limit = 0;
  {
    BigInt root;
    BigInt pb = from_u64(p);
    mpz_sqrt(root.get_mpz_t(), pb.get_mpz_t());
    limit = root.get_ui();
  }
  while (b > limit) {
    std::uint64_t r = a % b;
    a = b;
    b = r;
  }
  const unsigned __int128 b2 = static_cast<unsigned __int128>(b) * b;
  const unsigned __int128 rest = p - b2;
  if (rest % D != 0) return std::nullopt;
  const auto c = static_cast<std::uint64_t>(rest / D);
  auto y = is_perfect_square(from_u64(c));
  if (!y) return std::nullopt;
  return TwoSquare{b, y->get_ui()};
}

}  // namespace resdet
