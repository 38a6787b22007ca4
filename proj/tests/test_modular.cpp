#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "resdet/error.hpp"
#include "resdet/modular.hpp"

using namespace resdet;

namespace {

// oracle: a^e by repeated multiplication
std::uint64_t slow_pow(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  for (std::uint64_t i = 0; i < e; ++i) r = r * (a % m) % m;
  return r;
}

bool slow_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t order(std::uint64_t g, std::uint64_t p) {
  std::uint64_t x = g % p, e = 1;
  while (x != 1) {
    x = x * g % p;
    ++e;
  }
  return e;
}

}  // namespace

TEST_CASE("legendre: worked examples") {
  const PrimeModulus p7(7);
  CHECK(legendre(1, p7) == 1);
  CHECK(legendre(0, p7) == 0);
  CHECK(legendre(3, p7) == -1);
  CHECK(legendre(-1, p7) == -1);
  CHECK(legendre(BigInt("123456789012345678901234567890"), p7) ==
        legendre(static_cast<std::int64_t>(mod_u64(BigInt("123456789012345678901234567890"), 7)), p7));
}

TEST_CASE("legendre: Euler criterion, exhaustive for p <= 97") {
  for (std::uint64_t p = 3; p <= 97; p += 2) {
    if (!slow_prime(p)) continue;
    const PrimeModulus pm(p);
    for (std::int64_t a = -3 * static_cast<std::int64_t>(p); a < 3 * static_cast<std::int64_t>(p); ++a) {
      const std::uint64_t r = ((a % static_cast<std::int64_t>(p)) + p) % p;
      const std::uint64_t e = slow_pow(r, (p - 1) / 2, p);
      const int expect = e == 0 ? 0 : (e == 1 ? 1 : -1);
      REQUIRE(legendre(a, pm) == expect);
    }
  }
}

TEST_CASE("legendre: multiplicative on random pairs") {
  std::mt19937_64 rng(7);
  const std::uint64_t primes[] = {10007, 999983, 1000000007ULL, 2305843009213693951ULL};
  for (auto p : primes) {
    const PrimeModulus pm(p);
    for (int t = 0; t < 500; ++t) {
      const auto a = static_cast<std::int64_t>(rng() % p) + 1;
      const auto b = static_cast<std::int64_t>(rng() % p) + 1;
      if (a % static_cast<std::int64_t>(p) == 0 || b % static_cast<std::int64_t>(p) == 0) continue;
      const BigInt ab = BigInt(from_i64(a) * from_i64(b));
      CHECK(legendre(ab, pm) == legendre(a, pm) * legendre(b, pm));
    }
  }
}

TEST_CASE("jacobi rejects even modulus") {
  CHECK_THROWS_AS(jacobi(3, 8), InvalidArgument);
}

TEST_CASE("pow_mod") {
  CHECK(pow_mod(2, 0, 13) == 1);
  CHECK(pow_mod(2, 12, 13) == 1);
  CHECK(pow_mod(3, 3, 7) == 6);
  CHECK(pow_mod(-1, 3, 7) == 6);
  CHECK(pow_mod(5, 1, 1ULL << 63) == 5);
  std::mt19937_64 rng(1);
  for (int t = 0; t < 200; ++t) {
    const std::uint64_t m = 2 + rng() % 1000;
    const std::uint64_t a = rng() % 5000;
    const std::uint64_t e = rng() % 300;
    CHECK(pow_mod(static_cast<std::int64_t>(a), e, m) == slow_pow(a, e, m));
  }
}

TEST_CASE("inv_mod") {
  const PrimeModulus p7(7);
  CHECK(inv_mod(1, p7) == 1);
  CHECK(inv_mod(2, p7) == 4);
  CHECK(inv_mod(5, p7) == 3);
  CHECK(inv_mod(-2, p7) == 3);
  CHECK_THROWS_AS(inv_mod(14, p7), ZeroDenominator);
  const std::uint64_t big = 18446744073709551557ULL;  // largest 64-bit prime
  const PrimeModulus pb(big);
  const std::uint64_t x = inv_mod(123456789, pb);
  CHECK(mul_mod(x, 123456789, big) == 1);
}

TEST_CASE("PrimeModulus validation") {
  CHECK_THROWS_AS(PrimeModulus(2), InvalidArgument);
  CHECK_THROWS_AS(PrimeModulus(1), InvalidArgument);
  CHECK_THROWS_AS(PrimeModulus(12), InvalidArgument);
  CHECK_THROWS_AS(PrimeModulus(91), InvalidArgument);
  CHECK_NOTHROW(PrimeModulus(91, Validation::kSkip));
  try {
    PrimeModulus bad(12);
  } catch (const InvalidArgument& e) {
    CHECK(std::string(e.what()) == "12 is not prime");
  }
}

TEST_CASE("is_prime against trial division") {
  for (std::uint64_t n = 0; n < 20000; ++n) REQUIRE(is_prime(n) == slow_prime(n));
  CHECK(is_prime(2305843009213693951ULL));       // 2^61 - 1
  CHECK(!is_prime(3825123056546413051ULL));      // strong pseudoprime to bases 2..23
  CHECK(!is_prime(4294967297ULL));  // F5 = 641 * 6700417
}

TEST_CASE("primitive_root") {
  CHECK(primitive_root(PrimeModulus(7)) == 3);
  CHECK(primitive_root(PrimeModulus(13)) == 2);
  CHECK(primitive_root(PrimeModulus(3)) == 2);
  for (std::uint64_t p = 3; p < 2000; p += 2) {
    if (!slow_prime(p)) continue;
    const std::uint64_t g = primitive_root(PrimeModulus(p));
    REQUIRE(order(g, p) == p - 1);
    for (std::uint64_t h = 2; h < g; ++h) REQUIRE(order(h, p) != p - 1);
  }
}

TEST_CASE("kth_power_residues") {
  CHECK(kth_power_residues(PrimeModulus(7), 2).alphas == std::vector<std::uint64_t>{1, 2, 4});
  CHECK(kth_power_residues(PrimeModulus(13), 3).alphas == std::vector<std::uint64_t>{1, 5, 8, 12});
  CHECK(kth_power_residues(PrimeModulus(5), 4).alphas == std::vector<std::uint64_t>{1});
  CHECK_THROWS_AS(kth_power_residues(PrimeModulus(11), 4), InvalidArgument);
  CHECK_THROWS_AS(kth_power_residues(PrimeModulus(11), 1), InvalidArgument);
  CHECK(kth_power_residues(PrimeModulus(13), 3).minus_one_is_residue());
  CHECK(!kth_power_residues(PrimeModulus(7), 2).minus_one_is_residue());
}

TEST_CASE("kth_power_residues: exactly the roots of x^m = 1, p <= 500") {
  for (std::uint64_t p = 3; p <= 500; p += 2) {
    if (!slow_prime(p)) continue;
    for (std::uint64_t k = 2; k <= p - 1; ++k) {
      if ((p - 1) % k != 0) continue;
      const auto rs = kth_power_residues(PrimeModulus(p), k);
      std::vector<std::uint64_t> expect;
      for (std::uint64_t x = 1; x < p; ++x)
        if (slow_pow(x, rs.m, p) == 1) expect.push_back(x);
      REQUIRE(rs.alphas == expect);
      // and equal to the set of literal k-th powers
      std::set<std::uint64_t> powers;
      for (std::uint64_t x = 1; x < p; ++x) powers.insert(slow_pow(x, k, p));
      REQUIRE(std::vector<std::uint64_t>(powers.begin(), powers.end()) == expect);
    }
  }
}

TEST_CASE("sqrt_mod") {
  for (std::uint64_t p : {3ULL, 5ULL, 13ULL, 17ULL, 41ULL, 97ULL, 257ULL, 65537ULL}) {
    const PrimeModulus pm(p);
    for (std::uint64_t a = 0; a < std::min<std::uint64_t>(p, 3000); ++a) {
      auto r = sqrt_mod(a, pm);
      if (legendre(static_cast<std::int64_t>(a), pm) == -1) {
        REQUIRE(!r);
      } else {
        REQUIRE(r);
        REQUIRE(mul_mod(*r, *r, p) == a);
      }
    }
  }
}

TEST_CASE("is_perfect_square") {
  CHECK(is_perfect_square(0) == BigInt(0));
  CHECK(is_perfect_square(4) == BigInt(2));
  CHECK(!is_perfect_square(-4));
  CHECK(!is_perfect_square(2));
  CHECK(!is_perfect_square(BigInt("-1")));
}

TEST_CASE("is_perfect_square: Newton oracle on random 256-bit values") {
  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(2024);
  // oracle: integer Newton iteration, independent of mpz_sqrtrem
  auto newton = [](const BigInt& n) {
    if (n < 2) return BigInt(n);
    BigInt x = n, y = (x + 1) / 2;
    while (y < x) {
      x = y;
      y = (x + n / x) / 2;
    }
    return x;
  };
  for (int t = 0; t < 400; ++t) {
    BigInt n = rng.get_z_bits(256);
    if (t % 2 == 0) n = n / (BigInt(1) << 128), n *= n;  // force squares half the time
    if (t % 7 == 0) n += 1;
    const BigInt r = newton(n);
    const bool square = r * r == n || (r + 1) * (r + 1) == n;
    auto got = is_perfect_square(n);
    REQUIRE(got.has_value() == square);
    if (got) REQUIRE(*got * *got == n);
  }
}

TEST_CASE("two_square_decompose: worked examples") {
  auto r = two_square_decompose(PrimeModulus(13), 4);
  REQUIRE(r);
  CHECK(r->x == 3);
  CHECK(r->y == 1);
  CHECK(r->normalized_odd() == -3);
  r = two_square_decompose(PrimeModulus(13), 9);
  REQUIRE(r);
  CHECK(r->x == 2);
  CHECK(r->y == 1);
  CHECK(!two_square_decompose(PrimeModulus(7), 4));
  // D = p: 0^2 + p * 1^2
  r = two_square_decompose(PrimeModulus(7), 7);
  REQUIRE(r);
  CHECK(r->x == 0);
  CHECK(r->y == 1);
  CHECK(!two_square_decompose(PrimeModulus(7), 8));
}

TEST_CASE("two_square_decompose: brute force agreement") {
  for (std::uint64_t p = 3; p < 5000; p += 2) {
    if (!slow_prime(p)) continue;
    for (std::uint64_t D : {1ULL, 2ULL, 3ULL, 4ULL, 7ULL, 9ULL}) {
      bool exists = false;
      for (std::uint64_t y = 1; D * y * y <= p && !exists; ++y) {
        const std::uint64_t rest = p - D * y * y;
        const auto x = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(rest)) + 0.5);
        for (std::uint64_t c = x > 0 ? x - 1 : 0; c <= x + 1; ++c)
          if (c * c == rest) exists = true;
      }
      const auto got = two_square_decompose(PrimeModulus(p), D);
      REQUIRE(got.has_value() == exists);
      if (got) REQUIRE(got->x * got->x + D * got->y * got->y == p);
      if (D == 4) {
        REQUIRE(got.has_value() == (p % 4 == 1));
        if (got) REQUIRE(((got->normalized_odd() % 4) + 4) % 4 == 1);
      }
    }
  }
}
