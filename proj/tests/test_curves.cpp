#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "resdet/curves.hpp"
#include "resdet/error.hpp"

using namespace resdet;

namespace {

Polynomial x_pow(std::size_t e) { return Polynomial::monomial(1, e); }
Polynomial c(long v) { return Polynomial::constant(v); }

// literal double loop over (x, y)
std::uint64_t brute_count(const Polynomial& f, std::uint64_t p) {
  std::uint64_t n = 0;
  for (std::uint64_t x = 0; x < p; ++x) {
    const std::uint64_t v = f.eval_mod(x, p);
    for (std::uint64_t y = 0; y < p; ++y)
      if (y * y % p == v) ++n;
  }
  return n;
}

}  // namespace

TEST_CASE("char_sum: worked examples") {
  const PrimeModulus p7(7);
  CHECK(char_sum(x_pow(1), p7) == 0);
  CHECK(char_sum(x_pow(2) + c(1), p7) == -1);
  CHECK(char_sum(c(1), p7) == 7);
  CHECK(char_sum(c(-7), p7) == 0);
}

TEST_CASE("count_naive: worked examples and double-loop oracle") {
  const PrimeModulus p5(5), p7(7);
  CHECK(count_naive(x_pow(2) + c(1), p7) == 6);
  CHECK(count_naive(Polynomial(), p5) == 5);
  const Polynomial cubic = x_pow(3) + c(1);
  CHECK(static_cast<std::int64_t>(count_naive(cubic, p5)) == 5 + char_sum(cubic, p5));
  for (std::uint64_t p : {3, 5, 7, 11, 13, 29, 31}) {
    const PrimeModulus pm(p);
    for (const Polynomial& f : {x_pow(3) - x_pow(1) + c(2), x_pow(5) + c(-3), x_pow(4) * c(3) + x_pow(1)}) {
      REQUIRE(count_naive(f, pm) == brute_count(f, p));
      REQUIRE(static_cast<std::int64_t>(count_naive(f, pm)) ==
              static_cast<std::int64_t>(p) + char_sum(f, pm));
    }
  }
}

TEST_CASE("ModPolynomial matches Polynomial::eval_mod") {
  const Polynomial f = x_pow(13) * c(-2) + x_pow(7) + x_pow(2) * c(5) + c(11);
  for (std::uint64_t p : {3ULL, 101ULL, 1000003ULL, 4611686018427387847ULL}) {
    const ModPolynomial fm(f, p);
    for (std::uint64_t x = 0; x < 200; ++x) REQUIRE(fm(x) == f.eval_mod(x, p));
  }
  CHECK(ModPolynomial(Polynomial(), 7)(3) == 0);
}

TEST_CASE("trace_a, trace_b: worked examples") {
  CHECK(trace_a(PrimeModulus(7), 2) == 1);
  CHECK(trace_a(PrimeModulus(13), 2) == 1);
  CHECK(trace_a(PrimeModulus(5), 4) == 3);
  CHECK(trace_b(PrimeModulus(13), 2) == -6);
  CHECK(trace_b(PrimeModulus(5), 2) == 2);
  CHECK(trace_b(PrimeModulus(7), 2) == trace_naive(CurveFamily::kB, PrimeModulus(7), 2));
  CHECK_THROWS_AS(trace_a(PrimeModulus(11), 4), InvalidArgument);
}

TEST_CASE("trace_c, trace_d: worked examples") {
  const PrimeModulus p13(13);
  const auto cv = trace_c(p13, 3);
  const auto dv = trace_d(p13, 3);
  CHECK(cv * cv == 36);
  CHECK(dv * dv == 144);
  CHECK(trace_naive(CurveFamily::kC, p13, 3) == cv);
  CHECK(trace_naive(CurveFamily::kD, p13, 3, 2) == dv);
  const PrimeModulus p29(29);
  CHECK(trace_c(p29, 7) == trace_naive(CurveFamily::kC, p29, 7));
  CHECK(trace_d(p29, 7) == trace_naive(CurveFamily::kD, p29, 7));
  CHECK_THROWS_AS(trace_c(PrimeModulus(5), 1), InvalidArgument);
  CHECK_THROWS_AS(trace_c(PrimeModulus(13), 4), InvalidArgument);
}

TEST_CASE("backends agree and traces sit inside the Weil bound, p < 400") {
  for (std::uint64_t p = 3; p < 400; p += 2) {
    if (!is_prime(p)) continue;
    const PrimeModulus pm(p);
    for (std::uint64_t k = 2; k < p; ++k) {
      if ((p - 1) % k != 0) continue;
      std::vector<CurveFamily> fams = {CurveFamily::kA, CurveFamily::kB};
      if (k % 2 == 1) fams.insert(fams.end(), {CurveFamily::kC, CurveFamily::kD});
      for (auto f : fams) {
        const auto t = trace_sum(f, pm, k);
        REQUIRE(t == trace_naive(f, pm, k));
        INFO("p=" << p << " k=" << k << " family " << family_name(f));
        REQUIRE(within_weil_bound(t, curve_degree(f, k), p));
      }
    }
  }
}

TEST_CASE("k = 2 traces: a = 1, b = 2a with p = a^2 + 4b^2, a = 1 mod 4") {
  for (std::uint64_t p = 3; p < 3000; p += 2) {
    if (!is_prime(p)) continue;
    const PrimeModulus pm(p);
    REQUIRE(trace_a(pm, 2) == 1);
    if (p % 4 == 1) {
      const auto rep = two_square_decompose(pm, 4);
      REQUIRE(rep);
      REQUIRE(trace_b(pm, 2) == 2 * rep->normalized_odd());
    }
  }
}

TEST_CASE("c^2 + d^2 does not depend on the primitive root, p < 200") {
  for (std::uint64_t p = 3; p < 200; p += 2) {
    if (!is_prime(p)) continue;
    const PrimeModulus pm(p);
    std::vector<std::uint64_t> roots;
    for (std::uint64_t g = 2; g < p; ++g) {
      bool gen = true;
      for (auto q : distinct_prime_factors(p - 1))
        if (pow_mod(static_cast<std::int64_t>(g), (p - 1) / q, p) == 1) gen = false;
      if (gen) roots.push_back(g);
    }
    for (std::uint64_t k = 3; k < p; k += 2) {
      if ((p - 1) % k != 0) continue;
      const auto c0 = trace_c(pm, k);
      std::set<std::int64_t> norms;
      for (auto g : roots) {
        const auto d = trace_d(pm, k, g);
        norms.insert(c0 * c0 + d * d);
      }
      REQUIRE(norms.size() == 1);
    }
  }
}

TEST_CASE("within_weil_bound") {
  // y^2 = x^2 + 1 is genus 0: trace 1 is the two-points-at-infinity correction
  CHECK(within_weil_bound(1, 2, 7));
  CHECK(!within_weil_bound(2, 2, 7));
  CHECK(within_weil_bound(4, 3, 5));   // 16 <= 4 * 5
  CHECK(!within_weil_bound(5, 3, 5));
}

TEST_CASE("curve_counts") {
  const auto rs = kth_power_residues(PrimeModulus(13), 3);
  const CurveCounts cc = curve_counts(rs);
  CHECK(cc.g_used == 2);
  REQUIRE(cc.c);
  REQUIRE(cc.d);
  CHECK(*cc.c * *cc.c + *cc.d * *cc.d == 180);
  const CurveCounts even = curve_counts(kth_power_residues(PrimeModulus(13), 2));
  CHECK(even.a == 1);
  CHECK(even.b == -6);
  CHECK(!even.c);
}
