#pragma once

// Decidable checks for the determinant identities on power-residue matrices.
// Each existence statement ("... = factor * w^2 for some integer w") becomes
// exact division plus perfect-square certification; the certified root is
// reported as a witness.

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "resdet/bigint.hpp"
#include "resdet/curves.hpp"
#include "resdet/matrix.hpp"
#include "resdet/modular.hpp"

namespace resdet {

enum class ClaimId {
  kThmAI,           // k even, m odd:  k det W = -(a+1) u^2
  kThmAII,          // k even, m even: k^2 det W = (a+1) b v^2
  kThmBI,           // k odd, p = 1 mod 4: 4k^2 det W = z^2 (c^2 + d^2)
  kThmBII,          // k odd, p = 3 mod 4: -det W is a square
  kCor1I,           // p = 1 mod 12: det W_p(3) / (c^2 + d^2) is a square, p = c^2 + 9d^2
  kCor1II,          // p = 1 mod 12, p does not divide det: (det/p) = (2/p)
  kCor2,            // k odd: det W >= 0 (p = 1 mod 4), <= 0 (p = 3 mod 4)
  kThmC,            // det I_p(k) = (-1)^((m+1)/2) / (2k)^m mod p
  kRemarkPrimeList, // p | det W_p(3) exactly for the listed primes below 3000
  kSunS1P,          // -S(1,p) square (p = 3 mod 4); S(1,p)/a square (p = 1 mod 4)
  kSunAP,           // A_p = (2/p) mod p for p = 3 mod 4
  kSunBP,           // 2 B_p is a quadratic residue for p = 2 mod 3
  kCarlitzFmu,      // characteristic polynomial of [mu + ((i-j)/p)]
  kLemma21,         // palindromic circulant factorization, random tuples
};

inline constexpr ClaimId kAllClaims[] = {
    ClaimId::kThmAI,  ClaimId::kThmAII,           ClaimId::kThmBI,  ClaimId::kThmBII,
    ClaimId::kCor1I,  ClaimId::kCor1II,           ClaimId::kCor2,   ClaimId::kThmC,
    ClaimId::kRemarkPrimeList, ClaimId::kSunS1P, ClaimId::kSunAP,  ClaimId::kSunBP,
    ClaimId::kCarlitzFmu, ClaimId::kLemma21,
};

std::string_view claim_name(ClaimId id);
std::optional<ClaimId> parse_claim(std::string_view name);

enum class Status { kPass, kFail, kSkip, kFatal };

std::string_view status_name(Status s);
std::optional<Status> parse_status(std::string_view name);
/// FATAL > FAIL > PASS, SKIP.
int severity(Status s);

struct CheckReport {
  ClaimId claim = ClaimId::kThmAI;
  std::uint64_t p = 0;
  std::uint64_t k = 0;  // 0 when the claim has no k
  Status status = Status::kSkip;
  std::string detail;   // violated hypothesis (SKIP) or diagnosis (FAIL, FATAL)
  std::map<std::string, BigInt> witnesses;
  std::int64_t elapsed_ms = 0;
  std::optional<std::uint64_t> g;
};

struct SuiteOptions {
  std::uint64_t exact_cap = 600;   // claims needing exact determinants
  std::uint64_t modp_cap = 3000;   // claims needing only det mod p
  std::uint64_t bp_cap = 200;      // B_p is (p-1) x (p-1)
  std::uint64_t carlitz_cap = 31;  // exact characteristic polynomials
  std::uint64_t identity_cap = 200;  // S(1,p) circulant cross-check
  DetOptions det;
  Validation validation = Validation::kCheck;
};

/// The primes p < 3000, p = 1 mod 12, with p | det W_p(3).
inline constexpr std::uint64_t kPublishedDivisorPrimes[] = {1117, 1129, 1381, 1597,
                                                            1861, 2557, 2749};
inline constexpr std::uint64_t kPublishedListBound = 3000;

/// Per-(p, k) cache so the claims sharing det W_p(k) compute it once.
/// Not thread-safe; one instance per task.
class PairContext {
 public:
  PairContext(const PrimeModulus& p, std::uint64_t k, const SuiteOptions& opts);

  const PrimeModulus& p() const { return p_; }
  std::uint64_t k() const { return k_; }
  const SuiteOptions& options() const { return opts_; }
  bool k_divides() const { return k_ >= 2 && (p_.value() - 1) % k_ == 0; }

  const ResidueSystem& residues();
  const BigInt& det_w();
  std::uint64_t det_w_mod_p();
  const CurveCounts& counts();

 private:
  PrimeModulus p_;
  std::uint64_t k_;
  SuiteOptions opts_;
  std::optional<ResidueSystem> rs_;
  std::optional<BigInt> det_;
  std::optional<std::uint64_t> det_mod_p_;
  std::optional<CurveCounts> counts_;
};

CheckReport verify_theorem_A(PairContext& ctx);
CheckReport verify_theorem_B(PairContext& ctx);
CheckReport verify_corollary_2(PairContext& ctx);
/// Context must have k = 3. Returns COR_1_I then COR_1_II.
std::vector<CheckReport> verify_corollary_1(PairContext& ctx);
CheckReport verify_remark_prime_list(PairContext& ctx);
CheckReport verify_theorem_C(PairContext& ctx);
/// Context must have k = 2; det W_p(2) is compared against S(1,p).
/// Returns SUN_S1P, SUN_AP, SUN_BP.
std::vector<CheckReport> verify_sun_background(PairContext& ctx);

// Convenience overloads building a fresh context. Throw InvalidArgument for
// an invalid prime; unmet hypotheses on k are reported as SKIP.
CheckReport verify_theorem_A(std::uint64_t p, std::uint64_t k, const SuiteOptions& opts = {});
CheckReport verify_theorem_B(std::uint64_t p, std::uint64_t k, const SuiteOptions& opts = {});
CheckReport verify_corollary_2(std::uint64_t p, std::uint64_t k, const SuiteOptions& opts = {});
std::vector<CheckReport> verify_corollary_1(std::uint64_t p, const SuiteOptions& opts = {});
CheckReport verify_remark_prime_list(std::uint64_t p, const SuiteOptions& opts = {});
CheckReport verify_theorem_C(std::uint64_t p, std::uint64_t k, const SuiteOptions& opts = {});
std::vector<CheckReport> verify_sun_background(std::uint64_t p, const SuiteOptions& opts = {});

CheckReport verify_carlitz(std::uint64_t p, std::int64_t mu, const SuiteOptions& opts = {});

/// The two candidate closed forms for the Carlitz characteristic polynomial:
/// the last factor as printed (no t term) and with the trace term restored.
Polynomial carlitz_printed_form(std::uint64_t p, std::int64_t mu);
Polynomial carlitz_trace_corrected_form(std::uint64_t p, std::int64_t mu);

/// Random palindromic tuples (n <= 12, |a_i| <= 9) from a seeded
/// mt19937_64; every tuple must factor with a square witness.
CheckReport verify_lemma_2_1_random(std::uint64_t seed, std::uint64_t trials);

/// The tuple source used by verify_lemma_2_1_random.
class PalindromicTupleGenerator {
 public:
  explicit PalindromicTupleGenerator(std::uint64_t seed) : rng_(seed) {}
  std::vector<BigInt> next();

 private:
  std::mt19937_64 rng_;
};

}  // namespace resdet
