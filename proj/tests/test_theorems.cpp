#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "resdet/error.hpp"
#include "resdet/residue_matrices.hpp"
#include "resdet/theorems.hpp"

using namespace resdet;

namespace {

const CheckReport& find(const std::vector<CheckReport>& rs, ClaimId id) {
  for (const auto& r : rs)
    if (r.claim == id) return r;
  FAIL("claim missing");
  return rs.front();
}

}  // namespace

TEST_CASE("claim and status names round-trip") {
  for (ClaimId id : kAllClaims) CHECK(parse_claim(claim_name(id)) == id);
  CHECK(!parse_claim("THM_Z"));
  for (Status s : {Status::kPass, Status::kFail, Status::kSkip, Status::kFatal})
    CHECK(parse_status(status_name(s)) == s);
  CHECK(severity(Status::kFatal) > severity(Status::kFail));
  CHECK(severity(Status::kFail) > severity(Status::kPass));
  CHECK(severity(Status::kSkip) == severity(Status::kPass));
}

TEST_CASE("theorem A: (7, 2) gives u = 2") {
  const CheckReport r = verify_theorem_A(7, 2);
  CHECK(r.claim == ClaimId::kThmAI);
  CHECK(r.status == Status::kPass);
  CHECK(r.witnesses.at("det") == -4);
  CHECK(r.witnesses.at("a") == 1);
  CHECK(r.witnesses.at("u") == 2);
  CHECK(r.g == 3u);
}

TEST_CASE("theorem A: (13, 2), m even") {
  const CheckReport r = verify_theorem_A(13, 2);
  CHECK(r.claim == ClaimId::kThmAII);
  REQUIRE(r.status == Status::kPass);
  CHECK(r.witnesses.at("b") == -6);
  // k^2 det = (a+1) b v^2
  const BigInt v = r.witnesses.at("v");
  CHECK(4 * r.witnesses.at("det") == 2 * -6 * v * v);
  const BigInt direct = det_exact(build_W(kth_power_residues(PrimeModulus(13), 2)).to_big());
  CHECK(direct == r.witnesses.at("det"));
  CHECK(r.witnesses.at("det_circulant") == direct);
}

TEST_CASE("theorem A: skips") {
  CHECK(verify_theorem_A(11, 4).status == Status::kSkip);
  CHECK(verify_theorem_A(13, 3).status == Status::kSkip);
  SuiteOptions small;
  small.exact_cap = 10;
  const CheckReport r = verify_theorem_A(13, 2, small);
  CHECK(r.status == Status::kSkip);
  CHECK(!r.detail.empty());
  CHECK_THROWS_AS(verify_theorem_A(15, 2), InvalidArgument);
}

TEST_CASE("theorem B: (13, 3) gives z = 1, (7, 3) gives -det = 1") {
  CheckReport r = verify_theorem_B(13, 3);
  CHECK(r.claim == ClaimId::kThmBI);
  CHECK(r.status == Status::kPass);
  CHECK(r.witnesses.at("det") == 5);
  CHECK(r.witnesses.at("z") == 1);
  const BigInt c = r.witnesses.at("c"), d = r.witnesses.at("d");
  CHECK(c * c + d * d == 180);

  r = verify_theorem_B(7, 3);
  CHECK(r.claim == ClaimId::kThmBII);
  CHECK(r.status == Status::kPass);
  CHECK(r.witnesses.at("det") == -1);

  CHECK(verify_theorem_B(13, 2).status == Status::kSkip);
  CHECK(verify_theorem_B(13, 5).status == Status::kSkip);
}

TEST_CASE("corollary 2: sign law") {
  CheckReport r = verify_corollary_2(13, 3);
  CHECK(r.status == Status::kPass);
  CHECK(r.witnesses.at("sign") == 1);
  r = verify_corollary_2(7, 3);
  CHECK(r.status == Status::kPass);
  CHECK(r.witnesses.at("sign") == -1);
}

TEST_CASE("corollary 1 at p = 13 and 37") {
  auto rs = verify_corollary_1(13);
  REQUIRE(rs.size() == 2);
  const CheckReport& i = find(rs, ClaimId::kCor1I);
  CHECK(i.status == Status::kPass);
  CHECK(i.witnesses.at("c") == 2);
  CHECK(i.witnesses.at("d") == 1);
  CHECK(i.witnesses.at("root") == 1);
  const CheckReport& ii = find(rs, ClaimId::kCor1II);
  CHECK(ii.status == Status::kPass);
  CHECK(ii.witnesses.at("legendre_det") == -1);
  CHECK(ii.witnesses.at("legendre_2") == -1);

  rs = verify_corollary_1(37);
  CHECK(find(rs, ClaimId::kCor1I).status == Status::kPass);
  CHECK(find(rs, ClaimId::kCor1II).status == Status::kPass);

  rs = verify_corollary_1(7);
  CHECK(find(rs, ClaimId::kCor1I).status == Status::kSkip);
}

TEST_CASE("corollary 1 part II is vacuous at p = 1117") {
  const auto rs = verify_corollary_1(1117);
  const CheckReport& ii = find(rs, ClaimId::kCor1II);
  CHECK(ii.status == Status::kPass);
  CHECK(ii.witnesses.at("p_divides_det") == 1);
  // part I needs an exact determinant above the default cap
  CHECK(find(rs, ClaimId::kCor1I).status == Status::kSkip);
}

TEST_CASE("remark prime list") {
  CheckReport r = verify_remark_prime_list(1117);
  CHECK(r.status == Status::kPass);
  CHECK(r.witnesses.at("listed") == 1);
  CHECK(r.witnesses.at("p_divides_det") == 1);
  r = verify_remark_prime_list(13);
  CHECK(r.status == Status::kPass);
  CHECK(r.witnesses.at("p_divides_det") == 0);
  CHECK(verify_remark_prime_list(3037).status == Status::kSkip);  // 3037 = 1 mod 12, past the list bound
  CHECK(verify_remark_prime_list(7).status == Status::kSkip);
}

TEST_CASE("theorem C") {
  CheckReport r = verify_theorem_C(7, 2);
  CHECK(r.status == Status::kPass);
  CHECK(r.witnesses.at("det_I_mod_p") == 1);
  CHECK(r.witnesses.at("predicted_mod_p") == 1);
  CHECK(r.witnesses.at("legendre_2") == 1);
  CHECK(verify_theorem_C(13, 2).status == Status::kSkip);
  CHECK(verify_theorem_C(13, 3).status == Status::kSkip);
  for (std::uint64_t p : {11ULL, 19ULL, 23ULL, 43ULL, 67ULL, 103ULL})
    CHECK(verify_theorem_C(p, 2).status == Status::kPass);
}

TEST_CASE("background claims for k = 2") {
  auto rs = verify_sun_background(7);
  CHECK(find(rs, ClaimId::kSunS1P).status == Status::kPass);
  CHECK(find(rs, ClaimId::kSunAP).status == Status::kPass);
  CHECK(find(rs, ClaimId::kSunBP).status == Status::kSkip);

  rs = verify_sun_background(13);
  const CheckReport& s = find(rs, ClaimId::kSunS1P);
  CHECK(s.status == Status::kPass);
  CHECK(s.witnesses.at("a") == -3);
  CHECK(find(rs, ClaimId::kSunAP).status == Status::kSkip);

  rs = verify_sun_background(5);
  CHECK(find(rs, ClaimId::kSunBP).status == Status::kPass);
}

TEST_CASE("carlitz closed forms") {
  CheckReport r = verify_carlitz(3, 0);
  CHECK(r.status == Status::kPass);
  CHECK(r.witnesses.at("printed_form_matches") == 1);
  CHECK(r.witnesses.at("trace_corrected_form_matches") == 1);

  r = verify_carlitz(3, 1);
  CHECK(r.status == Status::kPass);
  CHECK(r.witnesses.at("printed_form_matches") == 0);
  CHECK(r.witnesses.at("trace_corrected_form_matches") == 1);
  CHECK(carlitz_printed_form(3, 1).to_string() == "t^2 - 1");
  CHECK(carlitz_trace_corrected_form(3, 1).to_string() == "t^2 - 2t + 1");

  r = verify_carlitz(5, 0);
  CHECK(r.status == Status::kPass);
  CHECK(carlitz_trace_corrected_form(5, 0).to_string() == "t^4 - 6t^2 + 5");

  CHECK(verify_carlitz(37, 1).status == Status::kSkip);
}

TEST_CASE("lemma: random palindromic circulants") {
  const CheckReport r = verify_lemma_2_1_random(42, 1000);
  CHECK(r.status == Status::kPass);
  CHECK(r.witnesses.at("trials") == 1000);
  // same seed, same tuples
  PalindromicTupleGenerator a(7), b(7);
  for (int i = 0; i < 20; ++i) {
    const auto t = a.next();
    CHECK(t == b.next());
    CHECK(t.size() >= 1);
    CHECK(t.size() <= 12);
    for (std::size_t j = 1; j < t.size(); ++j) CHECK(t[j] == t[t.size() - j]);
    for (const auto& v : t) CHECK(abs(v) <= 9);
  }
}

TEST_CASE("witnesses reproduce the determinant, p <= 150") {
  for (std::uint64_t p = 3; p <= 150; p += 2) {
    if (!is_prime(p)) continue;
    for (std::uint64_t k = 2; k < p; ++k) {
      if ((p - 1) % k != 0) continue;
      PairContext ctx(PrimeModulus(p), k, {});
      if (k % 2 == 0) {
        const CheckReport r = verify_theorem_A(ctx);
        REQUIRE(r.status == Status::kPass);
        const BigInt det = r.witnesses.at("det");
        const BigInt a1 = r.witnesses.at("a") + 1;
        if (r.claim == ClaimId::kThmAI) {
          const BigInt u = r.witnesses.at("u");
          REQUIRE(k * det + a1 * u * u == 0);
        } else {
          const BigInt v = r.witnesses.at("v");
          REQUIRE(k * k * det == a1 * r.witnesses.at("b") * v * v);
        }
      } else {
        const CheckReport r = verify_theorem_B(ctx);
        REQUIRE(r.status == Status::kPass);
        const BigInt det = r.witnesses.at("det");
        if (p % 4 == 1) {
          const BigInt z = r.witnesses.at("z"), c = r.witnesses.at("c"), d = r.witnesses.at("d");
          REQUIRE(4 * k * k * det == z * z * (c * c + d * d));
        } else {
          REQUIRE(((p - 1) / k) % 4 == 2);
          REQUIRE(is_perfect_square(-det));
        }
        REQUIRE(verify_corollary_2(ctx).status == Status::kPass);
      }
    }
  }
}
