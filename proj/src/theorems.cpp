#include "resdet/theorems.hpp"

#include <algorithm>
#include <string>

#include "resdet/circulant.hpp"
#include "resdet/error.hpp"
#include "resdet/residue_matrices.hpp"

namespace resdet {

namespace {

struct ClaimEntry {
  ClaimId id;
  std::string_view name;
};

constexpr ClaimEntry kClaimNames[] = {
    {ClaimId::kThmAI, "THM_A_I"},
    {ClaimId::kThmAII, "THM_A_II"},
    {ClaimId::kThmBI, "THM_B_I"},
    {ClaimId::kThmBII, "THM_B_II"},
    {ClaimId::kCor1I, "COR_1_I"},
    {ClaimId::kCor1II, "COR_1_II"},
    {ClaimId::kCor2, "COR_2"},
    {ClaimId::kThmC, "THM_C"},
    {ClaimId::kRemarkPrimeList, "REMARK_PRIME_LIST"},
    {ClaimId::kSunS1P, "SUN_S1P"},
    {ClaimId::kSunAP, "SUN_AP"},
    {ClaimId::kSunBP, "SUN_BP"},
    {ClaimId::kCarlitzFmu, "CARLITZ_FMU"},
    {ClaimId::kLemma21, "LEMMA_2_1"},
};

using Clock = std::chrono::steady_clock;

// Fills claim, p, k and elapsed time around a check body.
class ReportScope {
 public:
  ReportScope(ClaimId claim, std::uint64_t p, std::uint64_t k) : start_(Clock::now()) {
    report_.claim = claim;
    report_.p = p;
    report_.k = k;
  }
  CheckReport& report() { return report_; }

  CheckReport skip(std::string why) {
    report_.status = Status::kSkip;
    report_.detail = std::move(why);
    return finish();
  }
  CheckReport finish() {
    report_.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start_).count();
    return std::move(report_);
  }

 private:
  Clock::time_point start_;
  CheckReport report_;
};

std::string describe(FactorCheck c) {
  switch (c) {
    case FactorCheck::kCertified: return "certified";
    case FactorCheck::kInexactQuotient: return "determinant not divisible by the predicted factor";
    case FactorCheck::kNonSquareQuotient: return "quotient is not a perfect square";
    case FactorCheck::kNonzeroDegenerate: return "predicted factor is zero but determinant is not";
  }
  return "?";
}

BigInt big(std::int64_t v) { return from_i64(v); }
BigInt big(std::uint64_t v) { return from_u64(v); }

std::string cap_reason(const char* what, std::uint64_t cap) {
  return std::string("p above ") + what + " cap " + std::to_string(cap);
}

}  // namespace

std::string_view claim_name(ClaimId id) {
  for (const auto& e : kClaimNames)
    if (e.id == id) return e.name;
  return "?";
}

std::optional<ClaimId> parse_claim(std::string_view name) {
  for (const auto& e : kClaimNames)
    if (e.name == name) return e.id;
  return std::nullopt;
}

std::string_view status_name(Status s) {
  switch (s) {
    case Status::kPass: return "PASS";
    case Status::kFail: return "FAIL";
    case Status::kSkip: return "SKIP";
    case Status::kFatal: return "FATAL";
  }
  return "?";
}

std::optional<Status> parse_status(std::string_view name) {
  for (Status s : {Status::kPass, Status::kFail, Status::kSkip, Status::kFatal})
    if (status_name(s) == name) return s;
  return std::nullopt;
}

int severity(Status s) {
  switch (s) {
    case Status::kPass:
    case Status::kSkip: return 0;
    case Status::kFail: return 1;
    case Status::kFatal: return 2;
  }
  return 0;
}

// ---------------------------------------------------------------------------

PairContext::PairContext(const PrimeModulus& p, std::uint64_t k, const SuiteOptions& opts)
    : p_(p), k_(k), opts_(opts) {}

const ResidueSystem& PairContext::residues() {
  if (!rs_) rs_ = kth_power_residues(p_, k_);
  return *rs_;
}

const BigInt& PairContext::det_w() {
  if (!det_) det_ = det_exact(build_W(residues()).to_big(), opts_.det);
  return *det_;
}

std::uint64_t PairContext::det_w_mod_p() {
  if (!det_mod_p_) {
    det_mod_p_ = det_ ? mod_u64(*det_, p_.value()) : det_mod(build_W(residues()).to_mod(p_.value()));
  }
  return *det_mod_p_;
}

const CurveCounts& PairContext::counts() {
  if (!counts_) counts_ = curve_counts(residues());
  return *counts_;
}

// ---------------------------------------------------------------------------
// k even

CheckReport verify_theorem_A(PairContext& ctx) {
  const std::uint64_t p = ctx.p().value();
  const std::uint64_t k = ctx.k();
  const bool m_even = ctx.k_divides() && ((p - 1) / k) % 2 == 0;
  ReportScope scope(m_even ? ClaimId::kThmAII : ClaimId::kThmAI, p, k);
  if (!ctx.k_divides()) return scope.skip("k must be >= 2 and divide p - 1");
  if (k % 2 != 0) return scope.skip("k is odd");
  if (p > ctx.options().exact_cap) return scope.skip(cap_reason("exact-determinant", ctx.options().exact_cap));

  const ResidueSystem& rs = ctx.residues();
  const BigInt& det = ctx.det_w();
  const CurveCounts& cc = ctx.counts();
  CheckReport& r = scope.report();
  r.g = rs.g;
  r.witnesses["det"] = det;
  r.witnesses["m"] = big(rs.m);
  r.witnesses["a"] = big(cc.a);

  const BigInt kk = big(k);
  const BigInt a_plus_1 = big(cc.a) + 1;
  SquareQuotient sq;
  if (!m_even) {
    // det = -(a+1) u^2 / k
    sq = square_quotient(-kk * det, a_plus_1);
    if (sq.root) r.witnesses["u"] = *sq.root;
  } else {
    // det = (a+1) b v^2 / k^2
    r.witnesses["b"] = big(cc.b);
    sq = square_quotient(kk * kk * det, a_plus_1 * big(cc.b));
    if (sq.root) r.witnesses["v"] = *sq.root;
  }

  // The Gram matrix in generator order is the circulant C(e_0, ..., e_{m-1}).
  const auto tuple = w_circulant_tuple(rs);
  const SymmetricFactorization fs = factor_symmetric(tuple, ctx.options().det);
  r.witnesses["det_circulant"] = fs.det;
  if (fs.witness) r.witnesses["circulant_witness"] = *fs.witness;

  if (fs.det != det) {
    r.status = Status::kFatal;
    r.detail = "circulant determinant differs from det W";
  } else if (fs.check != FactorCheck::kCertified) {
    r.status = Status::kFatal;
    r.detail = "circulant factorization: " + describe(fs.check);
  } else if (sq.check != FactorCheck::kCertified) {
    r.status = Status::kFatal;
    r.detail = describe(sq.check);
  } else {
    r.status = Status::kPass;
  }
  return scope.finish();
}

CheckReport verify_theorem_C(PairContext& ctx) {
  const std::uint64_t p = ctx.p().value();
  const std::uint64_t k = ctx.k();
  ReportScope scope(ClaimId::kThmC, p, k);
  if (!ctx.k_divides()) return scope.skip("k must be >= 2 and divide p - 1");
  if (k % 2 != 0) return scope.skip("k is odd");
  if (p > ctx.options().modp_cap) return scope.skip(cap_reason("mod-p", ctx.options().modp_cap));
  const ResidueSystem& rs = ctx.residues();
  if (rs.minus_one_is_residue()) return scope.skip("-1 is a k-th power residue");

  CheckReport& r = scope.report();
  r.g = rs.g;
  r.witnesses["m"] = big(rs.m);
  if (rs.m % 2 == 0) {
    r.status = Status::kFatal;
    r.detail = "m is even although -1 is not a k-th power residue";
    return scope.finish();
  }
  const std::uint64_t det_i = det_mod(build_I(rs));
  const std::uint64_t sign = ((rs.m + 1) / 2) % 2 == 0 ? 1 : p - 1;
  const std::uint64_t rhs =
      mul_mod(sign, inv_mod_u64(pow_mod(static_cast<std::int64_t>(2 * k), rs.m, p), p), p);
  r.witnesses["det_I_mod_p"] = big(det_i);
  r.witnesses["predicted_mod_p"] = big(rhs);

  r.status = det_i == rhs ? Status::kPass : Status::kFatal;
  if (r.status != Status::kPass) r.detail = "det I_p(k) does not match (-1)^((m+1)/2) / (2k)^m";

  if (k == 2 && p % 4 == 3 && r.status == Status::kPass) {
    // (-1)^((p+1)/4) = (2/p), and det I_p(2) equals it.
    const std::int64_t power_sign = ((p + 1) / 4) % 2 == 0 ? 1 : -1;
    const int two = legendre(2, ctx.p());
    const std::uint64_t as_residue = two == 1 ? 1 : p - 1;
    r.witnesses["legendre_2"] = two;
    if (power_sign != two || det_i != as_residue) {
      r.status = Status::kFatal;
      r.detail = "k = 2 specialization (-1)^((p+1)/4) = (2/p) fails";
    }
  }
  return scope.finish();
}

// ---------------------------------------------------------------------------
// k odd

namespace {

// Shared sign law; empty string when it holds.
std::string sign_law_violation(std::uint64_t p, const BigInt& det) {
  if (p % 4 == 1 && sgn(det) < 0) return "det W < 0 although p = 1 mod 4";
  if (p % 4 == 3 && sgn(det) > 0) return "det W > 0 although p = 3 mod 4";
  return {};
}

std::optional<std::string> odd_k_skip(PairContext& ctx) {
  if (!ctx.k_divides()) return "k must be >= 2 and divide p - 1";
  if (ctx.k() % 2 == 0) return "k is even";
  if (ctx.p().value() > ctx.options().exact_cap)
    return cap_reason("exact-determinant", ctx.options().exact_cap);
  return std::nullopt;
}

}  // namespace

CheckReport verify_theorem_B(PairContext& ctx) {
  const std::uint64_t p = ctx.p().value();
  const std::uint64_t k = ctx.k();
  ReportScope scope(p % 4 == 1 ? ClaimId::kThmBI : ClaimId::kThmBII, p, k);
  if (auto why = odd_k_skip(ctx)) return scope.skip(*why);

  const ResidueSystem& rs = ctx.residues();
  const BigInt& det = ctx.det_w();
  CheckReport& r = scope.report();
  r.g = rs.g;
  r.witnesses["det"] = det;
  r.witnesses["m"] = big(rs.m);

  std::string problem = sign_law_violation(p, det);
  if (p % 4 == 1) {
    const CurveCounts& cc = ctx.counts();
    const BigInt c = big(*cc.c);
    const BigInt d = big(*cc.d);
    const BigInt norm = c * c + d * d;
    r.witnesses["c"] = c;
    r.witnesses["d"] = d;
    if (problem.empty()) {
      if (sgn(det) != 0 && sgn(norm) == 0) {
        problem = "c^2 + d^2 = 0 while det W != 0";
      } else {
        const BigInt kk = big(k);
        const SquareQuotient sq = square_quotient(4 * kk * kk * det, norm);
        if (sq.root) r.witnesses["z"] = *sq.root;
        if (sq.check != FactorCheck::kCertified) problem = describe(sq.check);
      }
    }
  } else {
    if (rs.m % 4 != 2) problem = "m is not 2 mod 4 for p = 3 mod 4 and odd k";
    if (problem.empty()) {
      auto root = is_perfect_square(-det);
      if (root) r.witnesses["root"] = *root;
      else problem = "-det W is not a perfect square";
    }
  }
  r.status = problem.empty() ? Status::kPass : Status::kFatal;
  r.detail = std::move(problem);
  return scope.finish();
}

CheckReport verify_corollary_2(PairContext& ctx) {
  ReportScope scope(ClaimId::kCor2, ctx.p().value(), ctx.k());
  if (auto why = odd_k_skip(ctx)) return scope.skip(*why);
  const BigInt& det = ctx.det_w();
  CheckReport& r = scope.report();
  r.g = ctx.residues().g;
  r.witnesses["det"] = det;
  r.witnesses["sign"] = sgn(det);
  r.detail = sign_law_violation(ctx.p().value(), det);
  r.status = r.detail.empty() ? Status::kPass : Status::kFatal;
  return scope.finish();
}

std::vector<CheckReport> verify_corollary_1(PairContext& ctx) {
  const std::uint64_t p = ctx.p().value();
  const SuiteOptions& opts = ctx.options();
  std::vector<CheckReport> out;

  // Part (i): exact determinant.
  {
    ReportScope scope(ClaimId::kCor1I, p, ctx.k());
    if (ctx.k() != 3) {
      out.push_back(scope.skip("k must be 3"));
    } else if (p % 12 != 1) {
      out.push_back(scope.skip("p is not 1 mod 12"));
    } else if (p > opts.exact_cap) {
      out.push_back(scope.skip(cap_reason("exact-determinant", opts.exact_cap)));
    } else {
      CheckReport& r = scope.report();
      r.g = ctx.residues().g;
      const auto rep = two_square_decompose(ctx.p(), 9);
      if (!rep) {
        r.status = Status::kFatal;
        r.detail = "no representation p = c^2 + 9 d^2";
      } else {
        const BigInt c = big(rep->x);
        const BigInt d = big(rep->y);
        const BigInt norm = c * c + d * d;
        const BigInt& det = ctx.det_w();
        r.witnesses["det"] = det;
        r.witnesses["c"] = c;
        r.witnesses["d"] = d;
        // (c_p(3)^2 + d_p(3)^2) / 36 = c^2 + d^2 links this to the trace terms.
        const CurveCounts& cc = ctx.counts();
        const BigInt traces = big(*cc.c) * big(*cc.c) + big(*cc.d) * big(*cc.d);
        r.witnesses["trace_norm"] = traces;
        const SquareQuotient sq = square_quotient(det, norm);
        if (sq.root) r.witnesses["root"] = *sq.root;
        if (sq.check != FactorCheck::kCertified) {
          r.status = Status::kFatal;
          r.detail = "det / (c^2 + d^2): " + describe(sq.check);
        } else if (traces != 36 * norm) {
          r.status = Status::kFail;
          r.detail = "c_p(3)^2 + d_p(3)^2 != 36 (c^2 + d^2)";
        } else {
          r.status = Status::kPass;
        }
      }
      out.push_back(scope.finish());
    }
  }

  // Part (ii): only det mod p is needed.
  {
    ReportScope scope(ClaimId::kCor1II, p, ctx.k());
    if (ctx.k() != 3) {
      out.push_back(scope.skip("k must be 3"));
    } else if (p % 12 != 1) {
      out.push_back(scope.skip("p is not 1 mod 12"));
    } else if (p > opts.modp_cap) {
      out.push_back(scope.skip(cap_reason("mod-p", opts.modp_cap)));
    } else {
      CheckReport& r = scope.report();
      r.g = ctx.residues().g;
      const std::uint64_t residue = ctx.det_w_mod_p();
      r.witnesses["det_mod_p"] = big(residue);
      r.witnesses["p_divides_det"] = residue == 0 ? 1 : 0;
      if (residue == 0) {
        r.status = Status::kPass;
        r.detail = "p divides det W_p(3); Legendre identity vacuous";
      } else {
        const int lhs = jacobi(residue, p);
        const int rhs = legendre(2, ctx.p());
        r.witnesses["legendre_det"] = lhs;
        r.witnesses["legendre_2"] = rhs;
        r.status = lhs == rhs ? Status::kPass : Status::kFatal;
        if (lhs != rhs) r.detail = "(det W_p(3) / p) != (2/p)";
      }
      out.push_back(scope.finish());
    }
  }
  return out;
}

CheckReport verify_remark_prime_list(PairContext& ctx) {
  const std::uint64_t p = ctx.p().value();
  ReportScope scope(ClaimId::kRemarkPrimeList, p, ctx.k());
  if (ctx.k() != 3) return scope.skip("k must be 3");
  if (p % 12 != 1) return scope.skip("p is not 1 mod 12");
  if (p >= kPublishedListBound) return scope.skip("p outside the published range p < 3000");
  if (p > ctx.options().modp_cap) return scope.skip(cap_reason("mod-p", ctx.options().modp_cap));

  CheckReport& r = scope.report();
  r.g = ctx.residues().g;
  const std::uint64_t residue = ctx.det_w_mod_p();
  const bool divides = residue == 0;
  const bool listed = std::find(std::begin(kPublishedDivisorPrimes), std::end(kPublishedDivisorPrimes),
                                p) != std::end(kPublishedDivisorPrimes);
  r.witnesses["det_mod_p"] = big(residue);
  r.witnesses["p_divides_det"] = divides ? 1 : 0;
  r.witnesses["listed"] = listed ? 1 : 0;
  r.status = divides == listed ? Status::kPass : Status::kFail;
  if (divides != listed) {
    r.detail = divides ? "p divides det W_p(3) but is not in the published list"
                       : "p is in the published list but does not divide det W_p(3)";
  }
  return scope.finish();
}

// ---------------------------------------------------------------------------
// Per-prime background claims

std::vector<CheckReport> verify_sun_background(PairContext& ctx) {
  const PrimeModulus& pm = ctx.p();
  const std::uint64_t p = pm.value();
  const SuiteOptions& opts = ctx.options();
  std::vector<CheckReport> out;

  {
    ReportScope scope(ClaimId::kSunS1P, p, 0);
    if (p > opts.exact_cap) {
      out.push_back(scope.skip(cap_reason("exact-determinant", opts.exact_cap)));
    } else {
      CheckReport& r = scope.report();
      const BigInt s = det_exact(build_S(1, pm).to_big(), opts.det);
      r.witnesses["S"] = s;
      std::string problem;
      if (p % 4 == 3) {
        auto root = is_perfect_square(-s);
        if (root) r.witnesses["root"] = *root;
        else problem = "-S(1,p) is not a perfect square";
      } else {
        const auto rep = two_square_decompose(pm, 4);
        if (!rep) {
          problem = "no representation p = a^2 + 4 b^2";
        } else {
          const BigInt a = big(rep->normalized_odd());
          r.witnesses["a"] = a;
          const SquareQuotient sq = square_quotient(s, a);
          if (sq.root) r.witnesses["root"] = *sq.root;
          if (sq.check != FactorCheck::kCertified) problem = "S(1,p)/a: " + describe(sq.check);
        }
      }
      // S(1,p) is det W_p(2) with rows and columns permuted alike.
      if (problem.empty() && ctx.k() == 2) {
        r.witnesses["det_W2"] = ctx.det_w();
        if (ctx.det_w() != s) problem = "S(1,p) differs from det W_p(2)";
      }
      if (problem.empty() && p <= opts.identity_cap) {
        const BigInt circ = det_exact(circulant(s_circulant_tuple(1, pm)), opts.det);
        r.witnesses["det_circulant"] = circ;
        if (circ != s) problem = "S(1,p) differs from its circulant form";
      }
      r.status = problem.empty() ? Status::kPass : Status::kFatal;
      r.detail = std::move(problem);
      out.push_back(scope.finish());
    }
  }

  {
    ReportScope scope(ClaimId::kSunAP, p, 0);
    if (p % 4 != 3) {
      out.push_back(scope.skip("p is not 3 mod 4"));
    } else if (p > opts.modp_cap) {
      out.push_back(scope.skip(cap_reason("mod-p", opts.modp_cap)));
    } else {
      CheckReport& r = scope.report();
      const std::uint64_t det = det_mod(build_A(pm));
      const int two = legendre(2, pm);
      r.witnesses["det_mod_p"] = big(det);
      r.witnesses["legendre_2"] = two;
      const std::uint64_t expect = two == 1 ? 1 : p - 1;
      r.status = det == expect ? Status::kPass : Status::kFatal;
      if (det != expect) r.detail = "A_p is not (2/p) mod p";
      out.push_back(scope.finish());
    }
  }

  {
    ReportScope scope(ClaimId::kSunBP, p, 0);
    if (p % 3 != 2) {
      out.push_back(scope.skip("p is not 2 mod 3"));
    } else if (p > opts.bp_cap) {
      out.push_back(scope.skip(cap_reason("B_p", opts.bp_cap)));
    } else {
      CheckReport& r = scope.report();
      const std::uint64_t det = det_mod(build_B(pm));
      const std::uint64_t twice = mul_mod(2, det, p);
      r.witnesses["det_mod_p"] = big(det);
      const int chi = jacobi(twice, p);
      r.witnesses["legendre_2B"] = chi;
      r.status = chi == 1 ? Status::kPass : Status::kFatal;
      if (chi != 1) r.detail = "2 B_p is not a nonzero quadratic residue mod p";
      out.push_back(scope.finish());
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Fresh-context overloads

namespace {

PairContext make_context(std::uint64_t p, std::uint64_t k, const SuiteOptions& opts) {
  return PairContext(PrimeModulus(p, opts.validation), k, opts);
}

}  // namespace

CheckReport verify_theorem_A(std::uint64_t p, std::uint64_t k, const SuiteOptions& opts) {
  auto ctx = make_context(p, k, opts);
  return verify_theorem_A(ctx);
}

CheckReport verify_theorem_B(std::uint64_t p, std::uint64_t k, const SuiteOptions& opts) {
  auto ctx = make_context(p, k, opts);
  return verify_theorem_B(ctx);
}

CheckReport verify_corollary_2(std::uint64_t p, std::uint64_t k, const SuiteOptions& opts) {
  auto ctx = make_context(p, k, opts);
  return verify_corollary_2(ctx);
}

std::vector<CheckReport> verify_corollary_1(std::uint64_t p, const SuiteOptions& opts) {
  auto ctx = make_context(p, 3, opts);
  return verify_corollary_1(ctx);
}

CheckReport verify_remark_prime_list(std::uint64_t p, const SuiteOptions& opts) {
  auto ctx = make_context(p, 3, opts);
  return verify_remark_prime_list(ctx);
}

CheckReport verify_theorem_C(std::uint64_t p, std::uint64_t k, const SuiteOptions& opts) {
  auto ctx = make_context(p, k, opts);
  return verify_theorem_C(ctx);
}

std::vector<CheckReport> verify_sun_background(std::uint64_t p, const SuiteOptions& opts) {
  auto ctx = make_context(p, 2, opts);
  return verify_sun_background(ctx);
}

// ---------------------------------------------------------------------------
// Carlitz

namespace {

Polynomial carlitz_form(std::uint64_t p, std::int64_t mu, bool with_trace) {
  const std::int64_t eps = ((p - 1) / 2) % 2 == 0 ? 1 : -1;
  const auto pp = static_cast<std::int64_t>(p);
  const Polynomial base({big(-eps * pp), 0, 1});
  const BigInt mu_term = big(pp - 1) * big(mu);
  Polynomial last = with_trace ? Polynomial({big(-eps), -mu_term, 1})
                               : Polynomial({-mu_term - eps, 0, 1});
  return pow(base, static_cast<unsigned>((p - 3) / 2)) * last;
}

}  // namespace

Polynomial carlitz_printed_form(std::uint64_t p, std::int64_t mu) {
  return carlitz_form(p, mu, false);
}

Polynomial carlitz_trace_corrected_form(std::uint64_t p, std::int64_t mu) {
  return carlitz_form(p, mu, true);
}

CheckReport verify_carlitz(std::uint64_t p, std::int64_t mu, const SuiteOptions& opts) {
  const PrimeModulus pm(p, opts.validation);
  ReportScope scope(ClaimId::kCarlitzFmu, p, 0);
  CheckReport& r = scope.report();
  r.witnesses["mu"] = big(mu);
  if (p > opts.carlitz_cap) return scope.skip(cap_reason("Carlitz", opts.carlitz_cap));

  const Polynomial cp = char_poly(build_carlitz(pm, mu));
  const bool printed = cp == carlitz_printed_form(p, mu);
  const bool corrected = cp == carlitz_trace_corrected_form(p, mu);
  r.witnesses["printed_form_matches"] = printed ? 1 : 0;
  r.witnesses["trace_corrected_form_matches"] = corrected ? 1 : 0;
  for (std::size_t i = 0; i < cp.coeffs().size(); ++i)
    r.witnesses["coef_" + std::to_string(i)] = cp.coeffs()[i];

  r.status = corrected ? Status::kPass : Status::kFail;
  if (!corrected) {
    r.detail = "characteristic polynomial matches neither closed form: " + cp.to_string();
  } else if (!printed) {
    r.detail = "printed last factor lacks the -(p-1)mu t term; trace-corrected form matches";
  }
  return scope.finish();
}

// ---------------------------------------------------------------------------
// Random palindromic circulants

std::vector<BigInt> PalindromicTupleGenerator::next() {
  const std::size_t n = 1 + rng_() % 12;
  std::vector<BigInt> t(n);
  for (std::size_t i = 0; i <= n / 2; ++i) {
    const auto v = static_cast<long>(rng_() % 19) - 9;
    t[i] = v;
    if (i != 0) t[n - i] = v;
  }
  return t;
}

CheckReport verify_lemma_2_1_random(std::uint64_t seed, std::uint64_t trials) {
  ReportScope scope(ClaimId::kLemma21, 0, 0);
  CheckReport& r = scope.report();
  r.witnesses["seed"] = big(seed);
  r.witnesses["trials"] = big(trials);
  PalindromicTupleGenerator gen(seed);
  std::uint64_t zero_det = 0;
  BigInt max_witness = 0;
  r.status = Status::kPass;
  for (std::uint64_t t = 0; t < trials; ++t) {
    const auto tuple = gen.next();
    const SymmetricFactorization fs = factor_symmetric(tuple);
    const bool reproduces =
        fs.witness && fs.det == fs.factor_product() * *fs.witness * *fs.witness;
    if (fs.check != FactorCheck::kCertified || !reproduces) {
      r.status = Status::kFatal;
      std::string text;
      for (const auto& v : tuple) text += (text.empty() ? "" : ",") + v.get_str();
      r.detail = "trial " + std::to_string(t) + " tuple (" + text + "): " + describe(fs.check);
      r.witnesses["failing_trial"] = big(t);
      r.witnesses["failing_det"] = fs.det;
      break;
    }
    if (sgn(fs.det) == 0) ++zero_det;
    if (*fs.witness > max_witness) max_witness = *fs.witness;
  }
  r.witnesses["zero_determinants"] = big(zero_det);
  r.witnesses["max_witness"] = max_witness;
  return scope.finish();
}

}  // namespace resdet
