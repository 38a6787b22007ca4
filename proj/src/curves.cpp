#include "resdet/curves.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "resdet/error.hpp"

namespace resdet {

const char* family_name(CurveFamily f) {
  switch (f) {
    case CurveFamily::kA: return "a";
    case CurveFamily::kB: return "b";
    case CurveFamily::kC: return "c";
    case CurveFamily::kD: return "d";
  }
  return "?";
}

ModPolynomial::ModPolynomial(const Polynomial& f, std::uint64_t p) : p_(p) {
  const auto& c = f.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    const std::uint64_t r = mod_u64(c[i], p);
    if (r != 0) terms_.emplace_back(i, r);
  }
}

std::uint64_t ModPolynomial::operator()(std::uint64_t x) const {
  x %= p_;
  std::uint64_t acc = 0;
  std::uint64_t prev_exp = terms_.empty() ? 0 : terms_.front().first;
  for (const auto& [exp, coeff] : terms_) {
    if (prev_exp != exp) acc = mul_mod(acc, pow_mod(static_cast<std::int64_t>(x), prev_exp - exp, p_), p_);
    acc += coeff;
    if (acc >= p_) acc -= p_;
    prev_exp = exp;
  }
  if (prev_exp > 0) acc = mul_mod(acc, pow_mod(static_cast<std::int64_t>(x), prev_exp, p_), p_);
  return acc;
}

LegendreTable::LegendreTable(const PrimeModulus& p) {
  if (p.value() > kMaxTable) throw InvalidArgument("Legendre table requested above its cap");
  const auto n = static_cast<std::size_t>(p.value());
  table_.resize(n);
  for (std::size_t r = 0; r < n; ++r) table_[r] = static_cast<std::int8_t>(jacobi(r, p.value()));
}

std::int64_t char_sum(const Polynomial& f, const PrimeModulus& p) {
  const ModPolynomial fm(f, p.value());
  std::int64_t sum = 0;
  if (p.value() <= LegendreTable::kMaxTable) {
    const LegendreTable chi(p);
    for (std::uint64_t x = 0; x < p.value(); ++x) sum += chi(fm(x));
  } else {
    for (std::uint64_t x = 0; x < p.value(); ++x) sum += jacobi(fm(x), p.value());
  }
  return sum;
}

std::uint64_t count_naive(const Polynomial& f, const PrimeModulus& p) {
  const std::uint64_t pv = p.value();
  // roots[v] = #{y : y^2 = v}
  std::vector<std::uint32_t> roots(pv, 0);
  for (std::uint64_t y = 0; y < pv; ++y) ++roots[mul_mod(y, y, pv)];
  const ModPolynomial fm(f, pv);
  std::uint64_t count = 0;
  for (std::uint64_t x = 0; x < pv; ++x) count += roots[fm(x)];
  return count;
}

Polynomial curve_polynomial(CurveFamily family, std::uint64_t k, std::uint64_t twist) {
  const BigInt one = 1;
  switch (family) {
    case CurveFamily::kA:
      return Polynomial::monomial(one, k) + Polynomial::constant(one);
    case CurveFamily::kB:
      return Polynomial::monomial(one, k + 1) + Polynomial::monomial(one, 1);
    case CurveFamily::kC:
      return Polynomial::monomial(one, 2 * k + 1) + Polynomial::monomial(one, 1);
    case CurveFamily::kD:
      return Polynomial::monomial(one, 2 * k + 1) + Polynomial::monomial(from_u64(twist), 1);
  }
  return {};
}

std::uint64_t curve_degree(CurveFamily family, std::uint64_t k) {
  switch (family) {
    case CurveFamily::kA: return k;
    case CurveFamily::kB: return k + 1;
    case CurveFamily::kC:
    case CurveFamily::kD: return 2 * k + 1;
  }
  return 0;
}

namespace {

void require_divisor(const PrimeModulus& p, std::uint64_t k) {
  if (k == 0 || (p.value() - 1) % k != 0) {
    throw InvalidArgument("k = " + std::to_string(k) + " does not divide p - 1 = " +
                          std::to_string(p.value() - 1));
  }
}

void require_odd_divisor(const PrimeModulus& p, std::uint64_t k) {
  require_divisor(p, k);
  if (k < 3 || k % 2 == 0) {
    throw InvalidArgument("c and d traces need odd k >= 3, got k = " + std::to_string(k));
  }
}

Polynomial family_poly(CurveFamily family, const PrimeModulus& p, std::uint64_t k,
                       std::optional<std::uint64_t> g) {
  std::uint64_t twist = 1;
  if (family == CurveFamily::kD) {
    const std::uint64_t gen = g ? *g : primitive_root(p);
    twist = pow_mod(static_cast<std::int64_t>(gen), k, p.value());
  }
  return curve_polynomial(family, k, twist);
}

}  // namespace

std::int64_t trace_sum(CurveFamily family, const PrimeModulus& p, std::uint64_t k,
                       std::optional<std::uint64_t> g) {
  require_divisor(p, k);
  return -char_sum(family_poly(family, p, k, g), p);
}

std::int64_t trace_naive(CurveFamily family, const PrimeModulus& p, std::uint64_t k,
                         std::optional<std::uint64_t> g) {
  require_divisor(p, k);
  const std::uint64_t count = count_naive(family_poly(family, p, k, g), p);
  return static_cast<std::int64_t>(p.value()) - static_cast<std::int64_t>(count);
}

std::int64_t trace_a(const PrimeModulus& p, std::uint64_t k) {
  return trace_sum(CurveFamily::kA, p, k);
}

std::int64_t trace_b(const PrimeModulus& p, std::uint64_t k) {
  return trace_sum(CurveFamily::kB, p, k);
}

std::int64_t trace_c(const PrimeModulus& p, std::uint64_t k) {
  require_odd_divisor(p, k);
  return trace_sum(CurveFamily::kC, p, k);
}

std::int64_t trace_d(const PrimeModulus& p, std::uint64_t k, std::optional<std::uint64_t> g) {
  require_odd_divisor(p, k);
  return trace_sum(CurveFamily::kD, p, k, g);
}

bool within_weil_bound(std::int64_t trace, std::uint64_t degree, std::uint64_t p) {
  const std::int64_t genus = degree == 0 ? 0 : static_cast<std::int64_t>((degree - 1) / 2);
  const std::int64_t frobenius_trace = (degree % 2 == 0) ? trace - 1 : trace;
  // t^2 <= 4 g^2 p, in exact integers.
  const auto lhs = static_cast<__int128>(frobenius_trace) * frobenius_trace;
  const auto rhs = static_cast<__int128>(4) * genus * genus * static_cast<__int128>(p);
  return lhs <= rhs;
}

CurveCounts curve_counts(const ResidueSystem& rs) {
  CurveCounts out;
  out.g_used = rs.g;
  out.a = trace_a(rs.p, rs.k);
  out.b = trace_b(rs.p, rs.k);
  if (rs.k % 2 == 1) {
    out.c = trace_c(rs.p, rs.k);
    out.d = trace_d(rs.p, rs.k, rs.g);
  }
  return out;
}

}  // namespace resdet
