#pragma once

// Trace terms of the curves y^2 = f(x) over F_p with one point at infinity:
//
//   p + 1 - trace = #{(x, y) : y^2 = f(x)} + 1,  so  trace = -sum_x (f(x)/p).
//
// Families (k | p - 1):
//   a: f = x^k + 1          b: f = x (x^k + 1)
//   c: f = x (x^{2k} + 1)   d: f = x (x^{2k} + g^k)   (c, d for odd k)
//
// Two independent backends: a quadratic-character sum (Legendre table) and
// a literal point count over a table of squares.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "resdet/modular.hpp"
#include "resdet/polynomial.hpp"

namespace resdet {

enum class CurveFamily { kA, kB, kC, kD };

const char* family_name(CurveFamily f);

/// Sparse polynomial with coefficients reduced mod p, evaluated by sparse
/// Horner steps.
class ModPolynomial {
 public:
  ModPolynomial(const Polynomial& f, std::uint64_t p);
  std::uint64_t operator()(std::uint64_t x) const;
  std::uint64_t modulus() const { return p_; }

 private:
  std::uint64_t p_;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> terms_;  // (exp, coeff), exp descending
};

/// (x/p) for every residue; built only for p <= kMaxTable.
class LegendreTable {
 public:
  static constexpr std::uint64_t kMaxTable = 10'000'000;
  explicit LegendreTable(const PrimeModulus& p);
  int operator()(std::uint64_t residue) const { return table_[residue]; }

 private:
  std::vector<std::int8_t> table_;
};

std::int64_t char_sum(const Polynomial& f, const PrimeModulus& p);
std::uint64_t count_naive(const Polynomial& f, const PrimeModulus& p);

/// Defining polynomial of a family. `twist` is the constant in family d.
Polynomial curve_polynomial(CurveFamily family, std::uint64_t k, std::uint64_t twist = 1);

/// Degree of the defining polynomial.
std::uint64_t curve_degree(CurveFamily family, std::uint64_t k);

std::int64_t trace_a(const PrimeModulus& p, std::uint64_t k);
std::int64_t trace_b(const PrimeModulus& p, std::uint64_t k);
std::int64_t trace_c(const PrimeModulus& p, std::uint64_t k);
/// Uses the smallest primitive root unless g is given.
std::int64_t trace_d(const PrimeModulus& p, std::uint64_t k,
                     std::optional<std::uint64_t> g = std::nullopt);

/// Trace via count_naive: p - #affine points.
std::int64_t trace_naive(CurveFamily family, const PrimeModulus& p, std::uint64_t k,
                         std::optional<std::uint64_t> g = std::nullopt);

/// Trace via char_sum, same parameters as trace_naive.
std::int64_t trace_sum(CurveFamily family, const PrimeModulus& p, std::uint64_t k,
                       std::optional<std::uint64_t> g = std::nullopt);

/// Hasse-Weil sanity check for a squarefree f of the given degree. An even
/// degree model has two points at infinity, so the single point counted by
/// the trace definition is corrected for before comparing with 2 g sqrt(p).
bool within_weil_bound(std::int64_t trace, std::uint64_t degree, std::uint64_t p);

struct CurveCounts {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::optional<std::int64_t> c;  // odd k only
  std::optional<std::int64_t> d;  // odd k only
  std::uint64_t g_used = 0;
};

CurveCounts curve_counts(const ResidueSystem& rs);

}  // namespace resdet
