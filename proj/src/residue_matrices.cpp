#include "resdet/residue_matrices.hpp"

#include <string>

#include "resdet/error.hpp"

namespace resdet {

void SignMatrix::set(std::size_t i, std::size_t j, int v) {
  if (v < -1 || v > 1) throw InvalidArgument("SignMatrix entries must be -1, 0 or 1");
  data_[i * n_ + j] = static_cast<std::int8_t>(v);
}

BigMatrix SignMatrix::to_big() const {
  BigMatrix m(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) m(i, j) = (*this)(i, j);
  return m;
}

ModMatrix SignMatrix::to_mod(std::uint64_t p) const {
  ModMatrix m(n_, p);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) m.set_signed(i, j, (*this)(i, j));
  return m;
}

bool SignMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

SignMatrix build_W(const ResidueSystem& rs) {
  SignMatrix w(rs.m);
  const std::uint64_t p = rs.p.value();
  for (std::size_t i = 0; i < rs.m; ++i)
    for (std::size_t j = 0; j < rs.m; ++j)
      w.set(i, j, jacobi((rs.alphas[i] + rs.alphas[j]) % p, p));
  return w;
}

ModMatrix build_I(const ResidueSystem& rs) {
  if (rs.minus_one_is_residue()) {
    throw ZeroDenominator("-1 is a " + std::to_string(rs.k) + "-th power residue mod " +
                          std::to_string(rs.p.value()) + ", so some a_i + a_j = 0");
  }
  const std::uint64_t p = rs.p.value();
  ModMatrix out(rs.m, p);
  for (std::size_t i = 0; i < rs.m; ++i)
    for (std::size_t j = 0; j < rs.m; ++j)
      out.set(i, j, inv_mod_u64((rs.alphas[i] + rs.alphas[j]) % p, p));
  return out;
}

SignMatrix build_S(std::int64_t d, const PrimeModulus& p) {
  if (pow_mod(d, 1, p.value()) == 0) {
    throw InvalidArgument("S(d,p) needs p not dividing d; d = " + std::to_string(d));
  }
  const std::uint64_t pv = p.value();
  const std::size_t n = (pv - 1) / 2;
  const std::uint64_t dm = pow_mod(d, 1, pv);
  SignMatrix s(n);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) {
      const std::uint64_t v = (mul_mod(i, i, pv) + mul_mod(dm, mul_mod(j, j, pv), pv)) % pv;
      s.set(i - 1, j - 1, jacobi(v, pv));
    }
  return s;
}

namespace {

template <typename Denominator>
ModMatrix inverse_matrix(const PrimeModulus& p, std::size_t n, const char* name,
                         Denominator&& den) {
  const std::uint64_t pv = p.value();
  ModMatrix out(n, pv);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) {
      const std::uint64_t v = den(i, j) % pv;
      if (v == 0) {
        throw ZeroDenominator(std::string(name) + ": denominator at (" + std::to_string(i) +
                              ", " + std::to_string(j) + ") vanishes mod " + std::to_string(pv));
      }
      out.set(i - 1, j - 1, inv_mod_u64(v, pv));
    }
  return out;
}

}  // namespace

ModMatrix build_A(const PrimeModulus& p) {
  const std::uint64_t pv = p.value();
  return inverse_matrix(p, (pv - 1) / 2, "A_p", [pv](std::uint64_t i, std::uint64_t j) {
    return (mul_mod(i, i, pv) + mul_mod(j, j, pv)) % pv;
  });
}

ModMatrix build_B(const PrimeModulus& p) {
  const std::uint64_t pv = p.value();
  return inverse_matrix(p, pv - 1, "B_p", [pv](std::uint64_t i, std::uint64_t j) {
    // i^2 - ij + j^2 with every term already in [0, p)
    const std::uint64_t sq = (mul_mod(i, i, pv) + mul_mod(j, j, pv)) % pv;
    const std::uint64_t ij = mul_mod(i, j, pv);
    return (sq + pv - ij) % pv;
  });
}

BigMatrix build_carlitz(const PrimeModulus& p, std::int64_t mu) {
  const std::size_t n = p.value() - 1;
  BigMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m(i, j) = from_i64(mu + legendre(static_cast<std::int64_t>(i) - static_cast<std::int64_t>(j), p));
  return m;
}

std::vector<BigInt> w_circulant_tuple(const ResidueSystem& rs) {
  const std::uint64_t p = rs.p.value();
  const std::uint64_t step = pow_mod(static_cast<std::int64_t>(rs.g), rs.k, p);
  std::vector<BigInt> e;
  e.reserve(rs.m);
  std::uint64_t x = 1;
  for (std::uint64_t i = 0; i < rs.m; ++i) {
    e.emplace_back(jacobi((1 + x) % p, p));
    x = mul_mod(x, step, p);
  }
  return e;
}

std::vector<BigInt> s_circulant_tuple(std::int64_t d, const PrimeModulus& p) {
  const std::uint64_t pv = p.value();
  const std::uint64_t g = primitive_root(p);
  const std::uint64_t step = mul_mod(g, g, pv);
  const std::uint64_t dm = pow_mod(d, 1, pv);
  std::vector<BigInt> s;
  std::uint64_t x = 1;
  for (std::uint64_t i = 0; i < (pv - 1) / 2; ++i) {
    s.emplace_back(jacobi((x + dm) % pv, pv));
    x = mul_mod(x, step, pv);
  }
  return s;
}

}  // namespace resdet
