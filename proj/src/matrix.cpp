#include "resdet/matrix.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "resdet/error.hpp"

namespace resdet {

BigMatrix::BigMatrix(std::size_t n, std::vector<BigInt> row_major)
    : n_(n), data_(std::move(row_major)) {
  if (data_.size() != n * n) throw InvalidArgument("BigMatrix: entry count is not n*n");
}

BigMatrix BigMatrix::identity(std::size_t n) {
  BigMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

BigMatrix BigMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  BigMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw InvalidArgument("BigMatrix: rows must be square");
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = from_i64(rows[i][j]);
  }
  return m;
}

BigMatrix BigMatrix::operator*(const BigMatrix& o) const {
  if (o.n_ != n_) throw InvalidArgument("BigMatrix: dimension mismatch");
  BigMatrix r(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t l = 0; l < n_; ++l) {
      const BigInt& a = (*this)(i, l);
      if (sgn(a) == 0) continue;
      for (std::size_t j = 0; j < n_; ++j)
        mpz_addmul(r(i, j).get_mpz_t(), a.get_mpz_t(), o(l, j).get_mpz_t());
    }
  return r;
}

BigMatrix BigMatrix::transpose() const {
  BigMatrix r(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

void ModMatrix::set_signed(std::size_t i, std::size_t j, std::int64_t v) {
  data_[i * n_ + j] = pow_mod(v, 1, p_);
}

ModMatrix reduce_mod(const BigMatrix& m, std::uint64_t p) {
  ModMatrix r(m.size(), p);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) r.set(i, j, mod_u64(m(i, j), p));
  return r;
}

// ---------------------------------------------------------------------------
// Bareiss

BigInt det_bareiss(const BigMatrix& input) {
  const std::size_t n = input.size();
  if (n == 0) return 1;
  BigMatrix a = input;
  int sign = 1;
  BigInt prev = 1;
  BigInt tmp;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a(k, k)) == 0) {
      std::size_t r = k + 1;
      while (r < n && sgn(a(r, k)) == 0) ++r;
      if (r == n) return 0;
      for (std::size_t j = k; j < n; ++j) std::swap(a(k, j), a(r, j));
      sign = -sign;
    }
    mpz_srcptr pivot = a(k, k).get_mpz_t();
    for (std::size_t i = k + 1; i < n; ++i) {
      mpz_srcptr lead = a(i, k).get_mpz_t();
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_mul(tmp.get_mpz_t(), a(i, j).get_mpz_t(), pivot);
        mpz_submul(tmp.get_mpz_t(), lead, a(k, j).get_mpz_t());
        mpz_divexact(a(i, j).get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a(k, k);
  }
  BigInt det = a(n - 1, n - 1);
  return sign < 0 ? BigInt(-det) : det;
}

// ---------------------------------------------------------------------------
// Elimination over F_p

namespace {

// Entries stay unreduced in int64 between pivots; valid while
// n * (p-1)^2 + p < 2^62.
std::uint64_t det_mod_lazy(const ModMatrix& m) {
  const std::size_t n = m.size();
  const auto p = static_cast<std::int64_t>(m.modulus());
  std::vector<std::int64_t> a(m.data().begin(), m.data().end());
  auto at = [&](std::size_t i, std::size_t j) -> std::int64_t& { return a[i * n + j]; };
  auto reduce = [p](std::int64_t x) {
    x %= p;
    return x < 0 ? x + p : x;
  };
  std::uint64_t det = 1;
  bool negate = false;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = n;
    for (std::size_t r = k; r < n; ++r) {
      at(r, k) = reduce(at(r, k));
      if (at(r, k) != 0) {
        piv = r;
        break;
      }
    }
    if (piv == n) return 0;
    if (piv != k) {
      std::swap_ranges(a.begin() + k * n, a.begin() + (k + 1) * n, a.begin() + piv * n);
      negate = !negate;
    }
    std::int64_t* row_k = &a[k * n];
    for (std::size_t j = k; j < n; ++j) row_k[j] = reduce(row_k[j]);
    const auto pivot = static_cast<std::uint64_t>(row_k[k]);
    det = mul_mod(det, pivot, static_cast<std::uint64_t>(p));
    const auto inv = static_cast<std::int64_t>(inv_mod_u64(pivot, static_cast<std::uint64_t>(p)));
    for (std::size_t i = k + 1; i < n; ++i) {
      std::int64_t* row_i = &a[i * n];
      const std::int64_t f = reduce(row_i[k]) * inv % p;
      if (f == 0) continue;
      for (std::size_t j = k + 1; j < n; ++j) row_i[j] -= f * row_k[j];
    }
  }
  if (negate && det != 0) det = static_cast<std::uint64_t>(p) - det;
  return det;
}

// Montgomery arithmetic for odd moduli below 2^63.
class Montgomery {
 public:
  explicit Montgomery(std::uint64_t n) : n_(n) {
    std::uint64_t inv = n;
    for (int i = 0; i < 6; ++i) inv *= 2 - n * inv;
    neg_inv_ = ~inv + 1;
    const std::uint64_t r = (~n + 1) % n;  // 2^64 mod n
    r2_ = mul_mod(r, r, n);
  }

  std::uint64_t reduce(unsigned __int128 t) const {
    const std::uint64_t q = static_cast<std::uint64_t>(t) * neg_inv_;
    const auto u = static_cast<std::uint64_t>((t + static_cast<unsigned __int128>(q) * n_) >> 64);
    return u >= n_ ? u - n_ : u;
  }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return reduce(static_cast<unsigned __int128>(a) * b);
  }
  std::uint64_t to(std::uint64_t a) const { return mul(a % n_, r2_); }
  std::uint64_t from(std::uint64_t a) const { return reduce(a); }

 private:
  std::uint64_t n_;
  std::uint64_t neg_inv_;
  std::uint64_t r2_;
};

template <typename Mul>
std::uint64_t det_mod_generic(const ModMatrix& m, Mul&& mul,
                              std::uint64_t one, auto&& to_plain,
                              auto&& from_plain) {
  const std::size_t n = m.size();
  const std::uint64_t p = m.modulus();
  std::vector<std::uint64_t> a(n * n);
  for (std::size_t i = 0; i < n * n; ++i) a[i] = from_plain(m.data()[i]);
  std::uint64_t det = one;
  bool negate = false;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv * n + k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      std::swap_ranges(a.begin() + k * n, a.begin() + (k + 1) * n, a.begin() + piv * n);
      negate = !negate;
    }
    const std::uint64_t* row_k = &a[k * n];
    det = mul(det, row_k[k]);
    const std::uint64_t inv = from_plain(inv_mod_u64(to_plain(row_k[k]), p));
    for (std::size_t i = k + 1; i < n; ++i) {
      std::uint64_t* row_i = &a[i * n];
      if (row_i[k] == 0) continue;
      const std::uint64_t f = mul(row_i[k], inv);
      for (std::size_t j = k + 1; j < n; ++j) {
        const std::uint64_t y = mul(f, row_k[j]);
        const std::uint64_t x = row_i[j];
        row_i[j] = x >= y ? x - y : x + (p - y);
      }
    }
  }
  std::uint64_t out = to_plain(det);
  if (negate && out != 0) out = p - out;
  return out;
}

}  // namespace

std::uint64_t det_mod(const ModMatrix& m) {
  const std::size_t n = m.size();
  const std::uint64_t p = m.modulus();
  if (n == 0) return 1 % p;
  const unsigned __int128 growth =
      static_cast<unsigned __int128>(n) * (p - 1) * (p - 1) + p;
  if (p < (1ULL << 62) && growth < (static_cast<unsigned __int128>(1) << 62)) {
    return det_mod_lazy(m);
  }
  if (p % 2 == 1 && p < (1ULL << 63)) {
    const Montgomery mont(p);
    return det_mod_generic(
        m, [&](std::uint64_t a, std::uint64_t b) { return mont.mul(a, b); }, mont.to(1),
        [&](std::uint64_t a) { return mont.from(a); },
        [&](std::uint64_t a) { return mont.to(a); });
  }
  return det_mod_generic(
      m, [&](std::uint64_t a, std::uint64_t b) { return mul_mod(a, b, p); }, 1,
      [](std::uint64_t a) { return a; }, [](std::uint64_t a) { return a; });
}

// ---------------------------------------------------------------------------
// Multi-modular

std::vector<std::uint64_t> crt_moduli(std::size_t count) {
  static std::mutex mu;
  static std::vector<std::uint64_t> cache;
  std::lock_guard lock(mu);
  std::uint64_t candidate = cache.empty() ? (1ULL << 62) - 1 : cache.back() - 2;
  while (cache.size() < count) {
    if (is_prime(candidate)) cache.push_back(candidate);
    candidate -= 2;
  }
  return {cache.begin(), cache.begin() + static_cast<std::ptrdiff_t>(count)};
}

BigInt hadamard_bound(const BigMatrix& m) {
  BigInt product = 1;
  BigInt norm2;
  for (std::size_t i = 0; i < m.size(); ++i) {
    norm2 = 0;
    for (std::size_t j = 0; j < m.size(); ++j)
      mpz_addmul(norm2.get_mpz_t(), m(i, j).get_mpz_t(), m(i, j).get_mpz_t());
    product *= norm2;
  }
  BigInt root, rem;
  mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), product.get_mpz_t());
  if (sgn(rem) != 0) root += 1;
  return root;
}

BigInt det_multimodular(const BigMatrix& m, unsigned jobs) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  const BigInt bound = hadamard_bound(m);
  if (sgn(bound) == 0) return 0;

  // Enough moduli that their product exceeds 2 * bound.
  const std::size_t bits_needed = mpz_sizeinbase(bound.get_mpz_t(), 2) + 2;
  const std::size_t count = (bits_needed + 60) / 61;  // each modulus > 2^61
  const std::vector<std::uint64_t> moduli = crt_moduli(count);

  std::vector<std::uint64_t> residues(moduli.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t idx; (idx = next.fetch_add(1)) < moduli.size();) {
      residues[idx] = det_mod(reduce_mod(m, moduli[idx]));
    }
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(jobs, moduli.size()));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  // Garner-style incremental CRT, always in modulus order.
  BigInt x = from_u64(residues[0]);
  BigInt modulus = from_u64(moduli[0]);
  for (std::size_t i = 1; i < moduli.size(); ++i) {
    const std::uint64_t q = moduli[i];
    const std::uint64_t xq = mod_u64(x, q);
    const std::uint64_t diff = residues[i] >= xq ? residues[i] - xq : residues[i] + (q - xq);
    const std::uint64_t t = mul_mod(diff, inv_mod_u64(mod_u64(modulus, q), q), q);
    x += modulus * from_u64(t);
    modulus *= from_u64(q);
  }
  if (2 * x > modulus) x -= modulus;
  if (abs(x) > bound) {
    throw std::logic_error("multi-modular determinant exceeds the Hadamard bound");
  }
  return x;
}

BigInt det_exact(const BigMatrix& m, const DetOptions& opts) {
  if (m.size() <= opts.crt_threshold) return det_bareiss(m);
  return det_multimodular(m, opts.jobs);
}

// ---------------------------------------------------------------------------

Polynomial char_poly(const BigMatrix& a) {
  const std::size_t n = a.size();
  std::vector<BigInt> c(n + 1);
  c[n] = 1;
  BigMatrix mk(n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    BigMatrix next = a * mk;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    mk = std::move(next);
    BigInt trace = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        mpz_addmul(trace.get_mpz_t(), a(i, j).get_mpz_t(), mk(j, i).get_mpz_t());
    BigInt q;
    const BigInt kk = static_cast<unsigned long>(k);
    mpz_divexact(q.get_mpz_t(), trace.get_mpz_t(), kk.get_mpz_t());
    c[n - k] = -q;
  }
  return Polynomial(std::move(c));
}

}  // namespace resdet
