#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace resdet {

using BigInt = mpz_class;

inline BigInt from_u64(std::uint64_t v) {
  BigInt r;
  mpz_import(r.get_mpz_t(), 1, -1, sizeof v, 0, 0, &v);
  return r;
}

inline BigInt from_i64(std::int64_t v) {
  if (v >= 0) return from_u64(static_cast<std::uint64_t>(v));
  // Avoids overflow on INT64_MIN.
  BigInt r = from_u64(static_cast<std::uint64_t>(-(v + 1)));
  r += 1;
  return -r;
}

// Value of v reduced into [0, m).
inline std::uint64_t mod_u64(const BigInt& v, std::uint64_t m) {
  BigInt r;
  BigInt mm = from_u64(m);
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), mm.get_mpz_t());
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof out, 0, 0, r.get_mpz_t());
  return out;
}

inline std::string to_string(const BigInt& v) { return v.get_str(10); }

// Throws std::out_of_range if v does not fit.
std::int64_t to_i64(const BigInt& v);

}  // namespace resdet
