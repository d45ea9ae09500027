// Exact arithmetic aliases and formatting helpers shared across the library.
#pragma once

#include <cmath>
#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace rgcost {

using BigInt = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(std::int64_t num, std::int64_t den) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

// Rationals are serialized as "num/den" in lowest terms with den >= 1,
// e.g. "3/2", "0/1". Keeps report files diffable and parse-friendly.
inline std::string rat_to_string(const Rat& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline double rat_to_double(const Rat& q) { return q.get_d(); }

inline BigInt bigint_pow(const BigInt& base, unsigned long exp) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

// ln(x) for a positive big integer, exact up to ~1e-15 relative error:
// x = d * 2^e with d in [0.5, 1), so ln x = ln d + e ln 2. Safe for values
// far beyond double range.
inline double bigint_log(const BigInt& x) {
  signed long int exp = 0;
  const double d = mpz_get_d_2exp(&exp, x.get_mpz_t());
  return std::log(d) + static_cast<double>(exp) * std::log(2.0);
}

}  // namespace rgcost
