#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace sigmafact {

// Arbitrary-precision integer. GMP does the heavy lifting; values are
// treated as immutable once computed.
using BigInt = mpz_class;

// base^exp mod m, exp >= 0, m > 0.
inline BigInt powmod(const BigInt& base, const BigInt& exp, const BigInt& m) {
  BigInt r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline BigInt powmod(std::uint64_t base, const BigInt& exp, const BigInt& m) {
  return powmod(BigInt(static_cast<unsigned long>(base)), exp, m);
}

inline std::string to_decimal(const BigInt& v) { return v.get_str(); }

// Strict base-10 parse: optional leading '-', digits only.
// Throws std::invalid_argument on anything else.
BigInt parse_decimal(const std::string& text);

}  // namespace sigmafact
