#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "sigmafact/bigint.hpp"

namespace sigmafact {

struct PrimePower {
  std::uint64_t q = 0;
  std::uint32_t e = 0;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Complete factorization of m = p - 1 at index n: factors strictly
// ascending in q, all exponents >= 1, prod q^e == m, every q <= n+1.
// Empty for n == 1 (m == 1).
struct FactoredMultiplier {
  std::uint32_t n = 0;
  std::vector<PrimePower> factors;
};

// Exponent of prime q in n!: sum over i >= 1 of floor(n / q^i).
std::uint64_t factorial_prime_exponent(std::uint64_t n, std::uint64_t q);

// Factors m = (n+1)! * n / 2 without ever forming or dividing m:
// for each prime q <= n+1, e = v_q((n+1)!) + v_q(n) - [q == 2].
FactoredMultiplier factor_p_minus_1(std::uint32_t n);

// prod q^e as a BigInt (1 for the empty list).
BigInt factored_product(const FactoredMultiplier& f);

}  // namespace sigmafact
