#include "sigmafact/factorization.hpp"

#include <stdexcept>

#include "sigmafact/primes.hpp"

namespace sigmafact {

std::uint64_t factorial_prime_exponent(std::uint64_t n, std::uint64_t q) {
  std::uint64_t e = 0;
  while (n >= q) {
    n /= q;
    e += n;
  }
  return e;
}

FactoredMultiplier factor_p_minus_1(std::uint32_t n) {
  if (n == 0) throw std::invalid_argument("factor_p_minus_1: n must be >= 1");
  FactoredMultiplier f;
  f.n = n;
  for (std::uint32_t q : primes_up_to(n + 1)) {
    std::uint64_t e = factorial_prime_exponent(n + 1, q);
    for (std::uint64_t r = n; r % q == 0; r /= q) ++e;  // v_q(n)
    if (q == 2) --e;                                    // the /2 in (n+1)! n / 2
    if (e > 0) f.factors.push_back({q, static_cast<std::uint32_t>(e)});
  }
  return f;
}

BigInt factored_product(const FactoredMultiplier& f) {
  BigInt prod = 1;
  BigInt qe;
  for (const auto& [q, e] : f.factors) {
    mpz_ui_pow_ui(qe.get_mpz_t(), static_cast<unsigned long>(q), e);
    prod *= qe;
  }
  return prod;
}

}  // namespace sigmafact
