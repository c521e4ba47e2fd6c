#pragma once

#include <cstdint>
#include <vector>

namespace sigmafact {

// All primes <= limit, ascending. Plain sieve of Eratosthenes.
std::vector<std::uint32_t> primes_up_to(std::uint32_t limit);

// Deterministic trial-division primality check for machine-word values.
// Exact for every v, intended for the small factors this project meets
// (q <= n+1); cost grows with sqrt(v).
bool is_small_prime(std::uint64_t v);

}  // namespace sigmafact
