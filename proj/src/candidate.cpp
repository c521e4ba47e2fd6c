#include "sigmafact/candidate.hpp"

#include <stdexcept>

namespace sigmafact {

Candidate candidate_value(std::uint32_t n) {
  if (n == 0) throw std::invalid_argument("candidate_value: n must be >= 1");
  Candidate c;
  c.n = n;
  mpz_fac_ui(c.m.get_mpz_t(), n);
  const unsigned long triangular =
      static_cast<unsigned long>(std::uint64_t{n} * (n + 1) / 2);
  c.m *= triangular;
  c.p = c.m + 1;
  return c;
}

Candidate candidate_next(const Candidate& c) {
  if (c.n == 0) throw std::invalid_argument("candidate_next: invalid candidate");
  Candidate out;
  out.n = c.n + 1;
  out.m = c.m;
  // m = (n+1)! n / 2 is divisible by n: m / n = (n+1)! / 2, an integer.
  mpz_divexact_ui(out.m.get_mpz_t(), out.m.get_mpz_t(), c.n);
  out.m *= static_cast<unsigned long>(c.n) + 1;
  out.m *= static_cast<unsigned long>(c.n) + 2;
  out.p = out.m + 1;
  return out;
}

}  // namespace sigmafact
