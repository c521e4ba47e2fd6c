#pragma once

#include <cstdint>

#include "sigmafact/bigint.hpp"

namespace sigmafact {

// Value at index n of the family p = 1 + n! * n(n+1)/2.
//
// m = p - 1 = (n+1)! * n / 2, so every k in [2, n+1] divides m and
// p ≡ 1 (mod k). p is odd for n >= 2; p = 2 only at n = 1.
struct Candidate {
  std::uint32_t n = 0;
  BigInt p;
  BigInt m;  // p - 1
};

// Evaluates the candidate directly from n.
// Throws std::invalid_argument for n == 0.
Candidate candidate_value(std::uint32_t n);

// Advances n -> n+1 via m(n+1) = m(n) * (n+1)(n+2) / n; the division is
// exact. Two word-size multiplications per step instead of a factorial.
Candidate candidate_next(const Candidate& c);

}  // namespace sigmafact
