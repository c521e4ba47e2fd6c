#pragma once

#include <cstdint>

#include "sigmafact/candidate.hpp"

namespace sigmafact {

struct DigitInfo {
  std::uint32_t n = 0;
  std::uint64_t exact_digits = 0;
  std::uint64_t stirling_estimate = 0;
};

// Length of the decimal representation of p.
std::uint64_t exact_digit_count(const Candidate& c);

// floor(log10 p) + 1 with log10(n!) taken from Stirling's expansion
//   ln n! ~= (n + 1/2) ln n - n + ln(2*pi)/2
// plus log10 of the triangular factor n(n+1)/2. Within one digit of the
// exact count; returns the exact count (1) at n == 1 where the expansion
// does not apply.
std::uint64_t stirling_digit_estimate(std::uint32_t n);

DigitInfo digit_info(const Candidate& c);

}  // namespace sigmafact
