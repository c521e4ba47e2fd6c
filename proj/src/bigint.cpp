#include "sigmafact/bigint.hpp"

#include <cctype>
#include <stdexcept>

namespace sigmafact {

BigInt parse_decimal(const std::string& text) {
  std::size_t start = 0;
  if (!text.empty() && text[0] == '-') start = 1;
  if (start == text.size()) {
    throw std::invalid_argument("parse_decimal: empty integer literal");
  }
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw std::invalid_argument("parse_decimal: not a decimal integer: " + text);
    }
  }
  BigInt v;
  if (mpz_set_str(v.get_mpz_t(), text.c_str(), 10) != 0) {
    throw std::invalid_argument("parse_decimal: not a decimal integer: " + text);
  }
  return v;
}

}  // namespace sigmafact
