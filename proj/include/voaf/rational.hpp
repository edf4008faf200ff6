#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace voaf {

using Rat = mpq_class;
using Int = mpz_class;

Rat rat(long num, long den = 1);
std::string to_string(const Rat& r);
Rat parse_rat(std::string_view text);

bool is_integer(const Rat& r);
Rat floor_rat(const Rat& r);
// r must be an integer
long to_long(const Rat& r);

// generalized binomial C(r, k) for k >= 0
Rat binomial(const Rat& r, long k);
Rat factorial(long k);

std::optional<Rat> rational_sqrt(const Rat& r);

class MathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace voaf
