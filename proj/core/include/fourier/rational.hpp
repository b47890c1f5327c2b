#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace fourier {

using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// Canonical "p" or "p/q" form, always in lowest terms.
inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Floor of the square root of a nonnegative integer.
Integer isqrt(const Integer& n);

/// The exact integer root when n is a perfect square.
std::optional<Integer> exact_isqrt(const Integer& n);

/// Splits n > 0 as square * squarefree and returns both parts.
struct SquarefreeSplit {
  Integer square_root;  // f, with n = f^2 * squarefree
  Integer squarefree;
};
SquarefreeSplit split_square(const Integer& n);

bool is_prime(const Integer& n);

std::int64_t gcd(std::int64_t a, std::int64_t b);
std::int64_t lcm(std::int64_t a, std::int64_t b);

/// a mod n in [0, n).
inline std::int64_t mod(std::int64_t a, std::int64_t n) {
  auto r = a % n;
  return r < 0 ? r + n : r;
}

/// Inverse of a modulo n; requires gcd(a, n) = 1 and n >= 1.
std::int64_t inverse_mod(std::int64_t a, std::int64_t n);

}  // namespace fourier
