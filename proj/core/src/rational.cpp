#include "fourier/rational.hpp"

#include <numeric>
#include <utility>

#include "fourier/error.hpp"

namespace fourier {

Integer isqrt(const Integer& n) {
  if (n < 0) throw Error(ErrorCode::NegativeRadicand, "isqrt of " + n.get_str());
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

std::optional<Integer> exact_isqrt(const Integer& n) {
  if (n < 0 || mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
  return isqrt(n);
}

SquarefreeSplit split_square(const Integer& n) {
  if (n <= 0) throw Error(ErrorCode::InvalidArgument, "split_square needs n > 0");
  Integer rest = n;
  Integer root = 1;
  Integer free = 1;
  // Trial division up to the cube root of what remains; the cofactor then
  // has at most two prime factors, so it is either p^2 or squarefree.
  for (Integer p = 2; p * p * p <= rest; p = (p == 2 ? Integer(3) : p + 2)) {
    int e = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t()) != 0) {
      rest /= p;
      ++e;
    }
    for (int i = 0; i + 1 < e; i += 2) root *= p;
    if (e % 2 == 1) free *= p;
  }
  if (auto r = exact_isqrt(rest)) {
    root *= *r;
  } else {
    free *= rest;
  }
  return {root, free};
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t lcm(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

std::int64_t inverse_mod(std::int64_t a, std::int64_t n) {
  if (n == 1) return 0;
  std::int64_t old_r = mod(a, n), r = n, old_s = 1, s = 0;
  while (r != 0) {
    const auto q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
  }
  if (old_r != 1) {
    throw Error(ErrorCode::InvalidArgument,
                std::to_string(a) + " is not invertible modulo " + std::to_string(n));
  }
  return mod(old_s, n);
}

}  // namespace fourier
