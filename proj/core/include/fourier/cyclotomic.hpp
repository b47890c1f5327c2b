#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fourier/rational.hpp"

namespace fourier {

/// An exact element of a cyclotomic field Q(zeta_n).
///
/// Values are stored as sum_k a_k zeta_n^k over the Zumbroich basis of
/// Q(zeta_n), where n is the conductor of the value (the smallest n with the
/// value in Q(zeta_n)). This makes the representation unique, so equality is
/// structural. Rationals have order 1 and at most one term with exponent 0.
class Cyclotomic {
 public:
  struct Term {
    std::int64_t exponent;
    Rational coeff;

    friend bool operator==(const Term&, const Term&) = default;
  };

  Cyclotomic() = default;
  Cyclotomic(long value);  // NOLINT(google-explicit-constructor)
  Cyclotomic(const Rational& value);  // NOLINT(google-explicit-constructor)

  /// zeta_n^k for any integer k.
  static Cyclotomic root_of_unity(std::int64_t n, std::int64_t k = 1);

  /// sum_k coeff * zeta_n^k over arbitrary exponents, canonicalized.
  static Cyclotomic from_terms(std::int64_t n, std::span<const Term> terms);

  /// Dense coefficients c[k] of zeta_n^k, k in [0, n), canonicalized.
  static Cyclotomic from_dense(std::int64_t n, std::vector<Rational> coeffs);

  std::int64_t order() const { return order_; }
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const { return order_ == 1; }
  std::optional<Rational> as_rational() const;
  bool is_rational_integer() const;
  bool is_one() const;

  Cyclotomic conj() const;
  /// The Galois automorphism zeta_n -> zeta_n^a; requires gcd(a, order) = 1.
  Cyclotomic galois(std::int64_t a) const;
  /// Multiplicative inverse; throws DivisionByZero for 0.
  Cyclotomic inv() const;
  /// Sum of |a_k| over the canonical terms (used for error bounds).
  Rational l1_norm() const;

  Cyclotomic& operator+=(const Cyclotomic& other);
  Cyclotomic& operator-=(const Cyclotomic& other);
  Cyclotomic& operator*=(const Cyclotomic& other);
  Cyclotomic& operator/=(const Cyclotomic& other);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inv(); }
  friend Cyclotomic operator-(const Cyclotomic& a);

  friend bool operator==(const Cyclotomic&, const Cyclotomic&) = default;

  /// Deterministic total order on canonical forms (not the real order).
  friend bool canonical_less(const Cyclotomic& a, const Cyclotomic& b);

 private:
  Cyclotomic(std::int64_t order, std::vector<Term> terms)
      : order_(order), terms_(std::move(terms)) {}

  std::int64_t order_ = 1;
  std::vector<Term> terms_;
};

Cyclotomic pow(const Cyclotomic& base, std::int64_t exponent);

inline std::optional<Rational> as_rational(const Cyclotomic& a) { return a.as_rational(); }
inline bool is_rational_integer(const Cyclotomic& a) { return a.is_rational_integer(); }
inline Cyclotomic conj(const Cyclotomic& a) { return a.conj(); }
inline Cyclotomic inv(const Cyclotomic& a) { return a.inv(); }

/// |a|^2 = a * conj(a).
inline Cyclotomic abs2(const Cyclotomic& a) { return a * a.conj(); }

/// The nonnegative real square root of q >= 0 as an exact cyclotomic.
///
/// The squarefree part m of q is written with quadratic Gauss sums: for odd
/// m, sum_k zeta_m^(k^2) is sqrt(m) or i*sqrt(m) depending on m mod 4, and
/// sqrt(2) = zeta_8 - zeta_8^3. Throws NegativeRadicand for q < 0.
Cyclotomic sqrt_nonneg_rational(const Rational& q);

/// True iff a is a root of unity.
bool is_root_of_unity(const Cyclotomic& a);

/// Prime factorization of a small positive integer as (p, e) pairs.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

std::string to_string(const Cyclotomic& a);
std::ostream& operator<<(std::ostream& os, const Cyclotomic& a);

}  // namespace fourier
