#pragma once

#include <utility>

#include "fourier/cyclotomic.hpp"
#include "fourier/rational.hpp"

namespace fourier {

inline constexpr unsigned kDefaultMaxPrecisionBits = 4096;
inline constexpr unsigned kInitialPrecisionBits = 128;

/// A closed rational interval [lo, hi] certified to contain some real value.
struct RealInterval {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool contains(const RealInterval& other) const { return lo <= other.lo && other.hi <= hi; }
  bool excludes_zero() const { return sgn(lo) > 0 || sgn(hi) < 0; }
};

struct ComplexInterval {
  RealInterval re;
  RealInterval im;
};

/// Certified enclosure of the real and imaginary parts of a.
///
/// Each root of unity is evaluated with MPFR at precision_bits + 8 bits; the
/// enclosure radius is l1_norm(a) * 2^-(precision_bits + 2).
ComplexInterval eval_interval(const Cyclotomic& a, unsigned precision_bits);

enum class Sign { negative = -1, zero = 0, positive = 1 };

/// Sign of a real cyclotomic. Exact zero test first, then interval
/// refinement from 128 bits, doubling up to max_precision_bits.
/// Throws NotReal if a != conj(a), PrecisionExhausted past the cap.
Sign sign_real(const Cyclotomic& a, unsigned max_precision_bits = kDefaultMaxPrecisionBits);

/// True iff a is real and strictly positive; never throws NotReal.
bool is_real_positive(const Cyclotomic& a, unsigned max_precision_bits = kDefaultMaxPrecisionBits);

}  // namespace fourier
