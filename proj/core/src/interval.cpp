#include "fourier/interval.hpp"

#include <mpfr.h>

#include "fourier/error.hpp"

namespace fourier {
namespace {

class MpfrValue {
 public:
  explicit MpfrValue(mpfr_prec_t prec) { mpfr_init2(value_, prec); }
  ~MpfrValue() { mpfr_clear(value_); }
  MpfrValue(const MpfrValue&) = delete;
  MpfrValue& operator=(const MpfrValue&) = delete;

  mpfr_ptr get() { return value_; }

  Rational to_rational() {
    Rational q;
    mpfr_get_q(q.get_mpq_t(), value_);
    return q;
  }

 private:
  mpfr_t value_;
};

}  // namespace

ComplexInterval eval_interval(const Cyclotomic& a, unsigned precision_bits) {
  if (a.is_rational()) {
    const Rational v = *a.as_rational();
    return {{v, v}, {0, 0}};
  }
  // theta = 2 pi k / n takes three correctly rounded operations, so its
  // absolute error is below 2^(5 - prec); cos and sin add half an ulp and are
  // 1-Lipschitz, giving |error| < 2^(6 - prec) per evaluated root.
  const mpfr_prec_t prec = static_cast<mpfr_prec_t>(precision_bits) + 8;
  MpfrValue pi(prec), theta(prec), c(prec), s(prec);
  mpfr_const_pi(pi.get(), MPFR_RNDN);

  Rational re = 0;
  Rational im = 0;
  for (const auto& t : a.terms()) {
    if (t.exponent == 0) {
      re += t.coeff;
      continue;
    }
    mpfr_mul_ui(theta.get(), pi.get(), static_cast<unsigned long>(2 * t.exponent), MPFR_RNDN);
    mpfr_div_ui(theta.get(), theta.get(), static_cast<unsigned long>(a.order()), MPFR_RNDN);
    mpfr_sin_cos(s.get(), c.get(), theta.get(), MPFR_RNDN);
    re += t.coeff * c.to_rational();
    im += t.coeff * s.to_rational();
  }
  Rational eps = 1;
  mpq_div_2exp(eps.get_mpq_t(), eps.get_mpq_t(), static_cast<mp_bitcnt_t>(prec - 6));
  const Rational radius = a.l1_norm() * eps;
  return {{re - radius, re + radius}, {im - radius, im + radius}};
}

Sign sign_real(const Cyclotomic& a, unsigned max_precision_bits) {
  if (a.is_zero()) return Sign::zero;
  if (a != a.conj()) throw Error(ErrorCode::NotReal, to_string(a) + " is not real");
  if (a.is_rational()) return sgn(*a.as_rational()) > 0 ? Sign::positive : Sign::negative;
  for (unsigned bits = kInitialPrecisionBits; bits <= max_precision_bits; bits *= 2) {
    const auto box = eval_interval(a, bits).re;
    if (sgn(box.lo) > 0) return Sign::positive;
    if (sgn(box.hi) < 0) return Sign::negative;
  }
  throw Error(ErrorCode::PrecisionExhausted,
              "sign of " + to_string(a) + " undecided at " + std::to_string(max_precision_bits) +
                  " bits");
}

bool is_real_positive(const Cyclotomic& a, unsigned max_precision_bits) {
  if (a != a.conj()) return false;
  return sign_real(a, max_precision_bits) == Sign::positive;
}

}  // namespace fourier
