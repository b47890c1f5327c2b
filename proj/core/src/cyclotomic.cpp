#include "fourier/cyclotomic.hpp"

#include <algorithm>
#include <ostream>
#include <unordered_map>

#include "fourier/error.hpp"

namespace fourier {
namespace {

struct PrimePower {
  std::int64_t p;
  int e;
  std::int64_t q;  // p^e
};

const std::vector<PrimePower>& prime_powers(std::int64_t n) {
  thread_local std::unordered_map<std::int64_t, std::vector<PrimePower>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<PrimePower> out;
  for (const auto& [p, e] : factorize(n)) {
    std::int64_t q = 1;
    for (int i = 0; i < e; ++i) q *= p;
    out.push_back({p, e, q});
  }
  return cache.emplace(n, std::move(out)).first->second;
}

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t n) {
  std::int64_t out = 1 % n;
  base = mod(base, n);
  for (; exp > 0; exp >>= 1) {
    if (exp & 1) out = out * base % n;
    base = base * base % n;
  }
  return out;
}

std::int64_t primitive_root(std::int64_t p, std::int64_t q) {
  const auto factors = factorize(p - 1);
  for (std::int64_t g = 2;; ++g) {
    const bool primitive = std::all_of(factors.begin(), factors.end(), [&](const auto& f) {
      return pow_mod(g, (p - 1) / f.first, p) != 1;
    });
    if (!primitive) continue;
    // a primitive root mod p is one mod p^2 (hence mod every p^e) unless g^(p-1) = 1 mod p^2
    if (q > p && pow_mod(g, p - 1, p * p) == 1) return g + p;
    return g;
  }
}

// Generators (g, order of g) of (Z/n)^* as an internal direct product of cyclic groups.
std::vector<std::pair<std::int64_t, std::int64_t>> unit_group_generators(std::int64_t n) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (const auto& [p, e, q] : prime_powers(n)) {
    const std::int64_t rest = n / q;
    // x = g mod q, x = 1 mod rest
    const auto lift = [&](std::int64_t g) {
      if (rest == 1) return mod(g, n);
      const std::int64_t t = mod((g - 1) % q * inverse_mod(rest % q, q), q);
      return mod(1 + rest * t, n);
    };
    if (p == 2) {
      if (e >= 2) out.emplace_back(lift(-1), 2);
      if (e >= 3) out.emplace_back(lift(5), q / 4);
    } else {
      out.emplace_back(lift(primitive_root(p, q)), q / p * (p - 1));
    }
  }
  return out;
}

// prod_{k=1}^{m-1} sigma_{g^k}(y), by doubling on the number of factors.
Cyclotomic cyclic_conjugate_product(const Cyclotomic& y, std::int64_t g, std::int64_t m, std::int64_t n) {
  if (m <= 1) return Cyclotomic(1L);
  const std::int64_t count = m - 1;
  int top = 62;
  while (((count >> top) & 1) == 0) --top;
  Cyclotomic f = y.galois(g);  // F(1)
  std::int64_t k = 1;
  for (int bit = top - 1; bit >= 0; --bit) {
    f *= f.galois(pow_mod(g, k, n));  // F(2k) = F(k) sigma_{g^k}(F(k))
    k *= 2;
    if ((count >> bit) & 1) {
      ++k;
      f *= y.galois(pow_mod(g, k, n));
    }
  }
  return f;
}

// Rewrites coefficients over all exponents mod n into the Zumbroich basis.
//
// Writing zeta_n^k = prod_p zeta_{p^e}^{c_p}, the basis keeps exponents whose
// leading base-p digit of c_p is nonzero (odd p) or zero (p = 2). Adding n/p to
// k bumps exactly that digit of c_p, so the relations
//   sum_{t<p} zeta_n^{k + t n/p} = 0      (odd p)
//   zeta_n^{k + n/2} = -zeta_n^k          (p = 2)
// move every coefficient into the basis in one pass per prime.
void reduce_to_basis(std::int64_t n, std::vector<Rational>& c) {
  for (const auto& [p, e, q] : prime_powers(n)) {
    const std::int64_t cofactor_inv = inverse_mod((n / q) % q, q);
    const std::int64_t low = q / p;
    const std::int64_t step = n / p;
    for (std::int64_t k = 0; k < n; ++k) {
      if (sgn(c[k]) == 0) continue;
      const std::int64_t digit = ((k % q) * cofactor_inv) % q / low;
      if (p == 2) {
        if (digit == 1) {
          c[(k + step) % n] -= c[k];
          c[k] = 0;
        }
      } else if (digit == 0) {
        for (std::int64_t t = 1; t < p; ++t) c[(k + t * step) % n] -= c[k];
        c[k] = 0;
      }
    }
  }
}

// Tries to lower the order by one prime; returns false when n is the conductor.
bool lower_order_once(std::int64_t& n, std::vector<Rational>& c) {
  for (const auto& [p, e, q] : prime_powers(n)) {
    if (e >= 2) {
      bool divisible = true;
      for (std::int64_t k = 0; k < n && divisible; ++k) {
        if (sgn(c[k]) != 0 && k % p != 0) divisible = false;
      }
      if (!divisible) continue;
      std::vector<Rational> lowered(n / p);
      for (std::int64_t k = 0; k < n; k += p) lowered[k / p] = std::move(c[k]);
      n /= p;
      c = std::move(lowered);
      return true;
    }
    if (p == 2) {
      // Q(zeta_2m) = Q(zeta_m) for odd m; basis exponents are all even.
      std::vector<Rational> lowered(n / 2);
      for (std::int64_t k = 0; k < n; k += 2) lowered[k / 2] = std::move(c[k]);
      n /= 2;
      c = std::move(lowered);
      return true;
    }
    // p exactly divides n: zeta_n^k = zeta_p^u zeta_m^v with u in [1, p).
    // The value lies in Q(zeta_m) iff, for every v, all p - 1 coefficients
    // agree; since 1 = -(zeta_p + ... + zeta_p^{p-1}) the lowered coefficient
    // is the negated common value.
    const std::int64_t m = n / p;
    const std::int64_t p_inv = inverse_mod(p % m, m);
    std::vector<Rational> common(m);
    std::vector<std::int64_t> seen(m, 0);
    bool consistent = true;
    for (std::int64_t k = 0; k < n && consistent; ++k) {
      if (sgn(c[k]) == 0) continue;
      const std::int64_t v = ((k % m) * p_inv) % m;
      if (seen[v] == 0) {
        common[v] = c[k];
      } else if (common[v] != c[k]) {
        consistent = false;
      }
      ++seen[v];
    }
    if (!consistent) continue;
    for (std::int64_t v = 0; v < m && consistent; ++v) {
      if (seen[v] != 0 && seen[v] != p - 1) consistent = false;
    }
    if (!consistent) continue;
    for (auto& x : common) x = -x;
    n = m;
    c = std::move(common);
    return true;
  }
  return false;
}

}  // namespace

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "factorize needs n >= 1");
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

Cyclotomic::Cyclotomic(long value) : Cyclotomic(Rational(value)) {}

Cyclotomic::Cyclotomic(const Rational& value) {
  if (sgn(value) != 0) terms_.push_back({0, value});
}

Cyclotomic Cyclotomic::root_of_unity(std::int64_t n, std::int64_t k) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "root of unity order must be >= 1");
  const Term t{mod(k, n), Rational(1)};
  return from_terms(n, std::span<const Term>(&t, 1));
}

Cyclotomic Cyclotomic::from_terms(std::int64_t n, std::span<const Term> terms) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "cyclotomic order must be >= 1");
  std::vector<Rational> dense(n);
  for (const auto& t : terms) dense[mod(t.exponent, n)] += t.coeff;
  return from_dense(n, std::move(dense));
}

Cyclotomic Cyclotomic::from_dense(std::int64_t n, std::vector<Rational> c) {
  if (n < 1 || static_cast<std::int64_t>(c.size()) != n) {
    throw Error(ErrorCode::InvalidArgument, "dense coefficient vector must have length n");
  }
  reduce_to_basis(n, c);
  while (n > 1 && lower_order_once(n, c)) {
  }
  std::vector<Term> terms;
  for (std::int64_t k = 0; k < n; ++k) {
    if (sgn(c[k]) != 0) terms.push_back({k, std::move(c[k])});
  }
  if (terms.empty()) n = 1;
  return Cyclotomic(n, std::move(terms));
}

std::optional<Rational> Cyclotomic::as_rational() const {
  if (order_ != 1) return std::nullopt;
  return terms_.empty() ? Rational(0) : terms_.front().coeff;
}

bool Cyclotomic::is_rational_integer() const {
  return order_ == 1 && (terms_.empty() || is_integer(terms_.front().coeff));
}

bool Cyclotomic::is_one() const {
  return order_ == 1 && terms_.size() == 1 && terms_.front().coeff == 1;
}

Cyclotomic Cyclotomic::conj() const { return galois(-1); }

Cyclotomic Cyclotomic::galois(std::int64_t a) const {
  if (order_ <= 2) return *this;
  if (gcd(mod(a, order_), order_) != 1) {
    throw Error(ErrorCode::InvalidArgument, "Galois exponent must be coprime to the conductor");
  }
  std::vector<Rational> dense(order_);
  for (const auto& t : terms_) dense[mod(t.exponent * a, order_)] = t.coeff;
  return from_dense(order_, std::move(dense));
}

Cyclotomic Cyclotomic::inv() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  if (is_rational()) return Cyclotomic(Rational(1) / terms_.front().coeff);
  if (terms_.size() == 1) {
    const Term t{-terms_.front().exponent, Rational(1) / terms_.front().coeff};
    return from_terms(order_, std::span<const Term>(&t, 1));
  }
  // x^{-1} = (prod_{sigma != 1} sigma(x)) / N(x). The Galois group is a
  // product of cyclic groups C_1 x ... x C_m; with Y_0 = x and
  // B_i = prod_{c in C_i, c != 1} c(Y_{i-1}), Y_i = Y_{i-1} B_i ends at N(x)
  // and the product of the B_i is the conjugate product we need.
  Cyclotomic y = *this;
  Cyclotomic others(1L);
  for (const auto& [g, m] : unit_group_generators(order_)) {
    const Cyclotomic b = cyclic_conjugate_product(y, g, m, order_);
    others *= b;
    y *= b;
  }
  const auto norm = y.as_rational();
  if (!norm || sgn(*norm) == 0) {
    throw Error(ErrorCode::DivisionByZero, "field norm is not a nonzero rational");
  }
  return others * Cyclotomic(Rational(1) / *norm);
}

Rational Cyclotomic::l1_norm() const {
  Rational s = 0;
  for (const auto& t : terms_) s += abs(t.coeff);
  return s;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  const std::int64_t n = lcm(order_, other.order_);
  std::vector<Rational> dense(n);
  const std::int64_t fa = n / order_;
  const std::int64_t fb = n / other.order_;
  for (auto& t : terms_) dense[t.exponent * fa] += t.coeff;
  for (const auto& t : other.terms_) dense[t.exponent * fb] += t.coeff;
  if (n == order_ && n == other.order_) {
    // Both operands already lie in the basis of Q(zeta_n).
    std::int64_t m = n;
    while (m > 1 && lower_order_once(m, dense)) {
    }
    terms_.clear();
    for (std::int64_t k = 0; k < m; ++k) {
      if (sgn(dense[k]) != 0) terms_.push_back({k, std::move(dense[k])});
    }
    order_ = terms_.empty() ? 1 : m;
    return *this;
  }
  return *this = from_dense(n, std::move(dense));
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& other) { return *this += -other; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& other) { return *this = *this * other; }

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& other) { return *this = *this / other; }

Cyclotomic operator-(const Cyclotomic& a) {
  Cyclotomic out = a;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_rational() || b.is_rational()) {
    const bool a_scalar = a.is_rational();
    const Rational& q = (a_scalar ? a : b).terms_.front().coeff;
    Cyclotomic out = a_scalar ? b : a;
    for (auto& t : out.terms_) t.coeff *= q;
    return out;
  }
  const std::int64_t n = lcm(a.order_, b.order_);
  const std::int64_t fa = n / a.order_;
  const std::int64_t fb = n / b.order_;
  std::vector<Rational> dense(n);
  Rational product;
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      mpq_mul(product.get_mpq_t(), ta.coeff.get_mpq_t(), tb.coeff.get_mpq_t());
      dense[(ta.exponent * fa + tb.exponent * fb) % n] += product;
    }
  }
  return Cyclotomic::from_dense(n, std::move(dense));
}

bool canonical_less(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order_ != b.order_) return a.order_ < b.order_;
  return std::lexicographical_compare(
      a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(),
      [](const Cyclotomic::Term& x, const Cyclotomic::Term& y) {
        if (x.exponent != y.exponent) return x.exponent < y.exponent;
        return x.coeff < y.coeff;
      });
}

Cyclotomic pow(const Cyclotomic& base, std::int64_t exponent) {
  if (exponent < 0) return pow(base.inv(), -exponent);
  Cyclotomic result(1L);
  Cyclotomic square = base;
  while (exponent > 0) {
    if ((exponent & 1) != 0) result *= square;
    exponent >>= 1;
    if (exponent > 0) square *= square;
  }
  return result;
}

bool is_root_of_unity(const Cyclotomic& a) {
  if (a.is_zero()) return false;
  // Every root of unity in Q(zeta_n) has order dividing lcm(2, n).
  return pow(a, lcm(2, a.order())).is_one();
}

Cyclotomic sqrt_nonneg_rational(const Rational& q) {
  if (sgn(q) < 0) throw Error(ErrorCode::NegativeRadicand, "square root of " + to_string(q));
  if (sgn(q) == 0) return {};
  // sqrt(a/b) = sqrt(a b) / b
  const Integer num = q.get_num() * q.get_den();
  const auto [root, free] = split_square(num);
  Rational scale(root, q.get_den());
  scale.canonicalize();
  Cyclotomic result(scale);
  Integer odd = free;
  if (mpz_even_p(odd.get_mpz_t()) != 0) {
    odd /= 2;
    result *= Cyclotomic::root_of_unity(8, 1) - Cyclotomic::root_of_unity(8, 3);
  }
  if (odd > 1) {
    if (!odd.fits_slong_p()) {
      throw Error(ErrorCode::InvalidArgument, "squarefree part too large for a Gauss sum");
    }
    const std::int64_t m = odd.get_si();
    std::vector<Rational> dense(m);
    for (std::int64_t k = 0; k < m; ++k) dense[(k * k) % m] += 1;
    Cyclotomic gauss = Cyclotomic::from_dense(m, std::move(dense));
    // The Gauss sum is sqrt(m) for m = 1 (mod 4) and i sqrt(m) for m = 3 (mod 4).
    if (m % 4 == 3) gauss *= Cyclotomic::root_of_unity(4, 3);
    result *= gauss;
  }
  return result;
}

std::string to_string(const Cyclotomic& a) {
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : a.terms()) {
    const bool negative = sgn(t.coeff) < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational magnitude = abs(t.coeff);
    if (t.exponent == 0) {
      out += to_string(magnitude);
      continue;
    }
    if (magnitude != 1) out += to_string(magnitude) + "*";
    out += "E(" + std::to_string(a.order()) + ")";
    if (t.exponent != 1) out += "^" + std::to_string(t.exponent);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& a) { return os << to_string(a); }

}  // namespace fourier
