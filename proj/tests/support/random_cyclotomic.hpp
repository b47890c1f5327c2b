#pragma once

#include <random>
#include <vector>

#include "fourier/cyclotomic.hpp"

namespace fourier::testing {

/// Small random cyclotomics over a spread of orders, including ones that
/// collapse to lower conductors after reduction.
class RandomCyclotomic {
 public:
  explicit RandomCyclotomic(unsigned seed,
                            std::vector<std::int64_t> orders = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 15, 16, 24})
      : rng_(seed), orders_(std::move(orders)) {}

  Rational rational(int max_num = 9, int max_den = 6) {
    std::uniform_int_distribution<int> num(-max_num, max_num);
    std::uniform_int_distribution<int> den(1, max_den);
    Rational q(num(rng_), den(rng_));
    q.canonicalize();
    return q;
  }

  Cyclotomic operator()() {
    std::uniform_int_distribution<std::size_t> pick(0, orders_.size() - 1);
    const std::int64_t n = orders_[pick(rng_)];
    std::uniform_int_distribution<int> count(1, 4);
    std::uniform_int_distribution<std::int64_t> exponent(0, n - 1);
    std::vector<Cyclotomic::Term> terms;
    for (int i = count(rng_); i > 0; --i) terms.push_back({exponent(rng_), rational()});
    return Cyclotomic::from_terms(n, terms);
  }

  Cyclotomic nonzero() {
    for (;;) {
      auto x = (*this)();
      if (!x.is_zero()) return x;
    }
  }

  std::mt19937& engine() { return rng_; }

 private:
  std::mt19937 rng_;
  std::vector<std::int64_t> orders_;
};

}  // namespace fourier::testing
