#include "fourier/genlib.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "fourier/error.hpp"

namespace fourier {
namespace {

// Partitions of e in descending lexicographic order: [e], [e-1, 1], ...
void partitions(int e, int max_part, std::vector<int>& current, std::vector<std::vector<int>>& out) {
  if (e == 0) {
    out.push_back(current);
    return;
  }
  for (int part = std::min(e, max_part); part >= 1; --part) {
    current.push_back(part);
    partitions(e - part, part, current, out);
    current.pop_back();
  }
}

std::int64_t ipow(std::int64_t base, int exp) {
  std::int64_t out = 1;
  while (exp-- > 0) out *= base;
  return out;
}

}  // namespace

std::int64_t AbelianGroupSpec::order() const {
  std::int64_t n = 1;
  for (auto f : factors) n *= f;
  return n;
}

std::string AbelianGroupSpec::name() const {
  if (factors.empty()) return "Z1";
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    out += (i ? "xZ" : "Z") + std::to_string(factors[i]);
  }
  return out;
}

void validate(const AbelianGroupSpec& spec) {
  for (auto f : spec.factors) {
    if (f < 2) throw Error(ErrorCode::InvalidArgument, "cyclic factor " + std::to_string(f) + " < 2");
  }
}

ExactMatrix abelian_character_table(const AbelianGroupSpec& spec) {
  validate(spec);
  ExactMatrix table = ExactMatrix::identity(1);
  for (auto n : spec.factors) {
    ExactMatrix cyclic(static_cast<std::size_t>(n));
    for (std::int64_t a = 0; a < n; ++a) {
      for (std::int64_t b = 0; b < n; ++b) {
        cyclic(static_cast<std::size_t>(a), static_cast<std::size_t>(b)) =
            Cyclotomic::root_of_unity(n, (a * b) % n);
      }
    }
    table = tensor_product(table, cyclic);
  }
  return table;
}

ExactMatrix tensor_product(const ExactMatrix& a, const ExactMatrix& b) {
  const std::size_t ra = a.rank(), rb = b.rank();
  ExactMatrix out(ra * rb);
  for (std::size_t i = 0; i < ra; ++i) {
    for (std::size_t j = 0; j < ra; ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < rb; ++k) {
        for (std::size_t l = 0; l < rb; ++l) out(i * rb + k, j * rb + l) = a(i, j) * b(k, l);
      }
    }
  }
  return out;
}

ExactMatrix rank2_family(const Rational& n) {
  if (sgn(n) <= 0) throw Error(ErrorCode::InvalidArgument, "n = " + to_string(n) + " must be positive");
  return ExactMatrix{{1L, n}, {1L, -1L}};
}

CAlgebra rank2_calgebra(const Rational& n) {
  if (sgn(n) <= 0) throw Error(ErrorCode::InvalidArgument, "n = " + to_string(n) + " must be positive");
  Tensor3 lambda(2);
  lambda(0, 0, 0) = 1L;
  lambda(0, 1, 1) = 1L;
  lambda(1, 0, 1) = 1L;
  lambda(1, 1, 0) = n;
  lambda(1, 1, 1) = Rational(n - 1);
  return calgebra_from_lambda(std::move(lambda));
}

std::vector<std::int64_t> canonical_invariant_factors(std::span<const std::int64_t> factors) {
  // prime -> exponents of its cyclic components
  std::map<std::int64_t, std::vector<int>> parts;
  for (auto f : factors) {
    if (f < 1) throw Error(ErrorCode::InvalidArgument, "cyclic factor " + std::to_string(f) + " < 1");
    for (const auto& [p, e] : factorize(f)) parts[p].push_back(e);
  }
  std::size_t length = 0;
  for (auto& [p, exps] : parts) {
    std::sort(exps.begin(), exps.end(), std::greater<>());
    length = std::max(length, exps.size());
  }
  // The k-th largest invariant factor collects the k-th largest prime power of every prime.
  std::vector<std::int64_t> out(length, 1);
  for (const auto& [p, exps] : parts) {
    for (std::size_t k = 0; k < exps.size(); ++k) out[length - 1 - k] *= ipow(p, exps[k]);
  }
  return out;
}

std::vector<AbelianGroupSpec> all_abelian_groups(std::int64_t max_order) {
  std::vector<AbelianGroupSpec> out;
  for (std::int64_t n = 1; n <= max_order; ++n) {
    std::vector<std::vector<std::int64_t>> choices{{}};
    for (const auto& [p, e] : factorize(n)) {
      std::vector<std::vector<int>> parts;
      std::vector<int> scratch;
      partitions(e, e, scratch, parts);
      std::vector<std::vector<std::int64_t>> next;
      for (const auto& prefix : choices) {
        for (const auto& part : parts) {
          auto factors = prefix;
          for (int k : part) factors.push_back(ipow(p, k));
          next.push_back(std::move(factors));
        }
      }
      choices = std::move(next);
    }
    for (auto& factors : choices) {
      std::sort(factors.begin(), factors.end());
      out.push_back({std::move(factors)});
    }
  }
  return out;
}

}  // namespace fourier
