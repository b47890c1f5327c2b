#include "fourier/analysis.hpp"

#include <algorithm>
#include <sstream>

#include "fourier/error.hpp"
#include "fourier/genlib.hpp"

namespace fourier {
namespace {

std::string tuple_string(const std::vector<std::size_t>& w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.size(); ++i) out += (i ? "," : "") + std::to_string(w[i]);
  return out + ")";
}

bool all_rational(const std::vector<Cyclotomic>& xs) {
  return std::all_of(xs.begin(), xs.end(), [](const Cyclotomic& x) { return x.is_rational(); });
}

void require_fourier(const FourierTriple& triple, const FusionOptions& options) {
  const AxiomReport report = verify_fourier(triple.S, options);
  if (!report.all_passed()) {
    std::string failed;
    for (const auto& id : report.failures()) failed += (failed.empty() ? "" : ", ") + id;
    throw Error(ErrorCode::HypothesisNotMet, "S is not a Fourier matrix (fails " + failed + ")");
  }
}

Hypothesis require_hypothesis(const FourierTriple& triple) {
  const Hypothesis h = hypothesis_of(triple);
  if (h == Hypothesis::neither) {
    throw Error(ErrorCode::HypothesisNotMet,
                "the algebra is neither homogeneous nor of prime order with integer degrees");
  }
  return h;
}

std::int64_t element_order(const std::vector<std::vector<std::size_t>>& table, std::size_t g) {
  std::int64_t n = 1;
  for (std::size_t x = g; x != 0; x = table[x][g]) ++n;
  return n;
}

}  // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::not_applicable: return "not_applicable";
    case Verdict::vacuous: return "vacuous";
    case Verdict::holds: return "holds";
    case Verdict::counterexample: return "COUNTEREXAMPLE";
  }
  return "?";
}

const char* to_string(Hypothesis h) {
  switch (h) {
    case Hypothesis::homogeneous: return "homogeneous";
    case Hypothesis::prime_order: return "prime_order";
    case Hypothesis::neither: return "neither";
  }
  return "?";
}

DualityReport duality_report(const FourierTriple& triple) {
  DualityReport out;
  out.product = matmul(triple.P, conj_entrywise(triple.P));
  out.product_matrix_verdict = as_scaled_permutation(out.product);
  out.is_self_dual = out.product_matrix_verdict.is_permutation &&
                     *out.product_matrix_verdict.scale == triple.order;
  out.is_normalized = out.is_self_dual && is_identity_permutation(*out.product_matrix_verdict.permutation);
  out.multiplicities_match_degrees = true;
  for (std::size_t j = 0; j < triple.rank(); ++j) {
    out.multiplicities.push_back(triple.order / triple.norms[j]);
    if (out.multiplicities_match_degrees && out.multiplicities[j] != triple.degrees[j]) {
      out.multiplicities_match_degrees = false;
      out.mismatch = j;
    }
  }
  return out;
}

IntegralityResult integrality_condition(const CAlgebra& alg) {
  const std::size_t r = alg.rank();
  if (alg.degrees.size() != r) throw Error(ErrorCode::InvalidArgument, "degree vector has wrong length");
  std::vector<Cyclotomic> root(r), root_inv(r);
  for (std::size_t j = 0; j < r; ++j) {
    const auto q = alg.degrees[j].as_rational();
    if (!q) {
      throw Error(ErrorCode::IrrationalDegree,
                  "delta_" + std::to_string(j) + " = " + to_string(alg.degrees[j]) + " is not rational");
    }
    if (sgn(*q) <= 0) {
      throw Error(ErrorCode::NonpositiveDegree, "delta_" + std::to_string(j) + " = " + to_string(*q));
    }
    root[j] = sqrt_nonneg_rational(*q);
    root_inv[j] = root[j] * Cyclotomic(Rational(1) / *q);
  }
  IntegralityResult out;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      for (std::size_t k = 0; k < r; ++k) {
        const Cyclotomic& l = alg.lambda(i, j, k);
        if (l.is_zero()) continue;
        Cyclotomic value = l * root[k] * root_inv[i] * root_inv[j];
        if (!value.is_rational_integer()) {
          out.passed = false;
          out.witness = {i, j, k};
          out.value = std::move(value);
          return out;
        }
      }
    }
  }
  return out;
}

ExactMatrix reconstruct_fourier(const CAlgebra& alg, const ExactMatrix& P, const FusionOptions& options) {
  if (alg.rank() != P.rank() || alg.degrees != P.row(0)) {
    throw Error(ErrorCode::InvalidArgument, "the algebra's degrees are not row 0 of P");
  }
  const FourierTriple triple = from_P(P);
  const DualityReport duality = duality_report(triple);
  if (!duality.is_self_dual) {
    throw Error(ErrorCode::NotSelfDual, "P conj(P) is not d_0 times a permutation matrix");
  }
  const IntegralityResult integrality = integrality_condition(alg);
  if (!integrality.passed) {
    throw Error(ErrorCode::IntegralityFailed, "lambda_ijk sqrt(delta_k/(delta_i delta_j)) at " +
                                                  tuple_string(integrality.witness) + " = " +
                                                  to_string(*integrality.value));
  }
  const AxiomReport report = verify_fourier(triple.S, options);
  if (!report.all_passed()) {
    std::ostringstream os;
    for (const auto& v : report.verdicts) {
      if (!v.passed) os << v.id << " at " << tuple_string(v.witness) << "; ";
    }
    throw Error(ErrorCode::FourierAxiomsFailed,
                "self-dual and integral, yet the rebuilt S fails: " + os.str());
  }
  return triple.S;
}

SquareOrderResult square_order_check(const FourierTriple& triple) {
  SquareOrderResult out;
  if (triple.rank() % 2 == 0) return out;
  out.determinant = determinant(triple.P);
  if (!out.determinant->is_rational_integer()) {
    out.verdict = Verdict::vacuous;
    return out;
  }
  const auto order = triple.order.as_rational();
  const bool square = order && is_integer(*order) && sgn(*order) >= 0 &&
                      exact_isqrt(order->get_num()).has_value();
  out.verdict = square ? Verdict::holds : Verdict::counterexample;
  return out;
}

ScreenResult divisibility_screen(const std::vector<Cyclotomic>& degrees) {
  if (degrees.empty()) throw Error(ErrorCode::InvalidArgument, "empty degree vector");
  std::vector<Integer> d;
  for (std::size_t j = 0; j < degrees.size(); ++j) {
    if (!degrees[j].is_rational_integer()) {
      throw Error(ErrorCode::NonIntegerDegree,
                  "degree " + std::to_string(j) + " = " + to_string(degrees[j]) + " is not an integer");
    }
    d.push_back(degrees[j].as_rational()->get_num());
    if (sgn(d.back()) <= 0) {
      throw Error(ErrorCode::InvalidArgument, "degree " + std::to_string(j) + " is not positive");
    }
  }
  if (d[0] != 1) throw Error(ErrorCode::InvalidArgument, "degree 0 must be 1");
  ScreenResult out;
  for (std::size_t j = 1; j < d.size(); ++j) {
    if (d[j] == 1) continue;
    bool divides_all = true;
    for (std::size_t i = 1; i < d.size() && divides_all; ++i) {
      divides_all = mpz_divisible_p(d[i].get_mpz_t(), d[j].get_mpz_t()) != 0;
    }
    if (divides_all) {
      out.consistent = false;
      out.witness = j;
      return out;
    }
  }
  return out;
}

std::optional<Cyclotomic> homogeneity(const FourierTriple& triple) {
  const auto& d = triple.degrees;
  if (d.size() <= 1) return Cyclotomic(1L);
  for (std::size_t i = 2; i < d.size(); ++i) {
    if (d[i] != d[1]) return std::nullopt;
  }
  return d[1];
}

Hypothesis hypothesis_of(const FourierTriple& triple) {
  if (homogeneity(triple)) return Hypothesis::homogeneous;
  const auto order = triple.order.as_rational();
  const bool integer_degrees = std::all_of(triple.degrees.begin(), triple.degrees.end(),
                                           [](const Cyclotomic& x) { return x.is_rational_integer(); });
  if (order && is_integer(*order) && is_prime(order->get_num()) && integer_degrees) {
    return Hypothesis::prime_order;
  }
  return Hypothesis::neither;
}

DegreeOneResult degree_one_check(const FourierTriple& triple, const FusionOptions& options) {
  require_fourier(triple, options);
  DegreeOneResult out;
  out.hypothesis = require_hypothesis(triple);
  for (std::size_t j = 0; j < triple.rank(); ++j) {
    if (!triple.degrees[j].is_one()) {
      out.verdict = Verdict::counterexample;
      out.witness = j;
      break;
    }
  }
  out.unique_norm = std::all_of(triple.norms.begin(), triple.norms.end(),
                                [&](const Cyclotomic& d) { return d == triple.norms[0]; });
  out.unique_norm_agrees = out.unique_norm == (out.verdict == Verdict::holds);
  return out;
}

std::vector<std::int64_t> invariant_factors_from_table(const std::vector<std::vector<std::size_t>>& table) {
  const auto n = static_cast<std::int64_t>(table.size());
  std::vector<std::int64_t> orders;
  for (std::size_t g = 0; g < table.size(); ++g) orders.push_back(element_order(table, g));
  std::vector<std::int64_t> prime_powers;
  for (const auto& [p, e] : factorize(n)) {
    // a[k] = log_p |{g : g^(p^k) = 1}|
    std::vector<int> a(static_cast<std::size_t>(e) + 2, 0);
    std::int64_t pk = 1;
    for (int k = 0; k <= e; ++k, pk *= p) {
      std::int64_t count = 0;
      for (auto o : orders) count += (pk % o == 0) ? 1 : 0;
      int log = 0;
      for (std::int64_t c = count; c > 1; c /= p) {
        if (c % p != 0) throw Error(ErrorCode::NotClosed, "element counts are not powers of " + std::to_string(p));
        ++log;
      }
      a[static_cast<std::size_t>(k)] = log;
    }
    a[static_cast<std::size_t>(e) + 1] = a[static_cast<std::size_t>(e)];
    // a[k] - a[k-1] components have exponent >= k
    std::int64_t power = p;
    for (int k = 1; k <= e; ++k, power *= p) {
      const int at_least_k = a[k] - a[k - 1];
      const int at_least_next = a[k + 1] - a[k];
      for (int c = 0; c < at_least_k - at_least_next; ++c) prime_powers.push_back(power);
    }
  }
  return canonical_invariant_factors(prime_powers);
}

ClassificationReport classify(const FourierTriple& triple, const FusionOptions& options) {
  require_fourier(triple, options);
  ClassificationReport out;
  out.hypothesis = require_hypothesis(triple);
  out.homogeneity_degree = homogeneity(triple);
  const std::size_t r = triple.rank();
  const ExactMatrix& s = triple.s;

  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      const Cyclotomic gap = triple.degrees[j] - abs2(s(i, j));
      if (sign_real(gap, options.max_precision_bits) == Sign::negative) {
        throw Error(ErrorCode::DominanceFailed,
                    "|s_ij| > s_0j at " + tuple_string({i, j}) + ": |s_ij|^2 = " + to_string(abs2(s(i, j))));
      }
    }
  }
  out.degrees_all_one = std::all_of(triple.degrees.begin(), triple.degrees.end(),
                                    [](const Cyclotomic& d) { return d.is_one(); });

  out.unimodular_entries = true;
  for (std::size_t i = 0; i < r && out.unimodular_entries; ++i) {
    for (std::size_t j = 0; j < r && out.unimodular_entries; ++j) {
      if (!abs2(s(i, j)).is_one()) {
        out.unimodular_entries = false;
        out.unimodular_witness = {i, j};
      }
    }
  }

  bool integral = true;
  bool real = true;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      integral = integral && s(i, j).is_rational_integer();
      real = real && s(i, j) == s(i, j).conj();
    }
  }

  if (out.unimodular_entries) {
    std::vector<std::vector<Cyclotomic>> columns;
    for (std::size_t j = 0; j < r; ++j) columns.push_back(s.column(j));
    std::vector<std::vector<std::size_t>> table(r, std::vector<std::size_t>(r));
    std::vector<Cyclotomic> product(r);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = i; j < r; ++j) {
        for (std::size_t l = 0; l < r; ++l) product[l] = columns[i][l] * columns[j][l];
        const auto it = std::find(columns.begin(), columns.end(), product);
        if (it == columns.end()) {
          throw Error(ErrorCode::NotClosed,
                      "the product of columns " + std::to_string(i) + " and " + std::to_string(j) +
                          " is not a column");
        }
        table[i][j] = table[j][i] = static_cast<std::size_t>(it - columns.begin());
      }
    }
    GroupAxioms axioms;
    axioms.closed = true;
    axioms.identity = true;
    axioms.inverses = true;
    axioms.associative = true;
    axioms.commutative = true;  // entrywise products commute; the table is filled symmetrically
    for (std::size_t a = 0; a < r; ++a) {
      axioms.identity = axioms.identity && table[0][a] == a;
      axioms.inverses = axioms.inverses &&
                        std::find(table[a].begin(), table[a].end(), std::size_t{0}) != table[a].end();
      for (std::size_t b = 0; b < r; ++b) {
        for (std::size_t c = 0; c < r && axioms.associative; ++c) {
          axioms.associative = table[table[a][b]][c] == table[a][table[b][c]];
        }
      }
    }
    out.group_axioms = axioms;
    if (axioms.identity && axioms.inverses && axioms.associative) {
      std::vector<std::int64_t> orders;
      for (std::size_t g = 0; g < r; ++g) orders.push_back(element_order(table, g));
      out.invariant_factors = invariant_factors_from_table(table);
      if (real) {
        out.is_elementary_abelian =
            std::all_of(orders.begin(), orders.end(), [](std::int64_t o) { return o <= 2; });
      }
      out.element_orders = std::move(orders);
    }
    out.column_group = std::move(table);
  }

  const bool unique_norm = std::all_of(triple.norms.begin(), triple.norms.end(),
                                       [&](const Cyclotomic& d) { return d == triple.norms[0]; });
  if (integral && unique_norm) {
    CuntzVerdict cuntz;
    const Cyclotomic one(1L), minus_one(-1L);
    for (std::size_t i = 0; i < r && cuntz.holds; ++i) {
      for (std::size_t j = 0; j < r && cuntz.holds; ++j) {
        if (s(i, j) != one && s(i, j) != minus_one) {
          cuntz.holds = false;
          cuntz.witness = {i, j};
        }
      }
    }
    out.cuntz = std::move(cuntz);
  }
  return out;
}

CheckResult perfect_square_degrees_check(const FourierTriple& triple) {
  CheckResult out;
  const std::size_t r = triple.rank();
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      if (!triple.s(i, j).is_rational_integer()) return out;
    }
  }
  out.verdict = Verdict::holds;
  for (std::size_t j = 0; j < r; ++j) {
    const Cyclotomic& d = triple.degrees[j];
    if (!d.is_rational_integer() || sgn(*d.as_rational()) < 0 ||
        !exact_isqrt(d.as_rational()->get_num())) {
      out.verdict = Verdict::counterexample;
      out.witness = {j};
      return out;
    }
  }
  const Tensor3 lambda = structure_constants(triple).lambda;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      for (std::size_t k = 0; k < r; ++k) {
        if (!lambda(i, j, k).is_rational()) {
          out.verdict = Verdict::counterexample;
          out.witness = {i, j, k};
          return out;
        }
      }
    }
  }
  return out;
}

CheckResult degree_divisibility_check(const FourierTriple& triple) {
  CheckResult out;
  if (!all_rational(triple.degrees)) return out;
  out.verdict = Verdict::holds;
  const auto fail = [&](std::size_t j) {
    out.verdict = Verdict::counterexample;
    out.witness = {j};
    return out;
  };
  if (!triple.order.is_rational_integer()) return fail(0);
  const Integer order = triple.order.as_rational()->get_num();
  for (std::size_t j = 0; j < triple.rank(); ++j) {
    const Cyclotomic& d = triple.degrees[j];
    const Cyclotomic& n = triple.norms[j];
    if (!d.is_rational_integer() || !n.is_rational_integer()) return fail(j);
    const Integer dj = d.as_rational()->get_num();
    const Integer nj = n.as_rational()->get_num();
    if (sgn(dj) <= 0 || sgn(nj) <= 0) return fail(j);
    if (!mpz_divisible_p(order.get_mpz_t(), dj.get_mpz_t()) ||
        !mpz_divisible_p(order.get_mpz_t(), nj.get_mpz_t())) {
      return fail(j);
    }
  }
  return out;
}

CheckResult rational_calgebra_check(const CAlgebra& alg) {
  CheckResult out;
  const std::size_t r = alg.rank();
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      for (std::size_t k = 0; k < r; ++k) {
        if (!alg.lambda(i, j, k).is_rational()) return out;
      }
    }
  }
  out.verdict = Verdict::holds;
  for (std::size_t j = 0; j < alg.degrees.size(); ++j) {
    if (!alg.degrees[j].is_rational_integer()) {
      out.verdict = Verdict::counterexample;
      out.witness = {j};
      break;
    }
  }
  return out;
}

CheckResult norm_degree_identity(const FourierTriple& triple) {
  CheckResult out;
  if (!is_unitary(triple.S) || !is_symmetric(triple.S)) return out;
  out.verdict = Verdict::holds;
  for (std::size_t j = 0; j < triple.rank(); ++j) {
    if (triple.norms[j] * triple.degrees[j] != triple.order) {
      out.verdict = Verdict::counterexample;
      out.witness = {j};
      break;
    }
  }
  return out;
}

}  // namespace fourier
