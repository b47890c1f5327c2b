#include "fourier/fusion.hpp"

#include <sstream>

#include "fourier/error.hpp"

namespace fourier {
namespace {

AxiomVerdict verdict(std::string_view id, std::string statement) {
  AxiomVerdict v;
  v.id = std::string(id);
  v.statement = std::move(statement);
  return v;
}

void fail(AxiomVerdict& v, std::vector<std::size_t> witness, std::optional<Cyclotomic> value = {},
          std::string detail = {}) {
  if (!v.passed) return;  // keep the first witness
  v.passed = false;
  v.witness = std::move(witness);
  v.value = std::move(value);
  v.detail = std::move(detail);
}

std::string summarize(const AxiomReport& report) {
  std::ostringstream os;
  bool first = true;
  for (const auto& v : report.verdicts) {
    if (v.passed) continue;
    os << (first ? "" : "; ") << v.id << " at (";
    for (std::size_t i = 0; i < v.witness.size(); ++i) os << (i ? "," : "") << v.witness[i];
    os << ")";
    if (v.value) os << " = " << *v.value;
    first = false;
  }
  return os.str();
}

// N_ijk = sum_l w_l s_li s_lj conj(s_lk) with weights w_l, symmetric in i, j.
Tensor3 fusion_tensor(const ExactMatrix& s, const std::vector<Cyclotomic>& weights) {
  const std::size_t r = s.rank();
  const ExactMatrix s_bar = conj_entrywise(s);
  Tensor3 N(r);
  std::vector<Cyclotomic> pair(r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i; j < r; ++j) {
      for (std::size_t l = 0; l < r; ++l) pair[l] = weights[l] * s(l, i) * s(l, j);
      for (std::size_t k = 0; k < r; ++k) {
        Cyclotomic sum;
        for (std::size_t l = 0; l < r; ++l) {
          if (!pair[l].is_zero()) sum += pair[l] * s_bar(l, k);
        }
        N(j, i, k) = sum;
        N(i, j, k) = std::move(sum);
      }
    }
  }
  return N;
}

void check_unitary_symmetric(const ExactMatrix& S, AxiomReport& report) {
  const std::size_t r = S.rank();
  auto unitary = verdict(axiom::kUnitary, "S conj(S)^T = I");
  const ExactMatrix gram = matmul(S, conj_transpose(S));
  for (std::size_t i = 0; i < r && unitary.passed; ++i) {
    for (std::size_t j = 0; j < r && unitary.passed; ++j) {
      const Cyclotomic expected = i == j ? Cyclotomic(1L) : Cyclotomic();
      if (gram(i, j) != expected) fail(unitary, {i, j}, gram(i, j), "(S conj(S)^T)_ij");
    }
  }
  auto symmetric = verdict(axiom::kSymmetric, "S = S^T");
  for (std::size_t i = 0; i < r && symmetric.passed; ++i) {
    for (std::size_t j = i + 1; j < r && symmetric.passed; ++j) {
      if (S(i, j) != S(j, i)) fail(symmetric, {i, j}, S(i, j), "S_ij != S_ji");
    }
  }
  report.verdicts.push_back(std::move(unitary));
  report.verdicts.push_back(std::move(symmetric));
}

void check_first_column(const ExactMatrix& S, const FusionOptions& options, AxiomReport& report) {
  auto positive = verdict(axiom::kPositiveColumn, "S_i0 > 0 for all i");
  for (std::size_t i = 0; i < S.rank() && positive.passed; ++i) {
    if (!is_real_positive(S(i, 0), options.max_precision_bits)) {
      fail(positive, {i}, S(i, 0), "S_i0 is not real and positive");
    }
  }
  report.verdicts.push_back(std::move(positive));
}

void check_integral_fusion(const ExactMatrix& S, const FusionOptions& options, AxiomReport& report) {
  const std::size_t r = S.rank();
  auto integral = verdict(axiom::kIntegralFusion,
                          options.strict_nonnegative
                              ? "N_ijk = sum_l S_li S_lj conj(S_lk) / S_l0 is a nonnegative integer"
                              : "N_ijk = sum_l S_li S_lj conj(S_lk) / S_l0 is an integer");
  for (std::size_t l = 0; l < r; ++l) {
    if (S(l, 0).is_zero()) {
      fail(integral, {l}, S(l, 0), "S_l0 = 0, so N_ijk is undefined");
      report.verdicts.push_back(std::move(integral));
      return;
    }
  }
  // S_li S_lj conj(S_lk) / S_l0 = |S_l0|^2 s_li s_lj conj(s_lk) with
  // s_li = S_li / S_l0, which keeps the products in the smaller field of s.
  ExactMatrix s(r);
  std::vector<Cyclotomic> weights(r);
  for (std::size_t l = 0; l < r; ++l) {
    const Cyclotomic lead_inv = S(l, 0).inv();
    for (std::size_t j = 0; j < r; ++j) s(l, j) = S(l, j) * lead_inv;
    weights[l] = abs2(S(l, 0));
  }
  const Tensor3 N = fusion_tensor(s, weights);
  for (std::size_t i = 0; i < r && integral.passed; ++i) {
    for (std::size_t j = 0; j < r && integral.passed; ++j) {
      for (std::size_t k = 0; k < r && integral.passed; ++k) {
        const Cyclotomic& n = N(i, j, k);
        if (!n.is_rational_integer()) {
          fail(integral, {i, j, k}, n, "N_ijk is not a rational integer");
        } else if (options.strict_nonnegative && sgn(*n.as_rational()) < 0) {
          fail(integral, {i, j, k}, n, "N_ijk is negative");
        }
      }
    }
  }
  report.verdicts.push_back(std::move(integral));
}

}  // namespace

bool AxiomReport::all_passed() const {
  for (const auto& v : verdicts) {
    if (!v.passed) return false;
  }
  return true;
}

const AxiomVerdict& AxiomReport::at(std::string_view id) const {
  for (const auto& v : verdicts) {
    if (v.id == id) return v;
  }
  throw Error(ErrorCode::InvalidArgument, "no verdict named " + std::string(id));
}

std::vector<std::string> AxiomReport::failures() const {
  std::vector<std::string> out;
  for (const auto& v : verdicts) {
    if (!v.passed) out.push_back(v.id);
  }
  return out;
}

StructureConstants structure_constants(const FourierTriple& triple) {
  const std::size_t r = triple.rank();
  std::vector<Cyclotomic> weights(r);
  for (std::size_t l = 0; l < r; ++l) weights[l] = triple.norms[l].inv();
  StructureConstants sc;
  sc.N = fusion_tensor(triple.s, weights);
  sc.lambda = Tensor3(r);
  std::vector<Cyclotomic> lead_inv(r);
  for (std::size_t k = 0; k < r; ++k) lead_inv[k] = triple.s(0, k).inv();
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      const Cyclotomic scale = triple.s(0, i) * triple.s(0, j);
      for (std::size_t k = 0; k < r; ++k) {
        if (!sc.N(i, j, k).is_zero()) sc.lambda(i, j, k) = sc.N(i, j, k) * scale * lead_inv[k];
      }
    }
  }
  return sc;
}

AxiomReport verify_fourier(const ExactMatrix& S, const FusionOptions& options) {
  AxiomReport report;
  check_unitary_symmetric(S, report);
  check_first_column(S, options, report);
  check_integral_fusion(S, options, report);
  return report;
}

AxiomReport verify_modular_datum(const ExactMatrix& S, const ExactMatrix& T,
                                 const FusionOptions& options) {
  AxiomReport report;
  check_unitary_symmetric(S, report);

  auto diagonal = verdict(axiom::kDiagonalT, "T is diagonal");
  auto finite = verdict(axiom::kFiniteOrderT, "T has finite multiplicative order");
  auto relation = verdict(axiom::kModularRelation, "(ST)^3 = S^2");
  if (T.rank() != S.rank()) {
    const std::string detail = "T has rank " + std::to_string(T.rank()) + ", S has rank " +
                               std::to_string(S.rank());
    fail(diagonal, {T.rank(), S.rank()}, {}, detail);
    fail(finite, {T.rank(), S.rank()}, {}, detail);
    fail(relation, {T.rank(), S.rank()}, {}, detail);
  } else {
    for (std::size_t i = 0; i < T.rank() && diagonal.passed; ++i) {
      for (std::size_t j = 0; j < T.rank() && diagonal.passed; ++j) {
        if (i != j && !T(i, j).is_zero()) fail(diagonal, {i, j}, T(i, j), "off-diagonal entry");
      }
    }
    // A diagonal matrix has finite order iff every diagonal entry is a root
    // of unity; off-diagonal entries make any finite order impossible to
    // certify here, so both verdicts fail together.
    if (!diagonal.passed) {
      fail(finite, diagonal.witness, diagonal.value, "T is not diagonal");
    }
    for (std::size_t i = 0; i < T.rank() && finite.passed; ++i) {
      if (!is_root_of_unity(T(i, i))) fail(finite, {i}, T(i, i), "not a root of unity");
    }
    const ExactMatrix st = matmul(S, T);
    const ExactMatrix lhs = matmul(matmul(st, st), st);
    const ExactMatrix rhs = matmul(S, S);
    for (std::size_t i = 0; i < S.rank() && relation.passed; ++i) {
      for (std::size_t j = 0; j < S.rank() && relation.passed; ++j) {
        if (lhs(i, j) != rhs(i, j)) fail(relation, {i, j}, lhs(i, j), "((ST)^3)_ij != (S^2)_ij");
      }
    }
  }
  report.verdicts.push_back(std::move(diagonal));
  report.verdicts.push_back(std::move(finite));
  check_first_column(S, options, report);
  report.verdicts.push_back(std::move(relation));
  check_integral_fusion(S, options, report);
  return report;
}

CAlgebra assemble_calgebra(const FourierTriple& triple) {
  CAlgebra alg;
  alg.lambda = structure_constants(triple).lambda;
  alg.degrees = triple.degrees;
  alg.involution = triple.involution;
  alg.order = triple.order;
  return alg;
}

CAlgebra build_calgebra(const FourierTriple& triple, const FusionOptions& options) {
  const AxiomReport fourier = verify_fourier(triple.S, options);
  if (!fourier.all_passed()) throw Error(ErrorCode::FourierAxiomsFailed, summarize(fourier));
  CAlgebra alg = assemble_calgebra(triple);
  const AxiomReport axioms = verify_calgebra(alg, options.max_precision_bits);
  if (!axioms.all_passed()) throw Error(ErrorCode::CAlgebraAxiomsFailed, summarize(axioms));
  return alg;
}

CAlgebra calgebra_from_lambda(Tensor3 lambda) {
  const std::size_t r = lambda.rank();
  CAlgebra alg;
  alg.involution.assign(r, r);
  alg.degrees.assign(r, Cyclotomic());
  for (std::size_t i = 0; i < r; ++i) {
    std::size_t hits = 0;
    for (std::size_t j = 0; j < r; ++j) {
      if (!lambda(i, j, 0).is_zero()) {
        ++hits;
        alg.involution[i] = j;
      }
    }
    if (hits != 1) {
      alg.involution[i] = r;
      continue;
    }
    alg.degrees[i] = lambda(i, alg.involution[i], 0);
  }
  for (const auto& d : alg.degrees) alg.order += d;
  alg.lambda = std::move(lambda);
  return alg;
}

AxiomReport verify_calgebra(const CAlgebra& alg, unsigned max_precision_bits) {
  const std::size_t r = alg.rank();
  const Tensor3& lam = alg.lambda;
  const auto& sigma = alg.involution;
  const auto& deg = alg.degrees;
  AxiomReport report;

  auto positive = [&](const Cyclotomic& x) { return is_real_positive(x, max_precision_bits); };

  auto involution = verdict(axiom::kInvolution, "i -> i* is an involution of the basis fixing 0");
  if (sigma.size() != r || deg.size() != r) {
    fail(involution, {sigma.size(), deg.size()}, {}, "involution or degree vector has wrong length");
  } else {
    for (std::size_t i = 0; i < r && involution.passed; ++i) {
      if (sigma[i] >= r) {
        fail(involution, {i}, {}, "no basis element b_{i*}");
      } else if (sigma[sigma[i]] != i) {
        fail(involution, {i, sigma[i]}, {}, "(i*)* != i");
      }
    }
    if (involution.passed && r > 0 && sigma[0] != 0) fail(involution, {0}, {}, "0* != 0");
  }
  const bool sigma_ok = involution.passed;
  report.verdicts.push_back(involution);

  auto real = verdict(axiom::kRealConstants, "every lambda_ijk is real");
  for (std::size_t i = 0; i < r && real.passed; ++i) {
    for (std::size_t j = 0; j < r && real.passed; ++j) {
      for (std::size_t k = 0; k < r && real.passed; ++k) {
        if (lam(i, j, k) != lam(i, j, k).conj()) fail(real, {i, j, k}, lam(i, j, k), "not real");
      }
    }
  }
  report.verdicts.push_back(real);

  auto support = verdict(axiom::kIdentitySupport, "lambda_ij0 != 0 iff j = i*");
  auto identity_positive = verdict(axiom::kIdentityPositive, "lambda_{i,i*,0} = lambda_{i*,i,0} > 0");
  auto degrees = verdict(axiom::kDegrees, "delta(b_i) = delta(b_{i*}) > 0");
  auto standard = verdict(axiom::kStandardBasis, "delta(b_i) = lambda_{i,i*,0}");
  if (!sigma_ok) {
    for (auto* v : {&support, &identity_positive, &degrees, &standard}) {
      fail(*v, involution.witness, {}, "the involution is invalid");
    }
  } else {
    for (std::size_t i = 0; i < r && support.passed; ++i) {
      for (std::size_t j = 0; j < r && support.passed; ++j) {
        const bool nonzero = !lam(i, j, 0).is_zero();
        if (nonzero != (j == sigma[i])) {
          fail(support, {i, j}, lam(i, j, 0),
               nonzero ? "lambda_ij0 != 0 with j != i*" : "lambda_{i,i*,0} = 0");
        }
      }
    }
    for (std::size_t i = 0; i < r && identity_positive.passed; ++i) {
      const Cyclotomic& a = lam(i, sigma[i], 0);
      if (a != lam(sigma[i], i, 0)) {
        fail(identity_positive, {i}, a, "lambda_{i,i*,0} != lambda_{i*,i,0}");
      } else if (!positive(a)) {
        fail(identity_positive, {i}, a, "lambda_{i,i*,0} is not positive");
      }
    }
    for (std::size_t i = 0; i < r && degrees.passed; ++i) {
      if (deg[i] != deg[sigma[i]]) {
        fail(degrees, {i}, deg[i], "delta(b_i) != delta(b_{i*})");
      } else if (!positive(deg[i])) {
        fail(degrees, {i}, deg[i], "delta(b_i) is not positive");
      }
    }
    for (std::size_t i = 0; i < r && standard.passed; ++i) {
      if (deg[i] != lam(i, sigma[i], 0)) fail(standard, {i}, deg[i], "delta(b_i) != lambda_{i,i*,0}");
    }
  }
  report.verdicts.push_back(support);
  report.verdicts.push_back(identity_positive);
  report.verdicts.push_back(degrees);

  auto homomorphism = verdict(axiom::kDegreeHomomorphism,
                              "delta(b_i) delta(b_j) = sum_k lambda_ijk delta(b_k)");
  if (deg.size() != r) {
    fail(homomorphism, {deg.size()}, {}, "degree vector has wrong length");
  } else {
    for (std::size_t i = 0; i < r && homomorphism.passed; ++i) {
      for (std::size_t j = 0; j < r && homomorphism.passed; ++j) {
        Cyclotomic sum;
        for (std::size_t k = 0; k < r; ++k) {
          if (!lam(i, j, k).is_zero()) sum += lam(i, j, k) * deg[k];
        }
        if (sum != deg[i] * deg[j]) fail(homomorphism, {i, j}, sum, "sum_k lambda_ijk delta(b_k)");
      }
    }
  }
  report.verdicts.push_back(homomorphism);
  report.verdicts.push_back(standard);

  auto commutative = verdict(axiom::kCommutativity, "lambda_ijk = lambda_jik");
  for (std::size_t i = 0; i < r && commutative.passed; ++i) {
    for (std::size_t j = i + 1; j < r && commutative.passed; ++j) {
      for (std::size_t k = 0; k < r && commutative.passed; ++k) {
        if (lam(i, j, k) != lam(j, i, k)) fail(commutative, {i, j, k}, lam(i, j, k), "lambda_ijk != lambda_jik");
      }
    }
  }
  report.verdicts.push_back(commutative);

  // (b_i b_j) b_k = b_i (b_j b_k): sum_m lambda_ijm lambda_mkl = sum_m lambda_jkm lambda_iml.
  auto associative = verdict(axiom::kAssociativity, "(b_i b_j) b_k = b_i (b_j b_k)");
  std::vector<std::vector<std::size_t>> support_of(r * r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      for (std::size_t m = 0; m < r; ++m) {
        if (!lam(i, j, m).is_zero()) support_of[i * r + j].push_back(m);
      }
    }
  }
  for (std::size_t i = 0; i < r && associative.passed; ++i) {
    for (std::size_t j = 0; j < r && associative.passed; ++j) {
      for (std::size_t k = 0; k < r && associative.passed; ++k) {
        for (std::size_t l = 0; l < r && associative.passed; ++l) {
          Cyclotomic left, right;
          for (std::size_t m : support_of[i * r + j]) {
            if (!lam(m, k, l).is_zero()) left += lam(i, j, m) * lam(m, k, l);
          }
          for (std::size_t m : support_of[j * r + k]) {
            if (!lam(i, m, l).is_zero()) right += lam(j, k, m) * lam(i, m, l);
          }
          if (left != right) fail(associative, {i, j, k, l}, left - right, "coefficient of b_l differs");
        }
      }
    }
  }
  report.verdicts.push_back(associative);
  return report;
}

}  // namespace fourier
