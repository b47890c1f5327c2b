#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fourier/interval.hpp"
#include "fourier/matrix.hpp"
#include "fourier/rescale.hpp"

namespace fourier {

struct FusionOptions {
  /// Require N_ijk >= 0 in addition to N_ijk in Z.
  bool strict_nonnegative = false;
  unsigned max_precision_bits = kDefaultMaxPrecisionBits;
};

/// Dense r x r x r array of cyclotomics.
class Tensor3 {
 public:
  Tensor3() = default;
  explicit Tensor3(std::size_t rank) : rank_(rank), data_(rank * rank * rank) {}

  std::size_t rank() const { return rank_; }
  const Cyclotomic& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return data_[(i * rank_ + j) * rank_ + k];
  }
  Cyclotomic& operator()(std::size_t i, std::size_t j, std::size_t k) {
    return data_[(i * rank_ + j) * rank_ + k];
  }

  friend bool operator==(const Tensor3&, const Tensor3&) = default;

 private:
  std::size_t rank_ = 0;
  std::vector<Cyclotomic> data_;
};

/// N_ijk = sum_l s_li s_lj conj(s_lk) / d_l  (constants of the s-columns)
/// lambda_ijk = N_ijk s_0i s_0j / s_0k       (constants of the P-columns)
struct StructureConstants {
  Tensor3 N;
  Tensor3 lambda;
};

StructureConstants structure_constants(const FourierTriple& triple);

/// Commutative algebra with basis b_0 = 1, ..., b_{r-1}:
/// b_i b_j = sum_k lambda_ijk b_k, involution i -> i*, degrees delta(b_i).
struct CAlgebra {
  Tensor3 lambda;
  std::vector<Cyclotomic> degrees;
  Permutation involution;
  Cyclotomic order;

  std::size_t rank() const { return lambda.rank(); }
};

struct AxiomVerdict {
  std::string id;
  std::string statement;
  bool passed = true;
  /// First failing index tuple; never empty on failure.
  std::vector<std::size_t> witness;
  std::optional<Cyclotomic> value;
  std::string detail;
};

struct AxiomReport {
  std::vector<AxiomVerdict> verdicts;

  bool all_passed() const;
  /// Throws InvalidArgument for an unknown id.
  const AxiomVerdict& at(std::string_view id) const;
  /// Ids of the failed verdicts, in report order.
  std::vector<std::string> failures() const;
};

namespace axiom {
inline constexpr std::string_view kUnitary = "i-unitary";
inline constexpr std::string_view kSymmetric = "i-symmetric";
inline constexpr std::string_view kDiagonalT = "ii-t-diagonal";
inline constexpr std::string_view kFiniteOrderT = "ii-t-finite-order";
inline constexpr std::string_view kPositiveColumn = "iii-positive-first-column";
inline constexpr std::string_view kModularRelation = "iv-st-cubed-equals-s-squared";
inline constexpr std::string_view kIntegralFusion = "v-integral-fusion";

inline constexpr std::string_view kInvolution = "1-involution";
inline constexpr std::string_view kRealConstants = "2-real-structure-constants";
inline constexpr std::string_view kIdentitySupport = "3-identity-support";
inline constexpr std::string_view kIdentityPositive = "4-identity-coefficient-positive";
inline constexpr std::string_view kDegrees = "5-degrees-positive-and-invariant";
inline constexpr std::string_view kDegreeHomomorphism = "degree-homomorphism";
inline constexpr std::string_view kStandardBasis = "standard-basis";
inline constexpr std::string_view kAssociativity = "associativity";
inline constexpr std::string_view kCommutativity = "commutativity";
}  // namespace axiom

/// Fourier-matrix axioms: S unitary and symmetric, S_i0 > 0, and every
/// N_ijk = sum_l S_li S_lj conj(S_lk) / S_l0 a rational integer.
AxiomReport verify_fourier(const ExactMatrix& S, const FusionOptions& options = {});

/// Modular-datum axioms: the Fourier axioms plus T diagonal of finite order
/// and (ST)^3 = S^2 exactly.
AxiomReport verify_modular_datum(const ExactMatrix& S, const ExactMatrix& T,
                                 const FusionOptions& options = {});

/// C-algebra of a triple; requires verify_fourier(triple.S) to pass and
/// re-verifies the result. Throws FourierAxiomsFailed or CAlgebraAxiomsFailed.
CAlgebra build_calgebra(const FourierTriple& triple, const FusionOptions& options = {});

/// The same construction without any precondition. Used to inspect
/// character tables that do not come from a Fourier matrix.
CAlgebra assemble_calgebra(const FourierTriple& triple);

/// Ingests a structure-constant table; i* is read off the unique j with
/// lambda_ij0 != 0 and delta(b_i) = lambda_{i,i*,0}. Indices without a unique
/// partner get i* = rank (invalid), which verify_calgebra reports.
CAlgebra calgebra_from_lambda(Tensor3 lambda);

/// Axioms 1-5 of a C-algebra, the standard-basis identity, the degree map
/// homomorphism identity, commutativity and associativity of the table.
AxiomReport verify_calgebra(const CAlgebra& alg, unsigned max_precision_bits = kDefaultMaxPrecisionBits);

}  // namespace fourier
