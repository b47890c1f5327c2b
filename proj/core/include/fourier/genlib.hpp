#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fourier/fusion.hpp"
#include "fourier/matrix.hpp"

namespace fourier {

/// Z_{n_1} x ... x Z_{n_m}; the empty list is the trivial group.
struct AbelianGroupSpec {
  std::vector<std::int64_t> factors;

  std::int64_t order() const;
  /// "Z2xZ2xZ3", or "Z1" for the trivial group.
  std::string name() const;
};

/// Throws InvalidArgument if a factor is < 2.
void validate(const AbelianGroupSpec& spec);

/// P_ab = prod_f zeta_{n_f}^{a_f b_f}. Elements and characters are listed
/// lexicographically over digit tuples, the first factor most significant,
/// so the table is the Kronecker product of the cyclic tables in order.
ExactMatrix abelian_character_table(const AbelianGroupSpec& spec);

/// Kronecker product; (A x B)_{(a,b),(c,d)} = A_ac B_bd.
ExactMatrix tensor_product(const ExactMatrix& a, const ExactMatrix& b);

/// [[1, n], [1, -1]] for rational n > 0.
ExactMatrix rank2_family(const Rational& n);

/// The rank-2 algebra b_1^2 = n b_0 + (n-1) b_1 with b_1* = b_1 and
/// degrees (1, n).
CAlgebra rank2_calgebra(const Rational& n);

/// Invariant factors n_1 | n_2 | ... | n_k of the group, ascending.
std::vector<std::int64_t> canonical_invariant_factors(std::span<const std::int64_t> factors);

/// One spec per isomorphism type of order <= max_order, written as sorted
/// prime-power factors (so Z6 appears as [2, 3]). Ordered by group order,
/// then by the descending-partition order of each prime part.
std::vector<AbelianGroupSpec> all_abelian_groups(std::int64_t max_order);

}  // namespace fourier
