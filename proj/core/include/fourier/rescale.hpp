#pragma once

#include <vector>

#include "fourier/interval.hpp"
#include "fourier/matrix.hpp"

namespace fourier {

/// The three forms of a Fourier matrix plus the data derived from them.
///
///   s_ij = S_ij / S_i0        p_ij = s_ij * s_0j
///   delta_j = p_0j            d_i = sum_j |s_ij|^2      order = d_0
///
/// Rows and columns keep the input order.
struct FourierTriple {
  ExactMatrix S;
  ExactMatrix s;
  ExactMatrix P;
  std::vector<Cyclotomic> degrees;
  std::vector<Cyclotomic> norms;
  Cyclotomic order;
  Permutation involution;

  std::size_t rank() const { return S.rank(); }
};

/// Divides each row by its first entry, then scales each column by the first
/// entry of the result. Requires S_i0 real and positive; does not require S
/// to be unitary or to have integral fusion constants.
FourierTriple from_S(const ExactMatrix& S, unsigned max_precision_bits = kDefaultMaxPrecisionBits);

/// Inverse rescaling: s_ij = p_ij / sqrt(p_0j), S_ij = s_ij / sqrt(d_i).
/// Degrees and norms must be positive rationals.
FourierTriple from_P(const ExactMatrix& P);

/// Builds P from an s-matrix (p_ij = s_ij s_0j) and rescales it.
FourierTriple from_s(const ExactMatrix& s);

/// from_P(from_S(S).P).S == S.
bool roundtrip_check(const ExactMatrix& S, unsigned max_precision_bits = kDefaultMaxPrecisionBits);

}  // namespace fourier
