#pragma once

#include <cstdint>

#include "discdet/matrix.hpp"
#include "discdet/poly.hpp"

namespace discdet {

/// M_d(f^e): the d x d matrix with (i,j) entry c_{ip+j-d-1} (1-based) of f^e.
FpMatrix m_matrix(const FpPoly& f, std::uint64_t e, std::int64_t d, CoeffPath path = CoeffPath::Auto);

/// det M_d(f^e); d = 0 gives the empty determinant 1.
Residue m_det(const FpPoly& f, std::uint64_t e, std::int64_t d, CoeffPath path = CoeffPath::Auto);

/// M_d(f^e) with column j scaled by the falling factorial (p-d+j-1)!/(j-1)!.
FpMatrix scaled_m_matrix(const FpPoly& f, std::uint64_t e, std::int64_t d);

/// Lower triangular Toeplitz matrix with first column `col`, size n.
FpMatrix lower_toeplitz(const PrimeCtx& ctx, const std::vector<Residue>& col, std::size_t n);

}  // namespace discdet
