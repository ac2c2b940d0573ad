#include "discdet/fpmat.hpp"

#include "discdet/errors.hpp"

namespace discdet {

FpMatrix m_matrix(const FpPoly& f, std::uint64_t e, std::int64_t d, CoeffPath path) {
  const PrimeCtx& ctx = f.ctx();
  const auto p = static_cast<std::int64_t>(ctx.p());
  if (d < 1 || d > p) throw InvalidArgument("m_matrix: d must lie in [1, p]");
  std::vector<std::uint64_t> idx;
  idx.reserve(static_cast<std::size_t>(d * d));
  for (std::int64_t i = 1; i <= d; ++i)
    for (std::int64_t j = 1; j <= d; ++j) idx.push_back(static_cast<std::uint64_t>(i * p + j - d - 1));
  const auto c = coeff_window(f, e, idx, path);
  const auto n = static_cast<std::size_t>(d);
  FpMatrix M(ctx, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) M(i, j) = c[i * n + j];
  return M;
}

Residue m_det(const FpPoly& f, std::uint64_t e, std::int64_t d, CoeffPath path) {
  if (d == 0) return 1 % f.ctx().p();
  return det(m_matrix(f, e, d, path));
}

FpMatrix scaled_m_matrix(const FpPoly& f, std::uint64_t e, std::int64_t d) {
  FpMatrix M = m_matrix(f, e, d);
  const PrimeCtx& ctx = f.ctx();
  const auto p = static_cast<std::int64_t>(ctx.p());
  for (std::int64_t j = 1; j <= d; ++j) {
    const auto top = static_cast<std::uint64_t>(p - d + j - 1);
    const Residue s = ctx.mul(ctx.fact(top), ctx.inv_fact(static_cast<std::uint64_t>(j - 1)));
    for (std::size_t i = 0; i < M.rows(); ++i) {
      M(i, static_cast<std::size_t>(j - 1)) = ctx.mul(M(i, static_cast<std::size_t>(j - 1)), s);
    }
  }
  return M;
}

FpMatrix lower_toeplitz(const PrimeCtx& ctx, const std::vector<Residue>& col, std::size_t n) {
  FpMatrix T(ctx, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) T(i, j) = (i - j) < col.size() ? col[i - j] : 0;
  return T;
}

}  // namespace discdet
