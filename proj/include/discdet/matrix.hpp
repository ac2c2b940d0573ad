#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "discdet/ff.hpp"

namespace discdet {

/// Dense row-major matrix over F_p.
class FpMatrix {
 public:
  FpMatrix(PrimeCtx ctx, std::size_t rows, std::size_t cols);
  /// Entries are reduced into [0, p-1]; `values` must hold rows*cols entries.
  FpMatrix(PrimeCtx ctx, std::size_t rows, std::size_t cols, const std::vector<std::int64_t>& values);

  static FpMatrix identity(const PrimeCtx& ctx, std::size_t n);

  const PrimeCtx& ctx() const { return ctx_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Residue& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Residue operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const std::vector<Residue>& data() const { return data_; }

  FpMatrix transpose() const;
  /// Rows [r0, r0+nr) and columns [c0, c0+nc).
  FpMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

  friend FpMatrix operator*(const FpMatrix& a, const FpMatrix& b);
  friend FpMatrix operator+(const FpMatrix& a, const FpMatrix& b);
  friend FpMatrix operator-(const FpMatrix& a, const FpMatrix& b);
  FpMatrix scaled(Residue c) const;
  friend bool operator==(const FpMatrix& a, const FpMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const FpMatrix& a, const FpMatrix& b) { return !(a == b); }

  std::string str() const;

 private:
  PrimeCtx ctx_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Residue> data_;
};

/// Determinant by Gaussian elimination, first nonzero pivot in column order.
/// The 0x0 matrix has determinant 1.
Residue det(const FpMatrix& m);

/// Throws Singular when det(m) == 0.
FpMatrix inverse(const FpMatrix& m);

/// Cofactor transpose: m * adjugate(m) == det(m) * I.
FpMatrix adjugate(const FpMatrix& m);

/// The n x n anti-identity J_n.
FpMatrix reversal(const PrimeCtx& ctx, std::size_t n);

}  // namespace discdet
