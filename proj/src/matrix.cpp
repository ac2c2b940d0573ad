#include "discdet/matrix.hpp"

#include <sstream>
#include <utility>

#include "discdet/errors.hpp"

namespace discdet {

FpMatrix::FpMatrix(PrimeCtx ctx, std::size_t rows, std::size_t cols)
    : ctx_(std::move(ctx)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

FpMatrix::FpMatrix(PrimeCtx ctx, std::size_t rows, std::size_t cols,
                   const std::vector<std::int64_t>& values)
    : FpMatrix(std::move(ctx), rows, cols) {
  if (values.size() != rows * cols) {
    throw InvalidArgument("FpMatrix: expected " + std::to_string(rows * cols) + " entries, got " +
                          std::to_string(values.size()));
  }
  for (std::size_t i = 0; i < values.size(); ++i) data_[i] = ctx_.reduce(values[i]);
}

FpMatrix FpMatrix::identity(const PrimeCtx& ctx, std::size_t n) {
  FpMatrix m(ctx, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1 % ctx.p();
  return m;
}

FpMatrix FpMatrix::transpose() const {
  FpMatrix t(ctx_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

FpMatrix FpMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw InvalidArgument("FpMatrix::block out of range");
  FpMatrix b(ctx_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

FpMatrix operator*(const FpMatrix& a, const FpMatrix& b) {
  if (a.cols_ != b.rows_) throw InvalidArgument("FpMatrix: shape mismatch in product");
  const PrimeCtx& ctx = a.ctx_;
  FpMatrix c(ctx, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Residue x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) = ctx.add(c(i, j), ctx.mul(x, b(k, j)));
    }
  }
  return c;
}

FpMatrix operator+(const FpMatrix& a, const FpMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvalidArgument("FpMatrix: shape mismatch");
  FpMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] = a.ctx_.add(a.data_[i], b.data_[i]);
  return c;
}

FpMatrix operator-(const FpMatrix& a, const FpMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvalidArgument("FpMatrix: shape mismatch");
  FpMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] = a.ctx_.sub(a.data_[i], b.data_[i]);
  return c;
}

FpMatrix FpMatrix::scaled(Residue c) const {
  FpMatrix m = *this;
  for (auto& x : m.data_) x = ctx_.mul(x, c);
  return m;
}

std::string FpMatrix::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j);
    os << "]";
  }
  os << "]";
  return os.str();
}

Residue det(const FpMatrix& m) {
  if (!m.square()) throw InvalidArgument("det: matrix is not square");
  const PrimeCtx& ctx = m.ctx();
  const std::size_t n = m.rows();
  std::vector<Residue> a = m.data();
  Residue result = 1 % ctx.p();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv * n + col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      for (std::size_t j = col; j < n; ++j) std::swap(a[piv * n + j], a[col * n + j]);
      result = ctx.neg(result);
    }
    const Residue pv = a[col * n + col];
    result = ctx.mul(result, pv);
    const Residue pinv = ctx.inv(pv);
    for (std::size_t i = col + 1; i < n; ++i) {
      const Residue f = ctx.mul(a[i * n + col], pinv);
      if (f == 0) continue;
      for (std::size_t j = col; j < n; ++j) {
        a[i * n + j] = ctx.sub(a[i * n + j], ctx.mul(f, a[col * n + j]));
      }
    }
  }
  return result;
}

FpMatrix inverse(const FpMatrix& m) {
  if (!m.square()) throw InvalidArgument("inverse: matrix is not square");
  const PrimeCtx& ctx = m.ctx();
  const std::size_t n = m.rows();
  FpMatrix a = m;
  FpMatrix inv = FpMatrix::identity(ctx, n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a(piv, col) == 0) ++piv;
    if (piv == n) throw Singular("inverse: matrix is singular");
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(piv, j), a(col, j));
        std::swap(inv(piv, j), inv(col, j));
      }
    }
    const Residue pinv = ctx.inv(a(col, col));
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) = ctx.mul(a(col, j), pinv);
      inv(col, j) = ctx.mul(inv(col, j), pinv);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col) continue;
      const Residue f = a(i, col);
      if (f == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) = ctx.sub(a(i, j), ctx.mul(f, a(col, j)));
        inv(i, j) = ctx.sub(inv(i, j), ctx.mul(f, inv(col, j)));
      }
    }
  }
  return inv;
}

FpMatrix adjugate(const FpMatrix& m) {
  if (!m.square()) throw InvalidArgument("adjugate: matrix is not square");
  const PrimeCtx& ctx = m.ctx();
  const std::size_t n = m.rows();
  FpMatrix adj(ctx, n, n);
  if (n == 1) {
    adj(0, 0) = 1 % ctx.p();
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      FpMatrix minor(ctx, n - 1, n - 1);
      for (std::size_t a = 0, ra = 0; a < n; ++a) {
        if (a == i) continue;
        for (std::size_t b = 0, cb = 0; b < n; ++b) {
          if (b == j) continue;
          minor(ra, cb++) = m(a, b);
        }
        ++ra;
      }
      const Residue c = det(minor);
      adj(j, i) = ((i + j) % 2 == 0) ? c : ctx.neg(c);
    }
  }
  return adj;
}

FpMatrix reversal(const PrimeCtx& ctx, std::size_t n) {
  FpMatrix j(ctx, n, n);
  for (std::size_t i = 0; i < n; ++i) j(i, n - 1 - i) = 1 % ctx.p();
  return j;
}

}  // namespace discdet
