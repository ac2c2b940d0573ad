#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "discdet/ff.hpp"
#include "discdet/matrix.hpp"

namespace discdet {

/// Dense univariate polynomial over F_p, coefficient i at index i.
/// The zero polynomial has an empty coefficient vector and degree -1.
class FpPoly {
 public:
  explicit FpPoly(PrimeCtx ctx) : ctx_(std::move(ctx)) {}
  FpPoly(PrimeCtx ctx, std::vector<Residue> coeffs);

  /// Coefficients given as signed integers, ascending degree.
  static FpPoly from_ints(const PrimeCtx& ctx, const std::vector<std::int64_t>& coeffs);
  static FpPoly monomial(const PrimeCtx& ctx, std::size_t deg, Residue c = 1);
  static FpPoly constant(const PrimeCtx& ctx, Residue c);

  const PrimeCtx& ctx() const { return ctx_; }
  const std::vector<Residue>& coeffs() const { return c_; }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Residue lead() const { return c_.empty() ? 0 : c_.back(); }
  Residue operator[](std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  /// Number of nonzero coefficients.
  std::size_t terms() const;
  /// Largest v with x^v | f (0 for the zero polynomial).
  std::size_t low_degree() const;

  Residue eval(Residue x) const;
  FpPoly derivative() const;
  FpPoly scaled(Residue c) const;
  FpPoly shifted(std::size_t k) const;  // multiply by x^k

  friend FpPoly operator+(const FpPoly& a, const FpPoly& b);
  friend FpPoly operator-(const FpPoly& a, const FpPoly& b);
  friend FpPoly operator*(const FpPoly& a, const FpPoly& b);
  friend bool operator==(const FpPoly& a, const FpPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const FpPoly& a, const FpPoly& b) { return a.c_ != b.c_; }

  /// Quotient and remainder; throws InvalidArgument on a zero divisor.
  static std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b);

  std::string str() const;

 private:
  void trim();
  PrimeCtx ctx_;
  std::vector<Residue> c_;
};

/// f^e by binary exponentiation; f^0 = 1.
FpPoly poly_pow(const FpPoly& f, std::uint64_t e);

/// Raw product of coefficient vectors (schoolbook below 64 terms, Karatsuba above).
std::vector<Residue> multiply_coeffs(const PrimeCtx& ctx, const std::vector<Residue>& a,
                                     const std::vector<Residue>& b);

enum class CoeffPath {
  Auto,         // sparse multinomial for <= 3 terms, else recurrence, else dense
  Dense,        // materialize f^e
  Recurrence,   // holonomic recurrence; falls back to dense once an index reaches p
  Multinomial,  // sum over multinomial terms; f must have at most 3 terms
};

/// Selected coefficients of f^e, `indices` ascending.
///
/// The recurrence path uses a0*k*c_k = sum_j ((e+1)j - k) a_j c_{k-j} for the
/// x-free part of f and is only valid for k < p. When an index is out of its
/// reach it falls back to the dense path, or throws RecurrenceUnavailable if
/// `allow_dense` is false.
std::vector<Residue> coeff_window(const FpPoly& f, std::uint64_t e,
                                  const std::vector<std::uint64_t>& indices,
                                  CoeffPath path = CoeffPath::Auto, bool allow_dense = true);

/// Sylvester matrix for the actual degrees of F and G.
FpMatrix sylvester(const FpPoly& F, const FpPoly& G);
/// Sylvester matrix with nominal degrees m >= deg F, n >= deg G.
FpMatrix sylvester(const FpPoly& F, const FpPoly& G, std::size_t m, std::size_t n);

/// Res(F, G) for the actual degrees, by Euclidean remainders.
Residue resultant(const FpPoly& F, const FpPoly& G);
/// Res(F, G) taken with nominal degrees m >= deg F, n >= deg G.
Residue resultant(const FpPoly& F, const FpPoly& G, std::size_t m, std::size_t n);

/// Bezout matrix: row index = power of x, column index = power of y.
FpMatrix bezout_matrix(const FpPoly& F, const FpPoly& G);

/// (-1)^{m(m-1)/2} Res(f, f') / a_0. Throws CharDividesDegree when p | deg f.
Residue discriminant(const FpPoly& f);

/// Discriminant as the integer polynomial in the coefficients, reduced mod p.
/// Uses the nominal-degree resultant, so it is also valid when p | deg f.
Residue discriminant_formal(const FpPoly& f);

enum class SpecialKind { XrMinus1, XrMinusXMinus1, XrMinusX };

/// Closed-form discriminants of x^r - 1, x^r - x - 1 (p | r), x^r - x.
Residue special_discriminant(SpecialKind kind, std::int64_t r, const PrimeCtx& ctx);

/// Discriminant of x^n + a x^k + b (0 < k < n) by Swan's formula.
Residue trinomial_discriminant(const PrimeCtx& ctx, std::int64_t n, std::int64_t k, Residue a,
                               Residue b);

}  // namespace discdet
