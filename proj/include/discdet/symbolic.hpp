#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "discdet/ff.hpp"
#include "discdet/sets.hpp"

namespace discdet {

/// Sparse polynomial over F_p in at most 7 variables, terms kept in descending
/// graded lexicographic order (x1 > x2 > ...). Exponents are packed into one
/// 64-bit key: total degree in the top byte, then one byte per variable, so
/// monomial products are key sums and grlex comparison is integer comparison.
class MultiPoly {
 public:
  static constexpr int kMaxVars = 7;
  static constexpr int kMaxDegree = 255;
  using Term = std::pair<std::uint64_t, Residue>;

  MultiPoly(const PrimeCtx& ctx, int nvars);

  static MultiPoly constant(const PrimeCtx& ctx, int nvars, Residue c);
  /// The variable x_{i+1} for 0-based i.
  static MultiPoly variable(const PrimeCtx& ctx, int nvars, int i);
  static MultiPoly monomial(const PrimeCtx& ctx, const std::vector<int>& exps, Residue c = 1);

  const PrimeCtx& ctx() const { return ctx_; }
  int nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;
  Residue coeff(const std::vector<int>& exps) const;
  std::vector<int> exponents(std::uint64_t key) const;

  Residue eval(const std::vector<Residue>& point) const;
  MultiPoly scaled(Residue c) const;
  MultiPoly pow(std::uint64_t e) const;

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  /// Multivariate division by b in grlex order: returns (quotient, remainder).
  static std::pair<MultiPoly, MultiPoly> divmod(const MultiPoly& a, const MultiPoly& b);
  /// a / b when the division is exact; throws InvalidArgument otherwise.
  static MultiPoly divide_exact(const MultiPoly& a, const MultiPoly& b);

  /// e.g. "x1^2 + 4*x1*x2 + x2^2"; "0" for the zero polynomial.
  std::string str() const;

  std::uint64_t pack(const std::vector<int>& exps) const;

 private:
  static MultiPoly from_map_sorted(const PrimeCtx& ctx, int nvars, std::vector<Term> terms);

  PrimeCtx ctx_;
  int nvars_;
  std::vector<Term> terms_;  // descending keys, nonzero coefficients
};

/// Coefficients s_0 = 1, s_1, ..., s_r of (x - x1)...(x - xr), so that
/// f(x) = sum_i s_i x^{r-i}.
std::vector<MultiPoly> generic_monic(int r, const PrimeCtx& ctx);

/// prod_{i<j} (x_i - x_j)^g.
MultiPoly delta_power(int r, std::uint64_t g, const PrimeCtx& ctx);

/// Fraction-free elimination with row pivoting; all divisions are exact.
MultiPoly det_bareiss(std::vector<std::vector<MultiPoly>> entries);

/// M_d(f^e) for the generic monic f of degree r, entries in x1..xr.
std::vector<std::vector<MultiPoly>> generic_m_matrix(int r, std::uint64_t e, std::int64_t d, const PrimeCtx& ctx);

struct Theorem1Report {
  bool holds = false;
  Residue epsilon = 0;
  std::int64_t g = 0;
  MultiPoly lhs;
  MultiPoly rhs;
};

/// Compares det M_d(f^e) with eps * delta^g as polynomials in the roots.
/// Needs t in B(p) (NotInB) and r <= 5, p <= 7 (ScaleRefused).
Theorem1Report theorem1_check(const PrimeCtx& ctx, const Triple& t);

/// For t in D(p): is det M_d(f^e) divisible by delta^{2e-(p-1)}?
/// Same desk-scale limits as theorem1_check.
bool lemma2_divisible(const PrimeCtx& ctx, const Triple& t);

}  // namespace discdet
