#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "discdet/matrix.hpp"
#include "discdet/poly.hpp"
#include "discdet/sets.hpp"

namespace discdet {

/// r >= 2, 0 <= e <= p-1, 0 <= d <= r-1, d <= p, r-1-d <= p, d(p-1) <= re <= (d+1)(p-1).
bool in_E(std::int64_t p, const Triple& t);

/// Members with r <= r_max in lexicographic order.
std::vector<Triple> enumerate_E(std::int64_t p, std::int64_t r_max);

/// (r, p-1-e, r-1-d).
Triple hat(std::int64_t p, const Triple& t);

/// (-1)^{r(r+1)(1+e)/2 + (r+1)d} ((d+1)(p-1) - re)! (e!)^r.
Residue epsilon_E(const PrimeCtx& ctx, const Triple& t);

struct Eq1Report {
  bool holds;
  Residue lhs;  // det M_d(f^e) times the negative-exponent factors
  Residue rhs;  // eps det M_dhat(f^ehat) times the positive-exponent factors
};

/// det M_d(f^e) / det M_dhat(f^ehat) = eps s0^{d(p-1)-(r-1)e} Delta(f)^{e-(p-1)/2},
/// checked multiplied through. Needs odd p, t in E(p), deg f = r.
/// Throws Singular when det M_dhat(f^ehat) = 0, or when Delta(f) = 0 and e != (p-1)/2.
Eq1Report check_equality1(const PrimeCtx& ctx, const Triple& t, const FpPoly& f);

/// check_equality1 on a random f of degree r, resampling singular draws (at most 100).
Eq1Report check_equality1_random(const PrimeCtx& ctx, const Triple& t, std::mt19937_64& rng);

/// Coefficient of prod X_j^e in prod_i (sum_j a_ij X_j)^e. Needs e <= p-1 and
/// (e+1)^r <= 10^7 (ScaleRefused).
Residue glynn_coeff(const FpMatrix& a, std::uint64_t e);

struct GlynnReport {
  bool holds;
  Residue lhs;
  Residue rhs;
};

/// G^{p-1}(A) = det(A)^{p-1}.
GlynnReport check_glynn_theorem(const FpMatrix& a);

enum class Eq2Status { Holds, Fails, ZeroDenominator };

struct Eq2Report {
  Eq2Status status;
  Residue numerator;    // G^e(A)
  Residue denominator;  // G^{ehat}(adj A)
  Residue power;        // det(A)^{p-1-r*ehat}
};

/// G^e(A) / G^{ehat}(adj A) = det(A)^{p-1-r ehat}. Throws Singular when det A = 0.
/// A vanishing denominator is reported as ZeroDenominator, not as a failure.
Eq2Report check_equality2(const FpMatrix& a, std::uint64_t e);

struct S0Report {
  std::int64_t valuation;  // s0-adic valuation of det M_d(f^e); -1 for the zero determinant
  std::int64_t expected;   // max(0, d(p-1) - (r-1)e)
  bool recursive1_applies;
  bool recursive1_holds;
  bool recursive2_applies;
  bool recursive2_holds;
  std::vector<Residue> det_coeffs;  // det M_d(f^e) as a polynomial in s0, constant term first
};

/// Treats s0 as a variable and s_1..s_r = tail as fixed values, and checks the
/// two s0 -> 0 specializations of det M_d(f^e).
S0Report s0_recursions(const PrimeCtx& ctx, const Triple& t, const std::vector<Residue>& tail);

/// For t in E(p) at desk scale (p <= 7, r <= 4): det M_d(f^e) in the roots is
/// divisible by Delta^{max(0, e-(p-1)/2)} and not by one more power of Delta.
bool delta_valuation_exact(const PrimeCtx& ctx, const Triple& t);

}  // namespace discdet
