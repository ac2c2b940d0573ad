#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "discdet/matrix.hpp"
#include "discdet/poly.hpp"

namespace discdet {

/// Data for M_d(f^e)^{-1} M_d(f^{e+1}) with d = r-1: (r,e,r-1) and
/// (r,e+1,r-1) both in B_0(p), n = p-1-e, f monic of degree r.
struct StructuredSpec {
  PrimeCtx ctx;
  std::int64_t r;
  std::int64_t e;
  std::int64_t n;
  FpPoly f;

  /// s_0 = 1, s_1, ..., s_r with f = sum s_k x^{r-k}.
  std::vector<Residue> s() const;
};

/// (r,e,r-1) and (r,e+1,r-1) both lie in B_0(p).
bool structured_admissible(std::int64_t p, std::int64_t r, std::int64_t e);

/// Validates admissibility and that f is monic of degree r.
StructuredSpec make_spec(const PrimeCtx& ctx, std::int64_t r, std::int64_t e, const FpPoly& f);

/// Random monic f with Delta(f) != 0 and det M_{r-1}(f^e) != 0; at most 100 draws.
StructuredSpec sample_spec(const PrimeCtx& ctx, std::int64_t r, std::int64_t e, std::mt19937_64& rng);

/// beta_0 .. beta_{count-1} of phi(t)^lambda, phi = sum phi[k] t^k with phi[0] = 1,
/// by k beta_k = sum_j ((lambda+1) j - k) phi_j beta_{k-j}. IndexTooLarge when count > p.
std::vector<Residue> beta_series(const PrimeCtx& ctx, const std::vector<Residue>& phi, Residue lambda,
                                 std::size_t count);

/// beta_l(lambda) for phi(t) = 1 + s_1 t + ... + s_r t^r. IndexTooLarge when l >= p.
Residue beta(const StructuredSpec& spec, std::uint64_t l, const Rational& lambda);

/// P(lambda_1..lambda_m)_{ij} = beta_{i-j}(lambda_i).
FpMatrix p_matrix(const PrimeCtx& ctx, const std::vector<Residue>& phi, const std::vector<Rational>& lambdas);
/// Q(mu_1..mu_m)_{ij} = beta_{i-j}(mu_j).
FpMatrix q_matrix(const PrimeCtx& ctx, const std::vector<Residue>& phi, const std::vector<Rational>& mus);
/// U_m(lambda) = P(lambda, ..., lambda).
FpMatrix u_matrix(const PrimeCtx& ctx, const std::vector<Residue>& phi, const Rational& lambda, std::size_t m);
/// S_m(psi)_{ij} = a_{i-j} for the power series psi = sum a_k t^k.
FpMatrix s_matrix(const PrimeCtx& ctx, const std::vector<Residue>& series, std::size_t m);

/// First m coefficients of r - t phi'(t)/phi(t).
std::vector<Residue> log_derivative_series(const PrimeCtx& ctx, const std::vector<Residue>& phi, std::int64_t r,
                                           std::size_t m);

struct PQZB {
  FpMatrix B;
  FpMatrix Q;
  FpMatrix Z;
  FpMatrix P;
};

/// The (r-1) x (r-1) matrices B_r (reversed Bezout matrix of f' and f - x f'/r),
/// Q_r, Z_{r,n} = diag(n / (rn - (r-i))) and P_r.
PQZB build_PQZB(const StructuredSpec& spec);

struct Theorem5Report {
  bool holds;
  FpMatrix lhs;  // M_d(f^e)^{-1} M_d(f^{e+1})
  FpMatrix rhs;  // B_r Q_r Z_{r,n} P_r
};

/// Throws Singular when det M_d(f^e) = 0.
Theorem5Report check_theorem5(const StructuredSpec& spec);

struct AuxReport {
  std::vector<std::pair<std::string, bool>> identities;
  bool all() const;
};

/// The intermediate identities of the proof route: L V = M(e+1), L R = 0,
/// R_1 times its claimed inverse, the three-term formula for B_r, the
/// reduced-matrix facts for R^um, det B_r, and the final reduction.
AuxReport check_aux_lemmas(const StructuredSpec& spec);

/// P(-(r-1)/r..-(r-m)/r) S_m(r - t phi'/phi) Q((r-1)/r..(r-m)/r) = r I and
/// P(..) diag(r-1..r-m) Q(..) = diag(r-1..r-m).
std::pair<bool, bool> check_residue_identities(const PrimeCtx& ctx, const std::vector<Residue>& phi, std::int64_t r,
                                               std::size_t m);

}  // namespace discdet
