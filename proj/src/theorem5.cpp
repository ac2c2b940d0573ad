#include "discdet/theorem5.hpp"

#include "discdet/errors.hpp"
#include "discdet/fpmat.hpp"
#include "discdet/sets.hpp"

namespace discdet {

namespace {

Residue s_at(const std::vector<Residue>& s, std::int64_t k) {
  return (k < 0 || k >= static_cast<std::int64_t>(s.size())) ? 0 : s[static_cast<std::size_t>(k)];
}

Residue as_residue(const PrimeCtx& ctx, std::int64_t v) { return ctx.reduce(v); }

std::vector<Rational> lambdas(std::int64_t from_num, std::int64_t to_num, std::int64_t den) {
  std::vector<Rational> out;
  const std::int64_t step = from_num <= to_num ? 1 : -1;
  for (std::int64_t k = from_num;; k += step) {
    out.push_back(Rational(BigInt(k), BigInt(den)));
    if (k == to_num) break;
  }
  return out;
}

FpMatrix diag(const PrimeCtx& ctx, const std::vector<Residue>& v) {
  FpMatrix m(ctx, v.size(), v.size());
  for (std::size_t i = 0; i < v.size(); ++i) m(i, i) = v[i];
  return m;
}

}  // namespace

std::vector<Residue> StructuredSpec::s() const {
  std::vector<Residue> out(static_cast<std::size_t>(r) + 1);
  for (std::int64_t k = 0; k <= r; ++k) out[static_cast<std::size_t>(k)] = f[static_cast<std::size_t>(r - k)];
  return out;
}

bool structured_admissible(std::int64_t p, std::int64_t r, std::int64_t e) {
  return in_B(p, Triple{r, e, r - 1}) == SetTag::BZero && in_B(p, Triple{r, e + 1, r - 1}) == SetTag::BZero;
}

StructuredSpec make_spec(const PrimeCtx& ctx, std::int64_t r, std::int64_t e, const FpPoly& f) {
  const auto p = static_cast<std::int64_t>(ctx.p());
  if (!structured_admissible(p, r, e)) {
    throw InvalidArgument("make_spec: (r,e,r-1) and (r,e+1,r-1) must both lie in B_0(p)");
  }
  if (f.degree() != r || f.lead() != 1) throw InvalidArgument("make_spec: f must be monic of degree r");
  return StructuredSpec{ctx, r, e, p - 1 - e, f};
}

StructuredSpec sample_spec(const PrimeCtx& ctx, std::int64_t r, std::int64_t e, std::mt19937_64& rng) {
  if (!structured_admissible(static_cast<std::int64_t>(ctx.p()), r, e))
    throw InvalidArgument("sample_spec: (r,e,r-1) and (r,e+1,r-1) must both lie in B_0(p)");
  std::uniform_int_distribution<Residue> co(0, ctx.p() - 1);
  for (int attempt = 0; attempt < 100; ++attempt) {
    std::vector<Residue> c(static_cast<std::size_t>(r) + 1);
    for (auto& v : c) v = co(rng);
    c.back() = 1;
    const FpPoly f(ctx, c);
    if (discriminant(f) == 0) continue;
    if (m_det(f, static_cast<std::uint64_t>(e), r - 1) == 0) continue;
    return make_spec(ctx, r, e, f);
  }
  throw Error("sample_spec: no admissible polynomial after 100 draws");
}

std::vector<Residue> beta_series(const PrimeCtx& ctx, const std::vector<Residue>& phi, Residue lambda,
                                 std::size_t count) {
  if (count > ctx.p()) throw IndexTooLarge("beta_series: index must stay below p");
  if (phi.empty() || phi[0] != 1 % ctx.p()) throw InvalidArgument("beta_series: phi(0) must be 1");
  std::vector<Residue> b(count, 0);
  if (count == 0) return b;
  b[0] = 1 % ctx.p();
  const Residue lam1 = ctx.add(lambda, 1 % ctx.p());
  for (std::size_t k = 1; k < count; ++k) {
    Residue acc = 0;
    for (std::size_t j = 1; j <= k && j < phi.size(); ++j) {
      const Residue w = ctx.sub(ctx.mul(lam1, as_residue(ctx, static_cast<std::int64_t>(j))),
                                as_residue(ctx, static_cast<std::int64_t>(k)));
      acc = ctx.add(acc, ctx.mul(w, ctx.mul(phi[j], b[k - j])));
    }
    b[k] = ctx.mul(acc, ctx.inv(as_residue(ctx, static_cast<std::int64_t>(k))));
  }
  return b;
}

Residue beta(const StructuredSpec& spec, std::uint64_t l, const Rational& lambda) {
  if (l >= spec.ctx.p()) throw IndexTooLarge("beta: index must stay below p");
  return beta_series(spec.ctx, spec.s(), rational_mod_p(spec.ctx, lambda), l + 1)[l];
}

FpMatrix p_matrix(const PrimeCtx& ctx, const std::vector<Residue>& phi, const std::vector<Rational>& lams) {
  const std::size_t m = lams.size();
  FpMatrix out(ctx, m, m);
  for (std::size_t i = 0; i < m; ++i) {
    const auto b = beta_series(ctx, phi, rational_mod_p(ctx, lams[i]), i + 1);
    for (std::size_t j = 0; j <= i; ++j) out(i, j) = b[i - j];
  }
  return out;
}

FpMatrix q_matrix(const PrimeCtx& ctx, const std::vector<Residue>& phi, const std::vector<Rational>& mus) {
  const std::size_t m = mus.size();
  FpMatrix out(ctx, m, m);
  for (std::size_t j = 0; j < m; ++j) {
    const auto b = beta_series(ctx, phi, rational_mod_p(ctx, mus[j]), m - j);
    for (std::size_t i = j; i < m; ++i) out(i, j) = b[i - j];
  }
  return out;
}

FpMatrix u_matrix(const PrimeCtx& ctx, const std::vector<Residue>& phi, const Rational& lambda, std::size_t m) {
  return s_matrix(ctx, beta_series(ctx, phi, rational_mod_p(ctx, lambda), m), m);
}

FpMatrix s_matrix(const PrimeCtx& ctx, const std::vector<Residue>& series, std::size_t m) {
  FpMatrix out(ctx, m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= i; ++j) out(i, j) = i - j < series.size() ? series[i - j] : 0;
  return out;
}

std::vector<Residue> log_derivative_series(const PrimeCtx& ctx, const std::vector<Residue>& phi, std::int64_t r,
                                           std::size_t m) {
  // 1/phi by series inversion, then r - t phi' * (1/phi).
  std::vector<Residue> inv(m, 0);
  if (m == 0) return inv;
  inv[0] = ctx.inv(phi[0]);
  for (std::size_t k = 1; k < m; ++k) {
    Residue acc = 0;
    for (std::size_t j = 1; j <= k && j < phi.size(); ++j) acc = ctx.add(acc, ctx.mul(phi[j], inv[k - j]));
    inv[k] = ctx.neg(ctx.mul(acc, inv[0]));
  }
  std::vector<Residue> out(m, 0);
  for (std::size_t k = 0; k < m; ++k) {
    Residue acc = 0;
    for (std::size_t j = 1; j <= k && j < phi.size(); ++j) {
      acc = ctx.add(acc, ctx.mul(ctx.mul(as_residue(ctx, static_cast<std::int64_t>(j)), phi[j]), inv[k - j]));
    }
    out[k] = ctx.neg(acc);
  }
  out[0] = ctx.add(out[0], as_residue(ctx, r));
  return out;
}

PQZB build_PQZB(const StructuredSpec& spec) {
  const PrimeCtx& ctx = spec.ctx;
  const std::int64_t r = spec.r;
  const auto d = static_cast<std::size_t>(r - 1);
  const auto phi = spec.s();
  const Residue inv_r = ctx.inv(as_residue(ctx, r));

  const FpPoly fp = spec.f.derivative();
  const FpPoly g = spec.f - (fp.shifted(1)).scaled(inv_r);
  const FpMatrix B = reversal(ctx, d) * bezout_matrix(fp, g);

  const FpMatrix Q = q_matrix(ctx, phi, lambdas(-1, -(r - 1), r));
  const FpMatrix P = p_matrix(ctx, phi, lambdas(-(r - 1), -1, r));
  std::vector<Residue> zeta(d);
  for (std::size_t i = 1; i <= d; ++i) {
    const Residue den = as_residue(ctx, r * spec.n - (r - static_cast<std::int64_t>(i)));
    zeta[i - 1] = ctx.mul(as_residue(ctx, spec.n), ctx.inv(den));
  }
  return PQZB{B, Q, diag(ctx, zeta), P};
}

Theorem5Report check_theorem5(const StructuredSpec& spec) {
  const std::int64_t d = spec.r - 1;
  const FpMatrix M = m_matrix(spec.f, static_cast<std::uint64_t>(spec.e), d);
  if (det(M) == 0) throw Singular("check_theorem5: det M_d(f^e) vanishes; resample f");
  const FpMatrix M1 = m_matrix(spec.f, static_cast<std::uint64_t>(spec.e + 1), d);
  const FpMatrix lhs = inverse(M) * M1;
  const PQZB m = build_PQZB(spec);
  const FpMatrix rhs = m.B * m.Q * m.Z * m.P;
  return Theorem5Report{lhs == rhs, lhs, rhs};
}

bool AuxReport::all() const {
  for (const auto& [name, ok] : identities)
    if (!ok) return false;
  return true;
}

AuxReport check_aux_lemmas(const StructuredSpec& spec) {
  const PrimeCtx& ctx = spec.ctx;
  const auto p = static_cast<std::int64_t>(ctx.p());
  const std::int64_t r = spec.r;
  const std::int64_t d = r - 1;
  const auto R = static_cast<std::size_t>(r);
  const auto D = static_cast<std::size_t>(d);
  const auto s = spec.s();
  const Residue n = as_residue(ctx, spec.n);
  const Residue inv_r = ctx.inv(as_residue(ctx, r));
  AuxReport rep;

  // L_{ij} = c_{ip+j-2r} of f^e, 1-based, d x (r+d).
  const auto idx_max = static_cast<std::uint64_t>(d * p + d - r);
  std::vector<std::uint64_t> want;
  for (std::uint64_t k = 0; k <= idx_max; ++k) want.push_back(k);
  const auto c = coeff_window(spec.f, static_cast<std::uint64_t>(spec.e), want);
  auto coef = [&](std::int64_t k) { return (k < 0 || k > static_cast<std::int64_t>(idx_max)) ? Residue{0} : c[static_cast<std::size_t>(k)]; };
  FpMatrix L(ctx, D, R + D);
  for (std::int64_t i = 1; i <= d; ++i)
    for (std::int64_t j = 1; j <= r + d; ++j) L(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = coef(i * p + j - 2 * r);

  FpMatrix V(ctx, R + D, D);
  for (std::int64_t i = 1; i <= r + d; ++i)
    for (std::int64_t j = 1; j <= d; ++j) V(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = s_at(s, i - j);

  // R_{ij} = (n(r-m) - (r-j)) s_m with m = i-j.
  FpMatrix Rm(ctx, R + D, R);
  for (std::int64_t i = 1; i <= r + d; ++i)
    for (std::int64_t j = 1; j <= r; ++j) {
      const std::int64_t m = i - j;
      const Residue w = ctx.sub(ctx.mul(n, as_residue(ctx, r - m)), as_residue(ctx, r - j));
      Rm(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = ctx.mul(w, s_at(s, m));
    }
  const FpMatrix M = m_matrix(spec.f, static_cast<std::uint64_t>(spec.e), d);
  const FpMatrix M1 = m_matrix(spec.f, static_cast<std::uint64_t>(spec.e + 1), d);
  rep.identities.emplace_back("L V = M_d(f^(e+1))", L * V == M1);
  rep.identities.emplace_back("L R = 0", L * Rm == FpMatrix(ctx, D, R));
  rep.identities.emplace_back("right block of L = M_d(f^e)", L.block(0, R, D, D) == M);

  const FpMatrix R1 = Rm.block(0, 0, R, R);
  const FpMatrix R2 = Rm.block(R, 0, D, R);
  const auto phi = s;
  std::vector<Residue> zeta(R);
  for (std::size_t i = 1; i <= R; ++i) {
    const Residue den = as_residue(ctx, r * spec.n - (r - static_cast<std::int64_t>(i)));
    zeta[i - 1] = ctx.mul(n, ctx.inv(den));
  }
  const FpMatrix R1inv = q_matrix(ctx, phi, lambdas(r - 1, 0, r)) * diag(ctx, zeta) *
                         p_matrix(ctx, phi, lambdas(-(2 * r - 1), -r, r));
  const FpMatrix R1inv_claimed = R1inv.scaled(ctx.inv(n));
  rep.identities.emplace_back("R_1 times claimed inverse = I", R1 * R1inv_claimed == FpMatrix::identity(ctx, R));

  // R^um: columns j < r are s_{i-j}; the last column is ((2r-i)/r) s_{i-r}.
  FpMatrix Rum(ctx, R + D, R);
  for (std::int64_t i = 1; i <= r + d; ++i)
    for (std::int64_t j = 1; j <= r; ++j) {
      Residue v = s_at(s, i - j);
      if (j == r) v = ctx.mul(v, ctx.mul(as_residue(ctx, 2 * r - i), inv_r));
      Rum(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = v;
    }
  const FpMatrix Rum1 = Rum.block(0, 0, R, R);
  const FpMatrix Rum2 = Rum.block(R, 0, D, R);
  const FpMatrix X = Rum2 * inverse(Rum1);
  FpMatrix left_um(ctx, D, R + D);
  for (std::size_t i = 0; i < D; ++i) {
    for (std::size_t j = 0; j < R; ++j) left_um(i, j) = ctx.neg(X(i, j));
    left_um(i, R + i) = 1;
  }
  rep.identities.emplace_back("(-R2um R1um^-1 | I) V = 0", left_um * V == FpMatrix(ctx, D, D));
  const FpMatrix Y = R2 * inverse(R1);
  bool last_col = true;
  for (std::size_t i = 0; i < D; ++i) last_col = last_col && Y(i, R - 1) == X(i, R - 1);
  rep.identities.emplace_back("last column of R2 R1^-1 - R2um R1um^-1 = 0", last_col);

  FpMatrix left(ctx, D, R + D);
  for (std::size_t i = 0; i < D; ++i) {
    for (std::size_t j = 0; j < R; ++j) left(i, j) = ctx.neg(Y(i, j));
    left(i, R + i) = 1;
  }
  rep.identities.emplace_back("(-R2 R1^-1 | I) V = M^-1 M'", left * V == inverse(M) * M1);

  // Three-term formula for B_r with numeric s_i.
  FpMatrix T1(ctx, D, D), S1(ctx, D, D), T2(ctx, D, D), S2(ctx, D, D), u(ctx, D, 1), v(ctx, 1, D);
  for (std::int64_t a = 1; a <= d; ++a) {
    for (std::int64_t b = 1; b <= d; ++b) {
      const auto ia = static_cast<std::size_t>(a - 1), ib = static_cast<std::size_t>(b - 1);
      if (b >= a) {
        T1(ia, ib) = ctx.mul(as_residue(ctx, b - a), s_at(s, r - (b - a)));
        T2(ia, ib) = s_at(s, r - (b - a));
      }
      if (a >= b) {
        S1(ia, ib) = s_at(s, a - b);
        S2(ia, ib) = ctx.mul(as_residue(ctx, r - (a - b)), s_at(s, a - b));
      }
    }
    u(static_cast<std::size_t>(a - 1), 0) = ctx.mul(as_residue(ctx, r - a), s_at(s, a));
    v(0, static_cast<std::size_t>(a - 1)) = ctx.mul(as_residue(ctx, r - a), s_at(s, r - a));
  }
  const PQZB m = build_PQZB(spec);
  const FpMatrix formula = T2 * S2 - T1 * S1 - (u * v).scaled(inv_r);
  rep.identities.emplace_back("three-term formula = B_r", formula == m.B);

  const Residue det_expected = ctx.mul(ctx.sign(r * (r - 1) / 2), ctx.mul(inv_r, discriminant(spec.f)));
  rep.identities.emplace_back("det B_r = (-1)^{r(r-1)/2} Delta(f) / r", det(m.B) == det_expected);
  return rep;
}

std::pair<bool, bool> check_residue_identities(const PrimeCtx& ctx, const std::vector<Residue>& phi, std::int64_t r,
                                               std::size_t m) {
  const auto mi = static_cast<std::int64_t>(m);
  const FpMatrix P = p_matrix(ctx, phi, lambdas(-(r - 1), -(r - mi), r));
  const FpMatrix Q = q_matrix(ctx, phi, lambdas(r - 1, r - mi, r));
  const FpMatrix S = s_matrix(ctx, log_derivative_series(ctx, phi, r, m), m);
  std::vector<Residue> j(m);
  for (std::size_t i = 0; i < m; ++i) j[i] = as_residue(ctx, r - 1 - static_cast<std::int64_t>(i));
  const FpMatrix J = diag(ctx, j);
  const bool first = P * S * Q == FpMatrix::identity(ctx, m).scaled(as_residue(ctx, r));
  const bool second = P * J * Q == J;
  return {first, second};
}

}  // namespace discdet
