#include "discdet/experimental.hpp"

#include <algorithm>

#include "discdet/errors.hpp"
#include "discdet/fpmat.hpp"
#include "discdet/symbolic.hpp"

namespace discdet {

namespace {

void require_E(std::int64_t p, const Triple& t, const char* who) {
  if (!in_E(p, t)) throw InvalidArgument(std::string(who) + ": " + t.str() + " is not in E(" + std::to_string(p) + ")");
}

Residue det_m_or_one(const FpPoly& f, std::int64_t e, std::int64_t d) {
  return d == 0 ? 1 % f.ctx().p() : m_det(f, static_cast<std::uint64_t>(e), d, CoeffPath::Dense);
}

// Compositions k of e into r nonnegative parts, visited with their multinomial weight.
template <typename Fn>
void for_each_composition(std::size_t r, std::uint64_t e, Fn&& fn) {
  std::vector<std::uint64_t> k(r, 0);
  auto rec = [&](auto&& self, std::size_t pos, std::uint64_t left) -> void {
    if (pos + 1 == r) {
      k[pos] = left;
      fn(k);
      return;
    }
    for (std::uint64_t v = 0; v <= left; ++v) {
      k[pos] = v;
      self(self, pos + 1, left - v);
    }
  };
  rec(rec, 0, e);
}

}  // namespace

bool in_E(std::int64_t p, const Triple& t) {
  const auto [r, e, d] = t;
  return r >= 2 && e >= 0 && e <= p - 1 && d >= 0 && d <= r - 1 && d <= p && r - 1 - d <= p &&
         d * (p - 1) <= r * e && r * e <= (d + 1) * (p - 1);
}

std::vector<Triple> enumerate_E(std::int64_t p, std::int64_t r_max) {
  std::vector<Triple> out;
  for (std::int64_t r = 2; r <= r_max; ++r)
    for (std::int64_t e = 0; e <= p - 1; ++e)
      for (std::int64_t d = 0; d <= r - 1; ++d)
        if (in_E(p, {r, e, d})) out.push_back({r, e, d});
  return out;
}

Triple hat(std::int64_t p, const Triple& t) { return Triple{t.r, p - 1 - t.e, t.r - 1 - t.d}; }

Residue epsilon_E(const PrimeCtx& ctx, const Triple& t) {
  const auto p = static_cast<std::int64_t>(ctx.p());
  require_E(p, t, "epsilon_E");
  const auto [r, e, d] = t;
  const std::int64_t sgn = r * (r + 1) / 2 * (1 + e) + (r + 1) * d;
  const Residue f1 = ctx.fact(static_cast<std::uint64_t>((d + 1) * (p - 1) - r * e));
  const Residue f2 = ctx.pow(ctx.fact(static_cast<std::uint64_t>(e)), static_cast<std::uint64_t>(r));
  return ctx.mul(ctx.sign(sgn), ctx.mul(f1, f2));
}

Eq1Report check_equality1(const PrimeCtx& ctx, const Triple& t, const FpPoly& f) {
  const auto p = static_cast<std::int64_t>(ctx.p());
  if (p == 2) throw InvalidArgument("check_equality1: p must be odd");
  require_E(p, t, "check_equality1");
  if (f.degree() != t.r) throw InvalidArgument("check_equality1: f must have degree r");
  const Triple th = hat(p, t);
  const Residue den = det_m_or_one(f, th.e, th.d);
  if (den == 0) throw Singular("check_equality1: det M_dhat(f^ehat) vanishes; resample f");
  const std::int64_t a = t.d * (p - 1) - (t.r - 1) * t.e;
  const std::int64_t b = t.e - (p - 1) / 2;
  const Residue s0 = f.lead();
  const Residue disc = discriminant_formal(f);
  if (disc == 0 && b != 0) throw Singular("check_equality1: Delta(f) vanishes; resample f");

  Residue lhs = det_m_or_one(f, t.e, t.d);
  Residue rhs = ctx.mul(epsilon_E(ctx, t), den);
  auto absorb = [&](Residue base, std::int64_t k) {
    if (k >= 0) rhs = ctx.mul(rhs, ctx.pow(base, static_cast<std::uint64_t>(k)));
    else lhs = ctx.mul(lhs, ctx.pow(base, static_cast<std::uint64_t>(-k)));
  };
  absorb(s0, a);
  absorb(disc, b);
  return Eq1Report{lhs == rhs, lhs, rhs};
}

Eq1Report check_equality1_random(const PrimeCtx& ctx, const Triple& t, std::mt19937_64& rng) {
  std::uniform_int_distribution<Residue> co(0, ctx.p() - 1);
  std::uniform_int_distribution<Residue> nz(1, ctx.p() - 1);
  for (int attempt = 0; attempt < 100; ++attempt) {
    std::vector<Residue> c(static_cast<std::size_t>(t.r) + 1);
    for (auto& v : c) v = co(rng);
    c.back() = nz(rng);
    try {
      return check_equality1(ctx, t, FpPoly(ctx, c));
    } catch (const Singular&) {
      continue;
    }
  }
  throw Error("check_equality1_random: no admissible polynomial after 100 draws for " + t.str());
}

Residue glynn_coeff(const FpMatrix& a, std::uint64_t e) {
  const PrimeCtx& ctx = a.ctx();
  if (!a.square() || a.rows() == 0) throw InvalidArgument("glynn_coeff: A must be square and nonempty");
  if (e >= ctx.p()) throw InvalidArgument("glynn_coeff: e must be at most p-1");
  const std::size_t r = a.rows();
  double cells = 1;
  for (std::size_t i = 0; i < r; ++i) cells *= static_cast<double>(e + 1);
  if (cells > 1e7) throw ScaleRefused("glynn_coeff: (e+1)^r exceeds 10^7");

  // Dense coefficient array over exponent vectors with every exponent <= e.
  std::vector<std::size_t> stride(r, 1);
  for (std::size_t j = 1; j < r; ++j) stride[j] = stride[j - 1] * (e + 1);
  const auto total = static_cast<std::size_t>(cells);
  std::vector<Residue> cur(total, 0), next(total, 0);
  cur[0] = 1 % ctx.p();
  for (std::size_t i = 0; i < r; ++i) {
    // Terms of (sum_j a_ij X_j)^e: e!/prod k_j! prod a_ij^{k_j} X^k.
    std::vector<std::pair<std::size_t, Residue>> terms;
    for_each_composition(r, e, [&](const std::vector<std::uint64_t>& k) {
      Residue c = ctx.fact(e);
      std::size_t off = 0;
      for (std::size_t j = 0; j < r; ++j) {
        c = ctx.mul(c, ctx.mul(ctx.inv_fact(k[j]), ctx.pow(a(i, j), k[j])));
        off += k[j] * stride[j];
      }
      if (c) terms.push_back({off, c});
    });
    std::fill(next.begin(), next.end(), 0);
    std::vector<std::uint64_t> exps(r, 0);
    for (std::size_t idx = 0; idx < total; ++idx) {
      if (idx) {
        for (std::size_t j = 0; j < r; ++j) {
          if (++exps[j] <= e) break;
          exps[j] = 0;
        }
      }
      if (cur[idx] == 0) continue;
      for (const auto& [off, c] : terms) {
        // Skip products that overflow some exponent past e.
        std::size_t probe = off;
        bool ok = true;
        for (std::size_t j = r; j-- > 0;) {
          const std::size_t kj = probe / stride[j];
          probe %= stride[j];
          if (exps[j] + kj > e) {
            ok = false;
            break;
          }
        }
        if (ok) next[idx + off] = ctx.add(next[idx + off], ctx.mul(cur[idx], c));
      }
    }
    std::swap(cur, next);
  }
  std::size_t target = 0;
  for (std::size_t j = 0; j < r; ++j) target += e * stride[j];
  return cur[target];
}

GlynnReport check_glynn_theorem(const FpMatrix& a) {
  const PrimeCtx& ctx = a.ctx();
  const Residue lhs = glynn_coeff(a, ctx.p() - 1);
  const Residue rhs = ctx.pow(det(a), ctx.p() - 1);
  return GlynnReport{lhs == rhs, lhs, rhs};
}

Eq2Report check_equality2(const FpMatrix& a, std::uint64_t e) {
  const PrimeCtx& ctx = a.ctx();
  const Residue dA = det(a);
  if (dA == 0) throw Singular("check_equality2: A must be invertible");
  if (e >= ctx.p()) throw InvalidArgument("check_equality2: e must be at most p-1");
  const std::uint64_t ehat = ctx.p() - 1 - e;
  const auto r = static_cast<std::int64_t>(a.rows());
  const Residue num = glynn_coeff(a, e);
  const Residue den = glynn_coeff(adjugate(a), ehat);
  const Residue power = ctx.pow_signed(dA, static_cast<std::int64_t>(ctx.p()) - 1 - r * static_cast<std::int64_t>(ehat));
  Eq2Status status = Eq2Status::ZeroDenominator;
  if (den != 0) status = num == ctx.mul(power, den) ? Eq2Status::Holds : Eq2Status::Fails;
  return Eq2Report{status, num, den, power};
}

S0Report s0_recursions(const PrimeCtx& ctx, const Triple& t, const std::vector<Residue>& tail) {
  const auto p = static_cast<std::int64_t>(ctx.p());
  require_E(p, t, "s0_recursions");
  const auto [r, e, d] = t;
  if (static_cast<std::int64_t>(tail.size()) != r) throw InvalidArgument("s0_recursions: tail must hold s_1..s_r");
  // g(x) = s_1 x^{r-1} + ... + s_r, f = s0 x^r + g.
  std::vector<Residue> gc(static_cast<std::size_t>(r));
  for (std::int64_t k = 1; k <= r; ++k) gc[static_cast<std::size_t>(r - k)] = tail[static_cast<std::size_t>(k - 1)];
  const FpPoly g(ctx, gc);
  std::vector<FpPoly> gpow{FpPoly::constant(ctx, 1)};
  for (std::int64_t k = 1; k <= e; ++k) gpow.push_back(gpow.back() * g);

  // c_i(s0) = sum_k C(e,k) s0^k [x^{i-rk}] g^{e-k}, as one-variable MultiPolys.
  auto coeff_poly = [&](std::int64_t i) {
    MultiPoly c(ctx, 1);
    for (std::int64_t k = 0; k <= e; ++k) {
      const std::int64_t at = i - r * k;
      if (at < 0) break;
      const Residue v = ctx.mul(ctx.binom_small(static_cast<std::uint64_t>(e), k), gpow[static_cast<std::size_t>(e - k)][static_cast<std::size_t>(at)]);
      if (v) c = c + MultiPoly::monomial(ctx, {static_cast<int>(k)}, v);
    }
    return c;
  };
  MultiPoly det_s0 = MultiPoly::constant(ctx, 1, 1);
  if (d > 0) {
    std::vector<std::vector<MultiPoly>> m(static_cast<std::size_t>(d), std::vector<MultiPoly>(static_cast<std::size_t>(d), MultiPoly(ctx, 1)));
    for (std::int64_t i = 1; i <= d; ++i)
      for (std::int64_t j = 1; j <= d; ++j) m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = coeff_poly(i * p + j - d - 1);
    det_s0 = det_bareiss(std::move(m));
  }
  S0Report rep{};
  for (const auto& [key, c] : det_s0.terms()) {
    const auto k = static_cast<std::size_t>(det_s0.exponents(key)[0]);
    if (rep.det_coeffs.size() <= k) rep.det_coeffs.resize(k + 1, 0);
    rep.det_coeffs[k] = c;
  }
  rep.valuation = det_s0.is_zero() ? -1 : det_s0.exponents(det_s0.terms().back().first)[0];
  const std::int64_t a = d * (p - 1) - (r - 1) * e;
  rep.expected = std::max<std::int64_t>(0, a);
  auto coeff_at = [&](std::int64_t k) { return k < 0 ? Residue{0} : det_s0.coeff({static_cast<int>(k)}); };

  const Triple down1{r - 1, e, d - 1};
  rep.recursive1_applies = r >= 3 && a >= 0 && d >= 1 && in_E(p, down1);
  if (rep.recursive1_applies) {
    const std::int64_t k = r * e - d * (p - 1);
    Residue rhs = ctx.mul(ctx.sign(d - 1), ctx.mul(binom_mod_p(ctx, static_cast<std::uint64_t>(e), k),
                                                   ctx.pow(tail[0], static_cast<std::uint64_t>(k))));
    rhs = ctx.mul(rhs, det_m_or_one(g, e, d - 1));
    rep.recursive1_holds = coeff_at(a) == rhs;
  }
  const Triple down2{r - 1, e, d};
  rep.recursive2_applies = r >= 3 && a <= 0 && d <= r - 2 && in_E(p, down2);
  if (rep.recursive2_applies) {
    const Residue rhs = det_m_or_one(g, e, d);
    rep.recursive2_holds = coeff_at(0) == rhs;
  }
  return rep;
}

bool delta_valuation_exact(const PrimeCtx& ctx, const Triple& t) {
  const auto p = static_cast<std::int64_t>(ctx.p());
  require_E(p, t, "delta_valuation_exact");
  if (p > 7 || t.r > 4 || p == 2) throw ScaleRefused("delta_valuation_exact: limited to odd p <= 7, r <= 4");
  const int r = static_cast<int>(t.r);
  const MultiPoly det = t.d == 0 ? MultiPoly::constant(ctx, r, 1)
                                 : det_bareiss(generic_m_matrix(r, static_cast<std::uint64_t>(t.e), t.d, ctx));
  if (det.is_zero()) return false;
  const std::int64_t b = std::max<std::int64_t>(0, t.e - (p - 1) / 2);
  const MultiPoly delta2 = delta_power(r, 2, ctx);
  MultiPoly q = det;
  for (std::int64_t k = 0; k < b; ++k) {
    auto [quot, rem] = MultiPoly::divmod(q, delta2);
    if (!rem.is_zero()) return false;
    q = quot;
  }
  return !MultiPoly::divmod(q, delta2).second.is_zero();
}

}  // namespace discdet
