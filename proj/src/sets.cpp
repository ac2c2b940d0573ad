#include "discdet/sets.hpp"

#include <algorithm>

#include "discdet/errors.hpp"
#include "discdet/poly.hpp"

namespace discdet {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

// g/2 as an integer; the caller guarantees g is an even integer.
std::int64_t half_g(std::int64_t p, const Triple& t) {
  const Rational g = g_exponent(p, t);
  return static_cast<std::int64_t>(g.num() / 2);
}

Residue binom_e(const PrimeCtx& ctx, std::int64_t e, std::int64_t k) {
  return binom_mod_p(ctx, static_cast<std::uint64_t>(e), k);
}

Residue epsilon_b0(const PrimeCtx& ctx, std::int64_t p, std::int64_t r, std::int64_t e) {
  const std::int64_t sgn = (r + 1) * (r + 2) / 2 + r * (r + 1) / 2 * e;
  const Residue f1 = ctx.fact(static_cast<std::uint64_t>(r * (p - 1 - e)));
  const Residue f2 = ctx.pow(ctx.fact(static_cast<std::uint64_t>(e)), static_cast<std::uint64_t>(r));
  return ctx.mul(ctx.sign(sgn), ctx.mul(f1, f2));
}

}  // namespace

std::string Triple::str() const {
  return "(" + std::to_string(r) + "," + std::to_string(e) + "," + std::to_string(d) + ")";
}

std::string tag_name(SetTag tag) {
  switch (tag) {
    case SetTag::BPlus: return "B+";
    case SetTag::BZero: return "B0";
    case SetTag::BMinus: return "B-";
    case SetTag::UOnly: return "U";
    case SetTag::C1: return "C1";
    case SetTag::C2: return "C2";
    case SetTag::C3: return "C3";
    case SetTag::C4: return "C4";
    case SetTag::E: return "E";
  }
  return "?";
}

Rational g_exponent(std::int64_t p, const Triple& t) {
  const BigInt num = BigInt(t.r) * t.e * t.d * 2 - BigInt(t.d) * (t.d + 1) * (p - 1);
  const BigInt den = BigInt(t.r) * (t.r - 1);
  return Rational(num, den);
}

std::optional<SetTag> in_B(std::int64_t p, const Triple& t) {
  const auto [r, e, d] = t;
  if (r >= 2 && r <= p && e == p - 1 && d == r) return SetTag::BPlus;
  const bool e_window = 2 * e > p - 1 && e <= p - 1;
  if (r >= 2 && r <= p + 1 && e_window && r * (p - 1 - e) <= p - 1 && d == r - 1) return SetTag::BZero;
  if (r >= 2 && e_window && r * (p - 1 - e) == p - 1 && d == r - 2) return SetTag::BMinus;
  return std::nullopt;
}

bool in_U(std::int64_t p, const Triple& t) {
  const auto [r, e, d] = t;
  if (r < 2 || e < 1 || d < 1 || d > p) return false;
  if (d * (p - 1) > r * e || r * e > r * (p - 1)) return false;
  const std::int64_t N = 2 * r * e * d - d * (d + 1) * (p - 1);
  const std::int64_t D = r * (r - 1);
  if (N <= 0) return false;
  return p == 2 ? N % D == 0 : N % (2 * D) == 0;
}

bool in_D(std::int64_t p, const Triple& t) {
  const auto [r, e, d] = t;
  return r >= 2 && 2 * e > p - 1 && e <= p - 1 && d >= 1 && d <= p && d * (p - 1) <= r * e &&
         r * e <= (d + 1) * (p - 1);
}

Residue epsilon(const PrimeCtx& ctx, const Triple& t) {
  const auto p = static_cast<std::int64_t>(ctx.p());
  const auto tag = in_B(p, t);
  if (!tag) throw NotInB("epsilon: " + t.str() + " is not in B(" + std::to_string(p) + ")");
  switch (*tag) {
    case SetTag::BZero:
      return epsilon_b0(ctx, p, t.r, t.e);
    case SetTag::BPlus:
      return ctx.mul(ctx.sign(t.r - 1), epsilon(ctx, Triple{t.r, t.e, t.d - 1}));
    case SetTag::BMinus:
      return ctx.mul(ctx.sign(t.r), epsilon(ctx, Triple{t.r, t.e, t.d + 1}));
    default:
      break;
  }
  throw NotInB("epsilon: unexpected tag");
}

Residue det_xr1(const PrimeCtx& ctx, const Triple& t) {
  const auto p = static_cast<std::int64_t>(ctx.p());
  if (!in_U(p, t) || (p - 1) % t.r != 0) {
    throw InvalidArgument("det_xr1: needs a member of U(p) with r | p-1, got " + t.str());
  }
  const std::int64_t s = (p - 1) / t.r;
  Residue v = ctx.sign(t.d * (t.d - 1) / 2 + (t.r - 1) * half_g(p, t));
  for (std::int64_t i = 1; i <= t.d; ++i) v = ctx.mul(v, binom_e(ctx, t.e, i * s));
  return v;
}

bool in_C1(std::int64_t p, const Triple& t) {
  const auto [r, e, d] = t;
  if (!in_U(p, t)) return false;
  if (d != 1 || r < 2 || r > p - 1 || (p - 1) % r != 0) return false;
  const std::int64_t s = (p - 1) / r;
  if ((e - s) % (r - 1) != 0) return false;
  const std::int64_t l = (e - s) / (r - 1);
  return l >= 1 && l <= s;
}

bool in_C2(std::int64_t p, const Triple& t) {
  const auto [r, e, d] = t;
  if (!in_U(p, t)) return false;
  if (r < 2 || r > p - 1 || (p - 1) % (r * (r - 1)) != 0) return false;
  if (d < 2 || d > r || e % (r - 1) != 0) return false;
  const std::int64_t tt = (p - 1) / (r * (r - 1));
  const std::int64_t l = e / (r - 1);
  return d * tt <= l && l <= r * tt;
}

bool in_C3(std::int64_t p, const Triple& t) {
  const auto [r, e, d] = t;
  if (!in_U(p, t)) return false;
  if (r < 3 || r > p - 1 || (p - 1) % r != 0 || (p + 1) % (r - 1) != 0) return false;
  if (d < 2 || d > r - 1 || (e + d + 1) % (r - 1) != 0) return false;
  const std::int64_t s = (p - 1) / r;
  const std::int64_t tt = (p + 1) / (r - 1);
  const std::int64_t l = (e + d + 1) / (r - 1);
  return d * (tt - s) <= l && l <= tt;
}

std::vector<CMember> enumerate_C(int j, const PrimeCtx& ctx) {
  if (j < 1 || j > 4) throw InvalidArgument("enumerate_C: j must lie in 1..4");
  const auto p = static_cast<std::int64_t>(ctx.p());
  std::vector<CMember> out;
  if (p == 2) return out;
  for (std::int64_t r = 2; r <= p - 1; ++r) {
    if ((p - 1) % r != 0) continue;
    const std::int64_t s = (p - 1) / r;
    if (j == 1) {
      for (std::int64_t l = 1; l <= s; ++l) {
        const Triple t{r, s + (r - 1) * l, 1};
        out.push_back({t, ctx.mul(ctx.sign(r * l), binom_e(ctx, t.e, s - l))});
      }
    } else if (j == 2) {
      if ((p - 1) % (r * (r - 1)) != 0) continue;
      const std::int64_t tt = (p - 1) / (r * (r - 1));
      for (std::int64_t d = 2; d <= r; ++d) {
        for (std::int64_t l = d * tt; l <= r * tt; ++l) {
          const Triple t{r, (r - 1) * l, d};
          if (!in_U(p, t)) continue;  // the parametrization admits a few g <= 0 edge cases
          Residue v = ctx.sign(r * half_g(p, t) + d * (d - 1) / 2);
          for (std::int64_t i = 1; i <= d; ++i) v = ctx.mul(v, binom_e(ctx, t.e, r * tt * i - l));
          out.push_back({t, v});
        }
      }
    } else if (j == 3) {
      if (r < 3 || (p + 1) % (r - 1) != 0) continue;
      const std::int64_t tt = (p + 1) / (r - 1);
      for (std::int64_t d = 2; d <= r - 1; ++d) {
        for (std::int64_t l = d * (tt - s); l <= tt; ++l) {
          const Triple t{r, (r - 1) * l - (d + 1), d};
          if (!in_U(p, t)) continue;
          Residue v = ctx.sign(r * half_g(p, t));
          for (std::int64_t i = 1; i <= d; ++i) v = ctx.mul(v, binom_e(ctx, t.e, tt * i - l));
          out.push_back({t, v});
        }
      }
    } else {
      auto excluded = [&](const Triple& t) { return in_C1(p, t) || in_C2(p, t) || in_C3(p, t); };
      if (r >= 3) {
        const std::int64_t d = r - 2;
        const std::int64_t bound = s / (r - 1);
        const int bracket_sign = bracket(-p, r - 1);
        for (std::int64_t l = -bound + (r == 3 ? 1 : 0); l <= bound; ++l) {
          const Triple t{r, (r - 1) * (s + l), d};
          if (!in_U(p, t) || excluded(t)) continue;
          Residue v = ctx.mul(ctx.sign(r * half_g(p, t)), bracket_sign == 1 ? 1 : p - 1);
          for (std::int64_t i = 1; i <= d; ++i) {
            const std::int64_t m = ceil_div(i * p - d, r - 1) - s - l;
            v = ctx.mul(v, binom_e(ctx, t.e, m));
          }
          out.push_back({t, v});
        }
      }
      // d = r-1 and d = r members of U lie in B(p); their determinant is eps * Delta^{g/2}.
      const Residue disc = special_discriminant(SpecialKind::XrMinusX, r, ctx);
      for (std::int64_t d = r - 1; d <= r; ++d) {
        for (std::int64_t e = 1; e <= p - 1; ++e) {
          const Triple t{r, e, d};
          if (!in_U(p, t) || excluded(t)) continue;
          Residue v = 0;
          if (in_B(p, t)) {
            v = ctx.mul(epsilon(ctx, t), ctx.pow(disc, static_cast<std::uint64_t>(half_g(p, t))));
          } else {
            throw Error("enumerate_C: " + t.str() + " has d >= r-1 but lies outside B(p)");
          }
          out.push_back({t, v});
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const CMember& a, const CMember& b) { return a.t < b.t; });
  return out;
}

Rational kappa(std::int64_t s, std::int64_t l) {
  if (s < 1 || l < 1 || l > s) throw InvalidArgument("kappa: needs 1 <= l <= s");
  BigInt num = 1, den = 1;
  for (std::int64_t i = 0; i < l; ++i) {
    num *= l + i * s;
    den *= s - i;
  }
  return Rational(BigInt(-1), BigInt(s + 1)).pow(l) * Rational(num, den);
}

std::vector<KappaSurvivor> kappa_survivor_primes(std::int64_t s, std::int64_t l, std::int64_t p_max) {
  const Rational k = kappa(s, l);
  std::vector<KappaSurvivor> out;
  for (std::int64_t p = 3; p <= p_max; ++p) {
    if (!is_prime(static_cast<std::uint64_t>(p)) || (p - 1) % s != 0) continue;
    const std::int64_t r = (p - 1) / s;
    if (r < 2) continue;
    PrimeCtx ctx(static_cast<std::uint64_t>(p));
    if (ctx.reduce(k.den()) == 0) continue;
    const Residue kv = rational_mod_p(ctx, k);
    if (kv == 0 || ctx.pow(kv, static_cast<std::uint64_t>(s)) != 1) continue;
    const Residue base = ctx.neg(ctx.inv(ctx.reduce(s + 1)));
    if (kv != ctx.pow(base, static_cast<std::uint64_t>(r * l))) continue;
    const Triple t{r, s + (r - 1) * l, 1};
    out.push_back({p, t, in_B(p, t)});
  }
  return out;
}

Rational degree_balance(std::int64_t p, const Triple& t) {
  if (!in_D(p, t)) throw NotInD("degree_balance: " + t.str() + " is not in D(" + std::to_string(p) + ")");
  const Rational half(BigInt(t.r - t.d), BigInt(2));
  const Rational ratio(BigInt(t.r) * t.e, BigInt(p - 1));
  return Rational((p - 1) * (t.r - t.d - 1)) * (half - (ratio - Rational(t.d)));
}

}  // namespace discdet
