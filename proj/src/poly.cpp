#include "discdet/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "discdet/errors.hpp"

namespace discdet {

namespace {

constexpr std::size_t kKaratsubaThreshold = 64;

void schoolbook(const PrimeCtx& ctx, const Residue* a, std::size_t na, const Residue* b,
                std::size_t nb, Residue* out) {
  // out has na+nb-1 slots and is overwritten.
  const std::uint64_t p = ctx.p();
  for (std::size_t k = 0; k + 1 < na + nb; ++k) {
    unsigned __int128 acc = 0;
    const std::size_t lo = k >= nb ? k - nb + 1 : 0;
    const std::size_t hi = std::min(k, na - 1);
    for (std::size_t i = lo; i <= hi; ++i) acc += static_cast<unsigned __int128>(a[i]) * b[k - i];
    out[k] = static_cast<Residue>(acc % p);
  }
}

void karatsuba(const PrimeCtx& ctx, const Residue* a, const Residue* b, std::size_t n,
               Residue* out) {
  // a, b of length n; out of length 2n-1.
  if (n <= kKaratsubaThreshold) {
    schoolbook(ctx, a, n, b, n, out);
    return;
  }
  const std::size_t h = n / 2;
  const std::size_t hi = n - h;
  std::vector<Residue> z0(2 * h - 1), z2(2 * hi - 1), z1(2 * hi - 1);
  karatsuba(ctx, a, b, h, z0.data());
  karatsuba(ctx, a + h, b + h, hi, z2.data());
  std::vector<Residue> sa(hi), sb(hi);
  for (std::size_t i = 0; i < hi; ++i) {
    sa[i] = i < h ? ctx.add(a[i], a[h + i]) : a[h + i];
    sb[i] = i < h ? ctx.add(b[i], b[h + i]) : b[h + i];
  }
  karatsuba(ctx, sa.data(), sb.data(), hi, z1.data());
  for (std::size_t i = 0; i < z0.size(); ++i) z1[i] = ctx.sub(z1[i], z0[i]);
  for (std::size_t i = 0; i < z2.size(); ++i) z1[i] = ctx.sub(z1[i], z2[i]);
  std::fill(out, out + 2 * n - 1, 0);
  for (std::size_t i = 0; i < z0.size(); ++i) out[i] = z0[i];
  for (std::size_t i = 0; i < z2.size(); ++i) out[2 * h + i] = ctx.add(out[2 * h + i], z2[i]);
  for (std::size_t i = 0; i < z1.size(); ++i) out[h + i] = ctx.add(out[h + i], z1[i]);
}

struct Term {
  std::uint64_t exp;
  Residue coeff;
};

std::vector<Term> nonzero_terms_desc(const FpPoly& f) {
  std::vector<Term> t;
  for (std::size_t i = f.coeffs().size(); i-- > 0;) {
    if (f.coeffs()[i] != 0) t.push_back({i, f.coeffs()[i]});
  }
  return t;
}

// Coefficients of f^e for f with at most three terms, one index at a time.
class MultinomialCoeffs {
 public:
  MultinomialCoeffs(const FpPoly& f, std::uint64_t e)
      : ctx_(f.ctx()), e_(e), terms_(nonzero_terms_desc(f)) {
    if (terms_.empty() || terms_.size() > 3) {
      throw InvalidArgument("multinomial path needs 1 to 3 nonzero terms");
    }
    for (const auto& t : terms_) {
      std::vector<Residue> pw(e + 1);
      pw[0] = 1 % ctx_.p();
      for (std::uint64_t i = 1; i <= e; ++i) pw[i] = ctx_.mul(pw[i - 1], t.coeff);
      powers_.push_back(std::move(pw));
    }
  }

  Residue coeff(std::uint64_t n) const {
    const std::uint64_t e = e_;
    if (terms_.size() == 1) return n == terms_[0].exp * e ? powers_[0][e] : 0;
    const std::uint64_t ulo = terms_.back().exp;
    if (n < ulo * e) return 0;
    const std::uint64_t shifted = n - ulo * e;
    if (terms_.size() == 2) {
      const std::uint64_t step = terms_[0].exp - ulo;
      if (shifted % step != 0) return 0;
      const std::uint64_t i = shifted / step;
      if (i > e) return 0;
      return ctx_.mul(binom(e, i), ctx_.mul(powers_[0][i], powers_[1][e - i]));
    }
    // n - u3*e = (u1-u3) i + (u2-u3) j with i + j <= e.
    const std::uint64_t d1 = terms_[0].exp - ulo;
    const std::uint64_t d2 = terms_[1].exp - ulo;
    Residue acc = 0;
    for (std::uint64_t i = 0; i <= e && i * d1 <= shifted; ++i) {
      const std::uint64_t rest = shifted - i * d1;
      if (rest % d2 != 0) continue;
      const std::uint64_t j = rest / d2;
      if (i + j > e) continue;
      const Residue m = multinomial(e, i, j);
      if (m == 0) continue;
      acc = ctx_.add(acc, ctx_.mul(m, ctx_.mul(powers_[0][i],
                                               ctx_.mul(powers_[1][j], powers_[2][e - i - j]))));
    }
    return acc;
  }

 private:
  Residue binom(std::uint64_t n, std::uint64_t k) const {
    return binom_mod_p(ctx_, n, static_cast<std::int64_t>(k));
  }
  Residue multinomial(std::uint64_t e, std::uint64_t i, std::uint64_t j) const {
    if (e < ctx_.p()) {
      return ctx_.mul(ctx_.fact(e),
                      ctx_.mul(ctx_.inv_fact(i), ctx_.mul(ctx_.inv_fact(j), ctx_.inv_fact(e - i - j))));
    }
    return ctx_.mul(binom(e, i), binom(e - i, j));
  }

  const PrimeCtx& ctx_;
  std::uint64_t e_;
  std::vector<Term> terms_;
  std::vector<std::vector<Residue>> powers_;
};

std::vector<Residue> dense_window(const FpPoly& f, std::uint64_t e,
                                  const std::vector<std::uint64_t>& indices) {
  const FpPoly fe = poly_pow(f, e);
  std::vector<Residue> out;
  out.reserve(indices.size());
  for (auto k : indices) out.push_back(fe[k]);
  return out;
}

// Returns false when some index is out of the recurrence's reach.
bool recurrence_window(const FpPoly& f, std::uint64_t e, const std::vector<std::uint64_t>& indices,
                       std::vector<Residue>& out) {
  const PrimeCtx& ctx = f.ctx();
  const std::uint64_t p = ctx.p();
  const std::size_t v = f.low_degree();
  const std::uint64_t shift = static_cast<std::uint64_t>(v) * e;
  std::uint64_t kmax = 0;
  for (auto k : indices) {
    if (k >= shift) kmax = std::max(kmax, k - shift);
  }
  if (kmax >= p) return false;
  std::vector<Term> h;  // x-free part, ascending exponents starting at 0
  for (std::size_t i = v; i < f.coeffs().size(); ++i) {
    if (f.coeffs()[i] != 0) h.push_back({i - v, f.coeffs()[i]});
  }
  const Residue a0 = h.front().coeff;
  const Residue a0_inv = ctx.inv(a0);
  std::vector<Residue> c(kmax + 1, 0);
  c[0] = ctx.pow(a0, e);
  const Residue e1 = ctx.reduce(static_cast<std::int64_t>((e + 1) % p));
  for (std::uint64_t k = 1; k <= kmax; ++k) {
    Residue acc = 0;
    for (std::size_t t = 1; t < h.size() && h[t].exp <= k; ++t) {
      const std::uint64_t j = h[t].exp;
      const Residue coef = ctx.sub(ctx.mul(e1, j % p), k % p);
      if (coef == 0 || c[k - j] == 0) continue;
      acc = ctx.add(acc, ctx.mul(coef, ctx.mul(h[t].coeff, c[k - j])));
    }
    // 1/k = (k-1)! / k!
    const Residue kinv = ctx.mul(ctx.fact(k - 1), ctx.inv_fact(k));
    c[k] = ctx.mul(acc, ctx.mul(kinv, a0_inv));
  }
  out.clear();
  for (auto k : indices) out.push_back(k < shift ? 0 : c[k - shift]);
  return true;
}

}  // namespace

FpPoly::FpPoly(PrimeCtx ctx, std::vector<Residue> coeffs) : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
  for (auto& x : c_) x %= ctx_.p();
  trim();
}

FpPoly FpPoly::from_ints(const PrimeCtx& ctx, const std::vector<std::int64_t>& coeffs) {
  std::vector<Residue> c(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) c[i] = ctx.reduce(coeffs[i]);
  return FpPoly(ctx, std::move(c));
}

FpPoly FpPoly::monomial(const PrimeCtx& ctx, std::size_t deg, Residue c) {
  std::vector<Residue> v(deg + 1, 0);
  v[deg] = c;
  return FpPoly(ctx, std::move(v));
}

FpPoly FpPoly::constant(const PrimeCtx& ctx, Residue c) { return FpPoly(ctx, {c}); }

void FpPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::size_t FpPoly::terms() const {
  return static_cast<std::size_t>(std::count_if(c_.begin(), c_.end(), [](Residue x) { return x != 0; }));
}

std::size_t FpPoly::low_degree() const {
  std::size_t v = 0;
  while (v < c_.size() && c_[v] == 0) ++v;
  return v == c_.size() ? 0 : v;
}

Residue FpPoly::eval(Residue x) const {
  Residue acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = ctx_.add(ctx_.mul(acc, x), c_[i]);
  return acc;
}

FpPoly FpPoly::derivative() const {
  if (c_.size() <= 1) return FpPoly(ctx_);
  std::vector<Residue> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = ctx_.mul(c_[i], i % ctx_.p());
  return FpPoly(ctx_, std::move(d));
}

FpPoly FpPoly::scaled(Residue c) const {
  std::vector<Residue> d(c_);
  for (auto& x : d) x = ctx_.mul(x, c);
  return FpPoly(ctx_, std::move(d));
}

FpPoly FpPoly::shifted(std::size_t k) const {
  if (c_.empty()) return *this;
  std::vector<Residue> d(k, 0);
  d.insert(d.end(), c_.begin(), c_.end());
  return FpPoly(ctx_, std::move(d));
}

FpPoly operator+(const FpPoly& a, const FpPoly& b) {
  std::vector<Residue> c(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.ctx_.add(a[i], b[i]);
  return FpPoly(a.ctx_, std::move(c));
}

FpPoly operator-(const FpPoly& a, const FpPoly& b) {
  std::vector<Residue> c(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.ctx_.sub(a[i], b[i]);
  return FpPoly(a.ctx_, std::move(c));
}

FpPoly operator*(const FpPoly& a, const FpPoly& b) {
  return FpPoly(a.ctx_, multiply_coeffs(a.ctx_, a.c_, b.c_));
}

std::vector<Residue> multiply_coeffs(const PrimeCtx& ctx, const std::vector<Residue>& a,
                                     const std::vector<Residue>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Residue> out(a.size() + b.size() - 1, 0);
  if (std::min(a.size(), b.size()) <= kKaratsubaThreshold) {
    schoolbook(ctx, a.data(), a.size(), b.data(), b.size(), out.data());
    return out;
  }
  // Pad both operands to a common length; the padding contributes zeros.
  const std::size_t n = std::max(a.size(), b.size());
  std::vector<Residue> pa(a), pb(b);
  pa.resize(n, 0);
  pb.resize(n, 0);
  std::vector<Residue> full(2 * n - 1);
  karatsuba(ctx, pa.data(), pb.data(), n, full.data());
  std::copy(full.begin(), full.begin() + static_cast<std::ptrdiff_t>(out.size()), out.begin());
  return out;
}

std::pair<FpPoly, FpPoly> FpPoly::divmod(const FpPoly& a, const FpPoly& b) {
  if (b.is_zero()) throw InvalidArgument("divmod: division by the zero polynomial");
  const PrimeCtx& ctx = a.ctx_;
  if (a.degree() < b.degree()) return {FpPoly(ctx), a};
  std::vector<Residue> r(a.c_);
  const std::size_t db = b.c_.size() - 1;
  std::vector<Residue> q(r.size() - db, 0);
  const Residue linv = ctx.inv(b.lead());
  for (std::size_t i = r.size(); i-- > db;) {
    const Residue c = ctx.mul(r[i], linv);
    q[i - db] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) r[i - db + j] = ctx.sub(r[i - db + j], ctx.mul(c, b.c_[j]));
  }
  r.resize(db);
  return {FpPoly(ctx, std::move(q)), FpPoly(ctx, std::move(r))};
}

std::string FpPoly::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || c_[i] != 1) os << c_[i];
    if (i > 0) {
      if (c_[i] != 1) os << "*";
      os << "x";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

FpPoly poly_pow(const FpPoly& f, std::uint64_t e) {
  const PrimeCtx& ctx = f.ctx();
  FpPoly result = FpPoly::constant(ctx, 1 % ctx.p());
  FpPoly base = f;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

std::vector<Residue> coeff_window(const FpPoly& f, std::uint64_t e,
                                  const std::vector<std::uint64_t>& indices, CoeffPath path,
                                  bool allow_dense) {
  if (!std::is_sorted(indices.begin(), indices.end())) {
    throw InvalidArgument("coeff_window: indices must be ascending");
  }
  const PrimeCtx& ctx = f.ctx();
  if (e == 0 || f.is_zero()) {
    std::vector<Residue> out;
    for (auto k : indices) out.push_back((e == 0 && k == 0) ? 1 % ctx.p() : 0);
    return out;
  }
  if (path == CoeffPath::Auto) {
    path = f.terms() <= 3 ? CoeffPath::Multinomial : CoeffPath::Recurrence;
  }
  switch (path) {
    case CoeffPath::Multinomial: {
      MultinomialCoeffs mc(f, e);
      std::vector<Residue> out;
      out.reserve(indices.size());
      for (auto k : indices) out.push_back(mc.coeff(k));
      return out;
    }
    case CoeffPath::Recurrence: {
      std::vector<Residue> out;
      if (recurrence_window(f, e, indices, out)) return out;
      if (!allow_dense) {
        throw RecurrenceUnavailable("coeff_window: index beyond p-1 and dense path forbidden");
      }
      return dense_window(f, e, indices);
    }
    case CoeffPath::Dense:
    case CoeffPath::Auto:
      break;
  }
  return dense_window(f, e, indices);
}

FpMatrix sylvester(const FpPoly& F, const FpPoly& G, std::size_t m, std::size_t n) {
  if (F.is_zero() || G.is_zero()) throw InvalidArgument("sylvester: zero polynomial");
  if (F.degree() > static_cast<long>(m) || G.degree() > static_cast<long>(n)) {
    throw InvalidArgument("sylvester: nominal degree below actual degree");
  }
  const PrimeCtx& ctx = F.ctx();
  const std::size_t N = m + n;
  FpMatrix S(ctx, N, N);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= m; ++j) S(i, i + j) = F[m - j];
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= n; ++j) S(n + i, i + j) = G[n - j];
  return S;
}

FpMatrix sylvester(const FpPoly& F, const FpPoly& G) {
  if (F.is_zero() || G.is_zero()) throw InvalidArgument("sylvester: zero polynomial");
  return sylvester(F, G, static_cast<std::size_t>(F.degree()), static_cast<std::size_t>(G.degree()));
}

Residue resultant(const FpPoly& F0, const FpPoly& G0) {
  if (F0.is_zero() || G0.is_zero()) throw InvalidArgument("resultant: zero polynomial");
  const PrimeCtx& ctx = F0.ctx();
  FpPoly F = F0, G = G0;
  Residue result = 1 % ctx.p();
  while (true) {
    const auto m = static_cast<std::uint64_t>(F.degree());
    const auto n = static_cast<std::uint64_t>(G.degree());
    if (n == 0) return ctx.mul(result, ctx.pow(G.lead(), m));
    if (m == 0) return ctx.mul(result, ctx.pow(F.lead(), n));
    FpPoly R = FpPoly::divmod(F, G).second;
    if (R.is_zero()) return 0;
    const auto dr = static_cast<std::uint64_t>(R.degree());
    if ((m * n) % 2 == 1) result = ctx.neg(result);
    result = ctx.mul(result, ctx.pow(G.lead(), m - dr));
    F = std::move(G);
    G = std::move(R);
  }
}

Residue resultant(const FpPoly& F, const FpPoly& G, std::size_t m, std::size_t n) {
  if (F.degree() > static_cast<long>(m) || G.degree() > static_cast<long>(n)) {
    throw InvalidArgument("resultant: nominal degree below actual degree");
  }
  const PrimeCtx& ctx = F.ctx();
  if (m + n == 0) return 1 % ctx.p();
  if (F.is_zero() || G.is_zero()) return 0;
  const auto df = static_cast<std::size_t>(F.degree());
  const auto dg = static_cast<std::size_t>(G.degree());
  if (df < m && dg < n) return 0;
  if (df == m) return ctx.mul(ctx.pow(F.lead(), n - dg), resultant(F, G));
  // Res_{m,n}(F,G) = (-1)^{mn} Res_{n,m}(G,F) and G keeps its full degree.
  Residue r = ctx.mul(ctx.pow(G.lead(), m - df), resultant(F, G));
  if ((m * n + n * df) % 2 == 1) r = ctx.neg(r);
  return r;
}

FpMatrix bezout_matrix(const FpPoly& F, const FpPoly& G) {
  const long d = std::max(F.degree(), G.degree());
  if (d < 1) throw InvalidArgument("bezout_matrix: both inputs are constant");
  const PrimeCtx& ctx = F.ctx();
  const auto D = static_cast<std::size_t>(d);
  // n_{ij} = F_i G_j - F_j G_i is the coefficient of x^i y^j in F(x)G(y) - F(y)G(x).
  auto nij = [&](std::size_t i, std::size_t j) { return ctx.sub(ctx.mul(F[i], G[j]), ctx.mul(F[j], G[i])); };
  FpMatrix B(ctx, D, D);
  for (std::size_t i = 0; i < D; ++i) {
    for (std::size_t j = 0; j < D; ++j) {
      Residue acc = 0;
      for (std::size_t k = 0; k <= j && i + 1 + k <= D; ++k) acc = ctx.add(acc, nij(i + 1 + k, j - k));
      B(i, j) = acc;
    }
  }
  return B;
}

Residue discriminant(const FpPoly& f) {
  if (f.degree() < 1) throw InvalidArgument("discriminant: degree must be at least 1");
  const PrimeCtx& ctx = f.ctx();
  const auto m = static_cast<std::uint64_t>(f.degree());
  if (m % ctx.p() == 0) {
    throw CharDividesDegree("discriminant: p divides the degree " + std::to_string(m));
  }
  Residue r = ctx.mul(resultant(f, f.derivative()), ctx.inv(f.lead()));
  return ctx.mul(r, ctx.sign(static_cast<std::int64_t>(m * (m - 1) / 2)));
}

Residue discriminant_formal(const FpPoly& f) {
  if (f.degree() < 1) throw InvalidArgument("discriminant_formal: degree must be at least 1");
  const PrimeCtx& ctx = f.ctx();
  const auto m = static_cast<std::size_t>(f.degree());
  Residue r = ctx.mul(resultant(f, f.derivative(), m, m - 1), ctx.inv(f.lead()));
  return ctx.mul(r, ctx.sign(static_cast<std::int64_t>(m * (m - 1) / 2)));
}

Residue special_discriminant(SpecialKind kind, std::int64_t r, const PrimeCtx& ctx) {
  if (r < 2) throw InvalidArgument("special_discriminant: r must be at least 2");
  const auto ur = static_cast<std::uint64_t>(r);
  switch (kind) {
    case SpecialKind::XrMinus1:
      return ctx.mul(ctx.sign((r - 1) * (r - 2) / 2), ctx.pow(ctx.reduce(r), ur));
    case SpecialKind::XrMinusXMinus1:
      if (r % static_cast<std::int64_t>(ctx.p()) != 0) {
        throw InvalidArgument("special_discriminant: x^r - x - 1 form needs p | r");
      }
      return ctx.sign(r * (r + 1) / 2);
    case SpecialKind::XrMinusX:
      return ctx.mul(ctx.sign((r + 1) * (r + 2) / 2), ctx.pow(ctx.reduce(r - 1), ur - 1));
  }
  throw InvalidArgument("special_discriminant: unknown kind");
}

Residue trinomial_discriminant(const PrimeCtx& ctx, std::int64_t n, std::int64_t k, Residue a,
                               Residue b) {
  if (!(0 < k && k < n)) throw InvalidArgument("trinomial_discriminant: need 0 < k < n");
  const std::int64_t D = std::gcd(n, k);
  const std::int64_t N = n / D;
  const std::int64_t K = k / D;
  const Residue t1 = ctx.mul(ctx.pow(ctx.reduce(n), N), ctx.pow(b, N - K));
  Residue t2 = ctx.mul(ctx.mul(ctx.pow(ctx.reduce(n - k), N - K), ctx.pow(ctx.reduce(k), K)),
                       ctx.pow(a, N));
  if (N % 2 == 1) t2 = ctx.neg(t2);
  const Residue bracket_term = ctx.pow(ctx.sub(t1, t2), D);
  return ctx.mul(ctx.mul(ctx.sign(n * (n - 1) / 2), ctx.pow(b, k - 1)), bracket_term);
}

}  // namespace discdet
