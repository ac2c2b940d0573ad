#include "discdet/symbolic.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <unordered_map>

#include "discdet/errors.hpp"

namespace discdet {

namespace {

constexpr int kFieldBits = 8;
constexpr std::uint64_t kFieldMask = 0xff;

int key_total(std::uint64_t key) { return static_cast<int>(key >> 56); }

int key_exp(std::uint64_t key, int i) {
  return static_cast<int>((key >> (48 - kFieldBits * i)) & kFieldMask);
}

// a divides b as monomials.
bool key_divides(std::uint64_t a, std::uint64_t b, int nvars) {
  for (int i = 0; i < nvars; ++i)
    if (key_exp(a, i) > key_exp(b, i)) return false;
  return true;
}

void check_same(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars() != b.nvars() || !(a.ctx() == b.ctx())) {
    throw InvalidArgument("MultiPoly: operands differ in ring");
  }
}

void check_desk_scale(const PrimeCtx& ctx, const Triple& t) {
  if (ctx.p() > 7 || t.r > 5 || t.r < 2) {
    throw ScaleRefused("symbolic checks are limited to p <= 7 and 2 <= r <= 5, got p = " +
                       std::to_string(ctx.p()) + ", r = " + std::to_string(t.r));
  }
}

using XPoly = std::vector<MultiPoly>;  // ascending powers of x

XPoly xpoly_mul(const XPoly& a, const XPoly& b) {
  const PrimeCtx& ctx = a.front().ctx();
  const int n = a.front().nvars();
  XPoly out(a.size() + b.size() - 1, MultiPoly(ctx, n));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j].is_zero()) continue;
      out[i + j] = out[i + j] + a[i] * b[j];
    }
  }
  return out;
}

XPoly generic_power(int r, std::uint64_t e, const PrimeCtx& ctx) {
  const auto s = generic_monic(r, ctx);
  XPoly f(static_cast<std::size_t>(r) + 1, MultiPoly(ctx, r));
  for (int i = 0; i <= r; ++i) f[static_cast<std::size_t>(r - i)] = s[static_cast<std::size_t>(i)];
  XPoly result{MultiPoly::constant(ctx, r, 1)};
  XPoly base = f;
  while (e > 0) {
    if (e & 1) result = xpoly_mul(result, base);
    e >>= 1;
    if (e) base = xpoly_mul(base, base);
  }
  return result;
}

}  // namespace

MultiPoly::MultiPoly(const PrimeCtx& ctx, int nvars) : ctx_(ctx), nvars_(nvars) {
  if (nvars < 0 || nvars > kMaxVars) throw InvalidArgument("MultiPoly: at most 7 variables");
}

MultiPoly MultiPoly::constant(const PrimeCtx& ctx, int nvars, Residue c) {
  MultiPoly m(ctx, nvars);
  c %= ctx.p();
  if (c) m.terms_.push_back({0, c});
  return m;
}

MultiPoly MultiPoly::variable(const PrimeCtx& ctx, int nvars, int i) {
  if (i < 0 || i >= nvars) throw InvalidArgument("MultiPoly::variable: index out of range");
  std::vector<int> exps(static_cast<std::size_t>(nvars), 0);
  exps[static_cast<std::size_t>(i)] = 1;
  return monomial(ctx, exps);
}

MultiPoly MultiPoly::monomial(const PrimeCtx& ctx, const std::vector<int>& exps, Residue c) {
  MultiPoly m(ctx, static_cast<int>(exps.size()));
  c %= ctx.p();
  if (c) m.terms_.push_back({m.pack(exps), c});
  return m;
}

std::uint64_t MultiPoly::pack(const std::vector<int>& exps) const {
  if (static_cast<int>(exps.size()) != nvars_) throw InvalidArgument("MultiPoly: exponent length mismatch");
  std::uint64_t key = 0;
  int total = 0;
  for (int i = 0; i < nvars_; ++i) {
    const int x = exps[static_cast<std::size_t>(i)];
    if (x < 0) throw InvalidArgument("MultiPoly: negative exponent");
    total += x;
    key |= static_cast<std::uint64_t>(x) << (48 - kFieldBits * i);
  }
  if (total > kMaxDegree) throw InvalidArgument("MultiPoly: total degree above 255");
  return key | (static_cast<std::uint64_t>(total) << 56);
}

std::vector<int> MultiPoly::exponents(std::uint64_t key) const {
  std::vector<int> out(static_cast<std::size_t>(nvars_));
  for (int i = 0; i < nvars_; ++i) out[static_cast<std::size_t>(i)] = key_exp(key, i);
  return out;
}

int MultiPoly::total_degree() const { return terms_.empty() ? -1 : key_total(terms_.front().first); }

Residue MultiPoly::coeff(const std::vector<int>& exps) const {
  const std::uint64_t key = pack(exps);
  auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                             [](const Term& t, std::uint64_t k) { return t.first > k; });
  return (it != terms_.end() && it->first == key) ? it->second : 0;
}

Residue MultiPoly::eval(const std::vector<Residue>& point) const {
  if (static_cast<int>(point.size()) != nvars_) throw InvalidArgument("MultiPoly::eval: point dimension");
  // Power tables per variable, up to the largest exponent present.
  std::vector<std::vector<Residue>> powers(static_cast<std::size_t>(nvars_));
  const int top = std::max(total_degree(), 0);
  for (int i = 0; i < nvars_; ++i) {
    auto& pw = powers[static_cast<std::size_t>(i)];
    pw.resize(static_cast<std::size_t>(top) + 1);
    pw[0] = 1 % ctx_.p();
    for (int k = 1; k <= top; ++k) pw[static_cast<std::size_t>(k)] = ctx_.mul(pw[static_cast<std::size_t>(k - 1)], point[static_cast<std::size_t>(i)] % ctx_.p());
  }
  Residue acc = 0;
  for (const auto& [key, c] : terms_) {
    Residue v = c;
    for (int i = 0; i < nvars_; ++i) v = ctx_.mul(v, powers[static_cast<std::size_t>(i)][static_cast<std::size_t>(key_exp(key, i))]);
    acc = ctx_.add(acc, v);
  }
  return acc;
}

MultiPoly MultiPoly::scaled(Residue c) const {
  c %= ctx_.p();
  MultiPoly out(ctx_, nvars_);
  if (c == 0) return out;
  out.terms_ = terms_;
  for (auto& t : out.terms_) t.second = ctx_.mul(t.second, c);
  return out;
}

MultiPoly MultiPoly::pow(std::uint64_t e) const {
  MultiPoly result = constant(ctx_, nvars_, 1);
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::from_map_sorted(const PrimeCtx& ctx, int nvars, std::vector<Term> terms) {
  MultiPoly out(ctx, nvars);
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first > b.first; });
  out.terms_.reserve(terms.size());
  for (auto& t : terms)
    if (t.second) out.terms_.push_back(t);
  return out;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  check_same(a, b);
  MultiPoly out(a.ctx_, a.nvars_);
  out.terms_.reserve(a.terms_.size() + b.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms_.size() || j < b.terms_.size()) {
    if (j == b.terms_.size() || (i < a.terms_.size() && a.terms_[i].first > b.terms_[j].first)) {
      out.terms_.push_back(a.terms_[i++]);
    } else if (i == a.terms_.size() || b.terms_[j].first > a.terms_[i].first) {
      out.terms_.push_back(b.terms_[j++]);
    } else {
      const Residue c = a.ctx_.add(a.terms_[i].second, b.terms_[j].second);
      if (c) out.terms_.push_back({a.terms_[i].first, c});
      ++i;
      ++j;
    }
  }
  return out;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
  return a + b.scaled(b.ctx_.neg(1 % b.ctx_.p()));
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  check_same(a, b);
  if (a.is_zero() || b.is_zero()) return MultiPoly(a.ctx_, a.nvars_);
  if (a.total_degree() + b.total_degree() > MultiPoly::kMaxDegree) {
    throw InvalidArgument("MultiPoly: product degree above 255");
  }
  const PrimeCtx& ctx = a.ctx_;
  std::unordered_map<std::uint64_t, Residue> acc;
  acc.reserve(a.terms_.size() * b.terms_.size() / 2 + 16);
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) {
      Residue& slot = acc[ka + kb];
      slot = ctx.add(slot, ctx.mul(ca, cb));
    }
  std::vector<MultiPoly::Term> terms(acc.begin(), acc.end());
  return MultiPoly::from_map_sorted(ctx, a.nvars_, std::move(terms));
}

std::pair<MultiPoly, MultiPoly> MultiPoly::divmod(const MultiPoly& a, const MultiPoly& b) {
  check_same(a, b);
  if (b.is_zero()) throw InvalidArgument("MultiPoly::divmod: zero divisor");
  const PrimeCtx& ctx = a.ctx_;
  const auto [lead_key, lead_c] = b.terms_.front();
  const Residue lead_inv = ctx.inv(lead_c);
  std::map<std::uint64_t, Residue, std::greater<>> work(a.terms_.begin(), a.terms_.end());
  std::vector<Term> quot, rem;
  while (!work.empty()) {
    auto it = work.begin();
    const auto [key, c] = *it;
    work.erase(it);
    if (!key_divides(lead_key, key, a.nvars_)) {
      rem.push_back({key, c});
      continue;
    }
    const std::uint64_t qk = key - lead_key;
    const Residue qc = ctx.mul(c, lead_inv);
    quot.push_back({qk, qc});
    for (std::size_t i = 1; i < b.terms_.size(); ++i) {
      const std::uint64_t k = qk + b.terms_[i].first;
      const Residue v = ctx.neg(ctx.mul(qc, b.terms_[i].second));
      auto [slot, inserted] = work.emplace(k, v);
      if (!inserted) {
        slot->second = ctx.add(slot->second, v);
        if (slot->second == 0) work.erase(slot);
      }
    }
  }
  return {from_map_sorted(ctx, a.nvars_, std::move(quot)), from_map_sorted(ctx, a.nvars_, std::move(rem))};
}

MultiPoly MultiPoly::divide_exact(const MultiPoly& a, const MultiPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw InvalidArgument("MultiPoly::divide_exact: nonzero remainder");
  return q;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    bool wrote = false;
    if (c != 1 || key_total(key) == 0) {
      os << c;
      wrote = true;
    }
    for (int i = 0; i < nvars_; ++i) {
      const int x = key_exp(key, i);
      if (x == 0) continue;
      os << (wrote ? "*" : "") << "x" << (i + 1);
      if (x > 1) os << "^" << x;
      wrote = true;
    }
  }
  return os.str();
}

std::vector<MultiPoly> generic_monic(int r, const PrimeCtx& ctx) {
  if (r < 2 || r > MultiPoly::kMaxVars) throw InvalidArgument("generic_monic: need 2 <= r <= 7");
  // Multiply out (x - x_i) one factor at a time; coefficient i is s_i.
  std::vector<MultiPoly> s{MultiPoly::constant(ctx, r, 1)};
  for (int i = 0; i < r; ++i) {
    const MultiPoly neg_root = MultiPoly::variable(ctx, r, i).scaled(ctx.p() - 1);
    std::vector<MultiPoly> next(s.size() + 1, MultiPoly(ctx, r));
    for (std::size_t k = 0; k < s.size(); ++k) {
      next[k] = next[k] + s[k];
      next[k + 1] = next[k + 1] + s[k] * neg_root;
    }
    s = std::move(next);
  }
  return s;
}

MultiPoly delta_power(int r, std::uint64_t g, const PrimeCtx& ctx) {
  MultiPoly out = MultiPoly::constant(ctx, r, 1);
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      const MultiPoly diff = MultiPoly::variable(ctx, r, i) - MultiPoly::variable(ctx, r, j);
      out = out * diff.pow(g);
    }
  return out;
}

MultiPoly det_bareiss(std::vector<std::vector<MultiPoly>> a) {
  const std::size_t n = a.size();
  if (n == 0) throw InvalidArgument("det_bareiss: empty matrix");
  for (const auto& row : a)
    if (row.size() != n) throw InvalidArgument("det_bareiss: matrix must be square");
  const PrimeCtx ctx = a[0][0].ctx();
  const int nv = a[0][0].nvars();
  bool negate = false;
  MultiPoly prev = MultiPoly::constant(ctx, nv, 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t piv = k + 1;
      while (piv < n && a[piv][k].is_zero()) ++piv;
      if (piv == n) return MultiPoly(ctx, nv);
      std::swap(a[k], a[piv]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        const MultiPoly num = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        a[i][j] = MultiPoly::divide_exact(num, prev);
      }
      a[i][k] = MultiPoly(ctx, nv);
    }
    prev = a[k][k];
  }
  MultiPoly det = a[n - 1][n - 1];
  return negate ? det.scaled(ctx.p() - 1) : det;
}

std::vector<std::vector<MultiPoly>> generic_m_matrix(int r, std::uint64_t e, std::int64_t d, const PrimeCtx& ctx) {
  const auto p = static_cast<std::int64_t>(ctx.p());
  if (d < 1 || d > p) throw InvalidArgument("generic_m_matrix: d must lie in [1, p]");
  const XPoly fe = generic_power(r, e, ctx);
  std::vector<std::vector<MultiPoly>> m(static_cast<std::size_t>(d),
                                        std::vector<MultiPoly>(static_cast<std::size_t>(d), MultiPoly(ctx, r)));
  for (std::int64_t i = 1; i <= d; ++i)
    for (std::int64_t j = 1; j <= d; ++j) {
      const std::int64_t idx = i * p + j - d - 1;
      if (idx >= 0 && idx < static_cast<std::int64_t>(fe.size())) {
        m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = fe[static_cast<std::size_t>(idx)];
      }
    }
  return m;
}

Theorem1Report theorem1_check(const PrimeCtx& ctx, const Triple& t) {
  check_desk_scale(ctx, t);
  const auto p = static_cast<std::int64_t>(ctx.p());
  if (!in_B(p, t)) throw NotInB("theorem1_check: " + t.str() + " is not in B(" + std::to_string(p) + ")");
  const Rational g = g_exponent(p, t);
  const auto gi = static_cast<std::int64_t>(g.num());
  const Residue eps = epsilon(ctx, t);
  const int r = static_cast<int>(t.r);
  MultiPoly lhs = det_bareiss(generic_m_matrix(r, static_cast<std::uint64_t>(t.e), t.d, ctx));
  MultiPoly rhs = delta_power(r, static_cast<std::uint64_t>(gi), ctx).scaled(eps);
  const bool holds = lhs == rhs;
  return Theorem1Report{holds, eps, gi, std::move(lhs), std::move(rhs)};
}

bool lemma2_divisible(const PrimeCtx& ctx, const Triple& t) {
  check_desk_scale(ctx, t);
  const auto p = static_cast<std::int64_t>(ctx.p());
  if (!in_D(p, t)) throw NotInD("lemma2_divisible: " + t.str() + " is not in D(" + std::to_string(p) + ")");
  const int r = static_cast<int>(t.r);
  const MultiPoly det = det_bareiss(generic_m_matrix(r, static_cast<std::uint64_t>(t.e), t.d, ctx));
  const MultiPoly delta = delta_power(r, static_cast<std::uint64_t>(2 * t.e - (p - 1)), ctx);
  return MultiPoly::divmod(det, delta).second.is_zero();
}

}  // namespace discdet
