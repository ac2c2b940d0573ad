#include "discdet/verify3.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "discdet/errors.hpp"
#include "discdet/fpmat.hpp"

namespace discdet {

namespace {

std::uint64_t half_g(std::int64_t p, const Triple& t) {
  const Rational g = g_exponent(p, t);
  if (!g.is_integer() || g.sign() <= 0 || g.num() % 2 != 0)
    throw InvalidArgument("g must be a positive even integer for " + t.str());
  return static_cast<std::uint64_t>(g.num() / 2);
}

// det M_d(f^e) through the sparse multinomial coefficients.
Residue det_sparse(const FpPoly& f, const Triple& t) {
  return m_det(f, static_cast<std::uint64_t>(t.e), t.d, CoeffPath::Multinomial);
}

bool passes(Residue det, Residue e0, Residue disc, std::uint64_t hg, const PrimeCtx& ctx) {
  return det == ctx.mul(e0, ctx.pow(disc, hg));
}

// One test polynomial together with its discriminant.
struct TestPoly {
  FpPoly f;
  Residue disc;
};

std::vector<TestPoly> stage_polys(const PrimeCtx& ctx, int stage, std::int64_t r) {
  std::vector<TestPoly> out;
  auto trinomial = [&](std::int64_t k, Residue a, Residue b) {
    std::vector<Residue> c(static_cast<std::size_t>(r) + 1, 0);
    c[static_cast<std::size_t>(r)] = 1;
    c[static_cast<std::size_t>(k)] = ctx.add(c[static_cast<std::size_t>(k)], a);
    c[0] = ctx.add(c[0], b);
    return FpPoly(ctx, c);
  };
  if (stage == 2) {
    for (std::int64_t k = 1; k < r; ++k) out.push_back({trinomial(k, 1, 1), trinomial_discriminant(ctx, r, k, 1, 1)});
  } else if (stage == 3) {
    // x^r + x^k + x = x (x^{r-1} + x^{k-1} + 1) and Res(x, h) = h(0) = 1, so Delta = Delta(h).
    for (std::int64_t k = 2; k < r; ++k) {
      FpPoly f = trinomial(k, 1, 0);
      f = f + FpPoly::monomial(ctx, 1, 1);
      out.push_back({f, trinomial_discriminant(ctx, r - 1, k - 1, 1, 1)});
    }
  } else {
    for (Residue b : {2, 3}) {
      const Residue bb = b % ctx.p();
      out.push_back({trinomial(1, 1, bb), trinomial_discriminant(ctx, r, 1, 1, bb)});
    }
  }
  return out;
}

}  // namespace

Residue eps0(const PrimeCtx& ctx, const Triple& t) {
  const auto p = static_cast<std::int64_t>(ctx.p());
  const Residue base = special_discriminant(SpecialKind::XrMinus1, t.r, ctx);
  return ctx.mul(det_xr1(ctx, t), ctx.pow(ctx.inv(base), half_g(p, t)));
}

bool test_candidate(const Triple& t, const FpPoly& f, Residue e0) {
  const PrimeCtx& ctx = f.ctx();
  const Residue det = m_det(f, static_cast<std::uint64_t>(t.e), t.d);
  return passes(det, e0, discriminant_formal(f), half_g(static_cast<std::int64_t>(ctx.p()), t), ctx);
}

std::vector<Triple> PrimeReport::survivors() const {
  std::vector<Triple> out;
  for (const auto& s : reached)
    if (s.stage_reached == 4) out.push_back(s.t);
  return out;
}

PrimeReport verify_prime(const PrimeCtx& ctx, T1Mode mode) {
  const auto p = static_cast<std::int64_t>(ctx.p());
  if (p == 2) throw InvalidArgument("verify_prime: p = 2 is excluded");
  PrimeReport rep;
  rep.p = p;
  std::map<Triple, Residue> candidates;
  for (int j = 1; j <= 4; ++j) {
    for (const auto& m : enumerate_C(j, ctx)) {
      if (in_B(p, m.t)) continue;
      ++rep.c_counts[static_cast<std::size_t>(j - 1)];
      candidates.emplace(m.t, m.det_xrx);
    }
  }
  std::map<std::int64_t, std::array<std::vector<TestPoly>, 3>> polys;  // by r, stages 2..4
  std::map<std::int64_t, Residue> disc_xrx;
  for (const auto& [t, closed] : candidates) {
    const std::uint64_t hg = half_g(p, t);
    const Residue e0 = eps0(ctx, t);
    auto [it, fresh] = disc_xrx.try_emplace(t.r, 0);
    if (fresh) it->second = special_discriminant(SpecialKind::XrMinusX, t.r, ctx);
    Residue det = closed;
    if (mode != T1Mode::ClosedForm) {
      const FpPoly f = FpPoly::monomial(ctx, static_cast<std::size_t>(t.r), 1) - FpPoly::monomial(ctx, 1, 1);
      det = det_sparse(f, t);
      if (mode == T1Mode::CrossCheck && det != closed)
        throw Error("verify_prime: closed-form and direct det M_d((x^r-x)^e) disagree at p=" + std::to_string(p) +
                    " " + t.str());
    }
    if (!passes(det, e0, it->second, hg, ctx)) continue;
    int stage = 1;
    auto [pit, pfresh] = polys.try_emplace(t.r);
    if (pfresh)
      for (int s = 2; s <= 4; ++s) pit->second[static_cast<std::size_t>(s - 2)] = stage_polys(ctx, s, t.r);
    for (int s = 2; s <= 4; ++s) {
      const auto& family = pit->second[static_cast<std::size_t>(s - 2)];
      const bool all = std::all_of(family.begin(), family.end(), [&](const TestPoly& tp) {
        const Residue det_f = det_sparse(tp.f, t);
        if (mode == T1Mode::CrossCheck &&
            (det_f != m_det(tp.f, static_cast<std::uint64_t>(t.e), t.d, CoeffPath::Dense) ||
             tp.disc != discriminant_formal(tp.f)))
          throw Error("verify_prime: sparse and dense stage data disagree at p=" + std::to_string(p) + " " +
                      t.str() + " f=" + tp.f.str());
        return passes(det_f, e0, tp.disc, hg, ctx);
      });
      if (!all) break;
      stage = s;
    }
    rep.reached.push_back({t, stage});
    for (int s = 1; s <= stage; ++s) ++rep.t_counts[static_cast<std::size_t>(s - 1)];
  }
  return rep;
}

RangeStats range_stats(const std::vector<PrimeReport>& reports) {
  RangeStats st;
  st.prime_count = static_cast<std::int64_t>(reports.size());
  std::array<std::int64_t, 4> sums{};
  for (const auto& r : reports)
    for (std::size_t s = 0; s < 4; ++s) {
      sums[s] += r.t_counts[s];
      st.maximum[s] = std::max(st.maximum[s], r.t_counts[s]);
    }
  for (std::size_t s = 0; s < 4; ++s)
    st.average[s] = st.prime_count ? Rational(BigInt(sums[s]), BigInt(st.prime_count)) : Rational(0);
  return st;
}

RangeResult verify_range(std::int64_t p_min, std::int64_t p_max, unsigned workers, T1Mode mode) {
  if (p_min > p_max) throw InvalidArgument("verify_range: p_min must not exceed p_max");
  std::vector<std::int64_t> primes;
  for (std::int64_t p = std::max<std::int64_t>(p_min, 3); p <= p_max; ++p)
    if (is_prime(static_cast<std::uint64_t>(p))) primes.push_back(p);
  RangeResult out;
  out.reports.resize(primes.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto work = [&] {
    for (std::size_t i = next++; i < primes.size(); i = next++) {
      try {
        out.reports[i] = verify_prime(PrimeCtx(static_cast<std::uint64_t>(primes[i])), mode);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  workers = std::max(1u, workers);
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  out.stats = range_stats(out.reports);
  return out;
}

std::string format_decimal(const Rational& q, int digits) {
  BigInt scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  const BigInt num = q.num() < 0 ? BigInt(-q.num()) : q.num();
  const BigInt scaled = (2 * num * scale + q.den()) / (2 * q.den());
  const BigInt whole = scaled / scale;
  std::string frac = BigInt(scaled % scale).str();
  if (digits > 0) frac.insert(0, static_cast<std::size_t>(digits) - frac.size(), '0');
  std::string out = (q.sign() < 0 && scaled != 0 ? "-" : "") + whole.str();
  if (digits > 0) out += "." + frac;
  return out;
}

std::string csv_header() { return "p,C1,C2,C3,C4,T1,T2,T3,T4"; }

std::string csv_row(const PrimeReport& r) {
  std::ostringstream os;
  os << r.p;
  for (auto c : r.c_counts) os << ',' << c;
  for (auto t : r.t_counts) os << ',' << t;
  return os.str();
}

std::string survivors_header() { return "p,r,e,d,stage_reached"; }

std::vector<std::string> survivors_rows(const PrimeReport& r) {
  std::vector<std::string> out;
  for (const auto& s : r.reached)
    out.push_back(std::to_string(r.p) + "," + std::to_string(s.t.r) + "," + std::to_string(s.t.e) + "," +
                  std::to_string(s.t.d) + "," + std::to_string(s.stage_reached));
  return out;
}

std::string stats_text(const RangeStats& s) {
  std::ostringstream os;
  os << "primes " << s.prime_count << '\n';
  for (std::size_t k = 0; k < 4; ++k) {
    os << "avg_T" << k + 1 << ' ' << format_decimal(s.average[k], 5) << '\n';
    os << "max_T" << k + 1 << ' ' << s.maximum[k] << '\n';
  }
  return os.str();
}

}  // namespace discdet
