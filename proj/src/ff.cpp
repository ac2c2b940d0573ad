#include "discdet/ff.hpp"

#include <numeric>
#include <ostream>

#include "discdet/errors.hpp"

namespace discdet {

namespace {

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod64(r, a, m);
    a = mulmod64(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull,
                          37ull}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull,
                          37ull}) {
    std::uint64_t x = powmod64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t next_prime(std::uint64_t n) {
  while (!is_prime(n)) ++n;
  return n;
}

PrimeCtx::PrimeCtx(std::uint64_t p) : p_(p) {
  if (!is_prime(p)) throw InvalidArgument("PrimeCtx: " + std::to_string(p) + " is not prime");
  if (p >= (1ull << 31)) throw InvalidArgument("PrimeCtx: p must be below 2^31");
  auto t = std::make_shared<Tables>();
  t->fact.resize(p);
  t->inv_fact.resize(p);
  t->fact[0] = 1 % p;
  for (std::uint64_t i = 1; i < p; ++i) t->fact[i] = mulmod64(t->fact[i - 1], i, p);
  // (p-1)! = -1 (Wilson), so its inverse is -1 as well.
  t->inv_fact[p - 1] = powmod64(t->fact[p - 1], p - 2, p);
  for (std::uint64_t i = p - 1; i > 0; --i) t->inv_fact[i - 1] = mulmod64(t->inv_fact[i], i, p);
  tables_ = std::move(t);
}

Residue PrimeCtx::reduce(const BigInt& v) const {
  BigInt r = v % p_;
  if (r < 0) r += p_;
  return static_cast<Residue>(r);
}

Residue PrimeCtx::pow(Residue a, std::uint64_t e) const { return powmod64(a, e, p_); }

Residue PrimeCtx::pow_signed(Residue a, std::int64_t e) const {
  if (e >= 0) return pow(a, static_cast<std::uint64_t>(e));
  return pow(inv(a), static_cast<std::uint64_t>(-e));
}

Residue PrimeCtx::inv(Residue a) const {
  if (a % p_ == 0) throw DenominatorVanishes("inverse of zero mod " + std::to_string(p_));
  return powmod64(a, p_ - 2, p_);
}

Residue binom_mod_p(const PrimeCtx& ctx, std::uint64_t n, std::int64_t k) {
  if (k < 0 || static_cast<std::uint64_t>(k) > n) return 0;
  const std::uint64_t p = ctx.p();
  auto kk = static_cast<std::uint64_t>(k);
  Residue res = 1 % p;
  while (n > 0 || kk > 0) {
    const std::uint64_t ni = n % p;
    const std::uint64_t ki = kk % p;
    if (ki > ni) return 0;
    res = ctx.mul(res, ctx.binom_small(ni, static_cast<std::int64_t>(ki)));
    n /= p;
    kk /= p;
  }
  return res;
}

int jacobi(std::int64_t k, std::int64_t d) {
  if (d <= 0 || d % 2 == 0) throw InvalidArgument("jacobi: modulus must be odd and positive");
  std::int64_t a = k % d;
  if (a < 0) a += d;
  std::int64_t n = d;
  int result = 1;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      const std::int64_t r = n % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

int bracket(std::int64_t k, std::int64_t d) {
  if (d <= 0) throw InvalidArgument("bracket: d must be positive");
  if (std::gcd(k < 0 ? -k : k, d) != 1) throw InvalidArgument("bracket: gcd(k, d) != 1");
  if (d % 2 == 1) return jacobi(k, d);
  // d even forces k odd; only k mod 4 matters once (d-2)/2 is odd.
  const std::int64_t k4 = ((k % 4) + 4) % 4;
  const std::int64_t e = ((k4 - 1) / 2) * ((d - 2) / 2);
  return e % 2 == 0 ? 1 : -1;
}

int bracket_bruteforce(std::int64_t k, std::int64_t d) {
  if (d <= 0) throw InvalidArgument("bracket_bruteforce: d must be positive");
  if (std::gcd(k < 0 ? -k : k, d) != 1) {
    throw InvalidArgument("bracket_bruteforce: gcd(k, d) != 1");
  }
  std::int64_t km = ((k % d) + d) % d;
  std::vector<char> seen(static_cast<std::size_t>(d), 0);
  std::int64_t cycles = 0;
  for (std::int64_t x = 0; x < d; ++x) {
    if (seen[x]) continue;
    ++cycles;
    std::int64_t y = x;
    while (!seen[y]) {
      seen[y] = 1;
      y = (y * km) % d;
    }
  }
  return ((d - cycles) % 2 == 0) ? 1 : -1;
}

Rational::Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
  if (den_ == 0) throw DenominatorVanishes("Rational: zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
  if (num_ == 0) den_ = 1;
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
Rational operator-(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}
Rational operator*(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.num_, a.den_ * b.den_);
}
Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw DenominatorVanishes("Rational: division by zero");
  return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

Rational Rational::pow(std::int64_t e) const {
  if (e < 0) return Rational(1) / pow(-e);
  Rational base = *this;
  Rational r(1);
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

std::string Rational::str() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

Residue rational_mod_p(const PrimeCtx& ctx, const Rational& q) {
  const Residue den = ctx.reduce(q.den());
  if (den == 0) {
    throw DenominatorVanishes("rational_mod_p: " + std::to_string(ctx.p()) + " divides " +
                              q.den().str());
  }
  return ctx.mul(ctx.reduce(q.num()), ctx.inv(den));
}

std::optional<Rational> rational_reconstruct(Residue residue, std::uint64_t p,
                                             std::uint64_t bound) {
  if (bound == 0) throw InvalidArgument("rational_reconstruct: bound must be positive");
  const std::int64_t num_bound = static_cast<std::int64_t>(bound);
  const std::int64_t den_bound =
      std::max<std::int64_t>(num_bound, static_cast<std::int64_t>((p - 1) / (2 * bound)));
  std::int64_t r0 = static_cast<std::int64_t>(p);
  std::int64_t r1 = static_cast<std::int64_t>(residue % p);
  std::int64_t t0 = 0;
  std::int64_t t1 = 1;
  while (r1 > num_bound) {
    const std::int64_t q = r0 / r1;
    const std::int64_t r2 = r0 - q * r1;
    const std::int64_t t2 = t0 - q * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  if (t1 == 0) return std::nullopt;
  const std::int64_t den = t1 < 0 ? -t1 : t1;
  if (den > den_bound) return std::nullopt;
  if (std::gcd(r1, den) != 1) return std::nullopt;
  return Rational(BigInt(t1 < 0 ? -r1 : r1), BigInt(den));
}

}  // namespace discdet
