#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace discdet {

using Residue = std::uint64_t;
using BigInt = boost::multiprecision::cpp_int;

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n);

std::uint64_t next_prime(std::uint64_t n);  // smallest prime >= n

/// A prime modulus with shared, read-only factorial tables.
///
/// Copies are cheap; all copies share the same tables. Residues are
/// canonical representatives in [0, p-1].
class PrimeCtx {
 public:
  explicit PrimeCtx(std::uint64_t p);

  std::uint64_t p() const { return p_; }

  Residue reduce(std::int64_t v) const {
    const auto m = static_cast<std::int64_t>(p_);
    std::int64_t r = v % m;
    return static_cast<Residue>(r < 0 ? r + m : r);
  }
  Residue reduce(const BigInt& v) const;

  Residue add(Residue a, Residue b) const {
    Residue s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Residue sub(Residue a, Residue b) const { return a >= b ? a - b : a + p_ - b; }
  Residue neg(Residue a) const { return a == 0 ? 0 : p_ - a; }
  Residue mul(Residue a, Residue b) const {
    return static_cast<Residue>((static_cast<unsigned __int128>(a) * b) % p_);
  }
  Residue pow(Residue a, std::uint64_t e) const;
  /// a^e for signed e; negative exponents go through the inverse.
  Residue pow_signed(Residue a, std::int64_t e) const;
  /// Throws DenominatorVanishes when a == 0.
  Residue inv(Residue a) const;
  /// (-1)^e as a residue.
  Residue sign(std::int64_t e) const { return (e % 2 == 0) ? 1 % p_ : p_ - 1; }

  Residue fact(std::uint64_t i) const { return tables_->fact[i]; }
  Residue inv_fact(std::uint64_t i) const { return tables_->inv_fact[i]; }
  /// C(n, k) for 0 <= n < p; zero outside 0 <= k <= n.
  Residue binom_small(std::uint64_t n, std::int64_t k) const {
    if (k < 0 || static_cast<std::uint64_t>(k) > n) return 0;
    return mul(fact(n), mul(inv_fact(static_cast<std::uint64_t>(k)),
                            inv_fact(n - static_cast<std::uint64_t>(k))));
  }

  const std::vector<Residue>& fact_table() const { return tables_->fact; }
  const std::vector<Residue>& inv_fact_table() const { return tables_->inv_fact; }

  friend bool operator==(const PrimeCtx& a, const PrimeCtx& b) { return a.p_ == b.p_; }

 private:
  struct Tables {
    std::vector<Residue> fact;
    std::vector<Residue> inv_fact;
  };
  std::uint64_t p_;
  std::shared_ptr<const Tables> tables_;
};

/// C(n, k) mod p by Lucas' theorem; zero when k < 0 or k > n.
Residue binom_mod_p(const PrimeCtx& ctx, std::uint64_t n, std::int64_t k);

/// Jacobi symbol (k/d) for odd d >= 1.
int jacobi(std::int64_t k, std::int64_t d);

/// Sign of x -> kx on Z/dZ, from the closed forms (Jacobi symbol for odd d).
int bracket(std::int64_t k, std::int64_t d);

/// Sign of x -> kx on Z/dZ by cycle decomposition. Oracle for bracket().
int bracket_bruteforce(std::int64_t k, std::int64_t d);

/// Exact rational number, always reduced with a positive denominator.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(BigInt n, BigInt d);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }
  int sign() const { return num_ < 0 ? -1 : (num_ > 0 ? 1 : 0); }

  Rational operator-() const { return Rational(-num_, den_); }
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }

  Rational pow(std::int64_t e) const;

  /// "n" for integers, "n/d" otherwise.
  std::string str() const;

 private:
  BigInt num_;
  BigInt den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

/// num * den^{-1} mod p. Throws DenominatorVanishes when p | den.
Residue rational_mod_p(const PrimeCtx& ctx, const Rational& q);

/// Wang's rational reconstruction with numerator bound `bound` and
/// denominator bound floor((p-1) / (2*bound)), so that 2*N*D < p keeps the
/// answer unique.
std::optional<Rational> rational_reconstruct(Residue residue, std::uint64_t p,
                                             std::uint64_t bound);

}  // namespace discdet
