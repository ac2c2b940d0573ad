#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "discdet/ff.hpp"

namespace discdet {

struct Triple {
  std::int64_t r = 0;
  std::int64_t e = 0;
  std::int64_t d = 0;

  friend bool operator==(const Triple& a, const Triple& b) {
    return a.r == b.r && a.e == b.e && a.d == b.d;
  }
  friend bool operator<(const Triple& a, const Triple& b) {
    if (a.r != b.r) return a.r < b.r;
    if (a.e != b.e) return a.e < b.e;
    return a.d < b.d;
  }
  std::string str() const;  // "(r,e,d)"
};

enum class SetTag { BPlus, BZero, BMinus, UOnly, C1, C2, C3, C4, E };

std::string tag_name(SetTag tag);

/// (r*e*d - d(d+1)(p-1)/2) / (r(r-1)/2), exact.
Rational g_exponent(std::int64_t p, const Triple& t);

/// B_PLUS, B_ZERO or B_MINUS when the triple lies in that part of B(p).
std::optional<SetTag> in_B(std::int64_t p, const Triple& t);

bool in_U(std::int64_t p, const Triple& t);

/// r >= 2, (p-1)/2 < e <= p-1, 1 <= d <= p, d(p-1) <= re <= (d+1)(p-1).
bool in_D(std::int64_t p, const Triple& t);

/// The scalar of the determinant identity on B(p). Throws NotInB.
Residue epsilon(const PrimeCtx& ctx, const Triple& t);

/// det M_d((x^r - 1)^e) in closed form, for t in U(p) with r | p-1.
Residue det_xr1(const PrimeCtx& ctx, const Triple& t);

/// Membership in C1, C2, C3 from their parametrizations.
bool in_C1(std::int64_t p, const Triple& t);
bool in_C2(std::int64_t p, const Triple& t);
bool in_C3(std::int64_t p, const Triple& t);

struct CMember {
  Triple t;
  Residue det_xrx;  // closed-form det M_d((x^r - x)^e)
};

/// All members of C_j(p), j in 1..4, in lexicographic (r, e, d) order.
std::vector<CMember> enumerate_C(int j, const PrimeCtx& ctx);

/// (-1/(s+1))^l * l(l+s)...(l+(l-1)s) / (s(s-1)...(s-l+1)).
Rational kappa(std::int64_t s, std::int64_t l);

struct KappaSurvivor {
  std::int64_t p;
  Triple t;
  std::optional<SetTag> b_tag;
};

/// Primes p <= p_max with s | p-1, r = (p-1)/s >= 2 and
/// kappa(s,l) = (-1/(s+1))^{rl} in F_p, with the triple (r, s+(r-1)l, 1).
std::vector<KappaSurvivor> kappa_survivor_primes(std::int64_t s, std::int64_t l, std::int64_t p_max);

/// (p-1)(r-d-1)((r-d)/2 - (re/(p-1) - d)). Throws NotInD.
Rational degree_balance(std::int64_t p, const Triple& t);

}  // namespace discdet
