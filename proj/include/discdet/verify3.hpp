#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "discdet/poly.hpp"
#include "discdet/sets.hpp"

namespace discdet {

/// det M_d((x^r-1)^e) / Delta(x^r-1)^{g/2}, from the closed form. Needs t in U(p), r | p-1.
Residue eps0(const PrimeCtx& ctx, const Triple& t);

/// det M_d(f^e) = eps0 Delta(f)^{g/2} in F_p, computed directly.
bool test_candidate(const Triple& t, const FpPoly& f, Residue eps0);

enum class T1Mode {
  ClosedForm,  // det M_d((x^r-x)^e) from the C-set formulas
  Direct,      // det M_d((x^r-x)^e) from the matrix
  CrossCheck,  // both, plus dense determinants and resultant discriminants in T2..T4; throws Error on disagreement
};

struct SurvivorRow {
  Triple t;
  int stage_reached;  // last stage passed, 1..4
};

struct PrimeReport {
  std::int64_t p = 0;
  std::array<std::int64_t, 4> c_counts{};  // |C_j(p) \ B(p)|
  std::array<std::int64_t, 4> t_counts{};  // survivors after T1..T4
  std::vector<SurvivorRow> reached;        // every candidate that passed T1
  std::vector<Triple> survivors() const;   // those that passed T4
};

/// Candidate generation and successive testing at one prime. p = 2 is rejected.
PrimeReport verify_prime(const PrimeCtx& ctx, T1Mode mode = T1Mode::ClosedForm);

struct RangeStats {
  std::int64_t prime_count = 0;
  std::array<Rational, 4> average{};
  std::array<std::int64_t, 4> maximum{};
};

struct RangeResult {
  std::vector<PrimeReport> reports;  // ascending p
  RangeStats stats;
};

/// Every odd prime in [p_min, p_max], processed by `workers` threads.
RangeResult verify_range(std::int64_t p_min, std::int64_t p_max, unsigned workers = 1,
                         T1Mode mode = T1Mode::ClosedForm);

RangeStats range_stats(const std::vector<PrimeReport>& reports);

/// q rounded half away from zero to `digits` decimals.
std::string format_decimal(const Rational& q, int digits);

std::string csv_header();                       // p,C1,C2,C3,C4,T1,T2,T3,T4
std::string csv_row(const PrimeReport& r);      // no trailing newline
std::string survivors_header();                 // p,r,e,d,stage_reached
std::vector<std::string> survivors_rows(const PrimeReport& r);
std::string stats_text(const RangeStats& s);    // one "name value" line per statistic

}  // namespace discdet
