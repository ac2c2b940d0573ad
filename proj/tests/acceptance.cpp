// One PASS/FAIL line per acceptance criterion. Exit status is the number of failures.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>
#include <tuple>
#include <string>

#include "discdet/errors.hpp"
#include "discdet/experimental.hpp"
#include "discdet/fpmat.hpp"
#include "discdet/ppm.hpp"
#include "discdet/sets.hpp"
#include "discdet/symbolic.hpp"
#include "discdet/theorem5.hpp"
#include "discdet/verify3.hpp"

using namespace discdet;

namespace {

using Row = std::array<std::int64_t, 8>;

Row row(const PrimeReport& r) {
  return {r.c_counts[0], r.c_counts[1], r.c_counts[2], r.c_counts[3],
          r.t_counts[0], r.t_counts[1], r.t_counts[2], r.t_counts[3]};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("missing file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* name, double limit_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o{false, ""};
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (o.pass && limit_s > 0 && secs > limit_s) o = {false, o.detail + "; over time limit"};
  if (!o.pass) ++failures;
  std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << id << " (" << name << "): " << o.detail << " ["
            << std::fixed;
  std::cout.precision(1);
  std::cout << secs << "s";
  if (limit_s > 0) std::cout << ", limit " << limit_s << "s";
  std::cout << "]" << std::endl;
}

Outcome table_small() {
  const std::map<std::int64_t, Row> want = {
      {3, {0, 0, 0, 0, 0, 0, 0, 0}},    {5, {1, 0, 0, 0, 0, 0, 0, 0}},      {7, {2, 0, 0, 0, 0, 0, 0, 0}},
      {11, {3, 0, 2, 0, 0, 0, 0, 0}},   {13, {9, 2, 0, 0, 1, 0, 0, 0}},     {17, {7, 0, 2, 0, 0, 0, 0, 0}},
      {19, {11, 0, 5, 0, 0, 0, 0, 0}},  {23, {3, 0, 0, 0, 0, 0, 0, 0}},     {29, {14, 0, 13, 0, 1, 0, 0, 0}},
      {31, {26, 11, 7, 0, 10, 0, 0, 0}}, {37, {36, 6, 0, 2, 1, 0, 0, 0}},   {41, {30, 11, 20, 0, 1, 0, 0, 0}},
      {43, {32, 17, 0, 2, 9, 0, 0, 0}},
  };
  const auto res = verify_range(3, 43, 1);
  if (res.reports.size() != want.size()) return {false, "expected 13 rows, got " + std::to_string(res.reports.size())};
  for (const auto& r : res.reports) {
    const auto it = want.find(r.p);
    if (it == want.end() || row(r) != it->second) return {false, "row mismatch: " + csv_row(r)};
  }
  return {true, "13 rows identical"};
}

Outcome table_milestones() {
  const std::map<std::int64_t, Row> want = {
      {193, {219, 32, 0, 20, 4, 1, 0, 0}},
      {6301, {13117, 17642, 0, 492, 8, 1, 1, 0}},
      {199523, {3, 0, 0, 0, 0, 0, 0, 0}},
  };
  std::string detail;
  for (const auto& [p, expect] : want) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto r = verify_prime(PrimeCtx(static_cast<std::uint64_t>(p)));
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (row(r) != expect) return {false, "row mismatch: " + csv_row(r)};
    if (secs > 600) return {false, "p=" + std::to_string(p) + " exceeded 600s"};
    detail += (detail.empty() ? "" : ", ") + std::to_string(p) + " ok";
  }
  return {true, detail};
}

Outcome first_nonzero() {
  const auto res = verify_range(3, 6399, 1);
  std::int64_t first_t2 = 0, first_t3 = 0;
  for (const auto& r : res.reports) {
    if (!first_t2 && r.t_counts[1] > 0) first_t2 = r.p;
    if (!first_t3 && r.t_counts[2] > 0) first_t3 = r.p;
  }
  const std::string detail = "first T2 at " + std::to_string(first_t2) + ", first T3 at " + std::to_string(first_t3) +
                             " (full scan below 6400)";
  return {first_t2 == 193 && first_t3 == 6301, detail};
}

Outcome range_stats_golden() {
  const auto res = verify_range(3, 1999, 1, T1Mode::CrossCheck);
  std::ostringstream csv;
  csv << csv_header() << '\n';
  for (const auto& r : res.reports) csv << csv_row(r) << '\n';
  const std::string dir = DISCDET_GOLDEN_DIR;
  if (csv.str() != slurp(dir + "/verify3_lt2000.csv")) return {false, "table differs from golden file"};
  if (stats_text(res.stats) != slurp(dir + "/verify3_lt2000_stats.txt")) return {false, "stats differ from golden file"};
  return {true, std::to_string(res.stats.prime_count) + " primes below 2000 match golden table and stats, avg T1 " +
                    format_decimal(res.stats.average[0], 5) + ", max T1 " + std::to_string(res.stats.maximum[0])};
}

// Optional long run: the full range below 200000 against the reference summary.
Outcome full_range() {
  const auto res = verify_range(3, 199999, std::max(1u, std::thread::hardware_concurrency()));
  const auto& s = res.stats;
  const bool ok = format_decimal(s.average[0], 5) == "5.52694" && s.maximum[0] == 1170 &&
                  format_decimal(s.average[1], 5) == "0.01006" && s.maximum[1] == 2 &&
                  format_decimal(s.average[2], 5) == "0.00266" && s.maximum[2] == 1 && s.maximum[3] == 0;
  std::ostringstream os;
  os << "avg/max T1 " << format_decimal(s.average[0], 5) << "/" << s.maximum[0] << ", T2 "
     << format_decimal(s.average[1], 5) << "/" << s.maximum[1] << ", T3 " << format_decimal(s.average[2], 5) << "/"
     << s.maximum[2] << ", max T4 " << s.maximum[3];
  return {ok, os.str()};
}

Outcome theorem1_suite() {
  std::size_t checked = 0;
  for (std::uint64_t p : {2, 3, 5, 7}) {
    PrimeCtx ctx(p);
    const auto pi = static_cast<std::int64_t>(p);
    for (std::int64_t r = 2; r <= 4; ++r)
      for (std::int64_t e = 0; e <= pi - 1; ++e)
        for (std::int64_t d = 0; d <= pi; ++d) {
          const Triple t{r, e, d};
          if (!in_B(pi, t)) continue;
          if (!theorem1_check(ctx, t).holds) return {false, "identity fails at p=" + std::to_string(p) + " " + t.str()};
          ++checked;
        }
  }
  return {checked > 0, std::to_string(checked) + " triples hold exactly"};
}

Outcome theorem5_suite() {
  std::mt19937_64 rng(0);
  std::size_t checked = 0;
  for (std::uint64_t p = 3; p <= 31; ++p) {
    if (!is_prime(p)) continue;
    PrimeCtx ctx(p);
    const auto pi = static_cast<std::int64_t>(p);
    for (std::int64_t r = 2; r <= pi - 1; ++r)
      for (std::int64_t e = 0; e <= pi - 2; ++e) {
        if (!structured_admissible(pi, r, e)) continue;
        for (int trial = 0; trial < 20; ++trial) {
          const auto spec = sample_spec(ctx, r, e, rng);
          if (!check_theorem5(spec).holds) return {false, "factorization fails at p=" + std::to_string(p)};
          for (const auto& [name, ok] : check_aux_lemmas(spec).identities)
            if (!ok) return {false, "identity '" + name + "' fails at p=" + std::to_string(p) + " f=" + spec.f.str()};
          ++checked;
        }
      }
  }
  return {checked > 0, std::to_string(checked) + " (p,r,e,f) cases, factorization and all auxiliary identities"};
}

Outcome ppm_suite() {
  std::size_t configs = 0, matrices = 0;
  for (int h = 1; h <= 6; ++h)
    for (int k = 1; h + k <= 7; ++k) {
      if (std::gcd(h, k) != 1) continue;
      for (int d = 1; d <= 16; ++d) {
        const auto fast = enumerate(h, k, d);
        const auto slow = enumerate_bruteforce(h, k, d);
        if (fast != slow)
          return {false, "enumeration differs at h=" + std::to_string(h) + " k=" + std::to_string(k) +
                             " d=" + std::to_string(d)};
        for (const auto& m : fast)
          if (ppm_det(m) != permutation_parity(m.sigma)) return {false, "ppm_det differs from parity"};
        ++configs;
        matrices += fast.size();
      }
    }
  std::size_t brackets = 0;
  for (std::int64_t d = 1; d <= 500; ++d)
    for (std::int64_t k = -d; k <= 2 * d; ++k) {
      if (std::gcd(k < 0 ? -k : k, d) != 1) continue;
      if (bracket(k, d) != bracket_bruteforce(k, d))
        return {false, "bracket differs at k=" + std::to_string(k) + " d=" + std::to_string(d)};
      ++brackets;
    }
  return {true, std::to_string(configs) + " (h,k,d) configurations, " + std::to_string(matrices) + " matrices, " +
                    std::to_string(brackets) + " brackets"};
}

Outcome kappa_suite() {
  const std::vector<std::tuple<int, int, Rational>> values = {
      {1, 1, Rational(BigInt(-1), BigInt(2))},  {2, 1, Rational(BigInt(-1), BigInt(6))},
      {2, 2, Rational(BigInt(4), BigInt(9))},   {3, 1, Rational(BigInt(-1), BigInt(12))},
      {3, 2, Rational(BigInt(5), BigInt(48))},  {3, 3, Rational(BigInt(-27), BigInt(64))},
  };
  for (const auto& [s, l, q] : values)
    if (kappa(s, l) != q) return {false, "kappa(" + std::to_string(s) + "," + std::to_string(l) + ") = " + kappa(s, l).str()};
  auto describe = [](const std::vector<KappaSurvivor>& v) {
    std::string out;
    for (const auto& k : v)
      out += std::to_string(k.p) + k.t.str() + (k.b_tag ? tag_name(*k.b_tag) : std::string("notB")) + ";";
    return out;
  };
  const std::string a = describe(kappa_survivor_primes(3, 2, 500));
  const std::string b = describe(kappa_survivor_primes(3, 3, 100));
  if (a != "7(2,5,1)B0;43(14,29,1)notB;") return {false, "survivors(3,2,500) = " + a};
  if (b != "7(2,6,1)B0;13(4,12,1)notB;") return {false, "survivors(3,3,100) = " + b};
  return {true, "six kappa values exact, survivor primes {7,43} and {7,13} with triples and tags"};
}

Outcome experimental_suite() {
  std::size_t eq1 = 0, eq2 = 0, zero = 0, glynn = 0;
  std::mt19937_64 rng(0);
  for (std::uint64_t p : {3, 5, 7, 11, 13}) {
    PrimeCtx ctx(p);
    for (const auto& t : enumerate_E(static_cast<std::int64_t>(p), 4))
      for (int trial = 0; trial < 10; ++trial) {
        const auto rep = check_equality1_random(ctx, t, rng);
        if (!rep.holds)
          return {false, "potential counterexample to equality 1 at p=" + std::to_string(p) + " " + t.str()};
        ++eq1;
      }
  }
  for (std::uint64_t p : {3, 5, 7, 11}) {
    PrimeCtx ctx(p);
    std::uniform_int_distribution<Residue> co(0, p - 1);
    for (std::size_t r : {2, 3}) {
      for (int done = 0; done < 200;) {
        FpMatrix a(ctx, r, r);
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t j = 0; j < r; ++j) a(i, j) = co(rng);
        if (det(a) == 0) continue;
        for (std::uint64_t e = 0; e < p; ++e) {
          const auto rep = check_equality2(a, e);
          if (rep.status == Eq2Status::Fails)
            return {false, "potential counterexample to equality 2 at p=" + std::to_string(p) + " e=" + std::to_string(e) +
                               " A=" + a.str()};
          (rep.status == Eq2Status::Holds ? eq2 : zero) += 1;
        }
        ++done;
      }
    }
  }
  std::size_t singular = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const std::uint64_t p = std::vector<std::uint64_t>{2, 3, 5, 7, 11}[trial % 5];
    PrimeCtx ctx(p);
    std::uniform_int_distribution<Residue> co(0, p - 1);
    const std::size_t r = 1 + static_cast<std::size_t>(trial / 5) % 3;
    FpMatrix a(ctx, r, r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) a(i, j) = co(rng);
    if (trial % 7 == 0 && r > 1)
      for (std::size_t j = 0; j < r; ++j) a(r - 1, j) = a(0, j);  // force some singular matrices
    singular += det(a) == 0;
    if (!check_glynn_theorem(a).holds) return {false, "Glynn fails at p=" + std::to_string(p) + " A=" + a.str()};
    ++glynn;
  }
  return {singular > 0, "equality 1: " + std::to_string(eq1) + " cases; equality 2: " + std::to_string(eq2) +
                            " held, " + std::to_string(zero) + " zero denominators, 0 failures; Glynn: " +
                            std::to_string(glynn) + " matrices (" + std::to_string(singular) + " singular)"};
}

Outcome cross_stack() {
  std::size_t dets = 0, discs = 0;
  for (std::uint64_t p = 3; p <= 101; ++p) {
    if (!is_prime(p)) continue;
    PrimeCtx ctx(p);
    const auto pi = static_cast<std::int64_t>(p);
    for (std::int64_t r = 2; r < pi; ++r) {
      if ((pi - 1) % r) continue;
      const FpPoly xr1 = FpPoly::monomial(ctx, static_cast<std::size_t>(r)) - FpPoly::constant(ctx, 1);
      for (std::int64_t e = 1; e < pi; ++e)
        for (std::int64_t d = 1; d <= pi; ++d) {
          const Triple t{r, e, d};
          if (!in_U(pi, t)) continue;
          if (det_xr1(ctx, t) != m_det(xr1, static_cast<std::uint64_t>(e), d, CoeffPath::Dense))
            return {false, "det M_d((x^r-1)^e) closed form differs at p=" + std::to_string(p) + " " + t.str()};
          ++dets;
        }
    }
    for (int j = 1; j <= 4; ++j)
      for (const auto& m : enumerate_C(j, ctx)) {
        const FpPoly f = FpPoly::monomial(ctx, static_cast<std::size_t>(m.t.r)) - FpPoly::monomial(ctx, 1);
        if (m.det_xrx != m_det(f, static_cast<std::uint64_t>(m.t.e), m.t.d, CoeffPath::Dense))
          return {false, "C" + std::to_string(j) + " closed form differs at p=" + std::to_string(p) + " " + m.t.str()};
        ++dets;
      }
    for (std::int64_t r = 2; r <= 12; ++r) {
      const FpPoly xr = FpPoly::monomial(ctx, static_cast<std::size_t>(r));
      const FpPoly x = FpPoly::monomial(ctx, 1);
      const FpPoly one = FpPoly::constant(ctx, 1);
      if (special_discriminant(SpecialKind::XrMinus1, r, ctx) != discriminant_formal(xr - one) ||
          special_discriminant(SpecialKind::XrMinusX, r, ctx) != discriminant_formal(xr - x))
        return {false, "special discriminant differs at p=" + std::to_string(p) + " r=" + std::to_string(r)};
      if (pi % r == 0 && special_discriminant(SpecialKind::XrMinusXMinus1, r, ctx) != discriminant_formal(xr - x - one))
        return {false, "Delta(x^r-x-1) differs at p=" + std::to_string(p)};
      for (std::int64_t k = 1; k < r; ++k)
        for (Residue b : {1, 2, 3}) {
          const FpPoly f = xr + FpPoly::monomial(ctx, static_cast<std::size_t>(k)) + FpPoly::constant(ctx, b % p);
          if (trinomial_discriminant(ctx, r, k, 1, b % p) != discriminant_formal(f))
            return {false, "trinomial discriminant differs at p=" + std::to_string(p)};
          ++discs;
        }
      discs += 2;
    }
    verify_prime(ctx, T1Mode::CrossCheck);  // throws on any closed-form versus direct disagreement
  }
  return {true, std::to_string(dets) + " closed-form determinants and " + std::to_string(discs) +
                    " closed-form discriminants agree with direct computation for p <= 101"};
}

}  // namespace

int main(int argc, char** argv) {
  const bool long_run = argc > 1 && std::strcmp(argv[1], "--long") == 0;
  criterion(1, "reference rows for p <= 43", 60, table_small);
  criterion(2, "milestone primes 193, 6301, 199523", 1800, table_milestones);
  criterion(3, "first nonzero T2 at 193 and T3 at 6301", 3600, first_nonzero);
  criterion(4, "range statistics below 2000 against golden file", 0, range_stats_golden);
  if (long_run) criterion(4, "full range below 200000 against reference summary", 0, full_range);
  criterion(5, "symbolic identity on B(p), p <= 7, r <= 4", 300, theorem1_suite);
  criterion(6, "structured factorization and auxiliary identities, p <= 31", 120, theorem5_suite);
  criterion(7, "periodic permutation matrices and brackets", 0, ppm_suite);
  criterion(8, "kappa values and survivor primes", 0, kappa_suite);
  criterion(9, "experimental equalities and Glynn", 0, experimental_suite);
  criterion(10, "closed forms against direct computation, p <= 101", 300, cross_stack);
  std::cout << (failures ? "FAILED " : "ALL PASSED ") << failures << " failure(s)" << std::endl;
  return failures;
}
