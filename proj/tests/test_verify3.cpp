#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "discdet/errors.hpp"
#include "discdet/fpmat.hpp"
#include "discdet/verify3.hpp"
#include "doctest.h"

using namespace discdet;

namespace {

// Reference rows: p -> C1..C4, T1..T4.
const std::map<std::int64_t, std::array<std::int64_t, 8>> kTable = {
    {3, {0, 0, 0, 0, 0, 0, 0, 0}},   {5, {1, 0, 0, 0, 0, 0, 0, 0}},    {7, {2, 0, 0, 0, 0, 0, 0, 0}},
    {11, {3, 0, 2, 0, 0, 0, 0, 0}},  {13, {9, 2, 0, 0, 1, 0, 0, 0}},   {17, {7, 0, 2, 0, 0, 0, 0, 0}},
    {19, {11, 0, 5, 0, 0, 0, 0, 0}}, {23, {3, 0, 0, 0, 0, 0, 0, 0}},   {29, {14, 0, 13, 0, 1, 0, 0, 0}},
    {31, {26, 11, 7, 0, 10, 0, 0, 0}}, {37, {36, 6, 0, 2, 1, 0, 0, 0}}, {41, {30, 11, 20, 0, 1, 0, 0, 0}},
    {43, {32, 17, 0, 2, 9, 0, 0, 0}}, {193, {219, 32, 0, 20, 4, 1, 0, 0}},
};

std::array<std::int64_t, 8> row(const PrimeReport& r) {
  return {r.c_counts[0], r.c_counts[1], r.c_counts[2], r.c_counts[3],
          r.t_counts[0], r.t_counts[1], r.t_counts[2], r.t_counts[3]};
}

FpPoly xr_minus(const PrimeCtx& ctx, std::int64_t r, std::size_t low) {
  return FpPoly::monomial(ctx, static_cast<std::size_t>(r), 1) - FpPoly::monomial(ctx, low, 1);
}

}  // namespace

TEST_CASE("reference rows") {
  for (const auto& [p, expect] : kTable) {
    const auto rep = verify_prime(PrimeCtx(static_cast<std::uint64_t>(p)));
    INFO("p=", p, " got ", csv_row(rep));
    CHECK(row(rep) == expect);
    CHECK(rep.survivors().size() == static_cast<std::size_t>(rep.t_counts[3]));
  }
  CHECK_THROWS_AS(verify_prime(PrimeCtx(2)), InvalidArgument);
}

TEST_CASE("test_candidate") {
  // Every member of B(p) passes for every f at small p.
  std::mt19937_64 rng(3);
  for (std::uint64_t p : {5, 7, 11, 13}) {
    PrimeCtx ctx(p);
    std::uniform_int_distribution<Residue> co(0, p - 1);
    const auto pi = static_cast<std::int64_t>(p);
    for (std::int64_t r = 2; r < pi; ++r) {
      if ((pi - 1) % r) continue;
      for (std::int64_t e = 1; e < pi; ++e)
        for (std::int64_t d = 1; d <= pi; ++d) {
          const Triple t{r, e, d};
          if (!in_B(pi, t) || g_exponent(pi, t) == Rational(0)) continue;
          const Residue e0 = eps0(ctx, t);
          for (int trial = 0; trial < 3; ++trial) {
            std::vector<Residue> c(static_cast<std::size_t>(r) + 1);
            for (auto& v : c) v = co(rng);
            c.back() = 1;
            INFO("p=", p, " t=", t.str());
            REQUIRE(test_candidate(t, FpPoly(ctx, c), e0));
          }
        }
    }
  }
  // At p = 13 exactly one candidate passes x^r - x.
  PrimeCtx c13(13);
  std::set<Triple> cands;
  for (int j = 1; j <= 4; ++j)
    for (const auto& m : enumerate_C(j, c13))
      if (!in_B(13, m.t)) cands.insert(m.t);
  int passing = 0;
  for (const auto& t : cands) passing += test_candidate(t, xr_minus(c13, t.r, 1), eps0(c13, t));
  CHECK(passing == 1);
  // A squareful f forces a zero determinant.
  for (const auto& t : cands) {
    FpPoly sq = FpPoly::from_ints(c13, {1, 2, 1});
    while (sq.degree() < t.r) sq = sq * FpPoly::from_ints(c13, {3, 1});
    REQUIRE(discriminant_formal(sq) == 0);
    CHECK(test_candidate(t, sq, eps0(c13, t)) == (m_det(sq, static_cast<std::uint64_t>(t.e), t.d) == 0));
  }
}

TEST_CASE("closed form and direct T1 agree up to 101") {
  for (std::uint64_t p = 3; p <= 101; ++p) {
    if (!is_prime(p)) continue;
    PrimeCtx ctx(p);
    const auto closed = verify_prime(ctx, T1Mode::ClosedForm);
    const auto cross = verify_prime(ctx, T1Mode::CrossCheck);
    INFO("p=", p);
    CHECK(csv_row(closed) == csv_row(cross));
    CHECK(closed.reached.size() == cross.reached.size());
  }
}

TEST_CASE("stage discriminants match the resultant") {
  for (std::uint64_t p : {5, 7, 13, 31}) {
    PrimeCtx ctx(p);
    for (std::int64_t r = 2; r <= 9; ++r) {
      for (std::int64_t k = 1; k < r; ++k) {
        std::vector<std::int64_t> c(static_cast<std::size_t>(r) + 1, 0);
        c[static_cast<std::size_t>(r)] = 1;
        c[static_cast<std::size_t>(k)] += 1;
        c[0] += 1;
        REQUIRE(trinomial_discriminant(ctx, r, k, 1, 1) == discriminant_formal(FpPoly::from_ints(ctx, c)));
        if (k >= 2) {
          c[0] -= 1;
          c[1] += 1;
          REQUIRE(trinomial_discriminant(ctx, r - 1, k - 1, 1, 1) == discriminant_formal(FpPoly::from_ints(ctx, c)));
        }
      }
      for (std::int64_t b : {2, 3}) {
        std::vector<std::int64_t> c(static_cast<std::size_t>(r) + 1, 0);
        c[static_cast<std::size_t>(r)] = 1;
        c[1] += 1;
        c[0] += b;
        REQUIRE(trinomial_discriminant(ctx, r, 1, 1, ctx.reduce(b)) == discriminant_formal(FpPoly::from_ints(ctx, c)));
      }
    }
  }
}

TEST_CASE("range ordering, stats and determinism") {
  const auto one = verify_range(3, 300, 1);
  const auto four = verify_range(3, 300, 4);
  REQUIRE(one.reports.size() == four.reports.size());
  for (std::size_t i = 0; i < one.reports.size(); ++i) {
    CHECK(csv_row(one.reports[i]) == csv_row(four.reports[i]));
    if (i) CHECK(one.reports[i - 1].p < one.reports[i].p);
    const auto& t = one.reports[i].t_counts;
    CHECK(t[0] >= t[1]);
    CHECK(t[1] >= t[2]);
    CHECK(t[2] >= t[3]);
    const auto& c = one.reports[i].c_counts;
    CHECK(t[0] <= c[0] + c[1] + c[2] + c[3]);
  }
  CHECK(stats_text(one.stats) == stats_text(four.stats));
  // First nonzero T2 is at 193.
  for (const auto& r : one.reports)
    if (r.p < 193) CHECK(r.t_counts[1] == 0);
  CHECK(format_decimal(Rational(BigInt(1), BigInt(3)), 5) == "0.33333");
  CHECK(format_decimal(Rational(BigInt(2), BigInt(3)), 5) == "0.66667");
  CHECK(format_decimal(Rational(BigInt(1), BigInt(200000)), 5) == "0.00001");
  CHECK(format_decimal(Rational(0), 5) == "0.00000");
  CHECK(format_decimal(Rational(BigInt(-5), BigInt(2)), 0) == "-3");
  CHECK_THROWS_AS(verify_range(10, 5), InvalidArgument);
}

TEST_CASE("golden statistics below 2000") {
  std::ifstream in(std::string(DISCDET_GOLDEN_DIR) + "/verify3_lt2000.csv");
  REQUIRE(in.good());
  std::stringstream want;
  want << in.rdbuf();
  const auto res = verify_range(3, 1999, 4);
  std::ostringstream got;
  got << csv_header() << '\n';
  for (const auto& r : res.reports) got << csv_row(r) << '\n';
  CHECK(got.str() == want.str());
  std::ifstream sin(std::string(DISCDET_GOLDEN_DIR) + "/verify3_lt2000_stats.txt");
  REQUIRE(sin.good());
  std::stringstream swant;
  swant << sin.rdbuf();
  CHECK(stats_text(res.stats) == swant.str());
}
