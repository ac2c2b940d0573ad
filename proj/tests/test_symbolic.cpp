#include <random>

#include "discdet/errors.hpp"
#include "discdet/fpmat.hpp"
#include "discdet/symbolic.hpp"
#include "doctest.h"

using namespace discdet;

namespace {

MultiPoly random_sparse(const PrimeCtx& ctx, int nvars, std::mt19937_64& rng, int terms, int max_exp) {
  std::uniform_int_distribution<int> ex(0, max_exp);
  std::uniform_int_distribution<Residue> co(0, ctx.p() - 1);
  MultiPoly m(ctx, nvars);
  for (int i = 0; i < terms; ++i) {
    std::vector<int> exps(static_cast<std::size_t>(nvars));
    for (auto& x : exps) x = ex(rng);
    m = m + MultiPoly::monomial(ctx, exps, co(rng));
  }
  return m;
}

std::vector<Residue> random_point(const PrimeCtx& ctx, int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<Residue> co(0, ctx.p() - 1);
  std::vector<Residue> pt(static_cast<std::size_t>(n));
  for (auto& v : pt) v = co(rng);
  return pt;
}

}  // namespace

TEST_CASE("multipoly arithmetic") {
  PrimeCtx ctx(7);
  const auto x1 = MultiPoly::variable(ctx, 2, 0);
  const auto x2 = MultiPoly::variable(ctx, 2, 1);
  const auto sq = (x1 - x2) * (x1 - x2);
  CHECK(sq.str() == "x1^2 + 5*x1*x2 + x2^2");
  CHECK(sq.coeff({1, 1}) == 5);
  CHECK(sq.total_degree() == 2);
  CHECK((sq - sq).is_zero());
  CHECK(MultiPoly::divide_exact(sq, x1 - x2) == x1 - x2);
  CHECK_THROWS_AS(MultiPoly::divide_exact(sq, x1), InvalidArgument);
  const auto [q, rem] = MultiPoly::divmod(sq + MultiPoly::constant(ctx, 2, 3), x1 - x2);
  CHECK(q == x1 - x2);
  CHECK(rem == MultiPoly::constant(ctx, 2, 3));

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = random_sparse(ctx, 3, rng, 5, 3);
    const auto b = random_sparse(ctx, 3, rng, 4, 3);
    const auto pt = random_point(ctx, 3, rng);
    REQUIRE((a * b).eval(pt) == ctx.mul(a.eval(pt), b.eval(pt)));
    REQUIRE((a + b).eval(pt) == ctx.add(a.eval(pt), b.eval(pt)));
    if (!b.is_zero()) {
      REQUIRE(MultiPoly::divide_exact(a * b, b) == a);
      const auto [qq, rr] = MultiPoly::divmod(a, b);
      REQUIRE(qq * b + rr == a);
    }
  }
}

TEST_CASE("generic monic and delta power") {
  PrimeCtx ctx(5);
  const auto s2 = generic_monic(2, ctx);
  REQUIRE(s2.size() == 3);
  CHECK(s2[0] == MultiPoly::constant(ctx, 2, 1));
  CHECK(s2[1] == (MultiPoly::variable(ctx, 2, 0) + MultiPoly::variable(ctx, 2, 1)).scaled(4));
  CHECK(s2[2] == MultiPoly::variable(ctx, 2, 0) * MultiPoly::variable(ctx, 2, 1));
  const auto s3 = generic_monic(3, ctx);
  CHECK(s3[2].str() == "x1*x2 + x1*x3 + x2*x3");

  CHECK(delta_power(2, 0, ctx) == MultiPoly::constant(ctx, 2, 1));
  CHECK(delta_power(2, 2, ctx).str() == "x1^2 + 3*x1*x2 + x2^2");

  // Evaluation oracle: the coefficients reproduce prod (x - a_i), and delta^2 is Delta(f).
  std::mt19937_64 rng(5);
  for (int r = 2; r <= 4; ++r) {
    const auto s = generic_monic(r, ctx);
    const auto d2 = delta_power(r, 2, ctx);
    for (int trial = 0; trial < 30; ++trial) {
      const auto roots = random_point(ctx, r, rng);
      std::vector<Residue> coeffs(static_cast<std::size_t>(r) + 1);
      for (int i = 0; i <= r; ++i) coeffs[static_cast<std::size_t>(r - i)] = s[static_cast<std::size_t>(i)].eval(roots);
      const FpPoly f(ctx, coeffs);
      for (Residue x = 0; x < 5; ++x) {
        Residue prod = 1;
        for (Residue a : roots) prod = ctx.mul(prod, ctx.sub(x, a));
        REQUIRE(f.eval(x) == prod);
      }
      REQUIRE(d2.eval(roots) == discriminant_formal(f));
    }
  }
}

TEST_CASE("bareiss determinant") {
  PrimeCtx ctx(7);
  const auto x1 = MultiPoly::variable(ctx, 2, 0);
  const auto x2 = MultiPoly::variable(ctx, 2, 1);
  CHECK(det_bareiss({{x1}}) == x1);
  const MultiPoly z(ctx, 2);
  CHECK(det_bareiss({{x1, z}, {z, x2}}) == x1 * x2);
  CHECK(det_bareiss({{z, x1}, {x2, z}}) == (x1 * x2).scaled(6));

  // Cofactor and evaluation oracles.
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 3;
    std::vector<std::vector<MultiPoly>> m(static_cast<std::size_t>(n));
    for (auto& row : m)
      for (int j = 0; j < n; ++j) row.push_back(trial % 5 == 0 && j == 0 ? z : random_sparse(ctx, 2, rng, 3, 2));
    const auto det = det_bareiss(m);
    if (n == 2) REQUIRE(det == m[0][0] * m[1][1] - m[0][1] * m[1][0]);
    const auto pt = random_point(ctx, 2, rng);
    FpMatrix num(ctx, static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) num(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].eval(pt);
    REQUIRE(det.eval(pt) == discdet::det(num));
  }
}

TEST_CASE("identity examples") {
  const auto r1 = theorem1_check(PrimeCtx(3), {2, 2, 1});
  CHECK(r1.holds);
  CHECK(r1.epsilon == 1);
  CHECK(r1.g == 2);
  const auto r2 = theorem1_check(PrimeCtx(5), {2, 3, 1});
  CHECK(r2.holds);
  CHECK(r2.epsilon == 3);
  const auto r3 = theorem1_check(PrimeCtx(5), {5, 4, 4});
  CHECK(r3.holds);
  CHECK(r3.epsilon == 1);
  CHECK_THROWS_AS(theorem1_check(PrimeCtx(11), {2, 7, 1}), ScaleRefused);
  CHECK_THROWS_AS(theorem1_check(PrimeCtx(5), {6, 4, 5}), ScaleRefused);
  CHECK_THROWS_AS(theorem1_check(PrimeCtx(7), {2, 2, 1}), NotInB);
}

TEST_CASE("identity holds on B at desk scale") {
  std::size_t checked = 0;
  for (std::uint64_t p : {2, 3, 5, 7}) {
    PrimeCtx ctx(p);
    const auto pi = static_cast<std::int64_t>(p);
    for (std::int64_t r = 2; r <= 4; ++r)
      for (std::int64_t e = 0; e <= pi - 1; ++e)
        for (std::int64_t d = 0; d <= pi; ++d) {
          const Triple t{r, e, d};
          if (!in_B(pi, t)) continue;
          INFO("p=", p, " t=", t.str());
          const auto rep = theorem1_check(ctx, t);
          REQUIRE(rep.holds);
          REQUIRE(rep.g == 2 * e - (pi - 1));
          ++checked;
        }
  }
  CHECK(checked > 20);
}

TEST_CASE("symbolic and numeric determinants agree at random roots") {
  std::mt19937_64 rng(17);
  const std::vector<std::pair<std::uint64_t, Triple>> cases{{5, {2, 3, 1}}, {7, {3, 4, 1}}, {7, {3, 6, 2}}, {5, {4, 4, 4}}};
  for (const auto& [p, t] : cases) {
    PrimeCtx ctx(p);
    const auto rep = theorem1_check(ctx, t);
    REQUIRE(rep.holds);
    const auto s = generic_monic(static_cast<int>(t.r), ctx);
    for (int trial = 0; trial < 125; ++trial) {
      const auto roots = random_point(ctx, static_cast<int>(t.r), rng);
      std::vector<Residue> coeffs(static_cast<std::size_t>(t.r) + 1);
      for (std::int64_t i = 0; i <= t.r; ++i) coeffs[static_cast<std::size_t>(t.r - i)] = s[static_cast<std::size_t>(i)].eval(roots);
      const FpPoly f(ctx, coeffs);
      const Residue numeric = m_det(f, static_cast<std::uint64_t>(t.e), t.d, CoeffPath::Dense);
      REQUIRE(rep.lhs.eval(roots) == numeric);
      REQUIRE(rep.rhs.eval(roots) == numeric);
    }
  }
}

TEST_CASE("divisibility by a delta power on D minus B") {
  std::size_t checked = 0;
  for (std::uint64_t p : {3, 5, 7}) {
    PrimeCtx ctx(p);
    const auto pi = static_cast<std::int64_t>(p);
    for (std::int64_t r = 2; r <= 5; ++r)
      for (std::int64_t e = 1; e <= pi - 1; ++e)
        for (std::int64_t d = 1; d <= pi; ++d) {
          const Triple t{r, e, d};
          if (!in_D(pi, t) || in_B(pi, t)) continue;
          INFO("p=", p, " t=", t.str());
          REQUIRE(lemma2_divisible(ctx, t));
          ++checked;
        }
  }
  CHECK(checked == 3);
  CHECK_THROWS_AS(lemma2_divisible(PrimeCtx(7), {2, 1, 1}), NotInD);
}
