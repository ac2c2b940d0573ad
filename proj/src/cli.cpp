#include "discdet/cli.hpp"

#include <fstream>
#include <ostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "discdet/errors.hpp"
#include "discdet/experimental.hpp"
#include "discdet/ppm.hpp"
#include "discdet/sets.hpp"
#include "discdet/symbolic.hpp"
#include "discdet/theorem5.hpp"
#include "discdet/verify3.hpp"

namespace discdet {

namespace {

struct Options {
  std::int64_t min_p = 3, max_p = 43, p = 0, r = 0, e = 0, max_r = 4;
  std::int64_t s_max = 3, h = 0, k = 0, d = 0;
  unsigned jobs = 1;
  int trials = 10;
  std::uint64_t seed = 0;
  std::string out_path, survivors_path, stats_path, coeffs;
  bool cross_check = false, oracle = false;
};

std::uint64_t checked_prime(std::int64_t p) {
  if (p < 2 || !is_prime(static_cast<std::uint64_t>(p)))
    throw InvalidArgument("--p must be a prime, got " + std::to_string(p));
  if (p >= (std::int64_t{1} << 31)) throw InvalidArgument("--p must be below 2^31");
  return static_cast<std::uint64_t>(p);
}

std::ofstream open_out(const std::string& path) {
  std::ofstream f(path);
  if (!f) throw InvalidArgument("cannot open " + path + " for writing");
  return f;
}

const char* pass_fail(bool ok) { return ok ? "PASS" : "FAIL"; }

int cmd_verify3(const Options& o, std::ostream& out, std::ostream& err) {
  const auto res = verify_range(o.min_p, o.max_p, o.jobs, o.cross_check ? T1Mode::CrossCheck : T1Mode::ClosedForm);
  std::ostringstream csv;
  csv << csv_header() << '\n';
  for (const auto& r : res.reports) csv << csv_row(r) << '\n';
  out << csv.str();
  if (!o.out_path.empty()) open_out(o.out_path) << csv.str();
  bool witness = false;
  std::ostringstream surv;
  surv << survivors_header() << '\n';
  for (const auto& r : res.reports) {
    for (const auto& line : survivors_rows(r)) surv << line << '\n';
    for (const auto& t : r.survivors()) {
      witness = true;
      err << "WITNESS p=" << r.p << " " << t.str() << " survives all four stages\n";
    }
  }
  if (!o.survivors_path.empty()) open_out(o.survivors_path) << surv.str();
  if (!o.stats_path.empty()) open_out(o.stats_path) << stats_text(res.stats);
  err << stats_text(res.stats);
  return witness ? kExitFinding : kExitOk;
}

int cmd_th1sym(const Options& o, std::ostream& out) {
  bool all = true;
  for (std::int64_t p = 2; p <= o.max_p; ++p) {
    if (!is_prime(static_cast<std::uint64_t>(p))) continue;
    const PrimeCtx ctx(static_cast<std::uint64_t>(p));
    for (std::int64_t r = 2; r <= o.max_r; ++r)
      for (std::int64_t e = 0; e <= p - 1; ++e)
        for (std::int64_t d = 1; d <= p; ++d) {
          const Triple t{r, e, d};
          if (!in_B(p, t)) continue;
          const auto rep = theorem1_check(ctx, t);
          all = all && rep.holds;
          out << p << ' ' << r << ' ' << e << ' ' << d << ' ' << (rep.holds ? "true" : "false") << ' '
              << rep.epsilon << ' ' << rep.g << '\n';
        }
  }
  return all ? kExitOk : kExitFinding;
}

int cmd_th5(const Options& o, std::ostream& out) {
  const PrimeCtx ctx(checked_prime(o.p));
  std::vector<StructuredSpec> specs;
  if (!o.coeffs.empty()) {
    std::vector<std::int64_t> s;
    std::stringstream ss(o.coeffs);
    for (std::string tok; std::getline(ss, tok, ',');) s.push_back(std::stoll(tok));
    if (static_cast<std::int64_t>(s.size()) != o.r) throw InvalidArgument("--coeffs needs exactly r values");
    std::vector<std::int64_t> c(s.rbegin(), s.rend());
    c.push_back(1);
    specs.push_back(make_spec(ctx, o.r, o.e, FpPoly::from_ints(ctx, c)));
  } else {
    std::mt19937_64 rng(o.seed);
    for (int i = 0; i < o.trials; ++i) specs.push_back(sample_spec(ctx, o.r, o.e, rng));
  }
  bool all = true;
  for (const auto& spec : specs) {
    const bool main_ok = check_theorem5(spec).holds;
    all = all && main_ok;
    out << pass_fail(main_ok) << " theorem5 f=" << spec.f.str() << '\n';
    for (const auto& [name, ok] : check_aux_lemmas(spec).identities) {
      all = all && ok;
      out << pass_fail(ok) << ' ' << name << '\n';
    }
  }
  return all ? kExitOk : kExitFinding;
}

int cmd_exp1(const Options& o, std::ostream& out) {
  const PrimeCtx ctx(checked_prime(o.p));
  if (o.p == 2) throw InvalidArgument("exp1 needs an odd prime");
  std::mt19937_64 rng(o.seed);
  int passed = 0, failed = 0;
  for (const auto& t : enumerate_E(o.p, o.max_r))
    for (int i = 0; i < o.trials; ++i) {
      const auto rep = check_equality1_random(ctx, t, rng);
      (rep.holds ? passed : failed) += 1;
      out << pass_fail(rep.holds) << " p=" << o.p << ' ' << t.str() << " trial=" << i;
      if (!rep.holds) out << " lhs=" << rep.lhs << " rhs=" << rep.rhs << " (potential counterexample)";
      out << '\n';
    }
  out << "exp1 summary: " << passed << " passed, " << failed << " failed\n";
  return failed ? kExitFinding : kExitOk;
}

int cmd_exp2(const Options& o, std::ostream& out) {
  const PrimeCtx ctx(checked_prime(o.p));
  if (o.r < 1) throw InvalidArgument("--r must be positive");
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<Residue> co(0, ctx.p() - 1);
  int passed = 0, failed = 0, zero = 0;
  for (int i = 0; i < o.trials;) {
    FpMatrix a(ctx, static_cast<std::size_t>(o.r), static_cast<std::size_t>(o.r));
    for (std::size_t x = 0; x < a.rows(); ++x)
      for (std::size_t y = 0; y < a.cols(); ++y) a(x, y) = co(rng);
    if (det(a) == 0) continue;
    for (std::uint64_t e = 0; e < ctx.p(); ++e) {
      const auto rep = check_equality2(a, e);
      out << (rep.status == Eq2Status::Holds ? "PASS" : rep.status == Eq2Status::Fails ? "FAIL" : "ZERO-DENOMINATOR")
          << " p=" << o.p << " r=" << o.r << " trial=" << i << " e=" << e << '\n';
      if (rep.status == Eq2Status::Holds) ++passed;
      else if (rep.status == Eq2Status::Fails) ++failed;
      else ++zero;
    }
    ++i;
  }
  out << "exp2 summary: " << passed << " passed, " << failed << " failed, " << zero << " zero denominator\n";
  return failed ? kExitFinding : kExitOk;
}

int cmd_ppm(const Options& o, std::ostream& out) {
  const auto list = o.oracle ? enumerate_bruteforce(static_cast<int>(o.h), static_cast<int>(o.k), static_cast<int>(o.d))
                             : enumerate(static_cast<int>(o.h), static_cast<int>(o.k), static_cast<int>(o.d));
  for (const auto& m : list) out << m.str() << '\n';
  return kExitOk;
}

std::string b_tag_name(const std::optional<SetTag>& tag) { return tag ? "in-" + tag_name(*tag) : "not-in-B"; }

int cmd_kappa(const Options& o, std::ostream& out) {
  if (o.s_max < 1) throw InvalidArgument("--s-max must be positive");
  std::ostringstream csv;
  csv << "s,l,kappa,p,r,e,d,b_tag\n";
  for (std::int64_t s = 1; s <= o.s_max; ++s)
    for (std::int64_t l = 1; l <= s; ++l) {
      const Rational kap = kappa(s, l);
      for (const auto& sv : kappa_survivor_primes(s, l, o.max_p)) {
        out << s << ' ' << l << ' ' << kap << ' ' << sv.p << ' ' << sv.t.str() << ' ' << b_tag_name(sv.b_tag) << '\n';
        csv << s << ',' << l << ',' << kap << ',' << sv.p << ',' << sv.t.r << ',' << sv.t.e << ',' << sv.t.d << ','
            << b_tag_name(sv.b_tag) << '\n';
      }
    }
  if (!o.out_path.empty()) open_out(o.out_path) << csv.str();
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Determinant and discriminant identities over prime fields"};
  app.require_subcommand(1);
  Options o;

  auto* v3 = app.add_subcommand("verify3", "candidate generation and successive testing over a prime range");
  v3->add_option("--min-p", o.min_p)->required();
  v3->add_option("--max-p", o.max_p)->required();
  v3->add_option("--jobs", o.jobs)->check(CLI::Range(1u, 1024u));
  v3->add_option("--out", o.out_path, "CSV copy of the table");
  v3->add_option("--survivors", o.survivors_path, "rows p,r,e,d,stage_reached for every T1 survivor");
  v3->add_option("--stats", o.stats_path, "per-stage averages and maxima");
  v3->add_flag("--cross-check", o.cross_check, "also build M_d((x^r-x)^e) directly and compare");

  auto* t1 = app.add_subcommand("th1sym", "exact symbolic identity on B(p)");
  t1->add_option("--max-p", o.max_p)->required()->check(CLI::Range(2, 7));
  t1->add_option("--max-r", o.max_r)->required()->check(CLI::Range(2, 5));

  auto* t5 = app.add_subcommand("th5", "M_d(f^e)^-1 M_d(f^(e+1)) factorization");
  t5->add_option("--p", o.p)->required();
  t5->add_option("--r", o.r)->required();
  t5->add_option("--e", o.e)->required();
  auto* coeffs = t5->add_option("--coeffs", o.coeffs, "c1,..,cr for f = x^r + c1 x^(r-1) + ... + cr");
  t5->add_option("--trials", o.trials)->excludes(coeffs)->check(CLI::Range(1, 1000000));
  t5->add_option("--seed", o.seed)->excludes(coeffs);

  auto* x1 = app.add_subcommand("exp1", "first experimental equality over E(p)");
  x1->add_option("--p", o.p)->required();
  x1->add_option("--max-r", o.max_r)->required()->check(CLI::Range(2, 64));
  x1->add_option("--trials", o.trials)->check(CLI::Range(1, 1000000));
  x1->add_option("--seed", o.seed);

  auto* x2 = app.add_subcommand("exp2", "second experimental equality on random invertible matrices");
  x2->add_option("--p", o.p)->required();
  x2->add_option("--r", o.r)->required()->check(CLI::Range(1, 16));
  x2->add_option("--trials", o.trials)->check(CLI::Range(1, 1000000));
  x2->add_option("--seed", o.seed);

  auto* pp = app.add_subcommand("ppm", "periodic permutation matrices of type (h,k) and size d");
  pp->set_help_flag("--help", "Print this help message and exit");
  pp->add_option("--h", o.h)->required()->check(CLI::Range(1, 1 << 20));
  pp->add_option("--k", o.k)->required()->check(CLI::Range(1, 1 << 20));
  pp->add_option("--d", o.d)->required()->check(CLI::Range(1, 1 << 20));
  pp->add_flag("--oracle", o.oracle, "brute-force enumeration");

  auto* kp = app.add_subcommand("kappa", "primes where a C1 candidate survives x^r - x");
  kp->add_option("--s-max", o.s_max)->required()->check(CLI::Range(1, 64));
  kp->add_option("--p-max", o.max_p)->required()->check(CLI::Range(2, 1 << 30));
  kp->add_option("--out", o.out_path, "CSV with columns s,l,kappa,p,r,e,d,b_tag");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "discdet: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*v3) {
      if (o.min_p > o.max_p) throw InvalidArgument("--min-p must not exceed --max-p");
      return cmd_verify3(o, out, err);
    }
    if (*t1) return cmd_th1sym(o, out);
    if (*t5) return cmd_th5(o, out);
    if (*x1) return cmd_exp1(o, out);
    if (*x2) return cmd_exp2(o, out);
    if (*pp) return cmd_ppm(o, out);
    if (*kp) return cmd_kappa(o, out);
  } catch (const InvalidArgument& e) {
    err << "discdet: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ScaleRefused& e) {
    err << "discdet: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "discdet: internal failure: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace discdet
