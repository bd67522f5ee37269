// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "circwl.hpp"
#include "oracles.hpp"

using namespace circwl;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::ostringstream note;
  void fail(const std::string& why) {
    if (pass) note << why;
    pass = false;
  }
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::vector<FamilySpec> table_instances() {
  std::vector<FamilySpec> out;
  for (auto label : kRank4Families)
    for (const auto& s : smallest_instances(label, 3)) out.push_back(s);
  return out;
}

// {b, a} of a cubic-class circulant from the order-3 cyclotomic constants.
// The coefficient of lambda^j in X_a X_b equals the coefficient of 1 in X_{a-j} X_{b-j}.
std::set<std::int64_t> cubic_common_counts(const FamilySpec& s) {
  const auto c = structure_constants_from_table(cyclotomic_numbers_bruteforce(s.p, 3));
  auto at = [&](int a, int b) { return c.c[((a % 3) + 3) % 3][((b % 3) + 3) % 3]; };
  std::set<std::int64_t> out;
  for (int j = 0; j < 3; ++j) {
    if (s.label == FamilyLabel::G7) {
      out.insert(at(-j, -j));
    } else {
      out.insert(at(1 - j, 1 - j) + 2 * at(1 - j, 2 - j) + at(2 - j, 2 - j));
    }
  }
  return out;
}

Outcome family_tuples() {
  Outcome o;
  const auto t0 = Clock::now();
  int checked = 0;
  for (const auto& s : table_instances()) {
    const auto g = family_graph(s);
    const auto expected = table_expectation(s).tuple;
    const auto report = deza_report(g.n, g.connection);
    const auto counts = oracle::common_neighbour_counts(oracle::circulant_matrix(g.n, g.connection.members()));
    if (!report.params) {
      o.fail(describe(s) + " is not Deza");
      continue;
    }
    const std::set<std::int64_t> lib{report.params->b, report.params->a};
    if (std::set<std::int64_t>(counts.begin(), counts.end()) != lib) o.fail(describe(s) + ": matrix count differs");
    TableTuple want = expected;
    if (s.label == FamilyLabel::G7 || s.label == FamilyLabel::G8) {
      const auto cyc = cubic_common_counts(s);
      if (cyc != lib) o.fail(describe(s) + ": cyclotomic count differs");
      want.b = *cyc.rbegin();
      want.a = *cyc.begin();
    }
    if (!tuple_matches(want, *report.params)) {
      o.fail(describe(s) + ": " + to_string(*report.params) + " vs " + to_string(want));
    }
    ++checked;
  }
  const double t = seconds_since(t0);
  if (t >= 1.0) o.fail("took " + std::to_string(t) + " s");
  o.note << (o.pass ? "" : "; ") << checked << " instances of G1..G8 in " << t << " s";
  return o;
}

Outcome wl_ranks() {
  Outcome o;
  const auto t0 = Clock::now();
  std::vector<std::pair<FamilySpec, int>> cases;
  for (const auto& s : table_instances()) cases.emplace_back(s, 4);
  cases.push_back({{FamilyLabel::F1, 0, 0, 3, 7}, 5});
  cases.push_back({{FamilyLabel::SP8}, 5});
  cases.push_back({{FamilyLabel::SP9}, 5});
  for (int k : {3, 5, 7}) cases.push_back({{FamilyLabel::F2, 0, 0, 0, 0, k}, 6});
  for (const auto& [spec, rank] : cases) {
    const auto g = family_graph(spec);
    const int got = wl_closure(Digraph::circulant(g.connection)).rank();
    if (got != rank) o.fail(describe(spec) + ": rank " + std::to_string(got));
  }
  const double t = seconds_since(t0);
  if (t >= 5.0) o.fail("took " + std::to_string(t) + " s");
  o.note << (o.pass ? "" : "; ") << cases.size() << " instances in " << t << " s";
  return o;
}

Outcome survey_check(const SurveyCheck& check, const char* what, double t) {
  Outcome o;
  for (const auto& v : check.violations) o.fail(v);
  o.note << (o.pass ? "" : "; ") << what << ": " << check.survey.records.size() << " classes, "
         << check.violations.size() << " violations, " << t << " s";
  return o;
}

Outcome cyclotomy() {
  Outcome o;
  int primes = 0;
  for (int p = 5; p < 1000; ++p) {
    if (!is_prime(p)) continue;
    if (p % 4 == 1) {
      const auto t = oracle::cyclotomic_direct(p, 2, smallest_primitive_root(p));
      const auto q = quadratic_closed_form(p);
      if (t[0][0] != q.c11 || t[0][1] != q.c12 || t[1][0] != q.c12 || t[1][1] != q.c12) {
        o.fail("order 2 closed form fails at p=" + std::to_string(p));
      }
      ++primes;
    }
    if (p % 3 == 1) {
      const auto t = oracle::cyclotomic_direct(p, 3, smallest_primitive_root(p));
      const auto k = cubic_closed_form(cubic_decomposition(p));
      if (t[0][0] != k.c11 || t[0][1] != k.c12 || t[0][2] != k.c13 || t[1][2] != k.c23) {
        o.fail("order 3 closed form fails at p=" + std::to_string(p));
      }
      for (int i = 1; i <= 2; ++i) {
        const std::set<std::int64_t> ts{t[0][0] + 2 * (i - 1), t[0][1], t[0][2]};
        bool square = false;
        for (std::int64_t s = 0; s * s <= p; ++s) square = square || s * s + 3 * i * i == p;
        if ((ts.size() == 2) != square || prime_form_test(p, i) != square) {
          o.fail("prime form test fails at p=" + std::to_string(p) + ", i=" + std::to_string(i));
        }
      }
      ++primes;
    }
  }
  o.note << (o.pass ? "" : "; ") << primes << " prime/order cases below 1000";
  return o;
}

Outcome identities(const std::vector<const SurveyStats*>& stats) {
  Outcome o;
  std::uint64_t checks = 0;
  for (const auto* s : stats) {
    for (const auto& f : s->failures) o.fail(f);
    if (s->identity_failures() != 0) o.fail("survey identity failures");
    checks += s->triple_identity_checks + s->subgroup_chain_checks + s->closures;
  }
  std::vector<FamilySpec> extra = table_instances();
  extra.push_back({FamilyLabel::F1, 0, 0, 3, 7});
  extra.push_back({FamilyLabel::SP8});
  extra.push_back({FamilyLabel::SP9});
  for (int k : {3, 5, 7}) extra.push_back({FamilyLabel::F2, 0, 0, 0, 0, k});
  for (const auto& spec : extra) {
    const auto g = family_graph(spec);
    const auto closure = wl_closure(Digraph::circulant(g.connection));
    const auto ring = sring_from_closure(closure);
    const auto sc = structure_constants(ring);
    if (auto bad = axiom_violation(closure)) o.fail(describe(spec) + ": " + *bad);
    if (auto bad = triple_identity_violation(ring, sc)) o.fail(describe(spec) + ": " + *bad);
    if (auto bad = constants_match_closure(ring, sc, closure, intersection_numbers(closure))) {
      o.fail(describe(spec) + ": " + *bad);
    }
    checks += 3;
  }
  o.note << (o.pass ? "" : "; ") << checks << " checks";
  return o;
}

Outcome automorphisms() {
  Outcome o;
  int checked = 0;
  for (auto label : kAllFamilies) {
    for (const auto& spec : family_instances(label, kBruteforceAutLimit)) {
      const auto g = family_graph(spec);
      const auto found = aut_order_bruteforce(Digraph::circulant(g.connection));
      if (BigInt(found) != expected_aut_order(spec)) {
        o.fail(describe(spec) + ": search " + std::to_string(found) + ", formula " + expected_aut_order(spec).str());
      }
      ++checked;
    }
  }
  o.note << (o.pass ? "" : "; ") << checked << " instances with n <= " << kBruteforceAutLimit;
  return o;
}

Outcome closures_agree() {
  Outcome o;
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<int> order(4, 30);
  constexpr int kTrials = 500;
  for (int i = 0; i < kTrials; ++i) {
    const int n = order(rng);
    const auto s = oracle::random_symmetric(rng, n);
    const auto a = sring_from_closure(wl_closure(Digraph::circulant(s)));
    const auto b = schur_wielandt_closure(n, s);
    if (!(a == b)) o.fail(to_literal(s));
  }
  o.note << (o.pass ? "" : "; ") << kTrials << " random symmetric sets";
  return o;
}

}  // namespace

int main() {
  std::vector<Outcome> results;
  results.push_back(family_tuples());
  results.push_back(wl_ranks());

  auto t0 = Clock::now();
  const auto rank4 = verify_rank4_classification(30);
  results.push_back(survey_check(rank4, "rank-4 survey to 30", seconds_since(t0)));
  t0 = Clock::now();
  const auto strict = verify_strict_bounds(40);
  {
    auto o = survey_check(strict, "strict survey to 40", seconds_since(t0));
    for (const auto& r : strict.survey.records) {
      if (r.wl_rank > 6) o.fail(to_literal(r.connection) + " has rank " + std::to_string(r.wl_rank));
      if (!r.dim.upper || *r.dim.upper > 3) o.fail(to_literal(r.connection) + " has dim " + r.dim.interval());
    }
    results.push_back(std::move(o));
  }
  results.push_back(cyclotomy());
  results.push_back(identities({&rank4.survey.stats, &strict.survey.stats}));
  results.push_back(automorphisms());
  results.push_back(closures_agree());

  bool all = true;
  for (std::size_t i = 0; i < results.size(); ++i) {
    std::cout << "criterion " << i + 1 << ": " << (results[i].pass ? "PASS" : "FAIL") << " - "
              << results[i].note.str() << '\n';
    all = all && results[i].pass;
  }
  return all ? 0 : 1;
}
