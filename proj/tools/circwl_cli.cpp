// Command-line front end: single-graph analysis, family instances, surveys,
// table regeneration, cyclotomic numbers and the classification checks.
//
// Exit status: 0 on success, 1 when a survey finds a classification or
// identity violation, 2 on invalid input.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "circwl.hpp"
#include "json_render.hpp"

namespace {

using namespace circwl;
using cli::Json;

constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;

int run_analyze(int n, const std::string& set_text) {
  const auto members = parse_residue_list(set_text);
  const auto s = GroupSubset::from_residues(n, members);
  const auto report = deza_report(n, s);

  Json out;
  out["n"] = n;
  out["set"] = cli::members_json(s);
  out["deza"] = cli::deza_json(report);
  out["diameter"] = report.diameter ? Json(*report.diameter) : Json(nullptr);
  Json spectrum = Json::array();
  for (const auto& [value, level] : report.coefficient_spectrum) {
    spectrum.push_back(Json{{"coefficient", value}, {"elements", cli::members_json(level)}});
  }
  out["spectrum"] = spectrum;
  out["ddg_params"] = cli::ddg_json(report.ddg_params);

  std::optional<SchurRing> ring;
  if (n <= kTablesClosureLimit) {
    const auto closure = wl_closure(Digraph::circulant(s));
    const auto bad = axiom_violation(closure);
    out["closure_axioms"] = bad ? *bad : std::string("ok");
    ring = sring_from_closure(closure);
  } else {
    ring = schur_wielandt_closure(n, s);
  }
  out["wl_rank"] = ring->rank();
  out["basic_sets"] = cli::basic_sets_json(*ring);
  if (ring->rank() == 4) out["rank4_case"] = cli::rank4_json(classify_rank4(*ring));
  if (ring->rank() == 3) out["rank3_case"] = cli::rank3_json(classify_rank3(*ring));

  std::optional<FamilySpec> family;
  if (report.params && n <= kCanonicalVertexLimit) {
    FamilyIndex index;
    family = index.match(n, *report.params, canonical_form(s));
  }
  out["family"] = cli::family_json(family);
  out["dim"] = cli::dim_json(dimension_bounds(*ring, report, family ? std::optional(family->label) : std::nullopt));
  if (n <= kBruteforceAutLimit) out["aut_order"] = aut_order_bruteforce(Digraph::circulant(s));
  std::cout << out.dump(2) << '\n';
  return 0;
}

int run_family(const std::string& label_text, const FamilySpec& params) {
  FamilySpec spec = params;
  spec.label = parse_family_label(label_text);
  validate(spec);
  const auto g = family_graph(spec);
  const auto row = compute_table_row(spec);
  Json out;
  out["family"] = cli::family_json(spec);
  out["n"] = g.n;
  out["set"] = cli::members_json(g.connection);
  out["params"] = cli::params_json(row.params);
  out["table_tuple"] = to_string(row.expected.tuple);
  out["strict"] = row.strict;
  out["ddg"] = row.ddg;
  out["wl_rank"] = row.wl_rank;
  out["dim"] = cli::dim_json(row.dim);
  out["aut_order"] = row.aut_formula.str();
  out["aut_order_search"] = row.aut_bruteforce ? Json(*row.aut_bruteforce) : Json(nullptr);
  std::cout << out.dump(2) << '\n';
  return 0;
}

int report_failures(const std::vector<std::string>& violations, const SurveyStats& stats) {
  for (const auto& v : violations) std::cerr << "violation: " << v << '\n';
  for (const auto& f : stats.failures) std::cerr << "identity failure: " << f << '\n';
  return violations.empty() && stats.identity_failures() == 0 ? 0 : kExitViolation;
}

int run_search(const SurveyOptions& opt, const std::string& jsonl_path) {
  const auto result = run_survey(opt);
  std::ofstream file;
  if (!jsonl_path.empty()) {
    file.open(jsonl_path);
    if (!file) throw PreconditionError("cannot open " + jsonl_path);
  }
  std::ostream& os = jsonl_path.empty() ? std::cout : file;
  for (const auto& r : result.records) os << cli::record_json(r).dump() << '\n';
  const auto violations = unexplained_rank4(result.records);
  std::cerr << "records: " << result.records.size() << ", violations: " << violations.size()
            << ", identity failures: " << result.stats.identity_failures() << '\n';
  return report_failures(violations, result.stats);
}

int run_check(const SurveyCheck& check, const char* claim) {
  for (const auto& r : check.survey.records) {
    std::cout << to_literal(r.connection) << "  rank=" << r.wl_rank << "  dim=" << r.dim.interval()
              << "  family=" << (r.family ? describe(*r.family) : std::string("-")) << '\n';
  }
  std::cout << "stats: " << cli::stats_json(check.survey.stats).dump() << '\n';
  std::cout << claim << ": " << (check.ok() ? "holds" : "VIOLATED") << " (" << check.survey.records.size()
            << " classes, " << check.violations.size() << " violations)\n";
  return report_failures(check.violations, check.survey.stats);
}

int run_cyclotomic(int p, int m) {
  const auto t = cyclotomic_numbers_bruteforce(p, m);
  std::cout << t.dump();
  if (t.f % 2 != 0) {
    std::cout << "f odd: classes are not symmetric, no structure constants\n";
    return 0;
  }
  const auto c = structure_constants_from_table(t);
  if (m == 2 && p % 4 == 1) {
    const auto q = quadratic_closed_form(p);
    std::cout << "closed form: c11=" << q.c11 << " c12=c21=c22=" << q.c12 << '\n';
  }
  if (m == 3) {
    const auto d = cubic_decomposition(p);
    const auto k = cubic_closed_form(d);
    std::cout << "4p = x^2 + 27y^2: x=" << d.x << " y=" << d.y << '\n';
    std::cout << "closed form: c11=" << k.c11 << " c12=" << k.c12 << " c13=" << k.c13 << " c23=" << k.c23 << '\n';
    for (int i = 1; i <= 2; ++i) {
      std::cout << "T" << i << " size=" << t_set(c, i).size() << " p-3*" << i * i
                << " square=" << (prime_form_test(p, i) ? "yes" : "no") << '\n';
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deza circulants: WL-rank, WL-dimension bounds and classification surveys"};
  app.require_subcommand(1);

  int analyze_n = 0;
  std::string analyze_set;
  auto* analyze = app.add_subcommand("analyze", "Full report for one circulant as JSON");
  analyze->add_option("--n", analyze_n, "Group order")->required()->check(CLI::PositiveNumber);
  analyze->add_option("--set", analyze_set, "Connection set, comma separated")->required();

  std::string family_label;
  FamilySpec family_params;
  auto* family = app.add_subcommand("family", "Build a family instance and report it as JSON");
  family->add_option("label", family_label, "g1..g8, f1, f2, sp8, sp9")->required();
  family->add_option("--m", family_params.m);
  family->add_option("--l", family_params.l);
  family->add_option("--p", family_params.p);
  family->add_option("--q", family_params.q);
  family->add_option("--k", family_params.k);

  SurveyOptions search_opt;
  int search_rank = 0;
  std::string jsonl_path;
  auto* search = app.add_subcommand("search", "Survey Deza circulants, one JSON record per isomorphism class");
  search->add_option("--min", search_opt.n_min)->required();
  search->add_option("--max", search_opt.n_max)->required();
  search->add_flag("--strict", search_opt.filters.strict_only, "Strictly Deza graphs only");
  search->add_option("--rank", search_rank, "Keep only this WL-rank");
  search->add_option("--jsonl", jsonl_path, "Write records to this file instead of stdout");
  search->add_option("--jobs", search_opt.jobs, "Worker threads (0 = all cores)");
  search->add_flag("--force", search_opt.force, "Allow orders above 40");

  auto* tables = app.add_subcommand("tables", "Regenerate the family tables and list mismatches");

  int cyc_p = 0;
  int cyc_m = 2;
  auto* cyclotomic = app.add_subcommand("cyclotomic", "Cyclotomic numbers of order 2 or 3");
  cyclotomic->add_option("--p", cyc_p)->required();
  cyclotomic->add_option("--m", cyc_m)->check(CLI::IsMember({2, 3}));

  int thm1_max = 30;
  int thm3_max = 40;
  unsigned verify_jobs = 0;
  bool verify_force = false;
  auto* thm1 = app.add_subcommand("verify-thm1", "Rank-4 Deza circulants are exactly the family instances");
  thm1->add_option("--max-n", thm1_max);
  auto* thm3 = app.add_subcommand("verify-thm3", "Strictly Deza circulants have WL-rank <= 6 and dimension <= 3");
  thm3->add_option("--max-n", thm3_max);
  for (auto* sub : {thm1, thm3}) {
    sub->add_option("--jobs", verify_jobs);
    sub->add_flag("--force", verify_force);
  }

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) return run_analyze(analyze_n, analyze_set);
    if (*family) return run_family(family_label, family_params);
    if (*search) {
      if (search_rank > 0) search_opt.filters.rank = search_rank;
      return run_search(search_opt, jsonl_path);
    }
    if (*tables) {
      std::cout << regenerate_tables().render();
      return 0;
    }
    if (*cyclotomic) return run_cyclotomic(cyc_p, cyc_m);
    if (*thm1) {
      return run_check(verify_rank4_classification(thm1_max, verify_jobs, verify_force),
                         "rank-4 classification");
    }
    if (*thm3) return run_check(verify_strict_bounds(thm3_max, verify_jobs, verify_force), "strict bounds");
  } catch (const ClassificationError& e) {
    std::cerr << "classification failure: " << e.what() << '\n';
    return kExitViolation;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return 0;
}
