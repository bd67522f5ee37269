#pragma once

// Regeneration of the family parameter tables: three smallest instances per
// row, computed parameters, strictness, DDG flag, automorphism order, WL-rank
// and dimension bounds, checked against hard-coded expectations.

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "circwl/automorphisms.hpp"
#include "circwl/coherent.hpp"
#include "circwl/deza.hpp"
#include "circwl/families.hpp"
#include "circwl/schur_ring.hpp"
#include "circwl/wl_dimension.hpp"

namespace circwl {

inline constexpr int kTablesInstancesPerRow = 3;
// Above this order the WL-rank comes from the S-ring closure of S instead of 2-WL.
inline constexpr int kTablesClosureLimit = 100;

// The table tuple as written; b and a are missing where only the shape is given.
struct TableTuple {
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::optional<std::int64_t> b;
  std::optional<std::int64_t> a;
};

inline std::string to_string(const TableTuple& t) {
  auto part = [](const std::optional<std::int64_t>& v, const char* name) {
    return v ? std::to_string(*v) : std::string(name);
  };
  return "(" + std::to_string(t.n) + "," + std::to_string(t.k) + "," + part(t.b, "b") + "," + part(t.a, "a") + ")";
}

inline std::string to_string(const DezaParams& d) {
  return "(" + std::to_string(d.n) + "," + std::to_string(d.k) + "," + std::to_string(d.b) + "," +
         std::to_string(d.a) + ")";
}

struct TableExpectation {
  TableTuple tuple;
  bool strict = false;
  bool ddg = false;
  int wl_rank = 0;
  std::string dim;
};

inline TableExpectation table_expectation(const FamilySpec& s) {
  validate(s);
  const std::int64_t m = s.m;
  const std::int64_t l = s.l;
  const std::int64_t p = s.p;
  const std::int64_t n = family_order(s);
  switch (s.label) {
    case FamilyLabel::G1: return {{4 * m, m + 2, m - 2, 2}, true, true, 4, "{2}"};
    case FamilyLabel::G2: return {{2 * m, m - 1, m - 2, 0}, false, true, 4, "{2}"};
    case FamilyLabel::G3: return {{5 * m, 2, 1, 0}, false, false, 4, "{2}"};
    case FamilyLabel::G4: return {{2 * l * m, m, m, 0}, false, true, 4, "{2}"};
    case FamilyLabel::G5:
      return {{2 * l * m, 2 * l * m - 2 * m + 1, 2 * l * m - 2 * m, 2 * l * m - 4 * m + 2}, true, true, 4, "{2}"};
    case FamilyLabel::G6: return {{2 * p, p, p - 1, (p - 1) / 2}, true, true, 4, "{2,3}"};
    case FamilyLabel::G7: return {{p, (p - 1) / 3, std::nullopt, std::nullopt}, true, false, 4, "{2,3}"};
    case FamilyLabel::G8: return {{p, 2 * (p - 1) / 3, std::nullopt, std::nullopt}, true, false, 4, "{2,3}"};
    case FamilyLabel::F1: return {{n, (n + 3) / 2, (n + 7) / 4, (n + 3) / 4}, true, false, 5, "{2,3}"};
    case FamilyLabel::F2: {
      const std::int64_t k = s.k;
      return {{4 * k, 3 * k - 2, 3 * (k - 2), 2 * (k - 1)}, true, true, 6, "{2}"};
    }
    case FamilyLabel::SP8: return {{8, 4, 2, 1}, true, false, 5, "{2}"};
    case FamilyLabel::SP9: return {{9, 4, 2, 1}, true, false, 5, "{2}"};
  }
  throw UnsupportedError("table_expectation: unknown label");
}

// Equal up to the order of the two common-neighbour counts; absent entries match anything.
inline bool tuple_matches(const TableTuple& t, const DezaParams& d) {
  if (t.n != d.n || t.k != d.k) return false;
  if (!t.b || !t.a) return true;
  return (*t.b == d.b && *t.a == d.a) || (*t.b == d.a && *t.a == d.b);
}

struct TableRow {
  FamilySpec spec;
  TableExpectation expected;
  std::optional<DezaParams> params;
  bool strict = false;
  bool ddg = false;
  int wl_rank = 0;
  DimBounds dim;
  BigInt aut_formula;
  std::optional<std::uint64_t> aut_bruteforce;
};

struct TablesReport {
  std::vector<TableRow> rows;
  std::vector<std::string> mismatches;
  std::string render() const;
};

inline TableRow compute_table_row(const FamilySpec& spec) {
  TableRow row;
  row.spec = spec;
  row.expected = table_expectation(spec);
  const auto g = family_graph(spec);
  const auto report = deza_report(g.n, g.connection);
  row.params = report.params;
  row.strict = report.is_strictly_deza;
  row.ddg = report.is_ddg;
  const std::optional<FamilyLabel> context = spec.label;
  if (g.n <= kTablesClosureLimit) {
    const auto closure = wl_closure(Digraph::circulant(g.connection));
    const auto ring = sring_from_closure(closure);
    row.wl_rank = closure.rank();
    row.dim = dimension_bounds(closure, ring, report, context);
  } else {
    const auto ring = schur_wielandt_closure(g.n, g.connection);
    row.wl_rank = ring.rank();
    row.dim = dimension_bounds(ring, report, context);
  }
  row.aut_formula = expected_aut_order(spec);
  if (g.n <= kBruteforceAutLimit) row.aut_bruteforce = aut_order_bruteforce(Digraph::circulant(g.connection));
  return row;
}

inline std::vector<std::string> row_mismatches(const TableRow& r) {
  std::vector<std::string> out;
  const auto name = describe(r.spec);
  auto yes_no = [](bool v) { return std::string(v ? "yes" : "no"); };
  if (!r.params) {
    out.push_back(name + ": not a Deza graph, expected " + to_string(r.expected.tuple));
  } else if (!tuple_matches(r.expected.tuple, *r.params)) {
    out.push_back(name + ": parameters " + to_string(*r.params) + ", expected " + to_string(r.expected.tuple));
  }
  if (r.strict != r.expected.strict) {
    out.push_back(name + ": SDG=" + yes_no(r.strict) + ", expected " + yes_no(r.expected.strict));
  }
  if (r.ddg != r.expected.ddg) out.push_back(name + ": DDG=" + yes_no(r.ddg) + ", expected " + yes_no(r.expected.ddg));
  if (r.wl_rank != r.expected.wl_rank) {
    out.push_back(name + ": WL-rank " + std::to_string(r.wl_rank) + ", expected " +
                  std::to_string(r.expected.wl_rank));
  }
  if (r.dim.interval() != r.expected.dim) {
    out.push_back(name + ": dim=" + r.dim.interval() + ", expected " + r.expected.dim);
  }
  if (r.aut_bruteforce && BigInt(*r.aut_bruteforce) != r.aut_formula) {
    out.push_back(name + ": |Aut| by search " + std::to_string(*r.aut_bruteforce) + ", formula " +
                  r.aut_formula.str());
  }
  return out;
}

inline TablesReport regenerate_tables(int per_row = kTablesInstancesPerRow) {
  TablesReport report;
  for (auto label : kAllFamilies) {
    const std::size_t count = (label == FamilyLabel::SP8 || label == FamilyLabel::SP9) ? 1 : per_row;
    for (const auto& spec : smallest_instances(label, count)) {
      auto row = compute_table_row(spec);
      for (auto& m : row_mismatches(row)) report.mismatches.push_back(std::move(m));
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

inline std::string TablesReport::render() const {
  std::ostringstream os;
  auto yes_no = [](bool v) { return v ? "yes" : "no"; };
  std::optional<FamilyLabel> current;
  for (const auto& r : rows) {
    if (current != r.spec.label) {
      if (current) os << '\n';
      current = r.spec.label;
      os << to_string(r.spec.label) << "  table tuple " << to_string(r.expected.tuple) << ", SDG="
         << yes_no(r.expected.strict) << ", DDG=" << yes_no(r.expected.ddg) << ", dim=" << r.expected.dim << '\n';
    }
    os << "  " << describe(r.spec) << ": " << (r.params ? to_string(*r.params) : std::string("not Deza"))
       << ", SDG=" << yes_no(r.strict) << ", DDG=" << yes_no(r.ddg) << ", dim=" << r.dim.interval()
       << ", rank=" << r.wl_rank << ", |Aut|=" << r.aut_formula.str();
    if (r.aut_bruteforce) os << " (search " << *r.aut_bruteforce << ")";
    os << '\n';
  }
  os << "\nmismatches: " << mismatches.size() << '\n';
  for (const auto& m : mismatches) os << "  " << m << '\n';
  return os.str();
}

}  // namespace circwl
