#pragma once

// Exhaustive survey of symmetric circulant connection sets: Deza prefilter,
// multiplier reduction, closure, classification, isomorphism deduplication,
// family matching and dimension bounds. Output order is deterministic.

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <exception>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "circwl/canonical.hpp"
#include "circwl/coherent.hpp"
#include "circwl/deza.hpp"
#include "circwl/errors.hpp"
#include "circwl/families.hpp"
#include "circwl/group.hpp"
#include "circwl/schur_ring.hpp"
#include "circwl/wl_dimension.hpp"

namespace circwl {

inline constexpr int kSurveyDefaultMaxOrder = 40;
inline constexpr int kSurveyMaskLimit = 64;

// Pair classes {i, -i} of Z_n minus 0 as bit masks; S = -S is a union of them.
class PairClasses {
 public:
  explicit PairClasses(int n) : n_(n) {
    if (n < 2) throw PreconditionError("symmetric sets: n must be at least 2");
    if (n > kSurveyMaskLimit) throw UnsupportedError("symmetric sets: n exceeds 64");
    for (int i = 1; 2 * i <= n; ++i) {
      masks_.push_back((std::uint64_t{1} << i) | (std::uint64_t{1} << (n - i)));
    }
  }
  int order() const { return n_; }
  int count() const { return static_cast<int>(masks_.size()); }
  std::uint64_t combine(std::uint64_t bits) const {
    std::uint64_t out = 0;
    for (int c = 0; bits != 0; ++c, bits >>= 1) {
      if (bits & 1U) out |= masks_[c];
    }
    return out;
  }

 private:
  int n_;
  std::vector<std::uint64_t> masks_;
};

namespace detail {

inline std::uint64_t full_mask(int n) { return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

// S + z as a mask.
inline std::uint64_t rotate_mask(std::uint64_t s, int z, int n) {
  if (z == 0) return s;
  return ((s << z) | (s >> (n - z))) & full_mask(n);
}

// Sorted-sequence lexicographic order on masks.
inline bool mask_less(std::uint64_t a, std::uint64_t b) {
  if (a == b) return false;
  const int x = std::countr_zero(a ^ b);
  if ((a >> x) & 1U) return (b >> x) != 0;
  return (a >> x) == 0;
}

// At most two distinct values of |S cap (S + z)| over z != 0. Symmetry halves the range.
inline bool deza_prefilter(std::uint64_t s, int n) {
  int first = -1;
  int second = -1;
  for (int z = 1; 2 * z <= n; ++z) {
    const int c = std::popcount(s & rotate_mask(s, z, n));
    if (c == first || c == second) continue;
    if (first < 0) {
      first = c;
    } else if (second < 0) {
      second = c;
    } else {
      return false;
    }
  }
  return true;
}

class MultiplierTable {
 public:
  explicit MultiplierTable(int n) : n_(n) {
    for (int u : units(n)) {
      if (u <= 1) continue;
      std::vector<int> row(n);
      for (int x = 0; x < n; ++x) row[x] = static_cast<int>(static_cast<std::int64_t>(u) * x % n);
      images_.push_back(std::move(row));
    }
  }
  // S is lexicographically least among its multiplier images.
  bool is_canonical(std::uint64_t s) const {
    for (const auto& row : images_) {
      std::uint64_t image = 0;
      for (std::uint64_t rest = s; rest != 0; rest &= rest - 1) {
        image |= std::uint64_t{1} << row[std::countr_zero(rest)];
      }
      if (mask_less(image, s)) return false;
    }
    return true;
  }

 private:
  int n_;
  std::vector<std::vector<int>> images_;
};

}  // namespace detail

// Every S in Z_n minus 0 with S = -S, in increasing pair-class bit order.
inline std::vector<GroupSubset> enumerate_symmetric_sets(int n, bool multiplier_reduce = false) {
  const PairClasses classes(n);
  const detail::MultiplierTable mult(n);
  std::vector<GroupSubset> out;
  const std::uint64_t total = std::uint64_t{1} << classes.count();
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    const auto mask = classes.combine(bits);
    if (multiplier_reduce && !mult.is_canonical(mask)) continue;
    out.push_back(GroupSubset::from_mask(n, mask));
  }
  return out;
}

struct SurveyFilters {
  bool strict_only = false;
  std::optional<int> rank;
};

struct SurveyOptions {
  int n_min = 4;
  int n_max = 12;
  SurveyFilters filters;
  unsigned jobs = 0;  // 0 = hardware concurrency
  bool force = false;
  bool multiplier_reduce = true;
  // Verify coherence axioms and the structure-constant identities on every closure.
  bool verify_identities = true;
};

struct SearchRecord {
  int n = 0;
  GroupSubset connection;
  DezaParams params;
  bool is_srg = false;
  bool is_strict = false;
  bool is_ddg = false;
  int wl_rank = 0;
  std::optional<Rank4Form> rank4;
  std::optional<Rank3Form> rank3;
  std::optional<FamilySpec> family;
  DimBounds dim;
  CanonicalForm form;
};

struct SurveyStats {
  std::uint64_t sets_enumerated = 0;
  std::uint64_t deza_survivors = 0;
  std::uint64_t closures = 0;
  std::uint64_t axiom_failures = 0;
  std::uint64_t triple_identity_checks = 0;
  std::uint64_t triple_identity_failures = 0;
  std::uint64_t closure_constant_failures = 0;
  std::uint64_t subgroup_chain_checks = 0;
  std::uint64_t subgroup_chain_failures = 0;
  std::vector<std::string> failures;

  void merge(const SurveyStats& o) {
    sets_enumerated += o.sets_enumerated;
    deza_survivors += o.deza_survivors;
    closures += o.closures;
    axiom_failures += o.axiom_failures;
    triple_identity_checks += o.triple_identity_checks;
    triple_identity_failures += o.triple_identity_failures;
    closure_constant_failures += o.closure_constant_failures;
    subgroup_chain_checks += o.subgroup_chain_checks;
    subgroup_chain_failures += o.subgroup_chain_failures;
    failures.insert(failures.end(), o.failures.begin(), o.failures.end());
  }
  std::uint64_t identity_failures() const {
    return axiom_failures + triple_identity_failures + closure_constant_failures + subgroup_chain_failures;
  }
};

struct SurveyResult {
  std::vector<SearchRecord> records;
  SurveyStats stats;
};

// (U - L)^2 = (|U| - 2|L|)(U minus L) + (|U| - |L|) L for every chain L <= U of Z_n.
inline void check_subgroup_chains(int n, SurveyStats& stats) {
  const auto lattice = subgroup_lattice(CyclicGroup(n));
  for (const auto& l : lattice) {
    for (const auto& u : lattice) {
      if (!l.is_subset_of(u)) continue;
      ++stats.subgroup_chain_checks;
      const auto diff = indicator(u) - indicator(l);
      const auto lhs = ring_multiply(diff, diff);
      const auto lu = static_cast<std::int64_t>(u.size());
      const auto ll = static_cast<std::int64_t>(l.size());
      const auto rhs = (lu - 2 * ll) * indicator(set_difference(u, l)) + (lu - ll) * indicator(l);
      if (lhs != rhs) {
        ++stats.subgroup_chain_failures;
        stats.failures.push_back("subgroup chain identity fails for |L|=" + std::to_string(ll) + ", |U|=" +
                                 std::to_string(lu) + " in Z_" + std::to_string(n));
      }
    }
  }
}

namespace detail {

struct Candidate {
  GroupSubset connection;
  DezaReport report;
  SchurRing sring;
  std::optional<Rank4Form> rank4;
  std::optional<Rank3Form> rank3;
  CanonicalForm form;
};

inline std::optional<Candidate> examine(std::uint64_t mask, int n, const SurveyOptions& opt,
                                        const MultiplierTable& mult, int canonical_limit, SurveyStats& stats) {
  ++stats.sets_enumerated;
  if (!deza_prefilter(mask, n)) return std::nullopt;
  if (opt.multiplier_reduce && !mult.is_canonical(mask)) return std::nullopt;
  ++stats.deza_survivors;
  auto s = GroupSubset::from_mask(n, mask);
  auto report = deza_report(n, s);
  if (!report.is_deza) throw InconsistencyError("Deza prefilter disagrees with deza_report on " + to_literal(s));
  if (opt.filters.strict_only && !report.is_strictly_deza) return std::nullopt;

  const auto closure = wl_closure(Digraph::circulant(s));
  ++stats.closures;
  if (opt.filters.rank && closure.rank() != *opt.filters.rank) return std::nullopt;
  auto sring = sring_from_closure(closure);
  if (opt.verify_identities) {
    if (auto bad = axiom_violation(closure)) {
      ++stats.axiom_failures;
      stats.failures.push_back(to_literal(s) + ": " + *bad);
    }
    const auto sc = structure_constants(sring);
    ++stats.triple_identity_checks;
    if (auto bad = triple_identity_violation(sring, sc)) {
      ++stats.triple_identity_failures;
      stats.failures.push_back(to_literal(s) + ": " + *bad);
    }
    if (auto bad = constants_match_closure(sring, sc, closure, intersection_numbers(closure))) {
      ++stats.closure_constant_failures;
      stats.failures.push_back(to_literal(s) + ": " + *bad);
    }
  }
  Candidate c{s, std::move(report), std::move(sring), std::nullopt, std::nullopt, {}};
  if (c.sring.rank() == 4) c.rank4 = classify_rank4(c.sring);
  if (c.sring.rank() == 3) c.rank3 = classify_rank3(c.sring);
  c.form = canonical_form(s, canonical_limit);
  return c;
}

struct ChunkResult {
  std::vector<Candidate> candidates;
  SurveyStats stats;
};

inline std::vector<Candidate> survey_order(int n, const SurveyOptions& opt, int canonical_limit, SurveyStats& stats) {
  const PairClasses classes(n);
  const MultiplierTable mult(n);
  const std::uint64_t total = std::uint64_t{1} << classes.count();
  constexpr std::uint64_t kChunk = 1024;
  const std::uint64_t chunks = (total + kChunk - 1) / kChunk;
  std::vector<ChunkResult> results(chunks);
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    while (true) {
      const std::uint64_t c = next.fetch_add(1);
      if (c >= chunks) return;
      try {
        auto& out = results[c];
        const std::uint64_t end = std::min(total, (c + 1) * kChunk);
        for (std::uint64_t bits = c * kChunk; bits < end; ++bits) {
          if (auto cand = examine(classes.combine(bits), n, opt, mult, canonical_limit, out.stats)) {
            out.candidates.push_back(std::move(*cand));
          }
        }
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(chunks);
        return;
      }
    }
  };

  unsigned jobs = opt.jobs ? opt.jobs : std::max(1U, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::uint64_t>(jobs, chunks));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < jobs; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<Candidate> merged;
  for (auto& r : results) {
    stats.merge(r.stats);
    for (auto& c : r.candidates) merged.push_back(std::move(c));
  }
  return merged;
}

}  // namespace detail

// Canonical forms of family instances over Z_n, built lazily.
class FamilyIndex {
 public:
  explicit FamilyIndex(int canonical_limit = kCanonicalVertexLimit) : limit_(canonical_limit) {}

  struct Entry {
    FamilySpec spec;
    GroupSubset connection;
    DezaParams params;
    CanonicalForm form;
  };

  const std::vector<Entry>& of_order(int n) {
    auto it = cache_.find(n);
    if (it != cache_.end()) return it->second;
    std::vector<Entry> entries;
    for (const auto& spec : instances_of_order(n)) {
      auto g = family_graph(spec);
      auto report = deza_report(g.n, g.connection);
      if (!report.params) continue;
      entries.push_back({spec, g.connection, *report.params, canonical_form(g.connection, limit_)});
    }
    return cache_.emplace(n, std::move(entries)).first->second;
  }

  // Parameter match first, then canonical-form equality.
  std::optional<FamilySpec> match(int n, const DezaParams& params, const CanonicalForm& form) {
    for (const auto& e : of_order(n)) {
      if (e.params == params && e.form == form) return e.spec;
    }
    return std::nullopt;
  }

 private:
  int limit_;
  std::map<int, std::vector<Entry>> cache_;
};

inline SurveyResult run_survey(const SurveyOptions& opt) {
  if (opt.n_min < 2 || opt.n_max < opt.n_min) throw PreconditionError("run_survey: need 2 <= n_min <= n_max");
  if (opt.n_max > kSurveyDefaultMaxOrder && !opt.force) {
    throw SizeError("run_survey: n_max " + std::to_string(opt.n_max) + " exceeds " +
                    std::to_string(kSurveyDefaultMaxOrder) + "; pass force to override");
  }
  if (opt.n_max > kSurveyMaskLimit) throw UnsupportedError("run_survey: orders above 64 are not supported");
  const int canonical_limit = std::max(kCanonicalVertexLimit, opt.n_max);
  SurveyResult result;
  FamilyIndex families(canonical_limit);
  for (int n = opt.n_min; n <= opt.n_max; ++n) {
    if (opt.verify_identities) check_subgroup_chains(n, result.stats);
    auto candidates = detail::survey_order(n, opt, canonical_limit, result.stats);
    std::set<CanonicalForm> seen;
    for (auto& c : candidates) {
      if (!seen.insert(c.form).second) continue;
      SearchRecord r;
      r.n = n;
      r.connection = c.connection;
      r.params = *c.report.params;
      r.is_srg = c.report.is_srg;
      r.is_strict = c.report.is_strictly_deza;
      r.is_ddg = c.report.is_ddg;
      r.wl_rank = c.sring.rank();
      r.rank4 = c.rank4;
      r.rank3 = c.rank3;
      r.family = families.match(n, r.params, c.form);
      r.dim = dimension_bounds(c.sring, c.report, r.family ? std::optional(r.family->label) : std::nullopt);
      r.form = std::move(c.form);
      result.records.push_back(std::move(r));
    }
  }
  return result;
}

// Rank-4 records that match no rank-4 family; each one contradicts the classification.
inline std::vector<std::string> unexplained_rank4(const std::vector<SearchRecord>& records) {
  std::vector<std::string> out;
  for (const auto& r : records) {
    if (r.wl_rank != 4) continue;
    const bool rank4_family =
        r.family && std::find(std::begin(kRank4Families), std::end(kRank4Families), r.family->label) !=
                        std::end(kRank4Families);
    if (!rank4_family) out.push_back("unexplained rank-4 Deza graph " + to_literal(r.connection));
  }
  return out;
}

struct SurveyCheck {
  SurveyResult survey;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty() && survey.stats.identity_failures() == 0; }
};

// Rank-4 Deza circulants over 4 <= n <= max_n are exactly the G1..G8 instances.
inline SurveyCheck verify_rank4_classification(int max_n, unsigned jobs = 0, bool force = false) {
  SurveyOptions opt;
  opt.n_min = 4;
  opt.n_max = max_n;
  opt.filters.rank = 4;
  opt.jobs = jobs;
  opt.force = force;
  SurveyCheck out{run_survey(opt), {}};
  out.violations = unexplained_rank4(out.survey.records);
  FamilyIndex families(std::max(kCanonicalVertexLimit, max_n));
  for (auto label : kRank4Families) {
    for (const auto& spec : family_instances(label, max_n)) {
      const int n = family_order(spec);
      if (n < 4) continue;
      const auto g = family_graph(spec);
      const auto form = canonical_form(g.connection, std::max(kCanonicalVertexLimit, max_n));
      const bool found = std::any_of(out.survey.records.begin(), out.survey.records.end(),
                                     [&](const SearchRecord& r) { return r.n == n && r.form == form; });
      if (!found) out.violations.push_back("family instance " + describe(spec) + " missing from the survey");
    }
  }
  return out;
}

// Strictly Deza circulants over 4 <= n <= max_n have WL-rank <= 6 and dimension upper bound <= 3.
inline SurveyCheck verify_strict_bounds(int max_n, unsigned jobs = 0, bool force = false) {
  SurveyOptions opt;
  opt.n_min = 4;
  opt.n_max = max_n;
  opt.filters.strict_only = true;
  opt.jobs = jobs;
  opt.force = force;
  SurveyCheck out{run_survey(opt), {}};
  for (const auto& r : out.survey.records) {
    if (r.wl_rank > 6) {
      out.violations.push_back(to_literal(r.connection) + ": WL-rank " + std::to_string(r.wl_rank) + " > 6");
    }
    if (!r.dim.upper || *r.dim.upper > 3) {
      out.violations.push_back(to_literal(r.connection) + ": dimension bounds " + r.dim.interval());
    }
  }
  return out;
}

}  // namespace circwl
