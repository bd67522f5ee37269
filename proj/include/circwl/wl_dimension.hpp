#pragma once

// Rule-based WL-dimension bounds for circulants with a replayable trace.
// Upper bounds come only from certified rules; anything else stays unknown.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "circwl/coherent.hpp"
#include "circwl/deza.hpp"
#include "circwl/errors.hpp"
#include "circwl/families.hpp"
#include "circwl/schur_ring.hpp"

namespace circwl {

inline constexpr int kSeparableOrderLimit = 14;

struct TraceEntry {
  std::string rule;
  std::string premise;
  friend bool operator==(const TraceEntry&, const TraceEntry&) = default;
};

struct DimBounds {
  int lower = 1;
  std::optional<int> upper;  // nullopt = unknown
  std::vector<TraceEntry> trace;

  // "{2}", "{2,3}", "[2,?]"
  std::string interval() const {
    if (!upper) return "[" + std::to_string(lower) + ",?]";
    std::string out = "{";
    for (int d = lower; d <= *upper; ++d) out += (d > lower ? "," : "") + std::to_string(d);
    return out + "}";
  }
};

namespace rules {
inline constexpr const char* kLowerRegular = "lower-bound-regular";
inline constexpr const char* kLowerTrivial = "lower-bound-trivial";
inline constexpr const char* kRank4Product = "separable-rank4-product";
inline constexpr const char* kRank4Full = "separable-full-group-ring";
inline constexpr const char* kRank4CycBottom = "separable-rank4-cyclotomic-bottom";
inline constexpr const char* kRank4CycTop = "separable-rank4-cyclotomic-top";
inline constexpr const char* kPaleyWreath = "one-point-paley-wreath";
inline constexpr const char* kCyclotomicPrime = "one-point-cyclotomic";
inline constexpr const char* kCyclotomicAsserted = "one-point-cyclotomic-asserted";
inline constexpr const char* kSeparable = "separable";
inline constexpr const char* kUnknown = "no-upper-rule";
}  // namespace rules

// Restriction of a to the subgroup of order d, as an S-ring over Z_d.
inline SchurRing restrict_to_subgroup(const SchurRing& a, int d) {
  const int n = a.order();
  const int step = n / d;
  std::vector<GroupSubset> sets;
  for (const auto& x : a.basic_sets()) {
    if (x.front() % step != 0) continue;
    std::vector<int> v;
    for (int g : x) v.push_back(g / step);
    sets.emplace_back(d, std::move(v));
  }
  return SchurRing(d, std::move(sets));
}

// Image of a in Z_n / L with |L| = d, as an S-ring over Z_{n/d}. L must be an A-subgroup.
inline SchurRing quotient_by_subgroup(const SchurRing& a, int d) {
  const int q = a.order() / d;
  std::vector<GroupSubset> sets;
  std::vector<bool> taken(q, false);
  for (const auto& x : a.basic_sets()) {
    if (taken[x.front() % q]) continue;
    std::vector<int> v;
    for (int g : x) v.push_back(g % q);
    auto image = GroupSubset::from_residues(q, v);
    for (int g : image) taken[g] = true;
    sets.push_back(std::move(image));
  }
  return SchurRing(q, std::move(sets));
}

// A = A_L (x) A_U for coprime A-subgroups L, U with |L| = d.
inline bool is_tensor_split(const SchurRing& a, int d) {
  const int n = a.order();
  const int e = n / d;
  if (d <= 1 || e <= 1 || std::gcd(d, e) != 1) return false;
  const auto l = subgroup_of_order(n, d);
  const auto u = subgroup_of_order(n, e);
  if (!a.is_union_of_basic_sets(l) || !a.is_union_of_basic_sets(u)) return false;
  std::vector<const GroupSubset*> in_l, in_u;
  for (const auto& x : a.basic_sets()) {
    if (x.is_subset_of(l)) in_l.push_back(&x);
    if (x.is_subset_of(u)) in_u.push_back(&x);
  }
  if (in_l.size() * in_u.size() != static_cast<std::size_t>(a.rank())) return false;
  for (const auto* x : in_l) {
    for (const auto* y : in_u) {
      std::vector<int> sum;
      for (int g : *x) {
        for (int h : *y) sum.push_back((g + h) % n);
      }
      const auto s = GroupSubset::from_residues(n, sum);
      const auto& basic = a.basic_set(a.index_of(s.front()));
      if (basic != s) return false;
    }
  }
  return true;
}

// A = A_L wr A_{G/L} with |L| = d: every basic set outside L is a union of L-cosets.
inline bool is_wreath_split(const SchurRing& a, int d) {
  const int n = a.order();
  if (d <= 1 || d >= n) return false;
  const auto l = subgroup_of_order(n, d);
  if (!a.is_union_of_basic_sets(l)) return false;
  const int step = n / d;
  for (const auto& x : a.basic_sets()) {
    if (x.is_subset_of(l)) continue;
    if (x.translated(step) != x) return false;
  }
  return true;
}

// Explanation when separability follows from small order, trivial shape, or a
// tensor / wreath decomposition into separable factors.
inline std::optional<std::string> separability_witness(const SchurRing& a) {
  const int n = a.order();
  if (n <= kSeparableOrderLimit) return "order " + std::to_string(n) + " <= " + std::to_string(kSeparableOrderLimit);
  if (a.rank() == 2) return "rank 2 over Z_" + std::to_string(n);
  if (a.rank() == n) return "full group ring over Z_" + std::to_string(n);
  for (int d : divisors(n)) {
    if (!is_tensor_split(a, d)) continue;
    auto left = separability_witness(restrict_to_subgroup(a, d));
    auto right = separability_witness(restrict_to_subgroup(a, n / d));
    if (left && right) {
      return "tensor over Z_" + std::to_string(d) + " x Z_" + std::to_string(n / d) + " [" + *left + "; " + *right + "]";
    }
  }
  for (int d : divisors(n)) {
    if (!is_wreath_split(a, d)) continue;
    auto bottom = separability_witness(restrict_to_subgroup(a, d));
    auto top = separability_witness(quotient_by_subgroup(a, d));
    if (bottom && top) {
      return "wreath with |L|=" + std::to_string(d) + " [" + *bottom + "; " + *top + "]";
    }
  }
  return std::nullopt;
}

// Every basic set other than {0} has trivial radical.
inline bool has_trivial_radical(const SchurRing& a) {
  for (int i = 1; i < a.rank(); ++i) {
    if (radical_of(a.basic_set(i)).size() != 1) return false;
  }
  return true;
}

// Families whose closure is a normal cyclotomic S-ring with trivial radical by construction.
inline bool family_asserts_normal_cyclotomic(std::optional<FamilyLabel> f) {
  return f && (*f == FamilyLabel::F1 || *f == FamilyLabel::SP8 || *f == FamilyLabel::SP9);
}

inline DimBounds dimension_bounds(const SchurRing& a, const DezaReport& report,
                                  std::optional<FamilyLabel> family = std::nullopt) {
  if (a.order() != report.n) {
    throw PreconditionError("dimension_bounds: S-ring over Z_" + std::to_string(a.order()) + " but report for n=" +
                            std::to_string(report.n));
  }
  DimBounds out;
  const int n = a.order();
  if (report.is_srg) {
    out.lower = 1;
    out.trace.push_back({rules::kLowerTrivial, "strongly regular"});
  } else {
    out.lower = 2;
    out.trace.push_back({rules::kLowerRegular, "regular, not strongly regular"});
  }

  auto set_upper = [&](int value, const char* rule, std::string premise) {
    out.upper = value;
    out.trace.push_back({rule, std::move(premise)});
  };

  if (a.rank() == 4) {
    const auto form = classify_rank4(a);
    switch (form.tag) {
      case Rank4Case::Z4Full: set_upper(2, rules::kRank4Full, describe(form)); break;
      case Rank4Case::TensorTT:
      case Rank4Case::DoubleWreath: set_upper(2, rules::kRank4Product, describe(form) + " of rank-2 factors"); break;
      case Rank4Case::CycWreathBottom:
        if (form.lower <= kSeparableOrderLimit) {
          set_upper(2, rules::kRank4CycBottom, describe(form) + ", bottom factor order <= 14");
        }
        break;
      case Rank4Case::WreathCycTop:
        if (form.lower == 2 && n == 2 * form.prime) {
          set_upper(3, rules::kPaleyWreath, describe(form) + ", |L|=2");
        } else if (form.prime <= kSeparableOrderLimit) {
          set_upper(2, rules::kRank4CycTop, describe(form) + ", top factor order <= 14");
        }
        break;
      case Rank4Case::PrimeCubicCyclotomic:
        set_upper(3, rules::kCyclotomicPrime, describe(form) + ", prime order, trivial radical");
        break;
    }
  } else if (auto why = separability_witness(a)) {
    set_upper(2, rules::kSeparable, *why);
  } else if (recognize_cyclotomic(a) && has_trivial_radical(a)) {
    if (is_prime(n)) {
      set_upper(3, rules::kCyclotomicPrime, "cyclotomic, prime order " + std::to_string(n) + ", trivial radical");
    } else if (family_asserts_normal_cyclotomic(family)) {
      set_upper(3, rules::kCyclotomicAsserted,
                "cyclotomic, trivial radical, normality asserted for family " + to_string(*family));
    }
  }
  if (!out.upper) out.trace.push_back({rules::kUnknown, "no certified rule applies"});
  if (out.upper && *out.upper < out.lower) {
    throw InconsistencyError("dimension_bounds: upper " + std::to_string(*out.upper) + " below lower " +
                             std::to_string(out.lower));
  }
  return out;
}

inline DimBounds dimension_bounds(const CoherentConfiguration& closure, const SchurRing& a, const DezaReport& report,
                                  std::optional<FamilyLabel> family = std::nullopt) {
  if (closure.vertex_count() != a.order() || closure.rank() != a.rank()) {
    throw PreconditionError("dimension_bounds: closure and S-ring describe different graphs");
  }
  return dimension_bounds(a, report, family);
}

// Re-checks every trace premise against the inputs; returns the first failure.
inline std::optional<std::string> replay_trace(const DimBounds& b, const SchurRing& a, const DezaReport& report,
                                               std::optional<FamilyLabel> family = std::nullopt) {
  const int n = a.order();
  for (const auto& e : b.trace) {
    bool ok = false;
    if (e.rule == rules::kLowerTrivial) {
      ok = report.is_srg && b.lower == 1;
    } else if (e.rule == rules::kLowerRegular) {
      ok = !report.is_srg && b.lower == 2;
    } else if (e.rule == rules::kRank4Full) {
      ok = a.rank() == 4 && classify_rank4(a).tag == Rank4Case::Z4Full;
    } else if (e.rule == rules::kRank4Product) {
      ok = a.rank() == 4 && (classify_rank4(a).tag == Rank4Case::TensorTT ||
                             classify_rank4(a).tag == Rank4Case::DoubleWreath);
    } else if (e.rule == rules::kRank4CycBottom) {
      ok = a.rank() == 4 && classify_rank4(a).tag == Rank4Case::CycWreathBottom &&
           classify_rank4(a).lower <= kSeparableOrderLimit;
    } else if (e.rule == rules::kRank4CycTop) {
      ok = a.rank() == 4 && classify_rank4(a).tag == Rank4Case::WreathCycTop &&
           classify_rank4(a).prime <= kSeparableOrderLimit;
    } else if (e.rule == rules::kPaleyWreath) {
      const auto f = a.rank() == 4 ? std::optional<Rank4Form>(classify_rank4(a)) : std::nullopt;
      ok = f && f->tag == Rank4Case::WreathCycTop && f->lower == 2 && n == 2 * f->prime;
    } else if (e.rule == rules::kCyclotomicPrime) {
      ok = is_prime(n) && recognize_cyclotomic(a).has_value() && has_trivial_radical(a);
    } else if (e.rule == rules::kCyclotomicAsserted) {
      ok = family_asserts_normal_cyclotomic(family) && recognize_cyclotomic(a).has_value() && has_trivial_radical(a);
    } else if (e.rule == rules::kSeparable) {
      ok = separability_witness(a).has_value();
    } else if (e.rule == rules::kUnknown) {
      ok = !b.upper.has_value();
    }
    if (!ok) return "premise of '" + e.rule + "' does not hold: " + e.premise;
  }
  return std::nullopt;
}

}  // namespace circwl
