#pragma once

// Schur rings over Z_n: extraction from a circulant closure, the independent
// Schur-Wielandt closure, structure constants, A-subgroups, radicals,
// cyclotomic recognition and the rank-3 / rank-4 shape classification.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "circwl/arith.hpp"
#include "circwl/coherent.hpp"
#include "circwl/errors.hpp"
#include "circwl/group.hpp"

namespace circwl {

// Partition of Z_n into basic sets in canonical order (size, then smallest element).
class SchurRing {
 public:
  SchurRing(int order, std::vector<GroupSubset> basic_sets) : order_(order), sets_(std::move(basic_sets)) {
    if (order < 1) throw PreconditionError("SchurRing: order must be positive");
    std::sort(sets_.begin(), sets_.end(), [](const GroupSubset& a, const GroupSubset& b) {
      if (a.size() != b.size()) return a.size() < b.size();
      return a.front() < b.front();
    });
    index_of_.assign(order, -1);
    for (std::size_t i = 0; i < sets_.size(); ++i) {
      const auto& x = sets_[i];
      if (x.order() != order) throw StructuralError("SchurRing: basic set over the wrong group");
      if (x.empty()) throw StructuralError("SchurRing: empty basic set");
      for (int g : x) {
        if (index_of_[g] != -1) throw StructuralError("SchurRing: basic sets overlap at " + std::to_string(g));
        index_of_[g] = static_cast<int>(i);
      }
    }
    if (std::find(index_of_.begin(), index_of_.end(), -1) != index_of_.end()) {
      throw StructuralError("SchurRing: basic sets do not cover the group");
    }
    if (sets_.front().size() != 1 || sets_.front().front() != 0) {
      throw StructuralError("SchurRing: {0} is not a basic set");
    }
  }

  // Groups residues by an arbitrary class label.
  static SchurRing from_labels(const std::vector<int>& labels) {
    const int n = static_cast<int>(labels.size());
    std::map<int, std::vector<int>> classes;
    for (int g = 0; g < n; ++g) classes[labels[g]].push_back(g);
    std::vector<GroupSubset> sets;
    sets.reserve(classes.size());
    for (auto& [label, members] : classes) sets.emplace_back(n, std::move(members));
    return SchurRing(n, std::move(sets));
  }

  int order() const { return order_; }
  int rank() const { return static_cast<int>(sets_.size()); }
  const std::vector<GroupSubset>& basic_sets() const { return sets_; }
  const GroupSubset& basic_set(int i) const { return sets_[i]; }
  int index_of(int g) const { return index_of_[g]; }

  // Index of the basic set -X.
  int inverse_index(int i) const { return index_of_[mod(-static_cast<std::int64_t>(sets_[i].front()), order_)]; }

  bool is_union_of_basic_sets(const GroupSubset& s) const {
    if (s.order() != order_) return false;
    std::vector<int> hits(sets_.size(), 0);
    for (int g : s) ++hits[index_of_[g]];
    for (std::size_t i = 0; i < sets_.size(); ++i) {
      if (hits[i] != 0 && hits[i] != static_cast<int>(sets_[i].size())) return false;
    }
    return true;
  }

  // Basic sets contained in s (s must be a union of basic sets).
  std::vector<int> components(const GroupSubset& s) const {
    std::vector<int> out;
    for (int g : s) out.push_back(index_of_[g]);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  // One line per basic set, residues comma-separated.
  std::string serialize() const {
    std::ostringstream os;
    for (const auto& x : sets_) {
      for (std::size_t i = 0; i < x.size(); ++i) os << (i ? "," : "") << x.members()[i];
      os << '\n';
    }
    return os.str();
  }

  friend bool operator==(const SchurRing& a, const SchurRing& b) {
    return a.order_ == b.order_ && a.sets_ == b.sets_;
  }

 private:
  int order_;
  std::vector<GroupSubset> sets_;
  std::vector<int> index_of_;
};

// c(X,Y,Z) is the coefficient of any z in Z in the product X*Y.
class StructureConstants {
 public:
  explicit StructureConstants(int rank) : rank_(rank), c_(static_cast<std::size_t>(rank) * rank * rank, 0) {}
  int rank() const { return rank_; }
  std::int64_t operator()(int x, int y, int z) const { return c_[idx(x, y, z)]; }
  std::int64_t& at(int x, int y, int z) { return c_[idx(x, y, z)]; }

 private:
  std::size_t idx(int x, int y, int z) const {
    return (static_cast<std::size_t>(x) * rank_ + y) * rank_ + z;
  }
  int rank_;
  std::vector<std::int64_t> c_;
};

namespace detail {

// For every z: sorted multiset of (label(a), label(z - a)) over a, as codes.
inline std::vector<std::vector<std::int64_t>> product_profiles(const std::vector<int>& labels, int classes) {
  const int n = static_cast<int>(labels.size());
  std::vector<std::vector<std::int64_t>> out(n, std::vector<std::int64_t>(n));
  for (int z = 0; z < n; ++z) {
    for (int a = 0; a < n; ++a) {
      const int b = z - a < 0 ? z - a + n : z - a;
      out[z][a] = static_cast<std::int64_t>(labels[a]) * classes + labels[b];
    }
    std::sort(out[z].begin(), out[z].end());
  }
  return out;
}

}  // namespace detail

// Description of the first violated S-ring axiom, if any.
inline std::optional<std::string> sring_axiom_violation(const SchurRing& a) {
  const int n = a.order();
  for (int i = 0; i < a.rank(); ++i) {
    const auto neg = a.basic_set(i).negated();
    if (std::find(a.basic_sets().begin(), a.basic_sets().end(), neg) == a.basic_sets().end()) {
      return "negation of basic set " + std::to_string(i) + " is not a basic set";
    }
  }
  std::vector<int> labels(n);
  for (int g = 0; g < n; ++g) labels[g] = a.index_of(g);
  const auto profiles = detail::product_profiles(labels, a.rank());
  for (int i = 0; i < a.rank(); ++i) {
    const auto& x = a.basic_set(i);
    for (int g : x) {
      if (profiles[g] != profiles[x.front()]) {
        return "products are not constant on basic set " + std::to_string(i) + " (residues " +
               std::to_string(x.front()) + " and " + std::to_string(g) + ")";
      }
    }
  }
  return std::nullopt;
}

// Basic sets are the color classes of row 0 of a Cayley closure.
inline SchurRing sring_from_closure(const CoherentConfiguration& x) {
  const int n = x.vertex_count();
  std::vector<int> labels(n);
  for (int g = 0; g < n; ++g) labels[g] = x.color(0, g);
  SchurRing a = [&] {
    try {
      return SchurRing::from_labels(labels);
    } catch (const StructuralError& e) {
      throw InconsistencyError(std::string("row 0 of the closure is not an S-ring partition: ") + e.what());
    }
  }();
  if (auto bad = sring_axiom_violation(a)) {
    throw InconsistencyError("row 0 of the closure is not an S-ring: " + *bad);
  }
  if (a.rank() != x.rank()) {
    throw InconsistencyError("closure rank " + std::to_string(x.rank()) + " differs from S-ring rank " +
                             std::to_string(a.rank()) + "; input is not a Cayley scheme");
  }
  return a;
}

// Smallest S-ring in which seed is a union of basic sets.
inline SchurRing schur_wielandt_closure(int n, const GroupSubset& seed) {
  if (seed.order() != n) throw StructuralError("schur_wielandt_closure: seed over the wrong group");
  if (seed.contains(0)) throw PreconditionError("schur_wielandt_closure: seed contains 0");
  std::vector<int> labels(n, 2);
  labels[0] = 0;
  for (int g : seed) labels[g] = 1;
  int classes = 0;
  {
    std::vector<int> norm = detail::renumber(labels);
    labels = std::move(norm);
    classes = detail::count_colors(labels);
  }
  while (true) {
    const auto profiles = detail::product_profiles(labels, classes);
    std::map<std::pair<std::pair<int, int>, std::vector<std::int64_t>>, int> ids;
    std::vector<int> next(n);
    for (int g = 0; g < n; ++g) {
      auto key = std::make_pair(std::make_pair(labels[g], labels[mod(-g, n)]), profiles[g]);
      auto [it, inserted] = ids.try_emplace(std::move(key), static_cast<int>(ids.size()));
      next[g] = it->second;
    }
    const int next_classes = static_cast<int>(ids.size());
    labels = std::move(next);
    if (next_classes == classes) break;
    classes = next_classes;
  }
  return SchurRing::from_labels(labels);
}

// Direct convolution of basic-set indicators.
inline StructureConstants structure_constants(const SchurRing& a) {
  const int n = a.order();
  const int r = a.rank();
  StructureConstants sc(r);
  std::vector<std::int64_t> coeff(n);
  for (int x = 0; x < r; ++x) {
    for (int y = 0; y < r; ++y) {
      std::fill(coeff.begin(), coeff.end(), 0);
      for (int u : a.basic_set(x)) {
        for (int v : a.basic_set(y)) ++coeff[(u + v) % n];
      }
      for (int z = 0; z < r; ++z) sc.at(x, y, z) = coeff[a.basic_set(z).front()];
    }
  }
  return sc;
}

// |Z| c(X,Y,Z^-1) = |X| c(Y,Z,X^-1) = |Y| c(Z,X,Y^-1) for all X, Y, Z.
inline std::optional<std::string> triple_identity_violation(const SchurRing& a, const StructureConstants& sc) {
  const int r = a.rank();
  for (int x = 0; x < r; ++x) {
    for (int y = 0; y < r; ++y) {
      for (int z = 0; z < r; ++z) {
        const auto sx = static_cast<std::int64_t>(a.basic_set(x).size());
        const auto sy = static_cast<std::int64_t>(a.basic_set(y).size());
        const auto sz = static_cast<std::int64_t>(a.basic_set(z).size());
        const auto t1 = sz * sc(x, y, a.inverse_index(z));
        const auto t2 = sx * sc(y, z, a.inverse_index(x));
        const auto t3 = sy * sc(z, x, a.inverse_index(y));
        if (t1 != t2 || t2 != t3) {
          return "triple identity fails at (" + std::to_string(x) + "," + std::to_string(y) + "," +
                 std::to_string(z) + "): " + std::to_string(t1) + ", " + std::to_string(t2) + ", " +
                 std::to_string(t3);
        }
      }
    }
  }
  return std::nullopt;
}

// Compares c(X,Y,Z) with the closure intersection number c(r(X), r(Y), r(Z)).
inline std::optional<std::string> constants_match_closure(const SchurRing& a, const StructureConstants& sc,
                                                          const CoherentConfiguration& x,
                                                          const IntersectionTensor& it) {
  const int r = a.rank();
  std::vector<int> color(r);
  for (int i = 0; i < r; ++i) color[i] = x.color(0, a.basic_set(i).front());
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      for (int k = 0; k < r; ++k) {
        if (sc(i, j, k) != it(color[i], color[j], color[k])) {
          return "structure constant (" + std::to_string(i) + "," + std::to_string(j) + "," +
                 std::to_string(k) + ") disagrees with the closure";
        }
      }
    }
  }
  return std::nullopt;
}

// Subgroups of Z_n that are unions of basic sets, by increasing order.
inline std::vector<GroupSubset> a_subgroups(const SchurRing& a) {
  std::vector<GroupSubset> out;
  for (auto& h : subgroup_lattice(CyclicGroup(a.order()))) {
    if (a.is_union_of_basic_sets(h)) out.push_back(std::move(h));
  }
  return out;
}

// {g : g + X = X}; always a subgroup. Smallest step first finds the largest one.
inline GroupSubset radical_of(const GroupSubset& x) {
  const int n = x.order();
  for (int step : divisors(n)) {
    if (x.translated(step) == x) return subgroup_of_order(n, n / step);
  }
  return subgroup_of_order(n, 1);
}

inline GroupSubset radical(const SchurRing& a, const GroupSubset& x) {
  if (!a.is_union_of_basic_sets(x)) throw PreconditionError("radical: set is not a union of basic sets");
  return radical_of(x);
}

inline bool is_primitive(const SchurRing& a) { return a_subgroups(a).size() <= 2; }

// Units fixing every basic set, when their orbits are exactly the basic sets.
inline std::optional<std::vector<int>> recognize_cyclotomic(const SchurRing& a) {
  const int n = a.order();
  std::vector<int> k;
  for (int u : units(n)) {
    bool fixes = true;
    for (int g = 0; g < n && fixes; ++g) {
      fixes = a.index_of(mod(static_cast<std::int64_t>(u) * g, n)) == a.index_of(g);
    }
    if (fixes) k.push_back(u);
  }
  for (const auto& x : a.basic_sets()) {
    const int g = x.front();
    std::vector<int> orbit;
    for (int u : k) orbit.push_back(mod(static_cast<std::int64_t>(u) * g, n));
    if (GroupSubset::from_residues(n, orbit) != x) return std::nullopt;
  }
  return k;
}

enum class Rank4Case { TensorTT, DoubleWreath, CycWreathBottom, WreathCycTop, PrimeCubicCyclotomic, Z4Full };
enum class Rank3Case { WreathTT, PaleyCyclotomic };

inline std::string to_string(Rank4Case c) {
  switch (c) {
    case Rank4Case::TensorTT: return "TensorTT";
    case Rank4Case::DoubleWreath: return "DoubleWreath";
    case Rank4Case::CycWreathBottom: return "CycWreathBottom";
    case Rank4Case::WreathCycTop: return "WreathCycTop";
    case Rank4Case::PrimeCubicCyclotomic: return "PrimeCubicCyclotomic";
    case Rank4Case::Z4Full: return "Z4Full";
  }
  return "?";
}

inline std::string to_string(Rank3Case c) {
  return c == Rank3Case::WreathTT ? "WreathTT" : "PaleyCyclotomic";
}

// Witness fields unused by a case stay 0.
//   TensorTT:             lower = |L|, upper = |U|, |L| < |U| coprime
//   DoubleWreath:         lower = |L|, upper = |U|, 1 < |L| < |U| < n
//   CycWreathBottom:      lower = |L| = prime
//   WreathCycTop:         lower = |L|, prime = n / |L|
//   PrimeCubicCyclotomic: prime = n, multiplier_order = (n-1)/3
//   Z4Full:               none
struct Rank4Form {
  Rank4Case tag;
  int lower = 0;
  int upper = 0;
  int prime = 0;
  int multiplier_order = 0;
  friend bool operator==(const Rank4Form&, const Rank4Form&) = default;
};

//   WreathTT:        lower = |L|
//   PaleyCyclotomic: prime = n, multiplier_order = (n-1)/2
struct Rank3Form {
  Rank3Case tag;
  int lower = 0;
  int prime = 0;
  int multiplier_order = 0;
  friend bool operator==(const Rank3Form&, const Rank3Form&) = default;
};

inline std::string describe(const Rank4Form& f) {
  std::string s = to_string(f.tag);
  switch (f.tag) {
    case Rank4Case::TensorTT:
    case Rank4Case::DoubleWreath:
      return s + "(|L|=" + std::to_string(f.lower) + ",|U|=" + std::to_string(f.upper) + ")";
    case Rank4Case::CycWreathBottom: return s + "(|L|=" + std::to_string(f.lower) + ")";
    case Rank4Case::WreathCycTop:
      return s + "(|L|=" + std::to_string(f.lower) + ",p=" + std::to_string(f.prime) + ")";
    case Rank4Case::PrimeCubicCyclotomic:
      return s + "(p=" + std::to_string(f.prime) + ",|K|=" + std::to_string(f.multiplier_order) + ")";
    case Rank4Case::Z4Full: return s;
  }
  return s;
}

inline std::string describe(const Rank3Form& f) {
  if (f.tag == Rank3Case::WreathTT) return "WreathTT(|L|=" + std::to_string(f.lower) + ")";
  return "PaleyCyclotomic(p=" + std::to_string(f.prime) + ")";
}

namespace detail {

inline GroupSubset nonzero(const GroupSubset& h) { return set_difference(h, GroupSubset(h.order(), {0})); }

// Orbits on Z_p minus 0 of the multiplier subgroup of index `index`, lifted from
// the subgroup or quotient of order p inside Z_n. Element g of order-p part maps to class.
inline std::vector<int> power_residue_class(int p, int index) {
  // class[x] for x in 1..p-1: discrete log mod index relative to the smallest primitive root.
  std::vector<int> cls(p, -1);
  const int g = smallest_primitive_root(p);
  std::int64_t x = 1;
  for (int e = 0; e < p - 1; ++e) {
    cls[x] = e % index;
    x = x * g % p;
  }
  return cls;
}

inline SchurRing ring_of(int n, std::vector<GroupSubset> sets) {
  return SchurRing(n, std::move(sets));
}

inline std::optional<Rank4Form> match_rank4(const SchurRing& a, Rank4Case tag) {
  const int n = a.order();
  const auto divs = divisors(n);
  switch (tag) {
    case Rank4Case::Z4Full: {
      if (n == 4 && a.rank() == 4) return Rank4Form{tag};
      return std::nullopt;
    }
    case Rank4Case::TensorTT: {
      for (int d1 : divs) {
        const int d2 = n / d1;
        if (d1 <= 1 || d1 >= d2 || std::gcd(d1, d2) != 1) continue;
        const auto l = subgroup_of_order(n, d1);
        const auto u = subgroup_of_order(n, d2);
        const auto rest = complement(set_union(l, u));
        if (rest.empty()) continue;
        auto expect = ring_of(n, {GroupSubset(n, {0}), nonzero(l), nonzero(u), rest});
        if (expect == a) return Rank4Form{tag, d1, d2};
      }
      return std::nullopt;
    }
    case Rank4Case::DoubleWreath: {
      for (int d1 : divs) {
        for (int d2 : divs) {
          if (d1 <= 1 || d2 <= d1 || d2 >= n || d2 % d1 != 0) continue;
          const auto l = subgroup_of_order(n, d1);
          const auto u = subgroup_of_order(n, d2);
          auto expect = ring_of(n, {GroupSubset(n, {0}), nonzero(l), set_difference(u, l), complement(u)});
          if (expect == a) return Rank4Form{tag, d1, d2};
        }
      }
      return std::nullopt;
    }
    case Rank4Case::CycWreathBottom: {
      for (int p : divs) {
        if (!is_prime(p) || p == n || p < 3) continue;
        const int step = n / p;
        const auto cls = power_residue_class(p, 2);
        std::vector<int> x1, x2;
        for (int j = 1; j < p; ++j) (cls[j] == 0 ? x1 : x2).push_back(j * step);
        const auto l = subgroup_of_order(n, p);
        auto expect = ring_of(n, {GroupSubset(n, {0}), GroupSubset(n, x1), GroupSubset(n, x2), complement(l)});
        if (expect == a) return Rank4Form{tag, p};
      }
      return std::nullopt;
    }
    case Rank4Case::WreathCycTop: {
      for (int d : divs) {
        const int p = n / d;
        if (d <= 1 || !is_prime(p) || p < 3) continue;
        const auto cls = power_residue_class(p, 2);
        std::vector<int> x1, x2;
        for (int g = 0; g < n; ++g) {
          if (g % p == 0) continue;
          (cls[g % p] == 0 ? x1 : x2).push_back(g);
        }
        const auto l = subgroup_of_order(n, d);
        auto expect = ring_of(n, {GroupSubset(n, {0}), nonzero(l), GroupSubset(n, x1), GroupSubset(n, x2)});
        if (expect == a) return Rank4Form{tag, d, 0, p};
      }
      return std::nullopt;
    }
    case Rank4Case::PrimeCubicCyclotomic: {
      if (!is_prime(n) || n % 3 != 1) return std::nullopt;
      const auto cls = power_residue_class(n, 3);
      std::vector<std::vector<int>> parts(3);
      for (int g = 1; g < n; ++g) parts[cls[g]].push_back(g);
      auto expect = ring_of(n, {GroupSubset(n, {0}), GroupSubset(n, parts[0]), GroupSubset(n, parts[1]),
                                GroupSubset(n, parts[2])});
      if (expect == a) return Rank4Form{tag, 0, 0, n, (n - 1) / 3};
      return std::nullopt;
    }
  }
  return std::nullopt;
}

}  // namespace detail

inline constexpr Rank4Case kRank4Order[] = {Rank4Case::Z4Full,       Rank4Case::TensorTT,
                                            Rank4Case::DoubleWreath, Rank4Case::CycWreathBottom,
                                            Rank4Case::WreathCycTop, Rank4Case::PrimeCubicCyclotomic};

// Every case whose shape matches; used to check exclusivity.
inline std::vector<Rank4Form> classify_rank4_all(const SchurRing& a) {
  if (a.rank() != 4) throw PreconditionError("classify_rank4: rank is " + std::to_string(a.rank()));
  std::vector<Rank4Form> out;
  for (auto tag : kRank4Order) {
    if (auto f = detail::match_rank4(a, tag)) out.push_back(*f);
  }
  return out;
}

inline Rank4Form classify_rank4(const SchurRing& a) {
  if (a.rank() != 4) throw PreconditionError("classify_rank4: rank is " + std::to_string(a.rank()));
  for (auto tag : kRank4Order) {
    if (auto f = detail::match_rank4(a, tag)) return *f;
  }
  throw ClassificationError("rank-4 S-ring over Z_" + std::to_string(a.order()) +
                            " matches no known shape:\n" + a.serialize());
}

inline Rank3Form classify_rank3(const SchurRing& a) {
  if (a.rank() != 3) throw PreconditionError("classify_rank3: rank is " + std::to_string(a.rank()));
  const int n = a.order();
  std::vector<Rank3Form> found;
  for (int d : divisors(n)) {
    if (d <= 1 || d >= n) continue;
    const auto l = subgroup_of_order(n, d);
    if (SchurRing(n, {GroupSubset(n, {0}), detail::nonzero(l), complement(l)}) == a) {
      found.push_back(Rank3Form{Rank3Case::WreathTT, d});
    }
  }
  if (is_prime(n) && n > 2) {
    const auto cls = detail::power_residue_class(n, 2);
    std::vector<int> x1, x2;
    for (int g = 1; g < n; ++g) (cls[g] == 0 ? x1 : x2).push_back(g);
    if (SchurRing(n, {GroupSubset(n, {0}), GroupSubset(n, x1), GroupSubset(n, x2)}) == a) {
      found.push_back(Rank3Form{Rank3Case::PaleyCyclotomic, 0, n, (n - 1) / 2});
    }
  }
  if (found.size() != 1) {
    throw ClassificationError("rank-3 S-ring over Z_" + std::to_string(n) + " matched " +
                              std::to_string(found.size()) + " shapes:\n" + a.serialize());
  }
  return found.front();
}

}  // namespace circwl
