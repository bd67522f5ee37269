#pragma once

// Cyclic group Z_n, its subsets, and the integer group ring ZZ_n.
// Residues 0..n-1 under addition; 0 is the identity.

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "circwl/arith.hpp"
#include "circwl/errors.hpp"

namespace circwl {

class CyclicGroup {
 public:
  explicit CyclicGroup(int order) : order_(order) {
    if (order < 1) throw PreconditionError("CyclicGroup: order must be positive");
  }
  int order() const { return order_; }

 private:
  int order_;
};

// Subset of Z_n stored as strictly increasing residues.
class GroupSubset {
 public:
  GroupSubset() = default;

  GroupSubset(int order, std::vector<int> members) : order_(order), members_(std::move(members)) {
    if (order < 1) throw PreconditionError("GroupSubset: order must be positive");
    std::sort(members_.begin(), members_.end());
    for (std::size_t i = 0; i < members_.size(); ++i) {
      if (members_[i] < 0 || members_[i] >= order_) {
        throw PreconditionError("GroupSubset: residue " + std::to_string(members_[i]) +
                                " out of range for order " + std::to_string(order_));
      }
      if (i > 0 && members_[i] == members_[i - 1]) {
        throw PreconditionError("GroupSubset: duplicate residue " + std::to_string(members_[i]));
      }
    }
  }

  // Reduces every value mod n and drops duplicates.
  static GroupSubset from_residues(int order, std::span<const int> values) {
    std::vector<int> v;
    v.reserve(values.size());
    for (int x : values) v.push_back(mod(x, order));
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return GroupSubset(order, std::move(v));
  }

  static GroupSubset from_flags(const std::vector<bool>& flags) {
    std::vector<int> v;
    for (std::size_t i = 0; i < flags.size(); ++i) {
      if (flags[i]) v.push_back(static_cast<int>(i));
    }
    return GroupSubset(static_cast<int>(flags.size()), std::move(v));
  }

  static GroupSubset whole(int order) {
    std::vector<int> v(order);
    std::iota(v.begin(), v.end(), 0);
    return GroupSubset(order, std::move(v));
  }

  static GroupSubset from_mask(int order, std::uint64_t mask) {
    std::vector<int> v;
    for (int i = 0; i < order; ++i) {
      if ((mask >> i) & 1U) v.push_back(i);
    }
    return GroupSubset(order, std::move(v));
  }

  int order() const { return order_; }
  const std::vector<int>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  int front() const { return members_.front(); }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  bool contains(int x) const { return std::binary_search(members_.begin(), members_.end(), x); }

  std::vector<bool> flags() const {
    std::vector<bool> f(order_, false);
    for (int x : members_) f[x] = true;
    return f;
  }

  std::uint64_t mask() const {
    if (order_ > 64) throw UnsupportedError("GroupSubset::mask: order exceeds 64");
    std::uint64_t m = 0;
    for (int x : members_) m |= std::uint64_t{1} << x;
    return m;
  }

  GroupSubset negated() const { return scaled(-1); }

  // Image under the map x -> u*x. Only a bijection when u is a unit.
  GroupSubset scaled(int u) const {
    std::vector<int> v;
    v.reserve(members_.size());
    for (int x : members_) v.push_back(mod(static_cast<std::int64_t>(u) * x, order_));
    return from_residues(order_, v);
  }

  GroupSubset translated(int g) const {
    std::vector<int> v;
    v.reserve(members_.size());
    for (int x : members_) v.push_back(mod(static_cast<std::int64_t>(x) + g, order_));
    return GroupSubset(order_, [&] {
      std::sort(v.begin(), v.end());
      return v;
    }());
  }

  bool is_symmetric() const { return negated() == *this; }

  bool is_subset_of(const GroupSubset& other) const {
    return std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                         members_.end());
  }

  friend bool operator==(const GroupSubset&, const GroupSubset&) = default;
  friend auto operator<=>(const GroupSubset&, const GroupSubset&) = default;

 private:
  int order_ = 1;
  std::vector<int> members_;
};

inline void require_same_order(const GroupSubset& a, const GroupSubset& b) {
  if (a.order() != b.order()) {
    throw StructuralError("order mismatch: " + std::to_string(a.order()) + " vs " +
                          std::to_string(b.order()));
  }
}

inline GroupSubset set_union(const GroupSubset& a, const GroupSubset& b) {
  require_same_order(a, b);
  std::vector<int> v;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(v));
  return GroupSubset(a.order(), std::move(v));
}

inline GroupSubset set_difference(const GroupSubset& a, const GroupSubset& b) {
  require_same_order(a, b);
  std::vector<int> v;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(v));
  return GroupSubset(a.order(), std::move(v));
}

inline GroupSubset set_intersection(const GroupSubset& a, const GroupSubset& b) {
  require_same_order(a, b);
  std::vector<int> v;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(v));
  return GroupSubset(a.order(), std::move(v));
}

// Z_n minus the given set.
inline GroupSubset complement(const GroupSubset& a) {
  return set_difference(GroupSubset::whole(a.order()), a);
}

// "n: s1,s2,...,sk" with strictly increasing s_i. An empty set is "n:".
inline std::string to_literal(const GroupSubset& s) {
  std::string out = std::to_string(s.order()) + ":";
  for (std::size_t i = 0; i < s.size(); ++i) {
    out += (i == 0 ? " " : ",");
    out += std::to_string(s.members()[i]);
  }
  return out;
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

inline int parse_int(std::string_view s, std::string_view what) {
  s = trim(s);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw ParseError("cannot parse " + std::string(what) + " from '" + std::string(s) + "'");
  }
  return value;
}

}  // namespace detail

// Comma-separated residues, used by the CLI's --set flag.
inline std::vector<int> parse_residue_list(std::string_view text) {
  std::vector<int> out;
  text = detail::trim(text);
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.push_back(detail::parse_int(text.substr(start, comma - start), "residue"));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

inline GroupSubset parse_subset_literal(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw ParseError("subset literal needs 'n:' prefix");
  const int n = detail::parse_int(text.substr(0, colon), "order");
  if (n < 1) throw ParseError("subset literal order must be positive");
  const auto values = parse_residue_list(text.substr(colon + 1));
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] < 0 || values[i] >= n) throw ParseError("subset literal residue out of range");
    if (i > 0 && values[i] <= values[i - 1]) {
      throw ParseError("subset literal residues must be strictly increasing");
    }
  }
  return GroupSubset(n, values);
}

// Element of the integer group ring of Z_n; coefficient of residue i at i.
class GroupRingElement {
 public:
  explicit GroupRingElement(int order) : coeffs_(order, 0) {
    if (order < 1) throw PreconditionError("GroupRingElement: order must be positive");
  }
  explicit GroupRingElement(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw PreconditionError("GroupRingElement: order must be positive");
  }

  int order() const { return static_cast<int>(coeffs_.size()); }
  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }
  std::int64_t operator[](int i) const { return coeffs_[i]; }
  std::int64_t& operator[](int i) { return coeffs_[i]; }

  std::int64_t coefficient_sum() const {
    std::int64_t total = 0;
    for (auto c : coeffs_) {
      if (__builtin_add_overflow(total, c, &total)) throw Error("group ring: coefficient overflow");
    }
    return total;
  }

  // Each compound operator leaves *this unchanged when it throws.
  GroupRingElement& operator+=(const GroupRingElement& o) {
    check(o);
    auto next = coeffs_;
    for (int i = 0; i < order(); ++i) {
      if (__builtin_add_overflow(coeffs_[i], o.coeffs_[i], &next[i])) {
        throw Error("group ring: coefficient overflow");
      }
    }
    coeffs_ = std::move(next);
    return *this;
  }
  GroupRingElement& operator-=(const GroupRingElement& o) {
    check(o);
    auto next = coeffs_;
    for (int i = 0; i < order(); ++i) {
      if (__builtin_sub_overflow(coeffs_[i], o.coeffs_[i], &next[i])) {
        throw Error("group ring: coefficient overflow");
      }
    }
    coeffs_ = std::move(next);
    return *this;
  }
  GroupRingElement& operator*=(std::int64_t scalar) {
    auto next = coeffs_;
    for (auto& c : next) {
      if (__builtin_mul_overflow(c, scalar, &c)) throw Error("group ring: coefficient overflow");
    }
    coeffs_ = std::move(next);
    return *this;
  }

  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
  friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) { return a -= b; }
  friend GroupRingElement operator*(std::int64_t s, GroupRingElement a) { return a *= s; }
  friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;

 private:
  void check(const GroupRingElement& o) const {
    if (o.order() != order()) {
      throw StructuralError("group ring: order mismatch " + std::to_string(order()) + " vs " +
                            std::to_string(o.order()));
    }
  }

  std::vector<std::int64_t> coeffs_;
};

inline GroupRingElement indicator(const GroupSubset& s) {
  GroupRingElement e(s.order());
  for (int x : s) e[x] = 1;
  return e;
}

// Convolution over Z_n: (xy)_z = sum_{u+v=z} x_u y_v.
inline GroupRingElement ring_multiply(const GroupRingElement& x, const GroupRingElement& y) {
  if (x.order() != y.order()) {
    throw StructuralError("ring_multiply: order mismatch " + std::to_string(x.order()) + " vs " +
                          std::to_string(y.order()));
  }
  const int n = x.order();
  GroupRingElement out(n);
  for (int u = 0; u < n; ++u) {
    if (x[u] == 0) continue;
    for (int v = 0; v < n; ++v) {
      if (y[v] == 0) continue;
      std::int64_t term = 0;
      const int z = u + v < n ? u + v : u + v - n;
      if (__builtin_mul_overflow(x[u], y[v], &term) || __builtin_add_overflow(out[z], term, &out[z])) {
        throw Error("ring_multiply: coefficient overflow");
      }
    }
  }
  return out;
}

// The subgroup of Z_n of the given order (multiples of n/order).
inline GroupSubset subgroup_of_order(int n, int order) {
  if (order < 1 || n % order != 0) {
    throw PreconditionError("subgroup_of_order: " + std::to_string(order) + " does not divide " +
                            std::to_string(n));
  }
  const int step = n / order;
  std::vector<int> v;
  v.reserve(order);
  for (int i = 0; i < order; ++i) v.push_back(i * step);
  return GroupSubset(n, std::move(v));
}

inline bool is_subgroup(const GroupSubset& s) {
  const int n = s.order();
  if (s.empty() || n % static_cast<int>(s.size()) != 0) return false;
  return s == subgroup_of_order(n, static_cast<int>(s.size()));
}

// One subgroup per divisor of n, by increasing order.
inline std::vector<GroupSubset> subgroup_lattice(const CyclicGroup& g) {
  std::vector<GroupSubset> out;
  for (int d : divisors(g.order())) out.push_back(subgroup_of_order(g.order(), d));
  return out;
}

// Residues mod n = d1*d2 whose reductions mod (d1, d2) are the given pairs.
inline GroupSubset crt_embed(int n, int d1, int d2, std::span<const std::pair<int, int>> pairs) {
  if (d1 < 1 || d2 < 1 || std::gcd(d1, d2) != 1 || static_cast<std::int64_t>(d1) * d2 != n) {
    throw StructuralError("crt_embed: need coprime d1, d2 with d1*d2 = n (got " +
                          std::to_string(d1) + ", " + std::to_string(d2) + ", n=" +
                          std::to_string(n) + ")");
  }
  // e1 = 1 mod d1, 0 mod d2; e2 = 0 mod d1, 1 mod d2.
  int e1 = 0;
  int e2 = 0;
  for (int x = 0; x < n; ++x) {
    if (x % d1 == 1 % d1 && x % d2 == 0) e1 = x;
    if (x % d1 == 0 && x % d2 == 1 % d2) e2 = x;
  }
  std::vector<int> v;
  v.reserve(pairs.size());
  for (const auto& [r1, r2] : pairs) {
    v.push_back(mod(static_cast<std::int64_t>(mod(r1, d1)) * e1 +
                        static_cast<std::int64_t>(mod(r2, d2)) * e2,
                    n));
  }
  return GroupSubset::from_residues(n, v);
}

inline std::vector<std::pair<int, int>> crt_project(const GroupSubset& s, int d1, int d2) {
  if (std::gcd(d1, d2) != 1 || static_cast<std::int64_t>(d1) * d2 != s.order()) {
    throw StructuralError("crt_project: need coprime d1, d2 with d1*d2 = n");
  }
  std::vector<std::pair<int, int>> out;
  out.reserve(s.size());
  for (int x : s) out.emplace_back(x % d1, x % d2);
  return out;
}

}  // namespace circwl
