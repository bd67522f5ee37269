#pragma once

// Connection sets over Z_n for the rank-4 Deza families G1..G8, the two
// higher-rank families F1, F2 and the sporadic graphs SP8, SP9.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "circwl/arith.hpp"
#include "circwl/errors.hpp"
#include "circwl/group.hpp"

namespace circwl {

using BigInt = boost::multiprecision::cpp_int;

enum class FamilyLabel { G1, G2, G3, G4, G5, G6, G7, G8, F1, F2, SP8, SP9 };

inline constexpr FamilyLabel kAllFamilies[] = {FamilyLabel::G1, FamilyLabel::G2, FamilyLabel::G3, FamilyLabel::G4,
                                               FamilyLabel::G5, FamilyLabel::G6, FamilyLabel::G7, FamilyLabel::G8,
                                               FamilyLabel::F1, FamilyLabel::F2, FamilyLabel::SP8, FamilyLabel::SP9};

inline constexpr FamilyLabel kRank4Families[] = {FamilyLabel::G1, FamilyLabel::G2, FamilyLabel::G3, FamilyLabel::G4,
                                                 FamilyLabel::G5, FamilyLabel::G6, FamilyLabel::G7, FamilyLabel::G8};

inline std::string to_string(FamilyLabel f) {
  static constexpr const char* names[] = {"g1", "g2", "g3", "g4", "g5", "g6", "g7", "g8", "f1", "f2", "sp8", "sp9"};
  return names[static_cast<int>(f)];
}

inline FamilyLabel parse_family_label(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  for (auto f : kAllFamilies) {
    if (to_string(f) == lower) return f;
  }
  throw ParseError("unknown family label '" + std::string(text) + "'");
}

// Only the fields used by the label are meaningful:
//   G1, G2, G3: m     G4, G5: l, m     G6, G7, G8: p     F1: p, q     F2: k
struct FamilySpec {
  FamilyLabel label = FamilyLabel::G1;
  int m = 0;
  int l = 0;
  int p = 0;
  int q = 0;
  int k = 0;
  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

inline std::string describe(const FamilySpec& s) {
  const std::string name = to_string(s.label);
  switch (s.label) {
    case FamilyLabel::G1:
    case FamilyLabel::G2:
    case FamilyLabel::G3: return name + "(m=" + std::to_string(s.m) + ")";
    case FamilyLabel::G4:
    case FamilyLabel::G5: return name + "(l=" + std::to_string(s.l) + ",m=" + std::to_string(s.m) + ")";
    case FamilyLabel::G6:
    case FamilyLabel::G7:
    case FamilyLabel::G8: return name + "(p=" + std::to_string(s.p) + ")";
    case FamilyLabel::F1: return name + "(p=" + std::to_string(s.p) + ",q=" + std::to_string(s.q) + ")";
    case FamilyLabel::F2: return name + "(k=" + std::to_string(s.k) + ")";
    case FamilyLabel::SP8:
    case FamilyLabel::SP9: return name;
  }
  return name;
}

namespace detail {

inline bool has_square_offset(int p, int offset) {
  return p > offset && is_perfect_square(static_cast<std::int64_t>(p) - offset);
}

inline void require(bool ok, const FamilySpec& s, const std::string& constraint) {
  if (!ok) throw ValidationError(describe(s) + ": " + constraint);
}

}  // namespace detail

inline void validate(const FamilySpec& s) {
  using detail::require;
  switch (s.label) {
    case FamilyLabel::G1:
    case FamilyLabel::G2: require(s.m > 1 && s.m % 2 == 1, s, "m must be an odd integer > 1"); break;
    case FamilyLabel::G3: require(s.m > 1, s, "m must be > 1"); break;
    case FamilyLabel::G4:
    case FamilyLabel::G5: require(s.l > 1 && s.m > 1, s, "l and m must be > 1"); break;
    case FamilyLabel::G6: require(is_prime(s.p) && s.p % 4 == 1, s, "p must be a prime = 1 mod 4"); break;
    case FamilyLabel::G7:
      require(is_prime(s.p) && detail::has_square_offset(s.p, 3), s, "p must be a prime of the form t^2 + 3");
      break;
    case FamilyLabel::G8:
      require(is_prime(s.p) && detail::has_square_offset(s.p, 12), s, "p must be a prime of the form t^2 + 12");
      break;
    case FamilyLabel::F1:
      require(is_prime(s.p) && is_prime(s.q) && s.q - s.p == 4 && s.p % 4 == 3 && s.q % 4 == 3, s,
              "p, q must be primes with q - p = 4 and p = q = 3 mod 4");
      break;
    case FamilyLabel::F2: require(s.k >= 3 && s.k % 2 == 1, s, "k must be an odd integer >= 3"); break;
    case FamilyLabel::SP8:
    case FamilyLabel::SP9: break;
  }
}

inline int family_order(const FamilySpec& s) {
  switch (s.label) {
    case FamilyLabel::G1: return 4 * s.m;
    case FamilyLabel::G2: return 2 * s.m;
    case FamilyLabel::G3: return 5 * s.m;
    case FamilyLabel::G4:
    case FamilyLabel::G5: return 2 * s.l * s.m;
    case FamilyLabel::G6: return 2 * s.p;
    case FamilyLabel::G7:
    case FamilyLabel::G8: return s.p;
    case FamilyLabel::F1: return s.p * s.q;
    case FamilyLabel::F2: return 4 * s.k;
    case FamilyLabel::SP8: return 8;
    case FamilyLabel::SP9: return 9;
  }
  return 0;
}

struct FamilyGraph {
  int n = 0;
  GroupSubset connection;
};

inline GroupSubset complete_connection(int n) { return set_difference(GroupSubset::whole(n), GroupSubset(n, {0})); }

// Z_n minus (S and 0).
inline GroupSubset complement_connection(int n, const GroupSubset& s) {
  if (s.order() != n) throw StructuralError("complement_connection: set over the wrong group");
  if (s.contains(0)) throw PreconditionError("complement_connection: set contains 0");
  return set_difference(complete_connection(n), s);
}

// Categorical product of two circulants, realized over Z_{n1 n2} by CRT.
inline FamilyGraph tensor_connection(int n1, const GroupSubset& s1, int n2, const GroupSubset& s2) {
  if (std::gcd(n1, n2) != 1) {
    throw StructuralError("tensor_connection: orders " + std::to_string(n1) + " and " + std::to_string(n2) +
                          " are not coprime");
  }
  std::vector<std::pair<int, int>> pairs;
  for (int a : s1) {
    for (int b : s2) pairs.emplace_back(a, b);
  }
  const int n = n1 * n2;
  return {n, crt_embed(n, n1, n2, pairs)};
}

// Outer graph over Z_{n_outer} = Z_n / H, inner graph over H of order n_inner.
inline FamilyGraph lex_connection(int n_outer, const GroupSubset& t_outer, int n_inner, const GroupSubset& s_inner) {
  if (t_outer.order() != n_outer || s_inner.order() != n_inner) {
    throw StructuralError("lex_connection: set orders do not match");
  }
  const int n = n_outer * n_inner;
  std::vector<int> out;
  for (int g = 0; g < n; ++g) {
    if (t_outer.contains(g % n_outer)) out.push_back(g);
  }
  for (int x : s_inner) out.push_back(x * n_outer);
  return {n, GroupSubset::from_residues(n, out)};
}

namespace detail {

// Index of the unit class of x mod p: discrete log mod `index` w.r.t. the smallest primitive root.
inline std::vector<int> residue_classes(int p, int index) {
  std::vector<int> cls(p, -1);
  const int g = smallest_primitive_root(p);
  std::int64_t x = 1;
  for (int e = 0; e < p - 1; ++e) {
    cls[x] = e % index;
    x = x * g % p;
  }
  return cls;
}

inline GroupSubset unit_class(int p, int index, bool containing_one) {
  const auto cls = residue_classes(p, index);
  std::vector<int> out;
  for (int x = 1; x < p; ++x) {
    if ((cls[x] == 0) == containing_one) out.push_back(x);
  }
  return GroupSubset(p, std::move(out));
}

}  // namespace detail

inline FamilyGraph family_graph(const FamilySpec& s) {
  validate(s);
  switch (s.label) {
    case FamilyLabel::G1: {
      // Complement of K_4 x K_m, i.e. the rook's graph on a 4 x m board.
      const auto t = tensor_connection(4, complete_connection(4), s.m, complete_connection(s.m));
      return {t.n, complement_connection(t.n, t.connection)};
    }
    case FamilyLabel::G2: return tensor_connection(2, complete_connection(2), s.m, complete_connection(s.m));
    case FamilyLabel::G3: {
      const int n = 5 * s.m;
      return {n, GroupSubset(n, {s.m, 4 * s.m})};
    }
    case FamilyLabel::G4: {
      const int n = 2 * s.l * s.m;
      return {n, set_difference(subgroup_of_order(n, 2 * s.m), subgroup_of_order(n, s.m))};
    }
    case FamilyLabel::G5:
      return lex_connection(s.l, complete_connection(s.l), 2 * s.m, GroupSubset(2 * s.m, {s.m}));
    case FamilyLabel::G6:
      return lex_connection(s.p, GroupSubset(s.p, quadratic_residues(s.p)), 2, GroupSubset(2, {1}));
    case FamilyLabel::G7: return {s.p, detail::unit_class(s.p, 3, true)};
    case FamilyLabel::G8: return {s.p, detail::unit_class(s.p, 3, false)};
    case FamilyLabel::F1: {
      const int n = s.p * s.q;
      std::vector<int> out;
      for (int g = 1; g < n; ++g) {
        const int gp = g % s.p;
        const int gq = g % s.q;
        if (gp == 0) {
          out.push_back(g);
        } else if (gq != 0 && legendre(gp, s.p) * legendre(gq, s.q) == -1) {
          out.push_back(g);
        }
      }
      return {n, GroupSubset(n, std::move(out))};
    }
    case FamilyLabel::F2: {
      const int n = 4 * s.k;
      std::vector<int> out{n / 2};
      for (int g = 1; g < n; ++g) {
        if (g % 4 == 0) {
          out.push_back(g);
        } else if (g % 2 == 1 && g % s.k != 0) {
          out.push_back(g);
        }
      }
      return {n, GroupSubset::from_residues(n, out)};
    }
    case FamilyLabel::SP8: return {8, GroupSubset(8, {1, 2, 6, 7})};
    case FamilyLabel::SP9: return {9, GroupSubset(9, {1, 2, 7, 8})};
  }
  throw UnsupportedError("family_graph: unknown label");
}

// Admissible parameter choices ordered by group order, then by parameters.
inline std::vector<FamilySpec> family_instances(FamilyLabel label, int max_order) {
  std::vector<FamilySpec> out;
  auto add_if_valid = [&](FamilySpec s) {
    try {
      validate(s);
    } catch (const ValidationError&) {
      return;
    }
    if (family_order(s) <= max_order) out.push_back(s);
  };
  for (int n = 1; n <= max_order; ++n) {
    switch (label) {
      case FamilyLabel::G1:
        if (n % 4 == 0) add_if_valid({label, n / 4});
        break;
      case FamilyLabel::G2:
        if (n % 2 == 0) add_if_valid({label, n / 2});
        break;
      case FamilyLabel::G3:
        if (n % 5 == 0) add_if_valid({label, n / 5});
        break;
      case FamilyLabel::G4:
      case FamilyLabel::G5:
        if (n % 2 == 0) {
          for (int l = 2; l <= n / 2; ++l) {
            if ((n / 2) % l == 0) add_if_valid({label, (n / 2) / l, l});
          }
        }
        break;
      case FamilyLabel::G6:
        if (n % 2 == 0) add_if_valid({label, 0, 0, n / 2});
        break;
      case FamilyLabel::G7:
      case FamilyLabel::G8: add_if_valid({label, 0, 0, n}); break;
      case FamilyLabel::F1:
        for (int p = 3; p * p < n; ++p) {
          if (n % p == 0 && n / p == p + 4) add_if_valid({label, 0, 0, p, p + 4});
        }
        break;
      case FamilyLabel::F2:
        if (n % 4 == 0) add_if_valid({label, 0, 0, 0, 0, n / 4});
        break;
      case FamilyLabel::SP8:
        if (n == 8) add_if_valid({label});
        break;
      case FamilyLabel::SP9:
        if (n == 9) add_if_valid({label});
        break;
    }
  }
  return out;
}

// The `count` smallest admissible choices (searching orders up to `order_cap`).
inline std::vector<FamilySpec> smallest_instances(FamilyLabel label, std::size_t count, int order_cap = 2000) {
  auto all = family_instances(label, order_cap);
  if (all.size() > count) all.resize(count);
  return all;
}

// Every family instance over Z_n.
inline std::vector<FamilySpec> instances_of_order(int n) {
  std::vector<FamilySpec> out;
  for (auto label : kAllFamilies) {
    for (const auto& s : family_instances(label, n)) {
      if (family_order(s) == n) out.push_back(s);
    }
  }
  return out;
}

namespace detail {

inline BigInt factorial(int m) {
  BigInt r = 1;
  for (int i = 2; i <= m; ++i) r *= i;
  return r;
}

inline BigInt power(BigInt base, int e) {
  BigInt r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace detail

// Automorphism group orders of the family graphs.
inline BigInt expected_aut_order(const FamilySpec& s) {
  using detail::factorial;
  using detail::power;
  validate(s);
  switch (s.label) {
    case FamilyLabel::G1: return 24 * factorial(s.m);
    case FamilyLabel::G2: return 2 * factorial(s.m);
    case FamilyLabel::G3: return power(10, s.m) * factorial(s.m);
    case FamilyLabel::G4: return power(factorial(s.m) * factorial(s.m) * 2, s.l) * factorial(s.l);
    case FamilyLabel::G5: return power(power(2, s.m) * factorial(s.m), s.l) * factorial(s.l);
    case FamilyLabel::G6: return power(2, s.p) * s.p * ((s.p - 1) / 2);
    case FamilyLabel::G7:
    case FamilyLabel::G8: return BigInt(s.p) * ((s.p - 1) / 3);
    case FamilyLabel::F1: return BigInt(s.p) * s.q * ((s.p - 1) * (s.q - 1) / 2);
    case FamilyLabel::F2: return 8 * factorial(s.k);
    case FamilyLabel::SP8: return 16;
    case FamilyLabel::SP9: return 18;
  }
  throw UnsupportedError("expected_aut_order: unknown label");
}

}  // namespace circwl
