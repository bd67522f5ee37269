#pragma once

// Deza / strongly regular / divisible design detection for circulants from
// the group-ring square of the connection set.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <vector>

#include "circwl/errors.hpp"
#include "circwl/group.hpp"

namespace circwl {

// Ordered (n, k, b, a) with b >= a.
struct DezaParams {
  int n = 0;
  int k = 0;
  std::int64_t b = 0;
  std::int64_t a = 0;
  friend bool operator==(const DezaParams&, const DezaParams&) = default;
  friend auto operator<=>(const DezaParams&, const DezaParams&) = default;
};

// Classes are the cosets of a subgroup of order class_size.
struct DdgParams {
  int n = 0;
  int k = 0;
  std::int64_t within = 0;
  std::int64_t between = 0;
  int classes = 0;
  int class_size = 0;
  friend bool operator==(const DdgParams&, const DdgParams&) = default;
};

struct DezaReport {
  int n = 0;
  int k = 0;
  // Level sets of the square on the non-identity residues, keyed by coefficient.
  std::map<std::int64_t, GroupSubset> coefficient_spectrum;
  bool is_deza = false;
  bool is_srg = false;
  bool is_strictly_deza = false;
  bool is_ddg = false;
  std::optional<DezaParams> params;
  std::optional<DdgParams> ddg_params;
  // nullopt when the graph is disconnected.
  std::optional<int> diameter;
};

inline void require_connection_set(const GroupSubset& s) {
  if (s.contains(0)) throw PreconditionError("connection set contains 0");
  if (!s.is_symmetric()) throw PreconditionError("connection set is not closed under negation");
}

// Eccentricity of vertex 0, which is the diameter of a circulant.
inline std::optional<int> diameter(int n, const GroupSubset& s) {
  if (s.order() != n) throw StructuralError("diameter: connection set over the wrong group");
  if (!s.is_symmetric()) throw PreconditionError("diameter: connection set is not closed under negation");
  std::vector<int> dist(n, -1);
  std::queue<int> frontier;
  dist[0] = 0;
  frontier.push(0);
  int reached = 1;
  int far = 0;
  while (!frontier.empty()) {
    const int u = frontier.front();
    frontier.pop();
    for (int x : s) {
      const int w = (u + x) % n;
      if (dist[w] >= 0) continue;
      dist[w] = dist[u] + 1;
      far = std::max(far, dist[w]);
      ++reached;
      frontier.push(w);
    }
  }
  if (reached < n) return std::nullopt;
  return far;
}

inline DezaReport deza_report(int n, const GroupSubset& s) {
  if (s.order() != n) throw StructuralError("deza_report: connection set over the wrong group");
  require_connection_set(s);
  DezaReport r;
  r.n = n;
  r.k = static_cast<int>(s.size());
  const auto ind = indicator(s);
  const auto square = ring_multiply(ind, ind);
  std::map<std::int64_t, std::vector<int>> levels;
  for (int g = 1; g < n; ++g) levels[square[g]].push_back(g);
  for (auto& [value, members] : levels) r.coefficient_spectrum.emplace(value, GroupSubset(n, std::move(members)));
  r.diameter = diameter(n, s);

  if (levels.size() > 2) return r;
  r.is_deza = true;
  if (levels.size() <= 1) {
    // One value (or none when n == 1): every pair has the same count.
    const std::int64_t value = levels.empty() ? 0 : levels.begin()->first;
    r.is_srg = true;
    r.params = DezaParams{n, r.k, value, value};
  } else {
    const auto& [a, a_set] = *r.coefficient_spectrum.begin();
    const auto& [b, b_set] = *r.coefficient_spectrum.rbegin();
    r.is_srg = a_set == s || b_set == s;
    r.params = DezaParams{n, r.k, b, a};
    const auto zero = GroupSubset(n, {0});
    if (is_subgroup(set_union(b_set, zero))) {
      r.is_ddg = true;
      const int h = static_cast<int>(b_set.size()) + 1;
      r.ddg_params = DdgParams{n, r.k, b, a, n / h, h};
    } else if (is_subgroup(set_union(a_set, zero))) {
      r.is_ddg = true;
      const int h = static_cast<int>(a_set.size()) + 1;
      r.ddg_params = DdgParams{n, r.k, a, b, n / h, h};
    }
  }
  r.is_strictly_deza = r.is_deza && !r.is_srg && r.diameter == 2;
  return r;
}

// Level set of coefficient a (A) and of b (B); B is empty for a one-value spectrum.
inline std::pair<GroupSubset, GroupSubset> deza_level_sets(const DezaReport& r) {
  if (!r.is_deza) throw PreconditionError("deza_level_sets: graph is not Deza");
  if (r.coefficient_spectrum.size() <= 1) {
    return {GroupSubset(r.n, r.coefficient_spectrum.empty() ? std::vector<int>{}
                                                             : r.coefficient_spectrum.begin()->second.members()),
            GroupSubset(r.n, {})};
  }
  return {r.coefficient_spectrum.begin()->second, r.coefficient_spectrum.rbegin()->second};
}

}  // namespace circwl
