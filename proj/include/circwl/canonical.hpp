#pragma once

// Canonical labeling of small digraphs by individualization-refinement with
// automorphism pruning. Equal forms mean isomorphic graphs.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "circwl/coherent.hpp"
#include "circwl/errors.hpp"
#include "circwl/group.hpp"

namespace circwl {

inline constexpr int kCanonicalVertexLimit = 40;
inline constexpr std::int64_t kCanonicalNodeBudget = 5'000'000;

struct CanonicalForm {
  int n = 0;
  // Row-major 0/1 adjacency after relabeling.
  std::string adjacency;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonicalLabeling {
  CanonicalForm form;
  // order[i] is the vertex placed at position i.
  std::vector<int> order;
};

namespace detail {

using Permutation = std::vector<int>;

class OrderedPartition {
 public:
  explicit OrderedPartition(int v) : cells_{std::vector<int>(v)} { std::iota(cells_[0].begin(), cells_[0].end(), 0); }

  const std::vector<std::vector<int>>& cells() const { return cells_; }
  int first_nonsingleton() const {
    for (std::size_t i = 0; i < cells_.size(); ++i) {
      if (cells_[i].size() > 1) return static_cast<int>(i);
    }
    return -1;
  }

  // Moves vertex w of cell c into its own cell placed just before the rest.
  void individualize(int c, int w) {
    auto& cell = cells_[c];
    cell.erase(std::find(cell.begin(), cell.end(), w));
    cells_.insert(cells_.begin() + c, std::vector<int>{w});
  }

  // Equitable refinement; cells split in place, pieces ordered by neighbor counts.
  void refine(const Digraph& g) {
    const int v = g.vertex_count();
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t s = 0; s < cells_.size() && !changed; ++s) {
        const auto splitter = cells_[s];
        for (std::size_t c = 0; c < cells_.size(); ++c) {
          if (cells_[c].size() == 1) continue;
          std::vector<std::pair<std::int64_t, int>> keyed;
          keyed.reserve(cells_[c].size());
          for (int x : cells_[c]) {
            std::int64_t out = 0;
            std::int64_t in = 0;
            for (int y : splitter) {
              out += g.has_arc(x, y);
              in += g.has_arc(y, x);
            }
            keyed.emplace_back(out * (v + 1) + in, x);
          }
          std::sort(keyed.begin(), keyed.end());
          if (keyed.front().first == keyed.back().first) continue;
          std::vector<std::vector<int>> pieces;
          for (std::size_t i = 0; i < keyed.size(); ++i) {
            if (i == 0 || keyed[i].first != keyed[i - 1].first) pieces.emplace_back();
            pieces.back().push_back(keyed[i].second);
          }
          cells_.erase(cells_.begin() + static_cast<std::ptrdiff_t>(c));
          cells_.insert(cells_.begin() + static_cast<std::ptrdiff_t>(c), pieces.begin(), pieces.end());
          changed = true;
          break;
        }
      }
    }
  }

  std::vector<int> order() const {
    std::vector<int> out;
    for (const auto& c : cells_) out.push_back(c.front());
    return out;
  }

 private:
  std::vector<std::vector<int>> cells_;
};

inline std::string relabeled_adjacency(const Digraph& g, const std::vector<int>& order) {
  const int v = g.vertex_count();
  std::string out(static_cast<std::size_t>(v) * v, '0');
  for (int i = 0; i < v; ++i) {
    for (int j = 0; j < v; ++j) {
      if (g.has_arc(order[i], order[j])) out[static_cast<std::size_t>(i) * v + j] = '1';
    }
  }
  return out;
}

class CanonicalSearch {
 public:
  CanonicalSearch(const Digraph& g, std::vector<Permutation> seeds) : g_(g), generators_(std::move(seeds)) {}

  CanonicalLabeling run() {
    OrderedPartition root(g_.vertex_count());
    root.refine(g_);
    std::vector<int> path;
    descend(root, path);
    return CanonicalLabeling{CanonicalForm{g_.vertex_count(), best_}, best_order_};
  }

 private:
  // Returns the depth to unwind to; a value below the current depth aborts siblings.
  int descend(const OrderedPartition& p, std::vector<int>& path) {
    if (++nodes_ > kCanonicalNodeBudget) {
      throw SizeError("canonical_form: search exceeded the node budget");
    }
    const int depth = static_cast<int>(path.size());
    const int target = p.first_nonsingleton();
    if (target < 0) return leaf(p, path);
    const auto cell = p.cells()[target];
    std::vector<int> explored;
    for (int w : cell) {
      if (!explored.empty() && same_orbit(path, explored, w)) continue;
      explored.push_back(w);
      OrderedPartition child = p;
      child.individualize(target, w);
      child.refine(g_);
      path.push_back(w);
      const int unwind = descend(child, path);
      path.pop_back();
      if (unwind < depth) return unwind;
    }
    return depth;
  }

  int leaf(const OrderedPartition& p, const std::vector<int>& path) {
    auto order = p.order();
    auto adjacency = relabeled_adjacency(g_, order);
    if (best_order_.empty() || adjacency < best_) {
      best_ = std::move(adjacency);
      best_order_ = std::move(order);
      best_path_ = path;
      return static_cast<int>(path.size());
    }
    if (adjacency == best_) {
      // order[i] -> best_order_[i] is an automorphism.
      Permutation gamma(order.size());
      for (std::size_t i = 0; i < order.size(); ++i) gamma[order[i]] = best_order_[i];
      generators_.push_back(std::move(gamma));
      std::size_t common = 0;
      while (common < path.size() && common < best_path_.size() && path[common] == best_path_[common]) ++common;
      return static_cast<int>(common);
    }
    return static_cast<int>(path.size());
  }

  // Orbit test under generators that fix every individualized vertex.
  bool same_orbit(const std::vector<int>& path, const std::vector<int>& explored, int w) const {
    const int v = g_.vertex_count();
    std::vector<int> parent(v);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& gamma : generators_) {
      bool fixes = std::all_of(path.begin(), path.end(), [&](int a) { return gamma[a] == a; });
      if (!fixes) continue;
      for (int x = 0; x < v; ++x) parent[find(x)] = find(gamma[x]);
    }
    const int root = find(w);
    return std::any_of(explored.begin(), explored.end(), [&](int e) { return find(e) == root; });
  }

  const Digraph& g_;
  std::vector<Permutation> generators_;
  std::string best_;
  std::vector<int> best_order_;
  std::vector<int> best_path_;
  std::int64_t nodes_ = 0;
};

}  // namespace detail

// Known automorphisms may be passed in to prune the search earlier.
inline CanonicalLabeling canonical_labeling(const Digraph& g, std::vector<std::vector<int>> known_automorphisms = {},
                                            int vertex_limit = kCanonicalVertexLimit) {
  if (g.vertex_count() > vertex_limit) {
    throw SizeError("canonical_form: " + std::to_string(g.vertex_count()) + " vertices exceeds the limit of " +
                    std::to_string(vertex_limit));
  }
  return detail::CanonicalSearch(g, std::move(known_automorphisms)).run();
}

// Rotation and the multipliers preserving S are automorphisms of the circulant.
inline std::vector<std::vector<int>> circulant_automorphisms(const GroupSubset& s) {
  const int n = s.order();
  std::vector<std::vector<int>> out;
  std::vector<int> rotation(n);
  for (int x = 0; x < n; ++x) rotation[x] = (x + 1) % n;
  out.push_back(std::move(rotation));
  for (int u : units(n)) {
    if (u <= 1 || s.scaled(u) != s) continue;
    std::vector<int> m(n);
    for (int x = 0; x < n; ++x) m[x] = mod(static_cast<std::int64_t>(u) * x, n);
    out.push_back(std::move(m));
  }
  return out;
}

inline CanonicalForm canonical_form(const GroupSubset& s, int vertex_limit = kCanonicalVertexLimit) {
  return canonical_labeling(Digraph::circulant(s), circulant_automorphisms(s), vertex_limit).form;
}

inline CanonicalForm canonical_form(const Digraph& g) { return canonical_labeling(g).form; }

// Vertex map a -> b with arcs preserved, if the graphs are isomorphic.
inline std::optional<std::vector<int>> find_isomorphism(const Digraph& a, const Digraph& b) {
  if (a.vertex_count() != b.vertex_count()) return std::nullopt;
  const auto la = canonical_labeling(a);
  const auto lb = canonical_labeling(b);
  if (la.form != lb.form) return std::nullopt;
  std::vector<int> map(a.vertex_count());
  for (std::size_t i = 0; i < la.order.size(); ++i) map[la.order[i]] = lb.order[i];
  for (int u = 0; u < a.vertex_count(); ++u) {
    for (int w = 0; w < a.vertex_count(); ++w) {
      if (a.has_arc(u, w) != b.has_arc(map[u], map[w])) {
        throw InconsistencyError("find_isomorphism: equal canonical forms but relabeling fails");
      }
    }
  }
  return map;
}

}  // namespace circwl
