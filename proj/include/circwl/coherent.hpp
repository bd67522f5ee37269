#pragma once

// Two-dimensional Weisfeiler-Leman refinement: coherent closure of a digraph,
// intersection numbers, one-point extensions.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "circwl/errors.hpp"
#include "circwl/group.hpp"

namespace circwl {

class Digraph {
 public:
  explicit Digraph(int vertex_count) : v_(vertex_count), adj_(static_cast<std::size_t>(vertex_count) * vertex_count, 0) {
    if (vertex_count < 1) throw PreconditionError("Digraph: vertex count must be positive");
  }

  static Digraph from_arcs(int vertex_count, const std::vector<std::pair<int, int>>& arcs) {
    Digraph g(vertex_count);
    for (const auto& [u, w] : arcs) g.add_arc(u, w);
    return g;
  }

  // Dense 0/1 matrix; the diagonal must be zero.
  static Digraph from_matrix(const std::vector<std::vector<int>>& m) {
    Digraph g(static_cast<int>(m.size()));
    for (int u = 0; u < g.v_; ++u) {
      if (static_cast<int>(m[u].size()) != g.v_) throw ParseError("adjacency matrix is not square");
      for (int w = 0; w < g.v_; ++w) {
        if (m[u][w] != 0 && m[u][w] != 1) throw ParseError("adjacency matrix entries must be 0 or 1");
        if (m[u][w] == 1) g.add_arc(u, w);
      }
    }
    return g;
  }

  // Cayley digraph over Z_n: u -> u + s for s in S.
  static Digraph circulant(const GroupSubset& s) {
    if (s.contains(0)) throw PreconditionError("circulant: connection set contains 0");
    const int n = s.order();
    Digraph g(n);
    for (int u = 0; u < n; ++u) {
      for (int x : s) g.add_arc(u, (u + x) % n);
    }
    return g;
  }

  void add_arc(int u, int w) {
    if (u < 0 || w < 0 || u >= v_ || w >= v_) throw PreconditionError("Digraph: endpoint out of range");
    if (u == w) throw PreconditionError("Digraph: loops are not allowed");
    adj_[index(u, w)] = 1;
  }

  int vertex_count() const { return v_; }
  bool has_arc(int u, int w) const { return adj_[index(u, w)] != 0; }

  bool is_symmetric() const {
    for (int u = 0; u < v_; ++u) {
      for (int w = u + 1; w < v_; ++w) {
        if (has_arc(u, w) != has_arc(w, u)) return false;
      }
    }
    return true;
  }

  std::vector<std::pair<int, int>> arcs() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < v_; ++u) {
      for (int w = 0; w < v_; ++w) {
        if (has_arc(u, w)) out.emplace_back(u, w);
      }
    }
    return out;
  }

  Digraph complement() const {
    Digraph g(v_);
    for (int u = 0; u < v_; ++u) {
      for (int w = 0; w < v_; ++w) {
        if (u != w && !has_arc(u, w)) g.add_arc(u, w);
      }
    }
    return g;
  }

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  std::size_t index(int u, int w) const { return static_cast<std::size_t>(u) * v_ + w; }

  int v_;
  std::vector<std::uint8_t> adj_;
};

// Color matrix on V x V with colors 0..rank-1.
class CoherentConfiguration {
 public:
  CoherentConfiguration(int vertex_count, std::vector<int> colors) : v_(vertex_count), color_(std::move(colors)) {
    if (v_ < 1 || color_.size() != static_cast<std::size_t>(v_) * v_) {
      throw PreconditionError("CoherentConfiguration: color matrix has wrong size");
    }
    rank_ = 0;
    for (int c : color_) {
      if (c < 0) throw PreconditionError("CoherentConfiguration: negative color id");
      rank_ = std::max(rank_, c + 1);
    }
    std::vector<bool> used(rank_, false);
    for (int c : color_) used[c] = true;
    if (std::find(used.begin(), used.end(), false) != used.end()) {
      throw PreconditionError("CoherentConfiguration: color ids must be contiguous");
    }
  }

  int vertex_count() const { return v_; }
  int rank() const { return rank_; }
  int color(int u, int w) const { return color_[static_cast<std::size_t>(u) * v_ + w]; }
  const std::vector<int>& colors() const { return color_; }

  std::vector<int> diagonal_colors() const {
    std::vector<int> out;
    for (int u = 0; u < v_; ++u) out.push_back(color(u, u));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  // Color of the transposed class; assumes the transpose axiom holds.
  int transpose_color(int r) const {
    for (int u = 0; u < v_; ++u) {
      for (int w = 0; w < v_; ++w) {
        if (color(u, w) == r) return color(w, u);
      }
    }
    throw PreconditionError("transpose_color: color out of range");
  }

  std::vector<int> class_sizes() const {
    std::vector<int> out(rank_, 0);
    for (int c : color_) ++out[c];
    return out;
  }

  // Row-major whitespace-separated grid, one row per line.
  std::string to_grid() const {
    std::ostringstream os;
    for (int u = 0; u < v_; ++u) {
      for (int w = 0; w < v_; ++w) os << (w ? " " : "") << color(u, w);
      os << '\n';
    }
    return os.str();
  }

  friend bool operator==(const CoherentConfiguration&, const CoherentConfiguration&) = default;

 private:
  int v_;
  int rank_ = 0;
  std::vector<int> color_;
};

class IntersectionTensor {
 public:
  explicit IntersectionTensor(int rank) : rank_(rank), c_(static_cast<std::size_t>(rank) * rank * rank, 0) {}
  int rank() const { return rank_; }
  // Number of w with (alpha,w) in r and (w,beta) in s, for (alpha,beta) in t.
  std::int64_t operator()(int r, int s, int t) const { return c_[idx(r, s, t)]; }
  std::int64_t& at(int r, int s, int t) { return c_[idx(r, s, t)]; }

 private:
  std::size_t idx(int r, int s, int t) const {
    return (static_cast<std::size_t>(r) * rank_ + s) * rank_ + t;
  }
  int rank_;
  std::vector<std::int64_t> c_;
};

namespace detail {

// Renumbers colors by first occurrence in row-major order.
inline std::vector<int> renumber(const std::vector<int>& raw) {
  std::map<int, int> ids;
  std::vector<int> out(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    auto [it, inserted] = ids.try_emplace(raw[i], static_cast<int>(ids.size()));
    out[i] = it->second;
  }
  return out;
}

inline int count_colors(const std::vector<int>& colors) {
  return colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end()) + 1;
}

// Sorted multiset of (c(u,w), c(w,t)) over w, encoded as c(u,w)*R + c(w,t).
inline void pair_signature(const std::vector<int>& colors, int v, int rank, int u, int t,
                           std::vector<std::int64_t>& out) {
  out.resize(static_cast<std::size_t>(v) + 1);
  out[0] = colors[static_cast<std::size_t>(u) * v + t];
  const std::size_t row = static_cast<std::size_t>(u) * v;
  for (int w = 0; w < v; ++w) {
    out[static_cast<std::size_t>(w) + 1] =
        static_cast<std::int64_t>(colors[row + w]) * rank + colors[static_cast<std::size_t>(w) * v + t];
  }
  std::sort(out.begin() + 1, out.end());
}

// One refinement round. Returns new first-occurrence colors.
inline std::vector<int> refine_round(const std::vector<int>& colors, int v) {
  const int rank = count_colors(colors);
  std::map<std::vector<std::int64_t>, int> ids;
  std::vector<int> next(colors.size());
  std::vector<std::int64_t> sig;
  for (int u = 0; u < v; ++u) {
    for (int t = 0; t < v; ++t) {
      pair_signature(colors, v, rank, u, t, sig);
      auto [it, inserted] = ids.try_emplace(sig, static_cast<int>(ids.size()));
      next[static_cast<std::size_t>(u) * v + t] = it->second;
    }
  }
  return next;
}

inline CoherentConfiguration refine_to_fixpoint(std::vector<int> colors, int v) {
  colors = renumber(colors);
  int count = count_colors(colors);
  while (true) {
    auto next = refine_round(colors, v);
    const int next_count = count_colors(next);
    colors = std::move(next);
    if (next_count == count) break;
    count = next_count;
  }
  return CoherentConfiguration(v, std::move(colors));
}

}  // namespace detail

inline CoherentConfiguration wl_closure(const Digraph& g) {
  const int v = g.vertex_count();
  std::vector<int> colors(static_cast<std::size_t>(v) * v);
  for (int u = 0; u < v; ++u) {
    for (int w = 0; w < v; ++w) {
      const int code = u == w ? 0 : 1 + (g.has_arc(u, w) ? 1 : 0) + (g.has_arc(w, u) ? 2 : 0);
      colors[static_cast<std::size_t>(u) * v + w] = code;
    }
  }
  return detail::refine_to_fixpoint(std::move(colors), v);
}

// Refines x after giving (alpha, alpha) a color of its own.
inline CoherentConfiguration one_point_extension(const CoherentConfiguration& x, int alpha) {
  const int v = x.vertex_count();
  if (alpha < 0 || alpha >= v) throw PreconditionError("one_point_extension: point out of range");
  auto colors = x.colors();
  colors[static_cast<std::size_t>(alpha) * v + alpha] = x.rank();
  return detail::refine_to_fixpoint(std::move(colors), v);
}

// Description of the first violated coherence axiom, if any. O(v^3 log v).
inline std::optional<std::string> axiom_violation(const CoherentConfiguration& x) {
  const int v = x.vertex_count();
  const int r = x.rank();
  std::vector<int> diag_kind(r, -1);
  std::vector<int> transpose(r, -1);
  for (int u = 0; u < v; ++u) {
    for (int w = 0; w < v; ++w) {
      const int c = x.color(u, w);
      const int kind = u == w ? 1 : 0;
      if (diag_kind[c] == -1) diag_kind[c] = kind;
      if (diag_kind[c] != kind) {
        return "color " + std::to_string(c) + " mixes diagonal and off-diagonal pairs";
      }
      const int ct = x.color(w, u);
      if (transpose[c] == -1) transpose[c] = ct;
      if (transpose[c] != ct) {
        return "transpose of color " + std::to_string(c) + " is not a single color";
      }
    }
  }
  for (int c = 0; c < r; ++c) {
    if (transpose[transpose[c]] != c) return "transpose map is not an involution at color " + std::to_string(c);
  }
  std::vector<std::vector<std::int64_t>> reference(r);
  std::vector<std::pair<int, int>> witness(r);
  std::vector<std::int64_t> sig;
  for (int u = 0; u < v; ++u) {
    for (int t = 0; t < v; ++t) {
      detail::pair_signature(x.colors(), v, r, u, t, sig);
      const int c = x.color(u, t);
      if (reference[c].empty()) {
        reference[c] = sig;
        witness[c] = {u, t};
      } else if (reference[c] != sig) {
        return "intersection numbers differ in color " + std::to_string(c) + " between pairs (" +
               std::to_string(witness[c].first) + "," + std::to_string(witness[c].second) + ") and (" +
               std::to_string(u) + "," + std::to_string(t) + ")";
      }
    }
  }
  return std::nullopt;
}

namespace detail {

inline std::vector<std::int64_t> local_counts(const CoherentConfiguration& x, int alpha, int beta) {
  const int r = x.rank();
  std::vector<std::int64_t> counts(static_cast<std::size_t>(r) * r, 0);
  for (int w = 0; w < x.vertex_count(); ++w) {
    ++counts[static_cast<std::size_t>(x.color(alpha, w)) * r + x.color(w, beta)];
  }
  return counts;
}

}  // namespace detail

// Counts from the first and last pair of each class; a mismatch is an axiom violation.
inline IntersectionTensor intersection_numbers(const CoherentConfiguration& x) {
  const int v = x.vertex_count();
  const int r = x.rank();
  std::vector<std::pair<int, int>> first(r, {-1, -1});
  std::vector<std::pair<int, int>> last(r, {-1, -1});
  for (int u = 0; u < v; ++u) {
    for (int w = 0; w < v; ++w) {
      const int c = x.color(u, w);
      if (first[c].first < 0) first[c] = {u, w};
      last[c] = {u, w};
    }
  }
  IntersectionTensor out(r);
  for (int t = 0; t < r; ++t) {
    const auto a = detail::local_counts(x, first[t].first, first[t].second);
    const auto b = detail::local_counts(x, last[t].first, last[t].second);
    for (int rr = 0; rr < r; ++rr) {
      for (int s = 0; s < r; ++s) {
        const auto k = static_cast<std::size_t>(rr) * r + s;
        if (a[k] != b[k]) {
          throw InconsistencyError(
              "intersection number (" + std::to_string(rr) + "," + std::to_string(s) + "," +
              std::to_string(t) + ") differs between pairs (" + std::to_string(first[t].first) + "," +
              std::to_string(first[t].second) + ") and (" + std::to_string(last[t].first) + "," +
              std::to_string(last[t].second) + ")");
        }
        out.at(rr, s, t) = a[k];
      }
    }
  }
  return out;
}

// Some point alpha sees every color at most once in its row.
inline bool is_partly_regular(const CoherentConfiguration& x) {
  const int v = x.vertex_count();
  std::vector<int> seen(x.rank());
  for (int alpha = 0; alpha < v; ++alpha) {
    std::fill(seen.begin(), seen.end(), 0);
    bool ok = true;
    for (int w = 0; w < v && ok; ++w) ok = ++seen[x.color(alpha, w)] <= 1;
    if (ok) return true;
  }
  return false;
}

// True when every class of `finer` lies inside a class of `coarser`.
inline bool is_refinement_of(const CoherentConfiguration& finer, const CoherentConfiguration& coarser) {
  if (finer.vertex_count() != coarser.vertex_count()) return false;
  std::vector<int> image(finer.rank(), -1);
  const auto& f = finer.colors();
  const auto& c = coarser.colors();
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (image[f[i]] == -1) image[f[i]] = c[i];
    if (image[f[i]] != c[i]) return false;
  }
  return true;
}

// Arc set is a union of color classes.
inline bool arcs_are_union_of_classes(const Digraph& g, const CoherentConfiguration& x) {
  std::vector<int> kind(x.rank(), -1);
  for (int u = 0; u < g.vertex_count(); ++u) {
    for (int w = 0; w < g.vertex_count(); ++w) {
      const int arc = g.has_arc(u, w) ? 1 : 0;
      int& k = kind[x.color(u, w)];
      if (k == -1) k = arc;
      if (k != arc) return false;
    }
  }
  return true;
}

}  // namespace circwl
