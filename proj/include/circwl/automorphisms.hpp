#pragma once

// Exact automorphism-group order of a small digraph by backtracking over
// permutations that preserve the colors of its coherent closure.

#include <cstdint>
#include <vector>

#include "circwl/coherent.hpp"
#include "circwl/errors.hpp"

namespace circwl {

inline constexpr int kBruteforceAutLimit = 12;

namespace detail {

class ColorPreservingSearch {
 public:
  explicit ColorPreservingSearch(const CoherentConfiguration& x)
      : x_(x), v_(x.vertex_count()), image_(v_, -1), used_(v_, false) {}

  // Whether the map i -> i (i < fixed), fixed -> target extends to an automorphism.
  bool extends(int fixed, int target) {
    std::fill(image_.begin(), image_.end(), -1);
    std::fill(used_.begin(), used_.end(), false);
    for (int i = 0; i < fixed; ++i) {
      image_[i] = i;
      used_[i] = true;
    }
    if (used_[target] || !compatible(fixed, target)) return false;
    image_[fixed] = target;
    used_[target] = true;
    return complete(fixed + 1);
  }

 private:
  bool compatible(int a, int b) const {
    if (x_.color(a, a) != x_.color(b, b)) return false;
    for (int i = 0; i < v_; ++i) {
      if (image_[i] < 0) continue;
      if (x_.color(i, a) != x_.color(image_[i], b) || x_.color(a, i) != x_.color(b, image_[i])) return false;
    }
    return true;
  }

  bool complete(int a) {
    if (a == v_) return true;
    if (image_[a] >= 0) return complete(a + 1);
    for (int b = 0; b < v_; ++b) {
      if (used_[b] || !compatible(a, b)) continue;
      image_[a] = b;
      used_[b] = true;
      if (complete(a + 1)) return true;
      image_[a] = -1;
      used_[b] = false;
    }
    return false;
  }

  const CoherentConfiguration& x_;
  int v_;
  std::vector<int> image_;
  std::vector<bool> used_;
};

}  // namespace detail

// Product of orbit lengths along the pointwise stabilizer chain of 0, 1, ..., v-1.
inline std::uint64_t aut_order_bruteforce(const Digraph& g) {
  if (g.vertex_count() > kBruteforceAutLimit) {
    throw SizeError("aut_order_bruteforce: " + std::to_string(g.vertex_count()) + " vertices exceeds the limit of " +
                    std::to_string(kBruteforceAutLimit));
  }
  const auto x = wl_closure(g);
  detail::ColorPreservingSearch search(x);
  std::uint64_t order = 1;
  for (int k = 0; k < g.vertex_count(); ++k) {
    std::uint64_t orbit = 0;
    for (int t = k; t < g.vertex_count(); ++t) {
      if (search.extends(k, t)) ++orbit;
    }
    order *= orbit;
  }
  return order;
}

}  // namespace circwl
