#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

#include "circwl/errors.hpp"

namespace circwl {

inline int mod(std::int64_t x, int n) {
  const auto r = static_cast<int>(x % n);
  return r < 0 ? r + n : r;
}

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

// Ascending divisors of n (n >= 1).
inline std::vector<int> divisors(int n) {
  std::vector<int> small, large;
  for (int d = 1; static_cast<std::int64_t>(d) * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

// Ascending units of Z_n. For n == 1 the single residue 0 is a unit.
inline std::vector<int> units(int n) {
  if (n == 1) return {0};
  std::vector<int> out;
  for (int u = 1; u < n; ++u) {
    if (std::gcd(u, n) == 1) out.push_back(u);
  }
  return out;
}

inline std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t m) {
  std::int64_t result = 1 % m;
  base %= m;
  if (base < 0) base += m;
  while (exp > 0) {
    if (exp & 1) result = result * base % m;
    base = base * base % m;
    exp >>= 1;
  }
  return result;
}

inline int multiplicative_order(int u, int n) {
  if (std::gcd(u, n) != 1) throw PreconditionError("multiplicative_order: not a unit");
  int order = 1;
  std::int64_t x = mod(u, n);
  while (x != 1 % n) {
    x = x * u % n;
    ++order;
  }
  return order;
}

inline bool is_primitive_root(int g, int p) {
  if (!is_prime(p) || g % p == 0) return false;
  return multiplicative_order(mod(g, p), p) == p - 1;
}

inline int smallest_primitive_root(int p) {
  if (!is_prime(p)) throw PreconditionError("smallest_primitive_root: p is not prime");
  for (int g = 1; g < p; ++g) {
    if (is_primitive_root(g, p)) return g;
  }
  throw InconsistencyError("no primitive root found");
}

inline bool is_perfect_square(std::int64_t x) {
  if (x < 0) return false;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(x)));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r * r == x;
}

// Quadratic residue classes of the units mod an odd prime p.
inline std::vector<int> quadratic_residues(int p) {
  std::vector<bool> mark(p, false);
  for (std::int64_t x = 1; x < p; ++x) mark[x * x % p] = true;
  std::vector<int> out;
  for (int r = 1; r < p; ++r) {
    if (mark[r]) out.push_back(r);
  }
  return out;
}

inline std::vector<int> quadratic_nonresidues(int p) {
  const auto qr = quadratic_residues(p);
  std::vector<bool> mark(p, false);
  for (int r : qr) mark[r] = true;
  std::vector<int> out;
  for (int r = 1; r < p; ++r) {
    if (!mark[r]) out.push_back(r);
  }
  return out;
}

// Legendre symbol for an odd prime p: 0, 1 or -1.
inline int legendre(std::int64_t a, int p) {
  const int r = mod(a, p);
  if (r == 0) return 0;
  return pow_mod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

}  // namespace circwl
