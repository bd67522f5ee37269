#pragma once

// Cyclotomic numbers of order 2 and 3 over Z_p by direct counting, and the
// closed forms and prime-form tests built on them.

#include <cmath>
#include <cstdint>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "circwl/arith.hpp"
#include "circwl/errors.hpp"

namespace circwl {

struct CyclotomicTable {
  int p = 0;
  int m = 0;
  int f = 0;
  int primitive_root = 0;
  // table[k][h] = number of (x, y) in [0, f)^2 with l^(mx+k) + 1 = l^(my+h) mod p.
  std::vector<std::vector<std::int64_t>> table;

  std::int64_t operator()(int k, int h) const { return table[k][h]; }

  // "p m l" then m rows of m integers.
  std::string dump() const {
    std::ostringstream os;
    os << p << ' ' << m << ' ' << primitive_root << '\n';
    for (const auto& row : table) {
      for (std::size_t h = 0; h < row.size(); ++h) os << (h ? " " : "") << row[h];
      os << '\n';
    }
    return os.str();
  }
};

inline CyclotomicTable cyclotomic_numbers_bruteforce(int p, int m, int l) {
  if (!is_prime(p) || p == 2) throw PreconditionError("cyclotomic numbers: p must be an odd prime");
  if (m < 1 || (p - 1) % m != 0) throw PreconditionError("cyclotomic numbers: m must divide p - 1");
  if (!is_primitive_root(l, p)) {
    throw PreconditionError("cyclotomic numbers: " + std::to_string(l) + " is not a primitive root mod " +
                            std::to_string(p));
  }
  CyclotomicTable t;
  t.p = p;
  t.m = m;
  t.f = (p - 1) / m;
  t.primitive_root = l;
  t.table.assign(m, std::vector<std::int64_t>(m, 0));
  std::vector<int> power(p - 1);
  std::vector<int> dlog(p, -1);
  std::int64_t x = 1;
  for (int e = 0; e < p - 1; ++e) {
    power[e] = static_cast<int>(x);
    dlog[x] = e;
    x = x * l % p;
  }
  // l^(mx+k) runs over every unit exactly once as (x, k) ranges.
  for (int e = 0; e < p - 1; ++e) {
    const int next = (power[e] + 1) % p;
    if (next == 0) continue;
    ++t.table[e % m][dlog[next] % m];
  }
  return t;
}

inline CyclotomicTable cyclotomic_numbers_bruteforce(int p, int m) {
  return cyclotomic_numbers_bruteforce(p, m, smallest_primitive_root(p));
}

// c[i][j] = c^1_{i+1, j+1} of cyc((p-1)/m, Z_p), the coefficient of 1 in X_{i+1} X_{j+1},
// where X_{i+1} is the class of units with discrete log = i mod m.
struct CyclotomicConstants {
  int p = 0;
  int m = 0;
  std::vector<std::vector<std::int64_t>> c;
};

inline CyclotomicConstants structure_constants_from_table(const CyclotomicTable& t) {
  if (t.f % 2 != 0) {
    throw UnsupportedError("structure constants: f = " + std::to_string(t.f) + " is odd, classes are not symmetric");
  }
  // With f even every class is closed under negation, so the inverse class index is i itself.
  CyclotomicConstants out{t.p, t.m, t.table};
  return out;
}

struct CubicDecomposition {
  int p = 0;
  std::int64_t x = 0;
  // c^1_12 - c^1_13 relative to the smallest primitive root; |y| is root independent.
  std::int64_t y = 0;
  std::int64_t abs_y = 0;
};

inline CubicDecomposition cubic_decomposition(int p) {
  if (!is_prime(p) || p % 3 != 1) throw PreconditionError("cubic_decomposition: need a prime p = 1 mod 3");
  CubicDecomposition d;
  d.p = p;
  bool found = false;
  for (std::int64_t y = 0; 27 * y * y <= 4LL * p && !found; ++y) {
    const std::int64_t rest = 4LL * p - 27 * y * y;
    if (!is_perfect_square(rest)) continue;
    auto root = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<long double>(rest))));
    d.x = mod(root, 3) == 1 ? root : -root;
    d.abs_y = y;
    found = true;
  }
  if (!found) throw InconsistencyError("cubic_decomposition: no solution of 4p = x^2 + 27y^2");
  const auto c = structure_constants_from_table(cyclotomic_numbers_bruteforce(p, 3));
  d.y = c.c[0][1] - c.c[0][2];
  return d;
}

// Order 2, f even: c^1_11 and the common value of c^1_12 = c^1_21 = c^1_22.
struct QuadraticClosedForm {
  std::int64_t c11 = 0;
  std::int64_t c12 = 0;
};

inline QuadraticClosedForm quadratic_closed_form(int p) {
  if (!is_prime(p) || p % 4 != 1) throw PreconditionError("quadratic_closed_form: need a prime p = 1 mod 4");
  const std::int64_t f = (p - 1) / 2;
  return {f / 2 - 1, f / 2};
}

// Order 3, f even: c^1_11, c^1_12, c^1_13 and c^1_23 from the decomposition 4p = x^2 + 27y^2.
struct CubicClosedForm {
  std::int64_t c11 = 0;
  std::int64_t c12 = 0;
  std::int64_t c13 = 0;
  std::int64_t c23 = 0;
};

inline CubicClosedForm cubic_closed_form(const CubicDecomposition& d) {
  const std::int64_t p = d.p;
  auto exact = [](std::int64_t num, std::int64_t den) {
    if (num % den != 0) throw InconsistencyError("cubic_closed_form: non-integral constant");
    return num / den;
  };
  return {exact(p - 8 + d.x, 9), exact(2 * p - 4 - d.x + 9 * d.y, 18), exact(2 * p - 4 - d.x - 9 * d.y, 18),
          exact(p + 1 + d.x, 9)};
}

// p - 3 i^2 is a perfect square.
inline bool prime_form_test(int p, int i) {
  if (i != 1 && i != 2) throw PreconditionError("prime_form_test: i must be 1 or 2");
  if (!is_prime(p) || p % 3 != 1 || ((p - 1) / 3) % 2 != 0) {
    throw PreconditionError("prime_form_test: need a prime p = 1 mod 3 with (p-1)/3 even");
  }
  return is_perfect_square(static_cast<std::int64_t>(p) - 3LL * i * i);
}

// {c^1_11 + 2(i-1), c^2_11, c^3_11} from the brute-force constants, using
// c^2_11 = c^1_12 and c^3_11 = c^1_13.
inline std::set<std::int64_t> t_set(const CyclotomicConstants& c, int i) {
  return {c.c[0][0] + 2 * (i - 1), c.c[0][1], c.c[0][2]};
}

}  // namespace circwl
