// Walk through one circulant: Deza parameters, WL-closure, S-ring, dimension bounds.

#include <iostream>

#include "circwl.hpp"

int main() {
  using namespace circwl;

  const auto s = parse_subset_literal("8: 1,2,6,7");
  const auto report = deza_report(s.order(), s);
  std::cout << "Deza: " << (report.is_deza ? "yes" : "no") << ", strict: " << (report.is_strictly_deza ? "yes" : "no")
            << ", parameters " << to_string(*report.params) << '\n';

  const auto closure = wl_closure(Digraph::circulant(s));
  const auto ring = sring_from_closure(closure);
  std::cout << "WL-rank " << closure.rank() << ", basic sets: " << ring.serialize() << '\n';

  const auto bounds = dimension_bounds(closure, ring, report, std::nullopt);
  std::cout << "WL-dimension " << bounds.interval() << '\n';
  for (const auto& e : bounds.trace) std::cout << "  " << e.rule << ": " << e.premise << '\n';

  const auto g5 = family_graph({FamilyLabel::G5, 2, 2});
  std::cout << to_literal(g5.connection) << " has |Aut| = " << expected_aut_order({FamilyLabel::G5, 2, 2}).str()
            << '\n';
}
