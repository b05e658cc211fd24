// Walks the J_{3,0} case by hand: transpose, weights, groups, lattice,
// Newton polytopes, and a reflexive polytope squeezed between them.

#include <iostream>

#include "mirrorpoly/mirrorpoly.hpp"

using namespace mirrorpoly;

int main() {
  const ExponentMatrix a = parse_polynomial("x^6+x*y^3+z^2+w^18");
  const ExponentMatrix at = transpose(a);
  std::cout << "F  = " << print_polynomial(a) << "   (q;h) = " << to_string(primitive_weight_system(a)) << "\n";
  std::cout << "Fv = " << print_polynomial(at) << "   (q;h) = " << to_string(primitive_weight_system(at)) << "\n";

  // G is the SL lift of G_max(f), f = F(x, y, z, 0).
  const DiagonalGroup g = lift_group(gmax_group(restrict_to_first_n(a)));
  const DiagonalGroup gv = transpose_group(g, a);
  std::cout << "|G| = " << g.order() << ", |Gv| = " << gv.order() << ", |G_max(F)| = " << a.det() << "\n";

  const Sublattice m = character_lattice(primitive_weight_system(a), g);
  std::cout << "M basis " << m.basis() << "\n";

  const BasisChart chart({{5, -1, -1, -1}, {0, 2, -1, -1}, {-1, -1, 1, -1}});
  std::cout << "chart valid: " << (validate_chart(chart, m) ? "yes" : "no") << "\n";

  const LatticePolytope lower = convex_hull(newton_points(a, chart));
  const LatticePolytope upper = convex_hull(newton_points(at, BasisChart({{1, 0, 0, -2}, {0, 1, 0, -6}, {0, 0, 1, -9}})));

  auto found = sandwich_search(lower, upper);
  if (!found.polytope) {
    std::cout << "no sandwich polytope\n";
    return 1;
  }
  std::cout << "Delta  =";
  for (const auto& v : found.polytope->vertices()) std::cout << " " << to_string(v);
  std::cout << "\nDelta° =";
  for (const auto& v : polar_dual(*found.polytope).vertices()) std::cout << " " << to_string(v);
  std::cout << "\nreflexive: " << std::boolalpha << is_reflexive(*found.polytope)
            << ", edge pairing: " << edge_length_pairing(*found.polytope) << "\n";
}
