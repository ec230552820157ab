#pragma once

#include <string>
#include <vector>

#include "gkm/quotient.hpp"

// The worked examples shipped as a fixture corpus: spindles, the weighted
// projective spaces P(1,2,3,6) and P(1,1,1,2,2,2), the 4-valent multigraph
// with no geometric origin, smooth simplices, and the polygon families.

namespace gkm {
namespace fixtures {

// Two vertices, one edge, alpha(e) = (1/m) e1, alpha(ebar) = -(1/n) e1.
OrbifoldGKMGraph spindle(long m, long n);
// Diagonal-action labels ((m-n)/m) e1 and ((n-m)/n) e1; requires m != n.
OrbifoldGKMGraph spindle_diagonal(long m, long n);

// Delta^3 with lambda = (-2,-3,-6), e1, e2, e3; facets F1..F4.
CharacteristicPair p1236_pair();

// Smooth Delta^n with the standard basis and minus-sum vector; facets F1..F{n+1}.
CharacteristicPair projective_space_pair(int n);

// Complete graph on the six coordinate points of P(1,1,1,2,2,2) with the
// tangential-representation labels; k = 3 < n = 5, GKM mode only.
OrbifoldGKMGraph wp111222_graph();

// Square with doubled left/right edges and both diagonals; every vertex reads
// (1/2)e1, (1/3)e2, (1/4)e3, (1/5)e4. A valid orbifold torus graph that is
// not derived from any characteristic pair.
OrbifoldGKMGraph figure_without_geometry();

PolygonPair polygon_p112();     // (1,0), (0,1), (-1,-2)
PolygonPair polygon_cp2();      // (1,0), (0,1), (-1,-1)
PolygonPair polygon_gcd_two();  // (2,0), (0,1), (-2,-1): gcd{D_k} = 2
PolygonPair polygon_square();   // (1,0), (0,1), (-1,0), (0,-1): CP1 x CP1

struct NamedFixture {
  std::string name;
  std::string kind;  // "graph" | "pair" | "polygon"
};
std::vector<NamedFixture> list();

// Parses fixture names: the list() names plus spindle-M-N / spindle-diag-M-N.
bool is_fixture(const std::string& name);

}  // namespace fixtures
}  // namespace gkm
