#include "gkm/fixtures.hpp"

namespace gkm {
namespace fixtures {

namespace {

LinearForm form1(const Rat& c) {
  LinearForm f;
  f.coeffs = {c};
  return f;
}

LinearForm form(std::vector<Rat> cs) {
  LinearForm f;
  f.coeffs = std::move(cs);
  return f;
}

}  // namespace

OrbifoldGKMGraph spindle(long m, long n) {
  if (m <= 0 || n <= 0) throw std::invalid_argument("spindle: weights must be positive");
  std::vector<EdgeSpec> edges{{0, 1, form1(make_rat(1, m)), form1(make_rat(-1, n))}};
  return OrbifoldGKMGraph(1, {"p", "q"}, edges);
}

OrbifoldGKMGraph spindle_diagonal(long m, long n) {
  if (m <= 0 || n <= 0 || m == n) throw std::invalid_argument("spindle_diagonal: weights must be positive and distinct");
  std::vector<EdgeSpec> edges{{0, 1, form1(make_rat(m - n, m)), form1(make_rat(n - m, n))}};
  return OrbifoldGKMGraph(1, {"p", "q"}, edges);
}

CharacteristicPair p1236_pair() {
  return CharacteristicPair::simplex({
      Facet{"F1", {-2, -3, -6}},
      Facet{"F2", {1, 0, 0}},
      Facet{"F3", {0, 1, 0}},
      Facet{"F4", {0, 0, 1}},
  });
}

CharacteristicPair projective_space_pair(int n) {
  if (n < 1) throw std::invalid_argument("projective_space_pair: n must be >= 1");
  std::vector<Facet> facets;
  for (int i = 0; i < n; ++i) {
    std::vector<Int> lambda(n, 0);
    lambda[i] = 1;
    facets.push_back(Facet{"F" + std::to_string(i + 1), std::move(lambda)});
  }
  facets.push_back(Facet{"F" + std::to_string(n + 1), std::vector<Int>(n, -1)});
  return CharacteristicPair::simplex(std::move(facets));
}

OrbifoldGKMGraph wp111222_graph() {
  // Fixed points are the coordinate points z_P, P a 2-subset of {1,2,3,4};
  // the T^3-weight of z_Q at z_P is w(Q) - (a_Q / a_P) w(P) with w the
  // residual torus weight and a the projective weight (1 on pairs containing
  // 1, else 2).
  struct Pt {
    const char* name;
    int a;
    std::array<long, 3> w;
  };
  std::vector<Pt> pts{
      {"z12", 1, {1, 1, 0}}, {"z13", 1, {1, 0, 1}}, {"z14", 1, {1, 0, 0}},
      {"z23", 2, {0, 1, 1}}, {"z24", 2, {0, 1, 0}}, {"z34", 2, {0, 0, 1}},
  };
  std::vector<std::string> names;
  for (const Pt& p : pts) names.push_back(p.name);
  std::vector<EdgeSpec> edges;
  for (size_t p = 0; p < pts.size(); ++p)
    for (size_t q = p + 1; q < pts.size(); ++q) {
      auto weight = [&](size_t at, size_t dir) {
        std::vector<Rat> cs(3);
        for (int j = 0; j < 3; ++j)
          cs[j] = Rat(pts[dir].w[j]) - make_rat(pts[dir].a, pts[at].a) * Rat(pts[at].w[j]);
        return form(std::move(cs));
      };
      edges.push_back(EdgeSpec{static_cast<int>(p), static_cast<int>(q), weight(p, q), weight(q, p)});
    }
  return OrbifoldGKMGraph(3, std::move(names), edges);
}

OrbifoldGKMGraph figure_without_geometry() {
  // vertices A=(0,0), B=(4,0), C=(4,4), D=(0,4); sides AB/DC carry (1/5)e4,
  // AD/BC carry (1/3)e2, the doubled arcs AD'/BC' carry (1/2)e1, and the
  // diagonals AC/BD carry (1/4)e3, in both directions.
  auto rat4 = [](long num, long den, int slot) {
    std::vector<Rat> cs(4, Rat(0));
    cs[slot] = make_rat(num, den);
    LinearForm f;
    f.coeffs = std::move(cs);
    return f;
  };
  int A = 0, B = 1, C = 2, D = 3;
  std::vector<EdgeSpec> edges{
      {A, B, rat4(1, 5, 3), rat4(1, 5, 3)},  // bottom
      {D, C, rat4(1, 5, 3), rat4(1, 5, 3)},  // top
      {A, D, rat4(1, 3, 1), rat4(1, 3, 1)},  // left side
      {B, C, rat4(1, 3, 1), rat4(1, 3, 1)},  // right side
      {A, D, rat4(1, 2, 0), rat4(1, 2, 0)},  // left arc (doubled edge)
      {B, C, rat4(1, 2, 0), rat4(1, 2, 0)},  // right arc (doubled edge)
      {A, C, rat4(1, 4, 2), rat4(1, 4, 2)},  // diagonal
      {B, D, rat4(1, 4, 2), rat4(1, 4, 2)},  // diagonal
  };
  return OrbifoldGKMGraph(4, {"A", "B", "C", "D"}, edges);
}

PolygonPair polygon_p112() { return PolygonPair({{1, 0}, {0, 1}, {-1, -2}}); }
PolygonPair polygon_cp2() { return PolygonPair({{1, 0}, {0, 1}, {-1, -1}}); }
PolygonPair polygon_gcd_two() { return PolygonPair({{2, 0}, {0, 1}, {-2, -1}}); }
PolygonPair polygon_square() { return PolygonPair({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}); }

std::vector<NamedFixture> list() {
  return {
      {"spindle-M-N", "graph"}, {"spindle-diag-M-N", "graph"}, {"wp111222", "graph"},
      {"figure-no-geometry", "graph"}, {"p1236", "pair"}, {"cp2", "pair"}, {"cp3", "pair"},
      {"polygon-p112", "polygon"}, {"polygon-cp2", "polygon"}, {"polygon-gcd2", "polygon"},
      {"polygon-square", "polygon"},
  };
}

bool is_fixture(const std::string& name) {
  if (name.rfind("spindle-", 0) == 0) return true;
  for (const NamedFixture& f : list())
    if (f.name == name) return true;
  return false;
}

}  // namespace fixtures
}  // namespace gkm
