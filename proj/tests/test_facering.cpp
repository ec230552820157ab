#include "gkm/facering.hpp"

#include <random>

#include "doctest.h"
#include "gkm/fixtures.hpp"
#include "gkm/quotient.hpp"

using namespace gkm;

namespace {

struct Setup {
  DerivedGraph derived;
  FacePoset poset;
  FaceRing ring;
  std::vector<int> facet_faces;

  explicit Setup(const CharacteristicPair& p)
      : derived(derive_graph(p)),
        poset(enumerate_faces(derived.graph, infer_connection(derived.graph))),
        ring(poset) {
    for (int j = 0; j < p.facet_count(); ++j) facet_faces.push_back(facet_face(p, poset, j));
  }
};

Poly pvar(int k, int i) { return Poly::variable(k, i); }

FacePolynomial random_face_poly(std::mt19937& rng, const FacePoset& poset, int terms) {
  std::uniform_int_distribution<int> face(0, poset.size() - 1);
  std::uniform_int_distribution<int> coef(-4, 4);
  std::uniform_int_distribution<int> len(1, 2);
  FacePolynomial f;
  for (int t = 0; t < terms; ++t) {
    FaceMonomial m;
    int l = len(rng);
    for (int i = 0; i < l; ++i) {
      int fc = face(rng);
      if (fc != poset.top()) m.push_back(fc);
    }
    f.add_term(std::move(m), coef(rng));
  }
  return f;
}

}  // namespace

TEST_CASE("rational Thom classes of P(1,2,3,6) match the figure") {
  Setup s(fixtures::p1236_pair());
  const auto& g = s.derived.graph;
  int middle = g.vertex_index("F2^F3^F4");
  int bottom = g.vertex_index("F1^F3^F4");
  int right = g.vertex_index("F1^F2^F4");
  int left = g.vertex_index("F1^F2^F3");

  const GraphClass& t1 = s.ring.thom(s.facet_faces[0]);
  CHECK(t1.values[middle].is_zero());
  CHECK(t1.values[bottom] == pvar(3, 0) * Rat(-1, 2));
  CHECK(t1.values[right] == pvar(3, 1) * Rat(-1, 3));
  CHECK(t1.values[left] == pvar(3, 2) * Rat(-1, 6));
  CHECK(t1.degree == 1);

  // tau of the whole graph is the constant 1
  const GraphClass& tg = s.ring.thom(s.poset.top());
  for (const Poly& v : tg.values) CHECK(v == Poly::constant(3, 1));

  // tau of a vertex face is the product of all labels there
  const GraphClass& tv = s.ring.thom(s.poset.vertex_face(middle));
  CHECK(tv.values[middle] == pvar(3, 0) * pvar(3, 1) * pvar(3, 2));
  CHECK(tv.values[bottom].is_zero());
  CHECK(tv.degree == 3);
}

TEST_CASE("mu sends the global linear combinations to constants") {
  Setup s(fixtures::p1236_pair());
  const auto& g = s.derived.graph;
  // mu(-2 x_F1 + x_F2) is the constant class e1
  FacePolynomial f;
  f.add_term({s.facet_faces[0]}, -2);
  f.add_term({s.facet_faces[1]}, 1);
  GraphClass img = s.ring.mu(f);
  for (int v = 0; v < g.vertex_count(); ++v) CHECK(img.values[v] == pvar(3, 0));

  // mu(x_Gamma) = 1
  GraphClass one = s.ring.mu(FacePolynomial::constant(1));
  for (int v = 0; v < g.vertex_count(); ++v) CHECK(one.values[v] == Poly::constant(3, 1));
}

TEST_CASE("mu is a ring homomorphism") {
  Setup s(fixtures::p1236_pair());
  std::mt19937 rng(5);
  for (int t = 0; t < 12; ++t) {
    FacePolynomial f = random_face_poly(rng, s.poset, 2);
    FacePolynomial h = random_face_poly(rng, s.poset, 2);
    GraphClass lhs = s.ring.mu(f * h);
    GraphClass rhs = s.ring.mu(f) * s.ring.mu(h);
    for (size_t v = 0; v < lhs.values.size(); ++v) CHECK(lhs.values[v] == rhs.values[v]);
  }
}

TEST_CASE("integrality membership on the worked example") {
  Setup s(fixtures::p1236_pair());
  CHECK(s.ring.is_integral(FacePolynomial::variable(s.facet_faces[0]).scaled(6)));
  CHECK_FALSE(s.ring.is_integral(FacePolynomial::variable(s.facet_faces[0]).scaled(5)));
  CHECK(s.ring.is_integral(FacePolynomial()));
  FacePolynomial f;
  f.add_term({s.facet_faces[0]}, -3);
  f.add_term({s.facet_faces[2]}, 1);
  CHECK(s.ring.is_integral(f));
}

TEST_CASE("minimal Thom multipliers of P(1,2,3,6) are (6,3,2,1)") {
  Setup s(fixtures::p1236_pair());
  CHECK(s.ring.minimal_thom(s.facet_faces[0]) == 6);
  CHECK(s.ring.minimal_thom(s.facet_faces[1]) == 3);
  CHECK(s.ring.minimal_thom(s.facet_faces[2]) == 2);
  CHECK(s.ring.minimal_thom(s.facet_faces[3]) == 1);
  CHECK(s.ring.minimal_thom(s.poset.top()) == 1);
}

TEST_CASE("smooth fixtures have trivial multipliers and full lattices") {
  for (int n : {2, 3}) {
    Setup s(fixtures::projective_space_pair(n));
    for (int f = 0; f < s.poset.size(); ++f) CHECK(s.ring.minimal_thom(f) == 1);
    for (int d = 1; d <= 2; ++d) {
      auto zl = s.ring.integrality_lattice(2 * d);
      CHECK(zl.lattice == IntegerLattice::full(static_cast<int>(zl.monomials.size())));
    }
  }
}

TEST_CASE("P(1,2,3,6) degree-2 integrality lattice is generated by the example elements") {
  Setup s(fixtures::p1236_pair());
  auto zl = s.ring.integrality_lattice(2);
  REQUIRE(zl.monomials.size() == 4);
  // columns follow poset order of the facet faces; map facet index -> column
  std::vector<int> col(4);
  for (int j = 0; j < 4; ++j) {
    auto it = std::find(zl.monomials.begin(), zl.monomials.end(), FaceMonomial{s.facet_faces[j]});
    REQUIRE(it != zl.monomials.end());
    col[j] = static_cast<int>(it - zl.monomials.begin());
  }
  IntMatrix gens(4, 4);
  auto set = [&](int row, int facet, long c) { gens.at(row, col[facet]) = c; };
  set(0, 0, -2), set(0, 1, 1);
  set(1, 0, -3), set(1, 2, 1);
  set(2, 0, -6), set(2, 3, 1);
  set(3, 0, 6);
  CHECK(zl.lattice == IntegerLattice::from_generators(4, gens));
  // minimal member along each facet direction recovers the multiplier
  for (int j = 0; j < 4; ++j) {
    std::vector<Int> dir(4, 0);
    dir[col[j]] = 1;
    auto v = minimal_in_direction(zl.lattice, dir);
    REQUIRE(v.has_value());
    CHECK((*v)[col[j]] == s.ring.minimal_thom(s.facet_faces[j]));
  }
}

TEST_CASE("relation generators map to zero under mu") {
  auto check_ring = [](const FaceRing& ring) { CHECK(ring.relations_vanish()); };
  check_ring(Setup(fixtures::p1236_pair()).ring);
  check_ring(Setup(fixtures::projective_space_pair(2)).ring);
  {
    auto s = fixtures::spindle(2, 3);
    auto poset = enumerate_faces(s, infer_connection(s));
    check_ring(FaceRing(poset));
  }
  {
    auto g = fixtures::figure_without_geometry();
    auto poset = enumerate_faces(g, infer_connection(g));
    check_ring(FaceRing(poset));
  }
}

TEST_CASE("relation shapes on the simplex") {
  Setup s(fixtures::p1236_pair());
  // adjacent facets: x_E x_F - x_{E meet F} (join is the top face, one meet)
  int f0 = s.facet_faces[0], f1 = s.facet_faces[1];
  FacePolynomial rel = s.ring.relation(f0, f1);
  auto meet = s.poset.meet_components(f0, f1);
  REQUIRE(meet.size() == 1);
  FacePolynomial expect = FacePolynomial::variable(f0) * FacePolynomial::variable(f1) -
                          FacePolynomial::variable(meet[0]);
  CHECK(rel == expect);
  // E = top face: relation vanishes identically
  CHECK(s.ring.relation(s.poset.top(), f0).is_zero());
}

TEST_CASE("disjoint faces contribute the plain product relation") {
  auto g = fixtures::figure_without_geometry();
  auto poset = enumerate_faces(g, infer_connection(g));
  FaceRing ring(poset);
  int a = g.vertex_index("A"), b = g.vertex_index("B"), c = g.vertex_index("C"), d = g.vertex_index("D");
  int bottom = -1, top = -1;
  for (int f : poset.faces_of_dim(1)) {
    auto verts = poset.face(f).vertices;
    if (verts == std::vector<int>{std::min(a, b), std::max(a, b)}) bottom = f;
    if (verts == std::vector<int>{std::min(c, d), std::max(c, d)}) top = f;
  }
  REQUIRE(bottom >= 0);
  REQUIRE(top >= 0);
  FacePolynomial expect = FacePolynomial::variable(bottom) * FacePolynomial::variable(top);
  CHECK(ring.relation(bottom, top) == expect);
  CHECK(ring.mu(expect).is_zero());
}

TEST_CASE("integrality lattices are closed under multiplication") {
  Setup s(fixtures::p1236_pair());
  auto l2 = s.ring.integrality_lattice(2);
  auto l4 = s.ring.integrality_lattice(4);
  std::mt19937 rng(9);
  std::uniform_int_distribution<int> coef(-3, 3);
  auto random_member = [&]() {
    FacePolynomial f;
    for (int r = 0; r < l2.lattice.rank(); ++r) {
      Int c = coef(rng);
      for (size_t col = 0; col < l2.monomials.size(); ++col)
        f.add_term(l2.monomials[col], c * l2.lattice.basis().at(r, static_cast<int>(col)));
    }
    return f;
  };
  for (int t = 0; t < 10; ++t) {
    FacePolynomial f = random_member(), h = random_member();
    FacePolynomial prod = f * h;
    CHECK(s.ring.is_integral(prod));
    // its coefficient vector lies in the degree-4 lattice
    std::vector<Int> v(l4.monomials.size(), 0);
    for (const auto& [m, c] : prod.terms()) {
      auto it = std::find(l4.monomials.begin(), l4.monomials.end(), m);
      REQUIRE(it != l4.monomials.end());
      v[it - l4.monomials.begin()] = c;
    }
    CHECK(l4.lattice.contains(v));
  }
}

TEST_CASE("torus graphs keep every Thom class integral") {
  Setup s(fixtures::projective_space_pair(3));
  for (int f = 0; f < s.poset.size(); ++f)
    CHECK(s.ring.is_integral(FacePolynomial::variable(f)));
}

TEST_CASE("lcm_bound on facets") {
  Setup s(fixtures::p1236_pair());
  for (int j = 0; j < 4; ++j) CHECK(lcm_bound(s.ring, s.facet_faces[j], s.derived.det_v) == 6);

  Setup smooth(fixtures::projective_space_pair(2));
  for (int j = 0; j < 3; ++j) CHECK(lcm_bound(smooth.ring, smooth.facet_faces[j], smooth.derived.det_v) == 1);

  Setup p112(fixtures::polygon_p112().to_characteristic_pair());
  std::vector<Int> expect{2, 1, 2};
  for (int j = 0; j < 3; ++j) {
    Int l = lcm_bound(p112.ring, p112.facet_faces[j], p112.derived.det_v);
    CHECK(l == expect[j]);
    CHECK(l % p112.ring.minimal_thom(p112.facet_faces[j]) == 0);
  }
  // vertex faces carry no facet bound
  CHECK_THROWS_AS(lcm_bound(s.ring, s.poset.vertex_face(0), s.derived.det_v), std::invalid_argument);
}

TEST_CASE("check_iso_degree on the worked fixtures") {
  Setup p1236(fixtures::p1236_pair());
  CHECK(p1236.ring.check_iso_degree(1));
  CHECK(p1236.ring.check_iso_degree(2));

  Setup cp2(fixtures::projective_space_pair(2));
  for (int d = 1; d <= 3; ++d) CHECK(cp2.ring.check_iso_degree(d));

  Setup p112(fixtures::polygon_p112().to_characteristic_pair());
  CHECK(p112.ring.check_iso_degree(1));
  CHECK(p112.ring.check_iso_degree(2));

  auto s = fixtures::spindle(2, 3);
  auto poset = enumerate_faces(s, infer_connection(s));
  FaceRing ring(poset);
  CHECK(ring.check_iso_degree(1));
  CHECK(ring.check_iso_degree(2));
}
