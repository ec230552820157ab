#pragma once

#include <array>
#include <string>
#include <vector>

#include "gkm/facering.hpp"

// Characteristic pairs (Q, lambda), derivation of the orbifold torus graph,
// the global degree-2 elements of the integrality ring, and the polygon
// pipeline for 4-dimensional torus orbifolds (D_k, the gcd criterion, the
// L_k lattices and their intersection).

namespace gkm {

struct Facet {
  std::string name;
  std::vector<Int> lambda;  // in Z^n
};

// Combinatorial manifold with faces: facets, vertices as n-subsets of facets,
// edges as (n-1)-subsets with their two endpoints.
class CharacteristicPair {
 public:
  CharacteristicPair(int n, std::vector<Facet> facets, std::vector<std::vector<int>> vertices,
                     std::vector<std::pair<std::vector<int>, std::array<int, 2>>> edges);

  int n() const { return n_; }
  int facet_count() const { return static_cast<int>(facets_.size()); }
  const Facet& facet(int i) const { return facets_[i]; }
  int facet_index(const std::string& name) const;
  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  const std::vector<int>& vertex_facets(int v) const { return vertices_[v]; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<int>& edge_facets(int e) const { return edges_[e].first; }
  const std::array<int, 2>& edge_ends(int e) const { return edges_[e].second; }

  // Independence of the facet vectors at every vertex, facet/edge incidence
  // consistency; empty report = valid.
  ValidationReport validate() const;

  // Q = simplex Delta^n: facets 0..n, vertices all n-subsets, edges all
  // (n-1)-subsets.
  static CharacteristicPair simplex(std::vector<Facet> facets);

 private:
  int n_;
  std::vector<Facet> facets_;
  std::vector<std::vector<int>> vertices_;
  std::vector<std::pair<std::vector<int>, std::array<int, 2>>> edges_;
};

struct DerivedGraph {
  OrbifoldGKMGraph graph;        // torus mode, k = n; vertices match the pair
  std::vector<IntMatrix> lambda_v;  // columns lambda(F) in ascending facet order
  std::vector<Int> det_v;           // |det Lambda_v|
};

// Axial function from the dual rows of Lambda_v^{-1}: along the edge leaving
// vertex v through the facets of e, alpha is the row of Lambda_v^{-1} dual to
// the one facet of v not containing e.
DerivedGraph derive_graph(const CharacteristicPair& p);

// Face of the derived graph's poset carried by facet j.
int facet_face(const CharacteristicPair& p, const FacePoset& poset, int j);
// Renames the facet faces of the poset after their facets.
void label_facet_faces(const CharacteristicPair& p, FacePoset& poset);

// The n degree-2 face polynomials sum_j a_ij x_{F_j}; each is verified
// integral with mu-image the constant class e_i.
std::vector<FacePolynomial> linear_global_elements(const CharacteristicPair& p, const FaceRing& ring);

// m-gon with lambda(F_k) = (a_k, b_k); requires every adjacent determinant
// D_k = a_k b_{k+1} - b_k a_{k+1} nonzero. Indices are cyclic.
class PolygonPair {
 public:
  explicit PolygonPair(std::vector<std::array<Int, 2>> lambda);

  int m() const { return static_cast<int>(lambda_.size()); }
  const std::array<Int, 2>& lambda(int k) const { return lambda_[mod(k)]; }  // 1-based, cyclic
  Int d(int k) const { return d_[mod(k)]; }                                  // D_k, 1-based, cyclic
  IntMatrix lambda_matrix(int k) const;  // [lambda(F_k) | lambda(F_{k+1})]

  CharacteristicPair to_characteristic_pair() const;

 private:
  int mod(int k) const { return ((k - 1) % m() + m()) % m(); }
  std::vector<std::array<Int, 2>> lambda_;
  std::vector<Int> d_;
};

struct PolygonGcd {
  std::vector<Int> d;
  Int g;
  bool vanishing_odd_cohomology;  // gcd == 1
};
PolygonGcd polygon_gcd_check(const PolygonPair& p);

// The sublattice of Z^{nm} spanned by the rows of the symmetric power of
// Lambda_k placed at the cyclic block of columns (k-1)n+1 .. (k-1)n+n+1,
// together with the standard basis vectors of the untouched coordinates.
IntegerLattice polygon_Lk(const PolygonPair& p, int n, int k);

// Intersection over k = 1..m; coordinates are the cyclic monomial layout
// (c_{0,1}, ..., c_{n-1,1}, c_{0,2}, ..., c_{n-1,m}) of x_{F_i}^{n-a} x_{F_{i+1}}^a.
IntegerLattice polygon_generators(const PolygonPair& p, int n);

// Face monomial for coordinate (a, i) of the layout above; needs the facet
// faces of the derived graph's poset.
FaceMonomial polygon_coordinate_monomial(const PolygonPair& p, int n, int coordinate,
                                         const std::vector<int>& facet_faces);

}  // namespace gkm
