#pragma once

#include <map>
#include <vector>

#include "gkm/cohomology.hpp"

// Rational Thom classes, the evaluation homomorphism mu from face polynomials
// to graph classes, the integrality subring Z_{Gamma,alpha}, the relation
// ideal, and the degreewise verification of the weighted-face-ring
// isomorphism.

namespace gkm {

// Multiset of face ids, sorted; the top face acts as 1 and is never stored.
using FaceMonomial = std::vector<int>;

// Integer polynomial in the face variables x_F, graded by
// deg x_F = 2 (n - dim F).
class FacePolynomial {
 public:
  FacePolynomial() = default;
  static FacePolynomial variable(int face);
  static FacePolynomial constant(const Int& c);

  const std::map<FaceMonomial, Int>& terms() const { return terms_; }
  void add_term(FaceMonomial m, const Int& c);
  bool is_zero() const { return terms_.empty(); }

  FacePolynomial operator+(const FacePolynomial& o) const;
  FacePolynomial operator-(const FacePolynomial& o) const;
  FacePolynomial operator*(const FacePolynomial& o) const;
  FacePolynomial scaled(const Int& c) const;
  bool operator==(const FacePolynomial& o) const = default;

 private:
  std::map<FaceMonomial, Int> terms_;  // no zero coefficients
};

int monomial_degree(const FacePoset& poset, const FaceMonomial& m);  // cohomological
std::string monomial_key(const FacePoset& poset, const FaceMonomial& m);
std::string face_poly_to_string(const FacePoset& poset, const FacePolynomial& f);

// The degree-2d slice of the integrality condition: the lattice of integer
// coefficient vectors (in the listed monomial order) whose mu-image is
// integral at every vertex.
struct IntegralityLattice {
  int degree;  // cohomological, 2d
  std::vector<FaceMonomial> monomials;
  IntegerLattice lattice;
};

class FaceRing {
 public:
  explicit FaceRing(const FacePoset& poset);

  const FacePoset& poset() const { return *poset_; }

  // Rational Thom class: vertexwise product of the axial values of the
  // outgoing darts that leave the face; zero outside the face.
  const GraphClass& thom(int face) const { return thom_[face]; }

  // Ring homomorphism substituting thom(F) for x_F, evaluated vertexwise.
  GraphClass mu(const FacePolynomial& f) const;

  // Membership in Z_{Gamma,alpha}: every vertex restriction of mu(f) integral.
  bool is_integral(const FacePolynomial& f) const;

  // Least positive multiplier putting x_F into Z_{Gamma,alpha}: the lcm of the
  // coefficient denominators of thom(F) over the face's vertices.
  Int minimal_thom(int face) const;

  // The relation-ideal generator x_E x_F - x_{E v F} sum_G x_G over the meet
  // components G; plain x_E x_F when the faces are disjoint.
  FacePolynomial relation(int e, int f) const;

  // All face monomials of the given cohomological degree, canonical order.
  std::vector<FaceMonomial> monomials_of_degree(int two_d) const;

  IntegralityLattice integrality_lattice(int two_d) const;

  // Degreewise content of the isomorphism theorem: the mu-image of the
  // integrality lattice spans exactly the degree-d cohomology basis lattice,
  // and every relation generator maps to zero.
  bool check_iso_degree(int d) const;
  bool relations_vanish() const;

 private:
  const FacePoset* poset_;
  std::vector<GraphClass> thom_;
};

// lcm of |det Lambda_v| over the vertices of a facet; an integral multiplier
// bound for x_F (facets only: the Thom class of a facet is a single axial
// value per vertex). det_by_vertex maps graph vertex -> |det Lambda_v|.
Int lcm_bound(const FaceRing& ring, int face, const std::vector<Int>& det_by_vertex);

}  // namespace gkm
