#pragma once

#include <vector>

#include "gkm/graph.hpp"

// Equivariant cohomology of a labelled graph: vertex-indexed polynomial
// tuples whose differences along each edge are divisible by the edge modulus
// (rtilde_e * alpha(e) over Z, alpha(e) over Q).

namespace gkm {

enum class Coefficients { Z, Q };

// A candidate cohomology class: one homogeneous polynomial of common degree
// per vertex (cohomological degree = 2 * polynomial degree).
struct GraphClass {
  const OrbifoldGKMGraph* graph;
  int degree;  // polynomial degree d
  std::vector<Poly> values;
  Coefficients domain = Coefficients::Z;

  GraphClass scaled(const Rat& c) const;
  GraphClass operator+(const GraphClass& o) const;
  GraphClass operator*(const GraphClass& o) const;
  bool is_zero() const;
  bool vertexwise_integral() const;
};

GraphClass zero_class(const OrbifoldGKMGraph& g, int degree, Coefficients domain);
GraphClass constant_class(const OrbifoldGKMGraph& g, const Poly& p, Coefficients domain);

// Edge congruence test: over Z the difference across each edge must be
// divisible by rtilde_e * alpha(e) with integral quotient; over Q by alpha(e).
bool is_class(const GraphClass& f);

// Z-module basis of the degree-2d homogeneous part of the graph cohomology,
// in canonical HNF with respect to the vertex x monomial coordinates.
struct GradedBasis {
  int degree;                          // polynomial degree d
  std::vector<Exponents> monomials;    // coordinate order within one vertex
  IntegerLattice lattice;              // rank rows over Z^(V * |monomials|)
  std::vector<GraphClass> classes;
};
GradedBasis basis(const OrbifoldGKMGraph& g, int d);

// Coordinates of a class in the vertex x monomial system; requires integral
// coefficients.
std::vector<Int> class_to_vector(const GraphClass& f, const std::vector<Exponents>& monomials);
GraphClass vector_to_class(const OrbifoldGKMGraph& g, int d, const std::vector<Exponents>& monomials,
                           const std::vector<Int>& v, Coefficients domain);

// Dimension over Q of the rational solution space in degree d (same space the
// integral basis spans over Q; computed independently from the linear system).
int rational_dimension(const OrbifoldGKMGraph& g, int d);

// Ranks of H*_T(Gamma, alpha; Q) / (constant classes e1..ek) per cohomological
// degree 0, 2, ..., 2*d_max; the ordinary-cohomology ranks when the graph
// comes from a space with vanishing odd cohomology.
std::vector<std::pair<int, int>> ordinary_ranks(const OrbifoldGKMGraph& g, int d_max);

}  // namespace gkm
