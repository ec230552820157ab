#include "gkm/cohomology.hpp"

#include <algorithm>
#include <map>

namespace gkm {

GraphClass GraphClass::scaled(const Rat& c) const {
  GraphClass r = *this;
  for (Poly& p : r.values) p = p * c;
  return r;
}

GraphClass GraphClass::operator+(const GraphClass& o) const {
  if (graph != o.graph || degree != o.degree) throw std::invalid_argument("class addition: mismatch");
  GraphClass r = *this;
  for (size_t i = 0; i < values.size(); ++i) r.values[i] = values[i] + o.values[i];
  return r;
}

GraphClass GraphClass::operator*(const GraphClass& o) const {
  if (graph != o.graph) throw std::invalid_argument("class product: different graphs");
  GraphClass r = *this;
  r.degree = degree + o.degree;
  for (size_t i = 0; i < values.size(); ++i) r.values[i] = values[i] * o.values[i];
  return r;
}

bool GraphClass::is_zero() const {
  for (const Poly& p : values)
    if (!p.is_zero()) return false;
  return true;
}

bool GraphClass::vertexwise_integral() const {
  for (const Poly& p : values)
    if (!p.is_integral()) return false;
  return true;
}

GraphClass zero_class(const OrbifoldGKMGraph& g, int degree, Coefficients domain) {
  return GraphClass{&g, degree, std::vector<Poly>(g.vertex_count(), Poly::zero(g.torus_rank())), domain};
}

GraphClass constant_class(const OrbifoldGKMGraph& g, const Poly& p, Coefficients domain) {
  int d = p.is_zero() ? 0 : *p.grade();
  return GraphClass{&g, d, std::vector<Poly>(g.vertex_count(), p), domain};
}

bool is_class(const GraphClass& f) {
  const OrbifoldGKMGraph& g = *f.graph;
  for (const Poly& p : f.values) {
    if (p.is_zero()) continue;
    auto grade = p.grade();
    if (!grade || *grade != f.degree) return false;
  }
  if (f.domain == Coefficients::Z && !f.vertexwise_integral()) return false;
  for (int d = 0; d < g.dart_count(); d += 2) {
    Poly diff = f.values[g.dart(d).origin] - f.values[g.dart(d).target];
    if (diff.is_zero()) continue;
    if (f.domain == Coefficients::Z) {
      LinearForm mod;
      mod.coeffs.reserve(g.torus_rank());
      for (const Int& c : g.alpha(d).scaled_integral()) mod.coeffs.push_back(Rat(c));
      if (!divides_linear(mod, diff)) return false;
    } else {
      if (!divide_linear_rational(g.alpha(d), diff)) return false;
    }
  }
  return true;
}

namespace {

// The homogeneous integer system for degree d: unknowns are the per-vertex
// monomial coefficients of f (degree d) followed by the per-edge quotient
// coefficients of g_e (degree d-1); equations say
// f_{i(e)} - f_{t(e)} = (rtilde_e alpha(e)) * g_e per monomial of degree d.
struct DegreeSystem {
  std::vector<Exponents> mons_d;
  std::vector<Exponents> mons_d1;
  int f_vars;
  int g_vars;
  IntMatrix constraints;
};

DegreeSystem build_system(const OrbifoldGKMGraph& g, int d) {
  DegreeSystem sys;
  sys.mons_d = monomials_of_degree(g.torus_rank(), d);
  sys.mons_d1 = monomials_of_degree(g.torus_rank(), d - 1);
  int md = static_cast<int>(sys.mons_d.size());
  int md1 = static_cast<int>(sys.mons_d1.size());
  int edges = g.edge_count();
  sys.f_vars = g.vertex_count() * md;
  sys.g_vars = edges * md1;
  std::map<Exponents, int, GrlexDesc> index_d;
  for (int i = 0; i < md; ++i) index_d[sys.mons_d[i]] = i;
  sys.constraints = IntMatrix(edges * md, sys.f_vars + sys.g_vars);
  for (int e = 0; e < edges; ++e) {
    int dart = 2 * e;
    int vi = g.dart(dart).origin, vt = g.dart(dart).target;
    std::vector<Int> mod = g.alpha(dart).scaled_integral();
    for (int m = 0; m < md; ++m) {
      int row = e * md + m;
      sys.constraints.at(row, vi * md + m) += 1;
      sys.constraints.at(row, vt * md + m) -= 1;
    }
    for (int j = 0; j < md1; ++j)
      for (int var = 0; var < g.torus_rank(); ++var) {
        if (mod[var] == 0) continue;
        Exponents target = sys.mons_d1[j];
        target[var] += 1;
        int row = e * md + index_d[target];
        sys.constraints.at(row, sys.f_vars + e * md1 + j) -= mod[var];
      }
  }
  return sys;
}

}  // namespace

GradedBasis basis(const OrbifoldGKMGraph& g, int d) {
  DegreeSystem sys = build_system(g, d);
  // right kernel of the constraint matrix = left kernel of its transpose
  IntMatrix ker = left_kernel(sys.constraints.transpose());
  IntMatrix proj(ker.rows(), sys.f_vars);
  for (int i = 0; i < ker.rows(); ++i)
    for (int j = 0; j < sys.f_vars; ++j) proj.at(i, j) = ker.at(i, j);
  GradedBasis out;
  out.degree = d;
  out.monomials = sys.mons_d;
  out.lattice = IntegerLattice::from_generators(sys.f_vars, proj);
  for (int i = 0; i < out.lattice.rank(); ++i)
    out.classes.push_back(vector_to_class(g, d, out.monomials, out.lattice.basis().row(i), Coefficients::Z));
  return out;
}

std::vector<Int> class_to_vector(const GraphClass& f, const std::vector<Exponents>& monomials) {
  if (!f.vertexwise_integral()) throw std::invalid_argument("class_to_vector: non-integral class");
  const OrbifoldGKMGraph& g = *f.graph;
  std::vector<Int> v(g.vertex_count() * monomials.size());
  for (int vert = 0; vert < g.vertex_count(); ++vert)
    for (size_t m = 0; m < monomials.size(); ++m)
      v[vert * monomials.size() + m] = f.values[vert].coeff(monomials[m]).get_num();
  return v;
}

GraphClass vector_to_class(const OrbifoldGKMGraph& g, int d, const std::vector<Exponents>& monomials,
                           const std::vector<Int>& v, Coefficients domain) {
  GraphClass f = zero_class(g, d, domain);
  for (int vert = 0; vert < g.vertex_count(); ++vert)
    for (size_t m = 0; m < monomials.size(); ++m) {
      const Int& c = v[vert * monomials.size() + m];
      if (c != 0) f.values[vert].add_term(monomials[m], Rat(c));
    }
  return f;
}

int rational_dimension(const OrbifoldGKMGraph& g, int d) {
  DegreeSystem sys = build_system(g, d);
  int rank = hnf(sys.constraints).rank;
  // solutions with f = 0 force g_e = 0 (the modulus is a nonzero form), so
  // the f-projection of the solution space has the full kernel dimension
  return sys.f_vars + sys.g_vars - rank;
}

std::vector<std::pair<int, int>> ordinary_ranks(const OrbifoldGKMGraph& g, int d_max) {
  std::vector<std::pair<int, int>> out;
  GradedBasis prev;
  for (int d = 0; d <= d_max; ++d) {
    GradedBasis cur = basis(g, d);
    if (d == 1)
      for (int i = 0; i < g.torus_rank(); ++i) {
        GraphClass c = constant_class(g, Poly::variable(g.torus_rank(), i), Coefficients::Z);
        if (!cur.lattice.contains(class_to_vector(c, cur.monomials)))
          throw std::logic_error("constant class e" + std::to_string(i + 1) +
                                 " is missing from the degree-1 basis span");
      }
    int dim = cur.lattice.rank();
    int image_rank = 0;
    if (d > 0 && prev.lattice.rank() > 0) {
      // degree-d part of the ideal generated by the constant classes e_i
      IntMatrix image(prev.lattice.rank() * g.torus_rank(),
                      static_cast<int>(cur.monomials.size()) * g.vertex_count());
      int row = 0;
      for (const GraphClass& b : prev.classes)
        for (int i = 0; i < g.torus_rank(); ++i) {
          GraphClass prod = b * constant_class(g, Poly::variable(g.torus_rank(), i), Coefficients::Z);
          image.set_row(row++, class_to_vector(prod, cur.monomials));
        }
      image_rank = hnf(image).rank;
    }
    out.emplace_back(2 * d, dim - image_rank);
    prev = std::move(cur);
  }
  return out;
}

}  // namespace gkm
