#include "gkm/facering.hpp"

#include <algorithm>
#include <sstream>

namespace gkm {

FacePolynomial FacePolynomial::variable(int face) {
  FacePolynomial p;
  p.terms_.emplace(FaceMonomial{face}, Int(1));
  return p;
}

FacePolynomial FacePolynomial::constant(const Int& c) {
  FacePolynomial p;
  if (c != 0) p.terms_.emplace(FaceMonomial{}, c);
  return p;
}

void FacePolynomial::add_term(FaceMonomial m, const Int& c) {
  if (c == 0) return;
  std::sort(m.begin(), m.end());
  auto [it, inserted] = terms_.emplace(std::move(m), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

FacePolynomial FacePolynomial::operator+(const FacePolynomial& o) const {
  FacePolynomial r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

FacePolynomial FacePolynomial::operator-(const FacePolynomial& o) const {
  FacePolynomial r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

FacePolynomial FacePolynomial::operator*(const FacePolynomial& o) const {
  FacePolynomial r;
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) {
      FaceMonomial m = m1;
      m.insert(m.end(), m2.begin(), m2.end());
      r.add_term(std::move(m), c1 * c2);
    }
  return r;
}

FacePolynomial FacePolynomial::scaled(const Int& c) const {
  FacePolynomial r;
  if (c == 0) return r;
  for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
  return r;
}

int monomial_degree(const FacePoset& poset, const FaceMonomial& m) {
  int n = poset.graph().valence();
  int d = 0;
  for (int f : m) d += 2 * (n - poset.face(f).dim);
  return d;
}

std::string monomial_key(const FacePoset& poset, const FaceMonomial& m) {
  if (m.empty()) return "1";
  std::ostringstream os;
  for (size_t i = 0; i < m.size();) {
    size_t j = i;
    while (j < m.size() && m[j] == m[i]) ++j;
    if (i > 0) os << "*";
    os << "x[" << poset.name(m[i]) << "]";
    if (j - i > 1) os << "^" << (j - i);
    i = j;
  }
  return os.str();
}

std::string face_poly_to_string(const FacePoset& poset, const FacePolynomial& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    Int a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    if (m.empty()) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << monomial_key(poset, m);
    }
  }
  return os.str();
}

FaceRing::FaceRing(const FacePoset& poset) : poset_(&poset) {
  const OrbifoldGKMGraph& g = poset.graph();
  thom_.reserve(poset.size());
  for (int f = 0; f < poset.size(); ++f) {
    const Face& face = poset.face(f);
    GraphClass t = zero_class(g, g.valence() - face.dim, Coefficients::Q);
    std::vector<char> in_face(g.dart_count() / 2, 0);
    for (int e : face.edges) in_face[e] = 1;
    for (int v : face.vertices) {
      Poly prod = Poly::constant(g.torus_rank(), 1);
      for (int d : g.out_darts(v))
        if (!in_face[d / 2]) prod = prod * g.alpha(d).to_poly();
      t.values[v] = prod;
    }
    thom_.push_back(std::move(t));
  }
}

GraphClass FaceRing::mu(const FacePolynomial& f) const {
  const OrbifoldGKMGraph& g = poset_->graph();
  int degree = 0;
  for (const auto& [m, c] : f.terms()) degree = std::max(degree, monomial_degree(*poset_, m) / 2);
  GraphClass out = zero_class(g, degree, Coefficients::Q);
  for (const auto& [m, c] : f.terms()) {
    GraphClass prod = constant_class(g, Poly::constant(g.torus_rank(), Rat(c)), Coefficients::Q);
    for (int face : m) prod = prod * thom_[face];
    for (int v = 0; v < g.vertex_count(); ++v) out.values[v] = out.values[v] + prod.values[v];
  }
  return out;
}

bool FaceRing::is_integral(const FacePolynomial& f) const { return mu(f).vertexwise_integral(); }

Int FaceRing::minimal_thom(int face) const {
  const GraphClass& t = thom_[face];
  Int l = 1;
  for (const Poly& p : t.values)
    for (const auto& [e, c] : p.terms()) l = lcm(l, Int(c.get_den()));
  return l;
}

FacePolynomial FaceRing::relation(int e, int f) const {
  FacePolynomial xe = e == poset_->top() ? FacePolynomial::constant(1) : FacePolynomial::variable(e);
  FacePolynomial xf = f == poset_->top() ? FacePolynomial::constant(1) : FacePolynomial::variable(f);
  FacePolynomial rel = xe * xf;
  std::vector<int> meet = poset_->meet_components(e, f);
  if (meet.empty()) return rel;  // x_empty = 0: the product itself
  int join = poset_->join(e, f);
  FacePolynomial sum;
  for (int gface : meet) {
    if (gface == poset_->top())
      sum = sum + FacePolynomial::constant(1);
    else
      sum = sum + FacePolynomial::variable(gface);
  }
  FacePolynomial xj = join == poset_->top() ? FacePolynomial::constant(1) : FacePolynomial::variable(join);
  return rel - xj * sum;
}

std::vector<FaceMonomial> FaceRing::monomials_of_degree(int two_d) const {
  // multisets over the non-top faces, total degree two_d, faces in poset order
  std::vector<FaceMonomial> out;
  FaceMonomial cur;
  int top = poset_->top();
  int count = poset_->size();
  auto rec = [&](auto&& self, int face, int rest) -> void {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    if (face >= count) return;
    if (face == top) {
      self(self, face + 1, rest);
      return;
    }
    int deg = monomial_degree(*poset_, {face});
    self(self, face + 1, rest);
    if (deg <= rest) {
      cur.push_back(face);
      self(self, face, rest - deg);
      cur.pop_back();
    }
  };
  rec(rec, 0, two_d);
  std::sort(out.begin(), out.end());
  return out;
}

IntegralityLattice FaceRing::integrality_lattice(int two_d) const {
  const OrbifoldGKMGraph& g = poset_->graph();
  if (two_d <= 0 || two_d % 2 != 0) throw std::invalid_argument("integrality_lattice: degree must be even positive");
  IntegralityLattice out;
  out.degree = two_d;
  out.monomials = monomials_of_degree(two_d);
  std::vector<Exponents> mons = gkm::monomials_of_degree(g.torus_rank(), two_d / 2);
  RatMatrix m(g.vertex_count() * static_cast<int>(mons.size()), static_cast<int>(out.monomials.size()));
  for (size_t col = 0; col < out.monomials.size(); ++col) {
    FacePolynomial x;
    x.add_term(out.monomials[col], 1);
    GraphClass img = mu(x);
    for (int v = 0; v < g.vertex_count(); ++v)
      for (size_t mi = 0; mi < mons.size(); ++mi)
        m.at(v * static_cast<int>(mons.size()) + static_cast<int>(mi), static_cast<int>(col)) =
            img.values[v].coeff(mons[mi]);
  }
  out.lattice = rational_preimage_lattice(m);
  return out;
}

bool FaceRing::relations_vanish() const {
  for (int e = 0; e < poset_->size(); ++e)
    for (int f = e; f < poset_->size(); ++f)
      if (!mu(relation(e, f)).is_zero()) return false;
  return true;
}

bool FaceRing::check_iso_degree(int d) const {
  if (!relations_vanish()) return false;
  const OrbifoldGKMGraph& g = poset_->graph();
  IntegralityLattice zl = integrality_lattice(2 * d);
  GradedBasis gb = basis(g, d);
  if (gb.lattice.rank() == 0) return zl.lattice.rank() == 0;
  IntMatrix coords(zl.lattice.rank(), gb.lattice.rank());
  for (int i = 0; i < zl.lattice.rank(); ++i) {
    FacePolynomial f;
    for (size_t col = 0; col < zl.monomials.size(); ++col)
      f.add_term(zl.monomials[col], zl.lattice.basis().at(i, static_cast<int>(col)));
    GraphClass img = mu(f);
    if (!img.vertexwise_integral()) return false;
    auto c = gb.lattice.coordinates(class_to_vector(img, gb.monomials));
    if (!c) return false;  // image escapes the cohomology lattice
    coords.set_row(i, *c);
  }
  // surjectivity degreewise: the coordinate rows must span all of Z^rank
  return hnf(coords).h == IntMatrix::identity(gb.lattice.rank());
}

Int lcm_bound(const FaceRing& ring, int face, const std::vector<Int>& det_by_vertex) {
  const FacePoset& poset = ring.poset();
  const Face& f = poset.face(face);
  if (f.dim != poset.graph().valence() - 1)
    throw std::invalid_argument("lcm_bound: only facets carry the determinant bound");
  Int l = 1;
  for (int v : f.vertices) l = lcm(l, det_by_vertex[v]);
  if (l <= 0) throw std::invalid_argument("lcm_bound: nonpositive determinant");
  FacePolynomial lx = FacePolynomial::variable(face).scaled(l);
  if (!ring.is_integral(lx)) throw std::logic_error("lcm_bound: l_F * x_F failed the integrality test");
  if (l % ring.minimal_thom(face) != 0) throw std::logic_error("lcm_bound: minimal multiplier does not divide l_F");
  return l;
}

}  // namespace gkm
