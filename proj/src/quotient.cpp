#include "gkm/quotient.hpp"

#include <algorithm>
#include <set>

namespace gkm {

CharacteristicPair::CharacteristicPair(int n, std::vector<Facet> facets, std::vector<std::vector<int>> vertices,
                                       std::vector<std::pair<std::vector<int>, std::array<int, 2>>> edges)
    : n_(n), facets_(std::move(facets)), vertices_(std::move(vertices)), edges_(std::move(edges)) {
  for (auto& v : vertices_) std::sort(v.begin(), v.end());
  for (auto& e : edges_) std::sort(e.first.begin(), e.first.end());
}

int CharacteristicPair::facet_index(const std::string& name) const {
  for (int i = 0; i < facet_count(); ++i)
    if (facets_[i].name == name) return i;
  throw std::invalid_argument("unknown facet: " + name);
}

ValidationReport CharacteristicPair::validate() const {
  ValidationReport rep;
  auto issue = [&rep](const std::string& s) { rep.issues.push_back(s); };
  std::set<std::string> names;
  for (const Facet& f : facets_) {
    if (!names.insert(f.name).second) issue("duplicate facet name " + f.name);
    if (static_cast<int>(f.lambda.size()) != n_) issue("facet " + f.name + " has a lambda of wrong length");
  }
  for (int v = 0; v < vertex_count(); ++v) {
    if (static_cast<int>(vertices_[v].size()) != n_) {
      issue("vertex " + std::to_string(v) + " is not an intersection of n facets");
      continue;
    }
    IntMatrix m(n_, n_);
    for (int c = 0; c < n_; ++c)
      for (int r = 0; r < n_; ++r) m.at(r, c) = facets_[vertices_[v][c]].lambda[r];
    if (m.det() == 0) issue("facet vectors at vertex " + std::to_string(v) + " are linearly dependent");
  }
  for (int e = 0; e < edge_count(); ++e) {
    if (static_cast<int>(edges_[e].first.size()) != n_ - 1)
      issue("edge " + std::to_string(e) + " is not an intersection of n-1 facets");
    for (int end : edges_[e].second) {
      if (end < 0 || end >= vertex_count()) {
        issue("edge " + std::to_string(e) + " has an endpoint out of range");
        continue;
      }
      if (!std::includes(vertices_[end].begin(), vertices_[end].end(), edges_[e].first.begin(),
                         edges_[e].first.end()))
        issue("edge " + std::to_string(e) + " facets are not contained in endpoint " + std::to_string(end));
    }
    if (edges_[e].second[0] == edges_[e].second[1]) issue("edge " + std::to_string(e) + " is a loop");
  }
  return rep;
}

CharacteristicPair CharacteristicPair::simplex(std::vector<Facet> facets) {
  int n = static_cast<int>(facets.size()) - 1;
  if (n < 1) throw std::invalid_argument("simplex pair needs at least 2 facets");
  std::vector<std::vector<int>> vertices;
  std::vector<int> all(n + 1);
  for (int i = 0; i <= n; ++i) all[i] = i;
  // vertices: drop one facet; edges: drop two
  for (int skip = 0; skip <= n; ++skip) {
    std::vector<int> v;
    for (int i = 0; i <= n; ++i)
      if (i != skip) v.push_back(i);
    vertices.push_back(v);
  }
  std::vector<std::pair<std::vector<int>, std::array<int, 2>>> edges;
  for (int s1 = 0; s1 <= n; ++s1)
    for (int s2 = s1 + 1; s2 <= n; ++s2) {
      std::vector<int> e;
      for (int i = 0; i <= n; ++i)
        if (i != s1 && i != s2) e.push_back(i);
      edges.push_back({e, {s1, s2}});  // endpoint "skip s1" contains facet s2 and vice versa
    }
  return CharacteristicPair(n, std::move(facets), std::move(vertices), std::move(edges));
}

DerivedGraph derive_graph(const CharacteristicPair& p) {
  ValidationReport rep = p.validate();
  if (!rep.valid()) throw std::invalid_argument("derive_graph: invalid pair: " + rep.issues.front());
  int n = p.n();
  std::vector<IntMatrix> lambda_v;
  std::vector<Int> det_v;
  std::vector<RatMatrix> inv_v;
  for (int v = 0; v < p.vertex_count(); ++v) {
    IntMatrix m(n, n);
    for (int c = 0; c < n; ++c)
      for (int r = 0; r < n; ++r) m.at(r, c) = p.facet(p.vertex_facets(v)[c]).lambda[r];
    det_v.push_back(abs(m.det()));
    inv_v.push_back(RatMatrix::from_int(m).inverse());
    lambda_v.push_back(std::move(m));
  }
  std::vector<std::string> names;
  for (int v = 0; v < p.vertex_count(); ++v) {
    std::string nm;
    for (int f : p.vertex_facets(v)) {
      if (!nm.empty()) nm += "^";
      nm += p.facet(f).name;
    }
    names.push_back(nm);
  }
  std::vector<EdgeSpec> edges;
  for (int e = 0; e < p.edge_count(); ++e) {
    auto ends = p.edge_ends(e);
    auto alpha_at = [&](int v) {
      // the facet of v the edge leaves through
      int departed = -1;
      for (int f : p.vertex_facets(v))
        if (!std::binary_search(p.edge_facets(e).begin(), p.edge_facets(e).end(), f)) departed = f;
      int pos = static_cast<int>(std::lower_bound(p.vertex_facets(v).begin(), p.vertex_facets(v).end(), departed) -
                                 p.vertex_facets(v).begin());
      LinearForm a;
      a.coeffs.resize(n);
      for (int j = 0; j < n; ++j) a.coeffs[j] = inv_v[v].at(pos, j);
      return a;
    };
    edges.push_back(EdgeSpec{ends[0], ends[1], alpha_at(ends[0]), alpha_at(ends[1])});
  }
  DerivedGraph out{OrbifoldGKMGraph(n, std::move(names), edges), std::move(lambda_v), std::move(det_v)};
  ValidationReport graph_rep = validate(out.graph, GraphMode::Torus);
  if (!graph_rep.valid())
    throw std::logic_error("derive_graph: derived graph failed validation: " + graph_rep.issues.front());
  return out;
}

int facet_face(const CharacteristicPair& p, const FacePoset& poset, int j) {
  std::vector<int> verts;
  for (int v = 0; v < p.vertex_count(); ++v)
    if (std::binary_search(p.vertex_facets(v).begin(), p.vertex_facets(v).end(), j)) verts.push_back(v);
  std::vector<int> edges;
  for (int e = 0; e < p.edge_count(); ++e)
    if (std::binary_search(p.edge_facets(e).begin(), p.edge_facets(e).end(), j)) edges.push_back(e);
  std::sort(verts.begin(), verts.end());
  std::sort(edges.begin(), edges.end());
  auto f = poset.find(verts, edges);
  if (!f) throw std::logic_error("facet " + p.facet(j).name + " does not appear as a face of the derived graph");
  return *f;
}

void label_facet_faces(const CharacteristicPair& p, FacePoset& poset) {
  for (int j = 0; j < p.facet_count(); ++j) poset.set_name(facet_face(p, poset, j), p.facet(j).name);
}

std::vector<FacePolynomial> linear_global_elements(const CharacteristicPair& p, const FaceRing& ring) {
  const FacePoset& poset = ring.poset();
  std::vector<int> faces(p.facet_count());
  for (int j = 0; j < p.facet_count(); ++j) faces[j] = facet_face(p, poset, j);
  std::vector<FacePolynomial> out;
  for (int i = 0; i < p.n(); ++i) {
    FacePolynomial f;
    for (int j = 0; j < p.facet_count(); ++j) f.add_term({faces[j]}, p.facet(j).lambda[i]);
    GraphClass img = ring.mu(f);
    if (!img.vertexwise_integral())
      throw std::logic_error("linear global element is not integral");
    const OrbifoldGKMGraph& g = poset.graph();
    GraphClass expect = constant_class(g, Poly::variable(g.torus_rank(), i), Coefficients::Q);
    for (int v = 0; v < g.vertex_count(); ++v)
      if (!(img.values[v] - expect.values[v]).is_zero())
        throw std::logic_error("linear global element does not restrict to the constant class");
    out.push_back(std::move(f));
  }
  return out;
}

PolygonPair::PolygonPair(std::vector<std::array<Int, 2>> lambda) : lambda_(std::move(lambda)) {
  if (m() < 2) throw std::invalid_argument("polygon needs at least 2 facets");
  for (int k = 1; k <= m(); ++k) {
    const auto& a = lambda_[mod(k)];
    const auto& b = lambda_[mod(k + 1)];
    d_.push_back(a[0] * b[1] - a[1] * b[0]);
    if (d_.back() == 0)
      throw std::invalid_argument("adjacent facet vectors " + std::to_string(k) + "," +
                                  std::to_string(k + 1) + " are dependent (D_k = 0)");
  }
}

IntMatrix PolygonPair::lambda_matrix(int k) const {
  IntMatrix m2(2, 2);
  m2.at(0, 0) = lambda(k)[0];
  m2.at(1, 0) = lambda(k)[1];
  m2.at(0, 1) = lambda(k + 1)[0];
  m2.at(1, 1) = lambda(k + 1)[1];
  return m2;
}

CharacteristicPair PolygonPair::to_characteristic_pair() const {
  std::vector<Facet> facets;
  for (int k = 1; k <= m(); ++k)
    facets.push_back(Facet{"F" + std::to_string(k), {lambda(k)[0], lambda(k)[1]}});
  // vertex v_k = F_k cap F_{k+1}; facet F_k is the edge from v_{k-1} to v_k
  std::vector<std::vector<int>> vertices;
  for (int k = 1; k <= m(); ++k) vertices.push_back({mod(k), mod(k + 1)});
  std::vector<std::pair<std::vector<int>, std::array<int, 2>>> edges;
  for (int k = 1; k <= m(); ++k) edges.push_back({{mod(k)}, {mod(k - 1), mod(k)}});
  return CharacteristicPair(2, std::move(facets), std::move(vertices), std::move(edges));
}

PolygonGcd polygon_gcd_check(const PolygonPair& p) {
  PolygonGcd out;
  Int g = 0;
  for (int k = 1; k <= p.m(); ++k) {
    out.d.push_back(p.d(k));
    g = gcd(g, p.d(k));
  }
  out.g = g;
  out.vanishing_odd_cohomology = (g == 1);
  return out;
}

IntegerLattice polygon_Lk(const PolygonPair& p, int n, int k) {
  if (n < 1) throw std::invalid_argument("polygon_Lk: n must be >= 1");
  if (k < 1 || k > p.m()) throw std::invalid_argument("polygon_Lk: facet index out of range");
  int nm = n * p.m();
  RatMatrix sym = sym_power_matrix(n, RatMatrix::from_int(p.lambda_matrix(k)));
  std::vector<int> cols(n + 1);
  for (int j = 0; j <= n; ++j) cols[j] = ((k - 1) * n + j) % nm;
  std::vector<char> touched(nm, 0);
  for (int c : cols) touched[c] = 1;
  int free_count = nm - static_cast<int>(cols.size());
  IntMatrix gens(n + 1 + free_count, nm);
  for (int r = 0; r <= n; ++r)
    for (int j = 0; j <= n; ++j) {
      const Rat& v = sym.at(r, j);
      if (v.get_den() != 1) throw std::logic_error("symmetric power of an integer matrix must be integral");
      gens.at(r, cols[j]) = v.get_num();
    }
  int row = n + 1;
  for (int j = 0; j < nm; ++j)
    if (!touched[j]) gens.at(row++, j) = 1;
  return IntegerLattice::from_generators(nm, gens);
}

IntegerLattice polygon_generators(const PolygonPair& p, int n) {
  IntegerLattice acc = polygon_Lk(p, n, 1);
  for (int k = 2; k <= p.m(); ++k) acc = lattice_intersection(acc, polygon_Lk(p, n, k));
  return acc;
}

FaceMonomial polygon_coordinate_monomial(const PolygonPair& p, int n, int coordinate,
                                         const std::vector<int>& facet_faces) {
  int i = coordinate / n;       // facet index, 0-based
  int alpha = coordinate % n;   // power of the successor facet
  FaceMonomial m;
  for (int c = 0; c < n - alpha; ++c) m.push_back(facet_faces[i]);
  for (int c = 0; c < alpha; ++c) m.push_back(facet_faces[(i + 1) % p.m()]);
  std::sort(m.begin(), m.end());
  return m;
}

}  // namespace gkm
