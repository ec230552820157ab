#include "gkm/graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace gkm {

OrbifoldGKMGraph::OrbifoldGKMGraph(int torus_rank, std::vector<std::string> vertex_names,
                                   const std::vector<EdgeSpec>& edges)
    : k_(torus_rank), names_(std::move(vertex_names)), out_(names_.size()) {
  for (const EdgeSpec& e : edges) {
    if (e.from < 0 || e.from >= vertex_count() || e.to < 0 || e.to >= vertex_count())
      throw std::invalid_argument("edge endpoint out of range");
    if (e.alpha_from.nvars() != k_ || e.alpha_to.nvars() != k_)
      throw std::invalid_argument("axial value arity != torus rank");
    int d = dart_count();
    darts_.push_back(Dart{d, e.from, e.to, e.alpha_from});
    darts_.push_back(Dart{d + 1, e.to, e.from, e.alpha_to});
    out_[e.from].push_back(d);
    out_[e.to].push_back(d + 1);
  }
  n_ = names_.empty() ? 0 : static_cast<int>(out_[0].size());
}

int OrbifoldGKMGraph::vertex_index(const std::string& name) const {
  for (int v = 0; v < vertex_count(); ++v)
    if (names_[v] == name) return v;
  throw std::invalid_argument("unknown vertex: " + name);
}

Int rtilde(const OrbifoldGKMGraph& g, int dart) {
  const LinearForm& a = g.alpha(dart);
  if (a.is_zero()) throw std::domain_error("rtilde: zero axial value");
  return a.denominator_lcm();
}

ValidationReport validate(const OrbifoldGKMGraph& g, GraphMode mode) {
  ValidationReport rep;
  auto issue = [&rep](const std::string& s) { rep.issues.push_back(s); };
  if (g.vertex_count() == 0) {
    issue("graph has no vertices");
    return rep;
  }
  if (mode == GraphMode::Torus && g.torus_rank() != g.valence())
    issue("torus mode requires torus rank == valence, got k=" + std::to_string(g.torus_rank()) +
          " n=" + std::to_string(g.valence()));
  for (int v = 0; v < g.vertex_count(); ++v)
    if (static_cast<int>(g.out_darts(v).size()) != g.valence())
      issue("vertex " + g.vertex_name(v) + " has valence " + std::to_string(g.out_darts(v).size()) +
            ", expected " + std::to_string(g.valence()));
  for (int d = 0; d < g.dart_count(); d += 2) {
    const LinearForm& a = g.alpha(d);
    const LinearForm& b = g.alpha(d + 1);
    if (a.is_zero() || b.is_zero()) {
      issue("zero axial value on edge " + g.vertex_name(g.dart(d).origin) + "-" + g.vertex_name(g.dart(d).target));
      continue;
    }
    if (!parallel(a, b))
      issue("axial values of edge " + g.vertex_name(g.dart(d).origin) + "-" + g.vertex_name(g.dart(d).target) +
            " are not parallel, no r_e exists");
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    const auto& out = g.out_darts(v);
    for (size_t i = 0; i < out.size(); ++i)
      for (size_t j = i + 1; j < out.size(); ++j) {
        const LinearForm& a = g.alpha(out[i]);
        const LinearForm& b = g.alpha(out[j]);
        if (!a.is_zero() && !b.is_zero() && parallel(a, b))
          issue("axial values at vertex " + g.vertex_name(v) + " are pairwise dependent: " +
                a.to_poly().to_string() + " and " + b.to_poly().to_string());
      }
    if (mode == GraphMode::Torus && g.torus_rank() == g.valence()) {
      // full independence: the n x k coefficient matrix has rank n
      IntMatrix m(static_cast<int>(out.size()), g.torus_rank());
      bool zero = false;
      for (size_t i = 0; i < out.size(); ++i) {
        const LinearForm& a = g.alpha(out[i]);
        if (a.is_zero()) zero = true;
        Int r = a.denominator_lcm();
        for (int c = 0; c < g.torus_rank(); ++c) {
          Rat s = a.coeffs[c] * Rat(r);
          m.at(static_cast<int>(i), c) = s.get_num();
        }
      }
      if (!zero && hnf(m).rank < static_cast<int>(out.size()))
        issue("axial values at vertex " + g.vertex_name(v) + " are not linearly independent");
    }
  }
  if (mode == GraphMode::Torus) {
    // connectivity: the face machinery takes F^(n) = {whole graph}
    std::vector<char> seen(g.vertex_count(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int d : g.out_darts(v)) {
        int w = g.dart(d).target;
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    for (int v = 0; v < g.vertex_count(); ++v)
      if (!seen[v]) {
        issue("graph is not connected");
        break;
      }
  }
  return rep;
}

int Connection::slot(const OrbifoldGKMGraph& g, int e, int eprime) const {
  const auto& out = g.out_darts(g.dart(e).origin);
  for (size_t i = 0; i < out.size(); ++i)
    if (out[i] == eprime) return static_cast<int>(i);
  throw std::invalid_argument("dart is not outgoing at the origin of e");
}

int Connection::image(const OrbifoldGKMGraph& g, int e, int eprime) const {
  return theta_[e][slot(g, e, eprime)];
}

const Int& Connection::witness(const OrbifoldGKMGraph& g, int e, int eprime) const {
  return c_[e][slot(g, e, eprime)];
}

namespace {

// Is c in the rational span of a and b?
bool in_span2(const LinearForm& a, const LinearForm& b, const LinearForm& c) {
  int k = a.nvars();
  RatMatrix m(3, k);
  for (int j = 0; j < k; ++j) {
    m.at(0, j) = a.coeffs[j];
    m.at(1, j) = b.coeffs[j];
    m.at(2, j) = c.coeffs[j];
  }
  Int d = m.denominator_lcm();
  IntMatrix mi(3, k);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < k; ++j) {
      Rat s = m.at(i, j) * Rat(d);
      mi.at(i, j) = s.get_num();
    }
  IntMatrix top(2, k);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < k; ++j) top.at(i, j) = mi.at(i, j);
  return hnf(mi).rank == hnf(top).rank;
}

}  // namespace

Connection infer_connection(const OrbifoldGKMGraph& g) {
  std::vector<std::vector<int>> theta(g.dart_count());
  std::vector<std::vector<Int>> wit(g.dart_count());
  for (int e = 0; e < g.dart_count(); ++e) {
    int p = g.dart(e).origin, q = g.dart(e).target;
    const auto& outp = g.out_darts(p);
    const auto& outq = g.out_darts(q);
    theta[e].resize(outp.size());
    wit[e].resize(outp.size());
    for (size_t s = 0; s < outp.size(); ++s) {
      int eprime = outp[s];
      int image;
      if (eprime == e) {
        image = OrbifoldGKMGraph::reversal(e);
      } else {
        int found = -1;
        for (int cand : outq) {
          if (cand == OrbifoldGKMGraph::reversal(e)) continue;
          if (!in_span2(g.alpha(e), g.alpha(eprime), g.alpha(cand))) continue;
          if (found >= 0)
            throw ConnectionError("ambiguous connection match for dart at vertex " + g.vertex_name(p));
          found = cand;
        }
        if (found < 0)
          throw ConnectionError("no connection match for dart at vertex " + g.vertex_name(p) +
                                " along edge to " + g.vertex_name(q));
        image = found;
      }
      theta[e][s] = image;
      // minimal positive witness c with c*(alpha(image) - alpha(e')) an
      // integer multiple of rtilde_e * alpha(e)
      LinearForm diff;
      diff.coeffs.resize(g.torus_rank());
      for (int j = 0; j < g.torus_rank(); ++j)
        diff.coeffs[j] = g.alpha(image).coeffs[j] - g.alpha(eprime).coeffs[j];
      if (diff.is_zero()) {
        wit[e][s] = 1;
      } else {
        if (!parallel(diff, g.alpha(e)))
          throw ConnectionError("connection congruence fails at vertex " + g.vertex_name(p) +
                                ": difference not parallel to alpha(e)");
        // diff = t * (rtilde_e * alpha(e)); the minimal c is the denominator of t
        std::vector<Int> mod = g.alpha(e).scaled_integral();
        int piv = 0;
        while (mod[piv] == 0) ++piv;
        Rat t = diff.coeffs[piv] / Rat(mod[piv]);
        wit[e][s] = Int(t.get_den());
      }
    }
    std::set<int> images(theta[e].begin(), theta[e].end());
    if (images.size() != theta[e].size())
      throw ConnectionError("connection is not a bijection along an edge at vertex " + g.vertex_name(p));
  }
  return Connection(std::move(theta), std::move(wit));
}

FacePoset::FacePoset(const OrbifoldGKMGraph* g, std::vector<Face> faces, int skipped)
    : g_(g), faces_(std::move(faces)), skipped_(skipped) {
  std::sort(faces_.begin(), faces_.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    if (a.vertices != b.vertices) return a.vertices < b.vertices;
    return a.edges < b.edges;
  });
  top_ = -1;
  names_.resize(faces_.size());
  std::vector<int> per_dim(g_->valence() + 1, 0);
  for (int i = 0; i < size(); ++i) {
    const Face& f = faces_[i];
    std::ostringstream nm;
    if (f.dim == 0)
      nm << "v:" << g_->vertex_name(f.vertices[0]);
    else if (f.dim == g_->valence()) {
      nm << "G";
      top_ = i;
    } else if (f.dim == 1)
      nm << "e" << per_dim[1];
    else
      nm << "f" << f.dim << "_" << per_dim[f.dim];
    ++per_dim[f.dim];
    names_[i] = nm.str();
  }
}

std::vector<int> FacePoset::faces_of_dim(int d) const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (faces_[i].dim == d) out.push_back(i);
  return out;
}

std::vector<int> FacePoset::face_counts() const {
  std::vector<int> counts(g_->valence() + 1, 0);
  for (const Face& f : faces_) ++counts[f.dim];
  return counts;
}

bool FacePoset::contains(int small, int big) const {
  const Face& a = faces_[small];
  const Face& b = faces_[big];
  return std::includes(b.vertices.begin(), b.vertices.end(), a.vertices.begin(), a.vertices.end()) &&
         std::includes(b.edges.begin(), b.edges.end(), a.edges.begin(), a.edges.end());
}

std::optional<int> FacePoset::find(const std::vector<int>& vertices, const std::vector<int>& edges) const {
  for (int i = 0; i < size(); ++i)
    if (faces_[i].vertices == vertices && faces_[i].edges == edges) return i;
  return std::nullopt;
}

int FacePoset::vertex_face(int v) const {
  auto f = find({v}, {});
  if (!f) throw std::logic_error("vertex face missing from poset");
  return *f;
}

int FacePoset::join(int a, int b) const {
  std::vector<int> upper;
  for (int i = 0; i < size(); ++i)
    if (contains(a, i) && contains(b, i)) upper.push_back(i);
  for (int u : upper) {
    bool minimum = true;
    for (int v : upper)
      if (!contains(u, v)) {
        minimum = false;
        break;
      }
    if (minimum) return u;
  }
  throw std::domain_error("face join: common upper bounds have no minimum");
}

std::vector<int> FacePoset::meet_components(int a, int b) const {
  const Face& fa = faces_[a];
  const Face& fb = faces_[b];
  std::vector<int> verts;
  std::set_intersection(fa.vertices.begin(), fa.vertices.end(), fb.vertices.begin(), fb.vertices.end(),
                        std::back_inserter(verts));
  std::vector<int> edges;
  std::set_intersection(fa.edges.begin(), fa.edges.end(), fb.edges.begin(), fb.edges.end(),
                        std::back_inserter(edges));
  if (verts.empty()) return {};
  std::map<int, int> comp;
  for (int v : verts) comp[v] = v;
  auto root = [&](int v) {
    while (comp[v] != v) v = comp[v] = comp[comp[v]];
    return v;
  };
  for (int e : edges) {
    int u = g_->dart(2 * e).origin, w = g_->dart(2 * e).target;
    comp[root(u)] = root(w);
  }
  std::map<int, std::pair<std::vector<int>, std::vector<int>>> groups;
  for (int v : verts) groups[root(v)].first.push_back(v);
  for (int e : edges) groups[root(g_->dart(2 * e).origin)].second.push_back(e);
  std::vector<int> out;
  for (auto& [r, vs_es] : groups) {
    std::sort(vs_es.first.begin(), vs_es.first.end());
    std::sort(vs_es.second.begin(), vs_es.second.end());
    auto f = find(vs_es.first, vs_es.second);
    if (!f) throw std::domain_error("meet component is not a face of the poset");
    out.push_back(*f);
  }
  std::sort(out.begin(), out.end());
  return out;
}

OrbifoldGKMGraph face_subgraph(const FacePoset& poset, int face) {
  const OrbifoldGKMGraph& g = poset.graph();
  const Face& f = poset.face(face);
  std::vector<std::string> names;
  std::map<int, int> index;
  for (int v : f.vertices) {
    index[v] = static_cast<int>(names.size());
    names.push_back(g.vertex_name(v));
  }
  std::vector<EdgeSpec> edges;
  for (int e : f.edges) {
    const Dart& d = g.dart(2 * e);
    edges.push_back(EdgeSpec{index.at(d.origin), index.at(d.target), d.alpha, g.alpha(2 * e + 1)});
  }
  return OrbifoldGKMGraph(g.torus_rank(), std::move(names), edges);
}

FacePoset enumerate_faces(const OrbifoldGKMGraph& g, const Connection& theta, int valence_cap) {
  int n = g.valence();
  if (n > valence_cap)
    throw std::invalid_argument("enumerate_faces: valence " + std::to_string(n) + " exceeds cap " +
                                std::to_string(valence_cap));
  std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
  std::vector<Face> faces;
  int skipped = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    faces.push_back(Face{{v}, {}, 0});
    seen.insert({{v}, {}});
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    const auto& out = g.out_darts(v);
    int deg = static_cast<int>(out.size());
    for (unsigned mask = 1; mask < (1u << deg); ++mask) {
      int d = __builtin_popcount(mask);
      std::set<int> darts;
      for (int i = 0; i < deg; ++i)
        if (mask & (1u << i)) darts.insert(out[i]);
      bool changed = true;
      while (changed) {
        changed = false;
        std::vector<int> snapshot(darts.begin(), darts.end());
        for (int e : snapshot)
          for (int s : snapshot) {
            if (g.dart(s).origin != g.dart(e).origin) continue;
            int im = theta.image(g, e, s);
            if (darts.insert(im).second) changed = true;
          }
      }
      std::vector<int> verts, edges;
      for (int e : darts) {
        verts.push_back(g.dart(e).origin);
        edges.push_back(e / 2);
      }
      std::sort(verts.begin(), verts.end());
      verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
      std::sort(edges.begin(), edges.end());
      edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
      bool ok = true;
      for (int w : verts) {
        int count = 0;
        for (int e : g.out_darts(w))
          if (darts.count(e)) ++count;
        if (count != d) {
          ok = false;
          break;
        }
      }
      if (!ok) {
        ++skipped;
        continue;
      }
      if (seen.insert({verts, edges}).second) faces.push_back(Face{verts, edges, d});
    }
  }
  return FacePoset(&g, std::move(faces), skipped);
}

}  // namespace gkm
