#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gkm/poly.hpp"

// Orbifold GKM-graph / orbifold torus graph data model: a multigraph with
// darts (oriented edges), a rational axial function, the uniquely determined
// connection in the torus case, and the face poset.

namespace gkm {

// Darts come in reversal pairs (2i, 2i+1); edge i = darts {2i, 2i+1}.
struct Dart {
  int id;
  int origin;
  int target;
  LinearForm alpha;
};

struct EdgeSpec {
  int from;
  int to;
  LinearForm alpha_from;  // axial value of the dart from -> to
  LinearForm alpha_to;    // axial value of the reversed dart
};

class OrbifoldGKMGraph {
 public:
  OrbifoldGKMGraph(int torus_rank, std::vector<std::string> vertex_names, const std::vector<EdgeSpec>& edges);

  int torus_rank() const { return k_; }
  // Common valence; graphs with non-uniform valence report it via validate.
  int valence() const { return n_; }
  int vertex_count() const { return static_cast<int>(names_.size()); }
  int dart_count() const { return static_cast<int>(darts_.size()); }
  int edge_count() const { return dart_count() / 2; }
  const std::string& vertex_name(int v) const { return names_[v]; }
  const std::vector<std::string>& vertex_names() const { return names_; }
  const Dart& dart(int d) const { return darts_[d]; }
  static int reversal(int d) { return d ^ 1; }
  const std::vector<int>& out_darts(int v) const { return out_[v]; }
  const LinearForm& alpha(int d) const { return darts_[d].alpha; }
  int vertex_index(const std::string& name) const;

 private:
  int k_;
  int n_;
  std::vector<std::string> names_;
  std::vector<Dart> darts_;
  std::vector<std::vector<int>> out_;
};

// Least positive integer r with r*alpha(e) integral; the modulus scale of the
// graph cohomology congruence. Throws std::domain_error on a zero axial value.
Int rtilde(const OrbifoldGKMGraph& g, int dart);

enum class GraphMode { Gkm, Torus };

struct ValidationReport {
  std::vector<std::string> issues;
  bool valid() const { return issues.empty(); }
};

// Checks Def. conditions: uniform valence, pairwise (GKM) or full (torus)
// linear independence of axial values at every vertex, nonzero axial values,
// and integral parallelism of each dart with its reversal. Torus mode also
// requires torus_rank == valence and a connected graph.
ValidationReport validate(const OrbifoldGKMGraph& g, GraphMode mode);

struct ConnectionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// theta[e] maps out_darts(origin(e)) positionally to darts at target(e);
// c[e] holds the minimal positive congruence witnesses c_{e,e'}.
class Connection {
 public:
  Connection(std::vector<std::vector<int>> theta, std::vector<std::vector<Int>> c)
      : theta_(std::move(theta)), c_(std::move(c)) {}
  // Image of dart eprime (at origin of e) under theta_e.
  int image(const OrbifoldGKMGraph& g, int e, int eprime) const;
  const Int& witness(const OrbifoldGKMGraph& g, int e, int eprime) const;

 private:
  int slot(const OrbifoldGKMGraph& g, int e, int eprime) const;
  std::vector<std::vector<int>> theta_;
  std::vector<std::vector<Int>> c_;
};

// The unique connection of a torus graph: theta_e(e) = ebar, and theta_e(e')
// is the one dart at t(e) whose axial value lies in the span of alpha(e) and
// alpha(e'). Throws ConnectionError (no match / ambiguous match / congruence
// failure) when the graph admits none.
Connection infer_connection(const OrbifoldGKMGraph& g);

// Connection-invariant subgraph; identified by its vertex and edge sets.
struct Face {
  std::vector<int> vertices;  // sorted
  std::vector<int> edges;     // sorted edge ids (dart/2)
  int dim;
  bool operator==(const Face& o) const = default;
};

class FacePoset {
 public:
  FacePoset(const OrbifoldGKMGraph* g, std::vector<Face> faces, int skipped);

  const OrbifoldGKMGraph& graph() const { return *g_; }
  int size() const { return static_cast<int>(faces_.size()); }
  const Face& face(int i) const { return faces_[i]; }
  const std::string& name(int i) const { return names_[i]; }
  void set_name(int i, const std::string& name) { names_[i] = name; }
  int top() const { return top_; }
  int skipped_nonfaces() const { return skipped_; }

  std::vector<int> faces_of_dim(int d) const;
  std::vector<int> face_counts() const;  // per dimension 0..n
  // Subgraph containment (vertex and edge inclusion).
  bool contains(int small, int big) const;
  std::optional<int> find(const std::vector<int>& vertices, const std::vector<int>& edges) const;
  int vertex_face(int v) const;

  // Minimal face containing both; throws std::domain_error when the set of
  // common upper bounds has no minimum.
  int join(int a, int b) const;
  // Connected components of the intersection subgraph, each located in the
  // poset; empty when the faces are disjoint.
  std::vector<int> meet_components(int a, int b) const;

 private:
  const OrbifoldGKMGraph* g_;
  std::vector<Face> faces_;
  std::vector<std::string> names_;
  int top_;
  int skipped_;
};

// All faces of every dimension 0..n: grow the minimal connection-closed
// subgraph from each (vertex, dart-subset) seed, keep the growths of uniform
// valence, deduplicate. The valence cap guards the 2^n seed enumeration.
FacePoset enumerate_faces(const OrbifoldGKMGraph& g, const Connection& theta, int valence_cap = 8);

// The face as a labelled graph of its own, with the restricted axial function.
OrbifoldGKMGraph face_subgraph(const FacePoset& poset, int face);

}  // namespace gkm
