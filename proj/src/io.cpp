#include "gkm/io.hpp"

namespace gkm {
namespace io {

namespace {

long to_long_checked(const Int& v, const char* what) {
  if (!v.fits_slong_p()) throw std::domain_error(std::string("value too large for JSON: ") + what);
  return v.get_si();
}

Json alpha_to_json(const LinearForm& a) {
  Json arr = Json::array();
  for (const Rat& c : a.coeffs) arr.push_back(rat_to_string(c));
  return arr;
}

LinearForm alpha_from_json(const Json& arr) {
  if (!arr.is_array()) throw std::invalid_argument("axial value must be an array of rational strings");
  LinearForm a;
  for (const Json& c : arr) {
    if (c.is_string())
      a.coeffs.push_back(rat_from_string(c.get<std::string>()));
    else if (c.is_number_integer())
      a.coeffs.push_back(Rat(c.get<long>()));
    else
      throw std::invalid_argument("axial coordinate must be a rational string or integer");
  }
  return a;
}

}  // namespace

InputKind classify(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("input must be a JSON object");
  if (j.contains("polygon")) return InputKind::Polygon;
  if (j.contains("facets")) return InputKind::Pair;
  if (j.contains("torus_rank") && j.contains("edges")) return InputKind::Graph;
  throw std::invalid_argument("input is neither a graph, a characteristic pair, nor a polygon");
}

Json graph_to_json(const OrbifoldGKMGraph& g) {
  Json j;
  j["torus_rank"] = g.torus_rank();
  Json verts = Json::array();
  for (const std::string& v : g.vertex_names()) verts.push_back(v);
  j["vertices"] = verts;
  Json edges = Json::array();
  for (int d = 0; d < g.dart_count(); d += 2) {
    Json e;
    e["from"] = g.vertex_name(g.dart(d).origin);
    e["to"] = g.vertex_name(g.dart(d).target);
    e["alpha_from"] = alpha_to_json(g.alpha(d));
    e["alpha_to"] = alpha_to_json(g.alpha(d + 1));
    edges.push_back(e);
  }
  j["edges"] = edges;
  return j;
}

OrbifoldGKMGraph graph_from_json(const Json& j) {
  if (!j.contains("torus_rank") || !j.contains("vertices") || !j.contains("edges"))
    throw std::invalid_argument("graph JSON needs torus_rank, vertices and edges");
  int k = j["torus_rank"].get<int>();
  std::vector<std::string> names;
  for (const Json& v : j["vertices"]) names.push_back(v.get<std::string>());
  auto index = [&names](const std::string& name) {
    for (size_t i = 0; i < names.size(); ++i)
      if (names[i] == name) return static_cast<int>(i);
    throw std::invalid_argument("edge endpoint is not a listed vertex: " + name);
  };
  std::vector<EdgeSpec> edges;
  for (const Json& e : j["edges"])
    edges.push_back(EdgeSpec{index(e.at("from").get<std::string>()), index(e.at("to").get<std::string>()),
                             alpha_from_json(e.at("alpha_from")), alpha_from_json(e.at("alpha_to"))});
  return OrbifoldGKMGraph(k, std::move(names), edges);
}

Json pair_to_json(const CharacteristicPair& p) {
  Json j;
  j["n"] = p.n();
  Json facets = Json::array();
  for (int i = 0; i < p.facet_count(); ++i) {
    Json f;
    f["name"] = p.facet(i).name;
    Json lambda = Json::array();
    for (const Int& x : p.facet(i).lambda) lambda.push_back(to_long_checked(x, "lambda"));
    f["lambda"] = lambda;
    facets.push_back(f);
  }
  j["facets"] = facets;
  Json verts = Json::array();
  for (int v = 0; v < p.vertex_count(); ++v) {
    Json names = Json::array();
    for (int f : p.vertex_facets(v)) names.push_back(p.facet(f).name);
    verts.push_back(names);
  }
  j["vertices"] = verts;
  Json edges = Json::array();
  for (int e = 0; e < p.edge_count(); ++e) {
    Json ej;
    Json names = Json::array();
    for (int f : p.edge_facets(e)) names.push_back(p.facet(f).name);
    ej["facets"] = names;
    ej["ends"] = Json::array({p.edge_ends(e)[0], p.edge_ends(e)[1]});
    edges.push_back(ej);
  }
  j["edges"] = edges;
  return j;
}

CharacteristicPair pair_from_json(const Json& j) {
  if (!j.contains("n") || !j.contains("facets") || !j.contains("vertices") || !j.contains("edges"))
    throw std::invalid_argument("pair JSON needs n, facets, vertices and edges");
  int n = j["n"].get<int>();
  std::vector<Facet> facets;
  std::vector<std::string> names;
  for (const Json& f : j["facets"]) {
    Facet facet;
    facet.name = f.at("name").get<std::string>();
    for (const Json& x : f.at("lambda")) facet.lambda.push_back(Int(x.get<long>()));
    names.push_back(facet.name);
    facets.push_back(std::move(facet));
  }
  auto index = [&names](const std::string& name) {
    for (size_t i = 0; i < names.size(); ++i)
      if (names[i] == name) return static_cast<int>(i);
    throw std::invalid_argument("unknown facet name: " + name);
  };
  std::vector<std::vector<int>> vertices;
  for (const Json& v : j["vertices"]) {
    std::vector<int> fs;
    for (const Json& name : v) fs.push_back(index(name.get<std::string>()));
    vertices.push_back(std::move(fs));
  }
  std::vector<std::pair<std::vector<int>, std::array<int, 2>>> edges;
  for (const Json& e : j["edges"]) {
    std::vector<int> fs;
    for (const Json& name : e.at("facets")) fs.push_back(index(name.get<std::string>()));
    auto ends = e.at("ends");
    edges.push_back({std::move(fs), {ends.at(0).get<int>(), ends.at(1).get<int>()}});
  }
  return CharacteristicPair(n, std::move(facets), std::move(vertices), std::move(edges));
}

PolygonPair polygon_from_json(const Json& j) {
  if (!j.contains("polygon")) throw std::invalid_argument("polygon JSON needs a polygon array");
  std::vector<std::array<Int, 2>> lambda;
  for (const Json& row : j["polygon"]) {
    if (!row.is_array() || row.size() != 2)
      throw std::invalid_argument("polygon entries must be pairs [a_k, b_k]");
    lambda.push_back({Int(row.at(0).get<long>()), Int(row.at(1).get<long>())});
  }
  return PolygonPair(std::move(lambda));
}

Json polygon_to_json(const PolygonPair& p) {
  Json arr = Json::array();
  for (int k = 1; k <= p.m(); ++k)
    arr.push_back(Json::array({to_long_checked(p.lambda(k)[0], "a_k"), to_long_checked(p.lambda(k)[1], "b_k")}));
  Json j;
  j["polygon"] = arr;
  return j;
}

Json class_to_json(const GraphClass& f) {
  Json j;
  j["degree"] = 2 * f.degree;
  Json values;
  for (size_t v = 0; v < f.values.size(); ++v) values[f.graph->vertex_name(static_cast<int>(v))] = f.values[v].to_string();
  j["values"] = values;
  return j;
}

Json lattice_report(const FaceRing& ring, const IntegralityLattice& l) {
  Json j;
  j["degree"] = l.degree;
  Json mons = Json::array();
  for (const FaceMonomial& m : l.monomials) mons.push_back(monomial_key(ring.poset(), m));
  j["monomials"] = mons;
  Json basis = Json::array();
  for (int i = 0; i < l.lattice.rank(); ++i) {
    Json row = Json::array();
    for (int c = 0; c < l.lattice.ambient_dim(); ++c)
      row.push_back(to_long_checked(l.lattice.basis().at(i, c), "hnf_basis"));
    basis.push_back(row);
  }
  j["hnf_basis"] = basis;
  return j;
}

}  // namespace io
}  // namespace gkm
