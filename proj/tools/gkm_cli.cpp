// gkm: exact computations on orbifold GKM/torus graphs and their weighted
// face rings. Inputs are graph/pair/polygon JSON files or named fixtures;
// outputs are deterministic (byte-identical for identical input and flags).

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "gkm/fixtures.hpp"
#include "gkm/io.hpp"

using namespace gkm;
using io::Json;

namespace {

long jint(const Int& v) {
  if (!v.fits_slong_p()) throw std::domain_error("value too large for JSON output");
  return v.get_si();
}

struct Loaded {
  std::string kind;  // graph | pair | polygon
  std::unique_ptr<OrbifoldGKMGraph> graph;
  std::unique_ptr<CharacteristicPair> pair;
  std::unique_ptr<PolygonPair> polygon;
};

Loaded load_fixture(const std::string& name) {
  Loaded out;
  auto graph = [&](OrbifoldGKMGraph g) {
    out.kind = "graph";
    out.graph = std::make_unique<OrbifoldGKMGraph>(std::move(g));
  };
  auto pair = [&](CharacteristicPair p) {
    out.kind = "pair";
    out.pair = std::make_unique<CharacteristicPair>(std::move(p));
  };
  auto polygon = [&](PolygonPair p) {
    out.kind = "polygon";
    out.pair = std::make_unique<CharacteristicPair>(p.to_characteristic_pair());
    out.polygon = std::make_unique<PolygonPair>(std::move(p));
  };
  if (name.rfind("spindle-", 0) == 0) {
    std::string rest = name.substr(8);
    bool diag = rest.rfind("diag-", 0) == 0;
    if (diag) rest = rest.substr(5);
    auto dash = rest.find('-');
    if (dash == std::string::npos) throw std::invalid_argument("spindle fixture needs two weights: spindle-M-N");
    long m = std::stol(rest.substr(0, dash)), n = std::stol(rest.substr(dash + 1));
    graph(diag ? fixtures::spindle_diagonal(m, n) : fixtures::spindle(m, n));
  } else if (name == "wp111222")
    graph(fixtures::wp111222_graph());
  else if (name == "figure-no-geometry")
    graph(fixtures::figure_without_geometry());
  else if (name == "p1236")
    pair(fixtures::p1236_pair());
  else if (name == "cp2")
    pair(fixtures::projective_space_pair(2));
  else if (name == "cp3")
    pair(fixtures::projective_space_pair(3));
  else if (name == "polygon-p112")
    polygon(fixtures::polygon_p112());
  else if (name == "polygon-cp2")
    polygon(fixtures::polygon_cp2());
  else if (name == "polygon-gcd2")
    polygon(fixtures::polygon_gcd_two());
  else if (name == "polygon-square")
    polygon(fixtures::polygon_square());
  else {
    std::string known;
    for (const auto& f : fixtures::list()) known += (known.empty() ? "" : ", ") + f.name;
    throw std::invalid_argument("unknown fixture " + name + "; known fixtures: " + known);
  }
  return out;
}

Loaded load(const std::string& input_path, const std::string& fixture) {
  if (input_path.empty() == fixture.empty())
    throw std::invalid_argument("exactly one input source required: --input PATH or --fixture NAME");
  if (!fixture.empty()) return load_fixture(fixture);
  std::ifstream in(input_path);
  if (!in) throw std::invalid_argument("cannot open input file " + input_path);
  Json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("malformed JSON in " + input_path + ": " + e.what());
  }
  Loaded out;
  switch (io::classify(j)) {
    case io::InputKind::Graph:
      out.kind = "graph";
      out.graph = std::make_unique<OrbifoldGKMGraph>(io::graph_from_json(j));
      break;
    case io::InputKind::Pair:
      out.kind = "pair";
      out.pair = std::make_unique<CharacteristicPair>(io::pair_from_json(j));
      break;
    case io::InputKind::Polygon: {
      out.kind = "polygon";
      PolygonPair p = io::polygon_from_json(j);
      out.pair = std::make_unique<CharacteristicPair>(p.to_characteristic_pair());
      out.polygon = std::make_unique<PolygonPair>(std::move(p));
      break;
    }
  }
  return out;
}

// Graph plus enumerated faces; facet faces carry their facet names when the
// input was a characteristic pair.
struct TorusContext {
  std::unique_ptr<OrbifoldGKMGraph> graph;
  std::unique_ptr<FacePoset> poset;
  std::unique_ptr<FaceRing> ring;
  std::vector<Int> det_v;  // empty unless derived from a pair
};

TorusContext torus_context(Loaded& in) {
  TorusContext ctx;
  if (in.graph) {
    ctx.graph = std::move(in.graph);
  } else {
    DerivedGraph derived = derive_graph(*in.pair);
    ctx.graph = std::make_unique<OrbifoldGKMGraph>(std::move(derived.graph));
    ctx.det_v = std::move(derived.det_v);
  }
  ValidationReport rep = validate(*ctx.graph, GraphMode::Torus);
  if (!rep.valid()) throw std::invalid_argument("not a valid orbifold torus graph: " + rep.issues.front());
  Connection theta = infer_connection(*ctx.graph);
  ctx.poset = std::make_unique<FacePoset>(enumerate_faces(*ctx.graph, theta));
  if (in.pair) label_facet_faces(*in.pair, *ctx.poset);
  ctx.ring = std::make_unique<FaceRing>(*ctx.poset);
  return ctx;
}

void emit(const Json& j, const std::string& format) {
  if (format == "json") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  // human: indented key/value rendering of the same data
  std::function<void(const Json&, int)> walk = [&](const Json& node, int indent) {
    std::string pad(indent, ' ');
    if (node.is_object()) {
      for (const auto& [key, value] : node.items()) {
        if (value.is_primitive())
          std::cout << pad << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
        else {
          std::cout << pad << key << ":\n";
          walk(value, indent + 2);
        }
      }
    } else if (node.is_array()) {
      for (const Json& item : node) {
        if (item.is_primitive())
          std::cout << pad << "- " << (item.is_string() ? item.get<std::string>() : item.dump()) << "\n";
        else {
          std::cout << pad << "-\n";
          walk(item, indent + 2);
        }
      }
    } else {
      std::cout << pad << node.dump() << "\n";
    }
  };
  walk(j, 0);
}

Json face_summary(const FacePoset& poset, int f) {
  const OrbifoldGKMGraph& g = poset.graph();
  Json j;
  j["name"] = poset.name(f);
  j["dim"] = poset.face(f).dim;
  Json verts = Json::array();
  for (int v : poset.face(f).vertices) verts.push_back(g.vertex_name(v));
  j["vertices"] = verts;
  Json edges = Json::array();
  for (int e : poset.face(f).edges)
    edges.push_back(Json::array({g.vertex_name(g.dart(2 * e).origin), g.vertex_name(g.dart(2 * e).target)}));
  j["edges"] = edges;
  return j;
}

int cmd_validate(Loaded& in, const std::string& format) {
  Json j;
  j["input"] = in.kind;
  std::vector<std::string> issues;
  if (in.kind == "graph") {
    GraphMode mode = in.graph->torus_rank() == in.graph->valence() ? GraphMode::Torus : GraphMode::Gkm;
    j["mode"] = mode == GraphMode::Torus ? "torus" : "gkm";
    issues = validate(*in.graph, mode).issues;
  } else {
    issues = in.pair->validate().issues;
    if (in.kind == "polygon") {
      auto check = polygon_gcd_check(*in.polygon);
      Json d = Json::array();
      for (const Int& x : check.d) d.push_back(jint(x));
      j["D"] = d;
      j["gcd"] = jint(check.g);
      j["vanishing_odd_cohomology"] = check.vanishing_odd_cohomology;
    }
  }
  j["valid"] = issues.empty();
  Json ji = Json::array();
  for (const std::string& s : issues) ji.push_back(s);
  j["issues"] = ji;
  emit(j, format);
  return issues.empty() ? 0 : 2;
}

int cmd_derive(Loaded& in, const std::string& format) {
  if (!in.pair) throw std::invalid_argument("derive needs a characteristic pair or polygon input");
  ValidationReport rep = in.pair->validate();
  if (!rep.valid()) throw std::invalid_argument("invalid characteristic pair: " + rep.issues.front());
  DerivedGraph derived = derive_graph(*in.pair);
  emit(io::graph_to_json(derived.graph), format);
  return 0;
}

int cmd_faces(Loaded& in, const std::string& format) {
  TorusContext ctx = torus_context(in);
  Json j;
  Json counts = Json::array();
  for (int c : ctx.poset->face_counts()) counts.push_back(c);
  j["counts"] = counts;
  j["skipped_nonfaces"] = ctx.poset->skipped_nonfaces();
  Json faces = Json::array();
  for (int f = 0; f < ctx.poset->size(); ++f) faces.push_back(face_summary(*ctx.poset, f));
  j["faces"] = faces;
  emit(j, format);
  return 0;
}

int cmd_thom(Loaded& in, const std::string& face_name, const std::string& format) {
  bool from_pair = in.pair != nullptr;
  TorusContext ctx = torus_context(in);
  Json out = Json::array();
  for (int f = 0; f < ctx.poset->size(); ++f) {
    if (!face_name.empty() && ctx.poset->name(f) != face_name) continue;
    Json j;
    j["face"] = ctx.poset->name(f);
    j["dim"] = ctx.poset->face(f).dim;
    Json cls = io::class_to_json(ctx.ring->thom(f));
    j["degree"] = cls["degree"];
    j["values"] = cls["values"];
    j["minimal_multiplier"] = jint(ctx.ring->minimal_thom(f));
    if (from_pair && ctx.poset->face(f).dim == ctx.graph->valence() - 1)
      j["lcm_bound"] = jint(lcm_bound(*ctx.ring, f, ctx.det_v));
    out.push_back(j);
  }
  if (!face_name.empty() && out.empty()) throw std::invalid_argument("unknown face " + face_name);
  emit(out, format);
  return 0;
}

int cmd_lattice(Loaded& in, int degree, const std::string& format) {
  if (degree <= 0 || degree % 2 != 0)
    throw std::invalid_argument("--degree must be a positive even cohomological degree");
  TorusContext ctx = torus_context(in);
  emit(io::lattice_report(*ctx.ring, ctx.ring->integrality_lattice(degree)), format);
  return 0;
}

int cmd_cohomology(Loaded& in, int max_degree, const std::string& mode, const std::string& format) {
  std::unique_ptr<OrbifoldGKMGraph> graph;
  if (in.graph)
    graph = std::move(in.graph);
  else
    graph = std::make_unique<OrbifoldGKMGraph>(derive_graph(*in.pair).graph);
  ValidationReport rep = validate(*graph, GraphMode::Gkm);
  if (!rep.valid()) throw std::invalid_argument("invalid graph: " + rep.issues.front());
  Json j;
  Json degrees = Json::array();
  for (int d = 0; d <= max_degree; ++d) {
    Json dj;
    dj["degree"] = 2 * d;
    if (mode == "integral") {
      GradedBasis b = basis(*graph, d);
      dj["rank"] = b.lattice.rank();
      Json cls = Json::array();
      for (const GraphClass& f : b.classes) cls.push_back(io::class_to_json(f));
      dj["basis"] = cls;
    } else {
      dj["dimension"] = rational_dimension(*graph, d);
    }
    degrees.push_back(dj);
  }
  j["degrees"] = degrees;
  Json ranks = Json::array();
  for (auto [deg, r] : ordinary_ranks(*graph, max_degree)) ranks.push_back(Json::array({deg, r}));
  j["ordinary_ranks"] = ranks;
  emit(j, format);
  return 0;
}

int cmd_polygon(Loaded& in, int n, const std::string& format) {
  if (!in.polygon) throw std::invalid_argument("polygon command needs a polygon input");
  if (n < 1) throw std::invalid_argument("--degree must be >= 1 (generators of degree 2n)");
  auto check = polygon_gcd_check(*in.polygon);
  Json j;
  Json d = Json::array();
  for (const Int& x : check.d) d.push_back(jint(x));
  j["D"] = d;
  j["gcd"] = jint(check.g);
  j["vanishing_odd_cohomology"] = check.vanishing_odd_cohomology;
  if (check.vanishing_odd_cohomology) {
    IntegerLattice gen = polygon_generators(*in.polygon, n);
    Json gens;
    gens["degree"] = 2 * n;
    Json coords = Json::array();
    for (int c = 0; c < gen.ambient_dim(); ++c) {
      int i = c / n, alpha = c % n;
      std::string key = "x[F" + std::to_string(i + 1) + "]";
      if (n - alpha > 1) key += "^" + std::to_string(n - alpha);
      if (alpha > 0) {
        key += "*x[F" + std::to_string((i + 1) % in.polygon->m() + 1) + "]";
        if (alpha > 1) key += "^" + std::to_string(alpha);
      }
      coords.push_back(key);
    }
    gens["coordinates"] = coords;
    Json rows = Json::array();
    for (int i = 0; i < gen.rank(); ++i) {
      Json row = Json::array();
      for (int c = 0; c < gen.ambient_dim(); ++c) row.push_back(jint(gen.basis().at(i, c)));
      rows.push_back(row);
    }
    gens["hnf_basis"] = rows;
    j["generators"] = gens;
  }
  emit(j, format);
  return 0;
}

int cmd_verify(Loaded& in, int max_degree, const std::string& format) {
  TorusContext ctx = torus_context(in);
  Json j;
  bool all = true;
  bool rel = ctx.ring->relations_vanish();
  all = all && rel;
  j["relations_vanish"] = rel;
  Json degrees = Json::array();
  for (int d = 1; d <= max_degree; ++d) {
    bool ok = ctx.ring->check_iso_degree(d);
    all = all && ok;
    Json dj;
    dj["degree"] = 2 * d;
    dj["isomorphism"] = ok;
    degrees.push_back(dj);
  }
  j["degrees"] = degrees;
  j["all_ok"] = all;
  emit(j, format);
  return all ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact equivariant cohomology of torus orbifold graphs"};
  app.require_subcommand(1);

  std::string input, fixture, format = "human", mode = "integral", face;
  int degree = 2, max_degree = 2, polygon_degree = 1;

  auto add_io = [&](CLI::App* cmd) {
    cmd->add_option("--input", input, "input JSON file (graph, pair or polygon)");
    cmd->add_option("--fixture", fixture, "named fixture instead of a file");
    cmd->add_option("--format", format, "output format: human or json")
        ->check(CLI::IsMember({"human", "json"}));
  };

  CLI::App* validate_cmd = app.add_subcommand("validate", "check the graph/pair/polygon conditions");
  add_io(validate_cmd);
  CLI::App* derive_cmd = app.add_subcommand("derive", "derive the orbifold torus graph of a pair");
  add_io(derive_cmd);
  CLI::App* faces_cmd = app.add_subcommand("faces", "enumerate the face poset");
  add_io(faces_cmd);
  CLI::App* thom_cmd = app.add_subcommand("thom", "rational Thom classes and minimal multipliers");
  add_io(thom_cmd);
  thom_cmd->add_option("--face", face, "restrict to one face by name");
  CLI::App* lattice_cmd = app.add_subcommand("lattice", "integrality lattice in one degree");
  add_io(lattice_cmd);
  lattice_cmd->add_option("--degree", degree, "cohomological degree 2d");
  CLI::App* cohom_cmd = app.add_subcommand("cohomology", "graded bases and ordinary ranks");
  add_io(cohom_cmd);
  cohom_cmd->add_option("--max-degree", max_degree, "largest polynomial degree d");
  cohom_cmd->add_option("--mode", mode, "integral or rational")->check(CLI::IsMember({"integral", "rational"}));
  CLI::App* polygon_cmd = app.add_subcommand("polygon", "D_k, gcd criterion and generator lattice");
  add_io(polygon_cmd);
  polygon_cmd->add_option("--degree", polygon_degree, "n: generators of degree 2n");
  CLI::App* verify_cmd = app.add_subcommand("verify", "degreewise face-ring isomorphism check");
  add_io(verify_cmd);
  verify_cmd->add_option("--max-degree", max_degree, "check degrees d = 1..N");

  CLI11_PARSE(app, argc, argv);

  try {
    Loaded in = load(input, fixture);
    if (validate_cmd->parsed()) return cmd_validate(in, format);
    if (derive_cmd->parsed()) return cmd_derive(in, format);
    if (faces_cmd->parsed()) return cmd_faces(in, format);
    if (thom_cmd->parsed()) return cmd_thom(in, face, format);
    if (lattice_cmd->parsed()) return cmd_lattice(in, degree, format);
    if (cohom_cmd->parsed()) return cmd_cohomology(in, max_degree, mode, format);
    if (polygon_cmd->parsed()) return cmd_polygon(in, polygon_degree, format);
    if (verify_cmd->parsed()) return cmd_verify(in, max_degree, format);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ConnectionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
