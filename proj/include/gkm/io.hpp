#pragma once

#include <string>

#include "json.hpp"
#include "gkm/cohomology.hpp"
#include "gkm/facering.hpp"
#include "gkm/quotient.hpp"

// JSON schemas for graphs, characteristic pairs, polygons, classes and
// lattice reports. Rationals travel as "p/q" strings to keep the formats
// exact; emission is canonical so that emit -> parse -> emit is the identity.

namespace gkm {
namespace io {

using Json = nlohmann::ordered_json;

enum class InputKind { Graph, Pair, Polygon };
InputKind classify(const Json& j);

Json graph_to_json(const OrbifoldGKMGraph& g);
OrbifoldGKMGraph graph_from_json(const Json& j);

Json pair_to_json(const CharacteristicPair& p);
CharacteristicPair pair_from_json(const Json& j);

PolygonPair polygon_from_json(const Json& j);
Json polygon_to_json(const PolygonPair& p);

Json class_to_json(const GraphClass& f);
Json lattice_report(const FaceRing& ring, const IntegralityLattice& l);

}  // namespace io
}  // namespace gkm
