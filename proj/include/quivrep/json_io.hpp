#pragma once

#include <json.hpp>

#include "quivrep/lie.hpp"
#include "quivrep/morphism.hpp"
#include "quivrep/path.hpp"
#include "quivrep/quiver.hpp"
#include "quivrep/representation.hpp"

namespace quivrep {

using Json = nlohmann::json;

// Schema descriptor: {"family":"Qmn","m":3,"n":2} | {"family":"Qhat","s":5}
// | {"family":"Qinf"} | {"family":"QinfXinf"}
// | {"family":"Awindow","m":..,"n":..,"a":..,"b":..}
Json schema_to_json(const QuiverSchema& q);
QuiverSchema schema_from_json(const Json& j);

// Vertices are plain integers for one-dimensional families, [i, j] for the grid.
Json vertex_to_json(const QuiverSchema& q, VertexId v);
VertexId vertex_from_json(const QuiverSchema& q, const Json& j);

// Arrows: ["rho1", base] / ["rho2", base] / ["rho", base] / ["rhobar", base].
Json arrow_to_json(const QuiverSchema& q, ArrowId r);
ArrowId arrow_from_json(const QuiverSchema& q, const Json& j);

// Paths: ordered arrow list, first applied first, e.g. [["rho1",0],["rho2",3]].
// The trivial path is [["e", base]].
Json path_to_json(const Path& p);
Path path_from_json(const QuiverSchema& q, const Json& j);

// Path sums: [[path, "p/q"], ...].
Json pathsum_to_json(const PathSum& s);
PathSum pathsum_from_json(const QuiverSchema& q, const Json& j);

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

// {"schema":..., "dims":[[vertex,dim],...], "mats":[[arrow,[[...]]]...]}
Json rep_to_json(const Representation& v);
Representation rep_from_json(const Json& j);

// {"source":..., "target":..., "comps":[[vertex,[[...]]]...]}
Json morphism_file_to_json(const RepMorphism& m);
RepMorphism morphism_file_from_json(const Json& j);

// {"kind":"f"} | {"kind":"g","m":..,"n":..} | {"kind":"table",...}
Json quiver_morphism_to_json(const QuiverMorphism& phi);
QuiverMorphism quiver_morphism_from_json(const Json& j);

// UElement: [[r, k-or-[i,j], s, "p/q"], ...]
Json uelement_to_json(const UElement& u);
UElement uelement_from_json(const Json& j);

}  // namespace quivrep
