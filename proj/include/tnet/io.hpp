#pragma once

// JSON interchange: the net file format and the report objects printed by
// the command-line tool. Keys are emitted in a fixed order.

#include <string>

#include "tnet/nets.hpp"
#include "tnet/search.hpp"
#include "tnet/theorems.hpp"

namespace tnet {

Json to_json(const FieldSpec& spec);
Json elem_to_json(const Field& F, Elem e);
Json point_to_json(const Field& F, const Point& P);
Json line_to_json(const Field& F, const Line& l);
Json mat_to_json(const Field& F, const Mat3& m);
Json curve_to_json(const Field& F, const Curve& c);

/// Throws ParseError on malformed input.
FieldPtr field_from_json(const Json& j);
Elem elem_from_json(const Field& F, const Json& j);
Point point_from_json(const Field& F, const Json& j);

/// {"field", "A", "B", "C", "provenance"}.
Json net_to_json(const DualThreeNet& net);
DualThreeNet net_from_json(const Json& j);
DualThreeNet read_net_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

Json to_json(const AxiomReport& r, const Field& F);
Json to_json(const RegularityClass& r);
Json to_json(const RedeiReport& r, const Field& F);
Json to_json(const Theorem1Result& r, const Field& F);
Json to_json(const GroupType& g);
Json to_json(const ConverseReport& r, const Field& F);
Json to_json(const N4Certificate& c, const Field& F);
Json to_json(const N3Report& r);
Json to_json(const N2Report& r, const Field& F);
Json to_json(const WaterhouseReport& r);
Json to_json(const ProjectionClaims& c);
Json to_json(const SearchSummary& s);
Json to_json(const LatinSquare& L);

}  // namespace tnet
