#include "tnet/io.hpp"

#include <fstream>
#include <sstream>

namespace tnet {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

Json points_json(const Field& F, const std::vector<Point>& pts) {
  Json out = Json::array();
  for (const auto& P : pts) out.push_back(point_to_json(F, P));
  return out;
}

std::vector<Point> points_from_json(const Field& F, const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array()) parse_error(std::string("missing point list ") + key);
  std::vector<Point> out;
  for (const auto& p : j[key]) out.push_back(point_from_json(F, p));
  return out;
}

Json opt_line(const Field& F, const std::optional<Line>& l) { return l ? line_to_json(F, *l) : Json(nullptr); }

Json kernel_json(const Field& F, const std::vector<Vec>& kernel) {
  Json out = Json::array();
  for (const auto& v : kernel) {
    Json row = Json::array();
    for (Elem e : v) row.push_back(elem_to_json(F, e));
    out.push_back(row);
  }
  return out;
}

}  // namespace

Json to_json(const FieldSpec& spec) { return Json{{"p", spec.p}, {"k", spec.k}, {"modulus", spec.modulus}}; }

Json elem_to_json(const Field& F, Elem e) { return Json(F.coeffs(e)); }

Json point_to_json(const Field& F, const Point& P) {
  return Json::array({elem_to_json(F, P.c[0]), elem_to_json(F, P.c[1]), elem_to_json(F, P.c[2])});
}

Json line_to_json(const Field& F, const Line& l) {
  return Json{{"line", Json::array({elem_to_json(F, l.c[0]), elem_to_json(F, l.c[1]), elem_to_json(F, l.c[2])})}};
}

Json mat_to_json(const Field& F, const Mat3& m) {
  Json out = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (Elem e : row) r.push_back(elem_to_json(F, e));
    out.push_back(r);
  }
  return out;
}

Json curve_to_json(const Field& F, const Curve& c) {
  Json co = Json::array();
  for (Elem e : c.coeffs()) co.push_back(elem_to_json(F, e));
  return Json{{"degree", c.degree()}, {"coeffs", co}};
}

FieldPtr field_from_json(const Json& j) {
  try {
    FieldSpec spec;
    spec.p = j.at("p").get<int>();
    spec.k = j.at("k").get<int>();
    spec.modulus = j.at("modulus").get<std::vector<int>>();
    return Field::from_spec(spec);
  } catch (const Json::exception& e) {
    parse_error(std::string("bad field spec: ") + e.what());
  }
}

Elem elem_from_json(const Field& F, const Json& j) {
  if (!j.is_array()) parse_error("field element must be a coefficient list");
  std::vector<int> c;
  for (const auto& x : j) {
    if (!x.is_number_integer()) parse_error("coefficients must be integers");
    const int v = x.get<int>();
    if (v < 0 || v >= F.p()) parse_error("coefficient out of range");
    c.push_back(v);
  }
  if (c.size() != static_cast<std::size_t>(F.k())) parse_error("coefficient list has the wrong length");
  return F.from_coeffs(c);
}

Point point_from_json(const Field& F, const Json& j) {
  if (!j.is_array() || j.size() != 3) parse_error("point must have three coordinates");
  const Vec3 v{elem_from_json(F, j[0]), elem_from_json(F, j[1]), elem_from_json(F, j[2])};
  if (v[0].is_zero() && v[1].is_zero() && v[2].is_zero()) parse_error("zero vector is not a point");
  return make_point(F, v);
}

Json net_to_json(const DualThreeNet& net) {
  const Field& F = *net.field;
  return Json{{"field", to_json(F.spec())},
              {"A", points_json(F, net.A)},
              {"B", points_json(F, net.B)},
              {"C", points_json(F, net.C)},
              {"provenance", Json{{"family", net.provenance.family}, {"params", net.provenance.params}}}};
}

DualThreeNet net_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("field")) parse_error("net file needs a field");
  const FieldPtr F = field_from_json(j["field"]);
  auto A = points_from_json(*F, j, "A");
  auto B = points_from_json(*F, j, "B");
  auto C = points_from_json(*F, j, "C");
  if (A.empty() || A.size() != B.size() || A.size() != C.size()) parse_error("components must have equal nonzero size");
  Provenance prov{"unknown", Json::object()};
  if (j.contains("provenance") && j["provenance"].is_object()) {
    const auto& pv = j["provenance"];
    if (pv.contains("family") && pv["family"].is_string()) prov.family = pv["family"].get<std::string>();
    if (pv.contains("params")) prov.params = pv["params"];
  }
  return make_net(F, std::move(A), std::move(B), std::move(C), std::move(prov));
}

DualThreeNet read_net_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) parse_error("cannot open " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::exception& e) {
    parse_error(path + ": " + e.what());
  }
  return net_from_json(j);
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path);
  out << j.dump(2) << "\n";
}

Json to_json(const AxiomReport& r, const Field& F) {
  return Json{{"ok", r.ok}, {"reason", r.reason}, {"witness", opt_line(F, r.witness)}};
}

Json to_json(const RegularityClass& r) {
  return Json{{"class", to_string(r.kind)}, {"collinear_components", r.collinear_components}};
}

Json to_json(const RedeiReport& r, const Field& F) {
  Json scalar = r.divisibility.scalar ? elem_to_json(F, *r.divisibility.scalar) : Json(nullptr);
  std::vector<bool> rz(r.divisibility.remainder_zero.begin(), r.divisibility.remainder_zero.end());
  return Json{{"ok", r.ok()},
              {"divisibility", Json{{"ok", r.divisibility.ok}, {"remainder_zero", rz}, {"scalar", scalar}}},
              {"sigma_equal", r.sigma_equal},
              {"power_sums_checked", r.power_sums_checked},
              {"power_sums_match_direct", r.power_sums_match_direct},
              {"monomial_sums_equal", r.monomial_sums_equal},
              {"moments_equal", r.moments_equal},
              {"covering_ok", r.covering_ok},
              {"notice", r.notice}};
}

Json to_json(const Theorem1Result& r, const Field& F) {
  return Json{{"conic", curve_to_json(F, r.conic)},
              {"nullity", r.nullity},
              {"conic_irreducible", r.conic_irreducible},
              {"redei", to_json(r.redei, F)}};
}

Json to_json(const GroupType& g) {
  Json census = Json::object();
  for (const auto& [o, c] : g.census) census[std::to_string(o)] = c;
  return Json{{"name", g.name}, {"order", g.order}, {"census", census}};
}

Json to_json(const ConverseReport& r, const Field& F) {
  return Json{{"conic", curve_to_json(F, r.conic)},
              {"conic_irreducible", r.conic_irreducible},
              {"c_line", opt_line(F, r.c_line)},
              {"phi_order", r.phi_order},
              {"psi_order", r.psi_order},
              {"phi_type", to_json(r.phi_type)},
              {"psi_transitive_A", r.psi_transitive_A},
              {"psi_transitive_B", r.psi_transitive_B},
              {"psi_regular", r.psi_regular},
              {"psi_abelian", r.psi_abelian},
              {"coset_involutions", r.coset_involutions},
              {"fixed_line", opt_line(F, r.fixed_line)},
              {"c_on_fixed_line", r.c_on_fixed_line},
              {"short_orbit_swapped", r.short_orbit_swapped},
              {"fixed_point", r.fixed_point ? point_to_json(F, *r.fixed_point) : Json(nullptr)},
              {"invariant_tangent", opt_line(F, r.invariant_tangent)},
              {"c_on_invariant_tangent", r.c_on_invariant_tangent}};
}

Json to_json(const N4Certificate& c, const Field& F) {
  Json letters = Json::object();
  const char* names = "abcdefgh";
  for (int i = 0; i < 8; ++i) letters[std::string(1, names[i])] = elem_to_json(F, c.letters[i]);
  Json cf = nullptr;
  if (c.closed_form) {
    cf = Json::array();
    for (Elem e : *c.closed_form) cf.push_back(elem_to_json(F, e));
  }
  return Json{{"nullity", c.nullity},
              {"kernel", kernel_json(F, c.kernel)},
              {"all_collinear", c.all_collinear},
              {"role", c.role},
              {"roles_swapped", c.roles_swapped},
              {"frame", mat_to_json(F, c.frame)},
              {"case_arc", c.case_arc},
              {"case_cyclic", c.case_cyclic},
              {"labeling_found", c.labeling_found},
              {"extra_relations", c.extra_relations},
              {"letters", letters},
              {"closed_form", cf},
              {"closed_form_nonzero", c.closed_form_nonzero},
              {"closed_form_in_kernel", c.closed_form_in_kernel},
              {"side_condition", c.side_condition},
              {"forced_structure", c.forced_structure},
              {"d_relation", c.d_relation},
              {"odd_characteristic", c.odd_characteristic}};
}

Json to_json(const N3Report& r) {
  return Json{{"holds", r.holds()},
              {"b_collinear", r.b_collinear},
              {"b_formula", r.b_formula},
              {"c_collinear", r.c_collinear},
              {"c_formula", r.c_formula},
              {"ac_on_irreducible_conic", r.ac_on_irreducible_conic},
              {"ab_on_irreducible_conic", r.ab_on_irreducible_conic},
              {"cubic_nullity", r.cubic_nullity}};
}

Json to_json(const N2Report& r, const Field& F) {
  return Json{{"projectivity", mat_to_json(F, r.projectivity)},
              {"pencil_ok", r.pencil_ok},
              {"pencil_checks", r.pencil_checks},
              {"cubic_nullity", r.cubic_nullity}};
}

Json to_json(const WaterhouseReport& r) {
  Json hist = Json::object();
  for (const auto& [N, c] : r.histogram) hist[std::to_string(N)] = c;
  return Json{{"exhaustive", r.exhaustive},
              {"scanned", r.scanned},
              {"nonsingular", r.nonsingular},
              {"histogram", hist},
              {"admissible", r.admissible},
              {"realized_admissible", r.realized_admissible},
              {"missing", r.missing},
              {"bound_violations", r.bound_violations}};
}

Json to_json(const ProjectionClaims& c) {
  return Json{{"axioms", c.axioms},
              {"c_collinear", c.c_collinear},
              {"conic_nullity_ab", c.conic_nullity_ab},
              {"cubic_nullity_a", c.cubic_nullity_a},
              {"cubic_nullity_b", c.cubic_nullity_b},
              {"full_lines_a", c.full_lines_a},
              {"full_lines_b", c.full_lines_b},
              {"max_collinear_a", c.max_collinear_a},
              {"max_collinear_b", c.max_collinear_b},
              {"transversal_closure", c.transversal_closure},
              {"injective", c.injective}};
}

Json to_json(const SearchSummary& s) {
  return Json{{"emitted", s.emitted},
              {"rejected", s.rejected},
              {"nodes", s.nodes},
              {"branches", s.branches},
              {"branches_done", s.branches_done},
              {"budget_exceeded", s.budget_exceeded},
              {"by_class", s.by_class}};
}

Json to_json(const LatinSquare& L) { return Json{{"order", L.order()}, {"cells", L.cells}}; }

}  // namespace tnet
