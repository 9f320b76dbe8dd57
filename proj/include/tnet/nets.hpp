#pragma once

// Dual 3-nets in PG(2,q): the container, the axiom checker, regularity
// classes, and the constructor families.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tnet/curve_groups.hpp"
#include "tnet/curves.hpp"
#include "tnet/geometry.hpp"

namespace tnet {

using Json = nlohmann::ordered_json;

struct Provenance {
  std::string family;
  Json params = Json::object();
};

struct DualThreeNet {
  FieldPtr field;
  std::vector<Point> A, B, C;
  Provenance provenance;

  std::size_t order() const { return A.size(); }
  const std::vector<Point>& component(int i) const { return i == 0 ? A : (i == 1 ? B : C); }
  std::vector<Point> all_points() const;
};

/// Sorts each component and attaches the provenance.
DualThreeNet make_net(FieldPtr F, std::vector<Point> A, std::vector<Point> B, std::vector<Point> C,
                      Provenance prov);

struct AxiomReport {
  bool ok = true;
  std::string reason;
  std::optional<Line> witness;
};

/// Repeated points, overlapping components, and every line through two
/// components that misses the third or meets a component twice.
AxiomReport verify_axioms(const DualThreeNet& net);

enum class Regularity { regular, irregular_one_line, irregular_two_lines, completely_irregular };
std::string to_string(Regularity r);

struct RegularityClass {
  Regularity kind = Regularity::completely_irregular;
  std::vector<int> collinear_components;  // 0 = A, 1 = B, 2 = C
};

RegularityClass classify_regularity(const DualThreeNet& net);

/// The six points (0:0:1), (0:1:0), (1:0:0), (1:1:1), (1:0:1), (0:1:1) split
/// into opposite pairs {(0:0:1),(1:1:1)}, {(0:1:0),(1:0:0)}, {(1:0:1),(0:1:1)}.
/// `variant` (0..5) picks which pair plays A, B, C in lexicographic
/// permutation order; variant 0 is the identity assignment.
DualThreeNet pasch_net(FieldPtr F, int variant = 0);

/// A = coordinate triangle, B = {(a:1/b:1),(b:1/c:1),(c:1/a:1)},
/// C = {(a:1/c:1),(b:1/a:1),(c:1/b:1)} for distinct nonzero a, b, c.
DualThreeNet n3_family(FieldPtr F, Elem a, Elem b, Elem c);

/// Cosets a+H, b+H, c+H as the three components.
DualThreeNet construct_subgroup_type(const CubicGroup& g, const CosetTriple& t);

enum class ConicLineKind { parabola, hyperbola, circle, lines_mult, lines_add };
std::string to_string(ConicLineKind k);
std::optional<ConicLineKind> conic_line_kind_from_string(const std::string& s);

struct ConicLineParams {
  ConicLineKind kind = ConicLineKind::hyperbola;
  /// Subgroup order. Additive families need a power of p and use the span
  /// of 1, x, ..., x^{e-1}; multiplicative families use the cyclic subgroup.
  std::size_t n = 0;
  /// Coset representatives for A and B as element indices (of GF(q^2) for
  /// the circle). When unset, A is the subgroup itself and B is the coset of
  /// the smallest admissible element outside it (the lines families use the
  /// subgroup for both).
  std::optional<std::uint32_t> shift_a, shift_b;
};

/// A and B on the model conic (or line pair), C the directions on Z = 0.
DualThreeNet construct_conic_line(FieldPtr F, const ConicLineParams& params);

/// The model conic containing A and B for the given family, in the net's coordinates.
Curve model_conic(const Field& F, ConicLineKind kind);

struct ProjectionData {
  DualThreeNet net;
  FieldPtr small;             // GF(r)
  Point3 center;              // P
  Plane3 screen;              // pi
  bool transversal_closure;   // property (*) in AG(3,r)
  bool projection_injective;  // 3 r^2 distinct images
};

/// Projects three parallel planes of AG(3,r) embedded in AG(3,q) from a
/// point avoiding every secant of the third plane. Requires r = p^e > 3,
/// q = p^m with e | m and q > r^2.
ProjectionData construct_projection(int r, int q);

struct LatinSquare {
  std::vector<std::vector<int>> cells;
  std::size_t order() const { return cells.size(); }
  bool valid() const;
};

/// L[i][j] is the index in C of the C-point on line(A_i, B_j).
LatinSquare latin_square_of(const DualThreeNet& net);

/// Row, column and symbol permutations taking x to y, if any exist.
bool isotopic(const LatinSquare& x, const LatinSquare& y);

/// Number of 2x2 latin subsquares.
std::size_t intercalates(const LatinSquare& L);

/// Cayley table of Z_n, and of Z_2 x Z_2 for the order-4 alternative.
LatinSquare cyclic_square(std::size_t n);
LatinSquare klein_square();

}  // namespace tnet
