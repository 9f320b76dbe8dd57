#pragma once

// Executable validators: the conic theorem for nets with a collinear
// component and its converse, the order-4 cubic theorem with its case
// taxonomy, the small orders, the Waterhouse scan, and the projection
// construction's claims.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tnet/nets.hpp"
#include "tnet/redei.hpp"

namespace tnet {

// ---------------------------------------------------------------- conic theorem

struct Theorem1Result {
  Curve conic;
  std::size_t nullity = 0;
  bool conic_irreducible = false;
  RedeiReport redei;
};

/// Needs a valid net with C collinear and n <= p (PreconditionFailed otherwise).
Theorem1Result check_theorem1(const DualThreeNet& net, std::uint64_t seed = 1);

// ---------------------------------------------------------------- perspectivities

struct Perspectivity {
  Mat3 matrix;
  Point center;
};

/// Sends the conic to Y^2 = XZ: its first point to (1:0:0), its second to
/// (0:0:1), their tangents' meet to (0:1:0) and its third point to (1:1:1).
Mat3 conic_canonical_frame(const Field& F, const Curve& conic);

/// The lift of a PGL(2) matrix [[a,b],[c,d]] acting on (s:t) to the conic
/// (s^2 : st : t^2).
Mat3 lift_pgl2(const Field& F, Elem a, Elem b, Elem c, Elem d);

/// The involution preserving the conic with center Q. Throws OnConic, IsNucleus.
Perspectivity perspectivity_from(const Field& F, const Curve& conic, const Point& Q);

/// Line image under a point map M (l -> l M^{-1}).
Line apply_to_line(const Field& F, const Mat3& M, const Line& l);

struct GroupType {
  std::string name;  // cyclic, elementary_abelian, abelian, dihedral, semidirect_p, A4, S4, A5, other
  std::size_t order = 0;
  std::map<std::size_t, std::size_t> census;  // element order -> count
};

/// Closure of a set of projective matrices; throws BudgetExceeded above `cap`.
std::vector<Mat3> matrix_group(const Field& F, const std::vector<Mat3>& gens, std::size_t cap = 20000);
std::size_t matrix_order(const Field& F, const Mat3& m);
GroupType classify_group(const Field& F, const std::vector<Mat3>& elements);

struct ConverseReport {
  explicit ConverseReport(Curve c) : conic(std::move(c)) {}
  Curve conic;
  bool conic_irreducible = true;
  std::optional<Line> c_line;
  std::size_t phi_order = 0, psi_order = 0;
  GroupType phi_type;
  bool psi_transitive_A = false, psi_transitive_B = false;
  bool psi_regular = false, psi_abelian = false;
  bool coset_involutions = false;
  // dihedral: the line through the two points fixed by the rotations
  std::optional<Line> fixed_line;
  bool c_on_fixed_line = false;
  bool short_orbit_swapped = false;
  // semidirect (parabolic): the common fixed conic point and its tangent
  std::optional<Point> fixed_point;
  std::optional<Line> invariant_tangent;
  bool c_on_invariant_tangent = false;
};

/// Needs a valid net with n >= 5 and A u B on a conic. Throws
/// PreconditionFailed, and TheoremViolated when C is not collinear.
ConverseReport check_converse(const DualThreeNet& net);

// ---------------------------------------------------------------- order 4

/// The seven cubic monomials without pure cubes, x^2y x^2z y^2x y^2z z^2x z^2y xyz.
using Seven = std::array<Elem, 7>;

struct N4Certificate {
  std::size_t nullity = 0;
  std::vector<Vec> kernel;       // cubics through the 12 points, input coordinates
  bool all_collinear = false;    // every component on a line
  int role = 0;                  // component playing A (0, 1, 2)
  bool roles_swapped = false;    // the other two components exchanged
  Mat3 frame;                    // input -> canonical coordinates
  bool case_arc = false;         // fourth A point (1:1:1)
  bool case_cyclic = false;      // 4-cycle
  bool labeling_found = false;   // labeling with the relation system
  bool extra_relations = false;  // relations from the fourth A point
  std::array<Elem, 8> letters{};  // a..h
  std::optional<Seven> closed_form;
  bool closed_form_nonzero = false;
  bool closed_form_in_kernel = false;
  bool side_condition = false;   // sum = 0 (arc) or x1 + x3 = 0
  // non-arc, non-cyclic
  bool forced_structure = false;  // e=-a, f=-d, g=-c, h=-b
  bool d_relation = false;        // d = a - b + c
  bool odd_characteristic = false;
};

/// Throws NotOrder4.
N4Certificate check_n4(const DualThreeNet& net);

// ---------------------------------------------------------------- orders 2, 3

struct N3Report {
  bool b_collinear = false, b_formula = false;
  bool c_collinear = false, c_formula = false;
  bool ac_on_irreducible_conic = false;  // alpha XY + beta YZ + gamma ZX
  bool ab_on_irreducible_conic = false;
  std::size_t cubic_nullity = 0;
  bool holds() const;
};

N3Report check_n3(FieldPtr F, Elem a, Elem b, Elem c);

/// (0:0:1), (0:1:0), (1:0:0), (1:1:1), (1:0:1), (0:1:1).
std::array<Point, 6> pasch_points(const Field& F);

/// Projectivity taking the six points, in the given order, onto the Pasch
/// points. Four-point assignments are tried in order, the first being the
/// identity assignment.
std::optional<Mat3> pasch_projectivity(const Field& F, const std::array<Point, 6>& pts);

/// aX^2Y + bXY^2 + c(X^2Z - XZ^2) + d(Y^2Z - YZ^2) - (a+b)XYZ
Vec pasch_pencil_member(const Field& F, Elem a, Elem b, Elem c, Elem d);

struct N2Report {
  Mat3 projectivity;
  bool pencil_ok = false;
  std::size_t pencil_checks = 0;
  std::size_t cubic_nullity = 0;
};

/// Throws NotOrder2, NoEquivalence.
N2Report check_n2(const DualThreeNet& net, std::size_t random_members = 20, std::uint64_t seed = 1);

// ---------------------------------------------------------------- Waterhouse

struct WaterhouseOptions {
  std::uint64_t seed = 1;
  std::size_t min_samples = 2000;
  std::size_t max_samples = 20000;
};

struct WaterhouseReport {
  bool exhaustive = false;
  std::size_t scanned = 0, nonsingular = 0;
  std::map<long long, std::size_t> histogram;  // N -> count
  std::set<long long> admissible, realized_admissible, missing;
  std::size_t bound_violations = 0;
};

/// Admissible counts N = q + 1 - m with m^2 <= 4q and p not dividing m.
std::set<long long> waterhouse_admissible(const Field& F);

/// Exhaustive for q <= 3, otherwise seeded sampling that stops once every
/// admissible N is realized and min_samples cubics were drawn.
WaterhouseReport waterhouse_scan(const FieldPtr& F, const WaterhouseOptions& opt = {});

// ---------------------------------------------------------------- projection claims

struct ProjectionClaims {
  bool axioms = false;
  bool c_collinear = false;
  std::size_t conic_nullity_ab = 0;
  std::size_t cubic_nullity_a = 0, cubic_nullity_b = 0;
  std::size_t full_lines_a = 0, full_lines_b = 0;  // lines with exactly r points
  std::size_t max_collinear_a = 0, max_collinear_b = 0;
  bool transversal_closure = false;
  bool injective = false;
};

ProjectionClaims check_projection_claims(const ProjectionData& d);

/// Lines meeting S in at least two points, with the number of points on each.
std::map<Line, std::size_t> secant_counts(const Field& F, const std::vector<Point>& S);

}  // namespace tnet
