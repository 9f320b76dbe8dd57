#pragma once

// Plane conics and cubics over GF(q).
//
// Monomial orders (fixed, used by every serialized curve):
//   degree 2: X^2, Y^2, Z^2, XY, YZ, ZX
//   degree 3: X^3, Y^3, Z^3, X^2Y, X^2Z, Y^2X, Y^2Z, Z^2X, Z^2Y, XYZ

#include <array>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "tnet/field.hpp"
#include "tnet/geometry.hpp"
#include "tnet/linalg.hpp"

namespace tnet {

using Exponent = std::array<int, 3>;

/// Monomial exponents in the fixed order for degree 2 or 3.
std::span<const Exponent> monomials(int degree);

class Curve {
 public:
  /// Normalizes coeffs (first nonzero = 1); throws ZeroVector for the zero form.
  Curve(const Field& F, int degree, Vec coeffs);

  int degree() const { return degree_; }
  const Vec& coeffs() const { return coeffs_; }
  bool operator==(const Curve&) const = default;

 private:
  int degree_;
  Vec coeffs_;
};

Vec veronese_row(const Field& F, const Vec3& P, int degree);
Elem evaluate(const Field& F, int degree, std::span<const Elem> coeffs, const Vec3& P);
Vec3 gradient(const Field& F, int degree, std::span<const Elem> coeffs, const Vec3& P);

/// Null space of the stacked evaluation rows: every curve of the given
/// degree through all the points.
RankCertificate curves_through(const Field& F, std::span<const Point> points, int degree);

bool contains(const Field& F, const Curve& c, const Point& P);
std::vector<Point> rational_points(const Field& F, const Curve& c);

/// No rational line lies on the conic and it has exactly q+1 points.
bool is_irreducible_conic(const Field& F, const Curve& c);
bool contains_line(const Field& F, const Curve& c, const Line& l);

/// Coefficients of the form restricted to s*P + t*R, highest power of s first.
Vec restrict_to_line(const Field& F, int degree, std::span<const Elem> coeffs, const Vec3& P, const Vec3& R);

Line tangent_line(const Field& F, const Curve& c, const Point& P);

/// Scans PG(2,q^2) for a common zero of the cubic and its partials. A cubic
/// with no rational point at all is also reported singular: it can only be
/// a triangle of conjugate lines over GF(q^3).
class NonsingularityChecker {
 public:
  explicit NonsingularityChecker(FieldPtr base);

  bool is_nonsingular(const Curve& cubic) const;
  /// First singular point over GF(q^2) as ext-field coordinates, if any.
  std::optional<Vec3> singular_point(const Curve& cubic) const;
  const Field& extension() const { return *ext_; }

 private:
  FieldPtr base_;
  FieldPtr ext_;
  std::unique_ptr<Embedding> emb_;
  std::vector<Vec3> ext_points_;
  std::vector<std::array<Elem, 6>> ext_quadrics_;  // degree-2 rows of ext points
  std::vector<Point> base_points_;
};

bool is_nonsingular_cubic(const FieldPtr& F, const Curve& cubic);

/// Nucleus of an irreducible conic in characteristic 2 (common point of the
/// tangents); nullopt in odd characteristic.
std::optional<Point> nucleus(const Field& F, const Curve& conic);

}  // namespace tnet
