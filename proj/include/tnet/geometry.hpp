#pragma once

// Points and lines of PG(2,q), points and planes of PG(3,q).
//
// Homogeneous coordinates are normalized so that the first nonzero
// coordinate is one; equality is plain coordinate equality and the
// default ordering is the global enumeration order.

#include <array>
#include <compare>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "tnet/field.hpp"
#include "tnet/linalg.hpp"

namespace tnet {

struct Point {
  Vec3 c{};
  auto operator<=>(const Point&) const = default;
};

struct Line {
  Vec3 c{};
  auto operator<=>(const Line&) const = default;
};

struct Point3 {
  std::array<Elem, 4> c{};
  auto operator<=>(const Point3&) const = default;
};

struct Plane3 {
  std::array<Elem, 4> c{};
  auto operator<=>(const Plane3&) const = default;
};

Point make_point(const Field& F, Vec3 v);
Line make_line(const Field& F, Vec3 v);
Point3 make_point3(const Field& F, std::array<Elem, 4> v);
Plane3 make_plane3(const Field& F, std::array<Elem, 4> v);
/// The affine point (x : y : 1).
Point affine_point(const Field& F, Elem x, Elem y);

bool incident(const Field& F, const Point& P, const Line& l);
bool incident3(const Field& F, const Point3& P, const Plane3& s);
/// Throws EqualPoints when P == Q.
Line line_through(const Field& F, const Point& P, const Point& Q);
/// Throws EqualLines when l == m.
Point meet(const Field& F, const Line& l, const Line& m);
/// True when all points lie on one line (vacuously for fewer than three
/// distinct points).
bool collinear(const Field& F, std::span<const Point> points);
bool collinear3(const Field& F, const Point& a, const Point& b, const Point& c);

/// All q^2+q+1 points (resp. lines) in enumeration order.
std::vector<Point> all_points(const Field& F);
std::vector<Line> all_lines(const Field& F);
std::vector<Point> points_on_line(const Field& F, const Line& l);
std::vector<Plane3> all_planes3(const Field& F);

/// Image of a point under a 3x3 matrix (throws ZeroVector for singular maps).
Point apply(const Field& F, const Mat3& m, const Point& P);
/// Projectivity taking e1, e2, e3, (1,1,1) to the given four points, which
/// must be in general position; nullopt otherwise.
std::optional<Mat3> frame_map(const Field& F, const Point& p0, const Point& p1, const Point& p2, const Point& unit);
/// Projectivity taking four points in general position to four others.
std::optional<Mat3> projectivity_between(const Field& F, std::span<const Point, 4> from,
                                         std::span<const Point, 4> to);

/// Intersection of line(center, P) with the screen plane.
Point3 project_from_point(const Field& F, const Point3& center, const Point3& P, const Plane3& screen);

/// Linear chart from the points of a plane of PG(3,q) to PG(2,q): drops the
/// coordinate of largest index whose screen coefficient is nonzero, so the
/// kept positions are the smallest-index triple with an invertible restriction.
class PlaneChart {
 public:
  PlaneChart(const Field& F, const Plane3& screen);

  Point to_plane(const Point3& P) const;
  Point3 from_plane(const Point& P) const;
  int dropped() const { return dropped_; }

 private:
  const Field* F_;
  Plane3 screen_;
  int dropped_ = 3;
};

std::vector<Elem> vec_of(const Point& P);

}  // namespace tnet
