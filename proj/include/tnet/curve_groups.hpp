#pragma once

// Abelian groups carried by point sets of plane curves: the chord-tangent
// group of a non-singular cubic and the group on (conic) minus (line).
//
// Group elements are indices into points(); points() is in enumeration order.

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "tnet/curves.hpp"

namespace tnet {

/// Third point of the cubic on line(P, Q), or on the tangent at P when P == Q.
Point third_intersection(const Field& F, const Curve& cubic, const Point& P, const Point& Q);

/// Second point of the conic on the line through P (on the conic) and R;
/// P itself when the line is tangent.
Point second_intersection(const Field& F, const Curve& conic, const Point& P, const Point& R);

class PointGroup {
 public:
  virtual ~PointGroup() = default;

  const Field& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  std::size_t size() const { return points_.size(); }
  const std::vector<Point>& points() const { return points_; }
  const Point& point(std::size_t i) const { return points_[i]; }
  std::optional<std::size_t> find(const Point& P) const;
  /// Throws NotOnCurve for points outside the group.
  std::size_t index_of(const Point& P) const;

  std::size_t identity() const { return identity_; }
  std::size_t add(std::size_t a, std::size_t b) const { return table_[a * size() + b]; }
  std::size_t neg(std::size_t a) const { return neg_[a]; }
  std::size_t sub(std::size_t a, std::size_t b) const { return add(a, neg(b)); }
  Point add(const Point& P, const Point& Q) const { return point(add(index_of(P), index_of(Q))); }
  std::size_t element_order(std::size_t a) const;

  /// Exhaustive closure, identity, inverse, commutativity and associativity.
  bool check_axioms() const;

 protected:
  PointGroup(FieldPtr F, std::vector<Point> points, const Point& identity,
             const std::function<Point(const Point&, const Point&)>& op);

 private:
  FieldPtr field_;
  std::vector<Point> points_;
  std::map<Point, std::size_t> index_;
  std::size_t identity_ = 0;
  std::vector<std::size_t> table_;
  std::vector<std::size_t> neg_;
};

class CubicGroup : public PointGroup {
 public:
  /// Throws SingularPoint when the cubic is singular, NotOnCurve when O is off it.
  CubicGroup(FieldPtr F, Curve cubic, const Point& O);

  const Curve& curve() const { return curve_; }
  const Point& O() const { return point(identity()); }
  const Point& zero_prime() const { return point(zero_prime_); }
  std::size_t zero_prime_index() const { return zero_prime_; }
  bool identity_is_flex() const { return zero_prime_ == identity(); }

  /// Distinct P, Q, R are collinear iff P+Q+R = 0', checked on every triple.
  bool check_collinearity_law() const;

 private:
  CubicGroup(FieldPtr F, Curve cubic, const Point& O, std::vector<Point> points);
  Curve curve_;
  std::size_t zero_prime_ = 0;
};

class ConicLineGroup : public PointGroup {
 public:
  /// The conic must be irreducible, O on it and off ell.
  ConicLineGroup(FieldPtr F, Curve conic, Line ell, const Point& O);

  const Curve& conic() const { return conic_; }
  const Line& ell() const { return ell_; }

 private:
  ConicLineGroup(FieldPtr F, Curve conic, Line ell, const Point& O, std::vector<Point> points);
  Curve conic_;
  Line ell_;
};

/// Three pairwise distinct cosets a+H, b+H, c+H with a+b+c in target+H.
struct CosetTriple {
  std::vector<std::size_t> H;
  std::size_t a = 0, b = 0, c = 0;
  std::vector<std::size_t> coset(const PointGroup& g, std::size_t rep) const;
};

/// Every subgroup, each as a sorted index list, ordered by (size, contents).
std::vector<std::vector<std::size_t>> all_subgroups(const PointGroup& g);

/// All coset triples over subgroups of order n that contain `target`, up to
/// reordering. Representatives a, b are the smallest indices of their cosets
/// and c = target - a - b.
std::vector<CosetTriple> subgroup_and_cosets(const PointGroup& g, std::size_t n, std::size_t target);

/// Cubic case: the target is 0'.
std::vector<CosetTriple> subgroup_and_cosets(const CubicGroup& g, std::size_t n);

/// Checks closure, the target condition and pairwise distinctness.
void validate_triple(const PointGroup& g, const CosetTriple& t, std::size_t target);

}  // namespace tnet
