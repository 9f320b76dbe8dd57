#include "tnet/curve_groups.hpp"

#include <algorithm>
#include <set>

namespace tnet {

namespace {

Point combine(const Field& F, Elem s, const Point& P, Elem t, const Point& Q) {
  Vec3 v{};
  for (int i = 0; i < 3; ++i) v[i] = F.add(F.mul(s, P.c[i]), F.mul(t, Q.c[i]));
  return make_point(F, v);
}

Point other_point_on(const Field& F, const Line& l, const Point& P) {
  for (const auto& R : points_on_line(F, l)) {
    if (R != P) return R;
  }
  throw Error(ErrorCode::BadParameters, "line has a single point");
}

}  // namespace

Point third_intersection(const Field& F, const Curve& cubic, const Point& P, const Point& Q) {
  if (cubic.degree() != 3) throw Error(ErrorCode::BadParameters, "not a cubic");
  if (!contains(F, cubic, P) || !contains(F, cubic, Q)) throw Error(ErrorCode::NotOnCurve, "point off the cubic");
  if (P != Q) {
    // b0 = b3 = 0; the remaining factor is b1 s + b2 t.
    const Vec b = restrict_to_line(F, 3, cubic.coeffs(), P.c, Q.c);
    if (b[1].is_zero() && b[2].is_zero()) throw Error(ErrorCode::SingularPoint, "line lies on the cubic");
    return combine(F, b[2], P, F.neg(b[1]), Q);
  }
  const Line t = tangent_line(F, cubic, P);
  const Point R = other_point_on(F, t, P);
  // b0 = b1 = 0; the remaining factor is b2 s + b3 t.
  const Vec b = restrict_to_line(F, 3, cubic.coeffs(), P.c, R.c);
  if (b[2].is_zero() && b[3].is_zero()) throw Error(ErrorCode::SingularPoint, "tangent lies on the cubic");
  return combine(F, b[3], P, F.neg(b[2]), R);
}

Point second_intersection(const Field& F, const Curve& conic, const Point& P, const Point& R) {
  if (conic.degree() != 2) throw Error(ErrorCode::BadParameters, "not a conic");
  if (!contains(F, conic, P)) throw Error(ErrorCode::NotOnConic, "point off the conic");
  const Vec b = restrict_to_line(F, 2, conic.coeffs(), P.c, R.c);
  if (b[1].is_zero() && b[2].is_zero()) throw Error(ErrorCode::SingularPoint, "line lies on the conic");
  return combine(F, b[2], P, F.neg(b[1]), R);
}

PointGroup::PointGroup(FieldPtr F, std::vector<Point> points, const Point& identity,
                       const std::function<Point(const Point&, const Point&)>& op)
    : field_(std::move(F)), points_(std::move(points)) {
  std::sort(points_.begin(), points_.end());
  for (std::size_t i = 0; i < points_.size(); ++i) index_[points_[i]] = i;
  identity_ = index_of(identity);
  const std::size_t n = points_.size();
  table_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const std::size_t k = index_of(op(points_[i], points_[j]));
      table_[i * n + j] = k;
      table_[j * n + i] = k;
    }
  }
  neg_.assign(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (table_[i * n + j] == identity_) {
        neg_[i] = j;
        break;
      }
    }
    if (neg_[i] == n) throw Error(ErrorCode::TheoremViolated, "element without inverse");
  }
}

std::optional<std::size_t> PointGroup::find(const Point& P) const {
  const auto it = index_.find(P);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t PointGroup::index_of(const Point& P) const {
  const auto i = find(P);
  if (!i) throw Error(ErrorCode::NotOnCurve, "point is not a group element");
  return *i;
}

std::size_t PointGroup::element_order(std::size_t a) const {
  std::size_t k = 1;
  for (std::size_t x = a; x != identity_; x = add(x, a)) ++k;
  return k;
}

bool PointGroup::check_axioms() const {
  const std::size_t n = size();
  for (std::size_t a = 0; a < n; ++a) {
    if (add(a, identity_) != a) return false;
    if (add(a, neg(a)) != identity_) return false;
    for (std::size_t b = 0; b < n; ++b) {
      if (add(a, b) >= n || add(a, b) != add(b, a)) return false;
      for (std::size_t c = 0; c < n; ++c) {
        if (add(add(a, b), c) != add(a, add(b, c))) return false;
      }
    }
  }
  return true;
}

CubicGroup::CubicGroup(FieldPtr F, Curve cubic, const Point& O)
    : CubicGroup(F, cubic, O, [&] {
        if (cubic.degree() != 3) throw Error(ErrorCode::BadParameters, "not a cubic");
        if (!is_nonsingular_cubic(F, cubic)) throw Error(ErrorCode::SingularPoint, "cubic is singular");
        if (!contains(*F, cubic, O)) throw Error(ErrorCode::NotOnCurve, "identity is off the cubic");
        return rational_points(*F, cubic);
      }()) {}

CubicGroup::CubicGroup(FieldPtr F, Curve cubic, const Point& O, std::vector<Point> points)
    : PointGroup(F, std::move(points), O,
                 [&F, &cubic, O](const Point& P, const Point& Q) {
                   return third_intersection(*F, cubic, O, third_intersection(*F, cubic, P, Q));
                 }),
      curve_(std::move(cubic)) {
  zero_prime_ = index_of(third_intersection(field(), curve_, O, O));
}

bool CubicGroup::check_collinearity_law() const {
  const Field& F = field();
  const std::size_t n = size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        const bool col = collinear3(F, point(i), point(j), point(k));
        const bool sum = add(add(i, j), k) == zero_prime_;
        if (col != sum) return false;
      }
    }
  }
  return true;
}

ConicLineGroup::ConicLineGroup(FieldPtr F, Curve conic, Line ell, const Point& O)
    : ConicLineGroup(F, conic, ell, O, [&] {
        if (conic.degree() != 2 || !is_irreducible_conic(*F, conic)) {
          throw Error(ErrorCode::BadParameters, "conic must be irreducible");
        }
        if (!contains(*F, conic, O)) throw Error(ErrorCode::NotOnConic, "identity is off the conic");
        if (incident(*F, O, ell)) throw Error(ErrorCode::PointOnEll, "identity lies on the line");
        std::vector<Point> pts;
        for (const auto& P : rational_points(*F, conic)) {
          if (!incident(*F, P, ell)) pts.push_back(P);
        }
        return pts;
      }()) {}

ConicLineGroup::ConicLineGroup(FieldPtr F, Curve conic, Line ell, const Point& O, std::vector<Point> points)
    : PointGroup(F, std::move(points), O,
                 [&F, &conic, &ell, O](const Point& a, const Point& b) {
                   const Field& K = *F;
                   const Line m = a == b ? tangent_line(K, conic, a) : line_through(K, a, b);
                   const Point P = meet(K, m, ell);
                   return second_intersection(K, conic, O, P);
                 }),
      conic_(std::move(conic)),
      ell_(ell) {}

std::vector<std::size_t> CosetTriple::coset(const PointGroup& g, std::size_t rep) const {
  std::vector<std::size_t> out;
  for (auto h : H) out.push_back(g.add(rep, h));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::vector<std::size_t> closure(const PointGroup& g, const std::vector<std::size_t>& gens) {
  std::set<std::size_t> s{g.identity()};
  std::vector<std::size_t> frontier{g.identity()};
  while (!frontier.empty()) {
    std::vector<std::size_t> next;
    for (auto x : frontier) {
      for (auto y : gens) {
        const auto z = g.add(x, y);
        if (s.insert(z).second) next.push_back(z);
      }
    }
    frontier = std::move(next);
  }
  return {s.begin(), s.end()};
}

}  // namespace

std::vector<std::vector<std::size_t>> all_subgroups(const PointGroup& g) {
  std::set<std::vector<std::size_t>> found;
  for (std::size_t a = 0; a < g.size(); ++a) found.insert(closure(g, {a}));
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<std::vector<std::size_t>> cur(found.begin(), found.end());
    for (std::size_t i = 0; i < cur.size(); ++i) {
      for (std::size_t j = i + 1; j < cur.size(); ++j) {
        std::vector<std::size_t> gens = cur[i];
        gens.insert(gens.end(), cur[j].begin(), cur[j].end());
        if (found.insert(closure(g, gens)).second) grew = true;
      }
    }
  }
  std::vector<std::vector<std::size_t>> out(found.begin(), found.end());
  std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.size() < y.size(); });
  return out;
}

std::vector<CosetTriple> subgroup_and_cosets(const PointGroup& g, std::size_t n, std::size_t target) {
  const std::size_t N = g.size();
  if (n == 0 || N % n != 0) throw Error(ErrorCode::NoSuchSubgroup, "order does not divide the group order");
  if (N / n <= 2) throw Error(ErrorCode::IndexTooSmall, "index must exceed two");
  std::vector<CosetTriple> out;
  bool any = false;
  for (const auto& H : all_subgroups(g)) {
    if (H.size() != n) continue;
    if (!std::binary_search(H.begin(), H.end(), target)) continue;
    any = true;
    // coset id of every element
    std::vector<std::size_t> id(N, N);
    std::vector<std::size_t> reps;
    for (std::size_t x = 0; x < N; ++x) {
      if (id[x] != N) continue;
      for (auto h : H) id[g.add(x, h)] = reps.size();
      reps.push_back(x);
    }
    for (std::size_t i = 0; i < reps.size(); ++i) {
      for (std::size_t j = i + 1; j < reps.size(); ++j) {
        const std::size_t a = reps[i], b = reps[j];
        const std::size_t c = g.sub(g.sub(target, a), b);
        if (id[c] <= j) continue;
        CosetTriple t;
        t.H = H;
        t.a = a;
        t.b = b;
        t.c = c;
        out.push_back(std::move(t));
      }
    }
  }
  if (!any) throw Error(ErrorCode::NoSuchSubgroup, "no subgroup of this order contains the target");
  return out;
}

std::vector<CosetTriple> subgroup_and_cosets(const CubicGroup& g, std::size_t n) {
  return subgroup_and_cosets(static_cast<const PointGroup&>(g), n, g.zero_prime_index());
}

void validate_triple(const PointGroup& g, const CosetTriple& t, std::size_t target) {
  const std::set<std::size_t> H(t.H.begin(), t.H.end());
  if (!H.count(g.identity()) || !H.count(target)) throw Error(ErrorCode::InvalidCosets, "subgroup misses a required element");
  for (auto x : t.H) {
    for (auto y : t.H) {
      if (!H.count(g.sub(x, y))) throw Error(ErrorCode::InvalidCosets, "subset is not a subgroup");
    }
  }
  if (g.size() / t.H.size() <= 2) throw Error(ErrorCode::IndexTooSmall, "index must exceed two");
  if (g.add(g.add(t.a, t.b), t.c) != target) throw Error(ErrorCode::InvalidCosets, "representatives have the wrong sum");
  const auto A = t.coset(g, t.a), B = t.coset(g, t.b), C = t.coset(g, t.c);
  if (A == B || B == C || A == C) throw Error(ErrorCode::InvalidCosets, "cosets are not pairwise distinct");
}

}  // namespace tnet
