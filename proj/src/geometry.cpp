#include "tnet/geometry.hpp"

#include <algorithm>
#include <optional>

namespace tnet {

Point make_point(const Field& F, Vec3 v) {
  normalize_first_nonzero(F, v);
  return Point{v};
}

Line make_line(const Field& F, Vec3 v) {
  normalize_first_nonzero(F, v);
  return Line{v};
}

Point3 make_point3(const Field& F, std::array<Elem, 4> v) {
  normalize_first_nonzero(F, v);
  return Point3{v};
}

Plane3 make_plane3(const Field& F, std::array<Elem, 4> v) {
  normalize_first_nonzero(F, v);
  return Plane3{v};
}

Point affine_point(const Field& F, Elem x, Elem y) { return make_point(F, {x, y, F.one()}); }

bool incident(const Field& F, const Point& P, const Line& l) { return dot3(F, P.c, l.c).is_zero(); }

bool incident3(const Field& F, const Point3& P, const Plane3& s) {
  Elem acc = F.zero();
  for (int i = 0; i < 4; ++i) acc = F.add(acc, F.mul(P.c[i], s.c[i]));
  return acc.is_zero();
}

Line line_through(const Field& F, const Point& P, const Point& Q) {
  if (P == Q) throw Error(ErrorCode::EqualPoints, "line through a repeated point");
  return make_line(F, cross(F, P.c, Q.c));
}

Point meet(const Field& F, const Line& l, const Line& m) {
  if (l == m) throw Error(ErrorCode::EqualLines, "meet of a line with itself");
  return make_point(F, cross(F, l.c, m.c));
}

bool collinear3(const Field& F, const Point& a, const Point& b, const Point& c) {
  return mat3_det(F, mat3_from_columns(a.c, b.c, c.c)).is_zero();
}

bool collinear(const Field& F, std::span<const Point> points) {
  if (points.empty()) return true;
  const Point& first = points.front();
  const Point* second = nullptr;
  for (const auto& P : points) {
    if (P != first) {
      second = &P;
      break;
    }
  }
  if (second == nullptr) return true;
  const Line l = line_through(F, first, *second);
  for (const auto& P : points) {
    if (!incident(F, P, l)) return false;
  }
  return true;
}

namespace {

template <std::size_t N>
std::vector<std::array<Elem, N>> normalized_vectors(const Field& F) {
  // Vectors with first nonzero coordinate one, in lexicographic index order.
  std::vector<std::array<Elem, N>> out;
  const std::uint32_t q = F.order();
  for (std::size_t lead = N; lead-- > 0;) {
    // lead = position of the leading one; earlier positions are zero
    const std::size_t free = N - 1 - lead;
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < free; ++i) count *= q;
    for (std::uint64_t t = 0; t < count; ++t) {
      std::array<Elem, N> v{};
      v[lead] = F.one();
      std::uint64_t x = t;
      for (std::size_t i = N; i-- > lead + 1;) {
        v[i] = Elem{static_cast<std::uint32_t>(x % q)};
        x /= q;
      }
      out.push_back(v);
    }
  }
  return out;
}

}  // namespace

std::vector<Point> all_points(const Field& F) {
  std::vector<Point> out;
  for (const auto& v : normalized_vectors<3>(F)) out.push_back(Point{v});
  return out;
}

std::vector<Line> all_lines(const Field& F) {
  std::vector<Line> out;
  for (const auto& v : normalized_vectors<3>(F)) out.push_back(Line{v});
  return out;
}

std::vector<Plane3> all_planes3(const Field& F) {
  std::vector<Plane3> out;
  for (const auto& v : normalized_vectors<4>(F)) out.push_back(Plane3{v});
  return out;
}

std::vector<Point> points_on_line(const Field& F, const Line& l) {
  // Two distinct points spanning l, then all combinations.
  std::vector<Point> basis;
  const Vec3 e[3] = {{F.one(), F.zero(), F.zero()}, {F.zero(), F.one(), F.zero()}, {F.zero(), F.zero(), F.one()}};
  for (const auto& ei : e) {
    const Vec3 v = cross(F, l.c, ei);
    if (v[0].is_zero() && v[1].is_zero() && v[2].is_zero()) continue;
    const Point P = make_point(F, v);
    if (basis.empty() || basis.front() != P) basis.push_back(P);
    if (basis.size() == 2) break;
  }
  std::vector<Point> out{basis[0]};
  for (Elem t : F.elements()) {
    Vec3 v{};
    for (int i = 0; i < 3; ++i) v[i] = F.add(F.mul(t, basis[0].c[i]), basis[1].c[i]);
    out.push_back(make_point(F, v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Point apply(const Field& F, const Mat3& m, const Point& P) { return make_point(F, mat3_apply(F, m, P.c)); }

std::optional<Mat3> frame_map(const Field& F, const Point& p0, const Point& p1, const Point& p2, const Point& unit) {
  const Mat3 base = mat3_from_columns(p0.c, p1.c, p2.c);
  const auto inv = mat3_inverse(F, base);
  if (!inv) return std::nullopt;
  const Vec3 lambda = mat3_apply(F, *inv, unit.c);
  for (Elem l : lambda) {
    if (l.is_zero()) return std::nullopt;
  }
  Mat3 m = base;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) m[i][j] = F.mul(base[i][j], lambda[j]);
  }
  return m;
}

std::optional<Mat3> projectivity_between(const Field& F, std::span<const Point, 4> from,
                                         std::span<const Point, 4> to) {
  const auto a = frame_map(F, from[0], from[1], from[2], from[3]);
  const auto b = frame_map(F, to[0], to[1], to[2], to[3]);
  if (!a || !b) return std::nullopt;
  return mat3_normalize(F, mat3_mul(F, *b, *mat3_inverse(F, *a)));
}

Point3 project_from_point(const Field& F, const Point3& center, const Point3& P, const Plane3& screen) {
  if (center == P) throw Error(ErrorCode::PonCenter, "projected point equals the center");
  Elem uc = F.zero(), up = F.zero();
  for (int i = 0; i < 4; ++i) {
    uc = F.add(uc, F.mul(screen.c[i], center.c[i]));
    up = F.add(up, F.mul(screen.c[i], P.c[i]));
  }
  if (uc.is_zero()) throw Error(ErrorCode::CenterOnScreen, "projection center lies on the screen");
  std::array<Elem, 4> v{};
  for (int i = 0; i < 4; ++i) v[i] = F.sub(F.mul(up, center.c[i]), F.mul(uc, P.c[i]));
  return make_point3(F, v);
}

PlaneChart::PlaneChart(const Field& F, const Plane3& screen) : F_(&F), screen_(screen) {
  for (int j = 3; j >= 0; --j) {
    if (!screen.c[j].is_zero()) {
      dropped_ = j;
      break;
    }
  }
}

Point PlaneChart::to_plane(const Point3& P) const {
  if (!incident3(*F_, P, screen_)) throw Error(ErrorCode::BadParameters, "point is not on the chart's plane");
  Vec3 v{};
  int k = 0;
  for (int i = 0; i < 4; ++i) {
    if (i != dropped_) v[k++] = P.c[i];
  }
  return make_point(*F_, v);
}

Point3 PlaneChart::from_plane(const Point& P) const {
  const Field& F = *F_;
  std::array<Elem, 4> v{};
  int k = 0;
  Elem acc = F.zero();
  for (int i = 0; i < 4; ++i) {
    if (i == dropped_) continue;
    v[i] = P.c[k++];
    acc = F.add(acc, F.mul(screen_.c[i], v[i]));
  }
  v[dropped_] = F.neg(F.div(acc, screen_.c[dropped_]));
  return make_point3(F, v);
}

std::vector<Elem> vec_of(const Point& P) { return {P.c.begin(), P.c.end()}; }

}  // namespace tnet
