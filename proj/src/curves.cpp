#include "tnet/curves.hpp"

#include <algorithm>

namespace tnet {

namespace {

constexpr std::array<Exponent, 6> kQuadratic = {{{2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {1, 1, 0}, {0, 1, 1}, {1, 0, 1}}};
constexpr std::array<Exponent, 10> kCubic = {{{3, 0, 0},
                                              {0, 3, 0},
                                              {0, 0, 3},
                                              {2, 1, 0},
                                              {2, 0, 1},
                                              {1, 2, 0},
                                              {0, 2, 1},
                                              {1, 0, 2},
                                              {0, 1, 2},
                                              {1, 1, 1}}};

int monomial_index(int degree, const Exponent& e) {
  const auto mons = monomials(degree);
  for (std::size_t i = 0; i < mons.size(); ++i) {
    if (mons[i] == e) return static_cast<int>(i);
  }
  return -1;
}

Elem power(const Field& F, Elem x, int e) {
  Elem r = F.one();
  for (int i = 0; i < e; ++i) r = F.mul(r, x);
  return r;
}

// Coefficients (in degree-1 order) of the partial derivative along `var`.
std::array<Vec, 3> partial_coefficients(const Field& F, int degree, std::span<const Elem> coeffs) {
  std::array<Vec, 3> out;
  const auto mons = monomials(degree);
  const auto lower = monomials(degree - 1);
  for (int var = 0; var < 3; ++var) {
    out[var].assign(lower.size(), F.zero());
    for (std::size_t m = 0; m < mons.size(); ++m) {
      if (coeffs[m].is_zero() || mons[m][var] == 0) continue;
      Exponent e = mons[m];
      const int mult = e[var];
      e[var] -= 1;
      const int idx = monomial_index(degree - 1, e);
      out[var][idx] = F.add(out[var][idx], F.mul(F.from_int(mult), coeffs[m]));
    }
  }
  return out;
}

}  // namespace

std::span<const Exponent> monomials(int degree) {
  static constexpr std::array<Exponent, 3> kLinear = {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  switch (degree) {
    case 1: return kLinear;
    case 2: return kQuadratic;
    case 3: return kCubic;
    default: throw Error(ErrorCode::BadParameters, "only degrees 1, 2, 3 are supported");
  }
}

Curve::Curve(const Field& F, int degree, Vec coeffs) : degree_(degree), coeffs_(std::move(coeffs)) {
  if (degree != 2 && degree != 3) throw Error(ErrorCode::BadParameters, "curves have degree 2 or 3");
  if (coeffs_.size() != monomials(degree).size()) throw Error(ErrorCode::SizeMismatch, "wrong coefficient count");
  normalize_first_nonzero(F, coeffs_);
}

Vec veronese_row(const Field& F, const Vec3& P, int degree) {
  const auto mons = monomials(degree);
  std::array<std::array<Elem, 4>, 3> pw{};
  for (int v = 0; v < 3; ++v) {
    for (int e = 0; e <= 3; ++e) pw[v][e] = power(F, P[v], e);
  }
  Vec row;
  row.reserve(mons.size());
  for (const auto& m : mons) row.push_back(F.mul(F.mul(pw[0][m[0]], pw[1][m[1]]), pw[2][m[2]]));
  return row;
}

Elem evaluate(const Field& F, int degree, std::span<const Elem> coeffs, const Vec3& P) {
  const Vec row = veronese_row(F, P, degree);
  Elem acc = F.zero();
  for (std::size_t i = 0; i < row.size(); ++i) acc = F.add(acc, F.mul(row[i], coeffs[i]));
  return acc;
}

Vec3 gradient(const Field& F, int degree, std::span<const Elem> coeffs, const Vec3& P) {
  const auto parts = partial_coefficients(F, degree, coeffs);
  Vec3 g{};
  for (int v = 0; v < 3; ++v) g[v] = evaluate(F, degree - 1, parts[v], P);
  return g;
}

RankCertificate curves_through(const Field& F, std::span<const Point> points, int degree) {
  Matrix m(0, monomials(degree).size());
  for (const auto& P : points) m.append_row(veronese_row(F, P.c, degree));
  return row_reduce(F, m);
}

bool contains(const Field& F, const Curve& c, const Point& P) {
  return evaluate(F, c.degree(), c.coeffs(), P.c).is_zero();
}

std::vector<Point> rational_points(const Field& F, const Curve& c) {
  std::vector<Point> out;
  for (const auto& P : all_points(F)) {
    if (contains(F, c, P)) out.push_back(P);
  }
  return out;
}

Vec restrict_to_line(const Field& F, int degree, std::span<const Elem> coeffs, const Vec3& P, const Vec3& R) {
  // Binary forms are stored highest power of s first: b[i] is the coefficient of s^{d-i} t^i.
  Vec total(static_cast<std::size_t>(degree) + 1, F.zero());
  const auto mons = monomials(degree);
  for (std::size_t m = 0; m < mons.size(); ++m) {
    if (coeffs[m].is_zero()) continue;
    Vec prod{coeffs[m]};
    for (int var = 0; var < 3; ++var) {
      for (int e = 0; e < mons[m][var]; ++e) {
        Vec next(prod.size() + 1, F.zero());
        for (std::size_t i = 0; i < prod.size(); ++i) {
          next[i] = F.add(next[i], F.mul(prod[i], P[var]));
          next[i + 1] = F.add(next[i + 1], F.mul(prod[i], R[var]));
        }
        prod = std::move(next);
      }
    }
    for (std::size_t i = 0; i < prod.size(); ++i) total[i] = F.add(total[i], prod[i]);
  }
  return total;
}

bool contains_line(const Field& F, const Curve& c, const Line& l) {
  const auto pts = points_on_line(F, l);
  const Vec r = restrict_to_line(F, c.degree(), c.coeffs(), pts[0].c, pts[1].c);
  return std::all_of(r.begin(), r.end(), [](Elem e) { return e.is_zero(); });
}

bool is_irreducible_conic(const Field& F, const Curve& c) {
  if (c.degree() != 2) throw Error(ErrorCode::BadParameters, "not a conic");
  for (const auto& l : all_lines(F)) {
    if (contains_line(F, c, l)) return false;
  }
  // A conjugate pair of lines has a single rational point.
  return rational_points(F, c).size() == static_cast<std::size_t>(F.order()) + 1;
}

Line tangent_line(const Field& F, const Curve& c, const Point& P) {
  if (!contains(F, c, P)) throw Error(ErrorCode::NotOnCurve, "tangent requested at a point off the curve");
  const Vec3 g = gradient(F, c.degree(), c.coeffs(), P.c);
  if (g[0].is_zero() && g[1].is_zero() && g[2].is_zero()) {
    throw Error(ErrorCode::SingularPoint, "gradient vanishes");
  }
  return make_line(F, g);
}

NonsingularityChecker::NonsingularityChecker(FieldPtr base) : base_(std::move(base)) {
  ext_ = Field::create(base_->p(), 2 * base_->k());
  emb_ = std::make_unique<Embedding>(base_, ext_);
  for (const auto& P : all_points(*ext_)) {
    ext_points_.push_back(P.c);
    const Vec row = veronese_row(*ext_, P.c, 2);
    std::array<Elem, 6> r{};
    std::copy(row.begin(), row.end(), r.begin());
    ext_quadrics_.push_back(r);
  }
  base_points_ = all_points(*base_);
}

std::optional<Vec3> NonsingularityChecker::singular_point(const Curve& cubic) const {
  if (cubic.degree() != 3) throw Error(ErrorCode::BadParameters, "not a cubic");
  const Field& E = *ext_;
  Vec lifted;
  for (Elem e : cubic.coeffs()) lifted.push_back((*emb_)(e));
  const auto parts = partial_coefficients(E, 3, lifted);
  auto eval6 = [&](const Vec& c, const std::array<Elem, 6>& row) {
    Elem acc = E.zero();
    for (int i = 0; i < 6; ++i) {
      if (!c[i].is_zero()) acc = E.add(acc, E.mul(c[i], row[i]));
    }
    return acc;
  };
  for (std::size_t i = 0; i < ext_points_.size(); ++i) {
    const auto& row = ext_quadrics_[i];
    if (!eval6(parts[0], row).is_zero()) continue;
    if (!eval6(parts[1], row).is_zero()) continue;
    if (!eval6(parts[2], row).is_zero()) continue;
    if (!evaluate(E, 3, lifted, ext_points_[i]).is_zero()) continue;
    return ext_points_[i];
  }
  return std::nullopt;
}

bool NonsingularityChecker::is_nonsingular(const Curve& cubic) const {
  if (singular_point(cubic)) return false;
  const Field& F = *base_;
  return std::any_of(base_points_.begin(), base_points_.end(),
                     [&](const Point& P) { return contains(F, cubic, P); });
}

bool is_nonsingular_cubic(const FieldPtr& F, const Curve& cubic) {
  return NonsingularityChecker(F).is_nonsingular(cubic);
}

std::optional<Point> nucleus(const Field& F, const Curve& conic) {
  if (conic.degree() != 2) throw Error(ErrorCode::BadParameters, "not a conic");
  if (F.p() != 2) return std::nullopt;
  const auto& c = conic.coeffs();
  return make_point(F, {c[4], c[5], c[3]});
}

}  // namespace tnet
