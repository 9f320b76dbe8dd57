#include "tnet/theorems.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace tnet {

namespace {

std::vector<Point> concat(const std::vector<Point>& x, const std::vector<Point>& y) {
  std::vector<Point> out = x;
  out.insert(out.end(), y.begin(), y.end());
  return out;
}

Mat3 pmul(const Field& F, const Mat3& a, const Mat3& b) { return mat3_normalize(F, mat3_mul(F, a, b)); }

std::string describe(const Field& F, const std::vector<Point>& pts) {
  std::string s;
  for (const auto& P : pts) {
    s += "(";
    for (int i = 0; i < 3; ++i) s += F.to_string(P.c[i]) + (i < 2 ? ":" : "");
    s += ") ";
  }
  return s;
}

}  // namespace

// ---------------------------------------------------------------- conic theorem

Theorem1Result check_theorem1(const DualThreeNet& net, std::uint64_t seed) {
  const Field& F = *net.field;
  if (!verify_axioms(net).ok) throw Error(ErrorCode::PreconditionFailed, "input is not a dual 3-net");
  if (!collinear(F, net.C)) throw Error(ErrorCode::PreconditionFailed, "C is not on a line");
  if (net.order() > static_cast<std::size_t>(F.p())) {
    throw Error(ErrorCode::PreconditionFailed, "order exceeds the characteristic");
  }
  const auto ab = concat(net.A, net.B);
  const auto cert = curves_through(F, ab, 2);
  if (cert.nullity() == 0) throw Error(ErrorCode::TheoremViolated, "no conic through A u B: " + describe(F, ab));
  Curve conic(F, 2, cert.nullspace[0]);
  for (const auto& P : ab) {
    if (!contains(F, conic, P)) throw Error(ErrorCode::TheoremViolated, "conic misses a point");
  }
  RedeiReport redei = redei_report(net, seed);
  if (!redei.ok()) throw Error(ErrorCode::TheoremViolated, "Redei certificate fails: " + describe(F, net.all_points()));
  return Theorem1Result{conic, cert.nullity(), is_irreducible_conic(F, conic), std::move(redei)};
}

// ---------------------------------------------------------------- perspectivities

Mat3 conic_canonical_frame(const Field& F, const Curve& conic) {
  const auto pts = rational_points(F, conic);
  if (pts.size() < 3) throw Error(ErrorCode::BadParameters, "conic has fewer than three points");
  const Point K = meet(F, tangent_line(F, conic, pts[0]), tangent_line(F, conic, pts[1]));
  const Elem o = F.zero(), l = F.one();
  const std::array<Point, 4> from{pts[0], pts[1], K, pts[2]};
  const std::array<Point, 4> to{Point{{l, o, o}}, Point{{o, o, l}}, Point{{o, l, o}}, Point{{l, l, l}}};
  const auto T = projectivity_between(F, from, to);
  if (!T) throw Error(ErrorCode::TheoremViolated, "conic frame is degenerate");
  const Curve target(F, 2, {o, l, o, o, o, F.neg(l)});  // Y^2 - XZ
  for (const auto& P : pts) {
    if (!contains(F, target, apply(F, *T, P))) throw Error(ErrorCode::TheoremViolated, "conic frame is wrong");
  }
  return *T;
}

Mat3 lift_pgl2(const Field& F, Elem a, Elem b, Elem c, Elem d) {
  const Elem two = F.from_int(2);
  return Mat3{{{F.mul(a, a), F.mul(two, F.mul(a, b)), F.mul(b, b)},
               {F.mul(a, c), F.add(F.mul(a, d), F.mul(b, c)), F.mul(b, d)},
               {F.mul(c, c), F.mul(two, F.mul(c, d)), F.mul(d, d)}}};
}

Perspectivity perspectivity_from(const Field& F, const Curve& conic, const Point& Q) {
  if (contains(F, conic, Q)) throw Error(ErrorCode::OnConic, "center lies on the conic");
  if (const auto N = nucleus(F, conic); N && *N == Q) throw Error(ErrorCode::IsNucleus, "center is the nucleus");
  const Mat3 T = conic_canonical_frame(F, conic);
  const Vec3 q = mat3_apply(F, T, Q.c);
  // (s:t) -> (q1 s - q0 t : q2 s - q1 t) pairs the conic points collinear with Q.
  const Mat3 R = lift_pgl2(F, q[1], F.neg(q[0]), q[2], F.neg(q[1]));
  const Mat3 M = mat3_normalize(F, mat3_mul(F, *mat3_inverse(F, T), mat3_mul(F, R, T)));
  if (!mat3_is_scalar(F, mat3_mul(F, M, M))) throw Error(ErrorCode::TheoremViolated, "perspectivity is not involutory");
  return Perspectivity{M, Q};
}

Line apply_to_line(const Field& F, const Mat3& M, const Line& l) {
  return make_line(F, mat3_apply_row(F, l.c, *mat3_inverse(F, M)));
}

std::vector<Mat3> matrix_group(const Field& F, const std::vector<Mat3>& gens, std::size_t cap) {
  std::set<Mat3> seen{mat3_identity(F)};
  std::vector<Mat3> frontier{mat3_identity(F)};
  std::vector<Mat3> ng;
  for (const auto& g : gens) ng.push_back(mat3_normalize(F, g));
  while (!frontier.empty()) {
    std::vector<Mat3> next;
    for (const auto& x : frontier) {
      for (const auto& g : ng) {
        const Mat3 y = pmul(F, x, g);
        if (seen.insert(y).second) {
          if (seen.size() > cap) throw Error(ErrorCode::BudgetExceeded, "matrix group exceeds the cap");
          next.push_back(y);
        }
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

std::size_t matrix_order(const Field& F, const Mat3& m) {
  const Mat3 I = mat3_identity(F);
  const Mat3 g = mat3_normalize(F, m);
  Mat3 x = g;
  std::size_t k = 1;
  while (x != I) {
    x = pmul(F, x, g);
    ++k;
  }
  return k;
}

GroupType classify_group(const Field& F, const std::vector<Mat3>& elements) {
  GroupType t;
  t.order = elements.size();
  std::map<Mat3, std::size_t> ord;
  for (const auto& g : elements) {
    ord[g] = matrix_order(F, g);
    ++t.census[ord[g]];
  }
  const std::size_t N = t.order;
  bool abelian = true;
  for (std::size_t i = 0; i < N && abelian; ++i) {
    for (std::size_t j = i + 1; j < N && abelian; ++j) {
      if (pmul(F, elements[i], elements[j]) != pmul(F, elements[j], elements[i])) abelian = false;
    }
  }
  const std::size_t p = static_cast<std::size_t>(F.p());
  if (abelian) {
    if (t.census.count(N)) {
      t.name = "cyclic";
    } else if (t.census.size() == 2 && t.census.count(p)) {
      t.name = "elementary_abelian";
    } else {
      t.name = "abelian";
    }
    return t;
  }
  // elements of order p with the identity, as a candidate normal p-subgroup
  std::vector<Mat3> E;
  for (const auto& g : elements) {
    if (ord[g] == 1 || ord[g] == p) E.push_back(g);
  }
  if (E.size() > 1) {
    const std::set<Mat3> Es(E.begin(), E.end());
    bool closed = true;
    for (std::size_t i = 0; i < E.size() && closed; ++i) {
      for (std::size_t j = 0; j < E.size() && closed; ++j) closed = Es.count(pmul(F, E[i], E[j])) > 0;
    }
    if (closed && N % E.size() == 0 && (N / E.size()) % p != 0) {
      t.name = "semidirect_p";
      return t;
    }
  }
  if (N % 2 == 0 && t.census.count(N / 2)) {
    for (const auto& r : elements) {
      if (ord[r] != N / 2) continue;
      const auto R = matrix_group(F, {r});
      const std::set<Mat3> Rs(R.begin(), R.end());
      bool ok = true;
      for (const auto& g : elements) {
        if (!Rs.count(g) && ord[g] != 2) ok = false;
      }
      if (ok) {
        t.name = "dihedral";
        return t;
      }
      break;
    }
  }
  if (N == 12 && !t.census.count(6)) {
    t.name = "A4";
  } else if (N == 24 && t.census.count(4) && !t.census.count(6)) {
    t.name = "S4";
  } else if (N == 60 && t.census.count(5) && !t.census.count(6)) {
    t.name = "A5";
  } else {
    t.name = "other";
  }
  return t;
}

namespace {

std::optional<Point> param_of(const Field& F, const Vec3& v) {
  // (s^2 : st : t^2) -> (s : t)
  if (!v[2].is_zero()) return make_point(F, {v[1], v[2], F.zero()});
  if (!v[0].is_zero()) return Point{{F.one(), F.zero(), F.zero()}};
  return std::nullopt;
}

struct Pgl2 {
  Elem a, b, c, d;
};

// The PGL(2) map inducing a conic collineation R in canonical coordinates,
// recovered from the images of the parameters infinity, 0 and 1.
Pgl2 pgl2_of(const Field& F, const Mat3& R) {
  const Elem o = F.zero(), l = F.one();
  const auto ui = param_of(F, mat3_apply(F, R, {l, o, o}));
  const auto u0 = param_of(F, mat3_apply(F, R, {o, o, l}));
  const auto u1 = param_of(F, mat3_apply(F, R, {l, l, l}));
  if (!ui || !u0 || !u1) throw Error(ErrorCode::TheoremViolated, "collineation leaves the conic");
  // alpha * ui + beta * u0 = u1
  const Elem det = F.sub(F.mul(ui->c[0], u0->c[1]), F.mul(u0->c[0], ui->c[1]));
  const Elem alpha = F.div(F.sub(F.mul(u1->c[0], u0->c[1]), F.mul(u0->c[0], u1->c[1])), det);
  const Elem beta = F.div(F.sub(F.mul(ui->c[0], u1->c[1]), F.mul(u1->c[0], ui->c[1])), det);
  return Pgl2{F.mul(alpha, ui->c[0]), F.mul(beta, u0->c[0]), F.mul(alpha, ui->c[1]), F.mul(beta, u0->c[1])};
}

std::vector<Point> orbit(const Field& F, const std::vector<Mat3>& G, const Point& P) {
  std::set<Point> s;
  for (const auto& g : G) s.insert(apply(F, g, P));
  return {s.begin(), s.end()};
}

// Fixed points of the rotation over GF(q^2), swapped by every perspectivity.
bool short_orbit_swapped(const FieldPtr& Fp, const Mat3& T, const Pgl2& m, const std::vector<Mat3>& involutions) {
  const Field& F = *Fp;
  const FieldPtr Ep = Field::create(F.p(), 2 * F.k());
  const Field& E = *Ep;
  const Embedding emb(Fp, Ep);
  auto lift = [&](const Mat3& M) {
    Mat3 r{};
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) r[i][j] = emb(M[i][j]);
    }
    return r;
  };
  const Elem c = emb(m.c), e = emb(F.sub(m.d, m.a)), f = emb(F.neg(m.b));
  std::vector<std::pair<Elem, Elem>> roots;  // (s, t) with c s^2 + e s t + f t^2 = 0
  if (c.is_zero()) roots.emplace_back(E.one(), E.zero());
  for (Elem s : E.elements()) {
    if (E.add(E.add(E.mul(c, E.mul(s, s)), E.mul(e, s)), f).is_zero()) roots.emplace_back(s, E.one());
  }
  if (roots.size() != 2) return false;
  const Mat3 Ti = lift(*mat3_inverse(F, T));
  std::array<Point, 2> P;
  for (int i = 0; i < 2; ++i) {
    const auto [s, t] = roots[i];
    P[i] = make_point(E, mat3_apply(E, Ti, {E.mul(s, s), E.mul(s, t), E.mul(t, t)}));
  }
  for (const auto& g : involutions) {
    if (apply(E, lift(g), P[0]) != P[1]) return false;
  }
  return true;
}

}  // namespace

ConverseReport check_converse(const DualThreeNet& net) {
  const Field& F = *net.field;
  if (net.order() < 5) throw Error(ErrorCode::PreconditionFailed, "order must be at least 5");
  if (!verify_axioms(net).ok) throw Error(ErrorCode::PreconditionFailed, "input is not a dual 3-net");
  const auto ab = concat(net.A, net.B);
  const auto cert = curves_through(F, ab, 2);
  if (cert.nullity() == 0) throw Error(ErrorCode::PreconditionFailed, "A u B is not on a conic");
  ConverseReport rep(Curve(F, 2, cert.nullspace[0]));
  rep.conic_irreducible = is_irreducible_conic(F, rep.conic);
  if (!collinear(F, net.C)) throw Error(ErrorCode::TheoremViolated, "C is not on a line: " + describe(F, net.all_points()));
  rep.c_line = line_through(F, net.C[0], net.C[1]);
  if (!rep.conic_irreducible) return rep;

  std::vector<Mat3> invol;
  for (const auto& Q : net.C) invol.push_back(perspectivity_from(F, rep.conic, Q).matrix);
  const auto Phi = matrix_group(F, invol);
  std::vector<Mat3> pairs;
  for (const auto& x : invol) {
    for (const auto& y : invol) pairs.push_back(pmul(F, x, y));
  }
  const auto Psi = matrix_group(F, pairs);
  rep.phi_order = Phi.size();
  rep.psi_order = Psi.size();
  rep.phi_type = classify_group(F, Phi);
  rep.psi_transitive_A = orbit(F, Psi, net.A[0]) == net.A;
  rep.psi_transitive_B = orbit(F, Psi, net.B[0]) == net.B;
  rep.psi_regular = rep.psi_transitive_A && Psi.size() == net.order();
  rep.psi_abelian = true;
  for (const auto& x : Psi) {
    for (const auto& y : Psi) {
      if (pmul(F, x, y) != pmul(F, y, x)) rep.psi_abelian = false;
    }
  }
  const std::set<Mat3> psi_set(Psi.begin(), Psi.end());
  rep.coset_involutions = true;
  for (const auto& g : Phi) {
    if (!psi_set.count(g) && matrix_order(F, g) != 2) rep.coset_involutions = false;
  }

  const Mat3 T = conic_canonical_frame(F, rep.conic);
  const Mat3 Ti = *mat3_inverse(F, T);
  if (rep.phi_type.name == "dihedral") {
    for (const auto& r : Phi) {
      if (matrix_order(F, r) != Phi.size() / 2) continue;
      const Pgl2 m = pgl2_of(F, mat3_mul(F, T, mat3_mul(F, r, Ti)));
      const Vec3 lc{m.c, F.sub(m.d, m.a), F.neg(m.b)};
      if (lc[0].is_zero() && lc[1].is_zero() && lc[2].is_zero()) break;
      rep.fixed_line = make_line(F, mat3_apply_row(F, lc, T));
      rep.c_on_fixed_line = std::all_of(net.C.begin(), net.C.end(), [&](const Point& P) { return incident(F, P, *rep.fixed_line); });
      rep.short_orbit_swapped = short_orbit_swapped(net.field, T, m, invol);
      break;
    }
  }
  if (rep.phi_type.name == "semidirect_p") {
    for (const auto& P : rational_points(F, rep.conic)) {
      if (std::all_of(Psi.begin(), Psi.end(), [&](const Mat3& g) { return apply(F, g, P) == P; })) {
        rep.fixed_point = P;
        break;
      }
    }
    if (rep.fixed_point) {
      const Line t = tangent_line(F, rep.conic, *rep.fixed_point);
      if (std::all_of(Phi.begin(), Phi.end(), [&](const Mat3& g) { return apply_to_line(F, g, t) == t; })) {
        rep.invariant_tangent = t;
        rep.c_on_invariant_tangent = std::all_of(net.C.begin(), net.C.end(), [&](const Point& P) { return incident(F, P, t); });
      }
    }
  }
  return rep;
}

// ---------------------------------------------------------------- order 4

namespace {

struct Frame {
  Mat3 T;
  bool arc;
};

std::vector<Frame> frames_of(const Field& F, const std::vector<Point>& X) {
  std::vector<Frame> out;
  const std::array<std::array<int, 3>, 4> triples{{{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}}};
  bool arc = true;
  int off = -1;  // the point off the line of the other three
  for (int i = 0; i < 4; ++i) {
    const auto& t = triples[i];
    if (collinear3(F, X[t[0]], X[t[1]], X[t[2]])) {
      arc = false;
      off = i;
    }
  }
  if (arc) {
    for (int a4 = 0; a4 < 4; ++a4) {
      std::array<int, 3> r = triples[a4];
      do {
        const auto M = frame_map(F, X[r[0]], X[r[1]], X[r[2]], X[a4]);
        if (M) out.push_back(Frame{*mat3_inverse(F, *M), true});
      } while (std::next_permutation(r.begin(), r.end()));
    }
    return out;
  }
  const auto& line3 = triples[off];
  for (int a4 : line3) {
    std::vector<int> rest;
    for (int i : line3) {
      if (i != a4) rest.push_back(i);
    }
    for (int swap = 0; swap < 2; ++swap) {
      const Point& p1 = X[rest[swap]];
      const Point& p2 = X[rest[1 - swap]];
      const auto inv = mat3_inverse(F, mat3_from_columns(p1.c, p2.c, X[off].c));
      if (!inv) continue;
      const Vec3 lam = mat3_apply(F, *inv, X[a4].c);
      if (lam[0].is_zero() || lam[1].is_zero() || !lam[2].is_zero()) continue;
      Vec3 c1{}, c2{};
      for (int i = 0; i < 3; ++i) {
        c1[i] = F.mul(lam[0], p1.c[i]);
        c2[i] = F.mul(lam[1], p2.c[i]);
      }
      out.push_back(Frame{*mat3_inverse(F, mat3_from_columns(c1, c2, X[off].c)), false});
    }
  }
  return out;
}

bool relations(const Field& F, const std::array<Elem, 8>& L, bool cyclic) {
  const auto [a, b, c, d, e, f, g, h] = L;
  auto eq = [&](Elem x1, Elem x2, Elem y1, Elem y2) { return F.mul(x1, x2) == F.mul(y1, y2); };
  if (cyclic) return eq(a, f, b, c) && eq(c, h, d, e) && eq(e, b, g, f) && eq(g, d, a, h);
  return eq(a, f, d, e) && eq(c, h, b, g) && eq(e, b, a, h) && eq(g, d, f, c);
}

bool extra_relations(const Field& F, const std::array<Elem, 8>& L, bool cyclic, bool arc) {
  const auto [a, b, c, d, e, f, g, h] = L;
  const Elem one = F.one();
  auto m1 = [&](Elem x) { return F.sub(x, one); };
  auto eq = [&](Elem x1, Elem x2, Elem y1, Elem y2) { return F.mul(m1(x1), m1(x2)) == F.mul(m1(y1), m1(y2)); };
  auto zero4 = [&](Elem p, Elem q, Elem r, Elem s) { return F.add(F.sub(F.sub(p, q), r), s).is_zero(); };
  if (cyclic && arc) return eq(a, h, b, e) && eq(c, b, d, g) && eq(e, d, a, f) && eq(g, f, h, c);
  if (cyclic) return zero4(b, a, h, e) && zero4(d, c, b, g) && zero4(f, e, d, a) && zero4(h, g, f, c);
  if (arc) return eq(a, f, b, g) && eq(c, h, d, e) && eq(e, b, f, c) && eq(g, d, h, a);
  // b-a = f-g, d-c = h-e, f-e = b-c, h-g = d-a
  return F.sub(b, a) == F.sub(f, g) && F.sub(d, c) == F.sub(h, e) && F.sub(f, e) == F.sub(b, c) &&
         F.sub(h, g) == F.sub(d, a);
}

std::optional<Seven> closed_form(const Field& F, const std::array<Elem, 8>& L, bool cyclic, bool arc) {
  const auto [a, b, c, d, e, f, g, h] = L;
  auto M = [&](std::initializer_list<Elem> xs) {
    Elem r = F.one();
    for (Elem x : xs) r = F.mul(r, x);
    return r;
  };
  auto S = [&](std::initializer_list<std::pair<int, Elem>> xs) {
    Elem r = F.zero();
    for (auto [sgn, x] : xs) r = sgn > 0 ? F.add(r, x) : F.sub(r, x);
    return r;
  };
  if (cyclic) {
    const Elem w = S({{1, b}, {1, f}, {-1, d}, {-1, h}});
    return Seven{S({{1, M({b, f})}, {-1, M({d, h})}}),
                 S({{-1, M({b, f, d})}, {-1, M({h, b, f})}, {1, M({h, b, d})}, {1, M({h, d, f})}}),
                 S({{-1, M({b, c})}, {-1, M({b, e})}, {1, M({a, h})}, {1, M({d, e})}}),
                 M({a, e, w}),
                 M({b, d, e, w}),
                 M({a, e, S({{-1, M({b, f})}, {1, M({d, h})}})}),
                 M({S({{1, M({b, d})}, {-1, M({f, h})}}), S({{1, c}, {-1, g}})})};
  }
  if (arc) {
    return Seven{S({{-1, b}, {-1, d}, {1, f}, {1, h}}),
                 S({{1, M({b, d})}, {-1, M({f, h})}}),
                 S({{1, a}, {1, c}, {-1, e}, {-1, g}}),
                 S({{-1, M({a, c})}, {1, M({e, g})}}),
                 M({b, S({{1, f}, {-1, d}}), S({{1, e}, {1, g}})}),
                 M({e, S({{1, c}, {-1, g}}), S({{1, b}, {1, d}})}),
                 F.zero()};
  }
  return std::nullopt;
}

Vec seven_to_cubic(const Field& F, const Seven& x) {
  Vec v{F.zero(), F.zero(), F.zero()};
  v.insert(v.end(), x.begin(), x.end());
  return v;
}

}  // namespace

N4Certificate check_n4(const DualThreeNet& net) {
  const Field& F = *net.field;
  if (net.order() != 4) throw Error(ErrorCode::NotOrder4, "order must be 4");
  N4Certificate cert;
  const auto pts = net.all_points();
  const auto rc = curves_through(F, pts, 3);
  cert.nullity = rc.nullity();
  cert.kernel = rc.nullspace;
  if (cert.nullity == 0) throw Error(ErrorCode::TheoremViolated, "no cubic through the 12 points: " + describe(F, pts));
  cert.frame = mat3_identity(F);

  struct Candidate {
    int role;
    bool swapped;
    Frame fr;
    std::array<Elem, 8> L;
    bool cyclic;
    bool extra;
  };
  std::optional<Candidate> best, first_main;
  bool any_role = false;
  for (int role = 0; role < 3 && !best; ++role) {
    const auto& X = net.component(role);
    if (collinear(F, X)) continue;
    any_role = true;
    const int y = role == 0 ? 1 : 0, z = role == 2 ? 1 : 2;
    for (int swapped = 0; swapped < 2 && !best; ++swapped) {
      const auto& Bc = net.component(swapped ? z : y);
      const auto& Cc = net.component(swapped ? y : z);
      for (const auto& fr : frames_of(F, X)) {
        std::array<std::pair<Elem, Elem>, 4> Bxy, Cxy;
        bool affine = true;
        for (int i = 0; i < 4 && affine; ++i) {
          const Vec3 u = mat3_apply(F, fr.T, Bc[i].c), v = mat3_apply(F, fr.T, Cc[i].c);
          if (u[2].is_zero() || v[2].is_zero()) {
            affine = false;
            break;
          }
          Bxy[i] = {F.div(u[0], u[2]), F.div(u[1], u[2])};
          Cxy[i] = {F.div(v[0], v[2]), F.div(v[1], v[2])};
        }
        if (!affine) continue;
        std::array<int, 4> sigma{-1, -1, -1, -1};
        bool ok = true;
        for (const auto& [u, v] : Cxy) {
          int i = -1, j = -1;
          for (int k = 0; k < 4; ++k) {
            if (Bxy[k].first == u) i = k;
            if (Bxy[k].second == v) j = k;
          }
          if (i < 0 || j < 0 || sigma[i] >= 0 || i == j) {
            ok = false;
            break;
          }
          sigma[i] = j;
        }
        if (!ok) continue;
        const bool cyclic = sigma[sigma[0]] != 0;
        std::vector<std::array<int, 4>> orders;
        if (cyclic) {
          for (int s = 0; s < 4; ++s) orders.push_back({s, sigma[s], sigma[sigma[s]], sigma[sigma[sigma[s]]]});
        } else {
          for (int s = 0; s < 4; ++s) {
            for (int t = 0; t < 4; ++t) {
              if (t != s && t != sigma[s]) orders.push_back({s, sigma[s], t, sigma[t]});
            }
          }
        }
        for (const auto& o : orders) {
          std::array<Elem, 8> L{};
          for (int k = 0; k < 4; ++k) {
            L[2 * k] = Bxy[o[k]].first;
            L[2 * k + 1] = Bxy[o[k]].second;
          }
          if (!relations(F, L, cyclic)) continue;
          const bool extra = extra_relations(F, L, cyclic, fr.arc);
          const Candidate cand{role, swapped != 0, fr, L, cyclic, extra};
          if (!first_main) first_main = cand;
          if (extra) {
            best = cand;
            break;
          }
        }
        if (best) break;
      }
    }
  }
  if (!any_role) {
    cert.all_collinear = true;
    return cert;
  }
  if (!best) best = first_main;
  if (!best) return cert;

  cert.labeling_found = true;
  cert.role = best->role;
  cert.roles_swapped = best->swapped;
  cert.frame = best->fr.T;
  cert.case_arc = best->fr.arc;
  cert.case_cyclic = best->cyclic;
  cert.extra_relations = best->extra;
  cert.letters = best->L;

  std::vector<Point> canon;
  for (const auto& P : pts) canon.push_back(apply(F, cert.frame, P));
  cert.closed_form = closed_form(F, cert.letters, cert.case_cyclic, cert.case_arc);
  if (cert.closed_form) {
    const auto& x = *cert.closed_form;
    cert.closed_form_nonzero = std::any_of(x.begin(), x.end(), [](Elem e) { return !e.is_zero(); });
    const Vec cubic = seven_to_cubic(F, x);
    cert.closed_form_in_kernel =
        std::all_of(canon.begin(), canon.end(), [&](const Point& P) { return evaluate(F, 3, cubic, P.c).is_zero(); });
    if (cert.case_arc) {
      Elem s = F.zero();
      for (Elem e : x) s = F.add(s, e);
      cert.side_condition = s.is_zero();
    } else {
      cert.side_condition = F.add(x[0], x[2]).is_zero();
    }
  }
  if (!cert.case_cyclic && !cert.case_arc) {
    const auto [a, b, c, d, e, f, g, h] = cert.letters;
    cert.forced_structure = e == F.neg(a) && f == F.neg(d) && g == F.neg(c) && h == F.neg(b);
    cert.d_relation = d == F.add(F.sub(a, b), c);
    cert.odd_characteristic = F.p() != 2;
    // a cubic through the canonical points with no pure cubes and x1 + x3 = 0
    Matrix m(0, 10);
    for (const auto& P : canon) m.append_row(veronese_row(F, P.c, 3));
    for (int i = 0; i < 3; ++i) {
      Vec unit(10, F.zero());
      unit[i] = F.one();
      m.append_row(unit);
    }
    Vec x13(10, F.zero());
    x13[3] = F.one();
    x13[5] = F.one();
    m.append_row(x13);
    cert.side_condition = row_reduce(F, m).nullity() >= 1;
  }
  return cert;
}

// ---------------------------------------------------------------- orders 2, 3

bool N3Report::holds() const {
  return b_collinear == b_formula && c_collinear == c_formula && b_collinear == ac_on_irreducible_conic &&
         c_collinear == ab_on_irreducible_conic && cubic_nullity >= 1;
}

namespace {

bool on_triangle_conic(const Field& F, const std::vector<Point>& pts) {
  const auto rc = curves_through(F, pts, 2);
  for (const auto& v : rc.nullspace) {
    // a conic through the coordinate triangle has no square terms
    if (!v[0].is_zero() || !v[1].is_zero() || !v[2].is_zero()) {
      throw Error(ErrorCode::TheoremViolated, "conic through the triangle has square terms");
    }
    if (is_irreducible_conic(F, Curve(F, 2, v))) return true;
  }
  return false;
}

}  // namespace

N3Report check_n3(FieldPtr F, Elem a, Elem b, Elem c) {
  const DualThreeNet net = n3_family(F, a, b, c);
  const Field& K = *F;
  N3Report r;
  const Elem three = K.from_int(3);
  r.b_collinear = collinear(K, net.B);
  r.c_collinear = collinear(K, net.C);
  r.b_formula = K.add(K.add(K.div(a, c), K.div(c, b)), K.div(b, a)) == three;
  r.c_formula = K.add(K.add(K.div(a, b), K.div(b, c)), K.div(c, a)) == three;
  r.ac_on_irreducible_conic = on_triangle_conic(K, concat(net.A, net.C));
  r.ab_on_irreducible_conic = on_triangle_conic(K, concat(net.A, net.B));
  r.cubic_nullity = curves_through(K, net.all_points(), 3).nullity();
  return r;
}

std::array<Point, 6> pasch_points(const Field& F) {
  const Elem o = F.zero(), l = F.one();
  return {Point{{o, o, l}}, Point{{o, l, o}}, Point{{l, o, o}}, Point{{l, l, l}}, Point{{l, o, l}}, Point{{o, l, l}}};
}

std::optional<Mat3> pasch_projectivity(const Field& F, const std::array<Point, 6>& pts) {
  const auto S = pasch_points(F);
  const std::array<Point, 4> to{S[0], S[1], S[2], S[3]};
  const std::set<Point> rest_target{S[4], S[5]};
  std::array<int, 6> sel{1, 1, 1, 1, 0, 0};  // prev_permutation walks subsets in index order
  do {
    std::array<int, 4> idx{};
    std::vector<int> others;
    int k = 0;
    for (int i = 0; i < 6; ++i) {
      if (sel[i]) {
        idx[k++] = i;
      } else {
        others.push_back(i);
      }
    }
    do {
      const std::array<Point, 4> from{pts[idx[0]], pts[idx[1]], pts[idx[2]], pts[idx[3]]};
      const auto M = projectivity_between(F, from, to);
      if (!M) continue;
      const std::set<Point> img{apply(F, *M, pts[others[0]]), apply(F, *M, pts[others[1]])};
      if (img == rest_target) return M;
    } while (std::next_permutation(idx.begin(), idx.end()));
  } while (std::prev_permutation(sel.begin(), sel.end()));
  return std::nullopt;
}

Vec pasch_pencil_member(const Field& F, Elem a, Elem b, Elem c, Elem d) {
  // X^3 Y^3 Z^3 X^2Y X^2Z Y^2X Y^2Z Z^2X Z^2Y XYZ
  const Elem o = F.zero();
  return {o, o, o, a, c, b, d, F.neg(c), F.neg(d), F.neg(F.add(a, b))};
}

N2Report check_n2(const DualThreeNet& net, std::size_t random_members, std::uint64_t seed) {
  const Field& F = *net.field;
  if (net.order() != 2) throw Error(ErrorCode::NotOrder2, "order must be 2");
  const auto all = net.all_points();
  std::array<Point, 6> pts{};
  std::copy(all.begin(), all.end(), pts.begin());
  const auto M = pasch_projectivity(F, pts);
  if (!M) throw Error(ErrorCode::NoEquivalence, "no projectivity onto the Pasch points: " + describe(F, all));
  N2Report r{*M};
  std::vector<Point> img;
  for (const auto& P : pts) img.push_back(apply(F, *M, P));
  std::vector<std::array<Elem, 4>> members;
  const Elem o = F.zero(), l = F.one();
  members.push_back({l, o, o, o});
  members.push_back({o, l, o, o});
  members.push_back({o, o, l, o});
  members.push_back({o, o, o, l});
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < random_members; ++i) {
    std::array<Elem, 4> m{};
    for (auto& x : m) x = Elem{static_cast<std::uint32_t>(rng() % F.order())};
    members.push_back(m);
  }
  r.pencil_ok = true;
  for (const auto& m : members) {
    const Vec cubic = pasch_pencil_member(F, m[0], m[1], m[2], m[3]);
    for (const auto& P : img) {
      if (!evaluate(F, 3, cubic, P.c).is_zero()) r.pencil_ok = false;
    }
    ++r.pencil_checks;
  }
  r.cubic_nullity = curves_through(F, img, 3).nullity();
  return r;
}

// ---------------------------------------------------------------- Waterhouse

std::set<long long> waterhouse_admissible(const Field& F) {
  const long long q = F.order(), p = F.p();
  std::set<long long> out;
  for (long long m = -2 * q; m <= 2 * q; ++m) {
    if (m * m <= 4 * q && m % p != 0) out.insert(q + 1 - m);
  }
  return out;
}

WaterhouseReport waterhouse_scan(const FieldPtr& Fp, const WaterhouseOptions& opt) {
  const Field& F = *Fp;
  const long long q = F.order();
  WaterhouseReport rep;
  rep.admissible = waterhouse_admissible(F);
  const NonsingularityChecker checker(Fp);
  auto record = [&](const Vec& coeffs) {
    ++rep.scanned;
    const Curve cubic(F, 3, coeffs);
    if (!checker.is_nonsingular(cubic)) return;
    ++rep.nonsingular;
    const long long N = static_cast<long long>(rational_points(F, cubic).size());
    ++rep.histogram[N];
    const long long m = q + 1 - N;
    if (m * m > 4 * q) ++rep.bound_violations;
    if (rep.admissible.count(N)) rep.realized_admissible.insert(N);
  };
  if (q <= 3) {
    rep.exhaustive = true;
    std::uint64_t total = 1;
    for (int i = 0; i < 10; ++i) total *= static_cast<std::uint64_t>(q);
    for (std::uint64_t t = 1; t < total; ++t) {
      Vec v(10);
      std::uint64_t x = t;
      for (int i = 9; i >= 0; --i) {
        v[i] = Elem{static_cast<std::uint32_t>(x % q)};
        x /= q;
      }
      const auto lead = std::find_if(v.begin(), v.end(), [](Elem e) { return !e.is_zero(); });
      if (*lead != F.one()) continue;
      record(v);
    }
  } else {
    std::mt19937_64 rng(opt.seed);
    while (rep.scanned < opt.max_samples) {
      if (rep.scanned >= opt.min_samples && rep.realized_admissible.size() == rep.admissible.size()) break;
      Vec v(10);
      bool zero = true;
      for (auto& e : v) {
        e = Elem{static_cast<std::uint32_t>(rng() % static_cast<std::uint64_t>(q))};
        zero = zero && e.is_zero();
      }
      if (zero) continue;
      record(v);
    }
  }
  for (long long N : rep.admissible) {
    if (!rep.realized_admissible.count(N)) rep.missing.insert(N);
  }
  return rep;
}

// ---------------------------------------------------------------- projection claims

std::map<Line, std::size_t> secant_counts(const Field& F, const std::vector<Point>& S) {
  std::set<Line> lines;
  for (std::size_t i = 0; i < S.size(); ++i) {
    for (std::size_t j = i + 1; j < S.size(); ++j) lines.insert(line_through(F, S[i], S[j]));
  }
  std::map<Line, std::size_t> out;
  for (const auto& l : lines) {
    std::size_t k = 0;
    for (const auto& P : S) k += incident(F, P, l) ? 1 : 0;
    out[l] = k;
  }
  return out;
}

ProjectionClaims check_projection_claims(const ProjectionData& d) {
  const Field& F = *d.net.field;
  const auto& net = d.net;
  ProjectionClaims c;
  c.axioms = verify_axioms(net).ok;
  c.c_collinear = collinear(F, net.C);
  c.conic_nullity_ab = curves_through(F, concat(net.A, net.B), 2).nullity();
  c.cubic_nullity_a = curves_through(F, net.A, 3).nullity();
  c.cubic_nullity_b = curves_through(F, net.B, 3).nullity();
  const std::size_t r = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(net.order()))));
  for (const auto& [l, k] : secant_counts(F, net.A)) {
    if (k == r) ++c.full_lines_a;
    c.max_collinear_a = std::max(c.max_collinear_a, k);
  }
  for (const auto& [l, k] : secant_counts(F, net.B)) {
    if (k == r) ++c.full_lines_b;
    c.max_collinear_b = std::max(c.max_collinear_b, k);
  }
  c.transversal_closure = d.transversal_closure;
  c.injective = d.projection_injective;
  return c;
}

}  // namespace tnet
