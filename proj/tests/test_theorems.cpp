#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "tnet/theorems.hpp"

using namespace tnet;

namespace {

Point pt(const Field& F, int x, int y, int z) { return make_point(F, {F.from_int(x), F.from_int(y), F.from_int(z)}); }

Curve yxz(const Field& F) { return Curve(F, 2, {F.zero(), F.one(), F.zero(), F.zero(), F.zero(), F.neg(F.one())}); }

bool det_zero(const Field& F, const Point& P, const Point& Q, const Point& R) {
  auto m = [&](Elem x, Elem y) { return F.mul(x, y); };
  const auto &a = P.c, &b = Q.c, &c = R.c;
  Elem d = m(a[0], F.sub(m(b[1], c[2]), m(b[2], c[1])));
  d = F.sub(d, m(a[1], F.sub(m(b[0], c[2]), m(b[2], c[0]))));
  d = F.add(d, m(a[2], F.sub(m(b[0], c[1]), m(b[1], c[0]))));
  return d.is_zero();
}

bool scalar_identity(const Field& F, const Mat3& M) {
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i != j && !M[i][j].is_zero()) return false;
    }
  }
  return !M[0][0].is_zero() && M[0][0] == M[1][1] && M[1][1] == M[2][2];
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::ParseError;
}

FieldPtr gf(int q) {
  const auto pk = prime_power(q);
  return Field::create(pk->first, pk->second);
}

}  // namespace

TEST_CASE("conic theorem on nets with a collinear component") {
  struct Case {
    int q;
    ConicLineKind kind;
    std::size_t n;
  };
  for (const auto& c : std::vector<Case>{{11, ConicLineKind::hyperbola, 5},
                                         {19, ConicLineKind::hyperbola, 6},
                                         {49, ConicLineKind::parabola, 7},
                                         {25, ConicLineKind::parabola, 5},
                                         {19, ConicLineKind::circle, 5},
                                         {11, ConicLineKind::circle, 6},
                                         {11, ConicLineKind::lines_mult, 5},
                                         {25, ConicLineKind::lines_add, 5}}) {
    const auto F = gf(c.q);
    const auto net = construct_conic_line(F, {c.kind, c.n, {}, {}});
    const auto r = check_theorem1(net, 3);
    CAPTURE(c.q);
    CAPTURE(to_string(c.kind));
    CHECK(r.nullity >= 1);
    for (const auto& P : net.A) CHECK(oracle::eval_form(*F, r.conic.coeffs(), P.c).is_zero());
    for (const auto& P : net.B) CHECK(oracle::eval_form(*F, r.conic.coeffs(), P.c).is_zero());
    CHECK(r.redei.ok());
    const bool lines = c.kind == ConicLineKind::lines_mult || c.kind == ConicLineKind::lines_add;
    CHECK(r.conic_irreducible == !lines);
  }
  const auto F9 = gf(9);
  const auto circ = construct_conic_line(F9, {ConicLineKind::circle, 5, {}, {}});
  CHECK(code_of([&] { check_theorem1(circ); }) == ErrorCode::PreconditionFailed);
  const auto F7 = Field::create(7, 1);
  std::size_t refused = 0;
  for (int b = 2; b < 7; ++b) {
    for (int c = 2; c < 7; ++c) {
      if (b == c) continue;
      const auto net = n3_family(F7, F7->one(), F7->from_int(b), F7->from_int(c));
      if (oracle::all_on_one_line(*F7, net.C)) continue;
      CHECK(code_of([&] { check_theorem1(net); }) == ErrorCode::PreconditionFailed);
      ++refused;
    }
  }
  CHECK(refused > 0);
}

TEST_CASE("perspectivities of a conic") {
  const auto F = Field::create(11, 1);
  const Curve K = yxz(*F);
  const auto on = rational_points(*F, K);
  for (const auto& Q : all_points(*F)) {
    if (contains(*F, K, Q)) {
      CHECK(code_of([&] { perspectivity_from(*F, K, Q); }) == ErrorCode::OnConic);
      continue;
    }
    const auto phi = perspectivity_from(*F, K, Q);
    CHECK(apply(*F, phi.matrix, Q) == Q);
    CHECK(scalar_identity(*F, mat3_mul(*F, phi.matrix, phi.matrix)));
    for (const auto& P : on) {
      const Point R = apply(*F, phi.matrix, P);
      CHECK(contains(*F, K, R));
      CHECK(det_zero(*F, Q, P, R));
      // the other conic point on line QP, or P itself on a tangent
      std::vector<Point> meets;
      for (const auto& S : on) {
        if (S != P && det_zero(*F, Q, P, S)) meets.push_back(S);
      }
      if (meets.empty()) {
        CHECK(R == P);
      } else {
        REQUIRE(meets.size() == 1);
        CHECK(R == meets[0]);
      }
    }
  }
}

TEST_CASE("nucleus has no perspectivity") {
  const auto F = Field::create(2, 2);
  const Curve K = yxz(*F);
  const auto N = nucleus(*F, K);
  REQUIRE(N);
  CHECK(code_of([&] { perspectivity_from(*F, K, *N); }) == ErrorCode::IsNucleus);
}

TEST_CASE("lifted PGL(2) maps preserve the model conic") {
  const auto F = Field::create(7, 1);
  const Curve K = yxz(*F);
  std::mt19937_64 rng(2);
  for (int t = 0; t < 30; ++t) {
    const Elem a{static_cast<std::uint32_t>(rng() % 7)}, b{static_cast<std::uint32_t>(rng() % 7)},
        c{static_cast<std::uint32_t>(rng() % 7)}, d{static_cast<std::uint32_t>(rng() % 7)};
    if (F->sub(F->mul(a, d), F->mul(b, c)).is_zero()) continue;
    const Mat3 M = lift_pgl2(*F, a, b, c, d);
    for (const auto& P : rational_points(*F, K)) CHECK(contains(*F, K, apply(*F, M, P)));
  }
  const Mat3 frame = conic_canonical_frame(*F, Curve(*F, 2, {F->one(), F->one(), F->neg(F->one()), F->zero(), F->zero(), F->zero()}));
  for (const auto& P : rational_points(*F, Curve(*F, 2, {F->one(), F->one(), F->neg(F->one()), F->zero(), F->zero(), F->zero()}))) {
    CHECK(contains(*F, K, apply(*F, frame, P)));
  }
}

TEST_CASE("group classification") {
  const auto F = Field::create(11, 1);
  const Curve K = model_conic(*F, ConicLineKind::hyperbola);
  const auto net = construct_conic_line(F, {ConicLineKind::hyperbola, 5, {}, {}});
  std::vector<Mat3> gens;
  for (const auto& Q : net.C) gens.push_back(perspectivity_from(*F, K, Q).matrix);
  const auto G = matrix_group(*F, gens);
  const auto type = classify_group(*F, G);
  CHECK(type.name == "dihedral");
  CHECK(type.order == 10);
  CHECK(type.census.at(2) == 5);
  CHECK(type.census.at(5) == 4);
  CHECK(matrix_order(*F, gens[0]) == 2);
}

TEST_CASE("converse: dihedral and parabolic cases") {
  for (auto [q, n] : std::vector<std::pair<int, std::size_t>>{{11, 5}, {19, 6}, {13, 6}}) {
    const auto F = gf(q);
    const auto rep = check_converse(construct_conic_line(F, {ConicLineKind::hyperbola, n, {}, {}}));
    CHECK(rep.c_line.has_value());
    CHECK(rep.phi_type.name == "dihedral");
    CHECK(rep.phi_order == 2 * n);
    CHECK(rep.c_on_fixed_line);
    CHECK(rep.short_orbit_swapped);
  }
  for (auto [q, n] : std::vector<std::pair<int, std::size_t>>{{19, 5}, {9, 5}, {11, 6}}) {
    const auto rep = check_converse(construct_conic_line(gf(q), {ConicLineKind::circle, n, {}, {}}));
    CHECK(rep.phi_type.name == "dihedral");
    CHECK(rep.phi_order == 2 * n);
    CHECK(rep.c_on_fixed_line);
  }
  for (auto [q, n] : std::vector<std::pair<int, std::size_t>>{{25, 5}, {49, 7}}) {
    const auto rep = check_converse(construct_conic_line(gf(q), {ConicLineKind::parabola, n, {}, {}}));
    CHECK(rep.phi_type.name == "semidirect_p");
    CHECK(rep.invariant_tangent.has_value());
    CHECK(rep.c_on_invariant_tangent);
  }
  const auto F = Field::create(13, 1);
  CHECK(code_of([&] { check_converse(construct_conic_line(F, {ConicLineKind::hyperbola, 4, {}, {}})); }) ==
        ErrorCode::PreconditionFailed);
}

TEST_CASE("order four certificates") {
  for (auto [q, kind] : std::vector<std::pair<int, ConicLineKind>>{
           {13, ConicLineKind::hyperbola}, {7, ConicLineKind::circle}, {11, ConicLineKind::circle},
           {8, ConicLineKind::parabola}, {8, ConicLineKind::lines_add}, {13, ConicLineKind::lines_mult}}) {
    const auto F = gf(q);
    const auto net = construct_conic_line(F, {kind, 4, {}, {}});
    const auto cert = check_n4(net);
    CAPTURE(q);
    CAPTURE(to_string(kind));
    CHECK(cert.nullity >= 1);
    for (const auto& v : cert.kernel) {
      for (const auto& P : net.all_points()) CHECK(oracle::eval_form(*F, v, P.c).is_zero());
    }
    const bool lines = kind == ConicLineKind::lines_add || kind == ConicLineKind::lines_mult;
    CHECK(cert.all_collinear == lines);
    if (lines) continue;
    CHECK(cert.labeling_found);
    CHECK(cert.side_condition);
    if (cert.closed_form) {
      CHECK(cert.closed_form_nonzero);
      CHECK(cert.closed_form_in_kernel);
    }
  }
  CHECK(code_of([] { check_n4(pasch_net(Field::create(5, 1))); }) == ErrorCode::NotOrder4);
}

TEST_CASE("order three biconditional") {
  for (int p : {5, 7}) {
    const auto F = Field::create(p, 1);
    for (int a = 1; a < p; ++a) {
      for (int b = 1; b < p; ++b) {
        for (int c = 1; c < p; ++c) {
          if (a == b || b == c || a == c) continue;
          const auto r = check_n3(F, F->from_int(a), F->from_int(b), F->from_int(c));
          CHECK(r.holds());
          const auto net = n3_family(F, F->from_int(a), F->from_int(b), F->from_int(c));
          CHECK(r.c_collinear == oracle::all_on_one_line(*F, net.C));
          CHECK(r.b_collinear == oracle::all_on_one_line(*F, net.B));
        }
      }
    }
  }
}

TEST_CASE("the case (1,2,4) over GF(7)") {
  const auto F = Field::create(7, 1);
  const auto r = check_n3(F, F->from_int(1), F->from_int(2), F->from_int(4));
  CHECK(r.holds());
  CHECK(r.cubic_nullity >= 1);
}

TEST_CASE("order two: translated Pasch nets") {
  const auto F = Field::create(7, 1);
  std::mt19937_64 rng(4);
  const auto pts = all_points(*F);
  int done = 0;
  while (done < 10) {
    std::array<Point, 4> from{pts[rng() % pts.size()], pts[rng() % pts.size()], pts[rng() % pts.size()],
                              pts[rng() % pts.size()]};
    const auto base = pasch_points(*F);
    const std::array<Point, 4> to{base[0], base[1], base[2], base[3]};
    const auto M = projectivity_between(*F, to, from);
    if (!M) continue;
    const auto net = pasch_net(F, static_cast<int>(rng() % 6));
    auto img = [&](const std::vector<Point>& S) {
      std::vector<Point> out;
      for (const auto& P : S) out.push_back(apply(*F, *M, P));
      return out;
    };
    const auto moved = make_net(F, img(net.A), img(net.B), img(net.C), net.provenance);
    const auto rep = check_n2(moved, 20, done + 1);
    CHECK(rep.pencil_ok);
    CHECK(rep.pencil_checks >= 20);
    CHECK(rep.cubic_nullity == 4);
    ++done;
  }
  CHECK(code_of([&] { check_n2(construct_conic_line(Field::create(7, 1), {ConicLineKind::lines_mult, 3, {}, {}})); }) ==
        ErrorCode::NotOrder2);
}

TEST_CASE("the Pasch pencil") {
  const auto F = Field::create(5, 1);
  const auto six = pasch_points(*F);
  for (const Elem a : F->elements()) {
    for (const Elem d : F->elements()) {
      const Vec v = pasch_pencil_member(*F, a, F->from_int(2), F->from_int(3), d);
      for (const auto& P : six) CHECK(oracle::eval_form(*F, v, P.c).is_zero());
    }
  }
}

TEST_CASE("Waterhouse admissible counts") {
  for (int q : {3, 4, 5, 7, 8, 9}) {
    const auto F = gf(q);
    std::set<long long> want;
    for (long long m = -2 * q; m <= 2 * q; ++m) {
      if (m * m <= 4LL * q && m % F->p() != 0) want.insert(q + 1 - m);
    }
    CHECK(waterhouse_admissible(*F) == want);
  }
  const auto rep = waterhouse_scan(Field::create(3, 1));
  CHECK(rep.exhaustive);
  CHECK(rep.missing.empty());
  CHECK(rep.bound_violations == 0);
  CHECK(rep.realized_admissible == rep.admissible);
}

TEST_CASE("secant counts") {
  const auto F = Field::create(5, 1);
  const std::vector<Point> S{pt(*F, 1, 0, 0), pt(*F, 0, 1, 0), pt(*F, 1, 1, 0), pt(*F, 0, 0, 1)};
  const auto sc = secant_counts(*F, S);
  CHECK(sc.size() == 4);
  CHECK(sc.at(make_line(*F, {F->zero(), F->zero(), F->one()})) == 3);
}
