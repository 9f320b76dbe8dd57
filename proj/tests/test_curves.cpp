#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "tnet/curves.hpp"

using namespace tnet;

namespace {

Point pt(const Field& F, int x, int y, int z) { return make_point(F, {F.from_int(x), F.from_int(y), F.from_int(z)}); }

Vec ints(const Field& F, std::initializer_list<int> xs) {
  Vec v;
  for (int x : xs) v.push_back(F.from_int(x));
  return v;
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::ParseError;
}

}  // namespace

TEST_CASE("evaluation rows") {
  const auto F = Field::create(7, 1);
  CHECK(veronese_row(*F, pt(*F, 1, 1, 1).c, 3) == Vec(10, F->one()));
  CHECK(veronese_row(*F, pt(*F, 1, 0, 0).c, 2) == ints(*F, {1, 0, 0, 0, 0, 0}));
  const Vec3 P{F->one(), F->from_int(3), F->from_int(5)};
  const Elem a = P[1], b = P[2];
  const Vec row = veronese_row(*F, P, 3);
  // x^2y x^2z y^2x y^2z z^2x z^2y xyz at (1:a:b)
  const Vec want{a, b, F->mul(a, a), F->mul(F->mul(a, a), b), F->mul(b, b), F->mul(F->mul(b, b), a), F->mul(a, b)};
  CHECK(Vec(row.begin() + 3, row.end()) == want);
}

TEST_CASE("conic through five points of Y^2 = XZ") {
  const auto F = Field::create(7, 1);
  const std::vector<Point> pts{pt(*F, 1, 0, 0), pt(*F, 0, 0, 1), pt(*F, 1, 1, 1), pt(*F, 4, 2, 1), pt(*F, 2, 3, 1)};
  const auto rc = curves_through(*F, pts, 2);
  REQUIRE(rc.nullity() == 1);
  CHECK(Curve(*F, 2, rc.nullspace[0]).coeffs() == Curve(*F, 2, ints(*F, {0, 1, 0, 0, 0, -1})).coeffs());
  CHECK(oracle::brute_nullity(*F, pts, 2) == 1);
}

TEST_CASE("Pasch points lie on a four-parameter pencil of cubics") {
  for (int p : {2, 3}) {
    const auto F = Field::create(p, 1);
    const std::vector<Point> pts{pt(*F, 0, 0, 1), pt(*F, 0, 1, 0), pt(*F, 1, 0, 0),
                                 pt(*F, 1, 1, 1), pt(*F, 1, 0, 1), pt(*F, 0, 1, 1)};
    CHECK(curves_through(*F, pts, 3).nullity() == 4);
    CHECK(oracle::brute_nullity(*F, pts, 3) == 4);
  }
}

TEST_CASE("nullity agrees with coefficient-space enumeration") {
  std::mt19937_64 rng(11);
  for (auto [p, k] : std::vector<std::pair<int, int>>{{3, 1}, {2, 2}, {5, 1}, {7, 1}}) {
    const auto F = Field::create(p, k);
    const auto all = all_points(*F);
    for (int trial = 0; trial < 6; ++trial) {
      std::set<Point> s;
      const std::size_t want = 1 + rng() % 7;
      while (s.size() < want) s.insert(all[rng() % all.size()]);
      const std::vector<Point> pts(s.begin(), s.end());
      const auto rc = curves_through(*F, pts, 2);
      CHECK(rc.nullity() == oracle::brute_nullity(*F, pts, 2));
      CHECK(rc.nullity() + rc.rank == 6);
      CHECK(rc.nullity() >= (pts.size() >= 6 ? 0 : 6 - pts.size()));
      for (const auto& v : rc.nullspace) {
        for (const auto& P : pts) CHECK(oracle::eval_form(*F, v, P.c).is_zero());
      }
    }
  }
}

TEST_CASE("cubic nullity agrees with enumeration over GF(3)") {
  std::mt19937_64 rng(5);
  const auto F = Field::create(3, 1);
  const auto all = all_points(*F);
  for (int trial = 0; trial < 4; ++trial) {
    std::set<Point> s;
    while (s.size() < 6 + static_cast<std::size_t>(trial)) s.insert(all[rng() % all.size()]);
    const std::vector<Point> pts(s.begin(), s.end());
    CHECK(curves_through(*F, pts, 3).nullity() == oracle::brute_nullity(*F, pts, 3));
  }
}

TEST_CASE("ten general points over GF(13) lie on no cubic") {
  const auto F = Field::create(13, 1);
  const auto all = all_points(*F);
  std::mt19937_64 rng(3);
  for (int tries = 0; tries < 50; ++tries) {
    std::set<Point> s;
    while (s.size() < 10) s.insert(all[rng() % all.size()]);
    const std::vector<Point> pts(s.begin(), s.end());
    const auto rc = curves_through(*F, pts, 3);
    if (rc.rank == 10) {
      CHECK(rc.nullity() == 0);
      return;
    }
  }
  FAIL("no general 10-point set found");
}

TEST_CASE("containment and irreducibility") {
  const auto F = Field::create(7, 1);
  const Curve yxz(*F, 2, ints(*F, {0, 1, 0, 0, 0, -1}));
  CHECK(contains(*F, yxz, pt(*F, 1, 1, 1)));
  CHECK_FALSE(contains(*F, yxz, pt(*F, 1, 1, 0)));
  CHECK(is_irreducible_conic(*F, yxz));
  CHECK(rational_points(*F, yxz).size() == 8);
  CHECK_FALSE(is_irreducible_conic(*F, Curve(*F, 2, ints(*F, {0, 0, 0, 1, 0, 0}))));
  CHECK_FALSE(is_irreducible_conic(*F, Curve(*F, 2, ints(*F, {1, 0, 0, 0, 0, 0}))));
  // X^2 + Y^2 + Z^2 over GF(7) is irreducible, X^2 - Y^2 is not
  CHECK(is_irreducible_conic(*F, Curve(*F, 2, ints(*F, {1, 1, 1, 0, 0, 0}))));
  CHECK_FALSE(is_irreducible_conic(*F, Curve(*F, 2, ints(*F, {1, -1, 0, 0, 0, 0}))));
  // an irreducible conic has exactly q + 1 points, in characteristic 2 too
  for (auto [p, k] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}, {5, 1}}) {
    const auto G = Field::create(p, k);
    std::mt19937_64 rng(p * 10 + k);
    for (int t = 0; t < 40; ++t) {
      Vec c(6);
      for (auto& e : c) e = Elem{static_cast<std::uint32_t>(rng() % G->order())};
      if (std::all_of(c.begin(), c.end(), [](Elem e) { return e.is_zero(); })) continue;
      const Curve cc(*G, 2, c);
      if (is_irreducible_conic(*G, cc)) CHECK(rational_points(*G, cc).size() == G->order() + 1);
    }
  }
}

TEST_CASE("non-singularity over the quadratic extension") {
  const auto F5 = Field::create(5, 1);
  const NonsingularityChecker ch(F5);
  CHECK(ch.is_nonsingular(Curve(*F5, 3, ints(*F5, {-1, 0, -1, 0, 0, 0, 1, 0, 0, 0}))));
  CHECK_FALSE(ch.is_nonsingular(Curve(*F5, 3, ints(*F5, {-1, 0, 0, 0, 0, 0, 1, 0, 0, 0}))));
  CHECK_FALSE(ch.is_nonsingular(Curve(*F5, 3, ints(*F5, {0, 0, 0, 0, 0, 0, 0, 0, 0, 1}))));
  CHECK(is_nonsingular_cubic(F5, Curve(*F5, 3, ints(*F5, {-1, 0, -1, 0, 0, 0, 1, 0, 0, 0}))));
}

TEST_CASE("tangent lines") {
  const auto F = Field::create(7, 1);
  const Curve yxz(*F, 2, ints(*F, {0, 1, 0, 0, 0, -1}));
  CHECK(tangent_line(*F, yxz, pt(*F, 0, 0, 1)) == make_line(*F, {F->one(), F->zero(), F->zero()}));
  CHECK(code_of([&] { tangent_line(*F, yxz, pt(*F, 1, 1, 0)); }) == ErrorCode::NotOnCurve);

  // at every point of Y^2Z = X^3 + Z^3 over GF(5) the tangent meets the curve
  // with multiplicity at least two, by direct substitution of the line
  const auto F5 = Field::create(5, 1);
  const Curve E(*F5, 3, ints(*F5, {-1, 0, -1, 0, 0, 0, 1, 0, 0, 0}));
  bool flex_seen = false;
  for (const auto& P : rational_points(*F5, E)) {
    const Line t = tangent_line(*F5, E, P);
    std::size_t on_t = 0;
    for (const auto& Q : all_points(*F5)) {
      if (incident(*F5, Q, t) && contains(*F5, E, Q)) ++on_t;
    }
    CHECK(on_t <= 2);
    // along sP + tR with R on the tangent: vanishing order at t = 0
    Point R;
    for (const auto& Q : points_on_line(*F5, t)) {
      if (Q != P) {
        R = Q;
        break;
      }
    }
    const Vec b = restrict_to_line(*F5, 3, E.coeffs(), P.c, R.c);  // coefficients of s^{3-i} t^i
    CHECK(b[0].is_zero());
    CHECK(b[1].is_zero());
    if (b[2].is_zero()) flex_seen = true;
  }
  CHECK(flex_seen);
}

TEST_CASE("curves need a nonzero form") {
  const auto F = Field::create(3, 1);
  CHECK(code_of([&] { Curve(*F, 2, Vec(6, F->zero())); }) == ErrorCode::ZeroVector);
}

TEST_CASE("nucleus of a conic in characteristic two") {
  const auto F = Field::create(2, 2);
  const Curve yxz(*F, 2, {F->zero(), F->one(), F->zero(), F->zero(), F->zero(), F->one()});
  const auto N = nucleus(*F, yxz);
  REQUIRE(N.has_value());
  for (const auto& P : rational_points(*F, yxz)) CHECK(incident(*F, *N, tangent_line(*F, yxz, P)));
  CHECK_FALSE(nucleus(*Field::create(3, 1), Curve(*Field::create(3, 1), 2, ints(*Field::create(3, 1), {0, 1, 0, 0, 0, -1}))).has_value());
}
