#include <doctest.h>

#include "oracle.hpp"
#include "tnet/nets.hpp"

using namespace tnet;

namespace {

Point pt(const Field& F, int x, int y, int z) { return make_point(F, {F.from_int(x), F.from_int(y), F.from_int(z)}); }

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::ParseError;
}

struct Family {
  int p, k;
  ConicLineKind kind;
  std::size_t n;
};

const std::vector<Family> kFamilies{
    {11, 1, ConicLineKind::hyperbola, 5}, {13, 1, ConicLineKind::hyperbola, 4}, {19, 1, ConicLineKind::hyperbola, 6},
    {7, 1, ConicLineKind::hyperbola, 2},  {25, 0, ConicLineKind::parabola, 5},  {49, 0, ConicLineKind::parabola, 7},
    {8, 0, ConicLineKind::parabola, 4},   {19, 1, ConicLineKind::circle, 5},   {11, 1, ConicLineKind::circle, 6},
    {9, 0, ConicLineKind::circle, 5},     {7, 1, ConicLineKind::circle, 4},    {11, 1, ConicLineKind::lines_mult, 5},
    {7, 1, ConicLineKind::lines_mult, 3}, {25, 0, ConicLineKind::lines_add, 5}, {8, 0, ConicLineKind::lines_add, 2},
};

FieldPtr field_of(const Family& f) {
  if (f.k != 0) return Field::create(f.p, f.k);
  const auto pk = prime_power(f.p);
  return Field::create(pk->first, pk->second);
}

}  // namespace

TEST_CASE("Pasch configuration in every assignment") {
  for (int p : {2, 3, 5, 7}) {
    const auto F = Field::create(p, 1);
    for (int v = 0; v < 6; ++v) {
      const auto net = pasch_net(F, v);
      CHECK(verify_axioms(net).ok);
      CHECK(oracle::net_axioms(net));
      CHECK(classify_regularity(net).kind == Regularity::regular);
    }
  }
  CHECK(code_of([] { pasch_net(Field::create(3, 1), 6); }) == ErrorCode::BadParameters);
}

TEST_CASE("moving one point breaks the axioms") {
  const auto F = Field::create(5, 1);
  const auto net = pasch_net(F, 0);
  for (int comp = 0; comp < 3; ++comp) {
    for (std::size_t i = 0; i < 2; ++i) {
      for (const auto& P : all_points(*F)) {
        auto A = net.A, B = net.B, C = net.C;
        auto& X = comp == 0 ? A : (comp == 1 ? B : C);
        if (std::find(X.begin(), X.end(), P) != X.end()) continue;
        X[i] = P;
        const DualThreeNet m{F, A, B, C, net.provenance};
        const auto rep = verify_axioms(m);
        CHECK(rep.ok == oracle::net_axioms(m));
        if (!rep.ok) CHECK_FALSE(rep.reason.empty());
      }
    }
  }
}

TEST_CASE("order one: three collinear points form a net, a triangle does not") {
  const auto F = Field::create(5, 1);
  const DualThreeNet col{F, {pt(*F, 1, 0, 0)}, {pt(*F, 0, 1, 0)}, {pt(*F, 1, 1, 0)}, {}};
  const DualThreeNet tri{F, {pt(*F, 1, 0, 0)}, {pt(*F, 0, 1, 0)}, {pt(*F, 0, 0, 1)}, {}};
  CHECK(verify_axioms(col).ok);
  CHECK(oracle::net_axioms(col));
  const auto r = verify_axioms(tri);
  CHECK_FALSE(r.ok);
  CHECK(r.witness.has_value());
  CHECK_FALSE(oracle::net_axioms(tri));
}

TEST_CASE("mismatched components") {
  const auto F = Field::create(5, 1);
  const DualThreeNet bad{F, {pt(*F, 1, 0, 0)}, {pt(*F, 0, 1, 0), pt(*F, 1, 1, 1)}, {pt(*F, 0, 0, 1)}, {}};
  CHECK(code_of([&] { verify_axioms(bad); }) == ErrorCode::SizeMismatch);
  const DualThreeNet dup{F, {pt(*F, 1, 0, 0)}, {pt(*F, 1, 0, 0)}, {pt(*F, 1, 1, 0)}, {}};
  CHECK_FALSE(verify_axioms(dup).ok);
}

TEST_CASE("order three family over GF(7) and GF(11)") {
  for (int p : {7, 11}) {
    const auto F = Field::create(p, 1);
    std::size_t built = 0;
    for (int a = 1; a < p; ++a) {
      for (int b = 1; b < p; ++b) {
        for (int c = 1; c < p; ++c) {
          if (a == b || b == c || a == c) continue;
          const auto net = n3_family(F, F->from_int(a), F->from_int(b), F->from_int(c));
          if (!oracle::net_axioms(net)) FAIL("n3 family fails the axioms at " << a << " " << b << " " << c);
          ++built;
          // A is the coordinate triangle
          CHECK(net.A == std::vector<Point>{pt(*F, 0, 0, 1), pt(*F, 0, 1, 0), pt(*F, 1, 0, 0)});
        }
      }
    }
    CHECK(built == static_cast<std::size_t>((p - 1) * (p - 2) * (p - 3)));
  }
  const auto F = Field::create(7, 1);
  CHECK(code_of([&] { n3_family(F, F->one(), F->one(), F->from_int(2)); }) == ErrorCode::BadParameters);
  CHECK(code_of([&] { n3_family(F, F->zero(), F->one(), F->from_int(2)); }) == ErrorCode::BadParameters);
}

TEST_CASE("conic-line families") {
  for (const auto& f : kFamilies) {
    const auto F = field_of(f);
    CAPTURE(F->order());
    CAPTURE(to_string(f.kind));
    CAPTURE(f.n);
    const auto net = construct_conic_line(F, ConicLineParams{f.kind, f.n, {}, {}});
    CHECK(net.order() == f.n);
    CHECK(oracle::net_axioms(net));
    CHECK(oracle::all_on_one_line(*F, net.C));
    const auto cls = classify_regularity(net);
    const bool lines = f.kind == ConicLineKind::lines_mult || f.kind == ConicLineKind::lines_add;
    if (lines) {
      CHECK(oracle::all_on_one_line(*F, net.A));
      CHECK(oracle::all_on_one_line(*F, net.B));
      CHECK(cls.kind == Regularity::regular);
    } else {
      const Curve conic = model_conic(*F, f.kind);
      for (const auto& P : net.A) CHECK(contains(*F, conic, P));
      for (const auto& P : net.B) CHECK(contains(*F, conic, P));
      if (f.n >= 3) CHECK(cls.kind == Regularity::irregular_one_line);
    }
  }
}

TEST_CASE("conic-line parameter errors") {
  const auto F = Field::create(11, 1);
  CHECK(code_of([&] { construct_conic_line(F, {ConicLineKind::hyperbola, 3, {}, {}}); }) == ErrorCode::NotASubgroup);
  CHECK(code_of([&] { construct_conic_line(F, {ConicLineKind::circle, 5, {}, {}}); }) == ErrorCode::NotASubgroup);
  CHECK(code_of([&] { construct_conic_line(F, {ConicLineKind::parabola, 3, {}, {}}); }) == ErrorCode::NotASubgroup);
  CHECK(code_of([&] { construct_conic_line(Field::create(5, 1), {ConicLineKind::hyperbola, 4, {}, {}}); }) ==
        ErrorCode::DegenerateCosets);
  CHECK(conic_line_kind_from_string("circle") == ConicLineKind::circle);
  CHECK_FALSE(conic_line_kind_from_string("ellipse").has_value());
}

TEST_CASE("subgroup-type nets on a cubic over GF(7)") {
  const auto F = Field::create(7, 1);
  Vec c(10, F->zero());
  c[0] = F->neg(F->one());
  c[2] = F->neg(F->from_int(3));
  c[6] = F->one();
  c[7] = F->neg(F->one());
  const CubicGroup g(F, Curve(*F, 3, c), pt(*F, 0, 1, 0));
  std::size_t count = 0;
  for (std::size_t n = 1; n < g.size(); ++n) {
    if (g.size() % n != 0 || g.size() / n <= 2) continue;
    for (const auto& t : subgroup_and_cosets(g, n)) {
      const auto net = construct_subgroup_type(g, t);
      CHECK(oracle::net_axioms(net));
      for (const auto& P : net.all_points()) CHECK(contains(*F, g.curve(), P));
      ++count;
    }
  }
  CHECK(count > 0);
}

TEST_CASE("projection parameters") {
  CHECK(code_of([] { construct_projection(4, 16); }) == ErrorCode::ConditionViolated);
  CHECK(code_of([] { construct_projection(3, 81); }) == ErrorCode::ConditionViolated);
  CHECK(code_of([] { construct_projection(4, 125); }) == ErrorCode::BadParameters);
  CHECK(code_of([] { construct_projection(4, 128); }) == ErrorCode::BadParameters);
}

TEST_CASE("latin squares") {
  const auto F = Field::create(13, 1);
  const auto cyc = construct_conic_line(F, {ConicLineKind::hyperbola, 4, {}, {}});
  const auto L = latin_square_of(cyc);
  CHECK(L.valid());
  CHECK(isotopic(L, cyclic_square(4)));
  CHECK_FALSE(isotopic(L, klein_square()));

  const auto F8 = Field::create(2, 3);
  const auto kl = construct_conic_line(F8, {ConicLineKind::parabola, 4, {}, {}});
  CHECK(isotopic(latin_square_of(kl), klein_square()));
  CHECK(intercalates(cyclic_square(4)) == 4);
  CHECK(intercalates(klein_square()) == 12);
  CHECK(intercalates(cyclic_square(5)) == 0);

  LatinSquare broken{{{0, 1}, {0, 1}}};
  CHECK_FALSE(broken.valid());
  const auto pasch = latin_square_of(pasch_net(Field::create(5, 1)));
  CHECK(isotopic(pasch, cyclic_square(2)));
}
