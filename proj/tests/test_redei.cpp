#include <doctest.h>

#include "oracle.hpp"
#include "tnet/redei.hpp"

using namespace tnet;

namespace {

Elem eval_bi(const Field& F, const BiPoly& P, Elem t, Elem x) {
  Elem s = F.zero();
  for (const auto& [key, c] : P.terms()) s = F.add(s, F.mul(c, F.mul(F.pow(t, key.first), F.pow(x, key.second))));
  return s;
}

Elem eval_u(const Field& F, const UPoly& f, Elem x) {
  Elem s = F.zero();
  for (std::size_t i = f.size(); i-- > 0;) s = F.add(F.mul(s, x), f[i]);
  return s;
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

TEST_CASE("univariate arithmetic") {
  const auto F = Field::create(7, 1);
  const Elem r[] = {F->from_int(1), F->from_int(2), F->from_int(3)};
  const UPoly f = poly_from_roots(*F, r);
  for (const Elem e : F->elements()) {
    const bool root = e == r[0] || e == r[1] || e == r[2];
    CHECK(eval_u(*F, f, e).is_zero() == root);
  }
  const UPoly g{F->from_int(6), F->one()};  // X - 1
  const auto [q, rem] = poly_divmod(*F, f, g);
  CHECK(rem.empty());
  CHECK(poly_add(*F, poly_mul(*F, q, g), rem) == f);
  const UPoly h{F->one(), F->one()};
  const auto [q2, r2] = poly_divmod(*F, f, h);
  CHECK(poly_add(*F, poly_mul(*F, q2, h), r2) == f);
  CHECK(r2.size() == 1);
}

TEST_CASE("Redei polynomial agrees with the product at every (T, X)") {
  const auto F = Field::create(7, 1);
  const auto net = construct_conic_line(Field::create(7, 1), {ConicLineKind::hyperbola, 3, {}, {}});
  const auto fr = redei_frame(net);
  const auto P = redei_polynomial(*F, fr.net.A);
  CHECK(P.degree_t() == 3);
  for (const Elem t : F->elements()) {
    for (const Elem x : F->elements()) {
      Elem prod = F->one();
      for (const auto& pt : fr.net.A) {
        const auto [a1, a2] = affine_coords(*F, pt);
        prod = F->mul(prod, F->sub(F->add(t, F->mul(x, a1)), a2));
      }
      CHECK(eval_bi(*F, P, t, x) == prod);
    }
  }
  CHECK(sigma_k(*F, P, 0) == UPoly{F->one()});
  CHECK(code_of([&] { sigma_k(*F, P, 4); }) == ErrorCode::OutOfRange);
  const std::vector<Point> inf{make_point(*F, {F->one(), F->zero(), F->zero()})};
  CHECK(code_of([&] { redei_polynomial(*F, inf); }) == ErrorCode::NonAffinePoint);
}

TEST_CASE("power sums from Newton's identities match direct sums") {
  const auto F = Field::create(11, 1);
  const auto net = construct_conic_line(F, {ConicLineKind::hyperbola, 5, {}, {}});
  const auto fr = redei_frame(net);
  const auto P = redei_polynomial(*F, fr.net.A);
  std::vector<UPoly> sig;
  for (int k = 0; k <= 4; ++k) sig.push_back(sigma_k(*F, P, k));
  const auto pi = power_sums(*F, sig, 4, 5);
  for (int k = 1; k <= 4; ++k) {
    for (const Elem x : F->elements()) {
      Elem s = F->zero();
      for (const auto& pt : fr.net.A) {
        const auto [a1, a2] = affine_coords(*F, pt);
        s = F->add(s, F->pow(F->sub(F->mul(x, a1), a2), k));
      }
      CHECK(eval_u(*F, pi[k], x) == s);
    }
  }
  CHECK(code_of([&] { power_sums(*Field::create(3, 1), {}, 4, 5); }) == ErrorCode::CharTooSmall);
}

TEST_CASE("divisibility certificate on the conic-line families") {
  struct Case {
    int p, k;
    ConicLineKind kind;
    std::size_t n;
  };
  for (const auto& c : std::vector<Case>{{11, 1, ConicLineKind::hyperbola, 5},
                                         {5, 2, ConicLineKind::parabola, 5},
                                         {19, 1, ConicLineKind::circle, 5},
                                         {11, 1, ConicLineKind::lines_mult, 5},
                                         {5, 2, ConicLineKind::lines_add, 5},
                                         {3, 2, ConicLineKind::circle, 5}}) {
    const auto F = Field::create(c.p, c.k);
    const auto net = construct_conic_line(F, {c.kind, c.n, {}, {}});
    const auto rep = redei_report(net, 7);
    CAPTURE(to_string(c.kind));
    CAPTURE(F->order());
    CHECK(rep.ok());
    CHECK(rep.divisibility.scalar.has_value());
    CHECK(rep.power_sums_checked == (c.n <= static_cast<std::size_t>(c.p)));
    for (const auto& P : rep.divisibility.remainder_zero) CHECK(P);
  }
}

TEST_CASE("frame of the certificate") {
  const auto F = Field::create(11, 1);
  const auto net = construct_conic_line(F, {ConicLineKind::hyperbola, 5, {}, {}});
  const auto fr = redei_frame(net);
  CHECK(oracle::net_axioms(fr.net));
  const Point vert = make_point(*F, {F->zero(), F->one(), F->zero()});
  for (const auto& P : fr.net.C) {
    CHECK(P.c[2].is_zero());
    CHECK(P != vert);
  }
  CHECK(fr.directions.size() == 5);
}

TEST_CASE("a perturbed B breaks divisibility") {
  const auto F = Field::create(11, 1);
  const auto net = construct_conic_line(F, {ConicLineKind::hyperbola, 5, {}, {}});
  const auto fr = redei_frame(net);
  std::size_t broken = 0, tried = 0;
  for (const auto& P : all_points(*F)) {
    if (P.c[2].is_zero()) continue;
    auto B = fr.net.B;
    if (std::find(B.begin(), B.end(), P) != B.end() ||
        std::find(fr.net.A.begin(), fr.net.A.end(), P) != fr.net.A.end())
      continue;
    B[0] = P;
    ++tried;
    broken += !divisibility_certificate(*F, fr.net.A, B, fr.directions).ok;
  }
  CHECK(tried > 0);
  CHECK(broken == tried);
}

TEST_CASE("monomial sums agree with direct evaluation") {
  const auto F = Field::create(13, 1);
  const auto net = construct_conic_line(F, {ConicLineKind::hyperbola, 4, {}, {}});
  const auto fr = redei_frame(net);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; i + j < 4; ++j) {
      Elem a = F->zero(), b = F->zero();
      auto term = [&](const Point& P) {
        const Elem z = F->inv(P.c[2]);
        return F->mul(F->pow(F->mul(P.c[0], z), i), F->pow(F->mul(P.c[1], z), j));
      };
      for (const auto& P : fr.net.A) a = F->add(a, term(P));
      for (const auto& P : fr.net.B) b = F->add(b, term(P));
      CHECK(monomial_sum(*F, fr.net.A, i, j) == a);
      CHECK(a == b);
    }
  }
}
