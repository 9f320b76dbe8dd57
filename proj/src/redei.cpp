#include "tnet/redei.hpp"

#include <algorithm>
#include <random>

namespace tnet {

void trim(UPoly& f) {
  while (!f.empty() && f.back().is_zero()) f.pop_back();
}

UPoly poly_add(const Field& F, const UPoly& f, const UPoly& g) {
  UPoly h(std::max(f.size(), g.size()), F.zero());
  for (std::size_t i = 0; i < f.size(); ++i) h[i] = f[i];
  for (std::size_t i = 0; i < g.size(); ++i) h[i] = F.add(h[i], g[i]);
  trim(h);
  return h;
}

UPoly poly_sub(const Field& F, const UPoly& f, const UPoly& g) {
  return poly_add(F, f, poly_scale(F, g, F.neg(F.one())));
}

UPoly poly_mul(const Field& F, const UPoly& f, const UPoly& g) {
  if (f.empty() || g.empty()) return {};
  UPoly h(f.size() + g.size() - 1, F.zero());
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i].is_zero()) continue;
    for (std::size_t j = 0; j < g.size(); ++j) h[i + j] = F.add(h[i + j], F.mul(f[i], g[j]));
  }
  trim(h);
  return h;
}

UPoly poly_scale(const Field& F, const UPoly& f, Elem s) {
  UPoly h;
  for (Elem e : f) h.push_back(F.mul(e, s));
  trim(h);
  return h;
}

std::pair<UPoly, UPoly> poly_divmod(const Field& F, const UPoly& f, const UPoly& g) {
  if (g.empty()) throw Error(ErrorCode::DivByZero, "division by the zero polynomial");
  UPoly r = f;
  trim(r);
  if (r.size() < g.size()) return {UPoly{}, r};
  UPoly q(r.size() - g.size() + 1, F.zero());
  const Elem lead_inv = F.inv(g.back());
  while (!r.empty() && r.size() >= g.size()) {
    const std::size_t shift = r.size() - g.size();
    const Elem c = F.mul(r.back(), lead_inv);
    q[shift] = c;
    for (std::size_t i = 0; i < g.size(); ++i) r[shift + i] = F.sub(r[shift + i], F.mul(c, g[i]));
    trim(r);
  }
  trim(q);
  return {q, r};
}

UPoly poly_from_roots(const Field& F, std::span<const Elem> roots) {
  UPoly f{F.one()};
  for (Elem m : roots) f = poly_mul(F, f, UPoly{F.neg(m), F.one()});
  return f;
}

Elem BiPoly::coeff(int t, int x) const {
  const auto it = terms_.find({t, x});
  return it == terms_.end() ? Elem{} : it->second;
}

void BiPoly::add_term(const Field& F, int t, int x, Elem c) {
  const Elem s = F.add(coeff(t, x), c);
  if (s.is_zero()) {
    terms_.erase({t, x});
  } else {
    terms_[{t, x}] = s;
  }
}

int BiPoly::degree_t() const {
  int d = -1;
  for (const auto& [k, v] : terms_) d = std::max(d, k.first);
  return d;
}

BiPoly BiPoly::mul(const Field& F, const BiPoly& o) const {
  BiPoly r;
  for (const auto& [k1, v1] : terms_) {
    for (const auto& [k2, v2] : o.terms_) r.add_term(F, k1.first + k2.first, k1.second + k2.second, F.mul(v1, v2));
  }
  return r;
}

BiPoly BiPoly::sub(const Field& F, const BiPoly& o) const {
  BiPoly r = *this;
  for (const auto& [k, v] : o.terms_) r.add_term(F, k.first, k.second, F.neg(v));
  return r;
}

std::pair<Elem, Elem> affine_coords(const Field& F, const Point& P) {
  if (P.c[2].is_zero()) throw Error(ErrorCode::NonAffinePoint, "point at infinity");
  const Elem z = F.inv(P.c[2]);
  return {F.mul(P.c[0], z), F.mul(P.c[1], z)};
}

BiPoly redei_polynomial(const Field& F, std::span<const Point> points) {
  BiPoly P;
  P.add_term(F, 0, 0, F.one());
  for (const auto& a : points) {
    const auto [a1, a2] = affine_coords(F, a);
    BiPoly f;
    f.add_term(F, 1, 0, F.one());
    f.add_term(F, 0, 1, a1);
    f.add_term(F, 0, 0, F.neg(a2));
    P = P.mul(F, f);
  }
  return P;
}

namespace {

UPoly t_coefficient(const Field& F, const BiPoly& P, int t) {
  UPoly f;
  for (const auto& [key, v] : P.terms()) {
    if (key.first != t) continue;
    if (f.size() <= static_cast<std::size_t>(key.second)) f.resize(key.second + 1, F.zero());
    f[key.second] = v;
  }
  trim(f);
  return f;
}

}  // namespace

UPoly sigma_k(const Field& F, const BiPoly& P, int k) {
  const int n = P.degree_t();
  if (k < 0 || k > n) throw Error(ErrorCode::OutOfRange, "k must be in 0..n");
  return t_coefficient(F, P, n - k);
}

std::vector<UPoly> power_sums(const Field& F, const std::vector<UPoly>& sigma, int up_to, std::size_t n) {
  if (n > static_cast<std::size_t>(F.p())) throw Error(ErrorCode::CharTooSmall, "power-sum stage needs n <= p");
  if (up_to < 0 || static_cast<std::size_t>(up_to) >= sigma.size()) throw Error(ErrorCode::OutOfRange, "not enough sigmas");
  std::vector<UPoly> pi;
  pi.push_back(UPoly{F.from_int(static_cast<long long>(n))});
  trim(pi[0]);
  for (int k = 1; k <= up_to; ++k) {
    // p_k = sum_{i<k} (-1)^{i-1} e_i p_{k-i} + (-1)^{k-1} k e_k
    UPoly acc;
    for (int i = 1; i < k; ++i) {
      const UPoly term = poly_mul(F, sigma[i], pi[k - i]);
      acc = (i % 2 == 1) ? poly_add(F, acc, term) : poly_sub(F, acc, term);
    }
    const UPoly last = poly_scale(F, sigma[k], F.from_int(k));
    acc = (k % 2 == 1) ? poly_add(F, acc, last) : poly_sub(F, acc, last);
    pi.push_back(acc);
  }
  return pi;
}

UPoly direct_power_sum(const Field& F, std::span<const Point> points, int k) {
  UPoly acc;
  for (const auto& a : points) {
    const auto [a1, a2] = affine_coords(F, a);
    UPoly term{F.one()};
    const UPoly lin{F.neg(a2), a1};
    for (int i = 0; i < k; ++i) term = poly_mul(F, term, lin);
    acc = poly_add(F, acc, term);
  }
  return acc;
}

Elem monomial_sum(const Field& F, std::span<const Point> points, int i, int j) {
  Elem acc = F.zero();
  for (const auto& a : points) {
    const auto [a1, a2] = affine_coords(F, a);
    acc = F.add(acc, F.mul(F.pow(a1, i), F.pow(a2, j)));
  }
  return acc;
}

RedeiFrame redei_frame(const DualThreeNet& net) {
  const Field& F = *net.field;
  if (!collinear(F, net.C) || net.C.size() < 2) throw Error(ErrorCode::CNotOnLine, "C is not on a line");
  const Line l = line_through(F, net.C[0], net.C[1]);
  std::optional<Point> e1, e2, e3;
  for (const auto& P : points_on_line(F, l)) {
    if (!e2 && !std::binary_search(net.C.begin(), net.C.end(), P)) {
      e2 = P;
    }
  }
  if (!e2) throw Error(ErrorCode::PreconditionFailed, "C fills its whole line");
  for (const auto& P : points_on_line(F, l)) {
    if (P != *e2) {
      e1 = P;
      break;
    }
  }
  for (const auto& P : all_points(F)) {
    if (!incident(F, P, l)) {
      e3 = P;
      break;
    }
  }
  const Mat3 T = *mat3_inverse(F, mat3_from_columns(e1->c, e2->c, e3->c));
  auto move = [&](const std::vector<Point>& S) {
    std::vector<Point> out;
    for (const auto& P : S) out.push_back(apply(F, T, P));
    return out;
  };
  auto A = move(net.A), B = move(net.B), C = move(net.C);
  std::vector<Elem> dirs;
  for (const auto& P : C) {
    if (!P.c[2].is_zero() || P.c[0] != F.one()) throw Error(ErrorCode::TheoremViolated, "frame change failed");
    dirs.push_back(P.c[1]);
  }
  std::sort(dirs.begin(), dirs.end());
  return RedeiFrame{T, make_net(net.field, A, B, C, net.provenance), dirs};
}

DivisibilityReport divisibility_certificate(const Field& F, std::span<const Point> A, std::span<const Point> B,
                                            std::span<const Elem> directions) {
  const std::size_t n = A.size();
  if (B.size() != n || directions.size() != n) throw Error(ErrorCode::SizeMismatch, "A, B and C must have n points");
  const BiPoly D = redei_polynomial(F, A).sub(F, redei_polynomial(F, B));
  const UPoly M = poly_from_roots(F, directions);
  DivisibilityReport rep;
  for (std::size_t k = 1; k <= n; ++k) {
    const auto [q, r] = poly_divmod(F, t_coefficient(F, D, static_cast<int>(n - k)), M);
    rep.remainder_zero.push_back(r.empty());
    if (!r.empty()) rep.ok = false;
    if (k == n) {
      if (q.size() > 1) {
        rep.ok = false;
      } else {
        rep.scalar = q.empty() ? F.zero() : q[0];
      }
    }
  }
  return rep;
}

bool RedeiReport::ok() const {
  if (!divisibility.ok || !sigma_equal) return false;
  if (!power_sums_checked) return true;
  return power_sums_match_direct && monomial_sums_equal && moments_equal && covering_ok;
}

namespace {

Elem binomial(const Field& F, int k, int i) {
  Elem c = F.one();
  for (int t = 1; t <= i; ++t) c = F.div(F.mul(c, F.from_int(k - i + t)), F.from_int(t));
  return c;
}

bool covering(const Field& F, const std::vector<Point>& pts, int degree) {
  auto row = [&](const Point& P) {
    const auto [x, y] = affine_coords(F, P);
    Vec r;
    for (int d = 0; d <= degree; ++d) {
      for (int i = 0; i <= d; ++i) r.push_back(F.mul(F.pow(x, i), F.pow(y, d - i)));
    }
    return r;
  };
  Matrix all;
  for (const auto& P : pts) all.append_row(row(P));
  const std::size_t full = row_reduce(F, all).rank;
  for (std::size_t skip = 0; skip < pts.size(); ++skip) {
    Matrix m;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (i != skip) m.append_row(row(pts[i]));
    }
    if (row_reduce(F, m).rank != full) return false;
  }
  return true;
}

}  // namespace

RedeiReport redei_report(const DualThreeNet& net, std::uint64_t seed) {
  const Field& F = *net.field;
  const RedeiFrame fr = redei_frame(net);
  const auto& A = fr.net.A;
  const auto& B = fr.net.B;
  const int n = static_cast<int>(net.order());
  RedeiReport rep;
  rep.divisibility = divisibility_certificate(F, A, B, fr.directions);

  const BiPoly PA = redei_polynomial(F, A), PB = redei_polynomial(F, B);
  std::vector<UPoly> sa, sb;
  rep.sigma_equal = true;
  for (int k = 0; k <= n; ++k) {
    sa.push_back(sigma_k(F, PA, k));
    sb.push_back(sigma_k(F, PB, k));
    if (k < n && sa.back() != sb.back()) rep.sigma_equal = false;
  }

  if (n > F.p()) {
    rep.notice = "power-sum stage skipped: n exceeds the characteristic";
    return rep;
  }
  rep.power_sums_checked = true;
  const auto pa = power_sums(F, sa, n - 1, A.size());
  const auto pb = power_sums(F, sb, n - 1, B.size());
  rep.power_sums_match_direct = true;
  for (int k = 0; k < n; ++k) {
    if (pa[k] != direct_power_sum(F, A, k) || pb[k] != direct_power_sum(F, B, k)) rep.power_sums_match_direct = false;
  }

  rep.monomial_sums_equal = true;
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i <= k; ++i) {
      const int j = k - i;
      // coefficient of X^i in pi_k is C(k,i) (-1)^j sum a1^i a2^j
      Elem scale = binomial(F, k, i);
      if (j % 2 == 1) scale = F.neg(scale);
      auto coeff = [&](const UPoly& f) { return static_cast<std::size_t>(i) < f.size() ? f[i] : F.zero(); };
      const Elem ea = F.div(coeff(pa[k]), scale), eb = F.div(coeff(pb[k]), scale);
      if (ea != eb || ea != monomial_sum(F, A, i, j) || eb != monomial_sum(F, B, i, j)) rep.monomial_sums_equal = false;
    }
  }

  std::mt19937_64 rng(seed);
  rep.moments_equal = true;
  for (int trial = 0; trial < 30; ++trial) {
    Elem sa_f = F.zero(), sb_f = F.zero();
    for (int d = 0; d < n; ++d) {
      for (int i = 0; i <= d; ++i) {
        const Elem c{static_cast<std::uint32_t>(rng() % F.order())};
        sa_f = F.add(sa_f, F.mul(c, monomial_sum(F, A, i, d - i)));
        sb_f = F.add(sb_f, F.mul(c, monomial_sum(F, B, i, d - i)));
      }
    }
    if (sa_f != sb_f) rep.moments_equal = false;
  }

  std::vector<Point> ab = A;
  ab.insert(ab.end(), B.begin(), B.end());
  rep.covering_ok = covering(F, ab, n - 1);
  return rep;
}

}  // namespace tnet
