#pragma once

// Reference computations for the tests. They avoid the library's own
// algorithms: plain integer polynomial arithmetic for the fields, and brute
// force over coefficient or line space for the geometry.

#include <algorithm>
#include <array>
#include <cstdint>
#include <set>
#include <vector>

#include "tnet/nets.hpp"

namespace oracle {

using Poly = std::vector<int>;  // low to high

inline Poly trim(Poly f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

inline Poly polymod(Poly f, const Poly& g, int p) {
  f = trim(f);
  const int dg = static_cast<int>(g.size()) - 1;
  while (static_cast<int>(f.size()) - 1 >= dg) {
    const int shift = static_cast<int>(f.size()) - 1 - dg;
    const int lead = f.back();
    for (int i = 0; i <= dg; ++i) f[shift + i] = ((f[shift + i] - lead * g[i]) % p + p) % p;
    f = trim(f);
  }
  return f;
}

/// Schoolbook product of two residues modulo a monic modulus.
inline Poly mulmod(const Poly& a, const Poly& b, const Poly& mod, int p) {
  Poly r(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  Poly out = polymod(r, mod, p);
  out.resize(mod.size() - 1, 0);
  return out;
}

/// Irreducible when no monic polynomial of degree 1..deg/2 divides it.
inline bool irreducible(const Poly& f, int p) {
  const int d = static_cast<int>(f.size()) - 1;
  for (int e = 1; 2 * e <= d; ++e) {
    long long count = 1;
    for (int i = 0; i < e; ++i) count *= p;
    for (long long t = 0; t < count; ++t) {
      Poly g(e + 1, 0);
      g[e] = 1;
      long long x = t;
      for (int i = 0; i < e; ++i) {
        g[i] = static_cast<int>(x % p);
        x /= p;
      }
      if (polymod(f, g, p).empty()) return false;
    }
  }
  return true;
}

/// Smallest monic irreducible of degree k, ranked by the integer whose base-p
/// digits are the coefficients with the constant term least significant.
inline Poly smallest_irreducible(int p, int k) {
  long long count = 1;
  for (int i = 0; i < k; ++i) count *= p;
  std::vector<Poly> cands;
  for (long long t = 0; t < count; ++t) {
    Poly f(k + 1, 0);
    f[k] = 1;
    long long x = t;
    for (int i = 0; i < k; ++i) {
      f[i] = static_cast<int>(x % p);
      x /= p;
    }
    cands.push_back(f);
  }
  std::sort(cands.begin(), cands.end(), [](const Poly& a, const Poly& b) {
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  });
  for (const auto& f : cands) {
    if (irreducible(f, p)) return f;
  }
  return {};
}

/// Direct evaluation of a form in the library's monomial order, written out
/// term by term.
inline tnet::Elem eval_form(const tnet::Field& F, const std::vector<tnet::Elem>& c, const tnet::Vec3& P) {
  const tnet::Elem x = P[0], y = P[1], z = P[2];
  auto m = [&](std::initializer_list<tnet::Elem> xs) {
    tnet::Elem r = F.one();
    for (auto e : xs) r = F.mul(r, e);
    return r;
  };
  std::vector<tnet::Elem> mons;
  if (c.size() == 6) {
    mons = {m({x, x}), m({y, y}), m({z, z}), m({x, y}), m({y, z}), m({z, x})};
  } else {
    mons = {m({x, x, x}), m({y, y, y}), m({z, z, z}), m({x, x, y}), m({x, x, z}),
            m({y, y, x}), m({y, y, z}), m({z, z, x}), m({z, z, y}), m({x, y, z})};
  }
  tnet::Elem s = F.zero();
  for (std::size_t i = 0; i < c.size(); ++i) s = F.add(s, F.mul(c[i], mons[i]));
  return s;
}

/// log_q of the number of coefficient vectors vanishing on all points,
/// by enumerating the whole coefficient space.
inline std::size_t brute_nullity(const tnet::Field& F, const std::vector<tnet::Point>& pts, int degree) {
  const std::size_t len = degree == 2 ? 6 : 10;
  const std::uint64_t q = F.order();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < len; ++i) total *= q;
  std::uint64_t hits = 0;
  std::vector<tnet::Elem> c(len);
  for (std::uint64_t t = 0; t < total; ++t) {
    std::uint64_t x = t;
    for (std::size_t i = 0; i < len; ++i) {
      c[i] = tnet::Elem{static_cast<std::uint32_t>(x % q)};
      x /= q;
    }
    bool ok = true;
    for (const auto& P : pts) {
      if (!eval_form(F, c, P.c).is_zero()) {
        ok = false;
        break;
      }
    }
    hits += ok;
  }
  std::size_t k = 0;
  while (hits > 1) {
    hits /= q;
    ++k;
  }
  return k;
}

/// Normalized triples with first nonzero entry 1, used for points and lines.
inline std::vector<tnet::Vec3> normalized_triples(const tnet::Field& F) {
  std::vector<tnet::Vec3> out;
  const auto els = F.elements();
  for (auto a : els) {
    for (auto b : els) out.push_back({F.one(), a, b});
  }
  for (auto b : els) out.push_back({F.zero(), F.one(), b});
  out.push_back({F.zero(), F.zero(), F.one()});
  return out;
}

inline bool on(const tnet::Field& F, const tnet::Vec3& P, const tnet::Vec3& l) {
  return F.add(F.add(F.mul(P[0], l[0]), F.mul(P[1], l[1])), F.mul(P[2], l[2])).is_zero();
}

/// Net axioms by scanning every line of the plane and counting hits.
inline bool net_axioms(const tnet::DualThreeNet& net) {
  const tnet::Field& F = *net.field;
  std::set<tnet::Point> all;
  for (int i = 0; i < 3; ++i) {
    for (const auto& P : net.component(i)) all.insert(P);
  }
  if (all.size() != 3 * net.order()) return false;
  for (const auto& l : normalized_triples(F)) {
    std::array<int, 3> hits{};
    for (int i = 0; i < 3; ++i) {
      for (const auto& P : net.component(i)) hits[i] += on(F, P.c, l);
    }
    const int touched = (hits[0] > 0) + (hits[1] > 0) + (hits[2] > 0);
    if (touched >= 2 && (hits[0] != 1 || hits[1] != 1 || hits[2] != 1)) return false;
  }
  return true;
}

inline bool all_on_one_line(const tnet::Field& F, const std::vector<tnet::Point>& pts) {
  for (const auto& l : normalized_triples(F)) {
    if (std::all_of(pts.begin(), pts.end(), [&](const tnet::Point& P) { return on(F, P.c, l); })) return true;
  }
  return false;
}

}  // namespace oracle
