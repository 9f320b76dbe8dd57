#include "tnet/nets.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace tnet {

namespace {

Json elem_list(std::span<const Elem> v) {
  Json out = Json::array();
  for (Elem e : v) out.push_back(e.v);
  return out;
}

std::size_t count_on(const Field& F, const Line& l, const std::vector<Point>& S) {
  std::size_t k = 0;
  for (const auto& P : S) k += incident(F, P, l) ? 1 : 0;
  return k;
}

void require_valid(const DualThreeNet& net) {
  const auto rep = verify_axioms(net);
  if (!rep.ok) throw Error(ErrorCode::TheoremViolated, net.provenance.family + " produced an invalid net: " + rep.reason);
}

}  // namespace

std::vector<Point> DualThreeNet::all_points() const {
  std::vector<Point> out = A;
  out.insert(out.end(), B.begin(), B.end());
  out.insert(out.end(), C.begin(), C.end());
  return out;
}

DualThreeNet make_net(FieldPtr F, std::vector<Point> A, std::vector<Point> B, std::vector<Point> C,
                      Provenance prov) {
  std::sort(A.begin(), A.end());
  std::sort(B.begin(), B.end());
  std::sort(C.begin(), C.end());
  return DualThreeNet{std::move(F), std::move(A), std::move(B), std::move(C), std::move(prov)};
}

AxiomReport verify_axioms(const DualThreeNet& net) {
  const Field& F = *net.field;
  const std::size_t n = net.A.size();
  if (n == 0 || net.B.size() != n || net.C.size() != n) {
    throw Error(ErrorCode::SizeMismatch, "components must be nonempty and of equal size");
  }
  AxiomReport rep;
  std::set<Point> seen;
  for (int i = 0; i < 3; ++i) {
    for (const auto& P : net.component(i)) {
      if (!seen.insert(P).second) {
        rep.ok = false;
        rep.reason = "repeated point or overlapping components";
        return rep;
      }
    }
  }
  const std::array<std::pair<int, int>, 3> pairs{{{0, 1}, {0, 2}, {1, 2}}};
  for (const auto& [x, y] : pairs) {
    for (const auto& P : net.component(x)) {
      for (const auto& Q : net.component(y)) {
        const Line l = line_through(F, P, Q);
        for (int c = 0; c < 3; ++c) {
          const std::size_t k = count_on(F, l, net.component(c));
          if (k != 1) {
            rep.ok = false;
            rep.reason = "line meets component " + std::string(1, static_cast<char>('A' + c)) + " in " +
                         std::to_string(k) + " points";
            rep.witness = l;
            return rep;
          }
        }
      }
    }
  }
  return rep;
}

std::string to_string(Regularity r) {
  switch (r) {
    case Regularity::regular: return "regular";
    case Regularity::irregular_one_line: return "irregular_one_line";
    case Regularity::irregular_two_lines: return "irregular_two_lines";
    case Regularity::completely_irregular: return "completely_irregular";
  }
  return "?";
}

RegularityClass classify_regularity(const DualThreeNet& net) {
  RegularityClass rc;
  for (int i = 0; i < 3; ++i) {
    if (collinear(*net.field, net.component(i))) rc.collinear_components.push_back(i);
  }
  switch (rc.collinear_components.size()) {
    case 3: rc.kind = Regularity::regular; break;
    case 2: rc.kind = Regularity::irregular_two_lines; break;
    case 1: rc.kind = Regularity::irregular_one_line; break;
    default: rc.kind = Regularity::completely_irregular; break;
  }
  return rc;
}

DualThreeNet pasch_net(FieldPtr F, int variant) {
  if (variant < 0 || variant > 5) throw Error(ErrorCode::BadParameters, "variant must be in 0..5");
  const Elem o = F->zero(), l = F->one();
  const std::array<std::vector<Point>, 3> pairs{{
      {Point{{o, o, l}}, Point{{l, l, l}}},
      {Point{{o, l, o}}, Point{{l, o, o}}},
      {Point{{l, o, l}}, Point{{o, l, l}}},
  }};
  std::array<int, 3> perm{0, 1, 2};
  for (int i = 0; i < variant; ++i) std::next_permutation(perm.begin(), perm.end());
  Provenance prov{"pasch", Json{{"variant", variant}}};
  auto net = make_net(F, pairs[perm[0]], pairs[perm[1]], pairs[perm[2]], std::move(prov));
  require_valid(net);
  return net;
}

DualThreeNet n3_family(FieldPtr F, Elem a, Elem b, Elem c) {
  if (a.is_zero() || b.is_zero() || c.is_zero() || a == b || b == c || a == c) {
    throw Error(ErrorCode::BadParameters, "a, b, c must be distinct and nonzero");
  }
  const Field& K = *F;
  const Elem o = K.zero(), l = K.one();
  auto pt = [&](Elem x, Elem y) { return affine_point(K, x, K.inv(y)); };
  std::vector<Point> A{Point{{l, o, o}}, Point{{o, l, o}}, Point{{o, o, l}}};
  std::vector<Point> B{pt(a, b), pt(b, c), pt(c, a)};
  std::vector<Point> C{pt(a, c), pt(b, a), pt(c, b)};
  Provenance prov{"n3", Json{{"a", a.v}, {"b", b.v}, {"c", c.v}}};
  auto net = make_net(F, std::move(A), std::move(B), std::move(C), std::move(prov));
  require_valid(net);
  return net;
}

DualThreeNet construct_subgroup_type(const CubicGroup& g, const CosetTriple& t) {
  validate_triple(g, t, g.zero_prime_index());
  std::array<std::vector<Point>, 3> comps;
  const std::array<std::size_t, 3> reps{t.a, t.b, t.c};
  for (int i = 0; i < 3; ++i) {
    for (auto x : t.coset(g, reps[i])) comps[i].push_back(g.point(x));
  }
  Json params;
  params["cubic"] = elem_list(g.curve().coeffs());
  params["O"] = elem_list(g.O().c);
  params["n"] = t.H.size();
  params["a"] = elem_list(g.point(t.a).c);
  params["b"] = elem_list(g.point(t.b).c);
  params["c"] = elem_list(g.point(t.c).c);
  auto net = make_net(g.field_ptr(), comps[0], comps[1], comps[2], Provenance{"subgroup_type", params});
  require_valid(net);
  return net;
}

std::string to_string(ConicLineKind k) {
  switch (k) {
    case ConicLineKind::parabola: return "parabola";
    case ConicLineKind::hyperbola: return "hyperbola";
    case ConicLineKind::circle: return "circle";
    case ConicLineKind::lines_mult: return "lines_mult";
    case ConicLineKind::lines_add: return "lines_add";
  }
  return "?";
}

std::optional<ConicLineKind> conic_line_kind_from_string(const std::string& s) {
  for (auto k : {ConicLineKind::parabola, ConicLineKind::hyperbola, ConicLineKind::circle, ConicLineKind::lines_mult,
                 ConicLineKind::lines_add}) {
    if (to_string(k) == s) return k;
  }
  return std::nullopt;
}

namespace {

struct CircleModel {
  FieldPtr ext;
  std::unique_ptr<Embedding> emb;
  Elem omega;
  std::vector<std::pair<Elem, Elem>> coords;  // u = x + y omega
  Elem trace, norm;                            // of omega, in the base field
};

CircleModel circle_model(const FieldPtr& F) {
  CircleModel m;
  m.ext = Field::create(F->p(), 2 * F->k());
  m.emb = std::make_unique<Embedding>(F, m.ext);
  const Field& E = *m.ext;
  for (Elem u : E.elements()) {
    if (!m.emb->contains(u)) {
      m.omega = u;
      break;
    }
  }
  m.coords.resize(E.order());
  for (Elem x : F->elements()) {
    for (Elem y : F->elements()) {
      m.coords[E.add((*m.emb)(x), E.mul((*m.emb)(y), m.omega)).v] = {x, y};
    }
  }
  const Elem conj = E.pow(m.omega, F->order());
  m.trace = m.emb->preimage(E.add(m.omega, conj));
  m.norm = m.emb->preimage(E.mul(m.omega, conj));
  return m;
}

std::vector<Elem> additive_subgroup(const Field& F, std::size_t n) {
  std::size_t size = 1;
  int e = 0;
  while (size < n && e < F.k()) {
    size *= static_cast<std::size_t>(F.p());
    ++e;
  }
  if (size != n) throw Error(ErrorCode::NotASubgroup, "additive subgroup order must be a power of p not above q");
  std::vector<Elem> G;
  for (std::uint32_t v = 0; v < n; ++v) G.push_back(Elem{v});
  return G;
}

std::vector<Elem> cyclic_subgroup(const Field& E, Elem gen, std::size_t n) {
  std::vector<Elem> G;
  Elem x = E.one();
  for (std::size_t i = 0; i < n; ++i) {
    G.push_back(x);
    x = E.mul(x, gen);
  }
  if (x != E.one()) throw Error(ErrorCode::NotASubgroup, "generator has the wrong order");
  std::sort(G.begin(), G.end());
  return G;
}

std::vector<Elem> shifted(const Field& E, const std::vector<Elem>& G, Elem s, bool additive) {
  std::vector<Elem> out;
  for (Elem g : G) out.push_back(additive ? E.add(s, g) : E.mul(s, g));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Curve model_conic(const Field& F, ConicLineKind kind) {
  const Elem o = F.zero(), l = F.one(), m = F.neg(F.one());
  switch (kind) {
    case ConicLineKind::parabola: return Curve(F, 2, {l, o, o, o, m, o});
    case ConicLineKind::hyperbola: return Curve(F, 2, {o, o, m, l, o, o});
    case ConicLineKind::lines_mult: return Curve(F, 2, {o, o, o, l, o, o});
    case ConicLineKind::lines_add: return Curve(F, 2, {l, o, o, o, o, m});
    case ConicLineKind::circle: break;
  }
  const FieldPtr Fp = Field::create(F.p(), F.k());
  const auto cm = circle_model(Fp);
  return Curve(F, 2, {l, cm.norm, m, cm.trace, o, o});
}

DualThreeNet construct_conic_line(FieldPtr F, const ConicLineParams& params) {
  const Field& K = *F;
  const std::size_t n = params.n;
  const bool additive = params.kind == ConicLineKind::parabola || params.kind == ConicLineKind::lines_add;
  const bool lines = params.kind == ConicLineKind::lines_mult || params.kind == ConicLineKind::lines_add;
  if (n == 0) throw Error(ErrorCode::NotASubgroup, "subgroup order must be positive");

  std::optional<CircleModel> cm;
  if (params.kind == ConicLineKind::circle) cm = circle_model(F);
  const Field& E = cm ? *cm->ext : K;  // arithmetic field of the model

  std::vector<Elem> G;
  std::vector<Elem> ambient;  // the group the cosets live in
  if (additive) {
    G = additive_subgroup(K, n);
    ambient = K.elements();
  } else if (params.kind == ConicLineKind::circle) {
    const std::uint64_t q = K.order();
    if ((q + 1) % n != 0) throw Error(ErrorCode::NotASubgroup, "subgroup order must divide q+1");
    const Elem u = E.pow(E.primitive(), static_cast<long long>(q - 1));
    G = cyclic_subgroup(E, E.pow(u, static_cast<long long>((q + 1) / n)), n);
    ambient = cyclic_subgroup(E, u, q + 1);
  } else {
    const std::uint64_t q = K.order();
    if ((q - 1) % n != 0) throw Error(ErrorCode::NotASubgroup, "subgroup order must divide q-1");
    G = cyclic_subgroup(K, K.pow(K.primitive(), static_cast<long long>((q - 1) / n)), n);
    for (Elem x : K.elements()) {
      if (!x.is_zero()) ambient.push_back(x);
    }
  }
  auto in_ambient = [&](Elem x) { return std::binary_search(ambient.begin(), ambient.end(), x); };
  std::sort(ambient.begin(), ambient.end());

  const Elem identity = additive ? E.zero() : E.one();
  const Elem sa = params.shift_a ? Elem{*params.shift_a} : identity;
  Elem sb = identity;
  if (params.shift_b) {
    sb = Elem{*params.shift_b};
  } else if (!lines) {
    bool found = false;
    for (Elem x : ambient) {
      if (!std::binary_search(G.begin(), G.end(), x)) {
        sb = x;
        found = true;
        break;
      }
    }
    if (!found) throw Error(ErrorCode::DegenerateCosets, "the subgroup has no second coset");
  }
  if (sa.v >= E.order() || sb.v >= E.order() || !in_ambient(sa) || !in_ambient(sb)) {
    throw Error(ErrorCode::BadParameters, "coset representative outside the group");
  }
  const auto Aset = shifted(E, G, sa, additive);
  const auto Bset = shifted(E, G, sb, additive);
  if (!lines && Aset == Bset) throw Error(ErrorCode::DegenerateCosets, "A and B are the same coset");

  const Elem o = K.zero(), l = K.one();
  std::vector<Point> A, B;
  std::set<Point> C;
  auto direction = [&](Elem slope) { return Point{{l, slope, o}}; };
  switch (params.kind) {
    case ConicLineKind::parabola:
      for (Elem a : Aset) A.push_back(affine_point(K, a, K.mul(a, a)));
      for (Elem b : Bset) B.push_back(affine_point(K, b, K.mul(b, b)));
      for (Elem a : Aset) {
        for (Elem b : Bset) C.insert(direction(K.add(a, b)));
      }
      break;
    case ConicLineKind::hyperbola:
      for (Elem a : Aset) A.push_back(affine_point(K, a, K.inv(a)));
      for (Elem b : Bset) B.push_back(affine_point(K, b, K.inv(b)));
      for (Elem a : Aset) {
        for (Elem b : Bset) C.insert(direction(K.neg(K.inv(K.mul(a, b)))));
      }
      break;
    case ConicLineKind::lines_mult:
      for (Elem a : Aset) A.push_back(affine_point(K, a, o));
      for (Elem b : Bset) B.push_back(affine_point(K, o, b));
      for (Elem a : Aset) {
        for (Elem b : Bset) C.insert(direction(K.neg(K.div(b, a))));
      }
      break;
    case ConicLineKind::lines_add:
      for (Elem a : Aset) A.push_back(affine_point(K, o, a));
      for (Elem b : Bset) B.push_back(affine_point(K, l, b));
      for (Elem a : Aset) {
        for (Elem b : Bset) C.insert(direction(K.sub(b, a)));
      }
      break;
    case ConicLineKind::circle: {
      auto at = [&](Elem u) {
        const auto [x, y] = cm->coords[u.v];
        return affine_point(K, x, y);
      };
      for (Elem a : Aset) A.push_back(at(a));
      for (Elem b : Bset) B.push_back(at(b));
      for (Elem a : Aset) {
        for (Elem b : Bset) {
          const Elem d = E.sub(a, b);
          const auto [dx, dy] = cm->coords[d.v];
          C.insert(make_point(K, {dx, dy, o}));
          // (a-b)^(q-1) fixes the direction of a-b and must equal -1/(ab).
          if (E.pow(d, K.order() - 1) != E.neg(E.inv(E.mul(a, b)))) {
            throw Error(ErrorCode::TheoremViolated, "circle direction formula fails");
          }
        }
      }
      break;
    }
  }
  if (C.size() != n) throw Error(ErrorCode::DegenerateCosets, "direction set does not have n elements");

  Json p;
  p["kind"] = to_string(params.kind);
  p["n"] = n;
  p["shift_a"] = sa.v;
  p["shift_b"] = sb.v;
  auto net = make_net(F, std::move(A), std::move(B), {C.begin(), C.end()}, Provenance{"conic_line", p});
  const Curve conic = model_conic(K, params.kind);
  for (const auto& P : net.A) {
    if (!contains(K, conic, P)) throw Error(ErrorCode::TheoremViolated, "A point off the model conic");
  }
  for (const auto& P : net.B) {
    if (!contains(K, conic, P)) throw Error(ErrorCode::TheoremViolated, "B point off the model conic");
  }
  require_valid(net);
  return net;
}

ProjectionData construct_projection(int r, int q) {
  const auto pr = prime_power(r);
  const auto pq = prime_power(q);
  if (!pr || !pq || pr->first != pq->first || pq->second % pr->second != 0) {
    throw Error(ErrorCode::BadParameters, "r and q must be powers of one prime with GF(r) inside GF(q)");
  }
  if (r <= 3) throw Error(ErrorCode::ConditionViolated, "the subfield must have more than 3 elements");
  if (static_cast<long long>(q) <= static_cast<long long>(r) * r) {
    throw Error(ErrorCode::ConditionViolated, "q must exceed r^2");
  }
  const FieldPtr S = Field::create(pr->first, pr->second);
  const FieldPtr F = Field::create(pq->first, pq->second);
  const Embedding emb(S, F);
  const Field& K = *F;
  const auto sel = S->elements();
  const std::array<Elem, 3> heights{sel[0], sel[1], sel[2]};  // alpha, beta, gamma

  // property (*) inside AG(3,r)
  bool closure = true;
  {
    const Field& R = *S;
    for (int x = 0; x < 3 && closure; ++x) {
      for (int y = x + 1; y < 3 && closure; ++y) {
        const int z = 3 - x - y;
        const Elem dz = R.sub(heights[y], heights[x]);
        // a + t (b - a) reaches height z for exactly one t in GF(r), whatever a and b are.
        int hits = 0;
        for (Elem t : sel) hits += R.add(heights[x], R.mul(t, dz)) == heights[z] ? 1 : 0;
        if (hits != 1) closure = false;
      }
    }
  }

  std::vector<std::pair<Elem, Elem>> sub_pts;
  for (Elem x : sel) {
    for (Elem y : sel) sub_pts.emplace_back(emb(x), emb(y));
  }
  std::optional<std::pair<Elem, Elem>> choice;
  for (Elem px : K.elements()) {
    for (Elem py : K.elements()) {
      if (emb.contains(px) && emb.contains(py)) continue;
      bool ok = true;
      for (std::size_t i = 0; i < sub_pts.size() && ok; ++i) {
        for (std::size_t j = i + 1; j < sub_pts.size() && ok; ++j) {
          const auto& [ux, uy] = sub_pts[i];
          const auto& [vx, vy] = sub_pts[j];
          const Elem det = K.sub(K.mul(K.sub(px, ux), K.sub(vy, uy)), K.mul(K.sub(py, uy), K.sub(vx, ux)));
          if (det.is_zero()) ok = false;
        }
      }
      if (ok) {
        choice = std::make_pair(px, py);
        break;
      }
    }
    if (choice) break;
  }
  if (!choice) throw Error(ErrorCode::ExhaustedPointChoices, "every point of the extended plane lies on a secant");
  const Point3 P = make_point3(K, {choice->first, choice->second, emb(heights[2]), K.one()});

  std::array<std::vector<Point3>, 3> planes;
  for (int h = 0; h < 3; ++h) {
    for (Elem x : sel) {
      for (Elem y : sel) planes[h].push_back(Point3{{emb(x), emb(y), emb(heights[h]), K.one()}});
    }
  }
  std::optional<Plane3> screen;
  for (const auto& s : all_planes3(K)) {
    if (incident3(K, P, s)) continue;
    bool meets = false;
    for (const auto& pl : planes) {
      for (const auto& X : pl) {
        if (incident3(K, X, s)) {
          meets = true;
          break;
        }
      }
      if (meets) break;
    }
    if (!meets) {
      screen = s;
      break;
    }
  }
  if (!screen) throw Error(ErrorCode::ExhaustedPointChoices, "no admissible screen plane");

  const PlaneChart chart(K, *screen);
  std::array<std::vector<Point>, 3> comps;
  std::set<Point> images;
  for (int h = 0; h < 3; ++h) {
    for (const auto& X : planes[h]) {
      const Point Y = chart.to_plane(project_from_point(K, P, X, *screen));
      comps[h].push_back(Y);
      images.insert(Y);
    }
  }
  Json params;
  params["r"] = r;
  params["q"] = q;
  params["center"] = elem_list(P.c);
  params["screen"] = elem_list(screen->c);
  auto net = make_net(F, comps[0], comps[1], comps[2], Provenance{"projection", params});
  require_valid(net);
  return ProjectionData{std::move(net), S, P, *screen, closure, images.size() == 3u * r * r};
}

bool LatinSquare::valid() const {
  const std::size_t n = order();
  for (std::size_t i = 0; i < n; ++i) {
    if (cells[i].size() != n) return false;
    std::vector<bool> row(n, false), col(n, false);
    for (std::size_t j = 0; j < n; ++j) {
      const int a = cells[i][j], b = cells[j][i];
      if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= n || static_cast<std::size_t>(b) >= n) return false;
      if (row[a] || col[b]) return false;
      row[a] = col[b] = true;
    }
  }
  return true;
}

LatinSquare latin_square_of(const DualThreeNet& net) {
  const Field& F = *net.field;
  const std::size_t n = net.order();
  LatinSquare L;
  L.cells.assign(n, std::vector<int>(n, -1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Line l = line_through(F, net.A[i], net.B[j]);
      for (std::size_t k = 0; k < n; ++k) {
        if (incident(F, net.C[k], l)) {
          L.cells[i][j] = static_cast<int>(k);
          break;
        }
      }
    }
  }
  return L;
}

bool isotopic(const LatinSquare& x, const LatinSquare& y) {
  const std::size_t n = x.order();
  if (y.order() != n) return false;
  std::vector<std::size_t> rp(n), cp(n);
  std::iota(rp.begin(), rp.end(), 0);
  do {
    std::iota(cp.begin(), cp.end(), 0);
    do {
      // symbol map fixed by the first row
      std::vector<int> sym(n, -1);
      bool ok = true;
      for (std::size_t j = 0; j < n; ++j) sym[x.cells[0][j]] = y.cells[rp[0]][cp[j]];
      for (std::size_t i = 1; i < n && ok; ++i) {
        for (std::size_t j = 0; j < n && ok; ++j) {
          if (sym[x.cells[i][j]] != y.cells[rp[i]][cp[j]]) ok = false;
        }
      }
      if (ok) return true;
    } while (std::next_permutation(cp.begin(), cp.end()));
  } while (std::next_permutation(rp.begin(), rp.end()));
  return false;
}

std::size_t intercalates(const LatinSquare& L) {
  const std::size_t n = L.order();
  std::size_t count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = i + 1; k < n; ++k) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t l = j + 1; l < n; ++l) {
          if (L.cells[i][j] == L.cells[k][l] && L.cells[i][l] == L.cells[k][j]) ++count;
        }
      }
    }
  }
  return count;
}

LatinSquare cyclic_square(std::size_t n) {
  LatinSquare L;
  L.cells.assign(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) L.cells[i][j] = static_cast<int>((i + j) % n);
  }
  return L;
}

LatinSquare klein_square() {
  LatinSquare L;
  L.cells.assign(4, std::vector<int>(4));
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) L.cells[i][j] = i ^ j;
  }
  return L;
}

}  // namespace tnet
