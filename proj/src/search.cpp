#include "tnet/search.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <thread>

namespace tnet {

namespace {

// Incidence of PG(2,q) by point index, in the global enumeration order.
struct Plane {
  std::vector<Point> pts;
  std::vector<std::vector<int>> line_of;    // line index through two distinct points
  std::vector<std::vector<char>> on_line;   // [line][point]
  std::vector<std::vector<int>> line_pts;   // points of each line

  explicit Plane(const Field& F) : pts(all_points(F)) {
    const std::size_t N = pts.size();
    std::map<Line, int> idx;
    line_of.assign(N, std::vector<int>(N, -1));
    for (std::size_t i = 0; i < N; ++i) {
      for (std::size_t j = i + 1; j < N; ++j) {
        const Line l = line_through(F, pts[i], pts[j]);
        auto [it, fresh] = idx.emplace(l, static_cast<int>(idx.size()));
        if (fresh) {
          on_line.emplace_back(N, 0);
          line_pts.emplace_back();
          for (std::size_t k = 0; k < N; ++k) {
            if (incident(F, pts[k], l)) {
              on_line.back()[k] = 1;
              line_pts.back().push_back(static_cast<int>(k));
            }
          }
        }
        line_of[i][j] = line_of[j][i] = it->second;
      }
    }
  }

  int index_of(const Point& P) const {
    return static_cast<int>(std::lower_bound(pts.begin(), pts.end(), P) - pts.begin());
  }
  bool collinear(int a, int b, int c) const { return on_line[line_of[a][b]][c] != 0; }
  bool collinear_set(const std::vector<int>& s) const {
    for (std::size_t i = 2; i < s.size(); ++i) {
      if (!collinear(s[0], s[1], s[i])) return false;
    }
    return true;
  }
  bool has_three_collinear(const std::vector<int>& s) const {
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (std::size_t j = i + 1; j < s.size(); ++j) {
        for (std::size_t k = j + 1; k < s.size(); ++k) {
          if (collinear(s[i], s[j], s[k])) return true;
        }
      }
    }
    return false;
  }
};

struct Branch {
  std::size_t a;  // index into the A list
  int b1;
};

struct Found {
  std::uint64_t at;  // node count when found
  std::array<std::vector<int>, 3> comps;
};

struct BranchOut {
  std::vector<Found> found;
  std::uint64_t nodes = 0;
  bool truncated = false;
};

class Searcher {
 public:
  Searcher(const SearchTask& t, const Plane& pl) : t_(t), pl_(pl), n_(t.n) {}

  std::vector<std::vector<int>> a_sets() const {
    std::vector<std::vector<int>> out;
    const Field& F = *t_.field;
    const int N = static_cast<int>(pl_.pts.size());
    const Elem o = F.zero(), l = F.one();
    auto extend = [&](std::vector<int> base, const std::vector<int>& pool, auto&& keep) {
      std::vector<int> cur = base;
      auto rec = [&](auto&& self, std::size_t from) -> void {
        if (cur.size() == n_) {
          if (keep(cur)) out.push_back(cur);
          return;
        }
        for (std::size_t i = from; i < pool.size(); ++i) {
          cur.push_back(pool[i]);
          self(self, i + 1);
          cur.pop_back();
        }
      };
      rec(rec, 0);
    };
    auto keep = [&](const std::vector<int>& s) {
      if (t_.arcs && pl_.has_three_collinear(s)) return false;
      if (t_.collinear[0]) {
        if (pl_.collinear_set(s) != *t_.collinear[0]) return false;
      }
      return true;
    };
    if (!t_.pin_frame) {
      std::vector<int> all(N);
      for (int i = 0; i < N; ++i) all[i] = i;
      extend({}, all, keep);
      return out;
    }
    const int e1 = pl_.index_of(Point{{l, o, o}}), e2 = pl_.index_of(Point{{o, l, o}}),
              e3 = pl_.index_of(Point{{o, o, l}}), e12 = pl_.index_of(Point{{l, l, o}});
    if (n_ == 2) {
      out.push_back({e1, e2});
      return out;
    }
    if (t_.collinear[0] != true) {
      std::vector<int> pool;
      for (int i = 0; i < N; ++i) {
        if (i != e1 && i != e2 && i != e3) pool.push_back(i);
      }
      extend({e1, e2, e3}, pool, [&](const std::vector<int>& s) { return keep(s); });
    }
    if (t_.collinear[0] != false && !t_.arcs) {
      const int z = pl_.line_of[e1][e2];
      std::vector<int> pool;
      for (int i : pl_.line_pts[z]) {
        if (i != e1 && i != e2 && i != e12) pool.push_back(i);
      }
      extend({e1, e2, e12}, pool, keep);
    }
    for (auto& s : out) std::sort(s.begin(), s.end());
    return out;
  }

  // B points compatible with A alone.
  std::vector<char> b_allowed(const std::vector<int>& A) const {
    std::vector<char> ok(pl_.pts.size(), 1);
    for (int a : A) ok[a] = 0;
    for (std::size_t i = 0; i < A.size(); ++i) {
      for (std::size_t j = i + 1; j < A.size(); ++j) {
        for (int p : pl_.line_pts[pl_.line_of[A[i]][A[j]]]) ok[p] = 0;
      }
    }
    return ok;
  }

  BranchOut run(const std::vector<int>& A, int b1, std::uint64_t limit) {
    out_ = BranchOut{};
    limit_ = limit;
    A_ = A;
    allowed_ = b_allowed(A);
    B_ = {b1};
    ++out_.nodes;
    extend_b();
    return std::move(out_);
  }

 private:
  bool tick() {
    if (++out_.nodes > limit_) out_.truncated = true;
    return !out_.truncated;
  }

  bool b_compatible(int b) const {
    for (std::size_t i = 0; i < B_.size(); ++i) {
      for (int a : A_) {
        if (pl_.collinear(a, B_[i], b)) return false;
      }
      if (t_.arcs) {
        for (std::size_t j = i + 1; j < B_.size(); ++j) {
          if (pl_.collinear(B_[i], B_[j], b)) return false;
        }
      }
    }
    return true;
  }

  void extend_b() {
    if (out_.truncated) return;
    if (B_.size() == n_) {
      if (t_.collinear[1] && pl_.collinear_set(B_) != *t_.collinear[1]) return;
      solve_c();
      return;
    }
    const int N = static_cast<int>(pl_.pts.size());
    for (int b = B_.back() + 1; b < N; ++b) {
      if (!allowed_[b] || !b_compatible(b)) continue;
      if (t_.collinear[1] == true && B_.size() >= 2 && !pl_.collinear(B_[0], B_[1], b)) continue;
      if (!tick()) return;
      B_.push_back(b);
      extend_b();
      B_.pop_back();
      if (out_.truncated) return;
    }
  }

  void solve_c() {
    const std::size_t n = n_;
    const int N = static_cast<int>(pl_.pts.size());
    std::vector<char> used(N, 0);
    for (int a : A_) used[a] = 1;
    for (int b : B_) used[b] = 1;
    cands_.clear();
    masks_.clear();
    for (int p = 0; p < N; ++p) {
      if (used[p]) continue;
      std::uint64_t mask = 0;
      bool ok = true;
      std::vector<int> col(n, 0);
      for (std::size_t i = 0; i < n && ok; ++i) {
        int hits = 0;
        for (std::size_t j = 0; j < n; ++j) {
          if (pl_.on_line[pl_.line_of[A_[i]][B_[j]]][p]) {
            ++hits;
            ++col[j];
            mask |= std::uint64_t{1} << (i * n + j);
          }
        }
        ok = hits == 1;
      }
      if (!ok || std::any_of(col.begin(), col.end(), [](int c) { return c != 1; })) continue;
      cands_.push_back(p);
      masks_.push_back(mask);
    }
    if (cands_.size() < n) return;
    by_cell_.assign(n * n, {});
    for (std::size_t k = 0; k < cands_.size(); ++k) {
      for (std::size_t c = 0; c < n * n; ++c) {
        if (masks_[k] >> c & 1) by_cell_[c].push_back(static_cast<int>(k));
      }
    }
    C_.clear();
    cover(0);
  }

  void cover(std::uint64_t covered) {
    const std::size_t n = n_;
    const std::uint64_t full = n * n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << (n * n)) - 1;
    if (covered == full) {
      emit();
      return;
    }
    const int cell = std::countr_one(covered);
    for (int k : by_cell_[cell]) {
      if (masks_[k] & covered) continue;
      const int p = cands_[k];
      if (t_.arcs) {
        bool bad = false;
        for (std::size_t i = 0; i < C_.size() && !bad; ++i) {
          for (std::size_t j = i + 1; j < C_.size() && !bad; ++j) bad = pl_.collinear(C_[i], C_[j], p);
        }
        if (bad) continue;
      }
      if (t_.collinear[2] == true && C_.size() >= 2 && !pl_.collinear(C_[0], C_[1], p)) continue;
      if (!tick()) return;
      C_.push_back(p);
      cover(covered | masks_[k]);
      C_.pop_back();
      if (out_.truncated) return;
    }
  }

  void emit() {
    if (t_.collinear[2] && pl_.collinear_set(C_) != *t_.collinear[2]) return;
    std::vector<int> C = C_;
    std::sort(C.begin(), C.end());
    std::vector<int> B = B_;
    out_.found.push_back(Found{out_.nodes, {A_, B, C}});
  }

  const SearchTask& t_;
  const Plane& pl_;
  std::size_t n_;
  std::uint64_t limit_ = 0;
  BranchOut out_;
  std::vector<int> A_, B_, C_;
  std::vector<char> allowed_;
  std::vector<int> cands_;
  std::vector<std::uint64_t> masks_;
  std::vector<std::vector<int>> by_cell_;
};

void validate(const SearchTask& t) {
  if (!t.field) throw Error(ErrorCode::BadParameters, "search needs a field");
  if (t.n < 2 || t.n > 8) throw Error(ErrorCode::BadParameters, "search supports orders 2 to 8");
  if (t.jobs == 0) throw Error(ErrorCode::BadParameters, "jobs must be positive");
  const bool arcs = t.arcs || t.hyperovals;
  if (arcs && t.n >= 3 && std::any_of(t.collinear.begin(), t.collinear.end(), [](auto c) { return c == true; })) {
    throw Error(ErrorCode::BadParameters, "arc constraints exclude collinear components");
  }
  if (t.hyperovals) {
    if (t.field->p() != 2) throw Error(ErrorCode::BadParameters, "hyperovals need even q");
    if (2 * t.n != t.field->order() + 2) throw Error(ErrorCode::BadParameters, "hyperovals need 2n = q + 2");
  }
  if (t.n == 2 && t.collinear[0] == false) {
    throw Error(ErrorCode::BadParameters, "two points are always collinear");
  }
}

}  // namespace

SearchSummary enumerate_nets(const SearchTask& task_in, const NetEmitter& emit) {
  SearchTask task = task_in;
  task.arcs = task.arcs || task.hyperovals;
  validate(task);
  const Field& F = *task.field;
  const Plane pl(F);
  const Searcher proto(task, pl);
  const auto As = proto.a_sets();
  std::vector<Branch> branches;
  for (std::size_t i = 0; i < As.size(); ++i) {
    const auto ok = proto.b_allowed(As[i]);
    for (int b = 0; b < static_cast<int>(ok.size()); ++b) {
      if (ok[b]) branches.push_back(Branch{i, b});
    }
  }

  SearchSummary sum;
  sum.branches = branches.size();
  std::set<std::array<std::vector<int>, 3>> seen;
  std::size_t next = 0;
  bool stop = false;
  while (next < branches.size() && !stop) {
    const std::size_t wave = std::min<std::size_t>(task.jobs, branches.size() - next);
    const std::uint64_t remaining = task.budget - sum.nodes;
    std::vector<BranchOut> outs(wave);
    auto work = [&](std::size_t w) {
      Searcher s(task, pl);
      const Branch& br = branches[next + w];
      outs[w] = s.run(As[br.a], br.b1, remaining);
    };
    if (wave == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (std::size_t w = 0; w < wave; ++w) pool.emplace_back(work, w);
      for (auto& th : pool) th.join();
    }
    for (std::size_t w = 0; w < wave && !stop; ++w) {
      const std::uint64_t left = task.budget - sum.nodes;
      const BranchOut& o = outs[w];
      const bool over = o.truncated || o.nodes > left;
      for (const auto& f : o.found) {
        if (over && f.at > left) break;
        std::array<std::vector<int>, 3> key = f.comps;
        std::sort(key.begin(), key.end());
        if (!seen.insert(key).second) continue;
        std::array<std::vector<Point>, 3> P;
        for (int c = 0; c < 3; ++c) {
          for (int i : f.comps[c]) P[c].push_back(pl.pts[i]);
        }
        Json params = {{"n", task.n}};
        DualThreeNet net = make_net(task.field, P[0], P[1], P[2], Provenance{"search", params});
        if (!verify_axioms(net).ok) {
          ++sum.rejected;
          continue;
        }
        ++sum.by_class[to_string(classify_regularity(net).kind)];
        ++sum.emitted;
        if (emit) {
          emit(net);
        } else {
          sum.nets.push_back(std::move(net));
        }
        if (task.max_results && sum.emitted >= task.max_results) {
          stop = true;
          break;
        }
      }
      if (over) {
        sum.nodes = task.budget;
        sum.budget_exceeded = true;
        stop = true;
        break;
      }
      sum.nodes += o.nodes;
      ++sum.branches_done;
    }
    next += wave;
  }
  return sum;
}

HuntReport hunt_hyperoval_net(int q, std::size_t n, std::uint64_t budget, unsigned jobs, const NetEmitter& emit) {
  const auto pp = prime_power(q);
  if (!pp || pp->first != 2) throw Error(ErrorCode::BadParameters, "q must be a power of 2");
  SearchTask t;
  t.field = Field::create(pp->first, pp->second);
  t.n = n;
  t.hyperovals = true;
  t.budget = budget;
  t.jobs = jobs;
  HuntReport rep;
  const FieldPtr F = t.field;
  std::vector<DualThreeNet> kept;
  rep.summary = enumerate_nets(t, [&](const DualThreeNet& net) {
    rep.cubic_nullity.push_back(curves_through(*F, net.all_points(), 3).nullity());
    if (emit) {
      emit(net);
    } else {
      kept.push_back(net);
    }
  });
  rep.summary.nets = std::move(kept);
  return rep;
}

}  // namespace tnet
