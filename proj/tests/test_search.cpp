#include <doctest.h>

#include "oracle.hpp"
#include "tnet/search.hpp"

using namespace tnet;

namespace {

Point pt(const Field& F, int x, int y, int z) { return make_point(F, {F.from_int(x), F.from_int(y), F.from_int(z)}); }

// ordered (B, C) completions of a fixed A of size three, by exhaustion
std::size_t brute_completions(const FieldPtr& F, const std::vector<Point>& A) {
  std::vector<Point> rest;
  for (const auto& P : all_points(*F)) {
    if (std::find(A.begin(), A.end(), P) == A.end()) rest.push_back(P);
  }
  std::vector<std::vector<Point>> triples;
  for (std::size_t i = 0; i < rest.size(); ++i) {
    for (std::size_t j = i + 1; j < rest.size(); ++j) {
      for (std::size_t k = j + 1; k < rest.size(); ++k) triples.push_back({rest[i], rest[j], rest[k]});
    }
  }
  std::size_t count = 0;
  for (const auto& B : triples) {
    for (const auto& C : triples) {
      bool disjoint = true;
      for (const auto& P : B) disjoint = disjoint && std::find(C.begin(), C.end(), P) == C.end();
      if (disjoint && oracle::net_axioms(DualThreeNet{F, A, B, C, {}})) ++count;
    }
  }
  return count;
}

std::vector<std::string> keys(const SearchSummary& s) {
  std::vector<std::string> out;
  for (const auto& n : s.nets) {
    std::string k;
    for (int c = 0; c < 3; ++c) {
      for (const auto& P : n.component(c)) {
        for (const Elem e : P.c) k += std::to_string(e.v) + ",";
      }
      k += "|";
    }
    out.push_back(k);
  }
  return out;
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

TEST_CASE("order three: search agrees with exhaustion of (B, C)") {
  for (auto [p, k] : std::vector<std::pair<int, int>>{{3, 1}, {2, 2}}) {
    const auto F = Field::create(p, k);
    const std::vector<Point> tri{pt(*F, 1, 0, 0), pt(*F, 0, 1, 0), pt(*F, 0, 0, 1)};
    const std::vector<Point> row{pt(*F, 1, 0, 0), pt(*F, 0, 1, 0), pt(*F, 1, 1, 0)};
    for (const bool col : {false, true}) {
      SearchTask t;
      t.field = F;
      t.n = 3;
      t.collinear[0] = col;
      const auto s = enumerate_nets(t);
      CAPTURE(F->order());
      CAPTURE(col);
      CHECK_FALSE(s.budget_exceeded);
      CHECK(s.rejected == 0);
      // each unordered pair {B, C} is emitted once
      CHECK(2 * s.emitted == brute_completions(F, col ? row : tri));
      for (const auto& n : s.nets) {
        CHECK(oracle::net_axioms(n));
        CHECK(std::set<Point>(n.A.begin(), n.A.end()) == std::set<Point>((col ? row : tri).begin(), (col ? row : tri).end()));
      }
    }
  }
  // frozen from the exhaustion above
  const auto F3 = Field::create(3, 1);
  SearchTask t;
  t.field = F3;
  t.n = 3;
  CHECK(enumerate_nets(t).emitted == 3);
}

TEST_CASE("order four over GF(5) runs to completion") {
  SearchTask t;
  t.field = Field::create(5, 1);
  t.n = 4;
  const auto s = enumerate_nets(t);
  CHECK_FALSE(s.budget_exceeded);
  CHECK(s.branches_done == s.branches);
  CHECK(s.emitted == 75);
  CHECK(s.nets.size() == 75);
  const auto k = keys(s);
  CHECK(std::set<std::string>(k.begin(), k.end()).size() == k.size());
  std::size_t total = 0;
  for (const auto& [cls, n] : s.by_class) total += n;
  CHECK(total == 75);
  for (const auto& n : s.nets) CHECK(oracle::net_axioms(n));
}

TEST_CASE("output does not depend on the thread count") {
  for (const std::uint64_t budget : {std::uint64_t{50'000'000}, std::uint64_t{20'000}}) {
    SearchTask t;
    t.field = Field::create(7, 1);
    t.n = 4;
    t.budget = budget;
    const auto one = enumerate_nets(t);
    t.jobs = 4;
    const auto four = enumerate_nets(t);
    CHECK(keys(one) == keys(four));
    CHECK(one.nodes == four.nodes);
    CHECK(one.budget_exceeded == four.budget_exceeded);
  }
}

TEST_CASE("budget truncation keeps a prefix") {
  SearchTask t;
  t.field = Field::create(7, 1);
  t.n = 4;
  const auto full = keys(enumerate_nets(t));
  t.budget = 5'000;
  const auto s = enumerate_nets(t);
  CHECK(s.budget_exceeded);
  CHECK(s.nodes <= 5'000);
  const auto part = keys(s);
  CHECK(part.size() < full.size());
  CHECK(std::equal(part.begin(), part.end(), full.begin()));
  t.budget = 50'000'000;
  t.max_results = 7;
  CHECK(enumerate_nets(t).emitted == 7);
}

TEST_CASE("emitter receives the nets in order") {
  SearchTask t;
  t.field = Field::create(5, 1);
  t.n = 4;
  std::vector<DualThreeNet> got;
  const auto s = enumerate_nets(t, [&](const DualThreeNet& n) { got.push_back(n); });
  CHECK(s.nets.empty());
  CHECK(got.size() == s.emitted);
}

TEST_CASE("constraints") {
  const auto F = Field::create(7, 1);
  SearchTask t;
  t.field = F;
  t.n = 4;
  t.collinear = {true, true, true};
  for (const auto& n : enumerate_nets(t).nets) {
    for (int c = 0; c < 3; ++c) CHECK(oracle::all_on_one_line(*F, n.component(c)));
  }
  t.collinear = {false, std::nullopt, true};
  for (const auto& n : enumerate_nets(t).nets) {
    CHECK_FALSE(oracle::all_on_one_line(*F, n.A));
    CHECK(oracle::all_on_one_line(*F, n.C));
  }
  // too few points for three disjoint components
  SearchTask tiny;
  tiny.field = Field::create(2, 1);
  tiny.n = 3;
  CHECK(enumerate_nets(tiny).emitted == 0);
}

TEST_CASE("parameter errors") {
  SearchTask t;
  t.field = Field::create(5, 1);
  t.n = 1;
  CHECK(code_of([&] { enumerate_nets(t); }) == ErrorCode::BadParameters);
  t.n = 9;
  CHECK(code_of([&] { enumerate_nets(t); }) == ErrorCode::BadParameters);
  t.n = 3;
  t.jobs = 0;
  CHECK(code_of([&] { enumerate_nets(t); }) == ErrorCode::BadParameters);
  t.jobs = 1;
  t.hyperovals = true;
  CHECK(code_of([&] { enumerate_nets(t); }) == ErrorCode::BadParameters);
  t.hyperovals = false;
  t.arcs = true;
  t.collinear[1] = true;
  CHECK(code_of([&] { enumerate_nets(t); }) == ErrorCode::BadParameters);
}

TEST_CASE("hyperoval hunt in PG(2,4)") {
  const auto rep = hunt_hyperoval_net(4, 3, 1'000'000);
  CHECK(rep.cubic_nullity.size() == rep.summary.emitted);
  for (const auto& n : rep.summary.nets) {
    CHECK(oracle::net_axioms(n));
    std::vector<Point> ab = n.A;
    ab.insert(ab.end(), n.B.begin(), n.B.end());
    CHECK(ab.size() == 6);
  }
  CHECK(code_of([] { hunt_hyperoval_net(5, 3, 1000); }) == ErrorCode::BadParameters);
}
