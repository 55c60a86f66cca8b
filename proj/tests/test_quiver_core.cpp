#include <doctest.h>

#include <random>

#include "qk/corpus.hpp"
#include "qk/error.hpp"
#include "qk/quiver.hpp"

using namespace qk;

namespace {

Quiver a2() { return make_quiver({"1", "2"}, {{"a", "1", "2"}}); }
Quiver two_loops() { return make_quiver({"1"}, {{"a1", "1", "1"}, {"a2", "1", "1"}}); }

PathCombination combo(std::initializer_list<std::pair<Scalar, Path>> terms) {
  PathCombination r;
  for (const auto &[c, p] : terms) r.add(p, c);
  return r;
}

} // namespace

TEST_CASE("make_quiver validation") {
  Quiver q = a2();
  CHECK(q.vertex_count() == 2);
  CHECK(q.arrow(0).source == 0);
  CHECK(q.arrow(0).target == 1);
  CHECK(two_loops().arrow_count() == 2);
  CHECK_THROWS_AS(make_quiver({"1"}, {{"a", "1", "2"}}), ValidationError);
  CHECK_THROWS_AS(make_quiver({"1", "1"}, {}), ValidationError);
  CHECK_THROWS_AS(make_quiver({"1"}, {{"a", "1", "1"}, {"a", "1", "1"}}), ValidationError);
}

TEST_CASE("compose") {
  Quiver q = a2();
  Path a = Path::of_arrow(q, 0);
  CHECK(compose(a, Path::trivial(0)) == a);
  CHECK(compose(Path::trivial(1), a) == a);
  CHECK_THROWS_AS(compose(Path::trivial(0), a), ValidationError);

  Quiver e = two_loops();
  Path p = compose(Path::of_arrow(e, 0), Path::of_arrow(e, 1));
  CHECK(path_to_string(e, p) == "a1·a2");
  CHECK(p.source() == 0);
  CHECK(p.target() == 0);
  CHECK(p.length() == 2);
  CHECK(path_to_string(e, Path::trivial(0)) == "e_1");
}

TEST_CASE("enumerate_paths") {
  CHECK(enumerate_paths(two_loops(), 2).size() == 4);
  CHECK(enumerate_paths(a2(), 2).empty());
  Quiver d = double_quiver(parse_quiver_spec("star:4"));
  auto leaf = d.find_vertex("1");
  auto ps = enumerate_paths(d, 2, leaf, leaf);
  REQUIRE(ps.size() == 1);
  CHECK(path_to_string(d, ps[0]) == "a1*·a1");
}

TEST_CASE("property: enumerate_paths counts equal adjacency matrix powers") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 25; ++trial) {
    std::uniform_int_distribution<int> nv(1, 4), na(0, 6);
    const int n = nv(rng);
    std::vector<std::string> vs;
    for (int i = 0; i < n; ++i) vs.push_back(std::to_string(i));
    std::vector<ArrowSpec> as;
    std::uniform_int_distribution<int> pick(0, n - 1);
    const int k = na(rng);
    for (int i = 0; i < k; ++i) as.push_back({"x" + std::to_string(i), vs[pick(rng)], vs[pick(rng)]});
    Quiver q = make_quiver(vs, as);
    std::vector<std::vector<long long>> adj(n, std::vector<long long>(n, 0)), pw(n, std::vector<long long>(n, 0));
    for (const auto &a : q.arrows()) ++adj[a.source][a.target];
    for (int i = 0; i < n; ++i) pw[i][i] = 1;
    for (std::size_t len = 0; len <= 3; ++len) {
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) CHECK(enumerate_paths(q, len, u, v).size() == static_cast<std::size_t>(pw[u][v]));
      auto all = enumerate_paths(q, len);
      CHECK(std::is_sorted(all.begin(), all.end()));
      std::vector<std::vector<long long>> next(n, std::vector<long long>(n, 0));
      for (int u = 0; u < n; ++u)
        for (int w = 0; w < n; ++w)
          for (int v = 0; v < n; ++v) next[u][v] += pw[u][w] * adj[w][v];
      pw = next;
    }
  }
}

TEST_CASE("opposite and double quivers") {
  Quiver op = opposite_quiver(a2());
  CHECK(op.arrow(0).source == 1);
  CHECK(op.arrow(0).target == 0);
  Quiver loops = two_loops();
  CHECK(opposite_quiver(loops) == loops);
  Quiver d = double_quiver(parse_quiver_spec("star:4"));
  CHECK(opposite_quiver(opposite_quiver(d)) == d);
  CHECK(d.vertex_count() == 5);
  CHECK(d.arrow_count() == 8);
  Quiver da = double_quiver(a2());
  REQUIRE(da.arrow_count() == 2);
  CHECK(da.arrow(1).label == "a*");
  CHECK(da.arrow(1).source == 1);
  CHECK(da.arrow(1).target == 0);
  Quiver empty = make_quiver({"1", "2"}, {});
  CHECK(double_quiver(empty) == empty);
}

TEST_CASE("validate_relation") {
  Quiver e = two_loops();
  Path a1 = Path::of_arrow(e, 0), a2p = Path::of_arrow(e, 1);
  CHECK_FALSE(validate_relation(e, combo({{1, compose(a1, a2p)}, {1, compose(a2p, a1)}})));
  CHECK(validate_relation(e, combo({{1, compose(a1, a2p)}, {1, a1}})));
  CHECK(validate_relation(e, PathCombination{}));
  CHECK(validate_relation(e, combo({{1, a1}})));

  Quiver d = double_quiver(a2());
  Path a = Path::of_arrow(d, 0), s = Path::of_arrow(d, 1);
  auto problem = validate_relation(d, combo({{1, compose(s, a)}, {-1, compose(a, s)}}));
  REQUIRE(problem);
  CHECK(problem->find("parallel") != std::string::npos);
}

TEST_CASE("property: path order is a strict total order compatible with length") {
  Quiver e = two_loops();
  std::vector<Path> all;
  for (std::size_t len = 0; len <= 3; ++len)
    for (const auto &p : enumerate_paths(e, len)) all.push_back(p);
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = 0; j < all.size(); ++j) {
      CHECK((all[i] < all[j]) == (i < j));
      if (all[i].length() < all[j].length()) CHECK(all[i] < all[j]);
    }
}
