#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "qk/corpus.hpp"
#include "qk/error.hpp"
#include "qk/quadratic_dual.hpp"

using namespace qk;

namespace {

std::vector<std::size_t> dims(const Presentation &p, int n) {
  AlgebraModel m = AlgebraModel::build(p, n);
  std::vector<std::size_t> out;
  for (int d = 0; d <= n; ++d) out.push_back(m.dim_degree(d));
  return out;
}

} // namespace

TEST_CASE("quadratic_check") {
  CHECK(quadratic_check(exterior(3).presentation));
  CHECK_FALSE(quadratic_check(loop_cubed().presentation));
  CHECK(quadratic_check(path_algebra(parse_quiver_spec("A:3")).presentation));
  CHECK_THROWS_AS(quadratic_data(loop_cubed().presentation), ValidationError);
}

TEST_CASE("dual of exterior(2) is a polynomial ring") {
  Presentation d = dual_presentation(exterior(2).presentation);
  REQUIRE(d.relations.size() == 1);
  CHECK(d.relations[0].size() == 2);
  std::vector<Scalar> coefs;
  for (const auto &[p, c] : d.relations[0].terms()) coefs.push_back(c);
  CHECK(coefs[0] == -coefs[1]);
  CHECK(dims(d, 5) == std::vector<std::size_t>{1, 2, 3, 4, 5, 6});
}

TEST_CASE("dual of A2 and of exterior(1)") {
  Presentation d = dual_presentation(path_algebra(parse_quiver_spec("A:2")).presentation);
  CHECK(d.relations.empty());
  CHECK(d.quiver.arrow(0).source == 1);
  CHECK(dims(d, 2) == std::vector<std::size_t>{2, 1, 0});
  Presentation e = dual_presentation(exterior(1).presentation);
  CHECK(e.relations.empty());
  CHECK(dims(e, 5) == std::vector<std::size_t>{1, 1, 1, 1, 1, 1});
}

TEST_CASE("property: dual of exterior(m) has polynomial dimensions") {
  for (std::size_t m = 1; m <= 4; ++m) {
    auto got = dims(dual_presentation(exterior(m).presentation), 4);
    for (std::size_t i = 0; i <= 4; ++i) CHECK(got[i] == oracle::binomial(m + i - 1, i));
  }
}

TEST_CASE("property: relation space and dual relation space have complementary dimensions") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t k = 2 + trial % 2;
    Quiver q = parse_quiver_spec("loops:" + std::to_string(k));
    auto len2 = enumerate_paths(q, 2);
    auto coefs = oracle::random_matrix(rng, 1 + trial % 4, len2.size(), 50);
    std::vector<PathCombination> rels;
    for (const auto &row : coefs) {
      PathCombination r;
      for (std::size_t j = 0; j < row.size(); ++j) r.add(len2[j], row[j]);
      if (!r.empty()) rels.push_back(r);
    }
    Presentation p = make_presentation(q, rels);
    Presentation d = dual_presentation(p);
    const std::size_t rank = oracle::rank(coefs);
    CHECK(d.relations.size() == len2.size() - rank);
    CHECK(dims(p, 2)[2] + dims(d, 2)[2] == len2.size());
    CHECK(double_dual_check(p));
  }
}

TEST_CASE("double dual on corpus entries") {
  CHECK(double_dual_check(exterior(3).presentation));
  CHECK(double_dual_check(trivial_extension_dual(parse_quiver_spec("star:4")).presentation));
  CHECK(double_dual_check(path_algebra(parse_quiver_spec("A:2")).presentation));
  CHECK(double_dual_check(example3(2).presentation));
  CHECK(double_dual_check(preprojective(parse_quiver_spec("zigzag:4")).presentation));
}

TEST_CASE("dual of the 4-star trivial extension matches the preprojective algebra in low degrees") {
  auto d = dims(dual_presentation(trivial_extension_dual(parse_quiver_spec("star:4")).presentation), 4);
  auto p = dims(preprojective(parse_quiver_spec("star:4")).presentation, 4);
  CHECK(d == p);
}
