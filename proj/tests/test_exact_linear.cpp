#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "qk/error.hpp"
#include "qk/exact_linear.hpp"

using namespace qk;

namespace {

Matrix dense(const std::vector<std::vector<int>> &rows) {
  std::vector<DenseVector> d;
  for (const auto &r : rows) d.emplace_back(r.begin(), r.end());
  return Matrix::from_dense(d);
}

std::vector<DenseVector> to_dense_rows(const std::vector<std::vector<mpq_class>> &m) { return m; }

} // namespace

TEST_CASE("parse_scalar") {
  CHECK(parse_scalar("3/6") == Scalar(1, 2));
  CHECK(parse_scalar("-7") == Scalar(-7));
  CHECK(parse_scalar("+2/4") == Scalar(1, 2));
  CHECK_THROWS_AS(parse_scalar("1/0"), ValidationError);
  CHECK_THROWS_AS(parse_scalar("x"), ValidationError);
  CHECK_THROWS_AS(parse_scalar("1/-2"), ValidationError);
  CHECK_THROWS_AS(parse_scalar(""), ValidationError);
  CHECK(to_string(parse_scalar("-4/6")) == "-2/3");
}

TEST_CASE("rref on small matrices") {
  auto r = rref(dense({{1, 2}, {2, 4}}));
  CHECK(r.rank == 1);
  CHECK(r.pivot_columns == std::vector<std::size_t>{0});
  r = rref(dense({{1, 0}, {0, 1}}));
  CHECK(r.rank == 2);
  CHECK(r.pivot_columns == std::vector<std::size_t>{0, 1});
  r = rref(dense({{0}}));
  CHECK(r.rank == 0);
  CHECK(r.pivot_columns.empty());
  CHECK(r.reduced.rows() == 1);
}

TEST_CASE("kernel_basis on small matrices") {
  auto k = kernel_basis(dense({{1, 1}}));
  REQUIRE(k.size() == 1);
  CHECK(k[0].to_dense(2) == DenseVector{-1, 1});
  CHECK(kernel_basis(dense({{1, 0}, {0, 1}})).empty());
  k = kernel_basis(dense({{1, 2}, {2, 4}}));
  REQUIRE(k.size() == 1);
  CHECK(k[0].to_dense(2) == DenseVector{-2, 1});
}

TEST_CASE("solve_in_span") {
  auto c = solve_in_span({{1, 0}}, {2, 0});
  REQUIRE(c);
  CHECK(*c == DenseVector{2});
  CHECK_FALSE(solve_in_span({{1, 0}}, {0, 1}));
  c = solve_in_span({{1, 1}, {1, -1}}, {3, 1});
  REQUIRE(c);
  CHECK(*c == DenseVector{2, 1});
  CHECK_THROWS_AS(solve_in_span({{1, 0}}, {1, 0, 0}), ValidationError);
}

TEST_CASE("sparse vector arithmetic") {
  SparseVector a = SparseVector::from_dense(DenseVector{1, 0, 2});
  SparseVector b = SparseVector::from_dense(DenseVector{0, 3, -2});
  a.add_scaled(b, 1);
  CHECK(a.to_dense(3) == DenseVector{1, 3, 0});
  CHECK(a.nnz() == 2);
  a.scale(0);
  CHECK(a.empty());
}

TEST_CASE("property: rref rank matches the elimination oracle and is idempotent") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    std::uniform_int_distribution<std::size_t> dim(1, 7);
    auto m = oracle::random_matrix(rng, dim(rng), dim(rng), 30 + trial % 50);
    Matrix mat = Matrix::from_dense(to_dense_rows(m));
    RrefResult r = rref(mat);
    CHECK(r.rank == oracle::rank(m));
    CHECK(rref(r.reduced).reduced == r.reduced);
    for (std::size_t i = 0; i < r.rank; ++i) CHECK(r.reduced.at(i, r.pivot_columns[i]) == 1);
  }
}

TEST_CASE("property: kernel vectors are annihilated and rank + nullity = columns") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    std::uniform_int_distribution<std::size_t> dim(1, 7);
    auto m = oracle::random_matrix(rng, dim(rng), dim(rng));
    Matrix mat = Matrix::from_dense(to_dense_rows(m));
    auto ker = kernel_basis(mat);
    CHECK(ker.size() + oracle::rank(m) == mat.cols());
    for (const auto &v : ker) CHECK(mat.apply(v).empty());
    std::vector<std::vector<mpq_class>> kd;
    for (const auto &v : ker) kd.push_back(v.to_dense(mat.cols()));
    CHECK(oracle::rank(kd) == ker.size());
  }
}

TEST_CASE("property: solve_in_span reconstructs random combinations") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    auto gens = oracle::random_matrix(rng, 3, 5);
    auto coef = oracle::random_matrix(rng, 1, 3, 100)[0];
    DenseVector target(5);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 5; ++j) target[j] += coef[i] * gens[i][j];
    auto c = solve_in_span(gens, target);
    REQUIRE(c);
    DenseVector back(5);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 5; ++j) back[j] += (*c)[i] * gens[i][j];
    CHECK(back == target);
  }
}

TEST_CASE("property: tracked echelon basis reports valid combinations") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    auto rows = oracle::random_matrix(rng, 5, 6, 50);
    EchelonBasis basis(true);
    std::vector<SparseVector> inserted;
    for (const auto &r : rows) {
      inserted.push_back(SparseVector::from_dense(r));
      basis.insert(inserted.back());
    }
    CHECK(basis.rank() == oracle::rank(rows));
    auto probe = oracle::random_matrix(rng, 1, 6, 80)[0];
    SparseVector v = SparseVector::from_dense(probe), combo;
    SparseVector rest = basis.reduce(v, &combo);
    SparseVector rebuilt = rest;
    for (const auto &[i, c] : combo) rebuilt.add_scaled(inserted[i], c);
    CHECK(rebuilt == v);
    auto with_probe = rows;
    with_probe.push_back(probe);
    CHECK(rest.empty() == (oracle::rank(with_probe) == basis.rank()));
  }
}

TEST_CASE("matrix transpose and columns") {
  Matrix m = dense({{1, 2, 0}, {0, 0, 3}});
  CHECK(m.transpose().transpose() == m);
  std::vector<SparseVector> cols{SparseVector::from_dense(DenseVector{1, 0}), SparseVector::from_dense(DenseVector{2, 0}),
                                 SparseVector::from_dense(DenseVector{0, 3})};
  CHECK(Matrix::from_columns(2, cols) == m);
}
