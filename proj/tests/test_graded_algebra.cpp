#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "qk/corpus.hpp"
#include "qk/error.hpp"
#include "qk/graded_algebra.hpp"
#include "qk/structure_algebra.hpp"

using namespace qk;

namespace {

Path word(const Quiver &q, std::initializer_list<const char *> labels) {
  std::vector<ArrowId> w;
  for (const char *l : labels) w.push_back(*q.find_arrow(l));
  return Path::from_word(q, w);
}

std::vector<std::size_t> dims(const AlgebraModel &m) {
  std::vector<std::size_t> out;
  for (int d = 0; d <= m.max_degree(); ++d) out.push_back(m.dim_degree(d));
  return out;
}

} // namespace

TEST_CASE("graded dimensions of small algebras") {
  CHECK(dims(AlgebraModel::build(exterior(2).presentation, 4)) == std::vector<std::size_t>{1, 2, 1, 0, 0});
  CHECK(dims(AlgebraModel::build(loop_cubed().presentation, 5)) == std::vector<std::size_t>{1, 1, 1, 0, 0, 0});
  AlgebraModel a2 = AlgebraModel::build(path_algebra(parse_quiver_spec("A:2")).presentation, 2);
  CHECK(a2.dim(1, 0, 1) == 1);
  CHECK(a2.dim_degree(2) == 0);
  CHECK(dims(AlgebraModel::build(trivial_extension_dual(parse_quiver_spec("star:4")).presentation, 4)) ==
        std::vector<std::size_t>{5, 8, 5, 0, 0});
}

TEST_CASE("property: exterior dimensions are binomial") {
  for (std::size_t m = 1; m <= 4; ++m) {
    AlgebraModel model = AlgebraModel::build(exterior(m).presentation, 6);
    for (int d = 0; d <= 6; ++d) CHECK(model.dim_degree(d) == oracle::binomial(m, static_cast<std::size_t>(d)));
    CHECK(model.top_degree() == static_cast<int>(m));
  }
}

TEST_CASE("property: monomial algebra dimensions match word counting") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t k = 1 + trial % 3;
    Quiver q = parse_quiver_spec("loops:" + std::to_string(k));
    std::uniform_int_distribution<std::size_t> letter(0, k - 1), len(2, 3), count(0, 4);
    std::vector<std::vector<std::size_t>> forbidden;
    std::vector<PathCombination> rels;
    const std::size_t nrel = count(rng);
    for (std::size_t r = 0; r < nrel; ++r) {
      std::vector<std::size_t> w(len(rng));
      for (auto &x : w) x = letter(rng);
      // the oracle reads words in application order; paths are stored last-applied first
      forbidden.push_back(w);
      std::vector<ArrowId> written(w.rbegin(), w.rend());
      PathCombination c;
      c.add(Path::from_word(q, written), 1);
      rels.push_back(c);
    }
    // mixed lengths make the ideal generated in several degrees; that is fine here
    AlgebraModel m = AlgebraModel::build(make_presentation(q, rels), 5);
    for (int d = 0; d <= 5; ++d) CHECK(m.dim_degree(d) == oracle::monomial_words(k, static_cast<std::size_t>(d), forbidden));
  }
}

TEST_CASE("normal forms and multiplication") {
  AlgebraModel m = AlgebraModel::build(exterior(2).presentation, 4);
  const Quiver &q = m.quiver();
  CHECK(m.normal_form(word(q, {"a1", "a1"})).empty());
  SparseVector x = m.normal_form(word(q, {"a1", "a2"})), y = m.normal_form(word(q, {"a2", "a1"}));
  CHECK_FALSE(x.empty());
  y.scale(-1);
  CHECK(x == y);

  AlgebraModel c = AlgebraModel::build(loop_cubed().presentation, 5);
  CHECK_FALSE(c.normal_form(word(c.quiver(), {"x", "x"})).empty());
  CHECK(c.normal_form(word(c.quiver(), {"x", "x", "x"})).empty());

  auto cls = [&](const Path &p) {
    PathCombination r;
    r.add(p, 1);
    return normal_form(m, r);
  };
  Path a1 = Path::of_arrow(q, 0), a2p = Path::of_arrow(q, 1), e = Path::trivial(0);
  CHECK(multiply(m, cls(a1), cls(a1)).empty());
  SparseVector p12 = multiply(m, cls(a1), cls(a2p)), p21 = multiply(m, cls(a2p), cls(a1));
  CHECK_FALSE(p12.empty());
  p21.scale(-1);
  CHECK(p12 == p21);
  CHECK(multiply(m, cls(e), cls(a1)) == cls(a1));

  AlgebraModel a2 = AlgebraModel::build(path_algebra(parse_quiver_spec("A:2")).presentation, 2);
  PathCombination ea, e1;
  ea.add(Path::of_arrow(a2.quiver(), 0), 1);
  e1.add(Path::trivial(0), 1);
  PathCombination e2;
  e2.add(Path::trivial(1), 1);
  CHECK(multiply(a2, normal_form(a2, e2), normal_form(a2, ea)) == normal_form(a2, ea));
  CHECK(multiply(a2, normal_form(a2, e1), normal_form(a2, ea)).empty());
}

TEST_CASE("bounds are enforced") {
  AlgebraModel free2 = AlgebraModel::build(path_algebra(parse_quiver_spec("loops:2")).presentation, 3);
  CHECK_FALSE(free2.finite());
  Path p = Path::from_word(free2.quiver(), {0, 0, 0, 0});
  CHECK_THROWS_AS((void)free2.normal_form(p), BoundError);
  AlgebraModel ext = AlgebraModel::build(exterior(2).presentation, 3);
  CHECK(ext.normal_form(Path::from_word(ext.quiver(), {0, 1, 0, 1, 0})).empty());
}

TEST_CASE("hilbert matrices") {
  HilbertMatrix h = hilbert_matrix(AlgebraModel::build(path_algebra(parse_quiver_spec("A:2")).presentation, 3));
  CHECK(h.entries[0][0] == std::vector<long long>{1, 0, 0, 0});
  CHECK(h.entries[0][1] == std::vector<long long>{0, 1, 0, 0});
  CHECK(h.entries[1][0] == std::vector<long long>{0, 0, 0, 0});
  CHECK(h.entries[1][1] == std::vector<long long>{1, 0, 0, 0});
  HilbertMatrix e = hilbert_matrix(AlgebraModel::build(exterior(2).presentation, 4));
  CHECK(e.entries[0][0] == std::vector<long long>{1, 2, 1, 0, 0});
  CHECK(hilbert_matrix(AlgebraModel::build(trivial_extension_dual(parse_quiver_spec("star:4")).presentation, 3)).total(1) == 8);
}

TEST_CASE("property: models are associative and unital as structure constants") {
  std::vector<Presentation> ps{exterior(1).presentation, exterior(2).presentation, exterior(3).presentation,
                               loop_cubed().presentation, trivial_extension_dual(parse_quiver_spec("star:3")).presentation,
                               example1(2, 2).presentation, radical_square_zero(parse_quiver_spec("loops:2")).presentation};
  for (const auto &p : ps) {
    AlgebraModel m = AlgebraModel::build(p, 6);
    REQUIRE(m.finite());
    StructureConstantAlgebra s = as_structure_constants(m);
    CHECK(s.dim() == m.global_dim());
    CHECK_FALSE(s.associativity_failure());
    CHECK(s.unit_law_holds());
  }
}

TEST_CASE("property: the two path orders give the same dimensions") {
  std::vector<Presentation> ps{exterior(3).presentation, example2(3, 1, 2).presentation,
                               trivial_extension_dual(parse_quiver_spec("star:4")).presentation,
                               preprojective(parse_quiver_spec("star:4")).presentation};
  for (const auto &p : ps) {
    AlgebraModel a = AlgebraModel::build(p, 4, PathOrder::Lexicographic);
    AlgebraModel b = AlgebraModel::build(p, 4, PathOrder::ReverseLexicographic);
    for (int d = 0; d <= 4; ++d)
      for (VertexId u = 0; u < a.vertex_count(); ++u)
        for (VertexId v = 0; v < a.vertex_count(); ++v) CHECK(a.dim(d, u, v) == b.dim(d, u, v));
  }
}

TEST_CASE("presentations reject invalid relations") {
  Quiver q = parse_quiver_spec("loops:2");
  PathCombination bad;
  bad.add(Path::of_arrow(q, 0), 1);
  CHECK_THROWS_AS(make_presentation(q, {bad}), ValidationError);
}
