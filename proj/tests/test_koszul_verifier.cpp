#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "qk/corpus.hpp"
#include "qk/error.hpp"
#include "qk/quadratic_dual.hpp"
#include "qk/resolution.hpp"
#include "qk/theorems.hpp"

using namespace qk;

namespace {

std::shared_ptr<const AlgebraModel> model(const Presentation &p, int n) {
  return std::make_shared<const AlgebraModel>(AlgebraModel::build(p, n));
}

MinimalResolution resolve(const Presentation &p, int i_max, int d_max) {
  return minimal_resolution(model(p, d_max), i_max, d_max);
}

std::vector<std::vector<mpq_class>> as_rows(const std::vector<ExtElement> &xs, std::size_t width) {
  std::vector<std::vector<mpq_class>> rows;
  for (const auto &x : xs) rows.push_back(x.coefficients.to_dense(width));
  return rows;
}

ExtElement scaled_sum(const ExtElement &a, const Scalar &s, const ExtElement &b, const Scalar &t) {
  ExtElement out = a;
  out.coefficients.scale(s);
  out.coefficients.add_scaled(b.coefficients, t);
  return out;
}

} // namespace

TEST_CASE("exterior(2) resolution is linear with i+1 generators") {
  MinimalResolution res = resolve(exterior(2).presentation, 4, 6);
  const auto &r = res.report();
  for (int i = 0; i <= 4; ++i) {
    auto gens = res.generators(0, i);
    CHECK(gens.size() == static_cast<std::size_t>(i + 1));
    for (const auto &g : gens) CHECK(g.degree == i);
  }
  CHECK(is_koszul_to(r).kind == VerdictKind::KoszulToBound);
  CHECK(ext_dimensions(r).totals == std::vector<std::size_t>{1, 2, 3, 4, 5});
  CHECK(res.is_minimal());
  CHECK(res.is_exact());
}

TEST_CASE("loop x^3 resolution") {
  MinimalResolution res = resolve(loop_cubed().presentation, 5, 7);
  std::vector<int> degrees;
  for (int i = 0; i <= 5; ++i) {
    auto gens = res.generators(0, i);
    REQUIRE(gens.size() == 1);
    degrees.push_back(gens[0].degree);
  }
  CHECK(degrees == std::vector<int>{0, 1, 3, 4, 6, 7});
  Verdict v = is_koszul_to(res.report());
  CHECK(v.kind == VerdictKind::FailsAt);
  CHECK(v.hom_degree == 2);
  CHECK(v.internal_degree == 3);
  CHECK(v.to_string() == "fails-at(2,3)");
}

TEST_CASE("A2 resolutions") {
  MinimalResolution res = resolve(path_algebra(parse_quiver_spec("A:2")).presentation, 2, 2);
  auto g1 = res.generators(0, 1);
  REQUIRE(g1.size() == 1);
  CHECK(g1[0].degree == 1);
  CHECK(g1[0].vertex == 1);
  CHECK(res.generators(0, 2).empty());
  CHECK(res.generators(1, 1).empty());
  CHECK(ext_dimensions(res.report()).totals == std::vector<std::size_t>{2, 1, 0});
  CHECK(generation_check(res, 2).pass);
}

TEST_CASE("verdicts") {
  CHECK(is_koszul_to(resolve(exterior(3).presentation, 4, 6).report()).kind == VerdictKind::KoszulToBound);
  CHECK(is_koszul_to(resolve(radical_square_zero(parse_quiver_spec("loops:2")).presentation, 4, 5).report()).kind ==
        VerdictKind::KoszulToBound);
  CHECK(is_koszul_to(resolve(exterior(2).presentation, 4, 3).report()).kind == VerdictKind::UnknownBeyondBound);
  CHECK_THROWS_AS(minimal_resolution(model(exterior(2).presentation, 3), 2, 4), BoundError);
}

TEST_CASE("row completeness") {
  auto r = resolve(exterior(3).presentation, 5, 6).report();
  CHECK(r.row_complete(4));
  CHECK_FALSE(r.row_complete(5));  // generators of P_4 sit in degree 4 and J^3 != 0
  CHECK(resolve(exterior(3).presentation, 5, 7).report().row_complete(5));
}

TEST_CASE("covering Ext totals") {
  Covering c = cyclic_covering(exterior(2).presentation, 2);
  auto r = resolve(c.presentation, 4, 6).report();
  CHECK(ext_dimensions(r).totals == std::vector<std::size_t>{2, 4, 6, 8, 10});
}

TEST_CASE("Yoneda products") {
  SUBCASE("K[x]/x^2") {
    MinimalResolution res = resolve(exterior(1).presentation, 3, 4);
    ExtElement u = res.ext_basis_element(0, 1, 1, 0, 0);
    ExtElement uu = res.yoneda_product(u, u);
    CHECK(uu.hom_degree == 2);
    CHECK(uu.internal_degree == 2);
    CHECK_FALSE(uu.coefficients.empty());
    CHECK_FALSE(res.yoneda_product(u, uu).coefficients.empty());
  }
  SUBCASE("K[x]/x^3") {
    MinimalResolution res = resolve(loop_cubed().presentation, 3, 5);
    ExtElement u = res.ext_basis_element(0, 1, 1, 0, 0);
    CHECK(res.yoneda_product(u, u).coefficients.empty());
    CHECK(res.ext_generators(0, 2, 3, 0).size() == 1);
    CHECK(generation_check(res, 3).failing_i == 1);
  }
  SUBCASE("Ext^0 units") {
    MinimalResolution res = resolve(exterior(2).presentation, 3, 4);
    ExtElement e = res.ext_basis_element(0, 0, 0, 0, 0);
    for (std::size_t k = 0; k < 3; ++k) {
      ExtElement xi = res.ext_basis_element(0, 2, 2, 0, k);
      CHECK(res.yoneda_product(e, xi) == xi);
      CHECK(res.yoneda_product(xi, e) == xi);
    }
  }
  SUBCASE("bounds") {
    MinimalResolution res = resolve(exterior(2).presentation, 2, 4);
    ExtElement u = res.ext_basis_element(0, 2, 2, 0, 0);
    CHECK_THROWS_AS((void)res.yoneda_product(u, u), BoundError);
  }
}

TEST_CASE("property: Yoneda products are bilinear, associative and degree-additive") {
  std::vector<Presentation> ps{exterior(2).presentation, example1(2, 2).presentation,
                               trivial_extension_dual(parse_quiver_spec("star:2")).presentation,
                               loop_cubed().presentation};
  std::mt19937 rng(41);
  std::uniform_int_distribution<int> small(-3, 3);
  for (const auto &p : ps) {
    MinimalResolution res = resolve(p, 3, 5);
    const std::size_t r = res.model().vertex_count();
    std::vector<ExtElement> ones;
    for (VertexId u = 0; u < r; ++u)
      for (VertexId v = 0; v < r; ++v)
        for (int d = 0; d <= 3; ++d)
          for (std::size_t k = 0; k < res.ext_generators(u, 1, d, v).size(); ++k) ones.push_back(res.ext_basis_element(u, 1, d, v, k));
    for (const auto &a : ones)
      for (const auto &b : ones) {
        if (a.source != b.target) continue;
        ExtElement ab = res.yoneda_product(a, b);
        CHECK(ab.hom_degree == 2);
        CHECK(ab.internal_degree == a.internal_degree + b.internal_degree);
        for (const auto &c : ones) {
          if (b.source != c.target) continue;
          CHECK(res.yoneda_product(ab, c) == res.yoneda_product(a, res.yoneda_product(b, c)));
        }
        for (const auto &b2 : ones) {
          if (b2.source != b.source || b2.target != b.target || b2.internal_degree != b.internal_degree) continue;
          const Scalar s = small(rng), t = small(rng);
          ExtElement lhs = res.yoneda_product(a, scaled_sum(b, s, b2, t));
          ExtElement rhs = scaled_sum(ab, s, res.yoneda_product(a, b2), t);
          CHECK(lhs.coefficients == rhs.coefficients);
        }
      }
  }
}

TEST_CASE("right_products agrees with single products") {
  MinimalResolution res = resolve(exterior(2).presentation, 3, 4);
  ExtElement z = res.ext_basis_element(0, 1, 1, 0, 1);
  auto rows = res.right_products(z, 2);
  REQUIRE(rows.size() == 2);
  for (int i = 1; i <= 2; ++i) {
    std::size_t k = 0;
    for (std::size_t b = 0; b < res.ext_generators(0, i, i, 0).size(); ++b, ++k)
      CHECK(rows[static_cast<std::size_t>(i - 1)][k] == res.yoneda_product(res.ext_basis_element(0, i, i, 0, b), z));
  }
}

TEST_CASE("generation checks") {
  CHECK(generation_check(resolve(exterior(2).presentation, 4, 6), 4).pass);
  GenerationVerdict g = generation_check(resolve(loop_cubed().presentation, 4, 6), 4);
  CHECK_FALSE(g.pass);
  CHECK(g.failing_i == 1);
  CHECK(g.achieved == 0);
  CHECK(g.required == 1);
}

TEST_CASE("Hilbert-Euler identity") {
  SUBCASE("A2") {
    auto m = model(path_algebra(parse_quiver_spec("A:2")).presentation, 2);
    auto r = minimal_resolution(m, 2, 2).report();
    // B(t) = I - t E_12
    CHECK(r.beta(0, 0, 0, 0) == 1);
    CHECK(r.beta(0, 1, 1, 1) == 1);
    CHECK(r.beta(1, 0, 0, 1) == 1);
    CHECK(hilbert_euler_check(*m, r, 2).pass);
  }
  SUBCASE("exterior(2)") {
    auto m = model(exterior(2).presentation, 4);
    auto r = minimal_resolution(m, 4, 4).report();
    std::vector<long long> b(5);
    for (int i = 0; i <= 4; ++i) b[static_cast<std::size_t>(i)] = (i % 2 ? -1 : 1) * static_cast<long long>(r.beta(0, i, i, 0));
    CHECK(b == std::vector<long long>{1, -2, 3, -4, 5});
    CHECK(oracle::series_mul(b, {1, 2, 1}, 5) == std::vector<long long>{1, 0, 0, 0, 0});
    CHECK(hilbert_euler_check(*m, r, 4).pass);
  }
  SUBCASE("loop x^3") {
    auto m = model(loop_cubed().presentation, 5);
    auto r = minimal_resolution(m, 5, 5).report();
    std::vector<long long> b(6, 0);
    for (int i = 0; i <= 5; ++i)
      for (int d = 0; d <= 5; ++d) b[static_cast<std::size_t>(d)] += (i % 2 ? -1 : 1) * static_cast<long long>(r.beta(0, i, d, 0));
    CHECK(b == std::vector<long long>{1, -1, 0, 1, -1, 0});
    CHECK(oracle::series_mul(b, {1, 1, 1}, 6) == std::vector<long long>{1, 0, 0, 0, 0, 0});
    CHECK(hilbert_euler_check(*m, r, 5).pass);
    ResolutionReport broken = r;
    broken.betti[0][2][3][0] = 0;
    HilbertEulerResult h = hilbert_euler_check(*m, broken, 5);
    CHECK_FALSE(h.pass);
    CHECK(h.degree == 3);
  }
  CHECK_THROWS_AS(hilbert_euler_check(*model(exterior(2).presentation, 4), resolve(exterior(2).presentation, 2, 4).report(), 3),
                  BoundError);
}

TEST_CASE("Koszul duality dimensions") {
  auto check = [](const Presentation &p, int i_max, int d_max) {
    auto r = resolve(p, i_max, d_max).report();
    AlgebraModel dual = AlgebraModel::build(dual_presentation(p), i_max);
    return koszul_duality_dim_check(AlgebraModel::build(p, d_max), dual, r);
  };
  DualityDimResult e = check(exterior(2).presentation, 4, 6);
  CHECK(e.pass);
  CHECK(e.ext_totals == std::vector<std::size_t>{1, 2, 3, 4, 5});
  DualityDimResult a = check(path_algebra(parse_quiver_spec("A:2")).presentation, 2, 2);
  CHECK(a.pass);
  CHECK(a.dual_dims == std::vector<std::size_t>{2, 1, 0});
  Presentation d4 = trivial_extension_dual(parse_quiver_spec("star:4")).presentation;
  auto r = resolve(d4, 4, 6).report();
  AlgebraModel pre = AlgebraModel::build(preprojective(parse_quiver_spec("star:4")).presentation, 4);
  CHECK(koszul_duality_dim_check(AlgebraModel::build(d4, 6), pre, r).pass);
  auto lc = resolve(loop_cubed().presentation, 3, 5).report();
  CHECK_THROWS_AS(koszul_duality_dim_check(AlgebraModel::build(loop_cubed().presentation, 5),
                                           AlgebraModel::build(loop_cubed().presentation, 3), lc),
                  ValidationError);
}

TEST_CASE("covering theorem checks") {
  Presentation e2 = exterior(2).presentation;
  CoveringTheoremReport c = theorem_covering_check(e2, cyclic_group(2), constant_weights(e2.quiver, 1), 4, 6);
  CHECK(c.pass());
  CHECK(c.covering.kind == VerdictKind::KoszulToBound);
  CHECK(c.covering_totals == std::vector<std::size_t>{2, 4, 6, 8, 10});
  Presentation e3 = exterior(3).presentation;
  c = theorem_covering_check(e3, cyclic_group(3), constant_weights(e3.quiver, 1), 4, 6);
  CHECK(c.pass());
  for (std::size_t i = 0; i < c.base_totals.size(); ++i) CHECK(c.covering_totals[i] == 3 * c.base_totals[i]);
  Presentation lc = loop_cubed().presentation;
  c = theorem_covering_check(lc, cyclic_group(2), constant_weights(lc.quiver, 1), 4, 6);
  CHECK(c.verdicts_agree);
  CHECK(c.base.kind == VerdictKind::FailsAt);
  CHECK(c.covering.hom_degree == 2);
}

TEST_CASE("property: random quadratic algebras satisfy the resolution invariants") {
  std::mt19937 rng(57);
  for (int trial = 0; trial < 12; ++trial) {
    Quiver q = trial % 2 ? parse_quiver_spec("loops:2") : double_quiver(parse_quiver_spec("A:2"));
    auto len2 = enumerate_paths(q, 2);
    std::uniform_int_distribution<std::size_t> pick(0, len2.size() - 1);
    std::uniform_int_distribution<int> coef(-2, 2), nrel(1, 3);
    std::vector<PathCombination> rels;
    for (int k = nrel(rng); k > 0; --k) {
      Path base = len2[pick(rng)];
      PathCombination r;
      r.add(base, 1);
      for (const auto &p : len2)
        if (p.source() == base.source() && p.target() == base.target() && !(p == base) && coef(rng) > 0) r.add(p, coef(rng));
      if (!r.empty()) rels.push_back(r);
    }
    Presentation p = make_presentation(q, rels);
    MinimalResolution res = resolve(p, 3, 4);
    const auto &r = res.report();
    CHECK(res.is_minimal());
    CHECK(res.is_exact());
    for (VertexId u = 0; u < r.vertices; ++u) {
      for (VertexId v = 0; v < r.vertices; ++v) {
        CHECK(r.beta(u, 0, 0, v) == (u == v ? 1u : 0u));
        for (int i = 0; i <= 3; ++i)
          for (int d = 0; d < i; ++d) CHECK(r.beta(u, i, d, v) == 0);
      }
    }
    CHECK(hilbert_euler_check(res.model(), r, 3).pass);
    if (is_koszul_to(r).kind == VerdictKind::KoszulToBound) CHECK(generation_check(res, 3).pass);
  }
}
