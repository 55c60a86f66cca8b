#include "qk/theorems.hpp"

#include <algorithm>
#include <memory>

#include "qk/error.hpp"

namespace qk {

DualityDimResult koszul_duality_dim_check(const AlgebraModel &m, const AlgebraModel &dual_m, const ResolutionReport &r) {
  if (is_koszul_to(r).kind != VerdictKind::KoszulToBound)
    throw ValidationError("duality check needs an algebra certified koszul-to-bound, got " + is_koszul_to(r).to_string());
  if (m.vertex_count() != dual_m.vertex_count()) throw ValidationError("algebra and dual have different vertex counts");
  DualityDimResult out;
  const ExtTable t = ext_dimensions(r);
  const int bound = std::min(r.max_homological, dual_m.max_degree());
  for (int i = 0; i <= bound; ++i) {
    out.ext_totals.push_back(t.totals[static_cast<std::size_t>(i)]);
    out.dual_dims.push_back(dual_m.dim_degree(i));
    if (out.pass && out.ext_totals.back() != out.dual_dims.back()) {
      out.pass = false;
      out.first_mismatch = i;
    }
  }
  return out;
}

CoveringTheoremReport theorem_covering_check(const Presentation &p, const FiniteGroup &g, const WeightFunction &w,
                                             int max_homological, int max_degree) {
  Covering cov = build_covering(p, g, w);
  CoveringTheoremReport rep;
  rep.group_order = g.order();
  rep.warnings = cov.warnings;
  auto base = std::make_shared<const AlgebraModel>(AlgebraModel::build(p, max_degree));
  auto lifted = std::make_shared<const AlgebraModel>(AlgebraModel::build(cov.presentation, max_degree));
  const ResolutionReport rb = minimal_resolution(base, max_homological, max_degree).report();
  const ResolutionReport rc = minimal_resolution(lifted, max_homological, max_degree).report();
  rep.base = is_koszul_to(rb);
  rep.covering = is_koszul_to(rc);
  rep.verdicts_agree = rep.base.kind == rep.covering.kind && rep.base.hom_degree == rep.covering.hom_degree;
  rep.base_totals = ext_dimensions(rb).totals;
  rep.covering_totals = ext_dimensions(rc).totals;
  rep.totals_scale = rep.base_totals.size() == rep.covering_totals.size();
  for (std::size_t i = 0; rep.totals_scale && i < rep.base_totals.size(); ++i)
    rep.totals_scale = rep.covering_totals[i] == rep.group_order * rep.base_totals[i];
  return rep;
}

RadicalSmashResult radical_smash_check(const AlgebraModel &m, const FiniteGroup &g, const WeightFunction &w) {
  StructureConstantAlgebra smash = smash_product(m, g, w);
  const std::vector<SparseVector> rad = radical(smash);
  EchelonBasis radical_span, expected_span;
  for (const auto &v : rad) radical_span.insert(v);
  const auto &basis = m.global_basis();
  for (std::size_t b = 0; b < basis.size(); ++b)
    if (basis[b].degree > 0)
      for (GroupElem x = 0; x < g.order(); ++x) expected_span.insert(SparseVector::unit(b * g.order() + x));
  RadicalSmashResult out;
  out.radical_dim = radical_span.rank();
  out.expected_dim = expected_span.rank();
  out.radical_in_expected = std::all_of(rad.begin(), rad.end(), [&](const SparseVector &v) { return expected_span.contains(v); });
  const auto rows = expected_span.rows();
  out.expected_in_radical = std::all_of(rows.begin(), rows.end(), [&](const SparseVector &v) { return radical_span.contains(v); });
  return out;
}

SmashIsoResult smash_iso_check(const Presentation &p, const FiniteGroup &g, const WeightFunction &w, int max_degree) {
  Covering cov = build_covering(p, g, w);
  AlgebraModel base = AlgebraModel::build(p, max_degree);
  AlgebraModel lifted = AlgebraModel::build(cov.presentation, max_degree);
  if (!base.finite() || !lifted.finite())
    throw BoundError("smash product comparison needs a finite-dimensional algebra within degree " +
                     std::to_string(max_degree));
  StructureConstantAlgebra smash = smash_product(base, g, w);
  SmashIsoResult out;
  out.smash_dim = smash.dim();
  out.covering_dim = lifted.global_dim();
  out.smash_associative = !smash.associativity_failure().has_value();
  out.smash_unital = smash.unit_law_holds();
  out.pass = verify_smash_covering_iso(cov, lifted, base, smash) && out.smash_associative && out.smash_unital;
  return out;
}

} // namespace qk
