#pragma once

#include <string>
#include <vector>

#include "qk/covering.hpp"
#include "qk/graded_algebra.hpp"
#include "qk/group.hpp"
#include "qk/resolution.hpp"
#include "qk/structure_algebra.hpp"

namespace qk {

struct DualityDimResult {
  bool pass = true;
  int first_mismatch = -1;
  std::vector<std::size_t> ext_totals;
  std::vector<std::size_t> dual_dims;
};

/// Compares total dim Ext^i(A/J, A/J) with dim (A^!)_i for i up to the smaller
/// of the two bounds. Throws ValidationError unless r certifies koszul-to-bound.
DualityDimResult koszul_duality_dim_check(const AlgebraModel &m, const AlgebraModel &dual_m, const ResolutionReport &r);

struct CoveringTheoremReport {
  std::size_t group_order = 0;
  Verdict base;
  Verdict covering;
  bool verdicts_agree = false;
  std::vector<std::size_t> base_totals;
  std::vector<std::size_t> covering_totals;
  bool totals_scale = false;  // covering_totals[i] == |G| * base_totals[i] for every i
  std::vector<std::string> warnings;
  [[nodiscard]] bool pass() const { return verdicts_agree && totals_scale; }
};

/// Builds the covering of p for (g, w), resolves base and covering within the
/// same bounds and compares. Verdicts agree when they have the same kind and,
/// for failures, the same homological step.
CoveringTheoremReport theorem_covering_check(const Presentation &p, const FiniteGroup &g, const WeightFunction &w,
                                             int max_homological, int max_degree);

struct RadicalSmashResult {
  std::size_t radical_dim = 0;
  std::size_t expected_dim = 0;  // dim J * |G|
  bool radical_in_expected = false;
  bool expected_in_radical = false;
  [[nodiscard]] bool pass() const {
    return radical_dim == expected_dim && radical_in_expected && expected_in_radical;
  }
};

/// Radical of A # G* computed from the trace form, compared with J # G*, the
/// span of b # p_g over positive-degree basis elements b. Requires a finite model.
RadicalSmashResult radical_smash_check(const AlgebraModel &m, const FiniteGroup &g, const WeightFunction &w);

struct SmashIsoResult {
  bool pass = false;
  std::size_t smash_dim = 0;
  std::size_t covering_dim = 0;
  bool smash_associative = false;
  bool smash_unital = false;
};

/// Builds the covering, both models within max_degree, the smash product, and
/// runs verify_smash_covering_iso plus the associativity and unit sweeps.
SmashIsoResult smash_iso_check(const Presentation &p, const FiniteGroup &g, const WeightFunction &w, int max_degree);

} // namespace qk
