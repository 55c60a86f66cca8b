#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qk/graded_algebra.hpp"

namespace qk {

enum class VerdictKind { KoszulToBound, FailsAt, UnknownBeyondBound };

struct Verdict {
  VerdictKind kind = VerdictKind::UnknownBeyondBound;
  int hom_degree = -1;       // witness for FailsAt
  int internal_degree = -1;  // witness for FailsAt
  [[nodiscard]] std::string to_string() const;
  friend bool operator==(const Verdict &, const Verdict &) = default;
};

/// Graded Betti numbers of the minimal resolution of every simple S_u.
struct ResolutionReport {
  std::size_t vertices = 0;
  int max_homological = 0;
  int max_degree = 0;
  /// betti[u][i][d][v]: degree-d generators of type P(v) in P_i resolving S_u.
  std::vector<std::vector<std::vector<std::vector<std::size_t>>>> betti;
  /// complete[u][i]: row i of S_u has no generators beyond max_degree.
  std::vector<std::vector<bool>> complete;
  /// linear[i]: no generator of P_i in a degree other than i, within the window.
  std::vector<bool> linear;
  /// Lexicographically first (i, d) with d != i and a nonzero Betti number.
  std::optional<std::pair<int, int>> first_failure;

  [[nodiscard]] std::size_t beta(VertexId u, int i, int d, VertexId v) const {
    return betti[u][static_cast<std::size_t>(i)][static_cast<std::size_t>(d)][v];
  }
  [[nodiscard]] bool row_complete(int i) const;
};

struct ExtTable {
  /// dims[i][u][v] = dim Ext^i(S_u, S_v), summed over degrees <= max_degree.
  std::vector<std::vector<std::vector<std::size_t>>> dims;
  std::vector<std::size_t> totals;
  /// Whether totals[i] is known to be exact (no generators beyond the window).
  std::vector<bool> complete;
};

/// Element of Ext^i(S_source, S_target) of internal degree d: a functional on
/// the degree-d generators of type P(target) in P_i of the resolution of
/// S_source, with coefficients in generator order.
struct ExtElement {
  VertexId source = 0;
  VertexId target = 0;
  int hom_degree = 0;
  int internal_degree = 0;
  SparseVector coefficients;
  friend bool operator==(const ExtElement &, const ExtElement &) = default;
};

struct GeneratorInfo {
  int degree;
  VertexId vertex;
};

/// Minimal graded projective resolutions of all simples, with the chain data
/// kept for lifting.
class MinimalResolution {
public:
  MinimalResolution(std::shared_ptr<const AlgebraModel> model, int max_homological, int max_degree);
  ~MinimalResolution();
  MinimalResolution(MinimalResolution &&) noexcept;
  MinimalResolution &operator=(MinimalResolution &&) noexcept;

  [[nodiscard]] const ResolutionReport &report() const { return report_; }
  [[nodiscard]] const AlgebraModel &model() const { return *model_; }
  [[nodiscard]] int max_homological() const { return report_.max_homological; }
  [[nodiscard]] int max_degree() const { return report_.max_degree; }

  [[nodiscard]] std::vector<GeneratorInfo> generators(VertexId simple, int i) const;
  /// Indices (into generators(simple, i)) of the degree-d generators of type P(target).
  [[nodiscard]] std::vector<std::size_t> ext_generators(VertexId simple, int i, int d, VertexId target) const;
  [[nodiscard]] ExtElement ext_basis_element(VertexId source, int i, int d, VertexId target, std::size_t k) const;

  /// Every differential maps generators into J·P_{i-1}.
  [[nodiscard]] bool is_minimal() const;
  /// rank d_{i+1} = dim ker d_i in every computed (degree, vertex) slice.
  [[nodiscard]] bool is_exact() const;

  /// Yoneda composite xi·zeta ("xi after zeta"). Lifts zeta to a chain map and
  /// composes with xi. Zero unless xi.source == zeta.target.
  [[nodiscard]] ExtElement yoneda_product(const ExtElement &xi, const ExtElement &zeta) const;
  /// All products xi·zeta with xi running over the Ext^i basis of
  /// S_{zeta.target}, for i = 1..max_i, from a single lift of zeta.
  /// Result[i - 1] lists them ordered by (target, degree, index).
  [[nodiscard]] std::vector<std::vector<ExtElement>> right_products(const ExtElement &zeta, int max_i) const;

  struct Impl;

private:
  std::shared_ptr<const AlgebraModel> model_;
  std::unique_ptr<Impl> impl_;
  ResolutionReport report_;
};

MinimalResolution minimal_resolution(std::shared_ptr<const AlgebraModel> model, int max_homological, int max_degree);

Verdict is_koszul_to(const ResolutionReport &r);
ExtTable ext_dimensions(const ResolutionReport &r);

struct GenerationVerdict {
  bool pass = true;
  int failing_i = -1;  // Ext^i · Ext^1 falls short of Ext^{i+1}
  std::size_t achieved = 0;
  std::size_t required = 0;
  [[nodiscard]] std::string to_string() const;
};

/// Checks span(Ext^i · Ext^1) = Ext^{i+1} by rank for 1 <= i < up_to, within
/// the degree window.
GenerationVerdict generation_check(const MinimalResolution &res, int up_to);

struct HilbertEulerResult {
  bool pass = true;
  VertexId row = 0;
  VertexId col = 0;
  int degree = -1;
  long long value = 0;  // offending coefficient
};

/// (sum_i (-1)^i B_i(t)) · H(t) = I mod t^{cutoff+1}.
HilbertEulerResult hilbert_euler_check(const AlgebraModel &m, const ResolutionReport &r, int cutoff);

} // namespace qk
