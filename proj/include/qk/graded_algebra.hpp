#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "qk/exact_linear.hpp"
#include "qk/quiver.hpp"

namespace qk {

/// A quiver together with homogeneous relations.
struct Presentation {
  Quiver quiver;
  std::vector<PathCombination> relations;
  friend bool operator==(const Presentation &, const Presentation &) = default;
};

/// Throws ValidationError naming the first relation that fails validate_relation.
Presentation make_presentation(Quiver quiver, std::vector<PathCombination> relations);

enum class PathOrder { Lexicographic, ReverseLexicographic };

/// Entry (u, v) holds the coefficients of t^0 .. t^N of sum_d dim A_d(u -> v) t^d.
struct HilbertMatrix {
  std::size_t vertices = 0;
  int max_degree = 0;
  std::vector<std::vector<std::vector<long long>>> entries;
  [[nodiscard]] long long coefficient(VertexId u, VertexId v, int d) const { return entries[u][v][d]; }
  /// Sum over all (u, v) of the t^d coefficient.
  [[nodiscard]] long long total(int d) const;
};

/// Degree-wise model of KQ/<relations> truncated at max_degree.
///
/// For each degree d and vertex pair (u, v) the paths u -> v of length d index
/// the columns of the ideal slice I_d(u, v). Its reduced echelon basis fixes the
/// normal-form basis of A_d(u, v) as the non-pivot paths, and every path has a
/// precomputed expression in that basis. Once some degree vanishes every higher
/// degree does too and nothing further is stored.
class AlgebraModel {
public:
  struct BasisRef {
    int degree;
    VertexId source;
    VertexId target;
    std::size_t index;
  };

  static AlgebraModel build(Presentation presentation, int max_degree,
                            PathOrder order = PathOrder::Lexicographic);

  [[nodiscard]] const Presentation &presentation() const { return presentation_; }
  [[nodiscard]] const Quiver &quiver() const { return presentation_.quiver; }
  [[nodiscard]] std::size_t vertex_count() const { return presentation_.quiver.vertex_count(); }
  [[nodiscard]] int max_degree() const { return max_degree_; }
  /// Largest degree with A_d != 0, when A is known to vanish beyond it.
  [[nodiscard]] std::optional<int> top_degree() const { return top_degree_; }
  [[nodiscard]] bool finite() const { return top_degree_.has_value(); }

  [[nodiscard]] std::size_t dim(int d, VertexId u, VertexId v) const;
  [[nodiscard]] std::size_t dim_degree(int d) const;
  [[nodiscard]] const std::vector<Path> &basis(int d, VertexId u, VertexId v) const;

  /// Normal form of a path, as coordinates over basis(length, source, target).
  /// Throws BoundError when the length exceeds the bound of an algebra not
  /// known to be finite-dimensional.
  [[nodiscard]] SparseVector normal_form(const Path &p) const;
  /// Normal form of p after q; empty when the paths do not compose.
  [[nodiscard]] SparseVector multiply_paths(const Path &p, const Path &q) const;

  /// Global basis: all stored basis paths ordered by degree, source, target, index.
  [[nodiscard]] const std::vector<BasisRef> &global_basis() const { return global_; }
  [[nodiscard]] std::size_t global_dim() const { return global_.size(); }
  [[nodiscard]] std::size_t global_index(int d, VertexId u, VertexId v, std::size_t k) const;
  [[nodiscard]] const Path &global_path(std::size_t g) const;
  [[nodiscard]] SparseVector to_global(int d, VertexId u, VertexId v, const SparseVector &local) const;

private:
  struct Slice {
    std::vector<Path> paths;
    std::map<Path, std::size_t> path_index;
    std::vector<Path> basis;
    std::vector<SparseVector> normal_forms;  // per path, over basis
    std::vector<SparseVector> ideal_rows;    // over path indices
    std::size_t global_offset = 0;
  };

  [[nodiscard]] const Slice *slice(int d, VertexId u, VertexId v) const;
  [[nodiscard]] bool vanishes(int d) const;

  Presentation presentation_;
  int max_degree_ = 0;
  std::optional<int> top_degree_;
  std::vector<std::vector<Slice>> slices_;  // [degree][u * r + v]
  std::vector<BasisRef> global_;
};

AlgebraModel compute_graded_basis(const Presentation &p, int max_degree,
                                  PathOrder order = PathOrder::Lexicographic);

/// Residue class of x over the global basis. Throws BoundError for degrees the
/// model cannot resolve.
SparseVector normal_form(const AlgebraModel &m, const PathCombination &x);

/// x·y over the global basis (y applied first).
SparseVector multiply(const AlgebraModel &m, const SparseVector &x, const SparseVector &y);

HilbertMatrix hilbert_matrix(const AlgebraModel &m);

} // namespace qk
