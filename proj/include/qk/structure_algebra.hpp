#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "qk/covering.hpp"
#include "qk/graded_algebra.hpp"

namespace qk {

/// Finite-dimensional algebra on a labelled basis with explicit products.
class StructureConstantAlgebra {
public:
  StructureConstantAlgebra(std::vector<std::string> labels, SparseVector unit, std::vector<SparseVector> products);

  [[nodiscard]] std::size_t dim() const { return labels_.size(); }
  [[nodiscard]] const std::vector<std::string> &labels() const { return labels_; }
  [[nodiscard]] const SparseVector &unit() const { return unit_; }
  /// Product of basis elements i and j.
  [[nodiscard]] const SparseVector &product(std::size_t i, std::size_t j) const { return products_[i * dim() + j]; }
  [[nodiscard]] SparseVector multiply(const SparseVector &x, const SparseVector &y) const;

  /// First basis triple violating (xy)z = x(yz), if any.
  [[nodiscard]] std::optional<std::tuple<std::size_t, std::size_t, std::size_t>> associativity_failure() const;
  [[nodiscard]] bool unit_law_holds() const;

private:
  std::vector<std::string> labels_;
  SparseVector unit_;
  std::vector<SparseVector> products_;
};

/// The model itself on its global basis. Requires a finite-dimensional model.
StructureConstantAlgebra as_structure_constants(const AlgebraModel &m);

/// A # G*: basis element b # p_g has index b·|G| + g for b in the model's global basis.
/// (b # p_g)(b' # p_h) = (b b') # p_h when weight(b') = g h^-1, else 0.
StructureConstantAlgebra smash_product(const AlgebraModel &m, const FiniteGroup &g, const WeightFunction &w);

/// A * G: basis element b·g has index b·|G| + g, and (b g)(b' h) = b g(b') (gh).
/// Throws ValidationError when the action does not preserve the relation ideal.
StructureConstantAlgebra skew_group_algebra(const AlgebraModel &m, const FiniteGroup &g, const GroupAction &action);

/// Jacobson radical via the trace form: x is radical iff tr(L_x L_y) = 0 for
/// every y (valid in characteristic 0). Returns a reduced echelon basis.
std::vector<SparseVector> radical(const StructureConstantAlgebra &s);

/// Quotient by a two-sided ideal given by a spanning set; the basis is the
/// non-pivot coordinates of the ideal's echelon form.
StructureConstantAlgebra quotient_algebra(const StructureConstantAlgebra &s, const std::vector<SparseVector> &ideal);

/// Smallest k with (span)^k = 0, or nullopt when the powers stabilise at a
/// nonzero subspace.
std::optional<std::size_t> nilpotency_index(const StructureConstantAlgebra &s, const std::vector<SparseVector> &span);

/// Compares the covering algebra with a smash product through the linear map
/// sending a lifted path starting on sheet g to (its projection) # p_g. True iff
/// the map is bijective, sends the unit to the unit and preserves every product
/// of basis pairs.
bool verify_smash_covering_iso(const Covering &cov, const AlgebraModel &cov_model, const AlgebraModel &base_model,
                               const StructureConstantAlgebra &smash);

} // namespace qk
