#pragma once

#include <vector>

#include "qk/exact_linear.hpp"
#include "qk/graded_algebra.hpp"

namespace qk {

/// Relation subspace R(u, v) inside the span of length-2 paths u -> v.
struct QuadraticSlice {
  VertexId source;
  VertexId target;
  std::vector<Path> paths;            // lexicographic, the column order
  std::vector<SparseVector> relation_rows;  // reduced echelon basis of R(u, v)
};

struct QuadraticData {
  Presentation presentation;
  std::vector<QuadraticSlice> slices;  // u-major over all pairs
};

bool quadratic_check(const Presentation &p);

/// Throws ValidationError when some relation is not of length 2.
QuadraticData quadratic_data(const Presentation &p);

/// Presentation on the opposite quiver whose relations span, for each pair, the
/// orthogonal complement of R(u, v) under the pairing of b·a with a^op·b^op.
/// Relations are emitted as reduced echelon rows, pair by pair.
Presentation dual_presentation(const Presentation &p);

/// True iff dual(dual(p)) has the same quiver and the same relation spaces.
bool double_dual_check(const Presentation &p);

} // namespace qk
