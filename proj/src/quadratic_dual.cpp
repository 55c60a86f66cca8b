#include "qk/quadratic_dual.hpp"

#include <algorithm>

#include "qk/error.hpp"

namespace qk {

bool quadratic_check(const Presentation &p) {
  return std::all_of(p.relations.begin(), p.relations.end(),
                     [](const PathCombination &r) { return r.terms().begin()->first.length() == 2; });
}

QuadraticData quadratic_data(const Presentation &p) {
  if (!quadratic_check(p)) throw ValidationError("presentation is not quadratic");
  const Quiver &q = p.quiver;
  const std::size_t r = q.vertex_count();
  QuadraticData out{p, {}};
  out.slices.resize(r * r);
  for (VertexId u = 0; u < r; ++u)
    for (VertexId v = 0; v < r; ++v) out.slices[u * r + v] = QuadraticSlice{u, v, {}, {}};
  for (auto &path : enumerate_paths(q, 2)) out.slices[path.source() * r + path.target()].paths.push_back(path);

  std::vector<EchelonBasis> spans(r * r);
  for (const auto &rel : p.relations) {
    const Path &first = rel.terms().begin()->first;
    QuadraticSlice &s = out.slices[first.source() * r + first.target()];
    std::map<std::size_t, Scalar> row;
    for (const auto &[path, c] : rel.terms()) {
      auto it = std::lower_bound(s.paths.begin(), s.paths.end(), path);
      row.emplace(static_cast<std::size_t>(it - s.paths.begin()), c);
    }
    spans[first.source() * r + first.target()].insert(SparseVector::from_map(row));
  }
  for (std::size_t k = 0; k < spans.size(); ++k) out.slices[k].relation_rows = spans[k].rows();
  return out;
}

Presentation dual_presentation(const Presentation &p) {
  QuadraticData data = quadratic_data(p);
  const Quiver &q = p.quiver;
  Quiver op = opposite_quiver(q);
  const std::size_t r = q.vertex_count();

  // Length-2 paths of the opposite quiver, bucketed by pair, in lex order.
  std::vector<std::vector<Path>> op_paths(r * r);
  for (auto &path : enumerate_paths(op, 2)) op_paths[path.source() * r + path.target()].push_back(path);

  // Relations grouped by the opposite pair (v, u), emitted in that pair order.
  std::vector<std::vector<PathCombination>> by_pair(r * r);
  for (const auto &slice : data.slices) {
    if (slice.paths.empty()) continue;
    Matrix rel = Matrix::from_rows(slice.paths.size(), slice.relation_rows);
    const std::size_t pair = slice.target * r + slice.source;
    const auto &targets = op_paths[pair];
    // Column index in the opposite pair for the reversal of each path b·a.
    std::vector<std::size_t> col_of(slice.paths.size());
    for (std::size_t k = 0; k < slice.paths.size(); ++k) {
      const auto &w = slice.paths[k].arrows();
      Path rev = Path::from_word(op, {w[1], w[0]});
      col_of[k] = static_cast<std::size_t>(std::lower_bound(targets.begin(), targets.end(), rev) - targets.begin());
    }
    EchelonBasis complement;
    for (const auto &v : kernel_basis(rel)) {
      std::map<std::size_t, Scalar> row;
      for (const auto &[k, c] : v) row.emplace(col_of[k], c);
      complement.insert(SparseVector::from_map(row));
    }
    for (const auto &row : complement.rows()) {
      PathCombination comb;
      for (const auto &[col, c] : row) comb.add(targets[col], c);
      by_pair[pair].push_back(std::move(comb));
    }
  }
  std::vector<PathCombination> relations;
  for (auto &group : by_pair)
    for (auto &rel : group) relations.push_back(std::move(rel));
  return make_presentation(std::move(op), std::move(relations));
}

bool double_dual_check(const Presentation &p) {
  Presentation dd = dual_presentation(dual_presentation(p));
  if (!(dd.quiver == p.quiver)) return false;
  QuadraticData a = quadratic_data(p);
  QuadraticData b = quadratic_data(dd);
  for (std::size_t k = 0; k < a.slices.size(); ++k)
    if (a.slices[k].relation_rows != b.slices[k].relation_rows) return false;
  return true;
}

} // namespace qk
