#include "qk/graded_algebra.hpp"

#include <algorithm>

#include "qk/error.hpp"

namespace qk {

Presentation make_presentation(Quiver quiver, std::vector<PathCombination> relations) {
  for (std::size_t i = 0; i < relations.size(); ++i)
    if (auto diag = validate_relation(quiver, relations[i]))
      throw ValidationError("relation " + std::to_string(i) + ": " + *diag);
  return Presentation{std::move(quiver), std::move(relations)};
}

long long HilbertMatrix::total(int d) const {
  long long s = 0;
  for (const auto &row : entries)
    for (const auto &e : row) s += e[static_cast<std::size_t>(d)];
  return s;
}

// ---------------------------------------------------------------------------

AlgebraModel AlgebraModel::build(Presentation presentation, int max_degree, PathOrder order) {
  if (max_degree < 0) throw BoundError("max degree must be nonnegative");
  AlgebraModel m;
  m.presentation_ = std::move(presentation);
  m.max_degree_ = max_degree;
  const Quiver &q = m.presentation_.quiver;
  const std::size_t r = q.vertex_count();

  // Relations bucketed by (degree, pair).
  std::map<std::pair<std::size_t, std::size_t>, std::vector<const PathCombination *>> rel_at;
  for (const auto &rel : m.presentation_.relations) {
    const Path &p = rel.terms().begin()->first;
    rel_at[{p.length(), p.source() * r + p.target()}].push_back(&rel);
  }

  for (int d = 0; d <= max_degree; ++d) {
    if (d >= 1 && m.dim_degree(d - 1) == 0) {
      m.top_degree_ = d - 2;
      break;
    }
    std::vector<Slice> level(r * r);
    for (auto &p : enumerate_paths(q, static_cast<std::size_t>(d))) {
      Slice &s = level[p.source() * r + p.target()];
      s.path_index.emplace(p, s.paths.size());
      s.paths.push_back(std::move(p));
    }

    for (VertexId u = 0; u < r; ++u) {
      for (VertexId v = 0; v < r; ++v) {
        Slice &s = level[u * r + v];
        const std::size_t n = s.paths.size();
        auto column = [&](std::size_t path_idx) {
          return order == PathOrder::Lexicographic ? path_idx : n - 1 - path_idx;
        };
        auto path_of_column = column;  // the map is an involution

        EchelonBasis ideal;
        auto insert_combination = [&](const std::map<std::size_t, Scalar> &by_path) {
          std::map<std::size_t, Scalar> by_col;
          for (const auto &[pi, c] : by_path) by_col.emplace(column(pi), c);
          ideal.insert(SparseVector::from_map(by_col));
        };

        if (auto it = rel_at.find({static_cast<std::size_t>(d), u * r + v}); it != rel_at.end()) {
          for (const auto *rel : it->second) {
            std::map<std::size_t, Scalar> by_path;
            for (const auto &[p, c] : rel->terms()) by_path.emplace(s.path_index.at(p), c);
            insert_combination(by_path);
          }
        }
        if (d >= 2) {
          // I_d = arrows·I_{d-1} + I_{d-1}·arrows + relations of degree d.
          const auto &prev = m.slices_[static_cast<std::size_t>(d - 1)];
          for (VertexId w = 0; w < r; ++w) {
            // arrow a: w -> v applied after a row of I_{d-1}(u, w)
            const Slice &left = prev[u * r + w];
            for (ArrowId a : q.arrows_from(w)) {
              if (q.arrow(a).target != v) continue;
              Path pa = Path::of_arrow(q, a);
              for (const auto &row : left.ideal_rows) {
                std::map<std::size_t, Scalar> by_path;
                for (const auto &[pi, c] : row) by_path.emplace(s.path_index.at(compose(pa, left.paths[pi])), c);
                insert_combination(by_path);
              }
            }
            // arrow a: u -> w applied before a row of I_{d-1}(w, v)
            const Slice &right = prev[w * r + v];
            for (ArrowId a : q.arrows_from(u)) {
              if (q.arrow(a).target != w) continue;
              Path pa = Path::of_arrow(q, a);
              for (const auto &row : right.ideal_rows) {
                std::map<std::size_t, Scalar> by_path;
                for (const auto &[pi, c] : row) by_path.emplace(s.path_index.at(compose(right.paths[pi], pa)), c);
                insert_combination(by_path);
              }
            }
          }
        }

        // Normal-form basis: non-pivot columns in column order.
        std::vector<bool> pivot(n, false);
        for (auto c : ideal.pivots()) pivot[c] = true;
        std::vector<std::size_t> basis_of_col(n, 0);
        for (std::size_t c = 0; c < n; ++c)
          if (!pivot[c]) {
            basis_of_col[c] = s.basis.size();
            s.basis.push_back(s.paths[path_of_column(c)]);
          }
        s.normal_forms.resize(n);
        for (std::size_t pi = 0; pi < n; ++pi) {
          std::size_t c = column(pi);
          if (!pivot[c]) {
            s.normal_forms[pi] = SparseVector::unit(basis_of_col[c]);
            continue;
          }
          std::map<std::size_t, Scalar> nf;
          for (const auto &[col, coef] : *ideal.row_for_pivot(c))
            if (col != c) nf.emplace(basis_of_col[col], -coef);
          s.normal_forms[pi] = SparseVector::from_map(nf);
        }
        for (const auto &row : ideal.rows()) {
          std::map<std::size_t, Scalar> by_path;
          for (const auto &[col, coef] : row) by_path.emplace(path_of_column(col), coef);
          s.ideal_rows.push_back(SparseVector::from_map(by_path));
        }
      }
    }
    m.slices_.push_back(std::move(level));
  }
  if (!m.top_degree_ && m.dim_degree(max_degree) == 0) {
    // Vanishing detected exactly at the bound.
    int top = max_degree - 1;
    m.top_degree_ = top;
  }

  for (int d = 0; d < static_cast<int>(m.slices_.size()); ++d)
    for (VertexId u = 0; u < r; ++u)
      for (VertexId v = 0; v < r; ++v) {
        Slice &s = m.slices_[static_cast<std::size_t>(d)][u * r + v];
        s.global_offset = m.global_.size();
        for (std::size_t k = 0; k < s.basis.size(); ++k) m.global_.push_back({d, u, v, k});
      }
  return m;
}

const AlgebraModel::Slice *AlgebraModel::slice(int d, VertexId u, VertexId v) const {
  if (d < 0 || d >= static_cast<int>(slices_.size())) return nullptr;
  const std::size_t r = vertex_count();
  return &slices_[static_cast<std::size_t>(d)][u * r + v];
}

bool AlgebraModel::vanishes(int d) const { return top_degree_ && d > *top_degree_; }

std::size_t AlgebraModel::dim(int d, VertexId u, VertexId v) const {
  const Slice *s = slice(d, u, v);
  if (!s) {
    if (vanishes(d) || d < 0) return 0;
    throw BoundError("degree " + std::to_string(d) + " exceeds the model bound " + std::to_string(max_degree_));
  }
  return s->basis.size();
}

std::size_t AlgebraModel::dim_degree(int d) const {
  std::size_t total = 0;
  const std::size_t r = vertex_count();
  for (VertexId u = 0; u < r; ++u)
    for (VertexId v = 0; v < r; ++v) total += dim(d, u, v);
  return total;
}

const std::vector<Path> &AlgebraModel::basis(int d, VertexId u, VertexId v) const {
  static const std::vector<Path> empty;
  const Slice *s = slice(d, u, v);
  if (!s) {
    if (vanishes(d) || d < 0) return empty;
    throw BoundError("degree " + std::to_string(d) + " exceeds the model bound " + std::to_string(max_degree_));
  }
  return s->basis;
}

SparseVector AlgebraModel::normal_form(const Path &p) const {
  const int d = static_cast<int>(p.length());
  const Slice *s = slice(d, p.source(), p.target());
  if (!s) {
    if (vanishes(d)) return {};
    throw BoundError("path of length " + std::to_string(d) + " exceeds the model bound " +
                     std::to_string(max_degree_));
  }
  return s->normal_forms[s->path_index.at(p)];
}

SparseVector AlgebraModel::multiply_paths(const Path &p, const Path &q) const {
  if (p.source() != q.target()) return {};
  const int d = static_cast<int>(p.length() + q.length());
  if (vanishes(d)) return {};
  return normal_form(compose(p, q));
}

std::size_t AlgebraModel::global_index(int d, VertexId u, VertexId v, std::size_t k) const {
  const Slice *s = slice(d, u, v);
  if (!s || k >= s->basis.size()) throw BoundError("basis element out of range");
  return s->global_offset + k;
}

const Path &AlgebraModel::global_path(std::size_t g) const {
  const BasisRef &b = global_.at(g);
  return slice(b.degree, b.source, b.target)->basis[b.index];
}

SparseVector AlgebraModel::to_global(int d, VertexId u, VertexId v, const SparseVector &local) const {
  if (local.empty()) return {};
  const Slice *s = slice(d, u, v);
  SparseVector out;
  for (const auto &[k, c] : local) out.push_back(s->global_offset + k, c);
  return out;
}

// ---------------------------------------------------------------------------

AlgebraModel compute_graded_basis(const Presentation &p, int max_degree, PathOrder order) {
  return AlgebraModel::build(p, max_degree, order);
}

SparseVector normal_form(const AlgebraModel &m, const PathCombination &x) {
  std::map<std::size_t, Scalar> acc;
  for (const auto &[p, c] : x.terms()) {
    SparseVector local = m.normal_form(p);
    for (const auto &[g, v] : m.to_global(static_cast<int>(p.length()), p.source(), p.target(), local))
      acc[g] += c * v;
  }
  return SparseVector::from_map(acc);
}

SparseVector multiply(const AlgebraModel &m, const SparseVector &x, const SparseVector &y) {
  std::map<std::size_t, Scalar> acc;
  for (const auto &[i, a] : x) {
    const auto &bi = m.global_basis().at(i);
    for (const auto &[j, b] : y) {
      const auto &bj = m.global_basis().at(j);
      if (bi.source != bj.target) continue;
      const int d = bi.degree + bj.degree;
      SparseVector local = m.multiply_paths(m.global_path(i), m.global_path(j));
      for (const auto &[g, v] : m.to_global(d, bj.source, bi.target, local)) acc[g] += a * b * v;
    }
  }
  return SparseVector::from_map(acc);
}

HilbertMatrix hilbert_matrix(const AlgebraModel &m) {
  HilbertMatrix h;
  h.vertices = m.vertex_count();
  h.max_degree = m.max_degree();
  h.entries.assign(h.vertices,
                   std::vector<std::vector<long long>>(h.vertices, std::vector<long long>(m.max_degree() + 1, 0)));
  for (int d = 0; d <= m.max_degree(); ++d)
    for (VertexId u = 0; u < h.vertices; ++u)
      for (VertexId v = 0; v < h.vertices; ++v)
        h.entries[u][v][static_cast<std::size_t>(d)] = static_cast<long long>(m.dim(d, u, v));
  return h;
}

} // namespace qk
