#include "qk/structure_algebra.hpp"

#include <map>

#include "qk/error.hpp"

namespace qk {

StructureConstantAlgebra::StructureConstantAlgebra(std::vector<std::string> labels, SparseVector unit,
                                                   std::vector<SparseVector> products)
    : labels_(std::move(labels)), unit_(std::move(unit)), products_(std::move(products)) {
  if (products_.size() != labels_.size() * labels_.size())
    throw ValidationError("structure constant table has wrong size");
}

SparseVector StructureConstantAlgebra::multiply(const SparseVector &x, const SparseVector &y) const {
  std::map<std::size_t, Scalar> acc;
  for (const auto &[i, a] : x)
    for (const auto &[j, b] : y)
      for (const auto &[k, c] : product(i, j)) acc[k] += a * b * c;
  return SparseVector::from_map(acc);
}

std::optional<std::tuple<std::size_t, std::size_t, std::size_t>> StructureConstantAlgebra::associativity_failure() const {
  const std::size_t n = dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const SparseVector &ij = product(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        SparseVector left = multiply(ij, SparseVector::unit(k));
        SparseVector right = multiply(SparseVector::unit(i), product(j, k));
        if (left != right) return std::tuple{i, j, k};
      }
    }
  return std::nullopt;
}

bool StructureConstantAlgebra::unit_law_holds() const {
  for (std::size_t i = 0; i < dim(); ++i) {
    SparseVector e = SparseVector::unit(i);
    if (multiply(unit_, e) != e || multiply(e, unit_) != e) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

namespace {

void require_finite(const AlgebraModel &m) {
  if (!m.finite())
    throw BoundError("model is not finite-dimensional within degree " + std::to_string(m.max_degree()));
}

std::string basis_label(const AlgebraModel &m, std::size_t b) { return path_to_string(m.quiver(), m.global_path(b)); }

SparseVector model_unit(const AlgebraModel &m) {
  SparseVector u;
  for (VertexId v = 0; v < m.vertex_count(); ++v) u.push_back(m.global_index(0, v, v, 0), 1);
  return u;
}

} // namespace

StructureConstantAlgebra as_structure_constants(const AlgebraModel &m) {
  require_finite(m);
  const std::size_t n = m.global_dim();
  std::vector<std::string> labels;
  std::vector<SparseVector> products(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(basis_label(m, i));
    for (std::size_t j = 0; j < n; ++j)
      products[i * n + j] = multiply(m, SparseVector::unit(i), SparseVector::unit(j));
  }
  return StructureConstantAlgebra(std::move(labels), model_unit(m), std::move(products));
}

StructureConstantAlgebra smash_product(const AlgebraModel &m, const FiniteGroup &g, const WeightFunction &w) {
  require_finite(m);
  HomogeneityReport report = is_homogeneous_grading(m.presentation(), g, w);
  if (!report.ok()) throw HomogeneityError(report.diagnostic());
  const std::size_t dim_a = m.global_dim();
  const std::size_t order = g.order();
  const std::size_t n = dim_a * order;

  std::vector<GroupElem> weight(dim_a);
  std::vector<std::string> labels;
  for (std::size_t b = 0; b < dim_a; ++b) {
    weight[b] = path_weight(m.global_path(b), g, w);
    for (GroupElem x = 0; x < order; ++x) labels.push_back(basis_label(m, b) + "#p_" + g.label(x));
  }

  std::vector<SparseVector> products(n * n);
  for (std::size_t b1 = 0; b1 < dim_a; ++b1)
    for (std::size_t b2 = 0; b2 < dim_a; ++b2) {
      SparseVector ab = multiply(m, SparseVector::unit(b1), SparseVector::unit(b2));
      if (ab.empty()) continue;
      for (GroupElem x = 0; x < order; ++x)
        for (GroupElem y = 0; y < order; ++y) {
          if (weight[b2] != g.multiply(x, g.inverse(y))) continue;
          SparseVector out;
          for (const auto &[k, c] : ab) out.push_back(k * order + y, c);
          products[(b1 * order + x) * n + (b2 * order + y)] = std::move(out);
        }
    }
  SparseVector unit;
  for (const auto &[b, c] : model_unit(m))
    for (GroupElem x = 0; x < order; ++x) unit.push_back(b * order + x, c);
  return StructureConstantAlgebra(std::move(labels), std::move(unit), std::move(products));
}

StructureConstantAlgebra skew_group_algebra(const AlgebraModel &m, const FiniteGroup &g, const GroupAction &action) {
  require_finite(m);
  const Quiver &q = m.quiver();
  validate_action(q, g, action);
  for (GroupElem x = 0; x < g.order(); ++x)
    for (std::size_t i = 0; i < m.presentation().relations.size(); ++i) {
      PathCombination image;
      for (const auto &[p, c] : m.presentation().relations[i].terms()) image.add(act_on_path(q, action, x, p), c);
      if (!normal_form(m, image).empty())
        throw ValidationError("element " + g.label(x) + " does not preserve the ideal: image of relation " +
                              std::to_string(i) + " is nonzero");
    }

  const std::size_t dim_a = m.global_dim();
  const std::size_t order = g.order();
  const std::size_t n = dim_a * order;

  // image[x][b] = x(b) over the global basis
  std::vector<std::vector<SparseVector>> image(order, std::vector<SparseVector>(dim_a));
  for (GroupElem x = 0; x < order; ++x)
    for (std::size_t b = 0; b < dim_a; ++b) {
      PathCombination pc;
      pc.add(act_on_path(q, action, x, m.global_path(b)), 1);
      image[x][b] = normal_form(m, pc);
    }

  std::vector<std::string> labels;
  for (std::size_t b = 0; b < dim_a; ++b)
    for (GroupElem x = 0; x < order; ++x) labels.push_back(basis_label(m, b) + "*" + g.label(x));

  std::vector<SparseVector> products(n * n);
  for (std::size_t b1 = 0; b1 < dim_a; ++b1)
    for (GroupElem x = 0; x < order; ++x)
      for (std::size_t b2 = 0; b2 < dim_a; ++b2) {
        SparseVector prod = multiply(m, SparseVector::unit(b1), image[x][b2]);
        if (prod.empty()) continue;
        for (GroupElem y = 0; y < order; ++y) {
          GroupElem xy = g.multiply(x, y);
          SparseVector out;
          for (const auto &[k, c] : prod) out.push_back(k * order + xy, c);
          products[(b1 * order + x) * n + (b2 * order + y)] = std::move(out);
        }
      }
  SparseVector unit;
  for (const auto &[b, c] : model_unit(m)) unit.push_back(b * order + g.identity(), c);
  return StructureConstantAlgebra(std::move(labels), std::move(unit), std::move(products));
}

std::vector<SparseVector> radical(const StructureConstantAlgebra &s) {
  const std::size_t n = s.dim();
  // L_i[k] = e_i e_k; tr(L_i L_j) = sum_k sum_l c_{jk}^l c_{il}^k
  Matrix form(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Scalar tr = 0;
      for (std::size_t k = 0; k < n; ++k)
        for (const auto &[l, c] : s.product(j, k))
          if (const Scalar *d = s.product(i, l).find(k)) tr += c * *d;
      if (tr != 0) {
        form.set(i, j, tr);
        form.set(j, i, tr);
      }
    }
  EchelonBasis basis;
  for (const auto &v : kernel_basis(form)) basis.insert(v);
  return basis.rows();
}

StructureConstantAlgebra quotient_algebra(const StructureConstantAlgebra &s, const std::vector<SparseVector> &ideal) {
  EchelonBasis basis;
  for (const auto &v : ideal) basis.insert(v);
  std::vector<bool> pivot(s.dim(), false);
  for (auto p : basis.pivots()) pivot[p] = true;
  std::vector<std::size_t> keep;
  std::vector<std::size_t> new_index(s.dim(), 0);
  for (std::size_t i = 0; i < s.dim(); ++i)
    if (!pivot[i]) {
      new_index[i] = keep.size();
      keep.push_back(i);
    }
  auto project = [&](const SparseVector &v) {
    SparseVector out;
    for (const auto &[i, c] : basis.reduce(v)) out.push_back(new_index[i], c);
    return out;
  };
  const std::size_t n = keep.size();
  std::vector<std::string> labels;
  std::vector<SparseVector> products(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    labels.push_back(s.labels()[keep[a]]);
    for (std::size_t b = 0; b < n; ++b) products[a * n + b] = project(s.product(keep[a], keep[b]));
  }
  return StructureConstantAlgebra(std::move(labels), project(s.unit()), std::move(products));
}

std::optional<std::size_t> nilpotency_index(const StructureConstantAlgebra &s, const std::vector<SparseVector> &span) {
  EchelonBasis base;
  for (const auto &v : span) base.insert(v);
  if (base.rank() == 0) return 0;
  std::vector<SparseVector> power = base.rows();
  std::size_t k = 1;
  std::size_t last_rank = base.rank();
  while (!power.empty()) {
    EchelonBasis next;
    for (const auto &x : power)
      for (const auto &y : base.rows()) next.insert(s.multiply(x, y));
    ++k;
    if (next.rank() == 0) return k;
    if (next.rank() >= last_rank) return std::nullopt;
    last_rank = next.rank();
    power = next.rows();
  }
  return k;
}

bool verify_smash_covering_iso(const Covering &cov, const AlgebraModel &cov_model, const AlgebraModel &base_model,
                               const StructureConstantAlgebra &smash) {
  const std::size_t order = cov.group.order();
  const std::size_t n = cov_model.global_dim();
  if (n != smash.dim() || base_model.global_dim() * order != smash.dim()) return false;

  // phi(lifted path from sheet g) = projection # p_g
  std::vector<SparseVector> phi(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Path &p = cov_model.global_path(i);
    GroupElem sheet = cov.sheet(p.source());
    PathCombination proj;
    proj.add(cov.project(p), 1);
    SparseVector out;
    for (const auto &[b, c] : normal_form(base_model, proj)) out.push_back(b * order + sheet, c);
    phi[i] = std::move(out);
  }
  EchelonBasis image;
  for (const auto &v : phi) image.insert(v);
  if (image.rank() != n) return false;

  auto map = [&](const SparseVector &x) {
    std::map<std::size_t, Scalar> acc;
    for (const auto &[i, c] : x)
      for (const auto &[k, d] : phi[i]) acc[k] += c * d;
    return SparseVector::from_map(acc);
  };
  SparseVector cov_unit;
  for (VertexId v = 0; v < cov_model.vertex_count(); ++v) cov_unit.push_back(cov_model.global_index(0, v, v, 0), 1);
  if (map(cov_unit) != smash.unit()) return false;

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      SparseVector lhs = map(multiply(cov_model, SparseVector::unit(i), SparseVector::unit(j)));
      SparseVector rhs = smash.multiply(phi[i], phi[j]);
      if (lhs != rhs) return false;
    }
  return true;
}

} // namespace qk
