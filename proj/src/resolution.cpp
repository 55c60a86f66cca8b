#include "qk/resolution.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <tuple>

#include "qk/error.hpp"
#include "qk/parallel.hpp"

namespace qk {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

struct Generator {
  int degree;
  VertexId vertex;
  SparseVector image;  // in the previous term, at (degree, vertex)
};

/// Graded free module sum_k A e_{v_k}[-s_k], viewed degree- and vertex-wise:
/// the (d, x) component has one coordinate per generator k and basis path of
/// A_{d - s_k}(v_k -> x).
class FreeModule {
public:
  struct Slot {
    std::size_t gen;
    std::size_t basis;
  };

  FreeModule(const AlgebraModel &m, std::vector<Generator> gens, int max_degree)
      : model_(&m), max_degree_(max_degree), r_(m.vertex_count()), gens_(std::move(gens)) {
    layout_.resize(static_cast<std::size_t>(max_degree + 1) * r_);
    for (int d = 0; d <= max_degree; ++d)
      for (VertexId x = 0; x < r_; ++x) {
        Layout &l = layout_[index(d, x)];
        l.offset.assign(gens_.size(), kNone);
        for (std::size_t k = 0; k < gens_.size(); ++k) {
          const int e = d - gens_[k].degree;
          if (e < 0) continue;
          const std::size_t n = m.basis(e, gens_[k].vertex, x).size();
          if (n == 0) continue;
          l.offset[k] = l.slots.size();
          for (std::size_t b = 0; b < n; ++b) l.slots.push_back({k, b});
        }
      }
  }

  [[nodiscard]] const std::vector<Generator> &gens() const { return gens_; }
  [[nodiscard]] std::size_t rank(int d, VertexId x) const { return layout_[index(d, x)].slots.size(); }
  [[nodiscard]] const std::vector<Slot> &slots(int d, VertexId x) const { return layout_[index(d, x)].slots; }
  [[nodiscard]] std::size_t offset(int d, VertexId x, std::size_t gen) const {
    return layout_[index(d, x)].offset[gen];
  }

  /// Left action of a path b: x -> y on an element of the (d, x) component.
  [[nodiscard]] SparseVector act(const Path &b, int d, VertexId x, const SparseVector &elem) const {
    if (b.is_trivial()) return elem;
    const int nd = d + static_cast<int>(b.length());
    if (nd > max_degree_) throw BoundError("module action leaves the degree window");
    const VertexId y = b.target();
    const auto &src = layout_[index(d, x)];
    const auto &dst = layout_[index(nd, y)];
    std::map<std::size_t, Scalar> acc;
    for (const auto &[pos, c] : elem) {
      const Slot &s = src.slots[pos];
      const Generator &g = gens_[s.gen];
      const Path &beta = model_->basis(d - g.degree, g.vertex, x)[s.basis];
      SparseVector prod = model_->multiply_paths(b, beta);
      if (prod.empty()) continue;
      const std::size_t off = dst.offset[s.gen];
      for (const auto &[j, v] : prod) acc[off + j] += c * v;
    }
    return SparseVector::from_map(acc);
  }

private:
  struct Layout {
    std::vector<Slot> slots;
    std::vector<std::size_t> offset;
  };
  [[nodiscard]] std::size_t index(int d, VertexId x) const { return static_cast<std::size_t>(d) * r_ + x; }

  const AlgebraModel *model_;
  int max_degree_;
  std::size_t r_;
  std::vector<Generator> gens_;
  std::vector<Layout> layout_;
};

struct SimpleResolution {
  VertexId simple = 0;
  std::vector<FreeModule> terms;
  /// diff[i][slice]: columns of d_i: P_i -> P_{i-1} at (d, x), i >= 1 (diff[0] empty).
  std::vector<std::vector<std::vector<SparseVector>>> diff;
  /// omega_dim[i][slice]: dim of Omega^i = ker d_{i-1} (ker of the augmentation for i = 1).
  std::vector<std::vector<std::size_t>> omega_dim;
};

SimpleResolution resolve_simple(const AlgebraModel &m, VertexId u, int i_max, int d_max) {
  const std::size_t r = m.vertex_count();
  const std::size_t slices = static_cast<std::size_t>(d_max + 1) * r;
  const Quiver &q = m.quiver();
  SimpleResolution res;
  res.simple = u;
  res.terms.reserve(static_cast<std::size_t>(i_max) + 1);  // references into terms stay valid
  res.terms.emplace_back(m, std::vector<Generator>{{0, u, {}}}, d_max);
  res.diff.emplace_back();
  res.omega_dim.emplace_back();

  // Omega^1 = J e_u: everything in positive degree.
  std::vector<std::vector<SparseVector>> omega(slices);
  for (int d = 1; d <= d_max; ++d)
    for (VertexId x = 0; x < r; ++x)
      for (std::size_t p = 0; p < res.terms[0].rank(d, x); ++p)
        omega[static_cast<std::size_t>(d) * r + x].push_back(SparseVector::unit(p));

  for (int i = 1; i <= i_max; ++i) {
    const FreeModule &prev = res.terms.back();
    std::vector<Generator> gens;
    for (int d = 0; d <= d_max; ++d)
      for (VertexId x = 0; x < r; ++x) {
        EchelonBasis j_omega;
        if (d >= 1)
          for (ArrowId a : q.arrows_into(x)) {
            const VertexId xs = q.arrow(a).source;
            Path pa = Path::of_arrow(q, a);
            for (const auto &w : omega[static_cast<std::size_t>(d - 1) * r + xs]) j_omega.insert(prev.act(pa, d - 1, xs, w));
          }
        for (const auto &w : omega[static_cast<std::size_t>(d) * r + x])
          if (j_omega.insert(w)) gens.push_back({d, x, w});
      }
    res.terms.emplace_back(m, std::move(gens), d_max);
    const FreeModule &cur = res.terms.back();

    std::vector<std::vector<SparseVector>> columns(slices);
    std::vector<std::size_t> dims(slices);
    for (int d = 0; d <= d_max; ++d)
      for (VertexId x = 0; x < r; ++x) {
        const std::size_t s = static_cast<std::size_t>(d) * r + x;
        dims[s] = omega[s].size();
        for (const auto &slot : cur.slots(d, x)) {
          const Generator &g = cur.gens()[slot.gen];
          const Path &beta = m.basis(d - g.degree, g.vertex, x)[slot.basis];
          columns[s].push_back(prev.act(beta, g.degree, g.vertex, g.image));
        }
      }
    res.omega_dim.push_back(std::move(dims));

    if (i < i_max) {
      std::vector<std::vector<SparseVector>> next(slices);
      for (int d = 0; d <= d_max; ++d)
        for (VertexId x = 0; x < r; ++x) {
          const std::size_t s = static_cast<std::size_t>(d) * r + x;
          if (columns[s].empty()) continue;
          Matrix mat = Matrix::from_columns(prev.rank(d, x), columns[s]);
          EchelonBasis ker;
          for (const auto &v : kernel_basis(mat)) ker.insert(v);
          next[s] = ker.rows();
        }
      omega = std::move(next);
    }
    res.diff.push_back(std::move(columns));
  }
  return res;
}

} // namespace

struct MinimalResolution::Impl {
  std::vector<SimpleResolution> simples;
};

// ---------------------------------------------------------------------------

std::string Verdict::to_string() const {
  switch (kind) {
  case VerdictKind::KoszulToBound:
    return "koszul-to-bound";
  case VerdictKind::FailsAt:
    return "fails-at(" + std::to_string(hom_degree) + "," + std::to_string(internal_degree) + ")";
  case VerdictKind::UnknownBeyondBound:
    return "unknown-beyond-bound";
  }
  return {};
}

bool ResolutionReport::row_complete(int i) const {
  return std::all_of(complete.begin(), complete.end(),
                     [i](const std::vector<bool> &row) { return row[static_cast<std::size_t>(i)]; });
}

MinimalResolution::MinimalResolution(std::shared_ptr<const AlgebraModel> model, int max_homological, int max_degree)
    : model_(std::move(model)), impl_(std::make_unique<Impl>()) {
  if (max_homological < 0) throw BoundError("max homological degree must be nonnegative");
  if (max_degree < 0 || max_degree > model_->max_degree())
    throw BoundError("degree window " + std::to_string(max_degree) + " exceeds the model bound " +
                     std::to_string(model_->max_degree()));
  const AlgebraModel &m = *model_;
  const std::size_t r = m.vertex_count();
  impl_->simples.resize(r);
  parallel_for(r, [&](std::size_t u) { impl_->simples[u] = resolve_simple(m, u, max_homological, max_degree); });

  ResolutionReport &rep = report_;
  rep.vertices = r;
  rep.max_homological = max_homological;
  rep.max_degree = max_degree;
  rep.betti.assign(r, std::vector<std::vector<std::vector<std::size_t>>>(
                          static_cast<std::size_t>(max_homological + 1),
                          std::vector<std::vector<std::size_t>>(static_cast<std::size_t>(max_degree + 1),
                                                                std::vector<std::size_t>(r, 0))));
  rep.complete.assign(r, std::vector<bool>(static_cast<std::size_t>(max_homological + 1), false));
  rep.linear.assign(static_cast<std::size_t>(max_homological + 1), true);
  for (VertexId u = 0; u < r; ++u) {
    const auto &sr = impl_->simples[u];
    for (int i = 0; i <= max_homological; ++i)
      for (const auto &g : sr.terms[static_cast<std::size_t>(i)].gens())
        ++rep.betti[u][static_cast<std::size_t>(i)][static_cast<std::size_t>(g.degree)][g.vertex];
    rep.complete[u][0] = true;
    for (int i = 1; i <= max_homological; ++i) {
      const auto &prev = sr.terms[static_cast<std::size_t>(i - 1)].gens();
      bool ok = rep.complete[u][static_cast<std::size_t>(i - 1)];
      if (ok && !prev.empty()) {
        int top_gen = 0;
        for (const auto &g : prev) top_gen = std::max(top_gen, g.degree);
        ok = m.top_degree() && top_gen + *m.top_degree() <= max_degree;
      }
      rep.complete[u][static_cast<std::size_t>(i)] = ok;
    }
  }
  for (int i = 0; i <= max_homological; ++i)
    for (int d = 0; d <= max_degree; ++d) {
      if (d == i) continue;
      for (VertexId u = 0; u < r; ++u)
        for (VertexId v = 0; v < r; ++v)
          if (rep.beta(u, i, d, v) != 0) {
            rep.linear[static_cast<std::size_t>(i)] = false;
            if (!rep.first_failure) rep.first_failure = std::pair{i, d};
          }
    }
}

MinimalResolution::~MinimalResolution() = default;
MinimalResolution::MinimalResolution(MinimalResolution &&) noexcept = default;
MinimalResolution &MinimalResolution::operator=(MinimalResolution &&) noexcept = default;

std::vector<GeneratorInfo> MinimalResolution::generators(VertexId simple, int i) const {
  if (i < 0 || i > max_homological()) throw BoundError("homological degree out of range");
  std::vector<GeneratorInfo> out;
  for (const auto &g : impl_->simples.at(simple).terms[static_cast<std::size_t>(i)].gens())
    out.push_back({g.degree, g.vertex});
  return out;
}

std::vector<std::size_t> MinimalResolution::ext_generators(VertexId simple, int i, int d, VertexId target) const {
  std::vector<std::size_t> out;
  const auto gens = generators(simple, i);
  for (std::size_t k = 0; k < gens.size(); ++k)
    if (gens[k].degree == d && gens[k].vertex == target) out.push_back(k);
  return out;
}

ExtElement MinimalResolution::ext_basis_element(VertexId source, int i, int d, VertexId target, std::size_t k) const {
  if (k >= ext_generators(source, i, d, target).size()) throw BoundError("Ext basis index out of range");
  return ExtElement{source, target, i, d, SparseVector::unit(k)};
}

bool MinimalResolution::is_minimal() const {
  for (const auto &sr : impl_->simples)
    for (std::size_t i = 1; i < sr.terms.size(); ++i) {
      const FreeModule &prev = sr.terms[i - 1];
      for (const auto &g : sr.terms[i].gens())
        for (const auto &[pos, c] : g.image) {
          const auto &slot = prev.slots(g.degree, g.vertex)[pos];
          if (prev.gens()[slot.gen].degree == g.degree) return false;  // degree-0 coefficient
        }
    }
  return true;
}

bool MinimalResolution::is_exact() const {
  const std::size_t r = model_->vertex_count();
  for (const auto &sr : impl_->simples)
    for (std::size_t i = 1; i < sr.terms.size(); ++i)
      for (int d = 0; d <= max_degree(); ++d)
        for (VertexId x = 0; x < r; ++x) {
          const std::size_t s = static_cast<std::size_t>(d) * r + x;
          const auto &cols = sr.diff[i][s];
          std::size_t rank = 0;
          if (!cols.empty()) rank = rref(Matrix::from_columns(sr.terms[i - 1].rank(d, x), cols)).rank;
          if (rank != sr.omega_dim[i][s]) return false;
        }
  return true;
}

// ---------------------------------------------------------------------------

namespace {

/// Solves d_k(z) = y in a fixed (degree, vertex) slice of the resolution of
/// one simple, caching the tracked echelon form of each slice.
class LiftSolver {
public:
  LiftSolver(const std::vector<SimpleResolution> &simples, std::size_t r) : simples_(simples), r_(r) {}

  SparseVector solve(VertexId w, std::size_t k, int d, VertexId x, const SparseVector &y) {
    auto key = std::tuple{w, k, d, x};
    auto it = cache_.find(key);
    if (it == cache_.end()) {
      EchelonBasis basis(true);
      for (const auto &col : simples_[w].diff[k][static_cast<std::size_t>(d) * r_ + x]) basis.insert(col);
      it = cache_.emplace(key, std::move(basis)).first;
    }
    SparseVector combo;
    SparseVector rest = it->second.reduce(y, &combo);
    if (!rest.empty()) throw Error("chain lifting failed: target not in the image of the differential");
    return combo;
  }

private:
  const std::vector<SimpleResolution> &simples_;
  std::size_t r_;
  std::map<std::tuple<VertexId, std::size_t, int, VertexId>, EchelonBasis> cache_;
};

/// Lifts a functional zeta on generators of P^u_j (supported on degree
/// `shift`, type w) to chain maps f_k: P^u_{j+k} -> P^w_k, k = 0..depth.
/// maps[k][g] is f_k of generator g, in the (deg g - shift, vertex g) slice.
std::vector<std::vector<SparseVector>> lift_chain_map(const AlgebraModel &m, const std::vector<SimpleResolution> &simples,
                                                      LiftSolver &solver, VertexId u, int j, int shift, VertexId w,
                                                      const std::vector<Scalar> &zeta_by_gen, int depth) {
  const SimpleResolution &src = simples[u];
  const SimpleResolution &dst = simples[w];
  std::vector<std::vector<SparseVector>> maps;
  {
    const auto &gens = src.terms[static_cast<std::size_t>(j)].gens();
    std::vector<SparseVector> f0(gens.size());
    for (std::size_t g = 0; g < gens.size(); ++g)
      if (zeta_by_gen[g] != 0) f0[g] = SparseVector::unit(0, zeta_by_gen[g]);
    maps.push_back(std::move(f0));
  }
  for (int k = 0; k < depth; ++k) {
    const FreeModule &src_prev = src.terms[static_cast<std::size_t>(j + k)];
    const FreeModule &src_cur = src.terms[static_cast<std::size_t>(j + k + 1)];
    const FreeModule &dst_prev = dst.terms[static_cast<std::size_t>(k)];
    const auto &fk = maps.back();
    std::vector<SparseVector> next(src_cur.gens().size());
    for (std::size_t g = 0; g < src_cur.gens().size(); ++g) {
      const Generator &gen = src_cur.gens()[g];
      const int td = gen.degree - shift;
      if (td < 0) continue;
      // y = f_k(d(gen)), with f_k(beta·g') = beta·f_k(g')
      std::map<std::size_t, Scalar> acc;
      for (const auto &[pos, c] : gen.image) {
        const auto &slot = src_prev.slots(gen.degree, gen.vertex)[pos];
        const SparseVector &img = fk[slot.gen];
        if (img.empty()) continue;
        const Generator &pg = src_prev.gens()[slot.gen];
        const Path &beta = m.basis(gen.degree - pg.degree, pg.vertex, gen.vertex)[slot.basis];
        for (const auto &[p, v] : dst_prev.act(beta, pg.degree - shift, pg.vertex, img)) acc[p] += c * v;
      }
      SparseVector y = SparseVector::from_map(acc);
      if (y.empty()) continue;
      next[g] = solver.solve(w, static_cast<std::size_t>(k + 1), td, gen.vertex, y);
    }
    maps.push_back(std::move(next));
  }
  return maps;
}

std::vector<Scalar> functional_by_generator(const MinimalResolution &res, const ExtElement &e) {
  const auto gens = res.generators(e.source, e.hom_degree);
  const auto idx = res.ext_generators(e.source, e.hom_degree, e.internal_degree, e.target);
  std::vector<Scalar> out(gens.size());
  for (const auto &[k, c] : e.coefficients) {
    if (k >= idx.size()) throw BoundError("Ext element coefficient out of range");
    out[idx[k]] = c;
  }
  return out;
}

} // namespace

ExtElement MinimalResolution::yoneda_product(const ExtElement &xi, const ExtElement &zeta) const {
  const int i = xi.hom_degree, j = zeta.hom_degree;
  if (i + j > max_homological())
    throw BoundError("Yoneda product needs homological degree " + std::to_string(i + j) + " > bound " +
                     std::to_string(max_homological()));
  if (xi.internal_degree + zeta.internal_degree > max_degree())
    throw BoundError("Yoneda product leaves the degree window");
  ExtElement out{zeta.source, xi.target, i + j, xi.internal_degree + zeta.internal_degree, {}};
  if (xi.source != zeta.target || xi.coefficients.empty() || zeta.coefficients.empty()) return out;

  const std::size_t r = model_->vertex_count();
  LiftSolver solver(impl_->simples, r);
  auto maps = lift_chain_map(*model_, impl_->simples, solver, zeta.source, j, zeta.internal_degree, zeta.target,
                             functional_by_generator(*this, zeta), i);
  const auto xi_by_gen = functional_by_generator(*this, xi);
  const FreeModule &mid = impl_->simples[xi.source].terms[static_cast<std::size_t>(i)];
  const auto targets = ext_generators(out.source, i + j, out.internal_degree, out.target);
  const auto &src_gens = impl_->simples[out.source].terms[static_cast<std::size_t>(i + j)].gens();
  for (std::size_t t = 0; t < targets.size(); ++t) {
    const SparseVector &img = maps[static_cast<std::size_t>(i)][targets[t]];
    Scalar value = 0;
    for (const auto &[pos, c] : img) {
      const auto &slot = mid.slots(xi.internal_degree, src_gens[targets[t]].vertex)[pos];
      if (mid.gens()[slot.gen].degree == xi.internal_degree) value += c * xi_by_gen[slot.gen];
    }
    out.coefficients.push_back(t, value);
  }
  return out;
}

std::vector<std::vector<ExtElement>> MinimalResolution::right_products(const ExtElement &zeta, int max_i) const {
  const int j = zeta.hom_degree;
  if (j + max_i > max_homological()) throw BoundError("products exceed the homological bound");
  const std::size_t r = model_->vertex_count();
  LiftSolver solver(impl_->simples, r);
  auto maps = lift_chain_map(*model_, impl_->simples, solver, zeta.source, j, zeta.internal_degree, zeta.target,
                             functional_by_generator(*this, zeta), max_i);
  const VertexId w = zeta.target;
  const auto &src = impl_->simples[zeta.source];
  std::vector<std::vector<ExtElement>> out(static_cast<std::size_t>(std::max(max_i, 0)));
  for (int i = 1; i <= max_i; ++i) {
    const FreeModule &mid = impl_->simples[w].terms[static_cast<std::size_t>(i)];
    const auto &src_gens = src.terms[static_cast<std::size_t>(i + j)].gens();
    for (VertexId v = 0; v < r; ++v)
      for (int dx = 0; dx + zeta.internal_degree <= max_degree(); ++dx) {
        const auto xis = ext_generators(w, i, dx, v);
        if (xis.empty()) continue;
        const int d = dx + zeta.internal_degree;
        const auto targets = ext_generators(zeta.source, i + j, d, v);
        for (std::size_t b = 0; b < xis.size(); ++b) {
          ExtElement e{zeta.source, v, i + j, d, {}};
          for (std::size_t t = 0; t < targets.size(); ++t) {
            const SparseVector &img = maps[static_cast<std::size_t>(i)][targets[t]];
            const std::size_t off = mid.offset(dx, src_gens[targets[t]].vertex, xis[b]);
            if (off == kNone) continue;
            // the generator's own coordinate is the trivial path, at index 0
            if (const Scalar *c = img.find(off)) e.coefficients.push_back(t, *c);
          }
          out[static_cast<std::size_t>(i - 1)].push_back(std::move(e));
        }
      }
  }
  return out;
}

MinimalResolution minimal_resolution(std::shared_ptr<const AlgebraModel> model, int max_homological, int max_degree) {
  return MinimalResolution(std::move(model), max_homological, max_degree);
}

Verdict is_koszul_to(const ResolutionReport &r) {
  if (r.first_failure) return Verdict{VerdictKind::FailsAt, r.first_failure->first, r.first_failure->second};
  if (r.max_degree >= r.max_homological) return Verdict{VerdictKind::KoszulToBound};
  return Verdict{VerdictKind::UnknownBeyondBound};
}

ExtTable ext_dimensions(const ResolutionReport &r) {
  ExtTable t;
  const auto imax = static_cast<std::size_t>(r.max_homological);
  t.dims.assign(imax + 1, std::vector<std::vector<std::size_t>>(r.vertices, std::vector<std::size_t>(r.vertices, 0)));
  t.totals.assign(imax + 1, 0);
  t.complete.assign(imax + 1, false);
  for (std::size_t i = 0; i <= imax; ++i) {
    for (VertexId u = 0; u < r.vertices; ++u)
      for (int d = 0; d <= r.max_degree; ++d)
        for (VertexId v = 0; v < r.vertices; ++v) {
          std::size_t b = r.beta(u, static_cast<int>(i), d, v);
          t.dims[i][u][v] += b;
          t.totals[i] += b;
        }
    t.complete[i] = r.row_complete(static_cast<int>(i));
  }
  return t;
}

std::string GenerationVerdict::to_string() const {
  if (pass) return "pass";
  return "fails at i=" + std::to_string(failing_i) + ": span " + std::to_string(achieved) + " vs dim Ext^" +
         std::to_string(failing_i + 1) + " = " + std::to_string(required);
}

GenerationVerdict generation_check(const MinimalResolution &res, int up_to) {
  if (up_to > res.max_homological()) throw BoundError("generation check beyond the homological bound");
  if (up_to <= 1) return GenerationVerdict{};
  const AlgebraModel &m = res.model();
  const std::size_t r = m.vertex_count();
  const ResolutionReport &rep = res.report();
  const int d_max = res.max_degree();
  // spans[i+1][(u, v, d)] = span of Ext^i·Ext^1 inside Ext^{i+1}(S_u, S_v)_d
  std::vector<std::map<std::tuple<VertexId, VertexId, int>, EchelonBasis>> spans(static_cast<std::size_t>(up_to + 1));

  for (VertexId u = 0; u < r; ++u)
    for (VertexId w = 0; w < r; ++w)
      for (int dz = 0; dz <= d_max; ++dz) {
        const std::size_t n1 = res.ext_generators(u, 1, dz, w).size();
        for (std::size_t a = 0; a < n1; ++a) {
          auto prods = res.right_products(res.ext_basis_element(u, 1, dz, w, a), up_to - 1);
          for (const auto &row : prods)
            for (const auto &p : row)
              spans[static_cast<std::size_t>(p.hom_degree)][{u, p.target, p.internal_degree}].insert(p.coefficients);
        }
      }

  for (int i = 1; i < up_to; ++i) {
    std::size_t achieved = 0, required = 0;
    for (const auto &[key, basis] : spans[static_cast<std::size_t>(i + 1)]) achieved += basis.rank();
    for (VertexId u = 0; u < r; ++u)
      for (int d = 0; d <= d_max; ++d)
        for (VertexId v = 0; v < r; ++v) required += rep.beta(u, i + 1, d, v);
    if (achieved != required) return GenerationVerdict{false, i, achieved, required};
  }
  return GenerationVerdict{};
}

HilbertEulerResult hilbert_euler_check(const AlgebraModel &m, const ResolutionReport &r, int cutoff) {
  if (cutoff < 0 || cutoff > r.max_degree || cutoff > r.max_homological || cutoff > m.max_degree())
    throw BoundError("Hilbert-Euler cutoff exceeds the resolution or model bounds");
  const std::size_t n = r.vertices;
  const auto len = static_cast<std::size_t>(cutoff + 1);
  // B(t) = sum_i (-1)^i B_i(t)
  std::vector<std::vector<std::vector<long long>>> b(n, std::vector<std::vector<long long>>(n, std::vector<long long>(len, 0)));
  for (VertexId u = 0; u < n; ++u)
    for (int i = 0; i <= cutoff; ++i)
      for (int d = 0; d <= cutoff; ++d)
        for (VertexId v = 0; v < n; ++v)
          b[u][v][static_cast<std::size_t>(d)] += (i % 2 ? -1 : 1) * static_cast<long long>(r.beta(u, i, d, v));
  HilbertMatrix h = hilbert_matrix(m);
  for (VertexId u = 0; u < n; ++u)
    for (VertexId w = 0; w < n; ++w)
      for (std::size_t d = 0; d < len; ++d) {
        long long s = 0;
        for (VertexId v = 0; v < n; ++v)
          for (std::size_t e = 0; e <= d; ++e) s += b[u][v][e] * h.entries[v][w][d - e];
        long long expected = (u == w && d == 0) ? 1 : 0;
        if (s != expected) return HilbertEulerResult{false, u, w, static_cast<int>(d), s};
      }
  return HilbertEulerResult{};
}

} // namespace qk
