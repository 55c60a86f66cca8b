#include "qk/exact_linear.hpp"

#include <algorithm>
#include <cctype>

#include "qk/error.hpp"

namespace qk {

namespace {

bool is_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) return false;
  return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(start), s.end(),
                     [](unsigned char c) { return std::isdigit(c) != 0; });
}

} // namespace

Scalar parse_scalar(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer_text(num) || !is_integer_text(den) || den[0] == '-' || den[0] == '+')
    throw ValidationError("malformed rational \"" + std::string(text) + "\"");
  mpz_class n{std::string(num[0] == '+' ? num.substr(1) : num)};
  mpz_class d{std::string(den)};
  if (d == 0) throw ValidationError("zero denominator in \"" + std::string(text) + "\"");
  Scalar q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Scalar &value) { return value.get_str(); }

// ---------------------------------------------------------------------------

SparseVector SparseVector::unit(std::size_t index, const Scalar &coef) {
  SparseVector v;
  if (coef != 0) v.entries_.emplace_back(index, coef);
  return v;
}

SparseVector SparseVector::from_dense(std::span<const Scalar> dense) {
  SparseVector v;
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (dense[i] != 0) v.entries_.emplace_back(i, dense[i]);
  return v;
}

SparseVector SparseVector::from_map(const std::map<std::size_t, Scalar> &terms) {
  SparseVector v;
  v.entries_.reserve(terms.size());
  for (const auto &[i, c] : terms)
    if (c != 0) v.entries_.emplace_back(i, c);
  return v;
}

const Scalar *SparseVector::find(std::size_t index) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                             [](const Entry &e, std::size_t i) { return e.first < i; });
  if (it == entries_.end() || it->first != index) return nullptr;
  return &it->second;
}

Scalar SparseVector::at(std::size_t index) const {
  const Scalar *p = find(index);
  return p ? *p : Scalar(0);
}

DenseVector SparseVector::to_dense(std::size_t length) const {
  DenseVector out(length);
  for (const auto &[i, c] : entries_)
    if (i < length) out[i] = c;
  return out;
}

void SparseVector::add_scaled(const SparseVector &other, const Scalar &factor) {
  if (factor == 0 || other.empty()) return;
  std::vector<Entry> merged;
  merged.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
      merged.push_back(std::move(*a++));
    } else if (a == entries_.end() || b->first < a->first) {
      merged.emplace_back(b->first, factor * b->second);
      ++b;
    } else {
      Scalar s = a->second + factor * b->second;
      if (s != 0) merged.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  entries_ = std::move(merged);
}

void SparseVector::scale(const Scalar &factor) {
  if (factor == 0) {
    entries_.clear();
    return;
  }
  for (auto &e : entries_) e.second *= factor;
}

void SparseVector::push_back(std::size_t index, Scalar coef) {
  if (coef != 0) entries_.emplace_back(index, std::move(coef));
}

// ---------------------------------------------------------------------------

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

Matrix Matrix::from_dense(const std::vector<DenseVector> &rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw ValidationError("ragged dense matrix");
    m.data_[r] = SparseVector::from_dense(rows[r]);
  }
  return m;
}

Matrix Matrix::from_rows(std::size_t cols, std::vector<SparseVector> rows) {
  Matrix m;
  m.rows_ = rows.size();
  m.cols_ = cols;
  for (const auto &r : rows)
    if (!r.empty() && r.entries().back().first >= cols) throw ValidationError("row entry out of bounds");
  m.data_ = std::move(rows);
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, std::span<const SparseVector> cols) {
  std::vector<std::map<std::size_t, Scalar>> acc(rows);
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (const auto &[r, v] : cols[c]) {
      if (r >= rows) throw ValidationError("column entry out of bounds");
      acc[r].emplace(c, v);
    }
  Matrix m(rows, cols.size());
  for (std::size_t r = 0; r < rows; ++r) m.data_[r] = SparseVector::from_map(acc[r]);
  return m;
}

Scalar Matrix::at(std::size_t r, std::size_t c) const { return data_.at(r).at(c); }

void Matrix::set(std::size_t r, std::size_t c, const Scalar &value) {
  if (r >= rows_ || c >= cols_) throw ValidationError("matrix index out of bounds");
  SparseVector delta = SparseVector::unit(c, value - data_[r].at(c));
  data_[r].add_scaled(delta, 1);
}

SparseVector Matrix::apply(const SparseVector &x) const {
  SparseVector out;
  for (std::size_t r = 0; r < rows_; ++r) {
    Scalar s = 0;
    auto a = data_[r].begin();
    auto b = x.begin();
    while (a != data_[r].end() && b != x.end()) {
      if (a->first < b->first) ++a;
      else if (b->first < a->first) ++b;
      else {
        s += a->second * b->second;
        ++a;
        ++b;
      }
    }
    out.push_back(r, std::move(s));
  }
  return out;
}

Matrix Matrix::transpose() const { return from_columns(cols_, data_); }

std::vector<DenseVector> Matrix::to_dense() const {
  std::vector<DenseVector> out;
  out.reserve(rows_);
  for (const auto &r : data_) out.push_back(r.to_dense(cols_));
  return out;
}

// ---------------------------------------------------------------------------

SparseVector EchelonBasis::reduce(const SparseVector &v, SparseVector *combination) const {
  if (combination) *combination = SparseVector{};
  SparseVector out = v;
  for (const auto &[col, coef] : v) {
    auto it = rows_.find(col);
    if (it == rows_.end()) continue;
    // Rows vanish at every other pivot column, so v's original pivot
    // coefficients are exactly the multipliers.
    out.add_scaled(it->second.vec, -coef);
    if (combination) combination->add_scaled(it->second.combo, coef);
  }
  return out;
}

bool EchelonBasis::insert(const SparseVector &v) {
  std::size_t index = inserted_++;
  SparseVector combo;
  SparseVector r = reduce(v, track_ ? &combo : nullptr);
  if (r.empty()) return false;
  if (track_) {
    combo.scale(-1);
    combo.add_scaled(SparseVector::unit(index), 1);
  }
  std::size_t pivot = r.leading_index();
  Scalar inv = 1 / r.entries().front().second;
  r.scale(inv);
  if (track_) combo.scale(inv);
  for (auto &[p, row] : rows_) {
    const Scalar *c = row.vec.find(pivot);
    if (!c) continue;
    Scalar factor = -*c;
    row.vec.add_scaled(r, factor);
    if (track_) row.combo.add_scaled(combo, factor);
  }
  rows_.emplace(pivot, Row{std::move(r), std::move(combo)});
  return true;
}

std::vector<std::size_t> EchelonBasis::pivots() const {
  std::vector<std::size_t> out;
  out.reserve(rows_.size());
  for (const auto &[p, row] : rows_) out.push_back(p);
  return out;
}

std::vector<SparseVector> EchelonBasis::rows() const {
  std::vector<SparseVector> out;
  out.reserve(rows_.size());
  for (const auto &[p, row] : rows_) out.push_back(row.vec);
  return out;
}

const SparseVector *EchelonBasis::row_for_pivot(std::size_t pivot) const {
  auto it = rows_.find(pivot);
  return it == rows_.end() ? nullptr : &it->second.vec;
}

// ---------------------------------------------------------------------------

RrefResult rref(const Matrix &m) {
  EchelonBasis basis;
  for (std::size_t r = 0; r < m.rows(); ++r) basis.insert(m.row(r));
  RrefResult out;
  out.pivot_columns = basis.pivots();
  out.rank = basis.rank();
  std::vector<SparseVector> rows = basis.rows();
  rows.resize(m.rows());
  out.reduced = Matrix::from_rows(m.cols(), std::move(rows));
  return out;
}

std::vector<SparseVector> kernel_basis(const Matrix &m) {
  RrefResult red = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : red.pivot_columns) is_pivot[p] = true;

  // Column f of the reduced matrix, read row by row.
  std::vector<std::map<std::size_t, Scalar>> by_col(m.cols());
  for (std::size_t r = 0; r < red.rank; ++r)
    for (const auto &[c, v] : red.reduced.row(r))
      if (!is_pivot[c]) by_col[c].emplace(red.pivot_columns[r], -v);

  std::vector<SparseVector> out;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    auto terms = by_col[f];
    terms.emplace(f, 1);
    out.push_back(SparseVector::from_map(terms));
  }
  return out;
}

std::optional<DenseVector> solve_in_span(const std::vector<DenseVector> &generators,
                                         const DenseVector &target) {
  for (const auto &g : generators)
    if (g.size() != target.size()) throw ValidationError("dimension mismatch in solve_in_span");
  EchelonBasis basis(true);
  for (const auto &g : generators) basis.insert(SparseVector::from_dense(g));
  SparseVector combo;
  SparseVector rest = basis.reduce(SparseVector::from_dense(target), &combo);
  if (!rest.empty()) return std::nullopt;
  return combo.to_dense(generators.size());
}

} // namespace qk
