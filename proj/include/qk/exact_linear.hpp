#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace qk {

/// Exact rational scalar. GMP keeps results of arithmetic canonical
/// (lowest terms, positive denominator).
using Scalar = mpq_class;
using DenseVector = std::vector<Scalar>;

/// Parses "p/q" or "p". Throws ValidationError on malformed text or q = 0.
Scalar parse_scalar(std::string_view text);
std::string to_string(const Scalar &value);

/// Sparse vector: entries sorted by index, no stored zeros.
class SparseVector {
public:
  using Entry = std::pair<std::size_t, Scalar>;

  SparseVector() = default;
  static SparseVector unit(std::size_t index, const Scalar &coef = 1);
  static SparseVector from_dense(std::span<const Scalar> dense);
  static SparseVector from_map(const std::map<std::size_t, Scalar> &terms);

  [[nodiscard]] bool empty() const { return entries_.empty(); }
  [[nodiscard]] std::size_t nnz() const { return entries_.size(); }
  [[nodiscard]] const std::vector<Entry> &entries() const { return entries_; }
  [[nodiscard]] auto begin() const { return entries_.begin(); }
  [[nodiscard]] auto end() const { return entries_.end(); }

  [[nodiscard]] const Scalar *find(std::size_t index) const;
  [[nodiscard]] Scalar at(std::size_t index) const;
  /// Smallest index with a nonzero entry. Precondition: !empty().
  [[nodiscard]] std::size_t leading_index() const { return entries_.front().first; }
  [[nodiscard]] DenseVector to_dense(std::size_t length) const;

  /// this += factor * other
  void add_scaled(const SparseVector &other, const Scalar &factor);
  void scale(const Scalar &factor);
  /// Appends an entry whose index exceeds every stored index.
  void push_back(std::size_t index, Scalar coef);

  friend bool operator==(const SparseVector &, const SparseVector &) = default;

private:
  std::vector<Entry> entries_;
};

class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  static Matrix from_dense(const std::vector<DenseVector> &rows);
  static Matrix from_rows(std::size_t cols, std::vector<SparseVector> rows);
  static Matrix from_columns(std::size_t rows, std::span<const SparseVector> cols);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] const SparseVector &row(std::size_t r) const { return data_[r]; }
  [[nodiscard]] Scalar at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Scalar &value);

  /// Returns M x.
  [[nodiscard]] SparseVector apply(const SparseVector &x) const;
  [[nodiscard]] Matrix transpose() const;
  [[nodiscard]] std::vector<DenseVector> to_dense() const;

  friend bool operator==(const Matrix &, const Matrix &) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<SparseVector> data_;
};

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivot_columns;
  std::size_t rank = 0;
};

/// Reduced row-echelon form. Zero rows are kept at the bottom so the shape
/// matches the input.
RrefResult rref(const Matrix &m);

/// Basis of the right null space: one vector per free column, with that
/// column set to 1 and the pivot coordinates read off the reduced form.
std::vector<SparseVector> kernel_basis(const Matrix &m);

/// Coefficients c with sum c_i generators_i = target, or nullopt.
/// Throws ValidationError when lengths disagree.
std::optional<DenseVector> solve_in_span(const std::vector<DenseVector> &generators,
                                         const DenseVector &target);

/// Incrementally maintained reduced row-echelon basis of a subspace.
///
/// Every stored row has leading coefficient 1 at its pivot and zeros at all
/// other pivot columns, so reduction against the basis is a single pass.
/// With tracking enabled each row also records its expression in terms of
/// the vectors passed to insert(), which lets reduce() report coefficients.
class EchelonBasis {
public:
  explicit EchelonBasis(bool track_combinations = false) : track_(track_combinations) {}

  /// Returns v minus its projection onto the span. If `combination` is non-null
  /// (tracking required) it receives coefficients over inserted vectors with
  /// v = sum combination_i inserted_i + remainder.
  SparseVector reduce(const SparseVector &v, SparseVector *combination = nullptr) const;
  /// Adds v to the spanning set. Returns true iff the span grew.
  bool insert(const SparseVector &v);
  [[nodiscard]] bool contains(const SparseVector &v) const { return reduce(v).empty(); }

  [[nodiscard]] std::size_t rank() const { return rows_.size(); }
  [[nodiscard]] std::size_t inserted() const { return inserted_; }
  [[nodiscard]] std::vector<std::size_t> pivots() const;
  /// Rows ordered by pivot column.
  [[nodiscard]] std::vector<SparseVector> rows() const;
  [[nodiscard]] const SparseVector *row_for_pivot(std::size_t pivot) const;

private:
  struct Row {
    SparseVector vec;
    SparseVector combo;
  };
  bool track_;
  std::size_t inserted_ = 0;
  std::map<std::size_t, Row> rows_;
};

} // namespace qk
