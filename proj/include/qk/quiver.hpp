#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qk/exact_linear.hpp"

namespace qk {

using VertexId = std::size_t;
using ArrowId = std::size_t;

struct Arrow {
  std::string label;
  VertexId source;
  VertexId target;
  friend bool operator==(const Arrow &, const Arrow &) = default;
};

/// Arrow as given by label endpoints, before validation.
struct ArrowSpec {
  std::string label;
  std::string from;
  std::string to;
};

class Quiver {
public:
  Quiver() = default;

  [[nodiscard]] std::size_t vertex_count() const { return vertices_.size(); }
  [[nodiscard]] std::size_t arrow_count() const { return arrows_.size(); }
  [[nodiscard]] const std::vector<std::string> &vertices() const { return vertices_; }
  [[nodiscard]] const std::vector<Arrow> &arrows() const { return arrows_; }
  [[nodiscard]] const std::string &vertex_label(VertexId v) const { return vertices_.at(v); }
  [[nodiscard]] const Arrow &arrow(ArrowId a) const { return arrows_.at(a); }
  [[nodiscard]] std::optional<VertexId> find_vertex(const std::string &label) const;
  [[nodiscard]] std::optional<ArrowId> find_arrow(const std::string &label) const;
  /// Arrows ending at v, in arrow order.
  [[nodiscard]] const std::vector<ArrowId> &arrows_into(VertexId v) const { return into_.at(v); }
  [[nodiscard]] const std::vector<ArrowId> &arrows_from(VertexId v) const { return from_.at(v); }

  friend bool operator==(const Quiver &a, const Quiver &b) {
    return a.vertices_ == b.vertices_ && a.arrows_ == b.arrows_;
  }

private:
  friend Quiver make_quiver(std::vector<std::string>, const std::vector<ArrowSpec> &);
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::map<std::string, VertexId> vertex_index_;
  std::map<std::string, ArrowId> arrow_index_;
  std::vector<std::vector<ArrowId>> into_;
  std::vector<std::vector<ArrowId>> from_;
};

/// Throws ValidationError on duplicate labels or dangling endpoints.
Quiver make_quiver(std::vector<std::string> vertices, const std::vector<ArrowSpec> &arrows);

/// A path a_k ... a_1 (a_1 applied first). The arrow word is stored in written
/// order, last-applied arrow first; a trivial path stores only its vertex.
class Path {
public:
  static Path trivial(VertexId v);
  static Path of_arrow(const Quiver &q, ArrowId a);
  /// Validates composability of a written-order word (last applied first).
  static Path from_word(const Quiver &q, std::vector<ArrowId> word);

  [[nodiscard]] VertexId source() const { return source_; }
  [[nodiscard]] VertexId target() const { return target_; }
  [[nodiscard]] std::size_t length() const { return arrows_.size(); }
  [[nodiscard]] bool is_trivial() const { return arrows_.empty(); }
  [[nodiscard]] const std::vector<ArrowId> &arrows() const { return arrows_; }

  /// Order: length, then the written word lexicographically, then vertex.
  friend std::strong_ordering operator<=>(const Path &a, const Path &b);
  friend bool operator==(const Path &a, const Path &b) = default;

private:
  friend Path compose(const Path &p, const Path &q);
  Path(VertexId s, VertexId t, std::vector<ArrowId> arrows)
      : source_(s), target_(t), arrows_(std::move(arrows)) {}
  VertexId source_ = 0;
  VertexId target_ = 0;
  std::vector<ArrowId> arrows_;
};

/// p after q: q is applied first. Throws ValidationError unless source(p) = target(q).
Path compose(const Path &p, const Path &q);

/// Written form "a·b·c" (last applied first); trivial paths print as e_<vertex>.
std::string path_to_string(const Quiver &q, const Path &p);

/// All paths of exactly `length`, optionally with fixed endpoints, ordered
/// lexicographically on the written arrow word.
std::vector<Path> enumerate_paths(const Quiver &q, std::size_t length,
                                  std::optional<VertexId> source = std::nullopt,
                                  std::optional<VertexId> target = std::nullopt);

/// Reverses every arrow. Arrow labels gain the suffix "^op" (or lose it, so the
/// construction is an involution); vertex labels are unchanged. On a one-vertex
/// quiver the labels are kept as they are.
Quiver opposite_quiver(const Quiver &q);
std::string opposite_label(const std::string &label);

/// Adjoins a*: t(a) -> i(a) for every arrow a, appended after the originals.
Quiver double_quiver(const Quiver &q);
std::string star_label(const std::string &label);

/// Finite linear combination of paths with nonzero coefficients.
class PathCombination {
public:
  PathCombination() = default;
  void add(const Path &p, const Scalar &coef);
  [[nodiscard]] const std::map<Path, Scalar> &terms() const { return terms_; }
  [[nodiscard]] bool empty() const { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }
  friend bool operator==(const PathCombination &, const PathCombination &) = default;

private:
  std::map<Path, Scalar> terms_;
};

std::string combination_to_string(const Quiver &q, const PathCombination &r);

/// nullopt when r is a valid relation: nonempty, all terms parallel and of a
/// common length >= 2. Otherwise a diagnostic.
std::optional<std::string> validate_relation(const Quiver &q, const PathCombination &r);

} // namespace qk
