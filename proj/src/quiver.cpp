#include "qk/quiver.hpp"

#include <algorithm>
#include <functional>

#include "qk/error.hpp"

namespace qk {

Quiver make_quiver(std::vector<std::string> vertices, const std::vector<ArrowSpec> &arrows) {
  Quiver q;
  q.vertices_ = std::move(vertices);
  for (VertexId v = 0; v < q.vertices_.size(); ++v)
    if (!q.vertex_index_.emplace(q.vertices_[v], v).second)
      throw ValidationError("duplicate vertex label \"" + q.vertices_[v] + "\"");
  q.into_.resize(q.vertices_.size());
  q.from_.resize(q.vertices_.size());
  for (const auto &spec : arrows) {
    auto s = q.vertex_index_.find(spec.from);
    auto t = q.vertex_index_.find(spec.to);
    if (s == q.vertex_index_.end() || t == q.vertex_index_.end())
      throw ValidationError("arrow \"" + spec.label + "\" has dangling endpoint " +
                            (s == q.vertex_index_.end() ? spec.from : spec.to));
    ArrowId id = q.arrows_.size();
    if (!q.arrow_index_.emplace(spec.label, id).second)
      throw ValidationError("duplicate arrow label \"" + spec.label + "\"");
    q.arrows_.push_back(Arrow{spec.label, s->second, t->second});
    q.from_[s->second].push_back(id);
    q.into_[t->second].push_back(id);
  }
  return q;
}

std::optional<VertexId> Quiver::find_vertex(const std::string &label) const {
  auto it = vertex_index_.find(label);
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<ArrowId> Quiver::find_arrow(const std::string &label) const {
  auto it = arrow_index_.find(label);
  if (it == arrow_index_.end()) return std::nullopt;
  return it->second;
}

// ---------------------------------------------------------------------------

Path Path::trivial(VertexId v) { return Path(v, v, {}); }

Path Path::of_arrow(const Quiver &q, ArrowId a) {
  const Arrow &arr = q.arrow(a);
  return Path(arr.source, arr.target, {a});
}

Path Path::from_word(const Quiver &q, std::vector<ArrowId> word) {
  if (word.empty()) throw ValidationError("empty arrow word; use Path::trivial");
  for (auto a : word)
    if (a >= q.arrow_count()) throw ValidationError("arrow id out of range");
  for (std::size_t j = 0; j + 1 < word.size(); ++j)
    if (q.arrow(word[j]).source != q.arrow(word[j + 1]).target)
      throw ValidationError("arrows " + q.arrow(word[j]).label + " and " + q.arrow(word[j + 1]).label +
                            " are not composable");
  VertexId s = q.arrow(word.back()).source;
  VertexId t = q.arrow(word.front()).target;
  return Path(s, t, std::move(word));
}

std::strong_ordering operator<=>(const Path &a, const Path &b) {
  if (auto c = a.length() <=> b.length(); c != 0) return c;
  if (auto c = a.arrows_ <=> b.arrows_; c != 0) return c;
  if (auto c = a.source_ <=> b.source_; c != 0) return c;
  return a.target_ <=> b.target_;
}

Path compose(const Path &p, const Path &q) {
  if (p.source() != q.target())
    throw ValidationError("cannot compose: path ends at vertex " + std::to_string(q.target()) +
                          " but the next starts at " + std::to_string(p.source()));
  if (q.is_trivial()) return p;
  if (p.is_trivial()) return q;
  std::vector<ArrowId> word = p.arrows();
  word.insert(word.end(), q.arrows().begin(), q.arrows().end());
  return Path(q.source(), p.target(), std::move(word));
}

std::string path_to_string(const Quiver &q, const Path &p) {
  if (p.is_trivial()) return "e_" + q.vertex_label(p.source());
  std::string out;
  for (std::size_t j = 0; j < p.length(); ++j) {
    if (j) out += "·";
    out += q.arrow(p.arrows()[j]).label;
  }
  return out;
}

std::vector<Path> enumerate_paths(const Quiver &q, std::size_t length, std::optional<VertexId> source,
                                  std::optional<VertexId> target) {
  std::vector<Path> out;
  if (length == 0) {
    for (VertexId v = 0; v < q.vertex_count(); ++v)
      if ((!source || *source == v) && (!target || *target == v)) out.push_back(Path::trivial(v));
    return out;
  }
  std::vector<ArrowId> word;
  word.reserve(length);
  // Build the written word left to right: each next arrow must end where the
  // previous one starts.
  std::function<void()> extend = [&]() {
    if (word.size() == length) {
      if (!source || q.arrow(word.back()).source == *source) out.push_back(Path::from_word(q, word));
      return;
    }
    auto try_arrow = [&](ArrowId a) {
      word.push_back(a);
      extend();
      word.pop_back();
    };
    if (word.empty()) {
      for (ArrowId a = 0; a < q.arrow_count(); ++a)
        if (!target || q.arrow(a).target == *target) try_arrow(a);
    } else {
      for (ArrowId a : q.arrows_into(q.arrow(word.back()).source)) try_arrow(a);
    }
  };
  extend();
  return out;
}

std::string opposite_label(const std::string &label) {
  static const std::string suffix = "^op";
  if (label.size() > suffix.size() && label.ends_with(suffix)) return label.substr(0, label.size() - suffix.size());
  return label + suffix;
}

Quiver opposite_quiver(const Quiver &q) {
  bool keep_labels = q.vertex_count() == 1;
  std::vector<ArrowSpec> arrows;
  for (const auto &a : q.arrows())
    arrows.push_back({keep_labels ? a.label : opposite_label(a.label), q.vertex_label(a.target),
                      q.vertex_label(a.source)});
  return make_quiver(q.vertices(), arrows);
}

std::string star_label(const std::string &label) { return label + "*"; }

Quiver double_quiver(const Quiver &q) {
  std::vector<ArrowSpec> arrows;
  for (const auto &a : q.arrows()) arrows.push_back({a.label, q.vertex_label(a.source), q.vertex_label(a.target)});
  for (const auto &a : q.arrows())
    arrows.push_back({star_label(a.label), q.vertex_label(a.target), q.vertex_label(a.source)});
  return make_quiver(q.vertices(), arrows);
}

// ---------------------------------------------------------------------------

void PathCombination::add(const Path &p, const Scalar &coef) {
  if (coef == 0) return;
  auto [it, inserted] = terms_.emplace(p, coef);
  if (inserted) return;
  it->second += coef;
  if (it->second == 0) terms_.erase(it);
}

std::string combination_to_string(const Quiver &q, const PathCombination &r) {
  if (r.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto &[p, c] : r.terms()) {
    std::string coef;
    if (c == 1) coef = first ? "" : " + ";
    else if (c == -1) coef = first ? "-" : " - ";
    else if (c < 0) coef = (first ? "-" : " - ") + to_string(Scalar(-c)) + " ";
    else coef = (first ? "" : " + ") + to_string(c) + " ";
    out += coef + path_to_string(q, p);
    first = false;
  }
  return out;
}

std::optional<std::string> validate_relation(const Quiver &q, const PathCombination &r) {
  if (r.empty()) return "empty relation";
  const Path &first = r.terms().begin()->first;
  for (const auto &[p, c] : r.terms()) {
    for (auto a : p.arrows())
      if (a >= q.arrow_count()) return std::string("relation uses an arrow outside the quiver");
    if (p.length() != first.length())
      return "relation " + combination_to_string(q, r) + " mixes path lengths " + std::to_string(first.length()) +
             " and " + std::to_string(p.length());
    if (p.source() != first.source() || p.target() != first.target())
      return "relation " + combination_to_string(q, r) + " has non-parallel terms: " + q.vertex_label(first.source()) +
             "->" + q.vertex_label(first.target()) + " vs " + q.vertex_label(p.source()) + "->" +
             q.vertex_label(p.target());
  }
  if (first.length() < 2)
    return "relation " + combination_to_string(q, r) + " has length " + std::to_string(first.length()) +
           " (relations need length >= 2)";
  return std::nullopt;
}

} // namespace qk
