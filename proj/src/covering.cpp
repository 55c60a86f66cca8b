#include "qk/covering.hpp"

#include <set>

#include "qk/error.hpp"

namespace qk {

WeightFunction make_weights(const Quiver &q, const FiniteGroup &g, const std::map<std::string, std::string> &by_label) {
  WeightFunction w;
  for (const auto &[arrow, elem] : by_label)
    if (!q.find_arrow(arrow)) throw ValidationError("weight given for unknown arrow \"" + arrow + "\"");
  for (const auto &a : q.arrows()) {
    auto it = by_label.find(a.label);
    if (it == by_label.end()) throw ValidationError("no weight for arrow \"" + a.label + "\"");
    auto e = g.find(it->second);
    if (!e) throw ValidationError("weight \"" + it->second + "\" of arrow \"" + a.label + "\" is not a group element");
    w.weights.push_back(*e);
  }
  return w;
}

WeightFunction constant_weights(const Quiver &q, GroupElem g) {
  return WeightFunction{std::vector<GroupElem>(q.arrow_count(), g)};
}

GroupElem path_weight(const Path &p, const FiniteGroup &g, const WeightFunction &w) {
  GroupElem out = g.identity();
  for (ArrowId a : p.arrows()) out = g.multiply(out, w.weights.at(a));
  return out;
}

std::string path_weight_expression(const Path &p, const FiniteGroup &g, const WeightFunction &w) {
  if (p.is_trivial()) return g.label(g.identity());
  std::string out;
  for (std::size_t j = 0; j < p.length(); ++j) {
    if (j) out += "·";
    out += g.label(w.weights.at(p.arrows()[j]));
  }
  return out;
}

std::string HomogeneityReport::diagnostic() const {
  std::string out;
  for (const auto &f : failures) {
    if (!out.empty()) out += "; ";
    out += "relation " + std::to_string(f.relation + 1) + " is not homogeneous:";
    for (std::size_t k = 0; k < f.terms.size(); ++k)
      out += (k ? ", " : " ") + f.terms[k].first + " has weight " + f.terms[k].second;
  }
  return out;
}

HomogeneityReport is_homogeneous_grading(const Presentation &p, const FiniteGroup &g, const WeightFunction &w) {
  if (w.weights.size() != p.quiver.arrow_count()) throw ValidationError("weight function is not total");
  HomogeneityReport report;
  for (std::size_t i = 0; i < p.relations.size(); ++i) {
    std::set<GroupElem> seen;
    for (const auto &[path, c] : p.relations[i].terms()) seen.insert(path_weight(path, g, w));
    if (seen.size() <= 1) continue;
    InhomogeneousRelation bad{i, {}};
    for (const auto &[path, c] : p.relations[i].terms())
      bad.terms.emplace_back(path_to_string(p.quiver, path),
                             path_weight_expression(path, g, w) + " = " + g.label(path_weight(path, g, w)));
    report.failures.push_back(std::move(bad));
  }
  return report;
}

// ---------------------------------------------------------------------------

void validate_action(const Quiver &q, const FiniteGroup &g, const GroupAction &action) {
  const std::size_t n = g.order();
  if (action.vertex_perm.size() != n || action.arrow_perm.size() != n)
    throw ValidationError("group action must list one automorphism per element");
  for (GroupElem x = 0; x < n; ++x) {
    const auto &vp = action.vertex_perm[x];
    const auto &ap = action.arrow_perm[x];
    if (vp.size() != q.vertex_count() || ap.size() != q.arrow_count())
      throw ValidationError("automorphism has wrong size");
    if (std::set<VertexId>(vp.begin(), vp.end()).size() != vp.size() ||
        std::set<ArrowId>(ap.begin(), ap.end()).size() != ap.size())
      throw ValidationError("automorphism of " + g.label(x) + " is not a bijection");
    for (ArrowId a = 0; a < q.arrow_count(); ++a) {
      if (ap[a] >= q.arrow_count()) throw ValidationError("arrow image out of range");
      const Arrow &src = q.arrow(a);
      const Arrow &img = q.arrow(ap[a]);
      if (img.source != vp[src.source] || img.target != vp[src.target])
        throw ValidationError("element " + g.label(x) + " does not respect the endpoints of " + src.label);
    }
  }
  for (VertexId v = 0; v < q.vertex_count(); ++v)
    if (action.vertex_perm[g.identity()][v] != v) throw ValidationError("identity must act trivially");
  for (ArrowId a = 0; a < q.arrow_count(); ++a)
    if (action.arrow_perm[g.identity()][a] != a) throw ValidationError("identity must act trivially");
  for (GroupElem x = 0; x < n; ++x)
    for (GroupElem y = 0; y < n; ++y) {
      GroupElem xy = g.multiply(x, y);
      for (VertexId v = 0; v < q.vertex_count(); ++v)
        if (action.vertex_perm[x][action.vertex_perm[y][v]] != action.vertex_perm[xy][v])
          throw ValidationError("action law fails on vertices");
      for (ArrowId a = 0; a < q.arrow_count(); ++a)
        if (action.arrow_perm[x][action.arrow_perm[y][a]] != action.arrow_perm[xy][a])
          throw ValidationError("action law fails on arrows");
    }
}

Path act_on_path(const Quiver &q, const GroupAction &action, GroupElem g, const Path &p) {
  if (p.is_trivial()) return Path::trivial(action.vertex_perm.at(g).at(p.source()));
  std::vector<ArrowId> word;
  word.reserve(p.length());
  for (ArrowId a : p.arrows()) word.push_back(action.arrow_perm.at(g).at(a));
  return Path::from_word(q, std::move(word));
}

Quiver quotient_quiver(const Quiver &q, const FiniteGroup &g, const GroupAction &action) {
  std::vector<VertexId> vrep(q.vertex_count());
  for (VertexId v = 0; v < q.vertex_count(); ++v) {
    vrep[v] = v;
    for (GroupElem x = 0; x < g.order(); ++x) vrep[v] = std::min(vrep[v], action.vertex_perm[x][v]);
  }
  std::vector<std::string> vertices;
  for (VertexId v = 0; v < q.vertex_count(); ++v)
    if (vrep[v] == v) vertices.push_back(q.vertex_label(v));
  std::vector<ArrowSpec> arrows;
  for (ArrowId a = 0; a < q.arrow_count(); ++a) {
    ArrowId rep = a;
    for (GroupElem x = 0; x < g.order(); ++x) rep = std::min(rep, action.arrow_perm[x][a]);
    if (rep != a) continue;
    arrows.push_back({q.arrow(a).label, q.vertex_label(vrep[q.arrow(a).source]),
                      q.vertex_label(vrep[q.arrow(a).target])});
  }
  return make_quiver(std::move(vertices), arrows);
}

// ---------------------------------------------------------------------------

std::string lifted_label(const std::string &base_label, const std::string &sheet_label) {
  return "(" + base_label + "," + sheet_label + ")";
}

Path Covering::lift(const Path &p, GroupElem start) const {
  if (p.is_trivial()) return Path::trivial(vertex(p.source(), start));
  std::vector<ArrowId> word(p.length());
  GroupElem sheet_now = start;
  for (std::size_t j = p.length(); j-- > 0;) {
    ArrowId a = p.arrows()[j];
    word[j] = arrow(a, sheet_now);
    sheet_now = group.multiply(weights.weights[a], sheet_now);
  }
  return Path::from_word(presentation.quiver, std::move(word));
}

Path Covering::project(const Path &p) const {
  if (p.is_trivial()) return Path::trivial(base_vertex(p.source()));
  std::vector<ArrowId> word;
  for (ArrowId a : p.arrows()) word.push_back(base_arrow(a));
  return Path::from_word(base.quiver, std::move(word));
}

Covering build_covering(const Presentation &p, const FiniteGroup &g, const WeightFunction &w) {
  HomogeneityReport report = is_homogeneous_grading(p, g, w);
  if (!report.ok()) throw HomogeneityError(report.diagnostic());
  const Quiver &q = p.quiver;
  const std::size_t n = g.order();

  std::vector<std::string> vertices;
  for (VertexId v = 0; v < q.vertex_count(); ++v)
    for (GroupElem x = 0; x < n; ++x) vertices.push_back(lifted_label(q.vertex_label(v), g.label(x)));
  std::vector<ArrowSpec> arrows;
  for (ArrowId a = 0; a < q.arrow_count(); ++a)
    for (GroupElem x = 0; x < n; ++x) {
      const Arrow &arr = q.arrow(a);
      arrows.push_back({lifted_label(arr.label, g.label(x)), vertices[arr.source * n + x],
                        vertices[arr.target * n + g.multiply(w.weights[a], x)]});
    }

  Covering c{p, Presentation{make_quiver(vertices, arrows), {}}, g, w, {}, {}};
  std::vector<PathCombination> relations;
  for (const auto &rel : p.relations)
    for (GroupElem x = 0; x < n; ++x) {
      PathCombination lifted;
      for (const auto &[path, coef] : rel.terms()) lifted.add(c.lift(path, x), coef);
      relations.push_back(std::move(lifted));
    }
  c.presentation = make_presentation(c.presentation.quiver, std::move(relations));

  c.deck.vertex_perm.assign(n, std::vector<VertexId>(c.presentation.quiver.vertex_count()));
  c.deck.arrow_perm.assign(n, std::vector<ArrowId>(c.presentation.quiver.arrow_count()));
  for (GroupElem h = 0; h < n; ++h) {
    GroupElem hinv = g.inverse(h);
    for (VertexId v = 0; v < q.vertex_count(); ++v)
      for (GroupElem x = 0; x < n; ++x) c.deck.vertex_perm[h][c.vertex(v, x)] = c.vertex(v, g.multiply(x, hinv));
    for (ArrowId a = 0; a < q.arrow_count(); ++a)
      for (GroupElem x = 0; x < n; ++x) c.deck.arrow_perm[h][c.arrow(a, x)] = c.arrow(a, g.multiply(x, hinv));
  }
  return c;
}

Covering cyclic_covering(const Presentation &p, std::size_t n) {
  if (n < 1) throw ValidationError("cyclic covering needs n >= 1");
  FiniteGroup g = cyclic_group(n);
  Covering c = build_covering(p, g, constant_weights(p.quiver, n == 1 ? g.identity() : 1));
  if (n == 1) c.warnings.push_back("n = 1 gives the identity covering");
  return c;
}

bool deck_quotient_recovers_base(const Covering &c) {
  const Quiver &cq = c.presentation.quiver;
  Quiver quotient = quotient_quiver(cq, c.group, c.deck);
  const Quiver &base = c.base.quiver;
  if (quotient.vertex_count() != base.vertex_count() || quotient.arrow_count() != base.arrow_count()) return false;
  std::set<VertexId> seen_v;
  for (const auto &label : quotient.vertices()) seen_v.insert(c.base_vertex(*cq.find_vertex(label)));
  if (seen_v.size() != base.vertex_count()) return false;
  std::set<ArrowId> seen_a;
  for (const auto &arr : quotient.arrows()) {
    ArrowId a = c.base_arrow(*cq.find_arrow(arr.label));
    VertexId s = c.base_vertex(*cq.find_vertex(quotient.vertex_label(arr.source)));
    VertexId t = c.base_vertex(*cq.find_vertex(quotient.vertex_label(arr.target)));
    if (base.arrow(a).source != s || base.arrow(a).target != t) return false;
    seen_a.insert(a);
  }
  return seen_a.size() == base.arrow_count();
}

} // namespace qk
