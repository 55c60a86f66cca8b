#pragma once

#include <map>
#include <string>
#include <vector>

#include "qk/graded_algebra.hpp"
#include "qk/group.hpp"

namespace qk {

/// Arrow id -> group element.
struct WeightFunction {
  std::vector<GroupElem> weights;
  friend bool operator==(const WeightFunction &, const WeightFunction &) = default;
};

/// Throws ValidationError unless every arrow gets a known element.
WeightFunction make_weights(const Quiver &q, const FiniteGroup &g, const std::map<std::string, std::string> &by_label);
WeightFunction constant_weights(const Quiver &q, GroupElem g);

/// Weight of a_k ... a_1 is W(a_k) ... W(a_1), last-applied factor leftmost.
GroupElem path_weight(const Path &p, const FiniteGroup &g, const WeightFunction &w);
/// "W(a_k)·...·W(a_1)" spelled out with element labels.
std::string path_weight_expression(const Path &p, const FiniteGroup &g, const WeightFunction &w);

struct InhomogeneousRelation {
  std::size_t relation = 0;  // index into the relation list; the diagnostic counts from 1
  /// (term, "expression = value") for every term of the relation.
  std::vector<std::pair<std::string, std::string>> terms;
};

struct HomogeneityReport {
  std::vector<InhomogeneousRelation> failures;
  [[nodiscard]] bool ok() const { return failures.empty(); }
  [[nodiscard]] std::string diagnostic() const;
};

HomogeneityReport is_homogeneous_grading(const Presentation &p, const FiniteGroup &g, const WeightFunction &w);

/// Action of a finite group on a quiver by automorphisms.
struct GroupAction {
  std::vector<std::vector<VertexId>> vertex_perm;  // [g][v]
  std::vector<std::vector<ArrowId>> arrow_perm;    // [g][a]
};

/// Throws ValidationError unless each element acts by a quiver automorphism,
/// the identity acts trivially and g·(h·x) = (gh)·x.
void validate_action(const Quiver &q, const FiniteGroup &g, const GroupAction &action);
Path act_on_path(const Quiver &q, const GroupAction &action, GroupElem g, const Path &p);

/// Orbit quiver: vertices and arrows are orbits, labelled by their smallest member.
Quiver quotient_quiver(const Quiver &q, const FiniteGroup &g, const GroupAction &action);

/// Galois covering built from a G-grading. Vertices (v, g) have index
/// v·|G| + g and arrows (a, g): (i(a), g) -> (t(a), W(a)·g) have index a·|G| + g.
/// Each relation lifts once per start sheet. The deck group acts by
/// h·(v, g) = (v, g·h^-1).
struct Covering {
  Presentation base;
  Presentation presentation;
  FiniteGroup group;
  WeightFunction weights;
  GroupAction deck;
  std::vector<std::string> warnings;

  [[nodiscard]] VertexId vertex(VertexId v, GroupElem g) const { return v * group.order() + g; }
  [[nodiscard]] ArrowId arrow(ArrowId a, GroupElem g) const { return a * group.order() + g; }
  [[nodiscard]] VertexId base_vertex(VertexId x) const { return x / group.order(); }
  [[nodiscard]] GroupElem sheet(VertexId x) const { return x % group.order(); }
  [[nodiscard]] ArrowId base_arrow(ArrowId a) const { return a / group.order(); }
  /// Unique lift of a base path starting on the given sheet.
  [[nodiscard]] Path lift(const Path &p, GroupElem start) const;
  /// Projection of a covering path to the base.
  [[nodiscard]] Path project(const Path &p) const;
};

std::string lifted_label(const std::string &base_label, const std::string &sheet_label);

/// Throws HomogeneityError carrying the homogeneity diagnostic.
Covering build_covering(const Presentation &p, const FiniteGroup &g, const WeightFunction &w);
/// Z_n covering with every arrow weighted by the generator. n = 1 is accepted
/// with a warning; n = 0 is rejected.
Covering cyclic_covering(const Presentation &p, std::size_t n);

/// Orbit quiver of the deck action projects isomorphically onto the base quiver.
bool deck_quotient_recovers_base(const Covering &c);

} // namespace qk
