#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qk/covering.hpp"
#include "qk/graded_algebra.hpp"
#include "qk/group.hpp"

namespace qk {

/// Group grading attached to a presentation document: a group description and
/// an element label for every arrow.
struct GradingSpec {
  GroupSpec group;
  std::map<std::string, std::string> weights;
  friend bool operator==(const GradingSpec &, const GradingSpec &) = default;
};

struct CorpusEntry {
  std::string name;
  Presentation presentation;
  std::optional<GradingSpec> grading;
  std::vector<std::string> warnings;
};

/// One vertex "1", loops a1..am, relations a_i^2 and a_i a_j + a_j a_i (i < j).
/// Carries the Z_2 grading with every arrow odd. Requires m >= 1.
CorpusEntry exterior(std::size_t m);
/// Z_n cyclic covering of exterior(m), vertices "0".."n-1", arrows "(a_i,r)": r -> r+1.
CorpusEntry example1(std::size_t m, std::size_t n);
/// Arrows a_1..a_l go r -> r+1 and a_{l+1}..a_m go r+1 -> r. Requires 1 <= l <= m.
CorpusEntry example2(std::size_t m, std::size_t l, std::size_t n);
/// Z_2 x Z_n covering of exterior(2) on vertices "(1,r)", "(1',r)".
CorpusEntry example3(std::size_t n);
/// D_{2n} covering of exterior(2). Only n = 2 gives a homogeneous grading; other
/// n throw HomogeneityError with the failing relation.
CorpusEntry example4(std::size_t n);
/// Preprojective algebra on the double quiver of a connected quiver without
/// oriented cycles; one relation per vertex.
CorpusEntry preprojective(const Quiver &tree);
/// Trivial extension presentation for a tree whose vertices are all sources or
/// sinks. Carries the Z_2 grading with starred arrows odd.
CorpusEntry trivial_extension_dual(const Quiver &tree);
CorpusEntry path_algebra(const Quiver &q);
/// All paths of length 2 as relations.
CorpusEntry radical_square_zero(const Quiver &q);
/// One loop x with x^3 = 0.
CorpusEntry loop_cubed();

/// Quiver descriptions: "A:n" (1 -> 2 -> ... -> n), "zigzag:n" (alternating
/// orientation), "star:k" (leaves 1..k pointing to centre 0), "loops:m".
Quiver parse_quiver_spec(const std::string &spec);
std::optional<std::string> dynkin_type(const Quiver &tree);

/// Names accepted by build_corpus_entry with their argument shapes.
std::vector<std::pair<std::string, std::string>> corpus_catalog();
/// Dispatches on the catalog name. Quiver arguments go through
/// parse_quiver_spec; "file:PATH" loads a presentation document's quiver.
CorpusEntry build_corpus_entry(const std::string &name, const std::vector<std::string> &args);

/// Presentation of a builder entry next to the covering it should equal, with
/// the label correspondence from the builder to the covering.
struct CoveringReference {
  Covering covering;
  std::map<std::string, std::string> vertex_map;
  std::map<std::string, std::string> arrow_map;
};
/// Available for example1, example2, example3 and example4(2).
CoveringReference covering_reference(const std::string &name, const std::vector<std::size_t> &params);

/// nullopt iff the maps are bijections carrying a's quiver onto b's and a's
/// relations onto b's relations (as a multiset). Otherwise a diagnostic.
std::optional<std::string> compare_under_renaming(const Presentation &a, const Presentation &b,
                                                  const std::map<std::string, std::string> &vertex_map,
                                                  const std::map<std::string, std::string> &arrow_map);

/// Builds the entry and its covering reference and compares them.
std::optional<std::string> builder_equivalence(const std::string &name, const std::vector<std::size_t> &params);

} // namespace qk
