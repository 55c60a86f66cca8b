#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qk {

using GroupElem = std::size_t;

/// Finite group given by its multiplication table.
class FiniteGroup {
public:
  /// Validates closure, associativity, identity and inverses.
  FiniteGroup(std::vector<std::string> labels, std::vector<std::vector<GroupElem>> table);

  [[nodiscard]] std::size_t order() const { return labels_.size(); }
  [[nodiscard]] const std::vector<std::string> &labels() const { return labels_; }
  [[nodiscard]] const std::string &label(GroupElem g) const { return labels_.at(g); }
  [[nodiscard]] std::optional<GroupElem> find(const std::string &label) const;
  [[nodiscard]] GroupElem multiply(GroupElem g, GroupElem h) const { return table_[g][h]; }
  [[nodiscard]] GroupElem identity() const { return identity_; }
  [[nodiscard]] GroupElem inverse(GroupElem g) const { return inverse_[g]; }
  [[nodiscard]] bool is_abelian() const;
  [[nodiscard]] const std::vector<std::vector<GroupElem>> &table() const { return table_; }

private:
  std::vector<std::string> labels_;
  std::vector<std::vector<GroupElem>> table_;
  GroupElem identity_ = 0;
  std::vector<GroupElem> inverse_;
};

/// Z_n with elements "0" .. "n-1"; the element "1" generates.
FiniteGroup cyclic_group(std::size_t n);
/// G x H with elements "(g,h)", ordered g-major.
FiniteGroup direct_product(const FiniteGroup &g, const FiniteGroup &h);
/// Order 2n, elements c^k s^e labelled "1", "c", "c^2", ..., "s", "cs", "c^2s";
/// c has order n, s has order 2, and s·c·s = c^-1. Requires n >= 2.
FiniteGroup dihedral_group(std::size_t n);

/// Brute-force isomorphism test (backtracking over bijections).
bool isomorphic(const FiniteGroup &a, const FiniteGroup &b);

/// Group description "cyclic:n" | "dihedral:n" | "product:SPEC,SPEC".
struct GroupSpec {
  enum class Kind { Cyclic, Dihedral, Product };
  Kind kind = Kind::Cyclic;
  std::size_t n = 1;
  std::vector<GroupSpec> factors;

  [[nodiscard]] FiniteGroup build() const;
  [[nodiscard]] std::string to_string() const;
  friend bool operator==(const GroupSpec &, const GroupSpec &) = default;
};

/// Throws ValidationError on malformed text.
GroupSpec parse_group_spec(std::string_view text);

} // namespace qk
