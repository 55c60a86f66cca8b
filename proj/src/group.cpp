#include "qk/group.hpp"

#include <functional>

#include "qk/error.hpp"

namespace qk {

FiniteGroup::FiniteGroup(std::vector<std::string> labels, std::vector<std::vector<GroupElem>> table)
    : labels_(std::move(labels)), table_(std::move(table)) {
  const std::size_t n = labels_.size();
  if (n == 0) throw ValidationError("group must be nonempty");
  if (table_.size() != n) throw ValidationError("group table has wrong size");
  for (const auto &row : table_) {
    if (row.size() != n) throw ValidationError("group table has wrong size");
    for (auto x : row)
      if (x >= n) throw ValidationError("group table not closed");
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
          throw ValidationError("group table not associative at (" + labels_[a] + "," + labels_[b] + "," +
                                labels_[c] + ")");
  bool found = false;
  for (std::size_t e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (std::size_t g = 0; g < n && ok; ++g) ok = table_[e][g] == g && table_[g][e] == g;
    if (ok) {
      identity_ = e;
      found = true;
    }
  }
  if (!found) throw ValidationError("group table has no identity");
  inverse_.assign(n, n);
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h)
      if (table_[g][h] == identity_ && table_[h][g] == identity_) inverse_[g] = h;
  for (std::size_t g = 0; g < n; ++g)
    if (inverse_[g] == n) throw ValidationError("element " + labels_[g] + " has no inverse");
}

std::optional<GroupElem> FiniteGroup::find(const std::string &label) const {
  for (GroupElem g = 0; g < labels_.size(); ++g)
    if (labels_[g] == label) return g;
  return std::nullopt;
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t a = 0; a < order(); ++a)
    for (std::size_t b = 0; b < order(); ++b)
      if (table_[a][b] != table_[b][a]) return false;
  return true;
}

FiniteGroup cyclic_group(std::size_t n) {
  if (n < 1) throw ValidationError("cyclic group needs n >= 1");
  std::vector<std::string> labels;
  std::vector<std::vector<GroupElem>> table(n, std::vector<GroupElem>(n));
  for (std::size_t a = 0; a < n; ++a) {
    labels.push_back(std::to_string(a));
    for (std::size_t b = 0; b < n; ++b) table[a][b] = (a + b) % n;
  }
  return FiniteGroup(std::move(labels), std::move(table));
}

FiniteGroup direct_product(const FiniteGroup &g, const FiniteGroup &h) {
  const std::size_t m = h.order();
  const std::size_t n = g.order() * m;
  std::vector<std::string> labels;
  std::vector<std::vector<GroupElem>> table(n, std::vector<GroupElem>(n));
  for (std::size_t a = 0; a < n; ++a) {
    labels.push_back("(" + g.label(a / m) + "," + h.label(a % m) + ")");
    for (std::size_t b = 0; b < n; ++b)
      table[a][b] = g.multiply(a / m, b / m) * m + h.multiply(a % m, b % m);
  }
  return FiniteGroup(std::move(labels), std::move(table));
}

FiniteGroup dihedral_group(std::size_t n) {
  if (n < 2) throw ValidationError("dihedral group needs n >= 2");
  // c^k s^e has index k + n e; (c^a s^e)(c^b s^f) = c^(a + (-1)^e b) s^(e+f).
  auto label = [](std::size_t k, std::size_t e) {
    std::string out;
    if (k == 1) out = "c";
    else if (k > 1) out = "c^" + std::to_string(k);
    if (e) out += "s";
    return out.empty() ? std::string("1") : out;
  };
  std::vector<std::string> labels;
  std::vector<std::vector<GroupElem>> table(2 * n, std::vector<GroupElem>(2 * n));
  for (std::size_t x = 0; x < 2 * n; ++x) {
    std::size_t a = x % n, e = x / n;
    labels.push_back(label(a, e));
    for (std::size_t y = 0; y < 2 * n; ++y) {
      std::size_t b = y % n, f = y / n;
      std::size_t k = e ? (a + n - b) % n : (a + b) % n;
      table[x][y] = k + n * ((e + f) % 2);
    }
  }
  return FiniteGroup(std::move(labels), std::move(table));
}

bool isomorphic(const FiniteGroup &a, const FiniteGroup &b) {
  const std::size_t n = a.order();
  if (n != b.order()) return false;
  std::vector<GroupElem> image(n, n);
  std::vector<bool> used(n, false);
  // Assign images in index order and check the table on every assigned pair.
  std::function<bool(std::size_t)> extend = [&](std::size_t x) -> bool {
    if (x == n) {
      for (std::size_t u = 0; u < n; ++u)
        for (std::size_t w = 0; w < n; ++w)
          if (image[a.multiply(u, w)] != b.multiply(image[u], image[w])) return false;
      return true;
    }
    for (GroupElem y = 0; y < n; ++y) {
      if (used[y]) continue;
      image[x] = y;
      bool ok = true;
      for (std::size_t z = 0; z <= x && ok; ++z) {
        GroupElem xz = a.multiply(x, z), zx = a.multiply(z, x);
        if (xz <= x && image[xz] != b.multiply(image[x], image[z])) ok = false;
        if (zx <= x && image[zx] != b.multiply(image[z], image[x])) ok = false;
      }
      if (!ok) continue;
      used[y] = true;
      if (extend(x + 1)) return true;
      used[y] = false;
    }
    image[x] = n;
    return false;
  };
  return extend(0);
}

// ---------------------------------------------------------------------------

FiniteGroup GroupSpec::build() const {
  switch (kind) {
  case Kind::Cyclic:
    return cyclic_group(n);
  case Kind::Dihedral:
    return dihedral_group(n);
  case Kind::Product:
    if (factors.size() != 2) throw ValidationError("product group needs two factors");
    return direct_product(factors[0].build(), factors[1].build());
  }
  throw ValidationError("unknown group kind");
}

std::string GroupSpec::to_string() const {
  switch (kind) {
  case Kind::Cyclic:
    return "cyclic:" + std::to_string(n);
  case Kind::Dihedral:
    return "dihedral:" + std::to_string(n);
  case Kind::Product:
    return "product:" + factors.at(0).to_string() + "," + factors.at(1).to_string();
  }
  return {};
}

namespace {

GroupSpec parse_spec(std::string_view text, std::size_t &pos) {
  auto fail = [&](const std::string &why) {
    throw ValidationError("bad group spec \"" + std::string(text) + "\": " + why);
  };
  auto colon = text.find(':', pos);
  if (colon == std::string_view::npos) fail("missing ':'");
  std::string_view kind = text.substr(pos, colon - pos);
  pos = colon + 1;
  GroupSpec spec;
  if (kind == "product") {
    spec.kind = GroupSpec::Kind::Product;
    spec.factors.push_back(parse_spec(text, pos));
    if (pos >= text.size() || text[pos] != ',') fail("product needs two factors separated by ','");
    ++pos;
    spec.factors.push_back(parse_spec(text, pos));
    return spec;
  }
  if (kind == "cyclic") spec.kind = GroupSpec::Kind::Cyclic;
  else if (kind == "dihedral") spec.kind = GroupSpec::Kind::Dihedral;
  else fail("unknown kind \"" + std::string(kind) + "\"");
  std::size_t start = pos;
  while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
  if (pos == start) fail("missing order");
  spec.n = std::stoul(std::string(text.substr(start, pos - start)));
  if (spec.kind == GroupSpec::Kind::Cyclic && spec.n < 1) fail("cyclic order must be >= 1");
  if (spec.kind == GroupSpec::Kind::Dihedral && spec.n < 2) fail("dihedral parameter must be >= 2");
  return spec;
}

} // namespace

GroupSpec parse_group_spec(std::string_view text) {
  std::size_t pos = 0;
  GroupSpec spec = parse_spec(text, pos);
  if (pos != text.size()) throw ValidationError("bad group spec \"" + std::string(text) + "\": trailing text");
  return spec;
}

} // namespace qk
