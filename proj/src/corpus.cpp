#include "qk/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "qk/error.hpp"
#include "qk/serialization.hpp"

namespace qk {

namespace {

using Term = std::pair<Scalar, std::vector<std::string>>;  // written order, last applied first

PathCombination relation(const Quiver &q, const std::vector<Term> &terms) {
  PathCombination out;
  for (const auto &[coef, labels] : terms) {
    std::vector<ArrowId> word;
    for (const auto &l : labels) {
      auto a = q.find_arrow(l);
      if (!a) throw Error("internal: unknown arrow " + l);
      word.push_back(*a);
    }
    out.add(Path::from_word(q, word), coef);
  }
  return out;
}

std::string num(std::size_t r) { return std::to_string(r); }
std::string base_arrow(std::size_t i) { return "a" + num(i); }
std::string lab(const std::string &arrow, std::size_t r) { return "(" + arrow + "," + num(r) + ")"; }

std::size_t mod(long long x, std::size_t n) {
  const auto nn = static_cast<long long>(n);
  return static_cast<std::size_t>(((x % nn) + nn) % nn);
}

std::vector<std::string> cyclic_vertices(std::size_t n) {
  std::vector<std::string> v;
  for (std::size_t r = 0; r < n; ++r) v.push_back(num(r));
  return v;
}

void require(bool ok, const std::string &message) {
  if (!ok) throw ValidationError(message);
}

bool connected(const Quiver &q) {
  const std::size_t n = q.vertex_count();
  if (n == 0) return false;
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> root = [&](std::size_t x) { return parent[x] == x ? x : parent[x] = root(parent[x]); };
  for (const auto &a : q.arrows()) parent[root(a.source)] = root(a.target);
  for (std::size_t v = 0; v < n; ++v)
    if (root(v) != root(0)) return false;
  return true;
}

bool underlying_tree(const Quiver &q) {
  if (!connected(q) || q.arrow_count() + 1 != q.vertex_count()) return false;
  return std::none_of(q.arrows().begin(), q.arrows().end(), [](const Arrow &a) { return a.source == a.target; });
}

bool has_oriented_cycle(const Quiver &q) {
  const std::size_t n = q.vertex_count();
  std::vector<std::size_t> indeg(n, 0);
  for (const auto &a : q.arrows()) ++indeg[a.target];
  std::vector<VertexId> stack;
  for (VertexId v = 0; v < n; ++v)
    if (indeg[v] == 0) stack.push_back(v);
  std::size_t seen = 0;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    ++seen;
    for (ArrowId a : q.arrows_from(v))
      if (--indeg[q.arrow(a).target] == 0) stack.push_back(q.arrow(a).target);
  }
  return seen != n;
}

} // namespace

// ---------------------------------------------------------------------------

CorpusEntry exterior(std::size_t m) {
  require(m >= 1, "exterior algebra needs m >= 1");
  std::vector<ArrowSpec> arrows;
  for (std::size_t i = 1; i <= m; ++i) arrows.push_back({base_arrow(i), "1", "1"});
  Quiver q = make_quiver({"1"}, arrows);
  std::vector<PathCombination> rels;
  for (std::size_t i = 1; i <= m; ++i) rels.push_back(relation(q, {{1, {base_arrow(i), base_arrow(i)}}}));
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = i + 1; j <= m; ++j)
      rels.push_back(relation(q, {{1, {base_arrow(i), base_arrow(j)}}, {1, {base_arrow(j), base_arrow(i)}}}));
  GradingSpec grading{GroupSpec{GroupSpec::Kind::Cyclic, 2, {}}, {}};
  for (std::size_t i = 1; i <= m; ++i) grading.weights[base_arrow(i)] = "1";
  return {"exterior(" + num(m) + ")", make_presentation(std::move(q), std::move(rels)), grading, {}};
}

CorpusEntry example1(std::size_t m, std::size_t n) {
  require(m >= 1 && n >= 1, "example1 needs m >= 1 and n >= 1");
  std::vector<ArrowSpec> arrows;
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t r = 0; r < n; ++r) arrows.push_back({lab(base_arrow(i), r), num(r), num((r + 1) % n)});
  Quiver q = make_quiver(cyclic_vertices(n), arrows);
  std::vector<PathCombination> rels;
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t r = 0; r < n; ++r)
      rels.push_back(relation(q, {{1, {lab(base_arrow(i), (r + 1) % n), lab(base_arrow(i), r)}}}));
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = i + 1; j <= m; ++j)
      for (std::size_t r = 0; r < n; ++r)
        rels.push_back(relation(q, {{1, {lab(base_arrow(i), (r + 1) % n), lab(base_arrow(j), r)}},
                                    {1, {lab(base_arrow(j), (r + 1) % n), lab(base_arrow(i), r)}}}));
  CorpusEntry e{"example1(" + num(m) + "," + num(n) + ")", make_presentation(std::move(q), std::move(rels)), {}, {}};
  if (n == 1) e.warnings.push_back("n = 1 gives the trivial covering");
  return e;
}

CorpusEntry example2(std::size_t m, std::size_t l, std::size_t n) {
  require(m >= 1 && l >= 1 && l <= m && n >= 1, "example2 needs 1 <= l <= m and n >= 1");
  auto nx = [n](long long r) { return mod(r, n); };
  std::vector<ArrowSpec> arrows;
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t r = 0; r < n; ++r) {
      if (i <= l)
        arrows.push_back({lab(base_arrow(i), r), num(r), num(nx(static_cast<long long>(r) + 1))});
      else
        arrows.push_back({lab(base_arrow(i), r), num(nx(static_cast<long long>(r) + 1)), num(r)});
    }
  Quiver q = make_quiver(cyclic_vertices(n), arrows);
  auto A = [&](std::size_t i, long long r) { return lab(base_arrow(i), nx(r)); };
  std::vector<PathCombination> rels;
  for (std::size_t i = 1; i <= l; ++i)
    for (long long r = 0; r < static_cast<long long>(n); ++r) rels.push_back(relation(q, {{1, {A(i, r + 1), A(i, r)}}}));
  for (std::size_t i = l + 1; i <= m; ++i)
    for (long long r = 0; r < static_cast<long long>(n); ++r) rels.push_back(relation(q, {{1, {A(i, r), A(i, r + 1)}}}));
  for (std::size_t i = 1; i <= l; ++i)
    for (std::size_t j = i + 1; j <= l; ++j)
      for (long long r = 0; r < static_cast<long long>(n); ++r)
        rels.push_back(relation(q, {{1, {A(j, r + 1), A(i, r)}}, {1, {A(i, r + 1), A(j, r)}}}));
  for (std::size_t i = l + 1; i <= m; ++i)
    for (std::size_t j = i + 1; j <= m; ++j)
      for (long long r = 0; r < static_cast<long long>(n); ++r)
        rels.push_back(relation(q, {{1, {A(j, r), A(i, r + 1)}}, {1, {A(i, r), A(j, r + 1)}}}));
  for (std::size_t i = 1; i <= l; ++i)
    for (std::size_t j = l + 1; j <= m; ++j)
      for (long long r = 0; r < static_cast<long long>(n); ++r)
        rels.push_back(relation(q, {{1, {A(j, r), A(i, r)}}, {1, {A(i, r - 1), A(j, r - 1)}}}));
  CorpusEntry e{"example2(" + num(m) + "," + num(l) + "," + num(n) + ")", make_presentation(std::move(q), std::move(rels)),
                {}, {}};
  if (n == 1) e.warnings.push_back("n = 1 gives the trivial covering");
  return e;
}

namespace {

std::string v1(long long r, std::size_t n) { return "(1," + num(mod(r, n)) + ")"; }
std::string v1p(long long r, std::size_t n) { return "(1'," + num(mod(r, n)) + ")"; }

/// Shared shape of examples 3 and 4: arrows a1, a1', a2, a2' per sheet.
/// `a2_prime_forward` says whether (a2', r) goes r -> r+1 or r+1 -> r.
Quiver two_sheet_quiver(std::size_t n, bool a2_prime_forward) {
  std::vector<std::string> vertices;
  for (std::size_t r = 0; r < n; ++r) vertices.push_back(v1(static_cast<long long>(r), n));
  for (std::size_t r = 0; r < n; ++r) vertices.push_back(v1p(static_cast<long long>(r), n));
  std::vector<ArrowSpec> arrows;
  for (long long r = 0; r < static_cast<long long>(n); ++r) arrows.push_back({lab("a1", mod(r, n)), v1(r, n), v1p(r, n)});
  for (long long r = 0; r < static_cast<long long>(n); ++r) arrows.push_back({lab("a1'", mod(r, n)), v1p(r, n), v1(r, n)});
  for (long long r = 0; r < static_cast<long long>(n); ++r) arrows.push_back({lab("a2", mod(r, n)), v1(r, n), v1(r + 1, n)});
  for (long long r = 0; r < static_cast<long long>(n); ++r) {
    if (a2_prime_forward)
      arrows.push_back({lab("a2'", mod(r, n)), v1p(r, n), v1p(r + 1, n)});
    else
      arrows.push_back({lab("a2'", mod(r, n)), v1p(r + 1, n), v1p(r, n)});
  }
  return make_quiver(vertices, arrows);
}

} // namespace

CorpusEntry example3(std::size_t n) {
  require(n >= 1, "example3 needs n >= 1");
  Quiver q = two_sheet_quiver(n, true);
  auto L = [n](const char *a, long long r) { return lab(a, mod(r, n)); };
  std::vector<PathCombination> rels;
  for (long long r = 0; r < static_cast<long long>(n); ++r) {
    rels.push_back(relation(q, {{1, {L("a1'", r), L("a1", r)}}}));
    rels.push_back(relation(q, {{1, {L("a2", r + 1), L("a2", r)}}}));
    rels.push_back(relation(q, {{1, {L("a1", r + 1), L("a2", r)}}, {1, {L("a2'", r), L("a1", r)}}}));
    rels.push_back(relation(q, {{1, {L("a1", r), L("a1'", r)}}}));
    rels.push_back(relation(q, {{1, {L("a2'", r + 1), L("a2'", r)}}}));
    rels.push_back(relation(q, {{1, {L("a1'", r + 1), L("a2'", r)}}, {1, {L("a2", r), L("a1'", r)}}}));
  }
  return {"example3(" + num(n) + ")", make_presentation(std::move(q), std::move(rels)), {}, {}};
}

CorpusEntry example4(std::size_t n) {
  require(n >= 2, "example4 needs n >= 2");
  if (n != 2) {
    CorpusEntry base = exterior(2);
    FiniteGroup g = dihedral_group(n);
    WeightFunction w = make_weights(base.presentation.quiver, g, {{"a1", "s"}, {"a2", "c"}});
    HomogeneityReport rep = is_homogeneous_grading(base.presentation, g, w);
    throw HomogeneityError(rep.diagnostic());
  }
  Quiver q = two_sheet_quiver(n, false);
  auto L = [n](const char *a, long long r) { return lab(a, mod(r, n)); };
  std::vector<PathCombination> rels;
  for (long long r = 0; r < static_cast<long long>(n); ++r) {
    rels.push_back(relation(q, {{1, {L("a1'", r), L("a1", r)}}}));
    rels.push_back(relation(q, {{1, {L("a2", r + 1), L("a2", r)}}}));
    rels.push_back(relation(q, {{1, {L("a1", r + 1), L("a2", r)}}, {1, {L("a2'", r - 1), L("a1", r)}}}));
    rels.push_back(relation(q, {{1, {L("a1", r), L("a1'", r)}}}));
    rels.push_back(relation(q, {{1, {L("a2'", r - 2), L("a2'", r - 1)}}}));
    rels.push_back(relation(q, {{1, {L("a1'", r - 1), L("a2'", r - 1)}}, {1, {L("a2", r), L("a1'", r)}}}));
  }
  return {"example4(" + num(n) + ")", make_presentation(std::move(q), std::move(rels)), {}, {}};
}

// ---------------------------------------------------------------------------

std::optional<std::string> dynkin_type(const Quiver &tree) {
  if (!underlying_tree(tree)) return std::nullopt;
  const std::size_t n = tree.vertex_count();
  std::vector<std::vector<VertexId>> adj(n);
  for (const auto &a : tree.arrows()) {
    adj[a.source].push_back(a.target);
    adj[a.target].push_back(a.source);
  }
  std::vector<VertexId> branch;
  for (VertexId v = 0; v < n; ++v) {
    if (adj[v].size() > 3) return std::nullopt;
    if (adj[v].size() == 3) branch.push_back(v);
  }
  if (branch.empty()) return "A" + num(n);
  if (branch.size() > 1) return std::nullopt;
  std::vector<std::size_t> arms;
  for (VertexId start : adj[branch[0]]) {
    std::size_t len = 1;
    VertexId prev = branch[0], cur = start;
    while (adj[cur].size() == 2) {
      VertexId next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return "D" + num(n);
  if (arms[0] == 1 && arms[1] == 2 && arms[2] <= 4) return "E" + num(n);
  return std::nullopt;
}

CorpusEntry preprojective(const Quiver &tree) {
  require(connected(tree), "preprojective: quiver must be connected");
  require(!has_oriented_cycle(tree), "preprojective: quiver must not have oriented cycles");
  Quiver dq = double_quiver(tree);
  const std::size_t na = tree.arrow_count();
  std::vector<PathCombination> rels;
  for (VertexId v = 0; v < tree.vertex_count(); ++v) {
    PathCombination r;
    for (ArrowId a = 0; a < na; ++a) {
      Path pa = Path::of_arrow(dq, a), ps = Path::of_arrow(dq, a + na);
      if (tree.arrow(a).target == v) r.add(compose(pa, ps), 1);
      if (tree.arrow(a).source == v) r.add(compose(ps, pa), -1);
    }
    if (!r.empty()) rels.push_back(std::move(r));
  }
  CorpusEntry e{"preprojective", make_presentation(std::move(dq), std::move(rels)), {}, {}};
  if (auto t = dynkin_type(tree); t && *t != "A1" && *t != "A2")
    e.warnings.push_back("underlying graph is Dynkin of type " + *t +
                         "; outside A1 and A2 such preprojective algebras are not Koszul");
  return e;
}

CorpusEntry trivial_extension_dual(const Quiver &tree) {
  require(underlying_tree(tree), "trivial_extension_dual: underlying graph must be a tree");
  for (VertexId v = 0; v < tree.vertex_count(); ++v)
    require(tree.arrows_into(v).empty() || tree.arrows_from(v).empty(),
            "trivial_extension_dual: vertex " + tree.vertex_label(v) + " is neither a source nor a sink");
  Quiver dq = double_quiver(tree);
  const std::size_t na = tree.arrow_count();
  auto P = [&](ArrowId a) { return Path::of_arrow(dq, a); };
  auto S = [&](ArrowId a) { return Path::of_arrow(dq, a + na); };
  std::vector<PathCombination> rels;
  auto add2 = [&](const Path &x, const Path &y, int sign) {
    PathCombination r;
    r.add(x, 1);
    r.add(y, sign);
    rels.push_back(std::move(r));
  };
  for (ArrowId a = 0; a < na; ++a)  // (1) a* a - b* b at a common source
    for (ArrowId b = a + 1; b < na; ++b)
      if (tree.arrow(a).source == tree.arrow(b).source) add2(compose(S(a), P(a)), compose(S(b), P(b)), -1);
  for (ArrowId a = 0; a < na; ++a)  // (2) a a* - b b* at a common sink
    for (ArrowId b = a + 1; b < na; ++b)
      if (tree.arrow(a).target == tree.arrow(b).target) add2(compose(P(a), S(a)), compose(P(b), S(b)), -1);
  for (ArrowId a = 0; a < na; ++a)  // (3) b* a for t(a) = t(b)
    for (ArrowId b = 0; b < na; ++b)
      if (a != b && tree.arrow(a).target == tree.arrow(b).target) {
        PathCombination r;
        r.add(compose(S(b), P(a)), 1);
        rels.push_back(std::move(r));
      }
  for (ArrowId a = 0; a < na; ++a)  // (4) a b* for i(a) = i(b)
    for (ArrowId b = 0; b < na; ++b)
      if (a != b && tree.arrow(a).source == tree.arrow(b).source) {
        PathCombination r;
        r.add(compose(P(a), S(b)), 1);
        rels.push_back(std::move(r));
      }
  GradingSpec grading{GroupSpec{GroupSpec::Kind::Cyclic, 2, {}}, {}};
  for (ArrowId a = 0; a < na; ++a) {
    grading.weights[dq.arrow(a).label] = "0";
    grading.weights[dq.arrow(a + na).label] = "1";
  }
  CorpusEntry e{"trivial_extension_dual", make_presentation(std::move(dq), std::move(rels)), grading, {}};
  if (auto t = dynkin_type(tree))
    e.warnings.push_back("underlying graph is Dynkin of type " + *t +
                         "; this presentation is the quadratic dual of the preprojective algebra only for non-Dynkin trees");
  return e;
}

CorpusEntry path_algebra(const Quiver &q) { return {"path_algebra", make_presentation(q, {}), {}, {}}; }

CorpusEntry radical_square_zero(const Quiver &q) {
  std::vector<PathCombination> rels;
  for (const Path &p : enumerate_paths(q, 2)) {
    PathCombination r;
    r.add(p, 1);
    rels.push_back(std::move(r));
  }
  return {"radical_square_zero", make_presentation(q, std::move(rels)), {}, {}};
}

CorpusEntry loop_cubed() {
  Quiver q = make_quiver({"1"}, {{"x", "1", "1"}});
  std::vector<PathCombination> rels{relation(q, {{1, {"x", "x", "x"}}})};
  return {"loop_cubed", make_presentation(std::move(q), std::move(rels)), {}, {}};
}

// ---------------------------------------------------------------------------

namespace {

std::size_t parse_count(const std::string &text, const std::string &what) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(text, &pos);
  } catch (const std::exception &) {
    pos = 0;
  }
  if (pos == 0 || pos != text.size() || text[0] == '-')
    throw ValidationError(what + ": expected a nonnegative integer, got \"" + text + "\"");
  return static_cast<std::size_t>(v);
}

} // namespace

Quiver parse_quiver_spec(const std::string &spec) {
  if (spec.rfind("file:", 0) == 0) {
    std::ifstream in(spec.substr(5));
    if (!in) throw ValidationError("cannot open " + spec.substr(5));
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_presentation(ss.str()).presentation.quiver;
  }
  auto colon = spec.find(':');
  if (colon == std::string::npos) throw ValidationError("quiver spec \"" + spec + "\" lacks a ':'");
  const std::string kind = spec.substr(0, colon);
  const std::size_t n = parse_count(spec.substr(colon + 1), "quiver spec " + spec);
  std::vector<std::string> vertices;
  std::vector<ArrowSpec> arrows;
  if (kind == "A" || kind == "zigzag") {
    require(n >= 1, "quiver spec " + spec + ": need at least one vertex");
    for (std::size_t i = 1; i <= n; ++i) vertices.push_back(num(i));
    for (std::size_t i = 1; i < n; ++i) {
      if (kind == "A" || i % 2 == 1)
        arrows.push_back({"a" + num(i), num(i), num(i + 1)});
      else
        arrows.push_back({"a" + num(i), num(i + 1), num(i)});
    }
  } else if (kind == "star") {
    vertices.push_back("0");
    for (std::size_t i = 1; i <= n; ++i) {
      vertices.push_back(num(i));
      arrows.push_back({"a" + num(i), num(i), "0"});
    }
  } else if (kind == "loops") {
    vertices.push_back("1");
    for (std::size_t i = 1; i <= n; ++i) arrows.push_back({"a" + num(i), "1", "1"});
  } else {
    throw ValidationError("unknown quiver spec kind \"" + kind + "\"");
  }
  return make_quiver(vertices, arrows);
}

std::vector<std::pair<std::string, std::string>> corpus_catalog() {
  return {{"exterior", "M"},
          {"example1", "M N"},
          {"example2", "M L N"},
          {"example3", "N"},
          {"example4", "N (only N = 2 is homogeneous)"},
          {"preprojective", "QUIVER"},
          {"trivial_extension_dual", "QUIVER"},
          {"path_algebra", "QUIVER"},
          {"radical_square_zero", "QUIVER"},
          {"loop_cubed", ""}};
}

CorpusEntry build_corpus_entry(const std::string &name, const std::vector<std::string> &args) {
  auto need = [&](std::size_t k) {
    if (args.size() != k)
      throw ValidationError(name + " takes " + num(k) + " argument(s), got " + num(args.size()));
  };
  auto count = [&](std::size_t i) { return parse_count(args[i], name); };
  if (name == "exterior") return need(1), exterior(count(0));
  if (name == "example1") return need(2), example1(count(0), count(1));
  if (name == "example2") return need(3), example2(count(0), count(1), count(2));
  if (name == "example3") return need(1), example3(count(0));
  if (name == "example4") return need(1), example4(count(0));
  if (name == "preprojective") return need(1), preprojective(parse_quiver_spec(args[0]));
  if (name == "trivial_extension_dual") return need(1), trivial_extension_dual(parse_quiver_spec(args[0]));
  if (name == "path_algebra") return need(1), path_algebra(parse_quiver_spec(args[0]));
  if (name == "radical_square_zero") return need(1), radical_square_zero(parse_quiver_spec(args[0]));
  if (name == "loop_cubed") return need(0), loop_cubed();
  throw ValidationError("unknown corpus entry \"" + name + "\"");
}

// ---------------------------------------------------------------------------

CoveringReference covering_reference(const std::string &name, const std::vector<std::size_t> &params) {
  auto need = [&](std::size_t k) {
    if (params.size() != k) throw ValidationError(name + ": wrong number of parameters");
  };
  if (name == "example1") {
    need(2);
    const std::size_t m = params[0], n = params[1];
    CoveringReference ref{cyclic_covering(exterior(m).presentation, n), {}, {}};
    for (std::size_t r = 0; r < n; ++r) ref.vertex_map[num(r)] = lifted_label("1", num(r));
    for (std::size_t i = 1; i <= m; ++i)
      for (std::size_t r = 0; r < n; ++r) ref.arrow_map[lab(base_arrow(i), r)] = lifted_label(base_arrow(i), num(r));
    return ref;
  }
  if (name == "example2") {
    need(3);
    const std::size_t m = params[0], l = params[1], n = params[2];
    require(l >= 1 && l <= m && n >= 1, "example2 needs 1 <= l <= m and n >= 1");
    Presentation base = exterior(m).presentation;
    FiniteGroup g = cyclic_group(n);
    std::map<std::string, std::string> w;
    for (std::size_t i = 1; i <= m; ++i) w[base_arrow(i)] = i <= l ? num(1 % n) : num((n - 1) % n);
    CoveringReference ref{build_covering(base, g, make_weights(base.quiver, g, w)), {}, {}};
    for (std::size_t r = 0; r < n; ++r) ref.vertex_map[num(r)] = lifted_label("1", num(r));
    for (std::size_t i = 1; i <= m; ++i)
      for (std::size_t r = 0; r < n; ++r)
        ref.arrow_map[lab(base_arrow(i), r)] = lifted_label(base_arrow(i), num(i <= l ? r : (r + 1) % n));
    return ref;
  }
  if (name == "example3" || name == "example4") {
    need(1);
    const std::size_t n = params[0];
    const bool dihedral = name == "example4";
    if (dihedral) require(n == 2, "example4 has a homogeneous grading only for n = 2");
    Presentation base = exterior(2).presentation;
    FiniteGroup g = dihedral ? dihedral_group(n) : direct_product(cyclic_group(2), cyclic_group(n));
    // sheet of (1, r) and of (1', r)
    auto sheet = [&](bool primed, long long r) -> GroupElem {
      const std::size_t rr = mod(r, n);
      if (!dihedral) return *g.find("(" + std::string(primed ? "1" : "0") + "," + num(rr) + ")");
      GroupElem c = *g.find("c"), s = *g.find("s"), x = g.identity();
      for (std::size_t k = 0; k < rr; ++k) x = g.multiply(c, x);
      return primed ? g.multiply(s, x) : x;
    };
    std::map<std::string, std::string> w = dihedral ? std::map<std::string, std::string>{{"a1", "s"}, {"a2", "c"}}
                                                     : std::map<std::string, std::string>{{"a1", "(1,0)"}, {"a2", "(0,1)"}};
    CoveringReference ref{build_covering(base, g, make_weights(base.quiver, g, w)), {}, {}};
    for (long long r = 0; r < static_cast<long long>(n); ++r) {
      ref.vertex_map[v1(r, n)] = lifted_label("1", g.label(sheet(false, r)));
      ref.vertex_map[v1p(r, n)] = lifted_label("1", g.label(sheet(true, r)));
      const std::size_t rr = mod(r, n);
      ref.arrow_map[lab("a1", rr)] = lifted_label("a1", g.label(sheet(false, r)));
      ref.arrow_map[lab("a1'", rr)] = lifted_label("a1", g.label(sheet(true, r)));
      ref.arrow_map[lab("a2", rr)] = lifted_label("a2", g.label(sheet(false, r)));
      ref.arrow_map[lab("a2'", rr)] = lifted_label("a2", g.label(sheet(true, dihedral ? r + 1 : r)));
    }
    return ref;
  }
  throw ValidationError("no covering reference for \"" + name + "\"");
}

std::optional<std::string> compare_under_renaming(const Presentation &a, const Presentation &b,
                                                  const std::map<std::string, std::string> &vertex_map,
                                                  const std::map<std::string, std::string> &arrow_map) {
  const Quiver &qa = a.quiver, &qb = b.quiver;
  if (qa.vertex_count() != qb.vertex_count() || qa.arrow_count() != qb.arrow_count())
    return "quiver sizes differ";
  std::vector<VertexId> vm(qa.vertex_count());
  std::set<VertexId> vimg;
  for (VertexId v = 0; v < qa.vertex_count(); ++v) {
    auto it = vertex_map.find(qa.vertex_label(v));
    if (it == vertex_map.end()) return "vertex " + qa.vertex_label(v) + " is not mapped";
    auto t = qb.find_vertex(it->second);
    if (!t) return "vertex " + it->second + " is missing from the covering";
    vm[v] = *t;
    vimg.insert(*t);
  }
  if (vimg.size() != vm.size()) return "vertex map is not injective";
  std::vector<ArrowId> am(qa.arrow_count());
  std::set<ArrowId> aimg;
  for (ArrowId x = 0; x < qa.arrow_count(); ++x) {
    const Arrow &arr = qa.arrow(x);
    auto it = arrow_map.find(arr.label);
    if (it == arrow_map.end()) return "arrow " + arr.label + " is not mapped";
    auto t = qb.find_arrow(it->second);
    if (!t) return "arrow " + it->second + " is missing from the covering";
    if (qb.arrow(*t).source != vm[arr.source] || qb.arrow(*t).target != vm[arr.target])
      return "arrow " + arr.label + " and its image " + it->second + " have different endpoints";
    am[x] = *t;
    aimg.insert(*t);
  }
  if (aimg.size() != am.size()) return "arrow map is not injective";
  std::vector<PathCombination> mapped;
  for (const auto &rel : a.relations) {
    PathCombination r;
    for (const auto &[p, c] : rel.terms()) {
      std::vector<ArrowId> word;
      for (ArrowId x : p.arrows()) word.push_back(am[x]);
      r.add(p.is_trivial() ? Path::trivial(vm[p.source()]) : Path::from_word(qb, word), c);
    }
    mapped.push_back(std::move(r));
  }
  auto key = [&](const PathCombination &r) { return combination_to_string(qb, r); };
  std::multiset<std::string> ka, kb;
  for (const auto &r : mapped) ka.insert(key(r));
  for (const auto &r : b.relations) kb.insert(key(r));
  if (ka != kb) {
    for (const auto &k : ka)
      if (kb.count(k) != ka.count(k)) return "relation " + k + " does not match the covering's relations";
    for (const auto &k : kb)
      if (kb.count(k) != ka.count(k)) return "covering relation " + k + " has no counterpart";
  }
  return std::nullopt;
}

std::optional<std::string> builder_equivalence(const std::string &name, const std::vector<std::size_t> &params) {
  std::vector<std::string> args;
  for (auto p : params) args.push_back(num(p));
  CorpusEntry e = build_corpus_entry(name, args);
  CoveringReference ref = covering_reference(name, params);
  return compare_under_renaming(e.presentation, ref.covering.presentation, ref.vertex_map, ref.arrow_map);
}

} // namespace qk
