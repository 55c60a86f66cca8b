#include "qk/serialization.hpp"

#include <json.hpp>

#include "qk/error.hpp"

namespace qk {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string &field, const std::string &what) {
  throw ValidationError(field + ": " + what);
}

const json &member(const json &obj, const std::string &key, const std::string &field) {
  if (!obj.is_object()) fail(field, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(field, "missing key \"" + key + "\"");
  return *it;
}

std::string as_string(const json &j, const std::string &field) {
  if (!j.is_string()) fail(field, "expected a string");
  return j.get<std::string>();
}

const json &as_array(const json &j, const std::string &field) {
  if (!j.is_array()) fail(field, "expected an array");
  return j;
}

GroupSpec parse_group(const json &j, const std::string &field) {
  const std::string kind = as_string(member(j, "kind", field), field + ".kind");
  const json &params = as_array(member(j, "parameters", field), field + ".parameters");
  GroupSpec g;
  if (kind == "cyclic" || kind == "dihedral") {
    if (params.size() != 1 || !params[0].is_number_unsigned())
      fail(field + ".parameters", "expected one nonnegative integer");
    g.kind = kind == "cyclic" ? GroupSpec::Kind::Cyclic : GroupSpec::Kind::Dihedral;
    g.n = params[0].get<std::size_t>();
    if (g.n == 0 || (g.kind == GroupSpec::Kind::Dihedral && g.n < 2)) fail(field + ".parameters", "group order out of range");
  } else if (kind == "product") {
    if (params.size() != 2) fail(field + ".parameters", "expected two group descriptions");
    g.kind = GroupSpec::Kind::Product;
    g.factors = {parse_group(params[0], field + ".parameters[0]"), parse_group(params[1], field + ".parameters[1]")};
  } else {
    fail(field + ".kind", "unknown group kind \"" + kind + "\"");
  }
  return g;
}

json group_json(const GroupSpec &g) {
  switch (g.kind) {
  case GroupSpec::Kind::Cyclic:
    return {{"kind", "cyclic"}, {"parameters", {g.n}}};
  case GroupSpec::Kind::Dihedral:
    return {{"kind", "dihedral"}, {"parameters", {g.n}}};
  case GroupSpec::Kind::Product:
    return {{"kind", "product"}, {"parameters", json::array({group_json(g.factors[0]), group_json(g.factors[1])})}};
  }
  return {};
}

} // namespace

PresentationDocument parse_presentation(const std::string &text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error &e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
  const json &format = member(doc, "format", "document");
  if (format != 1) fail("format", "unsupported format version");

  std::vector<std::string> vertices;
  const json &jv = as_array(member(doc, "vertices", "document"), "vertices");
  for (std::size_t i = 0; i < jv.size(); ++i) vertices.push_back(as_string(jv[i], "vertices[" + std::to_string(i) + "]"));

  std::vector<ArrowSpec> arrows;
  const json &ja = as_array(member(doc, "arrows", "document"), "arrows");
  for (std::size_t i = 0; i < ja.size(); ++i) {
    const std::string f = "arrows[" + std::to_string(i) + "]";
    arrows.push_back({as_string(member(ja[i], "name", f), f + ".name"), as_string(member(ja[i], "from", f), f + ".from"),
                      as_string(member(ja[i], "to", f), f + ".to")});
  }
  Quiver q = make_quiver(vertices, arrows);

  std::vector<PathCombination> relations;
  const json &jr = as_array(member(doc, "relations", "document"), "relations");
  for (std::size_t i = 0; i < jr.size(); ++i) {
    const std::string f = "relations[" + std::to_string(i) + "]";
    PathCombination rel;
    const json &terms = as_array(jr[i], f);
    for (std::size_t t = 0; t < terms.size(); ++t) {
      const std::string ft = f + "[" + std::to_string(t) + "]";
      Scalar coef;
      try {
        coef = parse_scalar(as_string(member(terms[t], "coef", ft), ft + ".coef"));
      } catch (const ValidationError &e) {
        fail(ft + ".coef", e.what());
      }
      const json &path = as_array(member(terms[t], "path", ft), ft + ".path");
      if (path.empty()) fail(ft + ".path", "empty path");
      std::vector<ArrowId> word;
      for (std::size_t k = path.size(); k-- > 0;) {
        const std::string name = as_string(path[k], ft + ".path[" + std::to_string(k) + "]");
        auto a = q.find_arrow(name);
        if (!a) fail(ft + ".path[" + std::to_string(k) + "]", "unknown arrow \"" + name + "\"");
        word.push_back(*a);
      }
      try {
        rel.add(Path::from_word(q, word), coef);
      } catch (const ValidationError &e) {
        fail(ft + ".path", e.what());
      }
    }
    if (auto problem = validate_relation(q, rel)) fail(f, *problem);
    relations.push_back(std::move(rel));
  }

  PresentationDocument out{make_presentation(std::move(q), std::move(relations)), std::nullopt};
  if (auto it = doc.find("grading"); it != doc.end() && !it->is_null()) {
    GradingSpec g;
    g.group = parse_group(member(*it, "group", "grading"), "grading.group");
    const json &w = member(*it, "weights", "grading");
    if (!w.is_object()) fail("grading.weights", "expected an object");
    for (auto wi = w.begin(); wi != w.end(); ++wi) g.weights[wi.key()] = as_string(wi.value(), "grading.weights." + wi.key());
    try {
      make_weights(out.presentation.quiver, g.group.build(), g.weights);
    } catch (const ValidationError &e) {
      fail("grading.weights", e.what());
    }
    out.grading = std::move(g);
  }
  return out;
}

std::string serialize_presentation(const PresentationDocument &d) {
  const Quiver &q = d.presentation.quiver;
  json doc;
  doc["format"] = 1;
  doc["vertices"] = q.vertices();
  json arrows = json::array();
  for (const auto &a : q.arrows())
    arrows.push_back({{"name", a.label}, {"from", q.vertex_label(a.source)}, {"to", q.vertex_label(a.target)}});
  doc["arrows"] = arrows;
  json rels = json::array();
  for (const auto &r : d.presentation.relations) {
    json terms = json::array();
    for (const auto &[p, c] : r.terms()) {
      json path = json::array();
      for (auto it = p.arrows().rbegin(); it != p.arrows().rend(); ++it) path.push_back(q.arrow(*it).label);
      terms.push_back({{"coef", to_string(c)}, {"path", path}});
    }
    rels.push_back(terms);
  }
  doc["relations"] = rels;
  if (d.grading) doc["grading"] = {{"group", group_json(d.grading->group)}, {"weights", d.grading->weights}};
  return doc.dump(2) + "\n";
}

PresentationDocument document_of(const CorpusEntry &entry) { return {entry.presentation, entry.grading}; }

} // namespace qk
