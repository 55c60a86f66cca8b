#include "qk/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "qk/error.hpp"
#include "qk/quadratic_dual.hpp"
#include "qk/resolution.hpp"
#include "qk/serialization.hpp"
#include "qk/structure_algebra.hpp"
#include "qk/theorems.hpp"

namespace qk {

using nlohmann::json;

namespace {

struct Options {
  std::string file;
  std::string out;
  std::string json_out;
  std::string group;
  std::string weights;
  std::string check;
  int max_degree = 6;
  int max_homological = 4;
  int cutoff = -1;
  std::string corpus_name;
  std::vector<std::string> corpus_args;
};

std::string read_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string &path, const std::string &text) {
  std::ofstream o(path);
  if (!o) throw ValidationError("cannot write " + path);
  o << text;
}

void emit(const std::string &text, const std::string &path, std::ostream &out) {
  if (path.empty())
    out << text;
  else
    write_file(path, text);
}

// Commas inside parentheses belong to product-group labels such as (1,0).
std::map<std::string, std::string> parse_weight_list(const std::string &text) {
  std::vector<std::string> items(1);
  int depth = 0;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0)
      items.emplace_back();
    else
      items.back() += c;
  }
  std::map<std::string, std::string> out;
  for (const auto &item : items) {
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == item.size())
      throw ValidationError("weight \"" + item + "\" is not of the form arrow=element");
    out[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return out;
}

/// Group and weights from the flags, falling back to the document grading, and
/// for cyclic groups to the generator on every arrow.
std::pair<FiniteGroup, WeightFunction> resolve_grading(const PresentationDocument &doc, const Options &o) {
  std::optional<GroupSpec> spec;
  if (!o.group.empty())
    spec = parse_group_spec(o.group);
  else if (doc.grading)
    spec = doc.grading->group;
  if (!spec) throw ValidationError("no group given and the document declares no grading");
  FiniteGroup g = spec->build();
  const Quiver &q = doc.presentation.quiver;
  if (!o.weights.empty()) return {g, make_weights(q, g, parse_weight_list(o.weights))};
  if (doc.grading && doc.grading->group == *spec) return {g, make_weights(q, g, doc.grading->weights)};
  if (spec->kind == GroupSpec::Kind::Cyclic) return {g, constant_weights(q, *g.find(spec->n > 1 ? "1" : "0"))};
  throw ValidationError("weights are required for group " + spec->to_string());
}

json verdict_json(const Verdict &v) {
  json j = {{"verdict", v.to_string()}};
  if (v.kind == VerdictKind::FailsAt) j["witness"] = {v.hom_degree, v.internal_degree};
  return j;
}

json betti_json(const Quiver &q, const ResolutionReport &r) {
  json out = json::array();
  for (VertexId u = 0; u < r.vertices; ++u) {
    json rows = json::array();
    for (int i = 0; i <= r.max_homological; ++i) {
      json gens = json::array();
      for (int d = 0; d <= r.max_degree; ++d)
        for (VertexId v = 0; v < r.vertices; ++v)
          if (auto b = r.beta(u, i, d, v))
            gens.push_back({{"degree", d}, {"vertex", q.vertex_label(v)}, {"count", b}});
      rows.push_back({{"i", i}, {"complete", static_cast<bool>(r.complete[u][static_cast<std::size_t>(i)])}, {"generators", gens}});
    }
    out.push_back({{"simple", q.vertex_label(u)}, {"rows", rows}});
  }
  return out;
}

json ext_json(const Quiver &q, const ResolutionReport &r) {
  ExtTable t = ext_dimensions(r);
  json table = json::array();
  for (std::size_t i = 0; i < t.dims.size(); ++i)
    for (VertexId u = 0; u < r.vertices; ++u)
      for (VertexId v = 0; v < r.vertices; ++v)
        if (t.dims[i][u][v])
          table.push_back({{"i", i}, {"source", q.vertex_label(u)}, {"target", q.vertex_label(v)}, {"dim", t.dims[i][u][v]}});
  std::vector<bool> complete(t.complete.begin(), t.complete.end());
  return {{"totals", t.totals}, {"complete", complete}, {"table", table}};
}

json generation_json(const GenerationVerdict &g) {
  json j = {{"pass", g.pass}};
  if (!g.pass) j["failing_i"] = g.failing_i, j["achieved"] = g.achieved, j["required"] = g.required;
  return j;
}

json hilbert_euler_json(const Quiver &q, const HilbertEulerResult &h, int cutoff) {
  json j = {{"pass", h.pass}, {"cutoff", cutoff}};
  if (!h.pass)
    j["witness"] = {{"row", q.vertex_label(h.row)}, {"col", q.vertex_label(h.col)}, {"degree", h.degree}, {"value", h.value}};
  return j;
}

std::string finish(const std::string &command, json report, double seconds) {
  json doc = {{"format", 1}, {"command", command}, {"report", std::move(report)}, {"timing", {{"seconds", seconds}}}};
  return doc.dump(2) + "\n";
}

void check_bounds(const Options &o) {
  if (o.max_degree < 0 || o.max_homological < 0) throw ValidationError("bounds must be nonnegative");
}

int cmd_analyze(const Options &o, std::ostream &out) {
  check_bounds(o);
  const auto t0 = std::chrono::steady_clock::now();
  PresentationDocument doc = parse_presentation(read_file(o.file));
  const Quiver &q = doc.presentation.quiver;
  auto model = std::make_shared<const AlgebraModel>(AlgebraModel::build(doc.presentation, o.max_degree));
  MinimalResolution res = minimal_resolution(model, o.max_homological, o.max_degree);
  const ResolutionReport &r = res.report();
  const int cutoff = std::min(o.max_degree, o.max_homological);

  json dims = json::array();
  for (int d = 0; d <= o.max_degree; ++d) dims.push_back(model->dim_degree(d));
  HilbertMatrix h = hilbert_matrix(*model);
  json hilbert = json::array();
  for (VertexId u = 0; u < h.vertices; ++u)
    for (VertexId v = 0; v < h.vertices; ++v)
      hilbert.push_back({{"source", q.vertex_label(u)}, {"target", q.vertex_label(v)}, {"series", h.entries[u][v]}});
  std::vector<std::string> arrows;
  for (const auto &a : q.arrows()) arrows.push_back(a.label);

  json report;
  report["algebra"] = {{"vertices", q.vertices()},
                       {"arrows", arrows},
                       {"relations", doc.presentation.relations.size()},
                       {"quadratic", quadratic_check(doc.presentation)}};
  report["bounds"] = {{"max_degree", o.max_degree}, {"max_homological", o.max_homological}};
  report["dims"] = {{"by_degree", dims}, {"finite", model->finite()}};
  report["dims"]["top_degree"] = model->top_degree() ? json(*model->top_degree()) : json(nullptr);
  report["hilbert"] = hilbert;
  report["betti"] = betti_json(q, r);
  report["ext"] = ext_json(q, r);
  report["koszul"] = verdict_json(is_koszul_to(r));
  report["koszul"]["linear"] = std::vector<bool>(r.linear.begin(), r.linear.end());
  report["generation"] = generation_json(generation_check(res, o.max_homological));
  report["hilbert_euler"] = hilbert_euler_json(q, hilbert_euler_check(*model, r, cutoff), cutoff);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const std::string text = finish("analyze", report, secs);
  out << text;
  if (!o.json_out.empty()) write_file(o.json_out, text);
  return kExitOk;
}

int cmd_dual(const Options &o, std::ostream &out) {
  PresentationDocument doc = parse_presentation(read_file(o.file));
  emit(serialize_presentation({dual_presentation(doc.presentation), std::nullopt}), o.out, out);
  return kExitOk;
}

int cmd_cover(const Options &o, std::ostream &out, std::ostream &err) {
  PresentationDocument doc = parse_presentation(read_file(o.file));
  auto [g, w] = resolve_grading(doc, o);
  Covering c = build_covering(doc.presentation, g, w);
  for (const auto &warning : c.warnings) err << "warning: " << warning << "\n";
  emit(serialize_presentation({c.presentation, std::nullopt}), o.out, out);
  return kExitOk;
}

int cmd_verify(const Options &o, std::ostream &out) {
  check_bounds(o);
  const auto t0 = std::chrono::steady_clock::now();
  PresentationDocument doc = parse_presentation(read_file(o.file));
  const Quiver &q = doc.presentation.quiver;
  json report = {{"check", o.check}, {"bounds", {{"max_degree", o.max_degree}, {"max_homological", o.max_homological}}}};
  bool pass = false;

  auto resolve = [&](const Presentation &p) {
    auto model = std::make_shared<const AlgebraModel>(AlgebraModel::build(p, o.max_degree));
    return minimal_resolution(model, o.max_homological, o.max_degree);
  };

  if (o.check == "koszul") {
    Verdict v = is_koszul_to(resolve(doc.presentation).report());
    report.update(verdict_json(v));
    pass = v.kind == VerdictKind::KoszulToBound;
  } else if (o.check == "generation") {
    GenerationVerdict g = generation_check(resolve(doc.presentation), o.max_homological);
    report.update(generation_json(g));
    pass = g.pass;
  } else if (o.check == "hilbert-euler") {
    const int cutoff = o.cutoff >= 0 ? o.cutoff : std::min(o.max_degree, o.max_homological);
    MinimalResolution res = resolve(doc.presentation);
    HilbertEulerResult h = hilbert_euler_check(res.model(), res.report(), cutoff);
    report.update(hilbert_euler_json(q, h, cutoff));
    pass = h.pass;
  } else if (o.check == "covering-theorem") {
    auto [g, w] = resolve_grading(doc, o);
    CoveringTheoremReport c = theorem_covering_check(doc.presentation, g, w, o.max_homological, o.max_degree);
    report["group_order"] = c.group_order;
    report["base"] = verdict_json(c.base);
    report["covering"] = verdict_json(c.covering);
    report["verdicts_agree"] = c.verdicts_agree;
    report["base_ext_totals"] = c.base_totals;
    report["covering_ext_totals"] = c.covering_totals;
    report["totals_scale"] = c.totals_scale;
    report["warnings"] = c.warnings;
    pass = c.pass();
  } else if (o.check == "smash-iso") {
    auto [g, w] = resolve_grading(doc, o);
    SmashIsoResult s = smash_iso_check(doc.presentation, g, w, o.max_degree);
    report["smash_dim"] = s.smash_dim;
    report["covering_dim"] = s.covering_dim;
    report["associative"] = s.smash_associative;
    report["unital"] = s.smash_unital;
    pass = s.pass;
  } else if (o.check == "radical-smash") {
    auto [g, w] = resolve_grading(doc, o);
    AlgebraModel m = AlgebraModel::build(doc.presentation, o.max_degree);
    if (!m.finite()) throw BoundError("radical-smash needs a finite-dimensional algebra within the degree bound");
    RadicalSmashResult rs = radical_smash_check(m, g, w);
    report["radical_dim"] = rs.radical_dim;
    report["expected_dim"] = rs.expected_dim;
    report["radical_in_expected"] = rs.radical_in_expected;
    report["expected_in_radical"] = rs.expected_in_radical;
    pass = rs.pass();
  } else if (o.check == "duality-dims") {
    MinimalResolution res = resolve(doc.presentation);
    AlgebraModel dual = AlgebraModel::build(dual_presentation(doc.presentation), o.max_homological);
    DualityDimResult d = koszul_duality_dim_check(res.model(), dual, res.report());
    report["ext_totals"] = d.ext_totals;
    report["dual_dims"] = d.dual_dims;
    if (!d.pass) report["first_mismatch"] = d.first_mismatch;
    pass = d.pass;
  } else {
    throw ValidationError("unknown check \"" + o.check + "\"");
  }
  report["pass"] = pass;
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const std::string text = finish("verify", report, secs);
  out << text;
  if (!o.json_out.empty()) write_file(o.json_out, text);
  return pass ? kExitOk : kExitCheckFailed;
}

int cmd_corpus_list(std::ostream &out) {
  for (const auto &[name, args] : corpus_catalog()) out << name << (args.empty() ? "" : " " + args) << "\n";
  return kExitOk;
}

int cmd_corpus_build(const Options &o, std::ostream &out, std::ostream &err) {
  CorpusEntry e = build_corpus_entry(o.corpus_name, o.corpus_args);
  for (const auto &w : e.warnings) err << "warning: " << w << "\n";
  emit(serialize_presentation(document_of(e)), o.out, out);
  return kExitOk;
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Graded quiver algebras: bounded Koszulity, duals and Galois coverings", "qk"};
  app.require_subcommand(1);
  Options o;

  auto *analyze = app.add_subcommand("analyze", "Dimensions, Betti numbers, Ext and Koszul verdict");
  analyze->add_option("file", o.file, "Presentation document")->required();
  analyze->add_option("--max-degree", o.max_degree, "Degree bound N")->capture_default_str();
  analyze->add_option("--max-homological", o.max_homological, "Homological bound")->capture_default_str();
  analyze->add_option("--json", o.json_out, "Also write the report here");

  auto *dual = app.add_subcommand("dual", "Quadratic dual presentation");
  dual->add_option("file", o.file, "Presentation document")->required();
  dual->add_option("--out", o.out, "Output path (default stdout)");

  auto *cover = app.add_subcommand("cover", "Galois covering from a group grading");
  cover->add_option("file", o.file, "Presentation document")->required();
  cover->add_option("--group", o.group, "cyclic:n | dihedral:n | product:SPEC,SPEC");
  cover->add_option("--weights", o.weights, "arrow=element,...");
  cover->add_option("--out", o.out, "Output path (default stdout)");

  auto *verify = app.add_subcommand("verify", "Run one check");
  verify->add_option("file", o.file, "Presentation document")->required();
  verify->add_option("--check", o.check, "Check name")
      ->required()
      ->check(CLI::IsMember({"koszul", "generation", "hilbert-euler", "covering-theorem", "smash-iso", "radical-smash",
                             "duality-dims"}));
  verify->add_option("--max-degree", o.max_degree, "Degree bound N")->capture_default_str();
  verify->add_option("--max-homological", o.max_homological, "Homological bound")->capture_default_str();
  verify->add_option("--cutoff", o.cutoff, "Hilbert-Euler cutoff (default min of the bounds)");
  verify->add_option("--group", o.group, "Group for covering checks");
  verify->add_option("--weights", o.weights, "arrow=element,...");
  verify->add_option("--json", o.json_out, "Also write the report here");

  auto *corpus = app.add_subcommand("corpus", "Built-in presentations");
  corpus->require_subcommand(1);
  auto *list = corpus->add_subcommand("list", "List corpus entries");
  auto *build = corpus->add_subcommand("build", "Write a corpus entry as a presentation document");
  build->add_option("name", o.corpus_name, "Entry name")->required();
  build->add_option("args", o.corpus_args, "Entry arguments");
  build->add_option("--out", o.out, "Output path (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*analyze) return cmd_analyze(o, out);
    if (*dual) return cmd_dual(o, out);
    if (*cover) return cmd_cover(o, out, err);
    if (*verify) return cmd_verify(o, out);
    if (*list) return cmd_corpus_list(out);
    if (*build) return cmd_corpus_build(o, out, err);
  } catch (const HomogeneityError &e) {
    err << "error: grading is not homogeneous\n" << e.what() << "\n";
    return kExitInputError;
  } catch (const ValidationError &e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const BoundError &e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

std::string canonical_section(const std::string &report_text) {
  json doc = json::parse(report_text, nullptr, false);
  if (doc.is_discarded()) return report_text;
  if (doc.is_object()) doc.erase("timing");
  return doc.dump(2);
}

} // namespace qk
