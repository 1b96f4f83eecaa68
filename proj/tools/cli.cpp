#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tpk/cover.hpp"
#include "tpk/error.hpp"
#include "tpk/generate.hpp"
#include "tpk/render.hpp"
#include "tpk/rewrite.hpp"
#include "tpk/tpd.hpp"

namespace tpk::cli {

namespace {

using json = nlohmann::ordered_json;

/// Thrown for anything that maps to exit code 2.
struct InputFailure {
  std::string message;
};

std::string read_all(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path.empty() || path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream f(path, std::ios::binary);
  if (!f)
    throw InputFailure{"cannot open '" + path + "'"};
  buf << f.rdbuf();
  return buf.str();
}

TpdDocument load(const std::string& path, std::istream& in) {
  const std::string text = read_all(path, in);
  try {
    return parse_tpd(text);
  } catch (const ParseError& e) {
    const std::string name = path.empty() || path == "-" ? "<stdin>" : path;
    throw InputFailure{name + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) +
                       ": " + (e.kind() == ParseError::Kind::Syntax ? "syntax" : "semantic") +
                       " error: " + e.message()};
  } catch (const InvalidInput& e) {
    throw InputFailure{e.what()};
  }
}

int default_depth() {
  if (const char* env = std::getenv("TPK_BUDGET_DEPTH")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 0 && v <= 1'000'000)
      return static_cast<int>(v);
  }
  return SearchBudget{}.max_depth;
}

std::string colors_text(std::span<const Color> colors) {
  std::string s;
  for (Color c : colors) {
    if (!s.empty())
      s += ' ';
    s += std::to_string(to_int(c));
  }
  return s;
}

json colors_json(std::span<const Color> colors) {
  json a = json::array();
  for (Color c : colors)
    a.push_back(to_int(c));
  return a;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void write_text(std::ostream& out, const CoverReport& r) {
  out << "bridges " << r.bridges << "\n";
  out << "core_genus " << (r.core_genus ? std::to_string(*r.core_genus) : "none") << "\n";
  out << "coloring " << (r.coloring ? colors_text(r.coloring->bottom()) : "none") << "\n";
  out << "transitive " << yes_no(r.transitive) << "\n";
  for (int i = 1; i <= 3; ++i) {
    const SectorAnalysis& a = r.sectors[i - 1];
    const std::string p = "sector " + std::to_string(i) + " ";
    out << p << "braid " << a.link.braid.to_string() << "\n";
    out << p << "components " << a.link.components << "\n";
    out << p << "colorings " << a.link.colorings << "\n";
    out << p << "unlink " << to_string(a.link.certified_unlink) << "\n";
    out << p << "handles " << (a.handles ? std::to_string(*a.handles) : "none") << "\n";
    out << p << "normalized " << yes_no(a.normalized) << "\n";
    out << p << "label " << r.manifold_labels[i - 1] << "\n";
  }
  out << "params " << (r.params ? r.params->to_string() : "none") << "\n";
  out << "euler_X " << (r.euler_X ? std::to_string(*r.euler_X) : "none") << "\n";
  out << "euler_S " << r.branch_euler << "\n";
  out << "branch_components " << r.branch_components << "\n";
  out << "singularities " << r.singularities.size() << "\n";
  for (const Singularity& s : r.singularities)
    out << "singularity " << s.sector << " " << s.components << " " << s.kind << "\n";
  out << "embedded " << yes_no(r.embedded) << "\n";
  for (const std::string& d : r.diagnostics)
    out << "diagnostic " << d << "\n";
}

json to_json(const CoverReport& r) {
  json j;
  j["bridges"] = r.bridges;
  j["core_genus"] = r.core_genus ? json(*r.core_genus) : json(nullptr);
  j["coloring"] = r.coloring ? colors_json(r.coloring->bottom()) : json(nullptr);
  j["transitive"] = r.transitive;
  json sectors = json::array();
  for (int i = 1; i <= 3; ++i) {
    const SectorAnalysis& a = r.sectors[i - 1];
    json s;
    s["index"] = i;
    s["braid"] = json(std::vector<int>(a.link.braid.letters().begin(), a.link.braid.letters().end()));
    s["components"] = a.link.components;
    s["colorings"] = a.link.colorings;
    s["unlink"] = to_string(a.link.certified_unlink);
    s["handles"] = a.handles ? json(*a.handles) : json(nullptr);
    s["normalized"] = a.normalized;
    s["label"] = r.manifold_labels[i - 1];
    sectors.push_back(std::move(s));
  }
  j["sectors"] = std::move(sectors);
  if (r.params)
    j["params"] = {{"g", r.params->g}, {"k", r.params->k}};
  else
    j["params"] = nullptr;
  j["euler_X"] = r.euler_X ? json(*r.euler_X) : json(nullptr);
  j["euler_S"] = r.branch_euler;
  j["branch_components"] = r.branch_components;
  json sing = json::array();
  for (const Singularity& s : r.singularities)
    sing.push_back({{"sector", s.sector}, {"components", s.components}, {"kind", s.kind}});
  j["singularities"] = std::move(sing);
  j["embedded"] = r.embedded;
  j["diagnostics"] = r.diagnostics;
  return j;
}

struct BudgetFlags {
  int depth = 0;
  std::size_t max_states = SearchBudget{}.max_states;

  void add(CLI::App* cmd) {
    depth = default_depth();
    cmd->add_option("--depth", depth, "search depth bound (default $TPK_BUDGET_DEPTH or 32)")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--max-states", max_states, "search state bound")->check(CLI::PositiveNumber);
  }
  SearchBudget budget() const {
    SearchBudget b;
    b.max_depth = depth;
    b.max_states = max_states;
    return b;
  }
};

int cmd_validate(const TpdDocument& doc, std::ostream& out) {
  const TriPlaneDiagram& d = doc.diagram;
  out << "valid\n";
  out << "bridges " << d.bridges() << "\n";
  for (int i = 1; i <= 3; ++i)
    out << "tangle " << i << " matching " << induced_matching(d.tangle(i)).to_string() << "\n";
  for (int i = 1; i <= 3; ++i)
    out << "sector " << i << " " << to_string(d.sector(i)) << " components "
        << sector_link(d, i).components << "\n";
  const auto all = triplane_colorings(d);
  const auto transitive = std::count_if(all.begin(), all.end(),
                                        [](const Coloring& c) { return is_transitive(c); });
  out << "colorings " << all.size() << "\n";
  out << "transitive_colorings " << transitive << "\n";
  out << "coloring " << (doc.coloring ? colors_text(doc.coloring->bottom()) : "none") << "\n";
  if (const int partial = partial_coloring_count(d); partial > 0)
    out << "diagnostic " << partial << " colorings extend over tangle 1 and only one other tangle\n";
  return kOk;
}

int cmd_colorings(const TpdDocument& doc, bool transitive_only, bool list, std::ostream& out) {
  std::vector<Coloring> cs = triplane_colorings(doc.diagram);
  if (transitive_only)
    std::erase_if(cs, [](const Coloring& c) { return !is_transitive(c); });
  out << cs.size() << "\n";
  if (list)
    for (const Coloring& c : cs)
      out << colors_text(c.bottom()) << "\n";
  return kOk;
}

int cmd_invariants(const TpdDocument& doc, const ReportOptions& options, bool as_json,
                   std::ostream& out) {
  const CoverReport r = cover_report(doc.diagram, doc.coloring, options);
  if (as_json)
    out << to_json(r).dump(2) << "\n";
  else
    write_text(out, r);
  return kOk;
}

std::vector<Move> load_certificate(const std::string& path) {
  std::ifstream f(path);
  if (!f)
    throw InputFailure{"cannot open certificate '" + path + "'"};
  try {
    return parse_certificate(f);
  } catch (const InvalidInput& e) {
    throw InputFailure{path + ": " + e.what()};
  }
}

int cmd_moves(const TpdDocument& doc, const std::string& cert_path, int tangle, int sector,
              std::ostream& out, std::ostream& err) {
  const std::vector<Move> moves = load_certificate(cert_path);
  if (sector > 0) {
    const SectorLink l = sector_link(doc.diagram, sector);
    try {
      const BraidWord w = replay(l.braid, moves, Closure::Plat);
      out << "sector " << sector << " braid " << w.to_string() << "\n";
      out << "bridges " << w.strands() / 2 << "\n";
      out << "crossingless " << yes_no(w.empty()) << "\n";
    } catch (const MoveError& e) {
      err << "error: " << e.what() << "\n";
      return kDomainFailure;
    }
    return kOk;
  }

  TpdDocument cur = doc;
  for (std::size_t n = 0; n < moves.size(); ++n) {
    try {
      TriPlaneDiagram next = apply_move(cur.diagram, tangle, moves[n]);
      std::optional<Coloring> c;
      if (cur.coloring) {
        c = transfer_coloring(cur.diagram, next, tangle, moves[n], *cur.coloring);
        if (!c)
          throw MoveError(moves[n].position, "coloring does not survive the move");
      }
      cur.diagram = std::move(next);
      cur.coloring = std::move(c);
    } catch (const MoveError& e) {
      err << "error: certificate line " << n + 1 << ": " << e.what() << "\n";
      return kDomainFailure;
    }
  }
  out << serialize_tpd(cur);
  return kOk;
}

int cmd_certify(const TpdDocument& doc, int sector, const SearchBudget& budget, bool require_yes,
                std::ostream& out) {
  const SectorLink l = sector_link(doc.diagram, sector);
  const Certification c = certify_unlink(l, budget);
  out << "# result " << to_string(c.status) << "\n";
  out << "# sector " << sector << "\n";
  out << "# braid " << l.braid.to_string() << "\n";
  out << "# components " << l.components << "\n";
  out << "# colorings " << l.colorings << "\n";
  out << "# states " << c.states << "\n";
  for (const Move& m : c.certificate)
    out << format_move(m) << "\n";
  return require_yes && c.status != UnlinkStatus::Yes ? kDomainFailure : kOk;
}

int emit(const ColoredDiagram& cd, std::map<std::string, std::string> meta, std::ostream& out) {
  TpdDocument doc{1, cd.diagram, cd.coloring, std::move(meta)};
  out << serialize_tpd(doc);
  return kOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Fox 3-colored tri-plane diagrams and their irregular 3-fold covers", "tpk"};
  app.require_subcommand(1);

  std::string file;
  auto add_file = [&](CLI::App* cmd) {
    cmd->add_option("file", file, "diagram file (default: standard input)");
  };

  auto* validate = app.add_subcommand("validate", "check a diagram and summarize it");
  add_file(validate);

  bool transitive_only = false;
  bool list = false;
  auto* colorings = app.add_subcommand("colorings", "count tri-plane 3-colorings");
  add_file(colorings);
  colorings->add_flag("--transitive-only", transitive_only, "count only transitive colorings");
  colorings->add_flag("--list", list, "list cap colors of tangle 1, one coloring per line");

  bool as_json = false;
  bool smooth = false;
  BudgetFlags inv_budget;
  auto* invariants = app.add_subcommand("invariants", "cover invariants");
  add_file(invariants);
  invariants->add_flag("--json", as_json, "structured output");
  invariants->add_flag("--smooth-unknot-cones", smooth,
                       "omit cones over certified unknots from the singularity list");
  inv_budget.add(invariants);

  std::string cert_path;
  int tangle = 1;
  int moves_sector = 0;
  auto* moves = app.add_subcommand("moves", "apply a move certificate");
  add_file(moves);
  moves->add_option("--apply", cert_path, "certificate file")->required();
  auto* tangle_opt =
      moves->add_option("--tangle", tangle, "tangle to rewrite")->check(CLI::Range(1, 3));
  moves->add_option("--sector", moves_sector, "replay on the sector link braid instead")
      ->check(CLI::Range(1, 3))
      ->excludes(tangle_opt);

  int cert_sector = 1;
  bool require_yes = false;
  BudgetFlags cert_budget;
  auto* certify = app.add_subcommand("certify-unlink", "search for an unlink certificate");
  add_file(certify);
  certify->add_option("--sector", cert_sector, "sector index")->required()->check(CLI::Range(1, 3));
  certify->add_flag("--require-yes", require_yes, "exit 1 unless certified");
  cert_budget.add(certify);

  auto* generate = app.add_subcommand("generate", "write a generated diagram");
  generate->require_subcommand(1);
  int n = 0, b = 0, k = 0, g = 0;
  bool no_color = false, cone = false;
  std::string variant = "odd";
  auto* gen_unlink = generate->add_subcommand("unlink", "crossingless unlink in plat position");
  gen_unlink->add_option("--n", n, "components")->required()->check(CLI::PositiveNumber);
  gen_unlink->add_option("--b", b, "bridges")->required()->check(CLI::PositiveNumber);
  gen_unlink->add_flag("--no-color", no_color, "omit the coloring");
  auto* gen_pairing = generate->add_subcommand("pairing", "connected pairing diagram");
  gen_pairing->add_option("--b", b, "bridges")->required()->check(CLI::Range(2, 1000));
  gen_pairing->add_option("--variant", variant, "odd or even")
      ->check(CLI::IsMember({"odd", "even"}));
  auto* gen_lemma = generate->add_subcommand("lemma-family", "unlink family with one cap colored 1");
  gen_lemma->add_option("--k", k, "sector handles")->required()->check(CLI::NonNegativeNumber);
  gen_lemma->add_option("--g", g, "core genus")->required()->check(CLI::NonNegativeNumber);
  gen_lemma->add_flag("--cone", cone, "make sector 2 a cone");

  std::string format = "ascii";
  auto* render_cmd = app.add_subcommand("render", "draw a diagram");
  add_file(render_cmd);
  render_cmd->add_option("--format", format, "ascii or svg")->check(CLI::IsMember({"ascii", "svg"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (validate->parsed())
      return cmd_validate(load(file, in), out);
    if (colorings->parsed())
      return cmd_colorings(load(file, in), transitive_only, list, out);
    if (invariants->parsed()) {
      ReportOptions options;
      options.budget = inv_budget.budget();
      options.smooth_unknot_cones = smooth;
      return cmd_invariants(load(file, in), options, as_json, out);
    }
    if (moves->parsed())
      return cmd_moves(load(file, in), cert_path, tangle, moves_sector, out, err);
    if (certify->parsed())
      return cmd_certify(load(file, in), cert_sector, cert_budget.budget(), require_yes, out);
    if (gen_unlink->parsed())
      return emit(unlink_diagram(n, b, !no_color),
                  {{"generator", "unlink"}, {"n", std::to_string(n)}, {"b", std::to_string(b)}},
                  out);
    if (gen_pairing->parsed())
      return emit(pairing_diagram(b, variant == "odd" ? PairingVariant::Odd : PairingVariant::Even),
                  {{"generator", "pairing"}, {"b", std::to_string(b)}, {"variant", variant}}, out);
    if (gen_lemma->parsed()) {
      if (k > g)
        throw InputFailure{"lemma-family needs k <= g"};
      return emit(lemma_family(k, g, cone),
                  {{"generator", "lemma-family"},
                   {"k", std::to_string(k)},
                   {"g", std::to_string(g)},
                   {"sector2", cone ? "cone" : "disks"}},
                  out);
    }
    if (render_cmd->parsed()) {
      out << render(load(file, in), format == "svg" ? RenderFormat::Svg : RenderFormat::Ascii);
      return kOk;
    }
  } catch (const InputFailure& e) {
    err << "error: " << e.message << "\n";
    return kInputError;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kDomainFailure;
  }
  return kInputError;
}

} // namespace tpk::cli
