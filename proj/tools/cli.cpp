#include "cli.h"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "artin/admissibility.h"
#include "artin/certifier.h"
#include "artin/fiber.h"
#include "artin/horizontal_complex.h"

namespace artin::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kPalette[] = {"#e41a1c", "#377eb8", "#4daf4a", "#984ea3",
                                    "#ff7f00", "#a65628", "#f781bf", "#999999",
                                    "#66c2a5", "#d95f02", "#7570b3", "#1b9e77"};

std::string line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

void reject_unknown(const Json& object, std::initializer_list<const char*> allowed,
                    const std::string& path) {
  for (const auto& [key, value] : object.items()) {
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* k) { return key == k; })) {
      throw InputError(path + ": unknown field \"" + key + "\"");
    }
  }
}

const Json& require(const Json& object, const char* key, const std::string& path) {
  auto it = object.find(key);
  if (it == object.end()) throw InputError(path + ": missing field \"" + key + "\"");
  return *it;
}

std::string require_string(const Json& value, const std::string& path) {
  if (!value.is_string()) throw InputError(path + ": expected a string");
  return value.get<std::string>();
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read input file " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Json arrows_json(const DefiningGraph& gamma) {
  Json arrows = Json::array();
  for (std::size_t e = 0; e < gamma.num_edges(); ++e) {
    const auto& iota = gamma.edges()[e].iota;
    if (!iota) continue;
    const Generator tail = *iota;
    const Generator head = tail == gamma.edges()[e].u ? gamma.edges()[e].v : gamma.edges()[e].u;
    arrows.push_back(
        {{"edge", gamma.edge_name(e)}, {"tail", gamma.name(tail)}, {"head", gamma.name(head)}});
  }
  return arrows;
}

Json witness_json(const DefiningGraph& gamma, const MisdirectedWitness& w) {
  Json cycle = Json::array();
  Json tails = Json::array();
  for (Generator a : w.cycle) cycle.push_back(gamma.name(a));
  for (Generator a : w.tails) tails.push_back(gamma.name(a));
  return {{"cycle", cycle}, {"tails", tails}};
}

std::string witness_text(const DefiningGraph& gamma, const MisdirectedWitness& w) {
  std::string s;
  for (std::size_t i = 0; i < w.cycle.size(); ++i) s += (i ? " " : "") + gamma.name(w.cycle[i]);
  s += "  (tails:";
  for (Generator a : w.tails) s += " " + gamma.name(a);
  return s + ")";
}

struct Context {
  std::string input;
  std::string output;
  std::string format;
  std::string graph = "Xbar";
  std::size_t max_cycle_len = 10;
};

// Result of a subcommand: text to write and the exit code.
struct Outcome {
  std::string text;
  int code = 0;
};

// Arrows from the input when present; otherwise the first admissible
// orientation found by the search.
std::optional<DefiningGraph> resolve_orientation(const DefiningGraph& gamma, std::string& why) {
  if (gamma.has_any_iota()) return gamma;
  auto found = find_admissible_orientation(gamma);
  if (!found) {
    why = "no admissible orientation exists";
    return std::nullopt;
  }
  return gamma.with_orientation(*found);
}

Outcome cmd_check(const DefiningGraph& gamma, const Context& ctx) {
  const OrientationReport report = validate(gamma);
  Json j;
  Json edges = Json::array();
  for (std::size_t e = 0; e < gamma.num_edges(); ++e) {
    edges.push_back({{"edge", gamma.edge_name(e)}, {"status", to_string(report.edge_status[e])}});
  }
  Json issues = Json::array();
  for (const Issue& i : report.issues) {
    issues.push_back({{"edge", gamma.edge_name(i.edge)}, {"kind", to_string(i.kind)},
                      {"message", i.message}});
  }
  j["well_formed"] = report.well_formed();
  j["edges"] = edges;
  j["issues"] = issues;
  int code = report.well_formed() ? 0 : 1;
  std::optional<AdmissibilityVerdict> verdict;
  std::optional<MisdirectedWitness> oracle;
  bool oracle_run = false;
  if (report.well_formed()) {
    verdict = is_admissible(gamma);
    j["admissible"] = verdict->admissible;
    j["collapsed_cycle"] = verdict->collapsed_cycle;
    if (verdict->witness) j["witness"] = witness_json(gamma, *verdict->witness);
    if (ctx.max_cycle_len > 0) {
      oracle_run = true;
      oracle = oracle_almost_misdirected(gamma, ctx.max_cycle_len);
      Json o = {{"max_cycle_len", ctx.max_cycle_len}, {"found", oracle.has_value()},
                {"agrees", oracle.has_value() != verdict->admissible}};
      if (oracle) o["cycle"] = witness_json(gamma, *oracle);
      j["oracle"] = o;
    }
    if (!verdict->admissible) code = 1;
  }
  if (ctx.format == "json") return {j.dump(2) + "\n", code};

  std::ostringstream out;
  out << "vertices: " << gamma.num_vertices() << ", edges: " << gamma.num_edges() << "\n";
  for (std::size_t e = 0; e < gamma.num_edges(); ++e) {
    const GammaEdge& edge = gamma.edges()[e];
    out << "  " << gamma.edge_name(e) << " label " << edge.label;
    if (edge.iota) out << " iota " << gamma.name(*edge.iota);
    out << ": " << to_string(report.edge_status[e]) << "\n";
  }
  for (const Issue& i : report.issues) out << "issue: " << i.message << "\n";
  out << "well-formed: " << (report.well_formed() ? "yes" : "no") << "\n";
  if (verdict) {
    out << "admissible: " << (verdict->admissible ? "yes" : "no") << "\n";
    if (verdict->witness) {
      out << "almost misdirected cycle: " << witness_text(gamma, *verdict->witness) << "\n";
    }
    if (oracle_run) {
      out << "oracle (length <= " << ctx.max_cycle_len << "): "
          << (oracle ? "found " + witness_text(gamma, *oracle) : std::string("none")) << ", "
          << (oracle.has_value() != verdict->admissible ? "agrees" : "DISAGREES") << "\n";
    }
  }
  return {out.str(), code};
}

Outcome cmd_orient(const DefiningGraph& gamma, const Context& ctx) {
  const auto found = find_admissible_orientation(gamma);
  if (ctx.format == "json") {
    Json j;
    j["found"] = found.has_value();
    if (found) {
      const DefiningGraph oriented = gamma.with_orientation(*found);
      j["orientation"] = arrows_json(oriented);
      j["graph"] = Json::parse(serialize_defining_graph(oriented));
    }
    return {j.dump(2) + "\n", found ? 0 : 1};
  }
  if (!found) return {"none\n", 1};
  std::ostringstream out;
  const DefiningGraph oriented = gamma.with_orientation(*found);
  for (const auto& arrow : arrows_json(oriented)) {
    out << arrow["edge"].get<std::string>() << ": " << arrow["tail"].get<std::string>() << " -> "
        << arrow["head"].get<std::string>() << "\n";
  }
  if (arrows_json(oriented).empty()) out << "(no edges need an arrow)\n";
  return {out.str(), 0};
}

Outcome inadmissible(const DefiningGraph& gamma, const InadmissibleError& e, const Context& ctx) {
  if (ctx.format == "json") {
    Json j = {{"error", e.what()}};
    if (e.verdict().witness) j["witness"] = witness_json(gamma, *e.verdict().witness);
    return {j.dump(2) + "\n", 1};
  }
  std::string text = std::string(e.what()) + "\n";
  if (e.verdict().witness) {
    text += "almost misdirected cycle: " + witness_text(gamma, *e.verdict().witness) + "\n";
  }
  return {text, 1};
}

Outcome cmd_split(const DefiningGraph& gamma, const Context& ctx) {
  std::string why;
  auto oriented = resolve_orientation(gamma, why);
  if (!oriented) return {why + "\n", 1};
  SplittingCertificate s;
  try {
    s = compute_splitting(*oriented);
  } catch (const InadmissibleError& e) {
    return inadmissible(*oriented, e, ctx);
  }
  Json j;
  j["kind"] = to_string(s.kind);
  j["orientation"] = arrows_json(*oriented);
  j["ranks"] = {{"A", s.rank_a}, {"B", s.rank_b}};
  if (s.rank_c) j["ranks"]["C"] = *s.rank_c;
  if (s.index_c_in_b) j["index_C_in_B"] = *s.index_c_in_b;
  if (s.twisted_double) j["twisted_double"] = *s.twisted_double;
  j["graphs"] = {
      {"X0", {{"vertices", s.family.x0->num_vertices()}, {"edges", s.family.x0->num_edges()}}},
      {"Xhalf", {{"vertices", s.family.xhalf->num_vertices()}, {"edges", s.family.xhalf->num_edges()}}},
      {"Xquarter",
       {{"vertices", s.family.xquarter->num_vertices()},
        {"edges", s.family.xquarter->num_edges()},
        {"components", num_components(*s.family.xquarter)}}},
      {"Xbar",
       {{"vertices", s.collapsed.graph->num_vertices()},
        {"edges", s.collapsed.graph->num_edges()},
        {"immersion", s.collapsed.immersion}}}};
  if (s.collapsed_cover_degree) j["Xbar_cover_degree"] = *s.collapsed_cover_degree;
  if (ctx.format == "json") return {j.dump(2) + "\n", 0};

  std::ostringstream out;
  if (s.kind == SplittingKind::kAmalgam) {
    out << "amalgam A *_C B\n";
    out << "rank A = " << s.rank_a << ", rank B = " << s.rank_b << ", rank C = " << *s.rank_c
        << ", [B:C] = 2\n";
    out << *s.twisted_double << "\n";
  } else {
    out << "HNN extension A *_B\n";
    out << "rank A = " << s.rank_a << ", rank B = " << s.rank_b << "\n";
  }
  out << "Xbar: " << s.collapsed.graph->num_vertices() << " vertices, "
      << s.collapsed.graph->num_edges() << " edges, rho is "
      << (s.collapsed.immersion ? "an immersion" : "not an immersion");
  if (s.collapsed_cover_degree) out << ", a cover of degree " << *s.collapsed_cover_degree;
  out << "\n";
  return {out.str(), 0};
}

Outcome cmd_fiber(const DefiningGraph& gamma, const Context& ctx) {
  std::string why;
  auto oriented = resolve_orientation(gamma, why);
  if (!oriented) return {why + "\n", 1};
  const AdmissibilityVerdict verdict = is_admissible(*oriented);
  if (!verdict.admissible) {
    return inadmissible(*oriented, InadmissibleError("orientation is not admissible", verdict),
                        ctx);
  }
  const CollapsedQuarter q = build_collapsed(*oriented);
  const FiberProduct f = fiber_product(q.rho, q.rho);
  const MonochromeVerdict mono = monochrome_check(f);

  // Basepoint: the class of a+ for the least vertex name.
  const auto least = std::min_element(oriented->vertices().begin(), oriented->vertices().end());
  const auto a = static_cast<VertexId>(least - oriented->vertices().begin());
  const VertexId y0 = q.vertex_class.at(a);
  const OppressiveSet opp = oppressive_set(q.rho, y0);
  std::size_t closing = 0;
  for (const auto& el : opp.elements) {
    if (traces_word(*q.graph, y0, el.word).outcome == TraceOutcome::kCloses) ++closing;
  }

  Json comps = Json::array();
  for (std::size_t c = 0; c < f.components.size(); ++c) {
    const FiberComponent& comp = f.components[c];
    Json jc = {{"id", c},
               {"kind", to_string(comp.kind)},
               {"vertices", comp.vertices.size()},
               {"edges", comp.edges.size()},
               {"rank", comp.rank},
               {"branching", comp.branching.size()}};
    if (comp.nontrivial()) jc["fill_rank"] = fill_rank_check(f.component_graph(c).graph);
    comps.push_back(jc);
  }
  Json j;
  j["orientation"] = arrows_json(*oriented);
  j["fiber"] = {{"vertices", f.graph->num_vertices()},
                {"edges", f.graph->num_edges()},
                {"components", comps}};
  Json jm = {{"all_monochrome", mono.all_monochrome}};
  if (mono.witness) {
    Json cycle = Json::array();
    Json colors = Json::array();
    for (VertexId v : mono.witness->vertices(*f.graph)) cycle.push_back(f.graph->name(v));
    for (const Step& s : mono.witness->steps) {
      colors.push_back(oriented->edge_name(index_of(f.graph->edge(s.edge).color)));
    }
    jm["witness"] = {{"component", *mono.component}, {"cycle", cycle}, {"colors", colors}};
  }
  j["monochrome"] = jm;
  j["oppressive_set"] = {{"basepoint", q.graph->name(y0)},
                         {"elements", opp.elements.size()},
                         {"truncated", opp.truncated},
                         {"closing_words", closing}};
  if (ctx.format == "json") return {j.dump(2) + "\n", 0};

  std::ostringstream out;
  out << "fiber product: " << f.graph->num_vertices() << " vertices, " << f.graph->num_edges()
      << " edges, " << f.components.size() << " components\n";
  std::size_t trivial = 0;
  for (std::size_t c = 0; c < f.components.size(); ++c) {
    const FiberComponent& comp = f.components[c];
    if (comp.kind == ComponentKind::kTrivial) {
      ++trivial;
      continue;
    }
    out << "  component " << c << " [" << to_string(comp.kind) << "] " << comp.vertices.size()
        << " vertices, rank " << comp.rank << ", " << comp.branching.size()
        << " branching vertices\n";
  }
  out << "  " << trivial << " trivial components (points or trees)\n";
  out << "monochrome: " << (mono.all_monochrome ? "yes" : "no") << "\n";
  if (mono.witness) {
    out << "  mixed cycle in component " << *mono.component << ":";
    for (VertexId v : mono.witness->vertices(*f.graph)) out << " " << f.graph->name(v);
    out << "\n";
  }
  out << "oppressive set at " << q.graph->name(y0) << ": " << opp.elements.size() << " elements"
      << (opp.truncated ? " (truncated)" : "") << ", " << closing << " close at the basepoint\n";
  return {out.str(), 0};
}

std::string certificate_text(const RFCertificate& c) {
  std::ostringstream out;
  out << "verdict: " << to_string(c.verdict) << "\n";
  out << "rule: " << c.rule.id << " (" << c.rule.name << ")\n";
  for (const auto& s : c.citations) out << "cites: " << s << "\n";
  if (c.splitting) {
    out << "splitting: " << to_string(c.splitting->kind) << ", rank A = " << c.splitting->rank_a
        << ", rank B = " << c.splitting->rank_b;
    if (c.splitting->rank_c) out << ", rank C = " << *c.splitting->rank_c;
    out << "\n";
  }
  if (c.monochrome) out << "monochrome: " << (c.monochrome->all_monochrome ? "yes" : "no") << "\n";
  for (const auto& s : c.notes) out << "note: " << s << "\n";
  for (const auto& s : c.caveats) out << "caveat: " << s << "\n";
  return out.str();
}

Outcome cmd_certify(const DefiningGraph& gamma, const Context& ctx) {
  const RFCertificate cert = certify(gamma);
  if (ctx.format == "text") return {certificate_text(cert), 0};
  return {to_json(cert, gamma) + "\n", 0};
}

std::string colored_json(const ColoredGraph& g, const DefiningGraph& gamma) {
  Json j;
  Json vertices = Json::array();
  for (VertexId v = 0; v < g.num_vertices(); ++v) vertices.push_back(g.name(v));
  Json edges = Json::array();
  for (const Edge& e : g.edges()) {
    edges.push_back({{"tail", g.name(e.tail)},
                     {"head", g.name(e.head)},
                     {"color", gamma.edge_name(index_of(e.color))}});
  }
  j["vertices"] = vertices;
  j["edges"] = edges;
  return j.dump(2) + "\n";
}

Outcome cmd_export(const DefiningGraph& gamma, const Context& ctx) {
  if (ctx.graph == "gamma") {
    if (ctx.format == "dot") return {gamma_to_dot(gamma), 0};
    return {serialize_defining_graph(gamma), 0};
  }
  std::string why;
  auto oriented = resolve_orientation(gamma, why);
  if (!oriented) return {why + "\n", 1};
  std::shared_ptr<const ColoredGraph> g;
  if (ctx.graph == "Xbar" || ctx.graph == "fiber") {
    const CollapsedQuarter q = build_collapsed(*oriented);
    if (ctx.graph == "Xbar") {
      g = q.graph;
    } else {
      if (!q.immersion) {
        return {"rho is not an immersion; the orientation is not admissible\n", 1};
      }
      g = fiber_product(q.rho, q.rho).graph;
    }
  } else {
    const HorizontalFamily f = build_family(*oriented);
    g = ctx.graph == "X0" ? f.x0 : ctx.graph == "Xhalf" ? f.xhalf : f.xquarter;
  }
  if (ctx.format == "json") return {colored_json(*g, *oriented), 0};
  return {to_dot(*g, *oriented, ctx.graph), 0};
}

}  // namespace

DefiningGraph parse_defining_graph(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError("invalid JSON at " + line_column(text, e.byte) + ": " + e.what());
  }
  if (!j.is_object()) throw InputError("$: expected an object");
  reject_unknown(j, {"vertices", "edges"}, "$");
  const Json& vertices = require(j, "vertices", "$");
  const Json& edges = require(j, "edges", "$");
  if (!vertices.is_array()) throw InputError("$.vertices: expected an array");
  if (!edges.is_array()) throw InputError("$.edges: expected an array");

  DefiningGraph gamma;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const std::string path = "$.vertices[" + std::to_string(i) + "]";
    try {
      gamma.add_vertex(require_string(vertices[i], path));
    } catch (const StructuralError& e) {
      throw InputError(path + ": " + e.what());
    }
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string path = "$.edges[" + std::to_string(i) + "]";
    const Json& e = edges[i];
    if (!e.is_object()) throw InputError(path + ": expected an object");
    reject_unknown(e, {"u", "v", "label", "iota"}, path);
    const std::string u = require_string(require(e, "u", path), path + ".u");
    const std::string v = require_string(require(e, "v", path), path + ".v");
    const Json& label = require(e, "label", path);
    if (!label.is_number_integer()) throw InputError(path + ".label: expected an integer");
    const auto value = label.get<long long>();
    if (value < std::numeric_limits<int>::min() || value > std::numeric_limits<int>::max()) {
      throw InputError(path + ".label: out of range");
    }
    std::optional<std::string> iota;
    if (auto it = e.find("iota"); it != e.end()) iota = require_string(*it, path + ".iota");
    for (const auto& [field, name] : {std::pair{".u", u}, std::pair{".v", v}}) {
      if (!gamma.find_vertex(name)) throw InputError(path + field + ": unknown vertex \"" + name + "\"");
    }
    if (iota && !gamma.find_vertex(*iota)) {
      throw InputError(path + ".iota: unknown vertex \"" + *iota + "\"");
    }
    gamma.add_edge(u, v, static_cast<int>(value), iota);
  }
  return gamma;
}

std::string serialize_defining_graph(const DefiningGraph& gamma) {
  Json j;
  j["vertices"] = gamma.vertices();
  Json edges = Json::array();
  for (const GammaEdge& e : gamma.edges()) {
    Json je = {{"u", gamma.name(e.u)}, {"v", gamma.name(e.v)}, {"label", e.label}};
    if (e.iota) je["iota"] = gamma.name(*e.iota);
    edges.push_back(je);
  }
  j["edges"] = edges;
  return j.dump(2) + "\n";
}

std::string to_dot(const ColoredGraph& g, const DefiningGraph& gamma, const std::string& name) {
  std::ostringstream out;
  out << "digraph " << quote(name) << " {\n";
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    out << "  v" << v << " [label=" << quote(g.name(v).empty() ? std::to_string(v) : g.name(v))
        << "];\n";
  }
  constexpr std::size_t kColors = sizeof(kPalette) / sizeof(kPalette[0]);
  for (const Edge& e : g.edges()) {
    const std::uint32_t c = index_of(e.color);
    out << "  v" << e.tail << " -> v" << e.head << " [color=" << quote(kPalette[c % kColors])
        << ", label=" << quote(c < gamma.num_edges() ? gamma.edge_name(c) : std::to_string(c))
        << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string gamma_to_dot(const DefiningGraph& gamma) {
  std::ostringstream out;
  out << "graph \"gamma\" {\n";
  for (Generator a = 0; a < gamma.num_vertices(); ++a) {
    out << "  " << quote(gamma.name(a)) << ";\n";
  }
  constexpr std::size_t kColors = sizeof(kPalette) / sizeof(kPalette[0]);
  for (std::size_t e = 0; e < gamma.num_edges(); ++e) {
    const GammaEdge& edge = gamma.edges()[e];
    Generator from = edge.u;
    Generator to = edge.v;
    std::string dir = "none";
    if (edge.iota) {
      from = *edge.iota;
      to = from == edge.u ? edge.v : edge.u;
      dir = "forward";
    }
    out << "  " << quote(gamma.name(from)) << " -- " << quote(gamma.name(to))
        << " [label=" << quote(std::to_string(edge.label)) << ", dir=" << dir
        << ", color=" << quote(kPalette[e % kColors]) << "];\n";
  }
  out << "}\n";
  return out.str();
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Artin group splittings, fiber products and residual finiteness certificates"};
  app.require_subcommand(1);
  Context ctx;

  struct Command {
    const char* name;
    const char* help;
    const char* default_format;
    Outcome (*handler)(const DefiningGraph&, const Context&);
  };
  const Command commands[] = {
      {"check", "validate the orientation and decide admissibility", "text", cmd_check},
      {"orient", "search for an admissible orientation", "text", cmd_orient},
      {"split", "compute the free splitting and its ranks", "text", cmd_split},
      {"fiber", "analyze the self fiber product of the collapsed graph", "text", cmd_fiber},
      {"certify", "emit a residual finiteness certificate", "json", cmd_certify},
      {"export", "write one of the constructed graphs", "dot", cmd_export},
  };
  for (const Command& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("-i,--input", ctx.input, "defining graph JSON file")->required();
    sub->add_option("-o,--output", ctx.output, "write the result here instead of stdout");
    sub->add_option("-f,--format", ctx.format, std::string("json, dot or text (default ") +
                                                   c.default_format + ")")
        ->check(CLI::IsMember({"json", "dot", "text"}));
    sub->add_option("--max-cycle-len", ctx.max_cycle_len,
                    "length bound of the brute-force cycle oracle, 0 to skip")
        ->check(CLI::Range(std::size_t{0}, kMaxCycleEnumeration))
        ->capture_default_str();
    if (std::string(c.name) == "export") {
      sub->add_option("-g,--graph", ctx.graph, "graph to export")
          ->check(CLI::IsMember({"X0", "Xhalf", "Xquarter", "Xbar", "fiber", "gamma"}))
          ->capture_default_str();
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const Command* chosen = nullptr;
  for (const Command& c : commands) {
    if (app.got_subcommand(c.name)) chosen = &c;
  }
  if (ctx.format.empty()) ctx.format = chosen->default_format;
  const std::string name = chosen->name;
  if (ctx.format == "dot" && name != "export") {
    err << "error: --format dot is only available for export\n";
    return 2;
  }

  Outcome result;
  try {
    const DefiningGraph gamma = parse_defining_graph(read_file(ctx.input));
    result = chosen->handler(gamma, ctx);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const StructuralError& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "refused: " << e.what() << "\n";
    return 1;
  }

  if (ctx.output.empty()) {
    out << result.text;
  } else {
    std::ofstream file(ctx.output, std::ios::binary);
    if (!file) {
      err << "cannot write " << ctx.output << "\n";
      return 2;
    }
    file << result.text;
  }
  return result.code;
}

}  // namespace artin::cli
