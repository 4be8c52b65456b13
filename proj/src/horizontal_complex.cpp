#include "artin/horizontal_complex.h"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

#include "union_find.h"

namespace artin {

namespace {

void require_well_formed(const DefiningGraph& gamma) {
  const OrientationReport report = validate(gamma);
  if (!report.well_formed()) {
    throw PreconditionError("defining graph is not well formed: " +
                            report.issues.front().message);
  }
}

Color color_of(std::size_t e) { return Color{static_cast<std::uint32_t>(e)}; }

bool label_is_odd(int label) { return label % 2 == 1; }

// Length of Xquarter edge 4e + slot after collapsing and subdividing.
std::size_t quarter_edge_length(int label, int slot) {
  const auto m = static_cast<std::size_t>(label / 2);
  switch (slot) {
    case 0: return 0;
    case 1: return label == 2 ? 0 : 1;
    case 2: return m;
    default: return label_is_odd(label) || label == 2 ? m : m - 1;
  }
}

}  // namespace

HorizontalFamily build_family(const DefiningGraph& gamma) {
  require_well_formed(gamma);
  const std::size_t n = gamma.num_vertices();

  auto x0 = std::make_shared<ColoredGraph>();
  x0->add_vertex("o");
  for (std::size_t e = 0; e < gamma.num_edges(); ++e) x0->add_edge(0, 0, color_of(e));

  auto xhalf = std::make_shared<ColoredGraph>();
  for (const std::string& name : gamma.vertices()) xhalf->add_vertex(name);
  for (std::size_t e = 0; e < gamma.num_edges(); ++e) {
    const auto t = static_cast<VertexId>(gamma.tail(e));
    const auto h = static_cast<VertexId>(gamma.head(e));
    xhalf->add_edge(t, h, color_of(e));
    xhalf->add_edge(h, t, color_of(e));
  }

  auto xq = std::make_shared<ColoredGraph>();
  for (const std::string& name : gamma.vertices()) xq->add_vertex(name + "+");
  for (const std::string& name : gamma.vertices()) xq->add_vertex(name + "-");
  GraphMap cover;
  for (std::size_t e = 0; e < gamma.num_edges(); ++e) {
    const auto t = static_cast<VertexId>(gamma.tail(e));
    const auto h = static_cast<VertexId>(gamma.head(e));
    const auto plus = [](VertexId a) { return a; };
    const auto minus = [n](VertexId a) { return static_cast<VertexId>(n + a); };
    const bool odd = label_is_odd(gamma.edges()[e].label);
    const Color c = color_of(e);
    xq->add_edge(plus(t), minus(h), c);
    xq->add_edge(minus(t), plus(h), c);
    xq->add_edge(minus(h), odd ? minus(t) : plus(t), c);
    xq->add_edge(plus(h), odd ? plus(t) : minus(t), c);
    const auto down = static_cast<EdgeId>(2 * e);
    cover.edge_map.insert(cover.edge_map.end(), {down, down, down + 1, down + 1});
  }
  for (std::size_t i = 0; i < 2 * n; ++i) cover.vertex_map.push_back(static_cast<VertexId>(i % n));

  HorizontalFamily f;
  f.x0 = x0;
  f.xhalf = xhalf;
  f.xquarter = xq;
  cover.source = xq;
  cover.target = xhalf;
  f.cover = std::move(cover);
  for (std::size_t i = 0; i < 2 * n; ++i) {
    f.deck.push_back(static_cast<VertexId>(i < n ? i + n : i - n));
  }
  return f;
}

GraphMap deck_involution_on_quarter(const HorizontalFamily& f) {
  if (!is_connected(*f.xquarter)) {
    throw PreconditionError(
        "Xquarter is disconnected (HNN case); there is no deck involution to report");
  }
  GraphMap beta;
  beta.source = f.xquarter;
  beta.target = f.xquarter;
  beta.vertex_map = f.deck;
  for (EdgeId e = 0; e < f.xquarter->num_edges(); ++e) beta.edge_map.push_back(e ^ 1u);
  return beta;
}

CollapsedQuarter build_collapsed(const DefiningGraph& gamma) {
  const HorizontalFamily f = build_family(gamma);
  const ColoredGraph& xq = *f.xquarter;
  CollapsedQuarter q;

  q.collapsed.assign(xq.num_edges(), false);
  detail::UnionFind classes(xq.num_vertices());
  for (std::size_t e = 0; e < gamma.num_edges(); ++e) {
    for (int slot = 0; slot < 2; ++slot) {
      if (quarter_edge_length(gamma.edges()[e].label, slot) != 0) continue;
      const auto id = static_cast<EdgeId>(4 * e + slot);
      q.collapsed[id] = true;
      classes.unite(xq.edge(id).tail, xq.edge(id).head);
    }
  }

  // Old vertices are numbered by their smallest member.
  auto graph = std::make_shared<ColoredGraph>();
  constexpr auto kUnset = static_cast<VertexId>(-1);
  std::vector<VertexId> root_to_class(xq.num_vertices(), kUnset);
  std::vector<std::vector<VertexId>> members;
  q.vertex_class.resize(xq.num_vertices());
  for (VertexId v = 0; v < xq.num_vertices(); ++v) {
    const std::size_t root = classes.find(v);
    if (root_to_class[root] == kUnset) {
      root_to_class[root] = static_cast<VertexId>(members.size());
      members.emplace_back();
    }
    q.vertex_class[v] = root_to_class[root];
    members[root_to_class[root]].push_back(v);
  }
  for (const auto& group : members) {
    std::string name;
    for (VertexId v : group) name += (name.empty() ? "" : "/") + xq.name(v);
    graph->add_vertex(name);
  }
  q.num_old_vertices = members.size();

  q.edge_path.resize(xq.num_edges());
  q.segments.resize(gamma.num_edges());
  for (const Edge& edge : xq.edges()) {
    const std::size_t e = edge.id / 4;
    const int slot = static_cast<int>(edge.id % 4);
    const std::size_t length = quarter_edge_length(gamma.edges()[e].label, slot);
    if (length == 0) continue;
    q.segments[e].push_back(length);
    VertexId at = q.vertex_class[edge.tail];
    for (std::size_t k = 1; k <= length; ++k) {
      VertexId next = q.vertex_class[edge.head];
      if (k < length) {
        next = graph->add_vertex(gamma.edge_name(e) + "." + std::to_string(slot) + "." +
                                 std::to_string(k));
      }
      q.edge_path[edge.id].push_back(graph->add_edge(at, next, edge.color));
      at = next;
    }
  }
  for (auto& s : q.segments) std::sort(s.begin(), s.end());

  q.rho.source = graph;
  q.rho.target = f.x0;
  q.rho.vertex_map.assign(graph->num_vertices(), 0);
  for (const Edge& edge : graph->edges()) q.rho.edge_map.push_back(index_of(edge.color));
  q.graph = graph;
  q.immersion = is_immersion(q.rho);

  // Monochrome cycles: components of each color class.
  q.monochrome_cycles.resize(gamma.num_edges());
  for (std::size_t e = 0; e < gamma.num_edges(); ++e) {
    std::vector<EdgeId> colored;
    std::vector<VertexId> touched;
    for (const Edge& edge : graph->edges()) {
      if (index_of(edge.color) != e) continue;
      colored.push_back(edge.id);
      touched.push_back(edge.tail);
      touched.push_back(edge.head);
    }
    const Subgraph sub = extract_subgraph(*graph, touched, colored);
    for (const Subgraph& piece : connected_components(sub.graph)) {
      q.monochrome_cycles[e].push_back(piece.graph.num_edges());
    }
    std::sort(q.monochrome_cycles[e].begin(), q.monochrome_cycles[e].end());
  }
  return q;
}

std::vector<GraphMap> component_maps(const CollapsedQuarter& q) {
  std::vector<GraphMap> out;
  for (Subgraph& piece : connected_components(*q.graph)) {
    GraphMap m;
    m.target = q.rho.target;
    for (VertexId v : piece.vertex_origin) m.vertex_map.push_back(q.rho.vertex_map[v]);
    for (EdgeId e : piece.edge_origin) m.edge_map.push_back(q.rho.edge_map[e]);
    m.source = std::make_shared<const ColoredGraph>(std::move(piece.graph));
    out.push_back(std::move(m));
  }
  return out;
}

const char* to_string(SplittingKind kind) {
  return kind == SplittingKind::kAmalgam ? "amalgam" : "hnn";
}

bool is_bipartite(const DefiningGraph& gamma) {
  std::vector<int> side(gamma.num_vertices(), -1);
  for (Generator root = 0; root < gamma.num_vertices(); ++root) {
    if (side[root] != -1) continue;
    side[root] = 0;
    std::queue<Generator> todo;
    todo.push(root);
    while (!todo.empty()) {
      const Generator a = todo.front();
      todo.pop();
      for (const auto& [b, e] : gamma.neighbors(a)) {
        if (side[b] == -1) {
          side[b] = 1 - side[a];
          todo.push(b);
        } else if (side[b] == side[a]) {
          return false;
        }
      }
    }
  }
  return true;
}

SplittingCertificate compute_splitting(const DefiningGraph& gamma) {
  AdmissibilityVerdict verdict = is_admissible(gamma);
  if (!verdict.admissible) {
    throw InadmissibleError("orientation is not admissible", std::move(verdict));
  }
  SplittingCertificate cert;
  cert.admissibility = std::move(verdict);
  cert.family = build_family(gamma);
  if (!is_connected(*cert.family.xhalf)) {
    throw PreconditionError("the splitting needs a connected defining graph");
  }
  cert.collapsed = build_collapsed(gamma);

  const std::size_t v = gamma.num_vertices();
  const std::size_t e = gamma.num_edges();
  const bool all_even = std::all_of(gamma.edges().begin(), gamma.edges().end(),
                                    [](const GammaEdge& x) { return x.label % 2 == 0; });
  cert.kind = is_bipartite(gamma) && all_even ? SplittingKind::kHNN : SplittingKind::kAmalgam;
  cert.rank_a = e;
  cert.rank_b = 1 + 2 * e - v;

  auto expect = [](std::size_t computed, std::size_t formula, const char* what) {
    if (computed != formula) {
      throw std::logic_error(std::string("rank mismatch for ") + what + ": graph gives " +
                             std::to_string(computed) + ", formula gives " +
                             std::to_string(formula));
    }
  };
  expect(free_rank(*cert.family.x0), cert.rank_a, "X0");
  expect(free_rank(*cert.family.xhalf), cert.rank_b, "Xhalf");

  const std::vector<Subgraph> pieces = connected_components(*cert.family.xquarter);
  if (cert.kind == SplittingKind::kAmalgam) {
    if (pieces.size() != 1) throw std::logic_error("Xquarter should be connected");
    cert.rank_c = 2 * cert.rank_b - 1;
    cert.index_c_in_b = 2;
    expect(free_rank(*cert.family.xquarter), *cert.rank_c, "Xquarter");
    expect(free_rank(*cert.collapsed.graph), *cert.rank_c, "collapsed Xquarter");
    cert.twisted_double =
        "an index two subgroup is the twisted double D(A, C, beta), beta being the deck "
        "involution of Xquarter over Xhalf";
  } else {
    if (pieces.size() != 2) throw std::logic_error("Xquarter should have two components");
    for (const Subgraph& piece : pieces) expect(free_rank(piece.graph), cert.rank_b, "Xquarter");
  }
  cert.collapsed_cover_degree = cover_degree(cert.collapsed.rho);
  return cert;
}

}  // namespace artin
