#include "artin/colored_graph.h"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>
#include <set>
#include <string>
#include <utility>

#include "artin/errors.h"

namespace artin {

VertexId ColoredGraph::add_vertex(std::string name) {
  const auto id = static_cast<VertexId>(names_.size());
  if (name.empty()) name = "v" + std::to_string(id);
  names_.push_back(std::move(name));
  incidence_.emplace_back();
  return id;
}

EdgeId ColoredGraph::add_edge(VertexId tail, VertexId head, Color color) {
  if (!has_vertex(tail) || !has_vertex(head)) {
    throw StructuralError("edge endpoint " +
                          std::to_string(has_vertex(tail) ? head : tail) +
                          " is not a vertex");
  }
  const auto id = static_cast<EdgeId>(edges_.size());
  edges_.push_back(Edge{id, tail, head, color});
  incidence_[tail].push_back(id);
  if (head != tail) incidence_[head].push_back(id);
  return id;
}

std::size_t ColoredGraph::valence(VertexId v) const {
  std::size_t n = 0;
  for (EdgeId e : incident(v)) n += edges_[e].is_loop() ? 2 : 1;
  return n;
}

std::vector<VertexId> Walk::vertices(const ColoredGraph& g) const {
  if (!g.has_vertex(start)) throw StructuralError("walk starts at a missing vertex");
  std::vector<VertexId> out{start};
  out.reserve(steps.size() + 1);
  VertexId at = start;
  for (const Step& s : steps) {
    if (!g.has_edge(s.edge)) throw StructuralError("walk uses a missing edge");
    const Edge& e = g.edge(s.edge);
    const VertexId from = s.forward ? e.tail : e.head;
    if (from != at) {
      throw StructuralError("walk step along edge " + std::to_string(e.id) +
                            " does not start at vertex " + std::to_string(at));
    }
    at = s.forward ? e.head : e.tail;
    out.push_back(at);
  }
  return out;
}

VertexId Walk::end(const ColoredGraph& g) const { return vertices(g).back(); }

bool Walk::is_closed(const ColoredGraph& g) const { return end(g) == start; }

bool Walk::is_simple(const ColoredGraph& g) const {
  const auto vs = vertices(g);
  std::set<VertexId> seen(vs.begin(), vs.end() - 1);
  if (seen.size() != vs.size() - 1) return false;
  // The last vertex may only repeat the first one.
  return vs.size() == 1 || vs.back() == vs.front() || !seen.contains(vs.back());
}

bool Walk::is_reduced(const ColoredGraph& g) const {
  (void)vertices(g);
  auto backtracks = [](const Step& a, const Step& b) {
    return a.edge == b.edge && a.forward != b.forward;
  };
  for (std::size_t i = 0; i + 1 < steps.size(); ++i) {
    if (backtracks(steps[i], steps[i + 1])) return false;
  }
  if (steps.size() >= 2 && is_closed(g) && backtracks(steps.back(), steps.front())) {
    return false;
  }
  return true;
}

Walk Walk::reversed(const ColoredGraph& g) const {
  Walk r{end(g), {}};
  r.steps.reserve(steps.size());
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    r.steps.push_back(Step{it->edge, !it->forward});
  }
  return r;
}

std::size_t Walk::num_colors(const ColoredGraph& g) const {
  std::set<Color> colors;
  for (const Step& s : steps) colors.insert(g.edge(s.edge).color);
  return colors.size();
}

Subgraph extract_subgraph(const ColoredGraph& g, std::vector<VertexId> vertices,
                          std::vector<EdgeId> edges) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  constexpr auto kAbsent = std::numeric_limits<VertexId>::max();
  std::vector<VertexId> local(g.num_vertices(), kAbsent);
  Subgraph out;
  for (VertexId v : vertices) {
    if (!g.has_vertex(v)) throw StructuralError("subgraph lists a missing vertex");
    local[v] = out.graph.add_vertex(g.name(v));
    out.vertex_origin.push_back(v);
  }
  for (EdgeId id : edges) {
    if (!g.has_edge(id)) throw StructuralError("subgraph lists a missing edge");
    const Edge& e = g.edge(id);
    if (local[e.tail] == kAbsent || local[e.head] == kAbsent) {
      throw StructuralError("subgraph edge " + std::to_string(id) +
                            " has an endpoint outside the subgraph");
    }
    out.graph.add_edge(local[e.tail], local[e.head], e.color);
    out.edge_origin.push_back(id);
  }
  return out;
}

GraphMap identity_map(std::shared_ptr<const ColoredGraph> g) {
  GraphMap m{g, g, {}, {}};
  m.vertex_map.resize(g->num_vertices());
  std::iota(m.vertex_map.begin(), m.vertex_map.end(), VertexId{0});
  m.edge_map.resize(g->num_edges());
  std::iota(m.edge_map.begin(), m.edge_map.end(), EdgeId{0});
  return m;
}

GraphMap compose(const GraphMap& first, const GraphMap& second) {
  check_well_defined(first);
  check_well_defined(second);
  if (first.target != second.source) {
    throw PreconditionError("cannot compose maps: target and source differ");
  }
  GraphMap out{first.source, second.target, {}, {}};
  for (VertexId v : first.vertex_map) out.vertex_map.push_back(second.vertex_map[v]);
  for (EdgeId e : first.edge_map) out.edge_map.push_back(second.edge_map[e]);
  return out;
}

void check_well_defined(const GraphMap& m) {
  if (!m.source || !m.target) throw StructuralError("graph map is missing a graph");
  if (m.vertex_map.size() != m.source->num_vertices() ||
      m.edge_map.size() != m.source->num_edges()) {
    throw StructuralError("graph map is not total on its source");
  }
  for (VertexId v : m.vertex_map) {
    if (!m.target->has_vertex(v)) {
      throw StructuralError("graph map sends a vertex to missing vertex " +
                            std::to_string(v));
    }
  }
  for (EdgeId e : m.edge_map) {
    if (!m.target->has_edge(e)) {
      throw StructuralError("graph map sends an edge to missing edge " +
                            std::to_string(e));
    }
  }
}

bool is_combinatorial(const GraphMap& m) {
  check_well_defined(m);
  for (const Edge& e : m.source->edges()) {
    const Edge& image = m.target->edge(m.edge_map[e.id]);
    if (m.vertex_map[e.tail] != image.tail || m.vertex_map[e.head] != image.head ||
        e.color != image.color) {
      return false;
    }
  }
  return true;
}

namespace {

// Images of the oriented edges ending at `v`, as (target edge, arrives
// forward) pairs. A loop contributes both of its orientations.
std::vector<std::pair<EdgeId, bool>> star_image(const GraphMap& m, VertexId v) {
  std::vector<std::pair<EdgeId, bool>> out;
  for (EdgeId id : m.source->incident(v)) {
    const Edge& e = m.source->edge(id);
    if (e.head == v) out.emplace_back(m.edge_map[id], true);
    if (e.tail == v) out.emplace_back(m.edge_map[id], false);
  }
  return out;
}

void require_combinatorial(const GraphMap& m) {
  if (!is_combinatorial(m)) throw PreconditionError("graph map is not combinatorial");
}

}  // namespace

bool is_immersion(const GraphMap& m) {
  require_combinatorial(m);
  for (VertexId v = 0; v < m.source->num_vertices(); ++v) {
    auto star = star_image(m, v);
    std::sort(star.begin(), star.end());
    if (std::adjacent_find(star.begin(), star.end()) != star.end()) return false;
  }
  return true;
}

bool is_degree_n_cover(const GraphMap& m, std::size_t n) {
  if (n == 0) throw PreconditionError("cover degree must be positive");
  require_combinatorial(m);
  std::vector<std::size_t> vertex_fiber(m.target->num_vertices(), 0);
  std::vector<std::size_t> edge_fiber(m.target->num_edges(), 0);
  for (VertexId v : m.vertex_map) ++vertex_fiber[v];
  for (EdgeId e : m.edge_map) ++edge_fiber[e];
  auto is_n = [n](std::size_t k) { return k == n; };
  if (!std::all_of(vertex_fiber.begin(), vertex_fiber.end(), is_n) ||
      !std::all_of(edge_fiber.begin(), edge_fiber.end(), is_n)) {
    return false;
  }
  for (VertexId v = 0; v < m.source->num_vertices(); ++v) {
    if (m.source->valence(v) != m.target->valence(m.vertex_map[v])) return false;
  }
  return is_immersion(m);
}

std::optional<std::size_t> cover_degree(const GraphMap& m) {
  check_well_defined(m);
  if (m.target->num_vertices() == 0) return std::nullopt;
  const auto n = static_cast<std::size_t>(
      std::count(m.vertex_map.begin(), m.vertex_map.end(), VertexId{0}));
  if (n == 0 || !is_degree_n_cover(m, n)) return std::nullopt;
  return n;
}

bool is_embedding(const GraphMap& m) {
  if (!is_combinatorial(m)) return false;
  std::set<VertexId> vs(m.vertex_map.begin(), m.vertex_map.end());
  std::set<EdgeId> es(m.edge_map.begin(), m.edge_map.end());
  return vs.size() == m.vertex_map.size() && es.size() == m.edge_map.size();
}

bool is_isomorphism(const GraphMap& m) {
  return is_embedding(m) && m.target->num_vertices() == m.vertex_map.size() &&
         m.target->num_edges() == m.edge_map.size();
}

std::vector<std::size_t> component_labels(const ColoredGraph& g, std::size_t* count) {
  constexpr auto kUnset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> label(g.num_vertices(), kUnset);
  std::size_t next = 0;
  for (VertexId root = 0; root < g.num_vertices(); ++root) {
    if (label[root] != kUnset) continue;
    std::queue<VertexId> todo;
    label[root] = next;
    todo.push(root);
    while (!todo.empty()) {
      const VertexId v = todo.front();
      todo.pop();
      for (EdgeId id : g.incident(v)) {
        const VertexId w = g.edge(id).opposite(v);
        if (label[w] == kUnset) {
          label[w] = next;
          todo.push(w);
        }
      }
    }
    ++next;
  }
  if (count) *count = next;
  return label;
}

std::size_t num_components(const ColoredGraph& g) {
  std::size_t n = 0;
  component_labels(g, &n);
  return n;
}

bool is_connected(const ColoredGraph& g) { return num_components(g) == 1; }

std::vector<Subgraph> connected_components(const ColoredGraph& g) {
  std::size_t count = 0;
  const auto label = component_labels(g, &count);
  std::vector<std::vector<VertexId>> vs(count);
  std::vector<std::vector<EdgeId>> es(count);
  for (VertexId v = 0; v < g.num_vertices(); ++v) vs[label[v]].push_back(v);
  for (const Edge& e : g.edges()) es[label[e.tail]].push_back(e.id);
  std::vector<Subgraph> out;
  out.reserve(count);
  for (std::size_t c = 0; c < count; ++c) {
    out.push_back(extract_subgraph(g, std::move(vs[c]), std::move(es[c])));
  }
  return out;
}

std::size_t free_rank(const ColoredGraph& g) {
  if (!is_connected(g)) {
    throw PreconditionError(
        "free_rank needs a connected graph; split it with connected_components first");
  }
  return g.num_edges() + 1 - g.num_vertices();
}

std::vector<std::vector<EdgeId>> blocks(const ColoredGraph& g) {
  std::vector<std::vector<EdgeId>> out;
  constexpr int kUnseen = -1;
  std::vector<int> disc(g.num_vertices(), kUnseen);
  std::vector<int> low(g.num_vertices(), 0);
  std::vector<EdgeId> edge_stack;

  struct Frame {
    VertexId v;
    EdgeId parent_edge;
    bool has_parent;
    std::size_t next = 0;
  };

  int clock = 0;
  for (VertexId root = 0; root < g.num_vertices(); ++root) {
    if (disc[root] != kUnseen) continue;
    disc[root] = low[root] = clock++;
    std::vector<Frame> frames{{root, 0, false}};
    while (!frames.empty()) {
      Frame& f = frames.back();
      const auto inc = g.incident(f.v);
      if (f.next < inc.size()) {
        const EdgeId id = inc[f.next++];
        const Edge& e = g.edge(id);
        if (e.is_loop() || (f.has_parent && id == f.parent_edge)) continue;
        const VertexId w = e.opposite(f.v);
        if (disc[w] == kUnseen) {
          edge_stack.push_back(id);
          disc[w] = low[w] = clock++;
          frames.push_back({w, id, true});
        } else if (disc[w] < disc[f.v]) {
          edge_stack.push_back(id);
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      const Frame done = f;
      frames.pop_back();
      if (!done.has_parent) continue;
      const VertexId u = frames.back().v;
      low[u] = std::min(low[u], low[done.v]);
      if (low[done.v] >= disc[u]) {
        std::vector<EdgeId> block;
        while (true) {
          const EdgeId top = edge_stack.back();
          edge_stack.pop_back();
          block.push_back(top);
          if (top == done.parent_edge) break;
        }
        std::sort(block.begin(), block.end());
        out.push_back(std::move(block));
      }
    }
  }
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) out.push_back({e.id});
  }
  std::sort(out.begin(), out.end());
  return out;
}

Subgraph core(const ColoredGraph& g) {
  if (!is_connected(g)) throw PreconditionError("core needs a connected graph");
  if (g.num_edges() + 1 == g.num_vertices()) return extract_subgraph(g, {0}, {});

  std::vector<std::size_t> valence(g.num_vertices());
  std::vector<bool> vertex_gone(g.num_vertices(), false);
  std::vector<bool> edge_gone(g.num_edges(), false);
  std::queue<VertexId> leaves;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    valence[v] = g.valence(v);
    if (valence[v] == 1) leaves.push(v);
  }
  while (!leaves.empty()) {
    const VertexId v = leaves.front();
    leaves.pop();
    if (vertex_gone[v] || valence[v] != 1) continue;
    vertex_gone[v] = true;
    for (EdgeId id : g.incident(v)) {
      if (edge_gone[id]) continue;
      edge_gone[id] = true;
      const VertexId w = g.edge(id).opposite(v);
      if (--valence[w] == 1) leaves.push(w);
    }
  }
  std::vector<VertexId> vs;
  std::vector<EdgeId> es;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (!vertex_gone[v]) vs.push_back(v);
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (!edge_gone[e]) es.push_back(e);
  }
  return extract_subgraph(g, std::move(vs), std::move(es));
}

std::vector<VertexId> branching_vertices(const ColoredGraph& g) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (g.valence(v) > 2) out.push_back(v);
  }
  return out;
}

std::size_t num_colors(const ColoredGraph& g, std::span<const EdgeId> edges) {
  std::set<Color> colors;
  for (EdgeId e : edges) colors.insert(g.edge(e).color);
  return colors.size();
}

}  // namespace artin
