#include "artin/fiber.h"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <limits>
#include <set>
#include <string>
#include <unordered_map>

#include "artin/errors.h"

namespace artin {

namespace {

std::uint64_t pair_key(VertexId a, VertexId b) {
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

bool same_target(const GraphMap& a, const GraphMap& b) {
  if (a.target == b.target) return true;
  const ColoredGraph& x = *a.target;
  const ColoredGraph& y = *b.target;
  if (x.num_vertices() != y.num_vertices() || x.num_edges() != y.num_edges()) return false;
  for (EdgeId e = 0; e < x.num_edges(); ++e) {
    const Edge& p = x.edge(e);
    const Edge& q = y.edge(e);
    if (p.tail != q.tail || p.head != q.head || p.color != q.color) return false;
  }
  return true;
}

Step step_from(const ColoredGraph& g, EdgeId e, VertexId from) {
  return Step{e, g.edge(e).tail == from};
}

}  // namespace

const char* to_string(ComponentKind kind) {
  switch (kind) {
    case ComponentKind::kDiagonal: return "diagonal";
    case ComponentKind::kTrivial: return "trivial";
    case ComponentKind::kCycleBearing: return "cycle-bearing";
  }
  return "unknown";
}

Subgraph FiberProduct::component_graph(std::size_t c) const {
  const FiberComponent& comp = components.at(c);
  return extract_subgraph(*graph, comp.vertices, comp.edges);
}

FiberProduct fiber_product(const GraphMap& rho1, const GraphMap& rho2) {
  check_well_defined(rho1);
  check_well_defined(rho2);
  if (!same_target(rho1, rho2)) {
    throw PreconditionError("fiber product needs both maps to share their target");
  }
  if (!is_immersion(rho1) || !is_immersion(rho2)) {
    throw PreconditionError("fiber product needs both maps to be immersions");
  }
  const ColoredGraph& y1 = *rho1.source;
  const ColoredGraph& y2 = *rho2.source;
  const ColoredGraph& x = *rho1.target;

  FiberProduct f;
  f.self_product = rho1.source == rho2.source && rho1.vertex_map == rho2.vertex_map &&
                   rho1.edge_map == rho2.edge_map;

  std::vector<std::vector<VertexId>> over_vertex(x.num_vertices());
  for (VertexId v = 0; v < y2.num_vertices(); ++v) over_vertex[rho2.vertex_map[v]].push_back(v);
  std::vector<std::vector<EdgeId>> over_edge(x.num_edges());
  for (EdgeId e = 0; e < y2.num_edges(); ++e) over_edge[rho2.edge_map[e]].push_back(e);

  auto graph = std::make_shared<ColoredGraph>();
  std::unordered_map<std::uint64_t, VertexId> index;
  for (VertexId v1 = 0; v1 < y1.num_vertices(); ++v1) {
    for (VertexId v2 : over_vertex[rho1.vertex_map[v1]]) {
      const VertexId id = graph->add_vertex("(" + y1.name(v1) + "," + y2.name(v2) + ")");
      index.emplace(pair_key(v1, v2), id);
      f.vertex_pairs.emplace_back(v1, v2);
    }
  }
  for (EdgeId e1 = 0; e1 < y1.num_edges(); ++e1) {
    const Edge& a = y1.edge(e1);
    for (EdgeId e2 : over_edge[rho1.edge_map[e1]]) {
      const Edge& b = y2.edge(e2);
      graph->add_edge(index.at(pair_key(a.tail, b.tail)), index.at(pair_key(a.head, b.head)),
                      a.color);
      f.edge_pairs.emplace_back(e1, e2);
    }
  }

  f.first.source = graph;
  f.first.target = rho1.source;
  f.second.source = graph;
  f.second.target = rho2.source;
  for (const auto& [v1, v2] : f.vertex_pairs) {
    f.first.vertex_map.push_back(v1);
    f.second.vertex_map.push_back(v2);
  }
  for (const auto& [e1, e2] : f.edge_pairs) {
    f.first.edge_map.push_back(e1);
    f.second.edge_map.push_back(e2);
  }
  f.graph = graph;

  std::size_t count = 0;
  f.component_of = component_labels(*graph, &count);
  f.components.resize(count);
  for (VertexId v = 0; v < graph->num_vertices(); ++v) {
    f.components[f.component_of[v]].vertices.push_back(v);
  }
  for (const Edge& e : graph->edges()) f.components[f.component_of[e.tail]].edges.push_back(e.id);

  std::vector<bool> diagonal(count, false);
  if (f.self_product) {
    for (VertexId v = 0; v < graph->num_vertices(); ++v) {
      if (f.vertex_pairs[v].first == f.vertex_pairs[v].second) diagonal[f.component_of[v]] = true;
    }
  }
  for (std::size_t c = 0; c < count; ++c) {
    FiberComponent& comp = f.components[c];
    comp.rank = comp.edges.size() + 1 - comp.vertices.size();
    if (diagonal[c]) {
      comp.kind = ComponentKind::kDiagonal;
      f.diagonal_components.push_back(c);
    } else {
      comp.kind = comp.rank == 0 ? ComponentKind::kTrivial : ComponentKind::kCycleBearing;
    }
    if (comp.rank > 0) {
      const Subgraph sub = f.component_graph(c);
      const Subgraph retract = core(sub.graph);
      for (VertexId v : branching_vertices(retract.graph)) {
        comp.branching.push_back(sub.vertex_origin[retract.vertex_origin[v]]);
      }
    }
  }
  return f;
}

MonochromeVerdict monochrome_check(const FiberProduct& f) {
  MonochromeVerdict verdict;
  const ColoredGraph& g = *f.graph;
  for (std::size_t c = 0; c < f.components.size(); ++c) {
    if (!f.components[c].nontrivial()) continue;
    ++verdict.checked_components;
    const Subgraph sub = f.component_graph(c);
    for (const std::vector<EdgeId>& block : blocks(sub.graph)) {
      ++verdict.checked_blocks;
      std::vector<EdgeId> local(block.begin(), block.end());
      if (num_colors(sub.graph, local) < 2) continue;

      // Two edges of different colors meeting at a vertex v, closed up by a
      // path inside the block that avoids v.
      std::vector<EdgeId> in_block;
      for (EdgeId e : block) in_block.push_back(sub.edge_origin[e]);
      std::sort(in_block.begin(), in_block.end());
      auto member = [&in_block](EdgeId e) {
        return std::binary_search(in_block.begin(), in_block.end(), e);
      };
      std::optional<Walk> cycle;
      for (EdgeId e1 : in_block) {
        for (VertexId v : {g.edge(e1).tail, g.edge(e1).head}) {
          for (EdgeId e2 : g.incident(v)) {
            if (!member(e2) || g.edge(e2).color == g.edge(e1).color) continue;
            const VertexId x = g.edge(e1).opposite(v);
            const VertexId y = g.edge(e2).opposite(v);
            // BFS from x to y inside the block, never entering v.
            constexpr EdgeId kNone = std::numeric_limits<EdgeId>::max();
            std::unordered_map<VertexId, EdgeId> via{{x, kNone}};
            std::deque<VertexId> queue{x};
            while (!queue.empty() && !via.count(y)) {
              const VertexId at = queue.front();
              queue.pop_front();
              for (EdgeId e : g.incident(at)) {
                if (!member(e)) continue;
                const VertexId w = g.edge(e).opposite(at);
                if (w == v || via.count(w)) continue;
                via.emplace(w, e);
                queue.push_back(w);
              }
            }
            if (!via.count(y)) continue;
            std::vector<EdgeId> back;
            for (VertexId at = y; at != x;) {
              back.push_back(via.at(at));
              at = g.edge(via.at(at)).opposite(at);
            }
            Walk w{v, {step_from(g, e1, v)}};
            VertexId at = x;
            for (auto it = back.rbegin(); it != back.rend(); ++it) {
              w.steps.push_back(step_from(g, *it, at));
              at = g.edge(*it).opposite(at);
            }
            w.steps.push_back(step_from(g, e2, y));
            cycle = std::move(w);
            break;
          }
          if (cycle) break;
        }
        if (cycle) break;
      }
      if (!cycle) continue;
      verdict.all_monochrome = false;
      verdict.witness = std::move(cycle);
      verdict.component = c;
      return verdict;
    }
  }
  return verdict;
}

std::size_t monochrome_cycle_rank(const ColoredGraph& component) {
  std::set<Color> colors;
  for (const Edge& e : component.edges()) colors.insert(e.color);
  std::size_t rank = 0;
  for (Color c : colors) {
    std::vector<EdgeId> edges;
    std::vector<VertexId> vertices;
    for (const Edge& e : component.edges()) {
      if (e.color != c) continue;
      edges.push_back(e.id);
      vertices.push_back(e.tail);
      vertices.push_back(e.head);
    }
    const Subgraph sub = extract_subgraph(component, vertices, edges);
    rank += sub.graph.num_edges() + num_components(sub.graph) - sub.graph.num_vertices();
  }
  return rank;
}

bool fill_rank_check(const ColoredGraph& component) {
  return monochrome_cycle_rank(component) == free_rank(component);
}

Word read_word(const ColoredGraph& g, const Walk& w) {
  Word word;
  for (const Step& s : w.steps) word.push_back(Letter{g.edge(s.edge).color, s.forward ? 1 : -1});
  return word;
}

OppressiveSet oppressive_set(const GraphMap& rho, VertexId y0, std::size_t limit) {
  if (!is_immersion(rho)) throw PreconditionError("oppressive set needs an immersion");
  const ColoredGraph& y = *rho.source;
  if (!y.has_vertex(y0)) throw PreconditionError("basepoint is not a vertex of the source");

  // Every nontrivial simple path from y0, in depth-first order.
  std::vector<Walk> paths;
  std::vector<bool> on_path(y.num_vertices(), false);
  Walk current{y0, {}};
  on_path[y0] = true;
  bool paths_truncated = false;
  std::function<void(VertexId)> extend = [&](VertexId at) {
    for (EdgeId e : y.incident(at)) {
      if (paths.size() >= limit) {
        paths_truncated = true;
        return;
      }
      const VertexId w = y.edge(e).opposite(at);
      if (on_path[w]) continue;
      on_path[w] = true;
      current.steps.push_back(step_from(y, e, at));
      paths.push_back(current);
      extend(w);
      current.steps.pop_back();
      on_path[w] = false;
    }
  };
  extend(y0);

  std::vector<VertexId> ends;
  for (const Walk& p : paths) ends.push_back(p.end(y));

  OppressiveSet out;
  out.basepoint = y0;
  out.truncated = paths_truncated;
  auto emit = [&](const Walk& mu1, Walk mu2) {
    if (out.elements.size() >= limit) {
      out.truncated = true;
      return false;
    }
    Word word = read_word(y, mu1);
    Word tail = read_word(y, mu2);
    word.insert(word.end(), tail.begin(), tail.end());
    out.elements.push_back({mu1, std::move(mu2), std::move(word)});
    return true;
  };
  for (std::size_t i = 0; i < paths.size(); ++i) {
    const VertexId y1 = ends[i];
    const VertexId image = rho.vertex_map[y1];
    if (image == rho.vertex_map[y0] && !emit(paths[i], Walk{y0, {}})) return out;
    for (std::size_t j = 0; j < paths.size(); ++j) {
      const VertexId y2 = ends[j];
      if (y2 == y1 || rho.vertex_map[y2] != image) continue;
      if (!emit(paths[i], paths[j].reversed(y))) return out;
    }
  }
  return out;
}

const char* to_string(TraceOutcome outcome) {
  switch (outcome) {
    case TraceOutcome::kCloses: return "closes";
    case TraceOutcome::kExits: return "exits-at-vertex";
    case TraceOutcome::kNoEdge: return "no-edge";
  }
  return "unknown";
}

TraceResult traces_word(const ColoredGraph& y, VertexId y0, const Word& word) {
  TraceResult r;
  VertexId at = y0;
  for (const Letter& letter : word) {
    std::optional<VertexId> next;
    for (EdgeId e : y.incident(at)) {
      const Edge& edge = y.edge(e);
      if (edge.color != letter.color) continue;
      if (letter.exponent > 0 && edge.tail == at) next = edge.head;
      if (letter.exponent < 0 && edge.head == at) next = edge.tail;
      if (next) break;
    }
    if (!next) {
      r.outcome = TraceOutcome::kNoEdge;
      r.vertex = at;
      return r;
    }
    at = *next;
    ++r.consumed;
  }
  r.vertex = at;
  r.outcome = at == y0 ? TraceOutcome::kCloses : TraceOutcome::kExits;
  return r;
}

}  // namespace artin
