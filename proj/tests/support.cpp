#include "support.h"

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <string>

#include "artin/admissibility.h"
#include "artin/errors.h"

namespace artin::testing {

namespace {

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

std::size_t gf2_rank(std::vector<std::vector<bool>> rows) {
  std::size_t rank = 0;
  const std::size_t width = rows.empty() ? 0 : rows.front().size();
  for (std::size_t col = 0; col < width && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && !rows[pivot][col]) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && rows[r][col]) {
        for (std::size_t c = col; c < width; ++c) rows[r][c] = rows[r][c] != rows[rank][c];
      }
    }
    ++rank;
  }
  return rank;
}

std::optional<std::vector<std::vector<EdgeId>>> all_simple_cycles(const ColoredGraph& g,
                                                                  std::size_t max_rank) {
  // Spanning forest by union-find; each other edge closes a fundamental cycle.
  const std::size_t n = g.num_vertices();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::vector<std::vector<std::pair<VertexId, EdgeId>>> tree(n);
  std::vector<EdgeId> extra;
  for (const Edge& e : g.edges()) {
    const std::size_t a = find_root(parent, e.tail);
    const std::size_t b = find_root(parent, e.head);
    if (a == b) {
      extra.push_back(e.id);
    } else {
      parent[a] = b;
      tree[e.tail].push_back({e.head, e.id});
      tree[e.head].push_back({e.tail, e.id});
    }
  }
  if (extra.size() > max_rank) return std::nullopt;

  auto tree_path = [&](VertexId from, VertexId to) {
    std::vector<long> via(n, -1);
    std::vector<VertexId> prev(n, 0);
    std::vector<bool> seen(n, false);
    std::vector<VertexId> queue{from};
    seen[from] = true;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (auto [w, e] : tree[queue[i]]) {
        if (seen[w]) continue;
        seen[w] = true;
        via[w] = e;
        prev[w] = queue[i];
        queue.push_back(w);
      }
    }
    std::vector<EdgeId> path;
    for (VertexId v = to; v != from; v = prev[v]) path.push_back(static_cast<EdgeId>(via[v]));
    return path;
  };

  std::vector<std::vector<bool>> basis;
  for (EdgeId e : extra) {
    std::vector<bool> row(g.num_edges(), false);
    row[e] = true;
    for (EdgeId t : tree_path(g.edge(e).tail, g.edge(e).head)) row[t] = true;
    basis.push_back(row);
  }

  std::vector<std::vector<EdgeId>> cycles;
  const std::size_t k = basis.size();
  for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
    std::vector<bool> sum(g.num_edges(), false);
    for (std::size_t i = 0; i < k; ++i) {
      if (mask >> i & 1) {
        for (std::size_t c = 0; c < sum.size(); ++c) sum[c] = sum[c] != basis[i][c];
      }
    }
    std::vector<EdgeId> edges;
    for (EdgeId e = 0; e < sum.size(); ++e) {
      if (sum[e]) edges.push_back(e);
    }
    std::map<VertexId, int> degree;
    for (EdgeId e : edges) {
      ++degree[g.edge(e).tail];
      ++degree[g.edge(e).head];
    }
    if (!std::all_of(degree.begin(), degree.end(), [](auto& p) { return p.second == 2; })) continue;
    // 2-regular: a single cycle iff the edges are connected.
    std::map<VertexId, std::size_t> local;
    for (auto& [v, d] : degree) local.emplace(v, local.size());
    std::vector<std::size_t> p(local.size());
    std::iota(p.begin(), p.end(), 0);
    std::size_t parts = local.size();
    for (EdgeId e : edges) {
      const std::size_t a = find_root(p, local[g.edge(e).tail]);
      const std::size_t b = find_root(p, local[g.edge(e).head]);
      if (a != b) {
        p[a] = b;
        --parts;
      }
    }
    if (parts == 1) cycles.push_back(edges);
  }
  std::sort(cycles.begin(), cycles.end());
  return cycles;
}

std::optional<bool> has_mixed_cycle(const ColoredGraph& g, std::size_t max_rank) {
  auto cycles = all_simple_cycles(g, max_rank);
  if (!cycles) return std::nullopt;
  for (const auto& c : *cycles) {
    for (EdgeId e : c) {
      if (g.edge(e).color != g.edge(c.front()).color) return true;
    }
  }
  return false;
}

std::size_t count_components(const ColoredGraph& g) {
  std::vector<std::size_t> parent(g.num_vertices());
  std::iota(parent.begin(), parent.end(), 0);
  std::size_t parts = g.num_vertices();
  for (const Edge& e : g.edges()) {
    const std::size_t a = find_root(parent, e.tail);
    const std::size_t b = find_root(parent, e.head);
    if (a != b) {
      parent[a] = b;
      --parts;
    }
  }
  return parts;
}

bool two_colorable(const DefiningGraph& gamma) {
  std::vector<int> side(gamma.num_vertices(), -1);
  for (Generator s = 0; s < gamma.num_vertices(); ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    std::vector<Generator> stack{s};
    while (!stack.empty()) {
      const Generator a = stack.back();
      stack.pop_back();
      for (const GammaEdge& e : gamma.edges()) {
        if (e.u != a && e.v != a) continue;
        const Generator b = e.u == a ? e.v : e.u;
        if (side[b] == -1) {
          side[b] = 1 - side[a];
          stack.push_back(b);
        } else if (side[b] == side[a]) {
          return false;
        }
      }
    }
  }
  return true;
}

DefiningGraph random_gamma(Rng& rng, int max_vertices, double p, int min_label, int max_label) {
  DefiningGraph gamma;
  const int n = std::uniform_int_distribution<int>(2, max_vertices)(rng);
  for (int i = 0; i < n; ++i) gamma.add_vertex(std::string(1, static_cast<char>('a' + i)));
  std::bernoulli_distribution coin(p);
  std::uniform_int_distribution<int> label(min_label, max_label);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (coin(rng)) gamma.add_edge(gamma.name(i), gamma.name(j), label(rng));
    }
  }
  return gamma;
}

DefiningGraph random_orientation(const DefiningGraph& gamma, Rng& rng) {
  Orientation o(gamma.num_edges());
  std::bernoulli_distribution coin(0.5);
  for (std::size_t e = 0; e < gamma.num_edges(); ++e) {
    const GammaEdge& edge = gamma.edges()[e];
    if (edge.label >= 3) o[e] = coin(rng) ? edge.u : edge.v;
  }
  return gamma.with_orientation(o);
}

std::optional<DefiningGraph> random_admissible(Rng& rng, int max_vertices, double p,
                                               int min_label, int max_label, int attempts) {
  for (int i = 0; i < attempts; ++i) {
    DefiningGraph gamma = random_gamma(rng, max_vertices, p, min_label, max_label);
    ColoredGraph shape;
    for (std::size_t v = 0; v < gamma.num_vertices(); ++v) shape.add_vertex();
    for (const GammaEdge& e : gamma.edges()) shape.add_edge(e.u, e.v, Color{0});
    if (count_components(shape) != 1) continue;
    if (auto o = find_admissible_orientation(gamma)) return gamma.with_orientation(*o);
  }
  return std::nullopt;
}

GraphMap random_bouquet_immersion(Rng& rng, std::size_t max_vertices, std::size_t colors) {
  auto bouquet = std::make_shared<ColoredGraph>();
  bouquet->add_vertex("o");
  for (std::size_t c = 0; c < colors; ++c) bouquet->add_edge(0, 0, Color{static_cast<std::uint32_t>(c)});
  std::bernoulli_distribution keep(0.6);
  while (true) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_vertices)(rng);
    auto g = std::make_shared<ColoredGraph>();
    for (std::size_t v = 0; v < n; ++v) g->add_vertex("y" + std::to_string(v));
    GraphMap m;
    m.target = bouquet;
    for (std::size_t c = 0; c < colors; ++c) {
      std::vector<VertexId> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      for (VertexId v = 0; v < n; ++v) {
        if (!keep(rng)) continue;
        g->add_edge(v, perm[v], Color{static_cast<std::uint32_t>(c)});
        m.edge_map.push_back(static_cast<EdgeId>(c));
      }
    }
    if (count_components(*g) != 1) continue;
    m.source = g;
    m.vertex_map.assign(n, 0);
    return m;
  }
}

}  // namespace artin::testing
