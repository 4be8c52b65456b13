#include "artin/admissibility.h"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>
#include <string>
#include <tuple>

#include "artin/errors.h"
#include "union_find.h"

namespace artin {

namespace {

void require_sound(const DefiningGraph& gamma) {
  const OrientationReport report = validate(gamma);
  if (!report.structurally_sound()) {
    throw StructuralError("defining graph is not valid: " + report.issues.front().message);
  }
}

void require_well_formed(const DefiningGraph& gamma) {
  const OrientationReport report = validate(gamma);
  if (!report.well_formed()) {
    throw PreconditionError("defining graph is not well formed: " +
                            report.issues.front().message);
  }
}

// Generator whose + copy is an endpoint of the double cover edge. For a
// collapsed edge this is the tail of the alternating orientation.
Generator plus_end(const DoubleCoverGraph& d, EdgeId e) {
  const Edge& edge = d.graph.edge(e);
  const std::size_t n = d.num_generators();
  return static_cast<Generator>(edge.tail < n ? edge.tail : edge.head);
}

struct CollapsedForest {
  detail::UnionFind components;
  std::vector<std::vector<EdgeId>> adjacency;
  // First collapsed edge that closed a cycle, if any.
  std::optional<EdgeId> cycle_edge;

  explicit CollapsedForest(std::size_t n) : components(n), adjacency(n) {}
};

CollapsedForest build_forest(const DoubleCoverGraph& d) {
  CollapsedForest f(d.graph.num_vertices());
  for (const Edge& e : d.graph.edges()) {
    if (!d.collapsed[e.id]) continue;
    if (!f.components.unite(e.tail, e.head)) {
      if (!f.cycle_edge) f.cycle_edge = e.id;
      continue;
    }
    f.adjacency[e.tail].push_back(e.id);
    f.adjacency[e.head].push_back(e.id);
  }
  return f;
}

// Path from `from` to `to` through the forest edges, as double cover edges.
std::optional<std::vector<EdgeId>> forest_path(const DoubleCoverGraph& d,
                                               const CollapsedForest& f, VertexId from,
                                               VertexId to) {
  const std::size_t n = d.graph.num_vertices();
  constexpr EdgeId kNone = std::numeric_limits<EdgeId>::max();
  std::vector<EdgeId> via(n, kNone);
  std::vector<bool> seen(n, false);
  std::deque<VertexId> queue{from};
  seen[from] = true;
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    if (v == to) break;
    for (EdgeId e : f.adjacency[v]) {
      const VertexId w = d.graph.edge(e).opposite(v);
      if (seen[w]) continue;
      seen[w] = true;
      via[w] = e;
      queue.push_back(w);
    }
  }
  if (!seen[to]) return std::nullopt;
  std::vector<EdgeId> path;
  for (VertexId v = to; v != from;) {
    path.push_back(via[v]);
    v = d.graph.edge(via[v]).opposite(v);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

// Projects a walk of the double cover to the defining graph, recording the
// tail of every collapsed edge.
MisdirectedWitness project(const DoubleCoverGraph& d, VertexId start,
                           const std::vector<EdgeId>& path) {
  const std::size_t n = d.num_generators();
  MisdirectedWitness w;
  VertexId at = start;
  w.cycle.push_back(static_cast<Generator>(at % n));
  for (EdgeId e : path) {
    at = d.graph.edge(e).opposite(at);
    w.cycle.push_back(static_cast<Generator>(at % n));
    w.tails.push_back(plus_end(d, e));
  }
  return w;
}

struct Violation {
  VertexId from;
  VertexId to;
  // The uncollapsed lift whose endpoints got joined, for the even case.
  std::optional<EdgeId> closing;
};

// Pairs of double cover vertices that must stay in distinct components.
std::vector<Violation> forbidden_pairs(const DefiningGraph& gamma, const DoubleCoverGraph& d) {
  const auto n = static_cast<VertexId>(gamma.num_vertices());
  std::vector<Violation> pairs;
  std::vector<bool> relevant(n, false);
  for (std::size_t e = 0; e < gamma.num_edges(); ++e) {
    const GammaEdge& edge = gamma.edges()[e];
    if (!edge.iota && edge.label >= 3) continue;
    relevant[edge.u] = relevant[edge.v] = true;
    if (!d.collapsed[2 * e + 1]) {
      const Edge& lift = d.graph.edge(static_cast<EdgeId>(2 * e + 1));
      pairs.push_back({lift.tail, lift.head, static_cast<EdgeId>(2 * e + 1)});
    }
  }
  for (VertexId a = 0; a < n; ++a) {
    if (relevant[a]) pairs.push_back({a, n + a, std::nullopt});
  }
  return pairs;
}

struct Analysis {
  bool forest = true;
  bool separated = true;
  std::optional<MisdirectedWitness> witness;
};

Analysis analyze(const DefiningGraph& gamma, bool want_witness) {
  const DoubleCoverGraph d = double_cover(gamma);
  CollapsedForest f = build_forest(d);
  Analysis out;
  if (f.cycle_edge) {
    out.forest = false;
    if (!want_witness) return out;
    const Edge& closing = d.graph.edge(*f.cycle_edge);
    std::vector<EdgeId> path = *forest_path(d, f, closing.head, closing.tail);
    path.push_back(closing.id);
    out.witness = project(d, closing.head, path);
    return out;
  }

  std::optional<std::vector<EdgeId>> best_path;
  Violation best{};
  for (const Violation& v : forbidden_pairs(gamma, d)) {
    if (!f.components.same(v.from, v.to)) continue;
    out.separated = false;
    if (!want_witness) return out;
    auto path = forest_path(d, f, v.from, v.to);
    if (!best_path || path->size() < best_path->size() ||
        (path->size() == best_path->size() &&
         std::tie(v.from, v.to) < std::tie(best.from, best.to))) {
      best_path = std::move(path);
      best = v;
    }
  }
  if (!best_path) return out;
  MisdirectedWitness w = project(d, best.from, *best_path);
  if (best.closing) {
    // t- joined to h+: close up along the edge whose lift stayed uncollapsed.
    const std::size_t e = *best.closing / 2;
    w.cycle.push_back(w.cycle.front());
    w.tails.push_back(gamma.tail(e));
  }
  out.witness = std::move(w);
  return out;
}

bool partial_ok(const DefiningGraph& gamma) {
  const Analysis a = analyze(gamma, false);
  return a.forest && a.separated;
}

std::optional<std::vector<Generator>> alternating_tails(const DefiningGraph& gamma,
                                                        const std::vector<Generator>& walk) {
  const std::size_t len = walk.size() - 1;
  std::vector<std::size_t> edge_ids(len);
  for (std::size_t i = 0; i < len; ++i) {
    auto e = gamma.find_edge(walk[i], walk[i + 1]);
    if (!e) return std::nullopt;
    edge_ids[i] = *e;
  }
  for (int phase = 0; phase < 2; ++phase) {
    std::vector<Generator> tails(len);
    bool ok = true;
    for (std::size_t i = 0; i < len && ok; ++i) {
      const bool forward = (i + phase) % 2 == 0;
      tails[i] = forward ? walk[i] : walk[i + 1];
      const auto& iota = gamma.edges()[edge_ids[i]].iota;
      if (iota && *iota != tails[i]) ok = false;
    }
    if (ok) return tails;
  }
  return std::nullopt;
}

}  // namespace

DoubleCoverGraph double_cover(const DefiningGraph& gamma) {
  require_sound(gamma);
  const std::size_t n = gamma.num_vertices();
  DoubleCoverGraph d;
  for (const std::string& name : gamma.vertices()) d.graph.add_vertex(name + "+");
  for (const std::string& name : gamma.vertices()) d.graph.add_vertex(name + "-");
  for (std::size_t e = 0; e < gamma.num_edges(); ++e) {
    const GammaEdge& edge = gamma.edges()[e];
    const auto t = static_cast<VertexId>(gamma.tail(e));
    const auto h = static_cast<VertexId>(gamma.head(e));
    const Color c{static_cast<std::uint32_t>(e)};
    d.graph.add_edge(t, static_cast<VertexId>(n + h), c);
    d.graph.add_edge(static_cast<VertexId>(n + t), h, c);
    d.collapsed.push_back(edge.iota.has_value() || edge.label == 2);
    d.collapsed.push_back(edge.label == 2);
  }
  return d;
}

bool has_collapsed_cycle(const DoubleCoverGraph& d) {
  return build_forest(d).cycle_edge.has_value();
}

AdmissibilityVerdict is_admissible(const DefiningGraph& gamma) {
  require_well_formed(gamma);
  Analysis a = analyze(gamma, true);
  AdmissibilityVerdict v;
  v.admissible = a.forest && a.separated;
  v.collapsed_cycle = !a.forest;
  if (!v.admissible) {
    if (!a.witness || !check_witness(gamma, *a.witness)) {
      throw std::logic_error("extracted admissibility witness failed verification");
    }
    v.witness = std::move(a.witness);
  }
  return v;
}

std::optional<std::vector<Generator>> is_misdirected_path(const DefiningGraph& gamma,
                                                          const std::vector<Generator>& path) {
  if (path.size() < 3) return std::nullopt;
  return alternating_tails(gamma, path);
}

std::optional<std::vector<Generator>> is_misdirected_cycle(const DefiningGraph& gamma,
                                                           const GammaCycle& cycle) {
  if (!is_gamma_cycle(gamma, cycle) || (cycle.size() - 1) % 2 != 0) return std::nullopt;
  return alternating_tails(gamma, cycle);
}

std::optional<MisdirectedWitness> is_almost_misdirected(const DefiningGraph& gamma,
                                                        const GammaCycle& cycle) {
  if (!is_gamma_cycle(gamma, cycle)) return std::nullopt;
  std::vector<Generator> ring(cycle.begin(), cycle.end() - 1);
  const std::size_t n = ring.size();
  for (int direction = 0; direction < 2; ++direction) {
    for (std::size_t r = 0; r < n; ++r) {
      std::vector<Generator> path(n);
      for (std::size_t i = 0; i < n; ++i) path[i] = ring[(r + i) % n];
      auto tails = is_misdirected_path(gamma, path);
      if (!tails) continue;
      const std::size_t closing = *gamma.find_edge(path.back(), path.front());
      tails->push_back(gamma.tail(closing));
      path.push_back(path.front());
      return MisdirectedWitness{std::move(path), std::move(*tails)};
    }
    std::reverse(ring.begin(), ring.end());
  }
  return std::nullopt;
}

bool check_witness(const DefiningGraph& gamma, const MisdirectedWitness& w) {
  if (!is_gamma_cycle(gamma, w.cycle)) return false;
  const std::size_t n = w.cycle.size() - 1;
  if (w.tails.size() != n) return false;
  std::vector<bool> forward(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Generator a = w.cycle[i];
    const Generator b = w.cycle[i + 1];
    if (w.tails[i] != a && w.tails[i] != b) return false;
    const auto& iota = gamma.edges()[*gamma.find_edge(a, b)].iota;
    if (iota && *iota != w.tails[i]) return false;
    forward[i] = w.tails[i] == a;
  }
  // Edges 0 .. n-2 form the misdirected path.
  for (std::size_t i = 0; i + 2 < n; ++i) {
    if (forward[i] == forward[i + 1]) return false;
  }
  return true;
}

std::optional<MisdirectedWitness> oracle_almost_misdirected(const DefiningGraph& gamma,
                                                            std::size_t max_len) {
  for (const GammaCycle& c : enumerate_cycles(gamma, max_len)) {
    if (auto w = is_almost_misdirected(gamma, c)) return w;
  }
  return std::nullopt;
}

std::optional<Orientation> find_admissible_orientation(const DefiningGraph& gamma) {
  require_sound(gamma);
  std::vector<std::size_t> order;
  for (std::size_t e = 0; e < gamma.num_edges(); ++e) {
    if (gamma.edges()[e].label >= 3) order.push_back(e);
  }
  if (order.size() > kMaxOrientableEdges) {
    throw RefusalError("orientation search is limited to " +
                       std::to_string(kMaxOrientableEdges) + " edges labelled >= 3, got " +
                       std::to_string(order.size()));
  }
  auto key = [&gamma](std::size_t e) {
    const GammaEdge& edge = gamma.edges()[e];
    const std::string& a = gamma.name(edge.u);
    const std::string& b = gamma.name(edge.v);
    return std::make_tuple(edge.label, std::min(a, b), std::max(a, b));
  };
  std::stable_sort(order.begin(), order.end(),
                   [&key](std::size_t x, std::size_t y) { return key(x) < key(y); });

  DefiningGraph work = gamma.with_orientation(Orientation(gamma.num_edges()));
  if (!partial_ok(work)) return std::nullopt;

  auto search = [&](auto&& self, std::size_t k) -> bool {
    if (k == order.size()) return true;
    const std::size_t e = order[k];
    const GammaEdge& edge = gamma.edges()[e];
    Generator first = edge.u;
    Generator second = edge.v;
    if (gamma.name(second) < gamma.name(first)) std::swap(first, second);
    Orientation o = work.orientation();
    for (Generator tail : {first, second}) {
      o[e] = tail;
      work = work.with_orientation(o);
      if (partial_ok(work) && self(self, k + 1)) return true;
    }
    o[e] = std::nullopt;
    work = work.with_orientation(o);
    return false;
  };
  if (!search(search, 0)) return std::nullopt;
  return work.orientation();
}

}  // namespace artin
