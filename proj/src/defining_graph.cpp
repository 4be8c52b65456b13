#include "artin/defining_graph.h"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

#include "artin/errors.h"

namespace artin {

Generator DefiningGraph::add_vertex(std::string name) {
  if (name.empty()) throw StructuralError("vertex name must not be empty");
  if (find_vertex(name)) throw StructuralError("duplicate vertex \"" + name + "\"");
  names_.push_back(std::move(name));
  adjacency_.emplace_back();
  return static_cast<Generator>(names_.size() - 1);
}

std::size_t DefiningGraph::add_edge(const std::string& u, const std::string& v,
                                    int label, std::optional<std::string> iota) {
  auto lookup = [this](const std::string& n) {
    auto a = find_vertex(n);
    if (!a) throw StructuralError("edge refers to unknown vertex \"" + n + "\"");
    return *a;
  };
  GammaEdge e{lookup(u), lookup(v), label, std::nullopt};
  if (iota) e.iota = lookup(*iota);
  return add_edge(e);
}

std::size_t DefiningGraph::add_edge(GammaEdge e) {
  if (e.u >= names_.size() || e.v >= names_.size() ||
      (e.iota && *e.iota >= names_.size())) {
    throw StructuralError("edge refers to a missing vertex");
  }
  const std::size_t id = edges_.size();
  edges_.push_back(e);
  adjacency_[e.u].emplace_back(e.v, id);
  if (e.u != e.v) adjacency_[e.v].emplace_back(e.u, id);
  return id;
}

std::optional<Generator> DefiningGraph::find_vertex(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<Generator>(it - names_.begin());
}

std::optional<std::size_t> DefiningGraph::find_edge(Generator a, Generator b) const {
  if (a >= adjacency_.size()) return std::nullopt;
  for (const auto& [w, e] : adjacency_[a]) {
    if (w == b) return e;
  }
  return std::nullopt;
}

Orientation DefiningGraph::orientation() const {
  Orientation o;
  o.reserve(edges_.size());
  for (const GammaEdge& e : edges_) o.push_back(e.iota);
  return o;
}

bool DefiningGraph::has_any_iota() const {
  return std::any_of(edges_.begin(), edges_.end(),
                     [](const GammaEdge& e) { return e.iota.has_value(); });
}

DefiningGraph DefiningGraph::with_orientation(const Orientation& o) const {
  if (o.size() != edges_.size()) {
    throw PreconditionError("orientation has " + std::to_string(o.size()) +
                            " entries for " + std::to_string(edges_.size()) + " edges");
  }
  DefiningGraph out = *this;
  for (std::size_t i = 0; i < o.size(); ++i) {
    if (o[i] && *o[i] >= names_.size()) throw StructuralError("iota is not a vertex");
    out.edges_[i].iota = o[i];
  }
  return out;
}

Generator DefiningGraph::tail(std::size_t e) const {
  const GammaEdge& edge = edges_.at(e);
  return edge.iota.value_or(edge.u);
}

Generator DefiningGraph::head(std::size_t e) const {
  const GammaEdge& edge = edges_.at(e);
  return tail(e) == edge.u ? edge.v : edge.u;
}

std::string DefiningGraph::edge_name(std::size_t e) const {
  const GammaEdge& edge = edges_.at(e);
  return names_.at(edge.u) + names_.at(edge.v);
}

DefiningGraph make_triangle(int m, int n, int p) {
  DefiningGraph g;
  for (const char* v : {"a", "b", "c"}) g.add_vertex(v);
  auto arrow = [](int label, Generator tail) {
    return label >= 3 ? std::optional<Generator>(tail) : std::nullopt;
  };
  g.add_edge(GammaEdge{0, 1, m, arrow(m, 0)});
  g.add_edge(GammaEdge{1, 2, n, arrow(n, 1)});
  g.add_edge(GammaEdge{2, 0, p, arrow(p, 2)});
  return g;
}

bool OrientationReport::structurally_sound() const {
  return std::all_of(issues.begin(), issues.end(), [](const Issue& i) {
    return i.kind == IssueKind::kMissingIota || i.kind == IssueKind::kForbiddenIota;
  });
}

const char* to_string(IssueKind kind) {
  switch (kind) {
    case IssueKind::kLoop: return "loop";
    case IssueKind::kDuplicateEdge: return "duplicate-edge";
    case IssueKind::kLabelBelowTwo: return "label-below-2";
    case IssueKind::kIotaNotEndpoint: return "iota-not-endpoint";
    case IssueKind::kMissingIota: return "missing-iota";
    case IssueKind::kForbiddenIota: return "forbidden-iota";
  }
  return "unknown";
}

const char* to_string(IotaStatus status) {
  switch (status) {
    case IotaStatus::kOk: return "oriented-correctly";
    case IotaStatus::kMissing: return "missing-iota";
    case IotaStatus::kForbidden: return "forbidden-iota";
  }
  return "unknown";
}

OrientationReport validate(const DefiningGraph& gamma) {
  OrientationReport report;
  std::set<std::pair<Generator, Generator>> seen;
  for (std::size_t i = 0; i < gamma.num_edges(); ++i) {
    const GammaEdge& e = gamma.edges()[i];
    const std::string where = "edge " + gamma.edge_name(i) + ": ";
    if (e.u == e.v) {
      report.issues.push_back({IssueKind::kLoop, i, where + "loop at a single vertex"});
    }
    if (!seen.insert(std::minmax(e.u, e.v)).second) {
      report.issues.push_back({IssueKind::kDuplicateEdge, i, where + "duplicate edge"});
    }
    if (e.label < 2) {
      report.issues.push_back({IssueKind::kLabelBelowTwo, i, where + "label below 2"});
    }
    if (e.iota && *e.iota != e.u && *e.iota != e.v) {
      report.issues.push_back(
          {IssueKind::kIotaNotEndpoint, i, where + "iota is not an endpoint"});
    }
    IotaStatus status = IotaStatus::kOk;
    if (e.label >= 3 && !e.iota) {
      status = IotaStatus::kMissing;
      report.issues.push_back(
          {IssueKind::kMissingIota, i, where + "missing-iota on an edge labelled >= 3"});
    } else if (e.label < 3 && e.iota) {
      status = IotaStatus::kForbidden;
      report.issues.push_back(
          {IssueKind::kForbiddenIota, i, where + "forbidden-iota on an edge labelled 2"});
    }
    report.edge_status.push_back(status);
  }
  return report;
}

GammaCycle canonical_cycle(const GammaCycle& cycle) {
  if (cycle.size() < 2) return cycle;
  std::vector<Generator> ring(cycle.begin(), cycle.end() - 1);
  const std::size_t n = ring.size();
  std::vector<Generator> best;
  for (int direction = 0; direction < 2; ++direction) {
    for (std::size_t r = 0; r < n; ++r) {
      std::vector<Generator> candidate(n);
      for (std::size_t i = 0; i < n; ++i) candidate[i] = ring[(r + i) % n];
      if (best.empty() || candidate < best) best = std::move(candidate);
    }
    std::reverse(ring.begin(), ring.end());
  }
  best.push_back(best.front());
  return best;
}

bool is_gamma_cycle(const DefiningGraph& gamma, const GammaCycle& cycle) {
  if (cycle.size() < 4 || cycle.front() != cycle.back()) return false;
  const std::size_t n = cycle.size() - 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (!gamma.find_edge(cycle[i], cycle[i + 1])) return false;
  }
  // In a simple graph backtracking means returning to the previous vertex.
  for (std::size_t i = 0; i < n; ++i) {
    const Generator prev = cycle[(i + n - 1) % n];
    const Generator next = cycle[i + 1];
    if (prev == next) return false;
  }
  return true;
}

namespace {

void collect_cycles(const DefiningGraph& gamma, std::size_t max_len,
                    std::vector<Generator>& walk, std::set<GammaCycle>& out) {
  const Generator start = walk.front();
  const Generator at = walk.back();
  const std::size_t len = walk.size() - 1;
  for (const auto& [next, e] : gamma.neighbors(at)) {
    if (len >= 1 && next == walk[len - 1]) continue;
    if (next == start) {
      // Closing must not backtrack against the first step either.
      if (len >= 2 && walk[1] != at) {
        GammaCycle c = walk;
        c.push_back(start);
        out.insert(canonical_cycle(c));
      }
      if (len + 1 >= max_len) continue;
    }
    if (len + 1 >= max_len) continue;
    walk.push_back(next);
    collect_cycles(gamma, max_len, walk, out);
    walk.pop_back();
  }
}

}  // namespace

std::vector<GammaCycle> enumerate_cycles(const DefiningGraph& gamma, std::size_t max_len) {
  if (max_len > kMaxCycleEnumeration) {
    throw RefusalError("cycle enumeration is limited to length " +
                       std::to_string(kMaxCycleEnumeration) + ", got " +
                       std::to_string(max_len));
  }
  std::set<GammaCycle> found;
  for (Generator s = 0; s < gamma.num_vertices(); ++s) {
    std::vector<Generator> walk{s};
    collect_cycles(gamma, max_len, walk, found);
  }
  std::vector<GammaCycle> out(found.begin(), found.end());
  std::stable_sort(out.begin(), out.end(), [](const GammaCycle& a, const GammaCycle& b) {
    return a.size() < b.size();
  });
  return out;
}

}  // namespace artin
