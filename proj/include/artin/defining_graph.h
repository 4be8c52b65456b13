#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace artin {

// Index of a generator in DefiningGraph::vertices().
using Generator = std::uint32_t;

// A labelled edge {u, v} of the defining graph. `iota`, when present, is the
// tail of the arrow drawn on the edge.
struct GammaEdge {
  Generator u = 0;
  Generator v = 0;
  int label = 2;
  std::optional<Generator> iota;

  friend bool operator==(const GammaEdge&, const GammaEdge&) = default;
};

// Partial orientation: the chosen tail of every edge, if any.
using Orientation = std::vector<std::optional<Generator>>;

// Closed walk a1, a2, ..., an, a1 in the defining graph.
using GammaCycle = std::vector<Generator>;

// Labelled simple graph with a partial orientation. A missing edge stands for
// the label infinity. The value may violate the invariants; validate() reports
// what is wrong instead of repairing it.
class DefiningGraph {
 public:
  // Throws StructuralError on a repeated or empty name.
  Generator add_vertex(std::string name);
  // Throws StructuralError if an endpoint name is unknown. Loops, duplicate
  // edges and bad labels are accepted here and reported by validate().
  std::size_t add_edge(const std::string& u, const std::string& v, int label,
                       std::optional<std::string> iota = std::nullopt);
  std::size_t add_edge(GammaEdge e);

  const std::vector<std::string>& vertices() const { return names_; }
  const std::vector<GammaEdge>& edges() const { return edges_; }
  std::size_t num_vertices() const { return names_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  const std::string& name(Generator a) const { return names_.at(a); }
  std::optional<Generator> find_vertex(const std::string& name) const;
  // First edge joining a and b, in either order.
  std::optional<std::size_t> find_edge(Generator a, Generator b) const;
  // (neighbour, edge index) pairs in edge order.
  const std::vector<std::pair<Generator, std::size_t>>& neighbors(Generator a) const {
    return adjacency_.at(a);
  }

  Orientation orientation() const;
  bool has_any_iota() const;
  // Copy with every iota replaced. Throws PreconditionError on a size mismatch.
  DefiningGraph with_orientation(const Orientation& o) const;

  // Tail of the generator x = tail * head attached to edge `e`: iota when
  // defined, otherwise the endpoint `u`.
  Generator tail(std::size_t e) const;
  Generator head(std::size_t e) const;

  // Readable edge name such as "ab".
  std::string edge_name(std::size_t e) const;

  friend bool operator==(const DefiningGraph&, const DefiningGraph&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<GammaEdge> edges_;
  std::vector<std::vector<std::pair<Generator, std::size_t>>> adjacency_;
};

// Triangle a, b, c with labels M_ab = m, M_bc = n, M_ca = p and the cyclic
// orientation a -> b -> c -> a on edges with label at least 3.
DefiningGraph make_triangle(int m, int n, int p);

enum class IotaStatus { kOk, kMissing, kForbidden };

enum class IssueKind {
  kLoop,
  kDuplicateEdge,
  kLabelBelowTwo,
  kIotaNotEndpoint,
  kMissingIota,
  kForbiddenIota,
};

struct Issue {
  IssueKind kind;
  std::size_t edge;
  std::string message;
};

struct OrientationReport {
  std::vector<IotaStatus> edge_status;
  std::vector<Issue> issues;

  // Simple graph, labels at least 2, every iota an endpoint.
  bool structurally_sound() const;
  // Structurally sound and iota present exactly on the edges labelled >= 3.
  bool well_formed() const { return issues.empty(); }
};

const char* to_string(IssueKind kind);
const char* to_string(IotaStatus status);

OrientationReport validate(const DefiningGraph& gamma);

inline constexpr std::size_t kMaxCycleEnumeration = 12;

// All closed walks without backtracking of length at most `max_len`, each
// once up to rotation and reversal, in canonical form. Throws RefusalError
// when max_len exceeds kMaxCycleEnumeration.
std::vector<GammaCycle> enumerate_cycles(const DefiningGraph& gamma, std::size_t max_len);

// Least sequence among all rotations of both traversal directions, closed by
// repeating its first vertex.
GammaCycle canonical_cycle(const GammaCycle& cycle);

// True if consecutive vertices are adjacent, the walk is closed, has length at
// least 3 and does not backtrack, cyclically.
bool is_gamma_cycle(const DefiningGraph& gamma, const GammaCycle& cycle);

}  // namespace artin
