#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "artin/colored_graph.h"

namespace artin {

enum class ComponentKind { kDiagonal, kTrivial, kCycleBearing };

const char* to_string(ComponentKind kind);

struct FiberComponent {
  ComponentKind kind = ComponentKind::kTrivial;
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;
  std::size_t rank = 0;
  // Vertices of valence > 2 in the core of the component.
  std::vector<VertexId> branching;

  // Off-diagonal and carrying a cycle.
  bool nontrivial() const { return kind == ComponentKind::kCycleBearing; }
};

// Pullback of two immersions with a common target. Vertex (v1, v2) and edge
// (e1, e2) ids follow the lexicographic order of the pairs.
struct FiberProduct {
  std::shared_ptr<const ColoredGraph> graph;
  GraphMap first;
  GraphMap second;
  std::vector<std::pair<VertexId, VertexId>> vertex_pairs;
  std::vector<std::pair<EdgeId, EdgeId>> edge_pairs;
  std::vector<std::size_t> component_of;
  std::vector<FiberComponent> components;
  // Components meeting the diagonal {(v, v)}, only for a map paired with
  // itself. There is one per component of the source.
  std::vector<std::size_t> diagonal_components;
  bool self_product = false;

  Subgraph component_graph(std::size_t c) const;
};

// Throws PreconditionError if either map is not an immersion or the targets
// differ.
FiberProduct fiber_product(const GraphMap& rho1, const GraphMap& rho2);

struct MonochromeVerdict {
  bool all_monochrome = true;
  // A simple cycle of the fiber graph using at least two colors.
  std::optional<Walk> witness;
  std::optional<std::size_t> component;
  std::size_t checked_components = 0;
  std::size_t checked_blocks = 0;
};

// Every block of every nontrivial component is single-colored.
MonochromeVerdict monochrome_check(const FiberProduct& f);

// Dimension over GF(2) spanned by the monochrome simple cycles of a connected
// graph; this is the sum of the cycle ranks of its color classes.
std::size_t monochrome_cycle_rank(const ColoredGraph& component);
// monochrome_cycle_rank equals free_rank. Throws PreconditionError for a
// disconnected graph.
bool fill_rank_check(const ColoredGraph& component);

struct Letter {
  Color color{};
  int exponent = 1;

  friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

// Letters read along a walk: the edge color, +1 when traversed forward.
Word read_word(const ColoredGraph& g, const Walk& w);

struct OppressiveElement {
  // Simple path from the basepoint to y1 != y0.
  Walk mu1;
  // Trivial (no steps, at the basepoint) or a simple path from y2 to the
  // basepoint with y2 distinct from y0 and y1.
  Walk mu2;
  Word word;
};

struct OppressiveSet {
  VertexId basepoint = 0;
  std::vector<OppressiveElement> elements;
  bool truncated = false;
};

inline constexpr std::size_t kDefaultOppressiveLimit = 100000;

// All pairs of simple paths whose images concatenate to a closed path in the
// target. Stops after `limit` elements and sets `truncated`. Throws
// PreconditionError if rho is not an immersion or y0 is not a vertex.
OppressiveSet oppressive_set(const GraphMap& rho, VertexId y0,
                             std::size_t limit = kDefaultOppressiveLimit);

enum class TraceOutcome { kCloses, kExits, kNoEdge };

const char* to_string(TraceOutcome outcome);

struct TraceResult {
  TraceOutcome outcome = TraceOutcome::kCloses;
  // Vertex where the lift ended or got stuck.
  VertexId vertex = 0;
  // Letters consumed before stopping.
  std::size_t consumed = 0;
};

// Lifts the word letter by letter from y0. When several edges match, the one
// with the smallest id is taken; in an immersion there is at most one.
TraceResult traces_word(const ColoredGraph& y, VertexId y0, const Word& word);

}  // namespace artin
