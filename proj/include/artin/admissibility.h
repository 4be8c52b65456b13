#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "artin/colored_graph.h"
#include "artin/defining_graph.h"

namespace artin {

// Bipartite double cover of the defining graph. Vertex a lifts to a+ (id a)
// and a- (id n + a). Edge e with tail t and head h lifts to edge 2e = {t+, h-}
// and edge 2e + 1 = {t-, h+}, both colored e.
struct DoubleCoverGraph {
  ColoredGraph graph;
  std::vector<bool> collapsed;

  std::size_t num_generators() const { return graph.num_vertices() / 2; }
};

// {t+, h-} is collapsed when the edge carries an arrow or has label 2;
// {t-, h+} only when the label is 2. Edges labelled >= 3 without an arrow
// contribute no collapsed lift. Throws StructuralError unless the graph is
// structurally sound.
DoubleCoverGraph double_cover(const DefiningGraph& gamma);

// The collapsed edges contain a cycle.
bool has_collapsed_cycle(const DoubleCoverGraph& d);

// A closed walk (a1, ..., an, a1) together with an orientation of each of its
// n edges that agrees with iota. tails[i] is the tail chosen for the edge
// {cycle[i], cycle[i+1]}. The first n - 1 edges alternate in direction.
struct MisdirectedWitness {
  GammaCycle cycle;
  std::vector<Generator> tails;
};

struct AdmissibilityVerdict {
  bool admissible = true;
  // Set when the collapsed subgraph of the double cover is not a forest.
  bool collapsed_cycle = false;
  std::optional<MisdirectedWitness> witness;
};

// Decides admissibility through the double cover: the collapsed edges must
// form a forest, and for every edge {a, b} the vertices a+, a-, b+, b- may
// only share a collapsed component when that edge's own collapse joins them.
// Throws PreconditionError unless validate(gamma) is well formed.
AdmissibilityVerdict is_admissible(const DefiningGraph& gamma);

// Tails of an alternating orientation of the path agreeing with iota, if one
// exists. The path must have length at least 2.
std::optional<std::vector<Generator>> is_misdirected_path(const DefiningGraph& gamma,
                                                          const std::vector<Generator>& path);
// Even length closed walk whose edges alternate cyclically.
std::optional<std::vector<Generator>> is_misdirected_cycle(const DefiningGraph& gamma,
                                                           const GammaCycle& cycle);
// Tries every rotation and both directions of a closed walk without
// backtracking. The witness is returned in the rotated form.
std::optional<MisdirectedWitness> is_almost_misdirected(const DefiningGraph& gamma,
                                                        const GammaCycle& cycle);

// Re-checks a witness: a closed walk without backtracking, one tail per edge
// agreeing with iota, and the first n - 1 edges alternating.
bool check_witness(const DefiningGraph& gamma, const MisdirectedWitness& w);

// Brute force over enumerate_cycles(gamma, max_len). Throws RefusalError when
// max_len exceeds kMaxCycleEnumeration.
std::optional<MisdirectedWitness> oracle_almost_misdirected(const DefiningGraph& gamma,
                                                            std::size_t max_len);

inline constexpr std::size_t kMaxOrientableEdges = 24;

// Backtracking search over the arrows on edges labelled >= 3, visited in
// (label, endpoint names) order, smaller endpoint name tried as tail first.
// Existing arrows are ignored. Throws RefusalError above kMaxOrientableEdges
// such edges and StructuralError if the graph is not structurally sound.
std::optional<Orientation> find_admissible_orientation(const DefiningGraph& gamma);

}  // namespace artin
