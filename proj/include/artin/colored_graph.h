#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace artin {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

// Edge of the defining graph. Every edge of a graph lying over the bouquet
// X0 carries one, and it names the loop the edge is sent to.
enum class Color : std::uint32_t {};

constexpr std::uint32_t index_of(Color c) { return static_cast<std::uint32_t>(c); }

struct Edge {
  EdgeId id = 0;
  VertexId tail = 0;
  VertexId head = 0;
  Color color{};

  bool is_loop() const { return tail == head; }
  // The endpoint opposite to `v`; for a loop this is `v` itself.
  VertexId opposite(VertexId v) const { return v == tail ? head : tail; }
};

// One traversal of an edge. `forward` follows the edge's orientation.
struct Step {
  EdgeId edge = 0;
  bool forward = true;

  friend bool operator==(const Step&, const Step&) = default;
};

// Finite multigraph with oriented, colored edges. Loops and parallel edges are
// allowed. Vertex and edge ids are dense indices assigned in insertion order.
class ColoredGraph {
 public:
  VertexId add_vertex(std::string name = {});
  // Throws StructuralError when an endpoint does not exist.
  EdgeId add_edge(VertexId tail, VertexId head, Color color);

  std::size_t num_vertices() const { return names_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  bool has_vertex(VertexId v) const { return v < names_.size(); }
  bool has_edge(EdgeId e) const { return e < edges_.size(); }

  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::string& name(VertexId v) const { return names_.at(v); }

  // Edges touching `v` in increasing id order; a loop is listed once.
  std::span<const EdgeId> incident(VertexId v) const { return incidence_.at(v); }
  // Number of edge ends at `v`; a loop contributes 2.
  std::size_t valence(VertexId v) const;

 private:
  std::vector<std::string> names_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incidence_;
};

// A walk given by its start vertex and a sequence of edge traversals. Paths and
// cycles are both represented this way; a cycle is a closed walk.
struct Walk {
  VertexId start = 0;
  std::vector<Step> steps;

  std::size_t length() const { return steps.size(); }
  // Vertex sequence v0, v1, ..., vn. Throws StructuralError on an
  // inconsistent step.
  std::vector<VertexId> vertices(const ColoredGraph& g) const;
  VertexId end(const ColoredGraph& g) const;
  bool is_closed(const ColoredGraph& g) const;
  // Vertices v0..v(n-1) pairwise distinct, and vn distinct from them unless
  // the walk is closed.
  bool is_simple(const ColoredGraph& g) const;
  // Consecutive steps never traverse the same edge back and forth. For closed
  // walks the last and first steps are compared too.
  bool is_reduced(const ColoredGraph& g) const;
  Walk reversed(const ColoredGraph& g) const;
  std::size_t num_colors(const ColoredGraph& g) const;
};

// A subgraph copied out of a parent graph, with the ids it had there.
struct Subgraph {
  ColoredGraph graph;
  std::vector<VertexId> vertex_origin;
  std::vector<EdgeId> edge_origin;
};

// Copies the given vertices and edges (sorted, deduplicated) into a fresh
// graph. Every endpoint of a listed edge must be listed as a vertex.
Subgraph extract_subgraph(const ColoredGraph& g, std::vector<VertexId> vertices,
                          std::vector<EdgeId> edges);

// Combinatorial map between colored graphs: vertices to vertices and each
// edge onto one edge. Orientation and color must be preserved.
struct GraphMap {
  std::shared_ptr<const ColoredGraph> source;
  std::shared_ptr<const ColoredGraph> target;
  std::vector<VertexId> vertex_map;
  std::vector<EdgeId> edge_map;
};

GraphMap identity_map(std::shared_ptr<const ColoredGraph> g);
// Returns `second` after `first`. The target of `first` must be the source of
// `second`.
GraphMap compose(const GraphMap& first, const GraphMap& second);

// Throws StructuralError if the map is missing a graph, has the wrong table
// sizes, or points at vertices or edges that do not exist.
void check_well_defined(const GraphMap& m);
bool is_combinatorial(const GraphMap& m);
// Locally injective: no two distinct oriented edges with a common terminal
// vertex have the same image. Throws PreconditionError if `m` is not
// combinatorial.
bool is_immersion(const GraphMap& m);
// Every vertex and edge fiber has exactly `n` elements and `m` is a bijection
// on each star.
bool is_degree_n_cover(const GraphMap& m, std::size_t n);
// The degree n for which is_degree_n_cover(m, n) holds, if any.
std::optional<std::size_t> cover_degree(const GraphMap& m);
bool is_embedding(const GraphMap& m);
bool is_isomorphism(const GraphMap& m);

// Component number of each vertex, numbered by smallest vertex id.
std::vector<std::size_t> component_labels(const ColoredGraph& g,
                                          std::size_t* count = nullptr);
std::size_t num_components(const ColoredGraph& g);
bool is_connected(const ColoredGraph& g);
std::vector<Subgraph> connected_components(const ColoredGraph& g);

// First Betti number |E| - |V| + 1. Throws PreconditionError for a
// disconnected graph.
std::size_t free_rank(const ColoredGraph& g);

// Biconnected components as sorted edge-id lists, ordered by smallest edge id.
// Loops form blocks of their own; parallel edges share a block.
std::vector<std::vector<EdgeId>> blocks(const ColoredGraph& g);

// Minimal deformation retract of a connected graph: valence-1 vertices are
// removed until none remain. A tree retracts to its smallest vertex.
Subgraph core(const ColoredGraph& g);

// Vertices of valence greater than 2.
std::vector<VertexId> branching_vertices(const ColoredGraph& g);

std::size_t num_colors(const ColoredGraph& g, std::span<const EdgeId> edges);

}  // namespace artin
