#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "artin/admissibility.h"
#include "artin/colored_graph.h"
#include "artin/defining_graph.h"
#include "artin/errors.h"

namespace artin {

// The horizontal graphs of the Brady-McCammond complex.
//
// X0 has one vertex and loop e for every edge e of the defining graph.
// Xhalf has the generators as vertices; edge e with tail t and head h gives
// edges 2e (t -> h) and 2e + 1 (h -> t).
// Xquarter has vertices a+ (id a) and a- (id n + a). Edge e gives
//   4e     t+ -> h-
//   4e + 1 t- -> h+
//   4e + 2 h- -> t-   (odd label)   h- -> t+   (even label)
//   4e + 3 h+ -> t+   (odd label)   h+ -> t-   (even label)
// The first two lie over 2e and the last two over 2e + 1.
struct HorizontalFamily {
  std::shared_ptr<const ColoredGraph> x0;
  std::shared_ptr<const ColoredGraph> xhalf;
  std::shared_ptr<const ColoredGraph> xquarter;
  GraphMap cover;
  // a+ <-> a- on the vertices of Xquarter.
  std::vector<VertexId> deck;
};

// Throws PreconditionError unless validate(gamma) is well formed.
HorizontalFamily build_family(const DefiningGraph& gamma);

// Automorphism of Xquarter swapping a+ with a-, 4e with 4e + 1 and 4e + 2
// with 4e + 3. Throws PreconditionError when Xquarter is disconnected.
GraphMap deck_involution_on_quarter(const HorizontalFamily& f);

// Xquarter with the lifts {t+, h-} (and {t-, h+} for label 2) collapsed and
// the remaining edges subdivided so that every edge maps onto a single loop
// of X0.
struct CollapsedQuarter {
  std::shared_ptr<const ColoredGraph> graph;
  GraphMap rho;
  // Image of each Xquarter vertex; these images are exactly the vertices
  // 0 .. num_old_vertices - 1. Subdivision vertices follow.
  std::vector<VertexId> vertex_class;
  std::size_t num_old_vertices = 0;
  // Path of graph edges replacing each Xquarter edge; empty when collapsed.
  std::vector<std::vector<EdgeId>> edge_path;
  std::vector<bool> collapsed;
  // Per defining-graph edge: lengths of its uncollapsed edges, ascending.
  std::vector<std::vector<std::size_t>> segments;
  // Per defining-graph edge: lengths of its monochrome cycles, ascending.
  std::vector<std::vector<std::size_t>> monochrome_cycles;
  bool immersion = false;
};

// Built for any well-formed input; `immersion` records whether rho is locally
// injective, which holds exactly when the orientation is admissible.
CollapsedQuarter build_collapsed(const DefiningGraph& gamma);

// rho restricted to each connected component, in component order.
std::vector<GraphMap> component_maps(const CollapsedQuarter& q);

enum class SplittingKind { kAmalgam, kHNN };

const char* to_string(SplittingKind kind);

struct SplittingCertificate {
  SplittingKind kind = SplittingKind::kAmalgam;
  std::size_t rank_a = 0;
  std::size_t rank_b = 0;
  std::optional<std::size_t> rank_c;
  std::optional<std::size_t> index_c_in_b;
  // Degree of rho as a covering map, when it is one.
  std::optional<std::size_t> collapsed_cover_degree;
  std::optional<std::string> twisted_double;
  HorizontalFamily family;
  CollapsedQuarter collapsed;
  AdmissibilityVerdict admissibility;
};

class InadmissibleError : public PreconditionError {
 public:
  InadmissibleError(const std::string& what, AdmissibilityVerdict verdict)
      : PreconditionError(what), verdict_(std::move(verdict)) {}
  const AdmissibilityVerdict& verdict() const { return verdict_; }

 private:
  AdmissibilityVerdict verdict_;
};

bool is_bipartite(const DefiningGraph& gamma);

// Throws InadmissibleError for an inadmissible orientation and
// PreconditionError for a disconnected defining graph.
SplittingCertificate compute_splitting(const DefiningGraph& gamma);

}  // namespace artin
