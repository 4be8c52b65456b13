#pragma once

// Brute-force oracles and random generators shared by the test binaries. None
// of these reuse the library's algorithms beyond graph construction.

#include <cstddef>
#include <optional>
#include <random>
#include <vector>

#include "artin/colored_graph.h"
#include "artin/defining_graph.h"

namespace artin::testing {

using Rng = std::mt19937_64;

// Rank over GF(2) of the given rows, each a 0/1 vector of equal length.
std::size_t gf2_rank(std::vector<std::vector<bool>> rows);

// Every simple cycle of g as a sorted edge-id list. Found by running over all
// nonzero elements of the cycle space and keeping the connected 2-regular
// ones. Returns nullopt when the cycle space has dimension above max_rank.
std::optional<std::vector<std::vector<EdgeId>>> all_simple_cycles(const ColoredGraph& g,
                                                                  std::size_t max_rank = 22);

// Some simple cycle of g uses two colors. nullopt when the cycle space is too
// large to enumerate.
std::optional<bool> has_mixed_cycle(const ColoredGraph& g, std::size_t max_rank = 22);

std::size_t count_components(const ColoredGraph& g);
bool two_colorable(const DefiningGraph& gamma);

// Random simple graph on 2..max_vertices generators named a, b, c, ..., each
// pair joined with probability p, labels uniform in [min_label, max_label].
// No arrows are drawn.
DefiningGraph random_gamma(Rng& rng, int max_vertices, double p, int min_label, int max_label);

// Random arrow on every edge labelled >= 3.
DefiningGraph random_orientation(const DefiningGraph& gamma, Rng& rng);

// A connected random graph that admits an admissible orientation, oriented by
// the search. Gives up after `attempts` draws.
std::optional<DefiningGraph> random_admissible(Rng& rng, int max_vertices, double p,
                                               int min_label, int max_label, int attempts = 50);

// Connected graph on 1..max_vertices vertices immersed into the bouquet with
// `colors` loops: each color acts as a random partial injection.
GraphMap random_bouquet_immersion(Rng& rng, std::size_t max_vertices, std::size_t colors);

}  // namespace artin::testing
