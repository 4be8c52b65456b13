#pragma once

#include <ostream>
#include <string>

#include "artin/colored_graph.h"
#include "artin/defining_graph.h"
#include "artin/errors.h"

namespace artin::cli {

// Malformed input file: bad JSON or a schema violation. The message names the
// offending line/column or field path.
class InputError : public Error {
 public:
  using Error::Error;
};

// Parses {"vertices": [...], "edges": [{"u", "v", "label", "iota"?}]}.
// Unknown fields are rejected.
DefiningGraph parse_defining_graph(const std::string& text);

// Inverse of parse_defining_graph; "iota" is written only when present.
std::string serialize_defining_graph(const DefiningGraph& gamma);

// Directed DOT graph. Edge color c is drawn with palette entry c and labelled
// with the name of defining-graph edge c.
std::string to_dot(const ColoredGraph& g, const DefiningGraph& gamma, const std::string& name);

// Undirected DOT picture of the defining graph, arrows drawn from iota.
std::string gamma_to_dot(const DefiningGraph& gamma);

// Exit codes: 0 success, 1 negative analysis or refusal, 2 input error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace artin::cli
