#pragma once

#include <optional>
#include <string>
#include <vector>

#include "artin/defining_graph.h"
#include "artin/fiber.h"
#include "artin/horizontal_complex.h"

namespace artin {

enum class Verdict { kResiduallyFinite, kSplitsOnly, kUnknown, kNotApplicable };

const char* to_string(Verdict v);

struct Rule {
  std::string id;
  std::string name;
  std::string citation;
};

enum class OrientationSource { kGiven, kSearched, kNone };

const char* to_string(OrientationSource s);

struct LabelAnalysis {
  bool forest = false;
  bool connected = false;
  bool triangle = false;
  // Sorted labels when the graph is a triangle.
  std::vector<int> triangle_labels;
  bool all_even_at_least_6 = false;
  bool all_odd = false;
};

// Triangle agreement between the label test of R4 and the computed
// monochrome verdict. The two are expected to agree when all labels are >= 4
// and at least one is even.
struct ConsistencyProbe {
  bool label_rule = false;
  bool monochrome = false;
  bool in_domain = false;
  bool agrees = true;
};

struct RFCertificate {
  Verdict verdict = Verdict::kUnknown;
  Rule rule;
  std::vector<std::string> citations;
  LabelAnalysis labels;
  OrientationSource orientation_source = OrientationSource::kNone;
  std::optional<Orientation> orientation;
  bool orientation_admissible = false;
  std::optional<SplittingCertificate> splitting;
  std::optional<FiberProduct> fiber;
  std::optional<MonochromeVerdict> monochrome;
  std::optional<ConsistencyProbe> probe;
  std::vector<std::string> notes;
  std::vector<std::string> caveats;
};

// Evaluates rules R1 .. R8 in order; the first that applies decides. Arrows
// present in the input are used as given (they must be well formed); without
// any arrows an admissible orientation is searched for.
RFCertificate certify(const DefiningGraph& gamma);

// Stable JSON rendering, two-space indented.
std::string to_json(const RFCertificate& cert, const DefiningGraph& gamma);

}  // namespace artin
