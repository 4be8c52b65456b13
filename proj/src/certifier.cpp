#include "artin/certifier.h"

#include <algorithm>
#include <json.hpp>

#include "artin/admissibility.h"
#include "artin/errors.h"

namespace artin {

namespace {

using Json = nlohmann::ordered_json;

const char* const kSplittingCitation =
    "a defining graph with an admissible partial orientation makes the Artin group split as "
    "an amalgamated product or HNN extension of finite rank free groups, with rank A = |E|, "
    "rank B = 1 - |V| + 2|E| and C of index 2 in B";

const char* const kSeparationCaveat =
    "malnormality of C and its separation from an oppressive set in the finite quotient are "
    "established by the cited geometric arguments and are not recomputed here";

LabelAnalysis analyze_labels(const DefiningGraph& gamma) {
  LabelAnalysis a;
  ColoredGraph shape;
  for (std::size_t i = 0; i < gamma.num_vertices(); ++i) shape.add_vertex();
  for (const GammaEdge& e : gamma.edges()) shape.add_edge(e.u, e.v, Color{0});
  const std::size_t parts = num_components(shape);
  a.connected = parts <= 1;
  a.forest = gamma.num_edges() + parts == gamma.num_vertices();
  a.triangle = gamma.num_vertices() == 3 && gamma.num_edges() == 3;
  if (a.triangle) {
    for (const GammaEdge& e : gamma.edges()) a.triangle_labels.push_back(e.label);
    std::sort(a.triangle_labels.begin(), a.triangle_labels.end());
  }
  const auto& edges = gamma.edges();
  a.all_even_at_least_6 = !edges.empty() && std::all_of(edges.begin(), edges.end(), [](auto& e) {
    return e.label % 2 == 0 && e.label >= 6;
  });
  a.all_odd = !edges.empty() &&
              std::all_of(edges.begin(), edges.end(), [](auto& e) { return e.label % 2 == 1; });
  return a;
}

bool is_odd_four_four(const std::vector<int>& sorted) {
  return sorted.size() == 3 && sorted[0] == 4 && sorted[1] == 4 && sorted[2] % 2 == 1;
}

bool r4_labels(const LabelAnalysis& a) {
  return a.triangle && a.triangle_labels.front() >= 4 && !is_odd_four_four(a.triangle_labels);
}

void fire(RFCertificate& cert, Verdict v, std::string id, std::string name, std::string citation) {
  cert.verdict = v;
  cert.rule = Rule{std::move(id), std::move(name), citation};
  cert.citations.insert(cert.citations.begin(), std::move(citation));
}

}  // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kResiduallyFinite: return "ResiduallyFinite";
    case Verdict::kSplitsOnly: return "SplitsOnly";
    case Verdict::kUnknown: return "Unknown";
    case Verdict::kNotApplicable: return "NotApplicable";
  }
  return "Unknown";
}

const char* to_string(OrientationSource s) {
  switch (s) {
    case OrientationSource::kGiven: return "given";
    case OrientationSource::kSearched: return "searched";
    case OrientationSource::kNone: return "none";
  }
  return "none";
}

RFCertificate certify(const DefiningGraph& gamma) {
  const OrientationReport report = validate(gamma);
  if (!report.structurally_sound()) {
    throw StructuralError("defining graph is not valid: " + report.issues.front().message);
  }
  RFCertificate cert;
  cert.labels = analyze_labels(gamma);

  // Orientation: given arrows must be well formed; otherwise search.
  DefiningGraph oriented = gamma;
  if (gamma.has_any_iota()) {
    if (!report.well_formed()) {
      throw PreconditionError("partial orientation is not well formed: " +
                              report.issues.front().message);
    }
    cert.orientation_source = OrientationSource::kGiven;
    cert.orientation = gamma.orientation();
    const AdmissibilityVerdict v = is_admissible(gamma);
    cert.orientation_admissible = v.admissible;
    if (!v.admissible) cert.notes.push_back("the given orientation is not admissible");
  } else {
    try {
      if (auto found = find_admissible_orientation(gamma)) {
        cert.orientation_source = OrientationSource::kSearched;
        cert.orientation = *found;
        cert.orientation_admissible = true;
        oriented = gamma.with_orientation(*found);
      } else {
        cert.notes.push_back("no admissible orientation exists");
      }
    } catch (const RefusalError& e) {
      cert.notes.push_back(std::string("orientation search refused: ") + e.what());
    }
  }

  if (cert.orientation_admissible && cert.labels.connected) {
    cert.splitting = compute_splitting(oriented);
    cert.fiber = fiber_product(cert.splitting->collapsed.rho, cert.splitting->collapsed.rho);
    cert.monochrome = monochrome_check(*cert.fiber);
    if (cert.labels.triangle) {
      ConsistencyProbe p;
      p.label_rule = r4_labels(cert.labels);
      p.monochrome = cert.monochrome->all_monochrome;
      p.in_domain = cert.labels.triangle_labels.front() >= 4 && !cert.labels.all_odd;
      p.agrees = !p.in_domain || p.label_rule == p.monochrome;
      cert.probe = p;
    }
  }

  const LabelAnalysis& a = cert.labels;
  const std::vector<int>& t = a.triangle_labels;
  if (a.forest) {
    fire(cert, Verdict::kResiduallyFinite, "R1", "forest",
         "Artin groups whose defining graphs are forests are virtually special, hence "
         "residually finite");
  } else if (gamma.num_vertices() == 3 && gamma.num_edges() == 2) {
    fire(cert, Verdict::kResiduallyFinite, "R2", "triangle with an infinite label",
         "three-generator Artin groups with a label equal to infinity are well known to be "
         "residually finite");
  } else if (a.triangle && (t == std::vector<int>{3, 3, 3} || t == std::vector<int>{2, 4, 4} ||
                            t == std::vector<int>{2, 3, 6})) {
    fire(cert, Verdict::kResiduallyFinite, "R3", "affine triangle",
         "the three-generator affine Artin groups (3,3,3), (2,4,4) and (2,3,6) are residually "
         "finite");
  } else if (r4_labels(a)) {
    fire(cert, Verdict::kResiduallyFinite, "R4", "triangle with labels at least 4",
         "triangle Artin groups with all labels at least 4 are residually finite unless the "
         "labels are a permutation of (2m+1, 4, 4)");
    cert.caveats.push_back(kSeparationCaveat);
  } else if (!a.connected) {
    cert.verdict = Verdict::kNotApplicable;
    cert.rule = Rule{"none", "disconnected defining graph",
                     "the splitting rules assume a connected defining graph"};
  } else if (cert.splitting && a.all_even_at_least_6) {
    fire(cert, Verdict::kResiduallyFinite, "R5", "all labels even and at least 6",
         "an Artin group whose defining graph admits an admissible partial orientation and has "
         "all labels even and at least 6 is residually finite");
    cert.caveats.push_back(kSeparationCaveat);
  } else if (cert.splitting && cert.monochrome->all_monochrome) {
    fire(cert, Verdict::kResiduallyFinite, "R6", "monochrome fiber product",
         "an Artin group whose defining graph admits an admissible partial orientation is "
         "residually finite when all simple cycles in the nontrivial components of the fiber "
         "product of the collapsed horizontal graph are monochrome");
    cert.caveats.push_back(kSeparationCaveat);
    if (a.all_odd) {
      cert.caveats.push_back(
          "all labels are odd: the monochrome criterion is stated without a parity restriction but its "
          "proof follows the even-label quotient construction");
    }
  } else if (cert.splitting) {
    fire(cert, Verdict::kSplitsOnly, "R7", "splitting only", kSplittingCitation);
  } else {
    cert.verdict = Verdict::kUnknown;
    cert.rule = Rule{"R8", "no rule applies", "no applicable result"};
  }
  if (cert.splitting && cert.rule.id != "R7") cert.citations.push_back(kSplittingCitation);
  return cert;
}

std::string to_json(const RFCertificate& cert, const DefiningGraph& gamma) {
  Json j;
  j["verdict"] = to_string(cert.verdict);
  j["rule"] = {{"id", cert.rule.id}, {"name", cert.rule.name}, {"citation", cert.rule.citation}};
  j["citations"] = cert.citations;

  Json orientation;
  orientation["source"] = to_string(cert.orientation_source);
  orientation["admissible"] = cert.orientation_admissible;
  Json arrows = Json::array();
  if (cert.orientation) {
    for (std::size_t e = 0; e < gamma.num_edges(); ++e) {
      if (!(*cert.orientation)[e]) continue;
      arrows.push_back({{"edge", gamma.edge_name(e)}, {"tail", gamma.name(*(*cert.orientation)[e])}});
    }
  }
  orientation["arrows"] = arrows;
  j["orientation"] = orientation;

  Json ranks = Json::object();
  if (cert.splitting) {
    const SplittingCertificate& s = *cert.splitting;
    ranks["kind"] = to_string(s.kind);
    ranks["A"] = s.rank_a;
    ranks["B"] = s.rank_b;
    if (s.rank_c) ranks["C"] = *s.rank_c;
    if (s.index_c_in_b) ranks["index_C_in_B"] = *s.index_c_in_b;
  }
  j["ranks"] = ranks;

  Json mono = Json::object();
  if (cert.monochrome) {
    const MonochromeVerdict& m = *cert.monochrome;
    mono["all_monochrome"] = m.all_monochrome;
    mono["checked_components"] = m.checked_components;
    mono["checked_blocks"] = m.checked_blocks;
    if (m.witness) {
      const ColoredGraph& g = *cert.fiber->graph;
      Json vertices = Json::array();
      Json colors = Json::array();
      for (VertexId v : m.witness->vertices(g)) vertices.push_back(g.name(v));
      for (const Step& s : m.witness->steps) colors.push_back(gamma.edge_name(index_of(g.edge(s.edge).color)));
      mono["witness"] = {{"component", *m.component}, {"cycle", vertices}, {"colors", colors}};
    }
  }
  j["monochrome"] = mono;
  if (cert.probe) {
    j["consistency"] = {{"label_rule", cert.probe->label_rule},
                        {"monochrome", cert.probe->monochrome},
                        {"in_domain", cert.probe->in_domain},
                        {"agrees", cert.probe->agrees}};
  }
  j["notes"] = cert.notes;
  j["caveats"] = cert.caveats;
  return j.dump(2);
}

}  // namespace artin
