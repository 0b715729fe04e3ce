// JSON report sections and DOT graph export.
//
// Every analysis result in the library serializes to a section of one
// top-level report object carrying the schema tag "ringline/1".  Section
// builders are pure: identical inputs produce identical JSON, and rendering
// uses a fixed two-space indentation, so reports are byte-stable across
// runs.  Field order follows declaration order (ordered_json throughout).
#pragma once

#include <string>

#include "json.hpp"
#include "ringline/bimodule.hpp"
#include "ringline/demos.hpp"
#include "ringline/exact.hpp"
#include "ringline/geometry.hpp"
#include "ringline/projline.hpp"
#include "ringline/ring.hpp"

namespace ringline {

using Json = nlohmann::ordered_json;

// {"schema": "ringline/1", "command": ..., "invocation": ...}
Json report_skeleton(const std::string& command, Json invocation);

// Named pass/fail entries plus their conjunction; the CLI exit code is
// derived from `all`.  Checks that were skipped (ceilings, inapplicable
// modes) are recorded separately and never count against the verdict.
struct VerdictList {
  Json entries = Json::array();
  Json skipped = Json::array();
  bool all = true;

  void add(const std::string& check, bool pass);
  void skip(const std::string& check, const std::string& reason);
  Json json() const;  // {"checks": [...], "skipped": [...], "all_pass": bool}
};

// ---- element-level helpers -------------------------------------------------

Json subspace_json(const Subspace& s);          // {"dim", "basis": [[codes]]}
Json matrix_json(const MatK& m);                // [[codes]]
Json field_json(const GfPtr& K);                // {"p", "k", "q", "modulus"}
Json point_json(const Ring& R, const Point& p); // {"pair", "orbit_size"}

// ---- ring / line / homomorphism sections ------------------------------------

// size, characteristic, commutativity, units, radical, Dedekind-finiteness,
// stable rank 2.  Element lists are written as code arrays with text labels
// and truncated beyond `element_cap` entries (counts stay exact).
Json ring_facts_json(const Ring& R, const DedekindReport& dk, const StableRank2Report& sr,
                     size_t element_cap = 256);

Json ge2_json(const Ge2Report& g);

// point list, degree statistics, loop policy (a point neighbours itself only
// in the trivial ring).
Json graph_json(const Ring& R, const DistantGraph& G, size_t point_cap = 256);

// Undirected DOT rendering: one vertex per point labelled by its canonical
// pair, one edge per distant pair (i < j), both in ascending order.
std::string graph_dot(const Ring& R, const DistantGraph& G, const std::string& name);

Json hom_json(const RingHom& phi);  // shape, kernel, image, in/surjectivity
Json induced_map_json(const InducedMap& im);
Json reflection_json(const DistanceReflectionReport& r);
Json surjectivity_json(const SurjectivityReport& s);

// ---- representation sections -------------------------------------------------

// K, m, faithfulness, annihilator, per-point image records.
Json model_json(const ProjectiveModel& M, size_t point_cap = 256);
Json model_certificate_json(const ModelCertificate& c);
Json factor_json(const FactorComparison& f);
Json collineation_json(const Ring& R, const Mat2& gamma, const CollineationCertificate& c);
Json sub_model_json(const SubModelCertificate& c);
Json direct_sum_json(const DirectSumCertificate& c);
Json quotient_model_json(const QuotientModelCertificate& c);

// ---- geometry / demo sections -------------------------------------------------

Json family_json(const LineFamily& F, size_t member_cap = 256);
Json geometry_model_json(const GeometryModel& M);
Json spread_json(const SpreadReport& r);
Json congruence_json(const CongruenceCertificate& c);
Json beta_json(const BetaReport& b);
Json nondistant_json(const NondistantReport& n);

Json exact_suite_json(const ExactSuiteReport& r);
Json poly_demo_json(const PolyDemoCertificate& c);
Json zq_demo_json(const ZqDemoCertificate& c);

// ---- rendering ------------------------------------------------------------------

// Two-space indentation plus a trailing newline; the single rendering used
// by every writer so byte comparisons are meaningful.
std::string render_report(const Json& report);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace ringline
