#include "ringline/report.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

namespace ringline {

namespace {

Json coded_elements(const Ring& R, const std::vector<int>& codes, size_t cap) {
  Json out;
  out["count"] = codes.size();
  Json listed = Json::array();
  Json texts = Json::array();
  size_t shown = std::min(codes.size(), cap);
  for (size_t i = 0; i < shown; ++i) {
    listed.push_back(codes[i]);
    texts.push_back(R.element_text(codes[i]));
  }
  out["codes"] = std::move(listed);
  out["texts"] = std::move(texts);
  out["truncated"] = codes.size() > cap;
  return out;
}

std::string dot_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

Json report_skeleton(const std::string& command, Json invocation) {
  Json r;
  r["schema"] = "ringline/1";
  r["command"] = command;
  r["invocation"] = std::move(invocation);
  return r;
}

void VerdictList::add(const std::string& check, bool pass) {
  Json e;
  e["check"] = check;
  e["pass"] = pass;
  entries.push_back(std::move(e));
  all = all && pass;
}

void VerdictList::skip(const std::string& check, const std::string& reason) {
  Json e;
  e["check"] = check;
  e["reason"] = reason;
  skipped.push_back(std::move(e));
}

Json VerdictList::json() const {
  Json v;
  v["checks"] = entries;
  v["skipped"] = skipped;
  v["all_pass"] = all;
  return v;
}

Json subspace_json(const Subspace& s) {
  Json out;
  out["dim"] = s.dim();
  out["basis"] = matrix_json(s.basis());
  return out;
}

Json matrix_json(const MatK& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows; ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols; ++c) row.push_back(int(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json field_json(const GfPtr& K) {
  Json out;
  out["p"] = K->p();
  out["k"] = K->k();
  out["q"] = K->q();
  out["modulus"] = K->modulus_text();
  return out;
}

Json point_json(const Ring& R, const Point& p) {
  Json out;
  out["pair"] = pair_text(R, p.rep);
  out["orbit_size"] = p.orbit.size();
  return out;
}

Json ring_facts_json(const Ring& R, const DedekindReport& dk, const StableRank2Report& sr,
                     size_t element_cap) {
  Json out;
  out["spec"] = R.spec().text();
  out["size"] = R.size();
  out["characteristic"] = R.characteristic();
  out["commutative"] = R.commutative();
  out["units"] = coded_elements(R, R.units(), element_cap);
  out["radical"] = coded_elements(R, R.radical(), element_cap);

  Json dkj;
  dkj["holds"] = dk.dedekind_finite;
  if (!dk.dedekind_finite) {
    dkj["witness_a"] = dk.a;
    dkj["witness_b"] = dk.b;
  }
  out["dedekind_finite"] = std::move(dkj);

  Json srj;
  srj["holds"] = sr.holds;
  if (!sr.holds) {
    srj["witness_a"] = sr.a;
    srj["witness_b"] = sr.b;
  }
  out["stable_rank_2"] = std::move(srj);
  return out;
}

Json ge2_json(const Ge2Report& g) {
  Json out;
  out["transvection_orbit_size"] = g.e2_orbit.size();
  out["orbit_equals_line"] = g.e2_orbit_equals_line;
  out["group_scans_ran"] = g.group_scans_ran;
  if (g.group_scans_ran) {
    out["gl2_order"] = g.gl2_order;
    out["ge2_order"] = g.ge2_order;
    out["generated_by_elementaries"] = g.ge2_ring;
  } else {
    out["notice"] = "group scans skipped: carrier above the matrix-group ceiling";
  }
  return out;
}

Json graph_json(const Ring& R, const DistantGraph& G, size_t point_cap) {
  Json out;
  out["point_count"] = G.points.size();
  Json pts = Json::array();
  size_t shown = std::min(G.points.size(), point_cap);
  for (size_t i = 0; i < shown; ++i) pts.push_back(point_json(R, G.points[i]));
  out["points"] = std::move(pts);
  out["points_truncated"] = G.points.size() > point_cap;

  size_t n = G.points.size();
  unsigned long long edges = 0;
  int dmin = n ? G.degree[0] : 0, dmax = n ? G.degree[0] : 0;
  for (size_t i = 0; i < n; ++i) {
    dmin = std::min(dmin, G.degree[i]);
    dmax = std::max(dmax, G.degree[i]);
    for (size_t j = i + 1; j < n; ++j) edges += G.adj[i][j] ? 1 : 0;
  }
  out["edge_count"] = edges;
  out["degree_min"] = dmin;
  out["degree_max"] = dmax;
  out["degree_regular"] = dmin == dmax;
  out["loop_free"] = G.anti_reflexive;
  out["complete"] = n >= 2 && edges == (unsigned long long)(n) * (n - 1) / 2;
  return out;
}

std::string graph_dot(const Ring& R, const DistantGraph& G, const std::string& name) {
  std::string out = "graph distant {\n";
  out += "  label=\"" + dot_escape(name) + "\";\n";
  for (size_t i = 0; i < G.points.size(); ++i) {
    out += "  " + std::to_string(i) + " [label=\"" +
           dot_escape(pair_text(R, G.points[i].rep)) + "\"];\n";
  }
  for (size_t i = 0; i < G.points.size(); ++i)
    for (size_t j = i + 1; j < G.points.size(); ++j)
      if (G.adj[i][j]) out += "  " + std::to_string(i) + " -- " + std::to_string(j) + ";\n";
  out += "}\n";
  return out;
}

Json hom_json(const RingHom& phi) {
  Json out;
  out["source"] = phi.source.spec().text();
  out["target"] = phi.target.spec().text();
  out["kernel"] = coded_elements(phi.source, phi.kernel(), 256);
  out["image_size"] = phi.image().size();
  out["injective"] = phi.injective();
  out["surjective"] = phi.surjective();
  return out;
}

Json induced_map_json(const InducedMap& im) {
  Json out;
  out["source_points"] = im.source_line.size();
  out["target_points"] = im.target_line.size();
  size_t image_size = 0;
  {
    std::vector<int> idx = im.image_index;
    std::sort(idx.begin(), idx.end());
    image_size = size_t(std::unique(idx.begin(), idx.end()) - idx.begin());
  }
  out["image_points"] = image_size;
  out["distance_preserved"] = im.distance_preserved;
  out["equivariant"] = im.equivariant;
  out["point_map_injective"] = im.line_map_injective;
  out["injectivity_matches_hom"] = im.injectivity_matches;
  if (im.fail_p >= 0) {
    out["witness_p"] = im.fail_p;
    out["witness_q"] = im.fail_q;
  }
  return out;
}

Json reflection_json(const DistanceReflectionReport& r) {
  Json out;
  out["image_distant_implies_distant"] = r.image_distant_implies_distant;
  out["unit_pullback"] = r.unit_pullback;
  out["radical_and_image_units"] = r.radical_and_image_units;
  out["formulations_agree"] = r.agree;
  out["verdict"] = r.verdict;
  if (r.witness_y >= 0) out["witness_nonunit_with_unit_image"] = r.witness_y;
  if (r.witness_p >= 0) {
    out["witness_p"] = r.witness_p;
    out["witness_q"] = r.witness_q;
  }
  if (r.witness_kernel >= 0) out["witness_kernel_outside_radical"] = r.witness_kernel;
  if (r.witness_image_unit >= 0) out["witness_ambient_unit_in_image"] = r.witness_image_unit;
  return out;
}

Json surjectivity_json(const SurjectivityReport& s) {
  Json out;
  out["ge2_scan_ran"] = s.ge2_scan_ran;
  if (s.ge2_scan_ran) out["target_generated_by_elementaries"] = s.target_ge2_ring;
  out["kernel_in_radical"] = s.kernel_in_radical;
  out["kernel_is_split_ideal"] = s.kernel_is_split_ideal;
  if (s.splitting_idempotent >= 0) out["splitting_idempotent"] = s.splitting_idempotent;
  out["point_map_surjective"] = s.line_map_surjective;
  out["conditions_imply_surjective"] = s.conditions_imply_surjective;
  return out;
}

Json model_json(const ProjectiveModel& M, size_t point_cap) {
  Json out;
  out["ring"] = M.bimodule.R.spec().text();
  out["field"] = field_json(M.bimodule.K);
  out["module_dim"] = M.bimodule.m;
  out["point_count"] = M.points.size();
  out["faithful"] = M.ann.faithful;
  out["annihilator"] = coded_elements(M.bimodule.R, M.ann.annihilator.members, 256);
  {
    std::vector<Subspace> imgs = M.images;
    std::sort(imgs.begin(), imgs.end());
    imgs.erase(std::unique(imgs.begin(), imgs.end()), imgs.end());
    out["distinct_images"] = imgs.size();
  }
  Json recs = Json::array();
  size_t shown = std::min(M.points.size(), point_cap);
  for (size_t i = 0; i < shown; ++i) {
    Json rec;
    rec["pair"] = pair_text(M.bimodule.R, M.points[i].rep);
    rec["image"] = subspace_json(M.images[i]);
    recs.push_back(std::move(rec));
  }
  out["images"] = std::move(recs);
  out["images_truncated"] = M.points.size() > point_cap;
  return out;
}

Json model_certificate_json(const ModelCertificate& c) {
  Json out;
  out["well_defined"] = c.well_defined;
  out["images_half_dimensional"] = c.images_half_dimensional;
  out["distant_implies_complementary"] = c.distant_implies_complementary;
  out["point_map_injective"] = c.phi_injective;
  out["injectivity_matches_faithfulness"] = c.injectivity_matches_faithfulness;
  out["nondistant_noncomplementary"] = c.nondistant_noncomplementary;
  out["invertible_action_implies_unit"] = c.invertible_rho_implies_unit;
  out["noncomplementarity_biconditional"] = c.noncomplementarity_biconditional;
  out["ok"] = c.ok;
  if (c.witness_p >= 0) {
    out["witness_p"] = c.witness_p;
    out["witness_q"] = c.witness_q;
  }
  if (c.witness_a >= 0) out["witness_a"] = c.witness_a;
  return out;
}

Json factor_json(const FactorComparison& f) {
  Json out;
  out["quotient_size"] = f.quotient.quotient.size();
  out["induced_faithful"] = f.induced_faithful;
  out["images_contained"] = f.images_contained;
  out["images_equal"] = f.images_equal;
  out["projection_point_map_surjective"] = f.projection_line_surjective;
  out["equality_matches_surjectivity"] = f.equality_matches_surjectivity;
  out["ok"] = f.ok;
  return out;
}

Json collineation_json(const Ring& R, const Mat2& gamma, const CollineationCertificate& c) {
  Json out;
  out["gamma"] = mat2_text(R, gamma);
  out["block_invertible"] = c.block_invertible;
  out["equivariant"] = c.equivariant;
  if (c.witness_point >= 0) out["witness_point"] = c.witness_point;
  out["ok"] = c.ok;
  return out;
}

Json sub_model_json(const SubModelCertificate& c) {
  Json out;
  out["restricted_dim"] = c.restricted.m;
  out["doubled_subspace"] = subspace_json(c.doubled);
  out["restricted_faithful"] = c.restricted_ann.faithful;
  out["restricted_annihilator"] =
      coded_elements(c.restricted.R, c.restricted_ann.annihilator.members, 256);
  out["images_equal_intersections"] = c.equality;
  if (c.witness_point >= 0) out["witness_point"] = c.witness_point;
  out["ok"] = c.ok;
  return out;
}

Json direct_sum_json(const DirectSumCertificate& c) {
  Json out;
  out["valid_decomposition"] = c.valid_decomposition;
  out["images_equal_direct_sums"] = c.equality;
  if (c.witness_point >= 0) out["witness_point"] = c.witness_point;
  out["ok"] = c.ok;
  return out;
}

Json quotient_model_json(const QuotientModelCertificate& c) {
  Json out;
  out["quotient_dim"] = c.quotient_action.m;
  out["action_kernel"] = coded_elements(c.quotient_action.R, c.kernel, 256);
  out["kernel_matches_annihilator"] = c.kernel_matches;
  out["lifted_images_equal_sums"] = c.equality;
  if (c.witness_point >= 0) out["witness_point"] = c.witness_point;
  out["ok"] = c.ok;
  return out;
}

Json family_json(const LineFamily& F, size_t member_cap) {
  Json out;
  out["field"] = field_json(F.K);
  out["ambient_dim"] = F.ambient;
  out["member_dim"] = F.member_dim;
  out["member_count"] = F.members.size();
  Json ms = Json::array();
  size_t shown = std::min(F.members.size(), member_cap);
  for (size_t i = 0; i < shown; ++i) ms.push_back(matrix_json(F.members[i].basis()));
  out["members"] = std::move(ms);
  out["members_truncated"] = F.members.size() > member_cap;
  return out;
}

Json geometry_model_json(const GeometryModel& M) {
  Json out;
  out["example"] = example_name(M.spec.which);
  out["q"] = M.spec.q;
  if (M.spec.which == ExampleKind::TwistedConjugate52 ||
      M.spec.which == ExampleKind::DualParabolic54)
    out["alpha"] = M.spec.alpha;
  if (M.spec.which == ExampleKind::ProductHyperbolic53) out["factors"] = M.spec.n;
  out["ring"] = M.R.spec().text();
  out["ring_size"] = M.R.size();
  out["field"] = field_json(M.bimodule.K);
  out["module_dim"] = M.bimodule.m;
  out["point_count"] = M.model.points.size();
  out["family"] = family_json(M.family);
  Json axes = Json::array();
  for (const Subspace& a : M.axes) axes.push_back(subspace_json(a));
  out["axes"] = std::move(axes);
  out["model_certificate"] = model_certificate_json(M.certificate);
  return out;
}

Json spread_json(const SpreadReport& r) {
  Json out;
  out["is_spread"] = r.is_spread;
  out["is_regular"] = r.is_regular;
  if (r.witness_i >= 0) {
    out["witness_i"] = r.witness_i;
    out["witness_j"] = r.witness_j;
    out["witness_k"] = r.witness_k;
  }
  out["label"] = r.label;
  return out;
}

Json congruence_json(const CongruenceCertificate& c) {
  Json out;
  out["candidates_scanned"] = c.candidates;
  out["model_count"] = c.model_count;
  out["characterized_count"] = c.family_count;
  out["equal"] = c.equal;
  if (!c.only_model.empty()) {
    Json w = Json::array();
    for (const Subspace& s : c.only_model) w.push_back(subspace_json(s));
    out["only_in_model"] = std::move(w);
  }
  if (!c.only_family.empty()) {
    Json w = Json::array();
    for (const Subspace& s : c.only_family) w.push_back(subspace_json(s));
    out["only_in_characterization"] = std::move(w);
  }
  out["label"] = c.label;
  return out;
}

Json beta_json(const BetaReport& b) {
  Json out;
  out["axis"] = subspace_json(b.axis);
  out["class_count"] = b.class_count;
  out["bijection"] = b.bijection;
  out["formula_matches"] = b.formula_matches;
  out["members_inside_joins"] = b.containment;
  out["ok"] = b.ok;
  Json pairs = Json::array();
  for (const auto& [trace, join] : b.map) {
    Json e;
    e["trace"] = subspace_json(trace);
    e["join"] = subspace_json(join);
    pairs.push_back(std::move(e));
  }
  out["map"] = std::move(pairs);
  return out;
}

Json nondistant_json(const NondistantReport& n) {
  Json out;
  out["equivalence"] = n.equivalence;
  if (n.equivalence) {
    Json sizes = Json::array();
    for (const auto& cls : n.classes) sizes.push_back(cls.size());
    out["class_count"] = n.classes.size();
    out["class_sizes"] = std::move(sizes);
  } else {
    out["witness_p"] = n.bad_p;
    out["witness_q"] = n.bad_q;
    out["witness_r"] = n.bad_r;
  }
  return out;
}

Json exact_suite_json(const ExactSuiteReport& r) {
  Json out;
  out["p"] = r.p;
  out["samples"] = r.samples;
  out["seed"] = r.seed;
  out["poly_ring_axioms"] = r.poly_ring_axioms;
  out["divmod_law"] = r.divmod_law;
  out["gcd_law"] = r.gcd_law;
  out["rational_field_axioms"] = r.rational_field_axioms;
  out["big_rational_axioms"] = r.big_rational_axioms;
  out["ok"] = r.ok;
  if (!r.first_violation.empty()) out["first_violation"] = r.first_violation;
  return out;
}

Json poly_demo_json(const PolyDemoCertificate& c) {
  Json out;
  out["p"] = c.p;
  out["samples"] = c.samples;
  out["seed"] = c.seed;
  out["points_unimodular"] = c.points_unimodular;
  out["determinant_nonunit"] = c.determinant_nonunit;
  out["graph_matrix_invertible"] = c.graph_matrix_invertible;
  out["splits_unique"] = c.splits_unique;
  out["intersection_trivial"] = c.intersection_trivial;
  out["polynomial_span_fails"] = c.polynomial_span_fails;
  out["rational_split_exists"] = c.rational_split_exists;
  out["ok"] = c.ok;
  return out;
}

Json zq_demo_json(const ZqDemoCertificate& c) {
  Json out;
  out["height"] = c.height;
  out["window_points"] = c.window_points;
  out["injective"] = c.injective;
  out["surjective_on_window"] = c.surjective_on_window;
  out["coprime_representatives"] = c.coprime_representatives;
  out["distance_preserved"] = c.distance_preserved;
  out["reflection_characterized"] = c.reflection_characterized;
  out["reflection_failures"] = c.reflection_failures;
  out["named_pair_nondistant"] = c.named_pair_nondistant;
  out["named_pair_images_distant"] = c.named_pair_images_distant;
  out["unit_pullback_fails"] = c.unit_pullback_fails;
  out["ok"] = c.ok;
  return out;
}

std::string render_report(const Json& report) { return report.dump(2) + "\n"; }

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << content;
  if (!out) throw std::runtime_error("write to " + path + " failed");
}

}  // namespace ringline
