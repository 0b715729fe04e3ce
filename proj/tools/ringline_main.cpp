// Command-line front door: parse a ring construction, run the requested
// analysis, and emit one deterministic JSON report (stdout by default,
// --out FILE otherwise).  Exit codes: 0 all checks passed, 1 at least one
// certificate failed (the report is still emitted, with witnesses), 2 the
// input could not be parsed or materialized.
#include <fstream>
#include <iostream>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ringline/report.hpp"
#include "ringline/spec_parse.hpp"

namespace {

using namespace ringline;

struct Common {
  std::string out;        // report path; empty writes to stdout
  uint32_t seed = 1729;
  int threads = 1;
  long ceiling = 256;     // projective-line enumeration ceiling
  long gl2_ceiling = 16;  // full matrix-group scan ceiling
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--out", c.out, "write the JSON report to this file instead of stdout");
  cmd->add_option("--seed", c.seed, "seed for the pseudo-random sweeps")->capture_default_str();
  cmd->add_option("--threads", c.threads, "worker threads for the distant-graph scan")
      ->check(CLI::Range(1, 64))
      ->capture_default_str();
  cmd->add_option("--ceiling", c.ceiling, "largest carrier admitted to line enumeration")
      ->capture_default_str();
  cmd->add_option("--gl2-ceiling", c.gl2_ceiling,
                  "largest carrier admitted to full matrix-group scans")
      ->capture_default_str();
}

Json invocation_json(const Common& c) {
  Json inv;
  inv["seed"] = c.seed;
  inv["threads"] = c.threads;
  inv["ceiling"] = c.ceiling;
  inv["gl2_ceiling"] = c.gl2_ceiling;
  return inv;
}

int finish(Json report, const VerdictList& v, const Common& c) {
  report["verdicts"] = v.json();
  std::string text = render_report(report);
  if (c.out.empty())
    std::cout << text;
  else
    write_text_file(c.out, text);
  return v.all ? 0 : 1;
}

Ring load_ring(const std::string& spec_text) { return materialize(parse_ring_spec(spec_text)); }

// ---- ring -------------------------------------------------------------------

int run_ring(const std::string& spec_text, const Common& c) {
  Ring R = load_ring(spec_text);
  DedekindReport dk = is_dedekind_finite(R);
  StableRank2Report sr = has_stable_rank_2(R);
  Ge2Report g = ge2_analysis(R, c.gl2_ceiling, c.ceiling);

  Json inv = invocation_json(c);
  inv["spec"] = spec_text;
  Json report = report_skeleton("ring", std::move(inv));
  report["ring"] = ring_facts_json(R, dk, sr);
  report["matrix_groups"] = ge2_json(g);

  VerdictList v;
  v.add("dedekind_finite", dk.dedekind_finite);
  v.add("stable_rank_2", sr.holds);
  v.add("transvection_orbit_covers_line", g.e2_orbit_equals_line);
  if (g.group_scans_ran)
    v.add("generated_by_elementaries", g.ge2_ring);
  else
    v.skip("generated_by_elementaries", "carrier above the matrix-group ceiling");
  return finish(std::move(report), v, c);
}

// ---- pline ------------------------------------------------------------------

int run_pline(const std::string& spec_text, const std::string& dot_path, const Common& c) {
  Ring R = load_ring(spec_text);
  DistantGraph G = distant_graph(R, c.ceiling, c.threads);
  Ge2Report g = ge2_analysis(R, c.gl2_ceiling, c.ceiling);

  Json inv = invocation_json(c);
  inv["spec"] = spec_text;
  Json report = report_skeleton("pline", std::move(inv));
  report["line"] = graph_json(R, G);
  report["matrix_groups"] = ge2_json(g);

  if (!dot_path.empty())
    write_text_file(dot_path, graph_dot(R, G, "P(" + R.spec().text() + ")"));

  VerdictList v;
  v.add("loops_only_in_trivial_ring", G.anti_reflexive == (R.size() > 1));
  v.add("transvection_orbit_covers_line", g.e2_orbit_equals_line);
  if (g.group_scans_ran)
    v.add("generated_by_elementaries", g.ge2_ring);
  else
    v.skip("generated_by_elementaries", "carrier above the matrix-group ceiling");
  return finish(std::move(report), v, c);
}

// ---- hom --------------------------------------------------------------------

struct HomOptions {
  bool identity = false;
  std::string zmap_target;
  std::vector<int> quotient_gens;
  std::string table_path;
  int words = 100;
};

RingHom build_hom(const Ring& R, const HomOptions& h) {
  int modes = int(h.identity) + int(!h.zmap_target.empty()) + int(!h.quotient_gens.empty()) +
              int(!h.table_path.empty());
  if (modes != 1)
    throw std::invalid_argument(
        "choose exactly one of --identity, --zmap, --quotient, --table");
  if (h.identity) return identity_hom(R);
  if (!h.zmap_target.empty()) return zmod_hom(R, load_ring(h.zmap_target));
  if (!h.quotient_gens.empty()) return quotient_ring(R, h.quotient_gens).projection;

  std::ifstream in(h.table_path);
  if (!in) throw std::invalid_argument("cannot open " + h.table_path);
  Json doc = Json::parse(in);
  RingHom phi;
  phi.source = R;
  phi.target = load_ring(doc.at("target").get<std::string>());
  phi.map = doc.at("map").get<std::vector<int>>();
  return phi;
}

int run_hom(const std::string& spec_text, const HomOptions& h, const Common& c) {
  Ring R = load_ring(spec_text);
  RingHom phi = build_hom(R, h);
  HomCheck hc = validate_hom(phi);
  if (!hc.ok)
    throw std::invalid_argument("not a unital ring homomorphism: " + hc.violation +
                                " law fails at (" + std::to_string(hc.a) + ", " +
                                std::to_string(hc.b) + ")");

  InducedMap im = induced_map(phi, c.ceiling, c.seed, h.words);
  DistanceReflectionReport rr = check_distance_reflection(phi, c.ceiling);

  Json inv = invocation_json(c);
  inv["spec"] = spec_text;
  inv["words"] = h.words;
  Json report = report_skeleton("hom", std::move(inv));
  report["hom"] = hom_json(phi);
  report["point_map"] = induced_map_json(im);
  report["distance_reflection"] = reflection_json(rr);

  VerdictList v;
  v.add("distance_preserved", im.distance_preserved);
  v.add("equivariant", im.equivariant);
  v.add("injectivity_matches_hom", im.injectivity_matches);
  v.add("reflection_formulations_agree", rr.agree);
  if (phi.surjective()) {
    SurjectivityReport s = check_surjectivity(phi, c.gl2_ceiling, c.ceiling);
    report["surjectivity"] = surjectivity_json(s);
    v.add("surjectivity_conditions_sound", s.conditions_imply_surjective);
  } else {
    v.skip("surjectivity_conditions_sound", "homomorphism is not surjective");
  }
  return finish(std::move(report), v, c);
}

// ---- rep --------------------------------------------------------------------

struct RepOptions {
  bool regular = false;
  std::string table_path;
  std::vector<int> reduction_gens;
  std::string sub_rows;         // "r0,r1;r0,r1" basis rows of an invariant subspace
  std::string complement_rows;  // second witness for the direct-sum check
  int words = 50;
};

// The canonical action on a prime-order quotient: cosets of R/I number a
// copy of the prime field through t -> t . 1, and each ring element acts as
// the 1x1 matrix of its coset.
Bimodule reduction_bimodule(const Ring& R, const std::vector<int>& gens) {
  QuotientResult qr = quotient_ring(R, gens);
  long n = qr.quotient.size();
  long p = 0;
  int k = 0;
  if (!Gf::prime_power(n, &p, &k) || k != 1)
    throw std::invalid_argument("reduction needs a prime-order quotient, got size " +
                                std::to_string(n));
  GfPtr K = make_gf(int(p), 1);
  std::vector<int> coset_to_scalar(size_t(n), -1);
  int acc = qr.quotient.zero();
  for (int t = 0; t < int(n); ++t) {
    coset_to_scalar[size_t(acc)] = t;
    acc = qr.quotient.add(acc, qr.quotient.one());
  }
  std::vector<MatK> rho;
  rho.reserve(size_t(R.size()));
  for (int a = 0; a < int(R.size()); ++a) {
    MatK m = MatK::zero(K, 1, 1);
    m.at(0, 0) = uint8_t(coset_to_scalar[size_t(qr.projection(a))]);
    rho.push_back(std::move(m));
  }
  return make_bimodule(R, K, std::move(rho));
}

Bimodule table_bimodule(const Ring& R, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  Json doc = Json::parse(in);
  int p = doc.at("p").get<int>();
  int k = doc.at("k").get<int>();
  std::vector<int> modulus;
  if (doc.contains("modulus")) modulus = doc.at("modulus").get<std::vector<int>>();
  GfPtr K = make_gf(p, k, modulus);
  int m = doc.at("m").get<int>();
  std::vector<MatK> rho;
  for (const Json& entry : doc.at("rho")) {
    std::vector<Row> rows;
    for (const Json& jrow : entry) {
      Row row;
      for (const Json& cell : jrow) row.push_back(uint8_t(cell.get<int>()));
      rows.push_back(std::move(row));
    }
    rho.push_back(MatK::from_rows(K, rows, m));
  }
  return make_bimodule(R, K, std::move(rho));
}

std::vector<Row> parse_rows(const std::string& text) {
  std::vector<Row> rows;
  Row current;
  std::string token;
  auto flush_token = [&] {
    if (token.empty()) throw std::invalid_argument("empty entry in row list '" + text + "'");
    current.push_back(uint8_t(std::stoi(token)));
    token.clear();
  };
  for (char ch : text) {
    if (ch == ',') {
      flush_token();
    } else if (ch == ';') {
      flush_token();
      rows.push_back(std::move(current));
      current.clear();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      token.push_back(ch);
    }
  }
  flush_token();
  rows.push_back(std::move(current));
  return rows;
}

SubBimoduleWitness witness_from_rows(const Bimodule& B, const std::string& rows_text,
                                     const char* flag) {
  Subspace s = Subspace::span(B.K, B.m, parse_rows(rows_text));
  SubBimoduleWitness W = make_sub_witness(B, s);
  if (!W.invariant)
    throw std::invalid_argument(std::string(flag) + ": subspace is not action-invariant (" +
                                B.R.element_text(W.violating_a) + " moves it)");
  return W;
}

int run_rep(const std::string& spec_text, const RepOptions& r, const Common& c) {
  Ring R = load_ring(spec_text);
  int modes = int(r.regular) + int(!r.table_path.empty()) + int(!r.reduction_gens.empty());
  if (modes != 1)
    throw std::invalid_argument("choose exactly one of --regular, --table, --reduction");
  Bimodule B;
  if (r.regular)
    B = regular_bimodule(R);
  else if (!r.table_path.empty())
    B = table_bimodule(R, r.table_path);
  else
    B = reduction_bimodule(R, r.reduction_gens);

  ProjectiveModel M = build_model(B, c.ceiling);
  ModelCertificate cert = verify_model(M);
  FactorComparison fc = factor_representation(B, c.ceiling);

  Json inv = invocation_json(c);
  inv["spec"] = spec_text;
  inv["words"] = r.words;
  Json report = report_skeleton("rep", std::move(inv));
  report["model"] = model_json(M);
  report["model_certificate"] = model_certificate_json(cert);
  report["factor_model"] = factor_json(fc);

  bool collineations_ok = true;
  Json sweeps = Json::array();
  std::vector<Mat2> gammas = {mat2_identity(R), transvection_upper(R, R.one()),
                              transvection_lower(R, R.one())};
  std::mt19937 rng(c.seed);
  for (int i = 0; i < r.words; ++i) gammas.push_back(random_ge2_word(R, rng));
  for (const Mat2& g : gammas) {
    CollineationCertificate cc = collineation_check(B, g, c.ceiling);
    collineations_ok = collineations_ok && cc.ok;
    if (sweeps.size() < 8 || !cc.ok) sweeps.push_back(collineation_json(R, g, cc));
  }
  Json coll;
  coll["matrices_checked"] = gammas.size();
  coll["all_equivariant"] = collineations_ok;
  coll["sample"] = std::move(sweeps);
  report["collineations"] = std::move(coll);

  VerdictList v;
  v.add("model_certificate", cert.ok);
  v.add("factor_model", fc.ok);
  v.add("collineations_equivariant", collineations_ok);

  if (!r.sub_rows.empty()) {
    SubBimoduleWitness W = witness_from_rows(B, r.sub_rows, "--sub");
    SubModelCertificate sc = sub_bimodule_model(B, W, c.ceiling);
    QuotientModelCertificate qc = quotient_model(B, W, c.ceiling);
    report["restriction_model"] = sub_model_json(sc);
    report["quotient_model"] = quotient_model_json(qc);
    v.add("restriction_model", sc.ok);
    v.add("quotient_model", qc.ok);
    if (!r.complement_rows.empty()) {
      SubBimoduleWitness W2 = witness_from_rows(B, r.complement_rows, "--complement");
      DirectSumCertificate dc = direct_sum_model(B, W, W2, c.ceiling);
      report["direct_sum_model"] = direct_sum_json(dc);
      v.add("direct_sum_model", dc.ok);
    }
  } else if (!r.complement_rows.empty()) {
    throw std::invalid_argument("--complement requires --sub");
  }
  return finish(std::move(report), v, c);
}

// ---- geometry ---------------------------------------------------------------

ExampleKind parse_example_id(const std::string& id) {
  if (id == "5.1") return ExampleKind::Regulus51;
  if (id == "5.2") return ExampleKind::TwistedConjugate52;
  if (id == "5.3") return ExampleKind::ProductHyperbolic53;
  if (id == "5.4") return ExampleKind::DualParabolic54;
  if (id == "5.5") return ExampleKind::Triangular55;
  if (id == "5.6") return ExampleKind::EpsDelta56;
  throw std::invalid_argument("unknown example id '" + id + "'");
}

int run_geometry(const std::string& id, int q, int alpha, int n,
                 unsigned long long scan_ceiling, const Common& c) {
  ExampleSpec es;
  es.which = parse_example_id(id);
  es.q = q;
  es.n = n;
  if (alpha >= 0) {
    es.alpha = alpha;
  } else if (es.which == ExampleKind::TwistedConjugate52) {
    long p = 0;
    int k = 0;
    if (!Gf::prime_power(q, &p, &k) || k % 2 != 0)
      throw std::invalid_argument("example 5.2 needs a square field order, got " +
                                  std::to_string(q));
    es.alpha = k / 2;
  } else {
    es.alpha = 0;
  }

  GeometryModel M = build_example(es, c.ceiling);

  Json inv = invocation_json(c);
  inv["example"] = id;
  inv["q"] = q;
  inv["alpha"] = es.alpha;
  inv["factors"] = n;
  inv["scan_ceiling"] = scan_ceiling;
  Json report = report_skeleton("geometry", std::move(inv));
  report["model"] = geometry_model_json(M);

  VerdictList v;
  v.add("model_certificate", M.certificate.ok);

  switch (es.which) {
    case ExampleKind::Regulus51: {
      bool reg = is_regulus(M.family);
      report["family_is_regulus"] = reg;
      v.add("family_is_regulus", reg);
      break;
    }
    case ExampleKind::TwistedConjugate52: {
      report["family_is_regulus"] = is_regulus(M.family);
      int k = M.bimodule.K->k();
      int twist = ((es.alpha % k) + k) % k;
      if (k % 2 == 0 && twist == k / 2) {
        LineFamily traces = baer_trace(M);
        SpreadReport sp = spread_checks(traces);
        report["subgeometry_traces"] = family_json(traces);
        report["spread"] = spread_json(sp);
        v.add("traces_form_spread", sp.is_spread);
        v.add("spread_is_regular", sp.is_regular);
      } else {
        v.skip("traces_form_spread", "twist is not the square-root conjugation");
      }
      break;
    }
    case ExampleKind::ProductHyperbolic53: {
      CongruenceCertificate cc = congruence_equalities(M, scan_ceiling);
      report["congruence"] = congruence_json(cc);
      v.add("transversal_characterization", cc.equal);
      break;
    }
    case ExampleKind::DualParabolic54: {
      BetaReport b = beta_map(M);
      CongruenceCertificate cc = congruence_equalities(M, scan_ceiling);
      report["parallel_classes"] = beta_json(b);
      report["congruence"] = congruence_json(cc);
      v.add("parallel_class_correspondence", b.ok);
      v.add("axis_pencil_characterization", cc.equal);
      break;
    }
    case ExampleKind::Triangular55: {
      CongruenceCertificate cc = congruence_equalities(M, scan_ceiling);
      report["congruence"] = congruence_json(cc);
      v.add("axis_complex_characterization", cc.equal);
      break;
    }
    case ExampleKind::EpsDelta56: {
      LineFamily traces = induced_family(M.bimodule, M.witness, c.ceiling);
      bool reg = is_regulus(traces);
      report["induced_traces"] = family_json(traces);
      report["induced_traces_form_regulus"] = reg;
      BetaReport b = beta_map(M);
      CongruenceCertificate cc = congruence_equalities(M, scan_ceiling);
      report["parallel_classes"] = beta_json(b);
      report["congruence"] = congruence_json(cc);
      v.add("induced_traces_form_regulus", reg);
      v.add("parallel_class_correspondence", b.ok);
      v.add("regulus_plane_characterization", cc.equal);
      break;
    }
  }
  return finish(std::move(report), v, c);
}

// ---- demo -------------------------------------------------------------------

int run_demo(const std::string& kind, int p, int samples, long height, int suite_samples,
             const Common& c) {
  Json inv = invocation_json(c);
  inv["kind"] = kind;
  VerdictList v;
  Json report;
  if (kind == "poly") {
    inv["p"] = p;
    inv["samples"] = samples;
    inv["suite_samples"] = suite_samples;
    report = report_skeleton("demo", std::move(inv));
    PolyDemoCertificate pc = poly_demo(p, samples, c.seed);
    report["demo"] = poly_demo_json(pc);
    v.add("fraction_embedding_demo", pc.ok);
    if (suite_samples > 0) {
      ExactSuiteReport es = exact_property_suite(p, suite_samples, c.seed);
      report["arithmetic_suite"] = exact_suite_json(es);
      v.add("arithmetic_laws", es.ok);
    } else {
      v.skip("arithmetic_laws", "property suite disabled");
    }
  } else if (kind == "ZQ") {
    inv["height"] = height;
    report = report_skeleton("demo", std::move(inv));
    ZqDemoCertificate zc = z_to_q_demo(height);
    report["demo"] = zq_demo_json(zc);
    v.add("integer_embedding_demo", zc.ok);
  } else {
    throw std::invalid_argument("unknown demo '" + kind + "' (expected poly or ZQ)");
  }
  return finish(std::move(report), v, c);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"projective lines over finite rings: constructions, certificates, reports"};
  app.require_subcommand(1);

  Common common;

  auto* ring_cmd = app.add_subcommand("ring", "carrier facts: units, radical, rank predicates");
  std::string ring_spec;
  ring_cmd->add_option("spec", ring_spec, "ring construction, e.g. \"Z/6\" or \"Dual(GF(2))\"")
      ->required();
  add_common(ring_cmd, common);

  auto* pline_cmd = app.add_subcommand("pline", "projective line and distant graph");
  std::string pline_spec, dot_path;
  pline_cmd->add_option("spec", pline_spec, "ring construction")->required();
  pline_cmd->add_option("--dot", dot_path, "write the distant graph in DOT format");
  add_common(pline_cmd, common);

  auto* hom_cmd = app.add_subcommand("hom", "point map induced by a ring homomorphism");
  std::string hom_spec;
  HomOptions hom_opts;
  hom_cmd->add_option("spec", hom_spec, "source ring construction")->required();
  hom_cmd->add_flag("--identity", hom_opts.identity, "identity map on the source");
  hom_cmd->add_option("--zmap", hom_opts.zmap_target,
                      "canonical map onto this Z/n (source must be Z/m with n | m)");
  hom_cmd->add_option("--quotient", hom_opts.quotient_gens,
                      "project onto the quotient by the ideal these elements generate");
  hom_cmd->add_option("--table", hom_opts.table_path,
                      "JSON file {\"target\": spec, \"map\": [element codes]}");
  hom_cmd->add_option("--words", hom_opts.words, "random matrix words in the equivariance sweep")
      ->capture_default_str();
  add_common(hom_cmd, common);

  auto* rep_cmd = app.add_subcommand("rep", "matrix representation and subspace model");
  std::string rep_spec;
  RepOptions rep_opts;
  rep_cmd->add_option("spec", rep_spec, "ring construction")->required();
  rep_cmd->add_flag("--regular", rep_opts.regular,
                    "carrier acting on itself over its distinguished subfield");
  rep_cmd->add_option("--table", rep_opts.table_path,
                      "JSON file {\"p\",\"k\",\"m\",\"rho\": [matrix per element code]}");
  rep_cmd->add_option("--reduction", rep_opts.reduction_gens,
                      "act through the prime-order quotient by this ideal");
  rep_cmd->add_option("--sub", rep_opts.sub_rows,
                      "invariant-subspace basis rows, e.g. \"0,1\" or \"1,0;0,1\"");
  rep_cmd->add_option("--complement", rep_opts.complement_rows,
                      "second invariant subspace for the direct-sum comparison");
  rep_cmd->add_option("--words", rep_opts.words, "random matrix words in the collineation sweep")
      ->capture_default_str();
  add_common(rep_cmd, common);

  auto* geo_cmd = app.add_subcommand("geometry", "classical line and plane families");
  std::string geo_id;
  int geo_q = 2, geo_alpha = -1, geo_n = 2;
  unsigned long long scan_ceiling = 2000000;
  geo_cmd->add_option("example", geo_id, "family id: 5.1 through 5.6")
      ->required()
      ->check(CLI::IsMember({"5.1", "5.2", "5.3", "5.4", "5.5", "5.6"}));
  geo_cmd->add_option("--q", geo_q, "field order")->capture_default_str();
  geo_cmd->add_option("--alpha", geo_alpha,
                      "twist exponent (default: conjugation for 5.2, none for 5.4)");
  geo_cmd->add_option("--n", geo_n, "number of product factors (5.3)")->capture_default_str();
  geo_cmd->add_option("--scan-ceiling", scan_ceiling,
                      "largest subspace family admitted to characterization scans")
      ->capture_default_str();
  add_common(geo_cmd, common);

  auto* demo_cmd = app.add_subcommand("demo", "exact-arithmetic demonstrations");
  std::string demo_kind;
  int demo_p = 3, demo_samples = 100, suite_samples = 1000;
  long demo_height = 10;
  demo_cmd->add_option("kind", demo_kind, "poly (fraction scalars) or ZQ (integer pairs)")
      ->required()
      ->check(CLI::IsMember({"poly", "ZQ"}));
  demo_cmd->add_option("--p", demo_p, "coefficient prime (poly)")->capture_default_str();
  demo_cmd->add_option("--samples", demo_samples, "sampled pairs (poly)")->capture_default_str();
  demo_cmd->add_option("--suite-samples", suite_samples,
                       "arithmetic law sweep size (poly; 0 disables)")
      ->capture_default_str();
  demo_cmd->add_option("--height", demo_height, "coordinate bound (ZQ)")->capture_default_str();
  add_common(demo_cmd, common);

  // geometry models need headroom for plane families in K^6
  geo_cmd->parse_complete_callback([&] {
    if (geo_cmd->count("--ceiling") == 0) common.ceiling = 4096;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (ring_cmd->parsed()) return run_ring(ring_spec, common);
    if (pline_cmd->parsed()) return run_pline(pline_spec, dot_path, common);
    if (hom_cmd->parsed()) return run_hom(hom_spec, hom_opts, common);
    if (rep_cmd->parsed()) return run_rep(rep_spec, rep_opts, common);
    if (geo_cmd->parsed())
      return run_geometry(geo_id, geo_q, geo_alpha, geo_n, scan_ceiling, common);
    if (demo_cmd->parsed())
      return run_demo(demo_kind, demo_p, demo_samples, demo_height, suite_samples, common);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  std::cerr << "error: no subcommand\n";
  return 2;
}
