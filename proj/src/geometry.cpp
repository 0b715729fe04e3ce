#include "ringline/geometry.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "ringline/spec_parse.hpp"

namespace ringline {
namespace {

MatK doubling_matrix(const Subspace& W) {
  const MatK& b = W.basis();
  MatK z = MatK::zero(b.F, b.rows, b.cols);
  return mat_block2(b, z, z, b);
}

Subspace doubled_space(const Subspace& W) {
  return apply_matrix(Subspace::full_space(W.field(), 2 * W.dim()), doubling_matrix(W));
}

bool meets(const Subspace& a, const Subspace& b) {
  return rank(mat_vcat(a.basis(), b.basis())) < a.dim() + b.dim();
}

int intersection_dim(const Subspace& a, const Subspace& b) {
  return a.dim() + b.dim() - rank(mat_vcat(a.basis(), b.basis()));
}

Row unit_row(int len, int pos) {
  Row r(len, 0);
  r[pos] = 1;
  return r;
}

Ring build_carrier(const ExampleSpec& spec) {
  std::string text;
  std::string field = "GF(" + std::to_string(spec.q) + ")";
  switch (spec.which) {
    case ExampleKind::Regulus51:
    case ExampleKind::TwistedConjugate52:
      text = field;
      break;
    case ExampleKind::ProductHyperbolic53: {
      if (spec.n < 2) throw std::invalid_argument("build_example: needs at least two factors");
      for (int i = 0; i < spec.n; ++i) text += (i ? "x" : "") + field;
      break;
    }
    case ExampleKind::DualParabolic54:
      text = spec.alpha == 0 ? "Dual(" + field + ")"
                             : "Dual(" + field + ",frob^" + std::to_string(spec.alpha) + ")";
      break;
    case ExampleKind::Triangular55:
      text = "UT2(" + field + ")";
      break;
    case ExampleKind::EpsDelta56:
      text = "EpsDelta(" + field + ")";
      break;
  }
  return materialize(parse_ring_spec(text));
}

}  // namespace

std::string example_name(ExampleKind which) {
  switch (which) {
    case ExampleKind::Regulus51: return "scalar-pair regulus";
    case ExampleKind::TwistedConjugate52: return "conjugate-twisted pair";
    case ExampleKind::ProductHyperbolic53: return "product transversal family";
    case ExampleKind::DualParabolic54: return "dual-number pencil family";
    case ExampleKind::Triangular55: return "triangular line complex";
    case ExampleKind::EpsDelta56: return "nilpotent plane family";
  }
  return "";
}

LineFamily make_family(GfPtr K, int ambient, std::vector<Subspace> members) {
  if (!K) throw std::invalid_argument("make_family: empty field handle");
  if (members.empty()) throw std::invalid_argument("make_family: empty member list");
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  LineFamily F;
  F.K = std::move(K);
  F.ambient = ambient;
  F.member_dim = members[0].dim();
  for (const Subspace& w : members) {
    if (w.ambient() != ambient || w.field()->q() != F.K->q())
      throw std::invalid_argument("make_family: member outside the ambient space");
    if (w.dim() != F.member_dim)
      throw std::invalid_argument("make_family: members of mixed dimension");
  }
  F.members = std::move(members);
  return F;
}

GeometryModel build_example(const ExampleSpec& spec, long ceiling) {
  GeometryModel M;
  M.spec = spec;
  M.R = build_carrier(spec);
  const auto& ks = *M.R.k_structure();
  GfPtr K = ks.field;

  switch (spec.which) {
    case ExampleKind::Regulus51: {
      std::vector<MatK> rho;
      for (long a = 0; a < M.R.size(); ++a) {
        MatK s = MatK::zero(K, 2, 2);
        s.at(0, 0) = s.at(1, 1) = ks.coords[size_t(a)][0];
        rho.push_back(s);
      }
      M.bimodule = make_bimodule(M.R, K, std::move(rho));
      break;
    }
    case ExampleKind::TwistedConjugate52: {
      long p = 0;
      int k = 0;
      if (!Gf::prime_power(spec.q, &p, &k) || k % 2 != 0)
        throw std::invalid_argument("build_example: conjugate twist needs a square field order");
      std::vector<MatK> rho;
      for (long a = 0; a < M.R.size(); ++a) {
        int c = ks.coords[size_t(a)][0];
        MatK s = MatK::zero(K, 2, 2);
        s.at(0, 0) = uint8_t(c);
        s.at(1, 1) = uint8_t(K->frobenius(c, spec.alpha));
        rho.push_back(s);
      }
      M.bimodule = make_bimodule(M.R, K, std::move(rho));
      break;
    }
    case ExampleKind::ProductHyperbolic53:
    case ExampleKind::DualParabolic54:
    case ExampleKind::EpsDelta56:
      M.bimodule = regular_bimodule(M.R);
      break;
    case ExampleKind::Triangular55: {
      std::vector<MatK> rho;
      for (long a = 0; a < M.R.size(); ++a) {
        const Row& c = ks.coords[size_t(a)];
        rho.push_back(MatK::from_rows(K, {{c[0], c[1]}, {0, c[2]}}, 2));
      }
      M.bimodule = make_bimodule(M.R, K, std::move(rho));
      break;
    }
  }

  M.model = build_model(M.bimodule, ceiling);
  M.certificate = verify_model(M.model);
  if (!M.certificate.ok)
    throw std::logic_error("build_example: the model failed its certificate");
  M.family = make_family(K, 2 * M.bimodule.m, M.model.images);

  const int m = M.bimodule.m;
  std::vector<Subspace> parts;
  switch (spec.which) {
    case ExampleKind::Regulus51:
    case ExampleKind::TwistedConjugate52:
    case ExampleKind::ProductHyperbolic53:
      for (int i = 0; i < m; ++i)
        parts.push_back(Subspace::span(K, m, {unit_row(m, i)}));
      break;
    case ExampleKind::DualParabolic54:
      parts.push_back(Subspace::span(K, 2, {{0, 1}}));
      break;
    case ExampleKind::Triangular55:
      parts.push_back(Subspace::span(K, 2, {{0, 1}}));
      break;
    case ExampleKind::EpsDelta56:
      parts.push_back(Subspace::span(K, 3, {{0, 1, 0}, {0, 0, 1}}));
      break;
  }
  for (const Subspace& part : parts) {
    SubBimoduleWitness w = make_sub_witness(M.bimodule, part);
    if (!w.invariant)
      throw std::logic_error("build_example: distinguished subspace is not invariant");
    M.axes.push_back(doubled_space(part));
    if (M.witness.space.valid() == false) M.witness = w;
  }
  return M;
}

LineFamily induced_family(const Bimodule& B, const SubBimoduleWitness& W, long ceiling) {
  Bimodule sub = sub_bimodule(B, W);
  std::vector<Subspace> images;
  for (const Point& p : projective_line(B.R, ceiling)) images.push_back(phi_point(sub, p));
  return make_family(B.K, 2 * W.space.dim(), std::move(images));
}

bool is_regulus(const LineFamily& F) {
  if (F.ambient != 4 || F.member_dim != 2)
    throw std::invalid_argument("is_regulus: expects lines in three-dimensional projective space");
  const int q = F.K->q();
  if (F.members.size() != size_t(q) + 1) return false;
  for (size_t i = 0; i < F.members.size(); ++i)
    for (size_t j = i + 1; j < F.members.size(); ++j)
      if (meets(F.members[i], F.members[j])) return false;
  for (const Subspace& line : all_subspaces(F.K, 4, 2)) {
    int met = 0;
    for (const Subspace& mbr : F.members)
      if (meets(line, mbr)) ++met;
    if (met >= 3 && met != q + 1) return false;
  }
  return true;
}

SpreadReport spread_checks(const LineFamily& F) {
  if (F.ambient != 4 || F.member_dim != 2)
    throw std::invalid_argument(
        "spread_checks: expects lines in three-dimensional projective space");
  const int q = F.K->q();
  SpreadReport rep;

  std::set<Row> covered;
  bool disjoint = true;
  for (const Subspace& mbr : F.members)
    for (const Row& pt : mbr.projective_points())
      disjoint = covered.insert(pt).second && disjoint;
  const size_t all_points = size_t(q) * q * q + size_t(q) * q + q + 1;
  rep.is_spread = disjoint && covered.size() == all_points;
  if (!rep.is_spread) return rep;

  // regulus closure over every triple of members
  std::vector<Subspace> lines = all_subspaces(F.K, 4, 2);
  const size_t L = lines.size();
  std::vector<std::vector<char>> meet(L, std::vector<char>(L, 0));
  for (size_t i = 0; i < L; ++i)
    for (size_t j = i + 1; j < L; ++j)
      meet[i][j] = meet[j][i] = meets(lines[i], lines[j]) ? 1 : 0;
  std::map<Subspace, size_t> index;
  for (size_t i = 0; i < L; ++i) index[lines[i]] = i;
  std::set<size_t> member_ids;
  for (const Subspace& mbr : F.members) member_ids.insert(index.at(mbr));
  std::vector<size_t> ids(member_ids.begin(), member_ids.end());

  rep.is_regular = true;
  for (size_t a = 0; a < ids.size() && rep.is_regular; ++a)
    for (size_t b = a + 1; b < ids.size() && rep.is_regular; ++b)
      for (size_t c = b + 1; c < ids.size() && rep.is_regular; ++c) {
        std::vector<size_t> transversals;
        for (size_t t = 0; t < L; ++t)
          if (meet[t][ids[a]] && meet[t][ids[b]] && meet[t][ids[c]]) transversals.push_back(t);
        if (transversals.size() != size_t(q) + 1)
          throw std::logic_error("spread_checks: skew triple without q+1 transversals");
        for (size_t r = 0; r < L && rep.is_regular; ++r) {
          bool on_regulus = true;
          for (size_t t : transversals) on_regulus = on_regulus && meet[r][t];
          if (on_regulus && !member_ids.count(r)) {
            rep.is_regular = false;
            rep.witness_i = int(a);
            rep.witness_j = int(b);
            rep.witness_k = int(c);
          }
        }
      }
  if (rep.is_spread && rep.is_regular) rep.label = "elliptic linear congruence";
  return rep;
}

LineFamily baer_trace(const GeometryModel& M) {
  if (M.spec.which != ExampleKind::TwistedConjugate52)
    throw std::invalid_argument("baer_trace: only defined for the conjugate-twisted pair");
  const GfPtr& K = M.bimodule.K;
  const int k = K->k();
  const int a = ((M.spec.alpha % k) + k) % k;
  if (a == 0)
    throw std::invalid_argument("baer_trace: identity twist fixes no proper subgeometry");
  if (k % 2 != 0 || a != k / 2)
    throw std::invalid_argument("baer_trace: twist is not the index-two conjugation");

  SubfieldEmbedding sub = embed_subfield(make_gf(K->p(), k / 2), K);
  const int q0 = sub.sub->q();
  auto conj = [&](uint8_t c) { return uint8_t(K->frobenius(c, k / 2)); };
  // order-two collineation extending the class map: swap the two
  // coordinate pairs and conjugate every entry
  auto tau = [&](const Row& v) {
    return Row{conj(v[1]), conj(v[0]), conj(v[3]), conj(v[2])};
  };

  // fixed vectors look like (s, s^sigma, t, t^sigma); write s = s0 + s1*gamma
  // over the subfield to coordinatize the fixed substructure
  int gamma = -1;
  for (int c = 0; c < K->q() && gamma < 0; ++c)
    if (sub.back[size_t(c)] < 0) gamma = c;
  std::vector<std::pair<uint8_t, uint8_t>> split(size_t(K->q()), {255, 255});
  for (int s0 = 0; s0 < q0; ++s0)
    for (int s1 = 0; s1 < q0; ++s1) {
      int code = K->add(sub.into[size_t(s0)], K->mul(sub.into[size_t(s1)], gamma));
      if (split[size_t(code)].first != 255)
        throw std::logic_error("baer_trace: subfield coordinates collide");
      split[size_t(code)] = {uint8_t(s0), uint8_t(s1)};
    }

  std::vector<Subspace> traces;
  for (const Subspace& mbr : M.family.members) {
    std::vector<Row> fixed;
    for (const Row& v : mbr.elements()) {
      if (!mbr.contains(tau(v)))
        throw std::logic_error("baer_trace: a member is not invariant under the collineation");
      if (tau(v) != v) continue;
      fixed.push_back({split[v[0]].first, split[v[0]].second,
                       split[v[2]].first, split[v[2]].second});
    }
    Subspace trace = Subspace::span(sub.sub, 4, fixed);
    if (trace.dim() != 2) throw std::logic_error("baer_trace: a trace is not a line");
    traces.push_back(std::move(trace));
  }
  return make_family(sub.sub, 4, std::move(traces));
}

NondistantReport nondistant_classes(const Ring& R, long ceiling) {
  DistantGraph g = distant_graph(R, ceiling);
  const size_t n = g.points.size();
  NondistantReport rep;
  for (size_t i = 0; i < n; ++i)
    if (g.adj[i][i]) {  // a self-distant point: non-distance is not reflexive
      rep.bad_p = rep.bad_q = rep.bad_r = int(i);
      return rep;
    }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (i == j || g.adj[i][j]) continue;
      for (size_t t = 0; t < n; ++t)
        if (t != i && t != j && !g.adj[j][t] && g.adj[i][t]) {
          rep.bad_p = int(i);
          rep.bad_q = int(j);
          rep.bad_r = int(t);
          return rep;
        }
    }
  rep.equivalence = true;
  std::vector<char> seen(n, 0);
  for (size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::vector<int> cls;
    for (size_t j = i; j < n; ++j)
      if (!g.adj[i][j] && !seen[j]) {
        cls.push_back(int(j));
        seen[j] = 1;
      }
    rep.classes.push_back(std::move(cls));
  }
  return rep;
}

BetaReport beta_map(const GeometryModel& M) {
  if (M.spec.which != ExampleKind::DualParabolic54 &&
      M.spec.which != ExampleKind::EpsDelta56)
    throw std::invalid_argument("beta_map: defined for the dual-number and nilpotent families");
  BetaReport rep;
  rep.axis = M.axes.at(0);
  const int m = M.bimodule.m;
  const int q = M.bimodule.K->q();

  NondistantReport nd = nondistant_classes(M.R);
  if (!nd.equivalence)
    throw std::logic_error("beta_map: non-distance is not an equivalence on this carrier");
  rep.class_count = nd.classes.size();

  const int trace_dim = m - 1;  // 54: a point; 56: a regulus line
  std::set<Subspace> traces, joins;
  for (const std::vector<int>& cls : nd.classes) {
    Subspace trace, join;
    for (int idx : cls) {
      SumIntersection s = sum_and_intersection(M.model.images[size_t(idx)], rep.axis);
      if (!trace.valid()) {
        trace = s.intersection;
        join = s.sum;
      } else if (trace != s.intersection || join != s.sum) {
        throw std::logic_error("beta_map: a class has mixed traces or joins");
      }
    }
    if (trace.dim() != trace_dim || join.dim() != 2 * m - 1)
      throw std::logic_error("beta_map: unexpected trace or join dimension");
    traces.insert(trace);
    joins.insert(join);
    rep.map.emplace_back(std::move(trace), std::move(join));
  }
  std::sort(rep.map.begin(), rep.map.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  rep.bijection = traces.size() == rep.class_count && joins.size() == rep.class_count &&
                  rep.class_count == size_t(q) + 1;

  if (M.spec.which == ExampleKind::DualParabolic54) {
    // the trace spanned by (0, k^alpha, 0, l^alpha) must map onto the join
    // of (k, 0, l, 0) with the axis
    const GfPtr& K = M.bimodule.K;
    std::map<Subspace, Subspace> beta(rep.map.begin(), rep.map.end());
    rep.formula_matches = true;
    std::vector<std::pair<int, int>> reps;
    reps.emplace_back(0, 1);
    for (int t = 0; t < q; ++t) reps.emplace_back(1, t);
    for (auto [k0, l0] : reps) {
      uint8_t ka = uint8_t(K->frobenius(k0, M.spec.alpha));
      uint8_t la = uint8_t(K->frobenius(l0, M.spec.alpha));
      Subspace trace = Subspace::span(K, 4, {{0, ka, 0, la}});
      std::vector<Row> join_rows{{uint8_t(k0), 0, uint8_t(l0), 0}};
      for (int r = 0; r < rep.axis.basis().rows; ++r)
        join_rows.push_back(rep.axis.basis().row(r));
      auto it = beta.find(trace);
      if (it == beta.end() || it->second != Subspace::span(K, 4, join_rows)) {
        rep.formula_matches = false;
        break;
      }
    }
  } else {
    rep.formula_matches = true;  // no displayed coordinate formula in this case
  }

  std::map<Subspace, Subspace> beta(rep.map.begin(), rep.map.end());
  rep.containment = true;
  for (const Subspace& p : M.family.members) {
    Subspace trace = sum_and_intersection(p, rep.axis).intersection;
    auto it = beta.find(trace);
    if (it == beta.end() || !it->second.contains(p)) {
      rep.containment = false;
      break;
    }
  }
  rep.ok = rep.bijection && rep.formula_matches && rep.containment;
  return rep;
}

CongruenceCertificate congruence_equalities(const GeometryModel& M,
                                            unsigned long long ceiling) {
  const Bimodule& B = M.bimodule;
  const int m = B.m;
  CongruenceCertificate cert;
  std::set<Subspace> model_set(M.family.members.begin(), M.family.members.end());
  cert.model_count = model_set.size();

  std::map<Subspace, Subspace> beta;
  std::set<Subspace> regulus6;
  if (M.spec.which == ExampleKind::DualParabolic54 ||
      M.spec.which == ExampleKind::EpsDelta56) {
    BetaReport br = beta_map(M);
    if (!br.ok) throw std::logic_error("congruence_equalities: malformed class mapping");
    beta.insert(br.map.begin(), br.map.end());
  }
  if (M.spec.which == ExampleKind::EpsDelta56) {
    MatK embed = doubling_matrix(M.witness.space);
    for (const Subspace& line : induced_family(B, M.witness).members)
      regulus6.insert(apply_matrix(line, embed));
  }

  auto in_family = [&](const Subspace& W) -> bool {
    switch (M.spec.which) {
      case ExampleKind::ProductHyperbolic53: {
        for (const Subspace& axis : M.axes)
          if (!meets(W, axis)) return false;
        return true;
      }
      case ExampleKind::Triangular55:
        return intersection_dim(W, M.axes[0]) == 1;
      case ExampleKind::DualParabolic54: {
        if (intersection_dim(W, M.axes[0]) != 1) return false;
        Subspace trace = sum_and_intersection(W, M.axes[0]).intersection;
        auto it = beta.find(trace);
        return it != beta.end() && it->second.contains(W);
      }
      case ExampleKind::EpsDelta56: {
        if (intersection_dim(W, M.axes[0]) != 2) return false;
        Subspace trace = sum_and_intersection(W, M.axes[0]).intersection;
        if (!regulus6.count(trace)) return false;
        auto it = beta.find(trace);
        return it != beta.end() && it->second.contains(W);
      }
      default:
        throw std::invalid_argument(
            "congruence_equalities: no geometric characterization for this example");
    }
  };

  SubspaceStream stream(B.K, 2 * m, m, ceiling);
  cert.candidates = stream.total();
  while (auto W = stream.next()) {
    bool fam = in_family(*W);
    bool mdl = model_set.count(*W) > 0;
    if (fam) ++cert.family_count;
    if (fam == mdl) continue;
    if (mdl && cert.only_model.size() < 8) cert.only_model.push_back(*W);
    if (fam && cert.only_family.size() < 8) cert.only_family.push_back(*W);
    cert.equal = false;
  }
  cert.equal = cert.only_model.empty() && cert.only_family.empty() &&
               cert.family_count == cert.model_count;

  if (cert.equal) {
    switch (M.spec.which) {
      case ExampleKind::ProductHyperbolic53:
        if (M.spec.n == 2) cert.label = "hyperbolic linear congruence";
        break;
      case ExampleKind::DualParabolic54:
        if (((M.spec.alpha % B.K->k()) + B.K->k()) % B.K->k() == 0)
          cert.label = "parabolic linear congruence";
        break;
      case ExampleKind::Triangular55:
        cert.label = "special linear complex";
        break;
      case ExampleKind::EpsDelta56:
        cert.label = "planes on a regulus";
        break;
      default:
        break;
    }
  }
  return cert;
}

}  // namespace ringline
