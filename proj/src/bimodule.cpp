#include "ringline/bimodule.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace ringline {
namespace {

std::string pair_label(const Ring& R, int a, int b) {
  return "(" + R.element_text(a) + ", " + R.element_text(b) + ")";
}

// Pivot columns of a canonical (reduced echelon) basis.
std::vector<int> pivot_cols(const MatK& basis) {
  std::vector<int> pivots;
  pivots.reserve(basis.rows);
  for (int i = 0; i < basis.rows; ++i) {
    int j = 0;
    while (j < basis.cols && basis.at(i, j) == 0) ++j;
    pivots.push_back(j);
  }
  return pivots;
}

// Coordinates of a member vector with respect to the canonical basis: the
// entries at the pivot columns.  Verified by reconstruction.
Row coords_in(const Subspace& W, const Row& v, const std::vector<int>& pivots) {
  Row c(pivots.size());
  for (size_t i = 0; i < pivots.size(); ++i) c[i] = v[pivots[i]];
  Row back = row_mat(c, W.basis());
  if (back != v) throw std::logic_error("vector outside the invariant subspace");
  return c;
}

// [[B, 0], [0, B]] for the witness basis B: embeds doubled subspace
// coordinates into the doubled ambient space.
MatK doubling_matrix(const Subspace& W) {
  const MatK& b = W.basis();
  MatK z = MatK::zero(b.F, b.rows, b.cols);
  return mat_block2(b, z, z, b);
}

// U' x U' inside K^{2m}, u-block first.
Subspace doubled_space(const Subspace& W) {
  return apply_matrix(Subspace::full_space(W.field(), 2 * W.dim()), doubling_matrix(W));
}

Row unit_row(int len, int pos) {
  Row r(len, 0);
  r[pos] = 1;
  return r;
}

void require_invariant(const SubBimoduleWitness& W, const char* who) {
  if (!W.space.valid()) throw std::invalid_argument(std::string(who) + ": empty witness");
  if (!W.invariant)
    throw std::invalid_argument(std::string(who) + ": witness subspace is not action-invariant");
}

}  // namespace

Bimodule make_bimodule(Ring R, GfPtr K, std::vector<MatK> rho) {
  if (!R.valid()) throw std::invalid_argument("make_bimodule: empty ring handle");
  if (!K) throw std::invalid_argument("make_bimodule: empty field handle");
  const long n = R.size();
  if (rho.size() != size_t(n))
    throw std::invalid_argument("make_bimodule: table has " + std::to_string(rho.size()) +
                                " entries for a carrier of size " + std::to_string(n));
  const int m = rho.empty() ? 0 : rho[0].rows;
  const int q = K->q();
  for (long a = 0; a < n; ++a) {
    const MatK& M = rho[a];
    if (M.rows != m || M.cols != m)
      throw std::invalid_argument("make_bimodule: entry for " + R.element_text(int(a)) +
                                  " is not " + std::to_string(m) + "x" + std::to_string(m));
    for (uint8_t x : M.e)
      if (int(x) >= q)
        throw std::invalid_argument("make_bimodule: entry for " + R.element_text(int(a)) +
                                    " holds a value outside the field");
    rho[a].F = K;  // normalize onto the declared field handle
  }
  if (rho[R.one()] != MatK::identity(K, m))
    throw std::invalid_argument("make_bimodule: the identity does not act as the identity matrix");
  for (long a = 0; a < n; ++a)
    for (long b = 0; b < n; ++b) {
      int ai = int(a), bi = int(b);
      if (rho[R.add(ai, bi)] != mat_add(rho[a], rho[b]))
        throw std::invalid_argument("make_bimodule: additivity fails at " + pair_label(R, ai, bi));
      if (rho[R.mul(ai, bi)] != mat_mul(rho[a], rho[b]))
        throw std::invalid_argument("make_bimodule: multiplicativity fails at " +
                                    pair_label(R, ai, bi));
    }
  return Bimodule{std::move(R), std::move(K), m, std::move(rho)};
}

Bimodule regular_bimodule(const Ring& R) {
  const auto& ks = R.k_structure();
  if (!ks)
    throw std::invalid_argument(
        "regular_bimodule: carrier has no distinguished subfield coordinates");
  const int m = ks->dim;
  const long n = R.size();
  std::vector<MatK> rho;
  rho.reserve(size_t(n));
  for (long a = 0; a < n; ++a) {
    std::vector<Row> rows;
    rows.reserve(size_t(m));
    for (int i = 0; i < m; ++i) rows.push_back(ks->coords[size_t(R.mul(ks->basis[i], int(a)))]);
    rho.push_back(MatK::from_rows(ks->field, rows, m));
  }
  return make_bimodule(R, ks->field, std::move(rho));
}

AnnihilatorReport annihilator_and_faithful(const Bimodule& B) {
  AnnihilatorReport rep;
  const long n = B.R.size();
  const MatK zero = MatK::zero(B.K, B.m, B.m);
  std::set<std::vector<uint8_t>> distinct;
  std::vector<int> members;
  for (long a = 0; a < n; ++a) {
    distinct.insert(B.rho[a].e);
    if (B.rho[a] == zero) members.push_back(int(a));
  }
  rep.annihilator = Ideal{B.R, std::move(members)};
  rep.faithful = distinct.size() == size_t(n);
  bool trivial_kernel = rep.annihilator.members.size() == 1;
  if (rep.faithful != trivial_kernel)
    throw std::logic_error("annihilator_and_faithful: injectivity disagrees with the kernel");
  return rep;
}

Subspace psi_subspace(const MatK& alpha, const MatK& beta) {
  return Subspace::span(mat_hcat(alpha, beta));
}

Subspace phi_point(const Bimodule& B, const Point& p) {
  return psi_subspace(B.rho[p.rep.a], B.rho[p.rep.b]);
}

ProjectiveModel build_model(const Bimodule& B, long ceiling) {
  ProjectiveModel M;
  M.bimodule = B;
  M.points = projective_line(B.R, ceiling);
  M.images.reserve(M.points.size());
  for (const Point& p : M.points) M.images.push_back(phi_point(B, p));
  M.ann = annihilator_and_faithful(B);
  return M;
}

ModelCertificate verify_model(const ProjectiveModel& M) {
  const Bimodule& B = M.bimodule;
  if (B.m == 0)
    throw std::invalid_argument("verify_model: degenerate zero-dimensional representation");
  const Ring& R = B.R;
  const size_t np = M.points.size();
  ModelCertificate cert;

  cert.well_defined = true;
  for (size_t i = 0; i < np && cert.well_defined; ++i)
    for (const Pair& pr : M.points[i].orbit)
      if (psi_subspace(B.rho[pr.a], B.rho[pr.b]) != M.images[i]) {
        cert.well_defined = false;
        cert.witness_p = int(i);
        break;
      }

  cert.images_half_dimensional = true;
  for (size_t i = 0; i < np; ++i)
    if (!is_half_dimensional(M.images[i]) || M.images[i].dim() != B.m) {
      cert.images_half_dimensional = false;
      if (cert.witness_p < 0) cert.witness_p = int(i);
      break;
    }

  cert.distant_implies_complementary = true;
  cert.nondistant_noncomplementary = true;
  for (size_t i = 0; i < np; ++i)
    for (size_t j = i; j < np; ++j) {
      bool d = distant(R, M.points[i], M.points[j]);
      bool c = is_complementary(M.images[i], M.images[j]);
      if (d && !c && cert.distant_implies_complementary) {
        cert.distant_implies_complementary = false;
        cert.witness_p = int(i);
        cert.witness_q = int(j);
      }
      if (!d && c && cert.nondistant_noncomplementary) {
        cert.nondistant_noncomplementary = false;
        if (cert.witness_p < 0) {
          cert.witness_p = int(i);
          cert.witness_q = int(j);
        }
      }
    }

  std::set<Subspace> distinct(M.images.begin(), M.images.end());
  cert.phi_injective = distinct.size() == np;
  cert.injectivity_matches_faithfulness = cert.phi_injective == M.ann.faithful;

  cert.invertible_rho_implies_unit = true;
  for (long a = 0; a < R.size(); ++a)
    if (invertible(B.rho[a]) && !R.is_unit(int(a))) {
      cert.invertible_rho_implies_unit = false;
      cert.witness_a = int(a);
      break;
    }
  cert.noncomplementarity_biconditional =
      cert.nondistant_noncomplementary == cert.invertible_rho_implies_unit;

  cert.ok = cert.well_defined && cert.images_half_dimensional &&
            cert.distant_implies_complementary && cert.injectivity_matches_faithfulness &&
            cert.noncomplementarity_biconditional;
  return cert;
}

FactorComparison factor_representation(const Bimodule& B, long ceiling) {
  FactorComparison out;
  AnnihilatorReport ann = annihilator_and_faithful(B);
  out.quotient = quotient_ring(B.R, ann.annihilator.members);
  const Ring& Q = out.quotient.quotient;

  std::vector<MatK> table;
  table.reserve(size_t(Q.size()));
  for (long c = 0; c < Q.size(); ++c) table.push_back(B.rho[out.quotient.reps[size_t(c)]]);
  for (long x = 0; x < B.R.size(); ++x)
    if (B.rho[x] != table[size_t(out.quotient.projection(int(x)))])
      throw std::logic_error("factor_representation: coset table is not well defined");
  out.induced = make_bimodule(Q, B.K, std::move(table));
  out.induced_faithful = annihilator_and_faithful(out.induced).faithful;

  std::vector<Point> base_line = projective_line(B.R, ceiling);
  std::vector<Point> factor_line = projective_line(Q, ceiling);
  std::set<Subspace> base_images, factor_images;
  for (const Point& p : base_line) base_images.insert(phi_point(B, p));
  for (const Point& p : factor_line) factor_images.insert(phi_point(out.induced, p));

  out.images_contained = std::includes(factor_images.begin(), factor_images.end(),
                                       base_images.begin(), base_images.end());
  out.images_equal = base_images == factor_images;

  std::vector<char> hit(factor_line.size(), 0);
  for (const Point& p : base_line) {
    Point img = point_canonicalize(
        Q, Pair{out.quotient.projection(p.rep.a), out.quotient.projection(p.rep.b)});
    auto it = std::lower_bound(factor_line.begin(), factor_line.end(), img);
    if (it == factor_line.end() || !(*it == img))
      throw std::logic_error("factor_representation: projected point missing from the line");
    hit[size_t(it - factor_line.begin())] = 1;
  }
  out.projection_line_surjective =
      std::all_of(hit.begin(), hit.end(), [](char h) { return h != 0; });
  out.equality_matches_surjectivity = out.images_equal == out.projection_line_surjective;

  out.ok = out.induced_faithful && out.images_contained && out.equality_matches_surjectivity;
  return out;
}

CollineationCertificate collineation_check(const Bimodule& B, const Mat2& gamma, long ceiling) {
  Mat2Inverse inv = mat2_invert(B.R, gamma);
  if (!inv.invertible)
    throw std::invalid_argument("collineation_check: the acting matrix is singular");
  CollineationCertificate cert;
  cert.block_matrix =
      mat_block2(B.rho[gamma.a], B.rho[gamma.b], B.rho[gamma.c], B.rho[gamma.d]);
  cert.block_invertible = invertible(cert.block_matrix);
  cert.equivariant = true;
  std::vector<Point> line = projective_line(B.R, ceiling);
  for (size_t i = 0; i < line.size(); ++i) {
    Point moved = apply_gl2(B.R, line[i], gamma);
    if (phi_point(B, moved) != apply_matrix(phi_point(B, line[i]), cert.block_matrix)) {
      cert.equivariant = false;
      cert.witness_point = int(i);
      break;
    }
  }
  cert.ok = cert.block_invertible && cert.equivariant;
  return cert;
}

SubBimoduleWitness make_sub_witness(const Bimodule& B, const Subspace& candidate) {
  if (!candidate.valid() || candidate.ambient() != B.m || candidate.field()->q() != B.K->q())
    throw std::invalid_argument("make_sub_witness: candidate does not live in the module space");
  SubBimoduleWitness W;
  W.space = candidate;
  W.invariant = true;
  const MatK& basis = candidate.basis();
  for (long a = 0; a < B.R.size() && W.invariant; ++a)
    for (int i = 0; i < basis.rows; ++i)
      if (!candidate.contains(row_mat(basis.row(i), B.rho[a]))) {
        W.invariant = false;
        W.violating_a = int(a);
        break;
      }
  return W;
}

std::vector<Subspace> find_sub_bimodules(const Bimodule& B, unsigned long long ceiling) {
  unsigned long long total = 0;
  for (int r = 0; r <= B.m; ++r) total += subspace_count(B.m, r, B.K->q());
  if (total > ceiling)
    throw std::invalid_argument("find_sub_bimodules: " + std::to_string(total) +
                                " subspaces exceed the ceiling " + std::to_string(ceiling));
  std::vector<Subspace> found;
  for (int r = 0; r <= B.m; ++r) {
    SubspaceStream stream(B.K, B.m, r, ceiling);
    while (auto w = stream.next())
      if (make_sub_witness(B, *w).invariant) found.push_back(*w);
  }
  std::sort(found.begin(), found.end());
  return found;
}

Bimodule sub_bimodule(const Bimodule& B, const SubBimoduleWitness& W) {
  require_invariant(W, "sub_bimodule");
  const MatK& basis = W.space.basis();
  std::vector<int> pivots = pivot_cols(basis);
  std::vector<MatK> table;
  table.reserve(B.rho.size());
  for (const MatK& M : B.rho) {
    std::vector<Row> rows;
    rows.reserve(size_t(basis.rows));
    for (int i = 0; i < basis.rows; ++i)
      rows.push_back(coords_in(W.space, row_mat(basis.row(i), M), pivots));
    table.push_back(MatK::from_rows(B.K, rows, basis.rows));
  }
  return make_bimodule(B.R, B.K, std::move(table));
}

Bimodule quotient_bimodule(const Bimodule& B, const SubBimoduleWitness& W) {
  require_invariant(W, "quotient_bimodule");
  QuotientMap qm = quotient_space(W.space);
  std::vector<MatK> table;
  table.reserve(B.rho.size());
  for (const MatK& M : B.rho) {
    std::vector<Row> rows;
    rows.reserve(size_t(qm.qdim));
    for (int i = 0; i < qm.qdim; ++i)
      rows.push_back(qm.apply(row_mat(qm.lift(unit_row(qm.qdim, i)), M)));
    table.push_back(MatK::from_rows(B.K, rows, qm.qdim));
  }
  return make_bimodule(B.R, B.K, std::move(table));
}

SubModelCertificate sub_bimodule_model(const Bimodule& B, const SubBimoduleWitness& W,
                                       long ceiling) {
  require_invariant(W, "sub_bimodule_model");
  SubModelCertificate cert;
  cert.restricted = sub_bimodule(B, W);
  cert.doubled = doubled_space(W.space);
  cert.restricted_ann = annihilator_and_faithful(cert.restricted);
  MatK embed = doubling_matrix(W.space);
  cert.equality = true;
  std::vector<Point> line = projective_line(B.R, ceiling);
  for (size_t i = 0; i < line.size(); ++i) {
    Subspace restricted_image = apply_matrix(phi_point(cert.restricted, line[i]), embed);
    Subspace cut = sum_and_intersection(phi_point(B, line[i]), cert.doubled).intersection;
    if (restricted_image != cut) {
      cert.equality = false;
      cert.witness_point = int(i);
      break;
    }
  }
  cert.ok = cert.equality;
  return cert;
}

DirectSumCertificate direct_sum_model(const Bimodule& B, const SubBimoduleWitness& W1,
                                      const SubBimoduleWitness& W2, long ceiling) {
  require_invariant(W1, "direct_sum_model");
  require_invariant(W2, "direct_sum_model");
  DirectSumCertificate cert;
  cert.valid_decomposition = is_complementary(W1.space, W2.space);
  if (!cert.valid_decomposition) return cert;
  Bimodule B1 = sub_bimodule(B, W1);
  Bimodule B2 = sub_bimodule(B, W2);
  MatK embed1 = doubling_matrix(W1.space);
  MatK embed2 = doubling_matrix(W2.space);
  cert.equality = true;
  std::vector<Point> line = projective_line(B.R, ceiling);
  for (size_t i = 0; i < line.size(); ++i) {
    Subspace part1 = apply_matrix(phi_point(B1, line[i]), embed1);
    Subspace part2 = apply_matrix(phi_point(B2, line[i]), embed2);
    SumIntersection s = sum_and_intersection(part1, part2);
    if (s.intersection.dim() != 0 || s.sum != phi_point(B, line[i])) {
      cert.equality = false;
      cert.witness_point = int(i);
      break;
    }
  }
  cert.ok = cert.valid_decomposition && cert.equality;
  return cert;
}

QuotientModelCertificate quotient_model(const Bimodule& B, const SubBimoduleWitness& W,
                                        long ceiling) {
  require_invariant(W, "quotient_model");
  QuotientModelCertificate cert;
  cert.quotient_action = quotient_bimodule(B, W);
  QuotientMap qm = quotient_space(W.space);

  for (long a = 0; a < B.R.size(); ++a) {
    bool inside = true;
    for (int i = 0; i < B.m && inside; ++i)
      inside = W.space.contains(B.rho[a].row(i));
    if (inside) cert.kernel.push_back(int(a));
  }
  cert.kernel_matches =
      cert.kernel == annihilator_and_faithful(cert.quotient_action).annihilator.members;

  Subspace doubled = doubled_space(W.space);
  cert.equality = true;
  std::vector<Point> line = projective_line(B.R, ceiling);
  for (size_t i = 0; i < line.size(); ++i) {
    Subspace small_image = phi_point(cert.quotient_action, line[i]);
    const MatK& small = small_image.basis();
    std::vector<Row> lifted;
    for (int r = 0; r < small.rows; ++r) {
      Row sr = small.row(r);
      Row u(sr.begin(), sr.begin() + qm.qdim);
      Row v(sr.begin() + qm.qdim, sr.end());
      Row lu = qm.lift(u), lv = qm.lift(v);
      lu.insert(lu.end(), lv.begin(), lv.end());
      lifted.push_back(std::move(lu));
    }
    const MatK& db = doubled.basis();
    for (int r = 0; r < db.rows; ++r) lifted.push_back(db.row(r));
    Subspace raised = Subspace::span(B.K, 2 * B.m, lifted);
    Subspace joined = sum_and_intersection(phi_point(B, line[i]), doubled).sum;
    if (raised != joined) {
      cert.equality = false;
      cert.witness_point = int(i);
      break;
    }
  }
  cert.ok = cert.kernel_matches && cert.equality;
  return cert;
}

}  // namespace ringline
