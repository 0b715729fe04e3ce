#include "ringline/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace ringline {

MatK MatK::zero(GfPtr F, int rows, int cols) {
  MatK m;
  m.F = std::move(F);
  m.rows = rows;
  m.cols = cols;
  m.e.assign(size_t(rows) * cols, 0);
  return m;
}

MatK MatK::identity(GfPtr F, int n) {
  MatK m = zero(std::move(F), n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

MatK MatK::from_rows(GfPtr F, const std::vector<Row>& rs, int cols) {
  if (cols < 0) {
    if (rs.empty()) throw std::invalid_argument("from_rows needs explicit cols for no rows");
    cols = int(rs[0].size());
  }
  MatK m = zero(std::move(F), int(rs.size()), cols);
  for (size_t r = 0; r < rs.size(); ++r) {
    if (int(rs[r].size()) != cols) throw std::invalid_argument("ragged rows");
    std::copy(rs[r].begin(), rs[r].end(), m.e.begin() + r * cols);
  }
  return m;
}

MatK mat_add(const MatK& a, const MatK& b) {
  if (a.rows != b.rows || a.cols != b.cols) throw std::invalid_argument("shape mismatch in add");
  MatK out = MatK::zero(a.F, a.rows, a.cols);
  for (size_t i = 0; i < a.e.size(); ++i) out.e[i] = uint8_t(a.F->add(a.e[i], b.e[i]));
  return out;
}

MatK mat_mul(const MatK& a, const MatK& b) {
  if (a.cols != b.rows) throw std::invalid_argument("shape mismatch in mul");
  MatK out = MatK::zero(a.F, a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int t = 0; t < a.cols; ++t) {
      int x = a.at(i, t);
      if (x == 0) continue;
      for (int j = 0; j < b.cols; ++j)
        out.at(i, j) = uint8_t(a.F->add(out.at(i, j), a.F->mul(x, b.at(t, j))));
    }
  return out;
}

Row row_mat(const Row& v, const MatK& m) {
  if (int(v.size()) != m.rows) throw std::invalid_argument("shape mismatch in row*mat");
  Row out(m.cols, 0);
  for (int t = 0; t < m.rows; ++t) {
    int x = v[t];
    if (x == 0) continue;
    for (int j = 0; j < m.cols; ++j) out[j] = uint8_t(m.F->add(out[j], m.F->mul(x, m.at(t, j))));
  }
  return out;
}

MatK mat_hcat(const MatK& a, const MatK& b) {
  if (a.rows != b.rows) throw std::invalid_argument("shape mismatch in hcat");
  MatK out = MatK::zero(a.F, a.rows, a.cols + b.cols);
  for (int i = 0; i < a.rows; ++i) {
    for (int j = 0; j < a.cols; ++j) out.at(i, j) = a.at(i, j);
    for (int j = 0; j < b.cols; ++j) out.at(i, a.cols + j) = b.at(i, j);
  }
  return out;
}

MatK mat_vcat(const MatK& a, const MatK& b) {
  if (a.cols != b.cols) throw std::invalid_argument("shape mismatch in vcat");
  MatK out = MatK::zero(a.F, a.rows + b.rows, a.cols);
  std::copy(a.e.begin(), a.e.end(), out.e.begin());
  std::copy(b.e.begin(), b.e.end(), out.e.begin() + a.e.size());
  return out;
}

MatK mat_block2(const MatK& a, const MatK& b, const MatK& c, const MatK& d) {
  return mat_vcat(mat_hcat(a, b), mat_hcat(c, d));
}

MatK rref(const MatK& m) {
  MatK w = m;
  const Gf& F = *w.F;
  int r = 0;
  for (int col = 0; col < w.cols && r < w.rows; ++col) {
    int pivot = -1;
    for (int i = r; i < w.rows; ++i)
      if (w.at(i, col) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != r)
      for (int j = 0; j < w.cols; ++j) std::swap(w.at(pivot, j), w.at(r, j));
    int inv = F.inv(w.at(r, col));
    for (int j = 0; j < w.cols; ++j) w.at(r, j) = uint8_t(F.mul(inv, w.at(r, j)));
    for (int i = 0; i < w.rows; ++i) {
      if (i == r) continue;
      int f = w.at(i, col);
      if (f == 0) continue;
      for (int j = 0; j < w.cols; ++j)
        w.at(i, j) = uint8_t(F.sub(w.at(i, j), F.mul(f, w.at(r, j))));
    }
    ++r;
  }
  w.e.resize(size_t(r) * w.cols);
  w.rows = r;
  return w;
}

int rank(const MatK& m) { return rref(m).rows; }

bool invertible(const MatK& m) { return m.rows == m.cols && rank(m) == m.rows; }

std::optional<MatK> mat_inverse(const MatK& m) {
  if (m.rows != m.cols) return std::nullopt;
  MatK aug = mat_hcat(m, MatK::identity(m.F, m.rows));
  MatK r = rref(aug);
  if (r.rows != m.rows) return std::nullopt;
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.rows; ++j)
      if (r.at(i, j) != (i == j ? 1 : 0)) return std::nullopt;
  MatK inv = MatK::zero(m.F, m.rows, m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.rows; ++j) inv.at(i, j) = r.at(i, m.rows + j);
  return inv;
}

Subspace Subspace::span(GfPtr F, int ambient, const std::vector<Row>& rows) {
  return span(MatK::from_rows(std::move(F), rows, ambient));
}

Subspace Subspace::span(const MatK& rows) {
  Subspace s;
  s.basis_ = rref(rows);
  return s;
}

Subspace Subspace::zero_space(GfPtr F, int ambient) {
  Subspace s;
  s.basis_ = MatK::zero(std::move(F), 0, ambient);
  return s;
}

Subspace Subspace::full_space(GfPtr F, int ambient) {
  Subspace s;
  s.basis_ = MatK::identity(std::move(F), ambient);
  return s;
}

bool Subspace::contains(const Row& v) const {
  if (int(v.size()) != ambient()) throw std::invalid_argument("ambient mismatch");
  const Gf& F = *basis_.F;
  Row w = v;
  for (int i = 0; i < basis_.rows; ++i) {
    int pivot = -1;
    for (int j = 0; j < basis_.cols; ++j)
      if (basis_.at(i, j) != 0) {
        pivot = j;
        break;
      }
    int f = w[pivot];
    if (f == 0) continue;
    for (int j = 0; j < basis_.cols; ++j) w[j] = uint8_t(F.sub(w[j], F.mul(f, basis_.at(i, j))));
  }
  return std::all_of(w.begin(), w.end(), [](uint8_t x) { return x == 0; });
}

bool Subspace::contains(const Subspace& w) const {
  for (int i = 0; i < w.basis_.rows; ++i)
    if (!contains(w.basis_.row(i))) return false;
  return true;
}

std::vector<Row> Subspace::elements() const {
  const Gf& F = *basis_.F;
  std::vector<Row> out;
  long q = F.q(), total = 1;
  for (int i = 0; i < dim(); ++i) total *= q;
  for (long code = 0; code < total; ++code) {
    Row coeff(dim());
    long c = code;
    for (int i = 0; i < dim(); ++i, c /= q) coeff[i] = uint8_t(c % q);
    out.push_back(row_mat(coeff, basis_));
  }
  return out;
}

std::vector<Row> Subspace::projective_points() const {
  const Gf& F = *basis_.F;
  std::vector<Row> out;
  for (Row v : elements()) {
    int lead = -1;
    for (size_t j = 0; j < v.size(); ++j)
      if (v[j] != 0) {
        lead = int(j);
        break;
      }
    if (lead < 0 || v[lead] != 1) continue;  // normalized representatives only
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool Subspace::operator<(const Subspace& o) const {
  if (basis_.cols != o.basis_.cols) return basis_.cols < o.basis_.cols;
  if (basis_.rows != o.basis_.rows) return basis_.rows < o.basis_.rows;
  return basis_.e < o.basis_.e;
}

SumIntersection sum_and_intersection(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw std::invalid_argument("ambient mismatch");
  GfPtr F = a.field();
  int d = a.ambient(), ra = a.dim(), rb = b.dim();
  MatK stacked = mat_vcat(a.basis(), b.basis());
  SumIntersection out;
  out.sum = Subspace::span(stacked);
  // rows of the reduced [stacked | I] whose left block vanished encode the
  // left null space; their first ra coordinates combine a's basis into the
  // intersection
  MatK aug = mat_hcat(stacked, MatK::identity(F, ra + rb));
  MatK red = rref(aug);
  std::vector<Row> meet;
  for (int i = 0; i < red.rows; ++i) {
    bool left_zero = true;
    for (int j = 0; j < d; ++j)
      if (red.at(i, j) != 0) {
        left_zero = false;
        break;
      }
    if (!left_zero) continue;
    Row x(ra);
    for (int j = 0; j < ra; ++j) x[j] = red.at(i, d + j);
    meet.push_back(row_mat(x, a.basis()));
  }
  out.intersection = Subspace::span(F, d, meet);
  if (out.sum.dim() + out.intersection.dim() != ra + rb)
    throw std::logic_error("dimension formula violated in sum_and_intersection");
  return out;
}

bool is_complementary(const Subspace& a, const Subspace& b) {
  SumIntersection si = sum_and_intersection(a, b);
  return si.intersection.dim() == 0 && si.sum.dim() == a.ambient();
}

bool is_half_dimensional(const Subspace& w) {
  return w.ambient() % 2 == 0 && 2 * w.dim() == w.ambient();
}

Subspace apply_matrix(const Subspace& w, const MatK& m) {
  return Subspace::span(mat_mul(w.basis(), m));
}

unsigned long long subspace_count(int d, int r, long q) {
  if (r < 0 || r > d) return 0;
  std::vector<std::vector<unsigned long long>> g(d + 1,
                                                 std::vector<unsigned long long>(d + 1, 0));
  for (int i = 0; i <= d; ++i) {
    g[i][0] = 1;
    for (int j = 1; j <= i; ++j) {
      unsigned long long qp = 1;
      for (int t = 0; t < j; ++t) qp *= (unsigned long long)q;
      g[i][j] = (j == i) ? 1 : g[i - 1][j - 1] + qp * g[i - 1][j];
    }
  }
  return g[d][r];
}

SubspaceStream::SubspaceStream(GfPtr F, int d, int r, unsigned long long ceiling)
    : F_(std::move(F)), d_(d), r_(r) {
  if (r < 0 || r > d) {
    done_ = true;
    return;
  }
  total_ = subspace_count(d, r, F_->q());
  if (total_ > ceiling)
    throw std::invalid_argument("subspace enumeration of " + std::to_string(total_) +
                                " exceeds ceiling " + std::to_string(ceiling));
  pivots_.resize(r);
  for (int i = 0; i < r; ++i) pivots_[i] = i;
  reset_free();
}

void SubspaceStream::reset_free() {
  free_cells_.clear();
  std::vector<char> is_pivot(d_, 0);
  for (int p : pivots_) is_pivot[p] = 1;
  for (int i = 0; i < r_; ++i)
    for (int j = pivots_[i] + 1; j < d_; ++j)
      if (!is_pivot[j]) free_cells_.emplace_back(i, j);
  free_vals_.assign(free_cells_.size(), 0);
}

MatK SubspaceStream::current() const {
  MatK m = MatK::zero(F_, r_, d_);
  for (int i = 0; i < r_; ++i) m.at(i, pivots_[i]) = 1;
  for (size_t t = 0; t < free_cells_.size(); ++t)
    m.at(free_cells_[t].first, free_cells_[t].second) = free_vals_[t];
  return m;
}

bool SubspaceStream::advance_free() {
  for (size_t t = 0; t < free_vals_.size(); ++t) {
    if (free_vals_[t] + 1 < F_->q()) {
      ++free_vals_[t];
      std::fill(free_vals_.begin(), free_vals_.begin() + t, 0);
      return true;
    }
  }
  return false;
}

bool SubspaceStream::advance_pivots() {
  // next combination in lexicographic order
  for (int i = r_ - 1; i >= 0; --i) {
    if (pivots_[i] < d_ - (r_ - i)) {
      ++pivots_[i];
      for (int j = i + 1; j < r_; ++j) pivots_[j] = pivots_[j - 1] + 1;
      reset_free();
      return true;
    }
  }
  return false;
}

std::optional<Subspace> SubspaceStream::next() {
  if (done_) return std::nullopt;
  Subspace out = Subspace::span(current());
  ++position_;
  if (!advance_free() && !advance_pivots()) done_ = true;
  return out;
}

void SubspaceStream::seek(unsigned long long position) {
  if (r_ < 0 || r_ > d_) return;
  pivots_.resize(r_);
  for (int i = 0; i < r_; ++i) pivots_[i] = i;
  reset_free();
  position_ = 0;
  done_ = false;
  while (position_ < position && !done_) {
    ++position_;
    if (!advance_free() && !advance_pivots()) done_ = true;
  }
}

std::vector<Subspace> all_subspaces(GfPtr F, int d, int r, unsigned long long ceiling) {
  SubspaceStream s(std::move(F), d, r, ceiling);
  std::vector<Subspace> out;
  while (auto w = s.next()) out.push_back(*w);
  return out;
}

QuotientMap quotient_space(const Subspace& w) {
  QuotientMap qm;
  qm.F = w.field();
  qm.d = w.ambient();
  qm.kernel = w;
  const MatK& B = w.basis();
  std::vector<char> is_pivot(qm.d, 0);
  std::vector<int> pivot_col(B.rows);
  for (int i = 0; i < B.rows; ++i) {
    for (int j = 0; j < qm.d; ++j)
      if (B.at(i, j) != 0) {
        pivot_col[i] = j;
        is_pivot[j] = 1;
        break;
      }
  }
  std::vector<int> rest;  // non-pivot columns carry the quotient coordinates
  for (int j = 0; j < qm.d; ++j)
    if (!is_pivot[j]) rest.push_back(j);
  qm.qdim = int(rest.size());
  qm.proj = MatK::zero(qm.F, qm.d, qm.qdim);
  const Gf& F = *qm.F;
  for (int rcol = 0; rcol < qm.d; ++rcol) {
    // image of the unit vector e_rcol: reduce by the basis, read off rest cols
    Row v(qm.d, 0);
    v[rcol] = 1;
    for (int i = 0; i < B.rows; ++i) {
      int f = v[pivot_col[i]];
      if (f == 0) continue;
      for (int j = 0; j < qm.d; ++j) v[j] = uint8_t(F.sub(v[j], F.mul(f, B.at(i, j))));
    }
    for (int t = 0; t < qm.qdim; ++t) qm.proj.at(rcol, t) = v[rest[t]];
  }
  qm.section = MatK::zero(qm.F, qm.qdim, qm.d);
  for (int t = 0; t < qm.qdim; ++t) qm.section.at(t, rest[t]) = 1;
  // sanity: section is a right inverse and the kernel rows vanish
  if (mat_mul(qm.section, qm.proj) != MatK::identity(qm.F, qm.qdim))
    throw std::logic_error("quotient section is not a right inverse");
  for (int i = 0; i < B.rows; ++i)
    for (uint8_t c : qm.apply(B.row(i)))
      if (c != 0) throw std::logic_error("quotient map does not kill its kernel");
  return qm;
}

}  // namespace ringline
