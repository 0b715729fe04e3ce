// Exact linear algebra over GF(q): dense matrices, canonical subspaces
// (reduced row echelon bases, so equality is bytewise), lattice operations
// with the dimension formula asserted on every call, streaming subspace
// enumeration, and coordinate maps onto quotient spaces.
#pragma once

#include <optional>
#include <vector>

#include "ringline/gf.hpp"

namespace ringline {

using Row = std::vector<uint8_t>;

struct MatK {
  GfPtr F;
  int rows = 0, cols = 0;
  std::vector<uint8_t> e;  // row-major

  static MatK zero(GfPtr F, int rows, int cols);
  static MatK identity(GfPtr F, int n);
  static MatK from_rows(GfPtr F, const std::vector<Row>& rs, int cols = -1);

  uint8_t at(int r, int c) const { return e[size_t(r) * cols + c]; }
  uint8_t& at(int r, int c) { return e[size_t(r) * cols + c]; }
  Row row(int r) const { return Row(e.begin() + size_t(r) * cols, e.begin() + size_t(r + 1) * cols); }

  bool operator==(const MatK& o) const { return rows == o.rows && cols == o.cols && e == o.e; }
  bool operator!=(const MatK& o) const { return !(*this == o); }
};

MatK mat_add(const MatK& a, const MatK& b);
MatK mat_mul(const MatK& a, const MatK& b);
Row row_mat(const Row& v, const MatK& m);  // row vector times matrix
MatK mat_hcat(const MatK& a, const MatK& b);
MatK mat_vcat(const MatK& a, const MatK& b);
// [[a, b], [c, d]] as one matrix
MatK mat_block2(const MatK& a, const MatK& b, const MatK& c, const MatK& d);
// canonical reduced row echelon form with zero rows dropped
MatK rref(const MatK& m);
int rank(const MatK& m);
bool invertible(const MatK& m);
std::optional<MatK> mat_inverse(const MatK& m);

class Subspace {
public:
  Subspace() = default;
  static Subspace span(GfPtr F, int ambient, const std::vector<Row>& rows);
  static Subspace span(const MatK& rows);
  static Subspace zero_space(GfPtr F, int ambient);
  static Subspace full_space(GfPtr F, int ambient);

  bool valid() const { return basis_.F != nullptr; }
  int dim() const { return basis_.rows; }
  int ambient() const { return basis_.cols; }
  GfPtr field() const { return basis_.F; }
  const MatK& basis() const { return basis_; }

  bool contains(const Row& v) const;
  bool contains(const Subspace& w) const;
  // all q^dim member vectors (small spaces only)
  std::vector<Row> elements() const;
  // one normalized representative (first nonzero entry 1) per 1-dimensional
  // subspace, sorted; size (q^dim - 1)/(q - 1)
  std::vector<Row> projective_points() const;

  bool operator==(const Subspace& o) const { return basis_ == o.basis_; }
  bool operator!=(const Subspace& o) const { return !(*this == o); }
  bool operator<(const Subspace& o) const;  // (ambient, dim, basis bytes)

private:
  MatK basis_;
};

struct SumIntersection {
  Subspace sum, intersection;
};
// Both lattice operations at once; dim(sum) + dim(intersection) must match
// dim(a) + dim(b) or the call aborts with a logic error.
SumIntersection sum_and_intersection(const Subspace& a, const Subspace& b);
bool is_complementary(const Subspace& a, const Subspace& b);
// membership in the distinguished class: half the (even) ambient dimension
bool is_half_dimensional(const Subspace& w);
// image under right multiplication: span of basis * m
Subspace apply_matrix(const Subspace& w, const MatK& m);

unsigned long long subspace_count(int d, int r, long q);  // gaussian binomial

// Streams every r-dimensional subspace of K^d exactly once, ordered by pivot
// set and then free-entry odometer; restartable by rank position.
class SubspaceStream {
public:
  SubspaceStream(GfPtr F, int d, int r, unsigned long long ceiling = 1000000);
  std::optional<Subspace> next();
  unsigned long long total() const { return total_; }
  unsigned long long position() const { return position_; }
  void seek(unsigned long long position);

private:
  bool advance_free();
  bool advance_pivots();
  void reset_free();
  MatK current() const;

  GfPtr F_;
  int d_, r_;
  unsigned long long total_ = 0, position_ = 0;
  std::vector<int> pivots_;
  std::vector<std::pair<int, int>> free_cells_;  // (row, col) per free entry
  std::vector<uint8_t> free_vals_;
  bool done_ = false;
};

std::vector<Subspace> all_subspaces(GfPtr F, int d, int r,
                                    unsigned long long ceiling = 1000000);

// Coordinates on K^d / W: apply() has kernel exactly W, lift() is a right
// inverse supported on the non-pivot columns of W's canonical basis.
struct QuotientMap {
  GfPtr F;
  int d = 0, qdim = 0;
  Subspace kernel;
  MatK proj;     // d x qdim
  MatK section;  // qdim x d

  Row apply(const Row& v) const { return row_mat(v, proj); }
  Row lift(const Row& c) const { return row_mat(c, section); }
};
QuotientMap quotient_space(const Subspace& w);

}  // namespace ringline
