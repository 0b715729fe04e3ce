#include "ringline/ring.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ringline {

namespace {

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

// Structured carrier: evaluates ring ops on "natural" codes, where code 0 is
// zero but the multiplicative identity may sit anywhere (reported through
// natural_one); the wrapper swaps it to code 1.
class Backend {
public:
  virtual ~Backend() = default;
  virtual long size() const = 0;
  virtual int add(int a, int b) const = 0;
  virtual int mul(int a, int b) const = 0;
  virtual int neg(int a) const = 0;
  virtual int natural_one() const = 0;
  virtual std::string element_text(int a) const { return std::to_string(a); }
  // Distinguished-subfield coordinates on natural codes; empty row = none.
  virtual GfPtr kfield() const { return nullptr; }
  virtual int kdim() const { return 0; }
  virtual std::vector<uint8_t> kcoords(int) const { return {}; }
};

class ModIntBackend : public Backend {
public:
  explicit ModIntBackend(long n) : n_(n) {
    if (n < 1) throw std::invalid_argument("Z/n needs n >= 1");
    if (Gf::is_prime(n)) field_ = make_gf(int(n), 1);
  }
  long size() const override { return n_; }
  int add(int a, int b) const override { return int((a + long(b)) % n_); }
  int mul(int a, int b) const override { return int((a * long(b)) % n_); }
  int neg(int a) const override { return int((n_ - a) % n_); }
  int natural_one() const override { return n_ > 1 ? 1 : 0; }
  GfPtr kfield() const override { return field_; }
  int kdim() const override { return field_ ? 1 : 0; }
  std::vector<uint8_t> kcoords(int a) const override {
    if (!field_) return {};
    return {uint8_t(a)};
  }

private:
  long n_;
  GfPtr field_;
};

class GfBackend : public Backend {
public:
  explicit GfBackend(GfPtr f) : f_(std::move(f)) {}
  long size() const override { return f_->q(); }
  int add(int a, int b) const override { return f_->add(a, b); }
  int mul(int a, int b) const override { return f_->mul(a, b); }
  int neg(int a) const override { return f_->neg(a); }
  int natural_one() const override { return 1; }
  GfPtr kfield() const override { return f_; }
  int kdim() const override { return 1; }
  std::vector<uint8_t> kcoords(int a) const override { return {uint8_t(a)}; }

private:
  GfPtr f_;
};

// a + b*eps with eps^2 = 0 and eps*k = frob^e(k)*eps; code a + b*q.
class DualBackend : public Backend {
public:
  DualBackend(GfPtr f, int e) : f_(std::move(f)), e_(e) {}
  long size() const override { return long(f_->q()) * f_->q(); }
  int add(int a, int b) const override {
    int q = f_->q();
    return f_->add(a % q, b % q) + f_->add(a / q, b / q) * q;
  }
  int mul(int x, int y) const override {
    int q = f_->q();
    int u1 = x % q, v1 = x / q, u2 = y % q, v2 = y / q;
    int u = f_->mul(u1, u2);
    int v = f_->add(f_->mul(u1, v2), f_->mul(v1, f_->frobenius(u2, e_)));
    return u + v * q;
  }
  int neg(int a) const override {
    int q = f_->q();
    return f_->neg(a % q) + f_->neg(a / q) * q;
  }
  int natural_one() const override { return 1; }
  std::string element_text(int a) const override {
    int q = f_->q();
    return "(" + std::to_string(a % q) + "," + std::to_string(a / q) + ")";
  }
  GfPtr kfield() const override { return f_; }
  int kdim() const override { return 2; }
  std::vector<uint8_t> kcoords(int a) const override {
    int q = f_->q();
    return {uint8_t(a % q), uint8_t(a / q)};
  }

private:
  GfPtr f_;
  int e_;
};

// a + b*eps + c*delta with eps, delta central and all products of eps, delta
// zero; code a + b*q + c*q^2.
class EpsDeltaBackend : public Backend {
public:
  explicit EpsDeltaBackend(GfPtr f) : f_(std::move(f)) {}
  long size() const override { return long(f_->q()) * f_->q() * f_->q(); }
  int add(int x, int y) const override {
    int q = f_->q();
    int a = f_->add(x % q, y % q);
    int b = f_->add((x / q) % q, (y / q) % q);
    int c = f_->add(x / (q * q), y / (q * q));
    return a + b * q + c * q * q;
  }
  int mul(int x, int y) const override {
    int q = f_->q();
    int a1 = x % q, b1 = (x / q) % q, c1 = x / (q * q);
    int a2 = y % q, b2 = (y / q) % q, c2 = y / (q * q);
    int a = f_->mul(a1, a2);
    int b = f_->add(f_->mul(a1, b2), f_->mul(b1, a2));
    int c = f_->add(f_->mul(a1, c2), f_->mul(c1, a2));
    return a + b * q + c * q * q;
  }
  int neg(int x) const override {
    int q = f_->q();
    return f_->neg(x % q) + f_->neg((x / q) % q) * q + f_->neg(x / (q * q)) * q * q;
  }
  int natural_one() const override { return 1; }
  std::string element_text(int x) const override {
    int q = f_->q();
    return "(" + std::to_string(x % q) + "," + std::to_string((x / q) % q) + "," +
           std::to_string(x / (q * q)) + ")";
  }
  GfPtr kfield() const override { return f_; }
  int kdim() const override { return 3; }
  std::vector<uint8_t> kcoords(int x) const override {
    int q = f_->q();
    return {uint8_t(x % q), uint8_t((x / q) % q), uint8_t(x / (q * q))};
  }

private:
  GfPtr f_;
};

// Upper triangular 2x2 matrices [[a,b],[0,c]] over a field; code a + b*q + c*q^2.
class Ut2Backend : public Backend {
public:
  explicit Ut2Backend(GfPtr f) : f_(std::move(f)) {}
  long size() const override { return long(f_->q()) * f_->q() * f_->q(); }
  int add(int x, int y) const override {
    int q = f_->q();
    int a = f_->add(x % q, y % q);
    int b = f_->add((x / q) % q, (y / q) % q);
    int c = f_->add(x / (q * q), y / (q * q));
    return a + b * q + c * q * q;
  }
  int mul(int x, int y) const override {
    int q = f_->q();
    int a1 = x % q, b1 = (x / q) % q, c1 = x / (q * q);
    int a2 = y % q, b2 = (y / q) % q, c2 = y / (q * q);
    int a = f_->mul(a1, a2);
    int b = f_->add(f_->mul(a1, b2), f_->mul(b1, c2));
    int c = f_->mul(c1, c2);
    return a + b * q + c * q * q;
  }
  int neg(int x) const override {
    int q = f_->q();
    return f_->neg(x % q) + f_->neg((x / q) % q) * q + f_->neg(x / (q * q)) * q * q;
  }
  int natural_one() const override {
    int q = f_->q();
    return 1 + q * q;
  }
  std::string element_text(int x) const override {
    int q = f_->q();
    return "[" + std::to_string(x % q) + "," + std::to_string((x / q) % q) + ";0," +
           std::to_string(x / (q * q)) + "]";
  }
  GfPtr kfield() const override { return f_; }
  int kdim() const override { return 3; }
  std::vector<uint8_t> kcoords(int x) const override {
    int q = f_->q();
    return {uint8_t(x % q), uint8_t((x / q) % q), uint8_t(x / (q * q))};
  }

private:
  GfPtr f_;
};

// dim x dim matrices over a materialized base ring; code = row-major digits
// in base |B|.
class MatrixBackend : public Backend {
public:
  MatrixBackend(Ring base, int dim) : base_(std::move(base)), dim_(dim) {
    cells_ = dim_ * dim_;
    long s = 1;
    for (int i = 0; i < cells_; ++i) s *= base_.size();
    size_ = s;
  }
  long size() const override { return size_; }
  int add(int x, int y) const override {
    long b = base_.size(), out = 0, w = 1;
    for (int i = 0; i < cells_; ++i, x /= b, y /= b, w *= b)
      out += long(base_.add(int(x % b), int(y % b))) * w;
    return int(out);
  }
  int mul(int x, int y) const override {
    long b = base_.size();
    int xs[16], ys[16];
    for (int i = 0; i < cells_; ++i, x /= b, y /= b) {
      xs[i] = int(x % b);
      ys[i] = int(y % b);
    }
    long out = 0, w = 1;
    for (int r = 0; r < dim_; ++r)
      for (int c = 0; c < dim_; ++c) {
        int acc = 0;
        for (int t = 0; t < dim_; ++t)
          acc = base_.add(acc, base_.mul(xs[r * dim_ + t], ys[t * dim_ + c]));
        out += long(acc) * w;
        w *= b;
      }
    return int(out);
  }
  int neg(int x) const override {
    long b = base_.size(), out = 0, w = 1;
    for (int i = 0; i < cells_; ++i, x /= b, w *= b)
      out += long(base_.neg(int(x % b))) * w;
    return int(out);
  }
  int natural_one() const override {
    long b = base_.size(), out = 0, w = 1;
    for (int r = 0; r < dim_; ++r)
      for (int c = 0; c < dim_; ++c) {
        if (r == c) out += w * base_.one();
        w *= b;
      }
    return int(out);
  }
  std::string element_text(int x) const override {
    long b = base_.size();
    std::string s = "[";
    for (int r = 0; r < dim_; ++r) {
      if (r) s += ";";
      for (int c = 0; c < dim_; ++c) {
        if (c) s += ",";
        s += base_.element_text(int(x % b));
        x = int(x / b);
      }
    }
    return s + "]";
  }
  GfPtr kfield() const override { return base_.k_structure() && base_.k_structure()->dim == 1
                                             ? base_.k_structure()->field
                                             : nullptr; }
  int kdim() const override { return kfield() ? cells_ : 0; }
  std::vector<uint8_t> kcoords(int x) const override {
    if (!kfield()) return {};
    long b = base_.size();
    std::vector<uint8_t> row(cells_);
    for (int i = 0; i < cells_; ++i, x = int(x / b)) row[i] = uint8_t(x % b);
    return row;
  }

private:
  Ring base_;
  int dim_, cells_;
  long size_;
};

// Direct product of materialized factors; code = mixed-radix digits.
class ProductBackend : public Backend {
public:
  explicit ProductBackend(std::vector<Ring> factors) : fs_(std::move(factors)) {
    long s = 1;
    for (const Ring& f : fs_) s *= f.size();
    size_ = s;
  }
  long size() const override { return size_; }
  int add(int x, int y) const override { return zip(x, y, /*mul=*/false); }
  int mul(int x, int y) const override { return zip(x, y, /*mul=*/true); }
  int neg(int x) const override {
    long out = 0, w = 1;
    for (const Ring& f : fs_) {
      out += long(f.neg(int(x % f.size()))) * w;
      x = int(x / f.size());
      w *= f.size();
    }
    return int(out);
  }
  int natural_one() const override {
    long out = 0, w = 1;
    for (const Ring& f : fs_) {
      out += long(f.one()) * w;
      w *= f.size();
    }
    return int(out);
  }
  std::string element_text(int x) const override {
    std::string s = "(";
    for (size_t i = 0; i < fs_.size(); ++i) {
      if (i) s += ",";
      s += fs_[i].element_text(int(x % fs_[i].size()));
      x = int(x / fs_[i].size());
    }
    return s + ")";
  }
  GfPtr kfield() const override {
    // products of copies of one field embed it diagonally
    GfPtr f0;
    for (const Ring& f : fs_) {
      const auto& ks = f.k_structure();
      if (!ks || ks->dim != 1) return nullptr;
      if (!f0)
        f0 = ks->field;
      else if (!f0->same(*ks->field))
        return nullptr;
    }
    return f0;
  }
  int kdim() const override { return kfield() ? int(fs_.size()) : 0; }
  std::vector<uint8_t> kcoords(int x) const override {
    if (!kfield()) return {};
    std::vector<uint8_t> row(fs_.size());
    for (size_t i = 0; i < fs_.size(); ++i) {
      row[i] = uint8_t(x % fs_[i].size());
      x = int(x / fs_[i].size());
    }
    return row;
  }

private:
  int zip(int x, int y, bool mul) const {
    long out = 0, w = 1;
    for (const Ring& f : fs_) {
      int a = int(x % f.size()), b = int(y % f.size());
      out += long(mul ? f.mul(a, b) : f.add(a, b)) * w;
      x = int(x / f.size());
      y = int(y / f.size());
      w *= f.size();
    }
    return int(out);
  }
  std::vector<Ring> fs_;
  long size_;
};

// Explicit op tables (op-table files and quotient carriers).  Codes are
// already normalized: 0 = zero, 1 = one.
class TableBackend : public Backend {
public:
  TableBackend(long n, std::vector<int> add, std::vector<int> mul,
               std::vector<std::string> names)
      : n_(n), add_(std::move(add)), mul_(std::move(mul)), names_(std::move(names)) {
    neg_.assign(n_, -1);
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        if (add_[a * n_ + b] == 0) neg_[a] = b;
    for (int a = 0; a < n_; ++a)
      if (neg_[a] < 0) throw std::invalid_argument("element without additive inverse");
  }
  long size() const override { return n_; }
  int add(int a, int b) const override { return add_[a * n_ + b]; }
  int mul(int a, int b) const override { return mul_[a * n_ + b]; }
  int neg(int a) const override { return neg_[a]; }
  int natural_one() const override { return n_ > 1 ? 1 : 0; }
  std::string element_text(int a) const override {
    return names_.empty() ? std::to_string(a) : names_[a];
  }

private:
  long n_;
  std::vector<int> add_, mul_, neg_;
  std::vector<std::string> names_;
};

}  // namespace

namespace detail {

struct RingData {
  RingSpec spec;
  std::unique_ptr<const Backend> backend;
  long n = 0;
  int one = 0;
  int swap_a = -1, swap_b = -1;  // wrapper<->natural involution, -1 = identity
  bool has_tables = false;
  std::vector<int32_t> add_table, mul_table, neg_table;
  std::vector<int> inv;  // -1 when not a unit
  std::vector<int> units;
  std::vector<int> radical;
  long characteristic = 0;
  bool commutative = true;
  std::optional<Ring::KStructure> kstruct;

  int to_natural(int a) const {
    if (a == swap_a) return swap_b;
    if (a == swap_b) return swap_a;
    return a;
  }
  int addf(int a, int b) const {
    if (has_tables) return add_table[a * n + b];
    return to_natural(backend->add(to_natural(a), to_natural(b)));
  }
  int mulf(int a, int b) const {
    if (has_tables) return mul_table[a * n + b];
    return to_natural(backend->mul(to_natural(a), to_natural(b)));
  }
  int negf(int a) const {
    if (has_tables) return neg_table[a];
    return to_natural(backend->neg(to_natural(a)));
  }
};

}  // namespace detail

using detail::RingData;

long Ring::size() const { return d_->n; }
int Ring::one() const { return d_->one; }
int Ring::add(int a, int b) const { return d_->addf(a, b); }
int Ring::sub(int a, int b) const { return d_->addf(a, d_->negf(b)); }
int Ring::mul(int a, int b) const { return d_->mulf(a, b); }
int Ring::neg(int a) const { return d_->negf(a); }
long Ring::characteristic() const { return d_->characteristic; }
bool Ring::commutative() const { return d_->commutative; }
bool Ring::is_unit(int a) const { return d_->inv[a] >= 0; }
int Ring::inverse(int a) const { return d_->inv[a]; }
const std::vector<int>& Ring::units() const { return d_->units; }
const std::vector<int>& Ring::radical() const { return d_->radical; }
const RingSpec& Ring::spec() const { return d_->spec; }
std::string Ring::element_text(int a) const {
  return d_->backend->element_text(d_->to_natural(a));
}
const std::optional<Ring::KStructure>& Ring::k_structure() const { return d_->kstruct; }

namespace {

GfPtr field_of(const RingSpec& s) {
  if (s.kind == RingSpec::Kind::GaloisField) return make_gf(int(s.p), s.k, s.modulus);
  if (s.kind == RingSpec::Kind::ModInt && Gf::is_prime(s.n)) return make_gf(int(s.n), 1);
  throw std::invalid_argument("constructor requires a field argument, got " + s.text());
}

long projected_size(const RingSpec& s, long ceiling) {
  auto bump = [&](long a, long b) {
    if (b != 0 && a > ceiling / b + 1) return ceiling + 1;
    return a * b;
  };
  switch (s.kind) {
    case RingSpec::Kind::ModInt:
      return s.n;
    case RingSpec::Kind::GaloisField: {
      long q = 1;
      for (int i = 0; i < s.k; ++i) q = bump(q, s.p);
      return q;
    }
    case RingSpec::Kind::MatrixRing: {
      long b = projected_size(s.args[0], ceiling), out = 1;
      for (int i = 0; i < s.mat_dim * s.mat_dim; ++i) out = bump(out, b);
      return out;
    }
    case RingSpec::Kind::UpperTriangular2:
    case RingSpec::Kind::EpsDelta: {
      long q = projected_size(s.args[0], ceiling);
      return bump(bump(q, q), q);
    }
    case RingSpec::Kind::DualNumbers: {
      long q = projected_size(s.args[0], ceiling);
      return bump(q, q);
    }
    case RingSpec::Kind::Product: {
      long out = 1;
      for (const RingSpec& f : s.args) out = bump(out, projected_size(f, ceiling));
      return out;
    }
    case RingSpec::Kind::Quotient:
      return projected_size(s.args[0], ceiling);  // upper bound
    case RingSpec::Kind::Table:
      return 0;  // known only after reading the file
  }
  return 0;
}

struct TableFile {
  long n;
  std::vector<int> add, mul;
};

TableFile read_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open op-table file: " + path);
  long n, zero, one;
  if (!(in >> n >> zero >> one) || n < 1)
    throw std::invalid_argument("op-table file: bad header in " + path);
  if (zero < 0 || zero >= n || one < 0 || one >= n)
    throw std::invalid_argument("op-table file: zero/one index out of range in " + path);
  auto read_table = [&](std::vector<int>& t) {
    t.resize(n * n);
    for (long i = 0; i < n * n; ++i) {
      if (!(in >> t[i]) || t[i] < 0 || t[i] >= n)
        throw std::invalid_argument("op-table file: bad entry in " + path);
    }
  };
  TableFile f;
  f.n = n;
  read_table(f.add);
  read_table(f.mul);
  // Re-index so zero lands on code 0 and one on code 1 (when distinct).
  std::vector<int> order;  // new code -> old code
  order.push_back(int(zero));
  if (one != zero) order.push_back(int(one));
  for (int i = 0; i < n; ++i)
    if (i != zero && i != one) order.push_back(i);
  std::vector<int> inv(n);
  for (int i = 0; i < n; ++i) inv[order[i]] = i;
  std::vector<int> add2(n * n), mul2(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      add2[a * n + b] = inv[f.add[order[a] * n + order[b]]];
      mul2[a * n + b] = inv[f.mul[order[a] * n + order[b]]];
    }
  f.add = std::move(add2);
  f.mul = std::move(mul2);
  return f;
}

std::unique_ptr<const Backend> build_backend(const RingSpec& s, const MaterializeOptions& opt) {
  switch (s.kind) {
    case RingSpec::Kind::ModInt:
      return std::make_unique<ModIntBackend>(s.n);
    case RingSpec::Kind::GaloisField:
      return std::make_unique<GfBackend>(make_gf(int(s.p), s.k, s.modulus));
    case RingSpec::Kind::MatrixRing: {
      if (s.mat_dim < 1 || s.mat_dim > 4)
        throw std::invalid_argument("matrix ring dimension must be in 1..4");
      return std::make_unique<MatrixBackend>(materialize(s.args[0], opt), s.mat_dim);
    }
    case RingSpec::Kind::UpperTriangular2:
      return std::make_unique<Ut2Backend>(field_of(s.args[0]));
    case RingSpec::Kind::DualNumbers:
      return std::make_unique<DualBackend>(field_of(s.args[0]), s.frob_power);
    case RingSpec::Kind::EpsDelta:
      return std::make_unique<EpsDeltaBackend>(field_of(s.args[0]));
    case RingSpec::Kind::Product: {
      std::vector<Ring> fs;
      for (const RingSpec& f : s.args) fs.push_back(materialize(f, opt));
      return std::make_unique<ProductBackend>(std::move(fs));
    }
    case RingSpec::Kind::Table: {
      TableFile f = read_table_file(s.table_path);
      return std::make_unique<TableBackend>(f.n, std::move(f.add), std::move(f.mul),
                                            std::vector<std::string>{});
    }
    case RingSpec::Kind::Quotient:
      throw std::logic_error("quotient handled in materialize");
  }
  throw std::logic_error("unknown ring constructor");
}

void check_axioms(const RingData& d, const MaterializeOptions& opt, bool full) {
  long n = d.n;
  auto fail = [&](const std::string& law, long a, long b, long c) {
    std::ostringstream os;
    os << "ring axiom violated (" << law << ") at (" << a << "," << b << "," << c << ")";
    throw std::invalid_argument(os.str());
  };
  for (int a = 0; a < n; ++a) {
    if (d.addf(0, a) != a || d.addf(a, 0) != a) fail("additive identity", a, 0, 0);
    if (d.mulf(d.one, a) != a || d.mulf(a, d.one) != a) fail("multiplicative identity", a, 0, 0);
    if (d.addf(a, d.negf(a)) != 0) fail("additive inverse", a, 0, 0);
  }
  auto triple = [&](long a, long b, long c) {
    int ia = int(a), ib = int(b), ic = int(c);
    if (d.addf(d.addf(ia, ib), ic) != d.addf(ia, d.addf(ib, ic))) fail("add associativity", a, b, c);
    if (d.addf(ia, ib) != d.addf(ib, ia)) fail("add commutativity", a, b, c);
    if (d.mulf(d.mulf(ia, ib), ic) != d.mulf(ia, d.mulf(ib, ic))) fail("mul associativity", a, b, c);
    if (d.mulf(ia, d.addf(ib, ic)) != d.addf(d.mulf(ia, ib), d.mulf(ia, ic)))
      fail("left distributivity", a, b, c);
    if (d.mulf(d.addf(ia, ib), ic) != d.addf(d.mulf(ia, ic), d.mulf(ib, ic)))
      fail("right distributivity", a, b, c);
  };
  if (full || n <= 16) {
    for (long a = 0; a < n; ++a)
      for (long b = 0; b < n; ++b)
        for (long c = 0; c < n; ++c) triple(a, b, c);
  } else {
    std::mt19937 gen(opt.seed ^ 0xA010A010u);
    for (int i = 0; i < opt.axiom_samples; ++i)
      triple(gen() % n, gen() % n, gen() % n);
  }
}

std::shared_ptr<RingData> materialize_backend(RingSpec spec,
                                              std::unique_ptr<const Backend> backend,
                                              const MaterializeOptions& opt) {
  auto d = std::make_shared<RingData>();
  d->spec = std::move(spec);
  d->backend = std::move(backend);
  d->n = d->backend->size();
  long n = d->n;
  if (n > opt.size_ceiling)
    throw std::invalid_argument("ring size " + std::to_string(n) + " exceeds ceiling " +
                                std::to_string(opt.size_ceiling));
  d->one = (n > 1) ? 1 : 0;
  int nat_one = d->backend->natural_one();
  if (n > 1 && nat_one != 1) {
    d->swap_a = 1;
    d->swap_b = nat_one;
  }
  if (n <= opt.table_threshold) {
    d->add_table.resize(n * n);
    d->mul_table.resize(n * n);
    d->neg_table.resize(n);
    for (int a = 0; a < n; ++a) {
      int na = d->to_natural(a);
      d->neg_table[a] = d->to_natural(d->backend->neg(na));
      for (int b = 0; b < n; ++b) {
        int nb = d->to_natural(b);
        d->add_table[a * n + b] = d->to_natural(d->backend->add(na, nb));
        d->mul_table[a * n + b] = d->to_natural(d->backend->mul(na, nb));
      }
    }
    d->has_tables = true;
  }
  check_axioms(*d, opt, /*full=*/d->spec.kind == RingSpec::Kind::Table);

  // units: right inverse first, then the left check; a one-sided hit is a
  // carrier bug, not a certificate result
  d->inv.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (d->mulf(a, b) == d->one) {
        if (d->mulf(b, a) != d->one)
          throw std::logic_error("one-sided inverse in a finite carrier");
        d->inv[a] = b;
        break;
      }
    if (d->inv[a] >= 0) d->units.push_back(a);
  }
  // Jacobson radical: a such that 1 - r*a is a unit for every r
  for (int a = 0; a < n; ++a) {
    bool in_rad = true;
    for (int r = 0; r < n && in_rad; ++r)
      if (d->inv[d->addf(d->one, d->negf(d->mulf(r, a)))] < 0) in_rad = false;
    if (in_rad) d->radical.push_back(a);
  }
  // characteristic = additive order of one (1 for the one-element ring)
  {
    long ord = 1;
    int x = d->one;
    while (x != 0) {
      x = d->addf(x, d->one);
      ++ord;
      if (ord > n + 1) throw std::logic_error("additive order of one overflow");
    }
    d->characteristic = (n == 1) ? 1 : ord;
  }
  d->commutative = true;
  for (int a = 0; a < n && d->commutative; ++a)
    for (int b = a + 1; b < n; ++b)
      if (d->mulf(a, b) != d->mulf(b, a)) {
        d->commutative = false;
        break;
      }
  // distinguished subfield coordinates, translated to wrapper codes
  if (int m = d->backend->kdim(); m > 0) {
    Ring::KStructure ks;
    ks.field = d->backend->kfield();
    ks.dim = m;
    ks.coords.resize(n);
    std::vector<long> rev(1, 0);
    {
      long total = 1;
      for (int i = 0; i < m; ++i) total *= ks.field->q();
      rev.assign(total, -1);
    }
    for (int a = 0; a < n; ++a) {
      ks.coords[a] = d->backend->kcoords(d->to_natural(a));
      if (int(ks.coords[a].size()) != m) throw std::logic_error("bad coordinate row");
      long code = 0;
      for (int i = m - 1; i >= 0; --i) code = code * ks.field->q() + ks.coords[a][i];
      if (rev[code] != -1) throw std::logic_error("coordinate table not injective");
      rev[code] = a;
    }
    ks.basis.assign(m, -1);
    for (int a = 0; a < n; ++a) {
      int nz = -1;
      bool unit_row = true;
      for (int i = 0; i < m; ++i) {
        if (ks.coords[a][i] == 0) continue;
        if (nz >= 0 || ks.coords[a][i] != 1) {
          unit_row = false;
          break;
        }
        nz = i;
      }
      if (unit_row && nz >= 0) ks.basis[nz] = a;
    }
    for (int i = 0; i < m; ++i)
      if (ks.basis[i] < 0) throw std::logic_error("coordinate basis not found");
    d->kstruct = std::move(ks);
  }
  return d;
}

}  // namespace

Ring materialize(const RingSpec& spec, const MaterializeOptions& opt) {
  if (spec.kind == RingSpec::Kind::Quotient) {
    Ring base = materialize(spec.args[0], opt);
    QuotientResult qr = quotient_ring(base, spec.quot_gens, opt);
    return qr.quotient;
  }
  if (spec.kind != RingSpec::Kind::Table) {
    long proj = projected_size(spec, opt.size_ceiling);
    if (proj > opt.size_ceiling)
      throw std::invalid_argument("ring size exceeds ceiling " +
                                  std::to_string(opt.size_ceiling));
  }
  auto backend = build_backend(spec, opt);
  return Ring(materialize_backend(spec, std::move(backend), opt));
}

bool Ideal::contains(int a) const {
  return std::binary_search(members.begin(), members.end(), a);
}

Ideal ideal_closure(const Ring& R, const std::vector<int>& gens) {
  long n = R.size();
  std::vector<char> in(n, 0);
  in[0] = 1;
  std::vector<int> members{0};
  for (int g : gens) {
    if (g < 0 || g >= n) throw std::invalid_argument("ideal generator out of range");
    if (!in[g]) {
      in[g] = 1;
      members.push_back(g);
    }
  }
  // fixpoint under x+y, r*x, x*r
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> snapshot = members;
    for (int x : snapshot) {
      for (int y : snapshot) {
        int s = R.add(x, y);
        if (!in[s]) {
          in[s] = 1;
          members.push_back(s);
          grew = true;
        }
      }
      for (int r = 0; r < n; ++r) {
        int l = R.mul(r, x), rr = R.mul(x, r);
        if (!in[l]) {
          in[l] = 1;
          members.push_back(l);
          grew = true;
        }
        if (!in[rr]) {
          in[rr] = 1;
          members.push_back(rr);
          grew = true;
        }
      }
    }
  }
  std::sort(members.begin(), members.end());
  return Ideal{R, std::move(members)};
}

bool is_two_sided_ideal(const Ring& R, const std::vector<int>& members) {
  std::vector<char> in(R.size(), 0);
  for (int m : members) in[m] = 1;
  if (!in[0]) return false;
  for (int x : members) {
    for (int y : members)
      if (!in[R.add(x, y)]) return false;
    for (int r = 0; r < R.size(); ++r)
      if (!in[R.mul(r, x)] || !in[R.mul(x, r)]) return false;
  }
  return true;
}

std::vector<int> RingHom::kernel() const {
  std::vector<int> ker;
  for (size_t a = 0; a < map.size(); ++a)
    if (map[a] == 0) ker.push_back(int(a));
  return ker;
}

std::vector<int> RingHom::image() const {
  std::set<int> img(map.begin(), map.end());
  return std::vector<int>(img.begin(), img.end());
}

bool RingHom::injective() const { return long(kernel().size()) == 1 && [this] {
  std::set<int> img(map.begin(), map.end());
  return long(img.size()) == source.size();
}(); }

bool RingHom::surjective() const { return long(image().size()) == target.size(); }

HomCheck validate_hom(const RingHom& h) {
  long n = h.source.size();
  if (long(h.map.size()) != n) return {false, "shape", -1, -1};
  for (int t : h.map)
    if (t < 0 || t >= h.target.size()) return {false, "shape", -1, -1};
  if (h.map[h.source.one()] != h.target.one())
    return {false, "unit", h.source.one(), -1};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (h.map[h.source.add(a, b)] != h.target.add(h.map[a], h.map[b]))
        return {false, "additive", a, b};
      if (h.map[h.source.mul(a, b)] != h.target.mul(h.map[a], h.map[b]))
        return {false, "multiplicative", a, b};
    }
  return {true, "", -1, -1};
}

RingHom identity_hom(const Ring& R) {
  RingHom h{R, R, std::vector<int>(R.size())};
  for (int a = 0; a < R.size(); ++a) h.map[a] = a;
  return h;
}

RingHom compose(const RingHom& f, const RingHom& g) {
  if (!f.target.same(g.source)) throw std::invalid_argument("hom composition mismatch");
  RingHom h{f.source, g.target, std::vector<int>(f.map.size())};
  for (size_t a = 0; a < f.map.size(); ++a) h.map[a] = g.map[f.map[a]];
  return h;
}

RingHom zmod_hom(const Ring& source, const Ring& target) {
  if (source.spec().kind != RingSpec::Kind::ModInt ||
      target.spec().kind != RingSpec::Kind::ModInt)
    throw std::invalid_argument("canonical map needs Z/m source and Z/n target");
  long m = source.size(), n = target.size();
  if (m % n != 0) throw std::invalid_argument("no unital map Z/" + std::to_string(m) +
                                              " -> Z/" + std::to_string(n));
  RingHom h{source, target, std::vector<int>(m)};
  for (long a = 0; a < m; ++a) h.map[a] = int(a % n);
  return h;
}

QuotientResult quotient_ring(const Ring& R, const std::vector<int>& gens,
                             const MaterializeOptions& opt) {
  Ideal I = ideal_closure(R, gens);
  long n = R.size();
  std::vector<int> rep(n);
  for (int x = 0; x < n; ++x) {
    int best = x;
    for (int i : I.members) best = std::min(best, R.add(x, i));
    rep[x] = best;
  }
  std::vector<int> reps;  // ascending distinct representatives
  for (int x = 0; x < n; ++x)
    if (rep[x] == x) reps.push_back(x);
  std::vector<int> cls(n);
  for (int x = 0; x < n; ++x)
    cls[x] = int(std::lower_bound(reps.begin(), reps.end(), rep[x]) - reps.begin());
  long m = reps.size();
  std::vector<int> add(m * m), mul(m * m);
  std::vector<std::string> names(m);
  for (long i = 0; i < m; ++i) {
    names[i] = "[" + R.element_text(reps[i]) + "]";
    for (long j = 0; j < m; ++j) {
      add[i * m + j] = cls[R.add(reps[i], reps[j])];
      mul[i * m + j] = cls[R.mul(reps[i], reps[j])];
    }
  }
  RingSpec qspec = RingSpec::quotient(R.spec(), gens);
  auto backend = std::make_unique<TableBackend>(m, std::move(add), std::move(mul),
                                                std::move(names));
  // reps are ascending, rep of the zero coset is 0, rep of the one coset is
  // the least element >= 1 of 1+I, which is 1 itself: codes need no swap
  Ring Q(materialize_backend(std::move(qspec), std::move(backend), opt));
  RingHom pi{R, Q, cls};
  return QuotientResult{Q, std::move(pi), std::move(I), std::move(reps)};
}

DedekindReport is_dedekind_finite(const Ring& R) {
  long n = R.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (R.mul(a, b) == R.one() && R.mul(b, a) != R.one()) return {false, a, b};
  return {true, -1, -1};
}

StableRank2Report has_stable_rank_2(const Ring& R) {
  long n = R.size();
  auto right_invertible = [&](int x) {
    for (int d = 0; d < n; ++d)
      if (R.mul(x, d) == R.one()) return true;
    return false;
  };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      bool unimodular = false;
      for (int x = 0; x < n && !unimodular; ++x)
        for (int y = 0; y < n; ++y)
          if (R.add(R.mul(a, x), R.mul(b, y)) == R.one()) {
            unimodular = true;
            break;
          }
      if (!unimodular) continue;
      bool completed = false;
      for (int c = 0; c < n && !completed; ++c)
        if (right_invertible(R.add(a, R.mul(b, c)))) completed = true;
      if (!completed) return {false, a, b};
    }
  return {true, -1, -1};
}

void write_table_file(const Ring& R, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write op-table file: " + path);
  long n = R.size();
  out << n << " " << R.zero() << " " << R.one() << "\n";
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) out << (b ? " " : "") << R.add(a, b);
    out << "\n";
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) out << (b ? " " : "") << R.mul(a, b);
    out << "\n";
  }
}

// ---- RingSpec -------------------------------------------------------------

std::string RingSpec::text() const {
  switch (kind) {
    case Kind::ModInt:
      return "Z/" + std::to_string(n);
    case Kind::GaloisField: {
      long q = 1;
      for (int i = 0; i < k; ++i) q *= p;
      return "GF(" + std::to_string(q) + ")";
    }
    case Kind::MatrixRing:
      return "M" + std::to_string(mat_dim) + "(" + args[0].text() + ")";
    case Kind::UpperTriangular2:
      return "UT2(" + args[0].text() + ")";
    case Kind::DualNumbers:
      return "Dual(" + args[0].text() +
             (frob_power ? ",frob^" + std::to_string(frob_power) : "") + ")";
    case Kind::EpsDelta:
      return "EpsDelta(" + args[0].text() + ")";
    case Kind::Product: {
      std::vector<std::string> parts;
      for (const RingSpec& f : args) parts.push_back(f.text());
      return join(parts, "x");
    }
    case Kind::Quotient: {
      std::vector<std::string> parts;
      for (int g : quot_gens) parts.push_back(std::to_string(g));
      return "Quot(" + args[0].text() + ";" + join(parts, ",") + ")";
    }
    case Kind::Table:
      return "Table(" + table_path + ")";
  }
  return "?";
}

RingSpec RingSpec::mod_int(long n) {
  RingSpec s;
  s.kind = Kind::ModInt;
  s.n = n;
  return s;
}
RingSpec RingSpec::galois(long p, int k, std::vector<int> modulus) {
  RingSpec s;
  s.kind = Kind::GaloisField;
  s.p = p;
  s.k = k;
  s.modulus = std::move(modulus);
  return s;
}
RingSpec RingSpec::galois_order(long q) {
  long p;
  int k;
  if (!Gf::prime_power(q, &p, &k))
    throw std::invalid_argument("GF(" + std::to_string(q) + "): order is not a prime power");
  return galois(p, k);
}
RingSpec RingSpec::matrix_ring(RingSpec base, int dim) {
  RingSpec s;
  s.kind = Kind::MatrixRing;
  s.mat_dim = dim;
  s.args.push_back(std::move(base));
  return s;
}
RingSpec RingSpec::ut2(RingSpec field) {
  RingSpec s;
  s.kind = Kind::UpperTriangular2;
  s.args.push_back(std::move(field));
  return s;
}
RingSpec RingSpec::dual(RingSpec field, int frob_power) {
  RingSpec s;
  s.kind = Kind::DualNumbers;
  s.frob_power = frob_power;
  s.args.push_back(std::move(field));
  return s;
}
RingSpec RingSpec::eps_delta(RingSpec field) {
  RingSpec s;
  s.kind = Kind::EpsDelta;
  s.args.push_back(std::move(field));
  return s;
}
RingSpec RingSpec::product(std::vector<RingSpec> factors) {
  if (factors.size() == 1) return factors[0];
  RingSpec s;
  s.kind = Kind::Product;
  s.args = std::move(factors);
  return s;
}
RingSpec RingSpec::quotient(RingSpec base, std::vector<int> gens) {
  RingSpec s;
  s.kind = Kind::Quotient;
  s.args.push_back(std::move(base));
  s.quot_gens = std::move(gens);
  return s;
}
RingSpec RingSpec::table(std::string path) {
  RingSpec s;
  s.kind = Kind::Table;
  s.table_path = std::move(path);
  return s;
}

}  // namespace ringline
