// Finite unital rings materialized behind a uniform indexed interface.
//
// Elements of a materialized ring are integer codes in [0, size): code 0 is
// the additive identity and code 1 the multiplicative identity whenever
// size > 1.  Everything downstream (canonical pairs, orbit minima, report
// listings) leans on this total order.
#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ringline/gf.hpp"

namespace ringline {

struct RingSpec {
  enum class Kind {
    ModInt,
    GaloisField,
    MatrixRing,
    UpperTriangular2,
    DualNumbers,
    EpsDelta,
    Product,
    Quotient,
    Table,
  };
  Kind kind = Kind::ModInt;
  long n = 0;                  // ModInt modulus
  long p = 0;                  // GaloisField characteristic
  int k = 1;                   // GaloisField degree
  std::vector<int> modulus;    // GaloisField modulus; empty = default
  int mat_dim = 0;             // MatrixRing dimension
  int frob_power = 0;          // DualNumbers twist: x -> x^(p^frob_power)
  std::vector<RingSpec> args;  // base ring / product factors
  std::vector<int> quot_gens;  // Quotient: ideal generators (base codes)
  std::string table_path;      // Table: op-table file

  std::string text() const;

  static RingSpec mod_int(long n);
  static RingSpec galois(long p, int k, std::vector<int> modulus = {});
  static RingSpec galois_order(long q);
  static RingSpec matrix_ring(RingSpec base, int dim);
  static RingSpec ut2(RingSpec field);
  static RingSpec dual(RingSpec field, int frob_power = 0);
  static RingSpec eps_delta(RingSpec field);
  static RingSpec product(std::vector<RingSpec> factors);
  static RingSpec quotient(RingSpec base, std::vector<int> gens);
  static RingSpec table(std::string path);
};

struct MaterializeOptions {
  long size_ceiling = 4096;   // refuse carriers above this
  long table_threshold = 256; // dense op tables below this size
  int axiom_samples = 10000;  // sampled triples for structured carriers
  uint32_t seed = 1729;
};

namespace detail {
struct RingData;
}

// Immutable value handle; copies share one materialized carrier.
class Ring {
public:
  Ring() = default;
  explicit Ring(std::shared_ptr<const detail::RingData> d) : d_(std::move(d)) {}

  bool valid() const { return d_ != nullptr; }
  long size() const;
  int zero() const { return 0; }
  int one() const;
  int add(int a, int b) const;
  int sub(int a, int b) const;
  int mul(int a, int b) const;
  int neg(int a) const;
  long characteristic() const;
  bool commutative() const;
  bool is_unit(int a) const;
  int inverse(int a) const;  // -1 when a is not a unit
  const std::vector<int>& units() const;
  const std::vector<int>& radical() const;
  const RingSpec& spec() const;
  std::string element_text(int a) const;
  bool same(const Ring& o) const { return d_.get() == o.d_.get(); }

  // Distinguished subfield: R as a left K-space of dimension dim with an
  // indexed coordinate table.  Present for field-based constructors only.
  struct KStructure {
    GfPtr field;
    int dim = 0;
    std::vector<std::vector<uint8_t>> coords;  // ring code -> coordinate row
    std::vector<int> basis;                    // codes of the coordinate basis
  };
  const std::optional<KStructure>& k_structure() const;

private:
  std::shared_ptr<const detail::RingData> d_;
};

Ring materialize(const RingSpec& spec, const MaterializeOptions& opt = {});

struct Ideal {
  Ring ring;
  std::vector<int> members;  // ascending; always contains 0
  bool contains(int a) const;
};

Ideal ideal_closure(const Ring& R, const std::vector<int>& gens);
bool is_two_sided_ideal(const Ring& R, const std::vector<int>& members);

struct RingHom {
  Ring source, target;
  std::vector<int> map;  // source code -> target code
  int operator()(int a) const { return map[a]; }
  std::vector<int> kernel() const;
  std::vector<int> image() const;  // ascending, deduplicated
  bool injective() const;
  bool surjective() const;
};

// ok, or the first violated law ("additive" / "multiplicative" / "unit" /
// "shape") with the witness arguments.
struct HomCheck {
  bool ok = false;
  std::string violation;
  int a = -1, b = -1;
};
HomCheck validate_hom(const RingHom& h);

RingHom identity_hom(const Ring& R);
RingHom compose(const RingHom& f, const RingHom& g);  // a -> g(f(a))
// Canonical unital map Z/m -> Z/n; requires n | m.
RingHom zmod_hom(const Ring& source, const Ring& target);

struct QuotientResult {
  Ring quotient;
  RingHom projection;
  Ideal ideal;
  std::vector<int> reps;  // coset representatives (minimal base codes), by quotient code
};
QuotientResult quotient_ring(const Ring& R, const std::vector<int>& gens,
                             const MaterializeOptions& opt = {});

struct DedekindReport {
  bool dedekind_finite = true;
  int a = -1, b = -1;  // witness with ab = 1 but ba != 1
};
DedekindReport is_dedekind_finite(const Ring& R);

struct StableRank2Report {
  bool holds = true;
  int a = -1, b = -1;  // unimodular pair admitting no completion c
};
StableRank2Report has_stable_rank_2(const Ring& R);

// Op-table file helper (format: "n zero one", n rows of addition, n rows of
// multiplication); the loader runs through materialize(RingSpec::table(path)).
void write_table_file(const Ring& R, const std::string& path);

}  // namespace ringline
