#include "ringline/spec_parse.hpp"

#include <cctype>

namespace ringline {

namespace {

class Parser {
public:
  explicit Parser(const std::string& s) : s_(s) {}

  RingSpec parse() {
    RingSpec r = parse_spec();
    skip_ws();
    if (pos_ != s_.size()) throw SpecParseError(pos_, "trailing input");
    return r;
  }

private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(uint8_t(s_[pos_]))) ++pos_;
  }
  bool peek_is(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  void expect(char c) {
    skip_ws();
    if (pos_ >= s_.size() || s_[pos_] != c)
      throw SpecParseError(pos_, std::string("expected '") + c + "'");
    ++pos_;
  }
  bool try_word(const std::string& w) {
    skip_ws();
    if (s_.compare(pos_, w.size(), w) == 0) {
      pos_ += w.size();
      return true;
    }
    return false;
  }
  long parse_nat() {
    skip_ws();
    size_t start = pos_;
    long v = 0;
    while (pos_ < s_.size() && std::isdigit(uint8_t(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      if (v > 1000000000L) throw SpecParseError(start, "number too large");
      ++pos_;
    }
    if (pos_ == start) throw SpecParseError(pos_, "expected a number");
    return v;
  }

  RingSpec parse_spec() {
    std::vector<RingSpec> factors;
    factors.push_back(parse_term());
    while (true) {
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == 'x') {
        ++pos_;
        factors.push_back(parse_term());
      } else {
        break;
      }
    }
    return RingSpec::product(std::move(factors));
  }

  RingSpec field_term(const char* ctor) {
    size_t at = pos_;
    RingSpec t = parse_term();
    bool is_field = t.kind == RingSpec::Kind::GaloisField ||
                    (t.kind == RingSpec::Kind::ModInt && Gf::is_prime(t.n));
    if (!is_field)
      throw SpecParseError(at, std::string(ctor) + " needs a field argument, got " + t.text());
    return t;
  }

  RingSpec parse_term() {
    skip_ws();
    size_t at = pos_;
    if (try_word("Z/")) {
      long n = parse_nat();
      if (n < 1) throw SpecParseError(at, "Z/n needs n >= 1");
      return RingSpec::mod_int(n);
    }
    if (try_word("GF(")) {
      long q = parse_nat();
      long p;
      int k;
      if (!Gf::prime_power(q, &p, &k))
        throw SpecParseError(at, "GF(" + std::to_string(q) + "): not a prime power");
      expect(')');
      return RingSpec::galois(p, k);
    }
    if (try_word("UT2(")) {
      RingSpec f = field_term("UT2");
      expect(')');
      return RingSpec::ut2(std::move(f));
    }
    if (try_word("Dual(")) {
      RingSpec f = field_term("Dual");
      int e = 0;
      if (peek_is(',')) {
        expect(',');
        skip_ws();
        size_t fat = pos_;
        if (!try_word("frob^")) throw SpecParseError(fat, "expected frob^<power>");
        e = int(parse_nat());
      }
      expect(')');
      return RingSpec::dual(std::move(f), e);
    }
    if (try_word("EpsDelta(")) {
      RingSpec f = field_term("EpsDelta");
      expect(')');
      return RingSpec::eps_delta(std::move(f));
    }
    if (try_word("Quot(")) {
      RingSpec base = parse_spec();
      expect(';');
      std::vector<int> gens;
      gens.push_back(int(parse_nat()));
      while (peek_is(',')) {
        expect(',');
        gens.push_back(int(parse_nat()));
      }
      expect(')');
      return RingSpec::quotient(std::move(base), std::move(gens));
    }
    if (try_word("Table(")) {
      std::string path;
      while (pos_ < s_.size() && s_[pos_] != ')') path += s_[pos_++];
      expect(')');
      if (path.empty()) throw SpecParseError(at, "Table needs a file path");
      return RingSpec::table(std::move(path));
    }
    if (pos_ < s_.size() && s_[pos_] == 'M') {
      ++pos_;
      long d = parse_nat();
      if (d < 1 || d > 4) throw SpecParseError(at, "matrix dimension must be in 1..4");
      expect('(');
      RingSpec base = parse_spec();
      expect(')');
      return RingSpec::matrix_ring(std::move(base), int(d));
    }
    throw SpecParseError(pos_, "expected a ring term (Z/, GF, M, UT2, Dual, EpsDelta, Quot, Table)");
  }

  const std::string& s_;
  size_t pos_ = 0;
};

}  // namespace

RingSpec parse_ring_spec(const std::string& text) { return Parser(text).parse(); }

}  // namespace ringline
