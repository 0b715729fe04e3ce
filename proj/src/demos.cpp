#include "ringline/demos.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ringline {

PolyDemoCertificate poly_demo(int p, int samples, uint32_t seed) {
  PolyDemoCertificate cert;
  cert.p = p;
  cert.samples = samples;
  cert.seed = seed;
  GfPtr F = make_gf(p, 1);
  std::mt19937 g(seed);

  const Poly zero = poly_zero(F), one = poly_one(F), X = poly_x(F);
  const RatFunc rzero = rf_zero(F), rone = rf_one(F), rX = rf_of(X);

  // ax + by = 1 with (x,y) = (1,0) witnesses both generating pairs
  cert.points_unimodular =
      poly_add(poly_mul(one, one), poly_mul(zero, zero)) == one &&
      poly_add(poly_mul(one, one), poly_mul(X, zero)) == one;

  // stacking (1,0) over (1,X) gives determinant 1*X - 0*1 = X; a commutative
  // stack inverts exactly when its determinant does, and no polynomial of
  // positive degree has a polynomial inverse
  const Poly det = poly_sub(poly_mul(one, X), poly_mul(zero, one));
  cert.determinant_nonunit = det == X && !poly_is_unit(det);

  // over fractions the same stack inverts on both sides:
  // [[1,0],[1,X]] * [[1,0],[-1/X,1/X]] = I = [[1,0],[-1/X,1/X]] * [[1,0],[1,X]]
  const RatFunc inv_x = rf_inv(rX);
  const RatFunc m[2][2] = {{rone, rzero}, {rone, rX}};
  const RatFunc w[2][2] = {{rone, rzero}, {rf_neg(inv_x), inv_x}};
  auto product_is_identity = [&](const RatFunc (&a)[2][2], const RatFunc (&b)[2][2]) {
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        RatFunc e = rf_add(rf_mul(a[i][0], b[0][j]), rf_mul(a[i][1], b[1][j]));
        if (e != (i == j ? rone : rzero)) return false;
      }
    return true;
  };
  cert.graph_matrix_invertible = product_is_identity(m, w) && product_is_identity(w, m);

  // the images are U x {0} and {(v, vX)}; a fraction pair (f,g) must split as
  // (f - g/X, 0) + (g/X, g) and in no other way
  cert.splits_unique = true;
  cert.intersection_trivial = true;
  cert.polynomial_span_fails = true;
  for (int t = 0; t < samples; ++t) {
    RatFunc f = random_ratfunc(F, g, 4);
    RatFunc gg = random_ratfunc(F, g, 4);
    RatFunc v = rf_div(gg, rX);
    RatFunc u = rf_sub(f, v);
    if (rf_add(u, v) != f || rf_mul(v, rX) != gg) cert.splits_unique = false;
    // solving through the inverse stack must land on the same split
    RatFunc u2 = rf_add(rf_mul(f, w[0][0]), rf_mul(gg, w[1][0]));
    RatFunc v2 = rf_add(rf_mul(f, w[0][1]), rf_mul(gg, w[1][1]));
    if (u2 != u || v2 != v) cert.splits_unique = false;
    // any perturbed second component breaks the split
    RatFunc h = random_ratfunc(F, g, 3);
    if (!h.is_zero() && rf_mul(rf_add(v, h), rX) == gg) cert.splits_unique = false;

    // a common element (u,0) = (v,vX) forces vX = 0, so v = 0 in a field
    RatFunc nz = random_ratfunc(F, g, 3);
    if (!nz.is_zero() && rf_mul(nz, rX).is_zero()) cert.intersection_trivial = false;

    // with polynomial scalars, b*(X) can never reach 1 and b*X = 0 needs b = 0
    Poly bp = random_poly_nonzero(F, g, 4);
    if (poly_mul(bp, X) == one) cert.polynomial_span_fails = false;
    if (poly_mul(bp, X).is_zero()) cert.polynomial_span_fails = false;
  }
  if (!rf_div(rzero, rX).is_zero()) cert.intersection_trivial = false;

  // (0,1): a polynomial combination a(1,0) + b(1,X) needs bX = 1, i.e. X | 1
  cert.polynomial_span_fails =
      cert.polynomial_span_fails && !poly_divmod(one, X).rem.is_zero();

  // ... while fractions reach it: (0,1) = (-1/X, 0) + (1/X, 1)
  cert.rational_split_exists =
      rf_add(rf_neg(inv_x), inv_x).is_zero() && rf_mul(inv_x, rX) == rone;

  cert.ok = cert.points_unimodular && cert.determinant_nonunit &&
            cert.graph_matrix_invertible && cert.splits_unique &&
            cert.intersection_trivial && cert.polynomial_span_fails &&
            cert.rational_split_exists;
  return cert;
}

namespace {

using ZPair = std::pair<BigInt, BigInt>;
using QPoint = std::pair<BigRat, BigRat>;

// canonical generator of the integer point: coprime, first nonzero entry
// positive
ZPair z_canonical(BigInt a, BigInt b) {
  BigInt g = gcd(a < 0 ? -a : a, b < 0 ? -b : b);
  if (g != 0) {
    a /= g;
    b /= g;
  }
  if (a < 0 || (a == 0 && b < 0)) {
    a = -a;
    b = -b;
  }
  return {a, b};
}

// canonical generator of the fraction point spanned by (a, b)
QPoint q_canonical(const BigInt& a, const BigInt& b) {
  if (a != 0) return {BigRat(1), make_big_rat(b, a)};
  return {BigRat(0), BigRat(1)};
}

}  // namespace

ZqDemoCertificate z_to_q_demo(long height) {
  if (height < 2) throw std::invalid_argument("z_to_q_demo: height must be at least 2");
  ZqDemoCertificate cert;
  cert.height = height;

  std::vector<ZPair> zpts;
  for (long a = -height; a <= height; ++a)
    for (long b = -height; b <= height; ++b) {
      if (a == 0 && b == 0) continue;
      ZPair c = z_canonical(a, b);
      if (c.first == a && c.second == b) zpts.push_back(std::move(c));
    }
  std::sort(zpts.begin(), zpts.end());
  cert.window_points = zpts.size();

  std::vector<QPoint> images;
  std::set<QPoint> image_set;
  for (const ZPair& z : zpts) {
    images.push_back(q_canonical(z.first, z.second));
    image_set.insert(images.back());
  }
  cert.injective = image_set.size() == zpts.size();

  // every fraction point with a representative in the window, coprime or not
  std::set<QPoint> window_fractions;
  for (long a = -height; a <= height; ++a)
    for (long b = -height; b <= height; ++b)
      if (a != 0 || b != 0) window_fractions.insert(q_canonical(a, b));
  cert.surjective_on_window = window_fractions == image_set;

  // clearing denominators recovers a coprime pair inside the same window
  cert.coprime_representatives = true;
  std::set<ZPair> zset(zpts.begin(), zpts.end());
  for (const QPoint& qp : window_fractions) {
    ZPair rep = qp.first == 0
                    ? ZPair{0, 1}
                    : z_canonical(denominator(qp.second), numerator(qp.second));
    const BigInt ha = rep.first < 0 ? -rep.first : rep.first;
    const BigInt hb = rep.second < 0 ? -rep.second : rep.second;
    if (ha > height || hb > height || !zset.count(rep))
      cert.coprime_representatives = false;
  }

  cert.distance_preserved = true;
  cert.reflection_characterized = true;
  for (size_t i = 0; i < zpts.size(); ++i)
    for (size_t j = i + 1; j < zpts.size(); ++j) {
      BigInt det = zpts[i].first * zpts[j].second - zpts[i].second * zpts[j].first;
      const bool distant_z = det == 1 || det == -1;  // stacked determinant a unit
      const bool images_differ = images[i] != images[j];
      if (distant_z && !images_differ) cert.distance_preserved = false;
      if (images_differ != (det != 0)) cert.reflection_characterized = false;
      const bool reflection_fails = images_differ && !distant_z;
      if (reflection_fails != (det != 0 && det != 1 && det != -1))
        cert.reflection_characterized = false;
      if (reflection_fails) ++cert.reflection_failures;
    }

  const BigInt named_det = BigInt(1) * 2 - BigInt(0) * 1;
  cert.named_pair_nondistant = named_det != 1 && named_det != -1;
  cert.named_pair_images_distant = q_canonical(1, 0) != q_canonical(1, 2);

  // 2 has no integer inverse (2x = 1 needs 2 | 1) but inverts among fractions
  const bool unit_in_z = BigInt(1) % BigInt(2) == 0;
  const bool unit_in_q = BigRat(2) * make_big_rat(1, 2) == 1;
  cert.unit_pullback_fails = !unit_in_z && unit_in_q;

  cert.ok = cert.injective && cert.surjective_on_window &&
            cert.coprime_representatives && cert.distance_preserved &&
            cert.reflection_characterized && cert.reflection_failures > 0 &&
            cert.named_pair_nondistant && cert.named_pair_images_distant &&
            cert.unit_pullback_fails;
  return cert;
}

}  // namespace ringline
