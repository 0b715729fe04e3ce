#include "ringline/projline.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <stdexcept>
#include <thread>

namespace ringline {

namespace {

// Lexicographic minimum of the unit orbit; the canonical name of the point
// generated by an admissible pair.
Pair orbit_min(const Ring& R, const Pair& p) {
  Pair best = p;
  for (int u : R.units()) {
    Pair c = scale_pair(R, u, p);
    if (c < best) best = c;
  }
  return best;
}

long pair_code(long n, const Pair& p) { return p.a * n + p.b; }

unsigned long long mat_code(long n, const Mat2& m) {
  return ((((unsigned long long)m.a * n + m.b) * n + m.c) * n + m.d);
}

Mat2 mat_decode(long n, unsigned long long code) {
  Mat2 m;
  m.d = int(code % n);
  code /= n;
  m.c = int(code % n);
  code /= n;
  m.b = int(code % n);
  code /= n;
  m.a = int(code % n);
  return m;
}

void run_rows(int count, int threads, const std::function<void(int)>& body) {
  if (threads <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  int t = std::min(threads, count);
  std::vector<std::thread> pool;
  pool.reserve(t);
  for (int id = 0; id < t; ++id)
    pool.emplace_back([&, id] {
      for (int i = id; i < count; i += t) body(i);
    });
  for (auto& th : pool) th.join();
}

}  // namespace

Pair scale_pair(const Ring& R, int s, const Pair& p) {
  return {R.mul(s, p.a), R.mul(s, p.b)};
}

Pair pair_times(const Ring& R, const Pair& p, const Mat2& m) {
  return {R.add(R.mul(p.a, m.a), R.mul(p.b, m.c)),
          R.add(R.mul(p.a, m.b), R.mul(p.b, m.d))};
}

Mat2 mat2_identity(const Ring& R) { return {R.one(), 0, 0, R.one()}; }

Mat2 mat2_mul(const Ring& R, const Mat2& x, const Mat2& y) {
  return {R.add(R.mul(x.a, y.a), R.mul(x.b, y.c)),
          R.add(R.mul(x.a, y.b), R.mul(x.b, y.d)),
          R.add(R.mul(x.c, y.a), R.mul(x.d, y.c)),
          R.add(R.mul(x.c, y.b), R.mul(x.d, y.d))};
}

Mat2 transvection_lower(const Ring& R, int x) { return {R.one(), 0, x, R.one()}; }

Mat2 transvection_upper(const Ring& R, int x) { return {R.one(), x, 0, R.one()}; }

std::string pair_text(const Ring& R, const Pair& p) {
  return "(" + R.element_text(p.a) + "," + R.element_text(p.b) + ")";
}

std::string mat2_text(const Ring& R, const Mat2& m) {
  return "[[" + R.element_text(m.a) + "," + R.element_text(m.b) + "],[" +
         R.element_text(m.c) + "," + R.element_text(m.d) + "]]";
}

bool is_unimodular(const Ring& R, const Pair& p) {
  if (R.is_unit(p.a) || R.is_unit(p.b)) return true;
  const long n = R.size();
  for (int x = 0; x < n; ++x) {
    int ax = R.mul(p.a, x);
    for (int y = 0; y < n; ++y)
      if (R.add(ax, R.mul(p.b, y)) == R.one()) return true;
  }
  return false;
}

bool is_admissible(const Ring& R, const Pair& p, AdmissibleMode mode, long oracle_ceiling) {
  if (mode == AdmissibleMode::Fast) return is_unimodular(R, p);
  if (R.size() > oracle_ceiling)
    throw std::invalid_argument("completion search needs |R| <= " +
                                std::to_string(oracle_ceiling) + ", got " +
                                std::to_string(R.size()));
  const long n = R.size();
  for (int c = 0; c < n; ++c)
    for (int d = 0; d < n; ++d)
      if (mat2_invertible(R, {p.a, p.b, c, d})) return true;
  return false;
}

Mat2Inverse mat2_invert(const Ring& R, const Mat2& m) {
  const long n = R.size();
  static thread_local std::vector<int32_t> pre;
  pre.assign(size_t(n) * n, -1);
  Mat2Inverse out;
  for (int u = 0; u < n; ++u) {
    int ua = R.mul(u, m.a), ub = R.mul(u, m.b);
    for (int v = 0; v < n; ++v) {
      long x = R.add(ua, R.mul(v, m.c));
      long y = R.add(ub, R.mul(v, m.d));
      long img = x * n + y;
      if (pre[img] >= 0) {
        out.invertible = false;
        out.collision_u = {int(pre[img] / n), int(pre[img] % n)};
        out.collision_v = {u, v};
        return out;
      }
      pre[img] = int32_t(u * n + v);
    }
  }
  long e1 = pre[(long)R.one() * n];  // preimage of (1,0)
  long e2 = pre[(long)R.one()];      // preimage of (0,1)
  out.invertible = true;
  out.inverse = {int(e1 / n), int(e1 % n), int(e2 / n), int(e2 % n)};
  Mat2 id = mat2_identity(R);
  if (mat2_mul(R, m, out.inverse) != id || mat2_mul(R, out.inverse, m) != id)
    throw std::logic_error("assembled inverse fails a side check");
  return out;
}

bool mat2_invertible(const Ring& R, const Mat2& m) { return mat2_invert(R, m).invertible; }

Mat2 gamma_matrix(const Ring& R, int s, int r) {
  if (R.mul(s, r) != R.one())
    throw std::invalid_argument("gamma_matrix needs s*r = 1");
  int off = R.sub(R.one(), R.mul(r, s));
  Mat2 gamma{s, 0, off, r};
  Mat2 stated{r, off, 0, s};
  Mat2 id = mat2_identity(R);
  if (mat2_mul(R, gamma, stated) != id || mat2_mul(R, stated, gamma) != id)
    throw std::logic_error("closed-form inverse fails a side check");
  return gamma;
}

Point point_canonicalize(const Ring& R, const Pair& p) {
  if (!is_admissible(R, p))
    throw std::invalid_argument("pair " + pair_text(R, p) + " is not admissible");
  Point out;
  out.orbit.reserve(R.units().size());
  for (int u : R.units()) out.orbit.push_back(scale_pair(R, u, p));
  std::sort(out.orbit.begin(), out.orbit.end());
  out.rep = out.orbit.front();
  return out;
}

std::vector<Pair> module_set(const Ring& R, const Pair& p) {
  std::vector<Pair> out;
  out.reserve(R.size());
  for (int r = 0; r < R.size(); ++r) out.push_back(scale_pair(R, r, p));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Point> projective_line(const Ring& R, long ceiling) {
  const long n = R.size();
  if (n > ceiling)
    throw std::invalid_argument("point enumeration needs |R| <= " + std::to_string(ceiling) +
                                ", got " + std::to_string(n));
  std::vector<Point> line;
  std::vector<char> in_aR(n);
  for (int a = 0; a < n; ++a) {
    std::fill(in_aR.begin(), in_aR.end(), 0);
    for (int x = 0; x < n; ++x) in_aR[R.mul(a, x)] = 1;
    for (int b = 0; b < n; ++b) {
      bool unimodular = false;
      for (int y = 0; y < n && !unimodular; ++y)
        unimodular = in_aR[R.sub(R.one(), R.mul(b, y))];
      if (!unimodular) continue;
      Pair p{a, b};
      if (orbit_min(R, p) != p) continue;  // keep each orbit's least pair only
      line.push_back(point_canonicalize(R, p));
    }
  }
  return line;  // ascending: the scan is lexicographic and keeps orbit minima
}

bool distant(const Ring& R, const Point& p, const Point& q) {
  return mat2_invertible(R, {p.rep.a, p.rep.b, q.rep.a, q.rep.b});
}

DistantGraph distant_graph(const Ring& R, long ceiling, int threads) {
  DistantGraph g;
  g.points = projective_line(R, ceiling);
  int m = int(g.points.size());
  g.adj.assign(m, std::vector<char>(m, 0));
  run_rows(m, threads, [&](int i) {
    for (int j = i; j < m; ++j) {
      char d = distant(R, g.points[i], g.points[j]) ? 1 : 0;
      g.adj[i][j] = d;
      g.adj[j][i] = d;
    }
  });
  g.degree.assign(m, 0);
  g.anti_reflexive = true;
  for (int i = 0; i < m; ++i) {
    int deg = 0;
    for (int j = 0; j < m; ++j) deg += g.adj[i][j];
    g.degree[i] = deg;
    if (g.adj[i][i]) g.anti_reflexive = false;
  }
  return g;
}

Point apply_gl2(const Ring& R, const Point& p, const Mat2& g) {
  if (!mat2_invertible(R, g))
    throw std::invalid_argument("matrix " + mat2_text(R, g) + " is singular");
  return point_canonicalize(R, pair_times(R, p.rep, g));
}

std::vector<Mat2> e2_generators(const Ring& R) {
  std::vector<Mat2> gens;
  gens.reserve(2 * R.size() - 1);
  for (int x = 0; x < R.size(); ++x) gens.push_back(transvection_lower(R, x));
  for (int x = 1; x < R.size(); ++x) gens.push_back(transvection_upper(R, x));
  return gens;
}

Mat2 random_ge2_word(const Ring& R, std::mt19937& g, int min_len, int max_len) {
  const auto& units = R.units();
  if (max_len < min_len) max_len = min_len;
  int len = min_len + int(g() % uint32_t(max_len - min_len + 1));
  Mat2 w = mat2_identity(R);
  for (int t = 0; t < len; ++t) {
    switch (g() % 3) {
      case 0:
        w = mat2_mul(R, w, transvection_lower(R, int(g() % uint32_t(R.size()))));
        break;
      case 1:
        w = mat2_mul(R, w, transvection_upper(R, int(g() % uint32_t(R.size()))));
        break;
      default: {
        int u = units[g() % uint32_t(units.size())];
        int v = units[g() % uint32_t(units.size())];
        w = mat2_mul(R, w, Mat2{u, 0, 0, v});
      }
    }
  }
  return w;
}

Ge2Report ge2_analysis(const Ring& R, long gl2_ceiling, long line_ceiling) {
  Ge2Report rep;
  const long n = R.size();
  std::vector<Point> line = projective_line(R, line_ceiling);

  // transvection orbit of R(1,0), breadth-first over canonical pairs
  std::vector<Mat2> gens = e2_generators(R);
  std::set<Pair> seen;
  std::deque<Pair> frontier;
  Pair base = orbit_min(R, Pair{R.one(), 0});
  seen.insert(base);
  frontier.push_back(base);
  while (!frontier.empty()) {
    Pair p = frontier.front();
    frontier.pop_front();
    for (const Mat2& g : gens) {
      Pair q = orbit_min(R, pair_times(R, p, g));
      if (seen.insert(q).second) frontier.push_back(q);
    }
  }
  rep.e2_orbit.reserve(seen.size());
  for (const Pair& p : seen) rep.e2_orbit.push_back(point_canonicalize(R, p));
  rep.e2_orbit_equals_line =
      rep.e2_orbit.size() == line.size() &&
      std::equal(rep.e2_orbit.begin(), rep.e2_orbit.end(), line.begin());

  if (n > gl2_ceiling) return rep;  // group scans skipped, not failed
  unsigned long long codes = (unsigned long long)n * n * n * n;
  if (codes > (1ull << 27))
    throw std::invalid_argument("group scan of " + std::to_string(codes) +
                                " matrices is too large");
  rep.group_scans_ran = true;

  for (unsigned long long c = 0; c < codes; ++c)
    if (mat2_invertible(R, mat_decode(n, c))) ++rep.gl2_order;

  // closure of transvections and invertible diagonals under multiplication;
  // a finite monoid of invertible elements is the generated subgroup
  std::vector<Mat2> ggens = gens;
  for (int u : R.units())
    for (int v : R.units()) ggens.push_back(Mat2{u, 0, 0, v});
  std::vector<char> visited(codes, 0);
  std::deque<unsigned long long> work;
  unsigned long long id_code = mat_code(n, mat2_identity(R));
  visited[id_code] = 1;
  work.push_back(id_code);
  rep.ge2_order = 1;
  while (!work.empty()) {
    Mat2 m = mat_decode(n, work.front());
    work.pop_front();
    for (const Mat2& g : ggens) {
      unsigned long long c = mat_code(n, mat2_mul(R, m, g));
      if (!visited[c]) {
        visited[c] = 1;
        ++rep.ge2_order;
        work.push_back(c);
      }
    }
  }
  rep.ge2_ring = rep.gl2_order == rep.ge2_order;
  return rep;
}

namespace {

// Canonical target point of (phi(a), phi(b)).
Pair mapped_rep(const RingHom& phi, const Pair& p) {
  return orbit_min(phi.target, Pair{phi(p.a), phi(p.b)});
}

int line_index(const std::vector<Point>& line, const Pair& rep) {
  auto it = std::lower_bound(line.begin(), line.end(), rep,
                             [](const Point& x, const Pair& r) { return x.rep < r; });
  if (it == line.end() || it->rep != rep)
    throw std::logic_error("image pair is not a point of the target line");
  return int(it - line.begin());
}

Mat2 mapped_matrix(const RingHom& phi, const Mat2& m) {
  return {phi(m.a), phi(m.b), phi(m.c), phi(m.d)};
}

}  // namespace

InducedMap induced_map(const RingHom& phi, long ceiling, uint32_t seed, int random_words) {
  InducedMap out;
  out.phi = phi;
  const Ring& R = phi.source;
  const Ring& S = phi.target;
  out.source_line = projective_line(R, ceiling);
  out.target_line = projective_line(S, ceiling);
  int m = int(out.source_line.size());

  out.image_index.resize(m);
  for (int i = 0; i < m; ++i)
    out.image_index[i] = line_index(out.target_line, mapped_rep(phi, out.source_line[i].rep));

  out.distance_preserved = true;
  for (int i = 0; i < m && out.distance_preserved; ++i)
    for (int j = i; j < m; ++j) {
      if (!distant(R, out.source_line[i], out.source_line[j])) continue;
      if (!distant(S, out.target_line[out.image_index[i]], out.target_line[out.image_index[j]])) {
        out.distance_preserved = false;
        out.fail_p = i;
        out.fail_q = j;
        break;
      }
    }

  out.equivariant = true;
  std::vector<Mat2> words = e2_generators(R);
  std::mt19937 gen(seed);
  for (int w = 0; w < random_words; ++w) words.push_back(random_ge2_word(R, gen));
  for (const Mat2& g : words) {
    Mat2 gphi = mapped_matrix(phi, g);
    for (int i = 0; i < m; ++i) {
      Pair moved_then_mapped = mapped_rep(phi, pair_times(R, out.source_line[i].rep, g));
      Pair mapped_then_moved =
          orbit_min(S, pair_times(S, out.target_line[out.image_index[i]].rep, gphi));
      if (moved_then_mapped != mapped_then_moved) {
        out.equivariant = false;
        out.fail_p = i;
        break;
      }
    }
    if (!out.equivariant) break;
  }

  std::set<int> hit(out.image_index.begin(), out.image_index.end());
  out.line_map_injective = int(hit.size()) == m;
  out.injectivity_matches = out.line_map_injective == phi.injective();
  return out;
}

DistanceReflectionReport check_distance_reflection(const RingHom& phi, long ceiling) {
  DistanceReflectionReport rep;
  const Ring& R = phi.source;
  const Ring& S = phi.target;
  std::vector<Point> line = projective_line(R, ceiling);
  int m = int(line.size());
  std::vector<Point> image(m);
  for (int i = 0; i < m; ++i) image[i] = point_canonicalize(S, mapped_rep(phi, line[i].rep));

  rep.image_distant_implies_distant = true;
  for (int i = 0; i < m && rep.image_distant_implies_distant; ++i)
    for (int j = i; j < m; ++j)
      if (distant(S, image[i], image[j]) && !distant(R, line[i], line[j])) {
        rep.image_distant_implies_distant = false;
        rep.witness_p = i;
        rep.witness_q = j;
        break;
      }

  rep.unit_pullback = true;
  for (int y = 0; y < R.size(); ++y)
    if (S.is_unit(phi(y)) && !R.is_unit(y)) {
      rep.unit_pullback = false;
      rep.witness_y = y;
      break;
    }

  bool kernel_in_radical = true;
  const auto& rad = R.radical();
  for (int k : phi.kernel())
    if (!std::binary_search(rad.begin(), rad.end(), k)) {
      kernel_in_radical = false;
      rep.witness_kernel = k;
      break;
    }
  bool image_units_match = true;
  std::vector<int> img = phi.image();
  for (int u : img) {
    if (!S.is_unit(u)) continue;
    // an ambient unit in the image must be invertible inside the image subring
    bool inner = false;
    for (int v : img)
      if (S.mul(u, v) == S.one() && S.mul(v, u) == S.one()) {
        inner = true;
        break;
      }
    if (!inner) {
      image_units_match = false;
      rep.witness_image_unit = u;
      break;
    }
  }
  rep.radical_and_image_units = kernel_in_radical && image_units_match;

  rep.agree = rep.image_distant_implies_distant == rep.unit_pullback &&
              rep.unit_pullback == rep.radical_and_image_units;
  rep.verdict = rep.image_distant_implies_distant;
  return rep;
}

SurjectivityReport check_surjectivity(const RingHom& phi, long gl2_ceiling, long ceiling) {
  if (!phi.surjective())
    throw std::invalid_argument("homomorphism is not surjective on elements");
  SurjectivityReport rep;
  const Ring& R = phi.source;
  const Ring& S = phi.target;

  Ge2Report ge2 = ge2_analysis(S, gl2_ceiling, ceiling);
  rep.ge2_scan_ran = ge2.group_scans_ran;
  rep.target_ge2_ring = ge2.group_scans_ran && ge2.ge2_ring;

  std::vector<int> ker = phi.kernel();
  const auto& rad = R.radical();
  rep.kernel_in_radical = std::all_of(ker.begin(), ker.end(), [&](int k) {
    return std::binary_search(rad.begin(), rad.end(), k);
  });

  for (int e = 0; e < R.size() && rep.splitting_idempotent < 0; ++e) {
    if (R.mul(e, e) != e) continue;
    bool central = true;
    for (int r = 0; r < R.size() && central; ++r) central = R.mul(e, r) == R.mul(r, e);
    if (!central) continue;
    std::vector<int> eR;
    eR.reserve(R.size());
    for (int r = 0; r < R.size(); ++r) eR.push_back(R.mul(e, r));
    std::sort(eR.begin(), eR.end());
    eR.erase(std::unique(eR.begin(), eR.end()), eR.end());
    if (eR == ker) rep.splitting_idempotent = e;
  }
  rep.kernel_is_split_ideal = rep.splitting_idempotent >= 0;

  std::vector<Point> source_line = projective_line(R, ceiling);
  std::vector<Point> target_line = projective_line(S, ceiling);
  std::vector<char> hit(target_line.size(), 0);
  for (const Point& p : source_line) hit[line_index(target_line, mapped_rep(phi, p.rep))] = 1;
  rep.line_map_surjective = std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });

  bool any = rep.target_ge2_ring || rep.kernel_in_radical || rep.kernel_is_split_ideal;
  rep.conditions_imply_surjective = !any || rep.line_map_surjective;
  return rep;
}

}  // namespace ringline
