#include "semialg/families.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "semialg/rng.hpp"

namespace semialg {

PointSet grid_points(int d, int m, int scale_num, int scale_den) {
  if (d < 1 || m < 1) throw input_error("grid_points: d and m must be >= 1");
  PointSet ps;
  ps.dim = d;
  ps.label = "grid" + std::to_string(m) + "^" + std::to_string(d);
  Rational scale = make_rational(scale_num, scale_den);
  std::vector<std::size_t> radices(d, static_cast<std::size_t>(m));
  for_each_tuple(radices, [&](const std::vector<std::size_t>& t) {
    Point p;
    p.reserve(d);
    for (int v = 0; v < d; ++v) p.push_back(Rational(static_cast<long>(t[v] + 1)) * scale);
    ps.pts.push_back(std::move(p));
  });
  return ps;
}

PointSet random_points(int n, int d, std::uint64_t seed, int range) {
  PointSet ps;
  ps.dim = d;
  ps.label = "random" + std::to_string(n);
  SplitMix64 rng(SplitMix64::derive(seed, 0xA11CE));
  std::set<Point> seen;
  while (static_cast<int>(ps.pts.size()) < n) {
    Point p;
    p.reserve(d);
    for (int v = 0; v < d; ++v) {
      long num = static_cast<long>(rng.below(2 * range + 1)) - range;
      long den = 1L << rng.below(5);
      p.push_back(make_rational(num, den));
    }
    if (seen.insert(p).second) ps.pts.push_back(std::move(p));
  }
  return ps;
}

long smallest_prime_greater(long k) {
  auto is_prime = [](long n) {
    if (n < 2) return false;
    for (long f = 2; f * f <= n; ++f)
      if (n % f == 0) return false;
    return true;
  };
  long p = k + 1;
  while (!is_prime(p)) ++p;
  return p;
}

StripesConfig StripesConfig::make(int D, int d, int m) {
  if (d < 1 || m < 1) throw input_error("stripes: d and m must be >= 1");
  if (D < d) throw input_error("stripes: requires D >= d so that k = floor(D/d) >= 1");
  StripesConfig c;
  c.D = D;
  c.d = d;
  c.m = m;
  c.k = D / d;
  c.p = smallest_prime_greater(c.k);
  for (int i = 0; i < c.k; ++i) {
    long res = (static_cast<long>(i) * i) % c.p;
    c.a.push_back(make_rational(res, c.p));
    // c_i = i*m/k + a_i*m/(3k)
    Rational ci = make_rational(static_cast<long>(i) * m, c.k) +
                  c.a.back() * make_rational(m, 3L * c.k);
    c.thresholds.push_back(ci);
  }
  return c;
}

namespace {

// g = x_a - x_b as a polynomial of the given arity
Polynomial diff_poly(int arity, int a, int b) {
  Polynomial p(arity);
  std::vector<unsigned> e(arity, 0);
  e[a] = 1;
  p.add_term(e, 1);
  e[a] = 0;
  e[b] = 1;
  p.add_term(e, -1);
  p.finalize();
  return p;
}

Polynomial shifted_diff(int arity, int a, int b, const Rational& c) {
  // x_a - x_b - c
  Polynomial p = diff_poly(arity, a, b);
  if (c != 0) {
    Polynomial cc = Polynomial::constant(arity, Rational(-c));
    p = p + cc;
  }
  return p;
}

// sum over axes of (x_{off1+j} - x_{off2+j})^2 as polynomial of arity `arity`
Polynomial squared_distance_poly(int arity, int off1, int off2, int d) {
  Polynomial acc(arity);
  for (int j = 0; j < d; ++j) {
    Polynomial diff = diff_poly(arity, off1 + j, off2 + j);
    acc = acc + diff * diff;
  }
  return acc;
}

}  // namespace

PartiteHypergraph make_grid_graph(int d, int m) {
  PartiteHypergraph h;
  h.uniformity = 2;
  h.dim = d;
  h.family = "grid";
  h.parts = {grid_points(d, m), grid_points(d, m)};
  SignPredicate pred;
  pred.arity = 2 * d;
  std::vector<SignFormula> atoms;
  for (int j = 0; j < d; ++j) {
    pred.polys.push_back(diff_poly(2 * d, j, d + j));
    atoms.push_back(SignFormula::atom(j, {0}));
  }
  pred.formula = SignFormula::disjunction(std::move(atoms));
  h.predicate = std::move(pred);
  h.validate();
  return h;
}

PartiteHypergraph make_grid_symmetric(int d, int m) {
  PartiteHypergraph h = make_grid_graph(d, m);
  h.symmetric = true;
  h.family = "grid_sym";
  return h;
}

PartiteHypergraph make_stripes_graph(int D, int d, int m) {
  StripesConfig cfg = StripesConfig::make(D, d, m);
  PartiteHypergraph h;
  h.uniformity = 2;
  h.dim = d;
  h.family = "stripes";
  h.parts = {grid_points(d, m), grid_points(d, 2 * m)};
  SignPredicate pred;
  pred.arity = 2 * d;
  std::vector<SignFormula> holds;
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < cfg.k; ++i) {
      // y_j - x_j - c_i >= 0
      pred.polys.push_back(shifted_diff(2 * d, d + j, j, cfg.thresholds[i]));
      holds.push_back(
          SignFormula::atom(static_cast<int>(pred.polys.size()) - 1, {0, 1}));
    }
  }
  pred.formula = SignFormula::even_parity(std::move(holds));
  h.predicate = std::move(pred);
  h.validate();
  return h;
}

PartiteHypergraph make_stripes_symmetric(int k, int m) {
  StripesConfig cfg = StripesConfig::make(k, 1, m);
  PartiteHypergraph h;
  h.uniformity = 2;
  h.dim = 1;
  h.family = "stripes_sym";
  h.symmetric = true;
  h.parts = {grid_points(1, m), grid_points(1, m)};
  SignPredicate pred;
  pred.arity = 2;
  std::vector<SignFormula> holds;
  for (int i = 0; i < cfg.k; ++i) {
    // (y - x)^2 - c_i^2 >= 0, i.e. |y - x| >= c_i
    Polynomial diff = diff_poly(2, 1, 0);
    Polynomial q = diff * diff;
    Rational c2 = cfg.thresholds[i] * cfg.thresholds[i];
    if (c2 != 0) q = q + Polynomial::constant(2, Rational(-c2));
    pred.polys.push_back(q);
    holds.push_back(SignFormula::atom(i, {0, 1}));
  }
  pred.formula = SignFormula::even_parity(std::move(holds));
  h.predicate = std::move(pred);
  h.validate();
  return h;
}

PartiteHypergraph make_unit_distance_graph(const PointSet& p, const Rational& dist2) {
  p.validate();
  PartiteHypergraph h;
  h.uniformity = 2;
  h.dim = p.dim;
  h.family = "unit_distance";
  h.symmetric = true;
  h.parts = {p, p};
  SignPredicate pred;
  pred.arity = 2 * p.dim;
  Polynomial q = squared_distance_poly(pred.arity, 0, p.dim, p.dim);
  if (dist2 != 0) q = q + Polynomial::constant(pred.arity, Rational(-dist2));
  pred.polys.push_back(q);
  pred.formula = SignFormula::atom(0, {0});
  h.predicate = std::move(pred);
  h.validate();
  return h;
}

PartiteHypergraph make_interval_graph(int n, int w) {
  PartiteHypergraph h;
  h.uniformity = 2;
  h.dim = 1;
  h.family = "interval";
  h.symmetric = true;
  h.parts = {grid_points(1, n), grid_points(1, n)};
  SignPredicate pred;
  pred.arity = 2;
  Polynomial diff = diff_poly(2, 0, 1);
  Polynomial q = diff * diff;
  q = q + Polynomial::constant(2, Rational(-static_cast<long>(w) * w));
  pred.polys.push_back(q);
  pred.formula = SignFormula::atom(0, {-1, 0});
  h.predicate = std::move(pred);
  h.validate();
  return h;
}

PartiteHypergraph make_point_line_graph(int n_points) {
  if (n_points < 4) throw input_error("point_line: need at least 4 points");
  int s = std::max(1, static_cast<int>(std::floor(std::cbrt(static_cast<double>(n_points)))));
  int hgt = (n_points + s - 1) / s;
  auto first_n = [&](const char* label) {
    PointSet ps;
    ps.dim = 2;
    ps.label = label;
    for (int i = 1; i <= s && static_cast<int>(ps.pts.size()) < n_points; ++i)
      for (int j = 1; j <= hgt && static_cast<int>(ps.pts.size()) < n_points; ++j)
        ps.pts.push_back({Rational(i), Rational(j)});
    return ps;
  };
  PartiteHypergraph h;
  h.uniformity = 2;
  h.dim = 2;
  h.family = "point_line";
  h.parts = {first_n("points"), first_n("lines")};
  // point (x,y) = vars (0,1); line (m,b) = vars (2,3); incidence y = m x + b
  SignPredicate pred;
  pred.arity = 4;
  Polynomial g(4);
  g.add_term({0, 1, 0, 0}, 1);
  g.add_term({1, 0, 1, 0}, -1);
  g.add_term({0, 0, 0, 1}, -1);
  g.finalize();
  pred.polys.push_back(std::move(g));
  pred.formula = SignFormula::atom(0, {0});
  h.predicate = std::move(pred);
  h.validate();
  return h;
}

PartiteHypergraph make_equilateral_hypergraph(const PointSet& p) {
  if (p.dim != 2) throw input_error("equilateral: requires d = 2");
  PartiteHypergraph h;
  h.uniformity = 3;
  h.dim = 2;
  h.family = "equilateral";
  h.symmetric = true;
  h.parts = {p, p, p};
  SignPredicate pred;
  pred.arity = 6;
  Polynomial xy = squared_distance_poly(6, 0, 2, 2);
  Polynomial xz = squared_distance_poly(6, 0, 4, 2);
  Polynomial yz = squared_distance_poly(6, 2, 4, 2);
  pred.polys.push_back(xy - xz);
  pred.polys.push_back(xy - yz);
  pred.formula = SignFormula::conjunction(
      {SignFormula::atom(0, {0}), SignFormula::atom(1, {0})});
  h.predicate = std::move(pred);
  h.validate();
  return h;
}

PartiteHypergraph make_complete(std::vector<PointSet> parts) {
  if (parts.empty()) throw input_error("complete: needs at least one part");
  PartiteHypergraph h;
  h.uniformity = static_cast<int>(parts.size());
  h.dim = parts[0].dim;
  h.family = "complete";
  h.parts = std::move(parts);
  h.predicate.arity = h.uniformity * h.dim;
  h.predicate.formula = SignFormula::constant(true);
  h.validate();
  return h;
}

// ---- blowup machinery ----

std::vector<long> greedy_sidon(int t) {
  if (t < 1) throw input_error("sidon: t must be >= 1");
  long limit = 2L * t * t;
  std::vector<long> s;
  std::set<long> sums;
  for (long cand = 1; cand <= limit && static_cast<int>(s.size()) < t; ++cand) {
    bool ok = true;
    std::vector<long> fresh;
    for (long x : s) {
      if (sums.count(x + cand)) {
        ok = false;
        break;
      }
      fresh.push_back(x + cand);
    }
    if (!ok) continue;
    // also the doubled sum, to keep differences distinct as well
    if (sums.count(2 * cand)) continue;
    fresh.push_back(2 * cand);
    for (long v : fresh) sums.insert(v);
    s.push_back(cand);
  }
  if (static_cast<int>(s.size()) < t)
    throw internal_error("greedy Sidon construction failed inside {1..2t^2} for t=" +
                         std::to_string(t));
  return s;
}

std::vector<long> BlowupBase::pattern(std::span<const long> a,
                                      std::span<const long> b) const {
  std::vector<long> pat(2 * k, 0);
  for (int i = 0; i < k; ++i) {
    if (a[i] != b[i]) {
      pat[2 * i] = a[i];
      pat[2 * i + 1] = b[i];
    }
  }
  return pat;
}

std::vector<long> BlowupBase::canonical(std::vector<long> pat) {
  std::vector<long> sw(pat.size());
  for (std::size_t i = 0; i + 1 < pat.size(); i += 2) {
    sw[i] = pat[i + 1];
    sw[i + 1] = pat[i];
  }
  return std::min(pat, sw);
}

bool BlowupBase::adjacent(std::span<const long> a, std::span<const long> b) const {
  std::vector<long> pat = pattern(a, b);
  bool all_star = true;
  for (long v : pat)
    if (v != 0) all_star = false;
  if (all_star) return false;  // a == b, no loops
  return classes.at(canonical(std::move(pat)));
}

std::vector<std::vector<long>> BlowupBase::vertex_blocks() const {
  std::vector<std::vector<long>> out;
  std::vector<std::size_t> radices(k, sidon.size());
  for_each_tuple(radices, [&](const std::vector<std::size_t>& t) {
    std::vector<long> v(k);
    for (int i = 0; i < k; ++i) v[i] = sidon[t[i]];
    out.push_back(std::move(v));
  });
  return out;
}

int max_clique_bitset(const std::vector<std::uint64_t>& adj) {
  const int n = static_cast<int>(adj.size());
  if (n > 64) throw input_error("max_clique_bitset: more than 64 vertices");
  int best = 0;
  // DFS over candidate sets, greedy order
  std::function<void(std::uint64_t, int)> go = [&](std::uint64_t cand, int size) {
    if (size + __builtin_popcountll(cand) <= best) return;
    if (!cand) {
      best = std::max(best, size);
      return;
    }
    int v = __builtin_ctzll(cand);
    // branch: with v
    go(cand & adj[v] & ~((std::uint64_t{1} << (v + 1)) - 1) as_fix, size + 1);
  };
  (void)go;
  // iterative version below replaces the sketch above
  best = 0;
  std::vector<std::pair<std::uint64_t, int>> stack;
  std::uint64_t full = n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
  stack.push_back({full, 0});
  while (!stack.empty()) {
    auto [cand, size] = stack.back();
    stack.pop_back();
    if (size > best) best = size;
    if (size + __builtin_popcountll(cand) <= best) continue;
    if (!cand) continue;
    int v = __builtin_ctzll(cand);
    std::uint64_t rest = cand & ~(std::uint64_t{1} << v);
    stack.push_back({rest, size});                 // skip v
    stack.push_back({rest & adj[v], size + 1});    // take v
  }
  return best;
}

namespace {

void enumerate_patterns(const std::vector<long>& sidon, int k, int axis,
                        std::vector<long>& cur, std::vector<std::vector<long>>& out) {
  if (axis == k) {
    bool all_star = true;
    for (long v : cur)
      if (v != 0) all_star = false;
    if (!all_star) out.push_back(cur);
    return;
  }
  cur[2 * axis] = 0;
  cur[2 * axis + 1] = 0;
  enumerate_patterns(sidon, k, axis + 1, cur, out);
  for (long p : sidon)
    for (long q : sidon) {
      if (p == q) continue;
      cur[2 * axis] = p;
      cur[2 * axis + 1] = q;
      enumerate_patterns(sidon, k, axis + 1, cur, out);
    }
  cur[2 * axis] = 0;
  cur[2 * axis + 1] = 0;
}

BlowupBase sample_base(int t, int k, const std::vector<long>& sidon,
                       std::uint64_t seed) {
  BlowupBase base;
  base.t = t;
  base.k = k;
  base.sidon = sidon;
  std::vector<std::vector<long>> pats;
  std::vector<long> cur(2 * k, 0);
  enumerate_patterns(sidon, k, 0, cur, pats);
  // canonicalize, dedupe, then flip one fair coin per class in a fixed order
  std::set<std::vector<long>> canon;
  for (auto& p : pats) canon.insert(BlowupBase::canonical(p));
  SplitMix64 rng(seed);
  for (const auto& c : canon) base.classes[c] = (rng.next() & 1) != 0;
  return base;
}

}  // namespace

BlowupInstance make_blowup_instance(const BlowupConfig& cfg) {
  if (cfg.t < 2) throw input_error("blowup: t must be >= 2");
  if (cfg.k < 1) throw input_error("blowup: k must be >= 1 (d = 2k even)");
  if (cfg.r < 1) throw input_error("blowup: r must be >= 1");
  BlowupInstance inst;
  inst.cfg = cfg;
  inst.sidon = greedy_sidon(cfg.t);
  inst.B = 20L * cfg.t * cfg.t;

  double tk = std::pow(static_cast<double>(cfg.t), cfg.k);
  int threshold = cfg.clique_threshold > 0
                      ? cfg.clique_threshold
                      : std::max(2, static_cast<int>(std::ceil(
                                        2.0 * std::log2(std::max(2.0, tk)))));

  // resample-on-failure loop for property (ii); property (i) holds by
  // construction since adjacency is a function of the pattern class
  for (int attempt = 0; attempt < cfg.resample_cap; ++attempt) {
    BlowupBase base =
        sample_base(cfg.t, cfg.k, inst.sidon, SplitMix64::derive(cfg.seed, attempt));
    auto blocks = base.vertex_blocks();
    int n = static_cast<int>(blocks.size());
    inst.resamples_used = attempt + 1;
    if (n <= 32) {
      std::vector<std::uint64_t> adj(n, 0), coadj(n, 0);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (i != j) {
            if (base.adjacent(blocks[i], blocks[j]))
              adj[i] |= std::uint64_t{1} << j;
            else
              coadj[i] |= std::uint64_t{1} << j;
          }
      inst.base_max_clique = max_clique_bitset(adj);
      inst.base_max_indep = max_clique_bitset(coadj);
      if (std::max(inst.base_max_clique, inst.base_max_indep) > threshold &&
          attempt + 1 < cfg.resample_cap)
        continue;
      if (std::max(inst.base_max_clique, inst.base_max_indep) > threshold)
        throw internal_error(
            "blowup base graph resampling cap exceeded; measured clique=" +
            std::to_string(inst.base_max_clique) +
            " indep=" + std::to_string(inst.base_max_indep) +
            " threshold=" + std::to_string(threshold));
    }
    inst.base = std::move(base);
    break;
  }

  // vertices: (S^k)^r in odometer order over blocks
  auto blocks = inst.base.vertex_blocks();
  std::vector<std::size_t> radices(cfg.r, blocks.size());
  for_each_tuple(radices, [&](const std::vector<std::size_t>& t) {
    std::vector<long> dig(static_cast<std::size_t>(cfg.r) * cfg.k);
    for (int j = 0; j < cfg.r; ++j)
      for (int i = 0; i < cfg.k; ++i) dig[j * cfg.k + i] = blocks[t[j]][i];
    inst.digits.push_back(std::move(dig));
  });

  // encoded coordinates: x_i in base B, y_i in base B^2
  PointSet ps;
  ps.dim = 2 * cfg.k;
  ps.label = "blowup";
  for (const auto& dig : inst.digits) {
    Point p(2 * cfg.k, Rational(0));
    for (int i = 0; i < cfg.k; ++i) {
      Integer x = 0, y = 0;
      for (int j = 0; j < cfg.r; ++j) {
        x = x * inst.B + dig[j * cfg.k + i];
        y = y * inst.B * inst.B + dig[j * cfg.k + i];
      }
      p[i] = Rational(x);
      p[cfg.k + i] = Rational(y);
    }
    ps.pts.push_back(std::move(p));
  }

  // predicate polynomials; variable layout: first point (x_1..x_k,y_1..y_k)
  // at 0..2k-1, second point at 2k..4k-1
  const int k = cfg.k;
  const int arity = 4 * k;
  SignPredicate pred;
  pred.arity = arity;
  auto xv = [&](int i, bool second) { return (second ? 2 * k : 0) + i; };
  auto yv = [&](int i, bool second) { return (second ? 2 * k : 0) + k + i; };

  std::vector<int> z_index(k);
  for (int i = 0; i < k; ++i) {
    z_index[i] = static_cast<int>(pred.polys.size());
    pred.polys.push_back(diff_poly(arity, yv(i, false), yv(i, true)));
  }

  // window polynomials per axis and per Sidon difference delta = p - q > 0
  std::vector<long> deltas;
  for (std::size_t a = 0; a < inst.sidon.size(); ++a)
    for (std::size_t b = 0; b < a; ++b) deltas.push_back(inst.sidon[a] - inst.sidon[b]);
  std::sort(deltas.begin(), deltas.end());
  std::map<std::pair<int, long>, int> window_index;  // (axis, delta) -> first of 4
  for (int i = 0; i < k; ++i) {
    Polynomial dx = diff_poly(arity, xv(i, false), xv(i, true));
    Polynomial dx2 = dx * dx;
    Polynomial dy = diff_poly(arity, yv(i, false), yv(i, true));
    for (long delta : deltas) {
      window_index[{i, delta}] = static_cast<int>(pred.polys.size());
      Rational hi = Rational(delta) + make_rational(1, 2);
      Rational lo = Rational(delta) - make_rational(1, 2);
      Polynomial dy_hi = dy * Polynomial::constant(arity, hi);
      Polynomial dy_lo = dy * Polynomial::constant(arity, lo);
      pred.polys.push_back(dx2 - dy_hi);  // W1
      pred.polys.push_back(dx2 - dy_lo);  // W2
      pred.polys.push_back(dx2 + dy_lo);  // W3
      pred.polys.push_back(dx2 + dy_hi);  // W4
    }
  }

  std::map<std::pair<int, int>, int> cross_index;  // (i1 < i2) -> first of 4
  for (int i1 = 0; i1 < k; ++i1) {
    for (int i2 = i1 + 1; i2 < k; ++i2) {
      cross_index[{i1, i2}] = static_cast<int>(pred.polys.size());
      Polynomial u = diff_poly(arity, yv(i1, false), yv(i1, true));
      Polynomial v = diff_poly(arity, yv(i2, false), yv(i2, true));
      Polynomial Bv = v * Polynomial::constant(arity, Rational(inst.B));
      Polynomial Bu = u * Polynomial::constant(arity, Rational(inst.B));
      pred.polys.push_back(u - Bv);  // C1
      pred.polys.push_back(u + Bv);  // C2
      pred.polys.push_back(Bu - v);  // C3
      pred.polys.push_back(Bu + v);  // C4
    }
  }

  auto atom = [](int idx, std::initializer_list<int> signs) {
    return SignFormula::atom(idx, signs);
  };
  // |u| > B|v| for the cross pair — axis i1 differs in an earlier block
  auto earlier = [&](int i1, int i2) {
    int c = cross_index.at({i1, i2});
    return SignFormula::disjunction(
        {SignFormula::conjunction({atom(c + 0, {1}), atom(c + 1, {1})}),
         SignFormula::conjunction({atom(c + 0, {-1}), atom(c + 1, {-1})})});
  };
  // |B u| < |v| — axis i1 differs in a strictly later block than axis i2
  auto later = [&](int i1, int i2) {
    int c = cross_index.at({i1, i2});
    return SignFormula::disjunction(
        {SignFormula::conjunction({atom(c + 2, {1}), atom(c + 3, {-1})}),
         SignFormula::conjunction({atom(c + 2, {-1}), atom(c + 3, {1})})});
  };

  // scenarios: choose the set M of axes that differ in the minimal block and
  // an ordered digit pair per such axis; keep those forming an edge class
  std::vector<SignFormula> scenarios;
  std::vector<std::vector<long>> pats;
  std::vector<long> cur(2 * k, 0);
  enumerate_patterns(inst.sidon, k, 0, cur, pats);
  for (const auto& pat : pats) {
    if (!inst.base.classes.at(BlowupBase::canonical(pat))) continue;
    std::vector<int> in_m;
    for (int i = 0; i < k; ++i)
      if (pat[2 * i] != 0 || pat[2 * i + 1] != 0) in_m.push_back(i);
    std::vector<SignFormula> conj;
    for (int i : in_m) {
      long p = pat[2 * i], q = pat[2 * i + 1];
      long delta = std::labs(p - q);
      int w = window_index.at({i, delta});
      if (p > q) {
        conj.push_back(atom(z_index[i], {1}));
        conj.push_back(atom(w + 1, {1}));   // W2 > 0
        conj.push_back(atom(w + 0, {-1}));  // W1 < 0
      } else {
        conj.push_back(atom(z_index[i], {-1}));
        conj.push_back(atom(w + 2, {1}));   // W3 > 0
        conj.push_back(atom(w + 3, {-1}));  // W4 < 0
      }
    }
    for (std::size_t a = 0; a < in_m.size(); ++a)
      for (std::size_t b = a + 1; b < in_m.size(); ++b) {
        conj.push_back(SignFormula::negation(earlier(in_m[a], in_m[b])));
        conj.push_back(SignFormula::negation(later(in_m[a], in_m[b])));
      }
    int rep = in_m[0];
    for (int i = 0; i < k; ++i) {
      if (std::find(in_m.begin(), in_m.end(), i) != in_m.end()) continue;
      // axis i is not minimal: either it never differs or differs later
      SignFormula laterf =
          i < rep ? later(i, rep) : earlier(rep, i);
      scenarios_push_helper:;
      conj.push_back(SignFormula::disjunction(
          {atom(z_index[i], {0}), std::move(laterf)}));
    }
    scenarios.push_back(SignFormula::conjunction(std::move(conj)));
  }
  pred.formula = SignFormula::disjunction(std::move(scenarios));

  PartiteHypergraph g;
  g.uniformity = 2;
  g.dim = 2 * k;
  g.family = "blowup";
  g.symmetric = true;
  g.parts = {ps, ps};
  g.predicate = std::move(pred);
  g.validate();
  inst.graph = std::move(g);
  return inst;
}

bool BlowupInstance::reference_adjacent(std::size_t va, std::size_t vb) const {
  const auto& a = digits[va];
  const auto& b = digits[vb];
  for (int j = 0; j < cfg.r; ++j) {
    bool differ = false;
    for (int i = 0; i < cfg.k; ++i)
      if (a[j * cfg.k + i] != b[j * cfg.k + i]) differ = true;
    if (differ) {
      std::span<const long> ba(a.data() + static_cast<std::size_t>(j) * cfg.k, cfg.k);
      std::span<const long> bb(b.data() + static_cast<std::size_t>(j) * cfg.k, cfg.k);
      return base.adjacent(ba, bb);
    }
  }
  return false;  // identical vertices
}

PartiteHypergraph generate(const std::string& family, const Json& params) {
  auto geti = [&](const char* key, std::optional<int> def = std::nullopt) {
    if (params.contains(key)) return params.at(key).get<int>();
    if (def) return *def;
    throw input_error(std::string("family '") + family + "' requires parameter '" +
                      key + "'");
  };
  if (family == "grid") return make_grid_graph(geti("d"), geti("m"));
  if (family == "grid_sym") return make_grid_symmetric(geti("d"), geti("m"));
  if (family == "stripes") return make_stripes_graph(geti("D"), geti("d"), geti("m"));
  if (family == "stripes_sym") return make_stripes_symmetric(geti("k"), geti("m"));
  if (family == "interval") return make_interval_graph(geti("n"), geti("w"));
  if (family == "unit_distance") {
    int n = geti("n");
    Rational d2 = params.contains("dist2")
                      ? rational_from_string(params.at("dist2").get<std::string>())
                      : Rational(1);
    return make_unit_distance_graph(grid_points(2, n), d2);
  }
  if (family == "point_line") return make_point_line_graph(geti("n"));
  if (family == "equilateral") {
    return make_equilateral_hypergraph(grid_points(2, geti("m")));
  }
  if (family == "random_points") {
    int n = geti("n"), d = geti("d");
    std::uint64_t seed = params.value("seed", 1);
    PointSet p = random_points(n, d, seed);
    Rational d2 = params.contains("dist2")
                      ? rational_from_string(params.at("dist2").get<std::string>())
                      : Rational(1);
    return make_unit_distance_graph(p, d2);
  }
  if (family == "blowup") {
    BlowupConfig cfg;
    cfg.t = geti("t", 2);
    cfg.k = geti("k", 1);
    cfg.r = geti("r", 1);
    cfg.seed = params.value("seed", 1);
    return make_blowup_instance(cfg).graph;
  }
  if (family == "complete_bipartite") {
    int n1 = geti("n1"), n2 = geti("n2");
    return make_complete({grid_points(1, n1), grid_points(1, n2)});
  }
  throw input_error("unknown family '" + family + "'");
}

}  // namespace semialg
