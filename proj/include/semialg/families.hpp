#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "semialg/hypergraph.hpp"

namespace semialg {

// ---- point set builders ----

// Integer grid {1..m}^d in row-major order (first coordinate slowest).
PointSet grid_points(int d, int m, int scale_num = 1, int scale_den = 1);

// n points with dyadic rational coordinates: numerator in [-range, range],
// denominator a power of two up to 16. Dyadic coordinates keep the exact
// evaluators on the integer fast path after clearing denominators.
PointSet random_points(int n, int d, std::uint64_t seed, int range = 4096);

long smallest_prime_greater(long k);

// ---- the parameters of the stripes construction ----
// k = floor(D/d) inequalities per axis; p the smallest prime > k;
// a_i = (i^2 mod p)/p; thresholds c_i = i*m/k + a_i*m/(3k).
struct StripesConfig {
  int D = 0;
  int d = 0;
  int m = 0;
  int k = 0;
  long p = 0;
  std::vector<Rational> a;
  std::vector<Rational> thresholds;

  static StripesConfig make(int D, int d, int m);
};

// ---- bipartite / partite families ----

// Grid graph: P1 = P2 = [m]^d, x ~ y iff x_i = y_i for some axis.
PartiteHypergraph make_grid_graph(int d, int m);
// Same adjacency rule read as a graph on the single vertex set [m]^d.
PartiteHypergraph make_grid_symmetric(int d, int m);

// Stripes graph: P1 = [m]^d, P2 = [2m]^d, x ~ y iff an even number of the
// inequalities y_j - x_j - c_i >= 0 hold.
PartiteHypergraph make_stripes_graph(int D, int d, int m);
// Symmetric stripes variant on [m]: even number of |y - x| >= c_i hold
// (each inequality realized by the quadratic (y-x)^2 - c_i^2).
PartiteHypergraph make_stripes_symmetric(int k, int m);

// Unit-distance graph at squared distance `dist2`, both parts equal to P.
PartiteHypergraph make_unit_distance_graph(const PointSet& p, const Rational& dist2);

// Interval graph on {1..n}: x ~ y iff (x-y)^2 <= w^2, as a symmetric instance.
PartiteHypergraph make_interval_graph(int n, int w);

// Point-line incidences: points (x,y), lines (m,b), edge iff y = m x + b.
// The generator produces the slope/intercept grid configuration with
// ~N^{4/3} incidences; vertical lines never arise.
PartiteHypergraph make_point_line_graph(int n_points);

// Equilateral-triangle 3-uniform hypergraph on three copies of P (d = 2).
PartiteHypergraph make_equilateral_hypergraph(const PointSet& p);

// Complete k-partite predicate (formula identically true) on given parts.
PartiteHypergraph make_complete(std::vector<PointSet> parts);

// ---- iterated-blowup hard instance ----

struct BlowupConfig {
  int t = 2;         // base set size
  int k = 1;         // half-dimension, ambient dimension d = 2k
  int r = 1;         // blowup depth
  std::uint64_t seed = 1;
  int resample_cap = 20;
  int clique_threshold = 0;  // 0 = auto
};

// Base graph G_0 on S^k with adjacency a function of the difference pattern:
// pattern_i = (a_i, b_i) if a_i != b_i else "*" (encoded (0,0)).
struct BlowupBase {
  int t = 0;
  int k = 0;
  std::vector<long> sidon;
  // canonical pattern (lexicographic min of the pattern and its swap) -> edge
  std::map<std::vector<long>, bool> classes;

  std::vector<long> pattern(std::span<const long> a, std::span<const long> b) const;
  static std::vector<long> canonical(std::vector<long> pat);
  bool adjacent(std::span<const long> a, std::span<const long> b) const;
  std::vector<std::vector<long>> vertex_blocks() const;  // S^k in odometer order
};

struct BlowupInstance {
  BlowupConfig cfg;
  std::vector<long> sidon;
  long B = 0;
  BlowupBase base;
  int resamples_used = 0;
  int base_max_clique = -1;  // measured on G_0 (-1 = not measured)
  int base_max_indep = -1;

  // vertex digits, block-major: digits[v][j*k + i] = i-th axis digit of block j
  std::vector<std::vector<long>> digits;
  PartiteHypergraph graph;  // symmetric instance in R^{2k}

  bool reference_adjacent(std::size_t va, std::size_t vb) const;
  std::size_t vertex_count() const { return digits.size(); }
};

std::vector<long> greedy_sidon(int t);
BlowupInstance make_blowup_instance(const BlowupConfig& cfg);

// Exact max clique / independent set on <= 64 vertices (bitmask search).
int max_clique_bitset(const std::vector<std::uint64_t>& adj);

// ---- harness entry point ----
// Families: grid, grid_sym, stripes, stripes_sym, unit_distance, point_line,
// equilateral, blowup, random_points, interval, complete_bipartite.
PartiteHypergraph generate(const std::string& family, const Json& params);

}  // namespace semialg
