#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "semialg/formula.hpp"
#include "semialg/points.hpp"

namespace semialg {

inline constexpr std::uint64_t kDefaultTupleBudget = 100'000'000ULL;

// k-partite k-uniform semialgebraic hypergraph. Edges are implicit: a tuple
// (one point per part) is an edge iff the predicate holds on the concatenated
// coordinates. `symmetric` marks single-vertex-set instances represented as k
// identical parts; measurement code then restricts to distinct-index tuples.
struct PartiteHypergraph {
  int uniformity = 0;
  int dim = 0;
  std::vector<PointSet> parts;
  SignPredicate predicate;
  bool symmetric = false;
  std::string family;

  void validate() const;

  // Number of point tuples (product of part sizes).
  Integer tuple_count() const;

  bool is_edge(std::span<const std::size_t> tuple) const;
  bool is_edge_pair(std::size_t a, std::size_t b) const;  // uniformity 2 shortcut

  // Exact |E| by enumeration. Refuses when the tuple count exceeds `budget`.
  std::uint64_t count_edges_bruteforce(std::uint64_t budget = kDefaultTupleBudget,
                                       int workers = 1) const;

  Json to_json() const;
  static PartiteHypergraph from_json(const Json& j);
};

// Odometer over index tuples with mixed radices; calls fn(tuple) for each.
template <typename Fn>
void for_each_tuple(const std::vector<std::size_t>& radices, Fn&& fn) {
  std::vector<std::size_t> t(radices.size(), 0);
  for (std::size_t r : radices)
    if (r == 0) return;
  while (true) {
    fn(std::as_const(t));
    std::size_t i = t.size();
    while (i > 0) {
      --i;
      if (++t[i] < radices[i]) break;
      t[i] = 0;
      if (i == 0) return;
    }
  }
}

}  // namespace semialg
