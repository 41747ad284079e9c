#include "semialg/hypergraph.hpp"

#include <atomic>

#include "semialg/parallel.hpp"

namespace semialg {

void PartiteHypergraph::validate() const {
  if (uniformity < 1) throw input_error("hypergraph uniformity must be >= 1");
  if (static_cast<int>(parts.size()) != uniformity)
    throw input_error("hypergraph must have one part per uniformity slot");
  for (const auto& p : parts) {
    p.validate();
    if (p.dim != dim) throw input_error("all parts must share the ambient dimension");
  }
  if (predicate.arity != uniformity * dim)
    throw input_error("predicate arity must equal uniformity * dimension");
  predicate.validate();
}

Integer PartiteHypergraph::tuple_count() const {
  Integer n = 1;
  for (const auto& p : parts) n *= static_cast<unsigned long>(p.size());
  return n;
}

bool PartiteHypergraph::is_edge(std::span<const std::size_t> tuple) const {
  if (tuple.size() != parts.size()) throw input_error("is_edge: tuple length mismatch");
  std::vector<Rational> coords;
  coords.reserve(static_cast<std::size_t>(predicate.arity));
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (tuple[i] >= parts[i].size()) throw input_error("is_edge: index out of range");
    const Point& p = parts[i].pts[tuple[i]];
    coords.insert(coords.end(), p.begin(), p.end());
  }
  return predicate.eval(coords);
}

bool PartiteHypergraph::is_edge_pair(std::size_t a, std::size_t b) const {
  std::size_t t[2] = {a, b};
  return is_edge(std::span<const std::size_t>(t, 2));
}

std::uint64_t PartiteHypergraph::count_edges_bruteforce(std::uint64_t budget,
                                                        int workers) const {
  Integer total = tuple_count();
  if (total > Integer(budget))
    throw budget_error("edge enumeration needs " + total.get_str() +
                       " tuples, budget is " + std::to_string(budget));
  if (total == 0) return 0;

  std::vector<std::size_t> radices;
  for (std::size_t i = 1; i < parts.size(); ++i) radices.push_back(parts[i].size());

  std::atomic<std::uint64_t> count{0};
  shard_range(parts[0].size(), workers, [&](std::size_t, std::size_t begin, std::size_t end) {
    std::uint64_t local = 0;
    std::vector<std::size_t> tuple(parts.size());
    for (std::size_t first = begin; first < end; ++first) {
      tuple[0] = first;
      if (parts.size() == 1) {
        if (is_edge(tuple)) ++local;
        continue;
      }
      for_each_tuple(radices, [&](const std::vector<std::size_t>& rest) {
        for (std::size_t i = 0; i < rest.size(); ++i) tuple[i + 1] = rest[i];
        if (symmetric) {
          for (std::size_t i = 0; i + 1 < tuple.size(); ++i)
            for (std::size_t j = i + 1; j < tuple.size(); ++j)
              if (tuple[i] == tuple[j]) return;
        }
        if (is_edge(tuple)) ++local;
      });
    }
    count += local;
  });
  return count.load();
}

Json PartiteHypergraph::to_json() const {
  Json j;
  j["uniformity"] = uniformity;
  j["dim"] = dim;
  j["symmetric"] = symmetric;
  j["family"] = family;
  Json ps = Json::array();
  for (const auto& p : parts) ps.push_back(p.to_json());
  j["parts"] = std::move(ps);
  j["predicate"] = predicate.to_json();
  return j;
}

PartiteHypergraph PartiteHypergraph::from_json(const Json& j) {
  PartiteHypergraph h;
  h.uniformity = j.at("uniformity").get<int>();
  h.dim = j.at("dim").get<int>();
  h.symmetric = j.value("symmetric", false);
  h.family = j.value("family", std::string());
  for (const auto& pj : j.at("parts")) h.parts.push_back(PointSet::from_json(pj));
  h.predicate = SignPredicate::from_json(j.at("predicate"));
  h.validate();
  return h;
}

}  // namespace semialg
