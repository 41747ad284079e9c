#pragma once

#include <array>
#include <memory>
#include <span>
#include <vector>

#include "semialg/json.hpp"
#include "semialg/polynomial.hpp"
#include "semialg/rational.hpp"

namespace semialg {

// Boolean expression tree over sign atoms. An atom holds for sign s in
// {-1,0,+1} iff the corresponding allowed flag is set.
struct SignFormula {
  enum class Op { Atom, And, Or, Not, True, False };

  Op op = Op::False;
  int poly = -1;                            // atom: index into the predicate's polynomials
  std::array<bool, 3> allowed{};            // atom: flags for signs -1, 0, +1
  std::vector<SignFormula> args;

  static SignFormula constant(bool v) {
    SignFormula f;
    f.op = v ? Op::True : Op::False;
    return f;
  }
  static SignFormula atom(int poly_index, std::initializer_list<int> signs) {
    SignFormula f;
    f.op = Op::Atom;
    f.poly = poly_index;
    for (int s : signs) f.allowed[s + 1] = true;
    return f;
  }
  static SignFormula negation(SignFormula f) {
    SignFormula r;
    r.op = Op::Not;
    r.args.push_back(std::move(f));
    return r;
  }
  static SignFormula conjunction(std::vector<SignFormula> fs) {
    if (fs.empty()) return constant(true);
    if (fs.size() == 1) return std::move(fs[0]);
    SignFormula r;
    r.op = Op::And;
    r.args = std::move(fs);
    return r;
  }
  static SignFormula disjunction(std::vector<SignFormula> fs) {
    if (fs.empty()) return constant(false);
    if (fs.size() == 1) return std::move(fs[0]);
    SignFormula r;
    r.op = Op::Or;
    r.args = std::move(fs);
    return r;
  }
  // Balanced tree computing "the number of true operands is even".
  static SignFormula even_parity(std::vector<SignFormula> fs);

  bool eval(std::span<const int> signs) const;
  int max_atom_index() const;

  Json to_json() const;
  static SignFormula from_json(const Json& j);
};

// The edge rule of a semialgebraic hypergraph: polynomials g_1..g_t over the
// concatenated coordinates plus a Boolean formula over their signs.
struct SignPredicate {
  int arity = 0;
  std::vector<Polynomial> polys;
  SignFormula formula;

  // Sum of the degrees of the defining polynomials.
  int total_degree() const {
    int d = 0;
    for (const auto& p : polys) d += p.total_degree();
    return d;
  }

  bool eval(std::span<const Rational> coords) const;
  SignPredicate complement() const;
  void validate() const;

  Json to_json() const;
  static SignPredicate from_json(const Json& j);
};

}  // namespace semialg
