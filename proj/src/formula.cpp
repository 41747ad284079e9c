#include "semialg/formula.hpp"

#include <algorithm>

namespace semialg {

SignFormula SignFormula::even_parity(std::vector<SignFormula> fs) {
  if (fs.empty()) return constant(true);
  // XOR(a,b) = (a & !b) | (!a & b); fold as a balanced tree, then negate,
  // since even parity = NOT (odd parity) and the fold computes XOR of all.
  std::vector<SignFormula> layer = std::move(fs);
  while (layer.size() > 1) {
    std::vector<SignFormula> next;
    for (std::size_t i = 0; i + 1 < layer.size(); i += 2) {
      SignFormula a = layer[i];
      SignFormula b = layer[i + 1];
      std::vector<SignFormula> lhs;
      lhs.push_back(a);
      lhs.push_back(negation(b));
      std::vector<SignFormula> rhs;
      rhs.push_back(negation(std::move(a)));
      rhs.push_back(std::move(b));
      std::vector<SignFormula> both;
      both.push_back(conjunction(std::move(lhs)));
      both.push_back(conjunction(std::move(rhs)));
      next.push_back(disjunction(std::move(both)));
    }
    if (layer.size() % 2 == 1) next.push_back(std::move(layer.back()));
    layer = std::move(next);
  }
  return negation(std::move(layer[0]));
}

bool SignFormula::eval(std::span<const int> signs) const {
  switch (op) {
    case Op::True:
      return true;
    case Op::False:
      return false;
    case Op::Atom:
      return allowed[signs[poly] + 1];
    case Op::Not:
      return !args[0].eval(signs);
    case Op::And:
      for (const auto& a : args)
        if (!a.eval(signs)) return false;
      return true;
    case Op::Or:
      for (const auto& a : args)
        if (a.eval(signs)) return true;
      return false;
  }
  return false;
}

int SignFormula::max_atom_index() const {
  int m = -1;
  if (op == Op::Atom) return poly;
  for (const auto& a : args) m = std::max(m, a.max_atom_index());
  return m;
}

Json SignFormula::to_json() const {
  Json j;
  switch (op) {
    case Op::True:
      j["op"] = "true";
      break;
    case Op::False:
      j["op"] = "false";
      break;
    case Op::Atom: {
      j["op"] = "atom";
      j["poly"] = poly;
      Json signs = Json::array();
      for (int s = -1; s <= 1; ++s)
        if (allowed[s + 1]) signs.push_back(s);
      j["signs"] = std::move(signs);
      break;
    }
    case Op::Not:
      j["op"] = "not";
      j["args"] = Json::array({args[0].to_json()});
      break;
    case Op::And:
    case Op::Or: {
      j["op"] = op == Op::And ? "and" : "or";
      Json a = Json::array();
      for (const auto& f : args) a.push_back(f.to_json());
      j["args"] = std::move(a);
      break;
    }
  }
  return j;
}

SignFormula SignFormula::from_json(const Json& j) {
  const std::string op = j.at("op").get<std::string>();
  if (op == "true") return constant(true);
  if (op == "false") return constant(false);
  if (op == "atom") {
    SignFormula f;
    f.op = Op::Atom;
    f.poly = j.at("poly").get<int>();
    for (int s : j.at("signs").get<std::vector<int>>()) {
      if (s < -1 || s > 1) throw input_error("formula atom sign outside {-1,0,1}");
      f.allowed[s + 1] = true;
    }
    return f;
  }
  std::vector<SignFormula> args;
  for (const auto& a : j.at("args")) args.push_back(from_json(a));
  if (op == "not") {
    if (args.size() != 1) throw input_error("'not' takes exactly one operand");
    return negation(std::move(args[0]));
  }
  if (op == "and") return conjunction(std::move(args));
  if (op == "or") return disjunction(std::move(args));
  throw input_error("unknown formula op '" + op + "'");
}

bool SignPredicate::eval(std::span<const Rational> coords) const {
  if (static_cast<int>(coords.size()) != arity)
    throw input_error("predicate: coordinate arity mismatch");
  std::vector<int> signs(polys.size());
  for (std::size_t r = 0; r < polys.size(); ++r) signs[r] = polys[r].sign_at(coords);
  return formula.eval(signs);
}

SignPredicate SignPredicate::complement() const {
  SignPredicate c = *this;
  c.formula = SignFormula::negation(std::move(c.formula));
  return c;
}

void SignPredicate::validate() const {
  for (const auto& p : polys)
    if (p.arity() != arity) throw input_error("predicate polynomial arity mismatch");
  if (formula.max_atom_index() >= static_cast<int>(polys.size()))
    throw input_error("formula references a polynomial index out of range");
}

Json SignPredicate::to_json() const {
  Json j;
  j["arity"] = arity;
  Json ps = Json::array();
  for (const auto& p : polys) ps.push_back(p.to_json());
  j["polys"] = std::move(ps);
  j["formula"] = formula.to_json();
  return j;
}

SignPredicate SignPredicate::from_json(const Json& j) {
  SignPredicate p;
  p.arity = j.at("arity").get<int>();
  for (const auto& pj : j.at("polys")) p.polys.push_back(Polynomial::from_json(pj));
  p.formula = SignFormula::from_json(j.at("formula"));
  p.validate();
  return p;
}

}  // namespace semialg
