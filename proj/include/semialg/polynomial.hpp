#pragma once

#include <span>
#include <string>
#include <vector>

#include "semialg/json.hpp"
#include "semialg/rational.hpp"

namespace semialg {

// Canonical monomial order used everywhere (storage, serialization, Veronese
// index): ascending total degree, ties broken by lexicographically larger
// exponent tuple first. For d=2, t=2 the nonconstant monomials come out as
// x, y, x^2, xy, y^2.
int monomial_cmp(const std::vector<unsigned>& a, const std::vector<unsigned>& b);

inline const char* kMonomialOrderId = "graded-lex-desc";

// Sparse multivariate polynomial with exact rational coefficients.
// Invariants: terms sorted in the canonical monomial order, exponent tuples
// distinct, no zero coefficients. The zero polynomial has no terms and total
// degree 0 by convention.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(int arity) : arity_(arity) {}

  static Polynomial zero(int arity) { return Polynomial(arity); }
  static Polynomial constant(int arity, const Rational& c);
  static Polynomial variable(int arity, int index);

  void add_term(std::vector<unsigned> exp, const Rational& coef);
  void finalize();  // sort, merge duplicates, drop zeros, build integer cache

  int arity() const { return arity_; }
  bool is_zero() const { return exps_.empty(); }
  int total_degree() const;
  std::size_t term_count() const { return exps_.size(); }
  const std::vector<unsigned>& exponent(std::size_t i) const { return exps_[i]; }
  const Rational& coefficient(std::size_t i) const { return coefs_[i]; }

  Rational eval(std::span<const Rational> x) const;
  int sign_at(std::span<const Rational> x) const;

  // Substitutes values for the contiguous variable block
  // [first, first + values.size()), returning a polynomial in the remaining
  // variables (their order preserved).
  Polynomial partial_eval(int first, std::span<const Rational> values) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial negate() const;

  bool operator==(const Polynomial& o) const {
    return arity_ == o.arity_ && exps_ == o.exps_ && coefs_ == o.coefs_;
  }

  Json to_json() const;
  static Polynomial from_json(const Json& j);
  std::string to_string(const std::vector<std::string>& var_names = {}) const;

 private:
  int arity_ = 0;
  std::vector<std::vector<unsigned>> exps_;
  std::vector<Rational> coefs_;
  // Integer fast path: coefficients scaled by the lcm of their denominators.
  std::vector<Integer> zcoefs_;
};

// All monomials x^e with 1 <= |e| <= degree over `dim` variables, in the
// canonical order. A linear functional on the image plus a constant equals a
// polynomial of degree <= `degree` on the source space.
struct VeroneseMap {
  int dim = 0;
  int degree = 0;
  std::vector<std::vector<unsigned>> index;

  static VeroneseMap make(int dim, int degree);
  std::size_t image_dim() const { return index.size(); }
  std::vector<Rational> lift(std::span<const Rational> x) const;
  std::vector<double> lift_double(std::span<const double> x) const;
  // coeffs in index order; builds sum_i coeffs[i] * x^{index[i]} + constant.
  Polynomial assemble(std::span<const Rational> coeffs,
                      const Rational& constant) const;
};

Integer binomial(unsigned n, unsigned k);

}  // namespace semialg
