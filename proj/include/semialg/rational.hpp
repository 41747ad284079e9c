#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace semialg {

using Integer = mpz_class;
using Rational = mpq_class;

struct input_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct budget_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw input_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational rational_from_string(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(Integer(s));
    }
    Integer num(s.substr(0, slash));
    Integer den(s.substr(slash + 1));
    return make_rational(num, den);
  } catch (const std::invalid_argument&) {
    throw input_error("malformed rational: '" + s + "'");
  }
}

inline std::string rational_to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Integer int_pow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Rational rat_pow(const Rational& base, unsigned long e) {
  return make_rational(int_pow(base.get_num(), e), int_pow(base.get_den(), e));
}

inline Rational rat_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

// Smallest integer c with c >= q.
inline Integer rat_ceil(const Rational& q) {
  Integer c;
  mpz_cdiv_q(c.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return c;
}

inline Integer rat_floor(const Rational& q) {
  Integer c;
  mpz_fdiv_q(c.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return c;
}

inline long rat_ceil_long(const Rational& q) { return rat_ceil(q).get_si(); }

}  // namespace semialg
