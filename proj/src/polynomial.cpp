#include "semialg/polynomial.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace semialg {

int monomial_cmp(const std::vector<unsigned>& a, const std::vector<unsigned>& b) {
  unsigned da = std::accumulate(a.begin(), a.end(), 0u);
  unsigned db = std::accumulate(b.begin(), b.end(), 0u);
  if (da != db) return da < db ? -1 : 1;
  // within a degree, lexicographically larger tuple comes first
  if (a > b) return -1;
  if (a < b) return 1;
  return 0;
}

Polynomial Polynomial::constant(int arity, const Rational& c) {
  Polynomial p(arity);
  p.add_term(std::vector<unsigned>(arity, 0), c);
  p.finalize();
  return p;
}

Polynomial Polynomial::variable(int arity, int index) {
  if (index < 0 || index >= arity) throw input_error("variable index out of range");
  Polynomial p(arity);
  std::vector<unsigned> e(arity, 0);
  e[index] = 1;
  p.add_term(std::move(e), 1);
  p.finalize();
  return p;
}

void Polynomial::add_term(std::vector<unsigned> exp, const Rational& coef) {
  if (static_cast<int>(exp.size()) != arity_)
    throw input_error("term exponent tuple has wrong length");
  exps_.push_back(std::move(exp));
  coefs_.push_back(coef);
}

void Polynomial::finalize() {
  std::vector<std::size_t> order(exps_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return monomial_cmp(exps_[i], exps_[j]) < 0;
  });
  std::vector<std::vector<unsigned>> exps;
  std::vector<Rational> coefs;
  for (std::size_t i : order) {
    if (!exps.empty() && exps.back() == exps_[i]) {
      coefs.back() += coefs_[i];
      if (coefs.back() == 0) {
        coefs.pop_back();
        exps.pop_back();
      }
    } else if (coefs_[i] != 0) {
      exps.push_back(exps_[i]);
      coefs.push_back(coefs_[i]);
    }
  }
  exps_ = std::move(exps);
  coefs_ = std::move(coefs);

  Integer lcm = 1;
  for (const auto& c : coefs_)
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
  zcoefs_.clear();
  zcoefs_.reserve(coefs_.size());
  for (const auto& c : coefs_) zcoefs_.push_back(Integer(c.get_num() * (lcm / c.get_den())));
}

int Polynomial::total_degree() const {
  if (exps_.empty()) return 0;
  // canonical order puts the highest-degree terms last
  return static_cast<int>(
      std::accumulate(exps_.back().begin(), exps_.back().end(), 0u));
}

namespace {

// power tables keyed by the maximal exponent actually used per variable
template <typename T>
std::vector<std::vector<T>> power_table(std::span<const T> x,
                                        const std::vector<std::vector<unsigned>>& exps) {
  std::vector<unsigned> maxe(x.size(), 0);
  for (const auto& e : exps)
    for (std::size_t v = 0; v < e.size(); ++v) maxe[v] = std::max(maxe[v], e[v]);
  std::vector<std::vector<T>> pw(x.size());
  for (std::size_t v = 0; v < x.size(); ++v) {
    pw[v].resize(maxe[v] + 1);
    pw[v][0] = 1;
    for (unsigned k = 1; k <= maxe[v]; ++k) pw[v][k] = pw[v][k - 1] * x[v];
  }
  return pw;
}

}  // namespace

Rational Polynomial::eval(std::span<const Rational> x) const {
  if (static_cast<int>(x.size()) != arity_)
    throw input_error("eval: point arity mismatch");
  auto pw = power_table<Rational>(x, exps_);
  Rational acc = 0;
  Rational prod;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    prod = coefs_[i];
    const auto& e = exps_[i];
    for (int v = 0; v < arity_; ++v)
      if (e[v]) prod *= pw[v][e[v]];
    acc += prod;
  }
  return acc;
}

int Polynomial::sign_at(std::span<const Rational> x) const {
  if (static_cast<int>(x.size()) != arity_)
    throw input_error("sign_at: point arity mismatch");
  bool integral = true;
  for (const auto& q : x)
    if (q.get_den() != 1) {
      integral = false;
      break;
    }
  if (!integral) return sgn(eval(x));
  // integer fast path: scaled coefficients and integer coordinates
  std::vector<Integer> xi;
  xi.reserve(x.size());
  for (const auto& q : x) xi.push_back(q.get_num());
  auto pw = power_table<Integer>(std::span<const Integer>(xi), exps_);
  Integer acc = 0;
  Integer prod;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    prod = zcoefs_[i];
    const auto& e = exps_[i];
    for (int v = 0; v < arity_; ++v)
      if (e[v]) prod *= pw[v][e[v]];
    acc += prod;
  }
  return sgn(acc);
}

Polynomial Polynomial::partial_eval(int first, std::span<const Rational> values) const {
  int len = static_cast<int>(values.size());
  if (first < 0 || first + len > arity_)
    throw input_error("partial_eval: block out of range");
  int rest = arity_ - len;
  std::vector<unsigned> maxe(len, 0);
  for (const auto& e : exps_)
    for (int v = 0; v < len; ++v) maxe[v] = std::max(maxe[v], e[first + v]);
  std::vector<std::vector<Rational>> pw(len);
  for (int v = 0; v < len; ++v) {
    pw[v].resize(maxe[v] + 1);
    pw[v][0] = 1;
    for (unsigned k = 1; k <= maxe[v]; ++k) pw[v][k] = pw[v][k - 1] * values[v];
  }
  Polynomial out(rest);
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    const auto& e = exps_[i];
    Rational c = coefs_[i];
    for (int v = 0; v < len; ++v)
      if (e[first + v]) c *= pw[v][e[first + v]];
    std::vector<unsigned> re;
    re.reserve(rest);
    for (int v = 0; v < arity_; ++v)
      if (v < first || v >= first + len) re.push_back(e[v]);
    out.add_term(std::move(re), c);
  }
  out.finalize();
  return out;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  if (arity_ != o.arity_) throw input_error("polynomial arity mismatch");
  Polynomial r(arity_);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.add_term(exps_[i], coefs_[i]);
  for (std::size_t i = 0; i < o.exps_.size(); ++i) r.add_term(o.exps_[i], o.coefs_[i]);
  r.finalize();
  return r;
}

Polynomial Polynomial::negate() const {
  Polynomial r(arity_);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.add_term(exps_[i], Rational(-coefs_[i]));
  r.finalize();
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + o.negate(); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (arity_ != o.arity_) throw input_error("polynomial arity mismatch");
  Polynomial r(arity_);
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    for (std::size_t j = 0; j < o.exps_.size(); ++j) {
      std::vector<unsigned> e(arity_);
      for (int v = 0; v < arity_; ++v) e[v] = exps_[i][v] + o.exps_[j][v];
      r.add_term(std::move(e), Rational(coefs_[i] * o.coefs_[j]));
    }
  }
  r.finalize();
  return r;
}

Json Polynomial::to_json() const {
  Json terms = Json::array();
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    Json t;
    t["exp"] = exps_[i];
    t["num"] = coefs_[i].get_num().get_str();
    t["den"] = coefs_[i].get_den().get_str();
    terms.push_back(std::move(t));
  }
  Json j;
  j["arity"] = arity_;
  j["terms"] = std::move(terms);
  return j;
}

Polynomial Polynomial::from_json(const Json& j) {
  Polynomial p(j.at("arity").get<int>());
  for (const auto& t : j.at("terms")) {
    auto exp = t.at("exp").get<std::vector<unsigned>>();
    Integer num(t.at("num").get<std::string>());
    Integer den(t.at("den").get<std::string>());
    p.add_term(std::move(exp), make_rational(num, den));
  }
  p.finalize();
  return p;
}

std::string Polynomial::to_string(const std::vector<std::string>& var_names) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (i) os << " + ";
    os << "(" << rational_to_string(coefs_[i]) << ")";
    for (int v = 0; v < arity_; ++v) {
      if (exps_[i][v]) {
        os << "*";
        if (static_cast<std::size_t>(v) < var_names.size())
          os << var_names[v];
        else
          os << "x" << v;
        if (exps_[i][v] > 1) os << "^" << exps_[i][v];
      }
    }
  }
  return os.str();
}

Integer binomial(unsigned n, unsigned k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

namespace {

void enumerate_degree(int dim, unsigned deg, std::vector<unsigned>& cur, int pos,
                      unsigned left, std::vector<std::vector<unsigned>>& out) {
  if (pos == dim - 1) {
    cur[pos] = left;
    out.push_back(cur);
    return;
  }
  // descending first coordinate gives the canonical within-degree order
  for (int e = static_cast<int>(left); e >= 0; --e) {
    cur[pos] = static_cast<unsigned>(e);
    enumerate_degree(dim, deg, cur, pos + 1, left - e, out);
  }
}

}  // namespace

VeroneseMap VeroneseMap::make(int dim, int degree) {
  if (dim < 1 || degree < 1) throw input_error("veronese: dim and degree must be >= 1");
  VeroneseMap m;
  m.dim = dim;
  m.degree = degree;
  std::vector<unsigned> cur(dim, 0);
  for (unsigned deg = 1; deg <= static_cast<unsigned>(degree); ++deg)
    enumerate_degree(dim, deg, cur, 0, deg, m.index);
  return m;
}

std::vector<Rational> VeroneseMap::lift(std::span<const Rational> x) const {
  if (static_cast<int>(x.size()) != dim) throw input_error("veronese lift: arity mismatch");
  std::vector<std::vector<Rational>> pw(dim);
  for (int v = 0; v < dim; ++v) {
    pw[v].resize(degree + 1);
    pw[v][0] = 1;
    for (int k = 1; k <= degree; ++k) pw[v][k] = pw[v][k - 1] * x[v];
  }
  std::vector<Rational> out;
  out.reserve(index.size());
  for (const auto& e : index) {
    Rational prod = 1;
    for (int v = 0; v < dim; ++v)
      if (e[v]) prod *= pw[v][e[v]];
    out.push_back(prod);
  }
  return out;
}

std::vector<double> VeroneseMap::lift_double(std::span<const double> x) const {
  std::vector<std::vector<double>> pw(dim);
  for (int v = 0; v < dim; ++v) {
    pw[v].resize(degree + 1);
    pw[v][0] = 1.0;
    for (int k = 1; k <= degree; ++k) pw[v][k] = pw[v][k - 1] * x[v];
  }
  std::vector<double> out;
  out.reserve(index.size());
  for (const auto& e : index) {
    double prod = 1.0;
    for (int v = 0; v < dim; ++v)
      if (e[v]) prod *= pw[v][e[v]];
    out.push_back(prod);
  }
  return out;
}

Polynomial VeroneseMap::assemble(std::span<const Rational> coeffs,
                                 const Rational& constant) const {
  if (coeffs.size() != index.size())
    throw input_error("veronese assemble: coefficient count mismatch");
  Polynomial p(dim);
  if (constant != 0) p.add_term(std::vector<unsigned>(dim, 0), constant);
  for (std::size_t i = 0; i < index.size(); ++i)
    if (coeffs[i] != 0) p.add_term(index[i], coeffs[i]);
  p.finalize();
  return p;
}

}  // namespace semialg
