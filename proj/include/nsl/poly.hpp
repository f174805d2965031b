#pragma once

#include <nsl/monomial.hpp>
#include <nsl/quadext.hpp>
#include <nsl/rational.hpp>

#include <string>
#include <vector>

namespace nsl {

struct Term {
  Rational c;
  Monomial m;
  friend bool operator==(const Term&, const Term&) = default;
};

// Sparse multivariate polynomial over Q. Terms are kept strictly descending
// under the order of the ring the polynomial lives in; the order is passed
// to every operation that needs it rather than stored per polynomial.
class Poly {
public:
  Poly() = default;
  explicit Poly(std::size_t nvars) : nvars_(nvars) {}

  static Poly constant(std::size_t nvars, const Rational& c);
  static Poly variable(std::size_t nvars, std::size_t i);
  // Sorts descending, merges equal monomials, drops zero coefficients.
  static Poly from_terms(std::size_t nvars, std::vector<Term> terms, const MonomialOrder& ord);
  // Adopts a term list that is already strictly descending with no zeros.
  static Poly assemble(std::size_t nvars, std::vector<Term> sorted);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return t_.empty(); }
  const std::vector<Term>& terms() const { return t_; }
  const Term& leading() const;
  const Monomial& leading_monomial() const { return leading().m; }
  const Rational& leading_coeff() const { return leading().c; }
  std::uint64_t degree() const;  // max total degree over terms; 0 for the zero polynomial

  friend bool operator==(const Poly&, const Poly&) = default;

private:
  std::size_t nvars_ = 0;
  std::vector<Term> t_;
};

Poly neg(const Poly& f);
Poly scale(const Poly& f, const Rational& c);
Poly add(const Poly& f, const Poly& g, const MonomialOrder& ord);
Poly sub(const Poly& f, const Poly& g, const MonomialOrder& ord);
Poly mul(const Poly& f, const Poly& g, const MonomialOrder& ord);
Poly mul_term(const Poly& f, const Term& t);  // multiplying by one term keeps the sort
Poly monic(const Poly& f);
Poly pow(const Poly& f, std::uint32_t k, const MonomialOrder& ord);

// Polynomial ring: named variables plus a monomial order. Variable 0 is the
// biggest variable in every order kind.
struct Ring {
  std::vector<std::string> vars;
  MonomialOrder order = MonomialOrder::grevlex();

  std::size_t nvars() const { return vars.size(); }
  std::size_t var_index(const std::string& name) const;

  // Accepts "t_8^2-48t_8t_9-172/3t_9^2" style input: optional '*' between
  // factors, juxtaposition allowed, '^' powers, rational coefficients.
  Poly parse(const std::string& s) const;
  std::string str(const Poly& f) const;
  std::string str(const Monomial& m) const;
};

template <class T, class Lift>
T evaluate(const Poly& f, const std::vector<T>& x, Lift lift) {
  T acc = lift(Rational(0));
  for (const auto& t : f.terms()) {
    T v = lift(t.c);
    for (std::size_t i = 0; i < f.nvars(); ++i)
      for (std::uint32_t k = 0; k < t.m[i]; ++k) v = v * x[i];
    acc = acc + v;
  }
  return acc;
}

inline Rational evaluate(const Poly& f, const std::vector<Rational>& x) {
  return evaluate(f, x, [](const Rational& c) { return c; });
}

inline QuadExt evaluate(const Poly& f, const std::vector<QuadExt>& x) {
  return evaluate(f, x, [](const Rational& c) { return QuadExt::from_rational(c); });
}

}  // namespace nsl
