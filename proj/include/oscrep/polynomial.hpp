#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "oscrep/monomial.hpp"
#include "oscrep/rational.hpp"

namespace oscrep {

/// Sparse multivariate polynomial with exact rational coefficients.
/// Zero coefficients are never stored; the term map iterates in the
/// canonical monomial order.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational>;

  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Rational& c);
  static Polynomial variable(std::size_t nvars, std::size_t index, int power = 1);
  static Polynomial from_monomial(const Monomial& m, const Rational& coeff = Rational(1));

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;  // -1 for the zero polynomial
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  Rational coeff(const Monomial& m) const;

  /// Accumulates c * m into the polynomial, dropping the term if it cancels.
  void add_term(const Monomial& m, const Rational& c);

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& q);
  Polynomial& operator-=(const Polynomial& q);
  Polynomial& operator*=(const Rational& s);

  friend Polynomial operator+(Polynomial p, const Polynomial& q) { p += q; return p; }
  friend Polynomial operator-(Polynomial p, const Polynomial& q) { p -= q; return p; }
  friend Polynomial operator*(Polynomial p, const Rational& s) { p *= s; return p; }
  friend Polynomial operator*(const Rational& s, Polynomial p) { p *= s; return p; }
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q);

  Polynomial partial(std::size_t i) const;
  Polynomial times_variable(std::size_t i, int power = 1) const;

  bool operator==(const Polynomial& other) const {
    return nvars_ == other.nvars_ && terms_ == other.terms_;
  }
  bool operator!=(const Polynomial& other) const { return !(*this == other); }

 private:
  std::size_t nvars_ = 0;
  TermMap terms_;
};

/// Polynomial times an exponential factor: poly * e^(freq . x). A zero
/// frequency vector makes it behave exactly like the bare polynomial.
struct ExpPoly {
  Polynomial poly;
  std::vector<Rational> freq;

  ExpPoly() = default;
  ExpPoly(Polynomial p, std::vector<Rational> a);

  std::size_t nvars() const { return poly.nvars(); }
  bool freq_is_zero() const;

  bool operator==(const ExpPoly& other) const {
    return poly == other.poly && freq == other.freq;
  }
};

}  // namespace oscrep
