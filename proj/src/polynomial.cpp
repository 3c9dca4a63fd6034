#include "oscrep/polynomial.hpp"

#include <stdexcept>

namespace oscrep {

namespace {

void check_same_nvars(const Polynomial& p, const Polynomial& q, const char* op) {
  if (p.nvars() != q.nvars()) {
    throw std::invalid_argument(std::string(op) + ": variable count mismatch");
  }
}

}  // namespace

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(Monomial(nvars), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index, int power) {
  Polynomial p(nvars);
  p.add_term(Monomial::variable(nvars, index, power), Rational(1));
  return p;
}

Polynomial Polynomial::from_monomial(const Monomial& m, const Rational& coeff) {
  Polynomial p(m.nvars());
  p.add_term(m, coeff);
  return p;
}

int Polynomial::degree() const {
  if (terms_.empty()) return -1;
  return terms_.rbegin()->first.degree();
}

Rational Polynomial::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (m.nvars() != nvars_) throw std::invalid_argument("Polynomial::add_term: variable count mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial out(nvars_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& q) {
  check_same_nvars(*this, q, "Polynomial::operator+=");
  for (const auto& [m, c] : q.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& q) {
  check_same_nvars(*this, q, "Polynomial::operator-=");
  for (const auto& [m, c] : q.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  check_same_nvars(p, q, "Polynomial::operator*");
  Polynomial out(p.nvars());
  for (const auto& [mp, cp] : p.terms()) {
    for (const auto& [mq, cq] : q.terms()) {
      out.add_term(mp.times(mq), cp * cq);
    }
  }
  return out;
}

Polynomial Polynomial::partial(std::size_t i) const {
  if (i >= nvars_) throw std::out_of_range("Polynomial::partial: index out of range");
  Polynomial out(nvars_);
  for (const auto& [m, c] : terms_) {
    const int e = m.exponent(i);
    if (e == 0) continue;
    out.add_term(m.times_variable(i, -1), c * e);
  }
  return out;
}

Polynomial Polynomial::times_variable(std::size_t i, int power) const {
  if (i >= nvars_) throw std::out_of_range("Polynomial::times_variable: index out of range");
  Polynomial out(nvars_);
  for (const auto& [m, c] : terms_) out.add_term(m.times_variable(i, power), c);
  return out;
}

ExpPoly::ExpPoly(Polynomial p, std::vector<Rational> a) : poly(std::move(p)), freq(std::move(a)) {
  if (freq.size() != poly.nvars()) {
    throw std::invalid_argument("ExpPoly: frequency vector length must equal variable count");
  }
}

bool ExpPoly::freq_is_zero() const {
  for (const Rational& a : freq) {
    if (a != 0) return false;
  }
  return true;
}

}  // namespace oscrep
