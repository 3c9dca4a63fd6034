#include "oscrep/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace oscrep {

Monomial::Monomial(std::vector<int> exps) : exps_(std::move(exps)) {
  for (int e : exps_) {
    if (e < 0) throw std::invalid_argument("Monomial: negative exponent");
  }
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, int power) {
  if (index >= nvars) throw std::out_of_range("Monomial::variable: index out of range");
  if (power < 0) throw std::invalid_argument("Monomial::variable: negative power");
  Monomial m(nvars);
  m.exps_[index] = power;
  return m;
}

int Monomial::exponent(std::size_t i) const {
  if (i >= exps_.size()) throw std::out_of_range("Monomial::exponent: index out of range");
  return exps_[i];
}

int Monomial::degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }

Monomial Monomial::times(const Monomial& other) const {
  if (nvars() != other.nvars()) throw std::invalid_argument("Monomial::times: variable count mismatch");
  Monomial out = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] += other.exps_[i];
  return out;
}

Monomial Monomial::times_variable(std::size_t i, int power) const {
  if (i >= exps_.size()) throw std::out_of_range("Monomial::times_variable: index out of range");
  Monomial out = *this;
  out.exps_[i] += power;
  if (out.exps_[i] < 0) throw std::invalid_argument("Monomial::times_variable: negative exponent");
  return out;
}

bool Monomial::operator<(const Monomial& other) const {
  if (nvars() != other.nvars()) {
    throw std::invalid_argument("Monomial::operator<: variable count mismatch");
  }
  const int da = degree();
  const int db = other.degree();
  if (da != db) return da < db;
  return exps_ > other.exps_;
}

namespace {

void fill_monomials(std::size_t nvars, int bound, std::size_t pos, Monomial& scratch,
                    std::vector<int>& exps, std::vector<Monomial>& out) {
  if (pos == nvars) {
    out.push_back(Monomial(exps));
    return;
  }
  for (int e = 0; e <= bound; ++e) {
    exps[pos] = e;
    fill_monomials(nvars, bound - e, pos + 1, scratch, exps, out);
  }
  exps[pos] = 0;
}

}  // namespace

std::vector<Monomial> monomials_up_to_degree(std::size_t nvars, int bound) {
  if (bound < 0) return {};
  std::vector<Monomial> out;
  std::vector<int> exps(nvars, 0);
  Monomial scratch(nvars);
  fill_monomials(nvars, bound, 0, scratch, exps, out);
  std::sort(out.begin(), out.end());
  return out;
}

int signed_degree(const Monomial& m, const std::vector<std::size_t>& plus,
                  const std::vector<std::size_t>& minus) {
  for (std::size_t p : plus) {
    if (std::find(minus.begin(), minus.end(), p) != minus.end()) {
      throw std::invalid_argument("signed_degree: overlapping index sets");
    }
  }
  int value = 0;
  for (std::size_t p : plus) value += m.exponent(p);
  for (std::size_t q : minus) value -= m.exponent(q);
  return value;
}

}  // namespace oscrep
