#include "oscrep/weyl.hpp"

#include <stdexcept>

namespace oscrep {

namespace {

void check_var(std::size_t nvars, std::size_t i, const char* where) {
  if (i >= nvars) throw std::out_of_range(std::string(where) + ": variable index out of range");
}

void check_same_nvars(std::size_t a, std::size_t b, const char* where) {
  if (a != b) throw std::invalid_argument(std::string(where) + ": variable count mismatch");
}

// gamma * (gamma-1) * ... * (gamma-k+1), exact
Rational falling_factorial(int gamma, int k) {
  Rational out(1);
  for (int i = 0; i < k; ++i) out *= Rational(gamma - i);
  return out;
}

Rational binomial(int n, int k) {
  if (k < 0 || k > n) return Rational(0);
  Rational out(1);
  for (int i = 1; i <= k; ++i) out *= Rational(n - k + i, i);
  out.canonicalize();
  return out;
}

}  // namespace

FactorExpr FactorExpr::constant(std::size_t nvars, const Rational& c) {
  FactorExpr e(nvars);
  e.add_term(c, {});
  return e;
}

FactorExpr FactorExpr::variable(std::size_t nvars, std::size_t i) {
  check_var(nvars, i, "FactorExpr::variable");
  FactorExpr e(nvars);
  e.add_term(Rational(1), {Factor::mul(i)});
  return e;
}

FactorExpr FactorExpr::derivative(std::size_t nvars, std::size_t i) {
  check_var(nvars, i, "FactorExpr::derivative");
  FactorExpr e(nvars);
  e.add_term(Rational(1), {Factor::diff(i)});
  return e;
}

FactorExpr FactorExpr::euler(std::size_t nvars) {
  FactorExpr e(nvars);
  for (std::size_t i = 0; i < nvars; ++i) {
    e.add_term(Rational(1), {Factor::mul(i), Factor::diff(i)});
  }
  return e;
}

FactorExpr FactorExpr::signed_euler(std::size_t nvars, const std::vector<std::size_t>& plus,
                                    const std::vector<std::size_t>& minus) {
  FactorExpr e(nvars);
  for (std::size_t i : plus) {
    check_var(nvars, i, "FactorExpr::signed_euler");
    e.add_term(Rational(1), {Factor::mul(i), Factor::diff(i)});
  }
  for (std::size_t i : minus) {
    check_var(nvars, i, "FactorExpr::signed_euler");
    e.add_term(Rational(-1), {Factor::mul(i), Factor::diff(i)});
  }
  return e;
}

void FactorExpr::add_term(const Rational& coeff, std::vector<Factor> factors) {
  if (coeff == 0) return;
  for (const Factor& f : factors) {
    if (f.kind != Factor::Kind::Scalar) check_var(nvars_, f.var, "FactorExpr::add_term");
  }
  terms_.push_back({coeff, std::move(factors)});
}

FactorExpr FactorExpr::operator-() const {
  FactorExpr out(nvars_);
  for (const Term& t : terms_) out.terms_.push_back({-t.coeff, t.factors});
  return out;
}

FactorExpr& FactorExpr::operator+=(const FactorExpr& other) {
  check_same_nvars(nvars_, other.nvars_, "FactorExpr::operator+=");
  for (const Term& t : other.terms_) terms_.push_back(t);
  return *this;
}

FactorExpr& FactorExpr::operator-=(const FactorExpr& other) {
  check_same_nvars(nvars_, other.nvars_, "FactorExpr::operator-=");
  for (const Term& t : other.terms_) terms_.push_back({-t.coeff, t.factors});
  return *this;
}

FactorExpr operator*(const FactorExpr& a, const FactorExpr& b) {
  check_same_nvars(a.nvars_, b.nvars_, "FactorExpr::operator*");
  FactorExpr out(a.nvars_);
  for (const FactorExpr::Term& ta : a.terms_) {
    for (const FactorExpr::Term& tb : b.terms_) {
      std::vector<Factor> factors = ta.factors;
      factors.insert(factors.end(), tb.factors.begin(), tb.factors.end());
      out.terms_.push_back({ta.coeff * tb.coeff, std::move(factors)});
    }
  }
  return out;
}

FactorExpr operator*(const Rational& s, FactorExpr e) {
  if (s == 0) return FactorExpr(e.nvars());
  for (auto& t : e.terms_) t.coeff *= s;
  return e;
}

FactorExpr swap_substitute(const FactorExpr& e, const std::set<std::size_t>& swap_vars) {
  for (std::size_t v : swap_vars) check_var(e.nvars(), v, "swap_substitute");
  FactorExpr out(e.nvars());
  for (const FactorExpr::Term& t : e.terms()) {
    Rational coeff = t.coeff;
    std::vector<Factor> factors;
    factors.reserve(t.factors.size());
    for (const Factor& f : t.factors) {
      if (f.kind == Factor::Kind::MulVar && swap_vars.count(f.var)) {
        factors.push_back(Factor::diff(f.var));
      } else if (f.kind == Factor::Kind::Diff && swap_vars.count(f.var)) {
        factors.push_back(Factor::mul(f.var));
        coeff = -coeff;
      } else {
        factors.push_back(f);
      }
    }
    out.add_term(coeff, std::move(factors));
  }
  return out;
}

FactorExpr permute_variables(const FactorExpr& e, const std::vector<std::size_t>& perm) {
  if (perm.size() != e.nvars()) throw std::invalid_argument("permute_variables: bad permutation size");
  FactorExpr out(e.nvars());
  for (const FactorExpr::Term& t : e.terms()) {
    std::vector<Factor> factors = t.factors;
    for (Factor& f : factors) {
      if (f.kind != Factor::Kind::Scalar) f.var = perm.at(f.var);
    }
    out.add_term(t.coeff, std::move(factors));
  }
  return out;
}

Polynomial apply_written(const FactorExpr& e, const Polynomial& p) {
  check_same_nvars(e.nvars(), p.nvars(), "apply_written");
  Polynomial out(p.nvars());
  for (const FactorExpr::Term& t : e.terms()) {
    Polynomial v = p;
    for (auto it = t.factors.rbegin(); it != t.factors.rend(); ++it) {
      switch (it->kind) {
        case Factor::Kind::MulVar: v = v.times_variable(it->var); break;
        case Factor::Kind::Diff: v = v.partial(it->var); break;
        case Factor::Kind::Scalar: v *= it->value; break;
      }
      if (v.is_zero()) break;
    }
    out += v * t.coeff;
  }
  return out;
}

WeylOperator WeylOperator::identity(std::size_t nvars) {
  WeylOperator op(nvars);
  op.add_term(Monomial(nvars), Monomial(nvars), Rational(1));
  return op;
}

void WeylOperator::add_term(const Monomial& alpha, const Monomial& beta, const Rational& c) {
  if (alpha.nvars() != nvars_ || beta.nvars() != nvars_) {
    throw std::invalid_argument("WeylOperator::add_term: variable count mismatch");
  }
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(Key{alpha, beta}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

WeylOperator WeylOperator::operator-() const {
  WeylOperator out(nvars_);
  for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
  return out;
}

WeylOperator& WeylOperator::operator+=(const WeylOperator& other) {
  check_same_nvars(nvars_, other.nvars_, "WeylOperator::operator+=");
  for (const auto& [k, c] : other.terms_) add_term(k.first, k.second, c);
  return *this;
}

WeylOperator& WeylOperator::operator-=(const WeylOperator& other) {
  check_same_nvars(nvars_, other.nvars_, "WeylOperator::operator-=");
  for (const auto& [k, c] : other.terms_) add_term(k.first, k.second, -c);
  return *this;
}

WeylOperator& WeylOperator::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, c] : terms_) c *= s;
  return *this;
}

Polynomial WeylOperator::apply(const Polynomial& p) const {
  check_same_nvars(nvars_, p.nvars(), "WeylOperator::apply");
  Polynomial out(nvars_);
  for (const auto& [key, q] : terms_) {
    const auto& [alpha, beta] = key;
    for (const auto& [gamma, cg] : p.terms()) {
      Rational coeff = q * cg;
      std::vector<int> exps(nvars_);
      bool vanishes = false;
      for (std::size_t i = 0; i < nvars_; ++i) {
        const int b = beta.exponent(i);
        const int g = gamma.exponent(i);
        if (b > g) {
          vanishes = true;
          break;
        }
        if (b > 0) coeff *= falling_factorial(g, b);
        exps[i] = alpha.exponent(i) + g - b;
      }
      if (vanishes || coeff == 0) continue;
      out.add_term(Monomial(std::move(exps)), coeff);
    }
  }
  return out;
}

ExpPoly WeylOperator::apply_exp(const ExpPoly& v) const {
  check_same_nvars(nvars_, v.nvars(), "WeylOperator::apply_exp");
  if (v.freq_is_zero()) return ExpPoly(apply(v.poly), v.freq);
  return ExpPoly(shift_derivatives(v.freq).apply(v.poly), v.freq);
}

WeylOperator WeylOperator::shift_derivatives(const std::vector<Rational>& a) const {
  if (a.size() != nvars_) throw std::invalid_argument("WeylOperator::shift_derivatives: bad vector size");
  bool all_zero = true;
  for (const Rational& ai : a) {
    if (ai != 0) {
      all_zero = false;
      break;
    }
  }
  if (all_zero) return *this;

  WeylOperator out(nvars_);
  for (const auto& [key, q] : terms_) {
    const auto& [alpha, beta] = key;
    // expand prod_i (d_i + a_i)^beta_i
    std::vector<std::size_t> active;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (beta.exponent(i) > 0 && a[i] != 0) active.push_back(i);
    }
    std::vector<int> t(beta.exps());
    // iterate t_i from beta_i down to 0 over active indices
    auto emit = [&](const Rational& coeff) { out.add_term(alpha, Monomial(t), q * coeff); };
    if (active.empty()) {
      emit(Rational(1));
      continue;
    }
    std::vector<int> choice(active.size(), 0);
    while (true) {
      Rational coeff(1);
      for (std::size_t j = 0; j < active.size(); ++j) {
        const std::size_t i = active[j];
        const int b = beta.exponent(i);
        const int k = choice[j];  // surviving derivative order
        t[i] = k;
        coeff *= binomial(b, k);
        for (int s = 0; s < b - k; ++s) coeff *= a[i];
      }
      emit(coeff);
      std::size_t j = 0;
      while (j < active.size()) {
        if (++choice[j] <= beta.exponent(active[j])) break;
        choice[j] = 0;
        ++j;
      }
      if (j == active.size()) break;
    }
  }
  return out;
}

namespace {

// Left-multiplies a single factor onto a normal-ordered accumulator.
WeylOperator left_multiply(const Factor& f, const WeylOperator& acc) {
  WeylOperator out(acc.nvars());
  switch (f.kind) {
    case Factor::Kind::MulVar:
      for (const auto& [key, q] : acc.terms()) {
        out.add_term(key.first.times_variable(f.var), key.second, q);
      }
      break;
    case Factor::Kind::Diff:
      for (const auto& [key, q] : acc.terms()) {
        out.add_term(key.first, key.second.times_variable(f.var), q);
        const int e = key.first.exponent(f.var);
        if (e > 0) out.add_term(key.first.times_variable(f.var, -1), key.second, q * e);
      }
      break;
    case Factor::Kind::Scalar: {
      out = acc;
      out *= f.value;
      break;
    }
  }
  return out;
}

}  // namespace

WeylOperator normal_order(const FactorExpr& e) {
  WeylOperator out(e.nvars());
  for (const FactorExpr::Term& t : e.terms()) {
    WeylOperator acc = WeylOperator::identity(e.nvars());
    acc *= t.coeff;
    for (auto it = t.factors.rbegin(); it != t.factors.rend(); ++it) {
      acc = left_multiply(*it, acc);
    }
    out += acc;
  }
  return out;
}

WeylOperator compose(const WeylOperator& a, const WeylOperator& b) {
  check_same_nvars(a.nvars(), b.nvars(), "compose");
  const std::size_t n = a.nvars();
  WeylOperator out(n);
  for (const auto& [ka, qa] : a.terms()) {
    const auto& [alpha, beta] = ka;
    for (const auto& [kb, qb] : b.terms()) {
      const auto& [gamma, delta] = kb;
      // d^beta x^gamma = sum_t C(beta,t) * gamma!/(gamma-t)! * x^(gamma-t) d^(beta-t)
      std::vector<std::size_t> active;
      for (std::size_t i = 0; i < n; ++i) {
        if (beta.exponent(i) > 0 && gamma.exponent(i) > 0) active.push_back(i);
      }
      std::vector<int> contraction(active.size(), 0);
      while (true) {
        Rational coeff = qa * qb;
        std::vector<int> xa(n), xb(n);
        for (std::size_t i = 0; i < n; ++i) {
          xa[i] = alpha.exponent(i) + gamma.exponent(i);
          xb[i] = beta.exponent(i) + delta.exponent(i);
        }
        for (std::size_t j = 0; j < active.size(); ++j) {
          const std::size_t i = active[j];
          const int t = contraction[j];
          coeff *= binomial(beta.exponent(i), t) * falling_factorial(gamma.exponent(i), t);
          xa[i] -= t;
          xb[i] -= t;
        }
        if (coeff != 0) out.add_term(Monomial(std::move(xa)), Monomial(std::move(xb)), coeff);
        std::size_t j = 0;
        while (j < active.size()) {
          const std::size_t i = active[j];
          if (++contraction[j] <= std::min(beta.exponent(i), gamma.exponent(i))) break;
          contraction[j] = 0;
          ++j;
        }
        if (j == active.size()) break;
      }
    }
  }
  return out;
}

WeylOperator commutator(const WeylOperator& a, const WeylOperator& b) {
  return compose(a, b) - compose(b, a);
}

}  // namespace oscrep
