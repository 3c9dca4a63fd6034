#include <doctest.h>

#include <random>

#include "oscrep/weyl.hpp"

using namespace oscrep;

namespace {

FactorExpr random_expr(std::mt19937& rng, std::size_t nvars) {
  FactorExpr e(nvars);
  const int terms = 1 + static_cast<int>(rng() % 3);
  for (int t = 0; t < terms; ++t) {
    std::vector<Factor> factors;
    const int len = static_cast<int>(rng() % 5);
    for (int f = 0; f < len; ++f) {
      const std::size_t var = rng() % nvars;
      switch (rng() % 3) {
        case 0: factors.push_back(Factor::mul(var)); break;
        case 1: factors.push_back(Factor::diff(var)); break;
        default: factors.push_back(Factor::scalar(rational(static_cast<long>(rng() % 5) - 2))); break;
      }
    }
    const long num = static_cast<long>(rng() % 9) - 4;
    e.add_term(rational(num == 0 ? 1 : num), std::move(factors));
  }
  return e;
}

Polynomial random_poly(std::mt19937& rng, std::size_t nvars, int max_degree) {
  Polynomial p(nvars);
  const int terms = 1 + static_cast<int>(rng() % 4);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> exps(nvars, 0);
    int budget = max_degree;
    for (std::size_t i = 0; i < nvars; ++i) {
      const int e = static_cast<int>(rng() % (budget + 1));
      exps[i] = e;
      budget -= e;
    }
    p.add_term(Monomial(exps), rational(static_cast<long>(rng() % 7) - 3, 1 + rng() % 2));
  }
  return p;
}

int expr_order(const FactorExpr& e) {
  int order = 0;
  for (const auto& term : e.terms()) order = std::max(order, static_cast<int>(term.factors.size()));
  return order;
}

}  // namespace

TEST_CASE("normal ordering rewrites the defining relation") {
  const std::size_t nv = 2;
  const auto x1 = FactorExpr::variable(nv, 0);
  const auto d1 = FactorExpr::derivative(nv, 0);

  WeylOperator expected(nv);
  expected.add_term(Monomial::variable(nv, 0), Monomial::variable(nv, 0), Rational(1));
  expected.add_term(Monomial(nv), Monomial(nv), Rational(1));
  CHECK(normal_order(d1 * x1) == expected);  // d x = x d + 1

  WeylOperator already(nv);
  already.add_term(Monomial::variable(nv, 0), Monomial::variable(nv, 0), Rational(1));
  CHECK(normal_order(x1 * d1) == already);
}

TEST_CASE("normal ordering of a derivative against a negated variable") {
  const std::size_t nv = 2;
  for (std::size_t i = 0; i < nv; ++i) {
    for (std::size_t j = 0; j < nv; ++j) {
      const FactorExpr e = FactorExpr::derivative(nv, i) * (-FactorExpr::variable(nv, j));
      WeylOperator expected(nv);
      expected.add_term(Monomial::variable(nv, j), Monomial::variable(nv, i), Rational(-1));
      if (i == j) expected.add_term(Monomial(nv), Monomial(nv), Rational(-1));
      CHECK(normal_order(e) == expected);
    }
  }
}

TEST_CASE("normal ordering preserves application semantics") {
  std::mt19937 rng(101u);
  for (int round = 0; round < 50; ++round) {
    const FactorExpr e = random_expr(rng, 3);
    const WeylOperator op = normal_order(e);
    const int bound = expr_order(e) + 3;
    for (const Monomial& m : monomials_up_to_degree(3, bound)) {
      const Polynomial p = Polynomial::from_monomial(m);
      CHECK(op.apply(p) == apply_written(e, p));
    }
  }
}

TEST_CASE("the normal form is determined by bounded-degree application") {
  // two expressions that agree on every monomial up to the sum of their
  // orders normal-order identically: equivalently, a nonzero normal-ordered
  // operator acts nontrivially on some monomial of degree <= its derivative
  // order
  std::mt19937 rng(131u);
  for (int round = 0; round < 40; ++round) {
    const WeylOperator a = normal_order(random_expr(rng, 2));
    const WeylOperator b = normal_order(random_expr(rng, 2));
    const WeylOperator residual = a - b;
    if (residual.is_zero()) continue;
    int order = 0;
    for (const auto& [key, c] : residual.terms()) order = std::max(order, key.second.degree());
    bool witnessed = false;
    for (const Monomial& m : monomials_up_to_degree(2, order)) {
      if (!residual.apply(Polynomial::from_monomial(m)).is_zero()) {
        witnessed = true;
        break;
      }
    }
    CHECK(witnessed);
  }
}

TEST_CASE("apply examples") {
  const std::size_t nv = 2;
  const WeylOperator neg_d1 = normal_order(-FactorExpr::derivative(nv, 0));
  CHECK(neg_d1.apply(Polynomial::variable(nv, 0, 2)) == Polynomial::variable(nv, 0) * Rational(-2));

  const WeylOperator zero(nv);
  CHECK(zero.apply(Polynomial::variable(nv, 0, 3)).is_zero());

  const WeylOperator x1d2 =
      normal_order(FactorExpr::variable(nv, 0) * FactorExpr::derivative(nv, 1));
  const Polynomial expected =
      Polynomial::from_monomial(Monomial::variable(nv, 0).times(Monomial::variable(nv, 1, 2)), Rational(3));
  CHECK(x1d2.apply(Polynomial::variable(nv, 1, 3)) == expected);
}

TEST_CASE("composition examples and associativity") {
  const std::size_t nv = 2;
  const WeylOperator d1 = normal_order(FactorExpr::derivative(nv, 0));
  const WeylOperator x1 = normal_order(FactorExpr::variable(nv, 0));
  CHECK(compose(d1, x1) == normal_order(FactorExpr::derivative(nv, 0) * FactorExpr::variable(nv, 0)));

  const WeylOperator id = WeylOperator::identity(nv);
  CHECK(compose(x1, id) == x1);
  CHECK(compose(id, x1) == x1);
  CHECK(compose(x1, x1) == normal_order(FactorExpr::variable(nv, 0) * FactorExpr::variable(nv, 0)));

  std::mt19937 rng(103u);
  for (int round = 0; round < 25; ++round) {
    const WeylOperator a = normal_order(random_expr(rng, 2));
    const WeylOperator b = normal_order(random_expr(rng, 2));
    const WeylOperator c = normal_order(random_expr(rng, 2));
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
  }
}

TEST_CASE("compose matches sequential application") {
  std::mt19937 rng(107u);
  for (int round = 0; round < 25; ++round) {
    const FactorExpr ea = random_expr(rng, 3);
    const FactorExpr eb = random_expr(rng, 3);
    const WeylOperator a = normal_order(ea);
    const WeylOperator b = normal_order(eb);
    const WeylOperator ab = compose(a, b);
    const int bound = expr_order(ea) + expr_order(eb) + 2;
    for (const Monomial& m : monomials_up_to_degree(3, bound)) {
      const Polynomial p = Polynomial::from_monomial(m);
      CHECK(ab.apply(p) == a.apply(b.apply(p)));
    }
  }
}

TEST_CASE("commutators") {
  const std::size_t nv = 2;
  const WeylOperator d1 = normal_order(FactorExpr::derivative(nv, 0));
  const WeylOperator x1 = normal_order(FactorExpr::variable(nv, 0));
  CHECK(commutator(d1, x1) == WeylOperator::identity(nv));
  CHECK(commutator(x1, x1).is_zero());

  const WeylOperator euler1 =
      normal_order(FactorExpr::variable(nv, 0) * FactorExpr::derivative(nv, 0));
  const WeylOperator x1sq = normal_order(FactorExpr::variable(nv, 0) * FactorExpr::variable(nv, 0));
  const WeylOperator bracket = commutator(euler1, x1sq);
  const WeylOperator expected = Rational(2) * x1sq;
  CHECK(bracket == expected);
  for (const Monomial& m : monomials_up_to_degree(nv, 4)) {
    const Polynomial p = Polynomial::from_monomial(m);
    CHECK(bracket.apply(p) == expected.apply(p));
  }
}

TEST_CASE("commutator satisfies the Jacobi identity exactly") {
  std::mt19937 rng(109u);
  for (int round = 0; round < 15; ++round) {
    const WeylOperator a = normal_order(random_expr(rng, 2));
    const WeylOperator b = normal_order(random_expr(rng, 2));
    const WeylOperator c = normal_order(random_expr(rng, 2));
    WeylOperator jacobi = commutator(a, commutator(b, c));
    jacobi += commutator(b, commutator(c, a));
    jacobi += commutator(c, commutator(a, b));
    CHECK(jacobi.is_zero());
  }
}

TEST_CASE("exponential action") {
  const std::size_t nv = 2;
  const WeylOperator neg_d1 = normal_order(-FactorExpr::derivative(nv, 0));

  const ExpPoly constant(Polynomial::constant(nv, Rational(1)), {Rational(2), Rational(0)});
  const ExpPoly moved = neg_d1.apply_exp(constant);
  CHECK(moved.freq == constant.freq);
  CHECK(moved.poly == Polynomial::constant(nv, Rational(-2)));

  const WeylOperator euler1 =
      normal_order(FactorExpr::variable(nv, 0) * FactorExpr::derivative(nv, 0));
  const ExpPoly x1e(Polynomial::variable(nv, 0), {Rational(3), Rational(0)});
  const ExpPoly image = euler1.apply_exp(x1e);
  const Polynomial expected =
      Polynomial::variable(nv, 0) + Polynomial::variable(nv, 0, 2) * Rational(3);
  CHECK(image.poly == expected);

  std::mt19937 rng(113u);
  for (int round = 0; round < 20; ++round) {
    const WeylOperator op = normal_order(random_expr(rng, 2));
    const Polynomial p = random_poly(rng, 2, 4);
    const ExpPoly plain(p, {Rational(0), Rational(0)});
    CHECK(op.apply_exp(plain).poly == op.apply(p));
  }
}

TEST_CASE("derivative shifts expand binomially") {
  const std::size_t nv = 1;
  FactorExpr d2(nv);
  d2.add_term(Rational(1), {Factor::diff(0), Factor::diff(0)});
  const WeylOperator op = normal_order(d2);
  const WeylOperator shifted = op.shift_derivatives({rational(1, 2)});
  // (d + 1/2)^2 = d^2 + d + 1/4
  WeylOperator expected(nv);
  expected.add_term(Monomial(nv), Monomial::variable(nv, 0, 2), Rational(1));
  expected.add_term(Monomial(nv), Monomial::variable(nv, 0), Rational(1));
  expected.add_term(Monomial(nv), Monomial(nv), rational(1, 4));
  CHECK(shifted == expected);
  CHECK(op.shift_derivatives({Rational(0)}) == op);
}

TEST_CASE("swap substitution") {
  const std::size_t nv = 2;
  const FactorExpr x1d2 = FactorExpr::variable(nv, 0) * FactorExpr::derivative(nv, 1);

  SUBCASE("empty set is the identity") {
    const FactorExpr same = swap_substitute(x1d2, {});
    CHECK(normal_order(same) == normal_order(x1d2));
  }

  SUBCASE("swapping the multiplier") {
    const FactorExpr swapped = swap_substitute(x1d2, {0});
    CHECK(normal_order(swapped) ==
          normal_order(FactorExpr::derivative(nv, 0) * FactorExpr::derivative(nv, 1)));
  }

  SUBCASE("swapping both variables of x_i d_j") {
    for (std::size_t i = 0; i < nv; ++i) {
      for (std::size_t j = 0; j < nv; ++j) {
        const FactorExpr e = FactorExpr::variable(nv, i) * FactorExpr::derivative(nv, j);
        const FactorExpr swapped = swap_substitute(e, {0, 1});
        WeylOperator expected(nv);
        expected.add_term(Monomial::variable(nv, j), Monomial::variable(nv, i), Rational(-1));
        if (i == j) expected.add_term(Monomial(nv), Monomial(nv), Rational(-1));
        CHECK(normal_order(swapped) == expected);
      }
    }
  }

  SUBCASE("applying the substitution twice negates a variable factor") {
    const FactorExpr once = swap_substitute(FactorExpr::variable(nv, 0), {0});
    const FactorExpr twice = swap_substitute(once, {0});
    CHECK(normal_order(twice) == normal_order(-FactorExpr::variable(nv, 0)));
  }

  SUBCASE("the substitution preserves commutators") {
    std::mt19937 rng(127u);
    const std::set<std::size_t> swaps = {0};
    for (int round = 0; round < 20; ++round) {
      const FactorExpr e1 = random_expr(rng, 2);
      const FactorExpr e2 = random_expr(rng, 2);
      const FactorExpr written_bracket = e1 * e2 - e2 * e1;
      const WeylOperator lhs = normal_order(swap_substitute(written_bracket, swaps));
      const WeylOperator rhs =
          commutator(normal_order(swap_substitute(e1, swaps)), normal_order(swap_substitute(e2, swaps)));
      CHECK(lhs == rhs);
    }
  }
}
