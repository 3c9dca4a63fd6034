#include <doctest.h>

#include "oscrep/analysis.hpp"

using namespace oscrep;

namespace {

RepSpec make_spec(AlgebraKind kind, int rank, const Rational& c, std::set<int> swaps = {},
                  std::vector<Rational> freq = {}) {
  RepSpec spec;
  spec.algebra = kind;
  spec.rank = rank;
  spec.c = c;
  spec.swap_set = std::move(swaps);
  spec.freq = std::move(freq);
  return spec;
}

ExpPoly plain_seed(const RepSpec& spec, Polynomial p) { return ExpPoly(std::move(p), spec.freq_or_zero()); }

}  // namespace

TEST_CASE("bracket check passes for honest tables and catches corruption") {
  Window w;
  w.degree = 5;

  const RepTable sl_table = build_sl_base(2, rational(1, 2));
  const StructureTable sl_oracle(sl_table.basis());
  CHECK(verify_homomorphism(sl_table, sl_oracle, w).ok());

  const RepTable sp_table = build_sp(make_spec(AlgebraKind::SP, 1, Rational(-2)));
  const StructureTable sp_oracle(sp_table.basis());
  CHECK(verify_homomorphism(sp_table, sp_oracle, w).ok());

  // flip one sign and the report must name a witness
  std::vector<WeylOperator> corrupted;
  for (std::size_t i = 0; i < sl_table.dim(); ++i) {
    corrupted.push_back(i == 0 ? Rational(-1) * sl_table.op(0) : sl_table.op(i));
  }
  const RepTable broken(sl_table.spec(), sl_table.basis(), corrupted);
  const HomReport report = verify_homomorphism(broken, sl_oracle, w);
  CHECK_FALSE(report.ok());
  CHECK(report.violations.size() > 0);
}

TEST_CASE("weights of the base sl table") {
  const Rational c = rational(1, 2);
  const RepTable table = build_sl_base(2, c);
  const auto cartan = select_subalgebra(AlgebraKind::SL, 2, Subalgebra::Cartan);

  const Polynomial x1 = Polynomial::variable(2, 0);
  CHECK(table.op(cartan[0]).apply(x1) == x1);
  CHECK(table.op(cartan[1]).apply(x1) == x1 * (Rational(1) + c));

  const Polynomial one = Polynomial::constant(2, Rational(1));
  CHECK(table.op(cartan[1]).apply(one) == one * c);

  Window w;
  w.degree = 4;
  const WeightReport report = weight_decompose(table, w, cartan);
  CHECK(report.monomials == 15);
  CHECK(report.max_multiplicity == 1);

  const RepTable twisted =
      build_sl_exp(make_spec(AlgebraKind::SL, 2, c, {}, {Rational(1), Rational(0)}));
  CHECK_THROWS_AS(weight_decompose(twisted, w, cartan), std::runtime_error);
}

TEST_CASE("weight multiplicities of the rank-one sp table are finite and reported") {
  const RepTable table = build_sp(make_spec(AlgebraKind::SP, 1, rational(1, 2)));
  Window w;
  w.degree = 6;
  const auto report =
      weight_decompose(table, w, select_subalgebra(AlgebraKind::SP, 1, Subalgebra::Cartan));
  CHECK(report.monomials == 84);
  CHECK(report.max_multiplicity > 1);  // x1 y1 and x0^2 share a weight
}

TEST_CASE("grade shifts of the normalized swapped table") {
  const int n = 3;
  const Rational c = rational(1, 2);
  const RepTable table = build_sl_swapped(make_spec(AlgebraKind::SL, n, c, {1}));

  // lowering multiplies by x1; raising on the constant gives (c - n1) x_n
  const Polynomial one = Polynomial::constant(3, Rational(1));
  CHECK(table.op(sl_unit_label(n + 1, 1)).apply(one) == Polynomial::variable(3, 0));
  CHECK(table.op(sl_unit_label(n, n + 1)).apply(one) ==
        Polynomial::variable(3, 2) * (c - 1));

  const GradingReport report = check_grading(table, 4, 6);
  CHECK(report.ok());
  CHECK(report.vectors_checked > 0);

  CHECK_THROWS_AS(check_grading(build_sl_base(3, c), 2, 4), std::invalid_argument);
}

TEST_CASE("power identities of the plain sp table") {
  const Rational c = rational(1, 3);
  const RepTable table = build_sp(make_spec(AlgebraKind::SP, 1, c));
  CHECK(power_identities(table, 5).ok());

  // raising twice: c (c + 1) x0^2
  const WeylOperator& raising = table.op(sp_a_label(1, 2, 2));
  const Polynomial one = Polynomial::constant(3, Rational(1));
  CHECK(raising.apply(raising.apply(one)) ==
        Polynomial::variable(3, 0, 2) * (c * (c + 1)));

  // empty product at k = 0
  CHECK(power_identities(table, 0).ok());

  // transferring twice out of x0^3: 6 x0 x1^2
  const WeylOperator& transfer = table.op(sp_c_label(1, 1, 2));
  const Polynomial x0cubed = Polynomial::variable(3, 0, 3);
  Polynomial expected(3);
  expected.add_term(Monomial::variable(3, 0).times(Monomial::variable(3, 1, 2)), Rational(6));
  CHECK(transfer.apply(transfer.apply(x0cubed)) == expected);

  CHECK(power_identities(build_sp(make_spec(AlgebraKind::SP, 2, Rational(-2))), 5).ok());
}

TEST_CASE("closure saturates for generic c and stalls at the reducible point") {
  Window target;
  target.degree = 3;

  const RepSpec generic = make_spec(AlgebraKind::SL, 2, rational(1, 2));
  const RepTable generic_table = build_sl_base(2, generic.c);
  const ClosureReport saturated = submodule_closure(
      generic_table, plain_seed(generic, Polynomial::variable(2, 0)), 8, target);
  CHECK(saturated.saturated);
  CHECK(saturated.window_covered == saturated.window_rank);

  const RepSpec reducible = make_spec(AlgebraKind::SL, 2, Rational(-1));
  const RepTable reducible_table = build_sl_base(2, reducible.c);
  const ClosureReport stalled = submodule_closure(
      reducible_table, plain_seed(reducible, Polynomial::constant(2, Rational(1))), 8, target);
  CHECK(stalled.stabilized);
  CHECK_FALSE(stalled.saturated);
  CHECK(stalled.final_rank == 3);
  CHECK(stalled.span == degree_window_span(2, 1));

  // linearity: a scaled seed generates the identical span
  const ClosureReport scaled = submodule_closure(
      reducible_table, plain_seed(reducible, Polynomial::constant(2, rational(-7, 3))), 8, target);
  CHECK(scaled.span == stalled.span);

  CHECK_THROWS_AS(
      submodule_closure(reducible_table, plain_seed(reducible, Polynomial(2)), 8, target),
      std::invalid_argument);
}

TEST_CASE("a saturated closure report is a re-verifiable certificate") {
  const RepSpec spec = make_spec(AlgebraKind::SP, 1, rational(1, 2));
  const RepTable table = build_sp(spec);
  Window target;
  target.degree = 3;
  const ClosureReport report = submodule_closure(
      table, plain_seed(spec, Polynomial::variable(3, 1, 2)), 8, target);
  REQUIRE(report.saturated);
  for (const Monomial& m : target.enumerate(3)) {
    CHECK(report.span.contains(SparseVec<Monomial>::unit(m)));
  }
}

TEST_CASE("singular search rejects an empty raising list") {
  const RepTable table = build_sp(make_spec(AlgebraKind::SP, 1, rational(1, 2)));
  Window w;
  w.degree = 1;
  RootConvention empty;
  empty.cartan_labels = sp_default_convention(1).cartan_labels;
  CHECK_THROWS_AS(singular_vectors(table, w, empty), std::invalid_argument);
}

TEST_CASE("exact invariance of the bounded-degree subspace") {
  const SpanBasis<Monomial> low = degree_window_span(3, 1);

  const RepTable at_minus_one = build_sp(make_spec(AlgebraKind::SP, 1, Rational(-1)));
  CHECK(invariance_exact(at_minus_one, low));

  const RepTable generic = build_sp(make_spec(AlgebraKind::SP, 1, rational(1, 2)));
  CHECK_FALSE(invariance_exact(generic, low));

  // both directions for ell <= 2, m <= 2
  for (int m = 1; m <= 2; ++m) {
    for (int ell = 0; ell <= 2; ++ell) {
      const SpanBasis<Monomial> space = degree_window_span(2 * m + 1, ell);
      for (int candidate = 0; candidate <= 2; ++candidate) {
        const RepTable table = build_sp(make_spec(AlgebraKind::SP, m, Rational(-candidate)));
        CHECK(invariance_exact(table, space) == (candidate == ell));
      }
    }
  }

  // the zero subspace is trivially invariant
  CHECK(invariance_exact(generic, SpanBasis<Monomial>{}));
}

TEST_CASE("full matrix algebra on the invariant subspace") {
  const RepTable table = build_sp(make_spec(AlgebraKind::SP, 1, Rational(-1)));
  const SpanBasis<Monomial> space = degree_window_span(3, 1);
  const BurnsideResult result = burnside_irreducible(table, space);
  CHECK(result.full_dim == 16);
  CHECK(result.algebra_dim == 16);
  CHECK(result.irreducible);

  // one-dimensional subspace at c = 0
  const RepTable at_zero = build_sp(make_spec(AlgebraKind::SP, 1, Rational(0)));
  const SpanBasis<Monomial> constants = degree_window_span(3, 0);
  const BurnsideResult trivial = burnside_irreducible(at_zero, constants);
  CHECK(trivial.irreducible);
  CHECK(trivial.algebra_dim == 1);

  // a non-invariant subspace is rejected
  const RepTable generic = build_sp(make_spec(AlgebraKind::SP, 1, rational(1, 2)));
  CHECK_THROWS_AS(burnside_irreducible(generic, space), std::invalid_argument);
}

TEST_CASE("a commuting generator set fails the full-algebra test") {
  DenseMat diag = {Rational(1), Rational(0), Rational(0), Rational(2)};
  CHECK(matrix_algebra_dim({diag}, 2, 4) == 2);
  DenseMat nilpotent = {Rational(0), Rational(1), Rational(0), Rational(0)};
  DenseMat lower = {Rational(0), Rational(0), Rational(1), Rational(0)};
  CHECK(matrix_algebra_dim({nilpotent, lower}, 2, 4) == 4);
}

TEST_CASE("series checks at c = -ell for the rank-one case") {
  const SeriesReport ell0 = composition_series(1, 0);
  CHECK(ell0.dim == 1);
  CHECK(ell0.ok());

  const SeriesReport ell1 = composition_series(1, 1);
  CHECK(ell1.dim == 4);
  CHECK(ell1.burnside_dim == 16);
  CHECK(ell1.quotient_saturated);
  CHECK(ell1.singular_found);
  REQUIRE(ell1.singular_weight.size() == 2);
  CHECK(ell1.singular_weight[1] == Rational(-1));
  REQUIRE(ell1.singular_fundamental.size() == 2);
  CHECK(ell1.singular_fundamental[0] == Rational(1));
  CHECK(ell1.singular_fundamental[1] == Rational(0));
  CHECK(ell1.ok());

  const SeriesReport ell2 = composition_series(1, 2);
  CHECK(ell2.dim == 10);
  CHECK(ell2.ok());

  CHECK_THROWS_AS(composition_series(1, -1), std::invalid_argument);
}

TEST_CASE("the constant is the unique singular vector of the generic sp table") {
  const Rational c = rational(1, 3);
  const RepTable table = build_sp(make_spec(AlgebraKind::SP, 1, c));
  Window w;
  w.degree = 2;
  const auto found = singular_vectors(table, w, sp_default_convention(1));
  REQUIRE(found.size() == 1);
  CHECK(found[0].vec == Polynomial::constant(3, Rational(1)));
  REQUIRE(found[0].weight.size() == 2);
  CHECK(found[0].weight[0] == 0);
  CHECK(found[0].weight[1] == c);
  REQUIRE(found[0].fundamental.size() == 2);
  CHECK(found[0].fundamental[0] == -c);
  CHECK(found[0].fundamental[1] == 0);

  // applying every raising operator to a found vector gives exactly zero
  for (const auto& sv : found) {
    for (const auto& label : sp_default_convention(1).raising_labels) {
      CHECK(table.op(label).apply(sv.vec).is_zero());
    }
  }
}

TEST_CASE("homogeneous slices under the corner subalgebra have one singular line each") {
  const RepTable table = build_sp(make_spec(AlgebraKind::SP, 2, rational(1, 2)));
  Window w;
  w.degree = 3;
  w.exclude_slot0 = true;
  const auto found = singular_vectors(table, w, corner_sp_default_convention(2));
  REQUIRE(found.size() == 4);  // one line per degree 0..3
  for (const auto& sv : found) {
    // the line is spanned by y_m^k with fundamental coordinates (k, 0)
    CHECK(sv.vec == Polynomial::variable(5, 4, sv.degree));
    REQUIRE(sv.fundamental.size() == 2);
    CHECK(sv.fundamental[0] == Rational(sv.degree));
    CHECK(sv.fundamental[1] == 0);
  }
}

TEST_CASE("corner singular vectors of the swapped sl table") {
  // swapped rank-3 table, one variable swapped: the corner acts like a
  // rank-two subalgebra with singular vectors in each slice
  const int n = 3;
  const RepTable table = build_sl_swapped(make_spec(AlgebraKind::SL, n, rational(1, 2), {1}));
  // x2 is annihilated by the corner raising operators and has weight
  // coordinates (-2, 1) in the standard corner convention
  const auto conv = corner_sl_convention(n);
  Window w;
  w.degree = 1;
  const auto found = singular_vectors(table, w, conv);
  bool seen = false;
  for (const auto& sv : found) {
    if (sv.vec == Polynomial::variable(3, 1)) {
      seen = true;
      REQUIRE(sv.fundamental.size() == 2);
      CHECK(sv.fundamental[0] == Rational(-2));
      CHECK(sv.fundamental[1] == Rational(1));
    }
  }
  CHECK(seen);
}

TEST_CASE("rank-one slices are irreducible for every signed degree") {
  const RepSpec spec = make_spec(AlgebraKind::SP, 1, rational(1, 2), sp_swap_set(1, 1, 1));
  for (int k = -2; k <= 2; ++k) {
    const SliceReport report = graded_slice_closure(spec, k, 3, 5, 8);
    CAPTURE(k);
    CHECK(report.all_saturated);
    CHECK(report.num_classes == 1);
  }
}

TEST_CASE("window intersection of a span") {
  SpanBasis<Monomial> span;
  // span{x1 + x2, x2 + x3} in three variables, window {x1, x2}
  const Monomial x1 = Monomial::variable(3, 0);
  const Monomial x2 = Monomial::variable(3, 1);
  const Monomial x3 = Monomial::variable(3, 2);
  span.insert(poly_to_vec(Polynomial::variable(3, 0) + Polynomial::variable(3, 1)));
  span.insert(poly_to_vec(Polynomial::variable(3, 1) + Polynomial::variable(3, 2)));

  // a combination lands in the window iff the x3 component cancels
  const SpanBasis<Monomial> inside = window_intersection(span, {x1, x2});
  CHECK(inside.rank() == 1);
  CHECK(inside.contains(poly_to_vec(Polynomial::variable(3, 0) + Polynomial::variable(3, 1))));

  const SpanBasis<Monomial> nothing = window_intersection(span, {x1});
  CHECK(nothing.rank() == 0);

  const SpanBasis<Monomial> everything = window_intersection(span, {x1, x2, x3});
  CHECK(everything == span);
}
