#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "oscrep/linalg.hpp"
#include "oscrep/reps.hpp"

namespace oscrep {

/// Finite monomial window: total degree <= degree, optionally restricted to
/// one signed-degree slice and/or to monomials free of slot 0.
struct Window {
  int degree = 0;
  std::optional<int> grade;
  std::vector<std::size_t> grade_plus, grade_minus;
  bool exclude_slot0 = false;

  std::vector<Monomial> enumerate(std::size_t nvars) const;
};

SparseVec<Monomial> poly_to_vec(const Polynomial& p);
Polynomial vec_to_poly(const SparseVec<Monomial>& v, std::size_t nvars);
SparseVec<WeylOperator::Key> op_to_vec(const WeylOperator& op);

/// Span of a list of monomials (unit vectors).
SpanBasis<Monomial> monomial_span(const std::vector<Monomial>& monos);

/// Span of all monomials of total degree <= bound.
SpanBasis<Monomial> degree_window_span(std::size_t nvars, int bound);

/// Canonical basis of (row space of span) intersected with the coordinate
/// subspace spanned by the window monomials.
SpanBasis<Monomial> window_intersection(const SpanBasis<Monomial>& span,
                                        const std::set<Monomial>& window);

std::size_t binomial_count(int n, int k);

/// Operators of the table as they act on the underlying space: the raw
/// normal-ordered operators when freq == 0, the derivative-shifted ones
/// otherwise.
std::vector<WeylOperator> effective_ops(const RepTable& table);

// ---------------------------------------------------------------------------
// Bracket compatibility against the matrix structure constants.

struct HomViolation {
  std::string left, right;
  Monomial witness;
  std::string residual_value;
};

struct HomReport {
  std::size_t pairs = 0;
  std::size_t applications = 0;
  std::size_t pairs_with_nonzero_residual = 0;
  std::vector<HomViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// For every ordered basis pair (X, Y) checks that
/// [op(X), op(Y)] - op([X, Y]) kills every monomial of the window, with
/// op([X, Y]) expanded through the structure table. Violations are reported
/// with witnesses, never thrown.
HomReport verify_homomorphism(const RepTable& table, const StructureTable& oracle,
                              const Window& window);

// ---------------------------------------------------------------------------
// Weights.

struct WeightReport {
  std::map<std::vector<Rational>, std::size_t> multiplicity;
  std::size_t monomials = 0;
  std::size_t max_multiplicity = 0;
};

/// Joint eigenvalue vector of each window monomial under the selected Cartan
/// operators. Throws if some monomial fails to be a joint eigenvector (this
/// happens whenever freq != 0).
WeightReport weight_decompose(const RepTable& table, const Window& window,
                              const std::vector<std::size_t>& cartan_indices);

// ---------------------------------------------------------------------------
// Graded structure of the swapped sl tables.

struct GradingReport {
  int max_abs_grade = 0;
  int degree = 0;
  std::size_t vectors_checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// For the normalized sl swap shape {1..n1}: multiplication by x_1 lowers the
/// signed degree by one, the last raising operator maps a grade-k vector f to
/// (k + c - n1) x_n f, and every slice monomial is a signed-degree
/// eigenvector of the signed Euler operator.
GradingReport check_grading(const RepTable& table, int max_abs_grade, int degree_bound);

// ---------------------------------------------------------------------------
// Power identities of the plain sp table.

struct PowerReport {
  int kmax = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Checks (raising)^k(1) == prod_{r<k}(r+c) x_0^k and
/// (transfer)^s(x_0^k) == prod_{i<s}(k-i) x_0^(k-s) x_1^s for all s <= k <= kmax,
/// where raising = op(E(m+1,2m+2)) and transfer = op(E(1,m+1)-E(2m+2,m+2)).
PowerReport power_identities(const RepTable& table, int kmax);

// ---------------------------------------------------------------------------
// Submodule closure.

struct ClosureReport {
  std::string seed;
  int word_length = 0;
  bool stabilized = false;
  std::size_t final_rank = 0;
  std::size_t window_rank = 0;
  std::size_t window_covered = 0;
  bool saturated = false;
  SpanBasis<Monomial> span;
};

/// Breadth-first closure of the seed under all table operators, keeping
/// every applied vector exactly. Stops early once the target window is
/// covered or the span stops growing.
ClosureReport submodule_closure(const RepTable& table, const ExpPoly& seed, int max_word_len,
                                const Window& target);

// ---------------------------------------------------------------------------
// Exact invariance and irreducibility of finite-dimensional subspaces.

/// True iff op(v) lies in the subspace for every table operator and every
/// basis row. Exact: applied vectors are full polynomials, never truncated.
bool invariance_exact(const RepTable& table, const SpanBasis<Monomial>& subspace);

struct BurnsideResult {
  bool irreducible = false;
  std::size_t algebra_dim = 0;
  std::size_t full_dim = 0;
};

/// Dimension of the unital matrix algebra generated by the restrictions of
/// the table operators to the invariant subspace; irreducible iff it is the
/// full d^2. Throws if the subspace is not invariant.
BurnsideResult burnside_irreducible(const RepTable& table, const SpanBasis<Monomial>& subspace);

/// Dense row-major d x d matrices over the rationals.
using DenseMat = std::vector<Rational>;
DenseMat restriction_matrix(const WeylOperator& op, const SpanBasis<Monomial>& subspace);
/// Dimension of the unital algebra generated by the given matrices, with an
/// early stop once `stop_at` is reached.
std::size_t matrix_algebra_dim(const std::vector<DenseMat>& gens, std::size_t d,
                               std::size_t stop_at);

// ---------------------------------------------------------------------------
// Composition series of the plain sp table at c = -ell.

struct SeriesReport {
  int m = 0;
  int ell = 0;
  std::size_t dim = 0;
  std::size_t dim_expected = 0;
  bool invariant = false;
  std::size_t burnside_dim = 0;
  std::size_t burnside_expected = 0;
  bool quotient_saturated = false;
  int quotient_word_length = 0;
  bool singular_found = false;
  std::vector<Rational> singular_weight;
  std::vector<Rational> singular_fundamental;
  bool ok() const {
    return invariant && dim == dim_expected && burnside_dim == burnside_expected &&
           quotient_saturated && singular_found;
  }
};

/// Verifies the length-two structure at c = -ell: the bounded-degree subspace
/// is exactly invariant, has the predicted dimension, acts irreducibly
/// (full matrix algebra), and the quotient closure from x_1^(ell+1) covers
/// the next `quotient_degrees` degrees. Also finds the constant singular
/// vector and its weight.
SeriesReport composition_series(int m, int ell, int quotient_degrees = 4, int max_word_len = 12);

// ---------------------------------------------------------------------------
// Singular (highest-weight) vectors.

/// Cartan labels, raising-operator labels, and the coroot coordinates used
/// to express weights in fundamental-weight coordinates.
struct RootConvention {
  std::vector<std::string> cartan_labels;
  std::vector<std::string> raising_labels;
  std::vector<std::vector<Rational>> coroots;
};

RootConvention sl_standard_convention(int n);
RootConvention corner_sl_convention(int n);
RootConvention sp_default_convention(int m);
RootConvention corner_sp_default_convention(int m);

struct SingularVector {
  Polynomial vec;
  std::vector<Rational> weight;       // eigenvalues under the convention's Cartan list
  std::vector<Rational> fundamental;  // weight paired with each coroot
  int degree = 0;
};

/// Exact nullspace of the stacked raising operators on each weight-space of
/// each homogeneous degree of the window. Requires freq == 0.
std::vector<SingularVector> singular_vectors(const RepTable& table, const Window& window,
                                             const RootConvention& convention);

// ---------------------------------------------------------------------------
// Graded slices of the x_0-free subring under the corner subalgebra.

struct SliceSeedResult {
  Monomial seed;
  bool saturated = false;
  bool stabilized = false;
  std::size_t window_covered = 0;
  std::size_t class_id = 0;
};

struct SliceReport {
  int k = 0;
  int m1 = 0, m2 = 0;
  std::size_t window_rank = 0;
  std::size_t num_classes = 0;
  bool all_saturated = false;
  std::vector<SliceSeedResult> seeds;
};

/// Closure of every slice monomial of degree <= seed_degree under the corner
/// subalgebra operators, compared through canonical window intersections.
SliceReport graded_slice_closure(const RepSpec& spec, int k, int seed_degree, int window_degree,
                                 int max_word_len);

}  // namespace oscrep
