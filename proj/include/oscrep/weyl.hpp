#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "oscrep/polynomial.hpp"

namespace oscrep {

/// One multiplicative atom of an operator expression: multiply by a
/// variable, differentiate by a variable, or scale.
struct Factor {
  enum class Kind { MulVar, Diff, Scalar };

  Kind kind = Kind::Scalar;
  std::size_t var = 0;
  Rational value;

  static Factor mul(std::size_t i) { return {Kind::MulVar, i, Rational(0)}; }
  static Factor diff(std::size_t i) { return {Kind::Diff, i, Rational(0)}; }
  static Factor scalar(Rational v) { return {Kind::Scalar, 0, std::move(v)}; }

  bool operator==(const Factor& other) const {
    return kind == other.kind && var == other.var && value == other.value;
  }
};

/// Sum of scaled factor products, kept exactly as written. Factors compose
/// right to left: the last factor in a product acts first.
class FactorExpr {
 public:
  struct Term {
    Rational coeff;
    std::vector<Factor> factors;
  };

  explicit FactorExpr(std::size_t nvars) : nvars_(nvars) {}

  static FactorExpr zero(std::size_t nvars) { return FactorExpr(nvars); }
  static FactorExpr constant(std::size_t nvars, const Rational& c);
  static FactorExpr variable(std::size_t nvars, std::size_t i);
  static FactorExpr derivative(std::size_t nvars, std::size_t i);
  /// The degree operator sum_i x_i d/dx_i over all variables.
  static FactorExpr euler(std::size_t nvars);
  /// Signed variant: sum over plus of x_i d/dx_i minus the sum over minus.
  static FactorExpr signed_euler(std::size_t nvars, const std::vector<std::size_t>& plus,
                                 const std::vector<std::size_t>& minus);

  std::size_t nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }

  void add_term(const Rational& coeff, std::vector<Factor> factors);

  FactorExpr operator-() const;
  FactorExpr& operator+=(const FactorExpr& other);
  FactorExpr& operator-=(const FactorExpr& other);
  friend FactorExpr operator+(FactorExpr a, const FactorExpr& b) { a += b; return a; }
  friend FactorExpr operator-(FactorExpr a, const FactorExpr& b) { a -= b; return a; }
  /// Operator composition: (a * b) acts as a after b.
  friend FactorExpr operator*(const FactorExpr& a, const FactorExpr& b);
  friend FactorExpr operator*(const Rational& s, FactorExpr e);

 private:
  std::size_t nvars_;
  std::vector<Term> terms_;
};

/// For r in the swap set: d/dx_r becomes -x_r and x_r becomes d/dx_r,
/// factor by factor, preserving factor order. Scalars are untouched.
/// Indices are 0-based.
FactorExpr swap_substitute(const FactorExpr& e, const std::set<std::size_t>& swap_vars);

/// Renames variable indices factor-wise; perm must be a permutation of
/// 0..nvars-1 and old index i becomes perm[i].
FactorExpr permute_variables(const FactorExpr& e, const std::vector<std::size_t>& perm);

/// Applies the expression to a polynomial factor by factor, without normal
/// ordering. Serves as the independent oracle for normal_order.
Polynomial apply_written(const FactorExpr& e, const Polynomial& p);

/// Normal-ordered differential operator: sum of q * x^alpha d^beta with all
/// multiplications to the left of all derivatives. The normal form is the
/// unique canonical representation, so operator equality is map equality.
class WeylOperator {
 public:
  /// (alpha, beta) exponent pair; alpha multiplies, beta differentiates.
  using Key = std::pair<Monomial, Monomial>;
  using TermMap = std::map<Key, Rational>;

  explicit WeylOperator(std::size_t nvars) : nvars_(nvars) {}

  static WeylOperator identity(std::size_t nvars);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  void add_term(const Monomial& alpha, const Monomial& beta, const Rational& c);

  WeylOperator operator-() const;
  WeylOperator& operator+=(const WeylOperator& other);
  WeylOperator& operator-=(const WeylOperator& other);
  WeylOperator& operator*=(const Rational& s);
  friend WeylOperator operator+(WeylOperator a, const WeylOperator& b) { a += b; return a; }
  friend WeylOperator operator-(WeylOperator a, const WeylOperator& b) { a -= b; return a; }
  friend WeylOperator operator*(const Rational& s, WeylOperator a) { a *= s; return a; }

  Polynomial apply(const Polynomial& p) const;

  /// Action on f * e^(a.x): same frequency, polynomial part transformed by
  /// the operator with every derivative d_i replaced by d_i + a_i.
  ExpPoly apply_exp(const ExpPoly& v) const;

  /// The conjugated operator with d_i replaced by d_i + a_i (binomial
  /// expansion of each derivative power).
  WeylOperator shift_derivatives(const std::vector<Rational>& a) const;

  bool operator==(const WeylOperator& other) const {
    return nvars_ == other.nvars_ && terms_ == other.terms_;
  }
  bool operator!=(const WeylOperator& other) const { return !(*this == other); }

 private:
  std::size_t nvars_;
  TermMap terms_;
};

/// Rewrites a factor expression into its unique normal form using
/// [d_i, x_i] = 1. Application semantics are preserved exactly.
WeylOperator normal_order(const FactorExpr& e);

/// apply(compose(a, b), p) == apply(a, apply(b, p)) for every p.
WeylOperator compose(const WeylOperator& a, const WeylOperator& b);

WeylOperator commutator(const WeylOperator& a, const WeylOperator& b);

}  // namespace oscrep
