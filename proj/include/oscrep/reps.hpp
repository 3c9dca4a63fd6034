#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "oscrep/lie.hpp"
#include "oscrep/weyl.hpp"

namespace oscrep {

/// Full parameterization of one differential-operator representation:
/// algebra, rank, the scalar c, the set of swapped variables, and the
/// exponential frequency vector.
///
/// swap_set holds 1-based variable indices: 1..n for sl(n+1); for sp(2m+2)
/// the ambient indices 1..2m+1, subject to the admissibility constraint
/// that m+1 is never swapped and at most one of {i, m+1+i} is swapped.
///
/// freq is indexed by internal slot order: (x_1..x_n) for sl and
/// (x_0, x_1..x_m, y_1..y_m) for sp. Empty means zero.
struct RepSpec {
  AlgebraKind algebra = AlgebraKind::SL;
  int rank = 2;
  Rational c;
  std::set<int> swap_set;
  std::vector<Rational> freq;

  std::size_t nvars() const {
    return algebra == AlgebraKind::SL ? static_cast<std::size_t>(rank)
                                      : static_cast<std::size_t>(2 * rank + 1);
  }
  void validate() const;
  bool freq_is_zero() const;
  std::vector<Rational> freq_or_zero() const;
};

/// A representation table: one normal-ordered operator per basis element,
/// aligned with the enumerate_basis order. Immutable after construction.
class RepTable {
 public:
  RepTable(RepSpec spec, std::vector<BasisElement> basis, std::vector<WeylOperator> ops);

  const RepSpec& spec() const { return spec_; }
  const std::vector<BasisElement>& basis() const { return basis_; }
  std::size_t dim() const { return basis_.size(); }
  std::size_t nvars() const { return spec_.nvars(); }

  const WeylOperator& op(std::size_t i) const { return ops_.at(i); }
  const WeylOperator& op(const std::string& label) const { return ops_.at(index_of(label)); }
  std::size_t index_of(const std::string& label) const;

  /// Operators conjugated for the action on poly * e^(freq . x):
  /// every derivative d_i becomes d_i + freq_i.
  std::vector<WeylOperator> exp_twisted() const;

 private:
  RepSpec spec_;
  std::vector<BasisElement> basis_;
  std::vector<WeylOperator> ops_;
};

/// The base inhomogeneous first-order representation of sl(n+1) on
/// polynomials in x_1..x_n: E(i,j) acts as x_i d_j, E(i,n+1) as
/// x_i(D + c), E(n+1,i) as -d_i, with D the degree operator.
RepTable build_sl_base(int n, const Rational& c);

/// The base table with the swap substitution applied to each written
/// expression before normal ordering.
RepTable build_sl_swapped(const RepSpec& spec);

/// Same table, intended for the action on poly * e^(freq . x); the
/// frequency vector rides along in the spec and apply_exp/exp_twisted
/// implement the action.
RepTable build_sl_exp(const RepSpec& spec);

/// Restriction of the (swapped) sl(2m+2) representation to sp(2m+2),
/// derived by expanding each symplectic basis matrix through the ambient
/// table and then relabeling variables into slot order.
RepTable build_sp(const RepSpec& spec);

enum class ExplicitCase { SlSwapped, SpPlain, SpSwapped };

/// Hand-transcribed piecewise operator tables, independent of the swap
/// machinery, usable as cross-check data. SlSwapped requires
/// swap_set == {1..n1} with 1 <= n1 < n; SpSwapped requires the normalized
/// swap shape; SpPlain requires an empty swap set.
RepTable explicit_table(ExplicitCase which, const RepSpec& spec);

/// Image expression of the matrix unit E(r,s), r != s, as written for the
/// base sl representation (before any swap).
FactorExpr sl_written_unit(int n, const Rational& c, int r, int s);
/// Image expression of E(r,r) - E(r+1,r+1).
FactorExpr sl_written_cartan(int n, const Rational& c, int r);
/// Linear extension to an arbitrary traceless matrix.
FactorExpr sl_written_matrix(int n, const Rational& c, const SqMatrix& mat);

/// Swap set of the normalized shape: x_1..x_m1 and y_{m2+1}..y_m.
std::set<int> sp_swap_set(int m, int m1, int m2);

/// Extracts (m1, m2) when the swap set has the normalized shape.
std::optional<std::pair<int, int>> sp_swap_shape(const RepSpec& spec);

/// The constant replacing c after the swap substitution: c - |swap_set|.
Rational swapped_constant(const RepSpec& spec);

/// A frequency vector satisfying the sp irreducibility hypotheses for the
/// normalized swap shape: zero on x_0, one on y_1, and one on x_{m2+1}
/// when m2 < m.
std::vector<Rational> sp_admissible_freq(int m, int m1, int m2);

/// Display names in slot order: x1..xn for sl, x0..xm then y1..ym for sp.
std::vector<std::string> variable_names(const RepSpec& spec);
std::vector<std::string> variable_names(AlgebraKind algebra, int rank);

}  // namespace oscrep
