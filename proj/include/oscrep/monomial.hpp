#pragma once

#include <cstddef>
#include <vector>

namespace oscrep {

/// Exponent vector of a monomial over a fixed list of variables.
///
/// The total order is graded lexicographic: lower total degree first, and
/// within one degree the monomial with the higher power of an earlier
/// variable comes first (x1^2 < x1*x2 < x2^2). Iterating a map keyed by
/// Monomial therefore walks terms in the canonical order used everywhere
/// in this project.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<int> exps);

  static Monomial variable(std::size_t nvars, std::size_t index, int power = 1);

  std::size_t nvars() const { return exps_.size(); }
  int exponent(std::size_t i) const;
  const std::vector<int>& exps() const { return exps_; }
  int degree() const;
  bool is_constant() const { return degree() == 0; }

  Monomial times(const Monomial& other) const;
  Monomial times_variable(std::size_t i, int power = 1) const;

  bool operator==(const Monomial& other) const { return exps_ == other.exps_; }
  bool operator!=(const Monomial& other) const { return !(*this == other); }
  bool operator<(const Monomial& other) const;

 private:
  std::vector<int> exps_;
};

/// All monomials in nvars variables of total degree <= bound, sorted in the
/// canonical order.
std::vector<Monomial> monomials_up_to_degree(std::size_t nvars, int bound);

/// Sum of the exponents listed in `plus` minus the sum listed in `minus`.
/// The index sets must be disjoint.
int signed_degree(const Monomial& m, const std::vector<std::size_t>& plus,
                  const std::vector<std::size_t>& minus);

}  // namespace oscrep
