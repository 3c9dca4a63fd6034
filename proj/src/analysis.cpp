#include "oscrep/analysis.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

#include "oscrep/expr_parse.hpp"

namespace oscrep {

std::vector<Monomial> Window::enumerate(std::size_t nvars) const {
  std::vector<Monomial> out;
  for (const Monomial& m : monomials_up_to_degree(nvars, degree)) {
    if (exclude_slot0 && m.exponent(0) != 0) continue;
    if (grade && signed_degree(m, grade_plus, grade_minus) != *grade) continue;
    out.push_back(m);
  }
  return out;
}

SparseVec<Monomial> poly_to_vec(const Polynomial& p) {
  std::vector<SparseVec<Monomial>::Entry> entries(p.terms().begin(), p.terms().end());
  return SparseVec<Monomial>::from_entries(std::move(entries));
}

Polynomial vec_to_poly(const SparseVec<Monomial>& v, std::size_t nvars) {
  Polynomial p(nvars);
  for (const auto& [m, c] : v.entries()) p.add_term(m, c);
  return p;
}

SparseVec<WeylOperator::Key> op_to_vec(const WeylOperator& op) {
  std::vector<SparseVec<WeylOperator::Key>::Entry> entries(op.terms().begin(), op.terms().end());
  return SparseVec<WeylOperator::Key>::from_entries(std::move(entries));
}

SpanBasis<Monomial> monomial_span(const std::vector<Monomial>& monos) {
  SpanBasis<Monomial> out;
  for (const Monomial& m : monos) out.insert(SparseVec<Monomial>::unit(m));
  return out;
}

SpanBasis<Monomial> degree_window_span(std::size_t nvars, int bound) {
  return monomial_span(monomials_up_to_degree(nvars, bound));
}

SpanBasis<Monomial> window_intersection(const SpanBasis<Monomial>& span,
                                        const std::set<Monomial>& window) {
  using FlaggedKey = std::pair<int, Monomial>;
  SpanBasis<FlaggedKey> flagged;
  for (const auto& row : span.rows()) {
    std::vector<SparseVec<FlaggedKey>::Entry> entries;
    entries.reserve(row.size());
    for (const auto& [m, c] : row.entries()) {
      entries.emplace_back(FlaggedKey{window.count(m) ? 1 : 0, m}, c);
    }
    flagged.insert(SparseVec<FlaggedKey>::from_entries(std::move(entries)));
  }
  // rows pivoting inside the window block have support entirely inside it
  SpanBasis<Monomial> out;
  for (const auto& row : flagged.rows()) {
    if (row.leading_key().first != 1) continue;
    std::vector<SparseVec<Monomial>::Entry> entries;
    entries.reserve(row.size());
    for (const auto& [key, c] : row.entries()) entries.emplace_back(key.second, c);
    out.insert(SparseVec<Monomial>::from_entries(std::move(entries)));
  }
  return out;
}

std::size_t binomial_count(int n, int k) {
  if (k < 0 || k > n) return 0;
  Rational r(1);
  for (int i = 1; i <= k; ++i) r *= Rational(n - k + i, i);
  r.canonicalize();
  return static_cast<std::size_t>(r.get_num().get_ui());
}

std::vector<WeylOperator> effective_ops(const RepTable& table) {
  if (!table.spec().freq_is_zero()) return table.exp_twisted();
  std::vector<WeylOperator> out;
  out.reserve(table.dim());
  for (std::size_t i = 0; i < table.dim(); ++i) out.push_back(table.op(i));
  return out;
}

// ---------------------------------------------------------------------------

HomReport verify_homomorphism(const RepTable& table, const StructureTable& oracle,
                              const Window& window) {
  if (oracle.dim() != table.dim()) {
    throw std::invalid_argument("verify_homomorphism: table and oracle dimension mismatch");
  }
  for (std::size_t i = 0; i < table.dim(); ++i) {
    if (oracle.basis()[i].label != table.basis()[i].label) {
      throw std::invalid_argument("verify_homomorphism: basis order mismatch at " +
                                  oracle.basis()[i].label);
    }
  }
  const auto ops = effective_ops(table);
  const auto monos = window.enumerate(table.nvars());
  std::vector<Polynomial> mono_polys;
  mono_polys.reserve(monos.size());
  for (const auto& m : monos) mono_polys.push_back(Polynomial::from_monomial(m));

  HomReport report;
  for (std::size_t i = 0; i < ops.size(); ++i) {
    for (std::size_t j = 0; j < ops.size(); ++j) {
      WeylOperator residual = commutator(ops[i], ops[j]);
      for (const auto& [k, coeff] : oracle.bracket(i, j)) {
        residual -= coeff * ops[k];
      }
      ++report.pairs;
      if (!residual.is_zero()) ++report.pairs_with_nonzero_residual;
      for (std::size_t t = 0; t < monos.size(); ++t) {
        const Polynomial r = residual.apply(mono_polys[t]);
        ++report.applications;
        if (!r.is_zero()) {
          report.violations.push_back({table.basis()[i].label, table.basis()[j].label, monos[t],
                                       to_string(r, variable_names(table.spec()))});
        }
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------

WeightReport weight_decompose(const RepTable& table, const Window& window,
                              const std::vector<std::size_t>& cartan_indices) {
  if (!table.spec().freq_is_zero()) {
    throw std::runtime_error("weight_decompose: not a weight basis (nonzero frequency vector)");
  }
  WeightReport report;
  for (const Monomial& m : window.enumerate(table.nvars())) {
    const Polynomial p = Polynomial::from_monomial(m);
    std::vector<Rational> weight;
    weight.reserve(cartan_indices.size());
    for (std::size_t idx : cartan_indices) {
      const Polynomial image = table.op(idx).apply(p);
      if (image.is_zero()) {
        weight.push_back(Rational(0));
      } else if (image.term_count() == 1 && image.terms().begin()->first == m) {
        weight.push_back(image.terms().begin()->second);
      } else {
        throw std::runtime_error("weight_decompose: not a weight basis (monomial is not a joint eigenvector)");
      }
    }
    ++report.monomials;
    const std::size_t mult = ++report.multiplicity[weight];
    report.max_multiplicity = std::max(report.max_multiplicity, mult);
  }
  return report;
}

// ---------------------------------------------------------------------------

GradingReport check_grading(const RepTable& table, int max_abs_grade, int degree_bound) {
  const RepSpec& spec = table.spec();
  if (spec.algebra != AlgebraKind::SL || !spec.freq_is_zero()) {
    throw std::invalid_argument("check_grading: needs an sl table with zero frequency vector");
  }
  const int n = spec.rank;
  const int n1 = static_cast<int>(spec.swap_set.size());
  for (int i = 1; i <= n1; ++i) {
    if (!spec.swap_set.count(i)) {
      throw std::invalid_argument("check_grading: swap set must be {1..n1}");
    }
  }
  if (n1 < 1 || n1 >= n) throw std::invalid_argument("check_grading: need 1 <= n1 < n");

  Window slice;
  slice.degree = degree_bound;
  for (int r = n1; r < n; ++r) slice.grade_plus.push_back(static_cast<std::size_t>(r));
  for (int i = 0; i < n1; ++i) slice.grade_minus.push_back(static_cast<std::size_t>(i));

  const WeylOperator grading_op = normal_order(
      FactorExpr::signed_euler(static_cast<std::size_t>(n), slice.grade_plus, slice.grade_minus));
  const WeylOperator& lower = table.op(sl_unit_label(n + 1, 1));
  const WeylOperator& raise = table.op(sl_unit_label(n, n + 1));
  const auto names = variable_names(spec);

  GradingReport report;
  report.max_abs_grade = max_abs_grade;
  report.degree = degree_bound;
  for (int k = -max_abs_grade; k <= max_abs_grade; ++k) {
    slice.grade = k;
    for (const Monomial& m : slice.enumerate(static_cast<std::size_t>(n))) {
      const Polynomial f = Polynomial::from_monomial(m);
      ++report.vectors_checked;

      const Polynomial eig = grading_op.apply(f) - f * Rational(k);
      if (!eig.is_zero()) {
        report.failures.push_back("signed Euler eigenvalue mismatch on " + to_string(f, names));
      }

      const Polynomial lowered = lower.apply(f);
      if (lowered != f.times_variable(0)) {
        report.failures.push_back("lowering image mismatch on " + to_string(f, names));
      } else {
        for (const auto& [mono, c] : lowered.terms()) {
          if (signed_degree(mono, slice.grade_plus, slice.grade_minus) != k - 1) {
            report.failures.push_back("lowering image leaves slice k-1 on " + to_string(f, names));
          }
        }
      }

      const Polynomial raised = raise.apply(f);
      const Polynomial expected = f.times_variable(static_cast<std::size_t>(n - 1)) *
                                  (Rational(k) + spec.c - Rational(n1));
      if (raised != expected) {
        report.failures.push_back("raising image mismatch on " + to_string(f, names));
      } else {
        for (const auto& [mono, c] : raised.terms()) {
          if (signed_degree(mono, slice.grade_plus, slice.grade_minus) != k + 1) {
            report.failures.push_back("raising image leaves slice k+1 on " + to_string(f, names));
          }
        }
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------

PowerReport power_identities(const RepTable& table, int kmax) {
  const RepSpec& spec = table.spec();
  if (spec.algebra != AlgebraKind::SP || !spec.swap_set.empty() || !spec.freq_is_zero()) {
    throw std::invalid_argument("power_identities: needs the plain sp table");
  }
  const int m = spec.rank;
  const std::size_t nv = spec.nvars();
  const WeylOperator& raising = table.op(sp_a_label(m, m + 1, m + 1));
  const WeylOperator& transfer = table.op(sp_c_label(m, 1, m + 1));
  const auto names = variable_names(spec);

  PowerReport report;
  report.kmax = kmax;

  Polynomial v = Polynomial::constant(nv, Rational(1));
  Rational scale(1);
  for (int k = 1; k <= kmax; ++k) {
    v = raising.apply(v);
    scale *= (Rational(k - 1) + spec.c);
    const Polynomial expected = Polynomial::variable(nv, 0, k) * scale;
    if (v != expected) {
      report.failures.push_back("raising power " + std::to_string(k) + " is " + to_string(v, names) +
                                ", expected " + to_string(expected, names));
    }
  }

  for (int k = 0; k <= kmax; ++k) {
    Polynomial w = Polynomial::variable(nv, 0, k);
    Rational factor(1);
    for (int s = 1; s <= k; ++s) {
      w = transfer.apply(w);
      factor *= Rational(k - s + 1);
      Polynomial expected(nv);
      expected.add_term(
          Monomial::variable(nv, 0, k - s).times(Monomial::variable(nv, 1, s)), factor);
      if (w != expected) {
        report.failures.push_back("transfer power (k=" + std::to_string(k) + ",s=" + std::to_string(s) +
                                  ") is " + to_string(w, names) + ", expected " + to_string(expected, names));
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------

namespace {

struct ClosureRun {
  SpanBasis<Monomial> span;
  int levels = 0;
  bool stabilized = false;
  std::size_t covered = 0;
  bool saturated = false;
};

ClosureRun run_closure(const std::vector<WeylOperator>& ops, const Polynomial& seed,
                       int max_levels, const std::vector<Monomial>& window,
                       const SpanBasis<Monomial>* quotient_mod,
                       const std::function<void(const SpanBasis<Monomial>&)>& per_level = {}) {
  ClosureRun run;
  std::vector<SparseVec<Monomial>> targets;
  targets.reserve(window.size());
  for (const Monomial& m : window) {
    SparseVec<Monomial> t = SparseVec<Monomial>::unit(m);
    if (quotient_mod) t = quotient_mod->reduce(std::move(t));
    targets.push_back(std::move(t));
  }
  std::vector<bool> hit(targets.size(), false);

  auto update_cover = [&]() {
    for (std::size_t i = 0; i < targets.size(); ++i) {
      if (hit[i]) continue;
      if (targets[i].is_zero() || run.span.contains(targets[i])) {
        hit[i] = true;
        ++run.covered;
      }
    }
    run.saturated = run.covered == targets.size();
  };

  SparseVec<Monomial> seed_vec = poly_to_vec(seed);
  if (quotient_mod) seed_vec = quotient_mod->reduce(std::move(seed_vec));
  std::vector<SparseVec<Monomial>> frontier;
  if (!seed_vec.is_zero()) {
    run.span.insert(seed_vec);
    frontier.push_back(std::move(seed_vec));
  }
  update_cover();
  if (per_level) per_level(run.span);

  const std::size_t nvars = seed.nvars();
  for (int level = 1; level <= max_levels; ++level) {
    if (run.saturated || frontier.empty()) break;
    std::vector<SparseVec<Monomial>> next;
    for (const auto& row : frontier) {
      const Polynomial p = vec_to_poly(row, nvars);
      for (const auto& op : ops) {
        SparseVec<Monomial> image = poly_to_vec(op.apply(p));
        if (quotient_mod) image = quotient_mod->reduce(std::move(image));
        image = run.span.reduce(std::move(image));
        if (image.is_zero()) continue;
        run.span.insert(image);
        next.push_back(std::move(image));
      }
    }
    run.levels = level;
    frontier = std::move(next);
    update_cover();
    if (per_level) per_level(run.span);
    if (frontier.empty()) run.stabilized = true;
  }
  return run;
}

}  // namespace

ClosureReport submodule_closure(const RepTable& table, const ExpPoly& seed, int max_word_len,
                                const Window& target) {
  if (seed.poly.is_zero()) throw std::invalid_argument("submodule_closure: seed must be nonzero");
  if (max_word_len < 1) throw std::invalid_argument("submodule_closure: word length must be >= 1");
  if (seed.freq != table.spec().freq_or_zero()) {
    throw std::invalid_argument("submodule_closure: seed frequency must match the spec");
  }
  const auto ops = effective_ops(table);
  const auto window = target.enumerate(table.nvars());
  ClosureRun run = run_closure(ops, seed.poly, max_word_len, window, nullptr);

  ClosureReport report;
  report.seed = to_string(seed.poly, variable_names(table.spec()));
  report.word_length = run.levels;
  report.stabilized = run.stabilized;
  report.final_rank = run.span.rank();
  report.window_rank = window.size();
  report.window_covered = run.covered;
  report.saturated = run.saturated;
  report.span = std::move(run.span);
  return report;
}

// ---------------------------------------------------------------------------

bool invariance_exact(const RepTable& table, const SpanBasis<Monomial>& subspace) {
  const auto ops = effective_ops(table);
  for (const auto& op : ops) {
    for (const auto& row : subspace.rows()) {
      const Polynomial image = op.apply(vec_to_poly(row, table.nvars()));
      if (!subspace.contains(poly_to_vec(image))) return false;
    }
  }
  return true;
}

DenseMat restriction_matrix(const WeylOperator& op, const SpanBasis<Monomial>& subspace) {
  const std::size_t d = subspace.rank();
  DenseMat mat(d * d, Rational(0));
  for (std::size_t j = 0; j < d; ++j) {
    const Polynomial image = op.apply(vec_to_poly(subspace.rows()[j], op.nvars()));
    const auto coords = subspace.coordinates(poly_to_vec(image));
    if (!coords) throw std::invalid_argument("restriction_matrix: subspace is not invariant");
    for (std::size_t i = 0; i < d; ++i) mat[i * d + j] = (*coords)[i];
  }
  return mat;
}

namespace {

DenseMat mat_mul(const DenseMat& a, const DenseMat& b, std::size_t d) {
  DenseMat out(d * d, Rational(0));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < d; ++k) {
      const Rational& aik = a[i * d + k];
      if (aik == 0) continue;
      for (std::size_t j = 0; j < d; ++j) {
        const Rational& bkj = b[k * d + j];
        if (bkj != 0) out[i * d + j] += aik * bkj;
      }
    }
  }
  return out;
}

SparseVec<std::pair<int, int>> dense_to_vec(const DenseMat& m, std::size_t d) {
  std::vector<SparseVec<std::pair<int, int>>::Entry> entries;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const Rational& c = m[i * d + j];
      if (c != 0) entries.emplace_back(std::make_pair(static_cast<int>(i), static_cast<int>(j)), c);
    }
  }
  return SparseVec<std::pair<int, int>>::from_entries(std::move(entries));
}

}  // namespace

std::size_t matrix_algebra_dim(const std::vector<DenseMat>& gens, std::size_t d,
                               std::size_t stop_at) {
  SpanBasis<std::pair<int, int>> span;
  std::deque<DenseMat> worklist;
  DenseMat identity(d * d, Rational(0));
  for (std::size_t i = 0; i < d; ++i) identity[i * d + i] = 1;
  span.insert(dense_to_vec(identity, d));
  worklist.push_back(std::move(identity));

  while (!worklist.empty() && span.rank() < stop_at) {
    const DenseMat word = std::move(worklist.front());
    worklist.pop_front();
    for (const DenseMat& g : gens) {
      DenseMat prod = mat_mul(word, g, d);
      if (span.insert(dense_to_vec(prod, d))) {
        if (span.rank() >= stop_at) return span.rank();
        worklist.push_back(std::move(prod));
      }
    }
  }
  return span.rank();
}

BurnsideResult burnside_irreducible(const RepTable& table, const SpanBasis<Monomial>& subspace) {
  const std::size_t d = subspace.rank();
  if (d == 0) throw std::invalid_argument("burnside_irreducible: subspace must be nonzero");
  const auto ops = effective_ops(table);
  std::vector<DenseMat> gens;
  gens.reserve(ops.size());
  for (const auto& op : ops) gens.push_back(restriction_matrix(op, subspace));

  BurnsideResult result;
  result.full_dim = d * d;
  result.algebra_dim = matrix_algebra_dim(gens, d, result.full_dim);
  result.irreducible = result.algebra_dim == result.full_dim;
  return result;
}

// ---------------------------------------------------------------------------

SeriesReport composition_series(int m, int ell, int quotient_degrees, int max_word_len) {
  if (ell < 0) throw std::invalid_argument("composition_series: ell must be a nonnegative integer");
  RepSpec spec;
  spec.algebra = AlgebraKind::SP;
  spec.rank = m;
  spec.c = Rational(-ell);
  const RepTable table = build_sp(spec);
  const std::size_t nv = spec.nvars();

  SeriesReport report;
  report.m = m;
  report.ell = ell;

  const SpanBasis<Monomial> invariant_space = degree_window_span(nv, ell);
  report.dim = invariant_space.rank();
  report.dim_expected = binomial_count(2 * m + 1 + ell, 2 * m + 1);
  report.invariant = invariance_exact(table, invariant_space);

  if (report.invariant) {
    const BurnsideResult burnside = burnside_irreducible(table, invariant_space);
    report.burnside_dim = burnside.algebra_dim;
    report.burnside_expected = burnside.full_dim;
  } else {
    report.burnside_expected = report.dim * report.dim;
  }

  // quotient evidence: closure of x_1^(ell+1) modulo the invariant subspace
  std::vector<Monomial> quotient_window;
  for (const Monomial& mono : monomials_up_to_degree(nv, ell + quotient_degrees)) {
    if (mono.degree() > ell) quotient_window.push_back(mono);
  }
  const auto ops = effective_ops(table);
  const Polynomial seed = Polynomial::variable(nv, 1, ell + 1);
  ClosureRun quotient = run_closure(ops, seed, max_word_len, quotient_window, &invariant_space);
  report.quotient_saturated = quotient.saturated;
  report.quotient_word_length = quotient.levels;

  // the constant function is singular; record its weight data
  Window w;
  w.degree = 0;
  const auto singular = singular_vectors(table, w, sp_default_convention(m));
  const Polynomial one = Polynomial::constant(nv, Rational(1));
  for (const auto& sv : singular) {
    if (sv.vec == one) {
      report.singular_found = true;
      report.singular_weight = sv.weight;
      report.singular_fundamental = sv.fundamental;
      break;
    }
  }
  return report;
}

// ---------------------------------------------------------------------------

RootConvention sl_standard_convention(int n) {
  RootConvention conv;
  for (int r = 1; r <= n; ++r) conv.cartan_labels.push_back(sl_cartan_label(r));
  for (int i = 1; i <= n; ++i) conv.raising_labels.push_back(sl_unit_label(i, i + 1));
  for (int i = 0; i < n; ++i) {
    std::vector<Rational> coroot(static_cast<std::size_t>(n), Rational(0));
    coroot[static_cast<std::size_t>(i)] = 1;
    conv.coroots.push_back(std::move(coroot));
  }
  return conv;
}

RootConvention corner_sl_convention(int n) {
  RootConvention conv;
  for (int r = 1; r <= n - 1; ++r) conv.cartan_labels.push_back(sl_cartan_label(r));
  for (int i = 1; i <= n - 1; ++i) conv.raising_labels.push_back(sl_unit_label(i, i + 1));
  for (int i = 0; i < n - 1; ++i) {
    std::vector<Rational> coroot(static_cast<std::size_t>(n - 1), Rational(0));
    coroot[static_cast<std::size_t>(i)] = 1;
    conv.coroots.push_back(std::move(coroot));
  }
  return conv;
}

RootConvention sp_default_convention(int m) {
  RootConvention conv;
  for (int i = 1; i <= m + 1; ++i) conv.cartan_labels.push_back(sp_c_label(m, i, i));
  for (int i = 1; i <= m; ++i) {
    conv.raising_labels.push_back(sp_c_label(m, m + 1 - i, m + 2 - i));
    std::vector<Rational> coroot(static_cast<std::size_t>(m + 1), Rational(0));
    coroot[static_cast<std::size_t>(m - i)] = 1;
    coroot[static_cast<std::size_t>(m + 1 - i)] = -1;
    conv.coroots.push_back(std::move(coroot));
  }
  conv.raising_labels.push_back(sp_b_label(m, 1, 1));
  std::vector<Rational> long_coroot(static_cast<std::size_t>(m + 1), Rational(0));
  long_coroot[0] = -1;
  conv.coroots.push_back(std::move(long_coroot));
  return conv;
}

RootConvention corner_sp_default_convention(int m) {
  RootConvention conv;
  for (int i = 1; i <= m; ++i) conv.cartan_labels.push_back(sp_c_label(m, i, i));
  for (int i = 1; i <= m - 1; ++i) {
    conv.raising_labels.push_back(sp_c_label(m, m - i, m + 1 - i));
    std::vector<Rational> coroot(static_cast<std::size_t>(m), Rational(0));
    coroot[static_cast<std::size_t>(m - 1 - i)] = 1;
    coroot[static_cast<std::size_t>(m - i)] = -1;
    conv.coroots.push_back(std::move(coroot));
  }
  conv.raising_labels.push_back(sp_b_label(m, 1, 1));
  std::vector<Rational> long_coroot(static_cast<std::size_t>(m), Rational(0));
  long_coroot[0] = -1;
  conv.coroots.push_back(std::move(long_coroot));
  return conv;
}

std::vector<SingularVector> singular_vectors(const RepTable& table, const Window& window,
                                             const RootConvention& convention) {
  if (!table.spec().freq_is_zero()) {
    throw std::invalid_argument("singular_vectors: needs a zero frequency vector");
  }
  if (convention.raising_labels.empty()) {
    throw std::invalid_argument("singular_vectors: empty raising list");
  }
  std::vector<const WeylOperator*> cartans, raisings;
  for (const auto& label : convention.cartan_labels) cartans.push_back(&table.op(label));
  for (const auto& label : convention.raising_labels) raisings.push_back(&table.op(label));

  // group window monomials by homogeneous degree, then by weight
  std::map<int, std::map<std::vector<Rational>, std::vector<Monomial>>> groups;
  for (const Monomial& m : window.enumerate(table.nvars())) {
    const Polynomial p = Polynomial::from_monomial(m);
    std::vector<Rational> weight;
    for (const auto* h : cartans) {
      const Polynomial image = h->apply(p);
      if (image.is_zero()) {
        weight.push_back(Rational(0));
      } else if (image.term_count() == 1 && image.terms().begin()->first == m) {
        weight.push_back(image.terms().begin()->second);
      } else {
        throw std::runtime_error("singular_vectors: monomial is not a joint Cartan eigenvector");
      }
    }
    groups[m.degree()][std::move(weight)].push_back(m);
  }

  std::vector<SingularVector> out;
  for (const auto& [deg, by_weight] : groups) {
    for (const auto& [weight, monos] : by_weight) {
      // constraints: coefficient of each output monomial of each raising op
      std::map<std::pair<std::size_t, Monomial>, std::vector<SparseVec<Monomial>::Entry>> rows;
      for (const Monomial& m : monos) {
        const Polynomial p = Polynomial::from_monomial(m);
        for (std::size_t r = 0; r < raisings.size(); ++r) {
          const Polynomial image = raisings[r]->apply(p);
          for (const auto& [outm, c] : image.terms()) {
            rows[{r, outm}].emplace_back(m, c);
          }
        }
      }
      std::vector<SparseVec<Monomial>> constraints;
      constraints.reserve(rows.size());
      for (auto& [key, entries] : rows) {
        constraints.push_back(SparseVec<Monomial>::from_entries(std::move(entries)));
      }
      const SpanBasis<Monomial> solutions = nullspace(constraints, monos);
      for (const auto& sol : solutions.rows()) {
        SingularVector sv;
        sv.vec = vec_to_poly(sol, table.nvars());
        sv.weight = weight;
        sv.degree = deg;
        for (const auto& coroot : convention.coroots) {
          Rational f(0);
          for (std::size_t j = 0; j < coroot.size(); ++j) f += coroot[j] * weight[j];
          sv.fundamental.push_back(f);
        }
        out.push_back(std::move(sv));
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

SliceReport graded_slice_closure(const RepSpec& spec, int k, int seed_degree, int window_degree,
                                 int max_word_len) {
  const auto shape = sp_swap_shape(spec);
  if (!shape) {
    throw std::invalid_argument("graded_slice_closure: swap set must have the normalized shape");
  }
  const auto [m1, m2] = *shape;
  const int m = spec.rank;
  const RepTable table = build_sp(spec);

  Window slice;
  slice.degree = window_degree;
  slice.grade = k;
  slice.exclude_slot0 = true;
  for (int r = m1 + 1; r <= m; ++r) slice.grade_plus.push_back(static_cast<std::size_t>(r));
  for (int i = 1; i <= m2; ++i) slice.grade_plus.push_back(static_cast<std::size_t>(m + i));
  for (int i = 1; i <= m1; ++i) slice.grade_minus.push_back(static_cast<std::size_t>(i));
  for (int r = m2 + 1; r <= m; ++r) slice.grade_minus.push_back(static_cast<std::size_t>(m + r));

  const auto window = slice.enumerate(spec.nvars());
  const std::set<Monomial> window_set(window.begin(), window.end());

  // slice consistency: the grading operator scales slice monomials by k plus
  // the shifted constant
  const WeylOperator& grading_op = table.op(sp_c_label(m, m + 1, m + 1));
  const Rational expected_eigen = Rational(k) + swapped_constant(spec);
  for (const Monomial& mono : window) {
    const Polynomial f = Polynomial::from_monomial(mono);
    if (grading_op.apply(f) != f * expected_eigen) {
      throw std::logic_error("graded_slice_closure: slice eigenvalue mismatch");
    }
  }

  std::vector<WeylOperator> corner_ops;
  for (std::size_t idx : select_subalgebra(AlgebraKind::SP, m, Subalgebra::Corner)) {
    corner_ops.push_back(table.op(idx));
  }

  SliceReport report;
  report.k = k;
  report.m1 = m1;
  report.m2 = m2;
  report.window_rank = window.size();
  report.all_saturated = true;

  std::vector<SpanBasis<Monomial>> classes;
  for (const Monomial& seed_mono : window) {
    if (seed_mono.degree() > seed_degree) continue;
    std::vector<std::size_t> intersection_ranks;
    auto per_level = [&](const SpanBasis<Monomial>& span) {
      intersection_ranks.push_back(window_intersection(span, window_set).rank());
    };
    const Polynomial seed = Polynomial::from_monomial(seed_mono);
    ClosureRun run = run_closure(corner_ops, seed, max_word_len, window, nullptr, per_level);

    SliceSeedResult seed_result;
    seed_result.seed = seed_mono;
    seed_result.saturated = run.saturated;
    seed_result.window_covered = run.covered;
    seed_result.stabilized =
        run.saturated || run.stabilized ||
        (intersection_ranks.size() >= 2 &&
         intersection_ranks.back() == intersection_ranks[intersection_ranks.size() - 2]);
    if (!run.saturated) report.all_saturated = false;

    const SpanBasis<Monomial> signature = window_intersection(run.span, window_set);
    std::size_t class_id = classes.size();
    for (std::size_t i = 0; i < classes.size(); ++i) {
      if (classes[i] == signature) {
        class_id = i;
        break;
      }
    }
    if (class_id == classes.size()) classes.push_back(signature);
    seed_result.class_id = class_id;
    report.seeds.push_back(std::move(seed_result));
  }
  report.num_classes = classes.size();
  return report;
}

}  // namespace oscrep
