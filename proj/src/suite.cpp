#include "oscrep/suite.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <random>
#include <sstream>
#include <thread>

#include "oscrep/analysis.hpp"
#include "oscrep/json_io.hpp"

namespace oscrep::suite {

namespace {

const std::vector<Rational>& c_values() {
  static const std::vector<Rational> cs = {rational(1, 2), Rational(3), Rational(-1), Rational(-2)};
  return cs;
}

std::string freq_text(const std::vector<Rational>& freq) {
  if (freq.empty()) return "0";
  bool zero = true;
  for (const auto& a : freq) {
    if (a != 0) zero = false;
  }
  if (zero) return "0";
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < freq.size(); ++i) {
    if (i) os << ",";
    os << to_string(freq[i]);
  }
  os << ")";
  return os.str();
}

std::string cell_name(const RepSpec& spec) {
  std::ostringstream os;
  os << (spec.algebra == AlgebraKind::SL ? "sl n=" : "sp m=") << spec.rank;
  os << " c=" << to_string(spec.c) << " S={";
  bool first = true;
  for (int s : spec.swap_set) {
    if (!first) os << ",";
    first = false;
    os << s;
  }
  os << "} a=" << freq_text(spec.freq);
  return os.str();
}

std::vector<std::set<int>> sl_swap_options(int n) {
  std::vector<std::set<int>> raw;
  raw.push_back({});
  raw.push_back({1});
  raw.push_back({1, 2});
  std::set<int> near_full;
  for (int i = 1; i < n; ++i) near_full.insert(i);
  raw.push_back(near_full);
  std::vector<std::set<int>> out;
  for (auto& s : raw) {
    bool valid = true;
    for (int v : s) {
      if (v > n) valid = false;
    }
    if (valid && std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  }
  return out;
}

std::vector<std::vector<Rational>> sl_freq_options(int n) {
  const std::size_t nv = static_cast<std::size_t>(n);
  std::vector<Rational> zero(nv, Rational(0));
  std::vector<Rational> e1 = zero;
  e1[0] = 1;
  std::vector<Rational> mixed = e1;
  mixed[nv - 1] += 2;
  return {zero, e1, mixed};
}

std::vector<std::pair<int, int>> sp_shapes(int m) {
  std::vector<std::pair<int, int>> out;
  for (int m1 = 1; m1 <= m; ++m1) {
    for (int m2 = m1; m2 <= m; ++m2) out.emplace_back(m1, m2);
  }
  return out;
}

RepTable build_table(const RepSpec& spec) {
  return spec.algebra == AlgebraKind::SL ? build_sl_swapped(spec) : build_sp(spec);
}

// Deterministic parallel map: results land in a pre-sized vector by index.
template <class Fn>
void parallel_for(std::size_t n, int threads, Fn&& fn) {
  threads = std::max(1, std::min<int>(threads, static_cast<int>(n)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      while (true) {
        const std::size_t i = next.fetch_add(1);
        if (i >= n) break;
        fn(i);
      }
    });
  }
  for (auto& th : pool) th.join();
}

std::string run_cells(const std::vector<GridCell>& cells, int threads,
                      const std::function<std::string(const GridCell&)>& check,
                      std::size_t& failures) {
  std::vector<std::string> messages(cells.size());
  parallel_for(cells.size(), threads, [&](std::size_t i) {
    try {
      messages[i] = check(cells[i]);
    } catch (const std::exception& e) {
      messages[i] = std::string("exception: ") + e.what();
    }
  });
  std::ostringstream os;
  failures = 0;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (messages[i].empty()) continue;
    ++failures;
    if (failures <= 8) os << "[" << cells[i].name << "] " << messages[i] << "; ";
  }
  return os.str();
}

}  // namespace

std::vector<GridCell> verification_grid() {
  std::vector<GridCell> cells;
  for (int n = 2; n <= 4; ++n) {
    for (const auto& swaps : sl_swap_options(n)) {
      for (const Rational& c : c_values()) {
        for (const auto& freq : sl_freq_options(n)) {
          RepSpec spec;
          spec.algebra = AlgebraKind::SL;
          spec.rank = n;
          spec.c = c;
          spec.swap_set = swaps;
          spec.freq = freq;
          cells.push_back({spec, cell_name(spec)});
        }
      }
    }
  }
  for (int m = 1; m <= 2; ++m) {
    for (const auto& [m1, m2] : sp_shapes(m)) {
      for (const Rational& c : c_values()) {
        for (int use_freq = 0; use_freq <= 1; ++use_freq) {
          RepSpec spec;
          spec.algebra = AlgebraKind::SP;
          spec.rank = m;
          spec.c = c;
          spec.swap_set = sp_swap_set(m, m1, m2);
          if (use_freq) {
            spec.freq = sp_admissible_freq(m, m1, m2);
          } else {
            spec.freq.assign(spec.nvars(), Rational(0));
          }
          cells.push_back({spec, cell_name(spec)});
        }
      }
    }
    // the unswapped restriction participates in the grid as well
    for (const Rational& c : c_values()) {
      RepSpec spec;
      spec.algebra = AlgebraKind::SP;
      spec.rank = m;
      spec.c = c;
      spec.freq.assign(spec.nvars(), Rational(0));
      cells.push_back({spec, cell_name(spec)});
    }
  }
  return cells;
}

std::vector<GridCell> closure_grid() {
  std::vector<GridCell> out;
  const Rational half = rational(1, 2);
  for (const GridCell& cell : verification_grid()) {
    if (cell.spec.c == half && cell.spec.freq_is_zero()) out.push_back(cell);
  }
  return out;
}

std::vector<GridCell> weight_grid() {
  std::vector<GridCell> out;
  for (const GridCell& cell : verification_grid()) {
    if (cell.spec.freq_is_zero()) out.push_back(cell);
  }
  return out;
}

CriterionResult run_bracket_grid(const Options& opts) {
  const auto cells = verification_grid();
  std::size_t failures = 0;
  const std::string log = run_cells(cells, opts.threads, [](const GridCell& cell) -> std::string {
    const RepTable table = build_table(cell.spec);
    const StructureTable oracle(table.basis());
    Window w;
    w.degree = 5;
    const HomReport report = verify_homomorphism(table, oracle, w);
    if (report.ok()) return {};
    std::ostringstream os;
    os << report.violations.size() << " bracket violations";
    return os.str();
  }, failures);
  CriterionResult result;
  result.id = 1;
  result.name = "bracket identities across the parameter grid (degree <= 5)";
  result.ok = failures == 0;
  std::ostringstream os;
  os << cells.size() << " specs checked";
  if (failures) os << "; " << failures << " failed: " << log;
  result.detail = os.str();
  return result;
}

CriterionResult run_table_cross_checks(const Options& opts) {
  std::vector<GridCell> cells;
  for (int n = 2; n <= 4; ++n) {
    for (int n1 = 1; n1 < n; ++n1) {
      for (const Rational& c : c_values()) {
        RepSpec spec;
        spec.algebra = AlgebraKind::SL;
        spec.rank = n;
        spec.c = c;
        for (int i = 1; i <= n1; ++i) spec.swap_set.insert(i);
        cells.push_back({spec, cell_name(spec)});
      }
    }
  }
  for (int m = 1; m <= 2; ++m) {
    for (const Rational& c : c_values()) {
      RepSpec spec;
      spec.algebra = AlgebraKind::SP;
      spec.rank = m;
      spec.c = c;
      cells.push_back({spec, cell_name(spec)});
      for (const auto& [m1, m2] : sp_shapes(m)) {
        RepSpec swapped = spec;
        swapped.swap_set = sp_swap_set(m, m1, m2);
        cells.push_back({swapped, cell_name(swapped)});
      }
    }
  }

  std::size_t failures = 0;
  const std::string log = run_cells(cells, opts.threads, [](const GridCell& cell) -> std::string {
    const RepTable derived = build_table(cell.spec);
    ExplicitCase which;
    if (cell.spec.algebra == AlgebraKind::SL) {
      which = ExplicitCase::SlSwapped;
    } else {
      which = cell.spec.swap_set.empty() ? ExplicitCase::SpPlain : ExplicitCase::SpSwapped;
    }
    const RepTable transcribed = explicit_table(which, cell.spec);
    std::ostringstream os;
    std::size_t bad = 0;
    for (std::size_t i = 0; i < derived.dim(); ++i) {
      if (derived.op(i) != transcribed.op(i)) {
        ++bad;
        if (bad <= 3) os << derived.basis()[i].label << " differs; ";
      }
    }
    return bad ? os.str() : std::string{};
  }, failures);

  CriterionResult result;
  result.id = 2;
  result.name = "swap-derived tables equal the transcribed tables";
  result.ok = failures == 0;
  std::ostringstream os;
  os << cells.size() << " tables compared coefficient-exactly";
  if (failures) os << "; " << failures << " failed: " << log;
  result.detail = os.str();
  return result;
}

CriterionResult run_identity_suite(const Options& opts) {
  std::vector<std::string> failures;

  // the defining swap symmetry: [d_r, x_r] = 1 = [-x_r, d_r]
  {
    const std::size_t nv = 3;
    const WeylOperator id = WeylOperator::identity(nv);
    for (std::size_t r = 0; r < nv; ++r) {
      const WeylOperator dr = normal_order(FactorExpr::derivative(nv, r));
      const WeylOperator xr = normal_order(FactorExpr::variable(nv, r));
      const WeylOperator neg_xr = normal_order(-FactorExpr::variable(nv, r));
      if (commutator(dr, xr) != id) failures.push_back("[d,x] != 1 at r=" + std::to_string(r));
      if (commutator(neg_xr, dr) != id) failures.push_back("[-x,d] != 1 at r=" + std::to_string(r));
    }
  }

  // grade shifts with the exact scalar factor, |k| <= 4
  for (int n = 2; n <= 4; ++n) {
    for (int n1 = 1; n1 < n; ++n1) {
      for (const Rational& c : c_values()) {
        RepSpec spec;
        spec.algebra = AlgebraKind::SL;
        spec.rank = n;
        spec.c = c;
        for (int i = 1; i <= n1; ++i) spec.swap_set.insert(i);
        const GradingReport report = check_grading(build_sl_swapped(spec), 4, 6);
        if (!report.ok()) {
          failures.push_back("grading failed at " + cell_name(spec) + ": " + report.failures.front());
        }
      }
    }
  }

  // degree-k slices split along powers of x_0, k <= 5
  for (int m = 1; m <= 2; ++m) {
    const std::size_t nv = static_cast<std::size_t>(2 * m + 1);
    for (int k = 0; k <= 5; ++k) {
      SpanBasis<Monomial> whole;
      for (const Monomial& mono : monomials_up_to_degree(nv, k)) {
        if (mono.degree() == k) whole.insert(SparseVec<Monomial>::unit(mono));
      }
      SpanBasis<Monomial> split;
      for (int s = 0; s <= k; ++s) {
        for (const Monomial& mono : monomials_up_to_degree(nv, k - s)) {
          if (mono.degree() != k - s || mono.exponent(0) != 0) continue;
          split.insert(SparseVec<Monomial>::unit(mono.times_variable(0, s)));
        }
      }
      if (whole != split) {
        failures.push_back("degree split mismatch at m=" + std::to_string(m) + " k=" + std::to_string(k));
      }
    }
  }

  // raising powers and transfer powers, k <= 5
  for (int m = 1; m <= 2; ++m) {
    for (const Rational& c : c_values()) {
      RepSpec spec;
      spec.algebra = AlgebraKind::SP;
      spec.rank = m;
      spec.c = c;
      const PowerReport report = power_identities(build_sp(spec), 5);
      if (!report.ok()) {
        failures.push_back("power identities failed at " + cell_name(spec) + ": " +
                           report.failures.front());
      }
    }
  }

  (void)opts;
  CriterionResult result;
  result.id = 3;
  result.name = "identity suite: swap symmetry, grade shifts, degree splits, power formulas";
  result.ok = failures.empty();
  std::ostringstream os;
  if (failures.empty()) {
    os << "all identities exact";
  } else {
    os << failures.size() << " failures: ";
    for (std::size_t i = 0; i < failures.size() && i < 8; ++i) os << failures[i] << "; ";
  }
  result.detail = os.str();
  return result;
}

CriterionResult run_series_suite(const Options& opts) {
  std::vector<GridCell> cells;
  for (int m = 1; m <= 2; ++m) {
    for (int ell = 0; ell <= 2; ++ell) {
      RepSpec spec;
      spec.algebra = AlgebraKind::SP;
      spec.rank = m;
      spec.c = Rational(-ell);
      cells.push_back({spec, cell_name(spec)});
    }
  }
  std::size_t failures = 0;
  const std::string log = run_cells(cells, opts.threads, [](const GridCell& cell) -> std::string {
    const int m = cell.spec.rank;
    const int ell = static_cast<int>(-cell.spec.c.get_num().get_si());
    const SeriesReport report = composition_series(m, ell, 4);
    std::ostringstream os;
    if (!report.invariant) os << "bounded-degree subspace not invariant; ";
    if (report.dim != report.dim_expected) {
      os << "dim " << report.dim << " != " << report.dim_expected << "; ";
    }
    if (report.burnside_dim != report.burnside_expected) {
      os << "generated matrix algebra " << report.burnside_dim << " != " << report.burnside_expected
         << "; ";
    }
    if (!report.quotient_saturated) os << "quotient closure not saturated; ";
    if (!report.singular_found) {
      os << "constant singular vector not found; ";
    } else if (report.singular_weight.empty() ||
               report.singular_weight.back() != Rational(-ell)) {
      os << "singular weight eigenvalue != c; ";
    }
    // the same subspace must fail invariance away from c = -ell
    RepSpec generic = cell.spec;
    generic.c = rational(1, 2);
    const RepTable table = build_sp(generic);
    if (invariance_exact(table, degree_window_span(generic.nvars(), ell))) {
      os << "subspace unexpectedly invariant at c=1/2; ";
    }
    return os.str();
  }, failures);

  CriterionResult result;
  result.id = 4;
  result.name = "length-two series at c = -ell: invariance, dimension, full matrix algebra, quotient";
  result.ok = failures == 0;
  std::ostringstream os;
  os << cells.size() << " (m, ell) cases";
  if (failures) os << "; " << failures << " failed: " << log;
  result.detail = os.str();
  return result;
}

CriterionResult run_closure_suite(const Options& opts) {
  const auto cells = closure_grid();
  std::size_t failures = 0;
  const std::string log = run_cells(cells, opts.threads, [](const GridCell& cell) -> std::string {
    const RepTable table = build_table(cell.spec);
    const std::size_t nv = cell.spec.nvars();
    Window target;
    target.degree = 4;
    std::ostringstream os;
    for (const Monomial& seed_mono : monomials_up_to_degree(nv, 2)) {
      const ExpPoly seed(Polynomial::from_monomial(seed_mono), cell.spec.freq_or_zero());
      const ClosureReport report = submodule_closure(table, seed, 8, target);
      if (!report.saturated) {
        os << "seed " << report.seed << " covered only " << report.window_covered << "/"
           << report.window_rank << "; ";
      }
    }
    return os.str();
  }, failures);

  // the reducible point: closure from the constant stalls on a rank-3 span
  std::string stall_message;
  {
    RepSpec spec;
    spec.algebra = AlgebraKind::SL;
    spec.rank = 2;
    spec.c = Rational(-1);
    const RepTable table = build_sl_base(2, spec.c);
    Window target;
    target.degree = 3;
    const ExpPoly seed(Polynomial::constant(2, Rational(1)), spec.freq_or_zero());
    const ClosureReport report = submodule_closure(table, seed, 8, target);
    const SpanBasis<Monomial> expected = degree_window_span(2, 1);
    if (!report.stabilized || report.saturated || report.final_rank != 3 ||
        report.span != expected) {
      std::ostringstream os;
      os << "stall case failed: rank " << report.final_rank << " stabilized=" << report.stabilized
         << " saturated=" << report.saturated;
      stall_message = os.str();
    }
  }

  CriterionResult result;
  result.id = 5;
  result.name = "closure saturates all degree-4 windows at c=1/2; stalls at rank 3 for c=-1";
  result.ok = failures == 0 && stall_message.empty();
  std::ostringstream os;
  os << cells.size() << " specs, seeds of degree <= 2, word length 8";
  if (failures) os << "; " << failures << " failed: " << log;
  if (!stall_message.empty()) os << "; " << stall_message;
  result.detail = os.str();
  return result;
}

CriterionResult run_weight_suite(const Options& opts) {
  const auto cells = weight_grid();
  std::size_t failures = 0;
  const std::string log = run_cells(cells, opts.threads, [](const GridCell& cell) -> std::string {
    const RepTable table = build_table(cell.spec);
    Window w;
    w.degree = 6;
    const auto cartan = select_subalgebra(cell.spec.algebra, cell.spec.rank, Subalgebra::Cartan);
    const WeightReport report = weight_decompose(table, w, cartan);
    if (cell.spec.algebra == AlgebraKind::SL && report.max_multiplicity != 1) {
      return "sl weight multiplicity " + std::to_string(report.max_multiplicity) + " != 1";
    }
    if (report.max_multiplicity == 0) return "empty weight report";
    return {};
  }, failures);

  // the rank-one corner image: three explicit operators spanning the image
  std::vector<std::string> corner_failures;
  for (const Rational& c : c_values()) {
    RepSpec spec;
    spec.algebra = AlgebraKind::SP;
    spec.rank = 1;
    spec.c = c;
    spec.swap_set = sp_swap_set(1, 1, 1);
    const RepTable table = build_sp(spec);
    const std::size_t nv = 3;
    const auto x1 = FactorExpr::variable(nv, 1);
    const auto y1 = FactorExpr::variable(nv, 2);
    const auto dx1 = FactorExpr::derivative(nv, 1);
    const auto dy1 = FactorExpr::derivative(nv, 2);
    std::vector<WeylOperator> expected = {
        normal_order(x1 * dx1 + y1 * dy1 + FactorExpr::constant(nv, Rational(1))),
        normal_order(x1 * y1),
        normal_order(dx1 * dy1),
    };
    SpanBasis<WeylOperator::Key> expected_span;
    for (const auto& op : expected) expected_span.insert(op_to_vec(op));
    SpanBasis<WeylOperator::Key> image_span;
    bool contained = true;
    for (std::size_t idx : select_subalgebra(AlgebraKind::SP, 1, Subalgebra::Corner)) {
      const auto vec = op_to_vec(table.op(idx));
      image_span.insert(vec);
      if (!expected_span.contains(vec)) contained = false;
    }
    if (!contained || image_span.rank() != 3 || expected_span.rank() != 3) {
      corner_failures.push_back("corner image mismatch at c=" + to_string(c));
    }
  }

  CriterionResult result;
  result.id = 6;
  result.name = "weight structure: joint eigenvectors, sl multiplicity one, corner image span";
  result.ok = failures == 0 && corner_failures.empty();
  std::ostringstream os;
  os << cells.size() << " specs at degree <= 6";
  if (failures) os << "; " << failures << " failed: " << log;
  for (const auto& f : corner_failures) os << "; " << f;
  result.detail = os.str();
  return result;
}

CriterionResult run_slice_suite(const Options& opts) {
  struct SliceCase {
    int m1, m2, k;
    std::string name;
  };
  std::vector<SliceCase> cases;
  for (const auto& [m1, m2] : sp_shapes(2)) {
    for (int k = -2; k <= 2; ++k) {
      std::ostringstream os;
      os << "m=2 (m1,m2)=(" << m1 << "," << m2 << ") k=" << k;
      cases.push_back({m1, m2, k, os.str()});
    }
  }
  std::vector<std::string> messages(cases.size());
  parallel_for(cases.size(), opts.threads, [&](std::size_t i) {
    try {
      const auto& sc = cases[i];
      RepSpec spec;
      spec.algebra = AlgebraKind::SP;
      spec.rank = 2;
      spec.c = rational(1, 2);
      spec.swap_set = sp_swap_set(2, sc.m1, sc.m2);
      const SliceReport report = graded_slice_closure(spec, sc.k, 3, 5, 8);
      std::ostringstream os;
      if (sc.m1 == sc.m2 && sc.k == 0) {
        if (report.num_classes != 2) os << "expected 2 span classes, got " << report.num_classes << "; ";
        for (const auto& seed : report.seeds) {
          if (!seed.stabilized) os << "seed closure not stabilized; ";
        }
      } else {
        if (!report.all_saturated) os << "slice window not saturated; ";
        if (report.num_classes != 1) os << "expected 1 span class, got " << report.num_classes << "; ";
      }
      messages[i] = os.str();
    } catch (const std::exception& e) {
      messages[i] = std::string("exception: ") + e.what();
    }
  });

  std::size_t failures = 0;
  std::ostringstream log;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    if (messages[i].empty()) continue;
    ++failures;
    if (failures <= 8) log << "[" << cases[i].name << "] " << messages[i];
  }

  CriterionResult result;
  result.id = 7;
  result.name = "graded slices: saturation, and exactly two classes at m1=m2, k=0";
  result.ok = failures == 0;
  std::ostringstream os;
  os << cases.size() << " slice cases (m=2, |k| <= 2, degree <= 5)";
  if (failures) os << "; " << failures << " failed: " << log.str();
  result.detail = os.str();
  return result;
}

CriterionResult run_determinism_suite(const Options& opts) {
  std::vector<std::string> failures;

  auto pipeline_dump = []() {
    RepSpec spec;
    spec.algebra = AlgebraKind::SL;
    spec.rank = 3;
    spec.c = rational(1, 2);
    spec.swap_set = {1};
    const RepTable table = build_sl_swapped(spec);
    const StructureTable oracle(table.basis());
    Window w;
    w.degree = 4;
    Json combined;
    combined["rep"] = rep_json(table);
    combined["bracket"] = hom_json(verify_homomorphism(table, oracle, w), table);
    const ExpPoly seed(Polynomial::variable(3, 0), spec.freq_or_zero());
    combined["closure"] = closure_json(submodule_closure(table, seed, 6, w), true);
    combined["weights"] =
        weight_json(weight_decompose(table, w, select_subalgebra(AlgebraKind::SL, 3, Subalgebra::Cartan)));
    return dump(combined);
  };
  if (pipeline_dump() != pipeline_dump()) {
    failures.push_back("repeated pipeline runs produced different report bytes");
  }

  // canonical echelon form is insertion-order independent
  {
    std::mt19937 rng(20240817u);
    const auto monos = monomials_up_to_degree(3, 4);
    std::vector<SparseVec<Monomial>> vectors;
    for (int v = 0; v < 14; ++v) {
      std::vector<SparseVec<Monomial>::Entry> entries;
      for (const auto& m : monos) {
        if (rng() % 4 == 0) {
          const long num = static_cast<long>(rng() % 11) - 5;
          const long den = static_cast<long>(rng() % 6) + 1;
          if (num != 0) entries.emplace_back(m, rational(num, den));
        }
      }
      vectors.push_back(SparseVec<Monomial>::from_entries(std::move(entries)));
    }
    SpanBasis<Monomial> reference;
    for (const auto& v : vectors) reference.insert(v);
    std::vector<std::size_t> order(vectors.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    for (int shuffle = 0; shuffle < 6; ++shuffle) {
      std::shuffle(order.begin(), order.end(), rng);
      SpanBasis<Monomial> permuted;
      for (std::size_t idx : order) permuted.insert(vectors[idx]);
      if (permuted != reference) {
        failures.push_back("echelon basis depends on insertion order");
        break;
      }
    }
  }

  (void)opts;
  CriterionResult result;
  result.id = 8;
  result.name = "determinism: byte-identical reports, order-independent echelon bases";
  result.ok = failures.empty();
  result.detail = failures.empty() ? "reports and bases reproduce exactly"
                                   : failures.front();
  return result;
}

std::vector<CriterionResult> run_all(const Options& opts) {
  std::vector<CriterionResult> out;
  out.push_back(run_bracket_grid(opts));
  out.push_back(run_table_cross_checks(opts));
  out.push_back(run_identity_suite(opts));
  out.push_back(run_series_suite(opts));
  out.push_back(run_closure_suite(opts));
  out.push_back(run_weight_suite(opts));
  out.push_back(run_slice_suite(opts));
  out.push_back(run_determinism_suite(opts));
  return out;
}

int threads_from_env() {
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  if (hw < 1) hw = 1;
  if (const char* env = std::getenv("OSCREP_THREADS")) {
    const int cap = std::atoi(env);
    if (cap >= 1) return std::min(hw, cap);
  }
  return hw;
}

}  // namespace oscrep::suite
