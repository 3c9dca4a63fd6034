#include "oscrep/reps.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace oscrep {

void RepSpec::validate() const {
  if (algebra == AlgebraKind::SL) {
    if (rank < 2) throw std::invalid_argument("RepSpec: sl rank must be >= 2");
    for (int s : swap_set) {
      if (s < 1 || s > rank) throw std::invalid_argument("RepSpec: swap index outside 1..n");
    }
  } else {
    if (rank < 1) throw std::invalid_argument("RepSpec: sp rank must be >= 1");
    const int m = rank;
    for (int s : swap_set) {
      if (s < 1 || s > 2 * m + 1) throw std::invalid_argument("RepSpec: swap index outside 1..2m+1");
    }
    if (swap_set.count(m + 1)) {
      throw std::invalid_argument("RepSpec: swap set must not contain m+1 (the x_0 slot)");
    }
    for (int i = 1; i <= m; ++i) {
      if (swap_set.count(i) && swap_set.count(m + 1 + i)) {
        throw std::invalid_argument("RepSpec: swap set may contain at most one of {i, m+1+i}");
      }
    }
  }
  if (!freq.empty() && freq.size() != nvars()) {
    throw std::invalid_argument("RepSpec: frequency vector length must equal variable count");
  }
}

bool RepSpec::freq_is_zero() const {
  for (const Rational& a : freq) {
    if (a != 0) return false;
  }
  return true;
}

std::vector<Rational> RepSpec::freq_or_zero() const {
  if (!freq.empty()) return freq;
  return std::vector<Rational>(nvars(), Rational(0));
}

RepTable::RepTable(RepSpec spec, std::vector<BasisElement> basis, std::vector<WeylOperator> ops)
    : spec_(std::move(spec)), basis_(std::move(basis)), ops_(std::move(ops)) {
  if (basis_.size() != ops_.size()) {
    throw std::invalid_argument("RepTable: basis/operator count mismatch");
  }
}

std::size_t RepTable::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (basis_[i].label == label) return i;
  }
  throw std::out_of_range("RepTable: no operator labeled " + label);
}

std::vector<WeylOperator> RepTable::exp_twisted() const {
  std::vector<WeylOperator> out;
  out.reserve(ops_.size());
  const auto a = spec_.freq_or_zero();
  for (const auto& op : ops_) out.push_back(op.shift_derivatives(a));
  return out;
}

FactorExpr sl_written_unit(int n, const Rational& c, int r, int s) {
  if (r == s || r < 1 || s < 1 || r > n + 1 || s > n + 1) {
    throw std::invalid_argument("sl_written_unit: bad indices");
  }
  const std::size_t nv = static_cast<std::size_t>(n);
  if (r == n + 1) return -FactorExpr::derivative(nv, s - 1);
  if (s == n + 1) {
    return FactorExpr::variable(nv, r - 1) *
           (FactorExpr::euler(nv) + FactorExpr::constant(nv, c));
  }
  return FactorExpr::variable(nv, r - 1) * FactorExpr::derivative(nv, s - 1);
}

FactorExpr sl_written_cartan(int n, const Rational& c, int r) {
  if (r < 1 || r > n) throw std::invalid_argument("sl_written_cartan: bad index");
  const std::size_t nv = static_cast<std::size_t>(n);
  if (r < n) {
    return FactorExpr::variable(nv, r - 1) * FactorExpr::derivative(nv, r - 1) -
           FactorExpr::variable(nv, r) * FactorExpr::derivative(nv, r);
  }
  return FactorExpr::euler(nv) + FactorExpr::constant(nv, c) +
         FactorExpr::variable(nv, n - 1) * FactorExpr::derivative(nv, n - 1);
}

FactorExpr sl_written_matrix(int n, const Rational& c, const SqMatrix& mat) {
  if (mat.size() != n + 1) throw std::invalid_argument("sl_written_matrix: size mismatch");
  if (mat.trace() != 0) throw std::invalid_argument("sl_written_matrix: matrix must be traceless");
  FactorExpr out(static_cast<std::size_t>(n));
  std::vector<Rational> diag(static_cast<std::size_t>(n) + 1, Rational(0));
  for (const auto& [rs, v] : mat.entries()) {
    if (rs.first == rs.second) {
      diag[rs.first - 1] = v;
    } else {
      out += v * sl_written_unit(n, c, rs.first, rs.second);
    }
  }
  // diag = sum of prefix sums times the consecutive Cartan differences
  Rational prefix(0);
  for (int r = 1; r <= n; ++r) {
    prefix += diag[r - 1];
    if (prefix != 0) out += prefix * sl_written_cartan(n, c, r);
  }
  return out;
}

namespace {

std::set<std::size_t> zero_based(const std::set<int>& one_based) {
  std::set<std::size_t> out;
  for (int s : one_based) out.insert(static_cast<std::size_t>(s - 1));
  return out;
}

}  // namespace

RepTable build_sl_swapped(const RepSpec& spec) {
  if (spec.algebra != AlgebraKind::SL) throw std::invalid_argument("build_sl_swapped: spec must be sl");
  spec.validate();
  const int n = spec.rank;
  const auto swap_vars = zero_based(spec.swap_set);
  auto basis = enumerate_basis(AlgebraKind::SL, n);
  std::vector<WeylOperator> ops;
  ops.reserve(basis.size());
  for (const auto& b : basis) {
    FactorExpr written = sl_written_matrix(n, spec.c, b.mat);
    ops.push_back(normal_order(swap_substitute(written, swap_vars)));
  }
  return RepTable(spec, std::move(basis), std::move(ops));
}

RepTable build_sl_base(int n, const Rational& c) {
  RepSpec spec;
  spec.algebra = AlgebraKind::SL;
  spec.rank = n;
  spec.c = c;
  return build_sl_swapped(spec);
}

RepTable build_sl_exp(const RepSpec& spec) { return build_sl_swapped(spec); }

RepTable build_sp(const RepSpec& spec) {
  if (spec.algebra != AlgebraKind::SP) throw std::invalid_argument("build_sp: spec must be sp");
  spec.validate();
  const int m = spec.rank;
  const int n_ambient = 2 * m + 1;
  const auto swap_vars = zero_based(spec.swap_set);

  // old ambient index (0-based) -> slot
  std::vector<std::size_t> perm(static_cast<std::size_t>(n_ambient));
  for (int j = 1; j <= n_ambient; ++j) {
    perm[static_cast<std::size_t>(j - 1)] = static_cast<std::size_t>(sp_slot_index(m, j));
  }

  auto basis = enumerate_basis(AlgebraKind::SP, m);
  std::vector<WeylOperator> ops;
  ops.reserve(basis.size());
  for (const auto& b : basis) {
    FactorExpr written = sl_written_matrix(n_ambient, spec.c, b.mat);
    FactorExpr swapped = swap_substitute(written, swap_vars);
    ops.push_back(normal_order(permute_variables(swapped, perm)));
  }
  return RepTable(spec, std::move(basis), std::move(ops));
}

std::set<int> sp_swap_set(int m, int m1, int m2) {
  if (m1 < 1 || m1 > m2 || m2 > m) throw std::invalid_argument("sp_swap_set: need 1 <= m1 <= m2 <= m");
  std::set<int> out;
  for (int i = 1; i <= m1; ++i) out.insert(i);
  for (int i = m2 + 1; i <= m; ++i) out.insert(m + 1 + i);
  return out;
}

std::optional<std::pair<int, int>> sp_swap_shape(const RepSpec& spec) {
  if (spec.algebra != AlgebraKind::SP) return std::nullopt;
  const int m = spec.rank;
  std::set<int> x_part, y_part;
  for (int s : spec.swap_set) {
    if (s <= m) {
      x_part.insert(s);
    } else if (s >= m + 2) {
      y_part.insert(s - m - 1);
    } else {
      return std::nullopt;
    }
  }
  const int m1 = static_cast<int>(x_part.size());
  if (m1 < 1) return std::nullopt;
  for (int i = 1; i <= m1; ++i) {
    if (!x_part.count(i)) return std::nullopt;
  }
  const int m2 = y_part.empty() ? m : *y_part.begin() - 1;
  for (int i = m2 + 1; i <= m; ++i) {
    if (!y_part.count(i)) return std::nullopt;
  }
  if (static_cast<int>(y_part.size()) != m - m2) return std::nullopt;
  if (m1 > m2) return std::nullopt;
  return std::make_pair(m1, m2);
}

Rational swapped_constant(const RepSpec& spec) {
  return spec.c - Rational(static_cast<long>(spec.swap_set.size()));
}

std::vector<Rational> sp_admissible_freq(int m, int m1, int m2) {
  if (m1 < 1 || m1 > m2 || m2 > m) {
    throw std::invalid_argument("sp_admissible_freq: need 1 <= m1 <= m2 <= m");
  }
  std::vector<Rational> a(static_cast<std::size_t>(2 * m + 1), Rational(0));
  a[static_cast<std::size_t>(m + 1)] = 1;  // y_1
  if (m2 < m) a[static_cast<std::size_t>(m2 + 1)] = 1;  // x_{m2+1}
  return a;
}

std::vector<std::string> variable_names(AlgebraKind algebra, int rank) {
  std::vector<std::string> names;
  if (algebra == AlgebraKind::SL) {
    for (int i = 1; i <= rank; ++i) names.push_back("x" + std::to_string(i));
  } else {
    names.push_back("x0");
    for (int i = 1; i <= rank; ++i) names.push_back("x" + std::to_string(i));
    for (int i = 1; i <= rank; ++i) names.push_back("y" + std::to_string(i));
  }
  return names;
}

std::vector<std::string> variable_names(const RepSpec& spec) {
  return variable_names(spec.algebra, spec.rank);
}

namespace {

using Expr = FactorExpr;

struct ExprTable {
  std::map<std::string, Expr> by_label;

  void put(const std::string& label, Expr e) {
    if (!by_label.emplace(label, std::move(e)).second) {
      throw std::logic_error("explicit_table: duplicate label " + label);
    }
  }
};

RepTable assemble(const RepSpec& spec, AlgebraKind kind, int rank, const ExprTable& exprs) {
  auto basis = enumerate_basis(kind, rank);
  std::vector<WeylOperator> ops;
  ops.reserve(basis.size());
  for (const auto& b : basis) {
    auto it = exprs.by_label.find(b.label);
    if (it == exprs.by_label.end()) {
      throw std::logic_error("explicit_table: no expression for " + b.label);
    }
    ops.push_back(normal_order(it->second));
  }
  return RepTable(spec, std::move(basis), std::move(ops));
}

RepTable explicit_sl_swapped(const RepSpec& spec) {
  spec.validate();
  const int n = spec.rank;
  const int n1 = static_cast<int>(spec.swap_set.size());
  if (n1 < 1 || n1 >= n) {
    throw std::invalid_argument("explicit_table: sl swapped form needs swap set {1..n1} with n1 < n");
  }
  for (int i = 1; i <= n1; ++i) {
    if (!spec.swap_set.count(i)) {
      throw std::invalid_argument("explicit_table: sl swap set must be {1..n1}");
    }
  }
  const std::size_t nv = static_cast<std::size_t>(n);
  auto var = [&](int i) { return Expr::variable(nv, i - 1); };        // 1-based x_i
  auto der = [&](int i) { return Expr::derivative(nv, i - 1); };
  auto cst = [&](const Rational& v) { return Expr::constant(nv, v); };

  std::vector<std::size_t> plus, minus;
  for (int r = n1 + 1; r <= n; ++r) plus.push_back(r - 1);
  for (int i = 1; i <= n1; ++i) minus.push_back(i - 1);
  const Expr graded_euler = Expr::signed_euler(nv, plus, minus);
  const Rational shifted = spec.c - n1;

  ExprTable t;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      Expr e(nv);
      if (i <= n1 && j <= n1) {
        e = -(var(j) * der(i));
      } else if (i <= n1 && j > n1) {
        e = der(i) * der(j);
      } else if (i > n1 && j <= n1) {
        e = -(var(i) * var(j));
      } else {
        e = var(i) * der(j);
      }
      t.put(sl_unit_label(i, j), std::move(e));
    }
  }
  for (int i = 1; i <= n; ++i) {
    if (i <= n1) {
      t.put(sl_unit_label(i, n + 1), (graded_euler + cst(shifted - 1)) * der(i));
    } else {
      t.put(sl_unit_label(i, n + 1), var(i) * (graded_euler + cst(shifted)));
    }
    t.put(sl_unit_label(n + 1, i), i <= n1 ? var(i) : -der(i));
  }
  auto diag = [&](int i) {
    if (i <= n1) return -(var(i) * der(i)) - cst(Rational(1));
    return var(i) * der(i);
  };
  for (int r = 1; r < n; ++r) t.put(sl_cartan_label(r), diag(r) - diag(r + 1));
  t.put(sl_cartan_label(n), graded_euler + cst(shifted) + var(n) * der(n));
  return assemble(spec, AlgebraKind::SL, n, t);
}

RepTable explicit_sp_plain(const RepSpec& spec) {
  spec.validate();
  if (!spec.swap_set.empty()) {
    throw std::invalid_argument("explicit_table: sp plain form needs an empty swap set");
  }
  const int m = spec.rank;
  const std::size_t nv = static_cast<std::size_t>(2 * m + 1);
  auto x = [&](int i) { return Expr::variable(nv, i); };              // x_0..x_m at slots 0..m
  auto dx = [&](int i) { return Expr::derivative(nv, i); };
  auto y = [&](int i) { return Expr::variable(nv, m + i); };          // y_i at slot m+i
  auto dy = [&](int i) { return Expr::derivative(nv, m + i); };
  const Expr d_plus_c = Expr::euler(nv) + Expr::constant(nv, spec.c);

  ExprTable t;
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= m; ++j) {
      t.put(sp_c_label(m, i, j), x(i) * dx(j) - y(j) * dy(i));
    }
  }
  for (int j = 1; j <= m; ++j) {
    t.put(sp_c_label(m, m + 1, j), x(0) * dx(j) - y(j) * d_plus_c);
    t.put(sp_c_label(m, j, m + 1), x(j) * dx(0) + dy(j));
  }
  t.put(sp_c_label(m, m + 1, m + 1), Expr::euler(nv) + x(0) * dx(0) + Expr::constant(nv, spec.c));
  for (int i = 1; i <= m; ++i) {
    for (int j = i; j <= m; ++j) {
      t.put(sp_a_label(m, i, j), i == j ? x(i) * dy(i) : x(i) * dy(j) + x(j) * dy(i));
      t.put(sp_b_label(m, i, j), i == j ? y(i) * dx(i) : y(i) * dx(j) + y(j) * dx(i));
    }
  }
  for (int i = 1; i <= m; ++i) {
    t.put(sp_a_label(m, i, m + 1), x(0) * dy(i) + x(i) * d_plus_c);
    t.put(sp_b_label(m, i, m + 1), y(i) * dx(0) - dx(i));
  }
  t.put(sp_a_label(m, m + 1, m + 1), x(0) * d_plus_c);
  t.put(sp_b_label(m, m + 1, m + 1), -dx(0));
  return assemble(spec, AlgebraKind::SP, m, t);
}

RepTable explicit_sp_swapped(const RepSpec& spec) {
  spec.validate();
  const auto shape = sp_swap_shape(spec);
  if (!shape) {
    throw std::invalid_argument("explicit_table: sp swap set must have the normalized shape");
  }
  const auto [m1, m2] = *shape;
  const int m = spec.rank;
  const std::size_t nv = static_cast<std::size_t>(2 * m + 1);
  auto x = [&](int i) { return Expr::variable(nv, i); };
  auto dx = [&](int i) { return Expr::derivative(nv, i); };
  auto y = [&](int i) { return Expr::variable(nv, m + i); };
  auto dy = [&](int i) { return Expr::derivative(nv, m + i); };
  auto cst = [&](const Rational& v) { return Expr::constant(nv, v); };

  std::vector<std::size_t> plus, minus;
  plus.push_back(0);  // x_0
  for (int r = m1 + 1; r <= m; ++r) plus.push_back(static_cast<std::size_t>(r));
  for (int i = 1; i <= m2; ++i) plus.push_back(static_cast<std::size_t>(m + i));
  for (int i = 1; i <= m1; ++i) minus.push_back(static_cast<std::size_t>(i));
  for (int r = m2 + 1; r <= m; ++r) minus.push_back(static_cast<std::size_t>(m + r));
  const Expr graded_euler = Expr::signed_euler(nv, plus, minus);
  const Rational tc = spec.c + m2 - m1 - m;
  const Expr ge_tc = graded_euler + cst(tc);

  auto ex = [&](int i, int j) -> Expr {
    if (i <= m1 && j <= m1) {
      Expr e = -(x(j) * dx(i));
      if (i == j) e -= cst(Rational(1));
      return e;
    }
    if (i <= m1 && j > m1) return dx(i) * dx(j);
    if (i > m1 && j <= m1) return -(x(i) * x(j));
    return x(i) * dx(j);
  };
  auto ey = [&](int i, int j) -> Expr {
    if (i <= m2 && j <= m2) return y(i) * dy(j);
    if (i <= m2 && j > m2) return -(y(i) * y(j));
    if (i > m2 && j <= m2) return dy(i) * dy(j);
    Expr e = -(y(j) * dy(i));
    if (i == j) e -= cst(Rational(1));
    return e;
  };
  auto unit_xy = [&](int i, int j) -> Expr {  // image of E(i, m+1+j), i,j <= m
    if (i <= m1 && j <= m2) return dx(i) * dy(j);
    if (i <= m1 && j > m2) return -(y(j) * dx(i));
    if (i > m1 && j <= m2) return x(i) * dy(j);
    return -(x(i) * y(j));
  };
  auto unit_yx = [&](int i, int j) -> Expr {  // image of E(m+1+i, j), i,j <= m
    if (j <= m1 && i <= m2) return -(x(j) * y(i));
    if (j <= m1 && i > m2) return -(x(j) * dy(i));
    if (j > m1 && i <= m2) return y(i) * dx(j);
    return dx(j) * dy(i);
  };

  ExprTable t;
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= m; ++j) {
      t.put(sp_c_label(m, i, j), ex(i, j) - ey(j, i));
    }
  }
  for (int i = 1; i <= m; ++i) {
    Expr to_center(nv);
    if (i <= m1) {
      to_center = dx(0) * dx(i) + dy(i);
    } else if (i <= m2) {
      to_center = x(i) * dx(0) + dy(i);
    } else {
      to_center = x(i) * dx(0) - y(i);
    }
    t.put(sp_c_label(m, i, m + 1), std::move(to_center));

    Expr from_center(nv);
    if (i <= m1) {
      from_center = -(x(0) * x(i)) - y(i) * ge_tc;
    } else if (i <= m2) {
      from_center = x(0) * dx(i) - y(i) * ge_tc;
    } else {
      from_center = x(0) * dx(i) - (ge_tc - cst(Rational(1))) * dy(i);
    }
    t.put(sp_c_label(m, m + 1, i), std::move(from_center));
  }
  t.put(sp_c_label(m, m + 1, m + 1), graded_euler + x(0) * dx(0) + cst(tc));

  for (int i = 1; i <= m; ++i) {
    for (int j = i; j <= m; ++j) {
      t.put(sp_a_label(m, i, j), i == j ? unit_xy(i, i) : unit_xy(i, j) + unit_xy(j, i));
      t.put(sp_b_label(m, i, j), i == j ? unit_yx(i, i) : unit_yx(i, j) + unit_yx(j, i));
    }
  }
  for (int i = 1; i <= m; ++i) {
    Expr a_col(nv);
    if (i <= m1) {
      a_col = x(0) * dy(i) + (ge_tc - cst(Rational(1))) * dx(i);
    } else if (i <= m2) {
      a_col = x(0) * dy(i) + x(i) * ge_tc;
    } else {
      a_col = -(x(0) * y(i)) + x(i) * ge_tc;
    }
    t.put(sp_a_label(m, i, m + 1), std::move(a_col));

    Expr b_col(nv);
    if (i <= m1) {
      b_col = y(i) * dx(0) + x(i);
    } else if (i <= m2) {
      b_col = y(i) * dx(0) - dx(i);
    } else {
      b_col = dx(0) * dy(i) - dx(i);
    }
    t.put(sp_b_label(m, i, m + 1), std::move(b_col));
  }
  t.put(sp_a_label(m, m + 1, m + 1), x(0) * ge_tc);
  t.put(sp_b_label(m, m + 1, m + 1), -dx(0));
  return assemble(spec, AlgebraKind::SP, m, t);
}

}  // namespace

RepTable explicit_table(ExplicitCase which, const RepSpec& spec) {
  switch (which) {
    case ExplicitCase::SlSwapped:
      if (spec.algebra != AlgebraKind::SL) throw std::invalid_argument("explicit_table: spec must be sl");
      return explicit_sl_swapped(spec);
    case ExplicitCase::SpPlain:
      if (spec.algebra != AlgebraKind::SP) throw std::invalid_argument("explicit_table: spec must be sp");
      return explicit_sp_plain(spec);
    case ExplicitCase::SpSwapped:
      if (spec.algebra != AlgebraKind::SP) throw std::invalid_argument("explicit_table: spec must be sp");
      return explicit_sp_swapped(spec);
  }
  throw std::logic_error("explicit_table: unknown case");
}

}  // namespace oscrep
