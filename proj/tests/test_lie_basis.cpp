#include <doctest.h>

#include "oscrep/lie.hpp"

using namespace oscrep;

TEST_CASE("basis dimensions") {
  CHECK(enumerate_basis(AlgebraKind::SL, 2).size() == 8);
  CHECK(enumerate_basis(AlgebraKind::SL, 3).size() == 15);
  CHECK(enumerate_basis(AlgebraKind::SL, 4).size() == 24);
  CHECK(enumerate_basis(AlgebraKind::SP, 1).size() == 10);
  CHECK(enumerate_basis(AlgebraKind::SP, 2).size() == 21);
  for (int n = 2; n <= 4; ++n) {
    CHECK(enumerate_basis(AlgebraKind::SL, n).size() == algebra_dimension(AlgebraKind::SL, n));
  }
  for (int m = 1; m <= 2; ++m) {
    CHECK(enumerate_basis(AlgebraKind::SP, m).size() == algebra_dimension(AlgebraKind::SP, m));
  }
  CHECK_THROWS_AS(enumerate_basis(AlgebraKind::SL, 1), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_basis(AlgebraKind::SP, 0), std::invalid_argument);
}

TEST_CASE("every sl element is traceless") {
  for (int n = 2; n <= 4; ++n) {
    for (const auto& b : enumerate_basis(AlgebraKind::SL, n)) CHECK(b.mat.trace() == 0);
  }
}

TEST_CASE("sp elements lie in the span of the defining generator list") {
  for (int m = 1; m <= 2; ++m) {
    const int size = 2 * m + 2;
    std::vector<SparseVec<SqMatrix::Entry>> generators;
    for (int r = 1; r <= m + 1; ++r) {
      for (int s = r; s <= m + 1; ++s) {
        SqMatrix a(size);
        a.add(r, m + 1 + s, Rational(1));
        a.add(s, m + 1 + r, Rational(1));  // doubles the diagonal entry when r == s
        generators.push_back(a.as_vec());
        SqMatrix b(size);
        b.add(m + 1 + r, s, Rational(1));
        b.add(m + 1 + s, r, Rational(1));
        generators.push_back(b.as_vec());
      }
    }
    for (int i = 1; i <= m + 1; ++i) {
      for (int j = 1; j <= m + 1; ++j) {
        SqMatrix c(size);
        c.add(i, j, Rational(1));
        c.add(m + 1 + j, m + 1 + i, Rational(-1));
        generators.push_back(c.as_vec());
      }
    }
    SpanBasis<SqMatrix::Entry> span;
    for (const auto& g : generators) span.insert(g);
    const auto basis = enumerate_basis(AlgebraKind::SP, m);
    CHECK(span.rank() == basis.size());
    for (const auto& b : basis) CHECK(span.contains(b.mat.as_vec()));
  }
}

TEST_CASE("matrix bracket examples") {
  const SqMatrix e12 = SqMatrix::unit(3, 1, 2);
  const SqMatrix e21 = SqMatrix::unit(3, 2, 1);
  const SqMatrix e23 = SqMatrix::unit(3, 2, 3);
  SqMatrix h1(3);
  h1.add(1, 1, Rational(1));
  h1.add(2, 2, Rational(-1));
  CHECK(matrix_bracket(e12, e21) == h1);
  CHECK(matrix_bracket(e12, e12).is_zero());
  CHECK(matrix_bracket(e12, e23) == SqMatrix::unit(3, 1, 3));
}

TEST_CASE("structure tables are antisymmetric and satisfy Jacobi") {
  for (const auto& [kind, rank] : {std::pair{AlgebraKind::SL, 2}, {AlgebraKind::SP, 1}}) {
    const StructureTable table{enumerate_basis(kind, rank)};
    const std::size_t d = table.dim();
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        auto forward = table.bracket(i, j);
        auto backward = table.bracket(j, i);
        CHECK(forward.size() == backward.size());
        for (std::size_t t = 0; t < forward.size(); ++t) {
          CHECK(forward[t].first == backward[t].first);
          CHECK(forward[t].second == -backward[t].second);
        }
      }
    }
    CHECK(jacobi_holds(table));
  }
}

TEST_CASE("structure constants of a classical pair") {
  const StructureTable table{enumerate_basis(AlgebraKind::SL, 2)};
  // [E(1,1)-E(2,2), E(1,2)] = 2 E(1,2)
  const auto basis = table.basis();
  std::size_t h1 = 0, e12 = 0;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].label == sl_cartan_label(1)) h1 = i;
    if (basis[i].label == sl_unit_label(1, 2)) e12 = i;
  }
  const auto& expansion = table.bracket(h1, e12);
  REQUIRE(expansion.size() == 1);
  CHECK(expansion[0].first == e12);
  CHECK(expansion[0].second == 2);
}

TEST_CASE("a non-closed list is rejected") {
  std::vector<BasisElement> partial = {
      {sl_unit_label(1, 2), SqMatrix::unit(3, 1, 2)},
      {sl_unit_label(2, 1), SqMatrix::unit(3, 2, 1)},
  };
  CHECK_THROWS_AS(StructureTable{partial}, std::invalid_argument);
}

TEST_CASE("subalgebra selectors are bracket-closed") {
  struct Case {
    AlgebraKind kind;
    int rank;
    Subalgebra which;
    std::size_t expected_dim;
  };
  const std::vector<Case> cases = {
      {AlgebraKind::SL, 3, Subalgebra::Corner, 8},        // sl(3) inside sl(4)
      {AlgebraKind::SL, 3, Subalgebra::Cartan, 3},
      {AlgebraKind::SP, 2, Subalgebra::Corner, 10},       // sp(4) inside sp(6)
      {AlgebraKind::SP, 2, Subalgebra::Cartan, 3},
      {AlgebraKind::SP, 2, Subalgebra::CornerCartan, 2},
  };
  for (const auto& c : cases) {
    const StructureTable table{enumerate_basis(c.kind, c.rank)};
    const auto selected = select_subalgebra(c.kind, c.rank, c.which);
    CHECK(selected.size() == c.expected_dim);
    std::set<std::size_t> inside(selected.begin(), selected.end());
    for (std::size_t i : selected) {
      for (std::size_t j : selected) {
        for (const auto& [k, coeff] : table.bracket(i, j)) {
          CHECK(inside.count(k) == 1);
        }
      }
    }
  }
}

TEST_CASE("variable relabeling between slot order and ambient order") {
  for (int m = 1; m <= 3; ++m) {
    CHECK(sp_ambient_index(m, 0) == m + 1);       // x_0
    CHECK(sp_ambient_index(m, m + 1) == m + 2);   // y_1
    for (int slot = 0; slot <= 2 * m; ++slot) {
      CHECK(sp_slot_index(m, sp_ambient_index(m, slot)) == slot);
    }
    for (int ambient = 1; ambient <= 2 * m + 1; ++ambient) {
      CHECK(sp_ambient_index(m, sp_slot_index(m, ambient)) == ambient);
    }
  }
  CHECK_THROWS_AS(sp_ambient_index(1, 3), std::out_of_range);
}

TEST_CASE("structure table CSV export") {
  const StructureTable table{enumerate_basis(AlgebraKind::SL, 2)};
  const std::string csv = table.to_csv();
  CHECK(csv.find("label_a,label_b,label_c,coefficient") == 0);
  CHECK(csv.find("E(1,2),E(2,1),E(1,1)-E(2,2),1") != std::string::npos);
}
