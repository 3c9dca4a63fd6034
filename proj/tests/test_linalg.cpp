#include <doctest.h>

#include <algorithm>
#include <random>

#include "oscrep/linalg.hpp"

using namespace oscrep;

namespace {

using Vec = SparseVec<int>;

Vec make_vec(std::initializer_list<std::pair<int, long>> entries) {
  std::vector<Vec::Entry> list;
  for (const auto& [k, v] : entries) list.emplace_back(k, Rational(v));
  return Vec::from_entries(std::move(list));
}

Vec random_vec(std::mt19937& rng, int dim) {
  std::vector<Vec::Entry> entries;
  for (int k = 0; k < dim; ++k) {
    if (rng() % 3 == 0) {
      const long num = static_cast<long>(rng() % 9) - 4;
      if (num != 0) entries.emplace_back(k, rational(num, 1 + rng() % 3));
    }
  }
  return Vec::from_entries(std::move(entries));
}

}  // namespace

TEST_CASE("insertion basics") {
  SpanBasis<int> basis;
  CHECK_FALSE(basis.insert(Vec{}));
  CHECK(basis.insert(make_vec({{0, 1}})));
  CHECK_FALSE(basis.insert(make_vec({{0, 1}})));
  CHECK(basis.rank() == 1);

  SpanBasis<int> two;
  CHECK(two.insert(make_vec({{0, 1}, {1, 1}})));
  CHECK(two.insert(make_vec({{0, 1}, {1, -1}})));
  CHECK(two.rank() == 2);
  CHECK(two.pivots() == std::vector<int>{0, 1});
  // reduced form: rows are exactly the unit vectors
  CHECK(two.rows()[0] == make_vec({{0, 1}}));
  CHECK(two.rows()[1] == make_vec({{1, 1}}));
}

TEST_CASE("membership") {
  SpanBasis<int> basis;
  basis.insert(make_vec({{0, 1}}));
  basis.insert(make_vec({{1, 1}}));
  CHECK(basis.contains(Vec{}));
  Vec mixed = make_vec({{0, 3}});
  mixed.axpy(rational(-1, 2), make_vec({{1, 1}}));
  CHECK(basis.contains(mixed));

  SpanBasis<int> line;
  line.insert(make_vec({{0, 1}}));
  CHECK_FALSE(line.contains(make_vec({{1, 1}})));
}

TEST_CASE("echelon form is canonical under insertion order") {
  std::mt19937 rng(31u);
  for (int round = 0; round < 20; ++round) {
    std::vector<Vec> vectors;
    for (int i = 0; i < 10; ++i) vectors.push_back(random_vec(rng, 8));
    SpanBasis<int> reference;
    for (const auto& v : vectors) reference.insert(v);
    std::vector<std::size_t> order(vectors.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    SpanBasis<int> shuffled;
    for (std::size_t idx : order) shuffled.insert(vectors[idx]);
    CHECK(reference == shuffled);
  }
}

TEST_CASE("rank plus nullity equals the number of unknowns") {
  std::mt19937 rng(37u);
  const int dim = 7;
  std::vector<int> unknowns(dim);
  for (int i = 0; i < dim; ++i) unknowns[i] = i;
  for (int round = 0; round < 20; ++round) {
    std::vector<Vec> rows;
    for (int i = 0; i < 5; ++i) rows.push_back(random_vec(rng, dim));
    SpanBasis<int> row_space;
    for (const auto& r : rows) row_space.insert(r);
    const SpanBasis<int> kernel = nullspace(rows, unknowns);
    CHECK(row_space.rank() + kernel.rank() == static_cast<std::size_t>(dim));
    // residual of every solution against every constraint is exactly zero
    for (const auto& sol : kernel.rows()) {
      for (const auto& row : rows) {
        Rational dot(0);
        for (const auto& [k, c] : row.entries()) dot += c * sol.coeff(k);
        CHECK(dot == 0);
      }
    }
  }
}

TEST_CASE("nullspace without constraints is the full space") {
  const std::vector<int> unknowns = {0, 1, 2};
  const SpanBasis<int> kernel = nullspace(std::vector<Vec>{}, unknowns);
  CHECK(kernel.rank() == 3);
}

TEST_CASE("single linear constraint in two unknowns") {
  const std::vector<int> unknowns = {0, 1};
  const SpanBasis<int> kernel = nullspace({make_vec({{0, 1}})}, unknowns);
  CHECK(kernel.rank() == 1);
  CHECK(kernel.rows()[0] == make_vec({{1, 1}}));
}

TEST_CASE("coordinates over the echelon rows") {
  SpanBasis<int> basis;
  basis.insert(make_vec({{0, 1}, {2, 1}}));
  basis.insert(make_vec({{1, 1}}));
  Vec v = make_vec({{0, 2}, {2, 2}});
  v.axpy(Rational(3), make_vec({{1, 1}}));
  const auto coords = basis.coordinates(v);
  REQUIRE(coords.has_value());
  Vec rebuilt;
  for (std::size_t i = 0; i < coords->size(); ++i) rebuilt.axpy((*coords)[i], basis.rows()[i]);
  CHECK(rebuilt == v);
  CHECK_FALSE(basis.coordinates(make_vec({{3, 1}})).has_value());
}

TEST_CASE("basis expander recovers combinations of the originals") {
  std::mt19937 rng(41u);
  for (int round = 0; round < 15; ++round) {
    std::vector<Vec> originals;
    for (int i = 0; i < 5; ++i) originals.push_back(random_vec(rng, 6));
    const BasisExpander<int> expander(originals);

    Vec combo;
    std::vector<Rational> coeffs;
    for (const auto& v : originals) {
      const Rational c = rational(static_cast<long>(rng() % 7) - 3);
      coeffs.push_back(c);
      combo.axpy(c, v);
    }
    const auto expansion = expander.expand(combo);
    REQUIRE(expansion.has_value());
    Vec rebuilt;
    for (std::size_t i = 0; i < originals.size(); ++i) rebuilt.axpy((*expansion)[i], originals[i]);
    CHECK(rebuilt == combo);
  }

  const BasisExpander<int> line(std::vector<Vec>{make_vec({{0, 1}})});
  CHECK_FALSE(line.expand(make_vec({{1, 1}})).has_value());
}
