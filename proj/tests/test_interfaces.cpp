#include <doctest.h>

#include "oscrep/json_io.hpp"

using namespace oscrep;

namespace {

RepSpec sp_spec() {
  RepSpec spec;
  spec.algebra = AlgebraKind::SP;
  spec.rank = 1;
  spec.c = rational(-1, 2);
  spec.swap_set = {1};
  spec.freq = {Rational(0), Rational(0), Rational(1)};
  return spec;
}

}  // namespace

TEST_CASE("polynomial serialization is canonical") {
  Polynomial p(2);
  p.add_term(Monomial::variable(2, 1), rational(-1, 2));
  p.add_term(Monomial::variable(2, 0, 2), Rational(3));
  p.add_term(Monomial(2), Rational(1));
  const Json j = poly_json(p);
  // sorted: constant, then x2 (degree 1), then x1^2 (degree 2)
  REQUIRE(j.size() == 3);
  CHECK(j[0][0] == Json::array({0, 0}));
  CHECK(j[0][1] == "1");
  CHECK(j[1][0] == Json::array({0, 1}));
  CHECK(j[1][1] == "-1/2");
  CHECK(j[2][0] == Json::array({2, 0}));
  CHECK(j[2][1] == "3");
}

TEST_CASE("operator serialization round-trips") {
  const std::size_t nv = 2;
  const WeylOperator op = normal_order(
      FactorExpr::variable(nv, 0) * (FactorExpr::euler(nv) + FactorExpr::constant(nv, rational(2, 3))));
  CHECK(weyl_from_json(weyl_json(op), nv) == op);
}

TEST_CASE("representation tables round-trip through JSON") {
  const RepSpec spec = sp_spec();
  const RepTable table = build_sp(spec);
  const Json j = rep_json(table);
  CHECK(j["algebra"] == "sp");
  CHECK(j["m"] == 1);
  CHECK(j["c"] == "-1/2");
  CHECK(j["swap"] == Json::array({1}));
  CHECK(j["freq"] == Json::array({"0", "0", "1"}));

  const RepTable loaded = rep_from_json(j);
  CHECK(loaded.spec().c == spec.c);
  CHECK(loaded.spec().swap_set == spec.swap_set);
  REQUIRE(loaded.dim() == table.dim());
  for (std::size_t i = 0; i < table.dim(); ++i) CHECK(loaded.op(i) == table.op(i));
}

TEST_CASE("spec deserialization enforces the swap constraint") {
  Json j;
  j["algebra"] = "sp";
  j["m"] = 1;
  j["c"] = "0";
  j["swap"] = Json::array({2});  // index m+1 is never swapped
  CHECK_THROWS_AS(spec_from_json(j), std::invalid_argument);
}

TEST_CASE("serialization bytes are reproducible") {
  const RepTable table = build_sp(sp_spec());
  CHECK(dump(rep_json(table)) == dump(rep_json(build_sp(sp_spec()))));
}

TEST_CASE("weight table CSV export") {
  const RepTable table = build_sl_base(2, Rational(1));
  Window w;
  w.degree = 1;
  const auto report = weight_decompose(table, w, select_subalgebra(AlgebraKind::SL, 2, Subalgebra::Cartan));
  const std::string csv = weight_csv(report);
  CHECK(csv.rfind("weight,multiplicity\n", 0) == 0);
  CHECK(csv.find("\"(0 1)\",1") != std::string::npos);  // the constant at c = 1
}
