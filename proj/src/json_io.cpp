#include "oscrep/json_io.hpp"

#include <sstream>
#include <stdexcept>

#include "oscrep/expr_parse.hpp"

namespace oscrep {

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json rational_json(const Rational& q) { return to_string(q); }

Json rational_vec_json(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const Rational& q : v) out.push_back(rational_json(q));
  return out;
}

Json poly_json(const Polynomial& p) {
  Json out = Json::array();
  for (const auto& [m, c] : p.terms()) {
    out.push_back(Json::array({m.exps(), to_string(c)}));
  }
  return out;
}

Json weyl_json(const WeylOperator& op) {
  Json out = Json::array();
  for (const auto& [key, c] : op.terms()) {
    out.push_back(Json::array({key.first.exps(), key.second.exps(), to_string(c)}));
  }
  return out;
}

WeylOperator weyl_from_json(const Json& j, std::size_t nvars) {
  WeylOperator op(nvars);
  for (const auto& triple : j) {
    if (!triple.is_array() || triple.size() != 3) {
      throw std::invalid_argument("weyl_from_json: expected [alpha, beta, coeff] triples");
    }
    const std::vector<int> alpha = triple[0].get<std::vector<int>>();
    const std::vector<int> beta = triple[1].get<std::vector<int>>();
    if (alpha.size() != nvars || beta.size() != nvars) {
      throw std::invalid_argument("weyl_from_json: exponent length mismatch");
    }
    op.add_term(Monomial(alpha), Monomial(beta), parse_rational(triple[2].get<std::string>()));
  }
  return op;
}

Json spec_json(const RepSpec& spec) {
  Json out;
  out["algebra"] = spec.algebra == AlgebraKind::SL ? "sl" : "sp";
  out[spec.algebra == AlgebraKind::SL ? "n" : "m"] = spec.rank;
  out["c"] = rational_json(spec.c);
  out["swap"] = Json::array();
  for (int s : spec.swap_set) out["swap"].push_back(s);
  out["freq"] = rational_vec_json(spec.freq_or_zero());
  return out;
}

RepSpec spec_from_json(const Json& j) {
  RepSpec spec;
  const std::string algebra = j.at("algebra").get<std::string>();
  if (algebra == "sl") {
    spec.algebra = AlgebraKind::SL;
    spec.rank = j.at("n").get<int>();
  } else if (algebra == "sp") {
    spec.algebra = AlgebraKind::SP;
    spec.rank = j.at("m").get<int>();
  } else {
    throw std::invalid_argument("spec_from_json: algebra must be 'sl' or 'sp'");
  }
  spec.c = parse_rational(j.at("c").get<std::string>());
  for (const auto& s : j.at("swap")) spec.swap_set.insert(s.get<int>());
  if (j.contains("freq")) {
    for (const auto& a : j.at("freq")) spec.freq.push_back(parse_rational(a.get<std::string>()));
  }
  spec.validate();
  return spec;
}

Json rep_json(const RepTable& table) {
  Json out = spec_json(table.spec());
  Json ops;
  for (std::size_t i = 0; i < table.dim(); ++i) {
    ops[table.basis()[i].label] = weyl_json(table.op(i));
  }
  out["operators"] = std::move(ops);
  return out;
}

RepTable rep_from_json(const Json& j) {
  const RepSpec spec = spec_from_json(j);
  auto basis = enumerate_basis(spec.algebra, spec.rank);
  const Json& ops_json = j.at("operators");
  std::vector<WeylOperator> ops;
  ops.reserve(basis.size());
  for (const auto& b : basis) {
    if (!ops_json.contains(b.label)) {
      throw std::invalid_argument("rep_from_json: missing operator for " + b.label);
    }
    ops.push_back(weyl_from_json(ops_json.at(b.label), spec.nvars()));
  }
  return RepTable(spec, std::move(basis), std::move(ops));
}

Json hom_json(const HomReport& r, const RepTable& table) {
  Json out;
  out["pairs"] = r.pairs;
  out["applications"] = r.applications;
  out["pairs_with_nonzero_residual"] = r.pairs_with_nonzero_residual;
  out["ok"] = r.ok();
  Json violations = Json::array();
  for (const auto& v : r.violations) {
    Json item;
    item["left"] = v.left;
    item["right"] = v.right;
    item["witness"] = v.witness.exps();
    item["residual"] = v.residual_value;
    violations.push_back(std::move(item));
  }
  out["violations"] = std::move(violations);
  return out;
}

Json weight_json(const WeightReport& r) {
  Json out;
  out["monomials"] = r.monomials;
  out["distinct_weights"] = r.multiplicity.size();
  out["max_multiplicity"] = r.max_multiplicity;
  Json table = Json::array();
  for (const auto& [weight, mult] : r.multiplicity) {
    table.push_back(Json::array({rational_vec_json(weight), mult}));
  }
  out["weights"] = std::move(table);
  return out;
}

std::string weight_csv(const WeightReport& r) {
  std::ostringstream os;
  os << "weight,multiplicity\n";
  for (const auto& [weight, mult] : r.multiplicity) {
    os << "\"(";
    for (std::size_t i = 0; i < weight.size(); ++i) {
      if (i) os << " ";
      os << to_string(weight[i]);
    }
    os << ")\"," << mult << "\n";
  }
  return os.str();
}

Json grading_json(const GradingReport& r) {
  Json out;
  out["max_abs_grade"] = r.max_abs_grade;
  out["degree"] = r.degree;
  out["vectors_checked"] = r.vectors_checked;
  out["ok"] = r.ok();
  out["failures"] = r.failures;
  return out;
}

Json power_json(const PowerReport& r) {
  Json out;
  out["kmax"] = r.kmax;
  out["ok"] = r.ok();
  out["failures"] = r.failures;
  return out;
}

Json closure_json(const ClosureReport& r, bool include_rows) {
  Json out;
  out["seed"] = r.seed;
  out["word_length"] = r.word_length;
  out["stabilized"] = r.stabilized;
  out["final_rank"] = r.final_rank;
  out["window_rank"] = r.window_rank;
  out["window_covered"] = r.window_covered;
  out["saturated"] = r.saturated;
  Json pivots = Json::array();
  for (const auto& row : r.span.rows()) pivots.push_back(row.leading_key().exps());
  out["pivots"] = std::move(pivots);
  if (include_rows) {
    Json rows = Json::array();
    for (const auto& row : r.span.rows()) {
      Json entries = Json::array();
      for (const auto& [m, c] : row.entries()) {
        entries.push_back(Json::array({m.exps(), to_string(c)}));
      }
      rows.push_back(std::move(entries));
    }
    out["rows"] = std::move(rows);
  }
  return out;
}

Json series_json(const SeriesReport& r) {
  Json out;
  out["m"] = r.m;
  out["ell"] = r.ell;
  out["dim"] = r.dim;
  out["dim_expected"] = r.dim_expected;
  out["invariant"] = r.invariant;
  out["burnside_dim"] = r.burnside_dim;
  out["burnside_expected"] = r.burnside_expected;
  out["quotient_saturated"] = r.quotient_saturated;
  out["quotient_word_length"] = r.quotient_word_length;
  out["singular_found"] = r.singular_found;
  out["singular_weight"] = rational_vec_json(r.singular_weight);
  out["singular_fundamental"] = rational_vec_json(r.singular_fundamental);
  out["ok"] = r.ok();
  return out;
}

Json slice_json(const SliceReport& r) {
  Json out;
  out["k"] = r.k;
  out["m1"] = r.m1;
  out["m2"] = r.m2;
  out["window_rank"] = r.window_rank;
  out["num_classes"] = r.num_classes;
  out["all_saturated"] = r.all_saturated;
  Json seeds = Json::array();
  for (const auto& s : r.seeds) {
    Json item;
    item["seed"] = s.seed.exps();
    item["saturated"] = s.saturated;
    item["stabilized"] = s.stabilized;
    item["window_covered"] = s.window_covered;
    item["class_id"] = s.class_id;
    seeds.push_back(std::move(item));
  }
  out["seeds"] = std::move(seeds);
  return out;
}

Json singular_json(const std::vector<SingularVector>& vs, const std::vector<std::string>& names) {
  Json out = Json::array();
  for (const auto& sv : vs) {
    Json item;
    item["vector"] = to_string(sv.vec, names);
    item["degree"] = sv.degree;
    item["weight"] = rational_vec_json(sv.weight);
    item["fundamental"] = rational_vec_json(sv.fundamental);
    out.push_back(std::move(item));
  }
  return out;
}

}  // namespace oscrep
