#pragma once

#include <string>

#include <json.hpp>

#include "oscrep/analysis.hpp"
#include "oscrep/reps.hpp"

namespace oscrep {

// Order-preserving JSON so identical inputs serialize to identical bytes.
using Json = nlohmann::ordered_json;

/// Canonical dump: two-space indent, trailing newline.
std::string dump(const Json& j);

// Rationals travel as strings ("p" or "p/q"), never as floats.
Json rational_json(const Rational& q);
Json rational_vec_json(const std::vector<Rational>& v);

Json poly_json(const Polynomial& p);
Json weyl_json(const WeylOperator& op);
WeylOperator weyl_from_json(const Json& j, std::size_t nvars);

Json spec_json(const RepSpec& spec);
RepSpec spec_from_json(const Json& j);

Json rep_json(const RepTable& table);
RepTable rep_from_json(const Json& j);

Json hom_json(const HomReport& r, const RepTable& table);
Json weight_json(const WeightReport& r);
std::string weight_csv(const WeightReport& r);
Json grading_json(const GradingReport& r);
Json power_json(const PowerReport& r);
Json closure_json(const ClosureReport& r, bool include_rows = false);
Json series_json(const SeriesReport& r);
Json slice_json(const SliceReport& r);
Json singular_json(const std::vector<SingularVector>& vs, const std::vector<std::string>& names);

}  // namespace oscrep
