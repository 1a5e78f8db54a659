#pragma once

#include <json.hpp>

#include "multbound/bounds.hpp"
#include "multbound/examples.hpp"
#include "multbound/multiplicity.hpp"
#include "multbound/polytope.hpp"
#include "multbound/series.hpp"
#include "multbound/verify.hpp"

namespace multbound {

using Json = nlohmann::json;

// Canonical forms: term maps and vertex lists are emitted sorted, rationals
// as "p" / "p/q" strings, so serialize-parse round trips are bit-exact.

Json poly_to_json(const LaurentPolynomial& p);
LaurentPolynomial poly_from_json(const Json& j);

Json polytope_to_json(const Polytope& p);
// accepts {"dim", "vertices"} and re-derives the facet description
Polytope polytope_from_json(const Json& j);

Json germ_to_json(const TrajectoryGerm& g);
TrajectoryGerm germ_from_json(const Json& j);

Json mult_result_to_json(const MultiplicityResult& m);
Json bound_report_to_json(const BoundReport& r);
Json trial_to_json(const TrialReport& t);
Json suite_to_json(const SuiteSummary& s);

/*
 * Versioned problem file: a field with optional time component, a base
 * point, polynomials of interest, and how to produce the trajectory germ.
 */
struct ProblemFile {
    std::string version = "multbound/1";
    std::string name;
    std::vector<std::string> variables;
    std::optional<int> time_index;
    std::vector<std::string> field_components;  // expression strings
    QVec base_point;
    std::optional<Int> chi;
    std::string germ_kind = "regular";  // regular | fuchsian | user
    ResonanceData resonance;
    std::optional<Json> user_germ;
    std::vector<std::string> polynomials;
    std::vector<std::string> bound_theorems;
};

Json problem_to_json(const ProblemFile& p);
ProblemFile problem_from_json(const Json& j);  // schema-validated
ProblemFile problem_from_example(const BuiltinExample& ex);

VectorField problem_field(const ProblemFile& p);
GermSource problem_source(const ProblemFile& p);

}  // namespace multbound
