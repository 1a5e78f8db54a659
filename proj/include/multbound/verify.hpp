#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "multbound/algebra.hpp"
#include "multbound/polytope.hpp"

namespace multbound {

// Shared knobs for the randomized suites; identical spec + seed reproduces
// identical instances byte-for-byte.
struct InstanceSpec {
    std::uint64_t seed = 1;
    int trials = 100;
    int max_dim = 3;
    long max_delta = 2;
    long max_degree = 4;
    long height_bits = 32;  // coefficient height for the root-counting suite
};

struct TrialReport {
    int id = 0;
    std::string check;
    std::string lhs;
    std::string rhs;
    std::string verdict;  // pass | fail | degenerate-regenerated
    std::string instance;
};

struct SuiteSummary {
    std::string suite;
    std::uint64_t seed = 0;
    int trials = 0;
    int passes = 0;
    int failures = 0;
    int degenerate = 0;
    std::vector<TrialReport> reports;
    bool ok() const { return failures == 0; }
};

struct TorusRootCount {
    bool degenerate = false;
    std::string reason;
    Int count = 0;
};

// Number of isolated common zeros of two Laurent polynomials in the 2-torus,
// counted without multiplicity for generic instances. Sylvester resultants in
// both elimination directions (plus sheared coordinate systems) must agree;
// anything non-generic comes back flagged degenerate.
TorusRootCount count_torus_roots_2d(const LaurentPolynomial& p1, const LaurentPolynomial& p2);

// Seeded Bernstein-Kushnirenko comparison: random supports inside 3 Pi_2,
// random coefficients, root count against 2! V(conv A_1, conv A_2).
SuiteSummary bk_check(const InstanceSpec& spec);

// Rank of { monomial^a o g : a in A } for a polynomially parametrized curve;
// exact linear algebra over the rationals.
long hf_parametrized(const std::vector<LaurentPolynomial>& map, const std::vector<Exponents>& a_set);

// Named deterministic suites: bk, vol-ivol, rolle-order, ramanujan-rolle,
// bound-soundness, mv-axioms, delta-add.
SuiteSummary run_property_suite(const std::string& name, const InstanceSpec& spec);

std::vector<std::string> property_suite_names();

}  // namespace multbound
