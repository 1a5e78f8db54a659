#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "multbound/polytope.hpp"

namespace multbound {

/*
 * Structured record of a bound evaluation: which theorem, every
 * intermediate constant by name, and the final value. Reports are
 * self-contained; each intermediate is recomputable from the inputs.
 */
struct BoundReport {
    std::string theorem;
    std::vector<std::pair<std::string, std::string>> inputs;
    std::vector<std::pair<std::string, std::string>> constants;
    std::vector<std::string> notes;
    Rational exact = 0;  // value before the final ceiling
    Int bound = 0;

    void input(const std::string& name, const std::string& value) {
        inputs.emplace_back(name, value);
    }
    void constant(const std::string& name, const std::string& value) {
        constants.emplace_back(name, value);
    }
    std::optional<std::string> lookup(const std::string& name) const;
};

// Multiplicity cap at nonsingular points: 2^{n+1} (d + (n-1) delta)^n.
Int regular_point_bound(long n, const Int& delta, const Int& d);

struct ForestConstants {
    Int A;        // 2 n!
    Int a;        // regular_point_bound at the canonical argument
    Int a_tilde;  // delta * a
    std::optional<std::string> note;
};
ForestConstants forest_constants(long n, const Int& delta);

struct ToricForestConstants {
    Int B;  // 2^4 n!
    Int b;
};
ToricForestConstants toric_forest_constants(long n, const Int& delta);

// Single-point bound in the pure degree d: (d+a~)^n + (2+chi)(d+a~)^{n-1}.
BoundReport pure_bound(long n, const Int& delta, const Int& d, const Int& chi);

// Per-level degree caps (d+a~)^k for k = 1..n.
std::vector<Int> forest_degree_profile(long n, const Int& delta, const Int& d);

struct ScaledFieldPolytope {
    Polytope polytope;
    Int scale;
};
// (B_n 2^n n + b_{n,delta}) times the field polytope; requires the origin inside.
ScaledFieldPolytope delta_nxi(long n, const Int& delta, const Polytope& xi_polytope);

// Newton-polytope bound: refined n! vol + n!(2+chi) W_1 of Delta + Delta_{n,xi},
// with the coarse n!(3+chi) vol variant reported alongside.
BoundReport toric_bound(long n, const Int& delta, const Polytope& delta_p,
                        const Polytope& xi_polytope, const Int& chi);

// Single-point mixed-degree bound alpha * d_z * d_x^n with alpha materialized
// from the box-capture chain. n counts the dependent variables; the ambient
// dimension is n + 1 with the time variable first.
BoundReport mixed_single_bound(long n, const Int& delta, const Polytope& xi_polytope,
                               const Int& dz, const Int& dx, const Int& chi);

// Multi-point bound beta * (d_z + q) * d_x^n with per-level caps evaluated by
// exact mixed volumes.
BoundReport mixed_multi_bound(long n, const Int& delta, const Polytope& xi_polytope,
                              const Int& dz, const Int& dx, const Int& q, const Int& chi);

enum class AmbientCase { A, B };

// Multi-point bound over a proper ambient closure of dimension m with
// generators of degree D: beta (d_z + q) d_x^{m-1} in case A and
// beta (d_z + d_x + q) d_x^{m-1} in case B.
BoundReport case_ab_bound(long n, long m, AmbientCase tag, const Int& d_gen,
                          const Int& delta, const Polytope& xi_polytope, const Int& dz,
                          const Int& dx, const Int& q, const Int& chi);

// hf(V, t) <= deg(V) t^k + k
Int hf_upper_pure(const Int& deg_v, const Int& t, long k);
// hf of the ambient affine space: binom(t + n, n)
Int hf_ambient_pure(long n, const Int& t);

struct ThresholdReport {
    bool holds = false;
    std::string note;
};
// Degree threshold guaranteeing a vanishing polynomial of degree < d.
ThresholdReport hf_finder_threshold(long n, const Int& d, const Int& deg_v, long k);

}  // namespace multbound
