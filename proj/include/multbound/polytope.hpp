#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "multbound/algebra.hpp"
#include "multbound/numeric.hpp"

namespace multbound {

// a . x <= offset, primitive integer normal
struct Halfspace {
    std::vector<Int> normal;
    Rational offset;
};

// a . x == offset, for the affine hull of lower-dimensional bodies
struct AffineEquation {
    std::vector<Int> normal;
    Rational offset;
};

// Desk-scale limits; the CLI can override them.
struct Guards {
    int max_dim = 6;
    Int max_box = 10000000;
};
Guards& guards();

/*
 * Convex polytope given by both vertices and halfspaces, kept in sync on
 * construction. Vertices are usually lattice points; rational vertices
 * appear after box truncation and are flagged via integral(). Values are
 * immutable after construction.
 */
class Polytope {
public:
    static Polytope empty(int dim);
    static Polytope hull(int dim, const std::vector<QVec>& points);
    static Polytope hull_lattice(int dim, const std::vector<Exponents>& points);
    static Polytope point(const QVec& p);
    static Polytope origin(int dim) { return point(QVec(dim, Rational(0))); }
    // conv{0, e_i : i in vars}; vars empty means all coordinates
    static Polytope simplex(int dim, const std::vector<int>& vars = {});
    // the cube [-r, r]^dim
    static Polytope cube(int dim, long r);

    int dimension() const { return dim_; }
    int affine_dim() const { return affine_dim_; }
    bool is_empty() const { return affine_dim_ < 0; }
    bool integral() const;
    const std::vector<QVec>& vertices() const { return vertices_; }
    const std::vector<Halfspace>& facets() const { return facets_; }
    const std::vector<AffineEquation>& equations() const { return equations_; }

    bool contains(const QVec& p) const;
    bool contains_origin() const;
    bool contains_polytope(const Polytope& other) const;
    bool operator==(const Polytope& other) const;
    bool operator!=(const Polytope& other) const { return !(*this == other); }

    Polytope minkowski_sum(const Polytope& other) const;
    Polytope scaled(const Rational& k) const;
    Polytope translated(const QVec& t) const;
    // intersection with the box [lo_i, hi_i]; may produce rational vertices
    Polytope intersect_box(const QVec& lo, const QVec& hi) const;
    Polytope truncate_to_box(long d) const;

    // Euclidean n-volume; 0 for lower-dimensional bodies
    Rational volume() const;
    // number of lattice points (ivol)
    Int lattice_count() const;
    // minimal d with the body inside [-d, d]^n
    long pi_degree() const;
    bool is_coideal() const;

    std::string describe() const;

private:
    Polytope() = default;

    int dim_ = 0;
    int affine_dim_ = -1;
    std::vector<QVec> vertices_;
    std::vector<Halfspace> facets_;
    std::vector<AffineEquation> equations_;

    void validate() const;
    void enumerate_lattice(const std::function<void(const std::vector<long>&)>& emit) const;

    friend Rational mixed_volume(const std::vector<Polytope>& bodies);
};

// Polarization value of V(bodies[0], ..., bodies[n-1]); n bodies in dimension n.
Rational mixed_volume(const std::vector<Polytope>& bodies);

// W_j: mixed volume with j slots replaced by the standard simplex.
Rational quermassintegral(const Polytope& a, int j);

Polytope newton_polytope(const LaurentPolynomial& p);

struct FieldPolytope {
    Polytope polytope;
    std::vector<long> translation;  // lattice vector subtracted from the raw hull
    bool contains_origin = false;
};

// Hull of alpha - e_i over the terms x^alpha of each component, then the
// reported lattice translation toward the origin.
FieldPolytope field_polytope(const VectorField& xi);

}  // namespace multbound
