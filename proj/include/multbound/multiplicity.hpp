#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "multbound/series.hpp"

namespace multbound {

/*
 * Order of vanishing of a polynomial along a germ. Exact(k) certifies that
 * coefficient k of the composed series is the first nonzero one. AtLeast and
 * IdenticallyZeroSuspected are the two cap outcomes: AtLeast when the cap
 * came from a bound (a violation candidate), the latter otherwise.
 */
struct MultiplicityResult {
    enum class Kind { Exact, AtLeast, IdenticallyZeroSuspected };
    Kind kind = Kind::Exact;
    Int value = 0;                      // Exact k / AtLeast N+1 / suspected cap
    std::optional<Rational> leading;    // leading coefficient when Exact

    bool exact() const { return kind == Kind::Exact; }
};

// Germ supplier for the escalating oracle: either a fixed germ (its order is
// the effective cap) or a deterministic generator indexed by order.
class GermSource {
public:
    explicit GermSource(TrajectoryGerm fixed);
    GermSource(std::function<TrajectoryGerm(int)> generator, int dim);

    TrajectoryGerm germ(int order) const;
    bool extendable() const { return static_cast<bool>(generator_); }
    int fixed_order() const;
    int dimension() const { return dim_; }

private:
    std::optional<TrajectoryGerm> fixed_;
    std::function<TrajectoryGerm(int)> generator_;
    int dim_ = 0;
};

struct MultiplicityOptions {
    int initial_order = 64;
    int cap = 4096;
    bool cap_is_bound = false;  // cap derived from a bound theorem
};

MultiplicityResult multiplicity(const LaurentPolynomial& p, const GermSource& source,
                                const MultiplicityOptions& opts = {});

MultiplicityResult multiplicity(const LaurentPolynomial& p, const TrajectoryGerm& gamma,
                                const MultiplicityOptions& opts = {});

struct MultiplicitySum {
    MultiplicityResult total;
    std::vector<MultiplicityResult> per_point;
};

// Componentwise multiplicities and their sum; any non-exact point poisons
// the total to a lower bound.
MultiplicitySum multiplicity_sum(const LaurentPolynomial& p,
                                 const std::vector<GermSource>& germs,
                                 const MultiplicityOptions& opts = {});

struct TransversalDerivative {
    unsigned k = 0;
    LaurentPolynomial witness;
    MultiplicityResult mult;
};

// Smallest k <= cap_k with xi^k p of finite order along the germ; requires
// p itself to vanish identically to the working order.
TransversalDerivative first_transversal_derivative(const VectorField& xi,
                                                   const LaurentPolynomial& p,
                                                   const GermSource& source, unsigned cap_k,
                                                   const MultiplicityOptions& opts = {});

struct RolleReport {
    bool degenerate = false;   // f vanished identically to the working order
    bool singular_base = false;
    Int ord_f = 0;
    std::optional<Int> ord_xf;  // empty: >= checked order + 1
    Int required = 0;
    bool pass = false;
    int checked_order = 0;
};

// ord(xi f | gamma) >= ord(f | gamma) - 1, without the -1 at singular points.
RolleReport rolle_order_check(const VectorField& xi, const LaurentPolynomial& f,
                              const TrajectoryGerm& gamma);

struct MultRatioReport {
    bool degenerate = false;   // f vanished identically to the working order
    Int ord = 0;               // ord(f | gamma)
    long divisor_mult = 0;     // lowest total degree of f recentered at the base
    Rational ratio = 0;        // ord / divisor_mult
    bool pass = false;
};

// Divisor-multiplicity comparison: ord(f|gamma) >= mult_p V(f) >= 1, where
// the divisor multiplicity is read off the recentered expansion of f.
MultRatioReport mult_ratio_check(const LaurentPolynomial& f, const TrajectoryGerm& gamma);

}  // namespace multbound
