#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "multbound/algebra.hpp"

namespace multbound {

/*
 * Univariate power series truncated at a fixed order, exact rational
 * coefficients c_0..c_N. Arithmetic carries the minimum truncation order
 * of its operands, so results never pretend to more precision than the
 * inputs support.
 */
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order) : c_(order + 1, Rational(0)) {
        if (order < 0) throw std::invalid_argument("negative truncation order");
    }
    static TruncatedSeries constant(const Rational& v, int order);
    static TruncatedSeries identity(int order);  // the series t

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const Rational& operator[](int k) const { return c_.at(k); }
    void set(int k, const Rational& v) { c_.at(k) = v; }

    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator-(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const TruncatedSeries& o) const;
    TruncatedSeries scalar_mul(const Rational& v) const;
    TruncatedSeries pow(unsigned e) const;
    TruncatedSeries derivative() const;          // order drops by one
    TruncatedSeries inverse() const;             // requires c_0 != 0
    TruncatedSeries truncated(int order) const;

    bool is_zero() const;
    std::optional<int> first_nonzero() const;    // never reads beyond the order

private:
    std::vector<Rational> c_;
};

enum class Provenance { RegularExpansion, RationalSystem, Fuchsian, UserSupplied };

std::string provenance_name(Provenance p);
Provenance provenance_from_name(const std::string& name);

/*
 * Trajectory germ: one truncated series per ambient coordinate in a local
 * time t, with the base point as constant terms. Graph-form germs carry the
 * time variable itself as one component (z0 + t).
 */
struct TrajectoryGerm {
    int dim = 0;
    int order = 0;
    std::vector<TruncatedSeries> components;
    QVec base;
    Provenance provenance = Provenance::UserSupplied;

    static TrajectoryGerm from_components(std::vector<TruncatedSeries> comps,
                                          Provenance provenance);
};

// P(gamma(t)) truncated at the germ order; negative exponents require the
// corresponding component to have a nonzero constant term.
TruncatedSeries compose(const LaurentPolynomial& p, const TrajectoryGerm& gamma);

// Series solution of x'(t) = xi(x(t)), x(0) = p; requires xi(p) != 0.
TrajectoryGerm expand_regular(const VectorField& xi, const QVec& p, int order);

// dx_i/dz = P_i(z,x) / Q_i(z,x); variable 0 is the time variable z.
struct RationalSystem {
    std::vector<LaurentPolynomial> numerators;
    std::vector<LaurentPolynomial> denominators;
    int dependent_count() const { return static_cast<int>(numerators.size()); }
};

// Graph germ (z0 + t, f_1(z0 + t), ...); denominators must not vanish at the base.
TrajectoryGerm expand_rational(const RationalSystem& sys, const Rational& z0, const QVec& x0,
                               int order);

// Supplied coefficients for resonant orders of the Fuchsian recursion.
using ResonanceData = std::map<int, QVec>;

struct ResonanceError : std::runtime_error {
    ResonanceError(int order, const std::string& what) : std::runtime_error(what), k(order) {}
    int k;
};

// Holomorphic solution germ of z x' = F(z, x) through (0, x0), computed by
// order-by-order linear solves (k I - J) c_k = g_k with J = dF/dx(0, x0).
// xi must be in graph form with time component exactly z. Resonant orders
// (singular k I - J) take their coefficients from `resonance` and fail with
// ResonanceError when no consistent choice is supplied.
TrajectoryGerm expand_fuchsian(const VectorField& xi, const QVec& x0, int order,
                               const ResonanceData& resonance = {});

struct ResidualReport {
    bool clean = true;
    int checked_order = 0;                // residuals verified through this germ order
    std::optional<int> first_failure;     // germ-coefficient order of the first defect
};

// Certifies xi-invariance of a germ: the curve tangent must stay parallel to
// the field along the germ. Graph-form fields are checked multiplied through
// by t(z) instead of dividing series.
ResidualReport residual_check(const VectorField& xi, const TrajectoryGerm& gamma);

}  // namespace multbound
