#include "multbound/multiplicity.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace multbound {

GermSource::GermSource(TrajectoryGerm fixed) : fixed_(std::move(fixed)), dim_(fixed_->dim) {}

GermSource::GermSource(std::function<TrajectoryGerm(int)> generator, int dim)
    : generator_(std::move(generator)), dim_(dim) {}

TrajectoryGerm GermSource::germ(int order) const {
    if (generator_) return generator_(order);
    if (order >= fixed_->order) return *fixed_;
    TrajectoryGerm g = *fixed_;
    for (auto& c : g.components) c = c.truncated(order);
    g.order = order;
    return g;
}

int GermSource::fixed_order() const {
    return fixed_ ? fixed_->order : std::numeric_limits<int>::max();
}

namespace {

MultiplicityResult capped_result(const MultiplicityOptions& opts, int effective_cap) {
    MultiplicityResult r;
    if (opts.cap_is_bound) {
        r.kind = MultiplicityResult::Kind::AtLeast;
        r.value = Int(effective_cap) + 1;
    } else {
        r.kind = MultiplicityResult::Kind::IdenticallyZeroSuspected;
        r.value = effective_cap;
    }
    return r;
}

}  // namespace

MultiplicityResult multiplicity(const LaurentPolynomial& p, const GermSource& source,
                                const MultiplicityOptions& opts) {
    if (p.dimension() != source.dimension())
        throw std::invalid_argument("polynomial and germ dimensions differ");
    if (opts.cap < 1 || opts.initial_order < 1)
        throw std::invalid_argument("multiplicity oracle needs positive orders");
    int effective_cap = std::min(opts.cap, source.extendable() ? opts.cap : source.fixed_order());
    if (p.is_zero()) return capped_result(opts, effective_cap);

    int order = std::min(opts.initial_order, effective_cap);
    while (true) {
        TrajectoryGerm g = source.germ(order);
        TruncatedSeries s = compose(p, g);
        if (auto k = s.first_nonzero()) {
            MultiplicityResult r;
            r.kind = MultiplicityResult::Kind::Exact;
            r.value = *k;
            r.leading = s[*k];
            return r;
        }
        int reached = std::min(order, g.order);
        if (reached >= effective_cap) return capped_result(opts, effective_cap);
        order = std::min(effective_cap, order * 2);
    }
}

MultiplicityResult multiplicity(const LaurentPolynomial& p, const TrajectoryGerm& gamma,
                                const MultiplicityOptions& opts) {
    return multiplicity(p, GermSource(gamma), opts);
}

MultiplicitySum multiplicity_sum(const LaurentPolynomial& p,
                                 const std::vector<GermSource>& germs,
                                 const MultiplicityOptions& opts) {
    MultiplicitySum out;
    bool all_exact = true;
    Int total = 0;
    for (const auto& g : germs) {
        MultiplicityResult r = multiplicity(p, g, opts);
        all_exact = all_exact && r.exact();
        total += r.value;
        out.per_point.push_back(std::move(r));
    }
    out.total.value = total;
    out.total.kind =
        all_exact ? MultiplicityResult::Kind::Exact : MultiplicityResult::Kind::AtLeast;
    return out;
}

TransversalDerivative first_transversal_derivative(const VectorField& xi,
                                                   const LaurentPolynomial& p,
                                                   const GermSource& source, unsigned cap_k,
                                                   const MultiplicityOptions& opts) {
    MultiplicityResult base = multiplicity(p, source, opts);
    if (base.exact())
        throw std::domain_error(
            "first_transversal_derivative: p does not vanish identically along the germ");
    LaurentPolynomial q = p;
    for (unsigned k = 1; k <= cap_k; ++k) {
        q = xi.lie_derivative(q);
        MultiplicityResult r = multiplicity(q, source, opts);
        if (r.exact()) return TransversalDerivative{k, q, std::move(r)};
    }
    throw std::runtime_error("first_transversal_derivative: derivative cap exhausted");
}

RolleReport rolle_order_check(const VectorField& xi, const LaurentPolynomial& f,
                              const TrajectoryGerm& gamma) {
    RolleReport report;
    report.checked_order = gamma.order;
    report.singular_base = xi.singular_at(gamma.base);
    TruncatedSeries along = compose(f, gamma);
    auto ord_f = along.first_nonzero();
    if (!ord_f) {
        report.degenerate = true;
        return report;
    }
    report.ord_f = *ord_f;
    report.required = report.ord_f - (report.singular_base ? 0 : 1);
    TruncatedSeries derived = compose(xi.lie_derivative(f), gamma);
    auto ord_g = derived.first_nonzero();
    if (ord_g) {
        report.ord_xf = Int(*ord_g);
        report.pass = Int(*ord_g) >= report.required;
    } else {
        report.pass = Int(gamma.order) + 1 >= report.required;
    }
    return report;
}

MultRatioReport mult_ratio_check(const LaurentPolynomial& f, const TrajectoryGerm& gamma) {
    if (f.dimension() != gamma.dim)
        throw std::invalid_argument("polynomial and germ dimensions differ");
    if (f.is_zero() || f.evaluate(gamma.base) != 0)
        throw std::domain_error("mult_ratio_check: f must vanish at the base point");
    MultRatioReport report;
    LaurentPolynomial recentered = f.shifted(gamma.base);
    long lowest = -1;
    for (const auto& [exp, c] : recentered.terms()) {
        long s = 0;
        for (long e : exp) s += e;
        if (lowest < 0 || s < lowest) lowest = s;
    }
    report.divisor_mult = lowest;
    TruncatedSeries along = compose(f, gamma);
    auto ord = along.first_nonzero();
    if (!ord) {
        report.degenerate = true;
        return report;
    }
    report.ord = *ord;
    report.ratio = Rational(report.ord) / Rational(lowest);
    report.pass = report.ord >= Int(lowest) && lowest >= 1;
    return report;
}

}  // namespace multbound
