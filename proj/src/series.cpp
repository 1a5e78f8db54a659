#include "multbound/series.hpp"

#include <algorithm>
#include <functional>

#include "multbound/linalg.hpp"

namespace multbound {

TruncatedSeries TruncatedSeries::constant(const Rational& v, int order) {
    TruncatedSeries s(order);
    s.c_[0] = v;
    return s;
}

TruncatedSeries TruncatedSeries::identity(int order) {
    TruncatedSeries s(order);
    if (order >= 1) s.c_[1] = 1;
    return s;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
    int n = std::min(order(), o.order());
    TruncatedSeries r(n);
    for (int i = 0; i <= n; ++i) r.c_[i] = c_[i] + o.c_[i];
    return r;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
    int n = std::min(order(), o.order());
    TruncatedSeries r(n);
    for (int i = 0; i <= n; ++i) r.c_[i] = c_[i] - o.c_[i];
    return r;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
    int n = std::min(order(), o.order());
    TruncatedSeries r(n);
    for (int i = 0; i <= n; ++i) {
        if (c_[i] == 0) continue;
        for (int j = 0; i + j <= n; ++j) {
            if (o.c_[j] == 0) continue;
            r.c_[i + j] += c_[i] * o.c_[j];
        }
    }
    return r;
}

TruncatedSeries TruncatedSeries::scalar_mul(const Rational& v) const {
    TruncatedSeries r(order());
    for (int i = 0; i <= order(); ++i) r.c_[i] = c_[i] * v;
    return r;
}

TruncatedSeries TruncatedSeries::pow(unsigned e) const {
    TruncatedSeries r = constant(1, order());
    TruncatedSeries base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return r;
}

TruncatedSeries TruncatedSeries::derivative() const {
    if (order() == 0) throw std::domain_error("derivative of an order-0 truncation");
    TruncatedSeries r(order() - 1);
    for (int i = 1; i <= order(); ++i) r.c_[i - 1] = c_[i] * Rational(i);
    return r;
}

TruncatedSeries TruncatedSeries::inverse() const {
    if (c_[0] == 0) throw std::domain_error("series inverse needs a nonzero constant term");
    TruncatedSeries r(order());
    r.c_[0] = 1 / Rational(c_[0]);
    for (int k = 1; k <= order(); ++k) {
        Rational acc = 0;
        for (int j = 1; j <= k; ++j) acc += c_[j] * r.c_[k - j];
        r.c_[k] = -acc / c_[0];
    }
    return r;
}

TruncatedSeries TruncatedSeries::truncated(int order) const {
    int n = std::min(order, this->order());
    TruncatedSeries r(n);
    for (int i = 0; i <= n; ++i) r.c_[i] = c_[i];
    return r;
}

bool TruncatedSeries::is_zero() const { return !first_nonzero().has_value(); }

std::optional<int> TruncatedSeries::first_nonzero() const {
    for (int i = 0; i <= order(); ++i)
        if (c_[i] != 0) return i;
    return std::nullopt;
}

std::string provenance_name(Provenance p) {
    switch (p) {
        case Provenance::RegularExpansion: return "regular-expansion";
        case Provenance::RationalSystem: return "rational-system";
        case Provenance::Fuchsian: return "fuchsian";
        case Provenance::UserSupplied: return "user-supplied";
    }
    return "user-supplied";
}

Provenance provenance_from_name(const std::string& name) {
    if (name == "regular-expansion") return Provenance::RegularExpansion;
    if (name == "rational-system") return Provenance::RationalSystem;
    if (name == "fuchsian") return Provenance::Fuchsian;
    if (name == "user-supplied") return Provenance::UserSupplied;
    throw std::invalid_argument("unknown germ provenance: " + name);
}

TrajectoryGerm TrajectoryGerm::from_components(std::vector<TruncatedSeries> comps,
                                               Provenance provenance) {
    if (comps.empty()) throw std::invalid_argument("germ needs at least one component");
    TrajectoryGerm g;
    g.dim = static_cast<int>(comps.size());
    g.order = comps[0].order();
    for (const auto& c : comps) g.order = std::min(g.order, c.order());
    g.base.reserve(comps.size());
    for (const auto& c : comps) g.base.push_back(c[0]);
    g.components = std::move(comps);
    g.provenance = provenance;
    return g;
}

TruncatedSeries compose(const LaurentPolynomial& p, const TrajectoryGerm& gamma) {
    if (p.dimension() != gamma.dim)
        throw std::invalid_argument("polynomial and germ dimensions differ");
    const int n = gamma.order;
    // power cache per variable, negative exponents through the series inverse
    std::vector<std::map<long, TruncatedSeries>> cache(gamma.dim);
    std::vector<std::optional<TruncatedSeries>> inverses(gamma.dim);
    std::function<const TruncatedSeries&(int, long)> power =
        [&](int var, long e) -> const TruncatedSeries& {
        auto& slot = cache[var];
        auto it = slot.find(e);
        if (it != slot.end()) return it->second;
        TruncatedSeries value(n);
        if (e == 0) {
            value = TruncatedSeries::constant(1, n);
        } else if (e > 0) {
            value = power(var, e - 1) * gamma.components[var].truncated(n);
        } else {
            if (!inverses[var]) {
                if (gamma.components[var][0] == 0)
                    throw std::domain_error(
                        "negative exponent composed with a non-invertible component");
                inverses[var] = gamma.components[var].truncated(n).inverse();
            }
            value = power(var, e + 1) * *inverses[var];
        }
        return slot.emplace(e, std::move(value)).first->second;
    };
    TruncatedSeries total(n);
    for (const auto& [exp, coeff] : p.terms()) {
        TruncatedSeries term = TruncatedSeries::constant(coeff, n);
        for (int v = 0; v < gamma.dim; ++v)
            if (exp[v] != 0) term = term * power(v, exp[v]);
        total = total + term;
    }
    return total;
}

TrajectoryGerm expand_regular(const VectorField& xi, const QVec& p, int order) {
    if (static_cast<int>(p.size()) != xi.dimension())
        throw std::invalid_argument("base point dimension mismatch");
    if (order < 1) throw std::invalid_argument("expansion order must be >= 1");
    if (xi.singular_at(p))
        throw std::domain_error("expand_regular at a singular point of the field");
    const int n = xi.dimension();
    std::vector<TruncatedSeries> comps(n, TruncatedSeries(order));
    for (int i = 0; i < n; ++i) comps[i].set(0, p[i]);
    TrajectoryGerm g = TrajectoryGerm::from_components(comps, Provenance::RegularExpansion);
    for (int k = 0; k < order; ++k) {
        TrajectoryGerm window = g;
        for (auto& c : window.components) c = c.truncated(k);
        window.order = k;
        for (int i = 0; i < n; ++i) {
            TruncatedSeries rhs = compose(xi.component(i), window);
            g.components[i].set(k + 1, rhs[k] / Rational(k + 1));
        }
    }
    return g;
}

TrajectoryGerm expand_rational(const RationalSystem& sys, const Rational& z0, const QVec& x0,
                               int order) {
    const int n = sys.dependent_count();
    if (n < 1) throw std::invalid_argument("empty rational system");
    if (static_cast<int>(sys.denominators.size()) != n)
        throw std::invalid_argument("numerator/denominator count mismatch");
    if (static_cast<int>(x0.size()) != n)
        throw std::invalid_argument("base point dimension mismatch");
    if (order < 1) throw std::invalid_argument("expansion order must be >= 1");
    const int dim = n + 1;
    QVec base(dim);
    base[0] = z0;
    for (int i = 0; i < n; ++i) base[i + 1] = x0[i];
    for (int i = 0; i < n; ++i) {
        if (sys.numerators[i].dimension() != dim || sys.denominators[i].dimension() != dim)
            throw std::invalid_argument("system polynomial dimension mismatch");
        if (sys.denominators[i].evaluate(base) == 0)
            throw std::domain_error("denominator vanishes at the base point");
    }

    std::vector<TruncatedSeries> comps(dim, TruncatedSeries(order));
    comps[0] = TruncatedSeries::identity(order);
    comps[0].set(0, z0);
    for (int i = 0; i < n; ++i) comps[i + 1].set(0, x0[i]);
    TrajectoryGerm g = TrajectoryGerm::from_components(comps, Provenance::RationalSystem);

    for (int k = 0; k < order; ++k) {
        TrajectoryGerm window = g;
        for (auto& c : window.components) c = c.truncated(k);
        window.order = k;
        for (int i = 0; i < n; ++i) {
            TruncatedSeries qi = compose(sys.denominators[i], window);
            TruncatedSeries pi = compose(sys.numerators[i], window);
            // coefficient k of x_i' Q_i(gamma) - P_i(gamma) must vanish
            Rational acc = 0;
            for (int j = 0; j < k; ++j) {
                Rational dj = g.components[i + 1][j + 1] * Rational(j + 1);
                acc += dj * qi[k - j];
            }
            Rational ck1 = (pi[k] - acc) / (Rational(k + 1) * qi[0]);
            g.components[i + 1].set(k + 1, ck1);
        }
    }
    return g;
}

TrajectoryGerm expand_fuchsian(const VectorField& xi, const QVec& x0, int order,
                               const ResonanceData& resonance) {
    if (!xi.time_index())
        throw std::invalid_argument("expand_fuchsian needs a graph-form field");
    const int dim = xi.dimension();
    const int tau = *xi.time_index();
    if (xi.component(tau) != LaurentPolynomial::variable(dim, tau))
        throw std::invalid_argument("expand_fuchsian needs time component exactly z");
    if (static_cast<int>(x0.size()) != dim - 1)
        throw std::invalid_argument("base point must cover the dependent variables");
    if (order < 1) throw std::invalid_argument("expansion order must be >= 1");

    std::vector<int> dep;
    for (int i = 0; i < dim; ++i)
        if (i != tau) dep.push_back(i);

    QVec base(dim, Rational(0));
    for (int j = 0; j < dim - 1; ++j) base[dep[j]] = x0[j];
    for (int j = 0; j < dim - 1; ++j)
        if (xi.component(dep[j]).evaluate(base) != 0)
            throw std::domain_error("inconsistent base point: F(0, x0) != 0");

    const int n = dim - 1;
    QMatrix jac(n, QVec(n));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            jac[r][c] = xi.component(dep[r]).partial_derivative(dep[c]).evaluate(base);

    std::vector<TruncatedSeries> comps(dim, TruncatedSeries(order));
    comps[tau] = TruncatedSeries::identity(order);
    for (int j = 0; j < n; ++j) comps[dep[j]].set(0, x0[j]);
    TrajectoryGerm g = TrajectoryGerm::from_components(comps, Provenance::Fuchsian);

    for (int k = 1; k <= order; ++k) {
        TrajectoryGerm window = g;
        for (auto& c : window.components) c = c.truncated(k);
        for (int j = 0; j < n; ++j) window.components[dep[j]].set(k, Rational(0));
        window.order = k;
        QVec rhs(n);
        for (int j = 0; j < n; ++j) rhs[j] = compose(xi.component(dep[j]), window)[k];
        QMatrix m(n, QVec(n));
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c)
                m[r][c] = (r == c ? Rational(k) : Rational(0)) - jac[r][c];
        auto ck = linalg::solve_unique(m, rhs);
        if (!ck) {
            auto it = resonance.find(k);
            if (it == resonance.end())
                throw ResonanceError(k, "resonance at order " + std::to_string(k) +
                                            ": k I - J is singular and no coefficient was supplied");
            if (static_cast<int>(it->second.size()) != n)
                throw ResonanceError(k, "resonance coefficient dimension mismatch at order " +
                                            std::to_string(k));
            QVec check = linalg::mat_vec(m, it->second);
            for (int j = 0; j < n; ++j)
                if (check[j] != rhs[j])
                    throw ResonanceError(k, "supplied resonance coefficient at order " +
                                                std::to_string(k) +
                                                " does not satisfy the recursion");
            ck = it->second;
        }
        for (int j = 0; j < n; ++j) g.components[dep[j]].set(k, (*ck)[j]);
    }
    return g;
}

ResidualReport residual_check(const VectorField& xi, const TrajectoryGerm& gamma) {
    if (xi.dimension() != gamma.dim)
        throw std::invalid_argument("field and germ dimensions differ");
    ResidualReport report;
    report.checked_order = gamma.order;
    if (gamma.order < 1) return report;
    std::optional<int> worst;
    auto note_failure = [&](int residual_index) {
        int order = residual_index + 1;  // residual at t^m pins germ coefficient m+1
        if (!worst || order < *worst) worst = order;
    };
    if (xi.time_index()) {
        const int tau = *xi.time_index();
        TruncatedSeries lambda = compose(xi.component(tau), gamma);
        TruncatedSeries dtau = gamma.components[tau].truncated(gamma.order).derivative();
        for (int i = 0; i < gamma.dim; ++i) {
            if (i == tau) continue;
            TruncatedSeries lhs = gamma.components[i].truncated(gamma.order).derivative() * lambda;
            TruncatedSeries rhs = dtau * compose(xi.component(i), gamma);
            auto bad = (lhs - rhs).first_nonzero();
            if (bad) note_failure(*bad);
        }
    } else {
        for (int i = 0; i < gamma.dim; ++i) {
            TruncatedSeries lhs = gamma.components[i].truncated(gamma.order).derivative();
            TruncatedSeries rhs = compose(xi.component(i), gamma).truncated(gamma.order - 1);
            auto bad = (lhs - rhs).first_nonzero();
            if (bad) note_failure(*bad);
        }
    }
    if (worst) {
        report.clean = false;
        report.first_failure = worst;
    }
    return report;
}

}  // namespace multbound
