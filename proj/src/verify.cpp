#include "multbound/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "multbound/bounds.hpp"
#include "multbound/examples.hpp"
#include "multbound/linalg.hpp"
#include "multbound/multiplicity.hpp"
#include "multbound/rng.hpp"
#include "multbound/series.hpp"

namespace multbound {

namespace {

// ----------------------------------------------------- univariate helpers

using UniQ = std::vector<Rational>;  // ascending coefficients

void uq_trim(UniQ& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

long uq_deg(const UniQ& p) { return static_cast<long>(p.size()) - 1; }

UniQ uq_mod(UniQ a, const UniQ& b) {
    uq_trim(a);
    while (uq_deg(a) >= uq_deg(b)) {
        Rational f = a.back() / b.back();
        long shift = uq_deg(a) - uq_deg(b);
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        uq_trim(a);
        if (a.empty()) break;
    }
    return a;
}

UniQ uq_gcd(UniQ a, UniQ b) {
    uq_trim(a);
    uq_trim(b);
    while (!b.empty()) {
        UniQ r = uq_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Rational lead = a.back();
        for (auto& c : a) c /= lead;
    }
    return a;
}

// --------------------------------------------- integer matrices and resultants

Int int_det_bareiss(std::vector<std::vector<Int>> m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        int pivot = -1;
        for (int r = k; r < n; ++r)
            if (m[r][k] != 0) { pivot = r; break; }
        if (pivot < 0) return 0;
        if (pivot != k) { std::swap(m[pivot], m[k]); sign = -sign; }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Int num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    Int result = m[n - 1][n - 1];
    return sign > 0 ? result : Int(-result);
}

// Newton interpolation through (xs[i], ys[i]) with distinct integer nodes.
UniQ interpolate(const std::vector<Int>& xs, const std::vector<Rational>& ys) {
    const size_t n = xs.size();
    std::vector<Rational> coef(ys.begin(), ys.end());
    for (size_t level = 1; level < n; ++level)
        for (size_t i = n - 1; i >= level; --i) {
            coef[i] = (coef[i] - coef[i - 1]) / Rational(Int(xs[i] - xs[i - level]));
            if (i == level) break;
        }
    UniQ poly = {coef[n - 1]};
    for (size_t i = n - 1; i-- > 0;) {
        // poly = poly * (t - xs[i]) + coef[i]
        UniQ next(poly.size() + 1, Rational(0));
        for (size_t j = 0; j < poly.size(); ++j) {
            next[j + 1] += poly[j];
            next[j] -= poly[j] * Rational(xs[i]);
        }
        next[0] += coef[i];
        poly = std::move(next);
    }
    uq_trim(poly);
    return poly;
}

// Integer bivariate polynomial as a dense exponent map.
struct Bivar {
    std::map<std::pair<long, long>, Int> terms;  // (e_kept, e_elim) -> coeff
    long deg_kept = 0;
    long deg_elim = 0;
};

// view of a Laurent polynomial with cleared denominators and exponents
// shifted so the minimum in each variable is zero
Bivar to_bivar(const LaurentPolynomial& p, int kept_var, int elim_var) {
    Int lcm = 1;
    for (const auto& [e, c] : p.terms()) {
        Int d = c.get_den();
        Int g;
        mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), d.get_mpz_t());
        lcm = lcm / g * d;
    }
    long min_k = 0, min_e = 0;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        if (first || e[kept_var] < min_k) min_k = e[kept_var];
        if (first || e[elim_var] < min_e) min_e = e[elim_var];
        first = false;
    }
    Bivar b;
    for (const auto& [e, c] : p.terms()) {
        long ek = e[kept_var] - min_k;
        long ee = e[elim_var] - min_e;
        Rational scaled = c * Rational(lcm);
        b.terms[{ek, ee}] = scaled.get_num();
        b.deg_kept = std::max(b.deg_kept, ek);
        b.deg_elim = std::max(b.deg_elim, ee);
    }
    return b;
}

// coefficient of elim^j as a polynomial in the kept variable, evaluated at x0
Int bivar_coeff_at(const Bivar& b, long j, const Int& x0) {
    Int total = 0;
    for (const auto& [e, c] : b.terms) {
        if (e.second != j) continue;
        total += c * ipow(x0, static_cast<unsigned>(e.first));
    }
    return total;
}

struct DirectionCount {
    bool degenerate = false;
    std::string reason;
    long roots = 0;
};

// the coefficient of elim^j as a stripped univariate polynomial in the kept variable
UniQ bivar_row(const Bivar& b, long j) {
    UniQ row(b.deg_kept + 1, Rational(0));
    for (const auto& [e, c] : b.terms)
        if (e.second == j) row[e.first] += Rational(c);
    uq_trim(row);
    size_t strip = 0;
    while (strip < row.size() && row[strip] == 0) ++strip;
    return UniQ(row.begin() + strip, row.end());
}

bool rows_share_root(const Bivar& b1, long j1, const Bivar& b2, long j2) {
    UniQ r1 = bivar_row(b1, j1), r2 = bivar_row(b2, j2);
    if (r1.empty() || r2.empty()) return false;
    return uq_deg(uq_gcd(r1, r2)) > 0;
}

// Nonzero roots of Res_elim(p1, p2) in the kept variable, counted with
// multiplicity via the stripped resultant degree. For generic systems every
// common root is simple, so this is the plain root count; leading-row and
// zero-row collisions that could inflate the degree are flagged degenerate.
DirectionCount resultant_root_count(const Bivar& p1, const Bivar& p2) {
    const long d1 = p1.deg_elim, d2 = p2.deg_elim;
    const long size = d1 + d2;
    DirectionCount out;
    if (size == 0) {
        out.degenerate = true;
        out.reason = "no elimination variable";
        return out;
    }
    if (rows_share_root(p1, d1, p2, d2)) {
        out.degenerate = true;
        out.reason = "leading-coefficient collapse";
        return out;
    }
    if (rows_share_root(p1, 0, p2, 0)) {
        out.degenerate = true;
        out.reason = "common root on a coordinate axis";
        return out;
    }
    long bound = d1 * p2.deg_kept + d2 * p1.deg_kept;
    std::vector<Int> xs;
    std::vector<Rational> ys;
    for (long i = 0; i <= bound; ++i) {
        long node = (i % 2 == 0) ? i / 2 : -(i / 2 + 1);
        Int x0(node);
        std::vector<std::vector<Int>> syl(size, std::vector<Int>(size, Int(0)));
        for (long r = 0; r < d2; ++r)
            for (long j = 0; j <= d1; ++j) syl[r][r + d1 - j] = bivar_coeff_at(p1, j, x0);
        for (long r = 0; r < d1; ++r)
            for (long j = 0; j <= d2; ++j) syl[d2 + r][r + d2 - j] = bivar_coeff_at(p2, j, x0);
        xs.push_back(x0);
        ys.emplace_back(int_det_bareiss(std::move(syl)));
    }
    UniQ res = interpolate(xs, ys);
    if (res.empty()) {
        out.degenerate = true;
        out.reason = "zero resultant";
        return out;
    }
    size_t strip = 0;
    while (strip < res.size() && res[strip] == 0) ++strip;
    out.roots = static_cast<long>(res.size() - strip) - 1;
    return out;
}

}  // namespace

TorusRootCount count_torus_roots_2d(const LaurentPolynomial& p1, const LaurentPolynomial& p2) {
    if (p1.dimension() != 2 || p2.dimension() != 2)
        throw std::invalid_argument("count_torus_roots_2d needs two bivariate polynomials");
    if (p1.is_zero() || p2.is_zero())
        throw std::invalid_argument("count_torus_roots_2d needs nonzero polynomials");
    TorusRootCount out;
    if (p1.term_count() == 1 || p2.term_count() == 1) {
        // a monomial never vanishes on the torus
        out.count = 0;
        return out;
    }

    Bivar bx1 = to_bivar(p1, 0, 1), bx2 = to_bivar(p2, 0, 1);  // eliminate y
    Bivar by1 = to_bivar(p1, 1, 0), by2 = to_bivar(p2, 1, 0);  // eliminate x

    auto one_variable_only = [&](const Bivar& b1, const Bivar& b2) {
        // both free of the elimination variable: any common nonzero root of the
        // remaining parts gives a one-dimensional solution set
        UniQ u1(b1.deg_kept + 1, Rational(0)), u2(b2.deg_kept + 1, Rational(0));
        for (const auto& [e, c] : b1.terms) u1[e.first] += Rational(c);
        for (const auto& [e, c] : b2.terms) u2[e.first] += Rational(c);
        uq_trim(u1);
        uq_trim(u2);
        return uq_deg(uq_gcd(u1, u2)) > 0;
    };
    if (bx1.deg_elim == 0 && bx2.deg_elim == 0) {
        if (one_variable_only(bx1, bx2)) {
            out.degenerate = true;
            out.reason = "positive-dimensional intersection";
        }
        return out;
    }
    if (by1.deg_elim == 0 && by2.deg_elim == 0) {
        if (one_variable_only(by1, by2)) {
            out.degenerate = true;
            out.reason = "positive-dimensional intersection";
        }
        return out;
    }
    DirectionCount mx = resultant_root_count(bx1, bx2);
    if (mx.degenerate) {
        out.degenerate = true;
        out.reason = mx.reason;
        return out;
    }
    DirectionCount my = resultant_root_count(by1, by2);
    if (my.degenerate) {
        out.degenerate = true;
        out.reason = my.reason;
        return out;
    }
    if (mx.roots != my.roots) {
        out.degenerate = true;
        out.reason = "elimination directions disagree";
        return out;
    }
    out.count = mx.roots;
    return out;
}

long hf_parametrized(const std::vector<LaurentPolynomial>& map,
                     const std::vector<Exponents>& a_set) {
    const int n = static_cast<int>(map.size());
    if (n == 0) throw std::invalid_argument("empty parametrization");
    for (const auto& g : map) {
        if (g.dimension() != 1) throw std::invalid_argument("map components must be univariate");
        if (!g.is_polynomial())
            throw std::invalid_argument("map components must be plain polynomials");
    }
    if (a_set.empty()) return 0;
    std::vector<long> shift(n, 0);
    for (const auto& a : a_set) {
        if (static_cast<int>(a.size()) != n)
            throw std::invalid_argument("support exponent dimension mismatch");
        for (int i = 0; i < n; ++i) shift[i] = std::min(shift[i], a[i]);
    }
    for (int i = 0; i < n; ++i)
        if (shift[i] < 0 && map[i].is_zero())
            throw std::domain_error("negative exponent demands a nonzero map component");

    auto to_uni = [](const LaurentPolynomial& g) {
        UniQ u(g.is_zero() ? 1 : g.degree_in(0) + 1, Rational(0));
        for (const auto& [e, c] : g.terms()) u[e[0]] = c;
        uq_trim(u);
        return u;
    };
    auto uq_mul = [](const UniQ& a, const UniQ& b) {
        if (a.empty() || b.empty()) return UniQ{};
        UniQ r(a.size() + b.size() - 1, Rational(0));
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
        return r;
    };

    std::vector<UniQ> rows;
    size_t width = 1;
    for (const auto& a : a_set) {
        UniQ f = {Rational(1)};
        for (int i = 0; i < n; ++i) {
            long e = a[i] - shift[i];
            UniQ gi = to_uni(map[i]);
            for (long rep = 0; rep < e; ++rep) f = uq_mul(f, gi);
        }
        width = std::max(width, f.size());
        rows.push_back(std::move(f));
    }
    QMatrix m;
    for (const auto& r : rows) {
        QVec row(width, Rational(0));
        for (size_t i = 0; i < r.size(); ++i) row[i] = r[i];
        m.push_back(std::move(row));
    }
    return linalg::rank(m);
}

// --------------------------------------------------------------- the suites

namespace {

std::vector<std::string> generic_names(int n) {
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    return names;
}

LaurentPolynomial random_polynomial(Rng& rng, int dim, long max_deg, long height,
                                    int max_terms, bool laurent) {
    for (int attempt = 0; attempt < 50; ++attempt) {
        LaurentPolynomial p(dim);
        int terms = static_cast<int>(rng.uniform(1, max_terms));
        for (int t = 0; t < terms; ++t) {
            Exponents e(dim, 0);
            long budget = max_deg;
            for (int i = 0; i < dim; ++i) {
                long lo = laurent ? -max_deg : 0;
                long pick = rng.uniform(lo, budget);
                e[i] = pick;
                if (pick > 0) budget -= pick;
            }
            long c = rng.uniform(-height, height);
            if (c == 0) c = 1;
            p.add_term(e, Rational(c));
        }
        if (!p.is_zero()) return p;
    }
    return LaurentPolynomial::constant(dim, Rational(1));
}

VectorField random_field(Rng& rng, int dim, long max_delta) {
    std::vector<LaurentPolynomial> comps;
    for (int i = 0; i < dim; ++i)
        comps.push_back(random_polynomial(rng, dim, std::max(0L, max_delta), 3, 3, false));
    return VectorField(std::move(comps));
}

std::string point_text(const QVec& p) {
    std::string s = "(";
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) s += ",";
        s += to_string(p[i]);
    }
    return s + ")";
}

std::string points_text(const std::vector<Exponents>& pts) {
    std::ostringstream out;
    out << "[";
    for (size_t i = 0; i < pts.size(); ++i) {
        if (i) out << ";";
        out << "(";
        for (size_t j = 0; j < pts[i].size(); ++j) {
            if (j) out << ",";
            out << pts[i][j];
        }
        out << ")";
    }
    out << "]";
    return out.str();
}

void record(SuiteSummary& s, int id, const std::string& check, const std::string& lhs,
            const std::string& rhs, bool pass, const std::string& instance) {
    s.reports.push_back(TrialReport{id, check, lhs, rhs, pass ? "pass" : "fail", instance});
    if (pass)
        ++s.passes;
    else
        ++s.failures;
}

void record_degenerate(SuiteSummary& s, int id, const std::string& check,
                       const std::string& instance) {
    s.reports.push_back(TrialReport{id, check, "", "", "degenerate-regenerated", instance});
    ++s.degenerate;
}

SuiteSummary suite_vol_ivol(const InstanceSpec& spec) {
    SuiteSummary s;
    s.suite = "vol-ivol";
    s.seed = spec.seed;
    Rng rng(spec.seed);
    for (int trial = 0; trial < spec.trials; ++trial) {
        int n = static_cast<int>(rng.uniform(1, std::min(spec.max_dim, 4)));
        int m = static_cast<int>(rng.uniform(n + 1, 8));
        std::vector<Exponents> pts;
        for (int i = 0; i < m; ++i) {
            Exponents e(n);
            for (int j = 0; j < n; ++j) e[j] = rng.uniform(-3, 3);
            pts.push_back(e);
        }
        std::string inst = "n=" + std::to_string(n) + " pts=" + points_text(pts);
        Polytope delta = Polytope::hull_lattice(n, pts);
        Polytope grown = delta.minkowski_sum(Polytope::cube(n, 1));
        Int ivol = grown.lattice_count();
        Rational vol = delta.volume();
        record(s, trial, "ivol(D+Pi) >= vol(D)", to_string(ivol), to_string(vol),
               Rational(ivol) >= vol, inst);
        if (trial % 2 == 0) {
            std::vector<Exponents> wide = pts;
            Polytope box = Polytope::cube(n, n);
            for (const auto& v : box.vertices()) {
                Exponents e(n);
                for (int j = 0; j < n; ++j) e[j] = to_long(v[j].get_num());
                wide.push_back(e);
            }
            Polytope big = Polytope::hull_lattice(n, wide);
            Int iv = big.lattice_count();
            Rational v4 = big.volume() / 4;
            record(s, trial, "nPi in D: ivol(D) >= vol(D)/4", to_string(iv), to_string(v4),
                   Rational(iv) >= v4, inst + " +cube(n)");
            if (trial % 4 == 0 && n <= 3) {
                QVec lo(n), hi(n);
                for (int j = 0; j < n; ++j) {
                    long a = rng.uniform(-4, 2);
                    long b = rng.uniform(a, 4);
                    lo[j] = Rational(a);
                    hi[j] = Rational(b);
                }
                Polytope cut = big.intersect_box(lo, hi);
                Rational cv4 = cut.volume() / 4;
                Int civ = cut.lattice_count();
                record(s, trial, "boxed: ivol(B&D) >= vol(B&D)/4", to_string(civ),
                       to_string(cv4), Rational(civ) >= cv4, inst + " boxed");
            }
        }
    }
    s.trials = spec.trials;
    return s;
}

SuiteSummary suite_rolle_order(const InstanceSpec& spec) {
    SuiteSummary s;
    s.suite = "rolle-order";
    s.seed = spec.seed;
    Rng rng(spec.seed);
    const int order = 24;
    for (int trial = 0; trial < spec.trials; ++trial) {
        int n = static_cast<int>(rng.uniform(1, std::min(spec.max_dim, 3)));
        auto names = generic_names(n);
        VectorField xi = random_field(rng, n, rng.uniform(0, spec.max_delta));
        QVec base(n);
        bool regular = false;
        for (int tries = 0; tries < 20 && !regular; ++tries) {
            for (int j = 0; j < n; ++j) base[j] = Rational(rng.uniform(-2, 2));
            regular = !xi.singular_at(base);
        }
        if (!regular) {
            record_degenerate(s, trial, "rolle-order", "singular field draw");
            continue;
        }
        TrajectoryGerm g = expand_regular(xi, base, order);
        LaurentPolynomial f(n);
        bool usable = false;
        for (int tries = 0; tries < 10 && !usable; ++tries) {
            f = random_polynomial(rng, n, 3, 3, 4, false);
            usable = !compose(f, g).is_zero();
        }
        std::string inst = "n=" + std::to_string(n) + " base=" + point_text(base) +
                           " f=" + f.to_expression(names);
        if (!usable) {
            record_degenerate(s, trial, "rolle-order", inst);
            continue;
        }
        RolleReport rep = rolle_order_check(xi, f, g);
        record(s, trial, "ord(xi f) >= ord(f) - 1",
               rep.ord_xf ? to_string(*rep.ord_xf) : ">" + std::to_string(rep.checked_order),
               to_string(rep.required), rep.pass, inst);
    }
    s.trials = spec.trials;
    return s;
}

SuiteSummary suite_ramanujan_rolle(const InstanceSpec& spec) {
    SuiteSummary s;
    s.suite = "ramanujan-rolle";
    s.seed = spec.seed;
    Rng rng(spec.seed);
    BuiltinExample ex = example_ramanujan();
    TrajectoryGerm g = example_germ(ex, 24);
    for (int trial = 0; trial < spec.trials; ++trial) {
        LaurentPolynomial f(4);
        bool usable = false;
        for (int tries = 0; tries < 10 && !usable; ++tries) {
            f = random_polynomial(rng, 4, 2, 3, 4, false);
            usable = !compose(f, g).is_zero();
        }
        std::string inst = "f=" + f.to_expression(ex.variables);
        if (!usable) {
            record_degenerate(s, trial, "ramanujan-rolle", inst);
            continue;
        }
        RolleReport rep = rolle_order_check(ex.field, f, g);
        // singular base point: no -1 allowance
        record(s, trial, "singular: ord(xi f) >= ord(f)",
               rep.ord_xf ? to_string(*rep.ord_xf) : ">" + std::to_string(rep.checked_order),
               to_string(rep.ord_f), rep.pass && rep.singular_base, inst);
    }
    s.trials = spec.trials;
    return s;
}

SuiteSummary suite_bound_soundness(const InstanceSpec& spec) {
    SuiteSummary s;
    s.suite = "bound-soundness";
    s.seed = spec.seed;
    Rng rng(spec.seed);
    MultiplicityOptions opts;
    opts.initial_order = 24;
    opts.cap = 96;
    for (int trial = 0; trial < spec.trials; ++trial) {
        int n = static_cast<int>(rng.uniform(1, std::min(spec.max_dim, 3)));
        auto names = generic_names(n);
        VectorField xi = random_field(rng, n, rng.uniform(1, spec.max_delta));
        QVec base(n);
        bool regular = false;
        for (int tries = 0; tries < 20 && !regular; ++tries) {
            for (int j = 0; j < n; ++j) base[j] = Rational(rng.uniform(-2, 2));
            regular = !xi.singular_at(base);
        }
        if (!regular) {
            record_degenerate(s, trial, "bound-soundness", "singular field draw");
            continue;
        }
        LaurentPolynomial p(n);
        bool usable = false;
        for (int tries = 0; tries < 10 && !usable; ++tries) {
            p = random_polynomial(rng, n, spec.max_degree, 3, 4, false);
            if (trial % 2 == 0) {
                Rational at = p.evaluate(base);
                p = p - LaurentPolynomial::constant(n, at);
            }
            usable = !p.is_zero() && !p.is_constant();
        }
        std::string inst = "n=" + std::to_string(n) + " base=" + point_text(base) +
                           " P=" + (usable ? p.to_expression(names) : "-");
        if (!usable) {
            record_degenerate(s, trial, "bound-soundness", inst);
            continue;
        }
        VectorField field = xi;
        QVec b = base;
        GermSource source([field, b](int order) { return expand_regular(field, b, order); }, n);
        MultiplicityResult mult = multiplicity(p, source, opts);
        if (!mult.exact()) {
            record_degenerate(s, trial, "bound-soundness", inst + " (order cap)");
            continue;
        }
        long delta = 0;
        bool zero_field_deg = true;
        for (const auto& c : xi.components())
            if (!c.is_zero()) zero_field_deg = false;
        if (!zero_field_deg) delta = xi.degree();
        Int cap = regular_point_bound(n, Int(delta), Int(p.total_degree()));
        record(s, trial, "Exact mult <= regular-point cap", to_string(mult.value),
               to_string(cap), mult.value <= cap, inst);
    }
    s.trials = spec.trials;
    return s;
}

SuiteSummary suite_mv_axioms(const InstanceSpec& spec) {
    SuiteSummary s;
    s.suite = "mv-axioms";
    s.seed = spec.seed;
    Rng rng(spec.seed);
    for (int trial = 0; trial < spec.trials; ++trial) {
        int n = static_cast<int>(rng.uniform(2, std::min(std::max(spec.max_dim, 2), 3)));
        auto draw = [&]() {
            int m = static_cast<int>(rng.uniform(n + 1, 6));
            std::vector<Exponents> pts;
            for (int i = 0; i < m; ++i) {
                Exponents e(n);
                for (int j = 0; j < n; ++j) e[j] = rng.uniform(-2, 2);
                pts.push_back(e);
            }
            return Polytope::hull_lattice(n, pts);
        };
        Polytope a = draw(), b = draw(), c = draw(), a2 = draw();
        std::string inst = "n=" + std::to_string(n) + " A=" + a.describe() + " B=" + b.describe();
        std::vector<Polytope> direct, rotated;
        for (int i = 0; i < n; ++i) direct.push_back(i == 0 ? a : (i == 1 ? b : c));
        for (int i = 0; i < n; ++i) rotated.push_back(i == 0 ? b : (i == 1 ? (n == 2 ? a : c) : a));
        Rational v1 = mixed_volume(direct), v2 = mixed_volume(rotated);
        record(s, trial, "symmetry", to_string(v1), to_string(v2), v1 == v2, inst);
        std::vector<Polytope> diag(n, a);
        Rational dv = mixed_volume(diag);
        record(s, trial, "diagonal = volume", to_string(dv), to_string(a.volume()),
               dv == a.volume(), inst);
        std::vector<Polytope> lhs = direct, ra = direct, rb = direct;
        lhs[0] = a.minkowski_sum(a2);
        rb[0] = a2;
        Rational add_l = mixed_volume(lhs);
        Rational add_r = mixed_volume(ra) + mixed_volume(rb);
        record(s, trial, "additivity in the first slot", to_string(add_l), to_string(add_r),
               add_l == add_r, inst);
        std::vector<Polytope> zz(n, Polytope::simplex(n, {0}));
        if (n >= 3) zz[n - 1] = c;
        Rational z = mixed_volume(zz);
        record(s, trial, "repeated segment slot vanishes", to_string(z), "0", z == 0, inst);
    }
    s.trials = spec.trials;
    return s;
}

SuiteSummary suite_delta_add(const InstanceSpec& spec) {
    SuiteSummary s;
    s.suite = "delta-add";
    s.seed = spec.seed;
    Rng rng(spec.seed);
    for (int trial = 0; trial < spec.trials; ++trial) {
        int n = static_cast<int>(rng.uniform(1, std::min(spec.max_dim, 3)));
        auto names = generic_names(n);
        LaurentPolynomial p = random_polynomial(rng, n, 2, 4, 5, true);
        LaurentPolynomial q = random_polynomial(rng, n, 2, 4, 5, true);
        Polytope sum = newton_polytope(p).minkowski_sum(newton_polytope(q));
        Polytope prod = newton_polytope(p * q);
        record(s, trial, "Newton(pq) = Newton(p) + Newton(q)", prod.describe(), sum.describe(),
               prod == sum,
               "p=" + p.to_expression(names) + " q=" + q.to_expression(names));
    }
    s.trials = spec.trials;
    return s;
}

}  // namespace

SuiteSummary bk_check(const InstanceSpec& spec) {
    SuiteSummary s;
    s.suite = "bk";
    s.seed = spec.seed;
    Rng rng(spec.seed);
    Int height = ipow(Int(2), static_cast<unsigned>(std::max(1L, spec.height_bits - 1)));
    auto names = std::vector<std::string>{"x", "y"};
    for (int trial = 0; trial < spec.trials; ++trial) {
        // fixed random supports inside 3 Pi_2
        auto draw_support = [&]() {
            std::set<Exponents> pts;
            int m = static_cast<int>(rng.uniform(2, 6));
            while (static_cast<int>(pts.size()) < m)
                pts.insert({rng.uniform(-3, 3), rng.uniform(-3, 3)});
            return std::vector<Exponents>(pts.begin(), pts.end());
        };
        std::vector<Exponents> a1 = draw_support(), a2 = draw_support();
        Polytope h1 = Polytope::hull_lattice(2, a1), h2 = Polytope::hull_lattice(2, a2);
        Rational v = mixed_volume({h1, h2});
        Rational expected = 2 * v;
        std::string inst = "A1=" + points_text(a1) + " A2=" + points_text(a2);

        long magnitude = height.fits_slong_p() ? to_long(height) : (1L << 30);
        bool settled = false;
        for (int attempt = 0; attempt < 10 && !settled; ++attempt) {
            auto coeffs = [&](const std::vector<Exponents>& sup) {
                LaurentPolynomial p(2);
                for (const auto& e : sup) {
                    long c = rng.uniform(1, magnitude);
                    p.add_term(e, Rational(rng.coin() ? c : -c));
                }
                return p;
            };
            LaurentPolynomial p1 = coeffs(a1), p2 = coeffs(a2);
            TorusRootCount count = count_torus_roots_2d(p1, p2);
            if (count.degenerate) {
                record_degenerate(s, trial, "bk (" + count.reason + ")", inst);
                continue;
            }
            record(s, trial, "count = 2 V(A1,A2)", to_string(count.count), to_string(expected),
                   Rational(count.count) == expected, inst);
            settled = true;
        }
        if (!settled)
            s.reports.push_back(
                TrialReport{trial, "bk", "", "", "persistent-degenerate", inst});
    }
    s.trials = spec.trials;
    return s;
}

SuiteSummary run_property_suite(const std::string& name, const InstanceSpec& spec) {
    if (name == "bk") return bk_check(spec);
    if (name == "vol-ivol") return suite_vol_ivol(spec);
    if (name == "rolle-order") return suite_rolle_order(spec);
    if (name == "ramanujan-rolle") return suite_ramanujan_rolle(spec);
    if (name == "bound-soundness") return suite_bound_soundness(spec);
    if (name == "mv-axioms") return suite_mv_axioms(spec);
    if (name == "delta-add") return suite_delta_add(spec);
    throw std::invalid_argument("unknown property suite: " + name);
}

std::vector<std::string> property_suite_names() {
    return {"bk",       "vol-ivol",        "rolle-order", "ramanujan-rolle",
            "bound-soundness", "mv-axioms", "delta-add"};
}

}  // namespace multbound
