#include "multbound/bounds.hpp"

#include <stdexcept>

namespace multbound {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

Int int_pow(const Int& base, long e) {
    if (e < 0) throw std::invalid_argument("negative exponent");
    return ipow(base, static_cast<unsigned>(e));
}

// sup-norm radius of a polytope as a big integer
Int pi_degree_int(const Polytope& p) {
    Int best = 0;
    for (const auto& v : p.vertices())
        for (const auto& c : v) {
            Rational a = c < 0 ? Rational(-c) : Rational(c);
            Int d = rational_ceil(a);
            if (d > best) best = d;
        }
    return best;
}

std::string poly_brief(const Polytope& p) { return p.describe(); }

// standard simplices inside the (n+1)-dimensional mixed ambient; variable 0 is z
Polytope mixed_simplex_z(int ambient) { return Polytope::simplex(ambient, {0}); }

Polytope mixed_simplex_x(int ambient) {
    std::vector<int> vars;
    for (int i = 1; i < ambient; ++i) vars.push_back(i);
    return Polytope::simplex(ambient, vars);
}

Rational width_along_z(const Polytope& k) {
    Rational mn = k.vertices()[0][0], mx = mn;
    for (const auto& v : k.vertices()) {
        if (v[0] < mn) mn = v[0];
        if (v[0] > mx) mx = v[0];
    }
    return mx - mn;
}

Rational width_along_simplex(const Polytope& k) {
    const int n = k.dimension();
    Rational max_sum = 0;
    bool first = true;
    for (const auto& v : k.vertices()) {
        Rational s = 0;
        for (int i = 1; i < n; ++i) s += v[i];
        if (first || s > max_sum) max_sum = s;
        first = false;
    }
    Rational min_total = 0;
    for (int i = 1; i < n; ++i) {
        Rational mn = k.vertices()[0][i];
        for (const auto& v : k.vertices())
            if (v[i] < mn) mn = v[i];
        min_total += mn;
    }
    return max_sum - min_total;
}

}  // namespace

std::optional<std::string> BoundReport::lookup(const std::string& name) const {
    for (const auto& [k, v] : constants)
        if (k == name) return v;
    for (const auto& [k, v] : inputs)
        if (k == name) return v;
    return std::nullopt;
}

Int regular_point_bound(long n, const Int& delta, const Int& d) {
    require(n >= 1, "regular_point_bound: n >= 1");
    require(delta >= 0, "regular_point_bound: delta >= 0");
    require(d >= 1, "regular_point_bound: d >= 1");
    Int inner = d + Int(n - 1) * delta;
    return int_pow(Int(2), n + 1) * int_pow(inner, n);
}

ForestConstants forest_constants(long n, const Int& delta) {
    require(n >= 1, "forest_constants: n >= 1");
    require(delta >= 0, "forest_constants: delta >= 0");
    ForestConstants fc;
    fc.A = 2 * factorial(static_cast<unsigned>(n));
    if (delta == 0) {
        fc.a = 0;
        fc.a_tilde = 0;
        fc.note = "delta = 0: constant field, derivative chain trivial, a~ = 0";
        return fc;
    }
    Int arg = fc.A * int_pow(Int(2), n) * Int(n) * delta;
    fc.a = regular_point_bound(n, delta, arg);
    fc.a_tilde = delta * fc.a;
    return fc;
}

ToricForestConstants toric_forest_constants(long n, const Int& delta) {
    require(n >= 1, "toric_forest_constants: n >= 1");
    require(delta >= 1, "toric_forest_constants: delta >= 1");
    ToricForestConstants tc;
    tc.B = 16 * factorial(static_cast<unsigned>(n));
    Int arg = Int(2 * n) * tc.B * int_pow(Int(2), n) * Int(n) * delta;
    tc.b = regular_point_bound(n, delta, arg);
    return tc;
}

BoundReport pure_bound(long n, const Int& delta, const Int& d, const Int& chi) {
    require(n >= 1 && delta >= 1 && d >= 1 && chi >= 0, "pure_bound: invalid ranges");
    ForestConstants fc = forest_constants(n, delta);
    BoundReport r;
    r.theorem = "pure";
    r.input("n", to_string(Int(n)));
    r.input("delta", to_string(delta));
    r.input("d", to_string(d));
    r.input("chi", to_string(chi));
    r.constant("A_n", to_string(fc.A));
    r.constant("a", to_string(fc.a));
    r.constant("a_tilde", to_string(fc.a_tilde));
    Int base = d + fc.a_tilde;
    r.constant("d_plus_a_tilde", to_string(base));
    Int main = int_pow(base, n);
    Int side = (2 + chi) * int_pow(base, n - 1);
    r.constant("level_n_term", to_string(main));
    r.constant("leaf_term", to_string(side));
    r.bound = main + side;
    r.exact = Rational(r.bound);
    return r;
}

std::vector<Int> forest_degree_profile(long n, const Int& delta, const Int& d) {
    require(n >= 1 && delta >= 1 && d >= 1, "forest_degree_profile: invalid ranges");
    ForestConstants fc = forest_constants(n, delta);
    Int base = d + fc.a_tilde;
    std::vector<Int> caps;
    for (long k = 1; k <= n; ++k) caps.push_back(int_pow(base, k));
    return caps;
}

ScaledFieldPolytope delta_nxi(long n, const Int& delta, const Polytope& xi_polytope) {
    require(n >= 1 && delta >= 1, "delta_nxi: invalid ranges");
    require(xi_polytope.dimension() == n, "delta_nxi: polytope dimension mismatch");
    if (!xi_polytope.contains_origin())
        throw std::domain_error("delta_nxi: field polytope must contain the origin");
    ToricForestConstants tc = toric_forest_constants(n, delta);
    Int scale = tc.B * int_pow(Int(2), n) * Int(n) + tc.b;
    return ScaledFieldPolytope{xi_polytope.scaled(Rational(scale)), scale};
}

BoundReport toric_bound(long n, const Int& delta, const Polytope& delta_p,
                        const Polytope& xi_polytope, const Int& chi) {
    require(n >= 1 && delta >= 1 && chi >= 0, "toric_bound: invalid ranges");
    require(delta_p.dimension() == n && xi_polytope.dimension() == n,
            "toric_bound: polytope dimension mismatch");
    if (!delta_p.integral()) throw std::domain_error("toric_bound: Delta must be integral");
    ToricForestConstants tc = toric_forest_constants(n, delta);
    ScaledFieldPolytope scaled = delta_nxi(n, delta, xi_polytope);
    Polytope sum = delta_p.minkowski_sum(scaled.polytope);
    Rational vol = sum.volume();
    Int nf = factorial(static_cast<unsigned>(n));
    std::vector<Rational> quermass(n + 1);
    for (long k = 1; k <= n; ++k) quermass[k] = quermassintegral(sum, static_cast<int>(k));
    Rational w1 = quermass[1];
    Rational refined = Rational(nf) * vol + Rational(nf) * Rational(2 + chi) * w1;
    Rational coarse = Rational(nf) * Rational(3 + chi) * vol;

    BoundReport r;
    r.theorem = "toric";
    r.input("n", to_string(Int(n)));
    r.input("delta", to_string(delta));
    r.input("chi", to_string(chi));
    r.input("Delta", poly_brief(delta_p));
    r.input("Delta_xi", poly_brief(xi_polytope));
    r.constant("B_n", to_string(tc.B));
    r.constant("b", to_string(tc.b));
    r.constant("scale", to_string(scaled.scale));
    r.constant("vol", to_string(vol));
    for (long k = 1; k <= n; ++k)
        r.constant("W_" + std::to_string(k), to_string(quermass[k]));
    r.constant("refined", to_string(refined));
    r.constant("coarse", to_string(coarse));
    // per-level section values against the W_1 cap, reported rather than asserted
    bool sections_below = true;
    for (long k = 2; k <= n; ++k) sections_below = sections_below && quermass[k] <= w1;
    r.notes.push_back(std::string("level sections W_k for k >= 2 ") +
                      (sections_below ? "are" : "are NOT") + " all at most W_1 here");
    r.notes.push_back(std::string("refined = n! vol + n! (2+chi) W_1 ") +
                      (refined <= coarse ? "is" : "is NOT") +
                      " at most coarse = n! (3+chi) vol here; refined is the headline bound");
    r.exact = refined;
    r.bound = rational_ceil(refined);
    return r;
}

BoundReport mixed_single_bound(long n, const Int& delta, const Polytope& xi_polytope,
                               const Int& dz, const Int& dx, const Int& chi) {
    require(n >= 1 && delta >= 1 && dz >= 1 && dx >= 1 && chi >= 0,
            "mixed_single_bound: invalid ranges");
    const long ambient = n + 1;
    require(xi_polytope.dimension() == ambient,
            "mixed_single_bound: field polytope must live in the mixed ambient");
    ToricForestConstants tc = toric_forest_constants(ambient, delta);
    ScaledFieldPolytope scaled = delta_nxi(ambient, delta, xi_polytope);
    Int g = pi_degree_int(scaled.polytope);

    Polytope sz = mixed_simplex_z(static_cast<int>(ambient));
    Polytope sx = mixed_simplex_x(static_cast<int>(ambient));
    Polytope s = sx.scaled(Rational(dx)).minkowski_sum(sz.scaled(Rational(dz)));
    Rational vol_s = s.volume();

    Int nf = factorial(static_cast<unsigned>(ambient));
    Int capture = int_pow(Int(1) + 2 * g, ambient);
    Int alpha = nf * (3 + chi) * capture;
    Int shape = dz * int_pow(dx, n);

    BoundReport r;
    r.theorem = "mixed";
    r.input("n", to_string(Int(n)));
    r.input("delta", to_string(delta));
    r.input("d_z", to_string(dz));
    r.input("d_x", to_string(dx));
    r.input("chi", to_string(chi));
    r.input("Delta_xi", poly_brief(xi_polytope));
    r.constant("B", to_string(tc.B));
    r.constant("b", to_string(tc.b));
    r.constant("scale", to_string(scaled.scale));
    r.constant("deg_pi_Delta_nxi", to_string(g));
    r.constant("vol_dx_dz_simplices", to_string(vol_s));
    r.constant("capture_factor", to_string(capture));
    r.constant("alpha", to_string(alpha));
    r.constant("dz_dxn", to_string(shape));
    r.notes.push_back(
        "alpha = (n+1)! (3+chi) (1+2g)^{n+1} with g the sup-norm radius of Delta_{n,xi}: "
        "Delta(P)+Delta_{n,xi} fits in the box [0,d_z]x[0,d_x]^n inflated by g, whose "
        "volume and first quermassintegral are both at most (1+2g)^{n+1} d_z d_x^n");
    r.bound = alpha * shape;
    r.exact = Rational(r.bound);
    return r;
}

namespace {

// shared level-cap machinery for the multi-point bounds
struct LevelCaps {
    Int beta1;
    std::vector<Int> degree_caps;  // levels 1..top
    std::vector<Int> point_caps;   // levels 1..point_top
    Int degree_total;              // with leaf weighting applied
    Int point_total;
};

LevelCaps level_caps(const Polytope& k_body, long n, long m, const Polytope* tc_cap,
                     long tc_slots, const Int& dz, const Int& dx, const Int& chi) {
    const long ambient = n + 1;
    Polytope sz = mixed_simplex_z(static_cast<int>(ambient));
    Polytope sx = mixed_simplex_x(static_cast<int>(ambient));
    Polytope szx = sz.minkowski_sum(sx);
    Int nf = factorial(static_cast<unsigned>(ambient));

    LevelCaps out;
    Rational b1z = Rational(rational_ceil(width_along_z(k_body) / Rational(dz)));
    Rational b1x = Rational(rational_ceil(width_along_simplex(k_body) / Rational(dx)));
    Rational b1 = std::max(std::max(b1z, b1x), Rational(1));
    out.beta1 = b1.get_num();

    // degree caps: k slots of K, the tc cap slots, and mixed simplices elsewhere
    out.degree_total = 0;
    for (long lvl = 1; lvl <= m; ++lvl) {
        std::vector<Polytope> bodies;
        for (long i = 0; i < lvl; ++i) bodies.push_back(k_body);
        for (long i = 0; i < tc_slots; ++i) bodies.push_back(*tc_cap);
        while (static_cast<long>(bodies.size()) < ambient) bodies.push_back(szx);
        Rational v = Rational(nf) * mixed_volume(bodies);
        Int cap = rational_ceil(v);
        out.degree_caps.push_back(cap);
        out.degree_total += cap;
        if (lvl < m) out.degree_total += chi * cap;  // positive-dimensional leaf weighting
    }

    // point caps: one z-simplex slot pins the hyperplane, remaining slots x-simplices;
    // a second z slot would make the mixed volume vanish
    out.point_total = 0;
    for (long lvl = 1; lvl < m; ++lvl) {
        std::vector<Polytope> bodies;
        for (long i = 0; i < lvl; ++i) bodies.push_back(k_body);
        for (long i = 0; i < tc_slots; ++i) bodies.push_back(*tc_cap);
        bodies.push_back(sz);
        while (static_cast<long>(bodies.size()) < ambient) bodies.push_back(sx);
        Rational v = Rational(nf) * mixed_volume(bodies);

        // expansion identity: replacing the x slots by (z+x) simplices changes nothing
        std::vector<Polytope> expanded;
        for (long i = 0; i < lvl; ++i) expanded.push_back(k_body);
        for (long i = 0; i < tc_slots; ++i) expanded.push_back(*tc_cap);
        expanded.push_back(sz);
        while (static_cast<long>(expanded.size()) < ambient) expanded.push_back(szx);
        if (Rational(nf) * mixed_volume(expanded) != v)
            throw std::logic_error("mixed-volume degeneracy identity failed");

        Int cap = rational_ceil(v);
        out.point_caps.push_back(cap);
        out.point_total += (1 + chi) * cap;
    }
    return out;
}

}  // namespace

BoundReport mixed_multi_bound(long n, const Int& delta, const Polytope& xi_polytope,
                              const Int& dz, const Int& dx, const Int& q, const Int& chi) {
    require(n >= 1 && delta >= 1 && dz >= 1 && dx >= 1 && q >= 1 && chi >= 0,
            "mixed_multi_bound: invalid ranges");
    const long ambient = n + 1;
    require(xi_polytope.dimension() == ambient,
            "mixed_multi_bound: field polytope must live in the mixed ambient");
    ScaledFieldPolytope scaled = delta_nxi(ambient, delta, xi_polytope);
    Polytope sz = mixed_simplex_z(static_cast<int>(ambient));
    Polytope sx = mixed_simplex_x(static_cast<int>(ambient));
    Polytope s = sx.scaled(Rational(dx)).minkowski_sum(sz.scaled(Rational(dz)));
    Polytope k_body = s.minkowski_sum(scaled.polytope);

    LevelCaps caps = level_caps(k_body, n, ambient, nullptr, 0, dz, dx, chi);

    Int dxn = int_pow(dx, n);
    Int beta2 = ceil_div(caps.degree_total, dz * dxn);
    Int beta3 = caps.point_total == 0 ? Int(0) : ceil_div(caps.point_total, dxn);
    Int beta = std::max(beta2, beta3);

    BoundReport r;
    r.theorem = "mixed-multi";
    r.input("n", to_string(Int(n)));
    r.input("delta", to_string(delta));
    r.input("d_z", to_string(dz));
    r.input("d_x", to_string(dx));
    r.input("q", to_string(q));
    r.input("chi", to_string(chi));
    r.input("Delta_xi", poly_brief(xi_polytope));
    r.constant("scale", to_string(scaled.scale));
    r.constant("beta_1", to_string(caps.beta1));
    for (size_t i = 0; i < caps.degree_caps.size(); ++i)
        r.constant("deg_cap_level_" + std::to_string(i + 1), to_string(caps.degree_caps[i]));
    for (size_t i = 0; i < caps.point_caps.size(); ++i)
        r.constant("pt_cap_level_" + std::to_string(i + 1), to_string(caps.point_caps[i]));
    r.constant("degree_total", to_string(caps.degree_total));
    r.constant("point_total", to_string(caps.point_total));
    r.constant("beta_2", to_string(beta2));
    r.constant("beta_3", to_string(beta3));
    r.constant("beta", to_string(beta));
    r.notes.push_back(
        "level caps are exact mixed volumes of K = d_x Dx + d_z Dz + Delta_{n,xi}; "
        "point caps pin one z-simplex slot (a second z slot gives mixed volume zero); "
        "positive-dimensional levels carry the extra chi leaf weighting");
    r.bound = beta * (dz + q) * dxn;
    r.exact = Rational(r.bound);
    return r;
}

BoundReport case_ab_bound(long n, long m, AmbientCase tag, const Int& d_gen,
                          const Int& delta, const Polytope& xi_polytope, const Int& dz,
                          const Int& dx, const Int& q, const Int& chi) {
    require(n >= 1 && m >= 1 && m <= n, "case_ab_bound: 1 <= m <= n");
    require(d_gen >= 1 && delta >= 1 && dz >= 1 && dx >= 1 && q >= 1 && chi >= 0,
            "case_ab_bound: invalid ranges");
    const long ambient = n + 1;
    require(xi_polytope.dimension() == ambient,
            "case_ab_bound: field polytope must live in the mixed ambient");
    ScaledFieldPolytope scaled = delta_nxi(ambient, delta, xi_polytope);
    Polytope sz = mixed_simplex_z(static_cast<int>(ambient));
    Polytope sx = mixed_simplex_x(static_cast<int>(ambient));
    Polytope s = sx.scaled(Rational(dx)).minkowski_sum(sz.scaled(Rational(dz)));
    Polytope k_body = s.minkowski_sum(scaled.polytope);

    Polytope tc_cap = tag == AmbientCase::A
                          ? sx.scaled(Rational(d_gen))
                          : sx.minkowski_sum(sz).scaled(Rational(d_gen));
    LevelCaps caps = level_caps(k_body, n, m, &tc_cap, n - m, dz, dx, chi);

    // operating degree for the truncation clamps
    Int d_op = std::max(dz, dx);
    Int dzp = std::min(dz, d_op), dxp = std::min(dx, d_op);
    Rational mf = Rational(factorial(static_cast<unsigned>(m)));
    Int hf_a = dzp * int_pow(dxp, m - 1);
    Int hf_b = int_pow(dxp, m);
    Rational hf_lower = tag == AmbientCase::A ? Rational(hf_a) / mf
                                              : Rational(std::max(hf_a, hf_b)) / mf;

    Int dxm = int_pow(dx, m - 1);
    Int beta2 = ceil_div(caps.degree_total, dz * dxm);
    Int beta3 = caps.point_total == 0 ? Int(0) : ceil_div(caps.point_total, dxm);
    Int beta = std::max(beta2, beta3);
    Int shape = tag == AmbientCase::A ? Int((dz + q) * dxm) : Int((dz + dx + q) * dxm);

    BoundReport r;
    r.theorem = tag == AmbientCase::A ? "caseA" : "caseB";
    r.input("n", to_string(Int(n)));
    r.input("m", to_string(Int(m)));
    r.input("D", to_string(d_gen));
    r.input("delta", to_string(delta));
    r.input("d_z", to_string(dz));
    r.input("d_x", to_string(dx));
    r.input("q", to_string(q));
    r.input("chi", to_string(chi));
    r.input("Delta_xi", poly_brief(xi_polytope));
    r.constant("scale", to_string(scaled.scale));
    r.constant("beta_1", to_string(caps.beta1));
    r.constant("d_z_prime", to_string(dzp));
    r.constant("d_x_prime", to_string(dxp));
    r.constant("hf_lower", to_string(hf_lower));
    for (size_t i = 0; i < caps.degree_caps.size(); ++i)
        r.constant("deg_cap_level_" + std::to_string(i + 1), to_string(caps.degree_caps[i]));
    for (size_t i = 0; i < caps.point_caps.size(); ++i)
        r.constant("pt_cap_level_" + std::to_string(i + 1), to_string(caps.point_caps[i]));
    r.constant("degree_total", to_string(caps.degree_total));
    r.constant("point_total", to_string(caps.point_total));
    r.constant("beta_2", to_string(beta2));
    r.constant("beta_3", to_string(beta3));
    r.constant("beta", to_string(beta));
    if (m == n)
        r.notes.push_back("m = n: the generator cap occupies no slots and the level caps "
                          "degenerate to the mixed-multi profile");
    r.notes.push_back(std::string("ambient-closure cap uses (L_{D Dx})^{n-m}") +
                      (tag == AmbientCase::B ? " replaced by (L_{D(Dx+Dz)})^{n-m}" : "") +
                      "; hf_lower is the ambient Hilbert-function floor at the operating degree");
    r.bound = beta * shape;
    r.exact = Rational(r.bound);
    return r;
}

Int hf_upper_pure(const Int& deg_v, const Int& t, long k) {
    require(deg_v >= 0 && t >= 0 && k >= 0, "hf_upper_pure: nonnegative arguments");
    return deg_v * int_pow(t, k) + Int(k);
}

Int hf_ambient_pure(long n, const Int& t) {
    require(n >= 1 && t >= 0, "hf_ambient_pure: invalid ranges");
    return binomial(t + Int(n), static_cast<unsigned>(n));
}

ThresholdReport hf_finder_threshold(long n, const Int& d, const Int& deg_v, long k) {
    require(n >= 1 && k >= 0 && k <= n && deg_v >= 0, "hf_finder_threshold: invalid ranges");
    if (d <= 2 * n) throw std::invalid_argument("hf_finder_threshold requires d > 2n");
    Int a = 2 * factorial(static_cast<unsigned>(n));
    ThresholdReport r;
    r.holds = a * deg_v <= int_pow(d, n - k);
    r.note = "threshold deg V <= A_n^{-1} d^{n-k}; the derived-variety claim uses the "
             "exponent n-l for a chain variety of dimension l, same statement shape";
    return r;
}

}  // namespace multbound
