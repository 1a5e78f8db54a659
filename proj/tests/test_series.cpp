#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "multbound/examples.hpp"
#include "multbound/parse.hpp"
#include "multbound/rng.hpp"
#include "multbound/series.hpp"

using namespace multbound;

namespace {

const std::vector<std::string> kXY = {"x", "y"};

long sigma(int j, int k) {
    long s = 0;
    for (int d = 1; d <= k; ++d) {
        if (k % d != 0) continue;
        long p = 1;
        for (int i = 0; i < j; ++i) p *= d;
        s += p;
    }
    return s;
}

}  // namespace

TEST_CASE("series arithmetic carries the minimum order") {
    TruncatedSeries a = TruncatedSeries::identity(8);
    TruncatedSeries b = TruncatedSeries::constant(Rational(3), 5);
    CHECK((a + b).order() == 5);
    CHECK((a * b).order() == 5);
    CHECK((a * b)[1] == 3);

    TruncatedSeries one_minus_t(6);
    one_minus_t.set(0, 1);
    one_minus_t.set(1, -1);
    TruncatedSeries geo = one_minus_t.inverse();
    for (int k = 0; k <= 6; ++k) CHECK(geo[k] == 1);
    CHECK_THROWS_AS(TruncatedSeries::identity(4).inverse(), std::domain_error);

    CHECK(TruncatedSeries::identity(4).pow(3).first_nonzero() == std::optional<int>(3));
}

TEST_CASE("regular expansion solves the flow") {
    VectorField shift({parse_polynomial("1", kXY), parse_polynomial("2*x", kXY)});
    TrajectoryGerm g = expand_regular(shift, {Rational(0), Rational(0)}, 10);
    CHECK(g.components[0][1] == 1);
    CHECK(g.components[1][2] == 1);
    CHECK(g.components[1][1] == 0);
    CHECK(residual_check(shift, g).clean);

    VectorField diag({parse_polynomial("x", kXY), parse_polynomial("2*y", kXY)});
    TrajectoryGerm e = expand_regular(diag, {Rational(1), Rational(1)}, 6);
    // coefficients of exp(t) and exp(2t)
    Rational fact = 1;
    for (int k = 0; k <= 6; ++k) {
        if (k > 0) fact *= k;
        CHECK(e.components[0][k] == 1 / fact);
        CHECK(e.components[1][k] == rpow(Rational(2), k) / fact);
    }

    VectorField line({parse_polynomial("1", {"x"})});
    TrajectoryGerm l = expand_regular(line, {Rational(0)}, 4);
    CHECK(l.components[0][1] == 1);
    CHECK(l.components[0][2] == 0);

    CHECK_THROWS_AS(expand_regular(diag, {Rational(0), Rational(0)}, 4), std::domain_error);
}

TEST_CASE("circle flow reproduces the trigonometric coefficients") {
    VectorField circle({parse_polynomial("0 - y", kXY), parse_polynomial("x", kXY)});
    TrajectoryGerm g = expand_regular(circle, {Rational(1), Rational(0)}, 10);
    Rational fact = 1;
    int sign = 1;
    for (int k = 0; k <= 10; ++k) {
        if (k > 0) fact *= k;
        if (k % 2 == 0) {
            CHECK(g.components[0][k] == Rational(sign) / fact);  // cos
            CHECK(g.components[1][k] == 0);
        } else {
            CHECK(g.components[1][k] == Rational(sign) / fact);  // sin
            CHECK(g.components[0][k] == 0);
            sign = -sign;
        }
    }
    CHECK(residual_check(circle, g).clean);
    // the invariant circle equation vanishes along the flow
    TruncatedSeries r2 = compose(parse_polynomial("x^2 + y^2 - 1", kXY), g);
    CHECK(r2.is_zero());
}

TEST_CASE("rational systems expand as graph germs") {
    std::vector<std::string> zx = {"z", "x"};
    RationalSystem exp_sys{{parse_polynomial("x", zx)}, {parse_polynomial("1", zx)}};
    TrajectoryGerm g = expand_rational(exp_sys, Rational(0), {Rational(1)}, 6);
    Rational fact = 1;
    for (int k = 0; k <= 6; ++k) {
        if (k > 0) fact *= k;
        CHECK(g.components[1][k] == 1 / fact);
    }
    CHECK(g.components[0][1] == 1);

    RationalSystem log_sys{{parse_polynomial("1", zx)}, {parse_polynomial("1 - z", zx)}};
    TrajectoryGerm h = expand_rational(log_sys, Rational(0), {Rational(0)}, 8);
    for (int k = 1; k <= 8; ++k) CHECK(h.components[1][k] == make_rational(1, k));

    RationalSystem flat{{LaurentPolynomial::zero(2)}, {parse_polynomial("1", zx)}};
    TrajectoryGerm c = expand_rational(flat, Rational(2), {Rational(5)}, 4);
    CHECK(c.components[1][0] == 5);
    for (int k = 1; k <= 4; ++k) CHECK(c.components[1][k] == 0);

    RationalSystem bad{{parse_polynomial("1", zx)}, {parse_polynomial("z", zx)}};
    CHECK_THROWS_AS(expand_rational(bad, Rational(0), {Rational(0)}, 4), std::domain_error);
}

TEST_CASE("fuchsian recursion reproduces the modular coefficients") {
    BuiltinExample ex = example_ramanujan();
    TrajectoryGerm g = example_germ(ex, 16);
    for (int k = 1; k <= 16; ++k) {
        CHECK(g.components[1][k] == Rational(-24 * sigma(1, k)));
        CHECK(g.components[2][k] == Rational(240 * sigma(3, k)));
        CHECK(g.components[3][k] == Rational(-504 * sigma(5, k)));
    }
    CHECK(residual_check(ex.field, g).clean);
    // the time-equation spot value: z dP/dz has leading term -24 z and
    // (P^2 - Q)/12 has leading term -288 z / 12
    TruncatedSeries rhs = compose(parse_polynomial("1/12*X^2 - 1/12*Y", ex.variables), g);
    CHECK(rhs[1] == -24);
}

TEST_CASE("fuchsian edge cases") {
    std::vector<std::string> zx = {"z", "x"};
    // z x' = x - x: constant germ
    VectorField zero_rhs({parse_polynomial("z", zx), LaurentPolynomial::zero(2)}, 0);
    TrajectoryGerm c = expand_fuchsian(zero_rhs, {Rational(9)}, 5);
    CHECK(c.components[1][0] == 9);
    for (int k = 1; k <= 5; ++k) CHECK(c.components[1][k] == 0);

    // z x' = 2x resonates at k = 2
    VectorField res({parse_polynomial("z", zx), parse_polynomial("2*x", zx)}, 0);
    try {
        expand_fuchsian(res, {Rational(0)}, 5);
        FAIL("expected a resonance error");
    } catch (const ResonanceError& e) {
        CHECK(e.k == 2);
    }
    // the same system accepts a supplied coefficient at the resonant order
    ResonanceData fix;
    fix[2] = {Rational(3)};
    TrajectoryGerm fixed = expand_fuchsian(res, {Rational(0)}, 5, fix);
    CHECK(fixed.components[1][2] == 3);
    CHECK(residual_check(res, fixed).clean);

    // inconsistent base point
    VectorField bad({parse_polynomial("z", zx), parse_polynomial("1 + x", zx)}, 0);
    CHECK_THROWS_AS(expand_fuchsian(bad, {Rational(0)}, 4), std::domain_error);
}

TEST_CASE("composition") {
    VectorField shift({parse_polynomial("1", kXY), parse_polynomial("2*x", kXY)});
    TrajectoryGerm g = expand_regular(shift, {Rational(0), Rational(0)}, 8);
    CHECK(compose(parse_polynomial("y", kXY), g).first_nonzero() == std::optional<int>(2));
    TruncatedSeries one = compose(parse_polynomial("1", kXY), g);
    CHECK(one[0] == 1);
    CHECK(one.first_nonzero() == std::optional<int>(0));

    BuiltinExample ram = example_ramanujan();
    TrajectoryGerm rg = example_germ(ram, 8);
    TruncatedSeries s = compose(parse_polynomial("X^2 - Y", ram.variables), rg);
    CHECK(s.first_nonzero() == std::optional<int>(1));
    CHECK(s[1] == -288);

    // negative exponents need invertible components
    TrajectoryGerm e = expand_regular(
        VectorField({parse_polynomial("x", kXY), parse_polynomial("2*y", kXY)}),
        {Rational(1), Rational(1)}, 6);
    TruncatedSeries inv = compose(parse_polynomial("x^-1", kXY), e);
    CHECK(inv[0] == 1);
    CHECK(inv[1] == -1);
    CHECK_THROWS_AS(compose(parse_polynomial("y^-1", kXY), g), std::domain_error);
}

TEST_CASE("composition is a ring homomorphism up to truncation") {
    Rng rng(5);
    VectorField shift({parse_polynomial("1", kXY), parse_polynomial("2*x", kXY)});
    TrajectoryGerm g = expand_regular(shift, {Rational(1), Rational(2)}, 12);
    for (int trial = 0; trial < 20; ++trial) {
        LaurentPolynomial p(2), q(2);
        for (int t = 0; t < 3; ++t) {
            p.add_term({rng.uniform(-2, 2), rng.uniform(-2, 2)}, Rational(rng.uniform(-4, 4)));
            q.add_term({rng.uniform(-2, 2), rng.uniform(-2, 2)}, Rational(rng.uniform(-4, 4)));
        }
        TruncatedSeries lhs = compose(p * q, g);
        TruncatedSeries rhs = compose(p, g) * compose(q, g);
        for (int k = 0; k <= 12; ++k) CHECK(lhs[k] == rhs[k]);
    }
}

TEST_CASE("expansion is deterministic and extends") {
    BuiltinExample ram = example_ramanujan();
    TrajectoryGerm small = example_germ(ram, 6);
    TrajectoryGerm large = example_germ(ram, 14);
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k <= 6; ++k) CHECK(small.components[i][k] == large.components[i][k]);
}

TEST_CASE("residual check flags broken germs") {
    VectorField shift({parse_polynomial("1", kXY), parse_polynomial("2*x", kXY)});
    std::vector<TruncatedSeries> comps = {TruncatedSeries::identity(6), TruncatedSeries(6)};
    comps[1].set(3, 1);  // (t, t^3) is not a trajectory of the parabola field
    TrajectoryGerm broken = TrajectoryGerm::from_components(comps, Provenance::UserSupplied);
    ResidualReport rep = residual_check(shift, broken);
    CHECK_FALSE(rep.clean);
    CHECK(rep.first_failure == std::optional<int>(2));

    VectorField zero({LaurentPolynomial::zero(2), LaurentPolynomial::zero(2)});
    std::vector<TruncatedSeries> cc = {TruncatedSeries::constant(Rational(4), 6),
                                       TruncatedSeries::constant(Rational(5), 6)};
    CHECK(residual_check(zero, TrajectoryGerm::from_components(cc, Provenance::UserSupplied))
              .clean);
}
