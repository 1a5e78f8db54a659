#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "multbound/bounds.hpp"
#include "multbound/examples.hpp"
#include "multbound/parse.hpp"

using namespace multbound;

TEST_CASE("regular point cap formula") {
    CHECK(regular_point_bound(2, 1, 3) == 128);
    CHECK(regular_point_bound(1, 0, 5) == 20);
    CHECK(regular_point_bound(2, 1, 1) == 32);
    CHECK_THROWS_AS(regular_point_bound(0, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(regular_point_bound(2, 1, 0), std::invalid_argument);
}

TEST_CASE("forest constants") {
    ForestConstants f21 = forest_constants(2, 1);
    CHECK(f21.A == 4);
    CHECK(f21.a == 8712);
    CHECK(f21.a_tilde == 8712);
    ForestConstants f11 = forest_constants(1, 1);
    CHECK(f11.A == 2);
    CHECK(f11.a == 16);
    // delta = 1 always leaves a~ = a
    for (long n = 1; n <= 4; ++n) CHECK(forest_constants(n, 1).a == forest_constants(n, 1).a_tilde);
    ForestConstants f0 = forest_constants(2, 0);
    CHECK(f0.a_tilde == 0);
    CHECK(f0.note.has_value());
}

TEST_CASE("toric forest constants") {
    CHECK(toric_forest_constants(2, 1).B == 32);
    ToricForestConstants t11 = toric_forest_constants(1, 1);
    CHECK(t11.B == 16);
    CHECK(t11.b == 256);  // cap at argument 64 delta
    for (long n = 1; n <= 4; ++n)
        CHECK(toric_forest_constants(n, 1).B == 8 * forest_constants(n, 1).A);
    CHECK_THROWS_AS(toric_forest_constants(2, 0), std::invalid_argument);
}

TEST_CASE("pure bound values and structure") {
    CHECK(pure_bound(1, 1, 2, 0).bound == 20);
    CHECK(pure_bound(2, 1, 3, 2).bound == 75986085);
    // chi enters only through the leaf term
    for (long chi = 0; chi < 4; ++chi) {
        Int lo = pure_bound(2, 1, 3, chi).bound;
        Int hi = pure_bound(2, 1, 3, chi + 1).bound;
        Int base = Int(3) + forest_constants(2, 1).a_tilde;
        CHECK(hi - lo == base);
    }
}

TEST_CASE("forest degree profile") {
    auto prof1 = forest_degree_profile(1, 1, 2);
    CHECK(prof1 == std::vector<Int>{18});
    auto prof2 = forest_degree_profile(2, 1, 1);
    CHECK(prof2.size() == 2);
    CHECK(prof2[0] == 8713);
    CHECK(prof2[1] == Int(8713) * 8713);
    // level sum with the leaf weighting reproduces the pure bound
    for (long n = 1; n <= 3; ++n)
        for (long d = 1; d <= 3; ++d)
            for (long chi = 0; chi <= 2; ++chi) {
                auto prof = forest_degree_profile(n, 1, d);
                Int leaf = n >= 2 ? prof[n - 2] : Int(1);
                CHECK(prof[n - 1] + (2 + chi) * leaf == pure_bound(n, 1, d, chi).bound);
            }
}

TEST_CASE("scaled field polytope") {
    ScaledFieldPolytope s = delta_nxi(2, 1, Polytope::origin(2));
    CHECK(s.polytope == Polytope::origin(2));
    CHECK(s.scale == 8405256);  // 32*4*2 + 8405000
    ScaledFieldPolytope sx = delta_nxi(2, 1, Polytope::simplex(2));
    CHECK(sx.scale == 8405256);
    CHECK(sx.polytope == Polytope::simplex(2).scaled(Rational(Int(8405256))));
    // monotone in delta
    CHECK(delta_nxi(2, 2, Polytope::origin(2)).scale > s.scale);
    // origin containment is required
    Polytope off = Polytope::hull_lattice(2, {{1, 0}, {2, 0}, {1, 1}});
    CHECK_THROWS_AS(delta_nxi(2, 1, off), std::domain_error);
}

TEST_CASE("toric bound") {
    Polytope two_sx = Polytope::simplex(2).scaled(Rational(2));
    BoundReport r = toric_bound(2, 1, two_sx, Polytope::origin(2), 0);
    CHECK(r.bound == 8);
    CHECK(r.lookup("vol") == std::optional<std::string>("2"));
    CHECK(r.lookup("W_1") == std::optional<std::string>("1"));
    CHECK(r.lookup("coarse").has_value());

    Polytope cut = Polytope::hull_lattice(2, {{0, 0}, {4, 0}, {0, 1}}).truncate_to_box(2);
    CHECK_THROWS_AS(toric_bound(2, 1, cut, Polytope::origin(2), 0), std::domain_error);
}

TEST_CASE("mixed single bound structure") {
    BoundReport r = mixed_single_bound(1, 1, Polytope::origin(2), 2, 3, 0);
    CHECK(r.bound == 36);
    // two orthogonal segments sum to the d_z x d_x rectangle
    CHECK(r.lookup("vol_dx_dz_simplices") == std::optional<std::string>("6"));
    CHECK(r.lookup("deg_pi_Delta_nxi") == std::optional<std::string>("0"));
    // chi scales alpha linearly through (3 + chi)
    Int b0 = mixed_single_bound(1, 1, Polytope::origin(2), 2, 3, 0).bound;
    Int b1 = mixed_single_bound(1, 1, Polytope::origin(2), 2, 3, 1).bound;
    Int b2 = mixed_single_bound(1, 1, Polytope::origin(2), 2, 3, 2).bound;
    CHECK(b1 - b0 == b2 - b1);
    CHECK(3 * (b1 - b0) == b0);
    // doubling d_x scales the shape factor by 2^n
    Int dx1 = mixed_single_bound(2, 1, Polytope::simplex(3), 1, 1, 0).bound;
    Int dx2 = mixed_single_bound(2, 1, Polytope::simplex(3), 1, 2, 0).bound;
    CHECK(dx2 == 4 * dx1);
}

TEST_CASE("mixed multi bound structure") {
    BoundReport r = mixed_multi_bound(1, 1, Polytope::origin(2), 1, 1, 3, 2);
    CHECK(r.bound == 32);
    CHECK(r.lookup("beta_1").has_value());
    CHECK(r.lookup("beta_2").has_value());
    CHECK(r.lookup("beta_3").has_value());
    // q = 1 stays within reach of the single-point variant
    BoundReport q1 = mixed_multi_bound(1, 1, Polytope::origin(2), 1, 1, 1, 2);
    BoundReport single = mixed_single_bound(1, 1, Polytope::origin(2), 1, 1, 2);
    CHECK(q1.bound > 0);
    CHECK(single.bound > 0);
}

TEST_CASE("ambient-closure case bounds") {
    Polytope o3 = Polytope::origin(3);
    BoundReport a = case_ab_bound(2, 1, AmbientCase::A, 2, 1, o3, 1, 1, 2, 1);
    BoundReport b = case_ab_bound(2, 1, AmbientCase::B, 2, 1, o3, 1, 1, 2, 1);
    CHECK(a.bound == 12);
    CHECK(b.bound == 24);
    CHECK(b.bound > a.bound);
    // m = n degenerates to the mixed-multi level caps
    BoundReport top = case_ab_bound(2, 2, AmbientCase::A, 1, 1, o3, 1, 1, 1, 0);
    bool noted = false;
    for (const auto& n : top.notes)
        if (n.find("mixed-multi") != std::string::npos) noted = true;
    CHECK(noted);
}

TEST_CASE("hilbert function helpers") {
    CHECK(hf_ambient_pure(2, 2) == 6);
    CHECK(hf_upper_pure(1, 7, 1) == 8);
    CHECK(hf_upper_pure(3, 2, 2) == 14);
    CHECK(hf_finder_threshold(2, 5, 1, 1).holds);
    CHECK_FALSE(hf_finder_threshold(2, 5, 100000, 1).holds);
    // boundary equality counts as holding
    CHECK(hf_finder_threshold(2, 8, 2, 1).holds);
    CHECK_THROWS_AS(hf_finder_threshold(2, 4, 1, 1), std::invalid_argument);
}

TEST_CASE("regression pins for the constant chains") {
    struct FcPin {
        long n, delta;
        const char* a;
        const char* a_tilde;
        const char* b;
    };
    const FcPin pins[] = {
        {1, 1, "16", "16", "256"},
        {1, 2, "32", "64", "512"},
        {2, 1, "8712", "8712", "8405000"},
        {2, 2, "34848", "69696", "33620000"},
        {3, 1, "390224000", "390224000", "42287269183616"},
        {3, 2, "3121792000", "6243584000", "338298153468928"},
    };
    for (const auto& pin : pins) {
        ForestConstants f = forest_constants(pin.n, pin.delta);
        ToricForestConstants t = toric_forest_constants(pin.n, pin.delta);
        CHECK(f.a == Int(pin.a));
        CHECK(f.a_tilde == Int(pin.a_tilde));
        CHECK(t.b == Int(pin.b));
    }
    CHECK(delta_nxi(1, 1, Polytope::origin(1)).scale == 288);
    CHECK(delta_nxi(1, 2, Polytope::origin(1)).scale == 544);
    CHECK(delta_nxi(2, 2, Polytope::origin(2)).scale == 33620256);
    CHECK(pure_bound(2, 2, 4, 1).bound == Int("4858299100"));
    CHECK(pure_bound(3, 1, 2, 2).bound == Int("59421271439907136686272024"));
    CHECK(toric_bound(2, 1, Polytope::cube(2, 1), Polytope::simplex(2), 1).bound ==
          Int("70648420883372"));
    CHECK(mixed_single_bound(2, 1, Polytope::simplex(3), 1, 2, 2).bound ==
          Int("72593904201702746410750964177497029069158520"));
    CHECK(mixed_multi_bound(2, 1, Polytope::simplex(3), 2, 1, 2, 0).bound ==
          Int("151237300420248031071966690895610236464672"));
    CHECK(case_ab_bound(3, 2, AmbientCase::A, 2, 1, Polytope::simplex(4), 2, 2, 1, 0).bound ==
          Int("13718723525843432469153051969553138653378232278"));
    CHECK(case_ab_bound(3, 2, AmbientCase::B, 2, 1, Polytope::simplex(4), 2, 2, 1, 0).bound ==
          Int("34296808814608581172882032212894866512136057080"));
}

TEST_CASE("bounds are monotone in every parameter") {
    // pure: d, delta, chi
    for (long n = 1; n <= 2; ++n)
        for (long delta = 1; delta <= 2; ++delta)
            for (long d = 1; d <= 3; ++d)
                for (long chi = 0; chi <= 2; ++chi) {
                    Int here = pure_bound(n, delta, d, chi).bound;
                    CHECK(pure_bound(n, delta, d + 1, chi).bound >= here);
                    CHECK(pure_bound(n, delta + 1, d, chi).bound >= here);
                    CHECK(pure_bound(n, delta, d, chi + 1).bound >= here);
                }
    // mixed family: dz, dx, q, chi, delta
    Polytope o2 = Polytope::origin(2);
    for (long dz = 1; dz <= 2; ++dz)
        for (long dx = 1; dx <= 2; ++dx)
            for (long chi = 0; chi <= 1; ++chi) {
                Int here = mixed_single_bound(1, 1, o2, dz, dx, chi).bound;
                CHECK(mixed_single_bound(1, 1, o2, dz + 1, dx, chi).bound >= here);
                CHECK(mixed_single_bound(1, 1, o2, dz, dx + 1, chi).bound >= here);
                CHECK(mixed_single_bound(1, 2, o2, dz, dx, chi).bound >= here);
                CHECK(mixed_single_bound(1, 1, o2, dz, dx, chi + 1).bound >= here);
                for (long q = 1; q <= 2; ++q) {
                    Int multi = mixed_multi_bound(1, 1, o2, dz, dx, q, chi).bound;
                    CHECK(mixed_multi_bound(1, 1, o2, dz + 1, dx, q, chi).bound >= multi);
                    CHECK(mixed_multi_bound(1, 1, o2, dz, dx + 1, q, chi).bound >= multi);
                    CHECK(mixed_multi_bound(1, 1, o2, dz, dx, q + 1, chi).bound >= multi);
                    CHECK(mixed_multi_bound(1, 1, o2, dz, dx, q, chi + 1).bound >= multi);
                }
            }
    // case bounds: D, q, dz, dx
    Polytope o3 = Polytope::origin(3);
    for (long q = 1; q <= 2; ++q)
        for (long D = 1; D <= 2; ++D) {
            Int a = case_ab_bound(2, 1, AmbientCase::A, D, 1, o3, 1, 1, q, 1).bound;
            CHECK(case_ab_bound(2, 1, AmbientCase::A, D + 1, 1, o3, 1, 1, q, 1).bound >= a);
            CHECK(case_ab_bound(2, 1, AmbientCase::A, D, 1, o3, 2, 1, q, 1).bound >= a);
            CHECK(case_ab_bound(2, 1, AmbientCase::A, D, 1, o3, 1, 2, q, 1).bound >= a);
            CHECK(case_ab_bound(2, 1, AmbientCase::A, D, 1, o3, 1, 1, q + 1, 1).bound >= a);
        }
}

TEST_CASE("pure and toric bounds stay comparable on matching data") {
    // same data fed through both routes: ratio finite and positive
    Polytope d2 = Polytope::simplex(2).scaled(Rational(3));
    BoundReport toric = toric_bound(2, 1, d2, Polytope::origin(2), 2);
    BoundReport pure = pure_bound(2, 1, 3, 2);
    CHECK(toric.bound > 0);
    CHECK(pure.bound > 0);
    Rational ratio = Rational(pure.bound) / Rational(toric.bound);
    CHECK(ratio > 0);
}

TEST_CASE("ramanujan bound chain is finite and dominates the observed orders") {
    BuiltinExample ex = example_ramanujan();
    FieldPolytope fp = field_polytope(ex.field);
    Int delta(ex.field.degree());
    BoundReport toric = toric_bound(4, delta, newton_polytope(parse_polynomial(
                                                  "X^2 - Y", ex.variables)),
                                    fp.polytope, *ex.chi);
    CHECK(toric.bound > 0);
    BoundReport mixed = mixed_single_bound(3, delta, fp.polytope, 1, 2, *ex.chi);
    CHECK(mixed.bound > 0);
    CHECK(toric.exact >= 1);
    CHECK(mixed.exact >= 1);
}
