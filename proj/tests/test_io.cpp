#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "multbound/json_io.hpp"
#include "multbound/parse.hpp"
#include "multbound/rng.hpp"

using namespace multbound;

TEST_CASE("polynomial json round trips bit-exactly") {
    Rng rng(2024);
    for (int trial = 0; trial < 25; ++trial) {
        int dim = static_cast<int>(rng.uniform(1, 4));
        LaurentPolynomial p(dim);
        for (int t = 0; t < 5; ++t) {
            Exponents e(dim);
            for (int i = 0; i < dim; ++i) e[i] = rng.uniform(-3, 3);
            p.add_term(e, make_rational(rng.uniform(-20, 20), rng.uniform(1, 7)));
        }
        Json j = poly_to_json(p);
        CHECK(poly_from_json(j) == p);
        CHECK(poly_to_json(poly_from_json(j)) == j);
    }
}

TEST_CASE("polytope json carries both descriptions") {
    Polytope p = Polytope::cube(2, 1).minkowski_sum(Polytope::simplex(2));
    Json j = polytope_to_json(p);
    CHECK(j.at("vertices").size() == 5);
    CHECK(j.at("facets").size() == 5);
    CHECK(j.at("integral").get<bool>());
    CHECK(polytope_from_json(j) == p);

    Polytope cut = Polytope::hull_lattice(2, {{0, 0}, {4, 0}, {0, 1}}).truncate_to_box(2);
    Json jc = polytope_to_json(cut);
    CHECK_FALSE(jc.at("integral").get<bool>());
    CHECK(polytope_from_json(jc) == cut);

    Polytope seg = Polytope::hull_lattice(3, {{0, 0, 1}, {2, 0, 0}});
    Json js = polytope_to_json(seg);
    CHECK(js.at("equations").size() == 2);
    CHECK(polytope_from_json(js) == seg);
}

TEST_CASE("germ json round trips") {
    BuiltinExample ram = example_ramanujan();
    TrajectoryGerm g = example_germ(ram, 10);
    Json j = germ_to_json(g);
    TrajectoryGerm back = germ_from_json(j);
    CHECK(back.dim == g.dim);
    CHECK(back.order == g.order);
    for (int i = 0; i < g.dim; ++i)
        for (int k = 0; k <= g.order; ++k) CHECK(back.components[i][k] == g.components[i][k]);
    CHECK(germ_to_json(back) == j);
    CHECK(back.provenance == Provenance::Fuchsian);

    Json bad = j;
    bad.erase("components");
    CHECK_THROWS_AS(germ_from_json(bad), std::invalid_argument);
}

TEST_CASE("problem files validate and round trip") {
    for (const auto& name : builtin_example_names()) {
        ProblemFile p = problem_from_example(builtin_example(name, 6));
        Json j = problem_to_json(p);
        ProblemFile back = problem_from_json(j);
        CHECK(problem_to_json(back) == j);
        CHECK(back.variables == p.variables);
        CHECK(back.germ_kind == p.germ_kind);
    }

    ProblemFile ram = problem_from_example(example_ramanujan());
    Json j = problem_to_json(ram);
    j["version"] = "multbound/2";
    CHECK_THROWS_AS(problem_from_json(j), std::invalid_argument);
    Json j2 = problem_to_json(ram);
    j2["field"]["components"] = std::vector<std::string>{"z"};
    CHECK_THROWS_AS(problem_from_json(j2), std::invalid_argument);
    Json j3 = problem_to_json(ram);
    j3["field"]["components"][1] = "1/12*W^2";  // unknown variable
    CHECK_THROWS_AS(problem_from_json(j3), std::invalid_argument);
}

TEST_CASE("problem germ sources reproduce the builtin germs") {
    ProblemFile ram = problem_from_example(example_ramanujan());
    GermSource source = problem_source(ram);
    TrajectoryGerm g = source.germ(8);
    TrajectoryGerm direct = example_germ(example_ramanujan(), 8);
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k <= 8; ++k) CHECK(g.components[i][k] == direct.components[i][k]);

    ProblemFile power = problem_from_example(example_power_a(9));
    GermSource ps = problem_source(power);
    TrajectoryGerm pg = ps.germ(16);
    CHECK(pg.components[1][9] == 1);
}

TEST_CASE("bound reports serialize with the full constant chain") {
    BoundReport r = pure_bound(2, 1, 3, 2);
    Json j = bound_report_to_json(r);
    CHECK(j.at("theorem") == "pure");
    CHECK(j.at("bound") == "75986085");
    bool has_a = false;
    for (const auto& c : j.at("constants"))
        if (c.at("name") == "a" && c.at("value") == "8712") has_a = true;
    CHECK(has_a);
}
