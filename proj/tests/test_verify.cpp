#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "multbound/bounds.hpp"
#include "multbound/parse.hpp"
#include "multbound/verify.hpp"

using namespace multbound;

namespace {

const std::vector<std::string> kXY = {"x", "y"};
const std::vector<std::string> kT = {"t"};

}  // namespace

TEST_CASE("torus root counts on explicit systems") {
    auto lines = count_torus_roots_2d(parse_polynomial("3*x + 5*y + 7", kXY),
                                      parse_polynomial("2*x - 9*y + 11", kXY));
    CHECK_FALSE(lines.degenerate);
    CHECK(lines.count == 1);

    // generic conics meet in four torus points
    auto conics = count_torus_roots_2d(
        parse_polynomial("3 + 5*x^2 + 7*y^2 - 2*x - 11*y + 13*x*y", kXY),
        parse_polynomial("17 - 23*x^2 + 3*y^2 + 29*x + 31*y - 37*x*y", kXY));
    CHECK_FALSE(conics.degenerate);
    CHECK(conics.count == 4);

    // Laurent support on the unit square against the simplex: 2 V = 4
    auto sq = count_torus_roots_2d(
        parse_polynomial("3*x*y + 5*x*y^-1 - 7*x^-1*y + 11*x^-1*y^-1", kXY),
        parse_polynomial("13 + 17*x - 19*y", kXY));
    CHECK_FALSE(sq.degenerate);
    CHECK(sq.count == 4);

    auto same = count_torus_roots_2d(parse_polynomial("3*x + 5*y + 7", kXY),
                                     parse_polynomial("3*x + 5*y + 7", kXY));
    CHECK(same.degenerate);

    // monomials never vanish on the torus
    auto mono = count_torus_roots_2d(parse_polynomial("4*x^2*y^-3", kXY),
                                     parse_polynomial("1 + x + y", kXY));
    CHECK_FALSE(mono.degenerate);
    CHECK(mono.count == 0);

    CHECK_THROWS_AS(count_torus_roots_2d(LaurentPolynomial::zero(2),
                                         parse_polynomial("x", kXY)),
                    std::invalid_argument);
}

TEST_CASE("segment supports count through multiplicity accounting") {
    // vertical segment times full simplex: roots share x-coordinates
    auto seg = count_torus_roots_2d(parse_polynomial("2 + 3*y^2", kXY),
                                    parse_polynomial("5 + 7*x + 11*y", kXY));
    CHECK_FALSE(seg.degenerate);
    Polytope a = Polytope::hull_lattice(2, {{0, 0}, {0, 2}});
    Polytope b = Polytope::simplex(2);
    CHECK(Rational(seg.count) == 2 * mixed_volume({a, b}));
}

TEST_CASE("bk suite matches the mixed-volume prediction") {
    InstanceSpec spec;
    spec.seed = 99;
    spec.trials = 30;
    SuiteSummary s = bk_check(spec);
    CHECK(s.ok());
    CHECK(s.passes >= 25);
    // degenerate regenerations are allowed but rare at full coefficient height
    CHECK(s.degenerate <= 6);
}

TEST_CASE("hilbert ranks of parametrized curves") {
    std::vector<LaurentPolynomial> parabola = {parse_polynomial("t", kT),
                                               parse_polynomial("t^2", kT)};
    CHECK(hf_parametrized(parabola, {{0, 0}, {1, 0}, {0, 1}}) == 3);

    std::vector<LaurentPolynomial> diagonal = {parse_polynomial("t", kT),
                                               parse_polynomial("t", kT)};
    CHECK(hf_parametrized(diagonal, {{1, 0}, {0, 1}}) == 1);

    // monomial curve against all monomials of the doubled simplex
    std::vector<LaurentPolynomial> curve = {parse_polynomial("t^2", kT),
                                            parse_polynomial("t^3", kT)};
    std::vector<Exponents> a_set = {{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}};
    long rank = hf_parametrized(curve, a_set);
    CHECK(rank == 6);
    CHECK(Int(rank) <= hf_upper_pure(3, 2, 1));
    CHECK(rank <= static_cast<long>(a_set.size()));

    // negative exponents demand invertible components
    std::vector<LaurentPolynomial> with_zero = {parse_polynomial("t", kT),
                                                LaurentPolynomial::zero(1)};
    CHECK_THROWS_AS(hf_parametrized(with_zero, {{1, -1}}), std::domain_error);
    CHECK(hf_parametrized({parse_polynomial("t", kT), parse_polynomial("1 + t", kT)},
                          {{1, -1}, {0, 0}}) == 2);

    // generic high-degree maps reach full rank
    std::vector<LaurentPolynomial> generic = {parse_polynomial("t^7 + 3*t^2 + t", kT),
                                              parse_polynomial("t^6 - 2*t^3 + 5", kT)};
    CHECK(hf_parametrized(generic, a_set) == static_cast<long>(a_set.size()));
}

TEST_CASE("suites are deterministic byte for byte") {
    InstanceSpec spec;
    spec.seed = 1234;
    spec.trials = 12;
    for (const std::string name : {"bk", "vol-ivol", "mv-axioms"}) {
        SuiteSummary a = run_property_suite(name, spec);
        SuiteSummary b = run_property_suite(name, spec);
        REQUIRE(a.reports.size() == b.reports.size());
        for (size_t i = 0; i < a.reports.size(); ++i) {
            CHECK(a.reports[i].check == b.reports[i].check);
            CHECK(a.reports[i].lhs == b.reports[i].lhs);
            CHECK(a.reports[i].rhs == b.reports[i].rhs);
            CHECK(a.reports[i].verdict == b.reports[i].verdict);
            CHECK(a.reports[i].instance == b.reports[i].instance);
        }
    }
    // a different seed draws different instances
    InstanceSpec other = spec;
    other.seed = 4321;
    SuiteSummary a = run_property_suite("bk", spec);
    SuiteSummary c = run_property_suite("bk", other);
    bool differs = a.reports.size() != c.reports.size();
    for (size_t i = 0; !differs && i < a.reports.size(); ++i)
        differs = a.reports[i].instance != c.reports[i].instance;
    CHECK(differs);
}

TEST_CASE("every named suite runs clean at small scale") {
    InstanceSpec spec;
    spec.seed = 31337;
    spec.trials = 15;
    for (const auto& name : property_suite_names()) {
        SuiteSummary s = run_property_suite(name, spec);
        INFO(name);
        CHECK(s.ok());
        CHECK(s.trials == 15);
    }
    CHECK_THROWS_AS(run_property_suite("no-such-suite", spec), std::invalid_argument);
}

TEST_CASE("failure reports carry the instance for replay") {
    InstanceSpec spec;
    spec.seed = 5;
    spec.trials = 8;
    SuiteSummary s = run_property_suite("delta-add", spec);
    for (const auto& r : s.reports) {
        CHECK_FALSE(r.instance.empty());
        CHECK(r.verdict == "pass");
    }
}
