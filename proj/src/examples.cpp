#include "multbound/examples.hpp"

#include <stdexcept>

#include "multbound/parse.hpp"

namespace multbound {

BuiltinExample example_ramanujan() {
    std::vector<std::string> vars = {"z", "X", "Y", "R"};
    VectorField field({parse_polynomial("z", vars),
                       parse_polynomial("1/12*X^2 - 1/12*Y", vars),
                       parse_polynomial("1/3*X*Y - 1/3*R", vars),
                       parse_polynomial("1/2*X*R - 1/2*Y^2", vars)},
                      0);
    BuiltinExample ex{"ramanujan",
                      vars,
                      std::move(field),
                      {Rational(0), Rational(1), Rational(1), Rational(1)},
                      Int(2),
                      {},
                      BuiltinExample::GermKind::Fuchsian,
                      0};
    // the scale-invariance of z d/dz leaves order 1 free; this choice selects
    // the classical normalization of the coefficients
    ex.resonance[1] = {Rational(-24), Rational(240), Rational(-504)};
    return ex;
}

BuiltinExample example_parabola() {
    std::vector<std::string> vars = {"x", "y"};
    VectorField field({parse_polynomial("1", vars), parse_polynomial("2*x", vars)});
    return BuiltinExample{"parabola",
                          vars,
                          std::move(field),
                          {Rational(0), Rational(0)},
                          Int(0),
                          {},
                          BuiltinExample::GermKind::Regular,
                          0};
}

BuiltinExample example_power_a(long a) {
    if (a < 1) throw std::invalid_argument("power-a needs a >= 1");
    std::vector<std::string> vars = {"x", "y"};
    VectorField field({parse_polynomial("x", vars),
                       parse_polynomial(std::to_string(a) + "*y", vars)});
    return BuiltinExample{"power-a",
                          vars,
                          std::move(field),
                          {Rational(0), Rational(0)},
                          std::nullopt,
                          {},
                          BuiltinExample::GermKind::User,
                          a};
}

BuiltinExample example_linear_diagonal() {
    std::vector<std::string> vars = {"x", "y"};
    VectorField field({parse_polynomial("x", vars), parse_polynomial("2*y", vars)});
    return BuiltinExample{"linear-diagonal",
                          vars,
                          std::move(field),
                          {Rational(1), Rational(1)},
                          Int(0),
                          {},
                          BuiltinExample::GermKind::Regular,
                          0};
}

BuiltinExample builtin_example(const std::string& name, long power_a) {
    if (name == "ramanujan") return example_ramanujan();
    if (name == "parabola") return example_parabola();
    if (name == "power-a") return example_power_a(power_a);
    if (name == "linear-diagonal") return example_linear_diagonal();
    throw std::invalid_argument("unknown builtin example: " + name);
}

std::vector<std::string> builtin_example_names() {
    return {"ramanujan", "parabola", "power-a", "linear-diagonal"};
}

TrajectoryGerm example_germ(const BuiltinExample& ex, int order) {
    switch (ex.germ_kind) {
        case BuiltinExample::GermKind::Regular:
            return expand_regular(ex.field, ex.base, order);
        case BuiltinExample::GermKind::Fuchsian: {
            QVec dependent;
            int tau = *ex.field.time_index();
            for (int i = 0; i < ex.field.dimension(); ++i)
                if (i != tau) dependent.push_back(ex.base[i]);
            return expand_fuchsian(ex.field, dependent, order, ex.resonance);
        }
        case BuiltinExample::GermKind::User: {
            // the invariant curve y = x^a through the origin
            std::vector<TruncatedSeries> comps;
            comps.push_back(TruncatedSeries::identity(order));
            TruncatedSeries y(order);
            if (ex.power <= order) y.set(static_cast<int>(ex.power), Rational(1));
            comps.push_back(std::move(y));
            return TrajectoryGerm::from_components(std::move(comps), Provenance::UserSupplied);
        }
    }
    throw std::logic_error("unreachable");
}

GermSource example_source(const BuiltinExample& ex) {
    BuiltinExample copy = ex;
    return GermSource([copy](int order) { return example_germ(copy, order); },
                      copy.field.dimension());
}

}  // namespace multbound
