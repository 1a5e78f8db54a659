#pragma once

#include <optional>
#include <string>
#include <vector>

#include "multbound/multiplicity.hpp"
#include "multbound/series.hpp"

namespace multbound {

/*
 * Builtin problems shipped with the CLI. Each carries everything needed to
 * reproduce its trajectory germ at any order.
 */
struct BuiltinExample {
    enum class GermKind { Regular, Fuchsian, User };

    std::string name;
    std::vector<std::string> variables;
    VectorField field;
    QVec base;  // full ambient base point
    std::optional<Int> chi;
    ResonanceData resonance;
    GermKind germ_kind = GermKind::Regular;
    long power = 0;  // the exponent for the power-a family
};

BuiltinExample example_ramanujan();
BuiltinExample example_parabola();
BuiltinExample example_power_a(long a);
BuiltinExample example_linear_diagonal();

// Lookup by CLI name: ramanujan | parabola | power-a | linear-diagonal.
BuiltinExample builtin_example(const std::string& name, long power_a = 5);

std::vector<std::string> builtin_example_names();

TrajectoryGerm example_germ(const BuiltinExample& ex, int order);
GermSource example_source(const BuiltinExample& ex);

}  // namespace multbound
