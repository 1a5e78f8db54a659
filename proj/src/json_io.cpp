#include "multbound/json_io.hpp"

#include <stdexcept>

#include "multbound/parse.hpp"

namespace multbound {

namespace {

Json rational_json(const Rational& q) {
    if (q.get_den() == 1 && q.get_num().fits_slong_p()) return Json(to_long(q.get_num()));
    return Json(to_string(q));
}

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw std::invalid_argument("expected an integer or a rational string");
}

void expect(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument("schema violation: " + msg);
}

}  // namespace

Json poly_to_json(const LaurentPolynomial& p) {
    Json terms = Json::array();
    for (const auto& [exp, c] : p.terms()) {
        Json t;
        t["coeff"] = to_string(c);
        t["exp"] = exp;
        terms.push_back(std::move(t));
    }
    return Json{{"dim", p.dimension()}, {"terms", std::move(terms)}};
}

LaurentPolynomial poly_from_json(const Json& j) {
    expect(j.is_object() && j.contains("dim") && j.contains("terms"),
           "polynomial needs dim and terms");
    int dim = j.at("dim").get<int>();
    LaurentPolynomial p(dim);
    for (const auto& t : j.at("terms")) {
        expect(t.contains("coeff") && t.contains("exp"), "term needs coeff and exp");
        Exponents e = t.at("exp").get<Exponents>();
        p.add_term(e, rational_from_json(t.at("coeff")));
    }
    return p;
}

Json polytope_to_json(const Polytope& p) {
    Json out;
    out["dim"] = p.dimension();
    out["affine_dim"] = p.affine_dim();
    out["integral"] = p.integral();
    Json verts = Json::array();
    for (const auto& v : p.vertices()) {
        Json row = Json::array();
        for (const auto& c : v) row.push_back(rational_json(c));
        verts.push_back(std::move(row));
    }
    out["vertices"] = std::move(verts);
    Json facets = Json::array();
    for (const auto& f : p.facets()) {
        Json h;
        Json normal = Json::array();
        for (const auto& c : f.normal) normal.push_back(to_string(c));
        h["normal"] = std::move(normal);
        h["offset"] = to_string(f.offset);
        facets.push_back(std::move(h));
    }
    out["facets"] = std::move(facets);
    Json eqs = Json::array();
    for (const auto& e : p.equations()) {
        Json h;
        Json normal = Json::array();
        for (const auto& c : e.normal) normal.push_back(to_string(c));
        h["normal"] = std::move(normal);
        h["offset"] = to_string(e.offset);
        eqs.push_back(std::move(h));
    }
    out["equations"] = std::move(eqs);
    return out;
}

Polytope polytope_from_json(const Json& j) {
    expect(j.is_object() && j.contains("dim") && j.contains("vertices"),
           "polytope needs dim and vertices");
    int dim = j.at("dim").get<int>();
    std::vector<QVec> pts;
    for (const auto& row : j.at("vertices")) {
        QVec v;
        for (const auto& c : row) v.push_back(rational_from_json(c));
        expect(static_cast<int>(v.size()) == dim, "vertex dimension mismatch");
        pts.push_back(std::move(v));
    }
    expect(!pts.empty(), "polytope needs at least one vertex");
    return Polytope::hull(dim, pts);
}

Json germ_to_json(const TrajectoryGerm& g) {
    Json comps = Json::array();
    for (const auto& c : g.components) {
        Json row = Json::array();
        for (int k = 0; k <= g.order; ++k) row.push_back(to_string(c[k]));
        comps.push_back(std::move(row));
    }
    return Json{{"dim", g.dim},
                {"order", g.order},
                {"components", std::move(comps)},
                {"provenance", provenance_name(g.provenance)}};
}

TrajectoryGerm germ_from_json(const Json& j) {
    expect(j.is_object() && j.contains("dim") && j.contains("order") && j.contains("components"),
           "germ needs dim, order, components");
    int dim = j.at("dim").get<int>();
    int order = j.at("order").get<int>();
    expect(order >= 0, "germ order must be nonnegative");
    const Json& comps = j.at("components");
    expect(static_cast<int>(comps.size()) == dim, "germ component count mismatch");
    std::vector<TruncatedSeries> series;
    for (const auto& row : comps) {
        expect(static_cast<int>(row.size()) == order + 1, "germ coefficient count mismatch");
        TruncatedSeries s(order);
        for (int k = 0; k <= order; ++k) s.set(k, rational_from_json(row.at(k)));
        series.push_back(std::move(s));
    }
    Provenance prov = Provenance::UserSupplied;
    if (j.contains("provenance")) prov = provenance_from_name(j.at("provenance").get<std::string>());
    return TrajectoryGerm::from_components(std::move(series), prov);
}

Json mult_result_to_json(const MultiplicityResult& m) {
    Json out;
    switch (m.kind) {
        case MultiplicityResult::Kind::Exact:
            out["result"] = "exact";
            break;
        case MultiplicityResult::Kind::AtLeast:
            out["result"] = "at_least";
            break;
        case MultiplicityResult::Kind::IdenticallyZeroSuspected:
            out["result"] = "identically_zero_suspected";
            break;
    }
    out["value"] = m.value.fits_slong_p() ? Json(to_long(m.value)) : Json(to_string(m.value));
    if (m.leading) out["leading"] = to_string(*m.leading);
    return out;
}

Json bound_report_to_json(const BoundReport& r) {
    Json out;
    out["theorem"] = r.theorem;
    Json inputs = Json::array();
    for (const auto& [k, v] : r.inputs) inputs.push_back(Json{{"name", k}, {"value", v}});
    out["inputs"] = std::move(inputs);
    Json constants = Json::array();
    for (const auto& [k, v] : r.constants) constants.push_back(Json{{"name", k}, {"value", v}});
    out["constants"] = std::move(constants);
    out["notes"] = r.notes;
    out["exact"] = to_string(r.exact);
    out["bound"] = to_string(r.bound);
    return out;
}

Json trial_to_json(const TrialReport& t) {
    return Json{{"id", t.id},         {"check", t.check},     {"lhs", t.lhs},
                {"rhs", t.rhs},       {"verdict", t.verdict}, {"instance", t.instance}};
}

Json suite_to_json(const SuiteSummary& s) {
    return Json{{"suite", s.suite},       {"seed", s.seed},
                {"trials", s.trials},     {"passes", s.passes},
                {"failures", s.failures}, {"degenerate", s.degenerate}};
}

Json problem_to_json(const ProblemFile& p) {
    Json out;
    out["version"] = p.version;
    out["name"] = p.name;
    out["variables"] = p.variables;
    Json field;
    field["components"] = p.field_components;
    if (p.time_index) field["time_index"] = *p.time_index;
    out["field"] = std::move(field);
    Json base = Json::array();
    for (const auto& c : p.base_point) base.push_back(to_string(c));
    out["base_point"] = std::move(base);
    if (p.chi) out["chi"] = to_string(*p.chi);
    Json germ;
    germ["kind"] = p.germ_kind;
    if (!p.resonance.empty()) {
        Json res;
        for (const auto& [k, v] : p.resonance) {
            Json row = Json::array();
            for (const auto& c : v) row.push_back(to_string(c));
            res[std::to_string(k)] = std::move(row);
        }
        germ["resonance"] = std::move(res);
    }
    if (p.user_germ) germ["data"] = *p.user_germ;
    out["germ"] = std::move(germ);
    out["polynomials"] = p.polynomials;
    out["bounds"] = p.bound_theorems;
    return out;
}

ProblemFile problem_from_json(const Json& j) {
    expect(j.is_object(), "problem file must be an object");
    expect(j.contains("version") && j.at("version") == "multbound/1",
           "unsupported problem file version");
    expect(j.contains("variables") && j.at("variables").is_array() &&
               !j.at("variables").empty(),
           "problem needs a variable list");
    expect(j.contains("field") && j.at("field").is_object() &&
               j.at("field").contains("components"),
           "problem needs field components");
    ProblemFile p;
    p.name = j.value("name", "");
    p.variables = j.at("variables").get<std::vector<std::string>>();
    const Json& field = j.at("field");
    p.field_components = field.at("components").get<std::vector<std::string>>();
    expect(p.field_components.size() == p.variables.size(),
           "one field component per variable");
    if (field.contains("time_index")) {
        p.time_index = field.at("time_index").get<int>();
        expect(*p.time_index >= 0 && *p.time_index < static_cast<int>(p.variables.size()),
               "time index out of range");
    }
    if (j.contains("base_point")) {
        for (const auto& c : j.at("base_point")) p.base_point.push_back(rational_from_json(c));
        expect(p.base_point.size() == p.variables.size(), "base point dimension mismatch");
    }
    if (j.contains("chi")) {
        Rational chi = rational_from_json(j.at("chi"));
        expect(is_integer(chi) && chi >= 0, "chi must be a nonnegative integer");
        p.chi = chi.get_num();
    }
    if (j.contains("germ")) {
        const Json& germ = j.at("germ");
        p.germ_kind = germ.value("kind", "regular");
        expect(p.germ_kind == "regular" || p.germ_kind == "fuchsian" || p.germ_kind == "user",
               "germ kind must be regular, fuchsian or user");
        if (germ.contains("resonance")) {
            for (const auto& [key, row] : germ.at("resonance").items()) {
                QVec v;
                for (const auto& c : row) v.push_back(rational_from_json(c));
                p.resonance[std::stoi(key)] = std::move(v);
            }
        }
        if (germ.contains("data")) p.user_germ = germ.at("data");
        if (p.germ_kind == "user") expect(p.user_germ.has_value(), "user germ needs data");
    }
    if (j.contains("polynomials"))
        p.polynomials = j.at("polynomials").get<std::vector<std::string>>();
    if (j.contains("bounds"))
        p.bound_theorems = j.at("bounds").get<std::vector<std::string>>();
    // round-trip sanity: the field must parse in the declared variables
    problem_field(p);
    return p;
}

ProblemFile problem_from_example(const BuiltinExample& ex) {
    ProblemFile p;
    p.name = ex.name;
    p.variables = ex.variables;
    p.time_index = ex.field.time_index();
    for (const auto& c : ex.field.components())
        p.field_components.push_back(c.to_expression(ex.variables));
    p.base_point = ex.base;
    p.chi = ex.chi;
    p.resonance = ex.resonance;
    switch (ex.germ_kind) {
        case BuiltinExample::GermKind::Regular:
            p.germ_kind = "regular";
            break;
        case BuiltinExample::GermKind::Fuchsian:
            p.germ_kind = "fuchsian";
            break;
        case BuiltinExample::GermKind::User:
            p.germ_kind = "user";
            p.user_germ = germ_to_json(example_germ(ex, 64));
            break;
    }
    return p;
}

VectorField problem_field(const ProblemFile& p) {
    std::vector<LaurentPolynomial> comps;
    for (const auto& text : p.field_components)
        comps.push_back(parse_polynomial(text, p.variables));
    return VectorField(std::move(comps), p.time_index);
}

GermSource problem_source(const ProblemFile& p) {
    if (p.germ_kind == "user") {
        expect(p.user_germ.has_value(), "user germ needs data");
        return GermSource(germ_from_json(*p.user_germ));
    }
    VectorField field = problem_field(p);
    QVec base = p.base_point;
    expect(base.size() == p.variables.size(), "problem needs a base point");
    if (p.germ_kind == "fuchsian") {
        ResonanceData res = p.resonance;
        int tau = field.time_index() ? *field.time_index() : 0;
        QVec dependent;
        for (int i = 0; i < field.dimension(); ++i)
            if (i != tau) dependent.push_back(base[i]);
        return GermSource(
            [field, dependent, res](int order) {
                return expand_fuchsian(field, dependent, order, res);
            },
            field.dimension());
    }
    return GermSource([field, base](int order) { return expand_regular(field, base, order); },
                      field.dimension());
}

}  // namespace multbound
