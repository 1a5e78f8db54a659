#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "multbound/bounds.hpp"
#include "multbound/examples.hpp"
#include "multbound/json_io.hpp"
#include "multbound/multiplicity.hpp"
#include "multbound/parse.hpp"
#include "multbound/verify.hpp"

namespace {

using namespace multbound;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitViolation = 2;
constexpr int kExitUsage = 3;

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    Json j;
    in >> j;
    return j;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

// Delta from a file holding either a polytope or a polynomial.
Polytope body_from_file(const std::string& path) {
    Json j = read_json_file(path);
    if (j.contains("vertices")) return polytope_from_json(j);
    if (j.contains("terms")) return newton_polytope(poly_from_json(j));
    throw std::runtime_error("expected a polytope or polynomial JSON file: " + path);
}

VectorField field_from_json(const Json& j) {
    if (j.contains("version")) return problem_field(problem_from_json(j));
    if (j.contains("variables") && j.contains("components")) {
        auto vars = j.at("variables").get<std::vector<std::string>>();
        std::vector<LaurentPolynomial> comps;
        for (const auto& text : j.at("components").get<std::vector<std::string>>())
            comps.push_back(parse_polynomial(text, vars));
        std::optional<int> tau;
        if (j.contains("time_index")) tau = j.at("time_index").get<int>();
        return VectorField(std::move(comps), tau);
    }
    throw std::runtime_error("expected a field or problem JSON object");
}

// field polytope from a polytope, field, or problem file
Polytope xi_polytope_from_file(const std::string& path) {
    Json j = read_json_file(path);
    if (j.contains("vertices")) return polytope_from_json(j);
    return field_polytope(field_from_json(j)).polytope;
}

QVec parse_point(const std::string& text) {
    QVec out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) out.push_back(parse_rational(item));
    return out;
}

long default_max_order() {
    if (const char* env = std::getenv("MULTBOUND_MAX_ORDER")) return std::atol(env);
    return 4096;
}

struct MultArgs {
    std::string example, problem, field_file, germ_file, poly, point, bound_theorem, vars;
    long order = 64;
    long cap = 0;
    long chi = -1;
    long power_a = 5;
    bool pretty = false;
};

int run_mult(const MultArgs& args) {
    std::optional<ProblemFile> prob;
    std::optional<GermSource> source;
    std::vector<std::string> variables;

    if (!args.example.empty()) {
        prob = problem_from_example(builtin_example(args.example, args.power_a));
    } else if (!args.problem.empty()) {
        prob = problem_from_json(read_json_file(args.problem));
    } else if (!args.field_file.empty()) {
        Json j = read_json_file(args.field_file);
        if (!j.contains("variables") || !j.contains("components"))
            throw std::runtime_error("--field needs a JSON object with variables and components");
        ProblemFile p;
        p.variables = j.at("variables").get<std::vector<std::string>>();
        p.field_components = j.at("components").get<std::vector<std::string>>();
        if (j.contains("time_index")) p.time_index = j.at("time_index").get<int>();
        if (args.point.empty())
            throw std::runtime_error("--field needs --point for the base point");
        p.base_point = parse_point(args.point);
        problem_field(p);  // validates
        prob = std::move(p);
    }
    if (prob) {
        if (!args.point.empty()) prob->base_point = parse_point(args.point);
        variables = prob->variables;
        source = problem_source(*prob);
    } else if (!args.germ_file.empty()) {
        TrajectoryGerm germ = germ_from_json(read_json_file(args.germ_file));
        if (!args.vars.empty()) {
            std::string item;
            std::istringstream in(args.vars);
            while (std::getline(in, item, ',')) variables.push_back(item);
        } else {
            for (int i = 1; i <= germ.dim; ++i) variables.push_back("x" + std::to_string(i));
        }
        if (static_cast<int>(variables.size()) != germ.dim)
            throw std::runtime_error("variable list does not match the germ dimension");
        source = GermSource(std::move(germ));
    } else {
        std::cerr << "mult needs --example, --problem, --field or --germ\n";
        return kExitUsage;
    }

    std::string poly_text = args.poly;
    if (poly_text.empty() && prob && !prob->polynomials.empty())
        poly_text = prob->polynomials.front();
    if (poly_text.empty()) {
        std::cerr << "mult needs --poly (or a problem file with polynomials)\n";
        return kExitUsage;
    }
    LaurentPolynomial p = parse_polynomial(poly_text, variables);

    MultiplicityOptions opts;
    opts.initial_order = static_cast<int>(args.order);
    opts.cap = static_cast<int>(args.cap > 0 ? args.cap : default_max_order());

    Json out;
    std::optional<BoundReport> report;
    if (!args.bound_theorem.empty()) {
        if (!prob) throw std::runtime_error("--bound needs a problem or example context");
        VectorField field = problem_field(*prob);
        Int chi = args.chi >= 0 ? Int(args.chi) : (prob->chi ? *prob->chi : Int(0));
        Int delta(field.degree());
        if (args.bound_theorem == "pure") {
            Int d(std::max(p.is_constant() ? 1L : p.total_degree(), 1L));
            report = pure_bound(field.dimension(), delta, d, chi);
        } else if (args.bound_theorem == "toric") {
            report = toric_bound(field.dimension(), delta, newton_polytope(p),
                                 field_polytope(field).polytope, chi);
        } else if (args.bound_theorem == "mixed") {
            if (!field.time_index())
                throw std::runtime_error("mixed bound needs a graph-form field");
            auto [dz, dx] = p.mixed_degrees(*field.time_index());
            report = mixed_single_bound(field.dimension() - 1, delta,
                                        field_polytope(field).polytope, Int(dz), Int(dx), chi);
        } else {
            throw std::runtime_error("mult supports --bound pure|toric|mixed");
        }
        if (report->bound.fits_slong_p()) {
            long b = to_long(report->bound);
            if (b >= 1 && b < opts.cap) {
                opts.cap = static_cast<int>(b);
                opts.cap_is_bound = true;
            }
        }
    }

    MultiplicityResult result = multiplicity(p, *source, opts);
    out = mult_result_to_json(result);
    bool violation = false;
    if (report) {
        out["bound"] = bound_report_to_json(*report);
        violation = (result.exact() && Rational(result.value) > report->exact) ||
                    (result.kind == MultiplicityResult::Kind::AtLeast && opts.cap_is_bound);
        out["violation_candidate"] = violation;
    }
    emit(out);
    if (args.pretty) {
        std::cerr << "mult(" << poly_text << ") = " << out.at("result").get<std::string>()
                  << " " << out.at("value").dump() << "\n";
        if (report)
            std::cerr << "bound[" << report->theorem << "] = " << to_string(report->bound)
                      << (violation ? "  ** VIOLATION CANDIDATE **" : "") << "\n";
    }
    return violation ? kExitViolation : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"multiplicities of polynomials along trajectories of polynomial vector "
                 "fields, with Newton-polytope bound evaluation"};
    app.require_subcommand(1);
    app.fallthrough();
    bool pretty = false;
    long max_dim_guard = 0, max_box_guard = 0;
    app.add_flag("--pretty", pretty, "human-readable tables on standard error");
    app.add_option("--guard-dim", max_dim_guard, "override the polytope dimension guard");
    app.add_option("--guard-box", max_box_guard, "override the lattice-box guard");

    // ---- mult
    MultArgs margs;
    auto* mult_cmd = app.add_subcommand("mult", "multiplicity of a polynomial along a germ");
    mult_cmd->add_option("--example", margs.example, "builtin example name");
    mult_cmd->add_option("--problem", margs.problem, "problem file (multbound/1)");
    mult_cmd->add_option("--field", margs.field_file, "field JSON (variables + components)");
    mult_cmd->add_option("--germ", margs.germ_file, "trajectory germ JSON file");
    mult_cmd->add_option("--poly", margs.poly, "polynomial expression");
    mult_cmd->add_option("--point", margs.point, "base point override: comma-separated rationals");
    mult_cmd->add_option("--vars", margs.vars, "variable names for --germ mode");
    mult_cmd->add_option("--order", margs.order, "initial truncation order N")->check(CLI::PositiveNumber);
    mult_cmd->add_option("--max-order,--cap", margs.cap,
                         "escalation cap (default MULTBOUND_MAX_ORDER or 4096)");
    mult_cmd->add_option("--bound", margs.bound_theorem, "compare against a bound: pure|toric|mixed");
    mult_cmd->add_option("--chi", margs.chi, "D-property constant chi");
    mult_cmd->add_option("--a", margs.power_a, "exponent for the power-a example");

    // ---- bound
    std::string b_theorem, b_delta_file, b_field_file, b_example;
    long b_n = 0, b_d = 0, b_dz = 0, b_dx = 0, b_q = 0, b_m = 0, b_gen = 0;
    long b_delta = 0, b_chi = 0;
    auto* bound_cmd = app.add_subcommand("bound", "evaluate an explicit multiplicity bound");
    bound_cmd->add_option("--theorem", b_theorem, "pure|toric|mixed|mixed-multi|caseA|caseB")
        ->required();
    bound_cmd->add_option("-n", b_n, "ambient dimension n (dependent count for mixed bounds)");
    bound_cmd->add_option("--delta", b_delta, "field degree delta");
    bound_cmd->add_option("-d", b_d, "polynomial degree d");
    bound_cmd->add_option("--dz", b_dz, "time degree d_z");
    bound_cmd->add_option("--dx", b_dx, "dependent degree d_x");
    bound_cmd->add_option("-q", b_q, "number of points q");
    bound_cmd->add_option("-m", b_m, "dimension m of the ambient closure");
    bound_cmd->add_option("-D", b_gen, "generator degree D of the ambient closure");
    bound_cmd->add_option("--chi", b_chi, "D-property constant chi");
    bound_cmd->add_option("--delta-file", b_delta_file, "polytope or polynomial JSON for Delta");
    bound_cmd->add_option("--field-file", b_field_file, "field/problem/polytope JSON for Delta_xi");
    bound_cmd->add_option("--example", b_example, "builtin example supplying the field");

    // ---- polytope
    auto* poly_cmd = app.add_subcommand("polytope", "exact polytope operations");
    poly_cmd->require_subcommand(1);
    std::string p_body, p_other;
    std::vector<std::string> p_bodies;
    long p_k = 1, p_j = 1, p_d = 1;
    auto* pc_hull = poly_cmd->add_subcommand("hull", "canonical hull of a vertex file");
    pc_hull->add_option("--body", p_body)->required();
    auto* pc_vol = poly_cmd->add_subcommand("volume", "Euclidean volume");
    pc_vol->add_option("--body", p_body)->required();
    auto* pc_ivol = poly_cmd->add_subcommand("ivol", "lattice point count");
    pc_ivol->add_option("--body", p_body)->required();
    auto* pc_mink = poly_cmd->add_subcommand("minkowski", "Minkowski sum of two bodies");
    pc_mink->add_option("--body", p_body)->required();
    pc_mink->add_option("--other", p_other)->required();
    auto* pc_scale = poly_cmd->add_subcommand("scale", "integer dilation");
    pc_scale->add_option("--body", p_body)->required();
    pc_scale->add_option("-k", p_k)->required();
    auto* pc_mv = poly_cmd->add_subcommand("mixed-volume", "mixed volume of n bodies");
    pc_mv->add_option("--bodies", p_bodies)->required()->expected(-1);
    auto* pc_qm = poly_cmd->add_subcommand("quermass", "j-th simplicial quermassintegral");
    pc_qm->add_option("--body", p_body)->required();
    pc_qm->add_option("-j", p_j)->required();
    auto* pc_pi = poly_cmd->add_subcommand("pi-degree", "sup-norm degree");
    pc_pi->add_option("--body", p_body)->required();
    auto* pc_trunc = poly_cmd->add_subcommand("truncate", "intersect with [-d,d]^n");
    pc_trunc->add_option("--body", p_body)->required();
    pc_trunc->add_option("-d", p_d)->required();
    auto* pc_coideal = poly_cmd->add_subcommand("coideal", "downward-closure test");
    pc_coideal->add_option("--body", p_body)->required();

    // ---- verify
    std::string v_suite, v_log;
    std::uint64_t v_seed = 1;
    long v_trials = 100, v_dim = 3, v_delta = 2, v_degree = 4, v_height = 32;
    auto* verify_cmd = app.add_subcommand("verify", "randomized property suites");
    verify_cmd->add_option("--suite", v_suite, "bk|vol-ivol|rolle-order|ramanujan-rolle|"
                                               "bound-soundness|mv-axioms|delta-add")
        ->required();
    verify_cmd->add_option("--seed", v_seed, "deterministic seed");
    verify_cmd->add_option("--trials", v_trials, "trial count");
    verify_cmd->add_option("--log", v_log, "JSONL trial log file");
    verify_cmd->add_option("--inst-dim", v_dim, "max instance dimension");
    verify_cmd->add_option("--inst-delta", v_delta, "max field degree");
    verify_cmd->add_option("--inst-degree", v_degree, "max polynomial degree");
    verify_cmd->add_option("--height-bits", v_height, "coefficient height in bits");

    // ---- example
    std::string e_name, e_out;
    long e_a = 5;
    auto* example_cmd = app.add_subcommand("example", "emit a builtin problem file");
    example_cmd->add_option("name", e_name, "ramanujan|parabola|power-a|linear-diagonal")
        ->required();
    example_cmd->add_option("--a", e_a, "exponent for power-a");
    example_cmd->add_option("-o,--out", e_out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (max_dim_guard > 0) guards().max_dim = static_cast<int>(max_dim_guard);
    if (max_box_guard > 0) guards().max_box = Int(max_box_guard);
    margs.pretty = pretty;

    try {
        if (*mult_cmd) return run_mult(margs);

        if (*bound_cmd) {
            BoundReport report;
            auto xi_poly = [&]() {
                if (!b_field_file.empty()) return xi_polytope_from_file(b_field_file);
                if (!b_example.empty())
                    return field_polytope(builtin_example(b_example).field).polytope;
                throw std::runtime_error("this theorem needs --field-file or --example (Delta_xi)");
            };
            auto field_delta = [&]() -> Int {
                if (b_delta > 0) return Int(b_delta);
                if (!b_example.empty()) return Int(builtin_example(b_example).field.degree());
                if (!b_field_file.empty()) {
                    Json j = read_json_file(b_field_file);
                    if (!j.contains("vertices")) return Int(field_from_json(j).degree());
                }
                throw std::runtime_error("missing parameter: delta");
            };
            if (b_theorem == "pure") {
                if (b_n < 1 || b_d < 1 || b_delta < 1)
                    throw std::runtime_error("pure bound needs -n, -d, --delta");
                report = pure_bound(b_n, Int(b_delta), Int(b_d), Int(b_chi));
            } else if (b_theorem == "toric") {
                if (b_delta_file.empty())
                    throw std::runtime_error("toric bound needs --delta-file (Delta)");
                Polytope delta_p = body_from_file(b_delta_file);
                Polytope xi = xi_poly();
                long n = b_n > 0 ? b_n : delta_p.dimension();
                report = toric_bound(n, field_delta(), delta_p, xi, Int(b_chi));
            } else if (b_theorem == "mixed" || b_theorem == "mixed-multi") {
                Polytope xi = xi_poly();
                long n = b_n > 0 ? b_n : xi.dimension() - 1;
                if (b_dz < 1 || b_dx < 1)
                    throw std::runtime_error("mixed bounds need --dz and --dx");
                if (b_theorem == "mixed") {
                    report = mixed_single_bound(n, field_delta(), xi, Int(b_dz), Int(b_dx),
                                                Int(b_chi));
                } else {
                    if (b_q < 1) throw std::runtime_error("mixed-multi needs -q");
                    report = mixed_multi_bound(n, field_delta(), xi, Int(b_dz), Int(b_dx),
                                               Int(b_q), Int(b_chi));
                }
            } else if (b_theorem == "caseA" || b_theorem == "caseB") {
                Polytope xi = xi_poly();
                long n = b_n > 0 ? b_n : xi.dimension() - 1;
                if (b_dz < 1 || b_dx < 1 || b_q < 1 || b_m < 1 || b_gen < 1)
                    throw std::runtime_error("case bounds need --dz, --dx, -q, -m, -D");
                report = case_ab_bound(n, b_m,
                                       b_theorem == "caseA" ? AmbientCase::A : AmbientCase::B,
                                       Int(b_gen), field_delta(), xi, Int(b_dz), Int(b_dx),
                                       Int(b_q), Int(b_chi));
            } else {
                throw std::runtime_error("unknown theorem: " + b_theorem);
            }
            emit(bound_report_to_json(report));
            if (pretty)
                std::cerr << "bound[" << report.theorem << "] = " << to_string(report.bound)
                          << "\n";
            return kExitOk;
        }

        if (*poly_cmd) {
            auto pretty_2d = [&](const Polytope& p) {
                if (!pretty || p.dimension() != 2) return;
                for (const auto& v : p.vertices())
                    std::cerr << "(" << to_string(v[0]) << "," << to_string(v[1]) << ") ";
                std::cerr << "\n";
            };
            if (*pc_hull) {
                Polytope p = body_from_file(p_body);
                emit(polytope_to_json(p));
                pretty_2d(p);
            } else if (*pc_vol) {
                emit(Json{{"volume", to_string(body_from_file(p_body).volume())}});
            } else if (*pc_ivol) {
                emit(Json{{"ivol", to_string(body_from_file(p_body).lattice_count())}});
            } else if (*pc_mink) {
                Polytope p = body_from_file(p_body).minkowski_sum(body_from_file(p_other));
                emit(polytope_to_json(p));
                pretty_2d(p);
            } else if (*pc_scale) {
                if (p_k < 0) throw std::runtime_error("dilation factor must be nonnegative");
                emit(polytope_to_json(body_from_file(p_body).scaled(Rational(p_k))));
            } else if (*pc_mv) {
                std::vector<Polytope> bodies;
                for (const auto& f : p_bodies) bodies.push_back(body_from_file(f));
                Rational v = mixed_volume(bodies);
                Int nf = factorial(static_cast<unsigned>(bodies.size()));
                emit(Json{{"mixed_volume", to_string(v)},
                          {"n_factorial_times", to_string(Rational(nf) * v)}});
            } else if (*pc_qm) {
                emit(Json{{"quermassintegral",
                           to_string(quermassintegral(body_from_file(p_body),
                                                      static_cast<int>(p_j)))}});
            } else if (*pc_pi) {
                emit(Json{{"pi_degree", body_from_file(p_body).pi_degree()}});
            } else if (*pc_trunc) {
                Polytope cut = body_from_file(p_body).truncate_to_box(p_d);
                emit(polytope_to_json(cut));
            } else if (*pc_coideal) {
                emit(Json{{"coideal", body_from_file(p_body).is_coideal()}});
            }
            return kExitOk;
        }

        if (*verify_cmd) {
            InstanceSpec spec;
            spec.seed = v_seed;
            spec.trials = static_cast<int>(v_trials);
            spec.max_dim = static_cast<int>(v_dim);
            spec.max_delta = v_delta;
            spec.max_degree = v_degree;
            spec.height_bits = v_height;
            SuiteSummary summary = run_property_suite(v_suite, spec);
            if (!v_log.empty()) {
                std::ofstream log(v_log);
                if (!log) throw std::runtime_error("cannot open log file: " + v_log);
                for (const auto& t : summary.reports) log << trial_to_json(t).dump() << "\n";
            }
            emit(suite_to_json(summary));
            if (pretty)
                std::cerr << summary.suite << ": " << summary.passes << " passed, "
                          << summary.failures << " failed, " << summary.degenerate
                          << " degenerate draws\n";
            if (summary.ok()) return kExitOk;
            return v_suite == "bound-soundness" ? kExitViolation : kExitError;
        }

        if (*example_cmd) {
            ProblemFile prob = problem_from_example(builtin_example(e_name, e_a));
            Json j = problem_to_json(prob);
            if (e_out.empty()) {
                emit(j);
            } else {
                std::ofstream out(e_out);
                if (!out) throw std::runtime_error("cannot open output file: " + e_out);
                out << j.dump(2) << "\n";
            }
            return kExitOk;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitUsage;
}
