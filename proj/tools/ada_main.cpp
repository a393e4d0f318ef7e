// Command-line front end for the AD-A parameter calculus: transforms,
// orbit windows, nonabelian Hodge diagrams, 3d mirrors, physics labels and
// the verification suites. JSON goes to stdout, diagnostics to stderr.
// Exit codes: 0 success, 1 domain error (JSON error object on stderr),
// 2 usage error.

#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ada/diagrams.hpp"
#include "ada/errors.hpp"
#include "ada/json_io.hpp"
#include "ada/ops.hpp"
#include "ada/orbits.hpp"
#include "ada/verify.hpp"

namespace {

using nlohmann::json;

int run(int argc, char** argv) {
    CLI::App app{"Exact calculus of AD-A irregular-connection parameters"};
    app.require_subcommand(1);

    std::string param_path;
    std::string ops_text;
    std::string format = "json";
    std::string twists = "none";
    std::string suite;
    int r_max = 12;
    int l = 1;
    bool plus = false;

    auto add_param = [&](CLI::App* cmd) {
        cmd->add_option("--param", param_path, "parameter JSON file ('-' for stdin)")
            ->required();
    };

    CLI::App* transform = app.add_subcommand("transform", "apply an operation sequence");
    add_param(transform);
    transform->add_option("--ops", ops_text, "comma-separated operations, e.g. F,F+,T@-1")
        ->required();

    CLI::App* orbit = app.add_subcommand("orbit", "enumerate a bounded orbit window");
    add_param(orbit);
    orbit->add_option("--max-denominator", r_max, "ramification bound")->required();
    orbit->add_option("--twists", twists, "twist policy: none|c0")
        ->check(CLI::IsMember({"none", "c0"}));
    orbit->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "dot"}));

    CLI::App* diagram = app.add_subcommand("diagram", "nonabelian Hodge diagram");
    add_param(diagram);
    diagram->add_flag("--plus", plus, "minimal nonnegative diagram of the orbit");
    diagram->add_option("--max-denominator", r_max,
                        "orbit bound for --plus on generalized non-type-I input");
    diagram->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "dot"}));

    CLI::App* mirror = app.add_subcommand("mirror", "3d mirror quiver of a standard parameter");
    add_param(mirror);
    mirror->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "dot"}));

    CLI::App* label = app.add_subcommand("label", "physics label D_p^b(sl_N, [Y])");
    add_param(label);

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    add_param(verify);
    verify->add_option("--suite", suite, "dualities|orbit|pipeline|diagrams")
        ->required()
        ->check(CLI::IsMember({"dualities", "orbit", "pipeline", "diagrams"}));
    verify->add_option("--l", l, "column count for duality I");
    verify->add_option("--max-denominator", r_max, "ramification bound");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2; // help requests exit 0, usage errors exit 2
    }

    const ada::ADAParameter t = ada::load_parameter(param_path);

    if (transform->parsed()) {
        const ada::ADAParameter out = ada::apply_seq(ada::parse_op_sequence(ops_text), t);
        std::cout << ada::to_json(out).dump(2) << "\n";
        return 0;
    }
    if (orbit->parsed()) {
        const ada::TwistPolicy policy =
            twists == "c0" ? ada::TwistPolicy::EigenvaluesOfC0 : ada::TwistPolicy::None;
        const ada::OrbitGraph g = ada::enumerate(t, r_max, policy);
        if (format == "dot")
            std::cout << ada::to_dot(g);
        else
            std::cout << ada::to_json(g).dump(2) << "\n";
        return 0;
    }
    if (diagram->parsed() || mirror->parsed()) {
        ada::ADAParameter shown = t;
        ada::Diagram d;
        json extra;
        if (mirror->parsed() || plus) {
            if (mirror->parsed() && !ada::is_standard(t))
                throw ada::NotStandard("mirror needs a standard parameter, got " +
                                       ada::to_string(ada::classify(t)));
            if (ada::classify(t) == ada::ParamClass::Generalized) {
                // the closed form does not cover this case; scan the orbit
                const auto classes = ada::gamma_plus_scan(t, r_max);
                if (classes.size() != 1)
                    throw ada::Unsupported(
                        "orbit scan found " + std::to_string(classes.size()) +
                        " minimal nonnegative diagram classes within denominator " +
                        std::to_string(r_max));
                shown = classes.front().parameter;
                d = classes.front().diagram;
            } else {
                const ada::GammaPlus gp = ada::gamma_plus(t);
                shown = gp.parameter;
                d = gp.diagram;
            }
        } else {
            d = ada::full_diagram(t);
        }
        if (mirror->parsed()) {
            const ada::PhysicsLabel lbl = ada::to_physics_label(t);
            extra["label"] = lbl.str();
            extra["label_display"] = lbl.display();
        }
        if (format == "dot") {
            if (mirror->parsed())
                std::cout << "// " << extra["label"].get<std::string>() << "\n";
            std::cout << ada::to_dot(d);
        } else {
            json out = ada::to_json(d);
            out["parameter"] = ada::to_json(shown);
            for (auto& [key, value] : extra.items()) out[key] = value;
            std::cout << out.dump(2) << "\n";
        }
        return 0;
    }
    if (label->parsed()) {
        std::cout << ada::to_physics_label(t).str() << "\n";
        return 0;
    }
    if (verify->parsed()) {
        json report;
        if (suite == "pipeline") report = ada::verify::pipeline_suite(t);
        else if (suite == "dualities") report = ada::verify::dualities_suite(t, l);
        else if (suite == "orbit") report = ada::verify::orbit_suite(t, r_max);
        else report = ada::verify::diagrams_suite(t, r_max);
        std::cout << report.dump(2) << "\n";
        return 0;
    }
    return 2;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ada::DomainError& e) {
        std::cerr << json{{"error", e.code()}, {"message", e.what()}}.dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << json{{"error", "Internal"}, {"message", e.what()}}.dump() << "\n";
        return 1;
    }
}
