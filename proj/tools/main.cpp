#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "lefschetz/commands.hpp"
#include "lefschetz/errors.hpp"

using namespace lefschetz;

int main(int argc, char** argv) {
    CLI::App app{"exact symplectic cohomology of solvmanifolds presented as Lie algebras"};
    app.require_subcommand(1);

    CommandRequest request;
    if (const char* seed_env = std::getenv("LEFSCHETZ_SEED"))
        request.seed = std::strtoull(seed_env, nullptr, 10);

    auto add_algebra_arg = [&](CLI::App* cmd) {
        cmd->add_option("algebra", request.algebra, "catalog name or algebra JSON file")
            ->required();
    };
    auto add_json_flag = [&](CLI::App* cmd) {
        cmd->add_flag("--json", request.json, "machine-readable output");
    };
    auto add_omega_opt = [&](CLI::App* cmd) {
        cmd->add_option("--omega", [&](const CLI::results_t& values) {
               request.omega_text = values.at(0);
               return true;
           },
           "symplectic form expression, e.g. \"e14 + e23\"");
    };
    auto add_degree_opt = [&](CLI::App* cmd) {
        cmd->add_option("--degree", [&](const CLI::results_t& values) {
               request.degree = std::stoi(values.at(0));
               return true;
           },
           "restrict to one degree");
    };

    CLI::App* list = app.add_subcommand("list", "show the builtin algebra catalog");
    add_json_flag(list);

    CLI::App* validate = app.add_subcommand("validate", "Jacobi and unimodularity diagnostics");
    add_algebra_arg(validate);
    add_json_flag(validate);

    CLI::App* betti = app.add_subcommand("betti", "Betti numbers of the invariant cohomology");
    add_algebra_arg(betti);
    add_json_flag(betti);

    CLI::App* cohomology = app.add_subcommand("cohomology", "cohomology bases per degree");
    add_algebra_arg(cohomology);
    add_degree_opt(cohomology);
    add_json_flag(cohomology);

    CLI::App* hlc = app.add_subcommand("hlc", "hard Lefschetz verdict for a fixed form");
    add_algebra_arg(hlc);
    add_omega_opt(hlc);
    add_json_flag(hlc);

    CLI::App* ddlambda = app.add_subcommand("ddlambda", "dd^Lambda lemma per degree");
    add_algebra_arg(ddlambda);
    add_omega_opt(ddlambda);
    add_degree_opt(ddlambda);
    add_json_flag(ddlambda);

    CLI::App* audit = app.add_subcommand("audit", "five-way equivalence audit");
    add_algebra_arg(audit);
    add_omega_opt(audit);
    add_json_flag(audit);

    CLI::App* jinv = app.add_subcommand("jinv", "J-invariant cohomology invariants");
    add_algebra_arg(jinv);
    add_omega_opt(jinv);
    add_json_flag(jinv);

    CLI::App* lejmi = app.add_subcommand("lejmi", "kernel of the Lejmi operator P_J");
    add_algebra_arg(lejmi);
    add_omega_opt(lejmi);
    add_json_flag(lejmi);

    CLI::App* param = app.add_subcommand("param-hlc", "polynomial HLC certificate for a family");
    add_algebra_arg(param);
    param->add_option("--family", [&](const CLI::results_t& values) {
             request.family_text = values.at(0);
             return true;
         },
         "family basis \"name:expr;name:expr\" (default: catalog or H^2 basis)");
    add_json_flag(param);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    request.command = app.get_subcommands().front()->get_name();

    try {
        Report report = run(request);
        std::cout << report.rendered(request.json);
        return report.status;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const MathError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
