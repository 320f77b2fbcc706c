// Batch front-end: runs JSON-described constructions and analyses, writes a
// JSON report plus DOT quivers, and reflects the outcome in the exit status:
//   0  every check passed
//   1  a mathematical check failed (a machine-checkable witness is serialized)
//   2  input or validation error
//   3  an enumeration budget or factorization cap degraded some verdict

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

#include "coalglab/runner.hpp"

using namespace coalglab;

int main(int argc, char** argv) {
    CLI::App app{"coalglab: exact-arithmetic lab for distributive and chain coalgebras"};
    app.require_subcommand(1);

    std::string spec_path;
    std::string out_dir = ".";
    std::size_t budget = 0; // 0 = env or default
    int degree_cap = 12;

    CLI::App* run = app.add_subcommand("run", "execute a spec file and write report + DOT files");
    run->add_option("spec", spec_path, "path to the JSON spec")->required();
    run->add_option("--out", out_dir, "output directory (default: current)");
    run->add_option("--budget", budget, "enumeration budget: p^dim <= budget");
    run->add_option("--degree-cap", degree_cap, "rational factorization degree cap");

    CLI::App* validate = app.add_subcommand("validate", "parse and validate a spec file");
    validate->add_option("spec", spec_path, "path to the JSON spec")->required();

    std::string kind;
    CLI::App* explain = app.add_subcommand("explain", "describe a construction kind");
    explain->add_option("kind", kind, "construction kind (or 'all')")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (explain->parsed()) {
            if (kind == "all") {
                for (const auto& k : known_construction_kinds()) std::cout << explain_construction(k);
            } else {
                std::cout << explain_construction(kind);
            }
            return 0;
        }
        if (validate->parsed()) {
            std::ifstream in(spec_path);
            if (!in) {
                std::cerr << "cannot open '" << spec_path << "'\n";
                return 2;
            }
            Json spec;
            try {
                spec = Json::parse(in);
            } catch (const nlohmann::json::parse_error& e) {
                std::cerr << "parse error: " << e.what() << "\n";
                return 2;
            }
            validate_spec(spec);
            std::cout << "spec is valid\n";
            return 0;
        }
        // run
        RunOptions opts;
        opts.budget = budget > 0 ? budget : budget_from_environment();
        opts.degree_cap = degree_cap;
        opts.out_dir = out_dir;
        auto t0 = std::chrono::steady_clock::now();
        RunResult result = run_spec_file(spec_path, opts);
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        for (const auto& f : result.files_written) std::cout << "wrote " << f << "\n";
        const auto& status = result.report.at("status");
        std::cerr << "checks: " << result.report.at("checks").size() << ", failures: "
                  << status.at("mathematical_failures") << ", degraded: " << status.at("degraded")
                  << " (" << ms << " ms)\n";
        return result.exit_code;
    } catch (const spec_validation_error& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 2;
    } catch (const coalg_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
