// swrtool: strongly walk-regular graph analysis from the command line.

#include <fstream>
#include <iostream>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "swr/cli.hpp"

namespace {

using namespace swr::cli;

// "-" means stdin.
int with_input(const std::string& path, const std::function<int(std::istream&)>& fn) {
    if (path == "-") return fn(std::cin);
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot read " << path << "\n";
        return kParseFailure;
    }
    return fn(in);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Strongly walk-regular graph toolkit"};
    app.require_subcommand(1);

    AnalyzeOptions analyze;
    std::string analyze_path;
    auto* cmd_analyze = app.add_subcommand("analyze", "Spectrum, classification and SWR profile per graph6 record");
    cmd_analyze->add_option("path", analyze_path, "graph6 file, one record per line ('-' for stdin)")->required();
    cmd_analyze->add_option("--ell-list", analyze.ells, "Walk lengths for the parameter table")->delimiter(',');
    cmd_analyze->add_option("--scan-bound", analyze.scan_bound, "Largest odd ell searched for a single hit");
    cmd_analyze->add_flag("--json", analyze.json, "JSON Lines output");

    VerifyOptions verify;
    std::string verify_path;
    auto* cmd_verify = app.add_subcommand("verify", "Walk-count test plus matrix identity check at one ell");
    cmd_verify->add_option("path", verify_path, "graph6 file ('-' for stdin)")->required();
    cmd_verify->add_option("--ell", verify.ell, "Walk length (>= 2)")->required();
    cmd_verify->add_flag("--json", verify.json, "JSON Lines output");

    std::vector<std::string> family;
    std::string output_path;
    auto* cmd_construct = app.add_subcommand("construct", "Write one graph6 line for a named family");
    cmd_construct->add_option("family", family, "Family expression, e.g. 'clique-ext paley 5 3'")->required();
    cmd_construct->add_option("-o,--output", output_path, "Output file (default stdout)");

    SearchCommand search;
    auto* cmd_search = app.add_subcommand("search", "Integer eigenvalue triples satisfying the ell-walk condition");
    cmd_search->add_option("--ell", search.ell, "Odd walk length >= 3")->required();
    cmd_search->add_option("--min", search.min, "Smallest eigenvalue")->required();
    cmd_search->add_option("--max", search.max, "Largest eigenvalue")->required();
    cmd_search->add_flag("--all-signs", search.all_signs, "Also scan triples with theta3 >= 0");
    cmd_search->add_flag("--json", search.json, "JSON output");

    SolveThirdCommand solve;
    auto* cmd_solve = app.add_subcommand("solve-third", "Remaining real theta1 for given ell, theta2, theta3");
    cmd_solve->add_option("--ell", solve.ell, "Odd walk length >= 3")->required();
    cmd_solve->add_option("--theta2", solve.theta2, "Rational, e.g. -1 or 3/2")->required();
    cmd_solve->add_option("--theta3", solve.theta3, "Rational")->required();
    cmd_solve->add_option("--tol", solve.tol, "Bracket width");
    cmd_solve->add_option("--max-den", solve.max_denominator, "Largest denominator tried for an exact root");
    cmd_solve->add_flag("--json", solve.json, "JSON output");

    FeasibleCommand feasible;
    auto* cmd_feasible = app.add_subcommand("feasible", "Eigenvalue multiplicities from v, k and three eigenvalues");
    cmd_feasible->add_option("--v", feasible.v, "Vertex count")->required();
    cmd_feasible->add_option("--k", feasible.k, "Valency")->required();
    cmd_feasible->add_option("--thetas", feasible.thetas, "Three eigenvalues; surds as a+b*sqrt(d)")->required()->expected(3);
    cmd_feasible->add_flag("--json", feasible.json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    if (cmd_analyze->parsed()) {
        return with_input(analyze_path, [&](std::istream& in) { return run_analyze(in, std::cout, std::cerr, analyze); });
    }
    if (cmd_verify->parsed()) {
        return with_input(verify_path, [&](std::istream& in) { return run_verify(in, std::cout, std::cerr, verify); });
    }
    if (cmd_construct->parsed()) {
        if (output_path.empty()) return run_construct(family, std::cout, std::cerr);
        std::ofstream out(output_path);
        if (!out) {
            std::cerr << "error: cannot write " << output_path << "\n";
            return kUsage;
        }
        return run_construct(family, out, std::cerr);
    }
    if (cmd_search->parsed()) return run_search(search, std::cout, std::cerr);
    if (cmd_solve->parsed()) return run_solve_third(solve, std::cout, std::cerr);
    if (cmd_feasible->parsed()) return run_feasible(feasible, std::cout, std::cerr);
    return kUsage;
}
