#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "swr/bigint.hpp"
#include "swr/engine.hpp"
#include "swr/graph.hpp"
#include "swr/surd.hpp"

namespace swr::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kParseFailure = 2,
    kCrossCheck = 3,
};

/// "3", "-7/2" or a decimal such as "2.25", converted exactly.
Rational parse_rational(std::string_view text);
/// A rational, or "a+b*sqrt(d)" / "a-b*sqrt(d)" / "b*sqrt(d)".
ExactReal parse_exact_real(std::string_view text);

nlohmann::json to_json(const ExactReal& x);
nlohmann::json to_json(const Spectrum& s);
nlohmann::json to_json(const Classification& c);
nlohmann::json to_json(const SwrProfile& p);
nlohmann::json to_json(const SwrParams& p);
nlohmann::json to_json(const WalkWitness& w);

struct AnalyzeOptions {
    std::vector<unsigned long> ells{2, 3, 4, 5};
    unsigned long scan_bound = kDefaultScanBound;
    bool json = false;
};

/// One analysis record (field names fixed by docs/analysis.schema.json).
nlohmann::json analysis_record(const Graph& g, std::size_t index, const std::string& graph6,
                               const AnalyzeOptions& options);

/// Text rendering of an analysis record.
std::string render_text(const nlohmann::json& record);

/// Reads graph6 lines ("#" comments and blank lines skipped) and writes one
/// record per graph in input order.
int run_analyze(std::istream& in, std::ostream& out, std::ostream& err, const AnalyzeOptions& options);

struct VerifyOptions {
    unsigned long ell = 3;
    bool json = false;
};

int run_verify(std::istream& in, std::ostream& out, std::ostream& err, const VerifyOptions& options);

int run_construct(const std::vector<std::string>& tokens, std::ostream& out, std::ostream& err);

struct SearchCommand {
    unsigned long ell = 3;
    long min = -10;
    long max = 10;
    bool all_signs = false;
    bool json = false;
};
int run_search(const SearchCommand& cmd, std::ostream& out, std::ostream& err);

struct SolveThirdCommand {
    unsigned long ell = 5;
    std::string theta2;
    std::string theta3;
    double tol = 1e-9;
    unsigned long max_denominator = 64;
    bool json = false;
};
int run_solve_third(const SolveThirdCommand& cmd, std::ostream& out, std::ostream& err);

struct FeasibleCommand {
    unsigned long v = 0;
    unsigned long k = 0;
    std::vector<std::string> thetas;
    bool json = false;
};
int run_feasible(const FeasibleCommand& cmd, std::ostream& out, std::ostream& err);

}  // namespace swr::cli
