#include <doctest.h>

#include <sstream>

#include "swr/cli.hpp"
#include "swr/families.hpp"
#include "swr/graph6.hpp"

using namespace swr;
using namespace swr::cli;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

template <class Fn>
Run capture(Fn&& fn) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = fn(out, err);
    return {code, out.str(), err.str()};
}

Run analyze(const std::string& input, AnalyzeOptions options = {}) {
    return capture([&](std::ostream& out, std::ostream& err) {
        std::istringstream in(input);
        return run_analyze(in, out, err, options);
    });
}

Run verify(const std::string& input, unsigned long ell, bool as_json = false) {
    return capture([&](std::ostream& out, std::ostream& err) {
        std::istringstream in(input);
        return run_verify(in, out, err, VerifyOptions{ell, as_json});
    });
}

std::vector<json> json_lines(const std::string& text) {
    std::vector<json> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(json::parse(line));
    return out;
}

std::string g6(const Graph& g) { return write_graph6(g); }

}  // namespace

TEST_CASE("parse_rational") {
    CHECK(parse_rational("3") == 3);
    CHECK(parse_rational("-7/2") == Rational(-7, 2));
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK(parse_rational("2.25") == Rational(9, 4));
    CHECK(parse_rational("-0.5") == Rational(-1, 2));
    CHECK(parse_rational("1e-3") == Rational(1, 1000));
    CHECK(parse_rational("1.5E2") == 150);
    CHECK(parse_rational(" 4 ") == 4);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1.2.3"), std::invalid_argument);
}

TEST_CASE("parse_exact_real") {
    CHECK(compare(parse_exact_real("1+sqrt(2)"), make_quadratic(1, 1, BigInt(2))) == 0);
    CHECK(compare(parse_exact_real("1/2 - 3/2*sqrt(5)"), make_quadratic(Rational(1, 2), Rational(-3, 2), BigInt(5))) == 0);
    CHECK(compare(parse_exact_real("-sqrt(3)"), make_quadratic(0, -1, BigInt(3))) == 0);
    CHECK(compare(parse_exact_real("2*sqrt(4)"), Rational(4)) == 0);
    CHECK(std::get<Rational>(parse_exact_real("-2")) == -2);
    CHECK_THROWS_AS(parse_exact_real("1+sqrt(2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_exact_real("sqrt(-2)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_exact_real("sqrt(1/2)"), std::invalid_argument);
}

TEST_CASE("to_json renders exact values") {
    CHECK(to_json(ExactReal(Rational(-7, 2))) == "-7/2");
    CHECK(to_json(make_quadratic(Rational(1, 2), Rational(3, 2), BigInt(5))) == json{{"a", "1/2"}, {"b", "3/2"}, {"d", 5}});
    const json p = to_json(SwrParams{2, BigInt(2), std::nullopt, BigInt(3)});
    CHECK(p["lambda"] == "2");
    CHECK(p["mu"].is_null());
    CHECK(p["nu"] == "3");
}

TEST_CASE("analyze: Petersen and C6") {
    const Run r = analyze(g6(petersen_graph()) + "\n" + g6(cycle_graph(6)) + "\n", {.json = true});
    CHECK(r.code == kOk);
    CHECK(r.err.empty());
    const auto recs = json_lines(r.out);
    REQUIRE(recs.size() == 2);

    const json& p = recs[0];
    CHECK(p["index"] == 1);
    CHECK(p["graph6"] == "IheA@GUAo");
    CHECK(p["n"] == 10);
    CHECK(p["regular"] == true);
    CHECK(p["k"] == 3);
    CHECK(p["connected"] == true);
    CHECK(p["distinct_eigenvalues"] == 3);
    CHECK(p["classification"] == json{{"type", "StronglyRegular"}, {"v", 10}, {"k", 3}, {"lambda", "0"}, {"mu", "1"}});
    CHECK(p["profile"] == json{{"type", "AllEll"}});
    REQUIRE(p["params"].size() == 4);
    CHECK(p["params"][1] == json{{"ell", 3}, {"swr", true}, {"lambda", "5"}, {"mu", "2"}, {"nu", "0"}});
    CHECK(p["spectrum"][0] == json{{"value", "3"}, {"multiplicity", 1}});

    const json& c = recs[1];
    CHECK(c["index"] == 2);
    CHECK(c["classification"]["type"] == "RegularFourEigenvalue");
    CHECK(c["profile"] == json{{"type", "NoneUpTo"}, {"bound", 99}});
    CHECK(c["params"][1]["swr"] == false);
    CHECK(c["params"][1].contains("witness"));
}

TEST_CASE("analyze: text and JSON report the same values") {
    const std::string input = "# corpus\n" + g6(petersen_graph()) + "\n\n" + g6(line_graph(heawood_graph())) + "\n" +
                              g6(clique_extension(cycle_graph(5), 3)) + "\n" + g6(path_graph(4)) + "\n";
    const Run as_json = analyze(input, {.ells = {2, 3, 5}, .json = true});
    const Run as_text = analyze(input, {.ells = {2, 3, 5}});
    REQUIRE(as_json.code == kOk);
    REQUIRE(as_text.code == kOk);
    std::string rendered;
    for (const json& rec : json_lines(as_json.out)) rendered += render_text(rec);
    CHECK(rendered == as_text.out);
    CHECK(as_text.out.find("profile: SingleEll(3)") != std::string::npos);
    CHECK(as_text.out.find("(1/2 + 3/2*sqrt(5))^2") != std::string::npos);
    CHECK(as_text.out.find("classification: StronglyRegular(10,3,0,1)") != std::string::npos);
}

TEST_CASE("analyze: scan bound and ell list") {
    const Run r = analyze(g6(cycle_graph(6)) + "\n", {.ells = {7}, .scan_bound = 11, .json = true});
    const auto recs = json_lines(r.out);
    REQUIRE(recs.size() == 1);
    CHECK(recs[0]["profile"] == json{{"type", "NoneUpTo"}, {"bound", 11}});
    REQUIRE(recs[0]["params"].size() == 1);
    CHECK(recs[0]["params"][0]["ell"] == 7);

    CHECK(analyze(g6(cycle_graph(6)) + "\n", {.ells = {1}}).code == kUsage);
}

TEST_CASE("analyze: empty input and parse failures") {
    const Run empty = analyze("");
    CHECK(empty.code == kOk);
    CHECK(empty.out.empty());

    const Run bad = analyze(g6(petersen_graph()) + "\nA`\n" + g6(cycle_graph(6)) + "\n", {.json = true});
    CHECK(bad.code == kParseFailure);
    CHECK(bad.err.find("line 2") != std::string::npos);
    const auto recs = json_lines(bad.out);
    REQUIRE(recs.size() == 3);
    CHECK(recs[1].contains("error"));
    CHECK(recs[1]["line"] == 2);
    CHECK(recs[2]["classification"]["type"] == "RegularFourEigenvalue");
}

TEST_CASE("verify") {
    const Run p = verify(g6(petersen_graph()) + "\n", 3);
    CHECK(p.code == kOk);
    CHECK(p.out.find("PASS (5, 2, 0)") != std::string::npos);
    CHECK(p.out.find("spectral route: agree") != std::string::npos);

    const Run c = verify(g6(cycle_graph(6)) + "\n", 3, true);
    CHECK(c.code == kOk);
    const auto crec = json_lines(c.out);
    REQUIRE(crec.size() == 1);
    CHECK(crec[0]["pass"] == false);
    CHECK(crec[0].contains("witness"));
    CHECK(crec[0]["spectral_route"] == "agree");

    const Run k = verify(g6(complete_bipartite(4, 4)) + "\n", 3, true);
    const auto krec = json_lines(k.out);
    REQUIRE(krec.size() == 1);
    CHECK(krec[0]["pass"] == true);
    CHECK(krec[0]["params"] == json{{"ell", 3}, {"lambda", "16"}, {"mu", "0"}, {"nu", "0"}});

    const Run k4 = verify(g6(complete_graph(4)) + "\n", 2, true);
    CHECK(k4.code == kOk);
    const auto k4rec = json_lines(k4.out);
    CHECK(k4rec[0]["pass"] == true);
    CHECK(k4rec[0]["params"]["mu"].is_null());
    CHECK(k4rec[0]["resolved"]["mu"] == "0");

    CHECK(verify(g6(petersen_graph()) + "\n", 1).code == kUsage);
    CHECK(verify("garbage!\n", 3).code == kParseFailure);
}

TEST_CASE("construct") {
    auto run = [](std::vector<std::string> tokens) {
        return capture([&](std::ostream& out, std::ostream& err) { return run_construct(tokens, out, err); });
    };
    CHECK(run({"complete", "1"}).out == "@\n");
    const Run c = run({"complement-kmm-km", "2"});
    CHECK(c.code == kOk);
    CHECK(parse_graph6(c.out.substr(0, c.out.size() - 1)).order() == 8);
    const Run ce = run({"clique-ext", "paley", "5", "3"});
    CHECK(parse_graph6(ce.out.substr(0, ce.out.size() - 1)).order() == 15);
    CHECK(run({"petersen"}).out == "IheA@GUAo\n");
    CHECK(run({"paley", "7"}).code == kUsage);
    CHECK(run({"nonsense"}).code == kUsage);
}

TEST_CASE("search") {
    auto run = [](SearchCommand cmd) {
        return capture([&](std::ostream& out, std::ostream& err) { return run_search(cmd, out, err); });
    };
    const Run r = run({.ell = 3, .min = -4, .max = 4});
    CHECK(r.code == kOk);
    CHECK(r.out.find("(3, -1, -2)") != std::string::npos);
    CHECK(r.out.find("(4, 0, -4)") != std::string::npos);
    const Run j = run({.ell = 5, .min = -3, .max = 3, .json = true});
    CHECK(json::parse(j.out)["hits"] == json{{1, 0, -1}, {2, 0, -2}, {3, 0, -3}});
    const Run none = run({.ell = 5, .min = 0, .max = 3});
    CHECK(none.code == kOk);
    CHECK(none.out.find("0 triple(s)") != std::string::npos);
    CHECK(run({.ell = 4, .min = -3, .max = 3}).code == kUsage);
}

TEST_CASE("solve-third") {
    auto run = [](SolveThirdCommand cmd) {
        return capture([&](std::ostream& out, std::ostream& err) { return run_solve_third(cmd, out, err); });
    };
    const Run r = run({.ell = 5, .theta2 = "-1", .theta3 = "-2", .tol = 1e-9});
    CHECK(r.code == kOk);
    CHECK(r.out.find("2.5567") != std::string::npos);
    CHECK(r.out.find("not exact") != std::string::npos);
    const json j = json::parse(run({.ell = 3, .theta2 = "2", .theta3 = "-3", .json = true}).out);
    CHECK(j["exact"] == true);
    CHECK(j["value"] == "1");
    CHECK(run({.ell = 3, .theta2 = "1", .theta3 = "-2"}).out.find("degenerate") != std::string::npos);
    CHECK(run({.ell = 4, .theta2 = "1", .theta3 = "-2"}).code == kUsage);
    CHECK(run({.ell = 5, .theta2 = "x", .theta3 = "-2"}).code == kUsage);
    CHECK(run({.ell = 5, .theta2 = "1", .theta3 = "-2", .tol = 0}).code == kUsage);
}

TEST_CASE("feasible") {
    auto run = [](FeasibleCommand cmd) {
        return capture([&](std::ostream& out, std::ostream& err) { return run_feasible(cmd, out, err); });
    };
    CHECK(run({.v = 27, .k = 6, .thetas = {"3", "0", "-3"}}).out == "(6, 12, 8)\n");
    CHECK(run({.v = 10, .k = 3, .thetas = {"2", "0", "-2"}}).out == "infeasible\n");
    CHECK(run({.v = 21, .k = 4, .thetas = {"1+sqrt(2)", "1-sqrt(2)", "-2"}}).out == "(6, 6, 8)\n");
    const json j = json::parse(run({.v = 8, .k = 4, .thetas = {"2", "0", "-2"}, .json = true}).out);
    CHECK(j["feasible"] == true);
    CHECK(j["multiplicities"] == json{"1", "3", "3"});
    CHECK(run({.v = 8, .k = 4, .thetas = {"2", "0"}}).code == kUsage);
    CHECK(run({.v = 4, .k = 2, .thetas = {"1", "0", "-1"}}).code == kUsage);
}
