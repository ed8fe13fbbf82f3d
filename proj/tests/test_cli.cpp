#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "fockasym/cli.hpp"
#include "fockasym/errors.hpp"
#include "json.hpp"

using namespace fockasym;
using namespace fockasym::cli;
using nlohmann::json;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = main_entry(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::string cell;
        std::istringstream ls(line);
        while (std::getline(ls, cell, ',')) {
            cells.push_back(cell);
        }
        if (!line.empty() && line.back() == ',') {
            cells.emplace_back();
        }
        rows.push_back(cells);
    }
    return rows;
}

std::filesystem::path temp_file(const std::string& name, const std::string& body) {
    const auto path = std::filesystem::temp_directory_path() / ("fockasym_cli_" + name);
    std::ofstream(path) << body;
    return path;
}

} // namespace

TEST_CASE("rationals parse as p/q and floats are rejected") {
    const auto c = parse_config({"lln", "--family", "custom", "--scalars", "2", "--grid", "1,2", "--t", "1/2"});
    CHECK(c.t == Rational(1, 2));
    CHECK(c.kind == ExperimentKind::Lln);
    CHECK_THROWS_AS(parse_config({"lln", "--family", "custom", "--scalars", "2", "--grid", "1", "--t", "0.5"}),
                    ParseError);
    CHECK_THROWS_AS(parse_config({"lln", "--family", "custom", "--scalars", "1e3", "--grid", "1"}), ParseError);
}

TEST_CASE("flags override the config file") {
    const auto path = temp_file("precedence.json", R"({"family": "custom", "scalars": "3", "grid": [1, 2, 3],
                                                      "t": "2"})");
    const auto fromFile = parse_config({"lln", "--config", path.string()});
    CHECK(fromFile.grid == std::vector<std::int64_t>{1, 2, 3});
    CHECK(fromFile.t == Rational(2));
    const auto overridden = parse_config({"lln", "--config", path.string(), "--grid", "4:10:3"});
    CHECK(overridden.grid == std::vector<std::int64_t>{4, 7, 10});
    CHECK(overridden.t == Rational(2));
    std::filesystem::remove(path);
}

TEST_CASE("config files reject unknown keys and float numbers") {
    const auto unknown = temp_file("unknown.json", R"({"family": "custom", "colour": "red"})");
    CHECK_THROWS_AS(parse_config({"lln", "--config", unknown.string()}), ParseError);
    const auto floaty = temp_file("float.json", R"({"family": "custom", "scalars": [0.25], "grid": [1]})");
    CHECK_THROWS_AS(parse_config({"lln", "--config", floaty.string()}), ParseError);
    std::filesystem::remove(unknown);
    std::filesystem::remove(floaty);
}

TEST_CASE("config invariants") {
    CHECK_THROWS_AS(parse_config({"lln", "--family", "custom", "--scalars", "1", "--grid", "3,2"}), InputError);
    CHECK_THROWS_AS(parse_config({"lln", "--family", "custom", "--scalars", "1", "--grid", "1", "--t", "0"}),
                    InputError);
    CHECK_THROWS_AS(parse_config({"lln", "--family", "quantum", "--q2", "1", "--mu", "1", "--grid", "1"}),
                    ParameterError);
    CHECK_THROWS_AS(parse_config({"lln", "--family", "custom", "--scalars", "1", "--grid", "1", "--bogus", "1"}),
                    ParseError);
    CHECK_THROWS_AS(parse_config({"lln", "--family", "other", "--grid", "1"}), ParseError);
    CHECK_THROWS_AS(parse_config({"boundary", "--K", "3"}), InputError);
}

TEST_CASE("partitions and boundary parameters parse in both spellings") {
    const auto c = parse_config({"lln", "--family", "unitary", "--omega", R"({"alphaPlus":["1/2"],"gammaPlus":"1"})",
                                 "--mu", "2,1;1", "--mu", "3", "--grid", "5"});
    REQUIRE(c.partitions.size() == 3);
    CHECK(c.partitions[0] == IntegerPartition({2, 1}));
    CHECK(c.partitions[2] == IntegerPartition({3}));
    CHECK(c.omega->gammaPlus == Rational(1));
    const auto a = parse_config({"boundary", "--nu", "prefix=[0,2];tail=3", "--q2", "1/3"});
    const auto b = parse_config({"boundary", "--nu", R"({"prefix":[0,2],"tail":3})", "--q2", "1/3"});
    CHECK(a.nu->prefix == b.nu->prefix);
    CHECK(a.nu->tail == 3);
    CHECK(a.out == OutputFormat::Json);
}

TEST_CASE("exact LLN case has an all-zero error column") {
    const auto r = invoke({"lln", "--family", "unitary", "--omega", R"({"alphaPlus":["1"]})", "--mu", "1", "--grid",
                           "10:200:10", "--t", "1", "--out", "csv"});
    REQUIRE(r.code == 0);
    const auto rows = csv_rows(r.out);
    REQUIRE(rows.size() == 21);
    CHECK(rows[0][6] == "abs_error_exact");
    for (std::size_t k = 1; k < rows.size(); ++k) {
        CHECK(rows[k][1] == std::to_string(10 * k));
        CHECK(rows[k][6] == "0");
        CHECK(rows[k][7] == "0");
    }
}

TEST_CASE("fourth scaled moment of a single Poisson process has error 1/L") {
    const auto r = invoke({"clt", "--family", "custom", "--scalars", "1", "--m", "4", "--grid", "5,10,20,40", "--t",
                           "1", "--normalization", "variance"});
    REQUIRE(r.code == 0);
    const auto rows = csv_rows(r.out);
    REQUIRE(rows.size() == 5);
    const std::vector<std::string> L{"5", "10", "20", "40"};
    for (std::size_t k = 0; k < L.size(); ++k) {
        CHECK(rows[k + 1][2] == L[k]);
        CHECK(rows[k + 1][5] == "3");
        CHECK(rows[k + 1][6] == "1/" + L[k]);
    }
    CHECK(rows[2][8] == "1");
}

TEST_CASE("boundary h-series of constant nu = 1 is 1 - t") {
    const auto r = invoke({"boundary", "--nu", "prefix=[];tail=1", "--q2", "1/4", "--K", "5"});
    REQUIRE(r.code == 0);
    const json doc = json::parse(r.out);
    CHECK(doc["boundary"]["h_exact"] == json({"1", "-1", "0", "0", "0", "0"}));
    CHECK(doc["metadata"]["versions"]["fockasym"] == "1.0.0");
    CHECK(doc["metadata"]["config"]["q2"] == "1/4");
}

TEST_CASE("moments table agrees with the compound Poisson oracle") {
    const auto r = invoke({"moments", "--family", "unitary", "--omega", R"({"alphaPlus":["1/2"],"betaPlus":["1/3"]})",
                           "--mu", "1;2", "--m", "3", "--grid", "3,6", "--t", "2/3"});
    REQUIRE(r.code == 0);
    const auto rows = csv_rows(r.out);
    REQUIRE(rows.size() == 3);
    for (std::size_t k = 1; k < rows.size(); ++k) {
        CHECK(rows[k][3] == rows[k][5]);
        CHECK(rows[k][6] == "0");
    }
}

TEST_CASE("JSON report mirrors the CSV columns") {
    const std::vector<std::string> base{"lln", "--family", "symmetric", "--thoma", R"({"alpha":["1/2","1/2"]})",
                                        "--rho", "2", "--grid", "10,20", "--tol", "1/10"};
    auto csvArgs = base;
    auto jsonArgs = base;
    jsonArgs.insert(jsonArgs.end(), {"--out", "json"});
    const auto csv = csv_rows(invoke(csvArgs).out);
    const json doc = json::parse(invoke(jsonArgs).out);
    const json& rows = doc["report"]["rows"];
    REQUIRE(rows.size() == 2);
    for (std::size_t k = 0; k < 2; ++k) {
        CHECK(rows[k]["value_exact"] == csv[k + 1][3]);
        CHECK(rows[k]["abs_error_exact"] == csv[k + 1][6]);
    }
    CHECK(rows[0]["value_exact"] == "1/3");
    CHECK(doc["report"]["passed"] == true);
    CHECK(doc["report"]["tolerance"] == "1/10");
}

TEST_CASE("reports are byte-identical across runs and thread counts") {
    const std::vector<std::string> args{"clt",  "--family", "quantum", "--nu", "prefix=[0];tail=2", "--q2", "1/3",
                                        "--mu", "1;2",      "--m",     "4",    "--grid", "2:8:2", "--out",  "json"};
    setenv("FOCK_ASYMPTOTICS_THREADS", "1", 1);
    const auto one = invoke(args);
    setenv("FOCK_ASYMPTOTICS_THREADS", "4", 1);
    const auto four = invoke(args);
    const auto again = invoke(args);
    unsetenv("FOCK_ASYMPTOTICS_THREADS");
    REQUIRE(one.code == 0);
    CHECK(one.out == four.out);
    CHECK(four.out == again.out);
}

TEST_CASE("exit codes and error records") {
    const auto usage = invoke({"lln", "--family", "custom", "--scalars", "0.5", "--grid", "1"});
    CHECK(usage.code == 2);
    CHECK(usage.out.empty());
    const json rec = json::parse(usage.err);
    CHECK(rec["error"]["type"] == "ParseError");
    CHECK(rec["error"]["exit"] == 2);

    CHECK(invoke({}).code == 2);
    CHECK(invoke({"frobnicate"}).code == 2);
    CHECK(invoke({"lln", "--family", "unitary", "--mu", "1", "--grid", "1"}).code == 2);

    const auto degenerate = invoke({"clt", "--family", "custom", "--scalars", "0", "--m", "2", "--grid", "1,2",
                                    "--normalization", "variance"});
    CHECK(degenerate.code == 3);
    CHECK(json::parse(degenerate.err)["error"]["type"] == "DegenerateError");

    const auto help = invoke({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("boundary") != std::string::npos);
}

TEST_CASE("report is written to --output") {
    const auto path = std::filesystem::temp_directory_path() / "fockasym_cli_report.csv";
    const auto r = invoke({"characters", "--family", "custom", "--scalars", "5/2", "--grid", "1,3", "--output",
                           path.string()});
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::stringstream text;
    text << in.rdbuf();
    const auto rows = csv_rows(text.str());
    REQUIRE(rows.size() == 3);
    CHECK(rows[1][3] == "5/2");
    std::filesystem::remove(path);
}
