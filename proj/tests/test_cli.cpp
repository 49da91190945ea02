#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "iaa/curve.hpp"
#include "iaa/dataset_io.hpp"
#include "iaa/film_study.hpp"
#include "iaa/similarity.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

RunResult run_cli(const std::string& args, const std::string& env = "") {
    static int counter = 0;
    const fs::path out = fs::path("cli_tmp") / ("out" + std::to_string(counter));
    const fs::path err = fs::path("cli_tmp") / ("err" + std::to_string(counter));
    ++counter;
    fs::create_directories("cli_tmp");

    std::string cmd = env;
    if (!env.empty()) cmd += " ";
    cmd += std::string(IAA_CLI_PATH) + " " + args + " >" + out.string() + " 2>" + err.string();
    const int raw = std::system(cmd.c_str());

    RunResult r;
    r.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
}

const std::string& films_csv() {
    static const std::string path = [] {
        fs::create_directories("cli_tmp");
        iaa::save_dataset_csv(iaa::film_dataset(), "cli_tmp/films.csv");
        return std::string("cli_tmp/films.csv");
    }();
    return path;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string l;
    while (std::getline(in, l))
        if (!l.empty()) lines.push_back(l);
    return lines;
}

}  // namespace

TEST_CASE("no subcommand fails with a diagnostic") {
    const auto r = run_cli("");
    CHECK(r.exit_code != 0);
}

TEST_CASE("missing input file exits with code 2") {
    const auto r = run_cli("build -i no_such_survey.csv");
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("no_such_survey.csv") != std::string::npos);
    CHECK(lines_of(r.err).size() == 1);  // single-line diagnostic
}

TEST_CASE("build emits one curve per item") {
    const auto r = run_cli("build -i " + films_csv());
    REQUIRE(r.exit_code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 10);
    const auto first = iaa::parse_curve_json(lines.front());
    CHECK(first.label == "Film A");
    CHECK(first.n == 5);
    REQUIRE(first.regions.size() == 1);
    CHECK(first.regions[0] == iaa::Region{1, 1, 1});
}

TEST_CASE("build --transpose emits critic curves") {
    const auto r = run_cli("build -i " + films_csv() + " --transpose");
    REQUIRE(r.exit_code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 5);
    CHECK(iaa::parse_curve_json(lines.front()).label == "Critic 1");
    CHECK(iaa::parse_curve_json(lines.front()).n == 10);
}

TEST_CASE("attrs prints the attribute panel") {
    const auto r = run_cli("attrs -i " + films_csv());
    REQUIRE(r.exit_code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 11);  // header + ten films
    CHECK(lines[0].find("area") != std::string::npos);
    CHECK(lines[0].find("agreement_ratio") != std::string::npos);
    CHECK(lines[1].rfind("Film A,", 0) == 0);

    const auto rj = run_cli("attrs -i " + films_csv() + " -f json");
    REQUIRE(rj.exit_code == 0);
    CHECK(rj.out.find("\"agreement_ratio\"") != std::string::npos);
}

TEST_CASE("sim writes the film matrix") {
    const auto r =
        run_cli("sim -i " + films_csv() + " --range global:1:10 -o cli_tmp/matrix.csv");
    REQUIRE(r.exit_code == 0);
    const std::string csv = slurp("cli_tmp/matrix.csv");
    const auto rows = lines_of(csv);
    REQUIRE(rows.size() == 11);

    // row for Film A, column for Film I (position 9 after the label)
    std::istringstream row(rows[1]);
    std::string cell;
    std::vector<std::string> cells;
    while (std::getline(row, cell, ',')) cells.push_back(cell);
    REQUIRE(cells.size() == 11);
    CHECK(cells[0] == "Film A");
    CHECK(std::abs(std::stod(cells[9]) - 0.7182) <= 5e-5);
    CHECK(std::stod(cells[1]) == 1.0);
}

TEST_CASE("sim runs are byte-identical") {
    const auto a = run_cli("sim -i " + films_csv() + " --range global:1:10");
    const auto b = run_cli("sim -i " + films_csv() + " --range global:1:10");
    REQUIRE(a.exit_code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("sim rejects a malformed range") {
    CHECK(run_cli("sim -i " + films_csv() + " --range global:ten").exit_code != 0);
    CHECK(run_cli("sim -i " + films_csv() + " --range global:5:5").exit_code != 0);
    CHECK(run_cli("sim -i " + films_csv() + " --perimeter sideways").exit_code != 0);
}

TEST_CASE("variant flags change the result") {
    const auto base = run_cli("sim -i " + films_csv() + " --range global:1:10");
    const auto literal =
        run_cli("sim -i " + films_csv() + " --range global:1:10 --perimeter literal");
    REQUIRE(base.exit_code == 0);
    REQUIRE(literal.exit_code == 0);
    CHECK(base.out != literal.out);
}

TEST_CASE("demo reports the variant sweep and crisp cells") {
    const auto r = run_cli("demo");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("<- best") != std::string::npos);
    CHECK(r.out.find("Variant-insensitive crisp cells") != std::string::npos);
    CHECK(r.out.find("Critic 2") != std::string::npos);

    const auto d = run_cli("demo --variants defaults");
    REQUIRE(d.exit_code == 0);
    CHECK(d.out.find("perimeter=closed,quartiles=halves,ar-loop=to2") != std::string::npos);
}

TEST_CASE("plot writes an svg and a breakpoint table per curve") {
    const auto r = run_cli("plot -i " + films_csv() + " -d cli_tmp/plots");
    REQUIRE(r.exit_code == 0);
    CHECK(fs::exists("cli_tmp/plots/Film_A.svg"));
    CHECK(fs::exists("cli_tmp/plots/Film_A.csv"));
    CHECK(fs::exists("cli_tmp/plots/Film_J.svg"));
    const std::string svg = slurp("cli_tmp/plots/Film_B.svg");
    CHECK(svg.find("<svg ") != std::string::npos);
    const std::string csv = slurp("cli_tmp/plots/Film_A.csv");
    CHECK(csv.rfind("x,mu", 0) == 0);
}

TEST_CASE("relative outputs respect the output directory variable") {
    const auto r = run_cli("sim -i " + films_csv() + " --range global:1:10 -o env_matrix.csv",
                           "IAA_OUTPUT_DIR=cli_tmp/envout");
    REQUIRE(r.exit_code == 0);
    CHECK(fs::exists("cli_tmp/envout/env_matrix.csv"));
}

TEST_CASE("weights subcommand produces loadable weights") {
    const auto r = run_cli(
        "weights --sets 30 --pairs 300 --repeats 2 -o cli_tmp/w.json --stability cli_tmp/s.csv");
    REQUIRE(r.exit_code == 0);
    const auto w = iaa::load_weights_json("cli_tmp/w.json");
    double norm2 = 0.0;
    for (double v : w.w) norm2 += v * v;
    CHECK(std::abs(norm2 - 1.0) <= 1e-6);
    CHECK(slurp("cli_tmp/s.csv").rfind("feature,", 0) == 0);
}
