#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>
#include <nlohmann/json.hpp>

#include "mesofringe/commands.hpp"
#include "mesofringe/config.hpp"

using namespace mesofringe;
using doctest::Approx;

namespace {

struct Result {
    int code = -1;
    std::string out;
    std::string err;
};

Result invoke(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    Result r;
    r.code = cli::run(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

struct Csv {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};

Csv parse_csv(const std::string& text) {
    Csv csv;
    std::istringstream in(text);
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream cells(line);
        std::string cell;
        if (first) {
            while (std::getline(cells, cell, ',')) csv.header.push_back(cell);
            first = false;
            continue;
        }
        std::vector<double> row;
        while (std::getline(cells, cell, ',')) row.push_back(std::stod(cell));
        csv.rows.push_back(row);
    }
    return csv;
}

std::filesystem::path scratch_dir() {
    const auto dir = std::filesystem::temp_directory_path() / "mesofringe_cli_test";
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("identical invocations give byte-identical output") {
    const std::vector<std::string> args{"decohere", "--preset", "presentation", "--gamma-t0", "0,1", "--points", "401"};
    const Result a = invoke(args);
    const Result b = invoke(args);
    REQUIRE(a.code == cli::kExitOk);
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());
}

TEST_CASE("exit codes") {
    CHECK(invoke({"pattern", "--points", "101"}).code == cli::kExitOk);
    CHECK(invoke({"--help"}).code == cli::kExitOk);
    CHECK(invoke({}).code == cli::kExitUsage);
    CHECK(invoke({"nonsense"}).code == cli::kExitUsage);
    CHECK(invoke({"pattern", "--set", "no_such_key=1"}).code == cli::kExitUsage);
    CHECK(invoke({"pattern", "--set", "separation_m=-1"}).code == cli::kExitUsage);
    CHECK(invoke({"pattern", "--points", "0"}).code == cli::kExitUsage);
    CHECK(invoke({"visibility", "--gamma-grid", "1:0:0"}).code == cli::kExitUsage);
    CHECK(invoke({"pattern", "--preset", "nowhere"}).code == cli::kExitUsage);
    CHECK(invoke({"ww", "--steps", "20"}).code == cli::kExitUsage);
    CHECK(invoke({"ww", "--steps", "200", "--halving-tol", "1e-14"}).code == cli::kExitNumerical);
}

TEST_CASE("decohere with no emission equals the far-field pattern") {
    const Result d = invoke({"decohere", "--preset", "presentation", "--gamma-t0", "0", "--mode", "approx", "--points", "501"});
    const Result p = invoke({"pattern", "--preset", "presentation", "--mode", "farfield", "--points", "501"});
    REQUIRE(d.code == 0);
    REQUIRE(p.code == 0);
    const Csv a = parse_csv(d.out);
    const Csv b = parse_csv(p.out);
    REQUIRE(a.rows.size() == 501);
    REQUIRE(b.rows.size() == 501);
    double peak = 0.0, worst = 0.0;
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        CHECK(a.rows[i][0] == b.rows[i][0]);
        peak = std::max(peak, b.rows[i][1]);
        worst = std::max(worst, std::abs(a.rows[i][1] - b.rows[i][1]));
    }
    CHECK(worst <= 1e-12 * peak);
}

TEST_CASE("several emission strengths give a long table") {
    const Result r = invoke({"decohere", "--preset", "presentation", "--gamma-t0", "0,1,2", "--points", "201"});
    REQUIRE(r.code == 0);
    const Csv csv = parse_csv(r.out);
    CHECK(csv.header.front() == "gamma_t0");
    CHECK(csv.rows.size() == 603);
}

TEST_CASE("a one-by-one visibility grid gives one row") {
    const Result r = invoke({"visibility", "--gamma-grid", "2", "--dl-grid", "0.84"});
    REQUIRE(r.code == 0);
    const Csv csv = parse_csv(r.out);
    REQUIRE(csv.rows.size() == 1);
    CHECK(csv.header == std::vector<std::string>{"gamma_t0", "d_over_lambda", "visibility"});
    CHECK(csv.rows[0][2] == Approx(std::exp(-2.0) + (1.0 - std::exp(-2.0)) * -0.159974955874014).epsilon(1e-12));
}

TEST_CASE("visibility slice") {
    const Result r = invoke({"visibility", "--slice", "gamma_t0=1", "--dl-grid", "0:1:11"});
    REQUIRE(r.code == 0);
    CHECK(parse_csv(r.out).rows.size() == 11);
}

TEST_CASE("ww without coupling stays excited; overlay gap at wide bandwidth") {
    const Result none = invoke({"ww", "--kernel", "none", "--t-max-over-gamma", "2"});
    REQUIRE(none.code == 0);
    for (const auto& row : parse_csv(none.out).rows) CHECK(row[3] == Approx(1.0).epsilon(1e-14));

    const Result wide = invoke({"ww", "--overlay", "--bandwidth-over-gamma", "100"});
    REQUIRE(wide.code == 0);
    const Csv csv = parse_csv(wide.out);
    REQUIRE(csv.header.size() == 7);
    double gap = 0.0;
    for (const auto& row : csv.rows) gap = std::max(gap, std::abs(row[3] - row[6]));
    CHECK(gap <= 0.02);
}

TEST_CASE("thermal report and sweep") {
    const Result r = invoke({"thermal"});
    REQUIRE(r.code == 0);
    const Csv csv = parse_csv(r.out);
    REQUIRE(csv.rows.size() == 2);
    CHECK(csv.rows[0][0] == 1.0);
    CHECK(std::abs(csv.rows[0][2] / 500.0 - 1.0) < 0.02);
    CHECK(std::abs(csv.rows[1][2] / 3700.0 - 1.0) < 0.02);

    const Result s = invoke({"thermal", "--sweep-d", "50nm:5um:3"});
    REQUIRE(s.code == 0);
    const Csv sweep = parse_csv(s.out);
    REQUIRE(sweep.rows.size() == 3);
    CHECK(sweep.rows[1][0] == Approx(500e-9).epsilon(1e-12));
    CHECK(std::abs(sweep.rows[1][1] / 2000.0 - 1.0) < 0.05);
}

TEST_CASE("json output carries meta and data") {
    const Result r = invoke({"visibility", "--gamma-grid", "0,1", "--dl-grid", "0.5", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["meta"]["command"] == "visibility");
    CHECK(doc["meta"]["config"].contains("separation_m"));
    CHECK(doc["data"]["visibility"].size() == 2);
    CHECK(doc["data"]["visibility"][1].get<double>() == Approx(std::exp(-1.0)).epsilon(1e-14));
}

TEST_CASE("config file, overrides and output file") {
    const auto dir = scratch_dir();
    const auto config = dir / "params.json";
    {
        std::ofstream f(config);
        f << R"({"preset": "presentation", "d_over_lambda": 0.5, "gamma_t0": 3})";
    }
    const cli::RunConfig cfg = cli::resolve_config(std::nullopt, config.string(), nlohmann::json::object());
    CHECK(cfg.preset == "presentation");
    CHECK(cli::get_number(cfg, "d_over_lambda") == 0.5);
    CHECK(cli::get_optional(cfg, "x_over_dx").value() == Approx(0.4));
    const cli::RunConfig over =
        cli::resolve_config(std::nullopt, config.string(), nlohmann::json{{"gamma_t0", 1.0}});
    CHECK(cli::get_number(over, "gamma_t0") == 1.0);

    const auto table = dir / "out.csv";
    std::filesystem::remove(table);
    const Result r = invoke({"decohere", "--config", config.string(), "--points", "101", "--out", table.string()});
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(table);
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(parse_csv(buf.str()).rows.size() == 101);
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        CHECK(entry.path().filename().string().find(".tmp") == std::string::npos);
    }

    const auto broken = dir / "broken.json";
    {
        std::ofstream f(broken);
        f << "{not json";
    }
    CHECK(invoke({"pattern", "--config", broken.string()}).code == cli::kExitUsage);
    CHECK(invoke({"pattern", "--config", (dir / "missing.json").string()}).code == cli::kExitUsage);
}

TEST_CASE("length and grid parsing") {
    CHECK(cli::parse_length("50nm") == Approx(50e-9));
    CHECK(cli::parse_length("5um") == Approx(5e-6));
    CHECK(cli::parse_length("1.5mm") == Approx(1.5e-3));
    CHECK(cli::parse_length("2e-7") == Approx(2e-7));
    const Eigen::VectorXd g = cli::parse_grid("1:100:3:log");
    REQUIRE(g.size() == 3);
    CHECK(g[1] == Approx(10.0).epsilon(1e-12));
    CHECK(cli::parse_grid("0.1,0.2").size() == 2);
    CHECK_THROWS_AS(cli::parse_grid("1:2:0"), cli::ConfigError);
    CHECK_THROWS_AS(cli::parse_length("12 parsecs"), cli::ConfigError);
}
