#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hermjost/config.hpp"
#include "hermjost/errors.hpp"
#include "hermjost/pipeline.hpp"

using namespace hermjost;
using namespace hermjost::config;

namespace {

std::vector<std::vector<std::string>> read_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) break;
        std::vector<std::string> cells;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        rows.push_back(cells);
    }
    return rows;
}

int run(const RunConfig& cfg, std::string& out, std::string& err) {
    std::ostringstream o, e;
    const int rc = pipeline::run_pipeline(cfg, o, e);
    out = o.str();
    err = e.str();
    return rc;
}

}  // namespace

TEST_CASE("parse a full config") {
    const auto cfg = parse_config("c=power:0.1:0.5\nb=zero\nlambda=-4:4:201\nn_max=4000\nout=density\n");
    CHECK(cfg.lambda_min == -4.0);
    CHECK(cfg.lambda_max == 4.0);
    CHECK(cfg.points == 201);
    CHECK(cfg.n_max == 4000);
    CHECK(cfg.wants(Output::density));
    CHECK(cfg.format == Format::csv);
    CHECK(cfg.spec.c(4) == doctest::Approx(0.05));
    const auto g = cfg.lambda_grid();
    CHECK(g.size() == 201);
    CHECK(g.front() == -4.0);
    CHECK(g.back() == 4.0);
    CHECK(g[100] == 0.0);
}

TEST_CASE("config validation names the field") {
    auto field_of = [](const std::string& text) {
        try {
            parse_config(text);
        } catch (const ConfigError& e) {
            return e.field();
        }
        return std::string("<none>");
    };
    CHECK(field_of("c=power:0.1:-0.5") == "c");
    CHECK(field_of("lambda=4:-4:201") == "lambda");
    CHECK(field_of("lambda=-4:4:1") == "lambda");
    CHECK(field_of("tol=1e-3") == "tol");
    CHECK(field_of("tol=1e-13") == "tol");
    CHECK(field_of("colour=blue") == "colour");
    CHECK(field_of("out=density,plots") == "out");
    CHECK(field_of("format=xml") == "format");
    CHECK(field_of("b=power:0.2") == "b");
    CHECK(field_of("c=file:/nonexistent/table.txt") == "c");
}

TEST_CASE("config syntax errors carry the line") {
    try {
        parse_config("c=zero\n\nthis line has no equals sign\n");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(e.line() == 3);
    }
    try {
        parse_config("c=zero\nc=zero\n");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(e.line() == 2);
    }
    try {
        parse_config("# comment\nn_max=abc\n");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(e.line() == 2);
        CHECK(e.field() == "n_max");
    }
}

TEST_CASE("family syntax") {
    CHECK(parse_family("zero", false).is_zero());
    CHECK(parse_family("const:2", false)(7) == 2.0);
    CHECK(parse_family("sqrtshift:1", false)(3) == doctest::Approx(2.0 - std::sqrt(3.0)));
    const auto l = parse_family("list:0.5,0.25", true);
    CHECK(l(1) == 0.5);
    CHECK(l(3) == 0.0);
    CHECK_THROWS_AS(parse_family("power:1", false), ConfigError);
    CHECK_THROWS_AS(parse_family("gauss:1", false), ConfigError);

    const std::string path = "hermjost_test_table.txt";
    {
        std::ofstream f(path);
        f << "1 0.1 0.3\n2 0.2 0.4\n";
    }
    CHECK(parse_family("file:" + path, false)(2) == 0.2);
    CHECK(parse_family("file:" + path, true)(1) == 0.3);
    CHECK(parse_family("file:" + path, true, jacobi::Family::power(1.0, 2.0))(3) == doctest::Approx(1.0 / 9.0));
    std::remove(path.c_str());
}

TEST_CASE("set_entry overrides") {
    auto e = parse_entries("c=zero\ntol=1e-10\n");
    set_entry(e, "tol", "1e-8");
    set_entry(e, "seed", "42");
    const auto cfg = make_config(e);
    CHECK(cfg.tol == 1e-8);
    CHECK(cfg.seed == 42);
}

TEST_CASE("free density rows") {
    auto cfg = parse_config("lambda=-4:4:201\n");
    std::string out, err;
    REQUIRE(run(cfg, out, err) == pipeline::exit_ok);
    const auto rows = read_csv(out);
    REQUIRE(rows.size() == 202);
    CHECK(rows[0] == std::vector<std::string>{"lambda", "re_F", "im_F", "re_F1", "im_F1", "im_m", "rho",
                                              "terms_used"});
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const double lam = std::stod(rows[i][0]);
        const double rho = std::stod(rows[i][6]);
        CHECK(std::abs(rho - std::exp(-0.5 * lam * lam) / std::sqrt(2.0 * M_PI)) < 1e-10);
        CHECK(rows[i][1] == "1");
    }
    CHECK(out.find('\r') == std::string::npos);
}

TEST_CASE("csv round trip is exact") {
    auto cfg = parse_config("c=power:0.1:0.5\nb=power:0.2:1\nlambda=-1:1:3\nout=density,jost\n");
    const auto r = pipeline::compute(cfg);
    REQUIRE(r.status == pipeline::exit_ok);
    std::ostringstream o;
    pipeline::write_csv(cfg, r, o);
    const auto rows = read_csv(o.str());
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].back() == "identity_residual");
    for (std::size_t i = 0; i < 3; ++i) {
        const auto& row = r.rows[i];
        CHECK(std::stod(rows[i + 1][0]) == row.lambda);
        CHECK(std::stod(rows[i + 1][1]) == row.F.real());
        CHECK(std::stod(rows[i + 1][2]) == row.F.imag());
        CHECK(std::stod(rows[i + 1][4]) == row.F1.imag());
        CHECK(std::stod(rows[i + 1][6]) == row.rho);
        CHECK(row.identity_residual < 1e-8);
    }
}

TEST_CASE("output is independent of the thread count") {
    const std::string base = "c=power:0.1:0.5\nb=power:0.2:1\nlambda=-2:2:9\nout=density,limit-formula\nn_max=500\n";
    std::string a, b, err;
    REQUIRE(run(parse_config(base + "threads=1\n"), a, err) == 0);
    REQUIRE(run(parse_config(base + "threads=4\n"), b, err) == 0);
    CHECK(a == b);
}

TEST_CASE("non-admissible spec exits with 3") {
    std::string out, err;
    CHECK(run(parse_config("c=const:1.0\n"), out, err) == pipeline::exit_admissibility);
    CHECK(err.find("diverges") != std::string::npos);
    CHECK(out.empty());
}

TEST_CASE("json output") {
    auto cfg = parse_config("lambda=-1:1:3\nformat=json\nout=density,asymptotics-check\n");
    std::string out, err;
    REQUIRE(run(cfg, out, err) == 0);
    const auto j = nlohmann::json::parse(out);
    CHECK(j["rows"].size() == 3);
    CHECK(j["rows"][1]["rho"].get<double>() == doctest::Approx(1.0 / std::sqrt(2.0 * M_PI)));
    CHECK(j["asymptotics"].size() == 8);
}

TEST_CASE("asymptotics table") {
    const auto t = pipeline::asymptotics_table();
    REQUIRE(t.size() == 8);
    for (const auto& row : t) {
        CHECK(row.n.size() == 5);
        CHECK(row.rel_error.size() == 5);
        CHECK(std::isfinite(row.slope));
    }
    CHECK(pipeline::loglog_slope({1, 4, 16}, {1.0, 0.5, 0.25}) == doctest::Approx(-0.5));
}

TEST_CASE("number formatting") {
    CHECK(pipeline::format_number(0.1) == "0.10000000000000001");
    CHECK(pipeline::format_number(-4.0) == "-4");
    CHECK(std::stod(pipeline::format_number(M_PI)) == M_PI);
}
