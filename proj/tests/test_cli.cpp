#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "bmhull/cli.hpp"

using namespace bmhull;

namespace {

struct CliResult {
    int code = 0;
    std::string out;
    std::string err;
};

CliResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines_of(const std::string& s) {
    std::vector<std::string> lines;
    std::stringstream ss(s);
    std::string line;
    while (std::getline(ss, line)) lines.push_back(line);
    return lines;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    return cells;
}
}  // namespace

TEST_CASE("constants subcommand emits the eight presets") {
    const CliResult r = run({"constants"});
    REQUIRE(r.code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 9);
    CHECK(lines[0] == "preset,value,route,est_abs_error");
    bool found_triangle = false;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto cells = split_csv(lines[i]);
        REQUIRE(cells.size() == 4);
        if (cells[0] == "triangle") {
            found_triangle = true;
            CHECK(std::abs(std::stod(cells[1]) - M_PI / std::sqrt(3.0)) < 1e-12);
            CHECK(cells[2] == "closed_form");
        }
    }
    CHECK(found_triangle);
    // 17 significant digits in the numeric cells
    CHECK(r.out.find("1.8137993642342178") != std::string::npos);
}

TEST_CASE("constants json output") {
    const CliResult r = run({"constants", "--format", "json"});
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("[\n", 0) == 0);
    CHECK(r.out.find("\"preset\": \"circle\"") != std::string::npos);
    CHECK(r.out.find("\"route\": \"quadrature\"") != std::string::npos);
    const CliResult again = run({"constants", "--format", "json"});
    CHECK(r.out == again.out);  // byte-identical
}

TEST_CASE("dist subcommand survival grid") {
    const CliResult r = run({"dist", "--shape", "strip", "--quantity", "survival", "--from",
                             "0.1", "--to", "5", "--points", "3"});
    REQUIRE(r.code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 4);
    CHECK(lines[0] == "t,value");
    CHECK(std::stod(split_csv(lines[1])[0]) == doctest::Approx(0.1));
    CHECK(std::stod(split_csv(lines[3])[0]) == doctest::Approx(5.0));

    const CliResult at1 = run({"dist", "--shape", "strip", "--quantity", "survival", "--from",
                               "1", "--to", "1", "--points", "1"});
    REQUIRE(at1.code == 0);
    const auto v = split_csv(lines_of(at1.out)[1]);
    CHECK(std::stod(v[1]) == doctest::Approx(0.37077742979952391).epsilon(1e-12));
}

TEST_CASE("dist laplace uses a lambda column") {
    const CliResult r = run({"dist", "--shape", "disk", "--quantity", "laplace", "--from", "0",
                             "--to", "2", "--points", "2"});
    REQUIRE(r.code == 0);
    const auto lines = lines_of(r.out);
    CHECK(lines[0] == "lambda,value");
    CHECK(std::stod(split_csv(lines[1])[1]) == doctest::Approx(1.0));
    CHECK(std::stod(split_csv(lines[2])[1]) == doctest::Approx(0.43867627983704874));
}

TEST_CASE("dist rejects unsupported quantities with exit 2") {
    const CliResult r =
        run({"dist", "--shape", "disk", "--quantity", "survival", "--from", "1", "--to", "2"});
    CHECK(r.code == 2);
    CHECK(!r.err.empty());
    const CliResult c =
        run({"dist", "--shape", "cone60", "--quantity", "laplace", "--from", "1", "--to", "2"});
    CHECK(c.code == 2);
    const CliResult bad = run({"dist", "--shape", "heptagon", "--quantity", "survival",
                               "--from", "1", "--to", "2"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("halfplane") != std::string::npos);  // names valid shapes
}

TEST_CASE("bessel3 shape parses its level") {
    const CliResult r = run({"dist", "--shape", "bessel3=0.5", "--quantity", "laplace",
                             "--from", "1", "--to", "1", "--points", "1"});
    REQUIRE(r.code == 0);
    const double v = std::stod(split_csv(lines_of(r.out)[1])[1]);
    CHECK(v == doctest::Approx(3.0 * std::sinh(0.5) / std::sinh(1.5)).epsilon(1e-12));
}

TEST_CASE("mellin subcommand") {
    const CliResult r = run({"mellin", "--s", "1"});
    REQUIRE(r.code == 0);
    const auto lines = lines_of(r.out);
    CHECK(lines[0] == "s,value");
    CHECK(std::stod(split_csv(lines[1])[1]) == doctest::Approx(1.0 / 18.0).epsilon(1e-12));
    CHECK(run({"mellin", "--s", "-1"}).code == 2);
}

TEST_CASE("simulate determinism across thread counts") {
    const std::vector<std::string> base = {"simulate", "--omega", "perp",     "--steps", "256",
                                           "--paths",  "300",     "--seed",   "11",      "--time",
                                           "1",        "--method", "hull"};
    auto with_threads = [&](const char* n) {
        std::vector<std::string> args = base;
        args.push_back("--threads");
        args.push_back(n);
        return run(args);
    };
    const CliResult one = with_threads("1");
    const CliResult four = with_threads("4");
    REQUIRE(one.code == 0);
    CHECK(one.out == four.out);
    CHECK(lines_of(one.out)[0] ==
          "omega,method,mean,std_error,n_paths,n_steps,total_time");
}

TEST_CASE("simulate accepts comma-separated degrees") {
    const CliResult named = run({"simulate", "--omega", "perp", "--steps", "128", "--paths",
                                 "100", "--seed", "3", "--threads", "1", "--format", "json"});
    const CliResult degs = run({"simulate", "--omega", "0,90", "--steps", "128", "--paths",
                                "100", "--seed", "3", "--threads", "1", "--format", "json"});
    REQUIRE(named.code == 0);
    REQUIRE(degs.code == 0);
    auto mean_of = [](const std::string& out) {
        const auto pos = out.find("\"mean\": ");
        REQUIRE(pos != std::string::npos);
        return std::stod(out.substr(pos + 8));
    };
    // same angle set up to rounding of the degree conversion
    CHECK(mean_of(named.out) == doctest::Approx(mean_of(degs.out)).epsilon(1e-12));

    // a comma-bearing omega label is quoted in csv output
    const CliResult csv = run({"simulate", "--omega", "0,90", "--steps", "64", "--paths", "50",
                               "--seed", "3", "--threads", "1"});
    REQUIRE(csv.code == 0);
    CHECK(lines_of(csv.out)[1].rfind("\"0,90\",hull,", 0) == 0);

    CHECK(run({"simulate", "--omega", "nope", "--steps", "64", "--paths", "50"}).code == 2);
    const CliResult msg = run({"simulate", "--omega", "nope", "--steps", "64", "--paths", "50"});
    CHECK(msg.err.find("three-quarters") != std::string::npos);
}

TEST_CASE("verify subcommand exit codes") {
    const CliResult ok =
        run({"verify", "--steps", "1024", "--paths", "400", "--seed", "2718", "--tol", "0.1"});
    CHECK(ok.code == 0);
    const auto lines = lines_of(ok.out);
    REQUIRE(lines.size() == 9);
    CHECK(lines[0] == "preset,mc,std_error,analytic,rel_err,pass");
    for (std::size_t i = 1; i < lines.size(); ++i)
        CHECK(split_csv(lines[i])[5] == "true");

    const CliResult fail =
        run({"verify", "--steps", "64", "--paths", "40", "--seed", "1", "--tol", "0.0001"});
    CHECK(fail.code == 1);
    CHECK(fail.out.find("false") != std::string::npos);

    const CliResult same =
        run({"verify", "--steps", "1024", "--paths", "400", "--seed", "2718", "--tol", "0.1"});
    CHECK(ok.out == same.out);
}

TEST_CASE("output file option") {
    const std::string path = "/tmp/bmhull_cli_test_output.csv";
    std::remove(path.c_str());
    const CliResult r = run({"constants", "--output", path});
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream f(path);
    REQUIRE(f.good());
    std::string header;
    std::getline(f, header);
    CHECK(header == "preset,value,route,est_abs_error");
    std::remove(path.c_str());
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"constants", "--format", "xml"}).code == 2);
    CHECK(run({"dist", "--shape", "strip"}).code == 2);  // missing required flags
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("thread count comes from the environment when the flag is absent") {
    const std::vector<std::string> args = {"simulate", "--omega", "two",  "--steps", "128",
                                           "--paths",  "200",    "--seed", "13"};
    setenv("BMHULL_THREADS", "3", 1);
    const CliResult via_env = run(args);
    unsetenv("BMHULL_THREADS");
    std::vector<std::string> with_flag = args;
    with_flag.insert(with_flag.end(), {"--threads", "1"});
    const CliResult via_flag = run(with_flag);
    REQUIRE(via_env.code == 0);
    CHECK(via_env.out == via_flag.out);  // worker count never changes results
}
