#include "zetacan/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

using namespace zetacan;

namespace {

namespace fs = std::filesystem;

struct Result {
    int code = -1;
    std::string out;
};

Result run_cli(const std::string& args)
{
    static int counter = 0;
    const fs::path out = fs::temp_directory_path() / ("zetacan_cli_" + std::to_string(::getpid()) + "_" +
                                                      std::to_string(counter++) + ".txt");
    const std::string cmd = std::string(ZETACAN_CLI_PATH) + " " + args + " > " + out.string() + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    Result r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(out);
    std::stringstream ss;
    ss << in.rdbuf();
    r.out = ss.str();
    fs::remove(out);
    return r;
}

int count_lines(const std::string& s)
{
    int n = 0;
    for (char c : s)
        n += c == '\n';
    return n;
}

}  // namespace

TEST_CASE("config validation")
{
    cli::RunConfig c;
    CHECK_NOTHROW(cli::validate(c));
    c.m = -1;
    CHECK_THROWS_AS(cli::validate(c), cli::ConfigError);
    c = {};
    c.quad_tol = 0.0;
    CHECK_THROWS_AS(cli::validate(c), cli::ConfigError);
    c = {};
    c.k_max = 0;
    CHECK_THROWS_AS(cli::validate(c), cli::ConfigError);
}

TEST_CASE("exit codes")
{
    CHECK(run_cli("zeta --m -1").code == cli::exit_config);
    CHECK(run_cli("zeta --route spline").code == cli::exit_config);
    CHECK(run_cli("frobnicate").code == cli::exit_config);
    CHECK(run_cli("verify --suite nonsense").code == cli::exit_config);
    CHECK(run_cli("verify --suite quadrature").code == cli::exit_ok);
}

TEST_CASE("spectrum output")
{
    const Result csv = run_cli("spectrum --m 0 --n-max 5 --k-max 10 --format csv");
    CHECK(csv.code == 0);
    CHECK(count_lines(csv.out) == 101);
    CHECK(csv.out.rfind("m,n,k,lambda,multiplicity,residual\n0,1,1,1.84118378134065", 0) == 0);

    const Result a = run_cli("spectrum --m 2 --n-max 4 --k-max 6");
    const Result b = run_cli("spectrum --m 2 --n-max 4 --k-max 6");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    const nlohmann::json j = nlohmann::json::parse(a.out);
    CHECK(j["m"] == 2);
    CHECK(j["harmonic_multiplicity"] == 3);
    CHECK(j["entries"].size() == 30);
}

TEST_CASE("zeta and torsion output")
{
    const Result z = run_cli("zeta --m 3");
    REQUIRE(z.code == 0);
    const nlohmann::json j = nlohmann::json::parse(z.out);
    CHECK(j["zeta0_exact"] == "-13/6");
    CHECK(std::fabs(j["zeta0"].get<double>() + 13.0 / 6.0) < 1e-15);
    const double expected = zetareg::canonical_closed_form(3).derivative;
    CHECK(std::fabs(j["zeta0_prime"].get<double>() - expected) < 1e-12);

    const Result t = run_cli("torsion --m 1 --format csv");
    REQUIRE(t.code == 0);
    std::istringstream is(t.out);
    std::string header, row;
    std::getline(is, header);
    std::getline(is, row);
    CHECK(header == "m,Tg,zeta0_prime,discrepancy");
    const double tg = std::stod(row.substr(2));
    CHECK(std::fabs(tg - zetareg::canonical_closed_form(1).derivative) < 1e-10);
}

TEST_CASE("output file")
{
    const fs::path out = fs::temp_directory_path() / ("zetacan_out_" + std::to_string(::getpid()) + ".json");
    CHECK(run_cli("zeta --m 0 --out " + out.string()).code == 0);
    std::ifstream in(out);
    const nlohmann::json j = nlohmann::json::parse(in);
    CHECK(j["command"] == "zeta");
    fs::remove(out);
}

TEST_CASE("verify in process")
{
    cli::RunConfig c;
    c.suite = "special";
    std::ostringstream os;
    CHECK(cli::cmd_verify(c, os) == cli::exit_ok);
    CHECK(os.str().find("PASS  special") != std::string::npos);
    CHECK_THROWS_AS(cli::run_suite("nonsense"), cli::ConfigError);
    CHECK(cli::suite_names().size() == 6);
}
