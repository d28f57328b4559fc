#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "motivic/cli.hpp"
#include "motivic/json_io.hpp"

using motivic::json::Json;

namespace {

const std::string kData = MOTIVIC_DATA_DIR;

struct Result {
    int code;
    std::string out;
};

Result run(std::vector<std::string> args)
{
    std::ostringstream out;
    const int code = motivic::cli::run(args, out);
    return {code, out.str()};
}

std::string data(const std::string& name) { return kData + "/" + name; }

std::string temp_path(const std::string& name)
{
    return (std::filesystem::temp_directory_path() / ("motivic-test-" + name)).string();
}

std::string write_temp(const std::string& name, const std::string& content)
{
    const auto path = temp_path(name);
    std::ofstream(path) << content;
    return path;
}

std::string read(const std::string& path)
{
    std::ifstream in(path);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

} // namespace

TEST_CASE("vanishing on the coordinate cross")
{
    const auto r = run({"vanishing", data("xy-datum.json")});
    CHECK(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["phi"] == Json::parse(R"({"terms":[{"coeff":{"1":1},"factors":[]}]})"));
    CHECK(j["phi_regular"] == Json::parse(R"({"terms":[]})"));
}

TEST_CASE("realize the Euler characteristic of vanishing output")
{
    const auto phi = temp_path("phi.json");
    CHECK(run({"vanishing", data("x3-datum.json"), "--out", phi}).code == 0);
    const auto r = run({"realize", "--chi-c", phi});
    CHECK(r.code == 0);
    CHECK(r.out == "-2\n");
    std::remove(phi.c_str());
}

TEST_CASE("invalid orbit is a validation failure")
{
    const auto r = run({"normalize", data("bad-orbit.json")});
    CHECK(r.code == 1);
    CHECK(Json::parse(r.out)["error"] == "validation");
}

TEST_CASE("parse and io failures exit with 2")
{
    const auto garbage = write_temp("garbage.json", "{not json");
    auto r = run({"normalize", garbage});
    CHECK(r.code == 2);
    CHECK(Json::parse(r.out)["error"] == "parse");

    r = run({"normalize", temp_path("does-not-exist.json")});
    CHECK(r.code == 2);
    CHECK(Json::parse(r.out)["error"] == "io");

    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"convolve", data("orbit-square.json")}).code == 2);
    CHECK(run({"realize", data("orbit-square.json")}).code == 2);
    CHECK(run({"realize", "--chi-c", "--e-poly", data("orbit-square.json")}).code == 2);
    std::remove(garbage.c_str());
}

TEST_CASE("convolve, pretty and normalize")
{
    const auto o = data("orbit-square.json");
    auto r = run({"--pretty", "convolve", o, o});
    CHECK(r.code == 0);
    CHECK(r.out == "(L - 1) + 2*[mu_2]\n");
    r = run({"convolve", o, o, "--pretty"});
    CHECK(r.out == "(L - 1) + 2*[mu_2]\n");
    r = run({"normalize", o});
    CHECK(Json::parse(r.out) == Json::parse(R"({"terms":[{"coeff":{"0":1},"factors":[{"orb":2}]}]})"));
}

TEST_CASE("assoc-check report")
{
    const auto o = data("orbit-square.json");
    const auto r = run({"assoc-check", o, o, o});
    CHECK(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["symbolic"] == true);
    CHECK(j["chi_consistent"] == true);
}

TEST_CASE("measure, star-a1 and ts-check")
{
    auto r = run({"--pretty", "measure", data("blowup-p2.json")});
    CHECK(r.out == "{0 -> L^2 + L}\n");
    r = run({"--pretty", "measure", data("blowup-p2-tilde.json")});
    CHECK(r.out == "{0 -> L^2 + L}\n");
    r = run({"--pretty", "measure", data("lefschetz-a1.json")});
    CHECK(r.out == "{}\n");

    const auto a1 = temp_path("a1.json");
    CHECK(run({"measure", data("measure-x2.json"), "--out", a1}).code == 0);
    r = run({"--pretty", "star-a1", a1, a1});
    CHECK(r.code == 0);
    CHECK(r.out == "{0 -> L}\n");
    r = run({"realize", "--chi-c", a1});
    CHECK(r.out == "-1\n");
    std::remove(a1.c_str());

    r = run({"ts-check", data("x2-datum.json"), data("x2-datum.json"), data("xy-datum.json")});
    CHECK(r.code == 0);
    CHECK(Json::parse(r.out)["equal"] == true);
}

TEST_CASE("realize the E-polynomial")
{
    const auto gm = write_temp("gm.json", R"({"terms":[{"coeff":{"1":1,"0":-1},"factors":[]}]})");
    auto r = run({"realize", "--e-poly", gm});
    CHECK(r.code == 0);
    CHECK(Json::parse(r.out) == Json::parse(R"j({"epoly":{"(0,0)":-1,"(1,1)":1}})j"));

    const auto cubic = write_temp("cubic.json", R"({"terms":[{"coeff":1,"factors":[{"fer":[3,3]}]}]})");
    r = run({"realize", "--e-poly", cubic});
    CHECK(r.code == 1);
    CHECK(Json::parse(r.out)["error"] == "realization");
    std::remove(gm.c_str());
    std::remove(cubic.c_str());
}

TEST_CASE("oracle subcommand")
{
    auto r = run({"oracle", "--fer", "2", "2", "--q", "7"});
    CHECK(r.code == 0);
    CHECK(r.out == "4\n");
    r = run({"oracle", "--fer", "2", "2", "--q", "4"});
    CHECK(r.code == 1);
    CHECK(Json::parse(r.out)["error"] == "validation");
    setenv("MOTIVIC_ORACLE_BUDGET", "10", 1);
    r = run({"oracle", "--fer", "2", "2", "--q", "13"});
    unsetenv("MOTIVIC_ORACLE_BUDGET");
    CHECK(r.code == 1);
    CHECK(Json::parse(r.out)["error"] == "budget");
}

TEST_CASE("output is deterministic")
{
    const std::vector<std::string> args = {"ts-check", data("x2-datum.json"), data("x2-datum.json"),
                                           data("xy-datum.json")};
    CHECK(run(args).out == run(args).out);
}
