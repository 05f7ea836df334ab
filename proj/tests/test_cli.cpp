#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wep4/cli.hpp"
#include "wep4/errors.hpp"

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace wep4;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

std::filesystem::path scratch()
{
    const auto dir = std::filesystem::temp_directory_path() / "wep4_cli_test";
    std::filesystem::create_directories(dir);
    return dir;
}

} // namespace

TEST_CASE("lambda grammar")
{
    CHECK(parse_lambda("0") == Complex{0.0, 0.0});
    CHECK(parse_lambda("2.5") == Complex{2.5, 0.0});
    CHECK(parse_lambda("-3") == Complex{-3.0, 0.0});
    CHECK(parse_lambda("1+1i") == Complex{1.0, 1.0});
    CHECK(parse_lambda("1+i") == Complex{1.0, 1.0});
    CHECK(parse_lambda("0.5-2i") == Complex{0.5, -2.0});
    CHECK(parse_lambda("2i") == Complex{0.0, 2.0});
    CHECK(parse_lambda("-i") == Complex{0.0, -1.0});
    CHECK(parse_lambda("i") == Complex{0.0, 1.0});
    CHECK(parse_lambda("1e-3+2.5e1i") == Complex{1e-3, 25.0});
    CHECK(parse_lambda(".5") == Complex{0.5, 0.0});
    for (const char* bad : {"", " 1", "1 +i", "1+", "i2", "1+2j", "2i+1", "1++2i", "abc", "1+e5i", "+"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(parse_lambda(bad), UsageError);
    }
}

TEST_CASE("eval")
{
    const Run a = run({"eval", "--m", "1", "--n", "1", "--lambda", "0", "--point", "1,0"});
    CHECK(a.code == 0);
    CHECK(a.out == "0 0 2 0\n");

    const Run b = run({"eval", "--m", "1", "--n", "1", "--lambda", "1+1i", "--point", "1,0"});
    CHECK(b.out == "0 -2.6666666666666665 2 2\n");

    CHECK(run({"eval", "--m", "2", "--n", "1", "--point", "1,0"}).code == 2);
    CHECK(run({"eval", "--lambda", "1 + i", "--point", "1,0"}).code == 2);
    CHECK(run({"eval", "--point", "1;0"}).code == 2);
    CHECK(run({"eval"}).code == 2);
    CHECK(run({"eval", "--point", "0,0"}).code == 2);
    CHECK(run({"eval", "--bogus"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("verify exit codes")
{
    const Run ok = run({"verify", "--m", "1", "--n", "1", "--lambda", "1+1i", "--samples", "1000", "--seed", "42"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("nullity: 1001/1001 pass") != std::string::npos);
    CHECK(ok.out.find("all suites pass") != std::string::npos);
    CHECK(ok.out == run({"verify", "--m", "1", "--n", "1", "--lambda", "1+1i"}).out);

    const Run red = run({"verify", "--m", "1", "--n", "1", "--lambda", "0", "--samples", "200"});
    CHECK(red.code == 1);
    CHECK(red.out.find("fidelity: 0/1 FAIL") != std::string::npos);

    CHECK(run({"verify", "--m", "3", "--n", "5", "--lambda", "0.5-2i", "--samples", "200"}).code == 0);
}

TEST_CASE("report")
{
    const Run r = run({"report", "--m", "1", "--n", "3", "--lambda", "1+i", "--samples", "100"});
    CHECK(r.code == 0);
    CHECK(r.out.find("ex2_cart vs immersion: DEVIATES") != std::string::npos);
    CHECK(r.out.find("global factor +2") != std::string::npos);
}

TEST_CASE("info")
{
    const Run r = run({"info", "--m", "1", "--n", "1", "--lambda", "2"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["m"] == 1);
    CHECK(j["f"]["0"][0] == 2.0);
    CHECK(j["f"]["-4"][0] == -2.0);
    CHECK(j["h"]["1"][0] == 2.0);
    CHECK(j["X"].size() == 4);
    CHECK(j["X"][3]["2"][0] == 2.0);
    CHECK(j["X"][3]["-2"][0] == 2.0);
}

TEST_CASE("mesh and curvature files")
{
    const auto dir = scratch();
    const std::vector<std::string> args = {"mesh",    "--m",  "1",   "--n",       "3",   "--lambda",
                                           "1+1i",    "--rmin", "0.5", "--rmax",  "2",   "--nr",
                                           "80",      "--ntheta", "160", "--project", "xyz", "--format",
                                           "obj",     "--out",  (dir / "h13.obj").string()};
    CHECK(run(args).code == 0);
    const std::string first = slurp(dir / "h13.obj");
    CHECK(run(args).code == 0);
    CHECK(slurp(dir / "h13.obj") == first);
    CHECK(first.rfind("v ", 0) == 0);

    CHECK(run({"mesh", "--m", "1", "--n", "1"}).code == 2);
    CHECK(run({"mesh", "--project", "xxz", "--out", (dir / "a.obj").string()}).code == 2);
    CHECK(run({"mesh", "--format", "stl", "--out", (dir / "a.stl").string()}).code == 2);
    CHECK(run({"mesh", "--rmin", "0", "--out", (dir / "a.obj").string()}).code == 2);

    CHECK(run({"mesh", "--format", "csv", "--nr", "3", "--ntheta", "4", "--out", (dir / "m.csv").string()}).code == 0);
    CHECK(slurp(dir / "m.csv").rfind("u,v,x,y,z,w,E,K,regular\n", 0) == 0);

    const Run k = run({"curvature", "--m", "1", "--n", "1", "--lambda", "0", "--rmin", "0.5", "--rmax", "1.5", "--nr",
                       "3", "--ntheta", "4", "--out", (dir / "k.csv").string()});
    CHECK(k.code == 0);
    CHECK(slurp(dir / "k.csv").find("\n1,0,0,0,2,0,0,,0\n") != std::string::npos);
    CHECK(run({"curvature"}).code == 2);
    std::filesystem::remove_all(dir);
}

TEST_CASE("config file, overridden by flags")
{
    const auto dir = scratch();
    const auto cfg = dir / "cfg.json";
    std::ofstream(cfg) << R"({"m": 1, "n": 1, "lambda": "1+1i", "point": "1,0"})";
    const Run a = run({"eval", "--config", cfg.string()});
    CHECK(a.code == 0);
    CHECK(a.out == "0 -2.6666666666666665 2 2\n");
    const Run b = run({"eval", "--config", cfg.string(), "--lambda", "0"});
    CHECK(b.out == "0 0 2 0\n");

    std::ofstream(dir / "bad.json") << R"({"colour": 1})";
    CHECK(run({"eval", "--config", (dir / "bad.json").string()}).code == 2);
    std::ofstream(dir / "typed.json") << R"({"m": "one"})";
    CHECK(run({"eval", "--config", (dir / "typed.json").string(), "--point", "1,0"}).code == 2);
    CHECK(run({"eval", "--config", (dir / "none.json").string()}).code == 2);
    std::filesystem::remove_all(dir);
}

#ifdef WEP4_BINARY
TEST_CASE("binary: same argv gives the same stdout")
{
    const auto capture = [](const std::string& cmd) {
        std::string text;
        FILE* pipe = popen(cmd.c_str(), "r");
        REQUIRE(pipe != nullptr);
        char buf[4096];
        while (const std::size_t n = fread(buf, 1, sizeof buf, pipe)) {
            text.append(buf, n);
        }
        const int status = pclose(pipe);
        return std::pair{text, WEXITSTATUS(status)};
    };
    const std::string cmd = std::string(WEP4_BINARY) + " verify --m 1 --n 1 --lambda 1+1i --samples 1000 --seed 42";
    const auto a = capture(cmd);
    const auto b = capture(cmd);
    CHECK(a.second == 0);
    CHECK(a.first == b.first);
    CHECK(capture(std::string(WEP4_BINARY) + " eval --m 1 --n 1 --lambda 0 --point 1,0").first == "0 0 2 0\n");
    CHECK(capture(std::string(WEP4_BINARY) + " eval --m 2 2>/dev/null").second == 2);
}
#endif
