#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "doctest.h"
#include "json.hpp"

#ifndef RADIAL_CLI
#error "RADIAL_CLI must name the radial executable"
#endif

namespace {

struct Run {
    int status = -1;
    std::string out;
};

Run run(const std::string& args)
{
    const std::string cmd = std::string(RADIAL_CLI) + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

std::string slurp(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::string tmp(const std::string& name) { return std::string(RADIAL_TMP) + "/" + name; }

}  // namespace

TEST_CASE("construct2d exit codes")
{
    const Run strict = run("construct2d --radii 4,3,2,1 --strict");
    CHECK(strict.status == 0);
    const auto doc = nlohmann::json::parse(strict.out);
    CHECK(doc["points"].size() == 4);
    CHECK(doc["report"]["verdict"] == "Pass");
    CHECK(run("construct2d --radii 4,3,2,1").status == 2);
    CHECK(run("construct2d --radii 1,1,1,1,1,0.1").status == 1);
    CHECK(run("construct2d --radii 4,x,2").status == 1);
    CHECK(run("construct2d --radii 4,-3,2,1").status == 1);
    CHECK(run("construct2d").status == 1);
}

TEST_CASE("construct3d, render and verify round trip")
{
    const std::string json = tmp("pf.json"), off = tmp("pf.off");
    CHECK(run("construct3d --radii 4,4,4,3,3,3,2,2,2,1 --paper-faithful -o " + json + " --render " + off).status == 2);
    CHECK(run("construct3d --radii 4,4,4,3,3,3,2,2,2,1 --paper-faithful --strict").status == 0);
    CHECK(run("verify --input " + json).status == 2);
    const std::string mesh = slurp(off);
    CHECK(mesh.rfind("OFF\n10 ", 0) == 0);
    CHECK(run("construct3d --radii 4,3,2,1 --render " + tmp("x.svg")).status == 1);
    CHECK(run("construct3d --radii 2,2,2,1,1,1").status == 0);
}

TEST_CASE("verify rejects mixed dimensions")
{
    const std::string path = tmp("mixed.json");
    std::ofstream(path) << R"({"points": [[1, 0], [0, 1, 0], [-1, 0]], "radii": [1, 1, 1]})";
    CHECK(run("verify --input " + path).status == 1);
    std::ofstream(tmp("tri.json")) << R"({"points": [[2, 0], [3, 1], [3, -1]], "radii": [2, 3.1622776601683795, 3.1622776601683795]})";
    CHECK(run("verify --input " + tmp("tri.json")).status == 3);
}

TEST_CASE("slvd")
{
    const Run r = run("slvd --weights 0,0,0,0 --grid 10000");
    CHECK(r.status == 0);
    const auto doc = nlohmann::json::parse(r.out);
    for (const auto& v : doc["cells"]["verdicts"]) CHECK(v == "NonEmpty");
    CHECK(run("slvd --weights 0,0.2,1.6,0.1").status == 1);

    // Fifth circle dominated by the first: its cell is empty.
    const std::string path = tmp("dominated.json");
    std::ofstream(path) << R"({"centers": [[0.5773502691896258, 0.5773502691896258, 0.5773502691896258],
        [0.5773502691896258, -0.5773502691896258, -0.5773502691896258],
        [-0.5773502691896258, 0.5773502691896258, -0.5773502691896258],
        [-0.5773502691896258, -0.5773502691896258, 0.5773502691896258],
        [0.5773502691896258, 0.5773502691896258, 0.5773502691896258]],
        "weights": [0.5, 0.5, 0.5, 0.5, 0.1]})";
    CHECK(run("slvd --input " + path).status == 3);
}

TEST_CASE("probe")
{
    CHECK(run("probe --radii 1,1,1,1,1 --budget 10000").status == 0);
    const Run r = run("probe --radii 1,1,1,1,1,0.1 --budget 100000 --seed 3");
    CHECK((r.status == 0 || r.status == 3));
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc.contains("iterations"));
}

TEST_CASE("tolerance from the environment")
{
    CHECK(run("construct2d --radii 4,3,2,1 --strict --rel-eps 1e-7").status == 0);
    setenv("RADIAL_CONVEX_TOL", "1e-7", 1);
    const auto doc = nlohmann::json::parse(run("construct2d --radii 4,3,2,1 --strict").out);
    CHECK(doc["tolerance"]["rel_eps"] == 1e-7);
    setenv("RADIAL_CONVEX_TOL", "nope", 1);
    CHECK(run("construct2d --radii 4,3,2,1").status == 1);
    unsetenv("RADIAL_CONVEX_TOL");
}

TEST_CASE("identical input and seed give identical bytes")
{
    for (const std::string args : {"construct2d --radii 5,3,3,2,1,1 --strict --seed 4",
                                   "construct3d --radii 3,3,2,2,2,1,0.5 --seed 4",
                                   "slvd --weights 0.1,0.5,0.5,1.2,0.3 --grid 5000",
                                   "probe --radii 1,1,1,1,1,0.1 --budget 20000 --seed 11"}) {
        const Run a = run(args), b = run(args);
        CHECK(a.status == b.status);
        CHECK(a.out == b.out);
        CHECK(!a.out.empty());
    }
    CHECK(run("construct2d --radii 5,3,2,1 --strict --render " + tmp("a.svg")).status == 0);
    const std::string first = slurp(tmp("a.svg"));
    CHECK(run("construct2d --radii 5,3,2,1 --strict --render " + tmp("a.svg")).status == 0);
    CHECK(slurp(tmp("a.svg")) == first);
    CHECK(first.find("<svg") != std::string::npos);
}
