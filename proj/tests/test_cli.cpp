#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

namespace {

using Json = nlohmann::ordered_json;

struct Run {
    int code = -1;
    std::string out;
};

Run mpp(const std::string& args)
{
    const std::string cmd = std::string(MPP_BINARY) + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe);
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string data(const std::string& name) { return std::string(MPP_TEST_DATA) + "/" + name; }

std::set<std::string> point_set(const Json& points)
{
    std::set<std::string> s;
    for (const auto& p : points) s.insert(p.dump());
    return s;
}

}  // namespace

TEST_CASE("vertices of the running example")
{
    const auto dd = mpp("vertices " + data("running_example.json") + " --t generic --method dd");
    REQUIRE(dd.code == 0);
    const auto j = Json::parse(dd.out);
    CHECK(j["vertices"].size() == 14);
    CHECK(j["parameter"] == Json{{"p", "1/4"}, {"q", "1/2"}, {"r", "3/4"}});

    const auto trop = Json::parse(mpp("vertices " + data("running_example.json") + " --t generic --method tropical").out);
    const auto brute = Json::parse(mpp("vertices " + data("running_example.json") + " --t generic --method bruteforce").out);
    CHECK(point_set(trop["vertices"]) == point_set(j["vertices"]));
    CHECK(point_set(brute["vertices"]) == point_set(j["vertices"]));

    const auto order = Json::parse(mpp("vertices " + data("running_example.json") + " --projected").out);
    CHECK(order["vertices"].size() == 11);
    CHECK(order["coordinates"] == Json{"p", "q", "r"});

    CHECK(mpp("vertices " + data("running_example.json") + " --t " + data("t_running_example.json") + " --method tropical").code == 0);
    CHECK(mpp("vertices " + data("running_example.json") + " --partition " + data("partition_running_example.json") + " --method tropical").code == 3);
}

TEST_CASE("output is deterministic")
{
    for (const std::string args : {"vertices " + data("running_example.json") + " --t generic", "subdivision " + data("running_example.json"),
                                   "sweep " + data("running_example.json") + " --check hibi-li"}) {
        const auto a = mpp(args);
        const auto b = mpp(args);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("hrep and fvector")
{
    const auto raw = Json::parse(mpp("hrep " + data("running_example.json") + " --t " + data("t_running_example.json")).out);
    CHECK(raw["hrep"]["equations"].size() == 4);
    CHECK(raw["hrep"]["inequalities"].size() == 10);
    CHECK(raw["hrep"]["inequalities"][0]["origin"].get<std::string>().rfind("chain:", 0) == 0);

    const auto facets =
        Json::parse(mpp("hrep " + data("running_example.json") + " --partition " + data("partition_running_example.json") + " --irredundant --projected").out);
    CHECK(facets["partition"] == Json{{"C", {"p", "q"}}, {"O", {"r"}}});
    CHECK(facets["hrep"]["equations"].empty());
    CHECK(facets["hrep"]["inequalities"].size() <= 10);

    const auto f = Json::parse(mpp("fvector " + data("running_example.json") + " --t generic").out);
    CHECK(f["fvector"][0] == 14);

    const auto off = std::filesystem::temp_directory_path() / "mpp_cli_test.off";
    CHECK(mpp("fvector " + data("running_example.json") + " --off " + off.string()).code == 0);
    std::ifstream in(off);
    std::string first;
    in >> first;
    CHECK(first == "OFF");
}

TEST_CASE("ehrhart and lattice points")
{
    const auto e = Json::parse(mpp("ehrhart " + data("chain.json") + " --dilations 4").out);
    CHECK(e["ehrhart"]["coefficients"] == Json{"1", "3", "2"});
    CHECK(e["ehrhart"]["counts"].size() == 5);
    const auto pts = Json::parse(mpp("lattice-points " + data("chain.json") + " --projected").out);
    CHECK(pts["points"].size() == 6);
}

TEST_CASE("sweeps")
{
    const auto e = Json::parse(mpp("sweep " + data("running_example.json") + " --check ehrhart").out);
    CHECK(e["results"].size() == 8);
    CHECK(e["status"] == "PASS");
    for (const char* check : {"types", "domination", "tame", "hibi-li", "conjecture5"}) {
        const auto r = mpp("sweep " + data("running_example.json") + " --check " + check);
        CHECK(r.code == 0);
        CHECK(Json::parse(r.out)["status"] == "PASS");
    }
    CHECK(mpp("sweep " + data("running_example.json") + " --check nonsense").code == 2);
}

TEST_CASE("degenerations")
{
    const auto pent = Json::parse(mpp("degenerate --pentagon").out);
    CHECK(pent["source"]["fvector"] == Json{5, 5});
    CHECK(pent["target"]["fvector"] == Json{4, 4});
    CHECK(pent["status"] == "PASS");

    const auto d = Json::parse(mpp("degenerate " + data("running_example.json") + " --partition " + data("partition_running_example.json")).out);
    CHECK(d["status"] == "PASS");
    CHECK(d["map"].size() == d["source"]["faces"].size());
    CHECK(mpp("degenerate " + data("running_example.json")).code == 2);
}

TEST_CASE("regularize and tame")
{
    const auto r = Json::parse(mpp("regularize " + data("constant_interval.json")).out);
    CHECK(r["poset"]["elements"] == Json{"a~b~p", "q", "c"});
    CHECK(r["map"]["p"] == "a~b~p");
    CHECK(r["regular"] == true);

    const auto path = std::filesystem::temp_directory_path() / "mpp_cli_regular.json";
    {
        std::ofstream out(path);
        out << r["poset"].dump();
    }
    const auto again = Json::parse(mpp("regularize " + path.string()).out);
    CHECK(again["poset"] == r["poset"]);

    const auto t = Json::parse(mpp("tame " + data("chain.json")).out);
    CHECK(t["tame"] == true);
    CHECK(t["ranked"] == true);
}

TEST_CASE("error handling")
{
    const auto bad = mpp("hrep " + data("bad_marking.json"));
    CHECK(bad.code == 2);
    const auto j = Json::parse(bad.out);
    CHECK(j["error"]["kind"] == "validation");
    CHECK(j["error"]["violations"][0].get<std::string>().rfind("marking not order-preserving", 0) == 0);

    CHECK(mpp("hrep " + data("missing.json")).code == 2);
    CHECK(mpp("").code == 2);
    CHECK(mpp("vertices " + data("running_example.json") + " --method simplex").code == 2);
    CHECK(mpp("vertices " + data("running_example.json") + " --t generic --partition " + data("partition_running_example.json")).code == 2);
    CHECK(mpp("degenerate " + data("running_example.json") + " --t " + data("partition_running_example.json") + " --to generic").code == 2);
}
