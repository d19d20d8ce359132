#include <doctest.h>

#include <filesystem>
#include <initializer_list>
#include <string>
#include <vector>

#include <json.hpp>

#include "nbrw/cli.hpp"
#include "nbrw/generators.hpp"
#include "nbrw/graph_io.hpp"

namespace fs = std::filesystem;

namespace {

int run(std::initializer_list<std::string> args) {
    std::vector<std::string> store{"nbrw"};
    store.insert(store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : store) argv.push_back(s.data());
    return nbrw::run(static_cast<int>(argv.size()), argv.data());
}

struct TempDir {
    fs::path path;
    TempDir() : path(fs::temp_directory_path() / "nbrw_cli_test") {
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string operator/(const std::string& name) const { return (path / name).string(); }
};

nlohmann::json read_json(const std::string& path) { return nlohmann::json::parse(nbrw::read_text_file(path)); }

}  // namespace

TEST_CASE("gen writes a graph the library reads back, byte-identical on rerun") {
    TempDir dir;
    const auto a = dir / "a.json";
    CHECK(run({"gen", "fixture", "petersen", "-o", a}) == 0);
    CHECK(nbrw::read_graph_file(a) == nbrw::gen_fixture(nbrw::Fixture::petersen));
    const auto first = nbrw::read_text_file(a);
    CHECK(run({"gen", "fixture", "petersen", "-o", a}) == 0);
    CHECK(nbrw::read_text_file(a) == first);
    const auto b = dir / "b.json";
    CHECK(run({"gen", "fixture", "--name", "petersen", "-o", b}) == 0);
    CHECK(nbrw::read_graph_file(b) == nbrw::read_graph_file(a));

    const auto r = dir / "r.json";
    CHECK(run({"gen", "random", "--n", "20", "--d", "3", "--seed", "9", "-o", r}) == 0);
    auto j = read_json(r);
    CHECK(j["manifest"]["seeds"] == nlohmann::json::array({9}));
    CHECK_FALSE(j["manifest"].contains("wall_time_s"));
    CHECK(nbrw::read_graph_file(r) == nbrw::gen_random_regular({.n = 20, .d = 3, .seed = 9}));
}

TEST_CASE("analysis commands produce JSON and CSV") {
    TempDir dir;
    const auto g = dir / "g.json";
    REQUIRE(run({"gen", "fixture", "k4", "-o", g}) == 0);

    const auto spec = dir / "spec.json";
    CHECK(run({"spectrum", g, "-o", spec}) == 0);
    auto s = read_json(spec);
    CHECK(s["manifest"]["graph_fnv1a"] == nbrw::fnv1a_hex(nbrw::read_text_file(g)));

    const auto mix = dir / "mix.json", csv = dir / "mix.csv";
    CHECK(run({"--timing", "mix", g, "--t-max", "3", "--eta", "0.25", "--csv", csv, "-o", mix}) == 0);
    auto m = read_json(mix);
    CHECK(m["records"].size() == 3);
    CHECK(m["records"][0]["d_max"] == 0.25);
    CHECK(m["manifest"].contains("wall_time_s"));
    auto text = nbrw::read_text_file(csv);
    CHECK(text.rfind("t,d_max,d_mean,d2,N_t,lower_bound\n", 0) == 0);
    CHECK(text.find("1,0.25,0.25,") != std::string::npos);

    CHECK(run({"variance", g, "--t", "1,2", "-o", dir / "var.json"}) == 0);
    CHECK(run({"conjecture", g, "--t-max", "3", "--csv", dir / "c.csv", "-o", dir / "c.json"}) == 0);
    CHECK(nbrw::read_text_file(dir / "c.csv").rfind("t,W2,Nt,ratio,muR2,kestenR2\n", 0) == 0);
    CHECK(run({"diameter", g, "--xi", "1,2", "-o", dir / "d.json"}) == 0);
    CHECK(run({"density", g, "-o", dir / "den.json"}) == 0);
}

TEST_CASE("exit codes") {
    TempDir dir;
    CHECK(run({"mix", dir / "missing.json"}) == 2);
    CHECK(run({"mix"}) == 2);
    CHECK(run({"gen", "fixture", "dodecahedron"}) == 2);
    CHECK(run({"gen", "lps", "--p", "5", "--q", "15"}) == 2);
    CHECK(run({"frobnicate"}) == 2);
    CHECK(run({"verify", "--fixtures", "petersen", "-o", dir / "v.json"}) == 0);
    // K4 at xi = 1/2 exceeds the real-radius almost-diameter bound.
    CHECK(run({"verify", "--fixtures", "k4", "-o", dir / "v.json"}) == 1);
    auto rows = read_json(dir / "v.json");
    bool found = false;
    for (const auto& r : rows["rows"]) {
        if (r["status"] == "fail") {
            CHECK(r["claim"] == "almost_diameter_tail xi=0.5");
            found = true;
        }
    }
    CHECK(found);
}
