#include "cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const std::string data_dir = CHAMBERED_DATA_DIR;

std::string graph(const std::string& name) {
    return data_dir + "/graphs/" + name + ".json";
}

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = chambered::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name, const std::string& contents) {
    const fs::path dir = fs::temp_directory_path() / "chambered_cli_test";
    fs::create_directories(dir);
    const fs::path p = dir / name;
    std::ofstream(p) << contents;
    return p;
}

} // namespace

TEST_CASE("gmatrix") {
    const Run p = run({"gmatrix", "--graph", graph("A2_affine"), "--word", "1", "--family", "P"});
    REQUIRE(p.code == 0);
    const json j = json::parse(p.out);
    CHECK(j["matrix"] == json::parse(R"([["-1","0","0"],["1","1","0"],["1","0","1"]])"));
    CHECK(j["word"] == json::parse("[1]"));
    CHECK(p.err.empty());

    const Run id = run({"gmatrix", "--graph", graph("A2_affine"), "--word", ""});
    REQUIRE(id.code == 0);
    CHECK(json::parse(id.out)["matrix"] ==
          json::parse(R"([["1","0","0"],["0","1","0"],["0","0","1"]])"));

    const Run r = run({"gmatrix", "--graph", graph("A2_affine"), "--word", "1", "--family", "R"});
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out)["matrix"] ==
          json::parse(R"([["1","0","0"],["-1","-1","0"],["-1","0","-1"]])"));

    const Run all = run({"gmatrix", "--graph", graph("A2_affine"), "--length", "2", "--family", "both"});
    REQUIRE(all.code == 0);
    CHECK(json::parse(all.out).size() == 20);

    const Run csv = run({"gmatrix", "--graph", graph("A1_affine"), "--word", "1", "--format", "csv"});
    REQUIRE(csv.code == 0);
    CHECK(csv.out == "family,word,row,c1,c2\nP,1,1,-1,0\nP,1,2,2,1\n");
}

TEST_CASE("locate") {
    const Run a = run({"locate", "--graph", graph("A1_affine"), "--", "-1", "3"});
    REQUIRE(a.code == 0);
    const json j = json::parse(a.out);
    CHECK(j["family"] == "P");
    CHECK(j["word"] == json::parse("[1]"));
    CHECK(j["transformed"] == json::parse(R"(["1","1"])"));

    const Run b = run({"locate", "--graph", graph("A1_affine"), "--", "1", "1"});
    REQUIRE(b.code == 0);
    CHECK(json::parse(b.out)["word"] == json::array());

    const Run c = run({"locate", "--graph", graph("A2_affine"), "--", "1/2", "-3", "7/3"});
    REQUIRE(c.code == 0);

    const Run zero = run({"locate", "--graph", graph("A1_affine"), "--", "1", "-1"});
    CHECK(zero.code == 4);
    CHECK(zero.out.empty());
    CHECK(zero.err.find("critical hyperplane") != std::string::npos);
}

TEST_CASE("exit codes") {
    CHECK(run({"gmatrix", "--graph", graph("A2"), "--word", "1"}).code == 3);
    CHECK(run({"certify", "--graph", graph("A2")}).code == 3);
    CHECK(run({"gmatrix", "--graph", graph("A2_affine"), "--word", "4"}).code == 2);
    CHECK(run({"gmatrix", "--graph", graph("A2_affine"), "--word", "1 x"}).code == 2);
    CHECK(run({"gmatrix", "--graph", graph("A2_affine"), "--family", "Q", "--word", "1"}).code == 2);
    CHECK(run({"locate", "--graph", graph("A2_affine"), "--", "1", "2"}).code == 2);
    CHECK(run({"locate", "--graph", graph("A2_affine"), "--", "1", "2", "0.5"}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"certify", "--graph", graph("A1_affine"), "--count", "0"}).code == 2);

    CHECK(run({"gmatrix", "--graph", scratch("bad.json", "{ nope").string(), "--word", ""}).code == 2);
    CHECK(run({"gmatrix", "--graph", scratch("range.json", R"({"vertices":2,"edges":[[1,3]]})").string(),
               "--word", ""}).code == 2);
    CHECK(run({"gmatrix", "--graph", scratch("loop.json", R"({"vertices":2,"edges":[[1,1],[1,2]]})").string(),
               "--word", ""}).code == 2);

    const Run missing = run({"gmatrix", "--graph", "/nonexistent/g.json", "--word", ""});
    CHECK(missing.code == 5);
    CHECK(missing.err.find("/nonexistent/g.json") != std::string::npos);
    const Run unwritable = run({"fan-export", "--graph", graph("A1_affine"), "--length", "0",
                                "--out", "/nonexistent/dir/out.json"});
    CHECK(unwritable.code == 5);
    CHECK(unwritable.err.find("/nonexistent/dir/out.json") != std::string::npos);
}

TEST_CASE("certify report") {
    const Run c = run({"certify", "--graph", graph("A2_affine"), "--length", "3", "--trunc", "8",
                       "--count", "500"});
    CHECK(c.code == 0);
    const json j = json::parse(c.out);
    CHECK(j["passed"] == true);
    std::vector<std::string> names;
    for (const auto& check : j["checks"])
        names.push_back(check["name"]);
    CHECK(names == std::vector<std::string>{"representation", "null_root", "distinct",
                                            "interiors_disjoint", "half_space", "mutation_hasse",
                                            "locate_consistency", "coverage", "oracle_agreement"});
    // Timings go to stderr only, so stdout is reproducible.
    const Run again = run({"certify", "--graph", graph("A2_affine"), "--length", "3", "--trunc",
                           "8", "--count", "500"});
    CHECK(again.out == c.out);

    const Run fail = run({"certify", "--graph", graph("A2_affine"), "--length", "3", "--trunc", "4",
                          "--count", "10"});
    CHECK(fail.code == 1);
    CHECK(json::parse(fail.out)["passed"] == false);
    CHECK(fail.err.find("FAIL oracle_agreement") != std::string::npos);
}

TEST_CASE("fan-export") {
    const Run a1 = run({"fan-export", "--graph", graph("A1_affine"), "--length", "1"});
    REQUIRE(a1.code == 0);
    const json cells = json::parse(a1.out);
    REQUIRE(cells.size() == 6);
    int p_cells = 0;
    for (const auto& c : cells)
        p_cells += c["family"] == "P";
    CHECK(p_cells == 3);
    CHECK(cells[0]["vertices"] == json::parse(R"([["1","0"],["0","1"]])"));

    const Run a2 = run({"fan-export", "--graph", graph("A2_affine"), "--length", "2"});
    REQUIRE(a2.code == 0);
    CHECK(json::parse(a2.out).size() == 20);
    CHECK(a2.out == run({"fan-export", "--graph", graph("A2_affine"), "--length", "2"}).out);

    const fs::path out = fs::temp_directory_path() / "chambered_cli_test" / "slice.json";
    const Run file = run({"fan-export", "--graph", graph("A2_affine"), "--length", "0", "--out",
                          out.string()});
    REQUIRE(file.code == 0);
    CHECK(file.out.empty());
    std::ifstream in(out);
    const json written = json::parse(in);
    REQUIRE(written.size() == 2);
    CHECK(written[0]["walls"].size() == 3);
}

TEST_CASE("enumerate, roots and oracle") {
    const Run e = run({"enumerate", "--graph", graph("A2_affine"), "--length", "5"});
    REQUIRE(e.code == 0);
    CHECK(json::parse(e.out)["size"] == 46);

    const Run roots = run({"roots", "--graph", graph("A1_affine"), "--length", "1"});
    REQUIRE(roots.code == 0);
    CHECK(json::parse(roots.out).size() == 6);

    const Run o = run({"oracle", "--graph", graph("A1_affine"), "--word", "1", "--trunc", "8"});
    REQUIRE(o.code == 0);
    const json j = json::parse(o.out);
    CHECK(j["agrees"] == true);
    CHECK(j["columns"][0]["p0"] == json::parse("[0,2]"));
    CHECK(j["columns"][0]["p1"] == json::parse("[1,0]"));
}
