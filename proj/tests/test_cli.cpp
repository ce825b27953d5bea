#include "catch_amalgamated.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "lovasz/cli.hpp"
#include "lovasz/error.hpp"
#include "lovasz/generators.hpp"
#include "lovasz/io.hpp"

using namespace lovasz;

namespace {

struct Run
{
    int code = -1;
    std::string out;
    std::string err;

    io::Json json() const { return io::parse_text(out, "output"); }
};

Run run(std::vector<std::string> args, const std::string& stdin_text = "")
{
    args.insert(args.begin(), "lovasz");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    Run r;
    r.code = run_cli(static_cast<int>(argv.size()), argv.data(), in, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::string fixture(const std::string& name)
{
    return std::string(FIXTURE_DIR) + "/" + name;
}

std::string slurp(const std::string& path)
{
    std::ifstream file(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

}   // namespace

TEST_CASE("pretty printing is deterministic and compact for scalar arrays")
{
    io::Json j;
    j["b"] = 1;
    j["a"] = {1, 2, 3};
    j["nested"] = {{1, 2}, {3}};
    j["empty"] = io::Json::object();
    j["none"] = nullptr;
    CHECK(io::pretty(j) == "{\n  \"b\": 1,\n  \"a\": [1, 2, 3],\n  \"nested\": [\n    [1, 2],\n    [3]\n  ],\n"
                           "  \"empty\": {},\n  \"none\": null\n}\n");
}

TEST_CASE("parse errors carry a position")
{
    try
    {
        io::parse_text("{\n  \"n\": 3,\n  \"edges\": [[0, 1] [1, 2]]\n}", "bad.json");
        FAIL("expected a parse error");
    }
    catch (const ParseError& e)
    {
        CHECK(e.where().rfind("bad.json:3:", 0) == 0);
    }

    auto graph = [](const std::string& text) { return io::graph_from_json(io::parse_text(text, "t")); };
    CHECK_THROWS_WITH(graph(R"({"format": "graph", "version": 1, "n": 3, "edges": [[0, 3]]})"),
                      Catch::Matchers::ContainsSubstring("$.edges[0][1]"));
    CHECK_THROWS_WITH(graph(R"({"format": "graph", "version": 1, "n": 3, "edges": [[1, 0]]})"),
                      Catch::Matchers::ContainsSubstring("u < v"));
    CHECK_THROWS_WITH(graph(R"({"format": "graph", "version": 2, "n": 3, "edges": []})"),
                      Catch::Matchers::ContainsSubstring("$.version"));
    CHECK_THROWS_WITH(graph(R"({"format": "graph", "version": 1, "n": 3, "adjacency": [[1], [], []]})"),
                      Catch::Matchers::ContainsSubstring("asymmetric edge"));
    CHECK_THROWS_AS(graph(R"({"format": "graph", "version": 1, "n": 3, "edges": [[0, 1], [0, 1]]})"), ParseError);
    CHECK(graph(R"({"format": "graph", "version": 1, "n": 3, "adjacency": [[1, 2], [0], [0]]})").size() == 2);
}

TEST_CASE("embedding files are validated")
{
    auto text = io::pretty(io::embedding_to_json(k4_projective().embedding));
    auto load = [](const std::string& t) { return io::embedding_from_json(io::parse_text(t, "t")); };
    CHECK(load(text).embedding == k4_projective().embedding);
    CHECK_FALSE(load(text).annotations);

    auto j = io::parse_text(text, "t");
    j["signs"].erase(j["signs"].size() - 1);
    CHECK_THROWS_WITH(load(j.dump()), Catch::Matchers::ContainsSubstring("no sign for edge 2-3"));

    j = io::parse_text(text, "t");
    j["signs"][0][2] = 0;
    CHECK_THROWS_WITH(load(j.dump()), Catch::Matchers::ContainsSubstring("$.signs[0][2]"));

    j = io::parse_text(text, "t");
    j["rotations"][0] = {1, 2};
    CHECK_THROWS_WITH(load(j.dump()), Catch::Matchers::ContainsSubstring("asymmetric edge"));

    j = io::parse_text(text, "t");
    j["format"] = "graph";
    CHECK_THROWS_WITH(load(j.dump()), Catch::Matchers::ContainsSubstring("$.format"));
}

TEST_CASE("lovasz subcommand")
{
    auto r = run({"lovasz", fixture("figure1.graph.json")});
    REQUIRE(r.code == kExitOk);
    auto j = r.json();
    CHECK(j["vertices"].size() == 8);
    CHECK(j["f_vector"] == io::Json({8, 10, 2}));
    int lone_edges = 0;
    for (const auto& facet : j["facets"])
        lone_edges += facet.size() == 2;
    // 10 edges: 6 on the two triangles, 4 on their own
    CHECK(lone_edges == 4);

    r = run({"lovasz", fixture("c4.graph.json")});
    REQUIRE(r.code == kExitOk);
    CHECK(r.json()["involution"] == io::Json({{0, 1}}));

    r = run({"lovasz", fixture("asymmetric.graph.json")});
    CHECK(r.code == kExitInputError);
    CHECK(r.err.find("asymmetric edge") != std::string::npos);

    r = run({"lovasz", "-"}, slurp(fixture("figure1.graph.json")));
    CHECK(r.code == kExitOk);

    r = run({"lovasz", "-"}, "{\"format\": \"graph\",\n \"n\": ");
    CHECK(r.code == kExitInputError);
    CHECK(r.err.find("<stdin>:2:") != std::string::npos);

    CHECK(run({"lovasz", fixture("does-not-exist.json")}).code == kExitInputError);
}

TEST_CASE("check subcommand")
{
    auto k4 = run({"check", fixture("k4_projective.json")});
    REQUIRE(k4.code == kExitOk);
    auto j = k4.json();
    CHECK(j["hypotheses_hold"] == true);
    CHECK(j["connected"] == true);
    CHECK(j["bipartite"] == false);
    CHECK(j["all_4cycles_facial"] == true);
    CHECK(j["k23_subgraph"].is_null());
    CHECK(j["domination"].is_null());
    CHECK(j["surface"] == "NS_1");

    j = run({"check", fixture("torus_3x4.json")}).json();
    CHECK(j["all_4cycles_facial"] == false);
    CHECK(j["non_facial_4cycle"].size() == 4);

    j = run({"check", fixture("k23_sphere.json")}).json();
    CHECK(j["bipartite"] == true);
    CHECK(j["k23_subgraph"]["pair"] == io::Json({0, 1}));
}

TEST_CASE("classify subcommand")
{
    auto j = run({"classify", fixture("torus_3x3.json")}).json();
    CHECK(j["branch"] == "orientable");
    CHECK(j["k"] == 1);
    CHECK(j["predicted"] == "OS_1");
    CHECK(j["consistent"] == true);

    j = run({"classify", fixture("k4_projective.json")}).json();
    CHECK(j["branch"] == "one-sided-odd");
    CHECK(j["k"] == 1);
    CHECK(j["lovasz_complex"]["surface"] == "OS_0");
    CHECK(j["consistent"] == true);

    j = run({"classify", fixture("klein_3x5_0.json")}).json();
    CHECK(j["branch"] == "even-one-sided");
    CHECK(j["lovasz_complex"]["surface"] == "NS_2");

    auto r = run({"classify", fixture("torus_3x4.json")});
    CHECK(r.code == kExitOk);
    j = r.json();
    CHECK(j["lovasz_complex"]["is_surface"] == false);
    CHECK(j["lovasz_complex"]["defect"]["kind"] == "edge not in exactly 2 triangles");
    CHECK(j["failure"] == "non-facial 4-cycle");
}

TEST_CASE("invariants subcommand")
{
    auto r = run({"invariants", "--exact-chi", fixture("k4_projective.json")});
    REQUIRE(r.code == kExitOk);
    auto j = r.json();
    CHECK(j["odd"] == true);
    CHECK(j["cohom_ind"] == 2);
    CHECK(j["ind"] == 2);
    CHECK(j["coind"] == 2);
    CHECK(j["bound"] == 4);
    CHECK(j["chi"] == 4);

    j = run({"invariants", fixture("klein_6x3_0.json")}).json();
    CHECK(j["odd"] == false);
    CHECK(j["cohom_ind"] == 1);
    CHECK(j["ind"] == 1);
    CHECK(j["chi"].is_null());

    j = run({"invariants", fixture("torus_3x3.json")}).json();
    CHECK(j["odd"].is_null());
    CHECK(j["coind"] == 1);

    r = run({"invariants", fixture("torus_3x4.json")});
    CHECK(r.code == kExitInputError);
    CHECK(r.err.find("non-facial 4-cycle") != std::string::npos);

    r = run({"invariants", "--exact-chi", "--cap-chi", "3", fixture("k4_projective.json")});
    CHECK(r.code == kExitInputError);
}

TEST_CASE("verify subcommand exit codes")
{
    CHECK(run({"verify", "--oracle", fixture("k4_projective.json")}).code == kExitOk);
    CHECK(run({"verify", fixture("torus_3x4.json")}).code == kExitOk);
    CHECK(run({"verify", fixture("k23_sphere.json")}).code == kExitOk);
    CHECK(run({"verify", "--oracle", fixture("klein_6x3_0.json")}).code == kExitOk);

    auto r = run({"verify", fixture("k4_projective_corrupted.json")});
    CHECK(r.code == kExitVerdictFailed);
    auto j = r.json();
    CHECK(j["all_pass"] == false);
    CHECK(j["failed"] == io::Json({"quadrangulation", "annotations"}));

    r = run({"verify", "--oracle", "--cap-cycles", "5", fixture("klein_6x3_0.json")});
    CHECK(r.code == kExitOk);
    CHECK(r.json()["verdicts"]["cut-oracle"]["status"] == "skip");
}

TEST_CASE("generate subcommand")
{
    auto r = run({"generate", "torus-grid", "3", "3"});
    REQUIRE(r.code == kExitOk);
    CHECK(r.out == slurp(fixture("torus_3x3.json")));
    CHECK(run({"generate", "klein-grid", "6", "3", "1"}).out == slurp(fixture("klein_6x3_1.json")));
    CHECK(run({"generate", "figure1"}).out == slurp(fixture("figure1.graph.json")));

    CHECK(run({"generate", "torus-grid", "2", "3"}).code == kExitInputError);
    CHECK(run({"generate", "torus-grid", "3"}).code == kExitInputError);
    CHECK(run({"generate", "moebius"}).code == kExitInputError);

    r = run({"generate", "klein-sweep", "6", "18", "--oracle"});
    REQUIRE(r.code == kExitOk);
    auto j = r.json();
    CHECK(j["odd_instances"].get<int>() > 0);
    CHECK(j["non_odd_instances"].get<int>() > 0);
    for (const auto& entry : j["instances"])
        if (!entry["odd"].is_null())
        {
            CHECK(entry["oracle_odd"] == entry["odd"]);
            CHECK(entry["annotations"]["odd"] == entry["odd"]);
        }

    auto path = (std::filesystem::temp_directory_path() / "lovasz-generate-test.json").string();
    std::remove(path.c_str());
    CHECK(run({"generate", "k4-projective", "--out", path}).code == kExitOk);
    CHECK(slurp(path) == slurp(fixture("k4_projective.json")));
    std::remove(path.c_str());
}

TEST_CASE("flag errors")
{
    CHECK(run({}).code == kExitInputError);
    CHECK(run({"frobnicate"}).code == kExitInputError);
    CHECK(run({"verify"}).code == kExitInputError);
    CHECK(run({"verify", "--cap-cycles", "0", fixture("k4_projective.json")}).code == kExitInputError);
    CHECK(run({"--help"}).code == kExitOk);
}
