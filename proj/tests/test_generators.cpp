#include "catch_amalgamated.hpp"

#include <fstream>
#include <sstream>

#include "lovasz/error.hpp"
#include "lovasz/generators.hpp"
#include "lovasz/io.hpp"

using namespace lovasz;

namespace {

std::string fixture_text(const std::string& name)
{
    std::ifstream file(std::string(FIXTURE_DIR) + "/" + name, std::ios::binary);
    REQUIRE(file);
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

std::string emitted(const Fixture& f)
{
    return io::pretty(io::embedding_to_json(f.embedding, f.spec));
}

}   // namespace

TEST_CASE("example graph")
{
    auto g = figure1_graph();
    CHECK(g.order() == 6);
    CHECK(g.size() == 9);
    CHECK(g.name(0) == "1");
    CHECK(io::pretty(io::graph_to_json(g)) == fixture_text("figure1.graph.json"));
}

TEST_CASE("fixtures match their files byte for byte")
{
    CHECK(emitted(k4_projective()) == fixture_text("k4_projective.json"));
    CHECK(emitted(k23_sphere()) == fixture_text("k23_sphere.json"));
    CHECK(emitted(torus_grid(3, 3)) == fixture_text("torus_3x3.json"));
    CHECK(emitted(torus_grid(3, 4)) == fixture_text("torus_3x4.json"));
    for (const auto& k : shipped_klein_instances())
    {
        std::string file = "klein_" + std::to_string(k.m) + "x" + std::to_string(k.n) + "_"
                           + std::to_string(k.twist) + ".json";
        CHECK(emitted(klein_grid(k.m, k.n, k.twist)) == fixture_text(file));
    }
}

TEST_CASE("generated embeddings satisfy their annotations and survive a round trip")
{
    std::vector<Fixture> all{k4_projective(), k23_sphere(), torus_grid(3, 3), torus_grid(4, 4), torus_grid(3, 4)};
    for (int m = 3; m <= 6; ++m)
        for (int n = 3; n <= 5; ++n)
            for (int t = 0; t < m; ++t)
                all.push_back(klein_grid(m, n, t));
    for (const auto& f : all)
    {
        CHECK(check_annotations(f.embedding, f.spec).empty());
        auto back = io::embedding_from_json(io::parse_text(emitted(f), "round-trip"));
        CHECK(back.embedding == f.embedding);
        REQUIRE(back.annotations);
        CHECK(*back.annotations == f.spec);
    }
}

TEST_CASE("family properties")
{
    CHECK(torus_grid(4, 4).spec.bipartite);
    CHECK_FALSE(torus_grid(3, 3).spec.bipartite);
    CHECK(torus_grid(3, 3).spec.all_facial == true);
    CHECK(torus_grid(3, 4).spec.all_facial == false);
    for (int m = 3; m <= 6; ++m)
        for (int n = 3; n <= 6; ++n)
        {
            auto t = torus_grid(m, n).embedding;
            auto faces = trace_faces(t);
            CHECK(static_cast<int>(faces.faces.size()) == m * n);
            CHECK(faces.euler_characteristic == 0);
        }
    CHECK(klein_grid(3, 5, 0).spec.odd == true);
    CHECK(klein_grid(6, 3, 0).spec.odd == false);
    CHECK(klein_grid(6, 3, 1).spec.bipartite);
}

TEST_CASE("parameter errors")
{
    CHECK_THROWS_AS(torus_grid(2, 3), InvalidInput);
    CHECK_THROWS_AS(klein_grid(3, 2, 0), InvalidInput);
    CHECK_THROWS_AS(klein_grid(3, 3, 3), InvalidInput);
    CHECK_THROWS_AS(klein_grid(3, 3, -1), InvalidInput);
}

TEST_CASE("annotation mismatches are reported")
{
    auto f = torus_grid(3, 3);
    auto spec = f.spec;
    spec.surface = "NS_2";
    spec.cycles[0].odd ^= 1;
    spec.cycles.push_back({"bogus", {0, 4, 8}, 0, 1});
    auto problems = check_annotations(f.embedding, spec);
    CHECK(problems.size() == 3);
}

TEST_CASE("Klein sweep holds both odd and non-odd instances")
{
    auto sweep = klein_sweep(6, 24, true);
    int odd = 0, non_odd = 0;
    for (const auto& entry : sweep)
    {
        if (!entry.odd)
            continue;
        REQUIRE(entry.oracle_odd);
        CHECK(*entry.oracle_odd == *entry.odd);
        ++(*entry.odd ? odd : non_odd);
    }
    CHECK(odd > 0);
    CHECK(non_odd > 0);
}
