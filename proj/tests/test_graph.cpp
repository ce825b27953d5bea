#include "catch_amalgamated.hpp"

#include <random>
#include <set>

#include "lovasz/error.hpp"
#include "lovasz/generators.hpp"
#include "lovasz/graph.hpp"
#include "random_graphs.hpp"

using namespace lovasz;

namespace {

VertexSet set_of(const Graph& g, std::initializer_list<int> vs)
{
    return VertexSet(g.order(), vs);
}

Graph cycle_graph(int n)
{
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        edges.emplace_back(i, (i + 1) % n);
    return Graph(n, edges);
}

Graph complete_graph(int n)
{
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            edges.emplace_back(u, v);
    return Graph(n, edges);
}

bool proper(const Graph& g, const std::vector<int>& colors)
{
    for (auto [u, v] : g.edges())
        if (colors[u] == colors[v])
            return false;
    return true;
}

}   // namespace

TEST_CASE("graph construction validates input")
{
    CHECK_THROWS_AS(Graph(0, {}), InvalidInput);
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), InvalidInput);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), InvalidInput);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), InvalidInput);

    Graph g(4, {{2, 1}, {0, 1}});
    REQUIRE(g.size() == 2);
    CHECK(g.edges()[0] == Edge{0, 1});
    CHECK(g.edges()[1] == Edge{1, 2});
    CHECK(g.edge_index(2, 1) == 1);
    CHECK(g.edge_index(0, 3) == -1);
    CHECK(g.degree(3) == 0);
}

TEST_CASE("common neighbors on the example graph")
{
    auto g = figure1_graph();
    // display names are 1-based
    CHECK(common_neighbors(g, set_of(g, {1})) == set_of(g, {0, 2, 4}));
    CHECK(common_neighbors(g, set_of(g, {1, 3})) == set_of(g, {0, 2, 4}));
    CHECK(common_neighbors(g, set_of(g, {0, 2, 4})) == set_of(g, {1, 3}));
    CHECK(common_neighbors(g, g.empty_set()) == g.all_vertices());
    CHECK(cn_closure(g, set_of(g, {1})) == set_of(g, {1, 3}));
}

TEST_CASE("bipartiteness with odd cycle witness")
{
    auto even = is_bipartite(cycle_graph(6));
    CHECK(even.bipartite);
    CHECK(even.coloring.size() == 6);

    auto odd = is_bipartite(cycle_graph(7));
    REQUIRE_FALSE(odd.bipartite);
    CHECK(odd.odd_cycle.size() % 2 == 1);
    auto g = cycle_graph(7);
    for (std::size_t i = 0; i < odd.odd_cycle.size(); ++i)
        CHECK(g.adjacent(odd.odd_cycle[i], odd.odd_cycle[(i + 1) % odd.odd_cycle.size()]));
}

TEST_CASE("K2,3 and domination witnesses")
{
    Graph k23(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
    auto w = find_k23(k23);
    REQUIRE(w);
    CHECK(w->pair == std::array<int, 2>{0, 1});
    CHECK(w->triple == std::array<int, 3>{2, 3, 4});
    CHECK_FALSE(find_k23(complete_graph(4)));

    auto g = figure1_graph();
    auto d = find_domination(g);
    REQUIRE(d);
    CHECK(g.name(d->first) == "2");
    CHECK(g.name(d->second) == "4");
    CHECK_FALSE(find_domination(complete_graph(4)));
}

TEST_CASE("exact chromatic number")
{
    CHECK(chromatic_number(complete_graph(4)).chromatic_number == 4);
    CHECK(chromatic_number(cycle_graph(5)).chromatic_number == 3);
    CHECK(chromatic_number(cycle_graph(8)).chromatic_number == 2);
    CHECK(chromatic_number(Graph(3, {})).chromatic_number == 1);

    // Petersen graph
    Graph petersen(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                        {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
    auto chi = chromatic_number(petersen);
    CHECK(chi.chromatic_number == 3);
    CHECK(proper(petersen, chi.coloring));

    CHECK_THROWS_AS(chromatic_number(complete_graph(6), 5), PreconditionError);
}

TEST_CASE("chromatic bounds bracket the exact value on random graphs")
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial)
    {
        auto g = testing::random_graph(rng, 9);
        auto chi = chromatic_number(g);
        CHECK(chi.clique_lower_bound <= chi.chromatic_number);
        CHECK(chi.chromatic_number <= chi.greedy_upper_bound);
        CHECK(proper(g, chi.coloring));
        std::set<int> used(chi.coloring.begin(), chi.coloring.end());
        CHECK(static_cast<int>(used.size()) == chi.chromatic_number);
    }
}

TEST_CASE("Kronecker double cover")
{
    auto g = complete_graph(3);
    auto cover = kronecker_cover(g);
    CHECK(cover.graph.order() == 6);
    CHECK(cover.graph.size() == 6);
    CHECK(is_bipartite(cover.graph).bipartite);
    CHECK(is_connected(cover.graph));       // the hexagon
    for (int v = 0; v < 6; ++v)
        CHECK(cover.involution[cover.involution[v]] == v);

    // bipartite input splits into two copies
    CHECK(connected_components(kronecker_cover(cycle_graph(4)).graph).size() == 2);
}

TEST_CASE("cycle space basis and decomposition")
{
    auto g = complete_graph(4);
    auto basis = cycle_space_basis(g);
    CHECK(basis.dimension() == 3);
    CHECK(basis.tree_edges.size() == 3);

    std::vector<int> square{0, 1, 2, 3};
    auto z = cycle_edge_vector(g, square);
    CHECK(is_even_subgraph(g, z));
    auto coeffs = decompose(basis, z);
    EdgeVector sum(g.size(), 0);
    for (int k = 0; k < basis.dimension(); ++k)
        if (coeffs[k])
            for (int e : basis.cycles[k].edges)
                sum[e] ^= 1;
    CHECK(sum == z);

    EdgeVector path(g.size(), 0);
    path[0] = 1;
    CHECK_FALSE(is_even_subgraph(g, path));
}

TEST_CASE("simple cycle enumeration")
{
    // K4 has 4 triangles and 3 four-cycles
    auto cycles = enumerate_simple_cycles(complete_graph(4), 1000);
    CHECK_FALSE(cycles.truncated);
    CHECK(cycles.cycles.size() == 7);
    for (const auto& c : cycles.cycles)
        CHECK(canonical_cycle(c) == c);
    CHECK(four_cycles(complete_graph(4)).size() == 3);

    auto capped = enumerate_simple_cycles(complete_graph(5), 5);
    CHECK(capped.truncated);
    CHECK(capped.cycles.size() == 5);

    CHECK(canonical_cycle(std::vector<int>{3, 1, 0, 2}) == std::vector<int>{0, 1, 3, 2});
}

TEST_CASE("Galois connection properties on random graphs")
{
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 1000; ++trial)
    {
        auto g = testing::random_graph(rng, 10);
        auto a = testing::random_subset(rng, g.order());
        auto b = a | testing::random_subset(rng, g.order());
        auto cn_a = common_neighbors(g, a);
        CHECK(common_neighbors(g, b).subset_of(cn_a));
        CHECK(common_neighbors(g, cn_closure(g, a)) == cn_a);
        CHECK_FALSE(a.intersects(cn_a));
        CHECK(a.subset_of(cn_closure(g, a)));
    }
}
