#include "lovasz/generators.hpp"

#include "lovasz/error.hpp"

namespace lovasz {

std::vector<std::string> check_annotations(const EmbeddedGraph& e, const FamilySpec& spec)
{
    std::vector<std::string> problems;
    const Graph& g = e.graph();

    bool bipartite = is_bipartite(g).bipartite;
    if (bipartite != spec.bipartite)
        problems.push_back("bipartite: expected " + std::string(spec.bipartite ? "true" : "false"));

    try
    {
        auto surface = embedding_surface(e).name();
        if (surface != spec.surface)
            problems.push_back("surface: expected " + spec.surface + ", traced " + surface);
    }
    catch (const Error& err)
    {
        problems.push_back(std::string("surface: ") + err.what());
    }

    const bool quad = is_quadrangulation(e);
    if (spec.all_facial)
    {
        if (!quad)
            problems.push_back("all_4cycles_facial: embedding is not a quadrangulation");
        else if (all_4cycles_facial(e).all_facial != *spec.all_facial)
            problems.push_back("all_4cycles_facial: expected " + std::string(*spec.all_facial ? "true" : "false"));
    }

    for (const auto& c : spec.cycles)
    {
        const int len = static_cast<int>(c.vertices.size());
        bool closed = len >= 3;
        for (int i = 0; closed && i < len; ++i)
        {
            int u = c.vertices[i], v = c.vertices[(i + 1) % len];
            closed = u >= 0 && v >= 0 && u < g.order() && v < g.order() && g.adjacent(u, v);
        }
        if (!closed)
        {
            problems.push_back("cycle " + c.name + ": not a closed walk in the graph");
            continue;
        }
        auto z = cycle_edge_vector(g, c.vertices);
        if (one_sidedness(e, z) != c.one_sided)
            problems.push_back("cycle " + c.name + ": one-sidedness expected " + std::to_string(c.one_sided));
        if (parity(z) != c.odd)
            problems.push_back("cycle " + c.name + ": parity expected " + std::to_string(c.odd));
    }

    if (spec.odd)
    {
        try
        {
            if (is_odd_quadrangulation(e).odd != *spec.odd)
                problems.push_back("odd: expected " + std::string(*spec.odd ? "true" : "false"));
        }
        catch (const Error& err)
        {
            problems.push_back(std::string("odd: ") + err.what());
        }
    }
    return problems;
}

namespace {

Fixture self_checked(EmbeddedGraph e, FamilySpec spec)
{
    auto problems = check_annotations(e, spec);
    if (!problems.empty())
    {
        std::string message = spec.family + " self-check failed:";
        for (const auto& p : problems)
            message += " " + p + ";";
        throw Error(message);
    }
    return {std::move(e), std::move(spec)};
}

std::vector<int> edge_signs(const Graph& g, const std::vector<Edge>& negative)
{
    std::vector<int> signs(g.size(), 1);
    for (auto [u, v] : negative)
        signs[g.edge_index(u, v)] = -1;
    return signs;
}

}   // namespace

Graph figure1_graph()
{
    const std::vector<Edge> one_based{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 5},
                                      {3, 4}, {3, 6}, {4, 5}, {5, 6}};
    std::vector<Edge> edges;
    for (auto [u, v] : one_based)
        edges.emplace_back(u - 1, v - 1);
    return Graph(6, edges, {"1", "2", "3", "4", "5", "6"});
}

Fixture k4_projective()
{
    Graph g(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    std::vector<std::vector<int>> rotation{{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}};
    auto signs = edge_signs(g, {{0, 2}, {1, 3}});
    FamilySpec spec;
    spec.family = "k4-projective";
    spec.bipartite = false;
    spec.surface = "NS_1";
    spec.all_facial = true;
    spec.cycles = {
        {"triangle-012", {0, 1, 2}, 1, 1},
        {"triangle-013", {0, 1, 3}, 1, 1},
        {"face-0123", {0, 1, 2, 3}, 0, 0},
    };
    spec.odd = true;
    return self_checked(EmbeddedGraph(std::move(g), std::move(rotation), std::move(signs)), std::move(spec));
}

Fixture k23_sphere()
{
    Graph g(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
    std::vector<std::vector<int>> rotation{{2, 3, 4}, {4, 3, 2}, {0, 1}, {0, 1}, {0, 1}};
    std::vector<int> signs(g.size(), 1);
    FamilySpec spec;
    spec.family = "k23-sphere";
    spec.bipartite = true;
    spec.surface = "OS_0";
    spec.all_facial = true;
    spec.cycles = {{"face-0213", {0, 2, 1, 3}, 0, 0}};
    return self_checked(EmbeddedGraph(std::move(g), std::move(rotation), std::move(signs)), std::move(spec));
}

namespace {

// Shared m x n grid; `twist` < 0 means a plain torus, otherwise the
// column seam is glued with a reflection.
EmbeddedGraph grid(int m, int n, int twist)
{
    auto id = [n](int i, int j) { return i * n + j; };
    auto row = [m](int i) { return ((i % m) + m) % m; };
    std::vector<std::vector<int>> rotation(m * n);
    std::vector<Edge> edges;
    std::vector<Edge> negative;
    for (int i = 0; i < m; ++i)
    {
        for (int j = 0; j < n; ++j)
        {
            int right, left;
            if (j + 1 < n)
                right = id(i, j + 1);
            else
                right = twist < 0 ? id(i, 0) : id(row(twist - i), 0);
            if (j > 0)
                left = id(i, j - 1);
            else
                left = twist < 0 ? id(i, n - 1) : id(row(twist - i), n - 1);
            rotation[id(i, j)] = {right, id(row(i + 1), j), left, id(row(i - 1), j)};
            edges.emplace_back(id(i, j), right);
            edges.emplace_back(id(i, j), id(row(i + 1), j));
            if (j + 1 == n && twist >= 0)
                negative.emplace_back(id(i, j), right);
        }
    }
    Graph g(m * n, edges);
    auto signs = edge_signs(g, negative);
    return EmbeddedGraph(std::move(g), std::move(rotation), std::move(signs));
}

void require_sides(const char* family, int m, int n)
{
    if (m < 3 || n < 3)
        throw InvalidInput(std::string(family) + " needs m, n >= 3, got " + std::to_string(m) + " x "
                           + std::to_string(n));
}

}   // namespace

Fixture torus_grid(int m, int n)
{
    require_sides("torus-grid", m, n);
    FamilySpec spec;
    spec.family = "torus-grid";
    spec.params = {m, n};
    spec.bipartite = m % 2 == 0 && n % 2 == 0;
    spec.surface = "OS_1";
    // The only non-facial 4-cycles are fibers of length 4.
    spec.all_facial = m != 4 && n != 4;
    std::vector<int> row, column;
    for (int j = 0; j < n; ++j)
        row.push_back(j);
    for (int i = 0; i < m; ++i)
        column.push_back(i * n);
    spec.cycles = {{"row-0", row, 0, n % 2}, {"column-0", column, 0, m % 2}};
    return self_checked(grid(m, n, -1), std::move(spec));
}

Fixture klein_grid(int m, int n, int twist)
{
    require_sides("klein-grid", m, n);
    if (twist < 0 || twist >= m)
        throw InvalidInput("klein-grid twist must lie in 0.." + std::to_string(m - 1));
    auto e = grid(m, n, twist);

    FamilySpec spec;
    spec.family = "klein-grid";
    spec.params = {m, n, twist};
    spec.bipartite = m % 2 == 0 && (n + twist) % 2 == 0;
    spec.surface = "NS_2";
    // Which 4-cycles are facial depends on small coincidences of the seam;
    // recorded from the embedding and selected on by the sweep.
    spec.all_facial = all_4cycles_facial(e).all_facial;

    std::vector<int> column, seam;
    for (int i = 0; i < m; ++i)
        column.push_back(i * n);
    // Along row 0, across the seam to (twist, 0), then down column 0.
    for (int j = 0; j < n; ++j)
        seam.push_back(j);
    for (int i = twist; i >= 1; --i)
        seam.push_back(i * n);
    spec.cycles = {
        {"column-0", column, 0, m % 2},
        {"seam", seam, 1, static_cast<int>(seam.size()) % 2},
    };
    // The column is the two-sided class whose cut orientizes the surface,
    // so oddness is the parity of m.
    if (!spec.bipartite)
        spec.odd = m % 2 == 1;
    return self_checked(std::move(e), std::move(spec));
}

std::vector<SweepEntry> klein_sweep(int max_side, int max_vertices, bool run_oracle, long long cycle_cap)
{
    std::vector<SweepEntry> out;
    for (int m = 3; m <= max_side; ++m)
    {
        for (int n = 3; n <= max_side; ++n)
        {
            if (m * n > max_vertices)
                continue;
            for (int twist = 0; twist < m; ++twist)
            {
                auto fixture = klein_grid(m, n, twist);
                const auto& e = fixture.embedding;
                SweepEntry entry{m, n, twist, fixture.spec.bipartite, *fixture.spec.all_facial, {}, {}, false};
                if (!entry.bipartite && entry.all_facial)
                {
                    auto verdict = is_odd_quadrangulation(e, run_oracle, cycle_cap);
                    entry.odd = verdict.odd;
                    if (verdict.oracle && verdict.oracle->exhaustive)
                        entry.oracle_odd = verdict.oracle->found;
                    entry.even_one_sided = has_even_one_sided_class(e).present;
                }
                out.push_back(entry);
            }
        }
    }
    return out;
}

std::vector<KleinParams> shipped_klein_instances()
{
    return {
        {"klein-3x5-0", 3, 5, 0},
        {"klein-6x3-0", 6, 3, 0},
        {"klein-6x3-1", 6, 3, 1},
    };
}

}   // namespace lovasz
