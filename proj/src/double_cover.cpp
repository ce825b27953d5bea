#include "lovasz/double_cover.hpp"

#include <algorithm>

#include "lovasz/error.hpp"
#include "lovasz/surface.hpp"

namespace lovasz {

namespace {

int successor(const std::vector<int>& cycle, int x)
{
    auto it = std::find(cycle.begin(), cycle.end(), x);
    if (it == cycle.end())
        throw Error("vertex missing from link cycle");
    return ++it == cycle.end() ? cycle.front() : *it;
}

}   // namespace

EmbeddedGraph lovasz_quotient_embedding(const LovaszComplex& lo)
{
    auto verdict = check_surface(lo.base);
    if (!verdict.is_surface)
        throw PreconditionError("Lovász complex is not a closed surface: " + verdict.witness->describe(lo.base));
    const Graph& g = lo.graph;
    const int n = g.order();

    std::vector<int> single(n), hood(n);
    std::vector<int> owner(lo.closed.size(), -1);    // N(u) -> u
    for (int v = 0; v < n; ++v)
    {
        single[v] = lo.singleton(v);
        hood[v] = lo.neighborhood(v);
        if (single[v] < 0 || hood[v] < 0 || lo.kinds[single[v]] != VertexKind::Singleton
            || lo.kinds[hood[v]] != VertexKind::Neighborhood || lo.nu[single[v]] != hood[v])
            throw PreconditionError("vertex " + g.name(v) + " lacks a singleton/neighborhood pair");
        owner[hood[v]] = v;
    }

    // Link of {v} in its chosen direction; its image under the involution
    // is the link of N(v) in the carried-over direction.
    std::vector<std::vector<int>> around(n), around_image(n);
    std::vector<std::vector<int>> rotation(n);
    for (int v = 0; v < n; ++v)
    {
        auto link = link_cycle(lo.base, single[v]);
        if (!link)
            throw PreconditionError("link of {" + g.name(v) + "} is not a cycle");
        around[v] = *link;
        for (int x : around[v])
        {
            around_image[v].push_back(lo.nu[x]);
            if (owner[x] >= 0)
                rotation[v].push_back(owner[x]);
        }
    }

    std::vector<int> signs(g.size());
    for (int k = 0; k < g.size(); ++k)
    {
        auto [u, v] = g.edges()[k];
        // Across the edge {u} - N(v): orientations agree iff the triangle
        // ({u}, N(v), z) is traversed the same way from both ends.
        int x = single[u], y = hood[v];
        int z = successor(around[u], y);
        signs[k] = successor(around_image[v], z) == x ? 1 : -1;
    }
    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    Graph quotient(n, edges, g.names());
    return EmbeddedGraph(std::move(quotient), std::move(rotation), std::move(signs));
}

std::string to_string(CoverBranch branch)
{
    switch (branch)
    {
        case CoverBranch::Orientable: return "orientable";
        case CoverBranch::OneSidedOdd: return "one-sided-odd";
        case CoverBranch::EvenOneSided: return "even-one-sided";
    }
    return "orientable";
}

CoverBranch cover_branch(const EmbeddedGraph& e)
{
    if (is_orientable(e))
        return CoverBranch::Orientable;
    return has_even_one_sided_class(e).present ? CoverBranch::EvenOneSided : CoverBranch::OneSidedOdd;
}

SurfaceClass predicted_lovasz_surface(const SurfaceClass& s, CoverBranch branch)
{
    switch (branch)
    {
        case CoverBranch::Orientable: return SurfaceClass::from_euler(2 - 2 * (2 * s.genus - 1), true);
        case CoverBranch::OneSidedOdd: return SurfaceClass::from_euler(2 - 2 * (s.genus - 1), true);
        case CoverBranch::EvenOneSided: return SurfaceClass::from_euler(2 - (2 * s.genus - 2), false);
    }
    return s;
}

}   // namespace lovasz
