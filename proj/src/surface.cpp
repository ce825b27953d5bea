#include "lovasz/surface.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <queue>

#include "lovasz/error.hpp"

namespace lovasz {

SurfaceClass SurfaceClass::from_euler(int euler, bool orientable)
{
    SurfaceClass out;
    out.orientable = orientable;
    out.euler = euler;
    if (orientable)
    {
        if (euler > 2 || (2 - euler) % 2 != 0)
            throw PreconditionError("no orientable closed surface has Euler characteristic "
                                    + std::to_string(euler));
        out.genus = (2 - euler) / 2;
    }
    else
    {
        if (euler > 1)
            throw PreconditionError("no non-orientable closed surface has Euler characteristic "
                                    + std::to_string(euler));
        out.genus = 2 - euler;
    }
    return out;
}

std::string to_string(DefectKind kind)
{
    switch (kind)
    {
        case DefectKind::NotPure2: return "not pure 2-dimensional";
        case DefectKind::EdgeDegree: return "edge not in exactly 2 triangles";
        case DefectKind::VertexLink: return "vertex link not a single cycle";
        case DefectKind::Disconnected: return "disconnected";
    }
    return "unknown";
}

std::string SurfaceDefect::describe(const SimplicialComplex& k) const
{
    std::string where;
    for (int v : simplex)
        where += (where.empty() ? "" : " ") + k.label(v);
    switch (kind)
    {
        case DefectKind::NotPure2: return "facet [" + where + "] is not a triangle";
        case DefectKind::EdgeDegree:
            return "edge [" + where + "] lies in " + std::to_string(count) + " triangles";
        case DefectKind::VertexLink:
            return "link of " + where + " has " + std::to_string(count) + " components";
        case DefectKind::Disconnected:
            return std::to_string(components.size()) + " connected components";
    }
    return where;
}

namespace {

// Triangles on each edge, keyed by the sorted edge.
std::map<std::pair<int, int>, std::vector<int>> edge_triangles(const SimplicialComplex& k)
{
    std::map<std::pair<int, int>, std::vector<int>> out;
    for (const auto& e : k.faces(1))
        out[{e[0], e[1]}];
    const auto& triangles = k.faces(2);
    for (int t = 0; t < static_cast<int>(triangles.size()); ++t)
    {
        const auto& tri = triangles[t];
        out[{tri[0], tri[1]}].push_back(t);
        out[{tri[0], tri[2]}].push_back(t);
        out[{tri[1], tri[2]}].push_back(t);
    }
    return out;
}

int find_root(std::vector<int>& parent, int x)
{
    while (parent[x] != x)
        x = parent[x] = parent[parent[x]];
    return x;
}

}   // namespace

SurfaceVerdict check_surface(const SimplicialComplex& k)
{
    SurfaceVerdict out;
    auto fail = [&](SurfaceDefect defect) {
        out.witness = std::move(defect);
        return out;
    };

    if (k.dimension() != 2)
        return fail({DefectKind::NotPure2, k.facets().empty() ? Simplex{} : k.facets().front(), 0, {}});
    for (const auto& f : k.facets())
        if (f.size() != 3)
            return fail({DefectKind::NotPure2, f, 0, {}});

    auto edges = edge_triangles(k);
    std::optional<SurfaceDefect> thin;
    for (const auto& [edge, tris] : edges)
    {
        int c = static_cast<int>(tris.size());
        if (c > 2)
            return fail({DefectKind::EdgeDegree, {edge.first, edge.second}, c, {}});
        if (c != 2 && !thin)
            thin = SurfaceDefect{DefectKind::EdgeDegree, {edge.first, edge.second}, c, {}};
    }
    if (thin)
        return fail(*thin);

    // With every edge in two triangles each link is 2-regular; it is a
    // single cycle iff connected.
    const int nv = k.vertex_count();
    std::vector<std::vector<std::pair<int, int>>> links(nv);
    for (const auto& t : k.faces(2))
    {
        links[t[0]].emplace_back(t[1], t[2]);
        links[t[1]].emplace_back(t[0], t[2]);
        links[t[2]].emplace_back(t[0], t[1]);
    }
    std::vector<int> parent(nv);
    for (int v = 0; v < nv; ++v)
    {
        std::iota(parent.begin(), parent.end(), 0);
        std::vector<int> members;
        for (auto [a, b] : links[v])
        {
            members.push_back(a);
            members.push_back(b);
            parent[find_root(parent, a)] = find_root(parent, b);
        }
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        int components = 0;
        for (int m : members)
            components += find_root(parent, m) == m;
        if (components != 1)
            return fail({DefectKind::VertexLink, {v}, components, {}});
    }

    std::iota(parent.begin(), parent.end(), 0);
    for (const auto& e : k.faces(1))
        parent[find_root(parent, e[0])] = find_root(parent, e[1]);
    std::map<int, std::vector<int>> groups;
    for (int v = 0; v < nv; ++v)
        groups[find_root(parent, v)].push_back(v);
    if (groups.size() != 1)
    {
        SurfaceDefect defect{DefectKind::Disconnected, {}, static_cast<int>(groups.size()), {}};
        for (auto& [root, members] : groups)
            defect.components.push_back(std::move(members));
        return fail(std::move(defect));
    }

    out.is_surface = true;
    out.surface_class = SurfaceClass::from_euler(euler_characteristic(k), orientability(k));
    return out;
}

int euler_characteristic(const SimplicialComplex& k)
{
    if (k.dimension() > 2)
        throw PreconditionError("Euler characteristic is computed for complexes of dimension at most 2, got "
                                + std::to_string(k.dimension()));
    auto f = k.f_vector();
    int chi = 0;
    for (std::size_t d = 0; d < f.size(); ++d)
        chi += (d % 2 == 0 ? 1 : -1) * static_cast<int>(f[d]);
    return chi;
}

bool orientability(const SimplicialComplex& k, int start)
{
    if (k.dimension() != 2)
        throw PreconditionError("orientability needs a closed surface");
    auto edges = edge_triangles(k);
    for (const auto& [edge, tris] : edges)
        if (tris.size() != 2)
            throw PreconditionError("orientability needs a closed surface");
    const auto& triangles = k.faces(2);
    const int count = static_cast<int>(triangles.size());
    if (start < 0 || start >= count)
        throw PreconditionError("start triangle out of range");

    // A triangle [a<b<c] with sign s induces s * (-1)^i on the edge that
    // omits position i; neighbours must induce opposite signs.
    auto induced = [&](int t, int s, std::pair<int, int> edge) {
        const auto& tri = triangles[t];
        for (int i = 0; i < 3; ++i)
            if (tri[i] != edge.first && tri[i] != edge.second)
                return (i % 2 == 0) ? s : -s;
        throw Error("orientability: edge not on triangle");
    };
    auto edges_of = [&](int t) {
        const auto& tri = triangles[t];
        return std::array<std::pair<int, int>, 3>{{{tri[0], tri[1]}, {tri[0], tri[2]}, {tri[1], tri[2]}}};
    };

    std::vector<int> sign(count, 0);
    bool coherent = true;
    // Components are covered one after another so the verdict holds for
    // the whole complex.
    std::vector<int> order(count);
    std::iota(order.begin(), order.end(), 0);
    std::rotate(order.begin(), order.begin() + start, order.end());
    for (int seed : order)
    {
        if (sign[seed] != 0)
            continue;
        sign[seed] = 1;
        std::queue<int> queue;
        queue.push(seed);
        while (!queue.empty())
        {
            int t = queue.front();
            queue.pop();
            for (auto edge : edges_of(t))
            {
                for (int u : edges.at(edge))
                {
                    if (u == t)
                        continue;
                    int want = -induced(t, sign[t], edge) == induced(u, 1, edge) ? 1 : -1;
                    if (sign[u] == 0)
                    {
                        sign[u] = want;
                        queue.push(u);
                    }
                    else if (sign[u] != want)
                        coherent = false;
                }
            }
        }
    }
    return coherent;
}

SurfaceClass classify(const SimplicialComplex& k)
{
    auto verdict = check_surface(k);
    if (!verdict.is_surface)
        throw PreconditionError("not a closed surface: " + verdict.witness->describe(k));
    return *verdict.surface_class;
}

std::optional<std::vector<int>> link_cycle(const SimplicialComplex& k, int v)
{
    std::map<int, std::vector<int>> adj;
    for (const auto& t : k.faces(2))
    {
        if (!std::binary_search(t.begin(), t.end(), v))
            continue;
        int a = -1, b = -1;
        for (int x : t)
            if (x != v)
                (a < 0 ? a : b) = x;
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    if (adj.size() < 3)
        return std::nullopt;
    for (auto& [x, ys] : adj)
    {
        std::sort(ys.begin(), ys.end());
        if (ys.size() != 2 || ys[0] == ys[1])
            return std::nullopt;
    }
    std::vector<int> cycle{adj.begin()->first};
    int prev = cycle[0], cur = adj.begin()->second[0];
    while (cur != cycle[0])
    {
        cycle.push_back(cur);
        const auto& ys = adj.at(cur);
        int next = ys[0] == prev ? ys[1] : ys[0];
        prev = cur;
        cur = next;
    }
    if (cycle.size() != adj.size())
        return std::nullopt;
    return cycle;
}

}   // namespace lovasz
