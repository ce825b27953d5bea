#include "lovasz/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "lovasz/error.hpp"

namespace lovasz {

Graph::Graph(int n, std::span<const Edge> edges, std::vector<std::string> names)
    : n_(n), adj_(n > 0 ? n : 0), adj_edge_(n > 0 ? n : 0), names_(std::move(names))
{
    if (n < 1)
        throw InvalidInput("graph must have at least one vertex");
    if (!names_.empty() && static_cast<int>(names_.size()) != n)
        throw InvalidInput("expected " + std::to_string(n) + " names, got "
                           + std::to_string(names_.size()));

    edges_.reserve(edges.size());
    for (auto [u, v] : edges)
    {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw InvalidInput("edge [" + std::to_string(u) + "," + std::to_string(v)
                               + "] has an endpoint outside 0.." + std::to_string(n - 1));
        if (u == v)
            throw InvalidInput("self-loop at vertex " + std::to_string(u));
        edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(edges_.begin(), edges_.end());
    if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end())
        throw InvalidInput("duplicate edge [" + std::to_string(dup->first) + ","
                           + std::to_string(dup->second) + "]");

    nbhd_.assign(n, VertexSet(n));
    for (int e = 0; e < size(); ++e)
    {
        auto [u, v] = edges_[e];
        adj_[u].push_back(v);
        adj_[v].push_back(u);
        nbhd_[u].insert(v);
        nbhd_[v].insert(u);
    }
    for (int v = 0; v < n; ++v)
    {
        std::sort(adj_[v].begin(), adj_[v].end());
        adj_edge_[v].resize(adj_[v].size());
        for (std::size_t k = 0; k < adj_[v].size(); ++k)
        {
            int u = adj_[v][k];
            Edge key{std::min(u, v), std::max(u, v)};
            adj_edge_[v][k] = static_cast<int>(
                std::lower_bound(edges_.begin(), edges_.end(), key) - edges_.begin());
        }
    }
}

int Graph::edge_index(int u, int v) const
{
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        return -1;
    const auto& row = adj_[u];
    auto it = std::lower_bound(row.begin(), row.end(), v);
    if (it == row.end() || *it != v)
        return -1;
    return adj_edge_[u][it - row.begin()];
}

VertexSet common_neighbors(const Graph& g, const VertexSet& a)
{
    VertexSet out = g.all_vertices();
    for (int u : a.indices())
        out &= g.neighborhood(u);
    return out;
}

VertexSet cn_closure(const Graph& g, const VertexSet& a)
{
    return common_neighbors(g, common_neighbors(g, a));
}

std::vector<std::vector<int>> connected_components(const Graph& g)
{
    std::vector<int> comp(g.order(), -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < g.order(); ++s)
    {
        if (comp[s] >= 0)
            continue;
        out.emplace_back();
        std::vector<int> stack{s};
        comp[s] = static_cast<int>(out.size()) - 1;
        while (!stack.empty())
        {
            int v = stack.back();
            stack.pop_back();
            out.back().push_back(v);
            for (int u : g.neighbors(v))
            {
                if (comp[u] < 0)
                {
                    comp[u] = comp[s];
                    stack.push_back(u);
                }
            }
        }
        std::sort(out.back().begin(), out.back().end());
    }
    return out;
}

bool is_connected(const Graph& g)
{
    return connected_components(g).size() == 1;
}

BipartiteVerdict is_bipartite(const Graph& g)
{
    const int n = g.order();
    std::vector<int> color(n, -1), parent(n, -1), depth(n, 0);
    for (int s = 0; s < n; ++s)
    {
        if (color[s] >= 0)
            continue;
        color[s] = 0;
        std::queue<int> queue;
        queue.push(s);
        while (!queue.empty())
        {
            int v = queue.front();
            queue.pop();
            for (int u : g.neighbors(v))
            {
                if (color[u] < 0)
                {
                    color[u] = 1 - color[v];
                    parent[u] = v;
                    depth[u] = depth[v] + 1;
                    queue.push(u);
                }
                else if (color[u] == color[v])
                {
                    // Both tree paths to the lowest common ancestor plus the
                    // edge (v, u) form a simple odd cycle.
                    std::vector<int> left{v}, right{u};
                    int a = v, b = u;
                    while (depth[a] > depth[b]) { a = parent[a]; left.push_back(a); }
                    while (depth[b] > depth[a]) { b = parent[b]; right.push_back(b); }
                    while (a != b)
                    {
                        a = parent[a];
                        b = parent[b];
                        left.push_back(a);
                        right.push_back(b);
                    }
                    right.pop_back();
                    std::vector<int> cycle(left.begin(), left.end());
                    cycle.insert(cycle.begin(), right.rbegin(), right.rend());
                    return {false, {}, canonical_cycle(cycle)};
                }
            }
        }
    }
    return {true, color, {}};
}

std::optional<K23Witness> find_k23(const Graph& g)
{
    for (int a = 0; a < g.order(); ++a)
    {
        for (int b = a + 1; b < g.order(); ++b)
        {
            auto common = (g.neighborhood(a) & g.neighborhood(b)).indices();
            if (common.size() >= 3)
                return K23Witness{{a, b}, {common[0], common[1], common[2]}};
        }
    }
    return std::nullopt;
}

std::optional<Edge> find_domination(const Graph& g)
{
    for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < g.order(); ++v)
            if (u != v && g.neighborhood(u).subset_of(g.neighborhood(v)))
                return Edge{u, v};
    return std::nullopt;
}

std::vector<int> greedy_clique(const Graph& g)
{
    std::vector<int> best;
    for (int s = 0; s < g.order(); ++s)
    {
        std::vector<int> clique{s};
        VertexSet candidates = g.neighborhood(s);
        while (!candidates.empty())
        {
            // Extend by the candidate that keeps the most candidates alive.
            int pick = -1, keep = -1;
            for (int c : candidates.indices())
            {
                int k = (candidates & g.neighborhood(c)).size();
                if (k > keep)
                {
                    keep = k;
                    pick = c;
                }
            }
            clique.push_back(pick);
            candidates &= g.neighborhood(pick);
        }
        if (clique.size() > best.size())
            best = clique;
    }
    std::sort(best.begin(), best.end());
    return best;
}

namespace {

class DsaturSearch
{
    public:
        explicit DsaturSearch(const Graph& g) : g_(g) {}

        /// Attempts a proper coloring with at most k colors; fills `coloring`.
        bool colorable(int k, const std::vector<int>& seed_clique, std::vector<int>& coloring)
        {
            k_ = k;
            color_.assign(g_.order(), -1);
            // forbid_[v][c] counts colored neighbors of v with color c
            forbid_.assign(g_.order(), std::vector<int>(k, 0));
            for (std::size_t i = 0; i < seed_clique.size(); ++i)
                assign(seed_clique[i], static_cast<int>(i));
            int used = static_cast<int>(seed_clique.size());
            if (!search(g_.order() - used, used))
                return false;
            coloring = color_;
            return true;
        }

    private:
        void assign(int v, int c)
        {
            color_[v] = c;
            for (int u : g_.neighbors(v))
                ++forbid_[u][c];
        }

        void unassign(int v)
        {
            int c = color_[v];
            color_[v] = -1;
            for (int u : g_.neighbors(v))
                --forbid_[u][c];
        }

        int saturation(int v) const
        {
            int s = 0;
            for (int c = 0; c < k_; ++c)
                s += forbid_[v][c] > 0;
            return s;
        }

        bool search(int remaining, int used)
        {
            if (remaining == 0)
                return true;
            int pick = -1, best_sat = -1, best_deg = -1;
            for (int v = 0; v < g_.order(); ++v)
            {
                if (color_[v] >= 0)
                    continue;
                int sat = saturation(v);
                if (sat > best_sat || (sat == best_sat && g_.degree(v) > best_deg))
                {
                    pick = v;
                    best_sat = sat;
                    best_deg = g_.degree(v);
                }
            }
            // Colors beyond `used` are interchangeable: try only one new one.
            int limit = std::min(k_, used + 1);
            for (int c = 0; c < limit; ++c)
            {
                if (forbid_[pick][c] > 0)
                    continue;
                assign(pick, c);
                if (search(remaining - 1, std::max(used, c + 1)))
                    return true;
                unassign(pick);
            }
            return false;
        }

        const Graph& g_;
        int k_ = 0;
        std::vector<int> color_;
        std::vector<std::vector<int>> forbid_;
};

std::vector<int> greedy_dsatur(const Graph& g)
{
    const int n = g.order();
    std::vector<int> color(n, -1);
    std::vector<VertexSet> seen(n, VertexSet(n + 1));
    for (int step = 0; step < n; ++step)
    {
        int pick = -1, best_sat = -1, best_deg = -1;
        for (int v = 0; v < n; ++v)
        {
            if (color[v] >= 0)
                continue;
            int sat = seen[v].size();
            if (sat > best_sat || (sat == best_sat && g.degree(v) > best_deg))
            {
                pick = v;
                best_sat = sat;
                best_deg = g.degree(v);
            }
        }
        int c = 0;
        while (seen[pick].contains(c))
            ++c;
        color[pick] = c;
        for (int u : g.neighbors(pick))
            seen[u].insert(c);
    }
    return color;
}

}   // namespace

ChromaticResult chromatic_number(const Graph& g, int cap)
{
    if (cap < 1)
        throw PreconditionError("chromatic cap must be positive");
    if (g.order() > cap)
        throw PreconditionError("graph has " + std::to_string(g.order())
                                + " vertices, exceeding the exact-coloring cap of "
                                + std::to_string(cap));
    ChromaticResult result;
    auto clique = greedy_clique(g);
    result.clique_lower_bound = static_cast<int>(clique.size());
    result.coloring = greedy_dsatur(g);
    result.greedy_upper_bound = *std::max_element(result.coloring.begin(), result.coloring.end()) + 1;
    result.chromatic_number = result.greedy_upper_bound;

    DsaturSearch search(g);
    for (int k = result.greedy_upper_bound - 1; k >= result.clique_lower_bound; --k)
    {
        std::vector<int> coloring;
        if (!search.colorable(k, clique, coloring))
            break;
        result.chromatic_number = k;
        result.coloring = std::move(coloring);
    }
    return result;
}

DoubleCover kronecker_cover(const Graph& g)
{
    const int n = g.order();
    std::vector<Edge> edges;
    edges.reserve(2 * g.size());
    for (auto [u, v] : g.edges())
    {
        edges.emplace_back(u, v + n);
        edges.emplace_back(v, u + n);
    }
    std::vector<std::string> names;
    if (g.has_names())
    {
        for (int layer = 0; layer < 2; ++layer)
            for (int v = 0; v < n; ++v)
                names.push_back(g.name(v) + (layer ? "'" : ""));
    }
    DoubleCover cover{Graph(2 * n, edges, std::move(names)), std::vector<int>(2 * n)};
    for (int v = 0; v < n; ++v)
    {
        cover.involution[v] = v + n;
        cover.involution[v + n] = v;
    }
    return cover;
}

CycleSpaceBasis cycle_space_basis(const Graph& g)
{
    if (!is_connected(g))
        throw PreconditionError("cycle_space_basis requires a connected graph");
    const int n = g.order();
    std::vector<int> parent(n, -1), parent_edge(n, -1), depth(n, 0);
    std::vector<bool> seen(n, false), in_tree(g.size(), false);
    std::queue<int> queue;
    queue.push(0);
    seen[0] = true;
    while (!queue.empty())
    {
        int v = queue.front();
        queue.pop();
        for (int u : g.neighbors(v))
        {
            if (seen[u])
                continue;
            seen[u] = true;
            parent[u] = v;
            parent_edge[u] = g.edge_index(u, v);
            depth[u] = depth[v] + 1;
            in_tree[parent_edge[u]] = true;
            queue.push(u);
        }
    }

    CycleSpaceBasis basis;
    basis.cycle_of_edge.assign(g.size(), -1);
    for (int e = 0; e < g.size(); ++e)
    {
        if (in_tree[e])
        {
            basis.tree_edges.push_back(e);
            continue;
        }
        auto [u, v] = g.edges()[e];
        std::vector<int> left{u}, right{v};
        int a = u, b = v;
        while (depth[a] > depth[b]) { a = parent[a]; left.push_back(a); }
        while (depth[b] > depth[a]) { b = parent[b]; right.push_back(b); }
        while (a != b)
        {
            a = parent[a];
            b = parent[b];
            left.push_back(a);
            right.push_back(b);
        }
        right.pop_back();
        // u ... lca ... v, closing through the non-tree edge (v, u)
        FundamentalCycle cycle;
        cycle.non_tree_edge = e;
        cycle.vertices.assign(left.begin(), left.end());
        cycle.vertices.insert(cycle.vertices.end(), right.rbegin(), right.rend());
        const auto& vs = cycle.vertices;
        for (std::size_t i = 0; i < vs.size(); ++i)
            cycle.edges.push_back(g.edge_index(vs[i], vs[(i + 1) % vs.size()]));
        basis.cycle_of_edge[e] = static_cast<int>(basis.cycles.size());
        basis.cycles.push_back(std::move(cycle));
    }
    return basis;
}

EdgeVector cycle_edge_vector(const Graph& g, std::span<const int> cycle)
{
    EdgeVector z(g.size(), 0);
    for (std::size_t i = 0; i < cycle.size(); ++i)
    {
        int e = g.edge_index(cycle[i], cycle[(i + 1) % cycle.size()]);
        if (e < 0)
            throw InvalidInput("consecutive cycle vertices " + std::to_string(cycle[i]) + " and "
                               + std::to_string(cycle[(i + 1) % cycle.size()]) + " are not adjacent");
        z[e] ^= 1;
    }
    return z;
}

bool is_even_subgraph(const Graph& g, const EdgeVector& edges)
{
    std::vector<int> parity(g.order(), 0);
    for (int e = 0; e < g.size(); ++e)
    {
        if (!edges[e])
            continue;
        parity[g.edges()[e].first] ^= 1;
        parity[g.edges()[e].second] ^= 1;
    }
    return std::all_of(parity.begin(), parity.end(), [](int p) { return p == 0; });
}

std::vector<std::uint8_t> decompose(const CycleSpaceBasis& basis, const EdgeVector& z)
{
    std::vector<std::uint8_t> coords(basis.dimension(), 0);
    for (std::size_t e = 0; e < z.size(); ++e)
        if (z[e] && basis.cycle_of_edge[e] >= 0)
            coords[basis.cycle_of_edge[e]] = 1;
    return coords;
}

std::vector<int> canonical_cycle(std::span<const int> cycle)
{
    const std::size_t len = cycle.size();
    if (len == 0)
        return {};
    std::size_t start = std::min_element(cycle.begin(), cycle.end()) - cycle.begin();
    std::vector<int> forward(len), backward(len);
    for (std::size_t i = 0; i < len; ++i)
    {
        forward[i] = cycle[(start + i) % len];
        backward[i] = cycle[(start + len - i) % len];
    }
    return std::min(forward, backward);
}

bool for_each_simple_cycle(const Graph& g,
                           const std::function<bool(std::span<const int>)>& visit,
                           int max_length)
{
    const int n = g.order();
    std::vector<int> path;
    std::vector<char> on_path(n, 0);
    path.reserve(n);
    bool keep_going = true;

    // Depth-first extension from the path end over vertices larger than the
    // start. A closing edge back to the start yields a cycle; the reflection
    // is skipped by requiring path[1] < path.back().
    std::function<void(int)> extend = [&](int start) {
        int v = path.back();
        for (int u : g.neighbors(v))
        {
            if (!keep_going)
                return;
            if (u == start)
            {
                if (path.size() >= 3 && path[1] < path.back())
                    keep_going = visit(path);
                continue;
            }
            if (u < start || on_path[u])
                continue;
            if (max_length > 0 && static_cast<int>(path.size()) >= max_length)
                continue;
            path.push_back(u);
            on_path[u] = 1;
            extend(start);
            on_path[u] = 0;
            path.pop_back();
        }
    };

    for (int s = 0; s < n && keep_going; ++s)
    {
        path.assign(1, s);
        on_path[s] = 1;
        extend(s);
        on_path[s] = 0;
    }
    return keep_going;
}

CycleList enumerate_simple_cycles(const Graph& g, long long max_count)
{
    CycleList out;
    for_each_simple_cycle(g, [&](std::span<const int> cycle) {
        if (static_cast<long long>(out.cycles.size()) >= max_count)
        {
            out.truncated = true;
            return false;
        }
        out.cycles.emplace_back(cycle.begin(), cycle.end());
        return true;
    });
    return out;
}

std::vector<std::vector<int>> four_cycles(const Graph& g)
{
    std::vector<std::vector<int>> out;
    for_each_simple_cycle(
        g,
        [&](std::span<const int> cycle) {
            if (cycle.size() == 4)
                out.emplace_back(cycle.begin(), cycle.end());
            return true;
        },
        4);
    return out;
}

}   // namespace lovasz
