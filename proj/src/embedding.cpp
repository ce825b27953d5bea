#include "lovasz/embedding.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

#include "lovasz/error.hpp"

namespace lovasz {

// ---------------------------------------------------------------------------
// EmbeddedGraph
// ---------------------------------------------------------------------------

EmbeddedGraph::EmbeddedGraph(Graph graph, std::vector<std::vector<int>> rotation,
                             std::vector<int> signs)
    : graph_(std::move(graph)), rotation_(std::move(rotation)), signs_(std::move(signs))
{
    const int n = graph_.order();
    if (static_cast<int>(rotation_.size()) != n)
        throw InvalidInput("expected " + std::to_string(n) + " rotations, got "
                           + std::to_string(rotation_.size()));
    if (static_cast<int>(signs_.size()) != graph_.size())
        throw InvalidInput("expected " + std::to_string(graph_.size()) + " edge signs, got "
                           + std::to_string(signs_.size()));
    position_.resize(n);
    for (int v = 0; v < n; ++v)
    {
        auto sorted = rotation_[v];
        std::sort(sorted.begin(), sorted.end());
        if (sorted != graph_.neighbors(v))
            throw InvalidInput("rotation at vertex " + std::to_string(v)
                               + " is not a permutation of its neighbors");
        position_[v].assign(n, -1);
        for (int k = 0; k < static_cast<int>(rotation_[v].size()); ++k)
            position_[v][rotation_[v][k]] = k;
    }
    for (int e = 0; e < graph_.size(); ++e)
        if (signs_[e] != 1 && signs_[e] != -1)
            throw InvalidInput("sign of edge [" + std::to_string(graph_.edges()[e].first) + ","
                               + std::to_string(graph_.edges()[e].second) + "] must be 1 or -1");
    if (!is_connected(graph_))
        throw InvalidInput("embedded graph must be connected");
}

int EmbeddedGraph::position(int v, int u) const
{
    return position_[v][u];
}

EmbeddedGraph reorient_vertex(const EmbeddedGraph& e, int v)
{
    auto rotation = e.rotations();
    std::reverse(rotation[v].begin(), rotation[v].end());
    auto signs = e.signs();
    for (int u : e.graph().neighbors(v))
        signs[e.graph().edge_index(u, v)] *= -1;
    return EmbeddedGraph(e.graph(), std::move(rotation), std::move(signs));
}

EmbeddedGraph relabel(const EmbeddedGraph& e, std::span<const int> perm)
{
    const Graph& g = e.graph();
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges())
        edges.emplace_back(perm[u], perm[v]);
    std::vector<std::string> names;
    if (g.has_names())
    {
        names.resize(g.order());
        for (int v = 0; v < g.order(); ++v)
            names[perm[v]] = g.name(v);
    }
    Graph h(g.order(), edges, std::move(names));
    std::vector<std::vector<int>> rotation(g.order());
    for (int v = 0; v < g.order(); ++v)
        for (int u : e.rotation(v))
            rotation[perm[v]].push_back(perm[u]);
    std::vector<int> signs(h.size());
    for (int k = 0; k < g.size(); ++k)
    {
        auto [u, v] = g.edges()[k];
        signs[h.edge_index(perm[u], perm[v])] = e.sign(k);
    }
    return EmbeddedGraph(std::move(h), std::move(rotation), std::move(signs));
}

// ---------------------------------------------------------------------------
// Faces
// ---------------------------------------------------------------------------

std::vector<int> FaceWalk::vertices() const
{
    std::vector<int> out;
    out.reserve(darts.size());
    for (const auto& d : darts)
        out.push_back(d.from);
    return out;
}

namespace {

// A tracing state: about to leave v along rotation slot `slot` while the
// local orientation is `orient`.
struct TraceState
{
    int v;
    int slot;
    int orient;

    bool operator==(const TraceState&) const = default;
};

int wrap(int k, int d)
{
    return ((k % d) + d) % d;
}

TraceState step(const EmbeddedGraph& e, TraceState s)
{
    int u = e.rotation(s.v)[s.slot];
    int orient = s.orient * e.sign(s.v, u);
    int back = e.position(u, s.v);
    return {u, wrap(back + orient, e.graph().degree(u)), orient};
}

}   // namespace

FaceTrace trace_faces(const EmbeddedGraph& e)
{
    const Graph& g = e.graph();
    std::vector<int> offset(g.order() + 1, 0);
    for (int v = 0; v < g.order(); ++v)
        offset[v + 1] = offset[v] + g.degree(v);
    auto id = [&](const TraceState& s) { return 2 * (offset[s.v] + s.slot) + (s.orient < 0); };

    std::vector<char> used(2 * offset[g.order()], 0);
    FaceTrace out;
    int total = 0;
    for (int v = 0; v < g.order(); ++v)
    {
        for (int slot = 0; slot < g.degree(v); ++slot)
        {
            for (int orient : {1, -1})
            {
                TraceState start{v, slot, orient};
                if (used[id(start)])
                    continue;
                FaceWalk face;
                TraceState cur = start;
                do
                {
                    used[id(cur)] = 1;
                    // The same face traced backwards.
                    TraceState mirror{cur.v, wrap(cur.slot - cur.orient, g.degree(cur.v)), -cur.orient};
                    used[id(mirror)] = 1;
                    face.darts.push_back({cur.v, e.rotation(cur.v)[cur.slot]});
                    cur = step(e, cur);
                } while (!(cur == start));
                total += face.length();
                out.faces.push_back(std::move(face));
            }
        }
    }
    if (total != 2 * g.size())
        throw Error("face tracing consumed " + std::to_string(total) + " darts, expected "
                    + std::to_string(2 * g.size()));
    out.euler_characteristic = g.order() - g.size() + static_cast<int>(out.faces.size());
    return out;
}

std::vector<int> canonical_walk(std::span<const int> walk)
{
    const std::size_t len = walk.size();
    std::vector<int> best;
    std::vector<int> candidate(len);
    for (std::size_t start = 0; start < len; ++start)
    {
        for (int dir : {1, -1})
        {
            for (std::size_t i = 0; i < len; ++i)
                candidate[i] = walk[(start + len + dir * static_cast<long>(i)) % len];
            if (best.empty() || candidate < best)
                best = candidate;
        }
    }
    return best;
}

bool is_orientable(const EmbeddedGraph& e)
{
    const Graph& g = e.graph();
    std::vector<int> orient(g.order(), 0);
    orient[0] = 1;
    std::vector<int> stack{0};
    while (!stack.empty())
    {
        int v = stack.back();
        stack.pop_back();
        for (int u : g.neighbors(v))
        {
            int want = orient[v] * e.sign(v, u);
            if (orient[u] == 0)
            {
                orient[u] = want;
                stack.push_back(u);
            }
            else if (orient[u] != want)
                return false;
        }
    }
    return true;
}

SurfaceClass embedding_surface(const EmbeddedGraph& e)
{
    return SurfaceClass::from_euler(trace_faces(e).euler_characteristic, is_orientable(e));
}

bool is_quadrangulation(const EmbeddedGraph& e)
{
    for (const auto& face : trace_faces(e).faces)
    {
        if (face.length() != 4)
            return false;
        auto vs = face.vertices();
        std::sort(vs.begin(), vs.end());
        if (std::adjacent_find(vs.begin(), vs.end()) != vs.end())
            return false;
    }
    return true;
}

FacialVerdict all_4cycles_facial(const EmbeddedGraph& e)
{
    if (!is_quadrangulation(e))
        throw PreconditionError("all_4cycles_facial requires a quadrangulation");
    std::set<std::vector<int>> faces;
    for (const auto& face : trace_faces(e).faces)
        faces.insert(canonical_walk(face.vertices()));
    FacialVerdict out;
    for (const auto& cycle : four_cycles(e.graph()))
    {
        ++out.four_cycle_count;
        if (!out.witness && !faces.contains(canonical_walk(cycle)))
        {
            out.all_facial = false;
            out.witness = cycle;
        }
    }
    return out;
}

bool is_k23(const Graph& g)
{
    if (g.order() != 5 || g.size() != 6)
        return false;
    auto verdict = is_bipartite(g);
    if (!verdict.bipartite)
        return false;
    int ones = std::count(verdict.coloring.begin(), verdict.coloring.end(), 1);
    // Bipartite with shores 2 and 3 and 6 edges is complete bipartite.
    return ones == 2 || ones == 3;
}

HypothesisCheck check_hypotheses(const EmbeddedGraph& e)
{
    HypothesisCheck out;
    const Graph& g = e.graph();
    out.k23 = is_k23(g);
    out.connected = is_connected(g);
    out.bipartite = is_bipartite(g).bipartite;
    out.quadrangulation = is_quadrangulation(e);
    if (out.quadrangulation)
    {
        auto facial = all_4cycles_facial(e);
        out.all_facial = facial.all_facial;
        out.non_facial_witness = facial.witness;
    }
    if (out.k23)
        out.failure = "K2,3";
    else if (!out.connected)
        out.failure = "disconnected";
    else if (out.bipartite)
        out.failure = "bipartite";
    else if (!out.quadrangulation)
        out.failure = "not a quadrangulation";
    else if (!*out.all_facial)
        out.failure = "non-facial 4-cycle";
    return out;
}

void require_hypotheses(const EmbeddedGraph& e)
{
    auto check = check_hypotheses(e);
    if (check.failure)
    {
        std::string detail = "the double-cover construction needs a connected non-bipartite "
                             "quadrangulation, not K2,3, with every 4-cycle facial";
        if (*check.failure == "non-facial 4-cycle" && check.non_facial_witness)
        {
            detail = "4-cycle";
            for (int v : *check.non_facial_witness)
                detail += " " + std::to_string(v);
            detail += " bounds no face";
        }
        throw HypothesisError(*check.failure, detail);
    }
}

// ---------------------------------------------------------------------------
// Functionals
// ---------------------------------------------------------------------------

bool Z2Functional::is_zero() const
{
    return std::all_of(values.begin(), values.end(), [](auto x) { return x == 0; });
}

std::uint8_t Z2Functional::evaluate(const CycleSpaceBasis& basis, const EdgeVector& z) const
{
    auto coords = decompose(basis, z);
    std::uint8_t out = 0;
    for (std::size_t i = 0; i < coords.size(); ++i)
        out ^= coords[i] & values[i];
    return out;
}

std::uint8_t one_sidedness(const EmbeddedGraph& e, const EdgeVector& z)
{
    std::uint8_t out = 0;
    for (std::size_t k = 0; k < z.size(); ++k)
        if (z[k] && e.sign(static_cast<int>(k)) < 0)
            out ^= 1;
    return out;
}

std::uint8_t parity(const EdgeVector& z)
{
    std::uint8_t out = 0;
    for (auto bit : z)
        out ^= bit;
    return out;
}

Z2Functional one_sidedness_functional(const EmbeddedGraph& e, const CycleSpaceBasis& basis)
{
    Z2Functional f;
    for (const auto& cycle : basis.cycles)
    {
        std::uint8_t value = 0;
        for (int k : cycle.edges)
            value ^= e.sign(k) < 0;
        f.values.push_back(value);
    }
    return f;
}

Z2Functional parity_functional(const Graph&, const CycleSpaceBasis& basis)
{
    Z2Functional f;
    for (const auto& cycle : basis.cycles)
        f.values.push_back(cycle.edges.size() % 2);
    return f;
}

EvenOneSidedVerdict has_even_one_sided_class(const EmbeddedGraph& e)
{
    const Graph& g = e.graph();
    auto basis = cycle_space_basis(g);
    auto w = one_sidedness_functional(e, basis);
    auto p = parity_functional(g, basis);
    EvenOneSidedVerdict out;
    if (w.is_zero() || w == p)
        return out;

    out.present = true;
    auto as_edges = [&](int i) {
        EdgeVector z(g.size(), 0);
        for (int k : basis.cycles[i].edges)
            z[k] ^= 1;
        return z;
    };
    int one_sided_odd = -1, two_sided_odd = -1;
    for (int i = 0; i < basis.dimension(); ++i)
    {
        if (w.values[i] && !p.values[i])
        {
            out.witness = as_edges(i);
            return out;
        }
        if (w.values[i] && one_sided_odd < 0)
            one_sided_odd = i;
        if (!w.values[i] && p.values[i] && two_sided_odd < 0)
            two_sided_odd = i;
    }
    auto z = as_edges(one_sided_odd);
    auto y = as_edges(two_sided_odd);
    for (std::size_t k = 0; k < z.size(); ++k)
        z[k] ^= y[k];
    out.witness = z;
    return out;
}

// ---------------------------------------------------------------------------
// Cup products
// ---------------------------------------------------------------------------

CupProducts cup_products(const EmbeddedGraph& e)
{
    if (!is_quadrangulation(e))
        throw PreconditionError("cup_products requires a quadrangulation");

    CupProducts out;
    for (const auto& face : trace_faces(e).faces)
    {
        auto vs = face.vertices();
        int w[4], p[4];
        for (int k = 0; k < 4; ++k)
        {
            w[k] = e.sign(vs[k], vs[(k + 1) % 4]) < 0;
            p[k] = 1;
        }
        // Split along the diagonal vs[0]-vs[2]. Side values of each triangle
        // are listed against its vertex pairs; the diagonal carries the sum
        // of the two boundary sides it shortcuts.
        struct Side { int a, b, w, p; };
        const Side diag{vs[0], vs[2], (w[0] + w[1]) % 2, (p[0] + p[1]) % 2};
        const std::array<std::array<Side, 3>, 2> triangles{{
            {{{vs[0], vs[1], w[0], p[0]}, {vs[1], vs[2], w[1], p[1]}, diag}},
            {{{vs[2], vs[3], w[2], p[2]}, {vs[3], vs[0], w[3], p[3]}, diag}},
        }};
        for (const auto& tri : triangles)
        {
            std::array<int, 3> order{tri[0].a, tri[0].b, tri[1].a == tri[0].a || tri[1].a == tri[0].b
                                                            ? tri[1].b : tri[1].a};
            std::sort(order.begin(), order.end());
            auto side = [&](int x, int y) -> const Side& {
                for (const auto& s : tri)
                    if ((s.a == x && s.b == y) || (s.a == y && s.b == x))
                        return s;
                throw Error("cup_products: malformed triangle");
            };
            const Side& front = side(order[0], order[1]);
            const Side& back = side(order[1], order[2]);
            out.w1_p ^= front.w & back.p;
            out.p_p ^= front.p & back.p;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Cutting
// ---------------------------------------------------------------------------

namespace {

/**
 * Side bookkeeping for cutting along a simple cycle c_0 .. c_{l-1}.
 *
 * The walker's local orientation is carried along the cycle; at c_i the
 * rotation slots strictly between "next" and "prev" (in the direction of
 * that orientation) form the left side. The left copy of c_i keeps the
 * original vertex id, the right copy gets id n + i.
 */
class CycleCut
{
    public:
        explicit CycleCut(const EmbeddedGraph& e) : e_(e), index_(e.order(), -1), offset_(e.order() + 1, 0)
        {
            for (int v = 0; v < e.order(); ++v)
                offset_[v + 1] = offset_[v] + e.graph().degree(v);
            left_.assign(offset_.back(), 0);
        }

        CycleCut(const EmbeddedGraph& e, std::span<const int> cycle) : CycleCut(e) { load(cycle); }

        /// Prepare side data for a new cycle; the previous one is dropped.
        void load(std::span<const int> cycle)
        {
            for (int v : cycle_)
                index_[v] = -1;
            cycle_.clear();
            const Graph& g = e_.graph();
            const int n = g.order();
            const int len = static_cast<int>(cycle.size());
            if (len < 3)
                throw PreconditionError("cut_along_cycle: a simple cycle has at least 3 vertices");
            for (int i = 0; i < len; ++i)
            {
                int v = cycle[i];
                if (v < 0 || v >= n)
                    throw PreconditionError("cut_along_cycle: vertex out of range");
                if (index_[v] >= 0)
                {
                    for (int k = 0; k < i; ++k)
                        index_[cycle[k]] = -1;
                    throw PreconditionError("cut_along_cycle: vertex " + std::to_string(v) + " repeats");
                }
                index_[v] = i;
            }
            cycle_.assign(cycle.begin(), cycle.end());
            for (int i = 0; i < len; ++i)
            {
                int v = cycle[i], next = cycle[(i + 1) % len];
                if (!g.adjacent(v, next))
                {
                    for (int u : cycle_)
                        index_[u] = -1;
                    cycle_.clear();
                    throw PreconditionError("cut_along_cycle: " + std::to_string(v) + " and "
                                            + std::to_string(next) + " are not adjacent");
                }
            }
            int orient = 1;
            for (int i = 0; i < len; ++i)
            {
                int v = cycle[i];
                int prev = cycle[(i + len - 1) % len];
                int next = cycle[(i + 1) % len];
                const int d = g.degree(v);
                int p = e_.position(v, prev), q = e_.position(v, next);
                char* left = left_.data() + offset_[v];
                std::fill(left, left + d, 0);
                for (int k = wrap(q + orient, d); k != p; k = wrap(k + orient, d))
                    left[k] = 1;
                if (i + 1 < len)
                    orient *= e_.sign(v, next);
                else
                    one_sided_ = orient * e_.sign(v, next) < 0;
            }
        }

        bool one_sided() const noexcept { return one_sided_; }
        int vertex_count() const noexcept { return e_.order() + static_cast<int>(cycle_.size()); }

        /// New id of the copy of `v` that the edge towards neighbor `u`
        /// attaches to. For cycle edges `side_of_strip` picks the strip
        /// (0 left, 1 right) as seen from v.
        int copy_towards(int v, int u, int side_of_strip = -1) const
        {
            int i = index_[v];
            if (i < 0)
                return v;
            int side = is_cycle_edge(v, u) ? side_of_strip : (left_[offset_[v] + e_.position(v, u)] ? 0 : 1);
            return side == 0 ? v : e_.order() + i;
        }

        bool is_cycle_edge(int v, int u) const
        {
            int i = index_[v];
            if (i < 0 || index_[u] < 0)
                return false;
            const int len = static_cast<int>(cycle_.size());
            return cycle_[(i + 1) % len] == u || cycle_[(i + len - 1) % len] == u;
        }

        /// Strip side at u matching strip side `side` at v across cycle edge
        /// (v, u): sides swap only across the closing edge of a one-sided
        /// cycle.
        int matching_side(int v, int u, int side) const
        {
            const int len = static_cast<int>(cycle_.size());
            int i = index_[v], j = index_[u];
            bool closing = (i == len - 1 && j == 0) || (i == 0 && j == len - 1);
            return (closing && one_sided_) ? 1 - side : side;
        }

        bool on_cycle(int v) const { return index_[v] >= 0; }
        int cycle_index(int v) const { return index_[v]; }
        bool left_slot(int v, int slot) const { return left_[offset_[v] + slot]; }

        /// Calls f(a, b, sign) for every edge of the cut graph.
        template <class F>
        void for_each_edge(F&& f) const
        {
            const Graph& g = e_.graph();
            for (int k = 0; k < g.size(); ++k)
            {
                auto [u, v] = g.edges()[k];
                int s = e_.sign(k);
                if (is_cycle_edge(u, v))
                {
                    for (int side : {0, 1})
                        f(copy_towards(u, v, side), copy_towards(v, u, matching_side(u, v, side)), s);
                }
                else
                    f(copy_towards(u, v), copy_towards(v, u), s);
            }
        }

    private:
        const EmbeddedGraph& e_;
        std::vector<int> cycle_;
        std::vector<int> index_;
        std::vector<int> offset_;
        std::vector<char> left_;
        bool one_sided_ = false;
};

/// Reusable orientability test of cut surfaces: union-find with parity
/// over the cut graph's signed edges.
class CutOrientability
{
    public:
        explicit CutOrientability(const EmbeddedGraph& e)
            : cut_(e), parent_(2 * e.order()), rel_(2 * e.order())
        {
        }

        bool operator()(std::span<const int> cycle)
        {
            cut_.load(cycle);
            const int count = cut_.vertex_count();
            std::iota(parent_.begin(), parent_.begin() + count, 0);
            std::fill(rel_.begin(), rel_.begin() + count, 0);
            bool ok = true;
            cut_.for_each_edge([&](int a, int b, int sign) {
                if (!ok)
                    return;
                auto [ra, pa] = find(a);
                auto [rb, pb] = find(b);
                int flip = sign < 0;
                if (ra == rb)
                    ok = (pa ^ pb) == flip;
                else
                {
                    parent_[ra] = rb;
                    rel_[ra] = pa ^ pb ^ flip;
                }
            });
            return ok;
        }

    private:
        std::pair<int, int> find(int x)
        {
            int acc = 0, root = x;
            while (parent_[root] != root)
            {
                acc ^= rel_[root];
                root = parent_[root];
            }
            int cur = x, cur_acc = acc;
            while (parent_[cur] != cur)
            {
                int next = parent_[cur], next_acc = cur_acc ^ rel_[cur];
                parent_[cur] = root;
                rel_[cur] = cur_acc;
                cur = next;
                cur_acc = next_acc;
            }
            return {root, acc};
        }

        CycleCut cut_;
        std::vector<int> parent_;
        std::vector<int> rel_;
};

}   // namespace

bool cut_is_orientable(const EmbeddedGraph& e, std::span<const int> cycle)
{
    return CutOrientability(e)(cycle);
}

CutSurface cut_along_cycle(const EmbeddedGraph& e, std::span<const int> cycle)
{
    const Graph& g = e.graph();
    CycleCut cut(e, cycle);
    const int total = cut.vertex_count();
    const int n = g.order();

    // Rotation at each copy: the original rotation restricted to its side
    // plus the two cycle slots, in original forward order.
    std::vector<std::vector<int>> rotation(total);
    std::vector<int> origin(total, -1);
    for (int v = 0; v < n; ++v)
    {
        origin[v] = v;
        if (!cut.on_cycle(v))
        {
            for (int u : e.rotation(v))
                rotation[v].push_back(cut.copy_towards(u, v));
            continue;
        }
        int i = cut.cycle_index(v);
        origin[n + i] = v;
        for (int slot = 0; slot < g.degree(v); ++slot)
        {
            int u = e.rotation(v)[slot];
            if (cut.is_cycle_edge(v, u))
            {
                for (int side : {0, 1})
                {
                    int copy = side == 0 ? v : n + i;
                    rotation[copy].push_back(cut.copy_towards(u, v, cut.matching_side(v, u, side)));
                }
            }
            else
            {
                int copy = cut.left_slot(v, slot) ? v : n + i;
                rotation[copy].push_back(cut.copy_towards(u, v));
            }
        }
    }
    std::vector<Edge> edge_list;
    std::map<Edge, int> sign_of;
    cut.for_each_edge([&](int a, int b, int sign) {
        Edge key{std::min(a, b), std::max(a, b)};
        edge_list.push_back(key);
        sign_of[key] = sign;
    });

    Graph whole(total, edge_list);
    CutSurface out;
    out.one_sided = cut.one_sided();
    out.euler_characteristic = 0;
    for (const auto& comp : connected_components(whole))
    {
        std::vector<int> local(total, -1);
        for (int k = 0; k < static_cast<int>(comp.size()); ++k)
            local[comp[k]] = k;
        std::vector<Edge> comp_edges;
        for (auto [a, b] : edge_list)
            if (local[a] >= 0)
                comp_edges.emplace_back(local[a], local[b]);
        std::vector<std::string> names;
        if (g.has_names())
            for (int x : comp)
                names.push_back(g.name(origin[x]) + (x >= n ? "'" : ""));
        Graph h(static_cast<int>(comp.size()), comp_edges, std::move(names));
        std::vector<std::vector<int>> rot(comp.size());
        std::vector<int> comp_origin;
        for (int k = 0; k < static_cast<int>(comp.size()); ++k)
        {
            for (int x : rotation[comp[k]])
                rot[k].push_back(local[x]);
            comp_origin.push_back(origin[comp[k]]);
        }
        std::vector<int> signs(h.size());
        for (auto [a, b] : edge_list)
            if (local[a] >= 0)
                signs[h.edge_index(local[a], local[b])] = sign_of[{a, b}];
        EmbeddedGraph piece(std::move(h), std::move(rot), std::move(signs));
        out.orientable = out.orientable && is_orientable(piece);
        out.euler_characteristic += trace_faces(piece).euler_characteristic;
        out.components.push_back(std::move(piece));
        out.origin.push_back(std::move(comp_origin));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Oddness
// ---------------------------------------------------------------------------

OracleResult orientizing_cycle_oracle(const EmbeddedGraph& e, long long cycle_cap)
{
    OracleResult out;
    CutOrientability cut_orientable(e);
    bool complete = for_each_simple_cycle(e.graph(), [&](std::span<const int> cycle) {
        if (out.cycles_examined >= cycle_cap)
            return false;
        ++out.cycles_examined;
        if (cycle.size() % 2 == 0)
            return true;
        if (cut_orientable(cycle))
        {
            out.found = true;
            out.witness = OrientizingWitness{{cycle.begin(), cycle.end()},
                                             static_cast<int>(cycle.size()), true};
            return false;
        }
        return true;
    });
    out.exhaustive = complete || out.found;
    return out;
}

CycleOracleResult even_one_sided_cycle_oracle(const EmbeddedGraph& e, long long cycle_cap)
{
    CycleOracleResult out;
    const Graph& g = e.graph();
    bool complete = for_each_simple_cycle(g, [&](std::span<const int> cycle) {
        if (out.cycles_examined >= cycle_cap)
            return false;
        ++out.cycles_examined;
        if (cycle.size() % 2 != 0)
            return true;
        int negatives = 0;
        for (std::size_t i = 0; i < cycle.size(); ++i)
            negatives += e.sign(cycle[i], cycle[(i + 1) % cycle.size()]) < 0;
        if (negatives % 2)
        {
            out.found = true;
            out.cycle = std::vector<int>(cycle.begin(), cycle.end());
            return false;
        }
        return true;
    });
    out.exhaustive = complete || out.found;
    return out;
}

OddnessVerdict is_odd_quadrangulation(const EmbeddedGraph& e, bool run_oracle, long long cycle_cap)
{
    if (is_bipartite(e.graph()).bipartite)
        throw HypothesisError("bipartite", "oddness is defined for non-bipartite quadrangulations");
    if (!is_quadrangulation(e))
        throw HypothesisError("not a quadrangulation", "some face is not a 4-cycle");
    if (is_orientable(e))
        throw HypothesisError("orientable", "oddness is defined on non-orientable surfaces");

    OddnessVerdict out;
    out.cup = cup_products(e);
    if (out.cup.w1_p != out.cup.p_p)
        throw Error("cup products w1.p and p.p disagree; the embedding is inconsistent");
    out.odd = out.cup.w1_p == 1;
    if (run_oracle)
        out.oracle = orientizing_cycle_oracle(e, cycle_cap);
    return out;
}

// ---------------------------------------------------------------------------
// Embedded isomorphism
// ---------------------------------------------------------------------------

namespace {

class EmbeddedIsomorphismSearch
{
    public:
        EmbeddedIsomorphismSearch(const EmbeddedGraph& a, const EmbeddedGraph& b) : a_(a), b_(b)
        {
            for (const auto& f : trace_faces(a).faces)
                faces_a_.push_back(f.vertices());
            for (const auto& f : trace_faces(b).faces)
            {
                auto c = canonical_walk(f.vertices());
                ++faces_b_[c];
            }
        }

        std::optional<std::vector<int>> run()
        {
            const Graph& ga = a_.graph();
            const Graph& gb = b_.graph();
            if (ga.order() != gb.order() || ga.size() != gb.size() || faces_a_.size() != total_b())
                return std::nullopt;
            auto degrees = [](const Graph& g) {
                std::vector<int> d;
                for (int v = 0; v < g.order(); ++v)
                    d.push_back(g.degree(v));
                std::sort(d.begin(), d.end());
                return d;
            };
            if (degrees(ga) != degrees(gb))
                return std::nullopt;

            // BFS order so every vertex after the first has a mapped neighbor.
            std::vector<int> seen(ga.order(), 0);
            std::queue<int> queue;
            queue.push(0);
            seen[0] = 1;
            while (!queue.empty())
            {
                int v = queue.front();
                queue.pop();
                order_.push_back(v);
                for (int u : ga.neighbors(v))
                    if (!seen[u]) { seen[u] = 1; queue.push(u); }
            }
            std::vector<int> rank(ga.order());
            for (int k = 0; k < ga.order(); ++k)
                rank[order_[k]] = k;
            // Each face is checked once its last vertex (in search order) is mapped.
            closing_.assign(ga.order(), {});
            for (std::size_t f = 0; f < faces_a_.size(); ++f)
            {
                int last = 0;
                for (int v : faces_a_[f])
                    last = std::max(last, rank[v]);
                closing_[last].push_back(static_cast<int>(f));
            }
            map_.assign(ga.order(), -1);
            used_.assign(ga.order(), 0);
            if (extend(0))
                return map_;
            return std::nullopt;
        }

    private:
        std::size_t total_b() const
        {
            std::size_t t = 0;
            for (const auto& [k, c] : faces_b_)
                t += c;
            return t;
        }

        bool extend(int depth)
        {
            const Graph& ga = a_.graph();
            const Graph& gb = b_.graph();
            if (depth == ga.order())
                return faces_match();
            int v = order_[depth];
            for (int image = 0; image < gb.order(); ++image)
            {
                if (used_[image] || gb.degree(image) != ga.degree(v))
                    continue;
                bool ok = true;
                for (int k = 0; k < depth && ok; ++k)
                {
                    int u = order_[k];
                    ok = ga.adjacent(v, u) == gb.adjacent(image, map_[u]);
                }
                if (!ok)
                    continue;
                map_[v] = image;
                used_[image] = 1;
                if (faces_closed_ok(depth) && extend(depth + 1))
                    return true;
                map_[v] = -1;
                used_[image] = 0;
            }
            return false;
        }

        std::vector<int> image_of(const std::vector<int>& face) const
        {
            std::vector<int> out;
            for (int v : face)
                out.push_back(map_[v]);
            return canonical_walk(out);
        }

        bool faces_closed_ok(int depth) const
        {
            for (int f : closing_[depth])
                if (!faces_b_.contains(image_of(faces_a_[f])))
                    return false;
            return true;
        }

        bool faces_match() const
        {
            std::map<std::vector<int>, int> images;
            for (const auto& face : faces_a_)
                ++images[image_of(face)];
            return images == faces_b_;
        }

        const EmbeddedGraph& a_;
        const EmbeddedGraph& b_;
        std::vector<std::vector<int>> faces_a_;
        std::map<std::vector<int>, int> faces_b_;
        std::vector<int> order_;
        std::vector<std::vector<int>> closing_;
        std::vector<int> map_;
        std::vector<char> used_;
};

}   // namespace

std::optional<std::vector<int>> embedded_isomorphism(const EmbeddedGraph& a, const EmbeddedGraph& b)
{
    return EmbeddedIsomorphismSearch(a, b).run();
}

bool embedded_isomorphic(const EmbeddedGraph& a, const EmbeddedGraph& b)
{
    return embedded_isomorphism(a, b).has_value();
}

}   // namespace lovasz
