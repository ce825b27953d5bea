#include "lovasz/complex.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

#include "lovasz/error.hpp"

namespace lovasz {

// ---------------------------------------------------------------------------
// SimplicialComplex
// ---------------------------------------------------------------------------

SimplicialComplex::SimplicialComplex(std::vector<std::string> labels, std::vector<Simplex> generators)
    : labels_(std::move(labels))
{
    const int k = vertex_count();
    {
        std::set<std::string> seen;
        for (const auto& label : labels_)
            if (!seen.insert(label).second)
                throw InvalidInput("duplicate complex vertex label " + label);
    }
    std::vector<char> mentioned(k, 0);
    for (auto& s : generators)
    {
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw InvalidInput("simplex repeats a vertex");
        for (int v : s)
        {
            if (v < 0 || v >= k)
                throw InvalidInput("simplex vertex " + std::to_string(v) + " out of range");
            mentioned[v] = 1;
        }
    }
    for (int v = 0; v < k; ++v)
        if (!mentioned[v])
            generators.push_back({v});
    std::erase_if(generators, [](const Simplex& s) { return s.empty(); });

    // Keep maximal members: scan by decreasing size against kept facets.
    std::sort(generators.begin(), generators.end(), [](const Simplex& a, const Simplex& b) {
        return a.size() != b.size() ? a.size() > b.size() : a < b;
    });
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
    for (const auto& s : generators)
    {
        bool covered = std::any_of(facets_.begin(), facets_.end(), [&](const Simplex& f) {
            return f.size() > s.size() && std::includes(f.begin(), f.end(), s.begin(), s.end());
        });
        if (!covered)
            facets_.push_back(s);
    }
    std::sort(facets_.begin(), facets_.end());

    std::vector<std::set<Simplex>> by_dim;
    for (const auto& f : facets_)
    {
        const int size = static_cast<int>(f.size());
        if (static_cast<int>(by_dim.size()) < size)
            by_dim.resize(size);
        for (unsigned mask = 1; mask < (1u << size); ++mask)
        {
            Simplex face;
            for (int i = 0; i < size; ++i)
                if (mask >> i & 1u)
                    face.push_back(f[i]);
            by_dim[face.size() - 1].insert(std::move(face));
        }
    }
    for (auto& level : by_dim)
        faces_.emplace_back(level.begin(), level.end());
}

const std::vector<Simplex>& SimplicialComplex::faces(int dim) const
{
    static const std::vector<Simplex> none;
    if (dim < 0 || dim >= static_cast<int>(faces_.size()))
        return none;
    return faces_[dim];
}

bool SimplicialComplex::has_face(std::span<const int> simplex) const
{
    if (simplex.empty())
        return true;
    Simplex key(simplex.begin(), simplex.end());
    std::sort(key.begin(), key.end());
    const auto& level = faces(static_cast<int>(key.size()) - 1);
    return std::binary_search(level.begin(), level.end(), key);
}

std::vector<long long> SimplicialComplex::f_vector() const
{
    std::vector<long long> out;
    for (const auto& level : faces_)
        out.push_back(static_cast<long long>(level.size()));
    return out;
}

// ---------------------------------------------------------------------------
// Closed sets
// ---------------------------------------------------------------------------

std::vector<ClosedSet> closed_sets(const Graph& g)
{
    // Every closed set is an intersection of neighborhoods, so close the
    // family of neighborhoods under intersection with a generator.
    std::unordered_set<VertexSet, VertexSetHash> seen;
    std::vector<VertexSet> work;
    for (int v = 0; v < g.order(); ++v)
        if (!g.neighborhood(v).empty() && seen.insert(g.neighborhood(v)).second)
            work.push_back(g.neighborhood(v));
    for (std::size_t k = 0; k < work.size(); ++k)
    {
        for (int v = 0; v < g.order(); ++v)
        {
            VertexSet meet = work[k] & g.neighborhood(v);
            if (!meet.empty() && seen.insert(meet).second)
                work.push_back(std::move(meet));
        }
    }

    std::vector<ClosedSet> out;
    for (auto& s : work)
    {
        VertexSet partner = common_neighbors(g, s);
        if (partner.empty() || common_neighbors(g, partner) != s)
            throw Error("closed_sets: intersection " + s.to_string() + " is not closed");
        out.push_back({std::move(s), std::move(partner)});
    }
    std::sort(out.begin(), out.end(), [](const ClosedSet& a, const ClosedSet& b) { return a.set < b.set; });
    return out;
}

SimplicialComplex neighborhood_complex(const Graph& g)
{
    std::vector<int> local(g.order(), -1);
    std::vector<std::string> labels;
    for (int v = 0; v < g.order(); ++v)
    {
        if (g.degree(v) > 0)
        {
            local[v] = static_cast<int>(labels.size());
            labels.push_back(g.name(v));
        }
    }
    std::vector<Simplex> generators;
    for (int v = 0; v < g.order(); ++v)
    {
        Simplex s;
        for (int u : g.neighbors(v))
            s.push_back(local[u]);
        if (!s.empty())
            generators.push_back(std::move(s));
    }
    return SimplicialComplex(std::move(labels), std::move(generators));
}

std::string to_string(VertexKind kind)
{
    switch (kind)
    {
        case VertexKind::Singleton: return "singleton";
        case VertexKind::Neighborhood: return "neighborhood";
        case VertexKind::Diagonal: return "diagonal";
        case VertexKind::Other: return "other";
    }
    return "other";
}

int LovaszComplex::index_of(const VertexSet& s) const
{
    auto it = index.find(s);
    return it == index.end() ? -1 : it->second;
}

int LovaszComplex::singleton(int v) const
{
    return index_of(VertexSet(graph.order(), {v}));
}

int LovaszComplex::neighborhood(int v) const
{
    return index_of(graph.neighborhood(v));
}

namespace {

std::vector<std::string> set_labels(const std::vector<ClosedSet>& closed)
{
    std::vector<std::string> labels;
    for (const auto& c : closed)
        labels.push_back(c.set.to_string());
    return labels;
}

void index_closed_sets(LovaszComplex& lo)
{
    lo.index.clear();
    for (int i = 0; i < static_cast<int>(lo.closed.size()); ++i)
        lo.index.emplace(lo.closed[i].set, i);
}

// Kinds by precedence Singleton > Neighborhood > Diagonal > Other.
void assign_kinds(LovaszComplex& lo)
{
    const Graph& g = lo.graph;
    std::unordered_map<VertexSet, int, VertexSetHash> owner;
    for (int v = 0; v < g.order(); ++v)
        owner.emplace(g.neighborhood(v), v);
    lo.kinds.clear();
    for (const auto& c : lo.closed)
    {
        const bool is_neighborhood = owner.contains(c.set);
        if (c.set.size() == 1)
        {
            lo.kinds.push_back(VertexKind::Singleton);
            if (is_neighborhood)
                lo.warnings.push_back(c.set.to_string() + " is both a singleton and the neighborhood of "
                                      + std::to_string(owner.at(c.set)) + "; tagged singleton");
        }
        else if (is_neighborhood)
            lo.kinds.push_back(VertexKind::Neighborhood);
        else if (c.set.size() == 2 && c.partner.size() >= 2)
            lo.kinds.push_back(VertexKind::Diagonal);
        else
            lo.kinds.push_back(VertexKind::Other);
    }
}

}   // namespace

LovaszComplex lovasz_complex(const Graph& g)
{
    LovaszComplex lo;
    lo.graph = g;
    lo.closed = closed_sets(g);
    index_closed_sets(lo);
    const int k = static_cast<int>(lo.closed.size());

    lo.nu.resize(k);
    for (int i = 0; i < k; ++i)
        lo.nu[i] = lo.index_of(lo.closed[i].partner);

    // Cover relation of strict inclusion; facets are the maximal chains,
    // i.e. Hasse-diagram paths from minimal to maximal closed sets.
    std::vector<std::vector<int>> above(k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (i != j && lo.closed[i].set.subset_of(lo.closed[j].set))
                above[i].push_back(j);
    std::vector<std::vector<int>> covers(k);
    std::vector<char> minimal(k, 1);
    for (int i = 0; i < k; ++i)
    {
        for (int j : above[i])
        {
            minimal[j] = 0;
            bool direct = std::none_of(above[i].begin(), above[i].end(), [&](int m) {
                return m != j && lo.closed[m].set.subset_of(lo.closed[j].set);
            });
            if (direct)
                covers[i].push_back(j);
        }
    }
    std::vector<Simplex> chains;
    Simplex path;
    auto extend = [&](auto&& self, int v) -> void {
        path.push_back(v);
        if (covers[v].empty())
            chains.push_back(path);
        for (int w : covers[v])
            self(self, w);
        path.pop_back();
    };
    for (int i = 0; i < k; ++i)
        if (minimal[i])
            extend(extend, i);

    lo.base = SimplicialComplex(set_labels(lo.closed), std::move(chains));
    assign_kinds(lo);
    return lo;
}

LovaszComplex lovasz_from_quadrangulation(const EmbeddedGraph& e)
{
    require_hypotheses(e);
    const Graph& g = e.graph();
    const int n = g.order();

    std::map<VertexSet, VertexSet> partner;
    std::map<VertexSet, VertexKind> kind;
    auto note = [&](const VertexSet& s, const VertexSet& p, VertexKind k) {
        auto [it, fresh] = partner.emplace(s, p);
        if (!fresh && it->second != p)
            throw Error("face rule gives " + s.to_string() + " two partners");
        auto [kt, kfresh] = kind.emplace(s, k);
        if (!kfresh && static_cast<int>(k) < static_cast<int>(kt->second))
            kt->second = k;
    };

    std::vector<std::array<VertexSet, 3>> triangles;
    for (const auto& face : trace_faces(e).faces)
    {
        auto vs = face.vertices();
        for (int shift : {0, 1})
        {
            int a = vs[shift], b = vs[shift + 1], c = vs[shift + 2], d = vs[(shift + 3) % 4];
            VertexSet diag(n, {a, c});
            note(diag, VertexSet(n, {b, d}), VertexKind::Diagonal);
            for (int x : {a, c})
            {
                VertexSet single(n, {x});
                note(single, g.neighborhood(x), VertexKind::Singleton);
                for (int y : {b, d})
                {
                    note(g.neighborhood(y), VertexSet(n, {y}), VertexKind::Neighborhood);
                    triangles.push_back({single, diag, g.neighborhood(y)});
                }
            }
        }
    }

    LovaszComplex lo;
    lo.graph = g;
    for (const auto& [s, p] : partner)
        lo.closed.push_back({s, p});
    index_closed_sets(lo);
    const int k = static_cast<int>(lo.closed.size());
    lo.nu.resize(k);
    for (int i = 0; i < k; ++i)
    {
        lo.nu[i] = lo.index_of(lo.closed[i].partner);
        if (lo.nu[i] < 0)
            throw Error("face rule: partner of " + lo.closed[i].set.to_string() + " is not a vertex");
    }
    std::vector<Simplex> generators;
    for (const auto& t : triangles)
        generators.push_back({lo.index_of(t[0]), lo.index_of(t[1]), lo.index_of(t[2])});
    lo.base = SimplicialComplex(set_labels(lo.closed), std::move(generators));
    for (const auto& c : lo.closed)
        lo.kinds.push_back(kind.at(c.set));
    return lo;
}

KindReport classify_vertex_kinds(const LovaszComplex& lo, const EmbeddedGraph& e)
{
    require_hypotheses(e);
    std::set<std::pair<int, int>> opposite;
    for (const auto& face : trace_faces(e).faces)
    {
        auto vs = face.vertices();
        for (int k : {0, 1})
            opposite.emplace(std::min(vs[k], vs[k + 2]), std::max(vs[k], vs[k + 2]));
    }
    KindReport out;
    for (int i = 0; i < static_cast<int>(lo.kinds.size()); ++i)
    {
        switch (lo.kinds[i])
        {
            case VertexKind::Singleton: ++out.singletons; break;
            case VertexKind::Neighborhood: ++out.neighborhoods; break;
            case VertexKind::Diagonal:
            {
                ++out.diagonals;
                auto members = lo.closed[i].set.indices();
                if (!opposite.contains({members[0], members[1]}))
                    out.non_facial_diagonals.push_back(i);
                break;
            }
            case VertexKind::Other:
                ++out.others;
                out.other_vertices.push_back(i);
                break;
        }
    }
    return out;
}

std::optional<Simplex> involution_defect(const LovaszComplex& lo)
{
    for (const auto& facet : lo.base.facets())
    {
        Simplex image;
        for (int v : facet)
            image.push_back(lo.nu[v]);
        std::sort(image.begin(), image.end());
        if (image == facet || !lo.base.has_face(image))
            return facet;
        for (int v : facet)
            if (std::binary_search(facet.begin(), facet.end(), lo.nu[v]))
                return facet;
    }
    return std::nullopt;
}

QuotientComplex quotient_complex(const LovaszComplex& lo)
{
    if (auto bad = involution_defect(lo))
    {
        std::string face;
        for (int v : *bad)
            face += (face.empty() ? "" : " < ") + lo.closed[v].set.to_string();
        throw PreconditionError("involution is not free on face " + face);
    }
    QuotientComplex out;
    const int k = static_cast<int>(lo.closed.size());
    out.projection.assign(k, -1);
    std::vector<std::string> labels;
    for (int i = 0; i < k; ++i)
    {
        if (out.projection[i] >= 0)
            continue;
        int j = lo.nu[i];
        int orbit = static_cast<int>(out.orbits.size());
        out.orbits.push_back({i, j});
        out.projection[i] = out.projection[j] = orbit;
        labels.push_back(lo.closed[i].set.to_string() + "|" + lo.closed[j].set.to_string());
    }
    std::vector<Simplex> generators;
    for (const auto& facet : lo.base.facets())
    {
        Simplex image;
        for (int v : facet)
            image.push_back(out.projection[v]);
        generators.push_back(std::move(image));
    }
    out.complex = SimplicialComplex(std::move(labels), std::move(generators));
    return out;
}

}   // namespace lovasz
