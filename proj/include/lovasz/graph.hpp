/**
 * Finite simple graphs and the common-neighbor machinery built on them:
 * CN and CN^2, hypothesis checks (bipartiteness, K_{2,3}, domination),
 * exact chromatic number, the Kronecker double cover and the GF(2) cycle
 * space.
 */
#ifndef LOVASZ_GRAPH_HPP
#define LOVASZ_GRAPH_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lovasz/vertex_set.hpp"

namespace lovasz {

using Edge = std::pair<int, int>;

/**
 * Undirected simple graph on vertices 0..n-1. Immutable once built.
 *
 * Edges are numbered 0..m-1 in ascending (u, v) order with u < v; the
 * numbering is what cycle-space vectors and sign tables index into.
 */
class Graph
{
    public:
        Graph() = default;

        /// Throws InvalidInput on n < 1, out-of-range endpoints, loops or
        /// duplicate edges. Edge orientation in the input does not matter.
        Graph(int n, std::span<const Edge> edges, std::vector<std::string> names = {});

        Graph(int n, std::initializer_list<Edge> edges)
            : Graph(n, std::span<const Edge>(edges.begin(), edges.size()))
        {
        }

        int order() const noexcept { return n_; }
        int size() const noexcept { return static_cast<int>(edges_.size()); }

        const std::vector<int>& neighbors(int v) const { return adj_[v]; }
        const VertexSet& neighborhood(int v) const { return nbhd_[v]; }
        int degree(int v) const { return static_cast<int>(adj_[v].size()); }

        bool adjacent(int u, int v) const { return nbhd_[u].contains(v); }

        /// Index of edge {u, v}, or -1 when absent.
        int edge_index(int u, int v) const;

        const std::vector<Edge>& edges() const noexcept { return edges_; }

        bool has_names() const noexcept { return !names_.empty(); }
        const std::vector<std::string>& names() const noexcept { return names_; }
        std::string name(int v) const { return names_.empty() ? std::to_string(v) : names_[v]; }

        VertexSet empty_set() const { return VertexSet(n_); }
        VertexSet all_vertices() const { return VertexSet::full(n_); }

        bool operator==(const Graph& other) const
        {
            return n_ == other.n_ && edges_ == other.edges_;
        }

    private:
        int n_ = 0;
        std::vector<std::vector<int>> adj_;
        std::vector<std::vector<int>> adj_edge_;
        std::vector<VertexSet> nbhd_;
        std::vector<Edge> edges_;
        std::vector<std::string> names_;
};

// ---------------------------------------------------------------------------
// Common neighbors
// ---------------------------------------------------------------------------

/// {v : v adjacent to every u in a}; the whole vertex set when a is empty.
VertexSet common_neighbors(const Graph& g, const VertexSet& a);

/// CN(CN(a)).
VertexSet cn_closure(const Graph& g, const VertexSet& a);

// ---------------------------------------------------------------------------
// Hypothesis checks
// ---------------------------------------------------------------------------

std::vector<std::vector<int>> connected_components(const Graph& g);
bool is_connected(const Graph& g);

struct BipartiteVerdict
{
    bool bipartite = false;
    std::vector<int> coloring;      ///< 0/1 per vertex when bipartite
    std::vector<int> odd_cycle;     ///< simple odd cycle when not
};

BipartiteVerdict is_bipartite(const Graph& g);

/// Shores of a K_{2,3} subgraph: {a1, a2} and {b1, b2, b3}.
struct K23Witness
{
    std::array<int, 2> pair;
    std::array<int, 3> triple;
};

/// Exhaustive scan over vertex pairs with |CN| >= 3.
std::optional<K23Witness> find_k23(const Graph& g);

/// First (u, v), u != v, in lexicographic order with N(u) contained in N(v).
std::optional<Edge> find_domination(const Graph& g);

// ---------------------------------------------------------------------------
// Chromatic number
// ---------------------------------------------------------------------------

struct ChromaticResult
{
    int chromatic_number = 0;
    int clique_lower_bound = 0;
    int greedy_upper_bound = 0;
    std::vector<int> coloring;
};

inline constexpr int kDefaultChromaticCap = 64;

/**
 * Exact chromatic number by DSATUR branch and bound, seeded with a greedy
 * clique (lower) and a greedy DSATUR coloring (upper).
 *
 * Throws PreconditionError when the graph has more than `cap` vertices.
 */
ChromaticResult chromatic_number(const Graph& g, int cap = kDefaultChromaticCap);

/// Largest clique found by greedy extension from every vertex.
std::vector<int> greedy_clique(const Graph& g);

// ---------------------------------------------------------------------------
// Kronecker double cover
// ---------------------------------------------------------------------------

/// Vertex (v, layer) is numbered v + layer * n.
struct DoubleCover
{
    Graph graph;
    std::vector<int> involution;
};

DoubleCover kronecker_cover(const Graph& g);

// ---------------------------------------------------------------------------
// Cycle space over GF(2)
// ---------------------------------------------------------------------------

/// Edge-indexed GF(2) vector; entry e is 1 iff edge e is in the set.
using EdgeVector = std::vector<std::uint8_t>;

struct FundamentalCycle
{
    int non_tree_edge = -1;
    std::vector<int> vertices;      ///< closed walk without the repeated endpoint
    std::vector<int> edges;
};

struct CycleSpaceBasis
{
    std::vector<int> tree_edges;
    std::vector<FundamentalCycle> cycles;
    std::vector<int> cycle_of_edge;     ///< basis index for each non-tree edge, -1 on tree edges

    int dimension() const noexcept { return static_cast<int>(cycles.size()); }
};

/// BFS spanning tree from vertex 0. Throws PreconditionError when g is
/// disconnected.
CycleSpaceBasis cycle_space_basis(const Graph& g);

/// Edge vector of a closed vertex sequence (consecutive entries adjacent,
/// last adjacent to first).
EdgeVector cycle_edge_vector(const Graph& g, std::span<const int> cycle);

/// True iff every vertex has even degree in the edge set.
bool is_even_subgraph(const Graph& g, const EdgeVector& edges);

/// Coordinates of an even subgraph in the fundamental basis (its
/// non-tree edges).
std::vector<std::uint8_t> decompose(const CycleSpaceBasis& basis, const EdgeVector& z);

// ---------------------------------------------------------------------------
// Simple cycles
// ---------------------------------------------------------------------------

struct CycleList
{
    std::vector<std::vector<int>> cycles;
    bool truncated = false;
};

/**
 * Visit every simple cycle exactly once, in canonical form: it starts at
 * its minimum vertex and the second vertex is smaller than the last.
 * The visitor returns false to stop early; the function returns false in
 * that case and true after a complete enumeration.
 */
bool for_each_simple_cycle(const Graph& g,
                           const std::function<bool(std::span<const int>)>& visit,
                           int max_length = -1);

/// All simple cycles up to `max_count`; `truncated` is set when more exist.
CycleList enumerate_simple_cycles(const Graph& g, long long max_count);

/// Canonical rotation/reflection of a cyclic vertex sequence.
std::vector<int> canonical_cycle(std::span<const int> cycle);

/// All simple 4-cycles in canonical form.
std::vector<std::vector<int>> four_cycles(const Graph& g);

}   // namespace lovasz

#endif
