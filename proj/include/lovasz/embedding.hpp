/**
 * Cellular embeddings given by signed rotation systems: face tracing,
 * quadrangulation checks, the one-sidedness and parity functionals on the
 * cycle space, odd-quadrangulation detection and the cut-along-a-cycle
 * oracle, and embedded-graph isomorphism.
 */
#ifndef LOVASZ_EMBEDDING_HPP
#define LOVASZ_EMBEDDING_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lovasz/graph.hpp"
#include "lovasz/surface_class.hpp"

namespace lovasz {

/**
 * A connected simple graph with a rotation (cyclic neighbor order) at each
 * vertex and a sign in {+1, -1} on each edge. Edges with sign -1 reverse
 * the local orientation when traversed.
 */
class EmbeddedGraph
{
    public:
        EmbeddedGraph() = default;

        /// `signs` is indexed by Graph edge index. Throws InvalidInput when a
        /// rotation is not a permutation of the neighborhood, a sign is not
        /// +-1, or the graph is disconnected.
        EmbeddedGraph(Graph graph, std::vector<std::vector<int>> rotation, std::vector<int> signs);

        const Graph& graph() const noexcept { return graph_; }
        int order() const noexcept { return graph_.order(); }

        const std::vector<int>& rotation(int v) const { return rotation_[v]; }
        const std::vector<std::vector<int>>& rotations() const noexcept { return rotation_; }

        /// Position of neighbor u in the rotation at v.
        int position(int v, int u) const;

        int sign(int edge) const { return signs_[edge]; }
        int sign(int u, int v) const { return signs_[graph_.edge_index(u, v)]; }
        const std::vector<int>& signs() const noexcept { return signs_; }

        bool operator==(const EmbeddedGraph& other) const
        {
            return graph_ == other.graph_ && rotation_ == other.rotation_ && signs_ == other.signs_;
        }

    private:
        Graph graph_;
        std::vector<std::vector<int>> rotation_;
        std::vector<std::vector<int>> position_;
        std::vector<int> signs_;
};

/// Same surface, vertex v's local orientation reversed: its rotation is
/// reversed and the signs of its edges flipped.
EmbeddedGraph reorient_vertex(const EmbeddedGraph& e, int v);

/// Vertex v becomes perm[v].
EmbeddedGraph relabel(const EmbeddedGraph& e, std::span<const int> perm);

// ---------------------------------------------------------------------------
// Faces
// ---------------------------------------------------------------------------

struct Dart
{
    int from = -1;
    int to = -1;
};

struct FaceWalk
{
    std::vector<Dart> darts;

    /// Boundary vertex sequence (dart tails).
    std::vector<int> vertices() const;
    int length() const { return static_cast<int>(darts.size()); }
};

struct FaceTrace
{
    std::vector<FaceWalk> faces;
    int euler_characteristic = 0;
};

FaceTrace trace_faces(const EmbeddedGraph& e);

/// Lexicographically least rotation/reflection of a closed walk.
std::vector<int> canonical_walk(std::span<const int> walk);

/// True iff the sign function is switching-equivalent to all +1.
bool is_orientable(const EmbeddedGraph& e);

/// Surface class of the embedding surface.
SurfaceClass embedding_surface(const EmbeddedGraph& e);

bool is_quadrangulation(const EmbeddedGraph& e);

struct FacialVerdict
{
    bool all_facial = true;
    int four_cycle_count = 0;
    std::optional<std::vector<int>> witness;    ///< a non-facial 4-cycle
};

/// Precondition: e is a quadrangulation.
FacialVerdict all_4cycles_facial(const EmbeddedGraph& e);

/// True iff the graph is isomorphic to K_{2,3}.
bool is_k23(const Graph& g);

/**
 * Hypotheses of the forward double-cover construction: graph not K_{2,3},
 * connected, non-bipartite, a quadrangulation, every 4-cycle facial.
 * `failure` names the first failed hypothesis in that order.
 */
struct HypothesisCheck
{
    bool k23 = false;
    bool connected = true;
    bool bipartite = false;
    bool quadrangulation = false;
    std::optional<bool> all_facial;             ///< absent unless a quadrangulation
    std::optional<std::vector<int>> non_facial_witness;
    std::optional<std::string> failure;

    bool ok() const noexcept { return !failure; }
};

HypothesisCheck check_hypotheses(const EmbeddedGraph& e);

/// Throws HypothesisError naming the first failed hypothesis.
void require_hypotheses(const EmbeddedGraph& e);

// ---------------------------------------------------------------------------
// Z2 functionals
// ---------------------------------------------------------------------------

/// Values on the fundamental cycles of one CycleSpaceBasis.
struct Z2Functional
{
    std::vector<std::uint8_t> values;

    bool is_zero() const;
    std::uint8_t evaluate(const CycleSpaceBasis& basis, const EdgeVector& z) const;
    bool operator==(const Z2Functional&) const = default;
};

/// Number of -1 edges mod 2 on each fundamental cycle.
Z2Functional one_sidedness_functional(const EmbeddedGraph& e, const CycleSpaceBasis& basis);

/// Length mod 2 of each fundamental cycle.
Z2Functional parity_functional(const Graph& g, const CycleSpaceBasis& basis);

/// Direct evaluations on an arbitrary edge set.
std::uint8_t one_sidedness(const EmbeddedGraph& e, const EdgeVector& z);
std::uint8_t parity(const EdgeVector& z);

struct EvenOneSidedVerdict
{
    bool present = false;
    std::optional<EdgeVector> witness;          ///< even one-sided cycle-space element
};

/// Some cycle-space element is one-sided and even, i.e. the one-sidedness
/// functional is neither 0 nor the parity functional.
EvenOneSidedVerdict has_even_one_sided_class(const EmbeddedGraph& e);

// ---------------------------------------------------------------------------
// Cup products and oddness
// ---------------------------------------------------------------------------

/**
 * Evaluations on the fundamental class of (w1 u p) and (p u p), where w1
 * is the class of the sign cochain and p the class of the all-ones
 * (parity) cochain. Computed on the quadrangulation split into ordered
 * triangles; the two must agree on every closed surface.
 *
 * Precondition: e is a quadrangulation.
 */
struct CupProducts
{
    int w1_p = 0;
    int p_p = 0;
};

CupProducts cup_products(const EmbeddedGraph& e);

struct OrientizingWitness
{
    std::vector<int> cycle;
    int length = 0;
    bool cut_surface_orientable = false;
};

struct OracleResult
{
    bool found = false;
    bool exhaustive = false;                    ///< the whole search space was covered
    long long cycles_examined = 0;
    std::optional<OrientizingWitness> witness;
};

inline constexpr long long kDefaultCycleCap = 20'000'000;

/// Search simple odd cycles for one whose cut surface is orientable.
OracleResult orientizing_cycle_oracle(const EmbeddedGraph& e, long long cycle_cap = kDefaultCycleCap);

/// Search simple even cycles with an odd number of -1 edges.
struct CycleOracleResult
{
    bool found = false;
    bool exhaustive = false;
    long long cycles_examined = 0;
    std::optional<std::vector<int>> cycle;
};

CycleOracleResult even_one_sided_cycle_oracle(const EmbeddedGraph& e,
                                              long long cycle_cap = kDefaultCycleCap);

struct OddnessVerdict
{
    bool odd = false;
    CupProducts cup;
    std::optional<OracleResult> oracle;
};

/**
 * Decides oddness from the cup product (w1 u p)[S]; with `run_oracle` the
 * exhaustive cut-along-cycle search runs as well and its witness (if any)
 * is attached.
 *
 * Precondition: non-bipartite quadrangulation of a non-orientable surface;
 * HypothesisError otherwise.
 */
OddnessVerdict is_odd_quadrangulation(const EmbeddedGraph& e, bool run_oracle = false,
                                      long long cycle_cap = kDefaultCycleCap);

// ---------------------------------------------------------------------------
// Cutting
// ---------------------------------------------------------------------------

/**
 * Result of cutting the surface along a simple cycle and capping each
 * boundary circle with a disk. A two-sided cycle gives two copies of the
 * cycle, a one-sided cycle a single copy of twice its length. Components
 * are separate embedded graphs; `origin[k][i]` is the original vertex of
 * vertex i in component k.
 */
struct CutSurface
{
    std::vector<EmbeddedGraph> components;
    std::vector<std::vector<int>> origin;
    bool one_sided = false;
    bool orientable = true;
    int euler_characteristic = 0;
};

/// Throws PreconditionError when `cycle` is not a simple cycle of e.
CutSurface cut_along_cycle(const EmbeddedGraph& e, std::span<const int> cycle);

/// Orientability of the cut surface without materializing it.
bool cut_is_orientable(const EmbeddedGraph& e, std::span<const int> cycle);

// ---------------------------------------------------------------------------
// Isomorphism
// ---------------------------------------------------------------------------

/// A graph isomorphism carrying the face-walk multiset of a onto that of b
/// (walks compared up to rotation and reversal), if one exists.
std::optional<std::vector<int>> embedded_isomorphism(const EmbeddedGraph& a, const EmbeddedGraph& b);

bool embedded_isomorphic(const EmbeddedGraph& a, const EmbeddedGraph& b);

}   // namespace lovasz

#endif
