/**
 * Abstract simplicial complexes, the neighborhood complex and the Lovász
 * complex of a graph (chains of CN-closed vertex sets) with its free
 * involution A -> CN(A).
 */
#ifndef LOVASZ_COMPLEX_HPP
#define LOVASZ_COMPLEX_HPP

#include <array>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "lovasz/embedding.hpp"
#include "lovasz/graph.hpp"
#include "lovasz/vertex_set.hpp"

namespace lovasz {

using Simplex = std::vector<int>;

/**
 * Finite simplicial complex on vertices 0..k-1 with opaque unique labels.
 *
 * Built from any generating family of simplices; the family is reduced to
 * its maximal members (facets). Every vertex is a 0-face even if no
 * generator mentions it. Faces of every dimension are materialized at
 * construction, sorted, each face an ascending index list.
 */
class SimplicialComplex
{
    public:
        SimplicialComplex() = default;

        /// Throws InvalidInput on duplicate labels, out-of-range indices or
        /// repeated vertices inside one simplex.
        SimplicialComplex(std::vector<std::string> labels, std::vector<Simplex> generators);

        int vertex_count() const noexcept { return static_cast<int>(labels_.size()); }
        const std::vector<std::string>& labels() const noexcept { return labels_; }
        const std::string& label(int v) const { return labels_[v]; }

        /// -1 for the empty complex.
        int dimension() const noexcept { return static_cast<int>(faces_.size()) - 1; }

        const std::vector<Simplex>& facets() const noexcept { return facets_; }

        /// All faces of dimension `dim` (empty beyond the dimension).
        const std::vector<Simplex>& faces(int dim) const;

        bool has_face(std::span<const int> simplex) const;

        /// Number of faces per dimension, starting at dimension 0.
        std::vector<long long> f_vector() const;

        bool operator==(const SimplicialComplex& other) const
        {
            return labels_ == other.labels_ && facets_ == other.facets_;
        }

    private:
        std::vector<std::string> labels_;
        std::vector<Simplex> facets_;
        std::vector<std::vector<Simplex>> faces_;
};

// ---------------------------------------------------------------------------
// Neighborhood and Lovász complexes
// ---------------------------------------------------------------------------

/// A CN-closed vertex set together with its partner CN(A).
struct ClosedSet
{
    VertexSet set;
    VertexSet partner;

    bool operator==(const ClosedSet&) const = default;
};

/// Nonempty A with CN(A) nonempty and CN(CN(A)) = A, ordered by cardinality
/// then lexicographically.
std::vector<ClosedSet> closed_sets(const Graph& g);

/// Facets are the maximal neighborhoods; vertices are the non-isolated
/// vertices of g, labelled by display name.
SimplicialComplex neighborhood_complex(const Graph& g);

enum class VertexKind
{
    Singleton,
    Neighborhood,
    Diagonal,       ///< a pair {a, c} with at least two common neighbors
    Other,
};

std::string to_string(VertexKind kind);

/**
 * The Lovász complex: vertices are closed sets (vertex i is closed[i]),
 * faces are chains under strict inclusion, and nu[i] is the index of
 * CN(closed[i]).
 */
struct LovaszComplex
{
    Graph graph;
    std::vector<ClosedSet> closed;
    SimplicialComplex base;
    std::vector<VertexKind> kinds;
    std::vector<int> nu;
    std::vector<std::string> warnings;

    /// Index of a closed set, or -1.
    int index_of(const VertexSet& s) const;

    /// Index of {v} and of N(v), or -1 when not a vertex.
    int singleton(int v) const;
    int neighborhood(int v) const;

    bool operator==(const LovaszComplex& other) const
    {
        return graph == other.graph && closed == other.closed && base == other.base
               && kinds == other.kinds && nu == other.nu;
    }

    std::unordered_map<VertexSet, int, VertexSetHash> index;
};

/// Definition-based construction from the closed sets.
LovaszComplex lovasz_complex(const Graph& g);

/**
 * Face-rule construction: every face a-b-c-d of the quadrangulation
 * contributes the triangles {x} < {a,c} < N(y) for x in {a,c}, y in {b,d}
 * and {x} < {b,d} < N(y) for x in {b,d}, y in {a,c}.
 *
 * Throws HypothesisError unless e is a connected non-bipartite
 * quadrangulation, not K2,3, with every 4-cycle facial.
 */
LovaszComplex lovasz_from_quadrangulation(const EmbeddedGraph& e);

/// Per-vertex kind audit against an embedding.
struct KindReport
{
    int singletons = 0;
    int neighborhoods = 0;
    int diagonals = 0;
    int others = 0;
    std::vector<int> other_vertices;            ///< counterexamples
    std::vector<int> non_facial_diagonals;      ///< diagonals not opposite in any face

    bool ok() const noexcept { return others == 0 && non_facial_diagonals.empty(); }
};

/// Throws HypothesisError when e fails the face-rule hypotheses.
KindReport classify_vertex_kinds(const LovaszComplex& lo, const EmbeddedGraph& e);

/// Orbit space of the involution. Vertex k of the quotient is the orbit
/// {i, nu[i]} with i the smaller index, labelled "A|CN(A)".
struct QuotientComplex
{
    SimplicialComplex complex;
    std::vector<int> projection;                ///< Lovász vertex -> orbit
    std::vector<std::array<int, 2>> orbits;
};

/// Throws PreconditionError when some face is fixed setwise by nu or holds
/// both vertices of an orbit; the message names the face.
QuotientComplex quotient_complex(const LovaszComplex& lo);

/// First face fixed setwise by nu or meeting an orbit twice.
std::optional<Simplex> involution_defect(const LovaszComplex& lo);

}   // namespace lovasz

#endif
