/**
 * Closed-surface recognition for simplicial 2-complexes: purity, edge
 * degrees, vertex links, connectivity, then Euler characteristic and
 * orientation propagation.
 */
#ifndef LOVASZ_SURFACE_HPP
#define LOVASZ_SURFACE_HPP

#include <optional>
#include <string>
#include <vector>

#include "lovasz/complex.hpp"
#include "lovasz/surface_class.hpp"

namespace lovasz {

enum class DefectKind
{
    NotPure2,           ///< a facet that is not a triangle
    EdgeDegree,         ///< an edge in other than 2 triangles
    VertexLink,         ///< a vertex whose link is not one cycle
    Disconnected,
};

std::string to_string(DefectKind kind);

struct SurfaceDefect
{
    DefectKind kind = DefectKind::NotPure2;
    Simplex simplex;                            ///< offending facet, edge or vertex
    int count = 0;                              ///< triangles on the edge / link components
    std::vector<std::vector<int>> components;   ///< vertex sets, for Disconnected

    std::string describe(const SimplicialComplex& k) const;
};

struct SurfaceVerdict
{
    bool is_surface = false;
    std::optional<SurfaceDefect> witness;
    std::optional<SurfaceClass> surface_class;
};

/// Checks run in the order purity, edge degrees, links, connectivity; the
/// first failure is the witness.
SurfaceVerdict check_surface(const SimplicialComplex& k);

/// V - E + F. Throws PreconditionError for complexes of dimension above 2.
int euler_characteristic(const SimplicialComplex& k);

/// Coherent triangle orientations exist, propagated breadth-first from
/// triangle `start`. Throws PreconditionError unless k is a surface.
bool orientability(const SimplicialComplex& k, int start = 0);

/// Throws PreconditionError unless k is a surface.
SurfaceClass classify(const SimplicialComplex& k);

/// The link of vertex v in cyclic order when it is a single cycle: it
/// starts at its least vertex and continues to the lesser of that vertex's
/// two link neighbours. Absent otherwise.
std::optional<std::vector<int>> link_cycle(const SimplicialComplex& k, int v);

}   // namespace lovasz

#endif
