/**
 * Recovering the embedded graph from its Lovász complex: the subgraph on
 * singletons and neighborhoods quadrangulates the surface, and folding it
 * by the involution gives back a signed rotation system.
 */
#ifndef LOVASZ_DOUBLE_COVER_HPP
#define LOVASZ_DOUBLE_COVER_HPP

#include <string>

#include "lovasz/complex.hpp"
#include "lovasz/embedding.hpp"
#include "lovasz/surface_class.hpp"

namespace lovasz {

/**
 * Vertex v of the result is the orbit {{v}, N(v)}. The rotation at v is
 * the order in which the neighborhoods N(u) occur around {v}; the sign of
 * uv records whether the chosen local orientations at {u} and at N(v)
 * (carried over from {v} by the involution) agree across the edge
 * {u} - N(v).
 *
 * Throws PreconditionError unless the complex is a closed surface whose
 * every graph vertex v has {v} and N(v) as vertices.
 */
EmbeddedGraph lovasz_quotient_embedding(const LovaszComplex& lo);

/// Which genus formula applies to a quadrangulation's double cover.
enum class CoverBranch
{
    Orientable,         ///< S orientable of genus k: Lo is OS_{2k-1}
    OneSidedOdd,        ///< S = NS_k, every one-sided cycle odd: Lo is OS_{k-1}
    EvenOneSided,       ///< S = NS_k with an even one-sided class: Lo is NS_{2k-2}
};

std::string to_string(CoverBranch branch);

CoverBranch cover_branch(const EmbeddedGraph& e);

/// The class the formula of `branch` predicts for Lo over a surface s.
SurfaceClass predicted_lovasz_surface(const SurfaceClass& s, CoverBranch branch);

}   // namespace lovasz

#endif
