/**
 * Deterministic fixtures and parameterized quadrangulation families, each
 * with an annotation record that the generator re-verifies before handing
 * the embedding out.
 */
#ifndef LOVASZ_GENERATORS_HPP
#define LOVASZ_GENERATORS_HPP

#include <optional>
#include <string>
#include <vector>

#include "lovasz/embedding.hpp"
#include "lovasz/graph.hpp"

namespace lovasz {

/// A documented cycle with its expected one-sidedness and parity bits.
struct AnnotatedCycle
{
    std::string name;
    std::vector<int> vertices;
    int one_sided = 0;
    int odd = 0;

    bool operator==(const AnnotatedCycle&) const = default;
};

/// What a generated embedding claims about itself.
struct FamilySpec
{
    std::string family;
    std::vector<int> params;
    bool bipartite = false;
    std::string surface;                        ///< SurfaceClass::name()
    std::optional<bool> all_facial;             ///< absent when not a quadrangulation
    std::vector<AnnotatedCycle> cycles;
    std::optional<bool> odd;                    ///< absent unless non-orientable and non-bipartite

    bool operator==(const FamilySpec&) const = default;
};

/// Mismatches between the spec and what the embedding actually is; empty
/// when every claim holds.
std::vector<std::string> check_annotations(const EmbeddedGraph& e, const FamilySpec& spec);

struct Fixture
{
    EmbeddedGraph embedding;
    FamilySpec spec;
};

/// The six-vertex example graph with display names "1".."6".
Graph figure1_graph();

/// K4 quadrangulating the projective plane: three faces 0123, 0132, 0213.
Fixture k4_projective();

/// K2,3 with shores {0,1} and {2,3,4} on the sphere.
Fixture k23_sphere();

/// C_m x C_n on the torus; vertex (i, j) is i * n + j, i along the
/// m-cycle. Throws InvalidInput unless m, n >= 3.
Fixture torus_grid(int m, int n);

/**
 * The m x n grid with rows glued cyclically (i along Z_m) and the right
 * column glued to the left one with a reflection: (i, n-1) is joined to
 * ((twist - i) mod m, 0) by an edge of sign -1. The result quadrangulates
 * the Klein bottle. Documented cycles are the column through j = 0
 * (two-sided, length m) and a one-sided cycle through the glued edge.
 * Throws InvalidInput unless m, n >= 3 and 0 <= twist < m.
 */
Fixture klein_grid(int m, int n, int twist);

/// Outcome of a Klein-grid sweep entry.
struct SweepEntry
{
    int m = 0, n = 0, twist = 0;
    bool bipartite = false;
    bool all_facial = false;
    std::optional<bool> odd;                    ///< cup-product verdict
    std::optional<bool> oracle_odd;             ///< cut oracle, when run and exhaustive
    bool even_one_sided = false;
};

/// All klein_grid(m, n, twist) with m, n in [3, max_side] and at most
/// `max_vertices` vertices. Oddness and the oracle run only on
/// non-bipartite all-facial instances; `cycle_cap` bounds each oracle.
std::vector<SweepEntry> klein_sweep(int max_side, int max_vertices, bool run_oracle,
                                    long long cycle_cap = kDefaultCycleCap);

/// The shipped Klein parameter triples: an odd instance and a non-odd
/// instance (both non-bipartite and all-facial) and a bipartite one.
struct KleinParams
{
    std::string name;
    int m, n, twist;
};

std::vector<KleinParams> shipped_klein_instances();

}   // namespace lovasz

#endif
