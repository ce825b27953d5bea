/**
 * Z2 invariants of the Lovász complex of a quadrangulation: the signed
 * labeling of the induced quadrangulation, its involution-symmetric
 * triangulation, gray-triangle and cyclic-quad counts, the resulting index
 * report, and the full battery of named verdicts used by `verify`.
 */
#ifndef LOVASZ_INVARIANTS_HPP
#define LOVASZ_INVARIANTS_HPP

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lovasz/complex.hpp"
#include "lovasz/embedding.hpp"
#include "lovasz/generators.hpp"
#include "lovasz/graph.hpp"
#include "lovasz/surface_class.hpp"

namespace lovasz {

/**
 * Signed labels on the singleton and neighborhood vertices of the Lovász
 * complex: {v} gets v + 1 and N(v) gets -(v + 1). Other vertices carry 0.
 */
struct Labeling
{
    std::vector<int> label;                     ///< per Lovász vertex

    int operator()(int vertex) const { return label[vertex]; }
};

/// Throws PreconditionError when some graph vertex v lacks {v} or N(v)
/// among the complex's vertices (e.g. the 4-cycle).
Labeling build_labeling(const LovaszComplex& lo);

/// A quadrilateral of the induced quadrangulation: the link of a diagonal
/// vertex, corners alternating singleton / neighborhood.
struct InducedQuad
{
    int diagonal = -1;
    std::array<int, 4> corners{};
    std::array<int, 4> labels{};
};

/// One quad per diagonal vertex. Throws PreconditionError when a diagonal's
/// link is not a 4-cycle of labelled vertices.
std::vector<InducedQuad> induced_quads(const LovaszComplex& lo, const Labeling& labeling);

enum class SplitRule
{
    MinCorner,      ///< split through the corner of least |label|
    MaxCorner,      ///< split through the corner of greatest |label|
};

struct LabeledTriangle
{
    std::array<int, 3> vertices{};
    std::array<int, 3> labels{};
    int quad = -1;                              ///< index into induced_quads()
};

/// Each quad is cut along the diagonal through its rule-selected corner.
/// The rule depends only on |label|, so the triangle set is invariant
/// under the involution. Throws Error on a |label| tie among corners.
std::vector<LabeledTriangle> symmetric_triangulation(const LovaszComplex& lo,
                                                     SplitRule rule = SplitRule::MinCorner);

/// The vertex of middle |label| differs in sign from both others.
bool is_gray(const std::array<int, 3>& labels);

/// Going around the quad, |label| rises at one step or at three steps,
/// i.e. the corners are in cyclic order.
bool in_cyclic_order(const std::array<int, 4>& labels);

/**
 * Totals run over the whole complex and are always even (the involution
 * pairs triangles and quads); the counts over one fundamental domain are
 * the halves.
 */
struct GrayCount
{
    int triangles = 0;
    int quads = 0;
    int gray_total = 0;
    int cyclic_total = 0;
    int gray_count = 0;
    int cyclic_count = 0;
};

GrayCount gray_count(std::span<const LabeledTriangle> triangles, std::span<const InducedQuad> quads);

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

struct InvariantOptions
{
    bool exact_chi = false;
    int chi_cap = kDefaultChromaticCap;
    bool oracle = false;
    long long cycle_cap = kDefaultCycleCap;
    SplitRule rule = SplitRule::MinCorner;
};

struct GrayReport
{
    SurfaceClass surface;                       ///< of the embedding
    SurfaceClass lovasz_surface;
    GrayCount counts;
    int cohom_ind = 1;
    int ind = 1;
    int coind = 1;
    int chromatic_lower_bound = 3;
    bool index_chain_holds = true;              ///< coind <= cohom_ind <= ind
    bool congruence_holds = true;               ///< gray_count = cyclic_count mod 2
    bool non_tidy = false;
    bool but_manifold = false;                  ///< ind = 2
    std::optional<bool> odd;                    ///< non-orientable surfaces only
    std::optional<CupProducts> cup;
    std::optional<OracleResult> oracle;
    std::optional<ChromaticResult> chromatic;
    std::optional<bool> bound_holds;            ///< chi(G) >= chromatic_lower_bound
    std::vector<std::string> notes;
};

/// Throws HypothesisError naming the failed hypothesis when e is not a
/// connected non-bipartite quadrangulation, not K2,3, all 4-cycles facial.
GrayReport invariant_report(const EmbeddedGraph& e, const InvariantOptions& options = {});

enum class Status
{
    Pass,
    Fail,
    Skip,
};

std::string to_string(Status status);

struct Verdict
{
    std::string name;
    Status status = Status::Skip;
    std::string detail;
};

struct VerifyOptions
{
    bool oracle = false;
    long long cycle_cap = kDefaultCycleCap;
    int chi_cap = kDefaultChromaticCap;
    std::optional<FamilySpec> annotations;
};

/**
 * Every check of the double-cover correspondence that applies to e, in a
 * fixed order; inapplicable checks are skipped with the reason. Never
 * throws on mathematical input; failures are verdicts.
 */
std::vector<Verdict> run_verdicts(const EmbeddedGraph& e, const VerifyOptions& options = {});

bool all_pass(std::span<const Verdict> verdicts);

}   // namespace lovasz

#endif
