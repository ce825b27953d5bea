/**
 * File formats: graph, embedding and complex documents as versioned JSON,
 * printed deterministically so that golden files compare byte for byte.
 *
 * Graph:     {"format": "graph", "version": 1, "n", "names"?, "edges": [[u, v], ...]}
 *            with u < v, or "adjacency": per-vertex neighbour lists in place
 *            of "edges" (must be symmetric).
 * Embedding: {"format": "embedding", "version": 1, "n", "names"?,
 *             "rotations": [[...], ...], "signs": [[u, v, s], ...], "annotations"?}
 *            with one sign entry per edge, u < v and s in {1, -1}.
 */
#ifndef LOVASZ_IO_HPP
#define LOVASZ_IO_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "lovasz/complex.hpp"
#include "lovasz/embedding.hpp"
#include "lovasz/generators.hpp"
#include "lovasz/graph.hpp"

namespace lovasz::io {

using Json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

/// Two-space indentation, arrays of scalars on one line, newline at the end.
std::string pretty(const Json& j);

/// Throws ParseError located as "source:line:column".
Json parse_text(std::string_view text, const std::string& source);

/// Whole file, or standard input for "-". Throws InvalidInput when the file
/// cannot be read.
std::string read_source(const std::string& path, std::istream& stdin_stream);

Json graph_to_json(const Graph& g);

/// Accepts graph documents, and embedding documents for their graph.
/// Semantic errors are ParseErrors located by JSON path ("$.edges[3]").
Graph graph_from_json(const Json& j);

struct EmbeddingDocument
{
    EmbeddedGraph embedding;
    std::optional<FamilySpec> annotations;
};

Json embedding_to_json(const EmbeddedGraph& e, const std::optional<FamilySpec>& annotations = {});
EmbeddingDocument embedding_from_json(const Json& j);

Json spec_to_json(const FamilySpec& spec);
FamilySpec spec_from_json(const Json& j, const std::string& path = "$.annotations");

/// "{1,3,5}" in display names.
std::string set_label(const Graph& g, const VertexSet& s);

/// Vertices (set, label, kind, partner), facets, f-vector and involution
/// pairs, in the complex's canonical vertex order.
Json complex_to_json(const LovaszComplex& lo);

}   // namespace lovasz::io

#endif
