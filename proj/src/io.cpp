#include "lovasz/io.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "lovasz/error.hpp"

namespace lovasz::io {

namespace {

bool is_scalar(const Json& j)
{
    return !j.is_array() && !j.is_object();
}

void emit(const Json& j, int indent, std::string& out)
{
    const std::string pad(indent + 2, ' ');
    if (j.is_object())
    {
        if (j.empty())
        {
            out += "{}";
            return;
        }
        out += "{\n";
        bool first = true;
        for (const auto& [key, value] : j.items())
        {
            if (!first)
                out += ",\n";
            first = false;
            out += pad + Json(key).dump() + ": ";
            emit(value, indent + 2, out);
        }
        out += "\n" + std::string(indent, ' ') + "}";
    }
    else if (j.is_array())
    {
        if (std::all_of(j.begin(), j.end(), is_scalar))
        {
            out += "[";
            for (std::size_t i = 0; i < j.size(); ++i)
                out += (i ? ", " : "") + j[i].dump();
            out += "]";
            return;
        }
        out += "[\n";
        for (std::size_t i = 0; i < j.size(); ++i)
        {
            if (i)
                out += ",\n";
            out += pad;
            emit(j[i], indent + 2, out);
        }
        out += "\n" + std::string(indent, ' ') + "]";
    }
    else
        out += j.dump();
}

[[noreturn]] void fail(const std::string& path, const std::string& what)
{
    throw ParseError(path, what);
}

const Json& member(const Json& j, const std::string& key, const std::string& path)
{
    if (!j.is_object())
        fail(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end())
        fail(path, "missing field \"" + key + "\"");
    return *it;
}

int integer(const Json& j, const std::string& path)
{
    if (!j.is_number_integer())
        fail(path, "expected an integer");
    auto v = j.get<long long>();
    if (v < INT32_MIN || v > INT32_MAX)
        fail(path, "integer out of range");
    return static_cast<int>(v);
}

bool boolean(const Json& j, const std::string& path)
{
    if (!j.is_boolean())
        fail(path, "expected true or false");
    return j.get<bool>();
}

std::string text(const Json& j, const std::string& path)
{
    if (!j.is_string())
        fail(path, "expected a string");
    return j.get<std::string>();
}

const Json& array(const Json& j, const std::string& path)
{
    if (!j.is_array())
        fail(path, "expected an array");
    return j;
}

std::string at(const std::string& path, std::size_t i)
{
    return path + "[" + std::to_string(i) + "]";
}

int vertex(const Json& j, const std::string& path, int n)
{
    int v = integer(j, path);
    if (v < 0 || v >= n)
        fail(path, "vertex " + std::to_string(v) + " outside 0.." + std::to_string(n - 1));
    return v;
}

void check_header(const Json& j, const std::string& format)
{
    auto found = text(member(j, "format", "$"), "$.format");
    if (found != format)
        fail("$.format", "expected \"" + format + "\", found \"" + found + "\"");
    int version = integer(member(j, "version", "$"), "$.version");
    if (version != kFormatVersion)
        fail("$.version", "unsupported version " + std::to_string(version));
}

std::vector<std::string> read_names(const Json& j, int n)
{
    std::vector<std::string> names;
    auto it = j.find("names");
    if (it == j.end() || it->is_null())
        return names;
    const auto& list = array(*it, "$.names");
    if (static_cast<int>(list.size()) != n)
        fail("$.names", "expected " + std::to_string(n) + " names");
    for (std::size_t i = 0; i < list.size(); ++i)
        names.push_back(text(list[i], at("$.names", i)));
    return names;
}

int read_order(const Json& j)
{
    int n = integer(member(j, "n", "$"), "$.n");
    if (n < 0)
        fail("$.n", "negative vertex count");
    return n;
}

// Neighbour lists must describe a simple undirected graph.
std::vector<Edge> edges_of_lists(const std::vector<std::vector<int>>& lists, const std::string& path)
{
    const int n = static_cast<int>(lists.size());
    std::vector<std::set<int>> sets(n);
    for (int u = 0; u < n; ++u)
    {
        for (std::size_t k = 0; k < lists[u].size(); ++k)
        {
            int v = lists[u][k];
            if (v == u)
                fail(at(at(path, u), k), "loop at vertex " + std::to_string(u));
            if (!sets[u].insert(v).second)
                fail(at(at(path, u), k), "neighbour " + std::to_string(v) + " repeats");
        }
    }
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
    {
        for (int v : sets[u])
        {
            if (!sets[v].count(u))
                fail(at(path, u), "asymmetric edge " + std::to_string(u) + "-" + std::to_string(v) + ": "
                                      + std::to_string(u) + " missing from the list of " + std::to_string(v));
            if (u < v)
                edges.emplace_back(u, v);
        }
    }
    return edges;
}

std::vector<std::vector<int>> read_lists(const Json& j, const std::string& path, int n)
{
    const auto& outer = array(j, path);
    if (static_cast<int>(outer.size()) != n)
        fail(path, "expected " + std::to_string(n) + " lists");
    std::vector<std::vector<int>> lists(n);
    for (int u = 0; u < n; ++u)
    {
        const auto& inner = array(outer[u], at(path, u));
        for (std::size_t k = 0; k < inner.size(); ++k)
            lists[u].push_back(vertex(inner[k], at(at(path, u), k), n));
    }
    return lists;
}

Graph build_graph(int n, const std::vector<Edge>& edges, std::vector<std::string> names, const std::string& path)
{
    try
    {
        return Graph(n, edges, std::move(names));
    }
    catch (const InvalidInput& err)
    {
        fail(path, err.what());
    }
}

Json optional_bool(const std::optional<bool>& b)
{
    return b ? Json(*b) : Json(nullptr);
}

}   // namespace

std::string pretty(const Json& j)
{
    std::string out;
    emit(j, 0, out);
    out += "\n";
    return out;
}

Json parse_text(std::string_view text, const std::string& source)
{
    try
    {
        return Json::parse(text.begin(), text.end());
    }
    catch (const nlohmann::json::parse_error& err)
    {
        std::size_t offset = std::min<std::size_t>(err.byte == 0 ? 0 : err.byte - 1, text.size());
        int line = 1, column = 1;
        for (std::size_t i = 0; i < offset; ++i)
        {
            if (text[i] == '\n')
            {
                ++line;
                column = 1;
            }
            else
                ++column;
        }
        std::string what = err.what();
        // Drop nlohmann's own "[json.exception.parse_error.101] parse error at ..." prefix.
        if (auto colon = what.find(": "); colon != std::string::npos)
            what = what.substr(colon + 2);
        throw ParseError(source + ":" + std::to_string(line) + ":" + std::to_string(column), what);
    }
}

std::string read_source(const std::string& path, std::istream& stdin_stream)
{
    std::ostringstream buffer;
    if (path == "-")
    {
        buffer << stdin_stream.rdbuf();
        return buffer.str();
    }
    std::ifstream file(path, std::ios::binary);
    if (!file)
        throw InvalidInput("cannot read " + path);
    buffer << file.rdbuf();
    return buffer.str();
}

Json graph_to_json(const Graph& g)
{
    Json j;
    j["format"] = "graph";
    j["version"] = kFormatVersion;
    j["n"] = g.order();
    if (g.has_names())
        j["names"] = g.names();
    Json edges = Json::array();
    for (auto [u, v] : g.edges())
        edges.push_back({u, v});
    j["edges"] = edges;
    return j;
}

Graph graph_from_json(const Json& j)
{
    if (j.is_object() && j.value("format", "") == "embedding")
        return embedding_from_json(j).embedding.graph();
    check_header(j, "graph");
    int n = read_order(j);
    auto names = read_names(j, n);
    const bool has_edges = j.contains("edges"), has_adjacency = j.contains("adjacency");
    if (has_edges == has_adjacency)
        fail("$", "expected exactly one of \"edges\" and \"adjacency\"");
    if (has_adjacency)
        return build_graph(n, edges_of_lists(read_lists(j["adjacency"], "$.adjacency", n), "$.adjacency"),
                           std::move(names), "$.adjacency");

    const auto& list = array(j["edges"], "$.edges");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < list.size(); ++i)
    {
        const auto path = at("$.edges", i);
        const auto& pair = array(list[i], path);
        if (pair.size() != 2)
            fail(path, "expected [u, v]");
        int u = vertex(pair[0], at(path, 0), n), v = vertex(pair[1], at(path, 1), n);
        if (u >= v)
            fail(path, "edge must be listed as [u, v] with u < v");
        edges.emplace_back(u, v);
    }
    return build_graph(n, edges, std::move(names), "$.edges");
}

Json embedding_to_json(const EmbeddedGraph& e, const std::optional<FamilySpec>& annotations)
{
    const Graph& g = e.graph();
    Json j;
    j["format"] = "embedding";
    j["version"] = kFormatVersion;
    j["n"] = g.order();
    if (g.has_names())
        j["names"] = g.names();
    j["rotations"] = e.rotations();
    Json signs = Json::array();
    for (int k = 0; k < g.size(); ++k)
        signs.push_back({g.edges()[k].first, g.edges()[k].second, e.sign(k)});
    j["signs"] = signs;
    if (annotations)
        j["annotations"] = spec_to_json(*annotations);
    return j;
}

EmbeddingDocument embedding_from_json(const Json& j)
{
    check_header(j, "embedding");
    int n = read_order(j);
    auto names = read_names(j, n);
    auto rotations = read_lists(member(j, "rotations", "$"), "$.rotations", n);
    auto edges = edges_of_lists(rotations, "$.rotations");
    Graph g = build_graph(n, edges, std::move(names), "$.rotations");

    const auto& list = array(member(j, "signs", "$"), "$.signs");
    std::vector<int> signs(g.size(), 0);
    for (std::size_t i = 0; i < list.size(); ++i)
    {
        const auto path = at("$.signs", i);
        const auto& triple = array(list[i], path);
        if (triple.size() != 3)
            fail(path, "expected [u, v, s]");
        int u = vertex(triple[0], at(path, 0), n), v = vertex(triple[1], at(path, 1), n);
        int s = integer(triple[2], at(path, 2));
        if (u >= v)
            fail(path, "edge must be listed as [u, v, s] with u < v");
        if (!g.adjacent(u, v))
            fail(path, "no edge " + std::to_string(u) + "-" + std::to_string(v) + " in the rotations");
        if (s != 1 && s != -1)
            fail(at(path, 2), "sign must be 1 or -1");
        int& slot = signs[g.edge_index(u, v)];
        if (slot != 0)
            fail(path, "second sign for edge " + std::to_string(u) + "-" + std::to_string(v));
        slot = s;
    }
    for (int k = 0; k < g.size(); ++k)
        if (signs[k] == 0)
            fail("$.signs", "no sign for edge " + std::to_string(g.edges()[k].first) + "-"
                                + std::to_string(g.edges()[k].second));

    std::optional<FamilySpec> annotations;
    if (auto it = j.find("annotations"); it != j.end() && !it->is_null())
        annotations = spec_from_json(*it);
    try
    {
        return {EmbeddedGraph(std::move(g), std::move(rotations), std::move(signs)), std::move(annotations)};
    }
    catch (const InvalidInput& err)
    {
        fail("$.rotations", err.what());
    }
}

Json spec_to_json(const FamilySpec& spec)
{
    Json j;
    j["family"] = spec.family;
    j["params"] = spec.params;
    j["bipartite"] = spec.bipartite;
    j["surface"] = spec.surface;
    j["all_4cycles_facial"] = optional_bool(spec.all_facial);
    Json cycles = Json::array();
    for (const auto& c : spec.cycles)
    {
        Json entry;
        entry["name"] = c.name;
        entry["vertices"] = c.vertices;
        entry["one_sided"] = c.one_sided;
        entry["odd"] = c.odd;
        cycles.push_back(entry);
    }
    j["cycles"] = cycles;
    j["odd"] = optional_bool(spec.odd);
    return j;
}

FamilySpec spec_from_json(const Json& j, const std::string& path)
{
    FamilySpec spec;
    spec.family = text(member(j, "family", path), path + ".family");
    const auto& params = array(member(j, "params", path), path + ".params");
    for (std::size_t i = 0; i < params.size(); ++i)
        spec.params.push_back(integer(params[i], at(path + ".params", i)));
    spec.bipartite = boolean(member(j, "bipartite", path), path + ".bipartite");
    spec.surface = text(member(j, "surface", path), path + ".surface");
    if (const auto& f = member(j, "all_4cycles_facial", path); !f.is_null())
        spec.all_facial = boolean(f, path + ".all_4cycles_facial");
    const auto cycles_path = path + ".cycles";
    const auto& cycles = array(member(j, "cycles", path), cycles_path);
    for (std::size_t i = 0; i < cycles.size(); ++i)
    {
        const auto p = at(cycles_path, i);
        AnnotatedCycle c;
        c.name = text(member(cycles[i], "name", p), p + ".name");
        const auto& vs = array(member(cycles[i], "vertices", p), p + ".vertices");
        for (std::size_t k = 0; k < vs.size(); ++k)
            c.vertices.push_back(integer(vs[k], at(p + ".vertices", k)));
        c.one_sided = integer(member(cycles[i], "one_sided", p), p + ".one_sided");
        c.odd = integer(member(cycles[i], "odd", p), p + ".odd");
        spec.cycles.push_back(std::move(c));
    }
    if (const auto& o = member(j, "odd", path); !o.is_null())
        spec.odd = boolean(o, path + ".odd");
    return spec;
}

std::string set_label(const Graph& g, const VertexSet& s)
{
    std::string out = "{";
    bool first = true;
    for (int v : s.indices())
    {
        out += (first ? "" : ",") + g.name(v);
        first = false;
    }
    return out + "}";
}

Json complex_to_json(const LovaszComplex& lo)
{
    Json j;
    j["format"] = "lovasz-complex";
    j["version"] = kFormatVersion;
    j["graph"] = graph_to_json(lo.graph);
    Json vertices = Json::array();
    for (std::size_t i = 0; i < lo.closed.size(); ++i)
    {
        Json v;
        v["index"] = i;
        v["set"] = lo.closed[i].set.indices();
        v["label"] = set_label(lo.graph, lo.closed[i].set);
        v["kind"] = to_string(lo.kinds[i]);
        v["partner"] = lo.nu[i];
        vertices.push_back(v);
    }
    j["vertices"] = vertices;
    j["facets"] = lo.base.facets();
    j["f_vector"] = lo.base.f_vector();
    Json pairs = Json::array();
    for (std::size_t i = 0; i < lo.nu.size(); ++i)
        if (static_cast<int>(i) < lo.nu[i])
            pairs.push_back({i, lo.nu[i]});
    j["involution"] = pairs;
    j["warnings"] = lo.warnings;
    return j;
}

}   // namespace lovasz::io
