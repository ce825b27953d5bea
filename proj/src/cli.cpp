#include "lovasz/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lovasz/double_cover.hpp"
#include "lovasz/error.hpp"
#include "lovasz/invariants.hpp"
#include "lovasz/io.hpp"
#include "lovasz/surface.hpp"

namespace lovasz {

namespace {

using io::Json;

struct RunConfig
{
    std::string input;
    std::string out;                            // empty: the output stream
    bool oracle = false;
    bool exact_chi = false;
    long long cycle_cap = kDefaultCycleCap;
    int chi_cap = kDefaultChromaticCap;
    std::string family;
    std::vector<int> params;
};

Json nullable(const std::optional<std::vector<int>>& v)
{
    return v ? Json(*v) : Json(nullptr);
}

Json nullable(const std::optional<bool>& b)
{
    return b ? Json(*b) : Json(nullptr);
}

Json oracle_json(const std::optional<OracleResult>& o)
{
    if (!o)
        return nullptr;
    Json j;
    j["found"] = o->found;
    j["exhaustive"] = o->exhaustive;
    j["cycles_examined"] = o->cycles_examined;
    if (o->witness)
    {
        Json w;
        w["cycle"] = o->witness->cycle;
        w["length"] = o->witness->length;
        w["cut_surface_orientable"] = o->witness->cut_surface_orientable;
        j["witness"] = w;
    }
    else
        j["witness"] = nullptr;
    return j;
}

Json lovasz_surface_json(const LovaszComplex& lo)
{
    auto verdict = check_surface(lo.base);
    Json j;
    j["f_vector"] = lo.base.f_vector();
    j["is_surface"] = verdict.is_surface;
    if (verdict.witness)
    {
        Json d;
        d["kind"] = to_string(verdict.witness->kind);
        d["simplex"] = verdict.witness->simplex;
        d["description"] = verdict.witness->describe(lo.base);
        j["defect"] = d;
    }
    else
        j["defect"] = nullptr;
    j["surface"] = verdict.surface_class ? Json(verdict.surface_class->name()) : Json(nullptr);
    j["euler_characteristic"] = lo.base.dimension() <= 2 ? Json(euler_characteristic(lo.base)) : Json(nullptr);
    return j;
}

io::EmbeddingDocument load_embedding(const RunConfig& config, std::istream& in)
{
    auto source = config.input == "-" ? std::string("<stdin>") : config.input;
    return io::embedding_from_json(io::parse_text(io::read_source(config.input, in), source));
}

// --- subcommands -----------------------------------------------------------

int cmd_lovasz(const RunConfig& config, std::istream& in, Json& report)
{
    auto source = config.input == "-" ? std::string("<stdin>") : config.input;
    auto g = io::graph_from_json(io::parse_text(io::read_source(config.input, in), source));
    auto lo = lovasz_complex(g);
    report = io::complex_to_json(lo);
    report["surface"] = lovasz_surface_json(lo);
    return kExitOk;
}

int cmd_check(const RunConfig& config, std::istream& in, Json& report)
{
    auto e = load_embedding(config, in).embedding;
    const Graph& g = e.graph();
    auto hypotheses = check_hypotheses(e);
    auto bipartite = is_bipartite(g);
    auto faces = trace_faces(e);

    report["report"] = "check";
    report["connected"] = hypotheses.connected;
    report["bipartite"] = bipartite.bipartite;
    report["odd_cycle"] = bipartite.bipartite ? Json(nullptr) : Json(bipartite.odd_cycle);
    report["is_quadrangulation"] = hypotheses.quadrangulation;
    report["face_count"] = faces.faces.size();
    report["all_4cycles_facial"] = nullable(hypotheses.all_facial);
    report["non_facial_4cycle"] = nullable(hypotheses.non_facial_witness);
    report["k23"] = hypotheses.k23;
    if (auto w = find_k23(g))
    {
        Json k;
        k["pair"] = w->pair;
        k["triple"] = w->triple;
        report["k23_subgraph"] = k;
    }
    else
        report["k23_subgraph"] = nullptr;
    if (auto d = find_domination(g))
        report["domination"] = {d->first, d->second};
    else
        report["domination"] = nullptr;
    auto surface = embedding_surface(e);
    report["surface"] = surface.name();
    report["euler_characteristic"] = faces.euler_characteristic;
    report["orientable"] = surface.orientable;
    report["hypotheses_hold"] = hypotheses.ok();
    report["failure"] = hypotheses.failure ? Json(*hypotheses.failure) : Json(nullptr);
    return kExitOk;
}

int cmd_classify(const RunConfig& config, std::istream& in, Json& report)
{
    auto e = load_embedding(config, in).embedding;
    auto hypotheses = check_hypotheses(e);
    auto surface = embedding_surface(e);
    report["report"] = "classify";
    report["surface"] = surface.name();
    report["hypotheses_hold"] = hypotheses.ok();
    report["failure"] = hypotheses.failure ? Json(*hypotheses.failure) : Json(nullptr);
    report["non_facial_4cycle"] = nullable(hypotheses.non_facial_witness);

    auto lo = lovasz_complex(e.graph());
    auto lo_json = lovasz_surface_json(lo);
    report["lovasz_complex"] = lo_json;

    if (!hypotheses.ok())
    {
        report["branch"] = nullptr;
        report["k"] = nullptr;
        report["predicted"] = nullptr;
        report["consistent"] = nullptr;
        return kExitOk;
    }
    auto branch = cover_branch(e);
    auto predicted = predicted_lovasz_surface(surface, branch);
    bool consistent = lo_json["is_surface"].get<bool>() && lo_json["surface"] == predicted.name();
    report["branch"] = to_string(branch);
    report["k"] = surface.genus;
    report["predicted"] = predicted.name();
    report["consistent"] = consistent;
    return consistent ? kExitOk : kExitVerdictFailed;
}

int cmd_invariants(const RunConfig& config, std::istream& in, Json& report)
{
    auto e = load_embedding(config, in).embedding;
    InvariantOptions options;
    options.exact_chi = config.exact_chi;
    options.chi_cap = config.chi_cap;
    options.oracle = config.oracle;
    options.cycle_cap = config.cycle_cap;
    auto r = invariant_report(e, options);
    auto max_rule = invariant_report(e, {false, config.chi_cap, false, config.cycle_cap, SplitRule::MaxCorner});

    report["report"] = "invariants";
    report["surface"] = r.surface.name();
    report["lovasz_surface"] = r.lovasz_surface.name();
    report["odd"] = nullable(r.odd);
    if (r.cup)
    {
        Json cup;
        cup["w1_p"] = r.cup->w1_p;
        cup["p_p"] = r.cup->p_p;
        report["cup_product"] = cup;
    }
    else
        report["cup_product"] = nullptr;
    report["oracle"] = oracle_json(r.oracle);
    report["gray_count"] = r.counts.gray_count;
    report["cyclic_count"] = r.counts.cyclic_count;
    report["gray_total"] = r.counts.gray_total;
    report["cyclic_total"] = r.counts.cyclic_total;
    report["triangles"] = r.counts.triangles;
    report["quads"] = r.counts.quads;
    report["max_rule_gray_count"] = max_rule.counts.gray_count;
    report["congruence_holds"] = r.congruence_holds;
    report["cohom_ind"] = r.cohom_ind;
    report["ind"] = r.ind;
    report["coind"] = r.coind;
    report["coind_source"] = "by classification";
    report["index_chain_holds"] = r.index_chain_holds;
    report["non_tidy"] = r.non_tidy;
    report["ind_two"] = r.but_manifold;
    report["bound"] = r.chromatic_lower_bound;
    report["chi"] = r.chromatic ? Json(r.chromatic->chromatic_number) : Json(nullptr);
    report["bound_holds"] = nullable(r.bound_holds);
    report["notes"] = r.notes;

    bool ok = r.congruence_holds && r.index_chain_holds && r.bound_holds.value_or(true)
              && r.counts.gray_count % 2 == max_rule.counts.gray_count % 2;
    if (r.odd)
        ok = ok && *r.odd == (r.cohom_ind == 2);
    if (r.oracle && r.oracle->exhaustive && r.odd)
        ok = ok && r.oracle->found == *r.odd;
    return ok ? kExitOk : kExitVerdictFailed;
}

int cmd_verify(const RunConfig& config, std::istream& in, Json& report)
{
    auto doc = load_embedding(config, in);
    VerifyOptions options;
    options.oracle = config.oracle;
    options.cycle_cap = config.cycle_cap;
    options.chi_cap = config.chi_cap;
    options.annotations = doc.annotations;
    auto verdicts = run_verdicts(doc.embedding, options);

    Json bundle;
    std::vector<std::string> failed;
    for (const auto& v : verdicts)
    {
        Json entry;
        entry["status"] = to_string(v.status);
        entry["detail"] = v.detail;
        bundle[v.name] = entry;
        if (v.status == Status::Fail)
            failed.push_back(v.name);
    }
    report["report"] = "verify";
    report["verdicts"] = bundle;
    report["failed"] = failed;
    report["all_pass"] = failed.empty();
    return failed.empty() ? kExitOk : kExitVerdictFailed;
}

void require_params(const RunConfig& config, std::size_t count, const std::string& usage)
{
    if (config.params.size() != count)
        throw InvalidInput("usage: generate " + usage);
}

Json sweep_report(const RunConfig& config)
{
    if (config.params.size() > 2)
        throw InvalidInput("usage: generate klein-sweep [max_side [max_vertices]]");
    int max_side = config.params.size() > 0 ? config.params[0] : 8;
    int max_vertices = config.params.size() > 1 ? config.params[1] : 24;
    if (max_side < 3 || max_vertices < 9)
        throw InvalidInput("klein-sweep needs max_side >= 3 and max_vertices >= 9");

    Json report;
    report["report"] = "klein-sweep";
    report["max_side"] = max_side;
    report["max_vertices"] = max_vertices;
    report["oracle"] = config.oracle;
    Json instances = Json::array();
    int odd = 0, non_odd = 0;
    for (const auto& entry : klein_sweep(max_side, max_vertices, config.oracle, config.cycle_cap))
    {
        Json j;
        j["name"] = "klein-" + std::to_string(entry.m) + "x" + std::to_string(entry.n) + "-"
                    + std::to_string(entry.twist);
        j["m"] = entry.m;
        j["n"] = entry.n;
        j["twist"] = entry.twist;
        j["bipartite"] = entry.bipartite;
        j["all_4cycles_facial"] = entry.all_facial;
        j["odd"] = nullable(entry.odd);
        j["oracle_odd"] = nullable(entry.oracle_odd);
        j["even_one_sided"] = entry.even_one_sided;
        if (entry.odd)
        {
            j["annotations"] = io::spec_to_json(klein_grid(entry.m, entry.n, entry.twist).spec);
            ++(*entry.odd ? odd : non_odd);
        }
        else
            j["annotations"] = nullptr;
        instances.push_back(j);
    }
    report["instances"] = instances;
    report["odd_instances"] = odd;
    report["non_odd_instances"] = non_odd;
    return report;
}

int cmd_generate(const RunConfig& config, Json& report)
{
    const auto& f = config.family;
    const auto& p = config.params;
    if (f == "torus-grid")
    {
        require_params(config, 2, "torus-grid M N");
        auto fixture = torus_grid(p[0], p[1]);
        report = io::embedding_to_json(fixture.embedding, fixture.spec);
    }
    else if (f == "klein-grid")
    {
        require_params(config, 3, "klein-grid M N TWIST");
        auto fixture = klein_grid(p[0], p[1], p[2]);
        report = io::embedding_to_json(fixture.embedding, fixture.spec);
    }
    else if (f == "k4-projective" || f == "k23-sphere")
    {
        require_params(config, 0, f);
        auto fixture = f == "k4-projective" ? k4_projective() : k23_sphere();
        report = io::embedding_to_json(fixture.embedding, fixture.spec);
    }
    else if (f == "figure1")
    {
        require_params(config, 0, f);
        report = io::graph_to_json(figure1_graph());
    }
    else if (f == "klein-sweep")
        report = sweep_report(config);
    else
        throw InvalidInput("unknown family \"" + f
                           + "\" (torus-grid, klein-grid, k4-projective, k23-sphere, figure1, klein-sweep)");
    return kExitOk;
}

void emit(const RunConfig& config, const Json& report, std::ostream& out)
{
    auto text = io::pretty(report);
    if (config.out.empty() || config.out == "-")
    {
        out << text;
        return;
    }
    std::ofstream file(config.out, std::ios::binary);
    if (!(file << text))
        throw InvalidInput("cannot write " + config.out);
}

}   // namespace

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Lovász complexes of graphs and quadrangulations of surfaces", "lovasz"};
    app.require_subcommand(1);
    RunConfig config;

    auto add_input = [&](CLI::App* sub, const std::string& what) {
        sub->add_option("file", config.input, what + " file, or - for standard input")->required();
    };
    auto add_out = [&](CLI::App* sub) {
        sub->add_option("--out", config.out, "write the result to PATH instead of standard output");
    };
    auto add_oracle = [&](CLI::App* sub) {
        sub->add_flag("--oracle", config.oracle, "also run the brute-force cycle oracles");
        sub->add_option("--cap-cycles", config.cycle_cap, "cycles the oracles may examine")
            ->check(CLI::PositiveNumber);
    };
    auto add_chi = [&](CLI::App* sub) {
        sub->add_option("--cap-chi", config.chi_cap, "largest vertex count for exact coloring")
            ->check(CLI::PositiveNumber);
    };

    auto* lovasz = app.add_subcommand("lovasz", "emit the Lovász complex of a graph");
    add_input(lovasz, "graph (or embedding)");
    add_out(lovasz);

    auto* check = app.add_subcommand("check", "report the hypotheses of the double-cover construction");
    add_input(check, "embedding");
    add_out(check);

    auto* classify = app.add_subcommand("classify", "classify the Lovász complex against the genus formulas");
    add_input(classify, "embedding");
    add_out(classify);

    auto* invariants = app.add_subcommand("invariants", "gray parity, indices and the chromatic bound");
    add_input(invariants, "embedding");
    add_out(invariants);
    add_oracle(invariants);
    add_chi(invariants);
    invariants->add_flag("--exact-chi", config.exact_chi, "compute the exact chromatic number");

    auto* verify = app.add_subcommand("verify", "run every applicable verdict; exit 1 if any fails");
    add_input(verify, "embedding");
    add_out(verify);
    add_oracle(verify);
    add_chi(verify);

    auto* generate = app.add_subcommand("generate", "write a fixture or a sweep report");
    generate->add_option("family", config.family,
                         "torus-grid, klein-grid, k4-projective, k23-sphere, figure1 or klein-sweep")
        ->required();
    generate->add_option("params", config.params, "integer parameters of the family");
    add_out(generate);
    add_oracle(generate);

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp&)
    {
        out << app.help();
        return kExitOk;
    }
    catch (const CLI::CallForAllHelp&)
    {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    }
    catch (const CLI::ParseError& e)
    {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }

    try
    {
        Json report;
        int code = kExitOk;
        if (lovasz->parsed())
            code = cmd_lovasz(config, in, report);
        else if (check->parsed())
            code = cmd_check(config, in, report);
        else if (classify->parsed())
            code = cmd_classify(config, in, report);
        else if (invariants->parsed())
            code = cmd_invariants(config, in, report);
        else if (verify->parsed())
            code = cmd_verify(config, in, report);
        else
            code = cmd_generate(config, report);
        emit(config, report, out);
        return code;
    }
    catch (const ParseError& e)
    {
        err << "parse error: " << e.what() << "\n";
        return kExitInputError;
    }
    catch (const HypothesisError& e)
    {
        err << "hypothesis failed: " << e.what() << "\n";
        return kExitInputError;
    }
    catch (const InvalidInput& e)
    {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    catch (const PreconditionError& e)
    {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    catch (const std::exception& e)
    {
        err << "error: " << e.what() << "\n";
        return kExitVerdictFailed;
    }
}

}   // namespace lovasz
