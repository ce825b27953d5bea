#include "lovasz/invariants.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>

#include "lovasz/double_cover.hpp"
#include "lovasz/error.hpp"
#include "lovasz/surface.hpp"

namespace lovasz {

Labeling build_labeling(const LovaszComplex& lo)
{
    Labeling out;
    out.label.assign(lo.closed.size(), 0);
    for (int v = 0; v < lo.graph.order(); ++v)
    {
        int s = lo.singleton(v), h = lo.neighborhood(v);
        if (s < 0 || h < 0 || lo.kinds[s] != VertexKind::Singleton || lo.kinds[h] != VertexKind::Neighborhood)
            throw PreconditionError("labeling needs {v} and N(v) as singleton and neighborhood vertices; "
                                    "vertex " + lo.graph.name(v) + " has no such pair");
        out.label[s] = v + 1;
        out.label[h] = -(v + 1);
    }
    return out;
}

std::vector<InducedQuad> induced_quads(const LovaszComplex& lo, const Labeling& labeling)
{
    std::vector<InducedQuad> out;
    for (int d = 0; d < static_cast<int>(lo.kinds.size()); ++d)
    {
        if (lo.kinds[d] != VertexKind::Diagonal)
            continue;
        auto link = link_cycle(lo.base, d);
        if (!link || link->size() != 4)
            throw PreconditionError("link of diagonal " + lo.closed[d].set.to_string() + " is not a 4-cycle");
        InducedQuad q;
        q.diagonal = d;
        for (int k = 0; k < 4; ++k)
        {
            q.corners[k] = (*link)[k];
            q.labels[k] = labeling(q.corners[k]);
            if (q.labels[k] == 0)
                throw PreconditionError("diagonal " + lo.closed[d].set.to_string() + " has an unlabelled corner");
        }
        out.push_back(q);
    }
    return out;
}

std::vector<LabeledTriangle> symmetric_triangulation(const LovaszComplex& lo, SplitRule rule)
{
    auto labeling = build_labeling(lo);
    auto quads = induced_quads(lo, labeling);
    std::vector<LabeledTriangle> out;
    for (int qi = 0; qi < static_cast<int>(quads.size()); ++qi)
    {
        const auto& q = quads[qi];
        int pick = 0;
        for (int k = 1; k < 4; ++k)
        {
            int a = std::abs(q.labels[k]), b = std::abs(q.labels[pick]);
            if (a == b)
                throw Error("|label| tie on the quad around " + lo.closed[q.diagonal].set.to_string());
            if (rule == SplitRule::MinCorner ? a < b : a > b)
                pick = k;
        }
        for (int half : {1, 2})
        {
            LabeledTriangle t;
            t.quad = qi;
            const int idx[3] = {pick, (pick + half) % 4, (pick + half + 1) % 4};
            for (int k = 0; k < 3; ++k)
            {
                t.vertices[k] = q.corners[idx[k]];
                t.labels[k] = q.labels[idx[k]];
            }
            out.push_back(t);
        }
    }
    return out;
}

bool is_gray(const std::array<int, 3>& labels)
{
    auto sorted = labels;
    std::sort(sorted.begin(), sorted.end(), [](int a, int b) { return std::abs(a) < std::abs(b); });
    auto sign = [](int x) { return x > 0; };
    return sign(sorted[1]) != sign(sorted[0]) && sign(sorted[1]) != sign(sorted[2]);
}

bool in_cyclic_order(const std::array<int, 4>& labels)
{
    int rises = 0;
    for (int k = 0; k < 4; ++k)
        rises += std::abs(labels[k]) < std::abs(labels[(k + 1) % 4]);
    return rises == 1 || rises == 3;
}

GrayCount gray_count(std::span<const LabeledTriangle> triangles, std::span<const InducedQuad> quads)
{
    GrayCount out;
    out.triangles = static_cast<int>(triangles.size());
    out.quads = static_cast<int>(quads.size());
    for (const auto& t : triangles)
        out.gray_total += is_gray(t.labels);
    for (const auto& q : quads)
        out.cyclic_total += in_cyclic_order(q.labels);
    if (out.gray_total % 2 || out.cyclic_total % 2)
        throw Error("gray or cyclic total is odd; the triangle set is not involution-symmetric");
    out.gray_count = out.gray_total / 2;
    out.cyclic_count = out.cyclic_total / 2;
    return out;
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

namespace {

GrayCount count_for(const LovaszComplex& lo, SplitRule rule)
{
    auto triangles = symmetric_triangulation(lo, rule);
    auto quads = induced_quads(lo, build_labeling(lo));
    return gray_count(triangles, quads);
}

}   // namespace

GrayReport invariant_report(const EmbeddedGraph& e, const InvariantOptions& options)
{
    require_hypotheses(e);
    GrayReport r;
    r.surface = embedding_surface(e);
    auto lo = lovasz_complex(e.graph());
    auto verdict = check_surface(lo.base);
    if (!verdict.is_surface)
        throw Error("Lovász complex is not a surface: " + verdict.witness->describe(lo.base));
    r.lovasz_surface = *verdict.surface_class;

    r.counts = count_for(lo, options.rule);
    r.cohom_ind = r.counts.gray_count % 2 ? 2 : 1;
    r.ind = r.cohom_ind;
    r.coind = r.lovasz_surface.is_sphere() ? 2 : 1;
    r.index_chain_holds = r.coind <= r.cohom_ind && r.cohom_ind <= r.ind;
    r.congruence_holds = r.counts.gray_count % 2 == r.counts.cyclic_count % 2;
    r.chromatic_lower_bound = r.ind + 2;
    r.non_tidy = r.coind < r.ind;
    r.but_manifold = r.ind == 2;
    r.notes.push_back("coind by classification");

    if (!r.surface.orientable)
    {
        auto odd = is_odd_quadrangulation(e, options.oracle, options.cycle_cap);
        r.odd = odd.odd;
        r.cup = odd.cup;
        r.oracle = odd.oracle;
    }
    else
        r.notes.push_back("orientable surface: oddness undefined, bound from the index only");

    if (options.exact_chi)
    {
        r.chromatic = chromatic_number(e.graph(), options.chi_cap);
        r.bound_holds = r.chromatic->chromatic_number >= r.chromatic_lower_bound;
    }
    return r;
}

std::string to_string(Status status)
{
    switch (status)
    {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::Skip: return "skip";
    }
    return "skip";
}

bool all_pass(std::span<const Verdict> verdicts)
{
    return std::none_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.status == Status::Fail; });
}

namespace {

std::string join(const std::vector<std::string>& parts, const std::string& sep = "; ")
{
    std::string out;
    for (const auto& p : parts)
        out += (out.empty() ? "" : sep) + p;
    return out;
}

std::string vertex_list(std::span<const int> vs)
{
    std::string out;
    for (int v : vs)
        out += (out.empty() ? "" : " ") + std::to_string(v);
    return out;
}

Verdict judge(std::string name, const std::function<Verdict()>& body)
{
    try
    {
        Verdict v = body();
        v.name = std::move(name);
        return v;
    }
    catch (const std::exception& err)
    {
        return {std::move(name), Status::Fail, std::string("error: ") + err.what()};
    }
}

Verdict pass(std::string detail = {})
{
    return {{}, Status::Pass, std::move(detail)};
}

Verdict fail(std::string detail)
{
    return {{}, Status::Fail, std::move(detail)};
}

Verdict skip(std::string detail)
{
    return {{}, Status::Skip, std::move(detail)};
}

}   // namespace

std::vector<Verdict> run_verdicts(const EmbeddedGraph& e, const VerifyOptions& options)
{
    std::vector<Verdict> out;
    const Graph& g = e.graph();
    const bool quad = is_quadrangulation(e);
    const auto hypotheses = check_hypotheses(e);
    const std::string gate = hypotheses.failure ? "hypothesis failed: " + *hypotheses.failure : "";
    const bool non_orientable = quad && !is_orientable(e);

    out.push_back(judge("quadrangulation", [&] {
        if (quad)
            return pass(std::to_string(trace_faces(e).faces.size()) + " faces, all 4-cycles");
        std::vector<std::string> bad;
        for (const auto& f : trace_faces(e).faces)
            if (f.length() != 4)
                bad.push_back("face of length " + std::to_string(f.length()));
        return fail(bad.empty() ? "a face walk repeats a vertex" : bad.front());
    }));

    out.push_back(judge("annotations", [&] {
        if (!options.annotations)
            return skip("no annotations");
        auto problems = check_annotations(e, *options.annotations);
        return problems.empty() ? pass() : fail(join(problems));
    }));

    out.push_back(judge("neighborhood-dichotomy", [&] {
        // Either K2,3 or K2,3-free with no neighborhood inside another.
        if (hypotheses.k23)
            return pass("graph is K2,3");
        if (!quad || !hypotheses.all_facial.value_or(false) || hypotheses.bipartite)
            return skip("needs a non-bipartite quadrangulation with every 4-cycle facial");
        if (auto w = find_k23(g))
            return fail("K2,3 subgraph on " + std::to_string(w->pair[0]) + "," + std::to_string(w->pair[1]));
        if (auto d = find_domination(g))
            return fail("N(" + g.name(d->first) + ") lies inside N(" + g.name(d->second) + ")");
        return pass("K2,3-free and no domination");
    }));

    // Everything below needs the full hypotheses.
    std::optional<LovaszComplex> lo;
    std::optional<SurfaceVerdict> lo_surface;
    if (hypotheses.ok())
    {
        lo = lovasz_complex(g);
        lo_surface = check_surface(lo->base);
    }
    auto gated = [&](std::string name, const std::function<Verdict()>& body) {
        if (!hypotheses.ok())
            out.push_back({std::move(name), Status::Skip, gate});
        else
            out.push_back(judge(std::move(name), body));
    };

    gated("vertex-kinds", [&] {
        auto report = classify_vertex_kinds(*lo, e);
        if (!report.ok())
            return fail(std::to_string(report.others) + " other vertices, "
                        + std::to_string(report.non_facial_diagonals.size()) + " non-facial diagonals");
        for (int i = 0; i < static_cast<int>(lo->kinds.size()); ++i)
        {
            auto link = link_cycle(lo->base, i);
            int expected = lo->kinds[i] == VertexKind::Diagonal
                               ? 4
                               : 2 * g.degree(lo->closed[lo->kinds[i] == VertexKind::Singleton
                                                              ? i : lo->nu[i]].set.first());
            if (!link || static_cast<int>(link->size()) != expected)
                return fail("link of " + lo->closed[i].set.to_string() + " is not a "
                            + std::to_string(expected) + "-cycle");
        }
        return pass(std::to_string(report.singletons) + " singletons, " + std::to_string(report.neighborhoods)
                    + " neighborhoods, " + std::to_string(report.diagonals) + " diagonals");
    });

    gated("double-cover", [&] {
        if (!lo_surface->is_surface)
            return fail("Lovász complex is not a surface: " + lo_surface->witness->describe(lo->base));
        if (!(lovasz_from_quadrangulation(e) == *lo))
            return fail("face-rule complex differs from the definition");
        if (auto bad = involution_defect(*lo))
            return fail("involution not free on a face");
        auto quotient = quotient_complex(*lo);
        int chi_s = trace_faces(e).euler_characteristic;
        int chi_lo = euler_characteristic(lo->base);
        int chi_q = euler_characteristic(quotient.complex);
        if (chi_lo != 2 * chi_s || chi_q != chi_s)
            return fail("Euler characteristics " + std::to_string(chi_lo) + " / " + std::to_string(chi_q)
                        + " vs surface " + std::to_string(chi_s));
        // Singletons and neighborhoods span the Kronecker double cover.
        const int n = g.order();
        auto cover = kronecker_cover(g).graph;
        std::vector<int> layer_of(lo->closed.size(), -1);
        for (int v = 0; v < n; ++v)
        {
            layer_of[lo->singleton(v)] = v;
            layer_of[lo->neighborhood(v)] = v + n;
        }
        std::vector<Edge> induced;
        for (const auto& edge : lo->base.faces(1))
            if (layer_of[edge[0]] >= 0 && layer_of[edge[1]] >= 0)
                induced.emplace_back(layer_of[edge[0]], layer_of[edge[1]]);
        if (!(Graph(2 * n, induced) == cover))
            return fail("singleton/neighborhood subgraph is not the Kronecker double cover");
        return pass("chi(Lo) = " + std::to_string(chi_lo) + " = 2 chi(S); free involution; quotient chi "
                    + std::to_string(chi_q));
    });

    gated("genus-formula", [&] {
        if (!lo_surface->is_surface)
            return skip("Lovász complex is not a surface");
        auto s = embedding_surface(e);
        auto branch = cover_branch(e);
        auto predicted = predicted_lovasz_surface(s, branch);
        auto actual = *lo_surface->surface_class;
        std::string detail = "S = " + s.name() + ", branch " + to_string(branch) + "; predicted "
                             + predicted.name() + ", observed " + actual.name();
        return predicted == actual ? pass(detail) : fail(detail);
    });

    out.push_back(judge("non-facial-non-surface", [&] {
        if (!quad || hypotheses.bipartite || hypotheses.k23 || !hypotheses.all_facial.has_value()
            || *hypotheses.all_facial)
            return skip("needs a non-bipartite quadrangulation (not K2,3) with a non-facial 4-cycle");
        auto verdict = check_surface(lovasz_complex(g).base);
        std::string witness = "non-facial 4-cycle " + vertex_list(*hypotheses.non_facial_witness);
        if (verdict.is_surface)
            return fail(witness + ", yet the Lovász complex is a surface");
        return pass(witness + "; Lovász complex rejected: " + verdict.witness->describe(lovasz_complex(g).base));
    }));

    gated("quotient-round-trip", [&] {
        if (!lo_surface->is_surface)
            return skip("Lovász complex is not a surface");
        auto folded = lovasz_quotient_embedding(*lo);
        return embedded_isomorphic(folded, e) ? pass("folded embedding is isomorphic to the input")
                                              : fail("folded embedding differs from the input");
    });

    std::optional<GrayCount> min_counts;
    gated("gray-parity", [&] {
        min_counts = count_for(*lo, SplitRule::MinCorner);
        if (!non_orientable)
            return skip("orientable surface: oddness undefined");
        bool odd = is_odd_quadrangulation(e).odd;
        bool gray_odd = min_counts->gray_count % 2;
        std::string detail = "gray " + std::to_string(min_counts->gray_count) + ", odd "
                             + (odd ? "true" : "false");
        return gray_odd == odd ? pass(detail) : fail(detail);
    });

    gated("gray-cyclic-congruence", [&] {
        auto c = min_counts ? *min_counts : count_for(*lo, SplitRule::MinCorner);
        std::string detail = "gray " + std::to_string(c.gray_count) + ", r " + std::to_string(c.cyclic_count);
        return c.gray_count % 2 == c.cyclic_count % 2 ? pass(detail) : fail(detail);
    });

    gated("split-rule-independence", [&] {
        auto a = min_counts ? *min_counts : count_for(*lo, SplitRule::MinCorner);
        auto b = count_for(*lo, SplitRule::MaxCorner);
        std::string detail = "min-corner gray " + std::to_string(a.gray_count) + ", max-corner gray "
                             + std::to_string(b.gray_count);
        return a.gray_count % 2 == b.gray_count % 2 ? pass(detail) : fail(detail);
    });

    gated("chromatic-bound", [&] {
        auto report = invariant_report(e);
        if (!report.index_chain_holds)
            return fail("coind <= cohom-ind <= ind violated");
        if (g.order() > options.chi_cap)
            return skip("more than " + std::to_string(options.chi_cap) + " vertices");
        auto chi = chromatic_number(g, options.chi_cap);
        std::string detail = "chi " + std::to_string(chi.chromatic_number) + " >= ind + 2 = "
                             + std::to_string(report.chromatic_lower_bound);
        return chi.chromatic_number >= report.chromatic_lower_bound ? pass(detail) : fail(detail);
    });

    if (options.oracle)
    {
        out.push_back(judge("cut-oracle", [&] {
            if (!non_orientable || hypotheses.bipartite)
                return skip("needs a non-bipartite quadrangulation of a non-orientable surface");
            auto verdict = is_odd_quadrangulation(e, true, options.cycle_cap);
            const auto& o = *verdict.oracle;
            std::string counted = std::to_string(o.cycles_examined) + " cycles examined";
            if (!o.exhaustive)
                return skip("cycle cap reached after " + counted);
            std::string detail = counted + (o.found ? ", orientizing cycle " + vertex_list(o.witness->cycle)
                                                    : ", no orientizing odd cycle");
            return o.found == verdict.odd ? pass(detail) : fail(detail + " but cup product says "
                                                                 + (verdict.odd ? "odd" : "not odd"));
        }));
        out.push_back(judge("even-one-sided-cycle-oracle", [&] {
            if (!quad)
                return skip("not a quadrangulation");
            bool functional = has_even_one_sided_class(e).present;
            auto o = even_one_sided_cycle_oracle(e, options.cycle_cap);
            std::string counted = std::to_string(o.cycles_examined) + " cycles examined";
            if (!o.exhaustive)
                return skip("cycle cap reached after " + counted);
            std::string detail = counted + (o.found ? ", simple cycle " + vertex_list(*o.cycle)
                                                    : ", no even one-sided simple cycle");
            return o.found == functional ? pass(detail)
                                         : fail(detail + " but the functional test says "
                                                + (functional ? "present" : "absent"));
        }));
    }
    return out;
}

}   // namespace lovasz
