// Prints one pass/fail line per acceptance criterion; exits 1 if any fails.
#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "lovasz/double_cover.hpp"
#include "lovasz/generators.hpp"
#include "lovasz/invariants.hpp"
#include "lovasz/io.hpp"
#include "lovasz/surface.hpp"
#include "random_graphs.hpp"

using namespace lovasz;

namespace {

struct Outcome
{
    bool pass = false;
    std::string detail;
};

// Oracles run exhaustively up to this many vertices and capped above it.
constexpr int kExhaustiveOracleVertices = 24;
constexpr long long kLargeOracleCap = 100'000;

std::vector<io::EmbeddingDocument> shipped_embeddings()
{
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(FIXTURE_DIR))
        files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    std::vector<io::EmbeddingDocument> out;
    std::istringstream none;
    for (const auto& path : files)
    {
        auto j = io::parse_text(io::read_source(path.string(), none), path.string());
        if (j.value("format", "") == "embedding")
            out.push_back(io::embedding_from_json(j));
    }
    return out;
}

Outcome example_graph_golden()
{
    auto g = figure1_graph();
    std::set<std::string> labels;
    for (const auto& c : closed_sets(g))
        labels.insert(io::set_label(g, c.set));
    const std::vector<std::string> octagon{"{1}",     "{1,3,5}", "{3,5}",   "{3}",
                                           "{2,3,4}", "{2,4}",   "{2,4,6}", "{1,2,4,6}"};
    bool sets_match = labels == std::set<std::string>(octagon.begin(), octagon.end());

    auto lo = lovasz_complex(g);
    std::map<std::string, int> at;
    for (int i = 0; i < static_cast<int>(lo.closed.size()); ++i)
        at[io::set_label(g, lo.closed[i].set)] = i;
    std::set<std::pair<int, int>> expected, actual;
    auto add = [&](const std::string& a, const std::string& b) {
        expected.emplace(std::min(at[a], at[b]), std::max(at[a], at[b]));
    };
    for (std::size_t i = 0; i < octagon.size(); ++i)
        add(octagon[i], octagon[(i + 1) % octagon.size()]);
    add("{3}", "{1,3,5}");
    add("{2,4}", "{1,2,4,6}");
    for (const auto& e : lo.base.faces(1))
        actual.emplace(e[0], e[1]);
    auto f = lo.base.f_vector();
    bool shape = f == std::vector<long long>{8, 10, 2} && actual == expected;
    return {sets_match && shape, "closed sets " + std::string(sets_match ? "match" : "differ") + ", f-vector "
                                     + std::to_string(f[0]) + "/" + std::to_string(f.size() > 1 ? f[1] : 0) + "/"
                                     + std::to_string(f.size() > 2 ? f[2] : 0) + ", octagon adjacency "
                                     + (actual == expected ? "exact" : "differs")};
}

Outcome projective_k4_pipeline()
{
    auto fixture = k4_projective();
    const auto& e = fixture.embedding;
    auto lo = lovasz_complex(e.graph());
    auto surface = check_surface(lo.base);
    if (!surface.is_surface)
        return {false, "Lovász complex is not a surface"};
    bool shape = lo.base.f_vector() == std::vector<long long>{14, 36, 24} && surface.surface_class->orientable
                 && surface.surface_class->euler == 2 && surface.surface_class->genus == 0;
    bool free = !involution_defect(lo);
    bool round_trip = embedded_isomorphic(lovasz_quotient_embedding(lo), e);
    auto odd = is_odd_quadrangulation(e, true);
    bool oddness = odd.odd && odd.oracle && odd.oracle->found;
    auto report = invariant_report(e, {true});
    bool indices = report.counts.gray_count % 2 == 1 && report.cohom_ind == 2 && report.ind == 2;
    bool bound = report.chromatic_lower_bound == 4 && report.chromatic->chromatic_number == 4;
    std::ostringstream detail;
    detail << "f-vector 14/36/24 sphere " << shape << ", free " << free << ", round trip " << round_trip
           << ", odd (cup/oracle) " << oddness << ", gray " << report.counts.gray_count << ", ind "
           << report.ind << ", bound " << report.chromatic_lower_bound << " = chi "
           << report.chromatic->chromatic_number;
    return {shape && free && round_trip && oddness && indices && bound, detail.str()};
}

Outcome torus_double_cover()
{
    auto e = torus_grid(3, 3).embedding;
    auto lo = lovasz_complex(e.graph());
    auto surface = check_surface(lo.base);
    bool shape = surface.is_surface && surface.surface_class->name() == "OS_1"
                 && lo.base.f_vector() == std::vector<long long>{36, 108, 72};
    bool round_trip = shape && embedded_isomorphic(lovasz_quotient_embedding(lo), e);
    return {shape && round_trip, std::string("OS_1 with 36/108/72 ") + (shape ? "yes" : "no") + ", round trip "
                                     + (round_trip ? "isomorphic" : "differs")};
}

Outcome non_facial_rejection()
{
    auto e = torus_grid(3, 4).embedding;
    auto facial = all_4cycles_facial(e);
    auto lo = lovasz_complex(e.graph());
    auto surface = check_surface(lo.base);
    bool rejected = !surface.is_surface && surface.witness->kind == DefectKind::EdgeDegree
                    && surface.witness->count >= 3;
    std::string detail = facial.witness ? "non-facial 4-cycle found" : "no non-facial witness";
    detail += surface.witness ? "; " + surface.witness->describe(lo.base) : "; accepted as a surface";
    return {!facial.all_facial && facial.witness && rejected, detail};
}

Outcome neighborhood_dichotomy()
{
    int checked = 0, bad = 0;
    for (const auto& doc : shipped_embeddings())
    {
        const auto& e = doc.embedding;
        auto h = check_hypotheses(e);
        if (!h.quadrangulation || h.bipartite || !h.all_facial.value_or(false))
            continue;
        ++checked;
        bool k23 = is_k23(e.graph());
        bool clean = !find_k23(e.graph()) && !find_domination(e.graph());
        bad += !(k23 || clean);
    }
    auto k23 = k23_sphere();
    bool branch = is_k23(k23.embedding.graph()) && find_k23(k23.embedding.graph()).has_value();
    return {checked > 0 && bad == 0 && branch, std::to_string(checked) + " shipped fixtures, " + std::to_string(bad)
                                                   + " violations; K2,3 branch on the sphere fixture "
                                                   + (branch ? "triggers" : "missing")};
}

struct SweepTally
{
    int instances = 0;
    int eligible = 0;
    int odd = 0;
    int gray_mismatch = 0;
    int oracle_conclusive = 0;
    int oracle_mismatch = 0;
    int oracle_capped = 0;
    int rule_mismatch = 0;
    int congruence_failures = 0;
    int congruence_checked = 0;
    bool odd_ind_two = false;       // an odd instance, oracle-verified, with ind 2
    bool even_ind_one = false;      // a non-odd instance, oracle-verified, with ind 1
    int non_tidy_missing = 0;
};

SweepTally run_sweep()
{
    SweepTally t;
    for (int m = 3; m <= 13; ++m)
    {
        for (int n = 3; n <= 13; ++n)
        {
            if (m * n > 40)
                continue;
            for (int twist = 0; twist < m; ++twist)
            {
                ++t.instances;
                auto fixture = klein_grid(m, n, twist);
                const auto& e = fixture.embedding;
                if (fixture.spec.bipartite || !*fixture.spec.all_facial)
                    continue;
                ++t.eligible;
                const bool small = e.order() <= kExhaustiveOracleVertices;
                auto report = invariant_report(e, {false, kDefaultChromaticCap, true,
                                                   small ? kDefaultCycleCap : kLargeOracleCap});
                auto max_rule = invariant_report(
                    e, {false, kDefaultChromaticCap, false, kDefaultCycleCap, SplitRule::MaxCorner});
                const bool odd = *report.odd;
                const bool gray_odd = report.counts.gray_count % 2 == 1;
                t.odd += odd;
                t.gray_mismatch += gray_odd != odd;
                t.rule_mismatch += gray_odd != (max_rule.counts.gray_count % 2 == 1);
                ++t.congruence_checked;
                t.congruence_failures += !report.congruence_holds;

                bool verified = false;
                if (report.oracle->exhaustive || report.oracle->found)
                {
                    ++t.oracle_conclusive;
                    verified = report.oracle->found == odd;
                    t.oracle_mismatch += !verified;
                }
                else
                    ++t.oracle_capped;
                if (verified && odd && report.ind == 2)
                    t.odd_ind_two = true;
                if (verified && !odd && report.ind == 1)
                    t.even_ind_one = true;
                if (odd && !report.non_tidy)
                    ++t.non_tidy_missing;
            }
        }
    }
    return t;
}

const SweepTally& sweep()
{
    static const SweepTally tally = run_sweep();
    return tally;
}

Outcome oracle_equivalence()
{
    const auto& t = sweep();
    std::ostringstream detail;
    detail << t.eligible << " non-bipartite all-facial instances of " << t.instances << " (" << t.odd
           << " odd); gray/cup mismatches " << t.gray_mismatch << ", oracle mismatches " << t.oracle_mismatch
           << " over " << t.oracle_conclusive << " conclusive runs (" << t.oracle_capped
           << " capped above " << kExhaustiveOracleVertices << " vertices), split-rule mismatches "
           << t.rule_mismatch;
    return {t.eligible > 0 && t.gray_mismatch == 0 && t.oracle_mismatch == 0 && t.rule_mismatch == 0,
            detail.str()};
}

Outcome congruence()
{
    const auto& t = sweep();
    int checked = t.congruence_checked, failures = t.congruence_failures;
    for (const auto& doc : shipped_embeddings())
    {
        if (!check_hypotheses(doc.embedding).ok())
            continue;
        auto report = invariant_report(doc.embedding);
        ++checked;
        failures += report.counts.gray_count % 2 != report.counts.cyclic_count % 2;
    }
    return {checked > 0 && failures == 0,
            std::to_string(checked) + " instances, " + std::to_string(failures) + " failures"};
}

Outcome galois_properties()
{
    std::mt19937 rng(20240611);
    int violations = 0;
    const int graphs = 1000;
    for (int trial = 0; trial < graphs; ++trial)
    {
        auto g = testing::random_graph(rng, 10);
        auto a = testing::random_subset(rng, g.order());
        auto b = a | testing::random_subset(rng, g.order());
        auto cn_a = common_neighbors(g, a);
        violations += !common_neighbors(g, b).subset_of(cn_a);
        violations += common_neighbors(g, cn_closure(g, a)) != cn_a;
        violations += a.intersects(cn_a);

        auto lo = lovasz_complex(g);
        for (int i = 0; i < static_cast<int>(lo.nu.size()); ++i)
            violations += lo.nu[i] < 0 || lo.nu[lo.nu[i]] != i;
        violations += involution_defect(lo).has_value();
    }
    return {violations == 0, std::to_string(graphs) + " random graphs (n <= 10), " + std::to_string(violations)
                                 + " violations"};
}

Outcome klein_split()
{
    const auto& t = sweep();
    std::string detail = std::string("odd instance with ind 2 ") + (t.odd_ind_two ? "found" : "missing")
                         + ", non-odd instance with ind 1 " + (t.even_ind_one ? "found" : "missing")
                         + ", odd instances without the non-tidy flag " + std::to_string(t.non_tidy_missing);
    return {t.odd_ind_two && t.even_ind_one && t.non_tidy_missing == 0, detail};
}

}   // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"example graph golden", example_graph_golden},
        {"projective K4 pipeline", projective_k4_pipeline},
        {"torus double cover", torus_double_cover},
        {"non-facial 4-cycle rejection", non_facial_rejection},
        {"neighborhood dichotomy", neighborhood_dichotomy},
        {"gray parity oracle equivalence", oracle_equivalence},
        {"gray cyclic congruence", congruence},
        {"Galois and involution properties", galois_properties},
        {"Klein bottle family split", klein_split},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i)
    {
        Outcome outcome;
        try
        {
            outcome = criteria[i].second();
        }
        catch (const std::exception& e)
        {
            outcome = {false, std::string("error: ") + e.what()};
        }
        failed += !outcome.pass;
        std::printf("criterion %zu %s: %s (%s)\n", i + 1, outcome.pass ? "PASS" : "FAIL", criteria[i].first.c_str(),
                    outcome.detail.c_str());
    }
    std::printf("%zu criteria, %d failed\n", criteria.size(), failed);
    return failed ? 1 : 0;
}
