#include "catch_amalgamated.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "lovasz/double_cover.hpp"
#include "lovasz/error.hpp"
#include "lovasz/generators.hpp"
#include "lovasz/invariants.hpp"
#include "random_graphs.hpp"

using namespace lovasz;

namespace {

const Verdict& verdict(const std::vector<Verdict>& all, const std::string& name)
{
    auto it = std::find_if(all.begin(), all.end(), [&](const Verdict& v) { return v.name == name; });
    REQUIRE(it != all.end());
    return *it;
}

std::multiset<std::vector<int>> label_triples(const std::vector<LabeledTriangle>& triangles)
{
    std::multiset<std::vector<int>> out;
    for (const auto& t : triangles)
    {
        std::vector<int> labels(t.labels.begin(), t.labels.end());
        std::sort(labels.begin(), labels.end());
        out.insert(labels);
    }
    return out;
}

}   // namespace

TEST_CASE("gray triangles and cyclic quads")
{
    CHECK(is_gray({1, -2, 3}));
    CHECK_FALSE(is_gray({1, -2, -4}));
    CHECK(is_gray({3, 1, -2}));         // order of the corners does not matter
    CHECK_FALSE(is_gray({1, 2, 3}));

    CHECK(in_cyclic_order({1, -2, 3, -4}));
    CHECK(in_cyclic_order({4, -3, 2, -1}));
    CHECK_FALSE(in_cyclic_order({1, -3, 2, -4}));
}

TEST_CASE("labeling of the Lovász complex")
{
    auto lo = lovasz_complex(k4_projective().embedding.graph());
    auto labeling = build_labeling(lo);
    std::set<int> labels;
    for (int x : labeling.label)
        if (x != 0)
            labels.insert(x);
    CHECK(labels == std::set<int>{-4, -3, -2, -1, 1, 2, 3, 4});
    for (int i = 0; i < static_cast<int>(lo.nu.size()); ++i)
        CHECK(labeling(lo.nu[i]) == -labeling(i));

    auto grid = lovasz_complex(torus_grid(3, 3).embedding.graph());
    auto grid_labels = build_labeling(grid).label;
    CHECK(std::count_if(grid_labels.begin(), grid_labels.end(), [](int x) { return x != 0; }) == 18);

    CHECK_THROWS_AS(build_labeling(lovasz_complex(Graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}))), PreconditionError);
}

TEST_CASE("symmetric triangulation")
{
    auto lo = lovasz_complex(k4_projective().embedding.graph());
    auto labeling = build_labeling(lo);
    auto quads = induced_quads(lo, labeling);
    CHECK(quads.size() == 6);
    auto triangles = symmetric_triangulation(lo);
    CHECK(triangles.size() == 12);

    // the triangle set is invariant under negating all labels, and no
    // triangle is its own image
    auto triples = label_triples(triangles);
    std::multiset<std::vector<int>> negated;
    for (auto t : triples)
    {
        for (int& x : t)
            x = -x;
        std::sort(t.begin(), t.end());
        CHECK(triples.count(t) == 1);
        negated.insert(t);
        auto original = t;
        for (int& x : original)
            x = -x;
        std::sort(original.begin(), original.end());
        CHECK(original != t);
    }
    CHECK(negated == triples);

    auto grid = lovasz_complex(torus_grid(3, 3).embedding.graph());
    CHECK(symmetric_triangulation(grid).size() == 36);
    CHECK(induced_quads(grid, build_labeling(grid)).size() == 18);
}

TEST_CASE("invariant reports")
{
    auto k4 = invariant_report(k4_projective().embedding, {true});
    CHECK(k4.lovasz_surface.name() == "OS_0");
    CHECK(k4.odd == true);
    CHECK(k4.counts.gray_count % 2 == 1);
    CHECK(k4.cohom_ind == 2);
    CHECK(k4.ind == 2);
    CHECK(k4.coind == 2);
    CHECK(k4.chromatic_lower_bound == 4);
    CHECK(k4.chromatic->chromatic_number == 4);
    CHECK(k4.bound_holds == true);
    CHECK(k4.but_manifold);
    CHECK_FALSE(k4.non_tidy);

    auto even = invariant_report(klein_grid(6, 3, 0).embedding);
    CHECK(even.odd == false);
    CHECK(even.cohom_ind == 1);
    CHECK(even.ind == 1);
    CHECK(even.coind == 1);
    CHECK(even.chromatic_lower_bound == 3);

    auto odd = invariant_report(klein_grid(3, 5, 0).embedding);
    CHECK(odd.odd == true);
    CHECK(odd.ind == 2);
    CHECK(odd.coind == 1);
    CHECK(odd.non_tidy);

    auto torus = invariant_report(torus_grid(3, 3).embedding);
    CHECK_FALSE(torus.odd);
    CHECK_FALSE(torus.cup);
    CHECK(torus.coind == 1);
    CHECK(torus.cohom_ind == 1);
    CHECK_FALSE(torus.notes.empty());

    for (const auto& r : {k4, even, odd, torus})
    {
        CHECK(r.congruence_holds);
        CHECK(r.index_chain_holds);
        CHECK(r.counts.gray_count % 2 == r.counts.cyclic_count % 2);
    }

    CHECK_THROWS_AS(invariant_report(torus_grid(3, 4).embedding), HypothesisError);
    CHECK_THROWS_AS(invariant_report(k23_sphere().embedding), HypothesisError);
}

TEST_CASE("gray parity is independent of vertex numbering and split rule")
{
    std::mt19937 rng(5);
    for (const auto& e : {k4_projective().embedding, klein_grid(3, 5, 0).embedding, klein_grid(6, 3, 0).embedding,
                          klein_grid(5, 5, 2).embedding})
    {
        auto base = invariant_report(e);
        auto max_rule = invariant_report(e, {false, kDefaultChromaticCap, false, kDefaultCycleCap, SplitRule::MaxCorner});
        CHECK(base.counts.gray_count % 2 == max_rule.counts.gray_count % 2);
        for (int trial = 0; trial < 3; ++trial)
        {
            auto perm = testing::random_permutation(rng, e.order());
            auto moved = invariant_report(relabel(e, perm));
            CHECK(moved.counts.gray_count % 2 == base.counts.gray_count % 2);
            CHECK(moved.cohom_ind == base.cohom_ind);
        }
    }
}

TEST_CASE("genus formula branches")
{
    CHECK(cover_branch(k4_projective().embedding) == CoverBranch::OneSidedOdd);
    CHECK(cover_branch(torus_grid(3, 3).embedding) == CoverBranch::Orientable);
    CHECK(cover_branch(klein_grid(3, 5, 0).embedding) == CoverBranch::EvenOneSided);
    CHECK(predicted_lovasz_surface(SurfaceClass::from_euler(0, true), CoverBranch::Orientable).name() == "OS_1");
    CHECK(predicted_lovasz_surface(SurfaceClass::from_euler(-1, false), CoverBranch::OneSidedOdd).name() == "OS_2");
    CHECK(predicted_lovasz_surface(SurfaceClass::from_euler(-1, false), CoverBranch::EvenOneSided).name() == "NS_4");
}

TEST_CASE("quotient embedding folds the double cover back")
{
    for (const auto& e : {k4_projective().embedding, torus_grid(3, 3).embedding, klein_grid(3, 5, 0).embedding,
                          klein_grid(6, 3, 0).embedding})
    {
        auto folded = lovasz_quotient_embedding(lovasz_complex(e.graph()));
        CHECK(embedding_surface(folded) == embedding_surface(e));
        CHECK(embedded_isomorphic(folded, e));
    }
    CHECK_THROWS_AS(lovasz_quotient_embedding(lovasz_complex(torus_grid(3, 4).embedding.graph())), PreconditionError);
}

TEST_CASE("verdict bundles")
{
    VerifyOptions with_oracle;
    with_oracle.oracle = true;
    auto fixture = k4_projective();
    with_oracle.annotations = fixture.spec;
    auto k4 = run_verdicts(fixture.embedding, with_oracle);
    CHECK(all_pass(k4));
    CHECK(verdict(k4, "gray-parity").status == Status::Pass);
    CHECK(verdict(k4, "cut-oracle").status == Status::Pass);
    CHECK(verdict(k4, "chromatic-bound").status == Status::Pass);
    CHECK(verdict(k4, "non-facial-non-surface").status == Status::Skip);

    auto grid = run_verdicts(torus_grid(3, 4).embedding);
    CHECK(all_pass(grid));
    CHECK(verdict(grid, "non-facial-non-surface").status == Status::Pass);
    CHECK(verdict(grid, "double-cover").status == Status::Skip);

    auto k23 = run_verdicts(k23_sphere().embedding);
    CHECK(all_pass(k23));
    CHECK(verdict(k23, "neighborhood-dichotomy").detail == "graph is K2,3");
    CHECK(verdict(k23, "double-cover").status == Status::Skip);
    CHECK(verdict(k23, "double-cover").detail.find("K2,3") != std::string::npos);

    // flip one sign: the faces stop being quadrilaterals
    auto signs = fixture.embedding.signs();
    signs[0] = -signs[0];
    EmbeddedGraph broken(fixture.embedding.graph(), fixture.embedding.rotations(), signs);
    VerifyOptions annotated;
    annotated.annotations = fixture.spec;
    auto bad = run_verdicts(broken, annotated);
    CHECK_FALSE(all_pass(bad));
    CHECK(verdict(bad, "quadrangulation").status == Status::Fail);
    CHECK(verdict(bad, "annotations").status == Status::Fail);

    // a wrong annotation alone is caught
    auto lying = fixture.spec;
    lying.odd = false;
    annotated.annotations = lying;
    auto lied = run_verdicts(fixture.embedding, annotated);
    CHECK(verdict(lied, "annotations").status == Status::Fail);
    CHECK(verdict(lied, "quadrangulation").status == Status::Pass);
}
