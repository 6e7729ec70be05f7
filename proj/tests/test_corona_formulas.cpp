#include <doctest.h>

#include "lmd/corona_formulas.hpp"
#include "lmd/enumerate.hpp"

using namespace lmd;

TEST_CASE("prediction engine on the worked examples") {
    auto p2 = path_graph(2);
    auto p3 = path_graph(3);

    auto a = theorem3_corona_dimension(p2, complete_graph(3));
    CHECK(*a.value == 4);
    CHECK(a.rule == "corona-apex-used");

    auto b = theorem3_corona_dimension(p3, empty_graph(5));
    CHECK(*b.value == 1);
    CHECK(b.rule == "corona-empty-h");

    auto c = theorem3_corona_dimension(p2, figure1_graph());
    CHECK(*c.value == 4);
    CHECK(c.rule == "corona-apex-free");
    // confirmed against the exhaustive search on the 16-vertex corona
    CHECK(local_metric_dimension(corona(p2, figure1_graph())).value == 4);

    auto d = theorem3_corona_dimension(complete_graph(1), cycle_graph(5));
    CHECK(*d.value == 2);
    CHECK(d.rule == "corona-is-join");

    CHECK_THROWS_AS(theorem3_corona_dimension(named_graph("k1_cup_k3"), p2), std::invalid_argument);
}

TEST_CASE("family closed forms") {
    CHECK(*family_closed_form(2, FamilySpec::parse("cycle:5")).value == 4);
    CHECK(*family_closed_form(3, FamilySpec::parse("path:5")).value == 3);
    CHECK(*family_closed_form(2, FamilySpec::parse("completeBipartite:3,4")).value == 2);
    CHECK(*family_closed_form(2, FamilySpec::parse("complete:3")).value == 4);
    CHECK(*family_closed_form(2, FamilySpec::parse("cycle:4")).value == 2);
    CHECK(*family_closed_form(4, FamilySpec::parse("path:9")).value == 8);  // 9 = 4*2+1, floor
    CHECK(*family_closed_form(4, FamilySpec::parse("path:8")).value == 8);  // ceil
    CHECK_THROWS_AS(family_closed_form(2, FamilySpec::parse("path:3")), RuleNotApplicable);
    CHECK_THROWS_AS(family_closed_form(2, FamilySpec::parse("empty:3")), RuleNotApplicable);
    CHECK_THROWS_AS(family_closed_form(1, FamilySpec::parse("cycle:5")), RuleNotApplicable);
}

TEST_CASE("closed forms agree with the prediction engine") {
    for (int n = 2; n <= 3; ++n) {
        Graph g = path_graph(n);
        std::vector<std::string> fams;
        for (int t = 2; t <= 6; ++t) fams.push_back("complete:" + std::to_string(t));
        for (int r = 1; r <= 3; ++r)
            for (int s = 1; s <= 3; ++s)
                fams.push_back("completeBipartite:" + std::to_string(r) + "," + std::to_string(s));
        for (int t = 4; t <= 9; ++t) fams.push_back("path:" + std::to_string(t));
        for (int t = 4; t <= 9; ++t) fams.push_back("cycle:" + std::to_string(t));
        for (const auto& f : fams) {
            auto spec = FamilySpec::parse(f);
            CHECK(*family_closed_form(n, spec).value ==
                  *theorem3_corona_dimension(g, build_family(spec)).value);
        }
    }
}

TEST_CASE("dimension bounds") {
    auto p2 = path_graph(2);
    auto b1 = dimension_bounds(p2, path_graph(5));
    CHECK(b1.interval->first == 2);
    CHECK(b1.interval->second == 8);

    auto b2 = dimension_bounds(path_graph(3), cycle_graph(5));  // dim_l(C5) = 2
    CHECK(b2.interval->first >= 6);

    auto b3 = dimension_bounds(p2, cycle_graph(6));  // r = 3
    CHECK(b3.interval->first >= 4);

    CHECK_THROWS_AS(dimension_bounds(p2, empty_graph(3)), RuleNotApplicable);
    CHECK_THROWS_AS(dimension_bounds(complete_graph(1), cycle_graph(4)), RuleNotApplicable);

    // interval sanity across assorted hosts
    for (const auto& hs : {"complete:4", "cycle:7", "named:figure1", "named:k1_cup_k3",
                           "pseudoSphere:4", "completeBipartite:2,3"}) {
        auto b = dimension_bounds(p2, build_family(hs));
        CHECK(b.interval->first <= b.interval->second);
    }
}

TEST_CASE("extremal upper characterization: predicate shape") {
    CHECK(extremal_upper_characterization(complete_graph(4)));
    CHECK(extremal_upper_characterization(complete_graph(2)));
    CHECK(extremal_upper_characterization(named_graph("k1_cup_k3")));
    CHECK(extremal_upper_characterization(named_graph("k1_cup_k4")));
    CHECK_FALSE(extremal_upper_characterization(path_graph(4)));
    CHECK_FALSE(extremal_upper_characterization(empty_graph(2)));
    CHECK_FALSE(extremal_upper_characterization(disjoint_union(empty_graph(2), complete_graph(2))));
    CHECK_THROWS_AS(extremal_upper_characterization(complete_graph(1)), std::invalid_argument);
}

TEST_CASE("documented discrepancy: complete-plus-isolated does not attain the maximum") {
    // The classical characterization admits K1 u K_{m}, but exhaustive search
    // puts those coronas at n(n'-2): the apex of K1+H can sit in a minimum
    // basis (e.g. {apex, x, y} with x,y in the clique), which halves the
    // per-copy contribution. The verify sweep surfaces this as a mismatch.
    auto h = named_graph("k1_cup_k3");
    auto apex = apex_in_some_basis(h);
    CHECK(apex.dim_join == 3);
    CHECK(apex.apex_in_some);
    CHECK(local_metric_dimension(corona(path_graph(2), h)).value == 4);  // not 6 = n(n'-1)
}

TEST_CASE("lower extreme characterization") {
    CHECK(lower_extreme_characterization(complete_bipartite(2, 3)));
    CHECK(lower_extreme_characterization(complete_bipartite(1, 3)));
    CHECK(lower_extreme_characterization(path_graph(4)));
    CHECK_FALSE(lower_extreme_characterization(cycle_graph(6)));  // radius 3
    CHECK(lower_extreme_characterization(disjoint_union(cycle_graph(4), empty_graph(2))));
    CHECK_FALSE(lower_extreme_characterization(disjoint_union(cycle_graph(4), complete_graph(2))));
    CHECK_FALSE(lower_extreme_characterization(complete_graph(3)));  // not bipartite
    CHECK_THROWS_AS(lower_extreme_characterization(empty_graph(3)), RuleNotApplicable);
}

TEST_CASE("diameter two equality") {
    CHECK(diameter_two_equality(cycle_graph(5)) == 2);
    CHECK(diameter_two_equality(cycle_graph(4)) == 1);
    CHECK_FALSE(diameter_two_equality(path_graph(6)).has_value());
    CHECK_THROWS_AS(diameter_two_equality(named_graph("k1_cup_k3")), std::invalid_argument);
}

TEST_CASE("beta and delta'") {
    auto c6 = cycle_graph(6);
    for (int v = 0; v < 6; ++v) CHECK(beta(c6, v) == 2);
    CHECK(delta_prime(c6) == 2);

    auto hw = projective_plane(2);
    CHECK(beta(hw, 0) == 3);
    CHECK(delta_prime(hw) == 3);
    CHECK(delta_prime(projective_plane(3)) == 4);

    CHECK_THROWS_WITH_AS(beta(path_graph(7), 0), "beta defined only on center vertices",
                         std::invalid_argument);
    // radius-1 input is rejected before any shell search
    CHECK_THROWS_AS(beta(star_graph(4), 0), std::invalid_argument);
    CHECK_THROWS_AS(delta_prime(star_graph(4)), std::invalid_argument);
    CHECK_THROWS_AS(delta_prime(named_graph("k1_cup_k3")), std::invalid_argument);
}

TEST_CASE("bipartite radius-3 upper bound") {
    auto u1 = bipartite_radius3_upper(cycle_graph(6), 2);
    CHECK(u1.interval->second == 4);
    auto u2 = bipartite_radius3_upper(projective_plane(2), 2);
    CHECK(u2.interval->second == 6);
    // attained on the plane incidence graph
    CHECK(*theorem3_corona_dimension(path_graph(2), projective_plane(2)).value == 6);
    CHECK_THROWS_AS(bipartite_radius3_upper(cycle_graph(4), 2), RuleNotApplicable);
    CHECK_THROWS_AS(bipartite_radius3_upper(cycle_graph(5), 2), RuleNotApplicable);
}

TEST_CASE("projective-like exact values") {
    auto s4 = projective_like_exact(pseudo_sphere(4), 3);
    REQUIRE(s4.has_value());
    CHECK(*s4->value == 6);
    CHECK(s4->rule == "pseudo-sphere");

    auto hw = projective_like_exact(projective_plane(2), 2);
    REQUIRE(hw.has_value());
    CHECK(*hw->value == 6);
    CHECK(hw->rule == "plane-incidence");

    auto c6 = projective_like_exact(cycle_graph(6), 2);
    REQUIRE(c6.has_value());
    CHECK(*c6->value == 4);  // C6 = S_3; consistent with n*ceil(6/4)

    CHECK_FALSE(projective_like_exact(path_graph(6), 2).has_value());
    CHECK_FALSE(projective_like_exact(cycle_graph(8), 2).has_value());  // girth 8
}

TEST_CASE("plane cover number from first principles") {
    auto up = upsilon_plane(2);
    CHECK(up.value == 3);
    CHECK(up.value == up.delta_prime_incidence);
    CHECK(up.pencil_structure);
    CHECK(up.optima.size() == 14);  // 7 full lines + 7 full pencils
    auto up3 = upsilon_plane(3);
    CHECK(up3.value == 4);
    CHECK(up3.value == up3.delta_prime_incidence);
    CHECK(up3.pencil_structure);
    CHECK_THROWS_WITH_AS(upsilon_plane(4), "unsupported plane order", std::invalid_argument);
    CHECK_THROWS_AS(upsilon_plane(7), std::runtime_error);
}

TEST_CASE("2n characterizations") {
    CHECK(two_n_characterization(figure1_graph()));
    CHECK(two_n_characterization(path_graph(6)));
    CHECK_FALSE(two_n_characterization(projective_plane(2)));
    CHECK_THROWS_AS(two_n_characterization(cycle_graph(5)), RuleNotApplicable);
    CHECK_THROWS_AS(two_n_characterization(cycle_graph(4)), RuleNotApplicable);

    CHECK(dim2_join_characterization(figure1_graph()));
    CHECK_FALSE(dim2_join_characterization(projective_plane(2)));
    // a vertex adjacent to all but one of the other class forces dimension two
    for (const auto& spec : {"path:6", "cycle:6", "named:figure1"}) {
        auto h = build_family(spec);
        auto inv = structural_invariants(h);
        const auto& color = *inv.bipartition;
        std::vector<int> classes(2, 0);
        for (int c : color) ++classes[c];
        for (int a = 0; a < h.order(); ++a)
            if (h.degree(a) == classes[1 - color[a]] - 1) CHECK(dim2_join_characterization(h));
    }
}

TEST_CASE("tree profile and closed form") {
    auto p6 = tree_corona_dimension(path_graph(6), 2);
    CHECK(*p6.value == 4);
    CHECK(p6.rule == "tree-bicentral");
    CHECK_FALSE(tree_profile(path_graph(6)).has_value());

    auto s332 = tree_profile(named_graph("spider_3_3_2"));
    REQUIRE(s332.has_value());
    CHECK(s332->varsigma == 2);
    bool has_h1 = false;
    for (auto [w, hw] : s332->heights) has_h1 = has_h1 || hw == 1;
    CHECK(has_h1);
    CHECK(*tree_corona_dimension(named_graph("spider_3_3_2"), 2).value == 6);

    auto s333 = tree_profile(named_graph("spider_3_3_3"));
    REQUIRE(s333.has_value());
    CHECK(s333->varsigma == 3);
    for (auto [w, ph] : s333->phi) CHECK(ph == 1);
    CHECK(*tree_corona_dimension(named_graph("spider_3_3_3"), 2).value == 6);

    auto p7 = tree_profile(path_graph(7));
    REQUIRE(p7.has_value());
    CHECK(p7->center.members == std::vector<int>{3});
    CHECK(p7->varsigma == 2);

    auto broom = tree_profile(named_graph("twinbroom"));
    REQUIRE(broom.has_value());
    for (auto [w, ph] : broom->phi) CHECK(ph == 2);
    CHECK(*tree_corona_dimension(named_graph("twinbroom"), 2).value == 4);

    CHECK_THROWS_AS(tree_corona_dimension(cycle_graph(6), 2), RuleNotApplicable);
    CHECK_THROWS_AS(tree_corona_dimension(path_graph(5), 2), RuleNotApplicable);
    CHECK_THROWS_AS(tree_corona_dimension(path_graph(6), 1), RuleNotApplicable);
}

TEST_CASE("radius >= 4 shortcut") {
    auto p2 = path_graph(2);
    for (const auto& spec : {"path:8", "path:9", "cycle:8", "cycle:9"}) {
        auto h = build_family(spec);
        auto apex = apex_in_some_basis(h);
        CHECK_FALSE(apex.apex_in_some);
        CHECK(*theorem3_corona_dimension(p2, h).value == 2 * apex.dim_join);
    }
}

TEST_CASE("plane incidence basis structure as computed") {
    // Full enumeration on K1 + Heawood: the apex appears in the 14
    // pencil-shaped bases {apex} u N(w) (all one color class), but 231
    // further bases avoid the apex entirely. Kept as a computed fact; the
    // sweep reports the corresponding stated property as a mismatch.
    auto hw = projective_plane(2);
    auto apex = apex_in_some_basis(hw);
    CHECK(apex.dim_join == 4);
    CHECK(apex.apex_in_some);
    CHECK(apex.bases.size() == 245);
    int with_apex = 0;
    const auto color = *structural_invariants(hw).bipartition;
    for (const auto& b : apex.bases) {
        if (!b.contains(apex.apex_index)) continue;
        ++with_apex;
        bool c0 = false, c1 = false;
        for (int v : b.members)
            if (v != apex.apex_index) (color[v] == 0 ? c0 : c1) = true;
        CHECK_FALSE((c0 && c1));
    }
    CHECK(with_apex == 14);
}
