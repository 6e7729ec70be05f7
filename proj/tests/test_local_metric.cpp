#include <doctest.h>

#include <random>

#include "lmd/families.hpp"
#include "lmd/local_metric.hpp"

#include "support/naive_oracle.hpp"

using namespace lmd;

TEST_CASE("generator predicate on the definitional examples") {
    auto c4 = cycle_graph(4);
    for (int v = 0; v < 4; ++v) CHECK(is_local_metric_generator(c4, VertexSet({v}, 4)));
    CHECK_FALSE(is_local_metric_generator(complete_graph(3), VertexSet({0}, 3)));
    // figure 1: {A, F} resolves K1 + H
    auto j = apex_join(figure1_graph());
    CHECK(is_local_metric_generator(j, VertexSet({0, 5}, 8)));
    CHECK_THROWS_WITH_AS(is_local_metric_generator(named_graph("k1_cup_k3"), VertexSet({0}, 4)),
                         "undefined: graph must be connected", std::invalid_argument);
}

TEST_CASE("exact dimension: frozen values") {
    auto k4 = local_metric_dimension(complete_graph(4));
    CHECK(k4.value == 3);
    CHECK(k4.witness.to_string() == "{0,1,2}");
    CHECK(k4.method == "oracle");

    CHECK(local_metric_dimension(path_graph(6)).value == 1);
    CHECK(local_metric_dimension(cycle_graph(5)).value == 2);
    CHECK(local_metric_dimension(apex_join(figure1_graph())).value == 2);
    CHECK(local_metric_dimension(complete_graph(2)).value == 1);
}

TEST_CASE("error paths: trivial, disconnected, over cap") {
    CHECK_THROWS_AS(local_metric_dimension(complete_graph(1)), std::invalid_argument);
    CHECK_THROWS_AS(local_metric_dimension(named_graph("k1_cup_k3")), std::invalid_argument);
    CHECK_THROWS_WITH_AS(local_metric_dimension(path_graph(33)),
                         "instance too large for exact search", std::runtime_error);
    SolveOptions roomy;
    roomy.cap = 40;
    CHECK(local_metric_dimension(path_graph(33), roomy).value == 1);
}

TEST_CASE("solver agrees with the naive subset oracle") {
    std::vector<Graph> instances;
    for (const auto& spec : {"path:5", "cycle:5", "cycle:6", "cycle:7", "complete:4", "complete:5",
                             "completeBipartite:2,3", "named:figure1", "pseudoSphere:4",
                             "star:4", "corona:path:2,complete:3"})
        instances.push_back(build_family(spec));
    std::mt19937 rng(4242);
    while (instances.size() < 26) {
        int n = 4 + static_cast<int>(rng() % 5);
        std::vector<Edge> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng() % 100 < 45) edges.push_back({i, j});
        Graph g(n, std::move(edges));
        if (is_connected(g)) instances.push_back(std::move(g));
    }
    for (const auto& g : instances) {
        auto fast = local_metric_dimension(g);
        auto slow = naive::dimension(g);
        CHECK(fast.value == slow.value);
        CHECK(fast.witness.members == slow.witness);
    }
}

TEST_CASE("pruned and unpruned searches are interchangeable") {
    SolveOptions pruned, plain;
    pruned.prune = true;
    plain.prune = false;
    for (const auto& spec : {"path:8", "cycle:9", "complete:5", "named:figure1",
                             "pseudoSphere:4", "completeBipartite:3,3", "named:spider_3_3_1"}) {
        auto g = build_family(spec);
        auto a = local_metric_dimension(g, pruned);
        auto b = local_metric_dimension(g, plain);
        CHECK(a.value == b.value);
        CHECK(a.witness == b.witness);
    }
}

TEST_CASE("basis enumeration: sizes, minimality, completeness") {
    SolveOptions all;
    all.enumerate_all = true;
    auto k4 = local_metric_dimension(complete_graph(4), all);
    REQUIRE(k4.all_bases.has_value());
    CHECK(k4.all_bases->size() == 4);  // every 3-subset of K4
    for (const auto& b : *k4.all_bases) CHECK(b.size() == k4.value);

    auto f1 = local_metric_dimension(apex_join(figure1_graph()), all);
    REQUIRE(f1.all_bases.has_value());
    CHECK(f1.witness.to_string() == "{0,5}");
    // no smaller set works: the search reached size 2 only after size 1 failed
    for (const auto& b : *f1.all_bases) CHECK(b.size() == 2);
    auto dist = naive::relaxed_distances(apex_join(figure1_graph()));
    for (int v = 0; v < 8; ++v)
        CHECK_FALSE(naive::is_generator(dist, apex_join(figure1_graph()), {v}));
}

TEST_CASE("apex membership on the named examples") {
    CHECK(apex_in_some_basis(cycle_graph(4)).apex_in_some);
    CHECK_FALSE(apex_in_some_basis(cycle_graph(5)).apex_in_some);
    auto f1 = apex_in_some_basis(figure1_graph());
    CHECK(f1.dim_join == 2);
    CHECK_FALSE(f1.apex_in_some);
    // radius >= 4 forces the apex out
    CHECK_FALSE(apex_in_some_basis(path_graph(9)).apex_in_some);
    CHECK_FALSE(apex_in_some_basis(cycle_graph(8)).apex_in_some);
    CHECK_THROWS_AS(apex_in_some_basis(empty_graph(3)), std::invalid_argument);
}

TEST_CASE("adding vertices to a generator never breaks it") {
    std::mt19937 rng(7);
    for (const auto& spec : {"cycle:7", "named:figure1", "pseudoSphere:4", "complete:5"}) {
        auto g = build_family(spec);
        auto base = local_metric_dimension(g);
        auto grown = base.witness.members;
        while (static_cast<int>(grown.size()) < std::min(g.order(), base.witness.size() + 3)) {
            int v = static_cast<int>(rng() % g.order());
            if (std::find(grown.begin(), grown.end(), v) == grown.end()) grown.push_back(v);
        }
        CHECK(is_local_metric_generator(g, VertexSet(grown, g.order())));
    }
}
