#include <doctest.h>

#include "lmd/verify.hpp"

using namespace lmd;
using namespace lmd::verify;

TEST_CASE("catalog is deterministic and matches its contract") {
    auto cat = build_catalog(Scope::standard);
    CHECK(cat.g_entries.size() == 10);  // connected graphs of order <= 4

    auto has = [&](const std::string& label) {
        for (const auto& e : cat.h_entries)
            if (e.label == label) return true;
        return false;
    };
    CHECK(has("named:figure1"));
    CHECK(has("projectivePlane:2"));
    CHECK(has("pseudoSphere:3"));
    CHECK(has("named:k1_cup_k3"));
    CHECK(has("path:6"));
    CHECK(has("cycle:9"));
    CHECK_FALSE(has("projectivePlane:3"));  // extended only

    int rnd = 0;
    for (const auto& e : cat.h_entries)
        if (e.label.rfind("rndbip3#", 0) == 0) {
            ++rnd;
            CHECK(e.graph.order() <= 9);
            auto inv = structural_invariants(e.graph);
            CHECK(inv.connected);
            CHECK(inv.bipartition.has_value());
            CHECK(*inv.radius == 3);
        }
    CHECK(rnd == 20);
    CHECK(cat.random_rejects > 0);

    auto again = build_catalog(Scope::standard);
    REQUIRE(again.h_entries.size() == cat.h_entries.size());
    for (size_t i = 0; i < cat.h_entries.size(); ++i) {
        CHECK(again.h_entries[i].label == cat.h_entries[i].label);
        CHECK(again.h_entries[i].graph.edges() == cat.h_entries[i].graph.edges());
    }

    auto ext = build_catalog(Scope::extended);
    bool pp3 = false;
    for (const auto& e : ext.h_entries)
        if (e.label == "projectivePlane:3") pp3 = e.delta_prime_only;
    CHECK(pp3);

    CHECK(build_catalog(Scope::small).max_corona_order == 14);
    CHECK(cat.max_corona_order == 20);
}

TEST_CASE("claim registry is well formed") {
    std::set<std::string> ids;
    for (const auto& info : claim_registry()) {
        CHECK(ids.insert(info.id).second);
        CHECK_FALSE(info.anchor.empty());
        CHECK_FALSE(info.description.empty());
    }
    CHECK(ids.size() == 19);
}

TEST_CASE("small sweep: deterministic, and mismatches are exactly the documented ones") {
    auto report = run_sweep(Scope::small);
    CHECK(report.matches() > 100);
    // the only mismatching claim is the upper-extremal biconditional, on the
    // two complete-plus-isolated instances (see notes in the repository docs)
    std::vector<std::string> mism;
    for (const auto& row : report.rows)
        if (row.verdict == "mismatch") mism.push_back(row.claim + "/" + row.instance);
    REQUIRE(mism.size() == 2);
    CHECK(mism[0] == "extremal-upper-iff/H=ord4#04");
    CHECK(mism[1] == "extremal-upper-iff/H=ord5#20");

    auto again = run_sweep(Scope::small);
    CHECK(report_json(report, false).dump() == report_json(again, false).dump());
    CHECK(report_text(report, false) == report_text(again, false));
}

TEST_CASE("sweep skips are explicit and reasoned") {
    auto report = run_sweep(Scope::small);
    int skipped = 0;
    for (const auto& row : report.rows)
        if (row.verdict == "skipped") {
            ++skipped;
            CHECK_FALSE(row.reason.empty());
        }
    CHECK(skipped > 0);
}

TEST_CASE("claim filters") {
    auto filtered = run_sweep(Scope::small, std::vector<std::string>{"corona-oracle"});
    CHECK(filtered.rows.size() > 60);
    for (const auto& row : filtered.rows) CHECK(row.claim == "corona-oracle");
    CHECK(filtered.mismatches() == 0);

    auto empty = run_sweep(Scope::small, std::vector<std::string>{});
    CHECK(empty.rows.empty());

    auto unknown = run_sweep(Scope::small, std::vector<std::string>{"no-such-claim"});
    CHECK(unknown.rows.empty());
}

TEST_CASE("plane cover claim records the resolved constant") {
    auto report = run_sweep(Scope::small, std::vector<std::string>{"plane-cover-number"});
    REQUIRE(report.rows.size() == 1);
    CHECK(report.rows[0].verdict == "match");
    REQUIRE_FALSE(report.notes.empty());
    CHECK(report.notes[0].find("q+1") != std::string::npos);
}

TEST_CASE("json report carries the schema, registry and totals") {
    auto report = run_sweep(Scope::small, std::vector<std::string>{"plane-delta-prime"});
    auto j = report_json(report, false);
    CHECK(j["schema"] == "lmd-report/1");
    CHECK(j["scope"] == "small");
    CHECK(j["seed"] == kDefaultSeed);
    CHECK(j["config"].contains("cap"));
    CHECK(j["registry"].size() == 19);
    CHECK(j["claims"].size() == report.rows.size());
    CHECK(j["totals"]["match"] == report.matches());
    CHECK_FALSE(j.contains("generatedAt"));
    auto stamped = report_json(report, true);
    CHECK(stamped.contains("generatedAt"));
}

TEST_CASE("text report shape") {
    auto report = run_sweep(Scope::small, std::vector<std::string>{"plane-delta-prime"});
    auto text = report_text(report, false);
    CHECK(text.find("lmd verify report (lmd-report/1)") == 0);
    CHECK(text.find("totals: match=") != std::string::npos);
    CHECK(text.find("generated:") == std::string::npos);
    CHECK(report_text(report, true).find("generated:") != std::string::npos);
}
