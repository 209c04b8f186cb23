#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "grlab/catalog.hpp"
#include "grlab/detect.hpp"
#include "grlab/fixtures.hpp"
#include "grlab/gcg.hpp"
#include "grlab/pin.hpp"
#include "grlab/search.hpp"
#include "support/oracles.hpp"

using namespace grlab;
namespace ts = grlab::testsupport;

namespace {

TargetGraph pat(const char* s) { return catalog_graph(CatalogId::parse(s)); }

Forbid forbid_mono(std::vector<TargetGraph> hs, bool rainbow = false) {
    Forbid f;
    f.rainbow_k3 = rainbow;
    f.mono = std::move(hs);
    return f;
}

}  // namespace

TEST_CASE("triangle-free two-colorings exist on K5 and vanish on K6") {
    auto at5 = find_free_coloring(5, 2, forbid_mono({pat("k3")}));
    REQUIRE(at5.found());
    // the witness is the pentagon: both classes 2-regular
    for (int v = 0; v < 5; ++v) {
        CHECK(at5.witness->adjacency(1, v).count() == 2);
        CHECK(at5.witness->adjacency(2, v).count() == 2);
    }
    CHECK(prove_unavoidable(6, 2, forbid_mono({pat("k3")})).exhausted());
}

TEST_CASE("banner decision points: found at 5, exhausted at 6") {
    CHECK(find_free_coloring(5, 2, forbid_mono({pat("banner")})).found());
    CHECK(prove_unavoidable(6, 2, forbid_mono({pat("banner")})).exhausted());
}

TEST_CASE("gallai-constrained banner search matches the linear formula") {
    CHECK(find_free_coloring(6, 3, forbid_mono({pat("banner")}, true)).found());
    CHECK(prove_unavoidable(7, 3, forbid_mono({pat("banner")}, true)).exhausted());
    CHECK(prove_unavoidable(8, 4, forbid_mono({pat("banner")}, true)).exhausted());
}

TEST_CASE("accepted f9 presets: witnesses at 8, exhaustion at 9") {
    FixtureStore store;
    for (const auto& name : store.presets().candidates("f9")) {
        auto h = catalog_graph(CatalogId::named(name));
        auto found = find_free_coloring(8, 2, forbid_mono({h}));
        REQUIRE(found.found());
        CHECK_FALSE(find_mono_copy(*found.witness, h));
        CHECK(prove_unavoidable(9, 2, forbid_mono({h})).exhausted());
    }
}

TEST_CASE("found witnesses pass independent re-detection") {
    auto out = find_free_coloring(9, 2, forbid_mono({pat("diamond_pendant2")}));
    REQUIRE(out.found());
    CHECK_FALSE(find_mono_copy(*out.witness, pat("diamond_pendant2")));
    CHECK(out.witness->order() == 9);
}

TEST_CASE("find and prove agree on every verdict") {
    for (int n = 4; n <= 7; ++n)
        for (auto* target : {"k3", "banner", "path:4"}) {
            auto f = forbid_mono({pat(target)}, n % 2 == 0);
            auto a = find_free_coloring(n, 2, f);
            auto b = prove_unavoidable(n, 2, f);
            CHECK(a.verdict == b.verdict);
        }
}

TEST_CASE("pruned verdicts equal full enumeration on the small grid") {
    std::vector<std::pair<bool, std::vector<TargetGraph>>> cases = {
        {false, {pat("k3")}},
        {false, {pat("path:3")}},
        {false, {pat("path:4")}},
        {false, {pat("cycle:4")}},
        {true, {}},
        {true, {pat("k3")}},
        {true, {pat("path:4")}},
    };
    for (int n = 2; n <= 5; ++n)
        for (int k = 1; k <= 3; ++k)
            for (const auto& [rainbow, mono] : cases) {
                if (!rainbow && mono.empty()) continue;
                Forbid f = forbid_mono(mono, rainbow);
                bool naive = ts::naive_free_exists(n, k, rainbow, mono);
                CHECK(find_free_coloring(n, k, f).found() == naive);
            }
}

TEST_CASE("single-thread node counts replay exactly") {
    auto f = forbid_mono({pat("c5")});
    auto a = prove_unavoidable(9, 2, f);
    auto b = prove_unavoidable(9, 2, f);
    CHECK(a.exhausted());
    CHECK(a.nodes == b.nodes);
    CHECK(a.max_depth == b.max_depth);
}

TEST_CASE("worker pools return identical verdicts and witness bytes") {
    auto f = forbid_mono({pat("diamond_pendant3")});
    SearchConfig st;
    auto single = find_free_coloring(9, 2, f, st);
    SearchConfig mt;
    mt.threads = 4;
    mt.split_vertices = 4;
    auto pooled = find_free_coloring(9, 2, f, mt);
    REQUIRE(single.found());
    REQUIRE(pooled.found());
    CHECK(encode_gcg(*single.witness) == encode_gcg(*pooled.witness));

    auto pe = prove_unavoidable(10, 2, f, mt);
    CHECK(pe.exhausted());
    CHECK_FALSE(pe.subtree_nodes.empty());
}

TEST_CASE("budgets cut the search off deterministically") {
    SearchConfig cfg;
    cfg.node_budget = 50;
    auto a = prove_unavoidable(9, 2, forbid_mono({pat("c5")}), cfg);
    CHECK(a.verdict == Verdict::Budget);
    CHECK(a.nodes == 51);
    auto b = prove_unavoidable(9, 2, forbid_mono({pat("c5")}), cfg);
    CHECK(b.nodes == a.nodes);
}

TEST_CASE("certificates echo the configuration") {
    auto f = forbid_mono({pat("banner")}, true);
    auto out = prove_unavoidable(7, 3, f);
    auto cert = out.certificate(f);
    CHECK(cert.find("n=7 colors=3") != std::string::npos);
    CHECK(cert.find("forbid-rainbow-k3") != std::string::npos);
    CHECK(cert.find("banner") != std::string::npos);
    CHECK(cert.find("verdict exhausted") != std::string::npos);
    CHECK(cert.find("nodes ") != std::string::npos);
}

TEST_CASE("two-color Ramsey scan: banner is 6, the n=4 series value is 7") {
    auto banner = compute_r2(pat("banner"), 8);
    CHECK(banner.exact());
    CHECK(banner.lo == 6);
    auto f24 = compute_r2(pat("f2n:4"), 9);
    CHECK(f24.exact());
    CHECK(f24.lo == 7);
}

TEST_CASE("gallai scans reproduce the linear and triangle values") {
    auto b3 = compute_gr(pat("banner"), 3, 8);
    CHECK(b3.exact());
    CHECK(b3.lo == 7);
    auto b4 = compute_gr(pat("banner"), 4, 9);
    CHECK(b4.exact());
    CHECK(b4.lo == 8);
    auto k33 = compute_gr(pat("k3"), 3, 12);
    CHECK(k33.exact());
    CHECK(k33.lo == 11);
}

TEST_CASE("budget-limited scans return honest ranges") {
    SearchConfig cfg;
    cfg.node_budget = 30;
    auto v = compute_r2(pat("c5"), 9, cfg);
    CHECK_FALSE(v.exact());
    CHECK(v.hi == GrValue::kOpenUpper);
    CHECK(v.lo >= 5);

    auto w = compute_r2(pat("banner"), 5);  // n_max below the true value
    CHECK_FALSE(w.exact());
    CHECK(w.lo == 6);
}

TEST_CASE("forbid sets must be non-empty and patterns need edges") {
    CHECK_THROWS_AS(find_free_coloring(5, 2, Forbid{}), Error);
    Forbid f;
    f.mono.push_back(TargetGraph::from_edges(3, {}, "edgeless"));
    CHECK_THROWS_AS(find_free_coloring(5, 2, f), Error);
}

TEST_CASE("pinning runs deterministically and lands on consistent slots") {
    PinConfig cfg;
    cfg.n_min = 5;
    cfg.n_cap = 10;
    cfg.budget_per_call = 50'000'000;
    auto a = pin_presets(cfg);
    auto b = pin_presets(cfg);
    REQUIRE(a.consistent());
    CHECK(a.evidence_text() == b.evidence_text());
    CHECK(a.table.to_json() == b.table.to_json());

    // every assignment satisfies the harvested constraints by construction;
    // spot-check the strict pair ordering
    for (const auto& asg : a.assignments) {
        auto f9 = catalog_graph(CatalogId::named(asg.names[0]));
        auto f10 = catalog_graph(CatalogId::named(asg.names[1]));
        CHECK(is_subgraph(f9, f10));
        CHECK(f9.edge_count() < f10.edge_count());
        for (const auto& name : asg.names)
            CHECK_FALSE(has_c5_homomorphism(catalog_graph(CatalogId::named(name))));
    }

    // the committed table matches a fresh run at the committed config
    FixtureStore store;
    REQUIRE(store.presets_pinned());
    CHECK(store.presets().slots == a.table.slots);
}

TEST_CASE("five-cycle homomorphism classifier") {
    CHECK(has_c5_homomorphism(pat("c5")));
    CHECK(has_c5_homomorphism(pat("banner")));
    CHECK(has_c5_homomorphism(pat("k23")));
    CHECK_FALSE(has_c5_homomorphism(pat("k3")));
    CHECK_FALSE(has_c5_homomorphism(pat("house")));
    CHECK_FALSE(has_c5_homomorphism(pat("tadpole32")));
    CHECK_FALSE(has_c5_homomorphism(pat("bowtie")));
}

TEST_CASE("forcing graphs have the documented shapes") {
    CHECK(is_isomorphic(fact_421_forcing(), pat("diamond_pendant3")));
    auto f422 = fact_422_forcing();
    CHECK(f422.order == 5);
    CHECK(f422.edge_count() == 7);
    CHECK(is_subgraph(pat("k23"), f422));
    CHECK(is_subgraph(pat("diamond_pendant2"), f422));
    CHECK(is_subgraph(pat("house"), f422));
    CHECK_FALSE(is_subgraph(pat("diamond_pendant3"), f422));
}

TEST_CASE("subtree splitting conserves the node count on exhausted runs") {
    auto f = forbid_mono({pat("c5")});
    auto single = prove_unavoidable(9, 2, f);
    REQUIRE(single.exhausted());
    for (int split : {3, 4, 5}) {
        SearchConfig cfg;
        cfg.threads = 2;
        cfg.split_vertices = split;
        auto pooled = prove_unavoidable(9, 2, f, cfg);
        CHECK(pooled.exhausted());
        CHECK(pooled.nodes == single.nodes);
    }
}

TEST_CASE("symmetry pruning never changes a verdict on the candidate scans") {
    // the weakly-pruned engine (color canonicity only) agrees with the
    // fully-pruned one at orders where both finish
    for (const auto& name : named_five_vertex_patterns()) {
        auto h = catalog_graph(CatalogId::named(name));
        if (h.edge_count() < 5) continue;  // trees resolve below this range
        for (int n = 7; n <= 8; ++n) {
            Forbid f;
            f.mono.push_back(h);
            SearchConfig weak;
            weak.vertex_symmetry = false;
            weak.node_budget = 500'000'000ULL;
            SearchConfig strong;
            strong.vertex_symmetry = true;
            auto a = find_free_coloring(n, 2, f, weak);
            auto b = find_free_coloring(n, 2, f, strong);
            REQUIRE(a.verdict != Verdict::Budget);
            CHECK(a.verdict == b.verdict);
        }
    }
}
