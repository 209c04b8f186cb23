#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <unistd.h>
#include <fstream>

#include "grlab/catalog.hpp"
#include "grlab/construct.hpp"
#include "grlab/detect.hpp"
#include "grlab/gallai.hpp"
#include "grlab/gcg.hpp"
#include "support/oracles.hpp"

using namespace grlab;

namespace {

// connected 2-regular classes at order 5 are five-cycles
bool color_class_is_c5(const ColoredCompleteGraph& g, ColorId c) {
    if (g.order() != 5) return false;
    for (int v = 0; v < 5; ++v)
        if (g.adjacency(c, v).count() != 2) return false;
    Bitset seen(5);
    seen.set(0);
    Bitset frontier = g.adjacency(c, 0);
    for (int round = 0; round < 5; ++round) {
        Bitset next(5);
        frontier.for_each([&](int v) {
            seen.set(v);
            next |= g.adjacency(c, v);
        });
        next -= seen;
        frontier = next;
    }
    return seen.count() == 5;
}

}  // namespace

TEST_CASE("pentagon base: two complementary five-cycles, no mono triangle") {
    auto g = pentagon_base(1, 2);
    CHECK(color_class_is_c5(g, 1));
    CHECK(color_class_is_c5(g, 2));
    CHECK_FALSE(find_mono_copy(g, catalog_graph(CatalogId::complete(3))));
    CHECK_FALSE(find_rainbow_triangle(g));

    auto h = pentagon_base(7, 9);
    CHECK(color_class_is_c5(h, 7));
    CHECK(color_class_is_c5(h, 9));
    CHECK_THROWS_AS(pentagon_base(4, 4), Error);
}

TEST_CASE("pentagon blow-up reduces back to the pentagon") {
    GraphBuilder k4(4, 3);
    k4.fill(3);
    std::vector<ColoredCompleteGraph> parts(5, k4.build());
    auto base = pentagon_base(1, 2);
    auto g = substitute(base, parts);
    auto r = reduce(g, minimize_parts(g));
    REQUIRE(r.order() == 5);
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v) CHECK(r.color(u, v) == base.color(u, v));
}

TEST_CASE("cone: single vertex joined in one color") {
    GraphBuilder k1(1, 1);
    auto k2 = cone(k1.build(), 1);
    CHECK(k2.order() == 2);
    CHECK(k2.color(0, 1) == 1);

    // a fresh-colored cone never creates a rainbow triangle
    testsupport::Rng rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        auto g = testsupport::random_gallai(rng, 2 + static_cast<int>(rng.below(12)), 3);
        auto coned = cone(g, 4);
        CHECK_FALSE(find_rainbow_triangle(coned));
        for (int v = 0; v < g.order(); ++v) CHECK(coned.color(v, g.order()) == 4);
    }
}

TEST_CASE("five-power tower orders and colors") {
    FixtureStore store;
    CHECK(witness_f9_f10(1, store).order() == 4);
    CHECK(witness_f9_f10(2, store).order() == 8);
    CHECK(witness_f9_f10(3, store).order() == 20);
    CHECK(witness_f12_f13(2, store).order() == 9);
    CHECK(witness_f12_f13(3, store).order() == 20);
    CHECK(witness_f12_f13(4, store).order() == 45);
    CHECK(witness_f12_f13(5, store).order() == 100);
    for (int k = 1; k <= 4; ++k) {
        CHECK(static_cast<int>(witness_f9_f10(k, store).colors_used().size()) == k);
        CHECK(static_cast<int>(witness_f12_f13(k, store).colors_used().size()) == k);
    }
    CHECK_THROWS_AS(witness_f9_f10(0, store), Error);
}

TEST_CASE("k=1 towers are monochromatic K4") {
    FixtureStore store;
    auto g = witness_f9_f10(1, store);
    CHECK(g.order() == 4);
    CHECK(g.colors_used() == std::vector<ColorId>{1});
}

TEST_CASE("fresh tower colors appear only between copies") {
    FixtureStore store;
    auto g = witness_f9_f10(3, store);  // five K4 copies under pentagon(2,3)
    REQUIRE(g.order() == 20);
    for (int u = 0; u < 20; ++u)
        for (int v = u + 1; v < 20; ++v) {
            if (u / 4 == v / 4)
                CHECK(g.color(u, v) == 1);
            else
                CHECK(g.color(u, v) >= 2);
        }
}

TEST_CASE("f2n witnesses across the three regimes") {
    FixtureStore store;
    // cones over the cached two-color bases
    CHECK(witness_f2n(3, 3, store).order() == 6);
    CHECK(witness_f2n(4, 3, store).order() == 7);
    CHECK(witness_f2n(3, 4, store).order() == 7);
    CHECK(witness_f2n(4, 4, store).order() == 8);
    // pentagon of cliques, with the extra color-1 cone at n=5
    CHECK(witness_f2n(3, 5, store).order() == 11);
    CHECK(witness_f2n(5, 5, store).order() == 13);
    CHECK(witness_f2n(3, 6, store).order() == 11);
    CHECK(witness_f2n(4, 8, store).order() == 17);
    CHECK(witness_f2n(4, 7, store).order() == 16);
    // degenerate color counts
    CHECK(witness_f2n(1, 6, store).order() == 7);
    CHECK(witness_f2n(2, 3, store).order() == 5);
    CHECK(witness_f2n(2, 5, store).order() == 9);
    CHECK(witness_f2n(2, 8, store).order() == 14);  // circulant witness
    for (int k = 1; k <= 5; ++k)
        CHECK(static_cast<int>(witness_f2n(k, 5, store).colors_used().size()) == k);
    CHECK_THROWS_AS(witness_f2n(3, 2, store), Error);
    CHECK_THROWS_AS(witness_f2n(0, 5, store), Error);
}

TEST_CASE("f2n witnesses avoid their target and rainbow triangles") {
    FixtureStore store;
    for (int n : {3, 4, 5, 6, 8}) {
        auto h = catalog_graph(CatalogId::f2n(n));
        for (int k = 2; k <= 4; ++k) {
            auto g = witness_f2n(k, n, store);
            CHECK_FALSE(find_rainbow_triangle(g));
            if (h.order <= g.order()) CHECK_FALSE(find_mono_copy(g, h));
        }
    }
}

TEST_CASE("k3 tower familiar cases") {
    CHECK(witness_k3(1).order() == 2);
    auto k2tower = witness_k3(2);
    CHECK(k2tower == pentagon_base(1, 2));
    CHECK(witness_k3(3).order() == 10);
    auto g = witness_k3(4);
    CHECK(g.order() == 25);
    CHECK_FALSE(find_mono_copy(g, catalog_graph(CatalogId::complete(3))));
    CHECK_FALSE(find_rainbow_triangle(g));
}

TEST_CASE("star witness meets the degree caps") {
    auto p = witness_star(3);
    CHECK(p.order() == 5);
    for (int v = 0; v < 5; ++v) {
        CHECK(p.adjacency(1, v).count() == 2);
        CHECK(p.adjacency(2, v).count() == 2);
    }

    for (int n = 3; n <= 10; ++n) {
        auto g = witness_star(n);
        int eps = (n % 2 == 0) ? 1 : 0;
        CHECK(g.order() == 2 * n - eps - 1);
        for (int v = 0; v < g.order(); ++v) {
            CHECK(g.adjacency(1, v).count() <= n - 1);
            CHECK(g.adjacency(2, v).count() <= n - 1);
        }
        CHECK_FALSE(find_mono_copy(g, catalog_graph(CatalogId::star(n))));
    }
    CHECK_THROWS_AS(witness_star(2), Error);
}

TEST_CASE("recipes are deterministic and trace their steps") {
    FixtureStore store;
    auto r1 = witness_f2n_recipe(4, 5, store);
    auto r2 = witness_f2n_recipe(4, 5, store);
    CHECK(encode_gcg(r1.evaluate()) == encode_gcg(r2.evaluate()));
    CHECK(r1.trace() == r2.trace());
    CHECK(r1.trace().find("substitute") != std::string::npos);
    CHECK(r1.trace().find("cone") != std::string::npos);
    CHECK(r1.claimed_order == 12);
    CHECK(r1.claimed_colors == 4);
}

TEST_CASE("missing fixtures surface as errors") {
    FixtureStore empty("/nonexistent-grlab-data");
    CHECK_THROWS_WITH_AS(witness_f9_f10(2, empty) /* needs the K8 base */,
                         doctest::Contains("unavailable"), Error);
    CHECK_THROWS_AS(witness_f2n(3, 4, empty), Error);
    // odd towers never touch fixtures
    CHECK(witness_f9_f10(3, empty).order() == 20);
}

TEST_CASE("search fallback rebuilds missing bases") {
    // f2n bases carry their own forbidden pattern, so no preset table is
    // needed even in an empty data directory
    FixtureStore empty("/nonexistent-grlab-data");
    auto r = witness_f2n_recipe(3, 4, empty, /*search_bases=*/true);
    CHECK(r.trace().find("searched:") != std::string::npos);
    auto g = r.evaluate();
    CHECK(g.order() == 7);
    CHECK_FALSE(find_mono_copy(g, catalog_graph(CatalogId::f2n(4))));

    // tower bases need the pinned slots; without a table the fallback
    // refuses rather than guessing
    CHECK_THROWS_WITH_AS(witness_f9_f10_recipe(2, empty, true),
                         doctest::Contains("unpinned"), Error);

    // with the committed table but no fixture files, regeneration finds
    // the same canonical base the repository ships
    FixtureStore store;
    std::string tmp = "/tmp/grlab_fallback_test_" + std::to_string(::getpid());
    std::filesystem::create_directories(tmp);
    {
        std::ofstream out(tmp + "/presets.json", std::ios::binary);
        out << store.presets().to_json();
    }
    FixtureStore half(tmp);
    auto rebuilt = witness_f9_f10_recipe(2, half, true).evaluate();
    CHECK(encode_gcg(rebuilt) == encode_gcg(store.load("f9_base_k8")));
}

TEST_CASE("full witness grid stays rainbow-free and target-free") {
    FixtureStore store;
    PresetTable presets = store.presets();
    std::vector<TargetGraph> f9s, f12s;
    for (const auto& name : presets.candidates("f9"))
        f9s.push_back(catalog_graph(CatalogId::named(name)));
    for (const auto& slot : {"f12", "f13"})
        for (const auto& name : presets.candidates(slot))
            f12s.push_back(catalog_graph(CatalogId::named(name)));

    for (int k = 1; k <= 5; ++k) {
        auto g9 = witness_f9_f10(k, store);
        CHECK_FALSE(find_rainbow_triangle(g9));
        for (const auto& h : f9s)
            if (h.order <= g9.order()) CHECK_FALSE(find_mono_copy(g9, h));
        auto g12 = witness_f12_f13(k, store);
        CHECK_FALSE(find_rainbow_triangle(g12));
        for (const auto& h : f12s)
            if (h.order <= g12.order()) CHECK_FALSE(find_mono_copy(g12, h));
        auto gk3 = witness_k3(k);
        CHECK_FALSE(find_rainbow_triangle(gk3));
        if (gk3.order() >= 3)
            CHECK_FALSE(find_mono_copy(gk3, catalog_graph(CatalogId::complete(3))));
    }
    for (int k = 1; k <= 8; ++k)
        for (int n = 3; n <= 10; ++n) {
            auto g = witness_f2n(k, n, store);
            auto h = catalog_graph(CatalogId::f2n(n));
            CHECK_FALSE(find_rainbow_triangle(g));
            if (h.order <= g.order()) CHECK_FALSE(find_mono_copy(g, h));
        }
}

TEST_CASE("committed fixtures re-verify against the detectors") {
    FixtureStore store;
    PresetTable presets = store.presets();
    auto base8 = store.load("f9_base_k8");
    CHECK(base8.order() == 8);
    for (const auto& name : presets.candidates("f9"))
        CHECK_FALSE(find_mono_copy(base8, catalog_graph(CatalogId::named(name))));
    for (const auto& name : presets.candidates("f10"))
        CHECK_FALSE(find_mono_copy(base8, catalog_graph(CatalogId::named(name))));

    auto base9 = store.load("f12_base_k9");
    CHECK(base9.order() == 9);
    for (const auto& slot : {"f12", "f13"})
        for (const auto& name : presets.candidates(slot))
            CHECK_FALSE(find_mono_copy(base9, catalog_graph(CatalogId::named(name))));

    CHECK_FALSE(find_mono_copy(store.load("f2n3_base_k5"),
                               catalog_graph(CatalogId::f2n(3))));
    CHECK_FALSE(find_mono_copy(store.load("f2n4_base_k6"),
                               catalog_graph(CatalogId::f2n(4))));
    CHECK_FALSE(find_mono_copy(store.load("f2n5_base_k9"),
                               catalog_graph(CatalogId::f2n(5))));
}

TEST_CASE("every generator is byte-deterministic") {
    FixtureStore store;
    auto same = [](const ColoredCompleteGraph& a, const ColoredCompleteGraph& b) {
        return encode_gcg(a) == encode_gcg(b);
    };
    for (int k = 1; k <= 4; ++k) {
        CHECK(same(witness_f9_f10(k, store), witness_f9_f10(k, store)));
        CHECK(same(witness_f12_f13(k, store), witness_f12_f13(k, store)));
        CHECK(same(witness_k3(k), witness_k3(k)));
        for (int n : {3, 5, 8}) CHECK(same(witness_f2n(k, n, store), witness_f2n(k, n, store)));
    }
    for (int n = 3; n <= 8; ++n) CHECK(same(witness_star(n), witness_star(n)));
}
