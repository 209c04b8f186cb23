#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "grlab/construct.hpp"
#include "grlab/gallai.hpp"
#include "support/oracles.hpp"

using namespace grlab;
namespace ts = grlab::testsupport;

namespace {

ColoredCompleteGraph mono_clique(int n, ColorId c, int declared_k) {
    GraphBuilder b(n, declared_k);
    if (n > 1) b.fill(c);
    return b.build();
}

}  // namespace

TEST_CASE("one color: all-singleton partition") {
    auto p = find_gallai_partition(mono_clique(5, 1, 1));
    CHECK(p.part_count() == 5);
    for (const auto& part : p.parts) CHECK(part.size() == 1);
    CHECK(p.between_colors == std::vector<ColorId>{1});
}

TEST_CASE("blow-up with fresh inner colors decomposes into the copies") {
    std::vector<ColoredCompleteGraph> parts;
    ts::Rng rng(5);
    for (int i = 0; i < 5; ++i) {
        GraphBuilder b(3, 5);
        b.set_color(0, 1, 3);
        b.set_color(0, 2, 4);
        b.set_color(1, 2, static_cast<ColorId>(3 + rng.below(2)));
        parts.push_back(b.build());
    }
    auto g = substitute(pentagon_base(1, 2), parts);
    auto p = find_gallai_partition(g);
    CHECK(verify_partition(g, p).holds);
    CHECK(p.between_colors.size() <= 2);
    for (ColorId c : p.between_colors) CHECK(c <= 2);
    // every part sits inside one copy
    for (const auto& part : p.parts) {
        std::set<int> blocks;
        for (int v : part) blocks.insert(v / 3);
        CHECK(blocks.size() == 1);
    }
}

TEST_CASE("K3 colored 1,1,2 decomposes validly") {
    GraphBuilder b(3, 2);
    b.set_color(0, 1, 1);
    b.set_color(0, 2, 1);
    b.set_color(1, 2, 2);
    auto g = b.build();
    auto p = find_gallai_partition(g);
    CHECK(verify_partition(g, p).holds);
    CHECK(p.part_count() >= 2);
    for (ColorId c : p.between_colors) CHECK(c <= 2);
}

TEST_CASE("minimize_parts: pentagon blow-up of five monochromatic K4 blocks") {
    std::vector<ColoredCompleteGraph> parts(5, mono_clique(4, 3, 3));
    auto g = substitute(pentagon_base(1, 2), parts);
    auto p = minimize_parts(g);
    CHECK(p.part_count() == 5);
    CHECK(verify_partition(g, p).holds);
    for (const auto& part : p.parts) CHECK(part.size() == 4);
}

TEST_CASE("minimize_parts: matching-complement K4 splits into two pairs") {
    GraphBuilder b(4, 2);
    b.fill(2);
    b.set_color(0, 1, 1);
    b.set_color(2, 3, 1);
    auto g = b.build();
    auto p = minimize_parts(g);
    REQUIRE(p.part_count() == 2);
    CHECK(p.parts[0] == std::vector<int>{0, 1});
    CHECK(p.parts[1] == std::vector<int>{2, 3});
    CHECK(p.pair_color(0, 1) == 2);
}

TEST_CASE("one-colored K2 has the unique two-part partition") {
    auto p = minimize_parts(mono_clique(2, 1, 1));
    CHECK(p.part_count() == 2);
    CHECK(find_gallai_partition(mono_clique(2, 1, 1)).part_count() == 2);
}

TEST_CASE("verify_partition pinpoints violations") {
    // single-part partition
    auto g = mono_clique(3, 1, 1);
    GallaiPartition single;
    single.parts = {{0, 1, 2}};
    single.between_colors = {};
    auto rep = verify_partition(g, single);
    CHECK_FALSE(rep.holds);
    CHECK(rep.detail.find("m >= 2") != std::string::npos);

    // a rainbow K3 with singleton parts carries three between-colors
    GraphBuilder tri(3, 3);
    tri.set_color(0, 1, 1);
    tri.set_color(0, 2, 2);
    tri.set_color(1, 2, 3);
    auto rg = tri.build();
    GallaiPartition p;
    p.parts = {{0}, {1}, {2}};
    p.between_colors = {1, 2, 3};
    p.pair_colors = {1, 2, 3};
    auto rep2 = verify_partition(rg, p);
    CHECK_FALSE(rep2.holds);
    CHECK(rep2.detail.find("more than two") != std::string::npos);

    // mislabeled pair color names the offending edge
    GraphBuilder b(4, 2);
    b.fill(1);
    auto g4 = b.build();
    GallaiPartition q;
    q.parts = {{0, 1}, {2, 3}};
    q.between_colors = {1, 2};
    q.pair_colors = {2};
    auto rep3 = verify_partition(g4, q);
    CHECK_FALSE(rep3.holds);
    CHECK(rep3.detail.find("expected pair color 2") != std::string::npos);
}

TEST_CASE("find_gallai_partition round-trips through verify_partition") {
    ts::Rng rng(99);
    for (int trial = 0; trial < 300; ++trial) {
        int budget = 2 + static_cast<int>(rng.below(59));
        int k = 1 + static_cast<int>(rng.below(6));
        auto g = ts::random_gallai(rng, budget, k);
        if (g.order() < 2) continue;
        auto p = find_gallai_partition(g);
        CHECK(verify_partition(g, p).holds);
        auto r = reduce(g, p);
        CHECK(r.order() == p.part_count());
        CHECK(r.colors_used().size() <= 2);
        // reduced colors match the declared pair colors
        for (int i = 0; i < p.part_count(); ++i)
            for (int j = i + 1; j < p.part_count(); ++j)
                CHECK(r.color(i, j) == p.pair_color(i, j));
    }
}

TEST_CASE("refinement consistency on substitution-built graphs") {
    ts::Rng rng(123);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<ColoredCompleteGraph> parts;
        std::vector<int> offsets;
        int total = 0;
        for (int i = 0; i < 5; ++i) {
            offsets.push_back(total);
            auto part = ts::random_gallai(rng, 1 + static_cast<int>(rng.below(6)), 4);
            total += part.order();
            parts.push_back(std::move(part));
        }
        auto base = pentagon_base(1, 2);
        auto g = substitute(base, parts);
        auto p = find_gallai_partition(g);
        CHECK(verify_partition(g, p).holds);

        auto copy_of = [&](int v) {
            int c = 0;
            while (c + 1 < 5 && v >= offsets[c + 1]) ++c;
            return c;
        };
        bool refines = true;
        for (const auto& part : p.parts) {
            std::set<int> blocks;
            for (int v : part) blocks.insert(copy_of(v));
            if (blocks.size() > 1) refines = false;
        }
        bool between_in_base = true;
        for (ColorId c : p.between_colors)
            if (c != 1 && c != 2) between_in_base = false;
        CHECK((refines || between_in_base));
    }
}

TEST_CASE("substitution blow-ups never acquire a rainbow triangle") {
    ts::Rng rng(321);
    for (int trial = 0; trial < 200; ++trial) {
        int k = 2 + static_cast<int>(rng.below(5));
        auto base = ts::random_gallai(rng, 2 + static_cast<int>(rng.below(6)), k);
        REQUIRE_FALSE(find_rainbow_triangle(base));
        std::vector<ColoredCompleteGraph> parts;
        for (int i = 0; i < base.order(); ++i)
            parts.push_back(ts::random_gallai(rng, 1 + static_cast<int>(rng.below(5)), k));
        auto g = substitute(base, parts);
        CHECK_FALSE(find_rainbow_triangle(g));
    }
}

TEST_CASE("substitute basics") {
    ts::Rng rng(1);
    auto g = ts::random_gallai(rng, 9, 3);
    GraphBuilder k1(1, 1);
    auto identity = substitute(k1.build(), {g});
    CHECK(identity.order() == g.order());
    bool same = true;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (identity.color(u, v) != g.color(u, v)) same = false;
    CHECK(same);

    // five two-colored K8 copies under a freshly colored pentagon
    GraphBuilder k8(8, 2);
    k8.fill(1);
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) k8.set_color(u, v, 2);
    std::vector<ColoredCompleteGraph> eights(5, k8.build());
    auto tower = substitute(pentagon_base(3, 4), eights);
    CHECK(tower.order() == 40);
    CHECK(tower.colors_used().size() == 4);

    std::vector<ColoredCompleteGraph> twos(5, [&] {
        GraphBuilder b(2, 1);
        b.fill(1);
        return b.build();
    }());
    auto g3 = substitute(pentagon_base(2, 3), twos);
    CHECK(g3.order() == 10);
    CHECK(g3.colors_used() == std::vector<ColorId>{1, 2, 3});

    CHECK_THROWS_AS(substitute(pentagon_base(1, 2), {}), Error);
}

TEST_CASE("decomposition rejects rainbow inputs and tiny orders") {
    GraphBuilder tri(3, 3);
    tri.set_color(0, 1, 1);
    tri.set_color(0, 2, 2);
    tri.set_color(1, 2, 3);
    try {
        find_gallai_partition(tri.build());
        CHECK(false);
    } catch (const RainbowTriangleError& e) {
        CHECK(e.triangle().w == 2);
    }
    CHECK_THROWS_AS(find_gallai_partition(mono_clique(1, 1, 1)), Error);
}

TEST_CASE("reduce of a pentagon blow-up is the pentagon coloring") {
    std::vector<ColoredCompleteGraph> parts(5, mono_clique(4, 3, 3));
    auto base = pentagon_base(1, 2);
    auto g = substitute(base, parts);
    auto p = minimize_parts(g);
    REQUIRE(p.part_count() == 5);
    auto r = reduce(g, p);
    REQUIRE(r.order() == 5);
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v) CHECK(r.color(u, v) == base.color(u, v));
}

TEST_CASE("partition JSON carries parts, between colors and pair colors") {
    auto g = mono_clique(3, 1, 1);
    auto p = find_gallai_partition(g);
    auto json = p.to_json(g);
    CHECK(json.find("\"parts\"") != std::string::npos);
    CHECK(json.find("\"between_colors\"") != std::string::npos);
    CHECK(json.find("\"pair_colors\"") != std::string::npos);
}
