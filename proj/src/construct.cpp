#include "grlab/construct.hpp"

#include <algorithm>

#include "grlab/gallai.hpp"
#include "grlab/search.hpp"

namespace grlab {

ColoredCompleteGraph pentagon_base(ColorId c1, ColorId c2) {
    if (c1 == c2) throw Error("pentagon base needs two distinct colors");
    GraphBuilder b(5, std::max(c1, c2));
    for (int i = 0; i < 5; ++i) {
        b.set_color(i, (i + 1) % 5, c1);
        b.set_color(i, (i + 2) % 5, c2);
    }
    return b.build();
}

ColoredCompleteGraph cone(const ColoredCompleteGraph& g, ColorId c) {
    int n = g.order();
    GraphBuilder b(n + 1, std::max<ColorId>(g.color_count(), c));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) b.set_color(u, v, g.color(u, v));
    for (int u = 0; u < n; ++u) b.set_color(u, n, c);
    return b.build();
}

ColoredCompleteGraph witness_star(int n) {
    if (n < 3) throw Error("star witness needs n >= 3");
    int eps = (n % 2 == 0) ? 1 : 0;
    int o = 2 * n - eps - 1;
    // distance classes on Z_o; low distances take color 1, the rest color 2,
    // split so both classes stay below degree n (the o/2 matching lands in
    // the color-2 class when o is even)
    int cut = (o % 2 == 0) ? (n / 2 - 1) : (n - 1) / 2;
    GraphBuilder b(o, 2);
    for (int u = 0; u < o; ++u)
        for (int v = u + 1; v < o; ++v) {
            int d = std::min(v - u, o - (v - u));
            b.set_color(u, v, d <= cut ? 1 : 2);
        }
    return b.build();
}

ColoredCompleteGraph WitnessRecipe::evaluate() const {
    std::vector<ColoredCompleteGraph> built;
    built.reserve(steps.size());
    for (const auto& step : steps) {
        if (const auto* base = std::get_if<BaseStep>(&step)) {
            built.push_back(base->graph);
        } else if (const auto* sub = std::get_if<SubstituteStep>(&step)) {
            std::vector<ColoredCompleteGraph> parts;
            for (int idx : sub->parts) parts.push_back(built.at(idx));
            built.push_back(substitute(built.at(sub->base), parts));
        } else {
            const auto& c = std::get<ConeStep>(step);
            built.push_back(cone(built.at(c.src), c.color));
        }
    }
    if (built.empty()) throw Error("empty recipe");
    const ColoredCompleteGraph& result = built.back();
    if (result.order() != claimed_order)
        throw Error("recipe for " + target + " yields order " +
                    std::to_string(result.order()) + ", claimed " +
                    std::to_string(claimed_order));
    if (static_cast<int>(result.colors_used().size()) != claimed_colors)
        throw Error("recipe for " + target + " uses " +
                    std::to_string(result.colors_used().size()) + " colors, claimed " +
                    std::to_string(claimed_colors));
    return result;
}

std::string WitnessRecipe::trace() const {
    std::string out = "target " + target + " order " + std::to_string(claimed_order) +
                      " colors " + std::to_string(claimed_colors) + "\n";
    for (std::size_t i = 0; i < steps.size(); ++i) {
        out += "step " + std::to_string(i) + " = ";
        if (const auto* base = std::get_if<BaseStep>(&steps[i])) {
            out += "base " + base->label + " order " + std::to_string(base->graph.order());
        } else if (const auto* sub = std::get_if<SubstituteStep>(&steps[i])) {
            out += "substitute base=" + std::to_string(sub->base) + " parts=[";
            for (std::size_t j = 0; j < sub->parts.size(); ++j)
                out += (j ? "," : "") + std::to_string(sub->parts[j]);
            out += "]";
        } else {
            const auto& c = std::get<ConeStep>(steps[i]);
            out += "cone src=" + std::to_string(c.src) + " color=" + std::to_string(c.color);
        }
        out += "\n";
    }
    return out;
}

namespace {

WitnessRecipe::BaseStep mono_clique(int order, ColorId color) {
    GraphBuilder b(order, color);
    if (order > 1) b.fill(color);
    return {b.build(), "k" + std::to_string(order) + "(color " + std::to_string(color) + ")"};
}

WitnessRecipe::BaseStep pentagon_step(ColorId c1, ColorId c2) {
    return {pentagon_base(c1, c2),
            "pentagon(" + std::to_string(c1) + "," + std::to_string(c2) + ")"};
}

// load a cached two-color base, or regenerate it with a bounded search
// against the patterns it must avoid
WitnessRecipe::BaseStep two_color_base(const FixtureStore& fixtures,
                                       const std::string& fixture, int order,
                                       const std::vector<std::string>& avoid_slots,
                                       const std::vector<TargetGraph>& avoid_extra,
                                       bool search_bases) {
    if (fixtures.available(fixture)) {
        ColoredCompleteGraph base = fixtures.load(fixture);
        if (base.order() != order || base.color_count() != 2)
            throw Error("fixture '" + fixture + "' has unexpected shape");
        return {std::move(base), "fixture:" + fixture};
    }
    if (!search_bases)
        throw Error("fixture '" + fixture + "' unavailable and search fallback disabled " +
                    "(looked in " + fixtures.dir() + ")");
    Forbid f;
    f.mono = avoid_extra;
    PresetTable presets = fixtures.presets();
    for (const auto& slot : avoid_slots) {
        auto names = presets.candidates(slot);
        if (names.empty())
            throw Error("cannot regenerate '" + fixture + "': preset slot " + slot +
                        " is unpinned");
        for (const auto& name : names)
            f.mono.push_back(catalog_graph(CatalogId::named(name)));
    }
    SearchConfig cfg;
    cfg.node_budget = 500'000'000ULL;
    cfg.vertex_symmetry = true;
    SearchOutcome out = find_free_coloring(order, 2, f, cfg);
    if (!out.found())
        throw Error("search fallback found no " + std::to_string(order) +
                    "-vertex base for '" + fixture + "'");
    return {*out.witness, "searched:" + fixture};
}

// shared shape of the two 5^(k/2) tower families
WitnessRecipe pentagon_tower(int k, const std::string& target, const std::string& fixture,
                             int even_base_order, const std::vector<std::string>& avoid_slots,
                             const FixtureStore& fixtures, bool search_bases) {
    if (k < 1) throw Error("tower witness needs k >= 1");
    WitnessRecipe r;
    r.target = target;
    int order = 0;
    int last = 0;
    if (k % 2 == 1) {
        r.steps.push_back(mono_clique(4, 1));
        order = 4;
    } else {
        r.steps.push_back(two_color_base(fixtures, fixture, even_base_order, avoid_slots,
                                         {}, search_bases));
        order = even_base_order;
    }
    int first_fresh = (k % 2 == 1) ? 2 : 3;
    for (ColorId c = static_cast<ColorId>(first_fresh); c + 1 <= k; c += 2) {
        r.steps.push_back(pentagon_step(c, c + 1));
        int pent = static_cast<int>(r.steps.size()) - 1;
        r.steps.push_back(WitnessRecipe::SubstituteStep{pent, {last, last, last, last, last}});
        last = static_cast<int>(r.steps.size()) - 1;
        order *= 5;
    }
    r.claimed_order = order;
    r.claimed_colors = k;
    return r;
}

}  // namespace

WitnessRecipe witness_f9_f10_recipe(int k, const FixtureStore& fixtures, bool search_bases) {
    return pentagon_tower(k, "f9", "f9_base_k8", 8, {"f9", "f10"}, fixtures, search_bases);
}

WitnessRecipe witness_f12_f13_recipe(int k, const FixtureStore& fixtures,
                                     bool search_bases) {
    return pentagon_tower(k, "f12", "f12_base_k9", 9, {"f12", "f13"}, fixtures,
                          search_bases);
}

WitnessRecipe witness_k3_recipe(int k) {
    if (k < 1) throw Error("k3 witness needs k >= 1");
    WitnessRecipe r;
    r.target = "k3";
    int order = 0;
    if (k % 2 == 1) {
        r.steps.push_back(mono_clique(2, 1));
        order = 2;
    } else {
        r.steps.push_back(mono_clique(1, 1));
        order = 1;
    }
    int last = 0;
    int first_fresh = (k % 2 == 1) ? 2 : 1;
    for (ColorId c = static_cast<ColorId>(first_fresh); c + 1 <= k; c += 2) {
        r.steps.push_back(pentagon_step(c, c + 1));
        int pent = static_cast<int>(r.steps.size()) - 1;
        r.steps.push_back(WitnessRecipe::SubstituteStep{pent, {last, last, last, last, last}});
        last = static_cast<int>(r.steps.size()) - 1;
        order *= 5;
    }
    r.claimed_order = order;
    r.claimed_colors = k;
    return r;
}

WitnessRecipe witness_f2n_recipe(int k, int n, const FixtureStore& fixtures,
                                 bool search_bases) {
    if (k < 1) throw Error("f2n witness needs k >= 1");
    if (n < 3) throw Error("f2n witness needs n >= 3");
    WitnessRecipe r;
    r.target = "f2n:" + std::to_string(n);
    r.claimed_colors = k;

    if (k == 1) {
        r.steps.push_back(mono_clique(n + 1, 1));
        r.claimed_order = n + 1;
        return r;
    }

    int eps = (n % 2 == 0) ? 1 : 0;
    int r2 = 2 * n - eps;
    auto f2n_base = [&] {
        std::string fixture = "f2n" + std::to_string(n) + "_base_k" + std::to_string(r2 - 1);
        return two_color_base(fixtures, fixture, r2 - 1, {},
                              {catalog_graph(CatalogId::f2n(n))}, search_bases);
    };

    if (k == 2) {
        if (n <= 5) {
            r.steps.push_back(f2n_base());
        } else {
            r.steps.push_back(
                WitnessRecipe::BaseStep{witness_star(n), "circulant:star" + std::to_string(n)});
        }
        r.claimed_order = r2 - 1;
        return r;
    }

    int last = 0;
    int order = 0;
    if (n <= 4) {
        r.steps.push_back(f2n_base());
        order = r2 - 1;
    } else {
        // pentagon on colors 2,3 blown up with color-1 cliques; one part is
        // larger when n is even
        r.steps.push_back(pentagon_step(2, 3));
        std::vector<int> parts;
        if (n % 2 == 0) {
            r.steps.push_back(mono_clique(n / 2, 1));
            r.steps.push_back(mono_clique(n / 2 - 1, 1));
            parts = {1, 2, 2, 2, 2};
            order = n / 2 + 4 * (n / 2 - 1);
        } else {
            r.steps.push_back(mono_clique((n - 1) / 2, 1));
            parts = {1, 1, 1, 1, 1};
            order = 5 * (n - 1) / 2;
        }
        r.steps.push_back(WitnessRecipe::SubstituteStep{0, parts});
        last = static_cast<int>(r.steps.size()) - 1;
    }
    for (ColorId c = static_cast<ColorId>(n <= 4 ? 3 : 4); c <= k; ++c) {
        r.steps.push_back(WitnessRecipe::ConeStep{last, c});
        last = static_cast<int>(r.steps.size()) - 1;
        ++order;
    }
    if (n == 5) {
        r.steps.push_back(WitnessRecipe::ConeStep{last, 1});
        ++order;
    }
    r.claimed_order = order;
    return r;
}

ColoredCompleteGraph witness_f9_f10(int k, const FixtureStore& fixtures) {
    return witness_f9_f10_recipe(k, fixtures).evaluate();
}
ColoredCompleteGraph witness_f12_f13(int k, const FixtureStore& fixtures) {
    return witness_f12_f13_recipe(k, fixtures).evaluate();
}
ColoredCompleteGraph witness_f2n(int k, int n, const FixtureStore& fixtures) {
    return witness_f2n_recipe(k, n, fixtures).evaluate();
}
ColoredCompleteGraph witness_k3(int k) {
    return witness_k3_recipe(k).evaluate();
}

}  // namespace grlab
