#pragma once

#include <string>
#include <variant>
#include <vector>

#include "grlab/colored_graph.hpp"
#include "grlab/fixtures.hpp"

namespace grlab {

// the 2-coloring of K5 whose two color classes are complementary 5-cycles;
// contains no monochromatic triangle
ColoredCompleteGraph pentagon_base(ColorId c1, ColorId c2);

// one new vertex joined to all of g in color c
ColoredCompleteGraph cone(const ColoredCompleteGraph& g, ColorId c);

// circulant 2-coloring of K_{2n-1-eps} (eps = 1 iff n even) in which both
// color classes have maximum degree n-1, so neither contains a K_{1,n}
ColoredCompleteGraph witness_star(int n);

// A lower-bound construction captured as data: a step list that evaluates
// bottom-up to a coloring of claimed order and color count.
struct WitnessRecipe {
    struct BaseStep {
        ColoredCompleteGraph graph;
        std::string label;
    };
    struct SubstituteStep {
        int base = 0;
        std::vector<int> parts;
    };
    struct ConeStep {
        int src = 0;
        ColorId color = 0;
    };
    using Step = std::variant<BaseStep, SubstituteStep, ConeStep>;

    std::vector<Step> steps;
    std::string target;
    int claimed_order = 0;
    int claimed_colors = 0;

    // runs the steps; throws if the result misses the claims
    ColoredCompleteGraph evaluate() const;
    std::string trace() const;
};

// Five-fold pentagon-substitution towers. Odd k grows from a monochromatic
// K4; even k grows from the cached 2-colored base (K8 for the f9/f10 slot,
// K9 for f12/f13). Each doubling step substitutes five copies into a
// fresh-colored pentagon. A missing base is an error unless search_bases
// allows regenerating it with a bounded search against the accepted
// presets.
WitnessRecipe witness_f9_f10_recipe(int k, const FixtureStore& fixtures,
                                    bool search_bases = false);
WitnessRecipe witness_f12_f13_recipe(int k, const FixtureStore& fixtures,
                                     bool search_bases = false);

// k = 1 is a monochromatic K_{n+1}; k = 2 uses the cached base for
// n in {3,4,5} and the circulant star witness beyond; k >= 3 follows the
// three-regime construction (base-plus-cones for n in {3,4}; pentagon of
// monochromatic cliques plus cones for n >= 5, with the extra color-1 cone
// at n = 5).
WitnessRecipe witness_f2n_recipe(int k, int n, const FixtureStore& fixtures,
                                 bool search_bases = false);

// pentagon tower over K1 (k even) or a monochromatic K2 (k odd)
WitnessRecipe witness_k3_recipe(int k);

ColoredCompleteGraph witness_f9_f10(int k, const FixtureStore& fixtures);
ColoredCompleteGraph witness_f12_f13(int k, const FixtureStore& fixtures);
ColoredCompleteGraph witness_f2n(int k, int n, const FixtureStore& fixtures);
ColoredCompleteGraph witness_k3(int k);

}  // namespace grlab
