#pragma once

#include <array>
#include <optional>
#include <vector>

#include "grlab/colored_graph.hpp"
#include "grlab/target_graph.hpp"

namespace grlab {

// A witnessed monochromatic copy: pattern vertex i sits at host vertex
// image[i], and every pattern edge carries `color` in the host.
struct Embedding {
    TargetGraph pattern;
    std::vector<int> image;
    ColorId color = 0;
};

struct RainbowTriangle {
    int u = 0, v = 0, w = 0;
};

// lexicographically first triple (u<v<w) whose three edges have pairwise
// distinct colors; absent iff g is a Gallai coloring
std::optional<RainbowTriangle> find_rainbow_triangle(const ColoredCompleteGraph& g);

// first monochromatic copy of h in the given color class (all classes in
// ascending order when color is absent)
std::optional<Embedding> find_mono_copy(const ColoredCompleteGraph& g, const TargetGraph& h,
                                        std::optional<ColorId> color = std::nullopt);

bool validate_embedding(const ColoredCompleteGraph& g, const Embedding& e);

// Precomputed matching order for one pattern: vertices arranged so each one
// (after the first of its component) has a previously-placed neighbor.
// Shared by the general detector and the search engine's anchored checks.
struct PatternPlan {
    TargetGraph pattern;
    std::array<int, kMaxPatternOrder> order{};        // plan position -> pattern vertex
    std::array<std::uint64_t, kMaxPatternOrder> parents{};  // mask over plan positions
    static PatternPlan build(const TargetGraph& h);
};

}  // namespace grlab
