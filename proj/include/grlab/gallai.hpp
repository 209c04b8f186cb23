#pragma once

#include <optional>
#include <string>
#include <vector>

#include "grlab/colored_graph.hpp"
#include "grlab/detect.hpp"

namespace grlab {

// A vertex partition where edges between any two parts carry one color and
// at most two colors appear between parts overall. Parts are ordered by
// decreasing size, ties by smallest member.
struct GallaiPartition {
    std::vector<std::vector<int>> parts;
    std::vector<ColorId> between_colors;  // sorted, size <= 2

    int part_count() const { return static_cast<int>(parts.size()); }
    // color on the edges between parts i and j
    ColorId pair_color(int i, int j) const;
    // number of parts with at least three vertices
    int large_part_count() const;

    std::string to_json(const ColoredCompleteGraph& g) const;

    // pair_color storage, row-major over i<j
    std::vector<ColorId> pair_colors;
};

struct ValidationReport {
    bool holds = false;
    std::string detail;  // pinpoints the violating pair/color when !holds
};

class RainbowTriangleError : public Error {
public:
    RainbowTriangleError(const RainbowTriangle& t)
        : Error("rainbow triangle on vertices (" + std::to_string(t.u) + "," +
                std::to_string(t.v) + "," + std::to_string(t.w) + ")"),
          triangle_(t) {}
    const RainbowTriangle& triangle() const { return triangle_; }

private:
    RainbowTriangle triangle_;
};

// Decomposition by color-pair scan: for each unordered pair {a,b} of used
// colors, the graph of edges colored outside {a,b} is tested for
// disconnection; its components are the parts. Rainbow-triangle-freeness
// makes every component pair monochromatic between, so the first
// disconnected scan yields a valid partition. With at most two colors in
// use the all-singletons partition is returned directly.
GallaiPartition find_gallai_partition(const ColoredCompleteGraph& g);

// fewest parts over the same color-pair family (degenerate single-color
// members included when at most two colors are in use); family-minimal,
// not proven globally minimal
GallaiPartition minimize_parts(const ColoredCompleteGraph& g);

ValidationReport verify_partition(const ColoredCompleteGraph& g, const GallaiPartition& p);

// m-vertex graph with edge (i,j) colored pair_color(i,j)
ColoredCompleteGraph reduce(const ColoredCompleteGraph& g, const GallaiPartition& p);

// Blow-up: vertex i of base is replaced by parts[i]; edges within copy i
// keep parts[i]'s colors, edges between copies i and j take base's color
// of (i,j). Declared color count of the result is the maximum color used.
ColoredCompleteGraph substitute(const ColoredCompleteGraph& base,
                                const std::vector<ColoredCompleteGraph>& parts);

}  // namespace grlab
