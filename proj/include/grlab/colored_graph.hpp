#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "grlab/bitset.hpp"

namespace grlab {

// Colors are 1-based throughout; 0 marks an unassigned edge in builders.
using ColorId = std::uint16_t;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class GraphBuilder;

// An edge-coloring of a complete graph: every unordered pair {u,v} of the
// n vertices carries exactly one color in 1..k. Immutable once built;
// instances are safe to share across threads. Per-color adjacency bitsets
// are materialized at construction since every consumer (detectors,
// decomposition, search re-verification) is bitset-bound.
class ColoredCompleteGraph {
public:
    int order() const { return n_; }
    int color_count() const { return k_; }

    ColorId color(int u, int v) const {
        return colors_[pair_index(u, v)];
    }

    // adjacency of v inside the color-c class
    const Bitset& adjacency(ColorId c, int v) const {
        return adj_[(c - 1) * n_ + v];
    }

    const std::vector<ColorId>& colors_used() const { return used_; }

    // row-major upper triangle: (0,1),(0,2),...,(0,n-1),(1,2),...
    int pair_index(int u, int v) const {
        if (u > v) std::swap(u, v);
        return u * (2 * n_ - u - 1) / 2 + (v - u - 1);
    }

    const std::vector<ColorId>& upper_triangle() const { return colors_; }

    friend bool operator==(const ColoredCompleteGraph& a, const ColoredCompleteGraph& b) {
        return a.n_ == b.n_ && a.k_ == b.k_ && a.colors_ == b.colors_;
    }

private:
    friend class GraphBuilder;
    ColoredCompleteGraph(int n, int k, std::vector<ColorId> colors);

    int n_ = 0;
    int k_ = 0;
    std::vector<ColorId> colors_;  // upper triangle
    std::vector<Bitset> adj_;      // k_*n_ entries, color-major
    std::vector<ColorId> used_;    // sorted distinct colors
};

// Mutable staging value for ColoredCompleteGraph; single-owner, not shared.
class GraphBuilder {
public:
    GraphBuilder(int n, int k);

    int order() const { return n_; }
    int color_count() const { return k_; }

    void set_color(int u, int v, ColorId c);
    // 0 while unassigned
    ColorId color(int u, int v) const;
    void fill(ColorId c);

    // throws Error if any pair is still unassigned
    ColoredCompleteGraph build() const;

private:
    int check_pair(int u, int v) const;

    int n_;
    int k_;
    std::vector<ColorId> colors_;
};

}  // namespace grlab
