#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace grlab {

// Maximum pattern order, sized for the large end of the f2n series.
// Containment and matching stay desk-scale (the largest containment the
// catalog needs is the 7-vertex complete tripartite 1|3|3).
inline constexpr int kMaxPatternOrder = 64;

// A small uncolored simple graph pattern, the H in "monochromatic copy of H".
// Vertices are 0..order-1; edges are stored sorted with u < v.
struct TargetGraph {
    int order = 0;
    std::vector<std::pair<int, int>> edges;
    std::string name;
    std::array<std::uint64_t, kMaxPatternOrder> adj{};  // per-vertex neighbor mask

    static TargetGraph from_edges(int order, std::vector<std::pair<int, int>> edges,
                                  std::string name = "");

    int edge_count() const { return static_cast<int>(edges.size()); }
    bool has_edge(int u, int v) const { return (adj[u] >> v) & 1; }
    int degree(int v) const;
    bool connected() const;
    std::vector<int> degree_sequence() const;  // sorted descending

    friend bool operator==(const TargetGraph& a, const TargetGraph& b) {
        return a.order == b.order && a.edges == b.edges;
    }
};

// true iff some injective vertex map carries every edge of h1 to an edge of h2
bool is_subgraph(const TargetGraph& h1, const TargetGraph& h2);

bool is_isomorphic(const TargetGraph& h1, const TargetGraph& h2);

}  // namespace grlab
