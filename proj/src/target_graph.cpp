#include "grlab/target_graph.hpp"

#include <algorithm>

#include "grlab/colored_graph.hpp"

namespace grlab {

TargetGraph TargetGraph::from_edges(int order, std::vector<std::pair<int, int>> edges,
                                    std::string name) {
    if (order < 1 || order > kMaxPatternOrder)
        throw Error("pattern order must be in 1.." + std::to_string(kMaxPatternOrder));
    TargetGraph g;
    g.order = order;
    g.name = std::move(name);
    for (auto& [u, v] : edges) {
        if (u == v) throw Error("pattern has a loop");
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= order) throw Error("pattern edge out of range");
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw Error("pattern has a multi-edge");
    g.edges = std::move(edges);
    for (auto [u, v] : g.edges) {
        g.adj[u] |= std::uint64_t(1) << v;
        g.adj[v] |= std::uint64_t(1) << u;
    }
    return g;
}

int TargetGraph::degree(int v) const {
    return std::popcount(adj[v]);
}

bool TargetGraph::connected() const {
    if (order == 0) return false;
    std::uint64_t seen = 1;
    std::uint64_t frontier = 1;
    while (frontier) {
        std::uint64_t next = 0;
        for (int v = 0; v < order; ++v)
            if ((frontier >> v) & 1) next |= adj[v];
        frontier = next & ~seen;
        seen |= next;
    }
    return std::popcount(seen) == order;
}

std::vector<int> TargetGraph::degree_sequence() const {
    std::vector<int> d(order);
    for (int v = 0; v < order; ++v) d[v] = degree(v);
    std::sort(d.rbegin(), d.rend());
    return d;
}

namespace {

// injective monomorphism h1 -> h2 (isomorphism when exact_edges)
bool embed(const TargetGraph& h1, const TargetGraph& h2, int next,
           std::array<int, kMaxPatternOrder>& image, std::uint64_t used) {
    if (next == h1.order) return true;
    for (int w = 0; w < h2.order; ++w) {
        if ((used >> w) & 1) continue;
        bool ok = h2.degree(w) >= h1.degree(next);
        for (int p = 0; ok && p < next; ++p)
            if (h1.has_edge(p, next) && !h2.has_edge(image[p], w)) ok = false;
        if (!ok) continue;
        image[next] = w;
        if (embed(h1, h2, next + 1, image, used | (std::uint64_t(1) << w))) return true;
    }
    return false;
}

}  // namespace

bool is_subgraph(const TargetGraph& h1, const TargetGraph& h2) {
    if (h1.order > h2.order || h1.edge_count() > h2.edge_count()) return false;
    std::array<int, kMaxPatternOrder> image{};
    return embed(h1, h2, 0, image, 0);
}

bool is_isomorphic(const TargetGraph& h1, const TargetGraph& h2) {
    if (h1.order != h2.order || h1.edge_count() != h2.edge_count()) return false;
    if (h1.degree_sequence() != h2.degree_sequence()) return false;
    // equal edge counts make any monomorphism an isomorphism
    return is_subgraph(h1, h2);
}

}  // namespace grlab
