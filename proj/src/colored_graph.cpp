#include "grlab/colored_graph.hpp"

#include <algorithm>

namespace grlab {

ColoredCompleteGraph::ColoredCompleteGraph(int n, int k, std::vector<ColorId> colors)
    : n_(n), k_(k), colors_(std::move(colors)) {
    adj_.assign(static_cast<std::size_t>(k_) * n_, Bitset(n_));
    Bitset seen(k_ + 1);
    for (int u = 0; u < n_; ++u) {
        for (int v = u + 1; v < n_; ++v) {
            ColorId c = colors_[pair_index(u, v)];
            adj_[(c - 1) * n_ + u].set(v);
            adj_[(c - 1) * n_ + v].set(u);
            seen.set(c);
        }
    }
    seen.for_each([&](int c) { used_.push_back(static_cast<ColorId>(c)); });
}

GraphBuilder::GraphBuilder(int n, int k) : n_(n), k_(k) {
    if (n < 1) throw Error("graph order must be >= 1");
    if (k < 1) throw Error("color count must be >= 1");
    colors_.assign(static_cast<std::size_t>(n) * (n - 1) / 2, 0);
}

int GraphBuilder::check_pair(int u, int v) const {
    if (u == v) throw Error("self-pair cannot be colored");
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw Error("vertex out of range");
    if (u > v) std::swap(u, v);
    return u * (2 * n_ - u - 1) / 2 + (v - u - 1);
}

void GraphBuilder::set_color(int u, int v, ColorId c) {
    int idx = check_pair(u, v);
    if (c < 1 || c > k_)
        throw Error("color " + std::to_string(c) + " out of range 1.." + std::to_string(k_));
    colors_[idx] = c;
}

ColorId GraphBuilder::color(int u, int v) const {
    return colors_[check_pair(u, v)];
}

void GraphBuilder::fill(ColorId c) {
    if (c < 1 || c > k_) throw Error("color out of range");
    std::fill(colors_.begin(), colors_.end(), c);
}

ColoredCompleteGraph GraphBuilder::build() const {
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (colors_[u * (2 * n_ - u - 1) / 2 + (v - u - 1)] == 0)
                throw Error("pair {" + std::to_string(u) + "," + std::to_string(v) +
                            "} has no color");
    return ColoredCompleteGraph(n_, k_, colors_);
}

}  // namespace grlab
