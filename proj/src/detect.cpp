#include "grlab/detect.hpp"

#include <algorithm>

namespace grlab {

std::optional<RainbowTriangle> find_rainbow_triangle(const ColoredCompleteGraph& g) {
    int n = g.order();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            ColorId cuv = g.color(u, v);
            for (int w = v + 1; w < n; ++w) {
                ColorId cuw = g.color(u, w);
                ColorId cvw = g.color(v, w);
                if (cuv != cuw && cuv != cvw && cuw != cvw)
                    return RainbowTriangle{u, v, w};
            }
        }
    return std::nullopt;
}

PatternPlan PatternPlan::build(const TargetGraph& h) {
    PatternPlan plan;
    plan.pattern = h;
    std::uint64_t placed = 0;
    std::array<int, kMaxPatternOrder> pos_of{};  // pattern vertex -> plan position
    for (int step = 0; step < h.order; ++step) {
        int best = -1, best_links = -1, best_deg = -1;
        for (int v = 0; v < h.order; ++v) {
            if ((placed >> v) & 1) continue;
            int links = std::popcount(h.adj[v] & placed);
            int deg = h.degree(v);
            if (links > best_links || (links == best_links && deg > best_deg)) {
                best = v;
                best_links = links;
                best_deg = deg;
            }
        }
        plan.order[step] = best;
        std::uint64_t parents = 0;
        for (int p = 0; p < step; ++p)
            if (h.has_edge(plan.order[p], best)) parents |= std::uint64_t(1) << p;
        plan.parents[step] = parents;
        pos_of[best] = step;
        placed |= std::uint64_t(1) << best;
    }
    return plan;
}

namespace {

struct Matcher {
    const ColoredCompleteGraph& g;
    const PatternPlan& plan;
    ColorId color;
    std::vector<int> image_by_pos;
    Bitset used;
    std::vector<int> color_degree;

    Matcher(const ColoredCompleteGraph& g_, const PatternPlan& plan_, ColorId c)
        : g(g_), plan(plan_), color(c), image_by_pos(plan_.pattern.order, -1),
          used(g_.order()), color_degree(g_.order()) {
        for (int v = 0; v < g.order(); ++v)
            color_degree[v] = g.adjacency(color, v).count();
    }

    bool place(int step) {
        if (step == plan.pattern.order) return true;
        int pat_deg = plan.pattern.degree(plan.order[step]);
        std::uint64_t parents = plan.parents[step];
        Bitset cand(g.order());
        if (parents) {
            int first = std::countr_zero(parents);
            cand = g.adjacency(color, image_by_pos[first]);
            std::uint64_t rest = parents & (parents - 1);
            while (rest) {
                cand &= g.adjacency(color, image_by_pos[std::countr_zero(rest)]);
                rest &= rest - 1;
            }
        } else {
            for (int v = 0; v < g.order(); ++v) cand.set(v);
        }
        cand -= used;
        for (int v = cand.next(); v >= 0; v = cand.next(v + 1)) {
            if (color_degree[v] < pat_deg) continue;
            image_by_pos[step] = v;
            used.set(v);
            if (place(step + 1)) return true;
            used.reset(v);
        }
        return false;
    }
};

}  // namespace

std::optional<Embedding> find_mono_copy(const ColoredCompleteGraph& g, const TargetGraph& h,
                                        std::optional<ColorId> color) {
    if (h.order > g.order()) throw Error("pattern larger than host");
    PatternPlan plan = PatternPlan::build(h);
    std::vector<ColorId> colors;
    if (color) {
        if (*color < 1 || *color > g.color_count()) throw Error("color out of range");
        colors.push_back(*color);
    } else {
        colors = g.colors_used();
    }
    for (ColorId c : colors) {
        // cheap rejection on class size
        int class_edges = 0;
        for (int v = 0; v < g.order(); ++v) class_edges += g.adjacency(c, v).count();
        if (class_edges / 2 < h.edge_count()) continue;
        Matcher m(g, plan, c);
        if (m.place(0)) {
            Embedding e;
            e.pattern = h;
            e.color = c;
            e.image.assign(h.order, -1);
            for (int step = 0; step < h.order; ++step)
                e.image[plan.order[step]] = m.image_by_pos[step];
            return e;
        }
    }
    return std::nullopt;
}

bool validate_embedding(const ColoredCompleteGraph& g, const Embedding& e) {
    if (static_cast<int>(e.image.size()) != e.pattern.order) return false;
    for (int v : e.image)
        if (v < 0 || v >= g.order()) return false;
    for (std::size_t i = 0; i < e.image.size(); ++i)
        for (std::size_t j = i + 1; j < e.image.size(); ++j)
            if (e.image[i] == e.image[j]) return false;
    for (auto [u, v] : e.pattern.edges)
        if (g.color(e.image[u], e.image[v]) != e.color) return false;
    return true;
}

}  // namespace grlab
