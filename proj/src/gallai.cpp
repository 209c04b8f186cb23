#include "grlab/gallai.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

namespace grlab {

ColorId GallaiPartition::pair_color(int i, int j) const {
    if (i > j) std::swap(i, j);
    int m = part_count();
    return pair_colors[i * (2 * m - i - 1) / 2 + (j - i - 1)];
}

int GallaiPartition::large_part_count() const {
    int r = 0;
    for (const auto& part : parts)
        if (part.size() >= 3) ++r;
    return r;
}

std::string GallaiPartition::to_json(const ColoredCompleteGraph&) const {
    nlohmann::json j;
    j["parts"] = parts;
    j["between_colors"] = between_colors;
    auto pc = nlohmann::json::array();
    for (int i = 0; i < part_count(); ++i)
        for (int k = i + 1; k < part_count(); ++k)
            pc.push_back({i, k, pair_color(i, k)});
    j["pair_colors"] = pc;
    return j.dump(2) + "\n";
}

namespace {

void sort_parts_canonically(std::vector<std::vector<int>>& parts) {
    for (auto& p : parts) std::sort(p.begin(), p.end());
    std::sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a[0] < b[0];
    });
}

// components of the graph on V(g) whose edges are those NOT colored a or b
std::vector<std::vector<int>> complement_pair_components(const ColoredCompleteGraph& g,
                                                         ColorId a, ColorId b) {
    int n = g.order();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        int id = static_cast<int>(out.size());
        out.push_back({});
        std::vector<int> stack = {s};
        comp[s] = id;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            out[id].push_back(v);
            for (ColorId c : g.colors_used()) {
                if (c == a || c == b) continue;
                g.adjacency(c, v).for_each([&](int w) {
                    if (comp[w] < 0) {
                        comp[w] = id;
                        stack.push_back(w);
                    }
                });
            }
        }
    }
    return out;
}

GallaiPartition assemble(const ColoredCompleteGraph& g,
                         std::vector<std::vector<int>> parts) {
    sort_parts_canonically(parts);
    GallaiPartition p;
    p.parts = std::move(parts);
    int m = p.part_count();
    p.pair_colors.assign(static_cast<std::size_t>(m) * (m - 1) / 2, 0);
    Bitset between(g.color_count() + 1);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            ColorId c = g.color(p.parts[i][0], p.parts[j][0]);
            p.pair_colors[i * (2 * m - i - 1) / 2 + (j - i - 1)] = c;
            between.set(c);
        }
    between.for_each([&](int c) { p.between_colors.push_back(static_cast<ColorId>(c)); });
    return p;
}

GallaiPartition singletons(const ColoredCompleteGraph& g) {
    std::vector<std::vector<int>> parts(g.order());
    for (int v = 0; v < g.order(); ++v) parts[v] = {v};
    return assemble(g, std::move(parts));
}

std::vector<std::pair<ColorId, ColorId>> scan_family(const ColoredCompleteGraph& g) {
    const auto& used = g.colors_used();
    std::vector<std::pair<ColorId, ColorId>> family;
    if (used.size() <= 2) {
        for (std::size_t i = 0; i < used.size(); ++i)
            for (std::size_t j = i; j < used.size(); ++j)
                family.emplace_back(used[i], used[j]);
    } else {
        for (std::size_t i = 0; i < used.size(); ++i)
            for (std::size_t j = i + 1; j < used.size(); ++j)
                family.emplace_back(used[i], used[j]);
    }
    return family;
}

void check_preconditions(const ColoredCompleteGraph& g) {
    if (g.order() < 2) throw Error("decomposition needs n >= 2");
    if (auto t = find_rainbow_triangle(g)) throw RainbowTriangleError(*t);
}

}  // namespace

GallaiPartition find_gallai_partition(const ColoredCompleteGraph& g) {
    check_preconditions(g);
    if (g.colors_used().size() <= 2) return singletons(g);
    for (auto [a, b] : scan_family(g)) {
        auto comps = complement_pair_components(g, a, b);
        if (comps.size() >= 2) return assemble(g, std::move(comps));
    }
    // unreachable on rainbow-triangle-free input: some Gallai partition
    // exists and its between-color pair disconnects the scan graph
    throw Error("no color pair disconnects; input is not a Gallai coloring");
}

GallaiPartition minimize_parts(const ColoredCompleteGraph& g) {
    check_preconditions(g);
    std::optional<GallaiPartition> best;
    for (auto [a, b] : scan_family(g)) {
        auto comps = complement_pair_components(g, a, b);
        if (comps.size() < 2) continue;
        if (!best || static_cast<int>(comps.size()) < best->part_count())
            best = assemble(g, std::move(comps));
    }
    if (g.colors_used().size() <= 2) {
        auto single = singletons(g);
        if (!best || single.part_count() < best->part_count()) best = std::move(single);
    }
    if (!best) throw Error("no color pair disconnects; input is not a Gallai coloring");
    return *best;
}

ValidationReport verify_partition(const ColoredCompleteGraph& g, const GallaiPartition& p) {
    int n = g.order();
    int m = p.part_count();
    if (m < 2) return {false, "m >= 2 violated (" + std::to_string(m) + " parts)"};

    std::vector<int> owner(n, -1);
    for (int i = 0; i < m; ++i) {
        if (p.parts[i].empty()) return {false, "part " + std::to_string(i) + " is empty"};
        for (int v : p.parts[i]) {
            if (v < 0 || v >= n)
                return {false, "vertex " + std::to_string(v) + " out of range"};
            if (owner[v] >= 0)
                return {false, "vertex " + std::to_string(v) + " appears in parts " +
                                   std::to_string(owner[v]) + " and " + std::to_string(i)};
            owner[v] = i;
        }
    }
    for (int v = 0; v < n; ++v)
        if (owner[v] < 0) return {false, "vertex " + std::to_string(v) + " uncovered"};

    for (int i = 0; i + 1 < m; ++i) {
        bool size_ok = p.parts[i].size() > p.parts[i + 1].size() ||
                       (p.parts[i].size() == p.parts[i + 1].size() &&
                        p.parts[i][0] < p.parts[i + 1][0]);
        if (!size_ok)
            return {false, "parts " + std::to_string(i) + "," + std::to_string(i + 1) +
                               " violate the decreasing-size ordering"};
    }

    if (p.between_colors.size() > 2)
        return {false, "more than two between-part colors declared"};
    if (p.pair_colors.size() != static_cast<std::size_t>(m) * (m - 1) / 2)
        return {false, "pair_colors has wrong arity"};

    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            ColorId expect = p.pair_color(i, j);
            if (std::find(p.between_colors.begin(), p.between_colors.end(), expect) ==
                p.between_colors.end())
                return {false, "pair (" + std::to_string(i) + "," + std::to_string(j) +
                                   ") color " + std::to_string(expect) +
                                   " missing from between_colors"};
            for (int u : p.parts[i])
                for (int v : p.parts[j])
                    if (g.color(u, v) != expect)
                        return {false, "edge {" + std::to_string(u) + "," +
                                           std::to_string(v) + "} colored " +
                                           std::to_string(g.color(u, v)) +
                                           ", expected pair color " + std::to_string(expect) +
                                           " between parts " + std::to_string(i) + "," +
                                           std::to_string(j)};
        }
    return {true, ""};
}

ColoredCompleteGraph reduce(const ColoredCompleteGraph& g, const GallaiPartition& p) {
    auto rep = verify_partition(g, p);
    if (!rep.holds) throw Error("invalid partition: " + rep.detail);
    int m = p.part_count();
    GraphBuilder b(m, g.color_count());
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) b.set_color(i, j, p.pair_color(i, j));
    return b.build();
}

ColoredCompleteGraph substitute(const ColoredCompleteGraph& base,
                                const std::vector<ColoredCompleteGraph>& parts) {
    if (parts.empty()) throw Error("substitute needs at least one part");
    if (static_cast<int>(parts.size()) != base.order())
        throw Error("substitute needs exactly one part per base vertex");

    int n = 0;
    std::vector<int> offset(parts.size());
    ColorId max_color = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        offset[i] = n;
        n += parts[i].order();
        if (parts[i].order() > 1) max_color = std::max(max_color, parts[i].colors_used().back());
    }
    if (base.order() > 1) max_color = std::max(max_color, base.colors_used().back());
    if (max_color == 0) max_color = 1;  // all parts are singletons and base is K1

    GraphBuilder b(n, max_color);
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (int u = 0; u < parts[i].order(); ++u)
            for (int v = u + 1; v < parts[i].order(); ++v)
                b.set_color(offset[i] + u, offset[i] + v, parts[i].color(u, v));
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = i + 1; j < parts.size(); ++j) {
            ColorId c = base.color(static_cast<int>(i), static_cast<int>(j));
            for (int u = 0; u < parts[i].order(); ++u)
                for (int v = 0; v < parts[j].order(); ++v)
                    b.set_color(offset[i] + u, offset[j] + v, c);
        }
    return b.build();
}

}  // namespace grlab
