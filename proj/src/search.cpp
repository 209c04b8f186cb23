#include "grlab/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include "grlab/detect.hpp"

namespace grlab {

namespace {

constexpr int kMaxSearchOrder = 64;

void validate_forbid(const Forbid& f) {
    if (!f.rainbow_k3 && f.mono.empty()) throw Error("forbid set is empty");
    for (const auto& h : f.mono)
        if (h.order < 2 || h.edges.empty()) throw Error("mono pattern needs an edge");
}

// one anchored placement order per pattern edge orientation
struct AnchoredPlan {
    std::array<int, kMaxPatternOrder> vertex{};    // slot -> pattern vertex (slot0/1 = anchor)
    std::array<std::uint64_t, kMaxPatternOrder> parents{};  // slot -> mask of earlier slots
    std::array<int, kMaxPatternOrder> degree{};    // pattern degree per slot
};

struct CompiledPattern {
    int order = 0;
    int edge_count = 0;
    std::vector<AnchoredPlan> plans;

    static CompiledPattern build(const TargetGraph& h) {
        CompiledPattern cp;
        cp.order = h.order;
        cp.edge_count = h.edge_count();
        for (auto [p, q] : h.edges) {
            cp.plans.push_back(make_plan(h, p, q));
            cp.plans.push_back(make_plan(h, q, p));
        }
        return cp;
    }

    static AnchoredPlan make_plan(const TargetGraph& h, int p, int q) {
        AnchoredPlan plan;
        plan.vertex[0] = p;
        plan.vertex[1] = q;
        std::uint64_t placed = (std::uint64_t(1) << p) | (std::uint64_t(1) << q);
        std::array<int, kMaxPatternOrder> slot_of{};
        slot_of[p] = 0;
        slot_of[q] = 1;
        for (int slot = 2; slot < h.order; ++slot) {
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
            plan.vertex[slot] = best;
            slot_of[best] = slot;
            placed |= std::uint64_t(1) << best;
        }
        for (int slot = 0; slot < h.order; ++slot) {
            int v = plan.vertex[slot];
            plan.degree[slot] = h.degree(v);
            std::uint64_t parents = 0;
            for (int s = 0; s < slot; ++s)
                if (h.has_edge(plan.vertex[s], v)) parents |= std::uint64_t(1) << s;
            plan.parents[slot] = parents;
        }
        return plan;
    }
};

enum class Step { Continue, FoundIt, BudgetOut };

struct Engine {
    int n = 0;
    int k = 0;
    const Forbid& forbid;
    bool vertex_symmetry = false;
    std::uint64_t budget = 0;

    int m = 0;                                  // edge count
    std::vector<std::pair<int, int>> edges;     // depth -> (u,v), u < v
    std::vector<int> row_complete_vertex;       // depth -> v when (u,v) closes row v, else -1
    std::vector<std::vector<int>> pair_idx;     // (u,v) -> depth
    std::vector<ColorId> assign;                // depth -> color (0 unassigned)
    std::vector<std::uint64_t> adj;             // (c-1)*n + v -> neighbor mask in color c
    std::vector<int> color_edges;               // edges so far per color
    int used_colors = 0;
    std::vector<CompiledPattern> patterns;

    std::uint64_t nodes = 0;
    int max_depth = 0;
    std::vector<ColorId> found;                 // complete assignment on success

    Engine(int n_, int k_, const Forbid& f, bool vsym, std::uint64_t budget_)
        : n(n_), k(k_), forbid(f), vertex_symmetry(vsym), budget(budget_) {
        if (n < 1 || n > kMaxSearchOrder)
            throw Error("search order must be in 1.." + std::to_string(kMaxSearchOrder));
        if (k < 1 || k > 32) throw Error("search color count must be in 1..32");
        m = n * (n - 1) / 2;
        pair_idx.assign(n, std::vector<int>(n, -1));
        for (int v = 1; v < n; ++v)
            for (int u = 0; u < v; ++u) {
                pair_idx[u][v] = pair_idx[v][u] = static_cast<int>(edges.size());
                edges.emplace_back(u, v);
            }
        row_complete_vertex.assign(m, -1);
        for (int d = 0; d < m; ++d)
            if (edges[d].first == edges[d].second - 1) row_complete_vertex[d] = edges[d].second;
        assign.assign(m, 0);
        adj.assign(static_cast<std::size_t>(k) * n, 0);
        color_edges.assign(k + 1, 0);
        for (const auto& h : forbid.mono) patterns.push_back(CompiledPattern::build(h));
    }

    std::uint64_t& adj_ref(ColorId c, int v) { return adj[(c - 1) * n + v]; }

    bool makes_rainbow(int u, int v, ColorId c) const {
        for (int w = 0; w < u; ++w) {
            ColorId a = assign[pair_idx[w][u]];
            ColorId b = assign[pair_idx[w][v]];
            if (a != c && b != c && a != b) return true;
        }
        return false;
    }

    // does the color-c class contain the pattern using edge (u,v)?
    bool mono_through_edge(const CompiledPattern& cp, ColorId c, int u, int v) {
        const std::uint64_t* madj = &adj[(c - 1) * n];
        for (const auto& plan : cp.plans) {
            if (std::popcount(madj[u]) < plan.degree[0]) continue;
            if (std::popcount(madj[v]) < plan.degree[1]) continue;
            std::array<int, kMaxPatternOrder> image{};
            image[0] = u;
            image[1] = v;
            std::uint64_t used = (std::uint64_t(1) << u) | (std::uint64_t(1) << v);
            if (extend(cp, plan, madj, image, used, 2)) return true;
        }
        return false;
    }

    bool extend(const CompiledPattern& cp, const AnchoredPlan& plan,
                const std::uint64_t* madj, std::array<int, kMaxPatternOrder>& image,
                std::uint64_t used, int slot) {
        if (slot == cp.order) return true;
        std::uint64_t parents = plan.parents[slot];
        std::uint64_t cand = ~used;
        if (n < 64) cand &= (std::uint64_t(1) << n) - 1;
        while (parents) {
            cand &= madj[image[std::countr_zero(parents)]];
            parents &= parents - 1;
        }
        int need = plan.degree[slot];
        while (cand) {
            int w = std::countr_zero(cand);
            cand &= cand - 1;
            if (std::popcount(madj[w]) < need) continue;
            image[slot] = w;
            if (extend(cp, plan, madj, image, used | (std::uint64_t(1) << w), slot + 1))
                return true;
        }
        return false;
    }

    bool hits_mono(ColorId c, int u, int v) {
        for (const auto& cp : patterns) {
            if (color_edges[c] < cp.edge_count) continue;
            if (cp.order > n) continue;
            if (mono_through_edge(cp, c, u, v)) return true;
        }
        return false;
    }

    // prefix word is not lex-minimal: some transposition of the completed
    // vertices, followed by first-occurrence recoloring, yields a smaller
    // word
    bool symmetry_prunable(int depth) {
        int V = row_complete_vertex[depth];
        for (int i = 0; i < V; ++i)
            for (int j = i + 1; j <= V; ++j) {
                std::array<ColorId, 33> relabel{};
                ColorId next_color = 0;
                bool smaller = false;
                for (int t = 0; t <= depth; ++t) {
                    auto [a, b] = edges[t];
                    int pa = (a == i) ? j : (a == j) ? i : a;
                    int pb = (b == i) ? j : (b == j) ? i : b;
                    ColorId raw = assign[pair_idx[pa][pb]];
                    if (relabel[raw] == 0) relabel[raw] = ++next_color;
                    ColorId val = relabel[raw];
                    if (val != assign[t]) {
                        smaller = val < assign[t];
                        break;
                    }
                }
                if (smaller) return true;
            }
        return false;
    }

    Step dfs(int depth) {
        if (depth == m) {
            found = assign;
            return Step::FoundIt;
        }
        auto [u, v] = edges[depth];
        if (depth > max_depth) max_depth = depth;
        int cmax = std::min(k, used_colors + 1);
        for (ColorId c = 1; c <= cmax; ++c) {
            if (++nodes > budget) return Step::BudgetOut;
            if (forbid.rainbow_k3 && makes_rainbow(u, v, c)) continue;

            adj_ref(c, u) |= std::uint64_t(1) << v;
            adj_ref(c, v) |= std::uint64_t(1) << u;
            ++color_edges[c];
            assign[depth] = c;
            int prev_used = used_colors;
            used_colors = std::max<int>(used_colors, c);

            bool pruned = hits_mono(c, u, v);
            if (!pruned && vertex_symmetry && row_complete_vertex[depth] >= 0)
                pruned = symmetry_prunable(depth);

            if (!pruned) {
                Step r = dfs(depth + 1);
                if (r != Step::Continue) return r;
            }

            adj_ref(c, u) &= ~(std::uint64_t(1) << v);
            adj_ref(c, v) &= ~(std::uint64_t(1) << u);
            --color_edges[c];
            assign[depth] = 0;
            used_colors = prev_used;
        }
        return Step::Continue;
    }

    // enumerate canonical surviving prefixes on the first `split` vertices
    Step collect_prefixes(int depth, int prefix_len, std::vector<std::vector<ColorId>>& out) {
        if (depth == prefix_len) {
            out.emplace_back(assign.begin(), assign.begin() + prefix_len);
            return Step::Continue;
        }
        auto [u, v] = edges[depth];
        if (depth > max_depth) max_depth = depth;
        int cmax = std::min(k, used_colors + 1);
        for (ColorId c = 1; c <= cmax; ++c) {
            if (++nodes > budget) return Step::BudgetOut;
            if (forbid.rainbow_k3 && makes_rainbow(u, v, c)) continue;
            adj_ref(c, u) |= std::uint64_t(1) << v;
            adj_ref(c, v) |= std::uint64_t(1) << u;
            ++color_edges[c];
            assign[depth] = c;
            int prev_used = used_colors;
            used_colors = std::max<int>(used_colors, c);
            bool pruned = hits_mono(c, u, v);
            if (!pruned && vertex_symmetry && row_complete_vertex[depth] >= 0)
                pruned = symmetry_prunable(depth);
            if (!pruned) {
                Step r = collect_prefixes(depth + 1, prefix_len, out);
                if (r != Step::Continue) return r;
            }
            adj_ref(c, u) &= ~(std::uint64_t(1) << v);
            adj_ref(c, v) &= ~(std::uint64_t(1) << u);
            --color_edges[c];
            assign[depth] = 0;
            used_colors = prev_used;
        }
        return Step::Continue;
    }

    void load_prefix(const std::vector<ColorId>& prefix) {
        for (std::size_t d = 0; d < prefix.size(); ++d) {
            auto [u, v] = edges[d];
            ColorId c = prefix[d];
            assign[d] = c;
            adj_ref(c, u) |= std::uint64_t(1) << v;
            adj_ref(c, v) |= std::uint64_t(1) << u;
            ++color_edges[c];
            used_colors = std::max<int>(used_colors, c);
        }
    }
};

ColoredCompleteGraph graph_from_assignment(int n, int k, const Engine& eng,
                                           const std::vector<ColorId>& assign) {
    GraphBuilder b(n, k);
    for (int d = 0; d < eng.m; ++d)
        b.set_color(eng.edges[d].first, eng.edges[d].second, assign[d]);
    return b.build();
}

void reverify_witness(const ColoredCompleteGraph& g, const Forbid& f) {
    if (f.rainbow_k3 && find_rainbow_triangle(g))
        throw Error("internal: found coloring contains a rainbow triangle");
    for (const auto& h : f.mono)
        if (h.order <= g.order() && find_mono_copy(g, h))
            throw Error("internal: found coloring contains a forbidden pattern");
}

SearchOutcome run_single(int n, int k, const Forbid& f, bool vsym, std::uint64_t budget) {
    Engine eng(n, k, f, vsym, budget);
    SearchOutcome out;
    Step r = eng.dfs(0);
    out.nodes = eng.nodes;
    out.max_depth = eng.max_depth;
    if (r == Step::FoundIt) {
        out.verdict = Verdict::Found;
        out.witness = graph_from_assignment(n, k, eng, eng.found);
        reverify_witness(*out.witness, f);
    } else if (r == Step::BudgetOut) {
        out.verdict = Verdict::Budget;
    } else {
        out.verdict = Verdict::Exhausted;
    }
    return out;
}

SearchOutcome run_pool(int n, int k, const Forbid& f, bool vsym, const SearchConfig& cfg) {
    int split = cfg.split_vertices > 0 ? cfg.split_vertices : std::min(n, 5);
    split = std::min(split, n);
    int prefix_len = split * (split - 1) / 2;

    Engine root(n, k, f, vsym, cfg.node_budget);
    std::vector<std::vector<ColorId>> prefixes;
    Step pr = root.collect_prefixes(0, prefix_len, prefixes);
    SearchOutcome out;
    if (pr == Step::BudgetOut) {
        out.verdict = Verdict::Budget;
        out.nodes = root.nodes;
        out.max_depth = root.max_depth;
        return out;
    }
    if (prefixes.empty()) {
        out.verdict = Verdict::Exhausted;
        out.nodes = root.nodes;
        out.max_depth = root.max_depth;
        return out;
    }

    struct Slot {
        Step step = Step::Continue;
        bool ran = false;
        std::uint64_t nodes = 0;
        int max_depth = 0;
        std::vector<ColorId> found;
    };
    std::vector<Slot> slots(prefixes.size());
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> first_found{prefixes.size()};
    std::atomic<std::size_t> first_blown{prefixes.size()};

    auto worker = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= prefixes.size()) return;
            if (first_found.load() < i || first_blown.load() < i) continue;
            Engine eng(n, k, f, vsym, cfg.node_budget);
            eng.load_prefix(prefixes[i]);
            Step r = eng.dfs(prefix_len);
            Slot& s = slots[i];
            s.step = r;
            s.ran = true;
            s.nodes = eng.nodes;
            s.max_depth = eng.max_depth;
            if (r == Step::FoundIt) {
                s.found = eng.found;
                std::size_t cur = first_found.load();
                while (i < cur && !first_found.compare_exchange_weak(cur, i)) {
                }
            } else if (r == Step::BudgetOut) {
                std::size_t cur = first_blown.load();
                while (i < cur && !first_blown.compare_exchange_weak(cur, i)) {
                }
            }
        }
    };
    std::vector<std::thread> pool;
    int nthreads = std::max(1, cfg.threads);
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    // deterministic order-walk: earlier subtrees decide first
    out.nodes = root.nodes;
    out.max_depth = root.max_depth;
    for (std::size_t i = 0; i < prefixes.size(); ++i) {
        const Slot& s = slots[i];
        // a slot is skipped only when an earlier one already decided, and
        // that earlier slot terminates this walk first
        if (!s.ran) throw Error("internal: subtree skipped without an earlier decision");
        out.nodes += s.nodes;
        out.subtree_nodes.push_back(s.nodes);
        out.max_depth = std::max(out.max_depth, s.max_depth);
        if (s.step == Step::BudgetOut || out.nodes > cfg.node_budget) {
            out.verdict = Verdict::Budget;
            return out;
        }
        if (s.step == Step::FoundIt) {
            out.verdict = Verdict::Found;
            Engine eng(n, k, f, vsym, cfg.node_budget);
            out.witness = graph_from_assignment(n, k, eng, s.found);
            reverify_witness(*out.witness, f);
            return out;
        }
    }
    out.verdict = Verdict::Exhausted;
    return out;
}

SearchOutcome run_search(int n, int k, const Forbid& f, bool default_vsym, SearchConfig cfg) {
    validate_forbid(f);
    bool vsym = cfg.vertex_symmetry.value_or(default_vsym);
    auto start = std::chrono::steady_clock::now();
    SearchOutcome out = (cfg.threads > 1) ? run_pool(n, k, f, vsym, cfg)
                                          : run_single(n, k, f, vsym, cfg.node_budget);
    out.elapsed_seconds = std::chrono::duration<double>(
                              std::chrono::steady_clock::now() - start)
                              .count();
    out.n = n;
    out.k = k;
    out.node_budget = cfg.node_budget;
    out.threads = std::max(1, cfg.threads);
    out.vertex_symmetry = vsym;
    return out;
}

}  // namespace

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Found: return "found";
        case Verdict::Exhausted: return "exhausted";
        case Verdict::Budget: return "budget";
    }
    return "?";
}

std::string SearchOutcome::certificate(const Forbid& f) const {
    std::string s;
    s += "search n=" + std::to_string(n) + " colors=" + std::to_string(k);
    if (f.rainbow_k3) s += " forbid-rainbow-k3";
    for (const auto& h : f.mono) s += " forbid-mono=" + (h.name.empty() ? "?" : h.name);
    s += "\n";
    s += "config budget=" + std::to_string(node_budget) +
         " threads=" + std::to_string(threads) +
         " vertex-symmetry=" + (vertex_symmetry ? "on" : "off") + "\n";
    s += "verdict " + to_string(verdict) + "\n";
    s += "nodes " + std::to_string(nodes) + "\n";
    s += "max-depth " + std::to_string(max_depth) + "\n";
    if (!subtree_nodes.empty()) {
        s += "subtrees " + std::to_string(subtree_nodes.size()) + "\n";
        for (std::size_t i = 0; i < subtree_nodes.size(); ++i)
            s += "subtree " + std::to_string(i) + " nodes " +
                 std::to_string(subtree_nodes[i]) + "\n";
    }
    return s;
}

SearchOutcome find_free_coloring(int n, int k, const Forbid& f, SearchConfig cfg) {
    return run_search(n, k, f, /*default_vsym=*/false, cfg);
}

SearchOutcome prove_unavoidable(int n, int k, const Forbid& f, SearchConfig cfg) {
    return run_search(n, k, f, /*default_vsym=*/true, cfg);
}

namespace {

GrValue scan_orders(const TargetGraph& h, int k, bool rainbow, int n_max,
                    const SearchConfig& cfg) {
    Forbid f;
    f.rainbow_k3 = rainbow;
    f.mono.push_back(h);
    std::string family = h.name.empty() ? "pattern" : h.name;
    if (n_max < h.order) throw Error("n_max below pattern order");

    std::int64_t lo = h.order;  // K_{order-1} trivially avoids the pattern
    for (int n = h.order; n <= n_max; ++n) {
        SearchConfig per = cfg;
        per.vertex_symmetry = cfg.vertex_symmetry.value_or(true);
        SearchOutcome out = run_search(n, k, f, true, per);
        if (out.verdict == Verdict::Found) {
            lo = n + 1;
        } else if (out.verdict == Verdict::Exhausted) {
            return GrValue::exact_value(n, k, family);
        } else {
            return GrValue::range(lo, GrValue::kOpenUpper, k, family,
                                  "budget exhausted at n=" + std::to_string(n));
        }
    }
    return GrValue::range(lo, GrValue::kOpenUpper, k, family,
                          "scan stopped at n_max=" + std::to_string(n_max));
}

}  // namespace

GrValue compute_r2(const TargetGraph& h, int n_max, const SearchConfig& cfg) {
    return scan_orders(h, 2, false, n_max, cfg);
}

GrValue compute_gr(const TargetGraph& h, int k, int n_max, const SearchConfig& cfg) {
    return scan_orders(h, k, true, n_max, cfg);
}

}  // namespace grlab
