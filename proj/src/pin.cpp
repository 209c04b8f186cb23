#include "grlab/pin.hpp"

#include <algorithm>

#include "grlab/formulas.hpp"

namespace grlab {

TargetGraph fact_421_forcing() {
    return TargetGraph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {2, 3}},
                                   "forcing421");
}

TargetGraph fact_422_forcing() {
    return TargetGraph::from_edges(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}},
                                   "forcing422");
}

namespace {

bool hom_extend(const TargetGraph& h, const std::array<int, kMaxPatternOrder>& order,
                std::array<int, kMaxPatternOrder>& label, int step) {
    if (step == h.order) return true;
    int v = order[step];
    for (int l = 0; l < 5; ++l) {
        bool ok = true;
        for (int s = 0; s < step && ok; ++s) {
            int u = order[s];
            if (!h.has_edge(u, v)) continue;
            int d = (label[u] - l + 5) % 5;
            if (d != 1 && d != 4) ok = false;
        }
        if (!ok) continue;
        label[v] = l;
        if (hom_extend(h, order, label, step + 1)) return true;
    }
    return false;
}

}  // namespace

bool has_c5_homomorphism(const TargetGraph& h) {
    // place vertices in a connected-first order so labels are constrained
    // as soon as possible
    std::array<int, kMaxPatternOrder> order{};
    std::uint64_t placed = 0;
    for (int step = 0; step < h.order; ++step) {
        int best = -1, best_links = -1;
        for (int v = 0; v < h.order; ++v) {
            if ((placed >> v) & 1) continue;
            int links = std::popcount(h.adj[v] & placed);
            if (links > best_links) {
                best = v;
                best_links = links;
            }
        }
        order[step] = best;
        placed |= std::uint64_t(1) << best;
    }
    std::array<int, kMaxPatternOrder> label{};
    return hom_extend(h, order, label, 0);
}

namespace {

PinCandidate scan_candidate(const std::string& name, const PinConfig& cfg) {
    TargetGraph h = catalog_graph(CatalogId::named(name));
    PinCandidate out;
    out.name = name;
    out.edge_count = h.edge_count();
    out.r2_lo = h.order;
    out.r2_hi = GrValue::kOpenUpper;

    Forbid f;
    f.mono.push_back(h);
    for (int n = cfg.n_min; n <= cfg.n_cap; ++n) {
        SearchConfig sc;
        sc.node_budget = cfg.budget_per_call;
        sc.threads = 1;  // exact reproducible node counts in the evidence
        sc.vertex_symmetry = true;
        SearchOutcome r = prove_unavoidable(n, 2, f, sc);
        out.scans.push_back({n, r.verdict, r.nodes});
        if (r.verdict == Verdict::Found) {
            out.r2_lo = n + 1;
        } else if (r.verdict == Verdict::Exhausted) {
            out.r2_hi = n;
            break;
        } else {
            break;  // larger orders only get harder
        }
    }
    return out;
}

}  // namespace

PinResult pin_presets(const PinConfig& cfg) {
    PinResult res;
    res.config = cfg;

    // all ten five-vertex patterns beyond the trees; banner is f11 and is
    // scanned for the record but excluded from every other slot
    std::vector<std::string> all = {"c5",    "banner", "tadpole32",
                                    "bull",  "cricket", "house",
                                    "bowtie", "diamond_pendant2", "diamond_pendant3", "k23"};
    for (const auto& name : all) res.candidates.push_back(scan_candidate(name, cfg));

    auto cand = [&](const std::string& name) -> const PinCandidate& {
        for (const auto& c : res.candidates)
            if (c.name == name) return c;
        throw Error("internal: candidate missing");
    };
    auto pattern = [&](const std::string& name) {
        return catalog_graph(CatalogId::named(name));
    };

    TargetGraph k133 = catalog_graph(CatalogId::multipartite({1, 3, 3}));
    TargetGraph f421 = fact_421_forcing();
    TargetGraph f422 = fact_422_forcing();
    auto tower_safe = [&](const std::string& name) {
        return !has_c5_homomorphism(pattern(name));
    };

    for (const auto& f9 : preset_slot_candidates("f9")) {
        if (!cand(f9).r2_compatible(9) || !tower_safe(f9)) continue;
        for (const auto& f10 : preset_slot_candidates("f10")) {
            if (!cand(f10).r2_compatible(9) || !tower_safe(f10)) continue;
            if (!is_subgraph(pattern(f10), k133)) continue;
            if (!is_subgraph(pattern(f9), pattern(f10))) continue;
            for (const auto& f12 : preset_slot_candidates("f12")) {
                if (f12 == f10) continue;
                if (!cand(f12).r2_compatible(10) || !tower_safe(f12)) continue;
                if (!is_subgraph(pattern(f12), f421)) continue;
                for (const auto& f13 : preset_slot_candidates("f13")) {
                    if (f13 == f10 || f13 == f12) continue;
                    if (!cand(f13).r2_compatible(10) || !tower_safe(f13)) continue;
                    if (!is_subgraph(pattern(f13), f422)) continue;
                    res.assignments.push_back(PinAssignment{{f9, f10, f12, f13}});
                }
            }
        }
    }

    static const std::array<std::string, 4> slot_names = {"f9", "f10", "f12", "f13"};
    for (std::size_t s = 0; s < slot_names.size(); ++s) {
        std::vector<std::string> accepted;
        for (const auto& a : res.assignments)
            if (std::find(accepted.begin(), accepted.end(), a.names[s]) == accepted.end())
                accepted.push_back(a.names[s]);
        if (!accepted.empty()) res.table.slots[slot_names[s]] = accepted;
    }
    res.table.slots["f11"] = {"banner"};
    return res;
}

std::string PinResult::evidence_text() const {
    std::string s;
    s += "pin evidence v1\n";
    s += "config n_min=" + std::to_string(config.n_min) +
         " n_cap=" + std::to_string(config.n_cap) +
         " budget=" + std::to_string(config.budget_per_call) +
         " seed=" + std::to_string(config.seed) + " threads=1 vertex-symmetry=on\n";
    for (const auto& c : candidates) {
        s += "candidate " + c.name + " edges=" + std::to_string(c.edge_count) + "\n";
        for (const auto& scan : c.scans)
            s += "  n=" + std::to_string(scan.n) + " " + to_string(scan.verdict) +
                 " nodes=" + std::to_string(scan.nodes) + "\n";
        s += "  r2 in [" + std::to_string(c.r2_lo) + "," +
             (c.r2_hi == GrValue::kOpenUpper ? std::string("open") : std::to_string(c.r2_hi)) +
             "]\n";
    }
    s += "assignments " + std::to_string(assignments.size()) + "\n";
    for (const auto& a : assignments)
        s += "  f9=" + a.names[0] + " f10=" + a.names[1] + " f12=" + a.names[2] +
             " f13=" + a.names[3] + "\n";
    for (const auto& slot : {"f9", "f10", "f12", "f13"}) {
        auto names = table.candidates(slot);
        s += std::string("slot ") + slot + ":";
        if (names.empty()) s += " (none)";
        for (const auto& n : names) s += " " + n;
        s += "\n";
    }
    return s;
}

}  // namespace grlab
