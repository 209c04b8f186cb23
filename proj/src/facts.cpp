#include "grlab/facts.hpp"

#include <algorithm>

namespace grlab {

namespace {

struct PartView {
    const ColoredCompleteGraph& g;
    std::vector<Bitset> masks;

    PartView(const ColoredCompleteGraph& g_, const GallaiPartition& p) : g(g_) {
        masks.assign(p.part_count(), Bitset(g.order()));
        for (int i = 0; i < p.part_count(); ++i)
            for (int v : p.parts[i]) masks[i].set(v);
    }

    Bitset alpha_in_part(ColorId c, int v, int part) const {
        Bitset b = g.adjacency(c, v);
        b &= masks[part];
        return b;
    }
};

// first edge of color c inside the part, if any
std::optional<std::pair<int, int>> mono_edge(const PartView& pv, ColorId c,
                                             const std::vector<int>& part, int pi) {
    for (int v : part) {
        Bitset nb = pv.alpha_in_part(c, v, pi);
        int w = nb.next();
        if (w >= 0) return std::make_pair(std::min(v, w), std::max(v, w));
    }
    return std::nullopt;
}

// path on three vertices: a middle vertex with two c-neighbors in the part
std::optional<std::vector<int>> mono_p3(const PartView& pv, ColorId c,
                                        const std::vector<int>& part, int pi) {
    for (int v : part) {
        Bitset nb = pv.alpha_in_part(c, v, pi);
        int a = nb.next();
        if (a < 0) continue;
        int b = nb.next(a + 1);
        if (b >= 0) return std::vector<int>{a, v, b};
    }
    return std::nullopt;
}

std::optional<std::vector<int>> mono_k3(const PartView& pv, ColorId c,
                                        const std::vector<int>& part, int pi) {
    for (int v : part) {
        Bitset nb = pv.alpha_in_part(c, v, pi);
        for (int a = nb.next(v + 1); a >= 0; a = nb.next(a + 1)) {
            Bitset common = pv.alpha_in_part(c, a, pi);
            common &= nb;
            int b = common.next(a + 1);
            if (b >= 0) return std::vector<int>{v, a, b};
        }
    }
    return std::nullopt;
}

// path on four vertices in color c inside the part
std::optional<std::vector<int>> mono_p4(const PartView& pv, ColorId c,
                                        const std::vector<int>& part, int pi) {
    for (int b : part) {
        Bitset nb_b = pv.alpha_in_part(c, b, pi);
        for (int a = nb_b.next(); a >= 0; a = nb_b.next(a + 1)) {
            for (int x = nb_b.next(); x >= 0; x = nb_b.next(x + 1)) {
                if (x == a) continue;
                Bitset nb_x = pv.alpha_in_part(c, x, pi);
                for (int d = nb_x.next(); d >= 0; d = nb_x.next(d + 1)) {
                    if (d == a || d == b) continue;
                    return std::vector<int>{a, b, x, d};
                }
            }
        }
    }
    return std::nullopt;
}

struct Auditor {
    const ColoredCompleteGraph& g;
    const GallaiPartition& p;
    PartView pv;

    Auditor(const ColoredCompleteGraph& g_, const GallaiPartition& p_)
        : g(g_), p(p_), pv(g_, p_) {}

    // Eval plugs one conclusion; instances are ordered part pairs (i,j)
    // carrying the pair color.
    template <typename Hyp, typename Eval>
    FactReport run(std::string id, Hyp&& hyp, Eval&& eval, std::string note = "") {
        FactReport rep;
        rep.fact_id = std::move(id);
        rep.note = std::move(note);
        int m = p.part_count();
        for (int i = 0; i < m && rep.holds; ++i)
            for (int j = 0; j < m && rep.holds; ++j) {
                if (i == j) continue;
                ++rep.instances_checked;
                if (!hyp(p.parts[i], p.parts[j])) continue;
                ++rep.non_vacuous_instances;
                rep.vacuous = false;
                ColorId alpha = p.pair_color(i, j);
                auto bad = eval(i, j, alpha);
                if (bad) {
                    rep.holds = false;
                    bad->part_i = i;
                    bad->part_j = j;
                    bad->color = alpha;
                    rep.counterexample = std::move(bad);
                }
            }
        return rep;
    }

    std::optional<FactCounterexample> no_mono_p4_in_i(int i, int, ColorId alpha) {
        if (auto path = mono_p4(pv, alpha, p.parts[i], i))
            return FactCounterexample{-1, -1, *path, 0};
        return std::nullopt;
    }

    std::optional<FactCounterexample> alpha_not_inside_i(int i, int, ColorId alpha) {
        if (auto e = mono_edge(pv, alpha, p.parts[i], i))
            return FactCounterexample{-1, -1, {e->first, e->second}, 0};
        return std::nullopt;
    }

    std::optional<FactCounterexample> no_mono_p3_in_i(int i, int, ColorId alpha) {
        if (auto path = mono_p3(pv, alpha, p.parts[i], i))
            return FactCounterexample{-1, -1, *path, 0};
        return std::nullopt;
    }

    std::optional<FactCounterexample> no_mono_k3_in_i(int i, int, ColorId alpha) {
        if (auto tri = mono_k3(pv, alpha, p.parts[i], i))
            return FactCounterexample{-1, -1, *tri, 0};
        return std::nullopt;
    }

    // no vertex outside parts i and j sending color alpha into both
    std::optional<FactCounterexample> no_common_alpha_apex(int i, int j, ColorId alpha) {
        for (int v = 0; v < g.order(); ++v) {
            if (pv.masks[i].test(v) || pv.masks[j].test(v)) continue;
            const Bitset& nb = g.adjacency(alpha, v);
            if (nb.intersects(pv.masks[i]) && nb.intersects(pv.masks[j]))
                return FactCounterexample{-1, -1, {v}, 0};
        }
        return std::nullopt;
    }
};

std::size_t sz(const std::vector<int>& v) { return v.size(); }

}  // namespace

std::string FactCounterexample::describe() const {
    std::string s = "parts (" + std::to_string(part_i) + "," + std::to_string(part_j) +
                    ") color " + std::to_string(color) + " vertices [";
    for (std::size_t i = 0; i < vertices.size(); ++i)
        s += (i ? "," : "") + std::to_string(vertices[i]);
    return s + "]";
}

std::vector<FactReport> audit_family(const ColoredCompleteGraph& g, const GallaiPartition& p,
                                     FactFamily family) {
    auto valid = verify_partition(g, p);
    if (!valid.holds) throw Error("invalid partition: " + valid.detail);

    Auditor a(g, p);
    auto p4_i = [&](int i, int j, ColorId c) { return a.no_mono_p4_in_i(i, j, c); };
    auto inside_i = [&](int i, int j, ColorId c) { return a.alpha_not_inside_i(i, j, c); };
    auto p3_i = [&](int i, int j, ColorId c) { return a.no_mono_p3_in_i(i, j, c); };
    auto k3_i = [&](int i, int j, ColorId c) { return a.no_mono_k3_in_i(i, j, c); };
    auto apex = [&](int i, int j, ColorId c) { return a.no_common_alpha_apex(i, j, c); };

    std::vector<FactReport> out;
    if (family == FactFamily::F10Type) {
        out.push_back(a.run(
            "F3.1.1", [&](auto& vi, auto&) { return sz(vi) >= 4; }, p4_i));
        out.push_back(a.run(
            "F3.1.2", [&](auto& vi, auto& vj) { return sz(vi) >= 3 && sz(vj) >= 2; },
            inside_i));
        out.push_back(a.run(
            "F3.1.3", [&](auto& vi, auto& vj) { return sz(vi) >= 2 && sz(vj) >= 2; }, apex));
        return out;
    }
    out.push_back(a.run(
        "F4.1.1", [&](auto& vi, auto&) { return sz(vi) >= 4; }, p4_i));
    out.push_back(a.run(
        "F4.1.2", [&](auto& vi, auto& vj) { return sz(vi) >= 3 && sz(vj) >= 3; }, inside_i,
        "both-sides reading of the doubled clause; checked for each ordered pair"));
    out.push_back(a.run(
        "F4.1.3", [&](auto& vi, auto& vj) { return sz(vi) >= 3 && sz(vj) >= 2; }, p3_i));
    out.push_back(a.run(
        "F4.1.4", [&](auto& vi, auto&) { return sz(vi) >= 4; }, k3_i));
    out.push_back(a.run(
        "F4.1.5", [&](auto& vi, auto& vj) { return sz(vi) >= 2 && sz(vj) >= 2; }, apex));
    if (family == FactFamily::F12Type)
        out.push_back(a.run(
            "F4.2.1", [&](auto& vi, auto&) { return sz(vi) >= 4; }, p3_i));
    else
        out.push_back(a.run(
            "F4.2.2", [&](auto& vi, auto& vj) { return sz(vi) >= 3 && sz(vj) >= 2; },
            inside_i));
    return out;
}

std::vector<FactFamily> fact_families_for(const TargetGraph& h, const PresetTable& presets) {
    std::vector<FactFamily> out;
    auto matches_slot = [&](const std::string& alias) {
        for (const auto& name : presets.candidates(alias))
            if (is_isomorphic(h, catalog_graph(CatalogId::named(name)))) return true;
        return false;
    };
    if (matches_slot("f9") || matches_slot("f10")) out.push_back(FactFamily::F10Type);
    if (matches_slot("f12")) out.push_back(FactFamily::F12Type);
    if (matches_slot("f13")) out.push_back(FactFamily::F13Type);
    return out;
}

std::vector<FactReport> audit_facts(const ColoredCompleteGraph& g, const GallaiPartition& p,
                                    const TargetGraph& h, const PresetTable& presets) {
    std::vector<FactReport> out;
    for (FactFamily fam : fact_families_for(h, presets))
        for (auto& rep : audit_family(g, p, fam)) {
            bool seen = false;
            for (const auto& r : out)
                if (r.fact_id == rep.fact_id) seen = true;
            if (!seen) out.push_back(std::move(rep));
        }
    return out;
}

}  // namespace grlab
