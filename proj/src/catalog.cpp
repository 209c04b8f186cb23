#include "grlab/catalog.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

#include "grlab/colored_graph.hpp"

namespace grlab {

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

TargetGraph make_path(int m) {
    if (m < 1) throw Error("path needs >= 1 vertices");
    EdgeList e;
    for (int i = 0; i + 1 < m; ++i) e.emplace_back(i, i + 1);
    return TargetGraph::from_edges(m, std::move(e), "path" + std::to_string(m));
}

TargetGraph make_star(int m) {
    if (m < 1) throw Error("star needs >= 1 leaves");
    EdgeList e;
    for (int i = 1; i <= m; ++i) e.emplace_back(0, i);
    return TargetGraph::from_edges(m + 1, std::move(e), "star" + std::to_string(m));
}

TargetGraph make_cycle(int m) {
    if (m < 3) throw Error("cycle needs >= 3 vertices");
    EdgeList e;
    for (int i = 0; i < m; ++i) e.emplace_back(i, (i + 1) % m);
    return TargetGraph::from_edges(m, std::move(e), "cycle" + std::to_string(m));
}

TargetGraph make_complete(int m) {
    if (m < 1) throw Error("complete graph needs >= 1 vertices");
    EdgeList e;
    for (int u = 0; u < m; ++u)
        for (int v = u + 1; v < m; ++v) e.emplace_back(u, v);
    return TargetGraph::from_edges(m, std::move(e), "k" + std::to_string(m));
}

TargetGraph make_multipartite(const std::vector<int>& sizes) {
    if (sizes.size() < 2) throw Error("complete multipartite needs >= 2 parts");
    int n = 0;
    std::string name = "k";
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        if (sizes[i] < 1) throw Error("part sizes must be >= 1");
        n += sizes[i];
        name += (i ? "_" : "") + std::to_string(sizes[i]);
    }
    EdgeList e;
    int ustart = 0;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        int vstart = ustart + sizes[i];
        for (std::size_t j = i + 1; j < sizes.size(); ++j) {
            for (int u = ustart; u < ustart + sizes[i]; ++u)
                for (int v = vstart; v < vstart + sizes[j]; ++v) e.emplace_back(u, v);
            vstart += sizes[j];
        }
        ustart += sizes[i];
    }
    return TargetGraph::from_edges(n, std::move(e), name);
}

// C4 on 0,1,2,3 with n-2 pendants hanging off vertex 0 (the center,
// degree n); n+2 vertices and n+2 edges
TargetGraph make_f2n(int n) {
    if (n < 3) throw Error("f2n requires n >= 3");
    EdgeList e = {{0, 1}, {1, 2}, {2, 3}, {0, 3}};
    for (int p = 4; p < n + 2; ++p) e.emplace_back(0, p);
    return TargetGraph::from_edges(n + 2, std::move(e), "f2n" + std::to_string(n));
}

TargetGraph make_named_basic(const std::string& label) {
    if (label == "p5") return make_path(5);
    if (label == "k14") return make_star(4);
    if (label == "chair")
        return TargetGraph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {2, 4}}, "chair");
    if (label == "c5") return make_cycle(5);
    if (label == "banner") {
        TargetGraph g = make_f2n(3);
        g.name = "banner";
        return g;
    }
    if (label == "tadpole32")
        return TargetGraph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}},
                                       "tadpole32");
    if (label == "bull")
        return TargetGraph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}}, "bull");
    if (label == "cricket")
        return TargetGraph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}},
                                       "cricket");
    if (label == "house")
        return TargetGraph::from_edges(
            5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {0, 4}}, "house");
    if (label == "bowtie")
        return TargetGraph::from_edges(
            5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}}, "bowtie");
    if (label == "diamond_pendant2")
        return TargetGraph::from_edges(
            5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 4}}, "diamond_pendant2");
    if (label == "diamond_pendant3")
        return TargetGraph::from_edges(
            5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {0, 4}}, "diamond_pendant3");
    if (label == "k23")
        return TargetGraph::from_edges(
            5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}}, "k23");
    throw Error("unknown catalog label '" + label + "'");
}

bool is_f_alias(const std::string& label, int& idx) {
    if (label.size() < 2 || label[0] != 'f') return false;
    for (std::size_t i = 1; i < label.size(); ++i)
        if (!isdigit(static_cast<unsigned char>(label[i]))) return false;
    idx = std::stoi(label.substr(1));
    return idx >= 1 && idx <= 13;
}

int parse_int(const std::string& s, const std::string& what) {
    std::size_t pos = 0;
    int v = 0;
    try {
        v = std::stoi(s, &pos);
    } catch (const std::exception&) {
        throw CatalogParseError("bad " + what + " parameter '" + s + "'");
    }
    if (pos != s.size()) throw CatalogParseError("bad " + what + " parameter '" + s + "'");
    return v;
}

}  // namespace

const std::vector<std::string>& named_five_vertex_patterns() {
    static const std::vector<std::string> names = {
        "p5",    "k14",    "chair",                                          // trees
        "c5",    "banner", "tadpole32",        "bull",             "cricket",  // 5 edges
        "house", "bowtie", "diamond_pendant2", "diamond_pendant3", "k23",      // 6 edges
    };
    return names;
}

std::vector<std::string> preset_slot_candidates(const std::string& alias) {
    // banner is f11, so it is excluded from every other slot
    static const std::vector<std::string> five_edge = {"c5", "tadpole32", "bull", "cricket"};
    static const std::vector<std::string> six_edge = {
        "house", "bowtie", "diamond_pendant2", "diamond_pendant3", "k23"};
    if (alias == "f9") return five_edge;
    if (alias == "f10" || alias == "f12" || alias == "f13") return six_edge;
    if (alias == "f11") return {"banner"};
    return {};
}

PresetTable PresetTable::unpinned() {
    PresetTable t;
    t.slots["f11"] = {"banner"};
    return t;
}

PresetTable PresetTable::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    PresetTable t;
    for (auto& [alias, cands] : j.at("aliases").items())
        t.slots[alias] = cands.get<std::vector<std::string>>();
    if (!t.pinned("f11")) t.slots["f11"] = {"banner"};
    return t;
}

std::string PresetTable::to_json() const {
    nlohmann::json j;
    j["aliases"] = nlohmann::json::object();
    for (auto& [alias, cands] : slots) j["aliases"][alias] = cands;
    return j.dump(2) + "\n";
}

bool PresetTable::pinned(const std::string& alias) const {
    auto it = slots.find(alias);
    return it != slots.end() && it->second.size() == 1;
}

std::vector<std::string> PresetTable::candidates(const std::string& alias) const {
    auto it = slots.find(alias);
    return it == slots.end() ? std::vector<std::string>{} : it->second;
}

AmbiguousAliasError::AmbiguousAliasError(const std::string& alias,
                                         const std::vector<std::string>& cands)
    : Error([&] {
          std::string msg = "ambiguous alias '" + alias + "': candidates {";
          for (std::size_t i = 0; i < cands.size(); ++i)
              msg += (i ? ", " : "") + cands[i];
          return msg + "}";
      }()),
      candidates_(cands) {}

CatalogId CatalogId::parse(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) {
        const auto& names = named_five_vertex_patterns();
        if (std::find(names.begin(), names.end(), text) != names.end())
            return named(text);
        int idx = 0;
        if (is_f_alias(text, idx)) return named(text);
        if (text.size() >= 2 && text[0] == 'k' &&
            std::all_of(text.begin() + 1, text.end(),
                        [](char c) { return isdigit(static_cast<unsigned char>(c)); }))
            return complete(parse_int(text.substr(1), "complete"));
        throw CatalogParseError("unknown catalog label '" + text + "'");
    }
    std::string head = text.substr(0, colon);
    std::string rest = text.substr(colon + 1);
    if (head == "f2n") return f2n(parse_int(rest, "f2n"));
    if (head == "path") return path(parse_int(rest, "path"));
    if (head == "star") return star(parse_int(rest, "star"));
    if (head == "cycle") return cycle(parse_int(rest, "cycle"));
    if (head == "complete") return complete(parse_int(rest, "complete"));
    if (head == "multipartite") {
        std::vector<int> sizes;
        std::stringstream ss(rest);
        std::string item;
        while (std::getline(ss, item, ','))
            sizes.push_back(parse_int(item, "multipartite"));
        return multipartite(std::move(sizes));
    }
    throw CatalogParseError("unknown catalog family '" + head + "'");
}

std::string CatalogId::to_string() const {
    switch (kind) {
        case Kind::Path: return "path:" + std::to_string(m);
        case Kind::Star: return "star:" + std::to_string(m);
        case Kind::Cycle: return "cycle:" + std::to_string(m);
        case Kind::Complete: return "complete:" + std::to_string(m);
        case Kind::CompleteMultipartite: {
            std::string s = "multipartite:";
            for (std::size_t i = 0; i < part_sizes.size(); ++i)
                s += (i ? "," : "") + std::to_string(part_sizes[i]);
            return s;
        }
        case Kind::F2n: return "f2n:" + std::to_string(m);
        case Kind::Named: return label;
    }
    return "?";
}

TargetGraph catalog_graph(const CatalogId& id, const PresetTable& presets) {
    switch (id.kind) {
        case CatalogId::Kind::Path: return make_path(id.m);
        case CatalogId::Kind::Star: return make_star(id.m);
        case CatalogId::Kind::Cycle: return make_cycle(id.m);
        case CatalogId::Kind::Complete: return make_complete(id.m);
        case CatalogId::Kind::CompleteMultipartite: return make_multipartite(id.part_sizes);
        case CatalogId::Kind::F2n: return make_f2n(id.m);
        case CatalogId::Kind::Named: break;
    }
    int idx = 0;
    if (!is_f_alias(id.label, idx)) return make_named_basic(id.label);
    if (idx == 11) return make_named_basic("banner");
    auto accepted = presets.candidates(id.label);
    if (accepted.size() == 1) {
        TargetGraph g = make_named_basic(accepted[0]);
        g.name = id.label + "=" + g.name;
        return g;
    }
    throw AmbiguousAliasError(id.label, accepted.empty() ? preset_slot_candidates(id.label)
                                                         : accepted);
}

}  // namespace grlab
