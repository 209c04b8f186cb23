#pragma once

#include <map>
#include <string>
#include <vector>

#include "grlab/colored_graph.hpp"
#include "grlab/target_graph.hpp"

namespace grlab {

// Identifier for a pattern in the catalog. Parametric families plus the
// thirteen named connected graphs on five vertices with at most six edges,
// plus f1..f13 preset aliases resolved through a PresetTable.
struct CatalogId {
    enum class Kind { Path, Star, Cycle, Complete, CompleteMultipartite, F2n, Named };

    Kind kind = Kind::Named;
    int m = 0;                    // Path/Star/Cycle/Complete/F2n parameter
    std::vector<int> part_sizes;  // CompleteMultipartite
    std::string label;            // Named

    static CatalogId path(int m) { return {Kind::Path, m, {}, {}}; }
    static CatalogId star(int m) { return {Kind::Star, m, {}, {}}; }
    static CatalogId cycle(int m) { return {Kind::Cycle, m, {}, {}}; }
    static CatalogId complete(int m) { return {Kind::Complete, m, {}, {}}; }
    static CatalogId multipartite(std::vector<int> sizes) {
        return {Kind::CompleteMultipartite, 0, std::move(sizes), {}};
    }
    static CatalogId f2n(int n) { return {Kind::F2n, n, {}, {}}; }
    static CatalogId named(std::string label) {
        return {Kind::Named, 0, {}, std::move(label)};
    }

    // text forms: "banner", "f9", "f2n:5", "path:4", "star:3", "cycle:7",
    // "complete:4" (alias "k4"), "multipartite:1,3,3"
    static CatalogId parse(const std::string& text);
    std::string to_string() const;
};

// malformed catalog id text; a usage error at the CLI boundary
class CatalogParseError : public Error {
public:
    using Error::Error;
};

// Accepted identities for the preset aliases. f11 is always banner; the
// other slots are populated by the pinning procedure (search module) and
// committed as data. A slot with several accepted candidates stays
// ambiguous on purpose: alias resolution refuses to guess.
struct PresetTable {
    std::map<std::string, std::vector<std::string>> slots;

    static PresetTable unpinned();
    static PresetTable from_json(const std::string& text);
    std::string to_json() const;

    bool pinned(const std::string& alias) const;
    // every accepted candidate for an alias (empty if unpinned)
    std::vector<std::string> candidates(const std::string& alias) const;
};

// The spec'd error for f-alias lookups that cannot be resolved to a single
// graph; carries the candidate list.
class AmbiguousAliasError : public Error {
public:
    AmbiguousAliasError(const std::string& alias, const std::vector<std::string>& cands);
    const std::vector<std::string>& candidates() const { return candidates_; }

private:
    std::vector<std::string> candidates_;
};

TargetGraph catalog_graph(const CatalogId& id,
                          const PresetTable& presets = PresetTable::unpinned());

// the thirteen named five-vertex patterns, fixed order: trees, then the
// five-edge graphs, then the six-edge graphs
const std::vector<std::string>& named_five_vertex_patterns();

// a-priori candidate names for a preset slot (used by pinning and by
// ambiguous-alias diagnostics)
std::vector<std::string> preset_slot_candidates(const std::string& alias);

}  // namespace grlab
