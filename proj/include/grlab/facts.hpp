#pragma once

#include <optional>
#include <string>
#include <vector>

#include "grlab/catalog.hpp"
#include "grlab/gallai.hpp"

namespace grlab {

// Structural facts checked against a coloring and one of its Gallai
// partitions. Each family bundles the facts that are theorems when the
// coloring is rainbow-triangle-free and avoids a monochromatic copy of the
// family's pattern; the auditor evaluates the conclusions unconditionally
// and reports.
enum class FactFamily { F10Type, F12Type, F13Type };

struct FactCounterexample {
    int part_i = -1;
    int part_j = -1;
    std::vector<int> vertices;
    ColorId color = 0;
    std::string describe() const;
};

struct FactReport {
    std::string fact_id;  // F3.1.1, F3.1.2, F3.1.3, F4.1.1..F4.1.5, F4.2.1, F4.2.2
    bool holds = true;
    bool vacuous = true;  // no instance met the fact's size hypothesis
    int instances_checked = 0;
    int non_vacuous_instances = 0;
    std::string note;
    std::optional<FactCounterexample> counterexample;
};

// facts belonging to one family; p must validate against g
std::vector<FactReport> audit_family(const ColoredCompleteGraph& g,
                                     const GallaiPartition& p, FactFamily family);

// Families applicable to a target pattern under the accepted presets:
// F10-type when h matches an accepted f9/f10 candidate, F12/F13-type for
// accepted f12/f13 candidates. Empty when no family applies.
std::vector<FactFamily> fact_families_for(const TargetGraph& h, const PresetTable& presets);

// union of the applicable families' reports, deduplicated by fact id
std::vector<FactReport> audit_facts(const ColoredCompleteGraph& g, const GallaiPartition& p,
                                    const TargetGraph& h, const PresetTable& presets);

}  // namespace grlab
