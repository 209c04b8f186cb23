#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "grlab/catalog.hpp"
#include "grlab/search.hpp"

namespace grlab {

// Budgeted evidence gathering for the preset slots f9/f10/f12/f13.
struct PinConfig {
    int n_min = 5;
    int n_cap = 10;
    std::uint64_t budget_per_call = 50'000'000;
    std::uint64_t seed = 1;  // echoed; the scans themselves are deterministic
};

struct PinScan {
    int n = 0;
    Verdict verdict = Verdict::Budget;
    std::uint64_t nodes = 0;
};

struct PinCandidate {
    std::string name;
    int edge_count = 0;
    std::vector<PinScan> scans;
    std::int64_t r2_lo = 0;
    std::int64_t r2_hi = 0;  // GrValue::kOpenUpper when unresolved

    bool r2_compatible(std::int64_t v) const { return r2_lo <= v && v <= r2_hi; }
};

struct PinAssignment {
    std::array<std::string, 4> names;  // f9, f10, f12, f13
};

// Candidate evidence plus every slot assignment consistent with the
// harvested constraints: f9 strictly inside f10 with both two-color values
// at 9, f10 inside the complete tripartite 1|3|3, f12/f13 at 10 and inside
// their forcing graphs (star-over-four plus a two-edge path for f12; a
// 2x3 complete bipartite plus an edge in the triple for f13), and no slot
// graph mapping homomorphically into a five-cycle (the pentagon-tower
// witnesses carry monochromatic five-cycle blow-ups, so a C5-homomorphic
// target could never survive them).
struct PinResult {
    PinConfig config;
    std::vector<PinCandidate> candidates;
    std::vector<PinAssignment> assignments;
    PresetTable table;  // slot -> accepted names (projection of assignments)

    bool consistent() const { return !assignments.empty(); }
    std::string evidence_text() const;
};

PinResult pin_presets(const PinConfig& cfg = {});

// forcing graphs harvested from the structural facts
TargetGraph fact_421_forcing();  // K_{1,4} star plus a 2-edge path on the leaves
TargetGraph fact_422_forcing();  // K_{2,3} plus one edge inside the triple

// vertex labeling into Z5 with every edge joining consecutive labels;
// equivalent to embeddability into some five-cycle blow-up
bool has_c5_homomorphism(const TargetGraph& h);

}  // namespace grlab
