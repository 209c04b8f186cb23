#pragma once

#include <cstdint>
#include <limits>
#include <string>

#include "grlab/catalog.hpp"

namespace grlab {

// A Gallai-Ramsey value: exact when lo == hi, otherwise the best proven
// bounds. hi == kOpenUpper marks an upper bound the search has not
// established.
struct GrValue {
    static constexpr std::int64_t kOpenUpper = std::numeric_limits<std::int64_t>::max();

    std::int64_t lo = 0;
    std::int64_t hi = 0;
    int k = 0;
    std::string family;
    std::string note;

    bool exact() const { return lo == hi; }

    static GrValue exact_value(std::int64_t v, int k, std::string family,
                               std::string note = "") {
        return {v, v, k, std::move(family), std::move(note)};
    }
    static GrValue range(std::int64_t lo, std::int64_t hi, int k, std::string family,
                         std::string note = "") {
        return {lo, hi, k, std::move(family), std::move(note)};
    }
};

// Closed-form Gallai-Ramsey value for one of the supported families:
// f9, f10, f11 (banner), f12, f13, k3 and the f2n series. Exact wherever
// an equality is proven; a lower/upper bound pair for f2n with n >= 6.
GrValue gr_value(const CatalogId& family, int k);

// two-colored Ramsey number for f9, f10, f11, f12, f13, banner, f2n, star
std::int64_t r2_value(const CatalogId& family);

// exact 5^e with overflow checking
std::int64_t pow5(int e);

}  // namespace grlab
