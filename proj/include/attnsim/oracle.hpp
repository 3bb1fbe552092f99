#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "attnsim/bigcount.hpp"

namespace attnsim {

// Exact-arithmetic verification of the combinatorial and geometric claims
// behind the control argument: powersets of mechanism sets, k-subset counts,
// parameterization blowups, the synapse budget, the sky-patch geometry, and
// the guided-vs-unguided search collapse.

BigCount powerset_count(unsigned n);  // 2^n

// C(n, k) two independent ways; both are exact.
BigCount binomial_product(unsigned n, unsigned k);
BigCount binomial_pascal(unsigned n, unsigned k);

BigCount mechanism_space(unsigned mechanisms, unsigned durations, unsigned params);  // 2^(A·d·p)

struct SynapseBudget {
    BigCount total;          // neurons × synapses_per
    unsigned max_exponent;   // largest m with 2^m <= total
};
SynapseBudget synapse_budget(uint64_t neurons, uint64_t synapses_per);

struct SkyModel {
    unsigned stars = 1000;
    double radius = 100.0;
    double patch_deg = 20.0;  // angular patch size, degrees
};

struct SkyGeometry {
    double hemisphere_area = 0.0;      // 2πr²
    double patch_area = 0.0;           // r²·θ·sin(θ), matching the reported figure
    double patch_area_spherical = 0.0; // spherical-rectangle comparison value
    double patch_count = 0.0;          // hemisphere / patch
    int stars_per_patch = 0;           // round(stars / patch_count)
};
SkyGeometry sky_geometry(const SkyModel& m);

struct GuidedSearch {
    uint64_t discs = 0;          // one search disc per unit of surface area
    BigCount per_disc;           // C(stars_per_patch, 6)
    BigCount guided_total;       // discs × per_disc
    double orders_gap_exact = 0.0;   // log10(C(N,6)) − log10(guided_total)
};
GuidedSearch guided_search_count(const SkyModel& m);

// Subset-search demonstrator. Enumerates candidate feature subsets of an
// n-feature display until the planted target is found and returns how many
// were examined (including the hit). Unguided enumeration walks bitmask
// order; guided enumeration tests prefixes of the task-supplied order, which
// lists the target's features first.
uint64_t visual_match_examined(int n, uint64_t target_mask, bool guided);
// Worst-case plant (the full feature set).
uint64_t visual_match_demo(int n, bool guided);

// One row of the claims table produced by the `oracle` CLI subcommand.
// Flagged rows are reported figures that exact arithmetic does not reproduce;
// they are never adopted as truths.
struct OracleClaim {
    std::string id;
    std::string description;
    std::string reported;      // the published figure being checked
    std::string oracle_value;  // what exact arithmetic yields
    std::string status;        // "match" | "flagged" | "info"
    std::string note;
};

std::vector<OracleClaim> oracle_claims();

}  // namespace attnsim
