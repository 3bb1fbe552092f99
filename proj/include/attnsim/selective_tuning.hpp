#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "attnsim/failure.hpp"
#include "attnsim/hierarchy.hpp"

namespace attnsim {

// Winner-take-all descent parameters. The reference layer for SINR is the
// top layer unless sinr_layer names another one.
struct WtaParams {
    double theta = 0.95;    // winner tolerance in (0,1]
    double epsilon = 1e-9;  // monotonicity slack
    int max_restarts = 3;
    int sinr_layer = 0;     // 0 = top layer
    double noise = 1.0;     // N in S/(I+N)
};

// The attended item: winning top unit, per-layer pass zones connecting it
// downwards, and the stimulus cells it grounds out in.
struct FocusOfAttention {
    UnitCoord top_unit;
    std::vector<std::vector<UnitCoord>> pass_zone;  // index λ-1 holds layer λ
    std::vector<std::pair<int, int>> input_region;  // (y, x) cells

    const std::vector<UnitCoord>& zone(int lambda) const {
        return pass_zone.at(static_cast<size_t>(lambda) - 1);
    }
};

// ρ_λ(S, t) samples per layer over successive descent steps.
struct MonotoneHistory {
    std::map<int, std::vector<std::pair<uint64_t, double>>> samples;

    void add(int layer, uint64_t t, double rho) {
        samples[layer].emplace_back(t, rho);
    }
};

struct MonotoneViolation {
    int layer = 0;
    int step = 0;  // index of the offending sample within the layer's sequence
};

// ok (nullopt) iff for every layer and consecutive samples:
// ρ(t+1) >= ρ(t) - epsilon.
std::optional<MonotoneViolation> check_monotone(const MonotoneHistory& h, double epsilon);

// Maximal-ρ top-layer unit among the filtered, uninhibited units; canonical
// tie-break. nullopt when the filtered set is empty.
std::optional<UnitCoord> select_cfoa(const Hierarchy& h, const LayerState& state,
                                     const std::vector<int>* feature_filter,
                                     const std::set<UnitCoord>& inhibited);

struct LocalizeResult {
    bool ok = false;
    Failure failure;  // set when !ok

    UnitCoord cfoa;   // winner of the final (successful or last) attempt
    FocusOfAttention foa;
    MonotoneHistory history;                    // successful attempt only
    std::vector<MonotoneViolation> violations;  // one per restart
    int restarts = 0;
    uint64_t cycles_used = 0;

    LayerState state;       // responses after the descent
    GainField gains;        // suppression in place
    GainField entry_gains;  // pre-localize snapshot, restored by disengage
};

// Top-down branch-and-bound localization. Starting from cfoa, suppresses the
// top unit's surround, then per layer keeps inputs with ρ >= θ·max, zeroes
// losing inputs and the winners' surround pools, and recomputes responses.
// A monotonicity violation inhibits the failed candidate and re-runs
// selection; after max_restarts the result is a Localization failure.
// Each layer step and each re-selection costs one cycle (cycles_used).
LocalizeResult localize(const Hierarchy& h, const Stimulus& retinal, const LayerState& state,
                        const GainField& gains, UnitCoord cfoa, const WtaParams& params,
                        bool partial, std::set<UnitCoord>& inhibited,
                        const std::vector<int>* feature_filter, uint64_t t0);

// S/(I+N) at the given layer: S sums ρ over the pass zone, I over the rest.
double compute_sinr(const Hierarchy& h, const LayerState& state, const FocusOfAttention& foa,
                    int layer, double noise);

}  // namespace attnsim
