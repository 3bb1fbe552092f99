#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "attnsim/grid.hpp"
#include "attnsim/stimulus.hpp"

namespace attnsim {

// Foveal center in stimulus-cell coordinates.
struct GazeState {
    int x = 0;
    int y = 0;
    bool operator==(const GazeState&) const = default;
};

struct SaccadeCommand {
    int dx = 0;
    int dy = 0;
    uint64_t duration = 0;  // cycles; zero-offset commands cost nothing
};

struct FixationParams {
    uint64_t t_sacc = 25;   // 250 ms at 10 ms/cycle
    int r_fov = 3;          // full-acuity radius, cells
    int near_block = 2;     // box size just outside the fovea
    int far_block = 4;      // box size beyond 2·r_fov
    double ior_delta = 0.05;  // decay per cycle
};

// Decaying per-cell bias against re-fixation.
struct IorMap {
    Grid3 v;  // 1 × h × w, values in [0,1]
    double delta = 0.05;

    IorMap() = default;
    IorMap(int h, int w, double decay) : v(1, h, w, 0.0), delta(decay) {}

    void mark(const std::vector<std::pair<int, int>>& cells) {
        for (auto [y, x] : cells)
            if (v.in_bounds(y, x)) v.at(0, y, x) = 1.0;
    }
    void decay(uint64_t cycles) {
        if (cycles == 0) return;
        double k = std::pow(1.0 - delta, static_cast<double>(cycles));
        for (double& x : v.v) x *= k;
    }
    double at(int y, int x) const { return v.at(0, y, x); }
};

// Saccade landing on round-half-away-from-zero(target); residual distance is
// the grid minimum (≤ √2/2). Out-of-bounds target is an error.
SaccadeCommand plan_saccade(const GazeState& gaze, double tx, double ty, int width, int height,
                            uint64_t t_sacc);

GazeState execute_saccade(const GazeState& gaze, const SaccadeCommand& cmd);

// argmax over conspicuity·(1−ior) with canonical (y, x) tie-break; nullopt
// when the weighted map is all zero.
std::optional<std::pair<int, int>> select_next_fixation(const Grid3& conspicuity,
                                                        const IorMap& ior);

// Per-cell channel maximum; the bottom-up contrast proxy.
Grid3 conspicuity_map(const Stimulus& s);

// Eccentricity-dependent acuity: cells within r_fov of gaze keep their value,
// farther cells are replaced by the mean of their aligned box (size 2, then 4
// beyond 2·r_fov). Output dims equal input dims.
Stimulus foveate(const Stimulus& s, const GazeState& gaze, const FixationParams& p);

}  // namespace attnsim
