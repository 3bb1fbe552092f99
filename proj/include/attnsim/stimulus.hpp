#pragma once

#include <string>

#include "attnsim/grid.hpp"

namespace attnsim {

// Multi-channel retinal input. All values are intensities in [0, 1].
struct Stimulus {
    Grid3 values;  // channel-major, row-major within a channel

    Stimulus() = default;
    explicit Stimulus(int channels, int height, int width, double init = 0.0)
        : values(channels, height, width, init) {
        validate_dims();
    }

    int channels() const { return values.ch; }
    int height() const { return values.h; }
    int width() const { return values.w; }

    double& at(int c, int y, int x) { return values.at(c, y, x); }
    double at(int c, int y, int x) const { return values.at(c, y, x); }

    void validate_dims() const;
    void validate_range() const;

    bool operator==(const Stimulus&) const = default;
};

// Structured-text stimulus file: {width, height, channels, values}.
// Values outside [0,1] are rejected at load.
Stimulus load_stimulus(const std::string& path);
Stimulus parse_stimulus_json(const std::string& text);
std::string stimulus_to_json(const Stimulus& s);
void save_stimulus(const Stimulus& s, const std::string& path);

}  // namespace attnsim
