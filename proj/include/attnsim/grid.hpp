#pragma once

#include <cassert>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace attnsim {

// Dense channel-major 3D grid (channel, row, column) of doubles.
struct Grid3 {
    int ch = 0;
    int h = 0;
    int w = 0;
    std::vector<double> v;

    Grid3() = default;
    Grid3(int channels, int height, int width, double init = 0.0)
        : ch(channels), h(height), w(width),
          v(static_cast<size_t>(channels) * height * width, init) {
        if (channels < 0 || height < 0 || width < 0)
            throw std::invalid_argument("Grid3: negative dimension");
    }

    size_t idx(int c, int y, int x) const {
        assert(c >= 0 && c < ch && y >= 0 && y < h && x >= 0 && x < w);
        return (static_cast<size_t>(c) * h + y) * w + x;
    }

    double& at(int c, int y, int x) { return v[idx(c, y, x)]; }
    double at(int c, int y, int x) const { return v[idx(c, y, x)]; }

    size_t size() const { return v.size(); }
    void fill(double x) { std::fill(v.begin(), v.end(), x); }

    bool in_bounds(int y, int x) const { return y >= 0 && y < h && x >= 0 && x < w; }

    bool operator==(const Grid3&) const = default;
};

}  // namespace attnsim
