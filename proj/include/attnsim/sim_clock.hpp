#pragma once

#include <cstdint>

namespace attnsim {

// Simulated time. One cycle is cycle_ms milliseconds (default 10 ms).
struct SimClock {
    uint64_t cycles = 0;
    double cycle_ms = 10.0;

    void advance(uint64_t n) { cycles += n; }
    double ms() const { return static_cast<double>(cycles) * cycle_ms; }
};

}  // namespace attnsim
