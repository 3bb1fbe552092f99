#pragma once

#include <cstdint>

namespace attnsim {

// Counter-based deterministic generator. Every value is a pure function of
// (seed, stream, counter), so trials can be generated independently and in
// any order without sharing state.
class CounterRng {
  public:
    CounterRng(uint64_t seed, uint64_t stream = 0) : seed_(seed), stream_(stream) {}

    static uint64_t mix(uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    uint64_t next_u64() {
        uint64_t k = mix(seed_ ^ mix(stream_ ^ 0x6a09e667f3bcc909ULL));
        return mix(k ^ counter_++ * 0xd1b54a32d192ed03ULL);
    }

    // [0, 1)
    double uniform() { return (next_u64() >> 11) * (1.0 / 9007199254740992.0); }

    // [0, n)
    uint64_t below(uint64_t n) { return n == 0 ? 0 : next_u64() % n; }

    // [lo, hi] inclusive
    int64_t range(int64_t lo, int64_t hi) {
        return lo + static_cast<int64_t>(below(static_cast<uint64_t>(hi - lo + 1)));
    }

    bool coin() { return (next_u64() & 1) != 0; }

    // Independent child stream, e.g. one per trial.
    CounterRng split(uint64_t stream) const { return CounterRng(seed_, mix(stream_) ^ stream); }

    uint64_t seed() const { return seed_; }

  private:
    uint64_t seed_;
    uint64_t stream_ = 0;
    uint64_t counter_ = 0;
};

}  // namespace attnsim
