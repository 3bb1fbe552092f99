#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <vector>

namespace attnsim {

struct WmEntry {
    std::string key;
    std::vector<double> repr;  // non-negative feature vector
    uint64_t stored_at = 0;
};

struct MatchResult {
    bool same = false;
    double score = 0.0;  // cosine similarity
};

// Capacity-bounded store with FIFO eviction on stored_at order. Storing an
// existing key overwrites in place.
class WmStore {
  public:
    explicit WmStore(int capacity = 7);

    void store(const std::string& key, std::vector<double> repr, uint64_t now);
    std::optional<std::vector<double>> recall(const std::string& key) const;
    bool contains(const std::string& key) const { return recall(key).has_value(); }
    size_t size() const { return entries_.size(); }
    int capacity() const { return capacity_; }

  private:
    int capacity_;
    std::deque<WmEntry> entries_;  // oldest first
};

// Cosine-similarity comparison; same iff score >= 1 - tolerance. Zero-length
// or zero-magnitude vectors cannot be compared (degenerate percept): the
// caller turns that into a structured failure.
std::optional<MatchResult> wm_match(const std::vector<double>& a, const std::vector<double>& b,
                                    double tolerance);

}  // namespace attnsim
