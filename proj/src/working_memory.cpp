#include "attnsim/working_memory.hpp"

#include <cmath>

#include "attnsim/failure.hpp"

namespace attnsim {

WmStore::WmStore(int capacity) : capacity_(capacity) {
    if (capacity < 1) throw ConfigError("working memory: capacity must be >= 1");
}

void WmStore::store(const std::string& key, std::vector<double> repr, uint64_t now) {
    for (double x : repr)
        if (!std::isfinite(x)) throw ConfigError("working memory: non-finite representation");
    for (WmEntry& e : entries_) {
        if (e.key == key) {
            e.repr = std::move(repr);
            e.stored_at = now;
            return;
        }
    }
    if (static_cast<int>(entries_.size()) == capacity_) entries_.pop_front();
    entries_.push_back(WmEntry{key, std::move(repr), now});
}

std::optional<std::vector<double>> WmStore::recall(const std::string& key) const {
    for (const WmEntry& e : entries_)
        if (e.key == key) return e.repr;
    return std::nullopt;
}

std::optional<MatchResult> wm_match(const std::vector<double>& a, const std::vector<double>& b,
                                    double tolerance) {
    if (a.size() != b.size() || a.empty()) return std::nullopt;
    double dot = 0.0, na = 0.0, nb = 0.0;
    for (size_t i = 0; i < a.size(); ++i) {
        dot += a[i] * b[i];
        na += a[i] * a[i];
        nb += b[i] * b[i];
    }
    if (na == 0.0 || nb == 0.0) return std::nullopt;  // degenerate comparison
    double score = dot / (std::sqrt(na) * std::sqrt(nb));
    return MatchResult{score >= 1.0 - tolerance, score};
}

}  // namespace attnsim
