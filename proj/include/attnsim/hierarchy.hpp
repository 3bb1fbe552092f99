#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "attnsim/grid.hpp"
#include "attnsim/stimulus.hpp"

namespace attnsim {

// Coordinate of one unit. layer 0 addresses input cells (feature = channel),
// layers 1..L address hierarchy units. Ordering is the canonical
// (layer, feature, y, x) ascending order used for ties and enumeration.
struct UnitCoord {
    int layer = 0;
    int feature = 0;
    int y = 0;
    int x = 0;
    auto operator<=>(const UnitCoord&) const = default;
};

struct LayerSpec {
    int features = 1;
    int rf = 2;      // square receptive field edge, in cells of the layer below
    int stride = 1;
    std::vector<std::string> feature_names;  // optional, for task filters
};

struct HierarchyConfig {
    int input_channels = 1;
    int input_h = 8;
    int input_w = 8;
    std::vector<std::string> channel_names;

    std::vector<LayerSpec> layers;  // λ = 1..L, L ≥ 2

    double beta = 0.1;      // divisive-normalization strength
    double cycle_ms = 10.0;
    int pool_radius = 1;    // 3×3 spatial pool

    // Optional explicit weights per layer, layout [fo][fi][ky][kx] flattened.
    // An empty entry means the identity template: w(fo,fi,·)=1 iff fi == fo
    // (mod input feature count), else 0.
    std::vector<std::vector<double>> weights;
};

// Five-layer funnel over a 32×32 input; top layer is 1×1.
HierarchyConfig default_hierarchy_config(int channels = 3);

struct LayerGeom {
    int features = 0;
    int h = 0;
    int w = 0;
};

// Immutable after build; safe to share across concurrently running trials.
class Hierarchy {
  public:
    static Hierarchy build(HierarchyConfig cfg);

    int layer_count() const { return static_cast<int>(cfg_.layers.size()); }
    const HierarchyConfig& config() const { return cfg_; }

    // geom(0) is the input plane.
    LayerGeom geom(int layer) const;

    double weight(int layer, int fo, int fi, int ky, int kx) const;

    // Receptive-field ancestry of a unit projected down to the given layer
    // (default: input cells). Canonical order.
    std::vector<UnitCoord> ancestry(const UnitCoord& u, int down_to_layer = 0) const;

    // Direct inputs of a unit (one layer below), canonical order.
    std::vector<UnitCoord> inputs_of(const UnitCoord& u) const;

    // Stimulus-space center of a unit's receptive field.
    std::pair<double, double> rf_center(const UnitCoord& u) const;

    int feature_index(int layer, const std::string& name) const;  // -1 if unknown

  private:
    HierarchyConfig cfg_;
    std::vector<LayerGeom> geom_;  // index 0 = input
    std::vector<std::vector<double>> weights_;  // resolved, per layer
};

// Responses ρ ≥ 0 for layers 1..L. rho[0] corresponds to λ=1.
struct LayerState {
    std::vector<Grid3> rho;
    uint64_t timestamp = 0;

    const Grid3& layer(int lambda) const { return rho.at(static_cast<size_t>(lambda) - 1); }
    Grid3& layer(int lambda) { return rho.at(static_cast<size_t>(lambda) - 1); }
};

// Multiplicative gains in [0,1] for every unit of every layer plus the input
// channels. Priming lives in `base`; Selective Tuning suppression is a
// separate mask so the two can be applied and lifted independently.
struct GainField {
    std::vector<Grid3> base;                    // index 0 = input, 1..L = layers
    std::vector<std::vector<uint8_t>> suppressed;

    static GainField ones(const Hierarchy& h);

    double gain(int layer, int f, int y, int x) const {
        const Grid3& b = base[static_cast<size_t>(layer)];
        if (suppressed[static_cast<size_t>(layer)][b.idx(f, y, x)]) return 0.0;
        return b.at(f, y, x);
    }
    void suppress(const UnitCoord& u) {
        const Grid3& b = base[static_cast<size_t>(u.layer)];
        suppressed[static_cast<size_t>(u.layer)][b.idx(u.feature, u.y, u.x)] = 1;
    }
    bool is_suppressed(const UnitCoord& u) const {
        const Grid3& b = base[static_cast<size_t>(u.layer)];
        return suppressed[static_cast<size_t>(u.layer)][b.idx(u.feature, u.y, u.x)] != 0;
    }
    void clear_suppression();
    bool operator==(const GainField&) const = default;
};

// Feature/region relevance used by priming. Empty feature list for a layer
// means "everything relevant". Regions are rectangles of input cells
// (y0, x0, y1, x1 inclusive) marked irrelevant across all channels.
struct Relevance {
    // relevant[l][f] — 1 = relevant, 0 = irrelevant; index 0 = input channels
    std::vector<std::vector<uint8_t>> feature_relevant;
    struct Rect {
        int y0, x0, y1, x1;
    };
    std::vector<Rect> irrelevant_regions;

    static Relevance all_relevant(const Hierarchy& h);
    static Relevance features_only(const Hierarchy& h, const std::vector<int>& relevant_channels);
};

// Pure response computation: no clock side effects.
//   pre(u)     = rect( Σ w · gained_input )
//   prenorm(u) = g(u) · pre(u)
//   ρ(u)       = prenorm(u) / (1 + β · pool(u))
// pool(u) sums prenorm over the 3×3 spatial neighborhood at u's layer across
// all features, excluding u itself.
LayerState compute_responses(const Hierarchy& h, const Stimulus& s, const GainField& g,
                             uint64_t timestamp = 0);

// Top-down priming pass: relevant units keep base gain 1, irrelevant ones get
// g_low. Idempotent. Does not touch the suppression mask.
GainField apply_priming(const Hierarchy& h, GainField g, const Relevance& rel, double g_low);

// All gains back to 1, suppression lifted.
GainField reset_gains(const Hierarchy& h, GainField g);

}  // namespace attnsim
