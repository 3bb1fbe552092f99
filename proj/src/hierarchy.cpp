#include "attnsim/hierarchy.hpp"

#include <algorithm>
#include <cmath>

#include "attnsim/failure.hpp"

namespace attnsim {

HierarchyConfig default_hierarchy_config(int channels) {
    HierarchyConfig cfg;
    cfg.input_channels = channels;
    cfg.input_h = 32;
    cfg.input_w = 32;
    cfg.layers.assign(5, LayerSpec{channels, 2, 2, {}});
    cfg.beta = 0.1;
    return cfg;
}

Hierarchy Hierarchy::build(HierarchyConfig cfg) {
    if (cfg.input_channels < 1 || cfg.input_h < 1 || cfg.input_w < 1)
        throw ConfigError("hierarchy: input dims must be >= 1");
    if (cfg.layers.size() < 2)
        throw ConfigError("hierarchy: need at least 2 layers");
    if (cfg.beta < 0.0) throw ConfigError("hierarchy: beta must be >= 0");
    if (cfg.pool_radius < 0) throw ConfigError("hierarchy: pool radius must be >= 0");

    Hierarchy h;
    h.geom_.push_back(LayerGeom{cfg.input_channels, cfg.input_h, cfg.input_w});
    for (size_t l = 0; l < cfg.layers.size(); ++l) {
        const LayerSpec& spec = cfg.layers[l];
        const LayerGeom& below = h.geom_.back();
        std::string where = "layer " + std::to_string(l + 1);
        if (spec.features < 1) throw ConfigError("hierarchy: " + where + ": features must be >= 1");
        if (spec.stride < 1) throw ConfigError("hierarchy: " + where + ": stride must be >= 1");
        if (spec.rf < 1) throw ConfigError("hierarchy: " + where + ": receptive field must be >= 1");
        if (spec.rf > below.h || spec.rf > below.w)
            throw ConfigError("hierarchy: " + where + ": receptive field " + std::to_string(spec.rf) +
                              " exceeds extent of layer below (" + std::to_string(below.h) + "x" +
                              std::to_string(below.w) + ")");
        int oh = (below.h - spec.rf) / spec.stride + 1;
        int ow = (below.w - spec.rf) / spec.stride + 1;
        if (oh < 1 || ow < 1)
            throw ConfigError("hierarchy: " + where + ": empty output extent");
        if (!spec.feature_names.empty() &&
            static_cast<int>(spec.feature_names.size()) != spec.features)
            throw ConfigError("hierarchy: " + where + ": feature_names size mismatch");
        h.geom_.push_back(LayerGeom{spec.features, oh, ow});
    }

    // Resolve weights; default is the feature-identity template.
    h.weights_.resize(cfg.layers.size());
    for (size_t l = 0; l < cfg.layers.size(); ++l) {
        const LayerSpec& spec = cfg.layers[l];
        int fin = h.geom_[l].features;
        size_t n = static_cast<size_t>(spec.features) * fin * spec.rf * spec.rf;
        if (l < cfg.weights.size() && !cfg.weights[l].empty()) {
            if (cfg.weights[l].size() != n)
                throw ConfigError("hierarchy: layer " + std::to_string(l + 1) +
                                  ": weight table size mismatch");
            for (double wv : cfg.weights[l])
                if (wv < 0.0)
                    throw ConfigError("hierarchy: layer " + std::to_string(l + 1) +
                                      ": negative weight");
            h.weights_[l] = cfg.weights[l];
        } else {
            std::vector<double> wt(n, 0.0);
            for (int fo = 0; fo < spec.features; ++fo) {
                int fi = fo % fin;
                for (int k = 0; k < spec.rf * spec.rf; ++k)
                    wt[(static_cast<size_t>(fo) * fin + fi) * spec.rf * spec.rf + k] = 1.0;
            }
            h.weights_[l] = std::move(wt);
        }
    }
    h.cfg_ = std::move(cfg);
    return h;
}

LayerGeom Hierarchy::geom(int layer) const {
    if (layer < 0 || layer >= static_cast<int>(geom_.size()))
        throw ConfigError("hierarchy: bad layer index " + std::to_string(layer));
    return geom_[static_cast<size_t>(layer)];
}

double Hierarchy::weight(int layer, int fo, int fi, int ky, int kx) const {
    const LayerSpec& spec = cfg_.layers.at(static_cast<size_t>(layer) - 1);
    int fin = geom_[static_cast<size_t>(layer) - 1].features;
    return weights_[static_cast<size_t>(layer) - 1]
                   [((static_cast<size_t>(fo) * fin + fi) * spec.rf + ky) * spec.rf + kx];
}

std::vector<UnitCoord> Hierarchy::inputs_of(const UnitCoord& u) const {
    if (u.layer < 1 || u.layer > layer_count())
        throw ConfigError("hierarchy: inputs_of on layer " + std::to_string(u.layer));
    const LayerSpec& spec = cfg_.layers[static_cast<size_t>(u.layer) - 1];
    const LayerGeom& below = geom_[static_cast<size_t>(u.layer) - 1];
    std::vector<UnitCoord> out;
    out.reserve(static_cast<size_t>(below.features) * spec.rf * spec.rf);
    for (int f = 0; f < below.features; ++f)
        for (int ky = 0; ky < spec.rf; ++ky)
            for (int kx = 0; kx < spec.rf; ++kx)
                out.push_back(UnitCoord{u.layer - 1, f, u.y * spec.stride + ky,
                                        u.x * spec.stride + kx});
    return out;
}

std::vector<UnitCoord> Hierarchy::ancestry(const UnitCoord& u, int down_to_layer) const {
    std::vector<UnitCoord> frontier{u};
    int layer = u.layer;
    while (layer > down_to_layer) {
        std::vector<UnitCoord> next;
        for (const UnitCoord& p : frontier)
            for (const UnitCoord& q : inputs_of(p)) next.push_back(q);
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        frontier = std::move(next);
        --layer;
    }
    return frontier;
}

std::pair<double, double> Hierarchy::rf_center(const UnitCoord& u) const {
    if (u.layer == 0) return {static_cast<double>(u.x), static_cast<double>(u.y)};
    auto cells = ancestry(u, 0);
    double sx = 0, sy = 0;
    for (const UnitCoord& c : cells) {
        sx += c.x;
        sy += c.y;
    }
    double n = static_cast<double>(cells.size());
    return {sx / n, sy / n};
}

int Hierarchy::feature_index(int layer, const std::string& name) const {
    const std::vector<std::string>& names =
        layer == 0 ? cfg_.channel_names : cfg_.layers.at(static_cast<size_t>(layer) - 1).feature_names;
    for (size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return static_cast<int>(i);
    return -1;
}

GainField GainField::ones(const Hierarchy& h) {
    GainField g;
    for (int l = 0; l <= h.layer_count(); ++l) {
        LayerGeom ge = h.geom(l);
        g.base.emplace_back(ge.features, ge.h, ge.w, 1.0);
        g.suppressed.emplace_back(g.base.back().size(), 0);
    }
    return g;
}

void GainField::clear_suppression() {
    for (auto& layer : suppressed) std::fill(layer.begin(), layer.end(), 0);
}

Relevance Relevance::all_relevant(const Hierarchy& h) {
    Relevance r;
    for (int l = 0; l <= h.layer_count(); ++l)
        r.feature_relevant.emplace_back(static_cast<size_t>(h.geom(l).features), 1);
    return r;
}

Relevance Relevance::features_only(const Hierarchy& h, const std::vector<int>& relevant_channels) {
    Relevance r = all_relevant(h);
    for (int l = 0; l <= h.layer_count(); ++l) {
        std::vector<uint8_t>& flags = r.feature_relevant[static_cast<size_t>(l)];
        int nf = static_cast<int>(flags.size());
        std::fill(flags.begin(), flags.end(), 0);
        for (int c : relevant_channels)
            if (c >= 0 && c < nf) flags[static_cast<size_t>(c)] = 1;
    }
    return r;
}

LayerState compute_responses(const Hierarchy& h, const Stimulus& s, const GainField& g,
                             uint64_t timestamp) {
    const HierarchyConfig& cfg = h.config();
    if (s.channels() != cfg.input_channels || s.height() != cfg.input_h ||
        s.width() != cfg.input_w)
        throw ConfigError("feedforward: stimulus dims do not match hierarchy input");

    LayerState out;
    out.timestamp = timestamp;

    // Gained input plane.
    Grid3 below(cfg.input_channels, cfg.input_h, cfg.input_w);
    for (int c = 0; c < cfg.input_channels; ++c)
        for (int y = 0; y < cfg.input_h; ++y)
            for (int x = 0; x < cfg.input_w; ++x)
                below.at(c, y, x) = s.at(c, y, x) * g.gain(0, c, y, x);

    for (int l = 1; l <= h.layer_count(); ++l) {
        const LayerSpec& spec = cfg.layers[static_cast<size_t>(l) - 1];
        LayerGeom ge = h.geom(l);
        LayerGeom gin = h.geom(l - 1);
        Grid3 prenorm(ge.features, ge.h, ge.w);
        for (int f = 0; f < ge.features; ++f)
            for (int y = 0; y < ge.h; ++y)
                for (int x = 0; x < ge.w; ++x) {
                    double acc = 0.0;
                    for (int fi = 0; fi < gin.features; ++fi)
                        for (int ky = 0; ky < spec.rf; ++ky)
                            for (int kx = 0; kx < spec.rf; ++kx)
                                acc += h.weight(l, f, fi, ky, kx) *
                                       below.at(fi, y * spec.stride + ky, x * spec.stride + kx);
                    prenorm.at(f, y, x) = g.gain(l, f, y, x) * std::max(0.0, acc);
                }

        Grid3 rho(ge.features, ge.h, ge.w);
        int r = cfg.pool_radius;
        for (int f = 0; f < ge.features; ++f)
            for (int y = 0; y < ge.h; ++y)
                for (int x = 0; x < ge.w; ++x) {
                    double pool = 0.0;
                    for (int fp = 0; fp < ge.features; ++fp)
                        for (int dy = -r; dy <= r; ++dy)
                            for (int dx = -r; dx <= r; ++dx) {
                                int ny = y + dy, nx = x + dx;
                                if (!rho.in_bounds(ny, nx)) continue;
                                if (fp == f && dy == 0 && dx == 0) continue;
                                pool += prenorm.at(fp, ny, nx);
                            }
                    rho.at(f, y, x) = prenorm.at(f, y, x) / (1.0 + cfg.beta * pool);
                }
        out.rho.push_back(rho);
        below = std::move(rho);
    }
    return out;
}

GainField apply_priming(const Hierarchy& h, GainField g, const Relevance& rel, double g_low) {
    if (!(g_low >= 0.0 && g_low < 1.0))
        throw ConfigError("apply_priming: g_low must be in [0,1)");
    if (!rel.feature_relevant.empty() &&
        rel.feature_relevant.size() != static_cast<size_t>(h.layer_count()) + 1)
        throw ConfigError("apply_priming: relevance shape does not match hierarchy");
    for (int l = 0; l <= h.layer_count(); ++l) {
        LayerGeom ge = h.geom(l);
        const std::vector<uint8_t>* flags = nullptr;
        if (!rel.feature_relevant.empty()) {
            flags = &rel.feature_relevant[static_cast<size_t>(l)];
            if (static_cast<int>(flags->size()) != ge.features)
                throw ConfigError("apply_priming: relevance shape does not match hierarchy");
        }
        for (int f = 0; f < ge.features; ++f) {
            bool feature_ok = flags == nullptr || (*flags)[static_cast<size_t>(f)] != 0;
            for (int y = 0; y < ge.h; ++y)
                for (int x = 0; x < ge.w; ++x)
                    g.base[static_cast<size_t>(l)].at(f, y, x) = feature_ok ? 1.0 : g_low;
        }
    }
    // Region relevance applies to input cells across all channels.
    for (const Relevance::Rect& r : rel.irrelevant_regions) {
        LayerGeom ge = h.geom(0);
        for (int c = 0; c < ge.features; ++c)
            for (int y = std::max(0, r.y0); y <= std::min(ge.h - 1, r.y1); ++y)
                for (int x = std::max(0, r.x0); x <= std::min(ge.w - 1, r.x1); ++x)
                    g.base[0].at(c, y, x) = g_low;
    }
    return g;
}

GainField reset_gains(const Hierarchy& h, GainField g) {
    for (int l = 0; l <= h.layer_count(); ++l) g.base[static_cast<size_t>(l)].fill(1.0);
    g.clear_suppression();
    return g;
}

}  // namespace attnsim
