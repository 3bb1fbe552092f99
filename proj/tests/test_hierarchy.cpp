#include <doctest.h>

#include "attnsim/failure.hpp"
#include "attnsim/hierarchy.hpp"
#include "attnsim/rng.hpp"

using namespace attnsim;

namespace {

HierarchyConfig two_layer_4x4() {
    HierarchyConfig cfg;
    cfg.input_channels = 1;
    cfg.input_h = 4;
    cfg.input_w = 4;
    cfg.layers = {LayerSpec{1, 2, 2, {}}, LayerSpec{1, 2, 1, {}}};
    cfg.beta = 0.0;
    return cfg;
}

Stimulus random_stimulus(int c, int h, int w, CounterRng& rng) {
    Stimulus s(c, h, w);
    for (double& v : s.values.v) v = rng.uniform();
    return s;
}

}  // namespace

TEST_CASE("shape arithmetic: 2x2 RF, stride 2 over 4x4 gives 2x2") {
    auto h = Hierarchy::build(two_layer_4x4());
    CHECK(h.geom(1).h == 2);
    CHECK(h.geom(1).w == 2);
    CHECK(h.geom(2).h == 1);
    CHECK(h.geom(2).w == 1);
}

TEST_CASE("receptive field larger than the layer below is rejected") {
    auto cfg = two_layer_4x4();
    cfg.layers[1].rf = 3;  // layer 1 is 2x2
    CHECK_THROWS_WITH_AS(Hierarchy::build(cfg), doctest::Contains("layer 2"), ConfigError);
}

TEST_CASE("default config builds five layers with a non-empty top") {
    auto h = Hierarchy::build(default_hierarchy_config());
    CHECK(h.layer_count() == 5);
    CHECK(h.geom(5).h >= 1);
    CHECK(h.geom(5).w >= 1);
}

TEST_CASE("all-zero stimulus and all-zero gains both give zero responses") {
    auto h = Hierarchy::build(two_layer_4x4());
    Stimulus zero(1, 4, 4);
    GainField ones = GainField::ones(h);
    LayerState st = compute_responses(h, zero, ones);
    for (const Grid3& g : st.rho)
        for (double v : g.v) CHECK(v == 0.0);

    CounterRng rng(7);
    Stimulus s = random_stimulus(1, 4, 4, rng);
    GainField dark = ones;
    for (Grid3& g : dark.base) g.fill(0.0);
    st = compute_responses(h, s, dark);
    for (const Grid3& g : st.rho)
        for (double v : g.v) CHECK(v == 0.0);
}

TEST_CASE("a single bright pixel activates exactly its projection cone") {
    auto h = Hierarchy::build(two_layer_4x4());
    Stimulus s(1, 4, 4);
    s.at(0, 0, 0) = 1.0;
    LayerState st = compute_responses(h, s, GainField::ones(h));
    // Layer 1: only the unit whose RF covers (0,0).
    for (int y = 0; y < 2; ++y)
        for (int x = 0; x < 2; ++x)
            CHECK(st.layer(1).at(0, y, x) == (y == 0 && x == 0 ? 1.0 : 0.0));
    CHECK(st.layer(2).at(0, 0, 0) == 1.0);
}

TEST_CASE("responses are deterministic") {
    auto h = Hierarchy::build(two_layer_4x4());
    CounterRng rng(123);
    Stimulus s = random_stimulus(1, 4, 4, rng);
    GainField g = GainField::ones(h);
    LayerState a = compute_responses(h, s, g);
    LayerState b = compute_responses(h, s, g);
    CHECK(a.rho == b.rho);
}

TEST_CASE("with beta=0 raising a single gain never decreases any response") {
    HierarchyConfig cfg = two_layer_4x4();
    auto h = Hierarchy::build(cfg);
    CounterRng rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        Stimulus s = random_stimulus(1, 4, 4, rng);
        GainField g = GainField::ones(h);
        for (Grid3& layer : g.base)
            for (double& v : layer.v) v = rng.uniform();
        LayerState before = compute_responses(h, s, g);
        // Raise one randomly chosen gain.
        int l = static_cast<int>(rng.below(3));
        Grid3& layer = g.base[static_cast<size_t>(l)];
        size_t i = rng.below(layer.size());
        layer.v[i] = std::min(1.0, layer.v[i] + 0.5);
        LayerState after = compute_responses(h, s, g);
        for (size_t li = 0; li < after.rho.size(); ++li)
            for (size_t vi = 0; vi < after.rho[li].v.size(); ++vi)
                CHECK(after.rho[li].v[vi] >= before.rho[li].v[vi] - 1e-12);
    }
}

TEST_CASE("zeroing a unit's pool members never decreases its response (beta>0)") {
    HierarchyConfig cfg = two_layer_4x4();
    cfg.beta = 0.2;
    auto h = Hierarchy::build(cfg);
    CounterRng rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        Stimulus s = random_stimulus(1, 4, 4, rng);
        GainField g = GainField::ones(h);
        LayerState before = compute_responses(h, s, g);
        // Target: layer-1 unit (0,0); pool members are its 3x3 neighbours.
        for (int y = 0; y <= 1; ++y)
            for (int x = 0; x <= 1; ++x)
                if (!(y == 0 && x == 0)) g.base[1].at(0, y, x) = 0.0;
        LayerState after = compute_responses(h, s, g);
        CHECK(after.layer(1).at(0, 0, 0) >= before.layer(1).at(0, 0, 0) - 1e-12);
    }
}

TEST_CASE("priming suppresses irrelevant channels and is idempotent") {
    HierarchyConfig cfg = two_layer_4x4();
    cfg.input_channels = 2;
    auto h = Hierarchy::build(cfg);
    GainField g = GainField::ones(h);

    Relevance all = Relevance::all_relevant(h);
    GainField primed = apply_priming(h, g, all, 0.5);
    CHECK(primed == g);  // everything relevant: unchanged

    Relevance only0 = Relevance::features_only(h, {0});
    GainField p1 = apply_priming(h, g, only0, 0.5);
    CHECK(p1.base[0].at(1, 0, 0) == 0.5);
    CHECK(p1.base[0].at(0, 0, 0) == 1.0);
    GainField p2 = apply_priming(h, p1, only0, 0.5);
    CHECK(p1 == p2);  // idempotent
}

TEST_CASE("reset_gains restores an all-ones field") {
    auto h = Hierarchy::build(two_layer_4x4());
    GainField g = GainField::ones(h);
    GainField primed = apply_priming(h, g, Relevance::features_only(h, {}), 0.5);
    primed.suppress(UnitCoord{1, 0, 0, 0});
    GainField r = reset_gains(h, primed);
    CHECK(r == GainField::ones(h));
    CHECK(reset_gains(h, GainField::ones(h)) == GainField::ones(h));
}

TEST_CASE("stimulus dimension mismatch is an error") {
    auto h = Hierarchy::build(two_layer_4x4());
    Stimulus bad(1, 3, 4);
    CHECK_THROWS_AS(compute_responses(h, bad, GainField::ones(h)), ConfigError);
}
