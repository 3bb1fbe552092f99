#include <doctest.h>

#include "attnsim/rng.hpp"
#include "attnsim/selective_tuning.hpp"
#include "st_oracle.hpp"

using namespace attnsim;

namespace {

// 8×8 input, two layers, 4×4 then 2×2; 21 units total.
Hierarchy small_hierarchy(double beta = 0.1) {
    HierarchyConfig cfg;
    cfg.input_channels = 1;
    cfg.input_h = 8;
    cfg.input_w = 8;
    cfg.layers = {LayerSpec{1, 2, 2, {}}, LayerSpec{1, 2, 2, {}}};
    cfg.beta = beta;
    return Hierarchy::build(cfg);
}

void block(Stimulus& s, int y0, int x0, int size, double v) {
    for (int y = y0; y < y0 + size; ++y)
        for (int x = x0; x < x0 + size; ++x) s.at(0, y, x) = v;
}

}  // namespace

TEST_CASE("check_monotone") {
    MonotoneHistory h;
    h.add(1, 0, 0.5);
    h.add(1, 1, 0.6);
    h.add(1, 2, 0.6);
    CHECK(!check_monotone(h, 0.0));

    MonotoneHistory bad;
    bad.add(2, 0, 0.5);
    bad.add(2, 1, 0.3);
    auto v = check_monotone(bad, 0.0);
    REQUIRE(v.has_value());
    CHECK(v->layer == 2);
    CHECK(v->step == 1);

    MonotoneHistory slack;
    slack.add(1, 0, 0.5);
    slack.add(1, 1, 0.499);
    CHECK(!check_monotone(slack, 0.01));
}

TEST_CASE("select_cfoa picks the max, breaks ties canonically, honours filters") {
    auto h = small_hierarchy();
    LayerState st;
    st.rho.push_back(Grid3(1, 4, 4));
    st.rho.push_back(Grid3(1, 2, 2));
    std::set<UnitCoord> none;

    st.layer(2).at(0, 0, 1) = 0.9;
    st.layer(2).at(0, 1, 0) = 0.3;
    auto u = select_cfoa(h, st, nullptr, none);
    REQUIRE(u.has_value());
    CHECK(*u == UnitCoord{2, 0, 0, 1});

    st.layer(2).at(0, 1, 0) = 0.9;  // tie: canonical (y,x) order wins
    u = select_cfoa(h, st, nullptr, none);
    CHECK(*u == UnitCoord{2, 0, 0, 1});

    // Two-feature top for the filter case.
    HierarchyConfig cfg;
    cfg.input_h = 4;
    cfg.input_w = 4;
    cfg.layers = {LayerSpec{1, 2, 2, {}}, LayerSpec{2, 2, 1, {}}};
    auto h2 = Hierarchy::build(cfg);
    LayerState st2;
    st2.rho.push_back(Grid3(1, 2, 2));
    st2.rho.push_back(Grid3(2, 1, 1));
    st2.layer(2).at(0, 0, 0) = 1.0;  // global max, feature 0
    st2.layer(2).at(1, 0, 0) = 0.4;
    std::vector<int> only1{1};
    u = select_cfoa(h2, st2, &only1, none);
    REQUIRE(u.has_value());
    CHECK(*u == UnitCoord{2, 1, 0, 0});

    // Everything inhibited -> no candidate.
    std::set<UnitCoord> all;
    for (int f = 0; f < 2; ++f) all.insert(UnitCoord{2, f, 0, 0});
    CHECK(!select_cfoa(h2, st2, nullptr, all).has_value());
}

TEST_CASE("single target on an empty background localizes without restarts") {
    auto h = small_hierarchy();
    Stimulus s(1, 8, 8);
    block(s, 4, 4, 2, 1.0);  // lives in top unit (1,1)'s cone
    GainField g = GainField::ones(h);
    LayerState st = compute_responses(h, s, g);
    std::set<UnitCoord> inhibited;
    auto cfoa = select_cfoa(h, st, nullptr, inhibited);
    REQUIRE(cfoa.has_value());
    auto res = localize(h, s, st, g, *cfoa, WtaParams{}, false, inhibited, nullptr, 0);
    REQUIRE(res.ok);
    CHECK(res.restarts == 0);
    CHECK(res.foa.top_unit == *cfoa);
    // The input region is exactly the bright block.
    std::set<std::pair<int, int>> cells(res.foa.input_region.begin(),
                                        res.foa.input_region.end());
    CHECK(cells == std::set<std::pair<int, int>>{{4, 4}, {4, 5}, {5, 4}, {5, 5}});
    CHECK(res.cycles_used == 2);  // one step per layer
}

TEST_CASE("distractor leaves the pass zone; attended response and SINR rise") {
    auto h = small_hierarchy();
    Stimulus s(1, 8, 8);
    block(s, 4, 4, 2, 1.0);  // target
    block(s, 0, 0, 2, 0.6);  // distant distractor
    GainField g = GainField::ones(h);
    LayerState st = compute_responses(h, s, g);
    std::set<UnitCoord> inhibited;
    auto cfoa = select_cfoa(h, st, nullptr, inhibited);
    REQUIRE(cfoa.has_value());
    CHECK(*cfoa == UnitCoord{2, 0, 1, 1});

    double sinr_before = 0.0, rho_before = st.layer(2).at(0, 1, 1);
    auto res = localize(h, s, st, g, *cfoa, WtaParams{}, false, inhibited, nullptr, 0);
    REQUIRE(res.ok);
    CHECK(res.restarts == 0);
    sinr_before = compute_sinr(h, st, res.foa, 2, 1.0);
    double sinr_after = compute_sinr(h, res.state, res.foa, 2, 1.0);
    CHECK(sinr_after >= sinr_before);
    CHECK(res.state.layer(2).at(0, 1, 1) >= rho_before);
    // No distractor unit in any pass zone.
    for (const UnitCoord& u : res.foa.zone(1)) {
        CHECK(u.y >= 2);
        CHECK(u.x >= 2);
    }
}

TEST_CASE("context-driven winner violates monotonicity and restarts onto the target") {
    auto h = small_hierarchy();
    Stimulus s(1, 8, 8);
    // Coalition under top unit (0,0): one moderate block and three weak ones.
    block(s, 0, 0, 2, 0.5);
    block(s, 0, 2, 2, 0.25);
    block(s, 2, 0, 2, 0.25);
    block(s, 2, 2, 2, 0.25);
    // Clean target under top unit (1,1).
    block(s, 4, 4, 2, 0.9);
    GainField g = GainField::ones(h);
    LayerState st = compute_responses(h, s, g);
    std::set<UnitCoord> inhibited;
    auto first = select_cfoa(h, st, nullptr, inhibited);
    REQUIRE(first.has_value());
    CHECK(*first == UnitCoord{2, 0, 0, 0});  // the coalition wins selection

    auto res = localize(h, s, st, g, *first, WtaParams{}, false, inhibited, nullptr, 0);
    REQUIRE(res.ok);
    CHECK(res.restarts == 1);
    CHECK(res.violations.size() == 1);
    CHECK(res.cfoa == UnitCoord{2, 0, 1, 1});  // true target after restart
    CHECK(inhibited.count(UnitCoord{2, 0, 0, 0}) == 1);
}

TEST_CASE("restart budget exhaustion is a localization failure") {
    auto h = small_hierarchy();
    Stimulus s(1, 8, 8);
    block(s, 0, 0, 2, 0.5);
    block(s, 0, 2, 2, 0.25);
    block(s, 2, 0, 2, 0.25);
    block(s, 2, 2, 2, 0.25);
    block(s, 4, 4, 2, 0.9);
    GainField g = GainField::ones(h);
    LayerState st = compute_responses(h, s, g);
    std::set<UnitCoord> inhibited;
    WtaParams p;
    p.max_restarts = 0;  // the coalition violation cannot be recovered
    auto res = localize(h, s, st, g, UnitCoord{2, 0, 0, 0}, p, false, inhibited, nullptr, 0);
    CHECK(!res.ok);
    CHECK(res.failure.kind == FailureKind::Localization);
}

TEST_CASE("compute_sinr basics") {
    auto h = small_hierarchy();
    LayerState st;
    st.rho.push_back(Grid3(1, 4, 4));
    st.rho.push_back(Grid3(1, 2, 2));
    FocusOfAttention foa;
    foa.top_unit = UnitCoord{2, 0, 0, 0};
    foa.pass_zone = {{}, {UnitCoord{2, 0, 0, 0}}};
    st.layer(2).at(0, 0, 0) = 2.0;
    CHECK(compute_sinr(h, st, foa, 2, 1.0) == doctest::Approx(2.0));  // I = 0
    st.layer(2).at(0, 0, 0) = 0.0;
    CHECK(compute_sinr(h, st, foa, 2, 1.0) == 0.0);  // S = 0
}

TEST_CASE("partial descent defines zones down to the midpoint and costs ceil(L/2)") {
    HierarchyConfig cfg;
    cfg.input_h = 16;
    cfg.input_w = 16;
    cfg.layers = {LayerSpec{1, 2, 2, {}}, LayerSpec{1, 2, 2, {}}, LayerSpec{1, 2, 2, {}},
                  LayerSpec{1, 2, 2, {}}};  // L = 4
    auto h = Hierarchy::build(cfg);
    Stimulus s(1, 16, 16);
    block(s, 0, 0, 2, 1.0);
    GainField g = GainField::ones(h);
    LayerState st = compute_responses(h, s, g);
    std::set<UnitCoord> inhibited;
    auto cfoa = select_cfoa(h, st, nullptr, inhibited);
    REQUIRE(cfoa.has_value());
    auto res = localize(h, s, st, g, *cfoa, WtaParams{}, true, inhibited, nullptr, 0);
    REQUIRE(res.ok);
    CHECK(res.cycles_used == 2);  // ceil(4/2)
    // Zones below the reached layer are completed with the RF cone.
    for (int l = 1; l <= 4; ++l) CHECK(!res.foa.zone(l).empty());
    CHECK(!res.foa.input_region.empty());
}

TEST_CASE("pass-zone connectivity: every unit feeds a unit one layer up") {
    auto h = small_hierarchy();
    CounterRng rng(2024);
    for (int trial = 0; trial < 40; ++trial) {
        Stimulus s(1, 8, 8);
        int items = 1 + static_cast<int>(rng.below(3));
        for (int i = 0; i < items; ++i)
            block(s, static_cast<int>(rng.below(4)) * 2, static_cast<int>(rng.below(4)) * 2, 2,
                  0.3 + 0.7 * rng.uniform());
        GainField g = GainField::ones(h);
        LayerState st = compute_responses(h, s, g);
        std::set<UnitCoord> inhibited;
        auto cfoa = select_cfoa(h, st, nullptr, inhibited);
        REQUIRE(cfoa.has_value());
        auto res = localize(h, s, st, g, *cfoa, WtaParams{}, false, inhibited, nullptr, 0);
        if (!res.ok) continue;
        for (int l = 1; l < 2; ++l) {
            for (const UnitCoord& u : res.foa.zone(l)) {
                bool feeds = false;
                for (const UnitCoord& up : res.foa.zone(l + 1))
                    for (const UnitCoord& in : h.inputs_of(up))
                        if (in == u) feeds = true;
                CHECK(feeds);
            }
        }
    }
}

TEST_CASE("library descent equals the exhaustive oracle on small instances") {
    auto h = small_hierarchy();
    CounterRng rng(77);
    int compared = 0;
    for (int trial = 0; trial < 60; ++trial) {
        Stimulus s(1, 8, 8);
        int items = 1 + static_cast<int>(rng.below(4));
        for (int i = 0; i < items; ++i)
            block(s, static_cast<int>(rng.below(4)) * 2, static_cast<int>(rng.below(4)) * 2, 2,
                  0.2 + 0.8 * rng.uniform());
        GainField g = GainField::ones(h);
        LayerState st = compute_responses(h, s, g);
        std::set<UnitCoord> inhibited;
        auto cfoa = select_cfoa(h, st, nullptr, inhibited);
        REQUIRE(cfoa.has_value());
        auto lib = localize(h, s, st, g, *cfoa, WtaParams{}, false, inhibited, nullptr, 0);
        auto naive = st_oracle::naive_localize(h, s, g, *cfoa, WtaParams{});
        CHECK(lib.ok == naive.ok);
        if (!lib.ok || !naive.ok) continue;
        ++compared;
        CHECK(lib.restarts == naive.restarts);
        for (int l = 1; l <= 2; ++l) {
            std::set<st_oracle::Coord> got;
            for (const UnitCoord& u : lib.foa.zone(l))
                got.insert(st_oracle::Coord{u.layer, u.feature, u.y, u.x});
            CHECK(got == naive.zones[l]);
        }
        std::set<std::pair<int, int>> cells(lib.foa.input_region.begin(),
                                            lib.foa.input_region.end());
        CHECK(cells == naive.input_region);
    }
    CHECK(compared >= 30);
}
