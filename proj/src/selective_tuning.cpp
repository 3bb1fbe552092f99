#include "attnsim/selective_tuning.hpp"

#include <algorithm>
#include <cmath>

namespace attnsim {

std::optional<MonotoneViolation> check_monotone(const MonotoneHistory& h, double epsilon) {
    for (const auto& [layer, seq] : h.samples) {
        for (size_t i = 1; i < seq.size(); ++i) {
            if (seq[i].second < seq[i - 1].second - epsilon)
                return MonotoneViolation{layer, static_cast<int>(i)};
        }
    }
    return std::nullopt;
}

std::optional<UnitCoord> select_cfoa(const Hierarchy& h, const LayerState& state,
                                     const std::vector<int>* feature_filter,
                                     const std::set<UnitCoord>& inhibited) {
    int top = h.layer_count();
    const Grid3& rho = state.layer(top);
    std::optional<UnitCoord> best;
    double best_rho = -1.0;
    for (int f = 0; f < rho.ch; ++f) {
        if (feature_filter &&
            std::find(feature_filter->begin(), feature_filter->end(), f) == feature_filter->end())
            continue;
        for (int y = 0; y < rho.h; ++y)
            for (int x = 0; x < rho.w; ++x) {
                UnitCoord u{top, f, y, x};
                if (inhibited.count(u)) continue;
                double r = rho.at(f, y, x);
                // Strict > keeps the canonical (feature, y, x) order on ties.
                if (r > best_rho) {
                    best_rho = r;
                    best = u;
                }
            }
    }
    return best;
}

namespace {

double unit_rho(const Hierarchy& h, const Stimulus& retinal, const GainField& gains,
                const LayerState& state, const UnitCoord& u) {
    if (u.layer == 0) return retinal.at(u.feature, u.y, u.x) * gains.gain(0, u.feature, u.y, u.x);
    return state.layer(u.layer).at(u.feature, u.y, u.x);
}

void suppress_surround(const Hierarchy& h, GainField& gains, const std::set<UnitCoord>& winners,
                       int layer, int radius) {
    LayerGeom ge = h.geom(layer);
    for (const UnitCoord& w : winners) {
        for (int f = 0; f < ge.features; ++f)
            for (int dy = -radius; dy <= radius; ++dy)
                for (int dx = -radius; dx <= radius; ++dx) {
                    int ny = w.y + dy, nx = w.x + dx;
                    if (ny < 0 || ny >= ge.h || nx < 0 || nx >= ge.w) continue;
                    UnitCoord nb{layer, f, ny, nx};
                    if (winners.count(nb)) continue;
                    gains.suppress(nb);
                }
    }
}

struct AttemptOutcome {
    bool ok = false;
    MonotoneViolation violation;
    FocusOfAttention foa;
    MonotoneHistory history;
    LayerState state;
    GainField gains;
    uint64_t steps = 0;
};

AttemptOutcome run_descent(const Hierarchy& h, const Stimulus& retinal, const LayerState& state0,
                           const GainField& gains0, UnitCoord cfoa, const WtaParams& params,
                           int steps, uint64_t t0) {
    AttemptOutcome out;
    out.gains = gains0;
    out.state = state0;
    int L = h.layer_count();
    int radius = h.config().pool_radius;

    std::vector<std::set<UnitCoord>> zone(static_cast<size_t>(L) + 1);  // index = layer
    zone[static_cast<size_t>(L)] = {cfoa};
    out.history.add(L, t0, unit_rho(h, retinal, gains0, state0, cfoa));

    int lambda = L;
    for (int step = 1; step <= steps; ++step, --lambda) {
        const std::set<UnitCoord>& current = zone[static_cast<size_t>(lambda)];
        if (lambda == L)  // attended unit's own local context goes first
            suppress_surround(h, out.gains, current, L, radius);

        std::set<UnitCoord> winners;
        std::set<UnitCoord> all_inputs;
        for (const UnitCoord& p : current) {
            auto ins = h.inputs_of(p);
            double m = 0.0;
            for (const UnitCoord& v : ins)
                m = std::max(m, unit_rho(h, retinal, out.gains, out.state, v));
            for (const UnitCoord& v : ins) {
                all_inputs.insert(v);
                if (unit_rho(h, retinal, out.gains, out.state, v) >= params.theta * m)
                    winners.insert(v);
            }
        }
        for (const UnitCoord& v : all_inputs)
            if (!winners.count(v)) out.gains.suppress(v);
        suppress_surround(h, out.gains, winners, lambda - 1, radius);

        out.state = compute_responses(h, retinal, out.gains, t0 + static_cast<uint64_t>(step));
        zone[static_cast<size_t>(lambda) - 1] = winners;

        for (int l = std::max(1, lambda - 1); l <= L; ++l) {
            double sum = 0.0;
            for (const UnitCoord& u : zone[static_cast<size_t>(l)])
                sum += unit_rho(h, retinal, out.gains, out.state, u);
            out.history.add(l, t0 + static_cast<uint64_t>(step), sum);
        }
        out.steps = static_cast<uint64_t>(step);

        if (auto v = check_monotone(out.history, params.epsilon)) {
            out.violation = *v;
            return out;  // ok stays false
        }
    }

    // Assemble the focus. Layers below the reached one (partial descent) are
    // completed with the unpruned receptive-field cone.
    int reached = lambda;  // lowest layer with a computed zone
    FocusOfAttention foa;
    foa.top_unit = cfoa;
    foa.pass_zone.assign(static_cast<size_t>(L), {});
    for (int l = L; l >= std::max(1, reached); --l)
        foa.pass_zone[static_cast<size_t>(l) - 1] =
            std::vector<UnitCoord>(zone[static_cast<size_t>(l)].begin(),
                                   zone[static_cast<size_t>(l)].end());
    std::set<UnitCoord> frontier = zone[static_cast<size_t>(std::max(0, reached))];
    for (int l = std::max(0, reached) - 1; l >= 0; --l) {
        std::set<UnitCoord> next;
        for (const UnitCoord& p : frontier)
            for (const UnitCoord& q : h.inputs_of(p)) next.insert(q);
        if (l >= 1)
            foa.pass_zone[static_cast<size_t>(l) - 1] =
                std::vector<UnitCoord>(next.begin(), next.end());
        frontier = std::move(next);
    }
    std::set<std::pair<int, int>> cells;
    for (const UnitCoord& c : frontier) cells.insert({c.y, c.x});
    foa.input_region.assign(cells.begin(), cells.end());
    out.foa = std::move(foa);
    out.ok = true;
    return out;
}

}  // namespace

LocalizeResult localize(const Hierarchy& h, const Stimulus& retinal, const LayerState& state,
                        const GainField& gains, UnitCoord cfoa, const WtaParams& params,
                        bool partial, std::set<UnitCoord>& inhibited,
                        const std::vector<int>* feature_filter, uint64_t t0) {
    LocalizeResult res;
    res.entry_gains = gains;
    int L = h.layer_count();
    int steps = partial ? (L + 1) / 2 : L;

    UnitCoord candidate = cfoa;
    for (int attempt = 0; attempt <= params.max_restarts; ++attempt) {
        AttemptOutcome a =
            run_descent(h, retinal, state, gains, candidate, params, steps, t0 + res.cycles_used);
        res.cycles_used += a.steps;
        if (a.ok) {
            res.ok = true;
            res.cfoa = candidate;
            res.foa = std::move(a.foa);
            res.history = std::move(a.history);
            res.state = std::move(a.state);
            res.gains = std::move(a.gains);
            return res;
        }
        res.violations.push_back(a.violation);
        inhibited.insert(candidate);  // inhibited for the remainder of the trial
        ++res.restarts;
        if (attempt == params.max_restarts) break;
        auto next = select_cfoa(h, state, feature_filter, inhibited);
        res.cycles_used += 1;  // re-selection
        if (!next) {
            res.failure = {FailureKind::Localization, "no remaining candidates after restart"};
            res.cfoa = candidate;
            res.state = state;
            res.gains = gains;
            return res;
        }
        candidate = *next;
    }
    res.failure = {FailureKind::Localization,
                   "monotonicity violated on every candidate within the restart budget"};
    res.cfoa = candidate;
    res.state = state;
    res.gains = gains;
    return res;
}

double compute_sinr(const Hierarchy& h, const LayerState& state, const FocusOfAttention& foa,
                    int layer, double noise) {
    const Grid3& rho = state.layer(layer);
    std::set<UnitCoord> zone(foa.zone(layer).begin(), foa.zone(layer).end());
    double s = 0.0, i = 0.0;
    for (int f = 0; f < rho.ch; ++f)
        for (int y = 0; y < rho.h; ++y)
            for (int x = 0; x < rho.w; ++x) {
                double r = rho.at(f, y, x);
                if (zone.count(UnitCoord{layer, f, y, x}))
                    s += r;
                else
                    i += r;
            }
    return s / (i + noise);
}

}  // namespace attnsim
