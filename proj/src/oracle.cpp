#include "attnsim/oracle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace attnsim {

BigCount powerset_count(unsigned n) {
    return BigCount::pow2(n);
}

BigCount binomial_product(unsigned n, unsigned k) {
    if (k > n) throw std::invalid_argument("binomial: k > n");
    BigCount r(1);
    // Multiply then divide; every intermediate division is exact because the
    // running value is a product of i consecutive integers.
    for (unsigned i = 1; i <= k; ++i) {
        r.mul_small(n - k + i);
        r.divexact_small(i);
    }
    return r;
}

BigCount binomial_pascal(unsigned n, unsigned k) {
    if (k > n) throw std::invalid_argument("binomial: k > n");
    std::vector<BigCount> row(k + 1, BigCount(0));
    row[0] = BigCount(1);
    for (unsigned i = 1; i <= n; ++i)
        for (unsigned j = std::min(i, k); j >= 1; --j) row[j] += row[j - 1];
    return row[k];
}

BigCount mechanism_space(unsigned mechanisms, unsigned durations, unsigned params) {
    if (mechanisms < 1 || durations < 1 || params < 1)
        throw std::invalid_argument("mechanism_space: arguments must be >= 1");
    return BigCount::pow2(mechanisms * durations * params);
}

SynapseBudget synapse_budget(uint64_t neurons, uint64_t synapses_per) {
    if (neurons == 0 || synapses_per == 0)
        throw std::invalid_argument("synapse_budget: arguments must be positive");
    SynapseBudget b;
    b.total = BigCount(neurons) * BigCount(synapses_per);
    unsigned m = 0;
    BigCount p(1);
    while (true) {
        BigCount next = p;
        next.mul_small(2);
        if (b.total < next) break;
        p = next;
        ++m;
    }
    b.max_exponent = m;
    return b;
}

SkyGeometry sky_geometry(const SkyModel& m) {
    if (m.stars < 1 || m.radius <= 0.0 || m.patch_deg <= 0.0 || m.patch_deg >= 180.0)
        throw std::invalid_argument("sky_geometry: invalid model");
    SkyGeometry g;
    double r2 = m.radius * m.radius;
    double theta = m.patch_deg * std::numbers::pi / 180.0;
    g.hemisphere_area = 2.0 * std::numbers::pi * r2;
    g.patch_area = r2 * theta * std::sin(theta);
    // Spherical rectangle of extent θ×θ centered on the equator.
    g.patch_area_spherical = r2 * theta * 2.0 * std::sin(theta / 2.0);
    g.patch_count = g.hemisphere_area / g.patch_area;
    g.stars_per_patch = static_cast<int>(std::llround(m.stars / g.patch_count));
    return g;
}

GuidedSearch guided_search_count(const SkyModel& m) {
    SkyGeometry g = sky_geometry(m);
    GuidedSearch s;
    s.discs = static_cast<uint64_t>(g.hemisphere_area);  // one disc per unit area
    s.per_disc = binomial_product(static_cast<unsigned>(g.stars_per_patch), 6);
    s.guided_total = BigCount(s.discs) * s.per_disc;
    BigCount unguided = binomial_product(m.stars, 6);
    s.orders_gap_exact = unguided.log10_approx() - s.guided_total.log10_approx();
    return s;
}

uint64_t visual_match_examined(int n, uint64_t target_mask, bool guided) {
    if (n < 1 || n > 24) throw std::invalid_argument("visual_match: n must be in [1,24]");
    uint64_t full = (n == 64) ? ~0ULL : ((1ULL << n) - 1);
    if ((target_mask & ~full) != 0)
        throw std::invalid_argument("visual_match: target outside display");
    uint64_t examined = 0;
    if (!guided) {
        for (uint64_t cand = 0; cand <= full; ++cand) {
            ++examined;
            if (cand == target_mask) return examined;
        }
        return examined;  // unreachable: target is always within the range
    }
    // Task knowledge orders the target's features first; candidates are the
    // growing prefixes of that order, then (if ever needed) the leftovers.
    std::vector<int> order;
    for (int i = 0; i < n; ++i)
        if (target_mask & (1ULL << i)) order.push_back(i);
    for (int i = 0; i < n; ++i)
        if (!(target_mask & (1ULL << i))) order.push_back(i);
    uint64_t cand = 0;
    if (target_mask == 0) return 1;  // the empty subset is checked first
    for (int i = 0; i < n; ++i) {
        cand |= 1ULL << order[static_cast<size_t>(i)];
        ++examined;
        if (cand == target_mask) return examined;
    }
    return examined;
}

uint64_t visual_match_demo(int n, bool guided) {
    if (n < 1 || n > 24) throw std::invalid_argument("visual_match: n must be in [1,24]");
    uint64_t worst = (1ULL << n) - 1;  // last subset in canonical order
    return visual_match_examined(n, worst, guided);
}

namespace {

std::string fmt(double v, int prec = 2) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", prec, v);
    return buf;
}

}  // namespace

std::vector<OracleClaim> oracle_claims() {
    std::vector<OracleClaim> rows;
    SkyModel sky;
    SkyGeometry g = sky_geometry(sky);
    GuidedSearch gs = guided_search_count(sky);

    rows.push_back({"powerset-1000", "groupings of 1000 stars, 2^1000", "1.07e301",
                    powerset_count(1000).to_sci3(), "match", ""});
    rows.push_back({"powerset-19", "subsets of 19 attentional mechanisms, 2^19", "524288",
                    powerset_count(19).to_string(), "match", ""});
    rows.push_back({"mechanism-space", "2^(19*5*2) parameterized mechanism sets", "1.6e57",
                    mechanism_space(19, 5, 2).to_sci3(), "match",
                    "reported figure rounds 1.57e57 up"});
    SynapseBudget sb = synapse_budget(86000000000ULL, 10000ULL);
    rows.push_back({"synapse-budget", "86e9 neurons x 1e4 synapses", "8.6e14",
                    sb.total.to_sci3(), "match", ""});
    rows.push_back({"synapse-exponent", "largest m with 2^m <= synapse budget", "Adp of at most 50",
                    std::to_string(sb.max_exponent), "match",
                    "2^49 <= 8.6e14 < 2^50, so 49 is the largest attainable exponent"});
    rows.push_back({"hemisphere-area", "half-sphere surface, r=100", "62831", fmt(g.hemisphere_area),
                    "match", "2*pi*r^2 = 62831.85"});
    rows.push_back({"patch-area", "20x20 degree patch area", "1193.9", fmt(g.patch_area, 1),
                    "match", "r^2*theta*sin(theta); spherical rectangle gives " +
                                 fmt(g.patch_area_spherical, 1)});
    rows.push_back({"patch-count", "patches per hemisphere", "52.6", fmt(g.patch_count, 1),
                    "match", ""});
    rows.push_back({"stars-per-patch", "stars per patch for N=1000", "19",
                    std::to_string(g.stars_per_patch), "match", ""});
    BigCount c19 = binomial_product(19, 6);
    rows.push_back({"binomial-19-6", "C(19,6), product formula vs Pascal", "27132",
                    c19.to_string(),
                    c19 == binomial_pascal(19, 6) ? "match" : "flagged",
                    "two independent methods agree"});
    BigCount c1000 = binomial_product(1000, 6);
    rows.push_back({"binomial-1000-6", "C(1000,6)", "5.0e134", c1000.to_sci3(), "flagged",
                    "exact value is " + c1000.to_string() +
                        "; the reported 5.0e134 does not follow from N!/(6!(N-6)!)"});
    rows.push_back({"guided-count", "62831 discs x C(19,6)", "1.95e7", gs.guided_total.to_sci3(),
                    "flagged",
                    "exact value is " + gs.guided_total.to_string() +
                        "; the reported 1.95e7 does not equal 62831*27132"});
    double reported_gap = std::log10(5.0e134) - std::log10(1.95e7);
    rows.push_back({"orders-improvement", "orders of magnitude, reported pair 5.0e134 / 1.95e7",
                    "127", std::to_string(static_cast<int>(reported_gap)), "match",
                    "gap from this oracle's exact values: " + fmt(gs.orders_gap_exact, 1) +
                        " orders"});
    rows.push_back({"visual-match-20", "unguided subset search, n=20 worst case", "2^20",
                    std::to_string(visual_match_demo(20, false)), "match", ""});
    rows.push_back({"visual-match-guided", "guided subset search, n=20", "O(n)",
                    std::to_string(visual_match_demo(20, true)), "match",
                    "task order reduces the exponential scan to a linear one"});
    return rows;
}

}  // namespace attnsim
