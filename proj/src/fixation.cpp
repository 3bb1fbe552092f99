#include "attnsim/fixation.hpp"

#include <algorithm>
#include <cmath>

#include "attnsim/failure.hpp"

namespace attnsim {

namespace {
int round_half_away(double v) {
    return static_cast<int>(v >= 0.0 ? std::floor(v + 0.5) : std::ceil(v - 0.5));
}
}  // namespace

SaccadeCommand plan_saccade(const GazeState& gaze, double tx, double ty, int width, int height,
                            uint64_t t_sacc) {
    if (tx < 0.0 || ty < 0.0 || tx > width - 1 || ty > height - 1)
        throw ConfigError("plan_saccade: target out of bounds");
    int lx = std::clamp(round_half_away(tx), 0, width - 1);
    int ly = std::clamp(round_half_away(ty), 0, height - 1);
    SaccadeCommand cmd;
    cmd.dx = lx - gaze.x;
    cmd.dy = ly - gaze.y;
    cmd.duration = (cmd.dx == 0 && cmd.dy == 0) ? 0 : t_sacc;
    return cmd;
}

GazeState execute_saccade(const GazeState& gaze, const SaccadeCommand& cmd) {
    return GazeState{gaze.x + cmd.dx, gaze.y + cmd.dy};
}

std::optional<std::pair<int, int>> select_next_fixation(const Grid3& conspicuity,
                                                        const IorMap& ior) {
    double best = 0.0;
    std::optional<std::pair<int, int>> cell;
    for (int y = 0; y < conspicuity.h; ++y)
        for (int x = 0; x < conspicuity.w; ++x) {
            double c = conspicuity.at(0, y, x);
            if (c < 0.0) throw ConfigError("select_next_fixation: negative conspicuity");
            double v = c * (1.0 - ior.at(y, x));
            if (v > best) {
                best = v;
                cell = {y, x};
            }
        }
    return cell;  // nullopt = nothing to fixate
}

Grid3 conspicuity_map(const Stimulus& s) {
    Grid3 m(1, s.height(), s.width(), 0.0);
    for (int c = 0; c < s.channels(); ++c)
        for (int y = 0; y < s.height(); ++y)
            for (int x = 0; x < s.width(); ++x)
                m.at(0, y, x) = std::max(m.at(0, y, x), s.at(c, y, x));
    return m;
}

Stimulus foveate(const Stimulus& s, const GazeState& gaze, const FixationParams& p) {
    if (gaze.x < 0 || gaze.y < 0 || gaze.x >= s.width() || gaze.y >= s.height())
        throw ConfigError("foveate: gaze out of bounds");
    Stimulus out(s.channels(), s.height(), s.width());
    for (int c = 0; c < s.channels(); ++c)
        for (int y = 0; y < s.height(); ++y)
            for (int x = 0; x < s.width(); ++x) {
                int ecc = std::max(std::abs(y - gaze.y), std::abs(x - gaze.x));
                if (ecc <= p.r_fov) {
                    out.at(c, y, x) = s.at(c, y, x);
                    continue;
                }
                int block = ecc <= 2 * p.r_fov ? p.near_block : p.far_block;
                int by = (y / block) * block;
                int bx = (x / block) * block;
                double sum = 0.0;
                int n = 0;
                for (int yy = by; yy < std::min(by + block, s.height()); ++yy)
                    for (int xx = bx; xx < std::min(bx + block, s.width()); ++xx) {
                        sum += s.at(c, yy, xx);
                        ++n;
                    }
                out.at(c, y, x) = sum / n;
            }
    return out;
}

}  // namespace attnsim
