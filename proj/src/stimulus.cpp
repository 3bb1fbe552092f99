#include "attnsim/stimulus.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "attnsim/failure.hpp"

namespace attnsim {

void Stimulus::validate_dims() const {
    if (values.ch < 1 || values.h < 1 || values.w < 1)
        throw ConfigError("stimulus: dimensions must be >= 1");
}

void Stimulus::validate_range() const {
    for (double x : values.v)
        if (!(x >= 0.0 && x <= 1.0))
            throw ConfigError("stimulus: value outside [0,1]");
}

Stimulus parse_stimulus_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(std::string("stimulus: ") + e.what());
    }
    int w = j.at("width").get<int>();
    int h = j.at("height").get<int>();
    int c = j.at("channels").get<int>();
    if (w < 1 || h < 1 || c < 1) throw ConfigError("stimulus: dimensions must be >= 1");
    const auto& vals = j.at("values");
    if (!vals.is_array() || static_cast<int>(vals.size()) != c * h * w)
        throw ConfigError("stimulus: values length must equal channels*height*width");
    Stimulus s(c, h, w);
    size_t i = 0;
    for (const auto& x : vals) s.values.v[i++] = x.get<double>();
    s.validate_range();
    return s;
}

std::string stimulus_to_json(const Stimulus& s) {
    nlohmann::json j;
    j["width"] = s.width();
    j["height"] = s.height();
    j["channels"] = s.channels();
    j["values"] = s.values.v;
    return j.dump(2);
}

Stimulus load_stimulus(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open stimulus file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_stimulus_json(ss.str());
}

void save_stimulus(const Stimulus& s, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write stimulus file: " + path);
    out << stimulus_to_json(s) << "\n";
}

}  // namespace attnsim
