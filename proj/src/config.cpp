#include "uowsn/config.hpp"

#include <fstream>
#include <initializer_list>
#include <sstream>

#include "json.hpp"

namespace uowsn::config {

using nlohmann::json;

namespace {

void reject_unknown(const json& object, std::string_view where,
                    std::initializer_list<std::string_view> allowed) {
    if (!object.is_object()) throw ConfigError(std::string(where) + " must be an object");
    for (const auto& [key, _] : object.items()) {
        bool known = false;
        for (auto a : allowed) known = known || key == a;
        if (!known) throw ConfigError("unknown key '" + key + "' in " + std::string(where));
    }
}

double number(const json& value, std::string_view key) {
    if (!value.is_number()) throw ConfigError(std::string(key) + " must be a number");
    return value.get<double>();
}

template <typename Int>
Int integer(const json& value, std::string_view key) {
    const bool negative = value.is_number_integer() && !value.is_number_unsigned() &&
                          value.get<std::int64_t>() < 0;
    if (!value.is_number_integer() || negative)
        throw ConfigError(std::string(key) + " must be a non-negative integer");
    return value.get<Int>();
}

bool boolean(const json& value, std::string_view key) {
    if (!value.is_boolean()) throw ConfigError(std::string(key) + " must be true or false");
    return value.get<bool>();
}

std::string text(const json& value, std::string_view key) {
    if (!value.is_string()) throw ConfigError(std::string(key) + " must be a string");
    return value.get<std::string>();
}

topology::Point point(const json& value, std::string_view key) {
    if (!value.is_array() || value.size() != 2)
        throw ConfigError(std::string(key) + " must be a two-element [x, y] array");
    return {number(value[0], key), number(value[1], key)};
}

void set_number(const json& object, const char* key, double& out) {
    if (object.contains(key)) out = number(object[key], key);
}

void apply_channel(const json& j, harness::SimulationConfig& cfg) {
    reject_unknown(j, "channel",
                   {"wavelength", "extinction", "absorption", "scattering", "tx_power",
                    "tx_efficiency", "rx_efficiency", "aperture_area", "trajectory_angle",
                    "divergence_angle"});
    auto& c = cfg.channel;
    set_number(j, "wavelength", c.wavelength);
    if (j.contains("extinction")) cfg.extinction_override = number(j["extinction"], "extinction");
    if (j.contains("absorption")) c.absorption = number(j["absorption"], "absorption");
    if (j.contains("scattering")) c.scattering = number(j["scattering"], "scattering");
    set_number(j, "tx_power", c.tx_power);
    set_number(j, "tx_efficiency", c.tx_efficiency);
    set_number(j, "rx_efficiency", c.rx_efficiency);
    set_number(j, "aperture_area", c.aperture_area);
    set_number(j, "trajectory_angle", c.trajectory_angle);
    set_number(j, "divergence_angle", c.divergence_angle);
}

void apply_noise(const json& j, channel::ReceiverNoise& n) {
    reject_unknown(j, "noise",
                   {"dark_count_rate", "background_rate", "detector_efficiency", "pulse_duration",
                    "data_rate"});
    set_number(j, "dark_count_rate", n.dark_count_rate);
    set_number(j, "background_rate", n.background_rate);
    set_number(j, "detector_efficiency", n.detector_efficiency);
    set_number(j, "pulse_duration", n.pulse_duration);
    set_number(j, "data_rate", n.data_rate);
}

harness::SimulationConfig apply_document(const json& root, harness::SimulationConfig cfg) {
    reject_unknown(root, "config",
                   {"area", "node_count", "max_range", "water", "channel", "noise", "constants",
                    "source_pos", "target_pos", "protocols", "weight_mode", "delay",
                    "realizations", "master_seed", "srp_fallback", "record_timing"});
    if (root.contains("area")) {
        const auto& a = root["area"];
        reject_unknown(a, "area", {"width", "height"});
        set_number(a, "width", cfg.area_width);
        set_number(a, "height", cfg.area_height);
    }
    if (root.contains("node_count")) {
        const auto& n = root["node_count"];
        cfg.node_counts.clear();
        if (n.is_array()) {
            for (const auto& v : n) cfg.node_counts.push_back(integer<std::size_t>(v, "node_count"));
        } else {
            cfg.node_counts.push_back(integer<std::size_t>(n, "node_count"));
        }
    }
    set_number(root, "max_range", cfg.max_range);
    if (root.contains("water")) {
        const auto name = text(root["water"], "water");
        const auto water = channel::parse_water(name);
        if (!water) throw ConfigError("unknown water type '" + name + "'");
        cfg.water = *water;
    }
    if (root.contains("channel")) apply_channel(root["channel"], cfg);
    if (root.contains("noise")) apply_noise(root["noise"], cfg.noise);
    if (root.contains("constants")) {
        const auto& c = root["constants"];
        reject_unknown(c, "constants", {"planck", "light_speed_water"});
        set_number(c, "planck", cfg.constants.planck);
        set_number(c, "light_speed_water", cfg.constants.light_speed_water);
    }
    if (root.contains("source_pos")) cfg.source_pos = point(root["source_pos"], "source_pos");
    if (root.contains("target_pos")) cfg.target_pos = point(root["target_pos"], "target_pos");
    if (root.contains("protocols")) {
        const auto& list = root["protocols"];
        if (!list.is_array()) throw ConfigError("protocols must be a list");
        cfg.protocols.clear();
        for (const auto& v : list) {
            const auto name = text(v, "protocols");
            const auto p = routing::parse_protocol(name);
            if (!p) throw ConfigError("unknown protocol '" + name + "'");
            cfg.protocols.push_back(*p);
        }
    }
    if (root.contains("weight_mode")) {
        const auto name = text(root["weight_mode"], "weight_mode");
        const auto mode = routing::parse_weight_mode(name);
        if (!mode) throw ConfigError("unknown weight_mode '" + name + "'");
        cfg.weight_mode = *mode;
    }
    if (root.contains("delay")) {
        const auto& d = root["delay"];
        // Light speed and data rate are shared with constants and noise.
        reject_unknown(d, "delay", {"packet_bits", "per_hop_processing"});
        set_number(d, "packet_bits", cfg.packet_bits);
        set_number(d, "per_hop_processing", cfg.per_hop_processing);
    }
    if (root.contains("realizations"))
        cfg.realizations = integer<std::size_t>(root["realizations"], "realizations");
    if (root.contains("master_seed"))
        cfg.master_seed = integer<std::uint64_t>(root["master_seed"], "master_seed");
    if (root.contains("srp_fallback")) cfg.srp_fallback = boolean(root["srp_fallback"], "srp_fallback");
    if (root.contains("record_timing"))
        cfg.record_timing = boolean(root["record_timing"], "record_timing");
    return cfg;
}

}  // namespace

harness::SimulationConfig parse_config(std::string_view json_text, harness::SimulationConfig base) {
    json root;
    try {
        root = json::parse(json_text.begin(), json_text.end(), nullptr, true, true);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("malformed config: ") + e.what());
    }
    try {
        return apply_document(root, std::move(base));
    } catch (const json::exception& e) {
        throw ConfigError(std::string("invalid config: ") + e.what());
    }
}

harness::SimulationConfig load_config(const std::filesystem::path& path,
                                      harness::SimulationConfig base) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str(), std::move(base));
}

}  // namespace uowsn::config
